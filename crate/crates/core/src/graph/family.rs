use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count any generator or product will materialize.
pub const MAX_PRODUCT_ORDER: usize = 20_000;

/// Parameter record selecting one graph family.
///
/// The text form (also used by the CLI) is
/// `family := atom | "kron(" family "," family ")"`,
/// `atom := "C" int | "K" int | "J(" int "," int ")" | "H(" int "," int ")"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Complete(usize),
    Johnson { m: usize, r: usize },
    Hamming { d: usize, q: usize },
    Kron(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn kron(left: FamilySpec, right: FamilySpec) -> FamilySpec {
        FamilySpec::Kron(Box::new(left), Box::new(right))
    }

    /// Checks the parameter domain of this spec and all its children.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::ParameterDomain(msg));
        match *self {
            FamilySpec::Cycle(n) if n < 3 => bad(format!("cycle C{n} needs n >= 3")),
            FamilySpec::Complete(n) if n < 1 => bad("complete graph K0 is empty".into()),
            FamilySpec::Johnson { m, r } if r < 1 || m < 2 * r => {
                bad(format!("Johnson J({m},{r}) needs m >= 2r >= 2"))
            }
            FamilySpec::Johnson { m, .. } if m > 64 => {
                bad(format!("Johnson J({m},..) needs m <= 64"))
            }
            FamilySpec::Hamming { d, q } if d < 1 || q < 2 => {
                bad(format!("Hamming H({d},{q}) needs d >= 1 and q >= 2"))
            }
            FamilySpec::Kron(ref l, ref r) => {
                l.validate()?;
                r.validate()
            }
            _ => Ok(()),
        }
    }

    /// Vertex count, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        match *self {
            FamilySpec::Cycle(n) | FamilySpec::Complete(n) => Some(n),
            FamilySpec::Johnson { m, r } => binomial(m, r),
            FamilySpec::Hamming { d, q } => q.checked_pow(d.try_into().ok()?),
            FamilySpec::Kron(ref l, ref r) => l.order()?.checked_mul(r.order()?),
        }
    }

    pub fn is_kron(&self) -> bool {
        matches!(self, FamilySpec::Kron(..))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> Option<usize> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > usize::MAX as u128 {
            return None;
        }
    }
    Some(acc as usize)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::Johnson { m, r } => write!(f, "J({m},{r})"),
            FamilySpec::Hamming { d, q } => write!(f, "H({d},{q})"),
            FamilySpec::Kron(l, r) => write!(f, "kron({l},{r})"),
        }
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses and validates. Whitespace between tokens is ignored.
    fn from_str(text: &str) -> Result<FamilySpec> {
        let mut p = Parser {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .collect(),
            pos: 0,
            len: text.len(),
        };
        let spec = p.family()?;
        if let Some(&(at, c)) = p.chars.get(p.pos) {
            return Err(Error::Syntax {
                pos: at,
                msg: format!("unexpected `{c}` after complete family"),
            });
        }
        spec.validate()?;
        Ok(spec)
    }
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn at(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.at(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.err(format!("expected `{want}`, found `{c}`")),
            None => self.err(format!("expected `{want}`, found end of input")),
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        let mut value: usize = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = match value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as usize))
            {
                Some(v) => v,
                None => return self.err("integer overflow"),
            };
            self.pos += 1;
        }
        if self.pos == start {
            return self.err("expected an integer");
        }
        Ok(value)
    }

    fn pair(&mut self) -> Result<(usize, usize)> {
        self.expect('(')?;
        let a = self.int()?;
        self.expect(',')?;
        let b = self.int()?;
        self.expect(')')?;
        Ok((a, b))
    }

    fn family(&mut self) -> Result<FamilySpec> {
        match self.peek() {
            Some('C') => {
                self.pos += 1;
                Ok(FamilySpec::Cycle(self.int()?))
            }
            Some('K') => {
                self.pos += 1;
                Ok(FamilySpec::Complete(self.int()?))
            }
            Some('J') => {
                self.pos += 1;
                let (m, r) = self.pair()?;
                Ok(FamilySpec::Johnson { m, r })
            }
            Some('H') => {
                self.pos += 1;
                let (d, q) = self.pair()?;
                Ok(FamilySpec::Hamming { d, q })
            }
            Some('k') => {
                for want in "kron".chars() {
                    self.expect(want)?;
                }
                self.expect('(')?;
                let l = self.family()?;
                self.expect(',')?;
                let r = self.family()?;
                self.expect(')')?;
                Ok(FamilySpec::kron(l, r))
            }
            Some(c) => self.err(format!("unknown family `{c}`")),
            None => self.err("empty family"),
        }
    }
}

/// Materializes a family with its canonical vertex ordering.
///
/// * Cycle: `i ~ i±1 mod n`.
/// * Complete: all pairs.
/// * Johnson: r-subsets of `{1..m}` in lexicographic order, adjacent iff
///   they share `r − 1` elements; labelled like `{1,3}`.
/// * Hamming: d-tuples over `{0..q−1}` in lexicographic order, adjacent iff
///   they differ in one coordinate; labelled like `021`.
/// * Kron: see [`kronecker_product`].
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let order = spec.order().unwrap_or(usize::MAX);
    if order > MAX_PRODUCT_ORDER {
        return Err(Error::OrderCap {
            order,
            cap: MAX_PRODUCT_ORDER,
        });
    }
    Ok(match *spec {
        FamilySpec::Cycle(n) => cycle(n),
        FamilySpec::Complete(n) => complete(n),
        FamilySpec::Johnson { m, r } => johnson(m, r),
        FamilySpec::Hamming { d, q } => hamming(d, q),
        FamilySpec::Kron(ref l, ref r) => kronecker_product(&build_family(l)?, &build_family(r)?)?,
    })
}

fn cycle(n: usize) -> Graph {
    let adjacency = (0..n)
        .map(|i| {
            let mut nb = vec![(i + 1) % n, (i + n - 1) % n];
            nb.sort_unstable();
            nb
        })
        .collect();
    Graph::from_sorted_unchecked(adjacency, None)
}

fn complete(n: usize) -> Graph {
    let adjacency = (0..n)
        .map(|i| (0..n).filter(|&j| j != i).collect())
        .collect();
    Graph::from_sorted_unchecked(adjacency, None)
}

fn johnson(m: usize, r: usize) -> Graph {
    // r-subsets as bitmasks over {0..m-1}, in lexicographic order of the
    // sorted element lists
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..r).collect();
    loop {
        subsets.push(current.clone());
        let mut i = r;
        while i > 0 && current[i - 1] == m - r + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        current[i - 1] += 1;
        for j in i..r {
            current[j] = current[j - 1] + 1;
        }
    }
    let mask = |s: &[usize]| s.iter().fold(0u64, |acc, &e| acc | (1u64 << e));
    let index: HashMap<u64, usize> = subsets
        .iter()
        .enumerate()
        .map(|(i, s)| (mask(s), i))
        .collect();

    let adjacency = subsets
        .iter()
        .map(|s| {
            let bits = mask(s);
            let mut nb = Vec::with_capacity(r * (m - r));
            for &out in s {
                for inn in (0..m).filter(|e| bits & (1 << e) == 0) {
                    let swapped = (bits & !(1u64 << out)) | (1u64 << inn);
                    nb.push(index[&swapped]);
                }
            }
            nb.sort_unstable();
            nb
        })
        .collect();
    let labels = subsets
        .iter()
        .map(|s| {
            let items: Vec<String> = s.iter().map(|e| (e + 1).to_string()).collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    Graph::from_sorted_unchecked(adjacency, Some(labels))
}

fn hamming(d: usize, q: usize) -> Graph {
    let n = q.pow(d as u32);
    let place: Vec<usize> = (0..d).map(|i| q.pow((d - 1 - i) as u32)).collect();
    let adjacency = (0..n)
        .map(|v| {
            let mut nb = Vec::with_capacity(d * (q - 1));
            for &p in &place {
                let digit = (v / p) % q;
                let base = v - digit * p;
                nb.extend((0..q).filter(|&x| x != digit).map(|x| base + x * p));
            }
            nb.sort_unstable();
            nb
        })
        .collect();
    let labels = (0..n)
        .map(|v| {
            let digits = place.iter().map(|&p| (v / p) % q);
            if q <= 10 {
                digits.map(|x| char::from(b'0' + x as u8)).collect()
            } else {
                digits.map(|x| x.to_string()).collect::<Vec<_>>().join(".")
            }
        })
        .collect();
    Graph::from_sorted_unchecked(adjacency, Some(labels))
}

/// Kronecker (tensor) product: `(u, v) ~ (u', v')` iff `u ~ u'` in `g` and
/// `v ~ v'` in `h`. Vertex `(u, v)` gets index `u · |V(h)| + v`, so the
/// vertices sharing a left-factor vertex form contiguous blocks.
pub fn kronecker_product(g: &Graph, h: &Graph) -> Result<Graph> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    if ng == 0 || nh == 0 {
        return Err(Error::EmptyGraph);
    }
    let order = ng.saturating_mul(nh);
    if order > MAX_PRODUCT_ORDER {
        return Err(Error::OrderCap {
            order,
            cap: MAX_PRODUCT_ORDER,
        });
    }
    let mut adjacency = Vec::with_capacity(order);
    for u in 0..ng {
        for v in 0..nh {
            let mut nb = Vec::with_capacity(g.degree(u) * h.degree(v));
            for &u2 in g.neighbors(u) {
                nb.extend(h.neighbors(v).iter().map(|&v2| u2 * nh + v2));
            }
            adjacency.push(nb);
        }
    }
    let labels = match (g.labels(), h.labels()) {
        (None, None) => None,
        (lg, lh) => {
            let name = |l: Option<&[String]>, i: usize| l.map_or(i.to_string(), |l| l[i].clone());
            Some(
                (0..order)
                    .map(|i| format!("({},{})", name(lg, i / nh), name(lh, i % nh)))
                    .collect(),
            )
        }
    };
    Ok(Graph::from_sorted_unchecked(adjacency, labels))
}
