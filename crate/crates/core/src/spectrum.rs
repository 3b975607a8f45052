//! Multisets of eigenvalues and their text renderings.

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize, Serializer};

/// One eigenvalue class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenpair {
    pub value: f64,
    pub multiplicity: usize,
}

/// Eigenvalue multiset: `(value, multiplicity)` pairs sorted descending by
/// value, with consecutive values more than `grouping_tol` apart.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pairs: Vec<Eigenpair>,
    grouping_tol: f64,
}

impl Spectrum {
    /// Groups arbitrary `(value, multiplicity)` pairs. Values within
    /// `grouping_tol` of their predecessor (after a descending sort) join its
    /// group; the representative is the multiplicity-weighted mean.
    pub fn from_pairs<I>(pairs: I, grouping_tol: f64) -> Spectrum
    where
        I: IntoIterator<Item = (f64, usize)>,
    {
        let mut raw: Vec<(f64, usize)> = pairs.into_iter().filter(|&(_, m)| m > 0).collect();
        raw.sort_by(|a, b| b.0.total_cmp(&a.0));

        let mut groups: Vec<(f64, usize, f64)> = Vec::new(); // (weighted sum, mult, last value)
        for (v, m) in raw {
            match groups.last_mut() {
                Some(g) if (g.2 - v).abs() <= grouping_tol => {
                    g.0 += v * m as f64;
                    g.1 += m;
                    g.2 = v;
                }
                _ => groups.push((v * m as f64, m, v)),
            }
        }
        let pairs = groups
            .into_iter()
            .map(|(sum, m, _)| Eigenpair {
                value: normalize_zero(sum / m as f64),
                multiplicity: m,
            })
            .collect();
        Spectrum {
            pairs,
            grouping_tol,
        }
    }

    /// Exact multiset from integer eigenvalues; grouping tolerance 0.
    pub fn from_integers<I>(pairs: I) -> Spectrum
    where
        I: IntoIterator<Item = (i128, u128)>,
    {
        Spectrum::from_pairs(pairs.into_iter().map(|(v, m)| (v as f64, m as usize)), 0.0)
    }

    pub fn pairs(&self) -> &[Eigenpair] {
        &self.pairs
    }

    pub fn grouping_tol(&self) -> f64 {
        self.grouping_tol
    }

    /// Total multiplicity, i.e. the matrix order.
    pub fn order(&self) -> usize {
        self.pairs.iter().map(|p| p.multiplicity).sum()
    }

    pub fn distinct_count(&self) -> usize {
        self.pairs.len()
    }

    /// Σ value · multiplicity.
    pub fn trace(&self) -> f64 {
        self.pairs
            .iter()
            .map(|p| p.value * p.multiplicity as f64)
            .sum()
    }

    pub fn largest(&self) -> Option<Eigenpair> {
        self.pairs.first().copied()
    }

    /// All eigenvalues with repetition, descending.
    pub fn expanded(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|p| std::iter::repeat_n(p.value, p.multiplicity))
            .collect()
    }

    /// Union of two multisets, regrouped with the looser of the tolerances.
    pub fn union(&self, other: &Spectrum) -> Spectrum {
        let tol = self.grouping_tol.max(other.grouping_tol);
        Spectrum::from_pairs(
            self.pairs
                .iter()
                .chain(&other.pairs)
                .map(|p| (p.value, p.multiplicity)),
            tol,
        )
    }

    /// The same multiset with every multiplicity scaled by `k`.
    pub fn repeated(&self, k: usize) -> Spectrum {
        Spectrum::from_pairs(
            self.pairs.iter().map(|p| (p.value, p.multiplicity * k)),
            self.grouping_tol,
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectrum serializes")
    }

    /// `value,multiplicity` rows with a header line.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("value,multiplicity\n");
        for p in &self.pairs {
            out.push_str(&format!("{},{}\n", format_sig12(p.value), p.multiplicity));
        }
        out
    }

    pub fn from_json(text: &str) -> serde_json::Result<Spectrum> {
        let wire: SpectrumWire = serde_json::from_str(text)?;
        Ok(Spectrum::from_pairs(
            wire.pairs.into_iter().map(|p| (p.value, p.multiplicity)),
            wire.tol,
        ))
    }
}

impl std::fmt::Display for Spectrum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}:{}", format_sig12(p.value), p.multiplicity)?;
        }
        write!(f, "}}")
    }
}

#[derive(Deserialize)]
struct SpectrumWire {
    #[allow(dead_code)]
    order: usize,
    pairs: Vec<PairWire>,
    tol: f64,
}

#[derive(Deserialize)]
struct PairWire {
    value: f64,
    multiplicity: usize,
}

/// A float that serializes as a JSON number with at most 12 significant
/// digits (see [`format_sig12`]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sig12(pub f64);

impl Serialize for Sig12 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        if !self.0.is_finite() {
            return serializer.serialize_none();
        }
        let number: serde_json::Number = format_sig12(self.0)
            .parse()
            .map_err(serde::ser::Error::custom)?;
        number.serialize(serializer)
    }
}

struct PairOut<'a>(&'a Eigenpair);

impl Serialize for PairOut<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(2))?;
        map.serialize_entry("value", &Sig12(self.0.value))?;
        map.serialize_entry("multiplicity", &self.0.multiplicity)?;
        map.end()
    }
}

impl Serialize for Spectrum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<PairOut<'_>> = self.pairs.iter().map(PairOut).collect();
        let mut s = serializer.serialize_struct("Spectrum", 3)?;
        s.serialize_field("order", &self.order())?;
        s.serialize_field("pairs", &pairs)?;
        s.serialize_field("tol", &Sig12(self.grouping_tol))?;
        s.end()
    }
}

fn normalize_zero(v: f64) -> f64 {
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

/// Renders like C's `%.12g`: 12 significant digits, trailing zeros removed,
/// positional notation for decimal exponents in `[-5, 12)`, otherwise
/// `d.ddde±x`. Negative zero prints as `0`.
pub fn format_sig12(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{:.11e}", v);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_fraction(format!("{:.*}", decimals, v))
    } else {
        format!("{}e{}", trim_fraction(mantissa.to_string()), exp)
    }
}

fn trim_fraction(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".to_string()
    } else {
        t.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_rendering() {
        assert_eq!(format_sig12(6.0), "6");
        assert_eq!(format_sig12(-0.0), "0");
        assert_eq!(format_sig12(-2.618033988749895), "-2.61803398875");
        assert_eq!(format_sig12(0.38196601125010515), "0.38196601125");
        assert_eq!(format_sig12(1e-7), "1e-7");
        assert_eq!(format_sig12(-1.5e-12), "-1.5e-12");
        assert_eq!(format_sig12(123456789012345.0), "1.23456789012e14");
        assert_eq!(format_sig12(1e-16 - 1e-16), "0");
        assert_eq!(format_sig12(2.9999999999999996), "3");
    }

    #[test]
    fn grouping_merges_close_values() {
        let s = Spectrum::from_pairs([(1.0000000001, 1), (1.0, 1), (0.0, 1)], 1e-6);
        assert_eq!(s.pairs().len(), 2);
        assert_eq!(s.pairs()[0].multiplicity, 2);
        assert!((s.pairs()[0].value - 1.00000000005).abs() < 1e-12);
        assert_eq!(s.order(), 3);
    }

    #[test]
    fn json_schema_and_roundtrip() {
        let s = Spectrum::from_integers([(12, 1), (0, 4), (-3, 4)]);
        assert_eq!(
            s.to_json(),
            r#"{"order":9,"pairs":[{"value":12,"multiplicity":1},{"value":0,"multiplicity":4},{"value":-3,"multiplicity":4}],"tol":0}"#
        );
        assert_eq!(Spectrum::from_json(&s.to_json()).unwrap(), s);
    }

    #[test]
    fn csv_has_header() {
        let s = Spectrum::from_integers([(2, 1), (-1, 2)]);
        assert_eq!(s.to_csv(), "value,multiplicity\n2,1\n-1,2\n");
    }
}
