use super::{diameter, has_odd_cycle, is_connected, Graph};
use crate::error::{Error, Result};

/// A bound comfortably above γ(G) ≤ 2n − 2 (connected non-bipartite
/// graphs) plus the n-length stabilization window.
pub fn default_walk_bound(g: &Graph) -> usize {
    (3 * g.vertex_count()).max(4)
}

/// Least `k₀` such that walks of every length in `[k₀, bound]` join `x` and
/// `y`.
///
/// Achievable lengths come from iterating the set of vertices reachable from
/// `x` by walks of exactly `k` steps. The answer is only reported once the
/// last `vertex_count` lengths up to `bound` are all achievable.
pub fn walk_gamma(g: &Graph, x: usize, y: usize, bound: usize) -> Result<usize> {
    check_walk_input(g)?;
    let n = g.vertex_count();
    if x >= n || y >= n {
        return Err(Error::ParameterDomain(format!(
            "vertex pair ({x},{y}) out of range for order {n}"
        )));
    }
    let (gaps, stable) = last_gaps(g, x, bound);
    if stable[y] {
        Ok(gaps[y])
    } else {
        Err(Error::NotStabilized { bound })
    }
}

/// γ(G) = max over all pairs of [`walk_gamma`].
pub fn gamma(g: &Graph, bound: usize) -> Result<usize> {
    check_walk_input(g)?;
    let mut worst = 0;
    for x in 0..g.vertex_count() {
        let (gaps, stable) = last_gaps(g, x, bound);
        if !stable.iter().all(|&s| s) {
            return Err(Error::NotStabilized { bound });
        }
        worst = worst.max(gaps.into_iter().max().unwrap_or(0));
    }
    Ok(worst)
}

fn check_walk_input(g: &Graph) -> Result<()> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !is_connected(g) {
        return Err(Error::DisconnectedGraph);
    }
    if !has_odd_cycle(g) {
        return Err(Error::BipartiteInput);
    }
    Ok(())
}

/// For each target `y`, one past the largest length `k ≤ bound` with no
/// `x → y` walk of length `k` (0 if every length is achievable), and whether
/// the last `vertex_count` lengths up to `bound` were all achievable.
///
/// Once every vertex has been reachable for `vertex_count` consecutive
/// lengths the sets stay full (walks extend by stepping back and forth), so
/// the iteration stops there.
fn last_gaps(g: &Graph, x: usize, bound: usize) -> (Vec<usize>, Vec<bool>) {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let full_count = n;
    let mut gaps = vec![0usize; n];
    let mut current = vec![0u64; words];
    let mut next = vec![0u64; words];
    current[x / 64] |= 1 << (x % 64);
    let mut full_run = 0;

    for k in 0..=bound {
        let mut count = 0;
        for (w, &bits) in current.iter().enumerate() {
            count += bits.count_ones() as usize;
            let mut missing = !bits;
            while missing != 0 {
                let v = w * 64 + missing.trailing_zeros() as usize;
                if v >= n {
                    break;
                }
                gaps[v] = k + 1;
                missing &= missing - 1;
            }
        }
        full_run = if count == full_count { full_run + 1 } else { 0 };
        if full_run >= n {
            return (gaps, vec![true; n]);
        }
        next.iter_mut().for_each(|w| *w = 0);
        for (w, &bits) in current.iter().enumerate() {
            let mut set = bits;
            while set != 0 {
                let v = w * 64 + set.trailing_zeros() as usize;
                for &u in g.neighbors(v) {
                    next[u / 64] |= 1 << (u % 64);
                }
                set &= set - 1;
            }
        }
        std::mem::swap(&mut current, &mut next);
    }
    let stable = gaps.iter().map(|&gap| gap + n <= bound + 1).collect();
    (gaps, stable)
}

/// Number of parts if `h` is complete multipartite (non-adjacency is an
/// equivalence relation on the vertices), otherwise `None`.
pub fn complete_multipartite_parts(h: &Graph) -> Option<usize> {
    let n = h.vertex_count();
    let mut part = vec![usize::MAX; n];
    let mut parts = 0;
    for v in 0..n {
        if part[v] != usize::MAX {
            continue;
        }
        // v's part is v plus its non-neighbours
        let mut member = 0;
        let nb = h.neighbors(v);
        for (u, slot) in part.iter_mut().enumerate() {
            if nb.get(member) == Some(&u) {
                member += 1;
                continue;
            }
            if *slot != usize::MAX {
                return None;
            }
            *slot = parts;
        }
        parts += 1;
    }
    // every cross-part pair must be adjacent
    let complete = (0..n).all(|v| {
        let own = part.iter().filter(|&&p| p == part[v]).count();
        h.degree(v) == n - own && h.neighbors(v).iter().all(|&u| part[u] != part[v])
    });
    complete.then_some(parts)
}

/// Diameter of `g ⊗ h` predicted when `h` is complete multipartite with
/// more than three parts: `diam(g)` when it is at least 3, otherwise 2 when
/// γ(g) ≤ 2 and 3 when γ(g) > 2. A bipartite `g` has no finite γ and falls
/// into the last branch.
pub fn predicted_kron_diameter(g: &Graph, h: &Graph) -> Result<usize> {
    match complete_multipartite_parts(h) {
        Some(t) if t > 3 => {}
        Some(t) => {
            return Err(Error::ParameterDomain(format!(
                "complete multipartite factor has {t} parts, needs more than 3"
            )))
        }
        None => {
            return Err(Error::Unsupported(
                "second factor is not complete multipartite".into(),
            ))
        }
    }
    let d = diameter(g)?;
    if g.vertex_count() < 2 {
        return Err(Error::ParameterDomain("first factor needs an edge".into()));
    }
    if d >= 3 {
        return Ok(d);
    }
    let small_gamma = match gamma(g, default_walk_bound(g)) {
        Ok(gm) => gm <= 2,
        Err(Error::BipartiteInput) => false,
        Err(e) => return Err(e),
    };
    Ok(if small_gamma { 2 } else { 3 })
}
