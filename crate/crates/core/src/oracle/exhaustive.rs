use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::properties::PropertyDescriptor;
use crate::ramsey::binomial;

/// Largest number of `k`-subsets `exhaustive_solve` will enumerate.
pub const EXHAUSTIVE_BUDGET: u64 = 10_000_000;

/// All labeled graphs on `n ≤ 6` vertices in edge-mask order.
pub fn enumerate_all_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > 6 {
        return Err(Error::TooLarge(format!("graph enumeration needs n ≤ 6, got {n}")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    Ok((0u64..1 << pairs).map(move |mask| Graph::from_edge_mask(n, mask)))
}

/// Ground truth for `P(G, Π, k)`: does some `k`-subset induce a member of
/// `pi`? Walks subsets as bitmasks in Gosper order, a different path from
/// the solver's index-vector enumeration.
pub fn exhaustive_solve(g: &Graph, pi: &PropertyDescriptor, k: usize) -> Result<bool> {
    let n = g.n();
    let test = pi.recognizer()?;
    if k > n {
        return Ok(false);
    }
    if n > 63 {
        return Err(Error::TooLarge(format!("exhaustive solve handles n ≤ 63, got {n}")));
    }
    let count = binomial(n as u64, k as u64);
    if count > EXHAUSTIVE_BUDGET.into() {
        return Err(Error::TooLarge(format!("C({n}, {k}) = {count} subsets")));
    }
    if k == 0 {
        return Ok(test(&Graph::from_edges(0, []).expect("empty graph")));
    }
    let limit = 1u64 << n;
    let mut mask: u64 = (1 << k) - 1;
    let mut verts = Vec::with_capacity(k);
    while mask < limit {
        verts.clear();
        verts.extend((0..n).filter(|&v| mask >> v & 1 == 1));
        if test(&g.induced_on(&verts)?) {
            return Ok(true);
        }
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph};
    use crate::properties::lookup;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_all_graphs(0).unwrap().count(), 1);
        assert_eq!(enumerate_all_graphs(4).unwrap().count(), 64);
        assert_eq!(enumerate_all_graphs(6).unwrap().count(), 32768);
        assert!(enumerate_all_graphs(7).is_err());
    }

    #[test]
    fn small_answers() {
        let bip = lookup("bipartite").unwrap();
        assert!(!exhaustive_solve(&cycle_graph(5), &bip, 5).unwrap());
        assert!(exhaustive_solve(&cycle_graph(5), &bip, 4).unwrap());
        assert!(!exhaustive_solve(&complete_graph(5), &lookup("planar").unwrap(), 5).unwrap());
        assert!(exhaustive_solve(&complete_graph(5), &bip, 0).unwrap());
        assert!(!exhaustive_solve(&complete_graph(2), &bip, 3).unwrap());
    }

    #[test]
    fn generator_only_property_is_rejected() {
        let ud = lookup("unit-disk").unwrap();
        assert!(exhaustive_solve(&complete_graph(3), &ud, 2).is_err());
    }
}
