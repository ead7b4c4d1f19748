use crate::error::{Error, Result};
use crate::graph::Graph;

pub const PLANARITY_ORACLE_LIMIT: usize = 8;

/// Planarity by Kuratowski's theorem: true iff no subgraph is a subdivision
/// of `K5` or `K3,3`. Tries every choice of branch vertices and then routes
/// the required internally disjoint paths through the remaining vertices.
/// `n ≤ 8`.
pub fn planarity_oracle(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n > PLANARITY_ORACLE_LIMIT {
        return Err(Error::TooLarge(format!(
            "Kuratowski oracle handles n ≤ {PLANARITY_ORACLE_LIMIT}, got {n}"
        )));
    }
    let adj: Vec<u32> = (0..n).map(|v| g.row(v).first().copied().unwrap_or(0) as u32).collect();
    let all: u32 = (1u32 << n) - 1;
    let deg = |v: usize| adj[v].count_ones();

    for branch in subsets(n, 5) {
        let verts = members(branch);
        if verts.iter().any(|&v| deg(v) < 4) {
            continue;
        }
        let mut pairs = Vec::new();
        for (i, &a) in verts.iter().enumerate() {
            for &b in &verts[i + 1..] {
                pairs.push((a, b));
            }
        }
        if route(&adj, &pairs, all & !branch) {
            return Ok(false);
        }
    }

    for branch in subsets(n, 6) {
        let verts = members(branch);
        if verts.iter().any(|&v| deg(v) < 3) {
            continue;
        }
        // side A always holds verts[0]; choose its other two members
        for x in 1..6 {
            for y in x + 1..6 {
                let side_a = [verts[0], verts[x], verts[y]];
                let side_b: Vec<usize> = verts
                    .iter()
                    .copied()
                    .filter(|v| !side_a.contains(v))
                    .collect();
                let pairs: Vec<(usize, usize)> = side_a
                    .iter()
                    .flat_map(|&a| side_b.iter().map(move |&b| (a, b)))
                    .collect();
                if route(&adj, &pairs, all & !branch) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    (0u32..1 << n).filter(move |m| m.count_ones() as usize == k)
}

fn members(mask: u32) -> Vec<usize> {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Can every pair be joined by a path whose interior uses only `free`
/// vertices, with interiors pairwise disjoint?
fn route(adj: &[u32], pairs: &[(usize, usize)], free: u32) -> bool {
    match pairs.split_first() {
        None => true,
        Some((&(a, b), rest)) => extend(adj, a, b, 0, free, rest),
    }
}

fn extend(adj: &[u32], cur: usize, target: usize, interior: u32, free: u32, rest: &[(usize, usize)]) -> bool {
    if adj[cur] >> target & 1 == 1 && route(adj, rest, free & !interior) {
        return true;
    }
    let mut next = adj[cur] & free & !interior;
    while next != 0 {
        let w = next.trailing_zeros() as usize;
        next &= next - 1;
        if extend(adj, w, target, interior | 1 << w, free, rest) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn kuratowski_graphs() {
        assert!(!planarity_oracle(&complete_graph(5)).unwrap());
        assert!(!planarity_oracle(&complete_bipartite(3, 3)).unwrap());
        assert!(planarity_oracle(&complete_graph(4)).unwrap());
        assert!(planarity_oracle(&path_graph(8)).unwrap());
    }

    #[test]
    fn subdivisions_are_found() {
        // K3,3 with edge (0,3) subdivided by vertex 6
        let mut b = GraphBuilder::new(7);
        for a in 0..3 {
            for c in 3..6 {
                if (a, c) != (0, 3) {
                    b.add_edge(a, c).unwrap();
                }
            }
        }
        b.add_edge(0, 6).unwrap();
        b.add_edge(6, 3).unwrap();
        assert!(!planarity_oracle(&b.build()).unwrap());

        // K5 with two edges subdivided
        let mut b = GraphBuilder::new(7);
        for (u, v) in complete_graph(5).edges() {
            match (u, v) {
                (0, 1) => {
                    b.add_edge(0, 5).unwrap();
                    b.add_edge(5, 1).unwrap();
                }
                (2, 3) => {
                    b.add_edge(2, 6).unwrap();
                    b.add_edge(6, 3).unwrap();
                }
                _ => {
                    b.add_edge(u, v).unwrap();
                }
            }
        }
        assert!(!planarity_oracle(&b.build()).unwrap());
    }

    #[test]
    fn forests_are_planar() {
        let star = complete_bipartite(1, 7);
        assert!(planarity_oracle(&star).unwrap());
        assert!(matches!(planarity_oracle(&edgeless_graph(9)), Err(Error::TooLarge(_))));
    }
}
