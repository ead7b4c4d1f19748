//! The pattern route: enumerate every `k`-vertex graph, keep those in Π,
//! and look for each one as an induced subgraph of the host with a
//! backtracking matcher.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::properties::Recognizer;

use super::{dispatch, Engine, ProblemInstance, SolveOutcome};

pub const SGI_MAX_K: usize = 7;

/// All labeled `k`-vertex graphs, `k ≤ 7`, in ascending edge-mask order.
pub fn enumerate_k_vertex_graphs(k: usize) -> Result<impl Iterator<Item = Graph>> {
    if k > SGI_MAX_K {
        return Err(Error::TooLarge(format!(
            "pattern enumeration needs k ≤ {SGI_MAX_K}, got {k}"
        )));
    }
    let pairs = k * k.saturating_sub(1) / 2;
    Ok((0u64..1 << pairs).map(move |m| Graph::from_edge_mask(k, m)))
}

/// An injective map `pattern vertex → host vertex` preserving adjacency and
/// non-adjacency, or `None`. Pattern vertices are placed in descending
/// degree order and host candidates tried in ascending order.
pub fn induced_subgraph_isomorphism(pattern: &Graph, host: &Graph) -> Option<Vec<usize>> {
    let (k, n) = (pattern.n(), host.n());
    if k > n {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
    let mut mapping = vec![usize::MAX; k];
    let mut used = vec![0u64; host.row_words()];
    if place(pattern, host, &order, 0, &mut mapping, &mut used) {
        Some(mapping)
    } else {
        None
    }
}

fn place(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut [u64],
) -> bool {
    let Some(&p) = order.get(depth) else {
        return true;
    };
    let need = pattern.degree(p);
    for h in 0..host.n() {
        if bits::get(used, h) || host.degree(h) < need {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&q| pattern.has_edge(p, q) == host.has_edge(h, mapping[q]));
        if !consistent {
            continue;
        }
        mapping[p] = h;
        bits::set(used, h);
        if place(pattern, host, order, depth + 1, mapping, used) {
            return true;
        }
        bits::clear(used, h);
    }
    mapping[p] = usize::MAX;
    false
}

pub(crate) fn search_by_patterns(host: &Graph, test: Recognizer, k: usize) -> Result<(Option<VertexSet>, u64)> {
    let mut tests = 0;
    for pattern in enumerate_k_vertex_graphs(k)? {
        tests += 1;
        if !test(&pattern) {
            continue;
        }
        if let Some(map) = induced_subgraph_isomorphism(&pattern, host) {
            let w = VertexSet::from_indices(host.n(), map).expect("host vertices");
            return Ok((Some(w), tests));
        }
    }
    Ok((None, tests))
}

/// Same dispatch and cutoffs as [`super::solve`], with every search branch
/// answered by the pattern route. Fails with `TooLarge` only when a search
/// is actually needed for `k > 7`.
pub fn solve_via_sgi(instance: &ProblemInstance<'_>, check_input_class: bool) -> Result<SolveOutcome> {
    dispatch(instance, check_input_class, Engine::SubgraphIsomorphism)
}
