//! Reductions from independent set to `P(·, Π_G, Π, ·)`.
//!
//! - Strong product: `G′ = G ⊠ K_χ`, `k′ = k·χ`, where `χ = χ(Π)`. An
//!   independent set `I` maps to all copies of its vertices (`k·K_χ ∈ Π`);
//!   back, the largest color class of an optimal coloring of a `k′`-vertex
//!   member has at least `k′/χ(H) ≥ k` vertices, one copy per original.
//! - Join: `G′ = G + r·K_c` with `c = χ − 1`, `r = R(χ+1, k)` (binomial
//!   bound) and `k′ = k + r·c`. Back, if the `G` part of a member is not
//!   independent it misses a vertex of every attached clique, so it has at
//!   least `k + r` vertices and, lacking a `(χ+1)`-clique, an independent
//!   set of size `k`.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{complete_graph, disjoint_cliques, Graph, VertexSet};
use crate::oracle::{chromatic_number, exhaustive_solve, max_independent_set};
use crate::properties::PropertyDescriptor;
use crate::ramsey::{binomial, ramsey_upper_bound};
use crate::search::first_independent_set;

/// Largest `n(G′)` that [`verify_reduction_equivalence`] will hand to the
/// exact oracles.
pub const VERIFY_MAX_VERTICES: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ReductionKind {
    #[serde(rename = "strong")]
    StrongProduct,
    #[serde(rename = "join")]
    Join,
}

impl std::str::FromStr for ReductionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "strong" => Ok(ReductionKind::StrongProduct),
            "join" => Ok(ReductionKind::Join),
            _ => Err(Error::InvalidArgument(format!("unknown reduction kind `{s}`"))),
        }
    }
}

/// Where a vertex of `G′` comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum VertexOrigin {
    /// Copy `copy` of `G` vertex `vertex` (strong product).
    Copy { vertex: usize, copy: usize },
    /// `G` vertex `vertex`, kept as is (join).
    Original { vertex: usize },
    /// Slot `slot` of attached clique `clique` (join).
    Attached { clique: usize, slot: usize },
}

#[derive(Clone, Debug)]
pub struct ReductionInstance {
    pub kind: ReductionKind,
    pub source: Graph,
    pub pi: PropertyDescriptor,
    pub k: usize,
    pub g_prime: Graph,
    pub k_prime: usize,
    pub chi: usize,
    /// Attached clique count (join only).
    pub r: Option<usize>,
    /// Attached clique size (join only).
    pub c: Option<usize>,
    /// Origin of every `G′` vertex, indexed by `G′` vertex.
    pub coordinate_map: Vec<VertexOrigin>,
}

fn chi_of(pi: &PropertyDescriptor) -> Result<usize> {
    pi.chi_pi
        .map(|c| c as usize)
        .ok_or_else(|| Error::DescriptorUnsupported(pi.name.clone(), "χ(Π) is unbounded or unknown".into()))
}

/// `G ⊠ K_{χ(Π)}` with `k′ = k·χ(Π)`; vertex `u·χ + j` is copy `j` of `u`.
pub fn strong_product_reduction(g: &Graph, pi: &PropertyDescriptor, k: usize) -> Result<ReductionInstance> {
    let chi = chi_of(pi)?;
    if !pi.contains_all_disjoint_unions_of_k_chi {
        return Err(Error::DescriptorUnsupported(
            pi.name.clone(),
            "does not contain every n·K_χ(Π)".into(),
        ));
    }
    let coordinate_map = (0..g.n())
        .flat_map(|vertex| (0..chi).map(move |copy| VertexOrigin::Copy { vertex, copy }))
        .collect();
    Ok(ReductionInstance {
        kind: ReductionKind::StrongProduct,
        source: g.clone(),
        pi: pi.clone(),
        k,
        g_prime: g.strong_product(&complete_graph(chi)),
        k_prime: k * chi,
        chi,
        r: None,
        c: None,
        coordinate_map,
    })
}

/// `G + r·K_c` with `c = χ(Π) − 1`, `r = C(χ(Π)+k−1, χ(Π))`, `k′ = k + r·c`.
/// Attached clique `b` occupies `n + b·c .. n + (b+1)·c`.
pub fn join_reduction(g: &Graph, pi: &PropertyDescriptor, k: usize) -> Result<ReductionInstance> {
    let chi = chi_of(pi)?;
    if chi < 2 {
        return Err(Error::DescriptorUnsupported(pi.name.clone(), "needs χ(Π) ≥ 2".into()));
    }
    if !pi.contains_is_join_cliques {
        return Err(Error::DescriptorUnsupported(
            pi.name.clone(),
            "does not contain every I + n·K_(χ(Π)−1)".into(),
        ));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("join reduction needs k ≥ 1".into()));
    }
    let c = chi - 1;
    let r = ramsey_upper_bound(chi as u64 + 1, k as u64)?
        .to_usize()
        .filter(|&r| r.checked_mul(c).is_some_and(|rc| rc + g.n() <= crate::graph::MAX_VERTICES))
        .ok_or_else(|| Error::TooLarge(format!("R({}, {k}) bound is too large to attach", chi + 1)))?;
    let n = g.n();
    let mut coordinate_map: Vec<VertexOrigin> = (0..n).map(|vertex| VertexOrigin::Original { vertex }).collect();
    coordinate_map.extend((0..r).flat_map(|clique| (0..c).map(move |slot| VertexOrigin::Attached { clique, slot })));
    Ok(ReductionInstance {
        kind: ReductionKind::Join,
        source: g.clone(),
        pi: pi.clone(),
        k,
        g_prime: g.join(&disjoint_cliques(r, c)),
        k_prime: k + r * c,
        chi,
        r: Some(r),
        c: Some(c),
        coordinate_map,
    })
}

pub fn reduce(g: &Graph, pi: &PropertyDescriptor, k: usize, kind: ReductionKind) -> Result<ReductionInstance> {
    match kind {
        ReductionKind::StrongProduct => strong_product_reduction(g, pi, k),
        ReductionKind::Join => join_reduction(g, pi, k),
    }
}

fn is_independent(g: &Graph, vertices: &[usize]) -> bool {
    vertices
        .iter()
        .enumerate()
        .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}

/// Maps a size-`k` independent set of `G` to a `k′`-vertex set of `G′`
/// inducing a member of Π.
pub fn forward_witness(red: &ReductionInstance, independent_set: &VertexSet) -> Result<VertexSet> {
    let g = &red.source;
    let members = independent_set.to_vec();
    if let Some(&bad) = members.iter().find(|&&v| v >= g.n()) {
        return Err(Error::InvalidWitness(format!("vertex {bad} is not in G")));
    }
    if members.len() != red.k {
        return Err(Error::InvalidWitness(format!(
            "expected {} vertices, got {}",
            red.k,
            members.len()
        )));
    }
    if !is_independent(g, &members) {
        return Err(Error::InvalidWitness("set is not independent in G".into()));
    }
    let image: Vec<usize> = match red.kind {
        ReductionKind::StrongProduct => members
            .iter()
            .flat_map(|&u| (0..red.chi).map(move |j| u * red.chi + j))
            .collect(),
        ReductionKind::Join => members
            .iter()
            .copied()
            .chain(g.n()..red.g_prime.n())
            .collect(),
    };
    let out = VertexSet::from_indices(red.g_prime.n(), image)?;
    if !red.pi.accepts(&red.g_prime.induced_subgraph(&out)?.0)? {
        return Err(Error::Internal(format!(
            "forward image is not in `{}`; descriptor closure flags are wrong",
            red.pi.name
        )));
    }
    Ok(out)
}

/// Recovers an independent set of size `≥ k` in `G` from a `k′`-vertex set
/// of `G′` inducing a member of Π.
pub fn backward_extract(red: &ReductionInstance, h_vertices: &VertexSet) -> Result<VertexSet> {
    let gp = &red.g_prime;
    if let Some(bad) = h_vertices.iter().find(|&v| v >= gp.n()) {
        return Err(Error::InvalidWitness(format!("vertex {bad} is not in G′")));
    }
    if h_vertices.len() != red.k_prime {
        return Err(Error::InvalidWitness(format!(
            "expected {} vertices, got {}",
            red.k_prime,
            h_vertices.len()
        )));
    }
    let (h, origin) = gp.induced_subgraph(h_vertices)?;
    if !red.pi.accepts(&h)? {
        return Err(Error::InvalidWitness(format!("set does not induce a member of `{}`", red.pi.name)));
    }
    let g = &red.source;
    let found: Vec<usize> = match red.kind {
        ReductionKind::StrongProduct => {
            let (colors_used, coloring) = chromatic_number(&h)?;
            let mut sizes = vec![0usize; colors_used];
            for &c in &coloring {
                sizes[c] += 1;
            }
            let best = (0..colors_used).max_by_key(|&c| (sizes[c], std::cmp::Reverse(c)));
            let mut projected: Vec<usize> = match best {
                Some(class) => (0..h.n())
                    .filter(|&i| coloring[i] == class)
                    .map(|i| origin[i] / red.chi)
                    .collect(),
                None => Vec::new(),
            };
            projected.dedup();
            projected
        }
        ReductionKind::Join => {
            let s1: Vec<usize> = origin.iter().copied().filter(|&v| v < g.n()).collect();
            if is_independent(g, &s1) {
                s1.into_iter().take(red.k).collect()
            } else {
                let sub = g.induced_on(&s1)?;
                first_independent_set(&sub, red.k)
                    .map(|local| local.into_iter().map(|i| s1[i]).collect())
                    .unwrap_or_default()
            }
        }
    };
    if found.len() < red.k || !is_independent(g, &found) {
        return Err(Error::Internal(format!(
            "extracted {} vertices, expected an independent set of size ≥ {}",
            found.len(),
            red.k
        )));
    }
    VertexSet::from_indices(g.n(), found)
}

/// Checks `α(G) ≥ k  ⟺  G′ has k′ vertices inducing a member of Π`, both
/// sides by exact oracles.
pub fn verify_reduction_equivalence(
    g: &Graph,
    pi: &PropertyDescriptor,
    k: usize,
    kind: ReductionKind,
) -> Result<bool> {
    let red = reduce(g, pi, k, kind)?;
    let np = red.g_prime.n();
    if np > VERIFY_MAX_VERTICES {
        return Err(Error::TooLarge(format!(
            "G′ has {np} vertices; verification handles at most {VERIFY_MAX_VERTICES}"
        )));
    }
    let subsets = binomial(np as u64, red.k_prime as u64);
    if subsets > crate::oracle::EXHAUSTIVE_BUDGET.into() {
        return Err(Error::TooLarge(format!("C({np}, {}) = {subsets} subsets", red.k_prime)));
    }
    let has_is = max_independent_set(g)?.0 >= k;
    let has_member = exhaustive_solve(&red.g_prime, pi, red.k_prime)?;
    Ok(has_is == has_member)
}
