use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const MIS_LIMIT: usize = 24;
pub const CHROMATIC_LIMIT: usize = 20;

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.row(v)[0]).collect()
}

fn to_set(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1)).expect("in range")
}

fn mis_rec(adj: &[u64], cand: u64, cur: u64, best: &mut u64) {
    if cand == 0 {
        if cur.count_ones() > best.count_ones() {
            *best = cur;
        }
        return;
    }
    if cur.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    let mut pick = 0;
    let mut pick_deg = 0;
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[v] & cand).count_ones();
        if d > pick_deg {
            pick = v;
            pick_deg = d;
        }
    }
    if pick_deg == 0 {
        mis_rec(adj, 0, cur | cand, best);
        return;
    }
    let bit = 1u64 << pick;
    mis_rec(adj, cand & !adj[pick] & !bit, cur | bit, best);
    mis_rec(adj, cand & !bit, cur, best);
}

/// Exact independence number with a witness (branch and bound, branching on
/// a vertex of largest remaining degree). `n ≤ 24`.
pub fn max_independent_set(g: &Graph) -> Result<(usize, VertexSet)> {
    let n = g.n();
    if n > MIS_LIMIT {
        return Err(Error::TooLarge(format!(
            "exact independent set oracle handles n ≤ {MIS_LIMIT}, got {n}"
        )));
    }
    if n == 0 {
        return Ok((0, VertexSet::new(0)));
    }
    let adj = masks(g);
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut best = 0;
    mis_rec(&adj, all, 0, &mut best);
    Ok((best.count_ones() as usize, to_set(n, best)))
}

/// Exact clique number, as the independence number of the complement.
pub fn max_clique(g: &Graph) -> Result<(usize, VertexSet)> {
    max_independent_set(&g.complement())
}

pub fn has_clique_of_size(g: &Graph, r: usize) -> bool {
    max_clique(g).map(|(w, _)| w >= r).expect("oracle size limit")
}

pub fn has_independent_set_of_size(g: &Graph, s: usize) -> bool {
    max_independent_set(g).map(|(a, _)| a >= s).expect("oracle size limit")
}

fn color_rec(
    adj: &[u64],
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let limit = (used + 1).min(k);
    'next: for c in 0..limit {
        let mut nb = adj[v];
        while nb != 0 {
            let w = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            if colors[w] == c {
                continue 'next;
            }
        }
        colors[v] = c;
        if color_rec(adj, order, idx + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// Exact chromatic number and a proper coloring (colors `0..chi`), by
/// trying `k = ω, ω+1, ...` colors with symmetry-broken backtracking.
/// `n ≤ 20`.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n > CHROMATIC_LIMIT {
        return Err(Error::TooLarge(format!(
            "exact coloring oracle handles n ≤ {CHROMATIC_LIMIT}, got {n}"
        )));
    }
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let adj = masks(g);
    let (omega, clique) = max_clique(g)?;
    // clique first, then by descending degree
    let mut order: Vec<usize> = clique.iter().collect();
    let mut rest: Vec<usize> = (0..n).filter(|&v| !clique.contains(v)).collect();
    rest.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    order.extend(rest);
    for k in omega.max(1)..=n {
        let mut colors = vec![usize::MAX; n];
        if color_rec(&adj, &order, 0, k, 0, &mut colors) {
            return Ok((k, colors));
        }
    }
    unreachable!("n colors always suffice")
}

/// α, ω and χ of one graph with certificates.
#[derive(Clone, Debug)]
pub struct OracleReport {
    pub alpha: (usize, VertexSet),
    pub omega: (usize, VertexSet),
    pub chi: (usize, Vec<usize>),
}

impl OracleReport {
    pub fn compute(g: &Graph) -> Result<Self> {
        Ok(OracleReport {
            alpha: max_independent_set(g)?,
            omega: max_clique(g)?,
            chi: chromatic_number(g)?,
        })
    }

    /// Checks every certificate against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let is = self.alpha.1.to_vec();
        let cl = self.omega.1.to_vec();
        let independent = is.iter().all(|&u| is.iter().all(|&v| !g.has_edge(u, v)));
        let clique = cl
            .iter()
            .all(|&u| cl.iter().all(|&v| u == v || g.has_edge(u, v)));
        let coloring = &self.chi.1;
        let proper = g.edges().all(|(u, v)| coloring[u] != coloring[v])
            && coloring.iter().all(|&c| c < self.chi.0);
        independent && clique && proper && is.len() == self.alpha.0 && cl.len() == self.omega.0
    }
}
