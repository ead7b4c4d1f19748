//! Immutable finite simple graphs stored as per-vertex adjacency bit rows.

use std::fmt;

use crate::bits;
use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = u16::MAX as usize;

/// A finite simple undirected graph on vertices `0..n`.
///
/// Rows are symmetric, loop-free, and padding bits past `n` are zero, so the
/// derived equality is equality of labeled graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

/// Mutable staging area for building a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        let words = bits::words_for(n);
        GraphBuilder {
            graph: Graph {
                n,
                words,
                rows: vec![0; n * words],
            },
        }
    }

    pub fn n(&self) -> usize {
        self.graph.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.graph.n;
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
        }
        if u == v {
            return Err(Error::InvalidEdge(u));
        }
        self.set_edge_unchecked(u, v);
        Ok(self)
    }

    pub(crate) fn set_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.graph.n && v < self.graph.n);
        let w = self.graph.words;
        bits::set(&mut self.graph.rows[u * w..(u + 1) * w], v);
        bits::set(&mut self.graph.rows[v * w..(v + 1) * w], u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}

impl Graph {
    /// Graph with exactly the given edges; duplicates collapse.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(format!("{n} vertices (max {MAX_VERTICES})")));
        }
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Graph on `n ≤ 11` vertices whose edges are the set bits of `mask`,
    /// using the pair order of [`Graph::pair_index`].
    pub fn from_edge_mask(n: usize, mask: u64) -> Graph {
        assert!(n * n.saturating_sub(1) / 2 <= 64, "edge mask too narrow for {n} vertices");
        let mut b = GraphBuilder::new(n);
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> bit & 1 == 1 {
                    b.set_edge_unchecked(i, j);
                }
                bit += 1;
            }
        }
        b.build()
    }

    /// Position of the pair `{i, j}` in upper-triangle column order:
    /// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
    pub fn pair_index(i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        j * (j - 1) / 2 + i
    }

    /// Inverse of [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> u64 {
        assert!(self.n * self.n.saturating_sub(1) / 2 <= 64);
        self.edges()
            .fold(0u64, |m, (u, v)| m | 1 << Graph::pair_index(u, v))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn row_words(&self) -> usize {
        self.words
    }

    /// Neighborhood of `v` as a bit row.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        bits::get(self.row(u), v)
    }

    pub fn degree(&self, v: usize) -> usize {
        bits::count(self.row(v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits::ones(self.row(v))
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Checks symmetry, loop-freeness and zero padding.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            let row = self.row(u);
            !bits::get(row, u)
                && bits::ones(row).all(|v| v < self.n && self.has_edge(v, u))
        })
    }

    /// `G[S]`, relabeled `0..|S|` in ascending original order, together with
    /// the map from new index to original vertex.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.universe() > self.n {
            if let Some(bad) = s.iter().find(|&v| v >= self.n) {
                return Err(Error::IndexOutOfRange { index: bad, n: self.n });
            }
        }
        let origin = s.to_vec();
        Ok((self.induced_unchecked(&origin), origin))
    }

    /// Induced subgraph on `vertices`, which must be distinct and in range.
    /// New vertex `i` is `vertices[i]`.
    pub fn induced_on(&self, vertices: &[usize]) -> Result<Graph> {
        let mut seen = VertexSet::new(self.n);
        for &v in vertices {
            if v >= self.n {
                return Err(Error::IndexOutOfRange { index: v, n: self.n });
            }
            if seen.contains(v) {
                return Err(Error::InvalidArgument(format!("vertex {v} listed twice")));
            }
            seen.insert(v);
        }
        Ok(self.induced_unchecked(vertices))
    }

    pub(crate) fn induced_unchecked(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut b = GraphBuilder::new(k);
        for j in 1..k {
            let row = self.row(vertices[j]);
            for (i, &u) in vertices[..j].iter().enumerate() {
                if bits::get(row, u) {
                    b.set_edge_unchecked(i, j);
                }
            }
        }
        b.build()
    }

    pub fn complement(&self) -> Graph {
        let mut g = self.clone();
        let tail = self.n % bits::WORD;
        for v in 0..self.n {
            let row = &mut g.rows[v * self.words..(v + 1) * self.words];
            for w in row.iter_mut() {
                *w = !*w;
            }
            if tail != 0 {
                row[self.words - 1] &= (1u64 << tail) - 1;
            }
            bits::clear(row, v);
        }
        g
    }

    /// `G ∪ H` with the vertices of `h` shifted by `n(self)`.
    pub fn disjoint_union(&self, h: &Graph) -> Graph {
        self.union_with(h, false)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, h: &Graph) -> Graph {
        self.union_with(h, true)
    }

    fn union_with(&self, h: &Graph, cross: bool) -> Graph {
        let off = self.n;
        let mut b = GraphBuilder::new(off + h.n);
        for (u, v) in self.edges() {
            b.set_edge_unchecked(u, v);
        }
        for (u, v) in h.edges() {
            b.set_edge_unchecked(off + u, off + v);
        }
        if cross {
            for u in 0..off {
                for v in 0..h.n {
                    b.set_edge_unchecked(u, off + v);
                }
            }
        }
        b.build()
    }

    /// Strong product `self ⊠ h`; vertex `(u, v)` has index `u * n(h) + v`.
    pub fn strong_product(&self, h: &Graph) -> Graph {
        let (n, m) = (self.n, h.n);
        let mut b = GraphBuilder::new(n * m);
        for u in 0..n {
            for u2 in u..n {
                if u != u2 && !self.has_edge(u, u2) {
                    continue;
                }
                for v in 0..m {
                    for v2 in 0..m {
                        if (v == v2 || h.has_edge(v, v2)) && (u, v) < (u2, v2) {
                            b.set_edge_unchecked(u * m + v, u2 * m + v2);
                        }
                    }
                }
            }
        }
        b.build()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

pub fn complete_graph(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for j in 1..n {
        for i in 0..j {
            b.set_edge_unchecked(i, j);
        }
    }
    b.build()
}

pub fn edgeless_graph(n: usize) -> Graph {
    GraphBuilder::new(n).build()
}

/// `t·K_c`: `t` disjoint cliques of size `c`, clique `b` on `b*c..(b+1)*c`.
pub fn disjoint_cliques(t: usize, c: usize) -> Graph {
    edgeless_graph(t).strong_product(&complete_graph(c))
}

pub fn path_graph(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for v in 1..n {
        b.set_edge_unchecked(v - 1, v);
    }
    b.build()
}

/// Cycle `0-1-...-(n-1)-0`; needs `n ≥ 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut b = GraphBuilder::new(n);
    for v in 0..n {
        b.set_edge_unchecked(v, (v + 1) % n);
    }
    b.build()
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    edgeless_graph(a).join(&edgeless_graph(b))
}

/// Petersen graph: outer cycle `0..5`, spokes `i – i+5`, inner pentagram.
pub fn petersen_graph() -> Graph {
    let mut b = GraphBuilder::new(10);
    for i in 0..5 {
        b.set_edge_unchecked(i, (i + 1) % 5);
        b.set_edge_unchecked(i, i + 5);
        b.set_edge_unchecked(i + 5, (i + 2) % 5 + 5);
    }
    b.build()
}

/// A subset of the vertices `0..universe` of some host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            bits: vec![0; bits::words_for(universe)],
        }
    }

    pub fn from_indices<I>(universe: usize, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = VertexSet::new(universe);
        for v in members {
            if v >= universe {
                return Err(Error::IndexOutOfRange { index: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        bits::set(&mut self.bits, v);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            bits::clear(&mut self.bits, v);
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && bits::get(&self.bits, v)
    }

    pub fn len(&self) -> usize {
        bits::count(&self.bits)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        bits::ones(&self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn max(&self) -> Option<usize> {
        self.iter().last()
    }

    pub fn as_words(&self) -> &[u64] {
        &self.bits
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}
