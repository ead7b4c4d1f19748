//! Left-right planarity test (Brandes' formulation of de Fraysseix &
//! Rosenstiehl), decision only: no embedding is produced.
//!
//! Phase one orients the graph by DFS and computes lowpoints and nesting
//! depths. Phase two walks the DFS again with adjacency sorted by nesting
//! depth, maintaining a stack of conflict pairs of return-edge intervals;
//! a pair whose both sides conflict with a new return edge means the graph
//! is not planar.

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, PartialEq, Eq)]
struct Interval {
    low: usize,
    high: usize,
}

impl Interval {
    const EMPTY: Interval = Interval { low: NONE, high: NONE };

    fn single(e: usize) -> Interval {
        Interval { low: e, high: e }
    }

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy)]
struct ConflictPair {
    id: usize,
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState {
    // oriented edge `e` runs from src[e] to dst[e]
    src: Vec<usize>,
    dst: Vec<usize>,
    height: Vec<usize>,
    parent_edge: Vec<usize>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    // outgoing oriented edges, later sorted by nesting depth
    out: Vec<Vec<usize>>,
    lowpt_edge: Vec<usize>,
    refs: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
    next_pair_id: usize,
}

pub fn is_planar_lr(g: &Graph) -> bool {
    let n = g.n();
    let m = g.edge_count();
    if n >= 3 && m > 3 * n - 6 {
        return false;
    }
    if n < 5 {
        return true;
    }

    // neighbor lists with undirected edge ids
    let mut nbrs: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, (u, v)) in g.edges().enumerate() {
        nbrs[u].push((v, id));
        nbrs[v].push((u, id));
    }

    let mut st = LrState {
        src: vec![NONE; m],
        dst: vec![NONE; m],
        height: vec![NONE; n],
        parent_edge: vec![NONE; n],
        lowpt: vec![0; m],
        lowpt2: vec![0; m],
        nesting_depth: vec![0; m],
        out: vec![Vec::new(); n],
        lowpt_edge: vec![NONE; m],
        refs: vec![NONE; m],
        stack_bottom: vec![NONE; m],
        stack: Vec::new(),
        next_pair_id: 0,
    };

    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v] == NONE {
            st.height[v] = 0;
            roots.push(v);
            st.orient(v, &nbrs);
        }
    }

    let depth = std::mem::take(&mut st.nesting_depth);
    for adj in st.out.iter_mut() {
        adj.sort_by_key(|&e| depth[e]);
    }

    roots.into_iter().all(|r| st.test(r))
}

impl LrState {
    fn orient(&mut self, v: usize, nbrs: &[Vec<(usize, usize)>]) {
        let e = self.parent_edge[v];
        for &(w, id) in &nbrs[v] {
            if self.src[id] != NONE {
                continue;
            }
            self.src[id] = v;
            self.dst[id] = w;
            self.out[v].push(id);
            self.lowpt[id] = self.height[v];
            self.lowpt2[id] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = id;
                self.height[w] = self.height[v] + 1;
                self.orient(w, nbrs);
            } else {
                self.lowpt[id] = self.height[w];
            }

            self.nesting_depth[id] = 2 * self.lowpt[id];
            if self.lowpt2[id] < self.height[v] {
                self.nesting_depth[id] += 1;
            }

            if e != NONE {
                if self.lowpt[id] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[id]);
                    self.lowpt[e] = self.lowpt[id];
                } else if self.lowpt[id] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[id]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[id]);
                }
            }
        }
    }

    fn top_id(&self) -> usize {
        self.stack.last().map_or(NONE, |p| p.id)
    }

    fn push_pair(&mut self, left: Interval, right: Interval) {
        let id = self.next_pair_id;
        self.next_pair_id += 1;
        self.stack.push(ConflictPair { id, left, right });
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        !i.is_empty() && self.lowpt[i.high] > self.lowpt[b]
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            self.lowpt[p.right.low]
        } else if p.right.is_empty() {
            self.lowpt[p.left.low]
        } else {
            self.lowpt[p.left.low].min(self.lowpt[p.right.low])
        }
    }

    fn test(&mut self, v: usize) -> bool {
        let e = self.parent_edge[v];
        let adj = self.out[v].clone();
        for (idx, &ei) in adj.iter().enumerate() {
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.top_id();
            if ei == self.parent_edge[w] {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.push_pair(Interval::EMPTY, Interval::single(ei));
            }

            if self.lowpt[ei] < self.height[v] {
                if idx == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if e != NONE {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair {
            id: NONE,
            left: Interval::EMPTY,
            right: Interval::EMPTY,
        };
        // merge return edges of ei into p.right
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low] = self.lowpt_edge[e];
            }
            if self.top_id() == self.stack_bottom[ei] {
                break;
            }
        }
        // merge conflicting return edges of earlier siblings into p.left
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if p.right.low != NONE {
                self.refs[p.right.low] = q.right.high;
            }
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.refs[p.left.low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.push_pair(p.left, p.right);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high] == u {
                p.left.high = self.refs[p.left.high];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refs[p.left.low] = p.right.low;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high] == u {
                p.right.high = self.refs[p.right.high];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refs[p.right.low] = p.left.low;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < self.height[u] {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.refs[e] = if hl != NONE && (hr == NONE || self.lowpt[hl] > self.lowpt[hr]) {
                    hl
                } else {
                    hr
                };
            }
        }
    }
}
