//! Lexicographic search primitives shared by the solver and the reductions.

use crate::bits;
use crate::graph::Graph;

/// `k`-subsets of `0..n` as ascending index vectors, in lexicographic order.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        KSubsets {
            n,
            current: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    /// The next subset, borrowed until the following call.
    pub fn next_subset(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        let k = self.current.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.current[i] < self.n - k + i {
                break;
            }
        }
        self.current[i] += 1;
        for j in i + 1..k {
            self.current[j] = self.current[j - 1] + 1;
        }
        Some(&self.current)
    }
}

/// Lexicographically first `k`-clique of `g`, if any.
pub fn first_clique(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if k > n {
        return None;
    }
    let mut chosen = Vec::with_capacity(k);
    let all: Vec<u64> = {
        let mut row = vec![0u64; g.row_words()];
        for v in 0..n {
            bits::set(&mut row, v);
        }
        row
    };
    if extend_clique(g, &all, k, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

fn extend_clique(g: &Graph, candidates: &[u64], k: usize, chosen: &mut Vec<usize>) -> bool {
    if chosen.len() == k {
        return true;
    }
    if bits::count(candidates) < k - chosen.len() {
        return false;
    }
    let mut rest = candidates.to_vec();
    for v in bits::ones(candidates) {
        bits::clear(&mut rest, v);
        if bits::count(&rest) + 1 < k - chosen.len() {
            return false;
        }
        let next: Vec<u64> = rest.iter().zip(g.row(v)).map(|(r, a)| r & a).collect();
        chosen.push(v);
        if extend_clique(g, &next, k, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Lexicographically first independent set of size `k`, if any.
pub fn first_independent_set(g: &Graph, k: usize) -> Option<Vec<usize>> {
    first_clique(&g.complement(), k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    #[test]
    fn subsets_in_lex_order() {
        let mut it = KSubsets::new(4, 2);
        let mut seen = Vec::new();
        while let Some(s) = it.next_subset() {
            seen.push(s.to_vec());
        }
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let mut empty = KSubsets::new(3, 0);
        assert_eq!(empty.next_subset(), Some(&[][..]));
        assert_eq!(empty.next_subset(), None);
        assert_eq!(KSubsets::new(2, 3).next_subset(), None);
    }

    #[test]
    fn cliques_and_independent_sets() {
        let c5 = cycle_graph(5);
        assert_eq!(first_clique(&c5, 2), Some(vec![0, 1]));
        assert_eq!(first_clique(&c5, 3), None);
        assert_eq!(first_independent_set(&c5, 2), Some(vec![0, 2]));
        assert_eq!(first_independent_set(&c5, 3), None);
        assert_eq!(first_clique(&complete_graph(6), 6), Some((0..6).collect()));
        assert_eq!(first_clique(&c5, 0), Some(vec![]));
        assert_eq!(first_independent_set(&petersen_graph(), 4).map(|s| s.len()), Some(4));
    }
}
