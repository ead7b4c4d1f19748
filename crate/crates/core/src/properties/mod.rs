//! Hereditary property recognizers and the descriptors the solver and the
//! reductions consume.

mod planarity;

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use planarity::is_planar_lr;

/// Position of a hereditary property relative to cliques (first letter) and
/// independent sets (second letter): includes All or excludes Some.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PropertyClass {
    AA,
    AS,
    SA,
    SS,
}

impl fmt::Display for PropertyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub type Recognizer = fn(&Graph) -> bool;

/// A hereditary property with the constants the algorithms need.
#[derive(Clone, Serialize)]
pub struct PropertyDescriptor {
    pub name: String,
    #[serde(skip)]
    pub membership: Option<Recognizer>,
    #[serde(rename = "class")]
    pub class_tag: PropertyClass,
    /// Smallest independent set not in the property.
    pub i_pi: Option<u32>,
    /// Smallest clique not in the property.
    pub c_pi: Option<u32>,
    /// Largest chromatic number of a member, when bounded.
    pub chi_pi: Option<u32>,
    /// `G ⊠ K_c` is a member whenever `G` is.
    pub closed_under_strong_clique_product: bool,
    /// `G + K_c` is a member whenever `G` is.
    pub closed_under_join_with_cliques: bool,
    pub contains_all_disjoint_unions_of_k_chi: bool,
    #[serde(rename = "contains_is_join_cliques")]
    pub contains_is_join_cliques: bool,
}

impl fmt::Debug for PropertyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PropertyDescriptor")
            .field("name", &self.name)
            .field("class", &self.class_tag)
            .field("i_pi", &self.i_pi)
            .field("c_pi", &self.c_pi)
            .field("chi_pi", &self.chi_pi)
            .finish_non_exhaustive()
    }
}

impl PropertyDescriptor {
    /// Descriptor with the class tag implied by which thresholds are present
    /// and every closure flag off.
    pub fn new(name: &str, membership: Option<Recognizer>, i_pi: Option<u32>, c_pi: Option<u32>) -> Self {
        let class_tag = match (c_pi.is_some(), i_pi.is_some()) {
            (false, false) => PropertyClass::AA,
            (false, true) => PropertyClass::AS,
            (true, false) => PropertyClass::SA,
            (true, true) => PropertyClass::SS,
        };
        PropertyDescriptor {
            name: name.to_string(),
            membership,
            class_tag,
            i_pi,
            c_pi,
            chi_pi: None,
            closed_under_strong_clique_product: false,
            closed_under_join_with_cliques: false,
            contains_all_disjoint_unions_of_k_chi: false,
            contains_is_join_cliques: false,
        }
    }

    fn with_chi(mut self, chi: u32) -> Self {
        self.chi_pi = Some(chi);
        self
    }

    /// Checks that the class tag matches which of `i_pi`/`c_pi` are present
    /// and that the thresholds are positive.
    pub fn validate(&self) -> Result<()> {
        let expected = match (self.c_pi.is_some(), self.i_pi.is_some()) {
            (false, false) => PropertyClass::AA,
            (false, true) => PropertyClass::AS,
            (true, false) => PropertyClass::SA,
            (true, true) => PropertyClass::SS,
        };
        let positive = [self.i_pi, self.c_pi, self.chi_pi]
            .iter()
            .all(|x| x.is_none_or(|v| v >= 1));
        if expected == self.class_tag && positive {
            Ok(())
        } else {
            Err(Error::InvalidDescriptor(self.name.clone()))
        }
    }

    pub fn has_recognizer(&self) -> bool {
        self.membership.is_some()
    }

    /// The membership test, or an error for generator-only classes.
    pub fn recognizer(&self) -> Result<Recognizer> {
        self.membership.ok_or_else(|| {
            Error::InvalidArgument(format!("`{}` has no membership test", self.name))
        })
    }

    pub fn accepts(&self, g: &Graph) -> Result<bool> {
        Ok(self.recognizer()?(g))
    }
}

pub fn is_independent_set(g: &Graph) -> bool {
    g.edge_count() == 0
}

pub fn is_clique(g: &Graph) -> bool {
    let n = g.n();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s] != u8::MAX {
            continue;
        }
        side[s] = 0;
        queue.push_back(s);
        while let Some(v) = queue.pop_front() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_triangle_free(g: &Graph) -> bool {
    g.edges().all(|(u, v)| !bits::intersects(g.row(u), g.row(v)))
}

pub fn is_forest(g: &Graph) -> bool {
    let n = g.n();
    if g.edge_count() >= n.max(1) {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (u, v) in g.edges() {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// Planarity via the left-right test; dense graphs are rejected by the
/// Euler bound `m ≤ 3n − 6` first.
pub fn is_planar(g: &Graph) -> bool {
    is_planar_lr(g)
}

pub fn is_co_bipartite(g: &Graph) -> bool {
    is_bipartite(&g.complement())
}

/// No induced 4-cycle: no nonadjacent pair `u, w` whose common
/// neighborhood contains a nonadjacent pair.
pub fn is_c4_free(g: &Graph) -> bool {
    let n = g.n();
    let mut common = vec![0u64; g.row_words()];
    for u in 0..n {
        for w in u + 1..n {
            if g.has_edge(u, w) {
                continue;
            }
            for (c, (a, b)) in common.iter_mut().zip(g.row(u).iter().zip(g.row(w))) {
                *c = a & b;
            }
            if bits::count(&common) < 2 {
                continue;
            }
            for x in bits::ones(&common) {
                // a member of `common` other than x that x misses
                let missed = bits::count(&common) - 1 - bits::and_count(&common, g.row(x));
                if missed > 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// No vertex with four pairwise nonadjacent neighbors.
pub fn is_k14_free(g: &Graph) -> bool {
    (0..g.n()).all(|v| g.degree(v) < 4 || !has_independent_set_within(g, g.row(v), 4))
}

fn has_independent_set_within(g: &Graph, candidates: &[u64], size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if bits::count(candidates) < size {
        return false;
    }
    let mut rest = candidates.to_vec();
    for v in bits::ones(candidates) {
        bits::clear(&mut rest, v);
        let next: Vec<u64> = rest.iter().zip(g.row(v)).map(|(r, a)| r & !a).collect();
        if has_independent_set_within(g, &next, size - 1) {
            return true;
        }
    }
    false
}

/// The built-in registry. `unit-disk` carries no recognizer: its members
/// come only from the geometric generator.
pub fn builtin_descriptors() -> Vec<PropertyDescriptor> {
    let mut is = PropertyDescriptor::new("is", Some(is_independent_set), None, Some(2)).with_chi(1);
    is.contains_all_disjoint_unions_of_k_chi = true;

    let mut clique = PropertyDescriptor::new("clique", Some(is_clique), Some(2), None);
    clique.closed_under_strong_clique_product = true;
    clique.closed_under_join_with_cliques = true;

    let mut bipartite = PropertyDescriptor::new("bipartite", Some(is_bipartite), None, Some(3)).with_chi(2);
    bipartite.contains_all_disjoint_unions_of_k_chi = true;
    bipartite.contains_is_join_cliques = true;

    let triangle_free = PropertyDescriptor::new("triangle-free", Some(is_triangle_free), None, Some(3));

    let mut forest = PropertyDescriptor::new("forest", Some(is_forest), None, Some(3)).with_chi(2);
    forest.contains_all_disjoint_unions_of_k_chi = true;

    let mut planar = PropertyDescriptor::new("planar", Some(is_planar), None, Some(5)).with_chi(4);
    planar.contains_all_disjoint_unions_of_k_chi = true;

    let mut co_bipartite = PropertyDescriptor::new("co-bipartite", Some(is_co_bipartite), Some(3), None);
    co_bipartite.closed_under_strong_clique_product = true;
    co_bipartite.closed_under_join_with_cliques = true;

    let mut c4_free = PropertyDescriptor::new("c4-free", Some(is_c4_free), None, None);
    c4_free.closed_under_strong_clique_product = true;
    c4_free.closed_under_join_with_cliques = true;

    let mut k14_free = PropertyDescriptor::new("k14-free", Some(is_k14_free), None, None);
    k14_free.closed_under_strong_clique_product = true;

    let mut unit_disk = PropertyDescriptor::new("unit-disk", None, None, None);
    unit_disk.closed_under_strong_clique_product = true;

    vec![
        is,
        clique,
        bipartite,
        triangle_free,
        forest,
        planar,
        co_bipartite,
        c4_free,
        k14_free,
        unit_disk,
    ]
}

/// Built-in descriptor by its CLI name.
pub fn lookup(name: &str) -> Result<PropertyDescriptor> {
    builtin_descriptors()
        .into_iter()
        .find(|d| d.name == name)
        .ok_or_else(|| Error::UnknownProperty(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::*;

    fn star(leaves: usize) -> Graph {
        complete_bipartite(1, leaves)
    }

    #[test]
    fn simple_recognizers() {
        assert!(is_independent_set(&edgeless_graph(5)));
        assert!(!is_independent_set(&complete_graph(2)));
        assert!(is_independent_set(&edgeless_graph(0)));

        assert!(is_clique(&complete_graph(4)));
        assert!(!is_clique(&path_graph(3)));
        assert!(is_clique(&complete_graph(1)));

        assert!(is_bipartite(&cycle_graph(4)));
        assert!(!is_bipartite(&cycle_graph(5)));
        assert!(is_bipartite(&edgeless_graph(3)));

        assert!(is_triangle_free(&cycle_graph(5)));
        assert!(!is_triangle_free(&complete_graph(3)));
        assert!(is_triangle_free(&complete_bipartite(2, 3)));

        assert!(is_forest(&path_graph(4)));
        assert!(!is_forest(&cycle_graph(4)));
        assert!(is_forest(&edgeless_graph(0)));
        assert!(is_forest(&path_graph(2).disjoint_union(&path_graph(3))));
        assert!(!is_forest(&complete_graph(3).disjoint_union(&edgeless_graph(4))));
    }

    #[test]
    fn planar_cases() {
        assert!(is_planar(&complete_graph(4)));
        assert!(!is_planar(&complete_graph(5)));
        assert!(!is_planar(&complete_bipartite(3, 3)));
        assert!(!is_planar(&petersen_graph()));
        assert!(is_planar(&cycle_graph(40)));
        assert!(is_planar(&disjoint_cliques(6, 4)));
        // K5 minus an edge is planar
        let mut k5e = GraphBuilder::new(5);
        for (u, v) in complete_graph(5).edges().skip(1) {
            k5e.add_edge(u, v).unwrap();
        }
        assert!(is_planar(&k5e.build()));
    }

    #[test]
    fn co_bipartite_cases() {
        assert!(is_co_bipartite(&complete_graph(5)));
        assert!(!is_co_bipartite(&edgeless_graph(3)));
        assert!(is_co_bipartite(&cycle_graph(4)));
    }

    #[test]
    fn c4_and_claw_like() {
        assert!(!is_c4_free(&cycle_graph(4)));
        assert!(is_c4_free(&complete_graph(4)));
        assert!(is_c4_free(&cycle_graph(5)));
        assert!(!is_c4_free(&complete_bipartite(2, 3)));

        assert!(!is_k14_free(&star(4)));
        assert!(is_k14_free(&star(3)));
        assert!(is_k14_free(&complete_graph(5)));
        assert!(is_k14_free(&cycle_graph(6)));
    }

    #[test]
    fn registry_constants() {
        let d = builtin_descriptors();
        assert_eq!(d.len(), 10);
        for desc in &d {
            desc.validate().unwrap();
        }
        let bip = lookup("bipartite").unwrap();
        assert_eq!((bip.class_tag, bip.c_pi, bip.chi_pi), (PropertyClass::SA, Some(3), Some(2)));
        assert!(bip.contains_all_disjoint_unions_of_k_chi && bip.contains_is_join_cliques);
        let planar = lookup("planar").unwrap();
        assert_eq!((planar.c_pi, planar.chi_pi), (Some(5), Some(4)));
        let cob = lookup("co-bipartite").unwrap();
        assert_eq!((cob.class_tag, cob.i_pi), (PropertyClass::AS, Some(3)));
        assert_eq!(lookup("c4-free").unwrap().class_tag, PropertyClass::AA);
        assert!(!lookup("unit-disk").unwrap().has_recognizer());
        assert_eq!(lookup("nope").unwrap_err(), Error::UnknownProperty("nope".into()));
    }

    #[test]
    fn descriptor_validation_rejects_mismatch() {
        let mut d = lookup("bipartite").unwrap();
        d.class_tag = PropertyClass::AS;
        assert_eq!(d.validate(), Err(Error::InvalidDescriptor("bipartite".into())));
        let mut z = lookup("clique").unwrap();
        z.i_pi = Some(0);
        assert!(z.validate().is_err());
    }

    #[test]
    fn empty_graph_is_in_every_builtin() {
        for d in builtin_descriptors().iter().filter(|d| d.has_recognizer()) {
            assert!(d.accepts(&edgeless_graph(0)).unwrap(), "{}", d.name);
        }
    }
}
