//! Decision procedure for `P(G, Π_G, Π, k)`: does `G ∈ Π_G` have `k`
//! vertices inducing a member of `Π`?
//!
//! Dispatch, first match wins:
//!
//! | case                         | shortcut                              | otherwise     |
//! |------------------------------|---------------------------------------|---------------|
//! | Π ∈ AA                       | `n ≥ R(k,k)` → Yes (clique or IS)     | search        |
//! | Π ∈ SS                       | `k ≥ R(c_Π, i_Π)` → No                | search        |
//! | Π_G ∈ SS                     | none (n is bounded)                   | search        |
//! | Π_G ∈ AS, Π ∈ SA             | `k ≥ R(c_Π, i_Π_G)` → No              | search        |
//! | Π_G ∈ SA, Π ∈ AS             | `k ≥ R(c_Π_G, i_Π)` → No              | search        |
//! | Π_G, Π ∈ AS                  | `n ≥ C(k+i_Π_G−2, k−1)` → Yes (clique) | search        |
//! | Π_G, Π ∈ SA                  | `n ≥ C(k+c_Π_G−2, k−1)` → Yes (IS)     | search        |
//! | Π_G ∈ AA, Π ∈ AS ∪ SA        | none: no cutoff is known here         | search        |
//!
//! `R` is always the binomial upper bound from [`crate::ramsey`]. Yes by
//! cutoff still returns a certificate: the guaranteed clique or independent
//! set is located by a dedicated search that never calls Π's recognizer.

mod sgi;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::properties::{PropertyClass, PropertyDescriptor, Recognizer};
use crate::ramsey::{fpt_size_cutoff, ramsey_upper_bound};
use crate::search::{first_clique, first_independent_set, KSubsets};

pub use sgi::{enumerate_k_vertex_graphs, induced_subgraph_isomorphism, solve_via_sgi, SGI_MAX_K};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Answer {
    Yes,
    No,
}

/// Which rule decided an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Branch {
    #[serde(rename = "ThmAS_SA_cutoff")]
    ThmAsSaCutoff,
    #[serde(rename = "ThmAS_SA_search")]
    ThmAsSaSearch,
    #[serde(rename = "ThmBoth_cutoff")]
    ThmBothCutoff,
    #[serde(rename = "ThmBoth_search")]
    ThmBothSearch,
    #[serde(rename = "ThmSS_search")]
    ThmSsSearch,
    #[serde(rename = "PiAA_cutoff")]
    PiAaCutoff,
    #[serde(rename = "PiAA_search")]
    PiAaSearch,
    #[serde(rename = "PiSS_cutoff")]
    PiSsCutoff,
    #[serde(rename = "PiSS_search")]
    PiSsSearch,
    GenericSearch,
}

impl Branch {
    pub fn is_cutoff(self) -> bool {
        matches!(
            self,
            Branch::ThmAsSaCutoff | Branch::ThmBothCutoff | Branch::PiAaCutoff | Branch::PiSsCutoff
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub answer: Answer,
    /// Present iff the answer is Yes; exactly `k` vertices.
    pub witness: Option<VertexSet>,
    pub branch: Branch,
    /// Number of times Π's recognizer ran.
    #[serde(rename = "membership_tests")]
    pub membership_tests: u64,
}

impl SolveOutcome {
    fn no(branch: Branch, membership_tests: u64) -> Self {
        SolveOutcome { answer: Answer::No, witness: None, branch, membership_tests }
    }

    fn from_search(found: Option<VertexSet>, branch: Branch, membership_tests: u64) -> Self {
        SolveOutcome {
            answer: if found.is_some() { Answer::Yes } else { Answer::No },
            witness: found,
            branch,
            membership_tests,
        }
    }
}

/// One query: `g`, promised to lie in `pi_g`, searched for `k` vertices
/// inducing a member of `pi`. `k > n(g)` is allowed and answers No.
#[derive(Clone, Copy, Debug)]
pub struct ProblemInstance<'a> {
    pub g: &'a Graph,
    pub pi_g: &'a PropertyDescriptor,
    pub pi: &'a PropertyDescriptor,
    pub k: usize,
}

/// Lexicographically first `k`-subset inducing a member of `pi`.
pub fn brute_force_search(g: &Graph, pi: &PropertyDescriptor, k: usize) -> Result<Option<VertexSet>> {
    Ok(search_counted(g, pi.recognizer()?, k).0)
}

fn search_counted(g: &Graph, test: Recognizer, k: usize) -> (Option<VertexSet>, u64) {
    let mut tests = 0;
    let mut subsets = KSubsets::new(g.n(), k);
    while let Some(s) = subsets.next_subset() {
        tests += 1;
        if test(&g.induced_unchecked(s)) {
            let w = VertexSet::from_indices(g.n(), s.iter().copied()).expect("in range");
            return (Some(w), tests);
        }
    }
    (None, tests)
}

pub(crate) enum Engine {
    BruteForce,
    SubgraphIsomorphism,
}

fn at_least(n: usize, bound: &BigUint) -> bool {
    BigUint::from(n) >= *bound
}

fn threshold(value: Option<u32>, what: &str, d: &PropertyDescriptor) -> Result<u64> {
    value
        .map(u64::from)
        .ok_or_else(|| Error::InvalidDescriptor(format!("{} (missing {what})", d.name)))
}

/// Decides the instance by the dispatch table in the module docs.
///
/// With `check_input_class`, `g` is first tested against `pi_g` (skipped for
/// generator-only classes that have no recognizer).
pub fn solve(instance: &ProblemInstance<'_>, check_input_class: bool) -> Result<SolveOutcome> {
    dispatch(instance, check_input_class, Engine::BruteForce)
}

pub(crate) fn dispatch(
    inst: &ProblemInstance<'_>,
    check_input_class: bool,
    engine: Engine,
) -> Result<SolveOutcome> {
    use PropertyClass::*;

    let ProblemInstance { g, pi_g, pi, k } = *inst;
    pi_g.validate()?;
    pi.validate()?;
    let test = pi.recognizer()?;
    if check_input_class {
        if let Some(member) = pi_g.membership {
            if !member(g) {
                return Err(Error::InputNotInClass(pi_g.name.clone()));
            }
        }
    }
    let n = g.n();
    if k > n {
        return Ok(SolveOutcome::no(Branch::GenericSearch, 0));
    }
    if k == 0 {
        let ok = test(&Graph::from_edges(0, [])?);
        let w = ok.then(|| VertexSet::new(n));
        return Ok(SolveOutcome::from_search(w, Branch::GenericSearch, 1));
    }

    let search = |branch: Branch| -> Result<SolveOutcome> {
        let (found, tests) = match engine {
            Engine::BruteForce => search_counted(g, test, k),
            Engine::SubgraphIsomorphism => sgi::search_by_patterns(g, test, k)?,
        };
        Ok(SolveOutcome::from_search(found, branch, tests))
    };
    let k64 = k as u64;

    match (pi.class_tag, pi_g.class_tag) {
        (AA, _) => {
            if at_least(n, &ramsey_upper_bound(k64, k64)?) {
                let clique = first_clique(g, k);
                let indep = first_independent_set(g, k);
                let w = match (clique, indep) {
                    (Some(a), Some(b)) => a.min(b),
                    (Some(a), None) | (None, Some(a)) => a,
                    (None, None) => {
                        return Err(Error::Internal(format!(
                            "{n} vertices but no {k}-clique or {k}-independent set"
                        )))
                    }
                };
                Ok(yes_by_cutoff(n, w, Branch::PiAaCutoff))
            } else {
                search(Branch::PiAaSearch)
            }
        }
        (SS, _) => {
            let bound = ramsey_upper_bound(threshold(pi.c_pi, "c_pi", pi)?, threshold(pi.i_pi, "i_pi", pi)?)?;
            if at_least(k, &bound) {
                Ok(SolveOutcome::no(Branch::PiSsCutoff, 0))
            } else {
                search(Branch::PiSsSearch)
            }
        }
        (_, SS) => search(Branch::ThmSsSearch),
        (SA, AS) | (AS, SA) => {
            let (c, i) = if pi.class_tag == SA {
                (threshold(pi.c_pi, "c_pi", pi)?, threshold(pi_g.i_pi, "i_pi", pi_g)?)
            } else {
                (threshold(pi_g.c_pi, "c_pi", pi_g)?, threshold(pi.i_pi, "i_pi", pi)?)
            };
            if at_least(k, &ramsey_upper_bound(c, i)?) {
                Ok(SolveOutcome::no(Branch::ThmAsSaCutoff, 0))
            } else {
                search(Branch::ThmAsSaSearch)
            }
        }
        (AS, AS) => {
            let i = threshold(pi_g.i_pi, "i_pi", pi_g)?;
            if at_least(n, &fpt_size_cutoff(k64, i)?) {
                let w = first_clique(g, k).ok_or_else(|| {
                    Error::Internal(format!("{n} vertices in `{}` but no {k}-clique", pi_g.name))
                })?;
                Ok(yes_by_cutoff(n, w, Branch::ThmBothCutoff))
            } else {
                search(Branch::ThmBothSearch)
            }
        }
        (SA, SA) => {
            let c = threshold(pi_g.c_pi, "c_pi", pi_g)?;
            if at_least(n, &fpt_size_cutoff(k64, c)?) {
                let w = first_independent_set(g, k).ok_or_else(|| {
                    Error::Internal(format!(
                        "{n} vertices in `{}` but no {k}-independent set",
                        pi_g.name
                    ))
                })?;
                Ok(yes_by_cutoff(n, w, Branch::ThmBothCutoff))
            } else {
                search(Branch::ThmBothSearch)
            }
        }
        (AS, AA) | (SA, AA) => search(Branch::GenericSearch),
    }
}

fn yes_by_cutoff(n: usize, witness: Vec<usize>, branch: Branch) -> SolveOutcome {
    SolveOutcome {
        answer: Answer::Yes,
        witness: Some(VertexSet::from_indices(n, witness).expect("in range")),
        branch,
        membership_tests: 0,
    }
}
