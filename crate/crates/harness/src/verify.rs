//! Theorem checks over enumerated ensembles. A theorem that is proved must
//! come back with no counterexamples; anything else is a bug in a decider.

use cmgraph_core::complex::{is_shellable, DEFAULT_SHELLING_BUDGET};
use cmgraph_core::graph::{all_r_partitions, canonical_form, independence_number, is_unmixed};
use cmgraph_core::{
    class_g_membership, cm_graph, degree_r_minus_1_vertices, hh_bipartite_cm, independence_complex,
    pairwise_part_matchings, perfect_r_matchings, FieldSpec, Graph, ShellingOutcome,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{enumerate_up_to, Filter, GraphEnsemble};
use crate::HarnessError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub canon: String,
    pub edges: Vec<(usize, usize)>,
    pub diagnostic: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub theorem_id: String,
    pub graphs_checked: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl TheoremVerdict {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty()
    }
}

pub(crate) fn counterexample(g: &Graph, diagnostic: String) -> Counterexample {
    Counterexample {
        canon: canonical_form(g).expect("ensemble graphs are within the canonical bound"),
        edges: g.edges(),
        diagnostic,
    }
}

fn verdict<F>(theorem_id: String, graphs: &[Graph], check: F) -> TheoremVerdict
where
    F: Fn(&Graph) -> Option<String> + Sync,
{
    let counterexamples = graphs
        .par_iter()
        .filter_map(|g| check(g).map(|d| counterexample(g, d)))
        .collect();
    TheoremVerdict { theorem_id, graphs_checked: graphs.len(), counterexamples }
}

pub(crate) fn char_tag(field: FieldSpec) -> String {
    format!("char{}", field.characteristic())
}

/// Facts about one member of an r-partite class-𝒢 ensemble.
#[derive(Debug, Clone)]
pub(crate) struct CoverFacts {
    pub cm: bool,
    pub low_degree: Vec<usize>,
    /// Number of perfect r-matchings, capped at 2.
    pub matchings: usize,
}

impl CoverFacts {
    pub fn of(g: &Graph, r: usize, field: FieldSpec) -> Self {
        CoverFacts {
            cm: cm_graph(g, field).is_cm,
            low_degree: degree_r_minus_1_vertices(g, r),
            matchings: perfect_r_matchings(g, r, Some(2)).len(),
        }
    }

    pub fn main_theorem_violation(&self, r: usize, field: FieldSpec) -> Option<String> {
        (self.cm && self.low_degree.is_empty()).then(|| {
            format!(
                "Cohen-Macaulay in characteristic {} but no vertex has degree {}",
                field.characteristic(),
                r - 1
            )
        })
    }

    pub fn uniqueness_violation(&self, r: usize, field: FieldSpec) -> Option<String> {
        (self.cm && self.matchings != 1).then(|| {
            let count = if self.matchings == 0 { "no" } else { "several" };
            format!(
                "Cohen-Macaulay in characteristic {} but {count} perfect {r}-matchings",
                field.characteristic()
            )
        })
    }

    pub fn is_converse_counterexample(&self) -> bool {
        !self.cm && !self.low_degree.is_empty() && self.matchings == 1
    }
}

/// A CM member of an r-partite class-𝒢 ensemble whose maximal cliques all
/// have size `r` has a vertex of degree `r − 1`.
pub fn verify_main_theorem(ensemble: &GraphEnsemble, r: usize, field: FieldSpec) -> TheoremVerdict {
    verdict(format!("main_theorem/r{r}/{}", char_tag(field)), &ensemble.graphs, |g| {
        CoverFacts::of(g, r, field).main_theorem_violation(r, field)
    })
}

/// Same hypotheses: a CM member has exactly one perfect r-matching.
pub fn verify_uniqueness_corollary(
    ensemble: &GraphEnsemble,
    r: usize,
    field: FieldSpec,
) -> TheoremVerdict {
    verdict(format!("uniqueness_corollary/r{r}/{}", char_tag(field)), &ensemble.graphs, |g| {
        CoverFacts::of(g, r, field).uniqueness_violation(r, field)
    })
}

pub(crate) fn class_g_violation(g: &Graph) -> Option<String> {
    class_g_membership(g)
        .is_none()
        .then(|| format!("no cover by α = {} cliques", independence_number(g)))
}

/// r-partite, unmixed, perfect graphs with all maximal cliques of size `r`
/// lie in class 𝒢.
pub fn verify_proposition_class_g(ensemble: &GraphEnsemble) -> TheoremVerdict {
    verdict("proposition_class_g".into(), &ensemble.graphs, class_g_violation)
}

pub(crate) fn parts_violation(g: &Graph, r: usize) -> Option<String> {
    for p in all_r_partitions(g, r) {
        let sizes: Vec<usize> = p.blocks().iter().map(|b| b.len()).collect();
        if sizes.windows(2).any(|w| w[0] != w[1]) {
            return Some(format!("parts {:?} have sizes {sizes:?}", p.blocks()));
        }
        if !pairwise_part_matchings(g, p.blocks()).expect("partition is valid") {
            return Some(format!("parts {:?} are not pairwise perfectly matched", p.blocks()));
        }
    }
    None
}

/// In an r-partite unmixed graph whose maximal cliques all have size `r`,
/// every r-partition has equal parts, pairwise joined by perfect matchings.
pub fn verify_parts_equal_and_matched(ensemble: &GraphEnsemble, r: usize) -> TheoremVerdict {
    verdict(format!("parts_equal_and_matched/r{r}"), &ensemble.graphs, |g| parts_violation(g, r))
}

/// The three bipartite CM deciders and, on unmixed graphs, the
/// unique-perfect-matching characterization.
#[derive(Debug, Clone)]
pub(crate) struct BipartiteFacts {
    pub hh: bool,
    pub cm0: bool,
    pub cm2: bool,
    pub unmixed: bool,
    pub unique_matching: bool,
}

impl BipartiteFacts {
    pub fn of(g: &Graph) -> Self {
        let hh = hh_bipartite_cm(g).expect("ensemble is bipartite with n >= 2");
        if let Some(order) = &hh {
            assert!(order.verify(g), "ordering fails its own conditions");
        }
        BipartiteFacts {
            hh: hh.is_some(),
            cm0: cm_graph(g, FieldSpec::RATIONALS).is_cm,
            cm2: cm_graph(g, FieldSpec::GF2).is_cm,
            unmixed: is_unmixed(g),
            unique_matching: perfect_r_matchings(g, 2, Some(2)).len() == 1,
        }
    }

    pub fn agreement_violation(&self) -> Option<String> {
        (self.hh != self.cm0 || self.cm0 != self.cm2).then(|| {
            format!(
                "ordering criterion {}, characteristic 0 {}, characteristic 2 {}",
                self.hh, self.cm0, self.cm2
            )
        })
    }

    pub fn matching_violation(&self) -> Option<String> {
        (self.unmixed && self.cm0 != self.unique_matching).then(|| {
            format!(
                "unmixed, Cohen-Macaulay {} but unique perfect matching {}",
                self.cm0, self.unique_matching
            )
        })
    }
}

pub fn bipartite_ensemble(n_max: usize) -> Result<GraphEnsemble, HarnessError> {
    let mut e = enumerate_up_to(n_max, &[Filter::Connected, Filter::RPartite(2)])?;
    e.graphs.retain(|g| g.n() >= 2);
    Ok(e)
}

/// Over all connected bipartite graphs on at most `n_max` vertices.
pub fn verify_bipartite_equivalences(n_max: usize) -> Result<Vec<TheoremVerdict>, HarnessError> {
    let e = bipartite_ensemble(n_max)?;
    let facts: Vec<BipartiteFacts> = e.graphs.par_iter().map(BipartiteFacts::of).collect();
    let collect = |id: &str, f: &dyn Fn(&BipartiteFacts) -> Option<String>| TheoremVerdict {
        theorem_id: id.into(),
        graphs_checked: e.len(),
        counterexamples: e
            .graphs
            .iter()
            .zip(&facts)
            .filter_map(|(g, x)| f(x).map(|d| counterexample(g, d)))
            .collect(),
    };
    Ok(vec![
        collect("bipartite_criteria_agree", &BipartiteFacts::agreement_violation),
        collect("bipartite_unmixed_unique_matching", &BipartiteFacts::matching_violation),
    ])
}

/// CM implies unmixed; pure shellable implies CM; CM survives deleting a
/// closed neighborhood.
#[derive(Debug, Clone)]
pub(crate) struct ImplicationFacts {
    pub unmixed: bool,
    pub pure: bool,
    pub shelling: Option<ShellingOutcome>,
    /// `(field, CM of the graph, vertices whose closed-neighborhood deletion is not CM)`
    pub by_field: Vec<(FieldSpec, bool, Vec<usize>)>,
}

impl ImplicationFacts {
    pub fn of(g: &Graph, fields: &[FieldSpec]) -> Self {
        let delta = independence_complex(g);
        let pure = delta.is_pure();
        let shelling = pure.then(|| is_shellable(&delta, DEFAULT_SHELLING_BUDGET).expect("pure"));
        let by_field = fields
            .iter()
            .map(|&field| {
                let cm = cm_graph(g, field).is_cm;
                let bad = if cm {
                    g.vertices()
                        .iter()
                        .filter(|&v| {
                            let (h, _) = g.delete_closed_neighborhood(v).expect("v in range");
                            !cm_graph(&h, field).is_cm
                        })
                        .collect()
                } else {
                    Vec::new()
                };
                (field, cm, bad)
            })
            .collect();
        ImplicationFacts { unmixed: is_unmixed(g), pure, shelling, by_field }
    }

    /// `(theorem id, diagnostic)` for every failed implication.
    pub fn violations(&self) -> Vec<(String, String)> {
        let mut out = Vec::new();
        let shellable = matches!(self.shelling, Some(ShellingOutcome::Shellable(_)));
        for (field, cm, bad) in &self.by_field {
            let tag = char_tag(*field);
            if *cm && !self.unmixed {
                out.push((format!("cm_implies_unmixed/{tag}"), "Cohen-Macaulay but not unmixed".into()));
            }
            if self.pure && shellable && !cm {
                out.push((format!("shellable_implies_cm/{tag}"), "pure and shellable but not Cohen-Macaulay".into()));
            }
            if !bad.is_empty() {
                out.push((
                    format!("cm_closed_neighborhood_deletion/{tag}"),
                    format!("deleting the closed neighborhood of {bad:?} loses Cohen-Macaulayness"),
                ));
            }
        }
        out
    }

    pub fn theorem_ids(fields: &[FieldSpec]) -> Vec<String> {
        let mut ids = Vec::new();
        for &f in fields {
            let tag = char_tag(f);
            ids.push(format!("cm_implies_unmixed/{tag}"));
            ids.push(format!("shellable_implies_cm/{tag}"));
            ids.push(format!("cm_closed_neighborhood_deletion/{tag}"));
        }
        ids
    }
}

/// The implication suite over `ensemble`, one verdict per implication and
/// field.
pub fn verify_implications(ensemble: &GraphEnsemble, fields: &[FieldSpec]) -> Vec<TheoremVerdict> {
    let found: Vec<Vec<(String, String)>> = ensemble
        .graphs
        .par_iter()
        .map(|g| ImplicationFacts::of(g, fields).violations())
        .collect();
    ImplicationFacts::theorem_ids(fields)
        .into_iter()
        .map(|id| TheoremVerdict {
            counterexamples: ensemble
                .graphs
                .iter()
                .zip(&found)
                .flat_map(|(g, vs)| {
                    vs.iter().filter(|(t, _)| *t == id).map(|(_, d)| counterexample(g, d.clone()))
                })
                .collect(),
            theorem_id: id,
            graphs_checked: ensemble.len(),
        })
        .collect()
}

/// Members with a degree-(r−1) vertex and a unique perfect r-matching that
/// are nevertheless not CM over `field`.
pub fn converse_counterexample_search(
    ensemble: &GraphEnsemble,
    r: usize,
    field: FieldSpec,
) -> Vec<Graph> {
    ensemble
        .graphs
        .par_iter()
        .filter(|g| CoverFacts::of(g, r, field).is_converse_counterexample())
        .cloned()
        .collect()
}
