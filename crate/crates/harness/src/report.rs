//! Suites: one ensemble, a set of theorem checks, and a line-delimited JSON
//! report with one line per graph.

use std::collections::BTreeMap;
use std::io::{self, Write};

use cmgraph_core::graph::canonical_form;
use cmgraph_core::{FieldSpec, Graph};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumerate::{class_g_filters, enumerate_up_to, Filter, GraphEnsemble};
use crate::verify::{
    bipartite_ensemble, char_tag, class_g_violation, counterexample, parts_violation,
    BipartiteFacts, CoverFacts, ImplicationFacts, TheoremVerdict,
};
use crate::HarnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Degree-(r−1) vertex and unique perfect r-matching for CM members of
    /// the r-partite class-𝒢 ensemble.
    Main { r: usize },
    /// Class-𝒢 membership of r-partite unmixed perfect graphs.
    ClassG { r: usize },
    /// Equal, pairwise matched parts of r-partite unmixed graphs.
    Parts { r: usize },
    /// Connected bipartite graphs.
    Bipartite,
    /// All graphs.
    Implications,
    /// Non-CM members of the main ensemble that pass both necessary conditions.
    Converse { r: usize },
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Main { .. } => "main",
            Suite::ClassG { .. } => "class-g",
            Suite::Parts { .. } => "parts",
            Suite::Bipartite => "bipartite",
            Suite::Implications => "implications",
            Suite::Converse { .. } => "converse",
        }
    }

    pub fn r(self) -> Option<usize> {
        match self {
            Suite::Main { r } | Suite::ClassG { r } | Suite::Parts { r } | Suite::Converse { r } => Some(r),
            Suite::Bipartite | Suite::Implications => None,
        }
    }

    pub fn filters(self) -> Vec<Filter> {
        match self {
            Suite::Main { r } | Suite::Converse { r } => class_g_filters(r),
            Suite::ClassG { r } => vec![
                Filter::RPartite(r),
                Filter::MaxCliquesSize(r),
                Filter::Perfect,
                Filter::Unmixed,
            ],
            Suite::Parts { r } => vec![Filter::RPartite(r), Filter::MaxCliquesSize(r), Filter::Unmixed],
            Suite::Bipartite => vec![Filter::Connected, Filter::RPartite(2)],
            Suite::Implications => Vec::new(),
        }
    }
}

/// One line of a report file.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GraphReport {
    pub canon: String,
    pub properties: BTreeMap<String, Value>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub theorem: String,
    pub diagnostic: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteRun {
    pub suite: &'static str,
    pub r: Option<usize>,
    pub n_max: usize,
    pub filters: Vec<Filter>,
    pub graphs: usize,
    pub verdicts: Vec<TheoremVerdict>,
    #[serde(skip)]
    pub reports: Vec<GraphReport>,
}

impl SuiteRun {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(TheoremVerdict::holds)
    }

    /// The report as line-delimited JSON.
    pub fn write_jsonl(&self, mut out: impl Write) -> io::Result<()> {
        for line in &self.reports {
            serde_json::to_writer(&mut out, line)?;
            out.write_all(b"\n")?;
        }
        Ok(())
    }
}

fn edges_value(g: &Graph) -> Value {
    json!(g.edges())
}

/// Per graph: properties plus `(theorem, diagnostic)` failures.
type Evaluation = (BTreeMap<String, Value>, Vec<(String, String)>);

fn evaluate(suite: Suite, g: &Graph, fields: &[FieldSpec]) -> Evaluation {
    let mut props = BTreeMap::new();
    props.insert("n".into(), json!(g.n()));
    props.insert("edges".into(), edges_value(g));
    let mut bad = Vec::new();
    match suite {
        Suite::Main { r } | Suite::Converse { r } => {
            let mut cm = BTreeMap::new();
            let mut converse = BTreeMap::new();
            for &field in fields {
                let f = CoverFacts::of(g, r, field);
                let tag = char_tag(field);
                if !props.contains_key("degree_r_minus_1") {
                    props.insert("degree_r_minus_1".into(), json!(f.low_degree));
                    props.insert("unique_perfect_r_matching".into(), json!(f.matchings == 1));
                }
                cm.insert(field.characteristic().to_string(), json!(f.cm));
                converse.insert(field.characteristic().to_string(), json!(f.is_converse_counterexample()));
                if matches!(suite, Suite::Main { .. }) {
                    if let Some(d) = f.main_theorem_violation(r, field) {
                        bad.push((format!("main_theorem/r{r}/{tag}"), d));
                    }
                    if let Some(d) = f.uniqueness_violation(r, field) {
                        bad.push((format!("uniqueness_corollary/r{r}/{tag}"), d));
                    }
                }
            }
            props.insert("cm".into(), json!(cm));
            props.insert("converse_candidate".into(), json!(converse));
        }
        Suite::ClassG { .. } => {
            let violation = class_g_violation(g);
            props.insert("class_g".into(), json!(violation.is_none()));
            bad.extend(violation.map(|d| ("proposition_class_g".to_string(), d)));
        }
        Suite::Parts { r } => {
            let violation = parts_violation(g, r);
            props.insert("parts_equal_and_matched".into(), json!(violation.is_none()));
            bad.extend(violation.map(|d| (format!("parts_equal_and_matched/r{r}"), d)));
        }
        Suite::Bipartite => {
            let f = BipartiteFacts::of(g);
            props.insert("ordering_criterion".into(), json!(f.hh));
            props.insert("cm".into(), json!({"0": f.cm0, "2": f.cm2}));
            props.insert("unmixed".into(), json!(f.unmixed));
            props.insert("unique_perfect_2_matching".into(), json!(f.unique_matching));
            bad.extend(f.agreement_violation().map(|d| ("bipartite_criteria_agree".to_string(), d)));
            bad.extend(f.matching_violation().map(|d| ("bipartite_unmixed_unique_matching".to_string(), d)));
        }
        Suite::Implications => {
            let f = ImplicationFacts::of(g, fields);
            props.insert("unmixed".into(), json!(f.unmixed));
            props.insert("pure".into(), json!(f.pure));
            props.insert("shelling".into(), json!(f.shelling.as_ref().map(|s| match s {
                cmgraph_core::ShellingOutcome::Shellable(_) => "shellable",
                cmgraph_core::ShellingOutcome::NotShellable => "not_shellable",
                cmgraph_core::ShellingOutcome::BudgetExhausted => "budget_exhausted",
            })));
            let cm: BTreeMap<String, bool> =
                f.by_field.iter().map(|(field, cm, _)| (field.characteristic().to_string(), *cm)).collect();
            props.insert("cm".into(), json!(cm));
            bad = f.violations();
        }
    }
    (props, bad)
}

fn theorem_ids(suite: Suite, fields: &[FieldSpec]) -> Vec<String> {
    match suite {
        Suite::Main { r } => fields
            .iter()
            .flat_map(|&f| {
                let tag = char_tag(f);
                [format!("main_theorem/r{r}/{tag}"), format!("uniqueness_corollary/r{r}/{tag}")]
            })
            .collect(),
        Suite::ClassG { .. } => vec!["proposition_class_g".into()],
        Suite::Parts { r } => vec![format!("parts_equal_and_matched/r{r}")],
        Suite::Bipartite => {
            vec!["bipartite_criteria_agree".into(), "bipartite_unmixed_unique_matching".into()]
        }
        Suite::Implications => ImplicationFacts::theorem_ids(fields),
        Suite::Converse { .. } => Vec::new(),
    }
}

pub fn suite_ensemble(suite: Suite, n_max: usize) -> Result<GraphEnsemble, HarnessError> {
    match suite {
        Suite::Bipartite => bipartite_ensemble(n_max),
        _ => enumerate_up_to(n_max, &suite.filters()),
    }
}

/// Runs `suite` over graphs on at most `n_max` vertices. CM-dependent checks
/// are repeated for each of `fields`. Reports are in canonical-form order
/// regardless of scheduling; the converse suite reports only its findings.
pub fn run_suite(suite: Suite, n_max: usize, fields: &[FieldSpec]) -> Result<SuiteRun, HarnessError> {
    if suite.r() == Some(0) {
        return Err(HarnessError::ZeroR);
    }
    let ensemble = suite_ensemble(suite, n_max)?;
    let evaluated: Vec<Evaluation> =
        ensemble.graphs.par_iter().map(|g| evaluate(suite, g, fields)).collect();

    let verdicts = theorem_ids(suite, fields)
        .into_iter()
        .map(|id| TheoremVerdict {
            counterexamples: ensemble
                .graphs
                .iter()
                .zip(&evaluated)
                .flat_map(|(g, (_, bad))| {
                    bad.iter().filter(|(t, _)| *t == id).map(|(_, d)| counterexample(g, d.clone()))
                })
                .collect(),
            theorem_id: id,
            graphs_checked: ensemble.len(),
        })
        .collect();

    let reports = ensemble
        .graphs
        .iter()
        .zip(evaluated)
        .filter(|(_, (props, _))| {
            !matches!(suite, Suite::Converse { .. })
                || props["converse_candidate"].as_object().is_some_and(|m| m.values().any(|v| v == true))
        })
        .map(|(g, (properties, bad))| GraphReport {
            canon: canonical_form(g).expect("ensemble graphs are within the canonical bound"),
            properties,
            violations: bad
                .into_iter()
                .map(|(theorem, diagnostic)| Violation { theorem, diagnostic })
                .collect(),
        })
        .collect();

    Ok(SuiteRun {
        suite: suite.name(),
        r: suite.r(),
        n_max,
        filters: ensemble.filters.clone(),
        graphs: ensemble.len(),
        verdicts,
        reports,
    })
}
