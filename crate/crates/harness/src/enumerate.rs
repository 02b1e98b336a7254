//! Isomorphism-class enumeration by vertex augmentation.
//!
//! Every graph on `k + 1` vertices is an augmentation of some graph on `k`
//! vertices, so level `k + 1` is obtained by attaching a new vertex to each
//! class representative of level `k` in every possible way and keeping one
//! graph per canonical code. Filters that are closed under taking a suitable
//! induced subgraph prune whole levels; the rest are applied at the end.

use std::fmt;

use cmgraph_core::graph::{
    canonical_code, chromatic_number, clique_number, graph_from_code, is_perfect, is_unmixed,
    maximal_cliques,
};
use cmgraph_core::{class_g_membership, Graph, VertexSet};
use rayon::prelude::*;
use serde::Serialize;

use crate::HarnessError;

/// Largest vertex count for unrestricted enumeration.
pub const N_MAX: usize = 9;
/// Largest vertex count when the ensemble is restricted to bipartite graphs.
pub const N_MAX_BIPARTITE: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "filter", content = "r")]
pub enum Filter {
    Connected,
    /// `χ ≤ r ≤ n`: the vertices split into exactly `r` nonempty independent parts.
    RPartite(usize),
    ClassG,
    /// Every maximal clique has exactly `r` vertices.
    MaxCliquesSize(usize),
    Unmixed,
    Perfect,
}

impl Filter {
    /// A necessary condition that every graph on the way to an accepted graph
    /// also satisfies.
    fn admits_prefix(self, g: &Graph) -> bool {
        match self {
            // deleting a non-cut vertex keeps a connected graph connected
            Filter::Connected => g.is_connected(),
            Filter::RPartite(r) => chromatic_number(g) <= r,
            Filter::MaxCliquesSize(r) => clique_number(g) <= r,
            Filter::Perfect => is_perfect(g),
            Filter::ClassG | Filter::Unmixed => true,
        }
    }

    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            Filter::Connected => g.is_connected(),
            Filter::RPartite(r) => r <= g.n() && chromatic_number(g) <= r,
            Filter::ClassG => class_g_membership(g).is_some(),
            Filter::MaxCliquesSize(r) => maximal_cliques(g).iter().all(|q| q.len() == r),
            Filter::Unmixed => is_unmixed(g),
            Filter::Perfect => is_perfect(g),
        }
    }
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::Connected => write!(f, "connected"),
            Filter::RPartite(r) => write!(f, "{r}-partite"),
            Filter::ClassG => write!(f, "class-G"),
            Filter::MaxCliquesSize(r) => write!(f, "max-cliques-{r}"),
            Filter::Unmixed => write!(f, "unmixed"),
            Filter::Perfect => write!(f, "perfect"),
        }
    }
}

/// Pairwise non-isomorphic graphs passing every filter, each in canonical
/// labeling, ordered by vertex count and then canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEnsemble {
    pub n_max: usize,
    pub filters: Vec<Filter>,
    pub graphs: Vec<Graph>,
}

impl GraphEnsemble {
    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn empty(filters: &[Filter]) -> Self {
        GraphEnsemble { n_max: 0, filters: filters.to_vec(), graphs: Vec::new() }
    }
}

/// Vertex bound for an ensemble with these filters.
pub fn vertex_bound(filters: &[Filter]) -> usize {
    if filters.iter().any(|f| matches!(f, Filter::RPartite(r) if *r <= 2)) {
        N_MAX_BIPARTITE
    } else {
        N_MAX
    }
}

fn check_bound(n: usize, filters: &[Filter]) -> Result<(), HarnessError> {
    let max = vertex_bound(filters);
    if n > max {
        return Err(HarnessError::TooManyVertices { n, max });
    }
    Ok(())
}

/// Canonical codes of the class representatives on `k` vertices, for
/// `k = 1..=n`, under the prefix filters.
fn levels(n: usize, filters: &[Filter], mut visit: impl FnMut(usize, &[u64])) {
    let connected = filters.contains(&Filter::Connected);
    let mut codes = vec![0u64];
    for k in 1..=n {
        if k > 1 {
            let prev = k - 1;
            let mut next: Vec<u64> = codes
                .par_iter()
                .flat_map_iter(|&code| {
                    let base = graph_from_code(prev, code);
                    let first = u64::from(connected);
                    (first..1u64 << prev).filter_map(move |mask| {
                        let g = base.with_vertex_added(VertexSet::from_mask(mask));
                        filters
                            .iter()
                            .all(|f| f.admits_prefix(&g))
                            .then(|| canonical_code(&g).expect("vertex bound checked"))
                    })
                })
                .collect();
            next.par_sort_unstable();
            next.dedup();
            codes = next;
        }
        visit(k, &codes);
    }
}

/// All isomorphism classes of graphs on exactly `n` vertices passing
/// `filters`.
pub fn enumerate_graphs(n: usize, filters: &[Filter]) -> Result<GraphEnsemble, HarnessError> {
    enumerate_range(n, n, filters)
}

/// All isomorphism classes on `1..=n_max` vertices passing `filters`.
pub fn enumerate_up_to(n_max: usize, filters: &[Filter]) -> Result<GraphEnsemble, HarnessError> {
    enumerate_range(1, n_max, filters)
}

fn enumerate_range(lo: usize, hi: usize, filters: &[Filter]) -> Result<GraphEnsemble, HarnessError> {
    check_bound(hi, filters)?;
    let mut graphs = Vec::new();
    if lo == 0 {
        let g = Graph::empty(0);
        if filters.iter().all(|f| f.accepts(&g)) {
            graphs.push(g);
        }
    }
    levels(hi, filters, |k, codes| {
        if k < lo {
            return;
        }
        let accepted: Vec<Graph> = codes
            .par_iter()
            .map(|&c| graph_from_code(k, c))
            .filter(|g| filters.iter().all(|f| f.accepts(g)))
            .collect();
        graphs.extend(accepted);
    });
    Ok(GraphEnsemble { n_max: hi, filters: filters.to_vec(), graphs })
}

/// Filters for the r-partite class-𝒢 ensembles with all maximal cliques of
/// size `r`.
pub fn class_g_filters(r: usize) -> Vec<Filter> {
    vec![Filter::RPartite(r), Filter::MaxCliquesSize(r), Filter::ClassG]
}
