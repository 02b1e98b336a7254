//! Clique covers, basic clique covers and perfect r-matchings.

use serde::Serialize;

use crate::error::CoverError;
use crate::graph::{clique_number, independence_number, maximal_cliques, Graph, Partition};
use crate::VertexSet;

/// Pairwise-disjoint `r`-cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RMatching {
    pub r: usize,
    pub cliques: Vec<VertexSet>,
}

impl RMatching {
    pub fn covered(&self) -> VertexSet {
        self.cliques.iter().fold(VertexSet::EMPTY, |acc, &c| acc | c)
    }

    /// True iff the cliques cover every vertex of `g`.
    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.covered() == g.vertices()
    }

    /// Disjointness, clique-ness and size `r` of every member.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        self.cliques.iter().all(|&c| {
            let ok = c.len() == self.r && g.is_clique(c) && c.is_disjoint(seen);
            seen |= c;
            ok
        })
    }
}

/// Perfect `r`-matchings of `g` in lexicographic order, at most `limit` of
/// them. Exact-cover backtracking that always covers the smallest uncovered
/// vertex next.
pub fn perfect_r_matchings(g: &Graph, r: usize, limit: Option<usize>) -> Vec<RMatching> {
    fn cliques_through(
        g: &Graph,
        chosen: VertexSet,
        cand: VertexSet,
        need: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if need == 0 {
            out.push(chosen);
            return;
        }
        let mut rest = cand;
        while let Some(u) = rest.first() {
            if rest.len() < need {
                return;
            }
            rest.remove(u);
            cliques_through(g, chosen.with(u), rest & g.neighbors(u), need - 1, out);
        }
    }

    fn cover(
        g: &Graph,
        r: usize,
        uncovered: VertexSet,
        current: &mut Vec<VertexSet>,
        limit: usize,
        out: &mut Vec<RMatching>,
    ) {
        if out.len() >= limit {
            return;
        }
        let Some(v) = uncovered.first() else {
            out.push(RMatching { r, cliques: current.clone() });
            return;
        };
        let mut options = Vec::new();
        cliques_through(g, VertexSet::singleton(v), g.neighbors(v) & uncovered, r - 1, &mut options);
        for q in options {
            current.push(q);
            cover(g, r, uncovered - q, current, limit, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    if r == 0 || !g.n().is_multiple_of(r) {
        return out;
    }
    cover(g, r, g.vertices(), &mut Vec::new(), limit.unwrap_or(usize::MAX), &mut out);
    out
}

pub fn has_unique_perfect_r_matching(g: &Graph, r: usize) -> bool {
    perfect_r_matchings(g, r, Some(2)).len() == 1
}

/// Cliques whose union is the whole vertex set; members may overlap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CliqueCover {
    cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(g: &Graph, cliques: Vec<VertexSet>) -> Result<Self, CoverError> {
        let mut union = VertexSet::EMPTY;
        for &q in &cliques {
            if !q.is_subset(g.vertices()) {
                return Err(CoverError::OutOfRange(q));
            }
            if !g.is_clique(q) {
                return Err(CoverError::NotAClique(q));
            }
            union |= q;
        }
        let missing = g.vertices() - union;
        if !missing.is_empty() {
            return Err(CoverError::Uncovered(missing));
        }
        Ok(CliqueCover { cliques })
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }
}

/// Disjoint residual cliques `Q'_1 = Q_1`, `Q'_i = Q_i \ (Q_1 ∪ ... ∪ Q_{i−1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasicCover {
    pub cliques: Vec<VertexSet>,
    /// Number of residuals that came out empty and were left out.
    pub dropped_empty: usize,
}

pub fn basic_clique_cover(g: &Graph, cover: &[VertexSet]) -> Result<BasicCover, CoverError> {
    let cover = CliqueCover::new(g, cover.to_vec())?;
    let mut seen = VertexSet::EMPTY;
    let mut cliques = Vec::with_capacity(cover.len());
    let mut dropped_empty = 0;
    for &q in cover.cliques() {
        let residual = q - seen;
        seen |= q;
        if residual.is_empty() {
            dropped_empty += 1;
        } else {
            cliques.push(residual);
        }
    }
    Ok(BasicCover { cliques, dropped_empty })
}

/// A cover of `g` by exactly `α(g)` cliques, if one exists.
///
/// Any clique partition can be rearranged so the part holding the smallest
/// uncovered vertex is a maximal clique cut down to the uncovered vertices,
/// so only those candidates are branched on.
pub fn class_g_membership(g: &Graph) -> Option<CliqueCover> {
    fn search(
        maximal: &[VertexSet],
        omega: usize,
        budget: usize,
        uncovered: VertexSet,
        parts: &mut Vec<VertexSet>,
    ) -> bool {
        let Some(v) = uncovered.first() else {
            return true;
        };
        if parts.len() + uncovered.len().div_ceil(omega) > budget {
            return false;
        }
        let mut options: Vec<VertexSet> = maximal
            .iter()
            .filter(|q| q.contains(v))
            .map(|&q| q & uncovered)
            .collect();
        options.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        options.dedup();
        for q in options {
            parts.push(q);
            if search(maximal, omega, budget, uncovered - q, parts) {
                return true;
            }
            parts.pop();
        }
        false
    }

    let alpha = independence_number(g);
    let omega = clique_number(g).max(1);
    let maximal = maximal_cliques(g);
    let mut parts = Vec::with_capacity(alpha);
    if !search(&maximal, omega, alpha, g.vertices(), &mut parts) {
        return None;
    }
    // a clique cover never has fewer than α members
    debug_assert_eq!(parts.len(), alpha);
    parts.sort_unstable();
    Some(CliqueCover { cliques: parts })
}

/// Vertices of degree exactly `r − 1`.
pub fn degree_r_minus_1_vertices(g: &Graph, r: usize) -> Vec<usize> {
    if r == 0 {
        return Vec::new();
    }
    (1..=g.n()).filter(|&v| g.degree(v) == r - 1).collect()
}

/// Size of a maximum matching between `left` and `right` (augmenting paths).
pub fn bipartite_matching_size(g: &Graph, left: VertexSet, right: VertexSet) -> usize {
    fn augment(g: &Graph, u: usize, right: VertexSet, visited: &mut VertexSet, mate: &mut [usize]) -> bool {
        for w in g.neighbors(u) & right {
            if visited.contains(w) {
                continue;
            }
            visited.insert(w);
            if mate[w] == 0 || augment(g, mate[w], right, visited, mate) {
                mate[w] = u;
                return true;
            }
        }
        false
    }
    let mut mate = vec![0usize; g.n() + 1];
    left.iter()
        .filter(|&u| {
            let mut visited = VertexSet::EMPTY;
            augment(g, u, right, &mut visited, &mut mate)
        })
        .count()
}

/// True iff every two parts have equal size and a perfect matching between
/// them.
pub fn pairwise_part_matchings(g: &Graph, parts: &[VertexSet]) -> Result<bool, CoverError> {
    let parts = Partition::new(g, parts.to_vec())?;
    let blocks = parts.blocks();
    for (i, &a) in blocks.iter().enumerate() {
        for &b in &blocks[i + 1..] {
            if a.len() != b.len() || bipartite_matching_size(g, a, b) != a.len() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
