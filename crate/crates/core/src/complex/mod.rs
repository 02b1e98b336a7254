//! Simplicial complexes stored by their facets.

mod shelling;

use std::collections::HashSet;

use serde::Serialize;

pub use shelling::{
    is_shellable, verify_shelling_order, ShellingOutcome, DEFAULT_SHELLING_BUDGET,
};

use crate::error::{ComplexError, ParseError};
use crate::graph::{content_lines, maximal_independent_sets, parse_ints, Graph};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simplicial complex on vertices `1..=n`, kept as its inclusion-maximal
/// faces in lexicographic order.
///
/// Complexes built with [`SimplicialComplex::new`] use every vertex. Links
/// keep the labels of the ambient complex and only use the vertices that
/// appear in their facets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VertexSet>,
}

/// Face counts by dimension, starting at dimension −1 (the empty face).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// Number of faces of dimension `d` (`d >= -1`).
    pub fn get(&self, d: isize) -> usize {
        self.0.get((d + 1) as usize).copied().unwrap_or(0)
    }

    /// −1 + f_0 − f_1 + f_2 − ..., the reduced Euler characteristic.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { -(f as i64) } else { f as i64 })
            .sum()
    }
}

fn maximal_only(mut faces: Vec<VertexSet>) -> Vec<VertexSet> {
    faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.len()));
    faces.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

impl SimplicialComplex {
    /// The complex generated by `faces` on `1..=n`. Non-maximal generators are
    /// dropped; every vertex must lie in some face.
    pub fn new(n: usize, faces: Vec<VertexSet>) -> Result<Self, ComplexError> {
        if n > MAX_VERTICES {
            return Err(ComplexError::VertexOutOfRange(VertexSet::EMPTY, n));
        }
        let all = VertexSet::full(n);
        if let Some(&bad) = faces.iter().find(|f| !f.is_subset(all)) {
            return Err(ComplexError::VertexOutOfRange(bad, n));
        }
        let c = Self::generated_by(n, faces);
        let used = c.vertex_set();
        if let Some(v) = (all - used).first() {
            return Err(ComplexError::UncoveredVertex(v));
        }
        Ok(c)
    }

    /// Like [`new`](Self::new) without the vertex-coverage requirement. With
    /// no generators the result is the complex `{∅}`.
    pub(crate) fn generated_by(n: usize, faces: Vec<VertexSet>) -> Self {
        let mut facets = maximal_only(faces);
        if facets.is_empty() {
            facets.push(VertexSet::EMPTY);
        }
        SimplicialComplex { n, facets }
    }

    /// The full simplex on `1..=n`.
    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VertexSet::full(n)],
        }
    }

    /// All proper faces of the simplex on `1..=n`, a sphere of dimension `n − 2`.
    pub fn simplex_boundary(n: usize) -> Self {
        assert!(n >= 2);
        let all = VertexSet::full(n);
        Self::generated_by(n, all.iter().map(|v| all.without(v)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, &f| acc | f)
    }

    /// Largest face dimension; −1 for `{∅}`.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, face: VertexSet) -> bool {
        self.facets.iter().any(|&f| face.is_subset(f))
    }

    /// Faces grouped by dimension: entry `d + 1` holds the `d`-faces in
    /// lexicographic order.
    pub fn faces_by_dimension(&self) -> Vec<Vec<VertexSet>> {
        let top = (self.dimension() + 1) as usize;
        let mut sets: Vec<HashSet<VertexSet>> = vec![HashSet::new(); top + 1];
        for &f in &self.facets {
            for s in f.subsets() {
                sets[s.len()].insert(s);
            }
        }
        sets.into_iter()
            .map(|s| {
                let mut v: Vec<VertexSet> = s.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces_by_dimension().iter().map(Vec::len).collect())
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, face: VertexSet) -> Result<SimplicialComplex, ComplexError> {
        let facets: Vec<VertexSet> = self
            .facets
            .iter()
            .filter(|&&f| face.is_subset(f))
            .map(|&f| f - face)
            .collect();
        if facets.is_empty() {
            return Err(ComplexError::NotAFace(face));
        }
        // the residues of distinct facets are already incomparable
        let mut facets = facets;
        facets.sort_unstable();
        Ok(SimplicialComplex { n: self.n, facets })
    }

    /// Minimal non-faces, i.e. the supports of the squarefree monomials
    /// generating the Stanley–Reisner ideal, in lexicographic order.
    pub fn stanley_reisner_generators(&self) -> Vec<VertexSet> {
        let faces = self.faces_by_dimension();
        let face_set: HashSet<VertexSet> = faces.iter().flatten().copied().collect();
        let all = VertexSet::full(self.n);
        let mut out = Vec::new();
        for level in &faces {
            for &f in level {
                let above = f.last().unwrap_or(0);
                for v in (all - f).iter().filter(|&v| v > above) {
                    let s = f.with(v);
                    if !face_set.contains(&s) && s.iter().all(|u| face_set.contains(&s.without(u))) {
                        out.push(s);
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Serializes as a header `n k` followed by one facet per line.
    pub fn to_text(&self) -> String {
        let facets: Vec<&VertexSet> = self.facets.iter().filter(|f| !f.is_empty()).collect();
        let mut out = format!("{} {}\n", self.n, facets.len());
        for f in facets {
            let line: Vec<String> = f.iter().map(|v| v.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the facet-list format written by [`to_text`](Self::to_text).
    pub fn parse(text: &str) -> Result<SimplicialComplex, ParseError> {
        let (n, facets) = parse_vertex_sets(text)?;
        if n > 0 && facets.is_empty() {
            return Err(ComplexError::NoFacets(n).into());
        }
        Ok(SimplicialComplex::new(n, facets)?)
    }
}

/// Reads a header `n k` followed by `k` records of vertices in `1..=n`, in
/// file order and without any reduction.
pub fn parse_vertex_sets(text: &str) -> Result<(usize, Vec<VertexSet>), ParseError> {
    let mut records = content_lines(text);
    let (hline, header) = records.next().ok_or(ParseError::MissingHeader)?;
    let [n, k] = parse_ints::<2>(header, hline)?;
    if n > MAX_VERTICES {
        return Err(ParseError::TooManyVertices(n));
    }
    let mut sets = Vec::with_capacity(k);
    for (line, rec) in records {
        let mut set = VertexSet::EMPTY;
        for field in rec.split_whitespace() {
            let v: usize = field.parse().map_err(|_| ParseError::Malformed {
                line,
                msg: format!("not a nonnegative integer: {field:?}"),
            })?;
            if !(1..=n).contains(&v) {
                return Err(ParseError::VertexOutOfRange { line, vertex: v, n });
            }
            set.insert(v);
        }
        sets.push(set);
    }
    if sets.len() != k {
        return Err(ParseError::CountMismatch { expected: k, found: sets.len() });
    }
    Ok((n, sets))
}

/// The complex of independent sets of `g`, whose Stanley–Reisner ideal is the
/// edge ideal of `g`.
pub fn independence_complex(g: &Graph) -> SimplicialComplex {
    SimplicialComplex {
        n: g.n(),
        facets: maximal_independent_sets(g),
    }
}
