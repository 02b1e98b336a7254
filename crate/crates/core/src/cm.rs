//! Cohen–Macaulay deciders: Reisner's homological criterion over a chosen
//! field, and the Herzog–Hibi ordering criterion for bipartite graphs.

use serde::Serialize;

use crate::complex::{independence_complex, SimplicialComplex};
use crate::error::CmError;
use crate::graph::Graph;
use crate::homology::{reduced_betti, FieldSpec};
use crate::VertexSet;

/// A face whose link has nonvanishing reduced homology below its dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub face: VertexSet,
    pub index: isize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CMReport {
    #[serde(rename = "characteristic")]
    pub field: FieldSpec,
    pub is_cm: bool,
    pub witness: Option<Witness>,
}

/// Index of the first nonzero `b̃_i(link)` with `i < dim(link)`, if any.
fn first_low_homology(link: &SimplicialComplex, field: FieldSpec) -> Option<isize> {
    let dim = link.dimension();
    match dim {
        // b̃_{-1} of a nonempty complex is zero; nothing below dimension -1
        ..=0 => None,
        // only b̃_{-1} and b̃_0: connectivity of the 1-skeleton
        1 => (one_skeleton_components(link) > 1).then_some(0),
        _ => {
            let betti = reduced_betti(link, field);
            (-1..dim).find(|&i| betti.get(i) != 0)
        }
    }
}

fn one_skeleton_components(c: &SimplicialComplex) -> usize {
    let mut comps: Vec<VertexSet> = Vec::new();
    for &f in c.facets() {
        let (touching, rest): (Vec<VertexSet>, Vec<VertexSet>) =
            comps.into_iter().partition(|k| !k.is_disjoint(f));
        let merged = touching.into_iter().fold(f, |acc, k| acc | k);
        comps = rest;
        comps.push(merged);
    }
    comps.len()
}

/// Reisner's criterion: Δ is Cohen–Macaulay over `field` iff for every face
/// `F` (including ∅), `b̃_i(lk F) = 0` for all `i < dim lk F`.
///
/// Faces are visited by increasing dimension and then lexicographically; the
/// first failure is the witness.
pub fn reisner_cm(complex: &SimplicialComplex, field: FieldSpec) -> CMReport {
    for level in complex.faces_by_dimension() {
        for face in level {
            let link = complex.link(face).expect("enumerated faces are faces");
            if let Some(index) = first_low_homology(&link, field) {
                return CMReport {
                    field,
                    is_cm: false,
                    witness: Some(Witness { face, index }),
                };
            }
        }
    }
    CMReport {
        field,
        is_cm: true,
        witness: None,
    }
}

/// Cohen–Macaulayness of the edge ring `K[x]/I(G)`, decided on the
/// independence complex of `g`.
pub fn cm_graph(g: &Graph, field: FieldSpec) -> CMReport {
    reisner_cm(&independence_complex(g), field)
}

/// One report per field, in the given order.
pub fn cm_characteristic_profile(g: &Graph, fields: &[FieldSpec]) -> Vec<CMReport> {
    let complex = independence_complex(g);
    fields.iter().map(|&f| reisner_cm(&complex, f)).collect()
}

/// Bipartite vertex order `v_1, ..., v_n` / `w_1, ..., w_n` with
/// 1. `v_i ~ w_i`,
/// 2. `v_i ~ w_j ⇒ i ≤ j`,
/// 3. `v_i ~ w_j` and `v_j ~ w_k` with `i < j < k` ⇒ `v_i ~ w_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HHOrdering {
    /// `pairs[i] = (v_{i+1}, w_{i+1})`.
    pub pairs: Vec<(usize, usize)>,
}

impl HHOrdering {
    /// Checks the three conditions literally against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let p = &self.pairs;
        let n = p.len();
        let v_sides: VertexSet = p.iter().map(|&(v, _)| v).collect();
        let w_sides: VertexSet = p.iter().map(|&(_, w)| w).collect();
        if v_sides.len() != n || w_sides.len() != n || (v_sides | w_sides) != g.vertices() {
            return false;
        }
        if !g.is_independent(v_sides) || !g.is_independent(w_sides) {
            return false;
        }
        let adj = |i: usize, j: usize| g.has_edge(p[i].0, p[j].1);
        let cond1 = (0..n).all(|i| adj(i, i));
        let cond2 = (0..n).all(|i| (0..n).all(|j| !adj(i, j) || i <= j));
        let cond3 = (0..n).all(|i| {
            (i + 1..n).all(|j| (j + 1..n).all(|k| !(adj(i, j) && adj(j, k)) || adj(i, k)))
        });
        cond1 && cond2 && cond3
    }
}

/// Two-colors each component, putting its smallest vertex on the `v` side.
fn bipartite_sides(g: &Graph) -> Option<Vec<(VertexSet, VertexSet)>> {
    let mut out = Vec::new();
    for comp in g.components() {
        let start = comp.first().unwrap();
        let (mut a, mut b) = (VertexSet::singleton(start), VertexSet::EMPTY);
        let mut frontier = a;
        let mut on_a = true;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= g.neighbors(u);
            }
            let next = next - a - b;
            if on_a { b |= next } else { a |= next }
            on_a = !on_a;
            frontier = next;
        }
        if !g.is_independent(a) || !g.is_independent(b) {
            return None;
        }
        out.push((a, b));
    }
    Some(out)
}

/// Searches for a Herzog–Hibi ordering of a bipartite graph.
///
/// Perfect matchings between the two sides are enumerated in canonical order.
/// For a matching, pair `a` must precede pair `b` whenever `v_a ~ w_b`; the
/// ordering exists iff this relation is acyclic and transitive, in which case
/// any topological order of the pairs works.
pub fn hh_bipartite_cm(g: &Graph) -> Result<Option<HHOrdering>, CmError> {
    if g.n() < 2 {
        return Err(CmError::NotBipartite);
    }
    let sides = bipartite_sides(g).ok_or(CmError::NotBipartite)?;
    if sides.iter().any(|(a, b)| a.len() != b.len()) {
        return Ok(None);
    }
    let v_side = sides.iter().fold(VertexSet::EMPTY, |acc, (a, _)| acc | *a);
    let w_side = g.vertices() - v_side;
    let vs = v_side.to_vec();

    let mut matched = vec![0usize; vs.len()];
    let mut found = None;
    enumerate_matchings(g, &vs, 0, w_side, &mut matched, &mut |m| {
        found = ordering_for_matching(g, &vs, m);
        found.is_some()
    });
    if let Some(ord) = &found {
        debug_assert!(ord.verify(g));
    }
    Ok(found)
}

/// Calls `visit` on each perfect matching `vs[i] ↔ matched[i]`; stops when it
/// returns true.
fn enumerate_matchings(
    g: &Graph,
    vs: &[usize],
    i: usize,
    free: VertexSet,
    matched: &mut [usize],
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if i == vs.len() {
        return visit(matched);
    }
    for w in g.neighbors(vs[i]) & free {
        matched[i] = w;
        if enumerate_matchings(g, vs, i + 1, free.without(w), matched, visit) {
            return true;
        }
    }
    false
}

fn ordering_for_matching(g: &Graph, vs: &[usize], ws: &[usize]) -> Option<HHOrdering> {
    let n = vs.len();
    let before = |a: usize, b: usize| a != b && g.has_edge(vs[a], ws[b]);
    // transitivity (a → b → c ⇒ a → c); a → b → a is caught as a cycle below
    for a in 0..n {
        for b in (0..n).filter(|&b| before(a, b)) {
            for c in (0..n).filter(|&c| c != a && before(b, c)) {
                if !before(a, c) {
                    return None;
                }
            }
        }
    }
    // Kahn's algorithm, smallest ready index first
    let mut indegree: Vec<usize> = (0..n).map(|b| (0..n).filter(|&a| before(a, b)).count()).collect();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    while order.len() < n {
        let next = (0..n).find(|&x| !placed[x] && indegree[x] == 0)?;
        placed[next] = true;
        order.push(next);
        for b in (0..n).filter(|&b| before(next, b)) {
            indegree[b] -= 1;
        }
    }
    Some(HHOrdering {
        pairs: order.into_iter().map(|i| (vs[i], ws[i])).collect(),
    })
}
