//! Canonical labeling for small graphs.
//!
//! The canonical form is the relabeling whose upper-triangle adjacency bit
//! string is lexicographically largest among all labelings reachable from an
//! individualize-and-refine search. Color refinement and the skipping of
//! twin vertices only prune labelings that produce identical strings, so two
//! graphs get equal forms exactly when they are isomorphic.

use super::Graph;
use crate::error::GraphError;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 10;

/// Bit position (from the most significant end) of the pair `i < j`, in the
/// column order `(0,1), (0,2), (1,2), (0,3), ...` used by graph6.
#[inline]
fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Refines `colors` to the coarsest equitable partition finer than it.
/// Colors are cell start positions, so cell order is preserved across splits.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    let mut cells = count_distinct(colors);
    let mut sigs: Vec<(usize, Vec<usize>, usize)> = Vec::with_capacity(n);
    loop {
        sigs.clear();
        for v in 0..n {
            let mut nb: Vec<usize> = crate::VertexSet::from_mask(g.mask(v))
                .iter()
                .map(|u| colors[u - 1])
                .collect();
            nb.sort_unstable();
            sigs.push((colors[v], nb, v));
        }
        sigs.sort_unstable();
        let mut rank = 0;
        for k in 0..n {
            if k > 0 && (sigs[k].0 != sigs[k - 1].0 || sigs[k].1 != sigs[k - 1].1) {
                rank = k;
            }
            colors[sigs[k].2] = rank;
        }
        let next = count_distinct(colors);
        if next == cells {
            return;
        }
        cells = next;
    }
}

fn count_distinct(colors: &[usize]) -> usize {
    let mut seen = vec![false; colors.len()];
    colors.iter().filter(|&&c| !std::mem::replace(&mut seen[c], true)).count()
}

fn leaf_code(g: &Graph, pos: &[usize]) -> u64 {
    let n = g.n();
    let total = n * n.saturating_sub(1) / 2;
    let mut code = 0u64;
    for (u, v) in g.edges() {
        let (a, b) = (pos[u - 1], pos[v - 1]);
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        code |= 1u64 << (total - 1 - pair_index(i, j));
    }
    code
}

fn search(g: &Graph, mut colors: Vec<usize>, best: &mut Option<(u64, Vec<usize>)>) {
    refine(g, &mut colors);
    let n = g.n();
    let mut size = vec![0usize; n];
    for &c in &colors {
        size[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| size[c] > 1) else {
        let code = leaf_code(g, &colors);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, colors));
        }
        return;
    };
    let mut tried: Vec<usize> = Vec::new();
    for v in (0..n).filter(|&v| colors[v] == target) {
        // swapping twins is an automorphism fixing the current coloring
        let twin_of_tried = tried.iter().any(|&u| {
            g.mask(u) & !(1u64 << v) == g.mask(v) & !(1u64 << u)
        });
        if twin_of_tried {
            continue;
        }
        tried.push(v);
        let mut child = colors.clone();
        for (w, c) in child.iter_mut().enumerate() {
            if *c == target && w != v {
                *c = target + 1;
            }
        }
        search(g, child, best);
    }
}

/// Position of each 0-indexed vertex in the canonical labeling, plus the
/// canonical code.
fn canonical_labeling(g: &Graph) -> Result<(u64, Vec<usize>), GraphError> {
    if g.n() > CANON_MAX_VERTICES {
        return Err(GraphError::TooLargeForCanonicalForm {
            n: g.n(),
            max: CANON_MAX_VERTICES,
        });
    }
    let mut best = None;
    search(g, vec![0; g.n()], &mut best);
    Ok(best.unwrap_or((0, Vec::new())))
}

/// An isomorphism invariant that separates non-isomorphic graphs with the
/// same vertex count: the canonical upper-triangle adjacency bits.
pub fn canonical_code(g: &Graph) -> Result<u64, GraphError> {
    canonical_labeling(g).map(|(code, _)| code)
}

/// The graph6 encoding of the canonically relabeled graph.
pub fn canonical_form(g: &Graph) -> Result<String, GraphError> {
    let (code, _) = canonical_labeling(g)?;
    Ok(graph6(g.n(), code))
}

/// The canonically relabeled graph itself, with its code.
pub fn canonical_graph(g: &Graph) -> Result<(u64, Graph), GraphError> {
    let (code, pos) = canonical_labeling(g)?;
    let mut h = Graph::empty(g.n());
    for (u, v) in g.edges() {
        h.add_edge(pos[u - 1] + 1, pos[v - 1] + 1);
    }
    Ok((code, h))
}

/// Inverse of the code layout: the `n`-vertex graph whose canonical
/// labeling produced `code`.
pub fn graph_from_code(n: usize, code: u64) -> Graph {
    let total = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if code >> (total - 1 - pair_index(i, j)) & 1 == 1 {
                g.add_edge(i + 1, j + 1);
            }
        }
    }
    g
}

/// graph6 string of an `n`-vertex canonical code.
pub fn code_to_graph6(n: usize, code: u64) -> String {
    graph6(n, code)
}

fn graph6(n: usize, code: u64) -> String {
    let total = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(1 + total.div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in 0..total.div_ceil(6) {
        let mut six = 0u8;
        for b in 0..6 {
            let k = chunk * 6 + b;
            let bit = k < total && code >> (total - 1 - k) & 1 == 1;
            six = six << 1 | bit as u8;
        }
        out.push((six + 63) as char);
    }
    out
}
