//! Simple undirected graphs on vertices `1..=n` and the purely
//! graph-theoretic predicates built on them.

mod canon;
mod cliques;
mod coloring;
mod perfect;

use std::fmt;

pub use canon::{canonical_code, canonical_form, canonical_graph, code_to_graph6, graph_from_code, CANON_MAX_VERTICES};
pub use cliques::{
    clique_number, cliques_of_size, independence_number, is_unmixed, maximal_cliques,
    maximal_independent_sets,
};
pub use coloring::{all_r_partitions, chromatic_number, is_colorable, r_partition, Partition};
pub use perfect::{find_odd_hole, is_perfect};

use crate::error::{GraphError, ParseError};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple graph on `1..=n`, stored as one neighbor mask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Maps each vertex of a derived graph (by position, vertex `i + 1`) back to
/// its label in the graph it was cut from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabel {
    pub old_of_new: Vec<usize>,
}

impl Relabel {
    pub fn old(&self, new_vertex: usize) -> usize {
        self.old_of_new[new_vertex - 1]
    }

    pub fn new_of(&self, old_vertex: usize) -> Option<usize> {
        self.old_of_new
            .iter()
            .position(|&o| o == old_vertex)
            .map(|i| i + 1)
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} exceeds {MAX_VERTICES}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n).mask();
        for i in 0..n {
            g.adj[i] = all & !(1u64 << i);
        }
        g
    }

    /// Cycle `1-2-...-n-1`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.add_edge(1, n);
        g
    }

    /// Path `1-2-...-n`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v, v + 1);
        }
        g
    }

    /// Complete multipartite graph with the given part sizes; parts are
    /// consecutive label ranges.
    pub fn complete_multipartite(parts: &[usize]) -> Self {
        let n = parts.iter().sum();
        let mut g = Graph::complete(n);
        let mut start = 1;
        for &size in parts {
            for u in start..start + size {
                for v in u + 1..start + size {
                    g.remove_edge(u, v);
                }
            }
            start += size;
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if !(1..=n).contains(&w) {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u != v {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    /// A copy of `self` with a new vertex `n + 1` adjacent to `neighbors`.
    pub fn with_vertex_added(&self, neighbors: VertexSet) -> Graph {
        assert!(self.n < MAX_VERTICES);
        assert!(neighbors.is_subset(self.vertices()));
        let bit = 1u64 << self.n;
        let mut adj = self.adj.clone();
        for v in neighbors {
            adj[v - 1] |= bit;
        }
        adj.push(neighbors.mask());
        Graph { n: self.n + 1, adj }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && (1..=self.n).contains(&u) && (1..=self.n).contains(&v));
        self.adj[u - 1] |= 1u64 << (v - 1);
        self.adj[v - 1] |= 1u64 << (u - 1);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u - 1] &= !(1u64 << (v - 1));
        self.adj[v - 1] &= !(1u64 << (u - 1));
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u >= 1 && u <= self.n && self.adj[u - 1] & (1u64 << (v - 1)) != 0
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_mask(self.adj[v - 1])
    }

    /// Neighbor mask of the 0-indexed vertex `i`.
    #[inline]
    pub(crate) fn mask(&self, i: usize) -> u64 {
        self.adj[i]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 1..=self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.neighbors(v).is_disjoint(s))
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.neighbors(v)))
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).mask();
        let adj = (0..self.n)
            .map(|i| !self.adj[i] & all & !(1u64 << i))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `keep`, relabeled `1..=|keep|` in increasing order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Relabel) {
        assert!(keep.is_subset(self.vertices()));
        let old_of_new = keep.to_vec();
        let adj = old_of_new
            .iter()
            .map(|&old| compress(self.adj[old - 1] & keep.mask(), keep.mask()))
            .collect();
        (Graph { n: old_of_new.len(), adj }, Relabel { old_of_new })
    }

    /// `G \ ({v} ∪ N(v))`.
    pub fn delete_closed_neighborhood(&self, v: usize) -> Result<(Graph, Relabel), GraphError> {
        if !(1..=self.n).contains(&v) {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        let closed = self.neighbors(v).with(v);
        Ok(self.induced_subgraph(self.vertices() - closed))
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for v in 1..=self.n {
            if seen.contains(v) {
                continue;
            }
            let comp = self.component_of(v);
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.neighbors(u);
            }
            frontier = next - comp;
            comp |= next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(1).len() == self.n
    }

    /// Writes the graph in the edge-list text format.
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format: a header `n m`, then `m` lines `u v`
    /// with `1 <= u < v <= n`. Lines starting with `#` and blank lines are
    /// skipped.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut records = content_lines(text);
        let (hline, header) = records.next().ok_or(ParseError::MissingHeader)?;
        let [n, m] = parse_ints::<2>(header, hline)?;
        if n > MAX_VERTICES {
            return Err(ParseError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        let mut found = 0;
        for (line, rec) in records {
            let [u, v] = parse_ints::<2>(rec, line)?;
            for w in [u, v] {
                if !(1..=n).contains(&w) {
                    return Err(ParseError::VertexOutOfRange { line, vertex: w, n });
                }
            }
            if u == v {
                return Err(ParseError::Loop { line, vertex: u });
            }
            if u > v {
                return Err(ParseError::Malformed {
                    line,
                    msg: format!("edge endpoints must satisfy u < v, got {u} {v}"),
                });
            }
            if g.has_edge(u, v) {
                return Err(ParseError::DuplicateEdge { line, u, v });
            }
            g.add_edge(u, v);
            found += 1;
        }
        if found != m {
            return Err(ParseError::CountMismatch { expected: m, found });
        }
        Ok(g)
    }
}

/// Packs the bits of `mask` selected by `keep` into the low bits.
fn compress(mask: u64, keep: u64) -> u64 {
    let mut out = 0u64;
    let mut k = keep;
    let mut pos = 0;
    while k != 0 {
        let bit = k.trailing_zeros();
        if mask & (1u64 << bit) != 0 {
            out |= 1u64 << pos;
        }
        pos += 1;
        k &= k - 1;
    }
    out
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_ints<const K: usize>(rec: &str, line: usize) -> Result<[usize; K], ParseError> {
    let fields: Vec<&str> = rec.split_whitespace().collect();
    if fields.len() != K {
        return Err(ParseError::Malformed {
            line,
            msg: format!("expected {K} integers, found {} fields", fields.len()),
        });
    }
    let mut out = [0usize; K];
    for (slot, f) in out.iter_mut().zip(fields) {
        *slot = f.parse().map_err(|_| ParseError::Malformed {
            line,
            msg: format!("not a nonnegative integer: {f:?}"),
        })?;
    }
    Ok(out)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
