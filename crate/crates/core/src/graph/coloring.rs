use serde::Serialize;

use super::{clique_number, Graph};
use crate::error::CoverError;
use crate::VertexSet;

/// Ordered, pairwise-disjoint, nonempty independent blocks covering `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Partition {
    blocks: Vec<VertexSet>,
}

impl Partition {
    /// Validates `blocks` as an independent partition of `g`'s vertices.
    pub fn new(g: &Graph, blocks: Vec<VertexSet>) -> Result<Self, CoverError> {
        let mut seen = VertexSet::EMPTY;
        for &b in &blocks {
            if b.is_empty() || !b.is_disjoint(seen) {
                return Err(CoverError::NotAPartition);
            }
            if !b.is_subset(g.vertices()) {
                return Err(CoverError::OutOfRange(b));
            }
            if !g.is_independent(b) {
                return Err(CoverError::BlockNotIndependent(b));
            }
            seen |= b;
        }
        if seen != g.vertices() {
            return Err(CoverError::NotAPartition);
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn into_blocks(self) -> Vec<VertexSet> {
        self.blocks
    }
}

/// Vertices (0-indexed) by decreasing degree, ties by label.
fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&i| (std::cmp::Reverse(g.mask(i).count_ones()), i));
    order
}

fn greedy_color_count(g: &Graph) -> usize {
    let mut color = vec![usize::MAX; g.n()];
    let mut used = 0;
    for i in degree_order(g) {
        let taken: Vec<usize> = crate::VertexSet::from_mask(g.mask(i))
            .iter()
            .map(|v| color[v - 1])
            .collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        color[i] = c;
        used = used.max(c + 1);
    }
    used
}

/// A proper coloring with at most `k` colors (0-indexed colors per 0-indexed
/// vertex), if one exists.
fn find_coloring(g: &Graph, k: usize) -> Option<Vec<usize>> {
    fn assign(
        g: &Graph,
        order: &[usize],
        pos: usize,
        k: usize,
        used: usize,
        classes: &mut Vec<u64>,
        color: &mut [usize],
    ) -> bool {
        let Some(&i) = order.get(pos) else {
            return true;
        };
        // a fresh color is only tried once: colors are interchangeable
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if classes[c] & g.mask(i) != 0 {
                continue;
            }
            classes[c] |= 1u64 << i;
            color[i] = c;
            if assign(g, order, pos + 1, k, used.max(c + 1), classes, color) {
                return true;
            }
            classes[c] &= !(1u64 << i);
        }
        false
    }
    if g.n() == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let order = degree_order(g);
    let mut classes = vec![0u64; k];
    let mut color = vec![0; g.n()];
    assign(g, &order, 0, k, 0, &mut classes, &mut color).then_some(color)
}

/// True iff `g` has a proper coloring with at most `k` colors.
pub fn is_colorable(g: &Graph, k: usize) -> bool {
    find_coloring(g, k).is_some()
}

/// χ(G), searched between the clique lower bound and the greedy upper bound.
pub fn chromatic_number(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let lower = clique_number(g);
    let upper = greedy_color_count(g);
    (lower..upper)
        .find(|&k| is_colorable(g, k))
        .unwrap_or(upper)
}

/// A partition of the vertices into exactly `r` nonempty independent blocks,
/// ordered by smallest member, or `None` if there is none.
pub fn r_partition(g: &Graph, r: usize) -> Option<Partition> {
    if r == 0 || r > g.n() {
        return None;
    }
    let color = (1..=r).find_map(|k| find_coloring(g, k))?;
    let used = color.iter().max().map_or(0, |&c| c + 1);
    let mut blocks = vec![VertexSet::EMPTY; used];
    for (i, &c) in color.iter().enumerate() {
        blocks[c].insert(i + 1);
    }
    while blocks.len() < r {
        let donor = blocks
            .iter()
            .position(|b| b.len() >= 2)
            .expect("r <= n guarantees a block to split");
        let v = blocks[donor].last().unwrap();
        blocks[donor].remove(v);
        blocks.push(VertexSet::singleton(v));
    }
    blocks.sort_unstable();
    Some(Partition { blocks })
}

/// Every partition into exactly `r` nonempty independent blocks, each listed
/// once with blocks ordered by smallest member.
pub fn all_r_partitions(g: &Graph, r: usize) -> Vec<Partition> {
    fn place(g: &Graph, v: usize, r: usize, blocks: &mut Vec<VertexSet>, out: &mut Vec<Partition>) {
        let n = g.n();
        if v > n {
            if blocks.len() == r {
                out.push(Partition { blocks: blocks.clone() });
            }
            return;
        }
        if n - v + 1 < r - blocks.len() {
            return;
        }
        for b in 0..blocks.len() {
            if blocks[b].is_disjoint(g.neighbors(v)) {
                blocks[b].insert(v);
                place(g, v + 1, r, blocks, out);
                blocks[b].remove(v);
            }
        }
        if blocks.len() < r {
            blocks.push(VertexSet::singleton(v));
            place(g, v + 1, r, blocks, out);
            blocks.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 || r > g.n() {
        return out;
    }
    place(g, 1, r, &mut Vec::with_capacity(r), &mut out);
    out
}
