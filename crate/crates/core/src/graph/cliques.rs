use super::Graph;
use crate::VertexSet;

/// Bron–Kerbosch with Tomita pivoting over 0-indexed neighbor masks.
fn bron_kerbosch(adj: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<VertexSet>) {
    if p == 0 {
        if x == 0 {
            out.push(VertexSet::from_mask(r));
        }
        return;
    }
    let px = p | x;
    let pivot = VertexSet::from_mask(px)
        .iter()
        .max_by_key(|&u| ((p & adj[u - 1]).count_ones(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let mut candidates = p & !adj[pivot - 1];
    while candidates != 0 {
        let i = candidates.trailing_zeros() as usize;
        let bit = 1u64 << i;
        candidates &= candidates - 1;
        bron_kerbosch(adj, r | bit, p & adj[i], x & adj[i], out);
        p &= !bit;
        x |= bit;
    }
}

fn maximal_cliques_of_masks(adj: &[u64]) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let all = VertexSet::full(adj.len()).mask();
    bron_kerbosch(adj, 0, all, 0, &mut out);
    out.sort_unstable();
    out
}

/// All inclusion-maximal cliques, each sorted, list in lexicographic order.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let adj: Vec<u64> = (0..g.n()).map(|i| g.mask(i)).collect();
    maximal_cliques_of_masks(&adj)
}

/// All inclusion-maximal independent sets in lexicographic order; these are
/// the maximal cliques of the complement.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let comp = g.complement();
    let adj: Vec<u64> = (0..comp.n()).map(|i| comp.mask(i)).collect();
    maximal_cliques_of_masks(&adj)
}

/// All cliques with exactly `r` vertices, in lexicographic order.
pub fn cliques_of_size(g: &Graph, r: usize) -> Vec<VertexSet> {
    fn extend(g: &Graph, current: u64, cand: u64, need: usize, out: &mut Vec<VertexSet>) {
        if need == 0 {
            out.push(VertexSet::from_mask(current));
            return;
        }
        if (cand.count_ones() as usize) < need {
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            // only later vertices, so each clique is produced once and in order
            extend(g, current | (1u64 << i), rest & g.mask(i), need - 1, out);
        }
    }
    let mut out = Vec::new();
    extend(g, 0, g.vertices().mask(), r, &mut out);
    out
}

fn max_clique_size(adj: impl Fn(usize) -> u64, all: u64) -> usize {
    fn search(adj: &dyn Fn(usize) -> u64, size: usize, cand: u64, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut rest = cand;
        while rest != 0 {
            if size + rest.count_ones() as usize <= *best {
                return;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            search(adj, size + 1, rest & adj(i), best);
        }
    }
    let mut best = 0;
    search(&adj, 0, all, &mut best);
    best
}

/// ω(G).
pub fn clique_number(g: &Graph) -> usize {
    max_clique_size(|i| g.mask(i), g.vertices().mask())
}

/// α(G).
pub fn independence_number(g: &Graph) -> usize {
    let all = g.vertices().mask();
    max_clique_size(|i| !g.mask(i) & all & !(1u64 << i), all)
}

/// True iff every maximal independent set has the same size.
pub fn is_unmixed(g: &Graph) -> bool {
    let sets = maximal_independent_sets(g);
    sets.windows(2).all(|w| w[0].len() == w[1].len())
}
