//! Independent oracles shared by the integration tests. Nothing here calls
//! into the code paths it is used to check.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;

use cmgraph_core::{Graph, VertexSet};

/// Nonzero elementary divisors of an integer matrix, by Smith normal form.
pub fn smith_divisors(rows: usize, cols: usize, entries: &[i64]) -> Vec<i128> {
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|r| (0..cols).map(|c| entries[r * cols + c] as i128).collect())
        .collect();
    let mut divisors = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry in the remaining block as pivot
        let mut pivot = None;
        for r in t..rows {
            for c in t..cols {
                if a[r][c] != 0 && pivot.is_none_or(|(pr, pc): (usize, usize)| a[r][c].abs() < a[pr][pc].abs()) {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let p = a[t][t];
            let mut done = true;
            for r in t + 1..rows {
                let q = a[r][t] / p;
                for c in t..cols {
                    a[r][c] -= q * a[t][c];
                }
                if a[r][t] != 0 {
                    done = false;
                }
            }
            for c in t + 1..cols {
                let q = a[t][c] / p;
                for r in t..rows {
                    a[r][c] -= q * a[r][t];
                }
                if a[t][c] != 0 {
                    done = false;
                }
            }
            if done {
                // the pivot must divide the rest of the block
                let bad = (t + 1..rows)
                    .flat_map(|r| (t + 1..cols).map(move |c| (r, c)))
                    .find(|&(r, c)| a[r][c] % p != 0);
                match bad {
                    None => break,
                    Some((r, _)) => {
                        for c in t..cols {
                            a[t][c] += a[r][c];
                        }
                        continue;
                    }
                }
            }
            // move the smallest nonzero entry of row t / column t to the pivot
            let mut best = (t, t);
            for r in t..rows {
                if a[r][t] != 0 && a[r][t].abs() < a[best.0][best.1].abs() {
                    best = (r, t);
                }
            }
            for c in t..cols {
                if a[t][c] != 0 && a[t][c].abs() < a[best.0][best.1].abs() {
                    best = (t, c);
                }
            }
            a.swap(t, best.0);
            for row in a.iter_mut() {
                row.swap(t, best.1);
            }
        }
        divisors.push(a[t][t].abs());
        t += 1;
    }
    divisors
}

/// Rank over ℚ (p = 0) or 𝔽_p from elementary divisors.
pub fn rank_from_divisors(divisors: &[i128], p: u64) -> usize {
    divisors
        .iter()
        .filter(|&&d| p == 0 || d % p as i128 != 0)
        .count()
}

/// All faces of the complex generated by `facets`, grouped by size.
pub fn faces_by_size(facets: &[Vec<usize>]) -> Vec<Vec<Vec<usize>>> {
    let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
    for f in facets {
        for mask in 0u32..(1 << f.len()) {
            let s: Vec<usize> = (0..f.len()).filter(|b| mask >> b & 1 == 1).map(|b| f[b]).collect();
            all.insert(s);
        }
    }
    let top = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = vec![Vec::new(); top + 1];
    for s in all {
        out[s.len()].push(s);
    }
    out
}

/// Reduced Betti numbers over characteristic `p` via Smith normal form of
/// independently assembled boundary matrices.
pub fn betti_by_snf(facets: &[Vec<usize>], p: u64) -> Vec<usize> {
    let faces = faces_by_size(facets);
    let mut ranks = Vec::new();
    for k in 1..faces.len() {
        let (lower, upper) = (&faces[k - 1], &faces[k]);
        let mut m = vec![0i64; lower.len() * upper.len()];
        for (c, f) in upper.iter().enumerate() {
            for drop in 0..f.len() {
                let mut sub = f.clone();
                sub.remove(drop);
                let r = lower.iter().position(|x| *x == sub).unwrap();
                m[r * upper.len() + c] = if drop % 2 == 0 { 1 } else { -1 };
            }
        }
        ranks.push(rank_from_divisors(&smith_divisors(lower.len(), upper.len(), &m), p));
    }
    (0..faces.len())
        .map(|k| {
            let into = if k == 0 { 0 } else { ranks[k - 1] };
            faces[k].len() - into - ranks.get(k).copied().unwrap_or(0)
        })
        .collect()
}

pub fn to_vecs(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

/// Maximal independent sets by scanning every subset.
pub fn brute_maximal_independent_sets(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let independent = |m: u64| {
        (0..n).all(|i| m >> i & 1 == 0 || (0..n).all(|j| m >> j & 1 == 0 || !g.has_edge(i + 1, j + 1)))
    };
    let mut out: Vec<Vec<usize>> = (0u64..1 << n)
        .filter(|&m| independent(m))
        .filter(|&m| (0..n).all(|i| m >> i & 1 == 1 || !independent(m | 1 << i)))
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| i + 1).collect())
        .collect();
    out.sort();
    out
}

/// χ by trying every assignment of colors.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| {
            let mut color = vec![0usize; n];
            loop {
                if g.edges().iter().all(|&(u, v)| color[u - 1] != color[v - 1]) {
                    return true;
                }
                let mut i = 0;
                loop {
                    if i == n {
                        return false;
                    }
                    color[i] += 1;
                    if color[i] < k {
                        break;
                    }
                    color[i] = 0;
                    i += 1;
                }
            }
        })
        .unwrap()
}

/// ω by scanning every subset.
pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&m| {
            (0..n).all(|i| {
                m >> i & 1 == 0 || (i + 1..n).all(|j| m >> j & 1 == 0 || g.has_edge(i + 1, j + 1))
            })
        })
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Perfectness by its definition: ω = χ on every induced subgraph.
pub fn brute_is_perfect(g: &Graph) -> bool {
    let n = g.n();
    (0u64..1 << n).all(|m| {
        let (h, _) = g.induced_subgraph(VertexSet::from_mask(m));
        brute_clique_number(&h) == brute_chromatic_number(&h)
    })
}

pub fn permute(g: &Graph, perm: &[usize]) -> Graph {
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (perm[u - 1], perm[v - 1]))
        .collect();
    Graph::from_edges(g.n(), &edges).unwrap()
}

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                rec(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), n, &mut out);
    out
}

pub fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && all_permutations(a.n()).iter().any(|p| permute(a, p) == *b)
}

/// The six-vertex triangulation of the real projective plane.
pub fn rp2_facets() -> Vec<Vec<usize>> {
    vec![
        vec![1, 2, 3],
        vec![1, 3, 4],
        vec![1, 4, 5],
        vec![1, 5, 6],
        vec![1, 2, 6],
        vec![2, 3, 5],
        vec![2, 4, 5],
        vec![2, 4, 6],
        vec![3, 4, 6],
        vec![3, 5, 6],
    ]
}

/// Link of `face` in the complex generated by `facets`, as its maximal faces.
pub fn brute_link(facets: &[Vec<usize>], face: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = facets
        .iter()
        .filter(|f| face.iter().all(|v| f.contains(v)))
        .map(|f| f.iter().copied().filter(|v| !face.contains(v)).collect())
        .collect();
    out.sort();
    out.dedup();
    let all = out.clone();
    out.retain(|g| !all.iter().any(|h| h != g && g.iter().all(|v| h.contains(v))));
    out
}

/// Reisner's criterion straight from its statement, with Smith-form homology.
pub fn brute_reisner(facets: &[Vec<usize>], p: u64) -> bool {
    faces_by_size(facets).iter().flatten().all(|face| {
        let link = brute_link(facets, face);
        let dim = link.iter().map(Vec::len).max().unwrap_or(0) as isize - 1;
        let betti = betti_by_snf(&link, p);
        (-1..dim).all(|i| betti[(i + 1) as usize] == 0)
    })
}

/// The definition of a shelling: each facet meets the union of its
/// predecessors in a pure complex of codimension one.
pub fn definitional_shelling(order: &[Vec<usize>]) -> bool {
    (1..order.len()).all(|i| {
        let meets: Vec<Vec<usize>> = order[..i]
            .iter()
            .map(|f| order[i].iter().copied().filter(|v| f.contains(v)).collect())
            .collect();
        meets.iter().all(|m| {
            m.len() + 1 == order[i].len()
                || meets
                    .iter()
                    .any(|big| big.len() + 1 == order[i].len() && m.iter().all(|v| big.contains(v)))
        })
    })
}

pub fn brute_shellable(facets: &[Vec<usize>]) -> bool {
    all_permutations(facets.len()).iter().any(|p| {
        let order: Vec<Vec<usize>> = p.iter().map(|&i| facets[i - 1].clone()).collect();
        definitional_shelling(&order)
    })
}
