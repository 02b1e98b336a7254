use std::collections::HashSet;

use serde::Serialize;

use super::SimplicialComplex;
use crate::error::ComplexError;
use crate::VertexSet;

/// Default cap on the number of prefix extensions tried by [`is_shellable`].
pub const DEFAULT_SHELLING_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "order", rename_all = "snake_case")]
pub enum ShellingOutcome {
    Shellable(Vec<VertexSet>),
    NotShellable,
    BudgetExhausted,
}

/// Checks a facet order against the exchange form of the shelling condition:
/// for every `i >= 2` and `j < i` there are `l ∈ F_i \ F_j` and `k < i` with
/// `F_i \ F_k = {l}`.
pub fn verify_shelling_order(order: &[VertexSet]) -> bool {
    (1..order.len()).all(|i| {
        (0..i).all(|j| {
            (order[i] - order[j]).iter().any(|l| {
                (0..i).any(|k| order[i] - order[k] == VertexSet::singleton(l))
            })
        })
    })
}

struct Search<'a> {
    facets: &'a [VertexSet],
    budget: u64,
    steps: u64,
    chosen: Vec<u64>,
    order: Vec<usize>,
    dead: HashSet<Vec<u64>>,
}

enum Step {
    Found,
    Failed,
    OutOfBudget,
}

impl Search<'_> {
    fn is_chosen(&self, i: usize) -> bool {
        self.chosen[i / 64] >> (i % 64) & 1 == 1
    }

    fn toggle(&mut self, i: usize) {
        self.chosen[i / 64] ^= 1u64 << (i % 64);
    }

    /// Whether `F ∩ ⟨prefix⟩` is pure of codimension one in `F`. This only
    /// depends on the set of facets already placed, not their order.
    fn attaches(&self, cand: usize) -> bool {
        if self.order.is_empty() {
            return true;
        }
        let f = self.facets[cand];
        let mut exposed = VertexSet::EMPTY;
        for &p in &self.order {
            let diff = f - self.facets[p];
            if diff.len() == 1 {
                exposed |= diff;
            }
        }
        self.order
            .iter()
            .all(|&p| !(f - self.facets[p]).is_disjoint(exposed))
    }

    fn run(&mut self) -> Step {
        if self.order.len() == self.facets.len() {
            return Step::Found;
        }
        for cand in 0..self.facets.len() {
            if self.is_chosen(cand) || !self.attaches(cand) {
                continue;
            }
            self.steps += 1;
            if self.steps > self.budget {
                return Step::OutOfBudget;
            }
            self.toggle(cand);
            self.order.push(cand);
            if !self.dead.contains(&self.chosen) {
                match self.run() {
                    Step::Failed => {}
                    done => return done,
                }
            }
            self.order.pop();
            self.toggle(cand);
        }
        self.dead.insert(self.chosen.clone());
        Step::Failed
    }
}

/// Decides shellability of a pure complex by exhaustive backtracking over
/// facet orders. Prefix sets that are known dead ends are memoized, since
/// whether a facet can be attached depends only on which facets precede it.
///
/// Facets are tried in order of decreasing number of codimension-one
/// neighbors. `budget` caps the number of prefix extensions.
pub fn is_shellable(
    complex: &SimplicialComplex,
    budget: u64,
) -> Result<ShellingOutcome, ComplexError> {
    if !complex.is_pure() {
        return Err(ComplexError::NotPure);
    }
    let mut facets = complex.facets().to_vec();
    facets.sort_by_cached_key(|&f| std::cmp::Reverse(codim_one_neighbors(complex.facets(), f)));

    let mut search = Search {
        facets: &facets,
        budget,
        steps: 0,
        chosen: vec![0; facets.len().div_ceil(64)],
        order: Vec::with_capacity(facets.len()),
        dead: HashSet::new(),
    };
    Ok(match search.run() {
        Step::Found => {
            let order: Vec<VertexSet> = search.order.iter().map(|&i| facets[i]).collect();
            assert!(
                verify_shelling_order(&order),
                "shelling search produced an invalid order"
            );
            ShellingOutcome::Shellable(order)
        }
        Step::Failed => ShellingOutcome::NotShellable,
        Step::OutOfBudget => ShellingOutcome::BudgetExhausted,
    })
}

fn codim_one_neighbors(facets: &[VertexSet], f: VertexSet) -> usize {
    facets
        .iter()
        .filter(|&&g| (f - g).len() == 1)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn triangle_boundary_is_shellable() {
        let tri = SimplicialComplex::simplex_boundary(3);
        match is_shellable(&tri, DEFAULT_SHELLING_BUDGET).unwrap() {
            ShellingOutcome::Shellable(order) => {
                assert_eq!(order.len(), 3);
                assert!(verify_shelling_order(&order));
            }
            other => panic!("expected a shelling, got {other:?}"),
        }
        assert!(verify_shelling_order(&[vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 3])]));
    }

    #[test]
    fn two_disjoint_edges_are_not_shellable() {
        let c = SimplicialComplex::new(4, vec![vs(&[1, 2]), vs(&[3, 4])]).unwrap();
        assert_eq!(
            is_shellable(&c, DEFAULT_SHELLING_BUDGET).unwrap(),
            ShellingOutcome::NotShellable
        );
        assert!(!verify_shelling_order(&[vs(&[1, 2]), vs(&[3, 4])]));
    }

    #[test]
    fn order_matters_for_the_verifier() {
        // path 1-2-3-4: placing {3,4} second breaks the condition
        assert!(verify_shelling_order(&[vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4])]));
        assert!(!verify_shelling_order(&[vs(&[1, 2]), vs(&[3, 4]), vs(&[2, 3])]));
    }

    #[test]
    fn nonpure_is_rejected() {
        let c = SimplicialComplex::new(3, vec![vs(&[1, 2]), vs(&[3])]).unwrap();
        assert_eq!(is_shellable(&c, 10), Err(ComplexError::NotPure));
    }

    #[test]
    fn budget_exhaustion() {
        let c = SimplicialComplex::simplex_boundary(5);
        assert_eq!(is_shellable(&c, 2).unwrap(), ShellingOutcome::BudgetExhausted);
        assert!(matches!(
            is_shellable(&c, DEFAULT_SHELLING_BUDGET).unwrap(),
            ShellingOutcome::Shellable(_)
        ));
    }

    #[test]
    fn trivial_complexes() {
        let point = SimplicialComplex::simplex(1);
        assert_eq!(
            is_shellable(&point, 10).unwrap(),
            ShellingOutcome::Shellable(vec![vs(&[1])])
        );
        // points are shellable: any two 0-faces meet in the empty face
        let pts = SimplicialComplex::new(3, vec![vs(&[1]), vs(&[2]), vs(&[3])]).unwrap();
        assert!(matches!(is_shellable(&pts, 10).unwrap(), ShellingOutcome::Shellable(_)));
    }
}
