//! Reduced simplicial homology over ℚ and prime fields.

mod rank;

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};

pub use rank::{rank_mod_p, rank_rational};

use crate::complex::SimplicialComplex;
use crate::error::FieldError;
use crate::VertexSet;

/// Characteristic of the coefficient field: 0 for ℚ, otherwise a prime
/// below 2^31.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(u64);

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec(0);
    pub const GF2: FieldSpec = FieldSpec(2);
    pub const GF3: FieldSpec = FieldSpec(3);

    pub fn new(characteristic: u64) -> Result<Self, FieldError> {
        if characteristic == 0 || (characteristic < 1 << 31 && is_prime(characteristic)) {
            Ok(FieldSpec(characteristic))
        } else {
            Err(FieldError::InvalidCharacteristic(characteristic))
        }
    }

    pub fn characteristic(self) -> u64 {
        self.0
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "char 0"),
            p => write!(f, "char {p}"),
        }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.0)
    }
}

/// The matrix of `∂_d : C_d → C_{d−1}` in the augmented chain complex.
/// Rows are the `(d−1)`-faces and columns the `d`-faces, both in
/// lexicographic order; `∂_0` maps every vertex onto the empty face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub dim: usize,
    pub row_faces: Vec<VertexSet>,
    pub col_faces: Vec<VertexSet>,
    entries: Vec<i8>,
}

impl BoundaryMatrix {
    pub fn rows(&self) -> usize {
        self.row_faces.len()
    }

    pub fn cols(&self) -> usize {
        self.col_faces.len()
    }

    pub fn get(&self, r: usize, c: usize) -> i8 {
        self.entries[r * self.cols() + c]
    }

    pub fn entries_i64(&self) -> Vec<i64> {
        self.entries.iter().map(|&e| e as i64).collect()
    }

    /// The integer product `self · rhs`.
    pub fn compose(&self, rhs: &BoundaryMatrix) -> Vec<i64> {
        assert_eq!(self.cols(), rhs.rows());
        let mut out = vec![0i64; self.rows() * rhs.cols()];
        for r in 0..self.rows() {
            for k in 0..self.cols() {
                let a = self.get(r, k) as i64;
                if a == 0 {
                    continue;
                }
                for c in 0..rhs.cols() {
                    out[r * rhs.cols() + c] += a * rhs.get(k, c) as i64;
                }
            }
        }
        out
    }
}

/// Boundary matrices `∂_0, ..., ∂_dim` of the augmented chain complex.
pub fn boundary_matrices(complex: &SimplicialComplex) -> Vec<BoundaryMatrix> {
    let faces = complex.faces_by_dimension();
    (1..faces.len())
        .map(|k| boundary_between(&faces[k - 1], &faces[k], k - 1))
        .collect()
}

fn boundary_between(lower: &[VertexSet], upper: &[VertexSet], dim: usize) -> BoundaryMatrix {
    let index: HashMap<VertexSet, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let cols = upper.len();
    let mut entries = vec![0i8; lower.len() * cols];
    for (c, &face) in upper.iter().enumerate() {
        for (pos, v) in face.iter().enumerate() {
            let r = index[&face.without(v)];
            entries[r * cols + c] = if pos % 2 == 0 { 1 } else { -1 };
        }
    }
    BoundaryMatrix {
        dim,
        row_faces: lower.to_vec(),
        col_faces: upper.to_vec(),
        entries,
    }
}

/// Exact rank of a boundary matrix over the given field.
pub fn rank_over(m: &BoundaryMatrix, field: FieldSpec) -> usize {
    if m.rows() == 0 || m.cols() == 0 {
        return 0;
    }
    let entries = m.entries_i64();
    match field.characteristic() {
        0 => rank_rational(m.rows(), m.cols(), &entries),
        p => rank_mod_p(m.rows(), m.cols(), &entries, p),
    }
}

/// Reduced Betti numbers `b̃_{−1}, b̃_0, ..., b̃_dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct BettiVector(pub Vec<usize>);

impl BettiVector {
    /// `b̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        if i < -1 {
            return 0;
        }
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// `Σ (−1)^i b̃_i`.
    pub fn alternating_sum(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 0 { -(b as i64) } else { b as i64 })
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&b| b == 0)
    }
}

/// `b̃_i = dim C_i − rank ∂_i − rank ∂_{i+1}` for `i = −1, ..., dim`.
pub fn reduced_betti(complex: &SimplicialComplex, field: FieldSpec) -> BettiVector {
    let maps = boundary_matrices(complex);
    let ranks: Vec<usize> = maps.iter().map(|m| rank_over(m, field)).collect();
    let f = complex.f_vector();
    let top = f.0.len();
    BettiVector(
        (0..top)
            .map(|k| {
                // k = i + 1; ∂_i is maps[k - 1], ∂_{i+1} is maps[k]
                let into = if k == 0 { 0 } else { ranks[k - 1] };
                let out = ranks.get(k).copied().unwrap_or(0);
                f.0[k] - into - out
            })
            .collect(),
    )
}
