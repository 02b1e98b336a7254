//! Exact matrix rank over ℚ and over prime fields.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over 𝔽_p of a dense row-major integer matrix.
pub fn rank_mod_p(rows: usize, cols: usize, entries: &[i64], p: u64) -> usize {
    debug_assert_eq!(entries.len(), rows * cols);
    let pi = p as i64;
    let mut m: Vec<u64> = entries.iter().map(|&e| e.rem_euclid(pi) as u64).collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in c..cols {
                m.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let inv = inverse_mod(m[rank * cols + c], p);
        for j in c..cols {
            m[rank * cols + j] = m[rank * cols + j] * inv % p;
        }
        for r in rank + 1..rows {
            let factor = m[r * cols + c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let sub = factor * m[rank * cols + j] % p;
                m[r * cols + j] = (m[r * cols + j] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // extended Euclid; a is nonzero mod p
    let (mut old_r, mut r) = (a as i64, p as i64);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    old_s.rem_euclid(p as i64) as u64
}

/// Rank over ℚ by fraction-free (Bareiss) elimination. Runs in `i128` and
/// restarts with arbitrary-precision integers if an intermediate overflows.
pub fn rank_rational(rows: usize, cols: usize, entries: &[i64]) -> usize {
    debug_assert_eq!(entries.len(), rows * cols);
    let small: Vec<i128> = entries.iter().map(|&e| e as i128).collect();
    if let Some(rank) = bareiss_i128(rows, cols, small) {
        return rank;
    }
    let big: Vec<BigInt> = entries.iter().map(|&e| BigInt::from(e)).collect();
    bareiss_big(rows, cols, big)
}

fn bareiss_i128(rows: usize, cols: usize, mut m: Vec<i128>) -> Option<usize> {
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in c..cols {
                m.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let piv = m[rank * cols + c];
        for r in rank + 1..rows {
            let lead = m[r * cols + c];
            for j in c + 1..cols {
                let a = piv.checked_mul(m[r * cols + j])?;
                let b = lead.checked_mul(m[rank * cols + j])?;
                m[r * cols + j] = a.checked_sub(b)? / prev;
            }
            m[r * cols + c] = 0;
        }
        prev = piv;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(rows: usize, cols: usize, mut m: Vec<BigInt>) -> usize {
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r * cols + c].is_zero()) else {
            continue;
        };
        if pivot != rank {
            for j in c..cols {
                m.swap(pivot * cols + j, rank * cols + j);
            }
        }
        let piv = m[rank * cols + c].clone();
        for r in rank + 1..rows {
            let lead = m[r * cols + c].clone();
            for j in c + 1..cols {
                let v = (&piv * &m[r * cols + j] - &lead * &m[rank * cols + j]) / &prev;
                m[r * cols + j] = v;
            }
            m[r * cols + c] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
