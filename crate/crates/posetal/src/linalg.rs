//! Exact rank computations over prime fields and the rationals.
//!
//! Boundary matrices of simplicial complexes have entries in {-1, 0, 1},
//! so everything here stays in integer arithmetic. Prime-field ranks use
//! Gaussian elimination with delayed reduction (entries are kept as raw
//! `u64` accumulators and reduced only when a pivot is needed). Rational
//! ranks use fraction-free elimination with per-row gcd normalization,
//! falling back to arbitrary precision if 128-bit arithmetic overflows.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use std::fmt;
use std::str::FromStr;

/// Default coefficient prime, large enough that characteristic artifacts
/// are unheard of at desk scale while products still fit comfortably in
/// a machine word.
pub const DEFAULT_PRIME: u64 = 32003;

/// Coefficient field for rank and homology computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    /// The prime field GF(p).
    Prime(u64),
    /// The field of rational numbers.
    Rationals,
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(DEFAULT_PRIME)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Prime(p) => write!(f, "gf{p}"),
            FieldSpec::Rationals => write!(f, "qq"),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FieldParseError {
    #[error("unknown field {0:?}; expected gf<p> (p prime, p < 2^31) or qq")]
    Unknown(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

impl FromStr for FieldSpec {
    type Err = FieldParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        if t == "qq" || t == "q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(digits) = t.strip_prefix("gf") {
            if let Ok(p) = digits.parse::<u64>() {
                if p < (1 << 31) && is_prime(p) {
                    return Ok(FieldSpec::Prime(p));
                }
                return Err(FieldParseError::NotPrime(p));
            }
        }
        Err(FieldParseError::Unknown(s.to_string()))
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    /// Exact rank over the given field.
    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            FieldSpec::Prime(p) => rank_mod_p(self, p),
            FieldSpec::Rationals => {
                rank_fraction_free_i128(self).unwrap_or_else(|| rank_fraction_free_big(self))
            }
        }
    }
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Extended Euclid; p is prime and a is nonzero mod p.
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "inverse of non-unit");
    (t.rem_euclid(p as i128)) as u64
}

/// Rank over GF(p). For p < 2^15 the inner loop adds `m * pivot` with
/// m, pivot < p and defers reduction: each step grows an entry by less
/// than 2^30, and the pivot count is far below 2^20, so accumulators
/// stay under 2^52 and a single `% p` at pivot time suffices.
fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<u64> = m
        .data
        .iter()
        .map(|&v| (v.rem_euclid(p as i64)) as u64)
        .collect();
    let lazy = p < (1 << 15) && rows.min(cols) < (1 << 20);
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Find a pivot row, reducing stale accumulators as we probe.
        let mut pivot = None;
        for r in rank..rows {
            let idx = r * cols + col;
            a[idx] %= p;
            if a[idx] != 0 {
                pivot = Some(r);
                break;
            }
        }
        let Some(pr) = pivot else { continue };
        if pr != rank {
            let (lo, hi) = a.split_at_mut(pr * cols);
            lo[rank * cols..rank * cols + cols].swap_with_slice(&mut hi[..cols]);
        }
        for v in &mut a[rank * cols + col..rank * cols + cols] {
            *v %= p;
        }
        let inv = inverse_mod(a[rank * cols + col], p);
        for r in rank + 1..rows {
            let f = a[r * cols + col] % p;
            if f == 0 {
                a[r * cols + col] = 0;
                continue;
            }
            let mult = p - (f * inv) % p;
            let (pivot_row, tail) = {
                let (head, tail) = a.split_at_mut(r * cols);
                (&head[rank * cols..rank * cols + cols], &mut tail[..cols])
            };
            if mult == 0 {
                tail[col] = 0;
                continue;
            }
            if lazy {
                for k in col..cols {
                    tail[k] += mult * pivot_row[k];
                }
            } else {
                for k in col..cols {
                    tail[k] = (tail[k] % p + mult * (pivot_row[k] % p)) % p;
                }
            }
            tail[col] = 0;
        }
        rank += 1;
    }
    rank
}

/// Fraction-free elimination in i128 with per-row gcd normalization.
/// Returns None on overflow so the caller can retry in big integers.
fn rank_fraction_free_i128(m: &IntMatrix) -> Option<usize> {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<i128>> = (0..rows)
        .map(|r| (0..cols).map(|c| m.get(r, c) as i128).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // Smallest nonzero pivot in absolute value keeps growth mild.
        let pivot = (rank..rows)
            .filter(|&r| a[r][col] != 0)
            .min_by_key(|&r| a[r][col].unsigned_abs());
        let Some(pr) = pivot else { continue };
        a.swap(rank, pr);
        let (pivot_row, rest) = {
            let (head, tail) = a.split_at_mut(rank + 1);
            (&head[rank], tail)
        };
        let pv = pivot_row[col];
        for row in rest.iter_mut() {
            let f = row[col];
            if f == 0 {
                continue;
            }
            let mut g: i128 = 0;
            for k in col..cols {
                let v = pv
                    .checked_mul(row[k])?
                    .checked_sub(f.checked_mul(pivot_row[k])?)?;
                row[k] = v;
                g = gcd_i128(g, v);
            }
            if g > 1 {
                for x in &mut row[col..] {
                    *x /= g;
                }
            }
        }
        rank += 1;
    }
    Some(rank)
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i128
}

fn rank_fraction_free_big(m: &IntMatrix) -> usize {
    let (rows, cols) = (m.rows, m.cols);
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|r| (0..cols).map(|c| BigInt::from(m.get(r, c))).collect())
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let pivot = (rank..rows)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].magnitude().clone());
        let Some(pr) = pivot else { continue };
        a.swap(rank, pr);
        let (pivot_row, rest) = {
            let (head, tail) = a.split_at_mut(rank + 1);
            (head[rank].clone(), tail)
        };
        let pv = pivot_row[col].clone();
        for row in rest.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            let mut g = BigInt::zero();
            for k in col..cols {
                row[k] = &pv * &row[k] - &f * &pivot_row[k];
                g = g.gcd(&row[k]);
            }
            if g.abs() > BigInt::from(1) {
                for x in &mut row[col..] {
                    *x = &*x / &g;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_rows(rows: &[&[i64]]) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    /// Independent oracle: rank over GF(p) by always-reduced elimination.
    fn naive_rank_mod_p(m: &IntMatrix, p: i64) -> usize {
        let mut a: Vec<Vec<i64>> = (0..m.rows())
            .map(|r| (0..m.cols()).map(|c| m.get(r, c).rem_euclid(p)).collect())
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(pr) = (rank..m.rows()).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(rank, pr);
            let inv = (1..p)
                .find(|x| (x * a[rank][col]).rem_euclid(p) == 1)
                .unwrap();
            let pivot_row = a[rank].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == rank || row[col] == 0 {
                    continue;
                }
                let f = (row[col] * inv).rem_euclid(p);
                for (x, &pv) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x - f * pv).rem_euclid(p);
                }
            }
            rank += 1;
            if rank == m.rows() {
                break;
            }
        }
        rank
    }

    #[test]
    fn field_parsing() {
        assert_eq!("gf2".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(2));
        assert_eq!(
            "gf32003".parse::<FieldSpec>().unwrap(),
            FieldSpec::Prime(32003)
        );
        assert_eq!("qq".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!(
            "gf4".parse::<FieldSpec>(),
            Err(FieldParseError::NotPrime(4))
        );
        assert!("hexagon".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::default(), FieldSpec::Prime(32003));
        assert!(is_prime(DEFAULT_PRIME));
    }

    #[test]
    fn rank_of_identity_and_singular() {
        let id = from_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let sing = from_rows(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        for field in [
            FieldSpec::Prime(2),
            FieldSpec::Prime(32003),
            FieldSpec::Rationals,
        ] {
            assert_eq!(id.rank(field), 3);
            assert_eq!(sing.rank(field), 2);
        }
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // Sum of two rows equals twice the third only in characteristic 2.
        let m = from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.rank(FieldSpec::Prime(2)), 2);
        assert_eq!(m.rank(FieldSpec::Prime(32003)), 3);
        assert_eq!(m.rank(FieldSpec::Rationals), 3);
    }

    #[test]
    fn lazy_elimination_matches_naive_oracle() {
        // Deterministic pseudo-random {-1,0,1} matrices.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for trial in 0..40 {
            let rows = 1 + (next() % 8) as usize;
            let cols = 1 + (next() % 8) as usize;
            let mut m = IntMatrix::zero(rows, cols);
            for r in 0..rows {
                for c in 0..cols {
                    m.set(r, c, (next() % 3) as i64 - 1);
                }
            }
            for p in [2i64, 3, 32003] {
                assert_eq!(
                    m.rank(FieldSpec::Prime(p as u64)),
                    naive_rank_mod_p(&m, p),
                    "trial {trial} p {p}"
                );
            }
            // Entries are tiny, so the i128 path must agree with big integers.
            assert_eq!(
                rank_fraction_free_i128(&m),
                Some(rank_fraction_free_big(&m))
            );
        }
    }

    #[test]
    fn big_integer_fallback_agrees_on_growth_prone_input() {
        // A matrix engineered to grow entries under fraction-free elimination.
        let mut m = IntMatrix::zero(6, 6);
        for r in 0..6 {
            for c in 0..6 {
                m.set(r, c, ((r * c + r + 1) % 5) as i64 - 2);
            }
        }
        assert_eq!(rank_fraction_free_big(&m), m.rank(FieldSpec::Rationals));
    }
}
