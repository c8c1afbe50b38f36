//! Exact matrix rank over `Q` and over prime fields.
//!
//! Rational rank uses fraction-free integer elimination, with each updated
//! row divided by its content. Entries are tracked in `i64` with checked
//! arithmetic; on overflow the elimination restarts over `BigInt`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Coefficient field for homology and Betti computations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    /// `GF(p)`; `p` must be a prime below `2^32`.
    pub fn prime(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `q`, `Q`, `p=7`, or a bare prime.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rational);
        }
        let digits = s.strip_prefix("p=").or_else(|| s.strip_prefix("P=")).unwrap_or(s);
        let p: u64 = digits.parse().map_err(|_| Error::InvalidParameter(format!("unknown field '{s}'")))?;
        Field::prime(p)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Rank of an integer matrix (given as rows) over `field`.
pub fn rank(rows: &[Vec<i64>], field: Field) -> usize {
    match field {
        Field::Rational => match rational_rank_i64(rows.to_vec()) {
            Some(r) => r,
            None => rational_rank_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
        },
        Field::Prime(p) => modular_rank(rows, p),
    }
}

fn rational_rank_i64(mut rows: Vec<Vec<i64>>) -> Option<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        // Smallest non-zero pivot keeps the entries small.
        let Some(pivot) =
            (rank..rows.len()).filter(|&r| rows[r][col] != 0).min_by_key(|&r| rows[r][col].unsigned_abs())
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col];
        for r in rank + 1..rows.len() {
            let a = rows[r][col];
            if a == 0 {
                continue;
            }
            let g = p.gcd(&a);
            let (pm, am) = (p / g, a / g);
            let mut content = 0i64;
            for c in col..ncols {
                let v = rows[r][c].checked_mul(pm)?.checked_sub(rows[rank][c].checked_mul(am)?)?;
                rows[r][c] = v;
                content = content.gcd(&v);
            }
            if content > 1 {
                for v in &mut rows[r][col..] {
                    *v /= content;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    Some(rank)
}

fn rational_rank_big(mut rows: Vec<Vec<BigInt>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).filter(|&r| !rows[r][col].is_zero()).min_by_key(|&r| rows[r][col].abs())
        else {
            continue;
        };
        rows.swap(rank, pivot);
        let p = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let a = rows[r][col].clone();
            let g = p.gcd(&a);
            let (pm, am) = (&p / &g, &a / &g);
            let mut content = BigInt::zero();
            for c in col..ncols {
                let v = &rows[r][c] * &pm - &rows[rank][c] * &am;
                content = content.gcd(&v);
                rows[r][c] = v;
            }
            if content > BigInt::from(1) {
                for v in &mut rows[r][col..] {
                    *v /= &content;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

fn modular_rank(rows: &[Vec<i64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> =
        rows.iter().map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = mod_pow(m[rank][col], p - 2, p);
        for c in col..ncols {
            m[rank][c] = m[rank][c] * inv % p;
        }
        for r in rank + 1..m.len() {
            let a = m[r][col];
            if a == 0 {
                continue;
            }
            for c in col..ncols {
                m[r][c] = (m[r][c] + p - a * m[rank][c] % p) % p;
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}
