//! Coefficient fields and matrix rank over them.
//!
//! GF(2) ranks use bit-packed rows and XOR elimination; other prime fields use
//! word-sized modular elimination; rational ranks use fraction-free Bareiss
//! elimination over arbitrary-precision integers so they are exact.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum FieldSpec {
    PrimeField(u64),
    Rationals,
}

impl FieldSpec {
    pub const GF2: FieldSpec = FieldSpec::PrimeField(2);

    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p >= 2 && (2..=p / 2).all(|d| !p.is_multiple_of(d)) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(Error::Argument(format!("{p} is not prime")))
        }
    }

    pub fn parse(name: &str) -> Result<FieldSpec> {
        match name.to_ascii_lowercase().as_str() {
            "q" | "rational" | "rationals" => Ok(FieldSpec::Rationals),
            s => {
                let p = s
                    .strip_prefix("gf")
                    .unwrap_or(s)
                    .parse::<u64>()
                    .map_err(|_| Error::Argument(format!("unknown field {name:?}")))?;
                FieldSpec::prime(p)
            }
        }
    }
}

impl std::fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FieldSpec::PrimeField(p) => write!(f, "gf{p}"),
            FieldSpec::Rationals => write!(f, "q"),
        }
    }
}

/// A matrix with entries in {0, +1, -1}, stored as signed entries per row;
/// the common shape of simplicial boundary operators.
pub struct SignMatrix {
    pub ncols: usize,
    /// Row-wise (column index, sign) pairs; sign is +1 or -1.
    pub rows: Vec<Vec<(usize, i8)>>,
}

impl SignMatrix {
    pub fn rank(&self, field: FieldSpec) -> usize {
        match field {
            FieldSpec::PrimeField(2) => self.rank_gf2(),
            FieldSpec::PrimeField(p) => self.rank_gfp(p),
            FieldSpec::Rationals => self.rank_rational(),
        }
    }

    fn rank_gf2(&self) -> usize {
        let words = self.ncols.div_ceil(64);
        let mut basis: Vec<Vec<u64>> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0;
        for entries in &self.rows {
            let mut row = vec![0u64; words];
            for &(c, _) in entries {
                row[c / 64] ^= 1u64 << (c % 64);
            }
            loop {
                let lead = match row.iter().position(|&w| w != 0) {
                    None => break,
                    Some(wi) => wi * 64 + row[wi].trailing_zeros() as usize,
                };
                match pivots.iter().position(|&p| p == lead) {
                    Some(i) => {
                        let basis_row = basis[i].clone();
                        for (a, b) in row.iter_mut().zip(basis_row) {
                            *a ^= b;
                        }
                    }
                    None => {
                        pivots.push(lead);
                        basis.push(row);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }

    fn rank_gfp(&self, p: u64) -> usize {
        let mut mat: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|entries| {
                let mut row = vec![0u64; self.ncols];
                for &(c, s) in entries {
                    row[c] = if s > 0 { 1 } else { p - 1 };
                }
                row
            })
            .collect();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(pivot) = (rank..mat.len()).find(|&r| !mat[r][col].is_multiple_of(p)) else {
                continue;
            };
            mat.swap(rank, pivot);
            let inv = mod_inverse(mat[rank][col] % p, p);
            for r in 0..mat.len() {
                if r != rank && !mat[r][col].is_multiple_of(p) {
                    let factor = mat[r][col] % p * inv % p;
                    for c in col..self.ncols {
                        let sub = factor * (mat[rank][c] % p) % p;
                        mat[r][c] = (mat[r][c] % p + p - sub) % p;
                    }
                }
            }
            rank += 1;
            if rank == mat.len() {
                break;
            }
        }
        rank
    }

    // Bareiss fraction-free elimination: every intermediate entry is an exact
    // minor of the original integer matrix, so the pivot count is the rank
    // over the rationals.
    fn rank_rational(&self) -> usize {
        let mut mat: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|entries| {
                let mut row = vec![BigInt::zero(); self.ncols];
                for &(c, s) in entries {
                    row[c] = BigInt::from(s);
                }
                row
            })
            .collect();
        let nrows = mat.len();
        let mut prev = BigInt::from(1);
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(pivot) = (rank..nrows).find(|&r| !mat[r][col].is_zero()) else {
                continue;
            };
            mat.swap(rank, pivot);
            for r in rank + 1..nrows {
                for c in col + 1..self.ncols {
                    let num = &mat[rank][col] * &mat[r][c] - &mat[r][col] * &mat[rank][c];
                    mat[r][c] = num / &prev;
                }
                mat[r][col] = BigInt::zero();
            }
            prev = mat[rank][col].abs();
            rank += 1;
            if rank == nrows {
                break;
            }
        }
        rank
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn matrix(rows: &[&[i8]]) -> SignMatrix {
        SignMatrix {
            ncols: rows.first().map_or(0, |r| r.len()),
            rows: rows
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(_, &v)| v != 0)
                        .map(|(c, &v)| (c, v))
                        .collect()
                })
                .collect(),
        }
    }

    #[test]
    fn ranks_agree_across_fields_on_small_cases() {
        let cases: Vec<(SignMatrix, usize)> = vec![
            (matrix(&[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]), 2),
            (matrix(&[&[1, 0], &[0, -1]]), 2),
            (matrix(&[&[0, 0], &[0, 0]]), 0),
            (matrix(&[&[1, -1, 1, -1]]), 1),
        ];
        for (m, expect) in cases {
            for field in [
                FieldSpec::GF2,
                FieldSpec::PrimeField(3),
                FieldSpec::PrimeField(5),
                FieldSpec::Rationals,
            ] {
                assert_eq!(m.rank(field), expect, "field {field}");
            }
        }
    }

    #[test]
    fn characteristic_dependent_rank() {
        // [[1,1],[1,1]] has rank 1 everywhere; [[1,1],[-1,1]] has rank 2 over Q
        // and GF(3/5) but rank 1 over GF(2)
        let m = matrix(&[&[1, 1], &[-1, 1]]);
        assert_eq!(m.rank(FieldSpec::GF2), 1);
        assert_eq!(m.rank(FieldSpec::PrimeField(3)), 2);
        assert_eq!(m.rank(FieldSpec::Rationals), 2);
    }

    #[test]
    fn field_parsing() {
        assert_eq!(FieldSpec::parse("gf2").unwrap(), FieldSpec::GF2);
        assert_eq!(FieldSpec::parse("GF5").unwrap(), FieldSpec::PrimeField(5));
        assert_eq!(FieldSpec::parse("q").unwrap(), FieldSpec::Rationals);
        assert!(FieldSpec::parse("gf4").is_err());
        assert!(FieldSpec::parse("nope").is_err());
    }
}
