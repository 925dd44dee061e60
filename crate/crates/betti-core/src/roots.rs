//! Characteristic growth-base roots.
//!
//! For a tuple of positive integers (a_1, ..., a_t), the equation
//! 1 = x^{-a_1} + ... + x^{-a_t} has a unique solution on [1, ∞) because the
//! right side is decreasing in x and is at least 1 at x = 1. The recurring
//! bases are theta(d) = d^{1/(d+1)} (the tuple with d copies of d+1) and
//! gamma(d) (the tuple (d+1, d+2, ..., 2d)).

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Exponent tuple (a_1, ..., a_t); nonempty, all entries >= 1.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RootQuery {
    exponents: Vec<u32>,
}

impl RootQuery {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Argument("exponent tuple must be nonempty".into()));
        }
        if exponents.contains(&0) {
            return Err(Error::Argument("exponents must be positive".into()));
        }
        Ok(RootQuery { exponents })
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Evaluates x^{-a_1} + ... + x^{-a_t}.
    pub fn weight(&self, x: f64) -> f64 {
        self.exponents.iter().map(|&a| x.powi(-(a as i32))).sum()
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct RootResult {
    pub value: f64,
    /// |1 - sum value^{-a_i}|
    pub residual: f64,
    pub tolerance: f64,
}

/// Bisection solve of 1 = sum x^{-a_i} on [1, ∞).
///
/// The bracket [1, hi] is grown by doubling until the right side drops below
/// one; monotonicity then guarantees convergence to the unique root. The
/// returned residual is at most `tol`.
pub fn solve_root(query: &RootQuery, tol: f64) -> Result<RootResult> {
    if !(tol > 0.0) {
        return Err(Error::Argument(format!("tolerance must be positive, got {tol}")));
    }
    let f = |x: f64| query.weight(x) - 1.0;
    if query.exponents.len() == 1 {
        // single term: x^{-a} = 1 exactly at x = 1
        return Ok(RootResult { value: 1.0, residual: 0.0, tolerance: tol });
    }
    let mut lo = 1.0f64;
    let mut hi = 2.0f64;
    while f(hi) > 0.0 {
        lo = hi;
        hi *= 2.0;
    }
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm.abs() <= 0.5 * tol {
            break;
        }
        if fm >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * mid {
            break;
        }
    }
    let residual = f(mid).abs();
    if residual > tol {
        return Err(Error::Argument(format!(
            "tolerance {tol} not achievable in double precision (residual {residual})"
        )));
    }
    Ok(RootResult { value: mid, residual, tolerance: tol })
}

/// Solves with the default 1e-12 tolerance.
pub fn solve_root_default(exponents: &[u32]) -> Result<RootResult> {
    solve_root(&RootQuery::new(exponents.to_vec())?, DEFAULT_TOLERANCE)
}

/// theta(d) = d^{1/(d+1)}, the root for d copies of d+1.
pub fn theta(d: u32) -> f64 {
    assert!(d >= 1, "theta needs d >= 1");
    (d as f64).powf(1.0 / (d as f64 + 1.0))
}

/// gamma(d): the root for the tuple (d+1, d+2, ..., 2d); equivalently the
/// unique root on [1,2] of x^{2d} - x^{d-1} - ... - x - 1.
pub fn gamma(d: u32) -> f64 {
    assert!(d >= 1, "gamma needs d >= 1");
    solve_root_default(&(d + 1..=2 * d).collect::<Vec<_>>())
        .expect("gamma tuple is always solvable")
        .value
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_exponent_is_exactly_one() {
        let r = solve_root_default(&[1]).unwrap();
        assert_eq!(r.value, 1.0);
        assert_eq!(r.residual, 0.0);
        let r = solve_root_default(&[5]).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn cube_root_of_two() {
        let r = solve_root_default(&[3, 3]).unwrap();
        assert!((r.value - 2f64.powf(1.0 / 3.0)).abs() < 1e-10);
        assert!(r.residual <= r.tolerance);
    }

    #[test]
    fn fifth_root_of_three() {
        let r = solve_root_default(&[5, 5, 5]).unwrap();
        assert!((r.value - 3f64.powf(0.2)).abs() < 1e-10);
    }

    #[test]
    fn theta_matches_its_tuple() {
        for d in 1..=8u32 {
            let tuple = vec![d + 1; d as usize];
            let r = solve_root_default(&tuple).unwrap();
            assert!((r.value - theta(d)).abs() < 1e-9, "d={d}");
        }
    }

    #[test]
    fn gamma_satisfies_its_polynomial() {
        for d in 2..=6u32 {
            let g = gamma(d);
            let rhs: f64 = (1..d).map(|k| g.powi(k as i32)).sum::<f64>() + 1.0;
            assert!((g.powi(2 * d as i32) - rhs).abs() < 1e-8, "d={d}");
            assert!((1.0..=2.0).contains(&g));
        }
        assert_eq!(gamma(1), 1.0);
    }

    #[test]
    fn bracketing_invariant() {
        // weight is > 1 just left of any root > 1
        for exps in [vec![3u32, 4], vec![5, 6, 7, 8], vec![1, 7], vec![2, 2]] {
            let q = RootQuery::new(exps).unwrap();
            let r = solve_root(&q, 1e-12).unwrap();
            assert!(r.value > 1.0);
            assert!(q.weight(r.value - 1e-11) > 1.0 - 1e-9);
        }
    }

    #[test]
    fn entrywise_monotonicity() {
        // larger exponent tuples give smaller roots
        let pairs = [
            (vec![3u32, 3], vec![3u32, 4]),
            (vec![5, 6, 7, 7], vec![5, 6, 7, 8]),
            (vec![1, 7], vec![2, 8]),
        ];
        for (small, large) in pairs {
            let a = solve_root_default(&small).unwrap().value;
            let b = solve_root_default(&large).unwrap().value;
            assert!(b <= a + 1e-12);
        }
    }

    #[test]
    fn domination_inequality() {
        // if omega >= the root then omega^n >= sum omega^{n-a_i}
        let q = RootQuery::new(vec![4, 5, 6]).unwrap();
        let root = solve_root(&q, 1e-12).unwrap().value;
        for omega in [root, root + 1e-6, 1.3, 2.0] {
            for n in 1..=30 {
                let lhs = omega.powi(n);
                let rhs: f64 = q.exponents().iter().map(|&a| omega.powi(n - a as i32)).sum();
                assert!(lhs >= rhs - 1e-9 * lhs);
            }
        }
    }

    #[test]
    fn rejects_bad_queries() {
        assert!(RootQuery::new(vec![]).is_err());
        assert!(RootQuery::new(vec![0, 3]).is_err());
        let q = RootQuery::new(vec![3, 3]).unwrap();
        assert!(solve_root(&q, 0.0).is_err());
        assert!(solve_root(&q, -1.0).is_err());
    }
}
