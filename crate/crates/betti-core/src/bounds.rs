//! Closed-form upper bounds on the total reduced Betti number of the
//! independence complex, parameterized by the forbidden structure.

use crate::error::{Error, Result};
use crate::roots::{gamma, theta};
use serde::{Deserialize, Serialize};

/// A closed-form bound. `n` is the number of vertices; `m` counts forbidden
/// clique copies where applicable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundFormula {
    /// theta_4^n, valid for every graph.
    General { n: u32 },
    /// theta_3^n for K_5-free graphs.
    K5Free { n: u32 },
    /// 4^{m-1} theta_3^{n-5(m-1)} for graphs with no m disjoint induced K_5's.
    MK5Free { m: u32, n: u32 },
    /// 2^{n/3} for K_4-free graphs.
    K4Free { n: u32 },
    /// (theta_2^{-4} + theta_2^{-5} + theta_2^{-6}) theta_2^n for K_4-free
    /// graphs having a vertex of degree <= 3 outside any lone-triangle
    /// component.
    K4FreeStrong { n: u32 },
    /// gamma_4^n for triangle-free graphs.
    TriangleFree { n: u32 },
    /// gamma_2^n for triangle-free 2-degenerate graphs.
    TriangleFree2Degenerate { n: u32 },
    /// 2^{n/4} for triangular paths (n != 3).
    TpBound { n: u32 },
    /// 2^{n/4} (2^{-1/2} + 2^{-1/4}) for triangular cycles, n >= 9.
    TcBound { n: u32 },
}

/// Exact value `coeff * base^(num/den)` carried alongside the float when the
/// bound is a rational power of a small integer; lets tightness checks
/// compare without float equality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactPow {
    pub coeff: u128,
    pub base: u32,
    pub num: u32,
    pub den: u32,
}

impl ExactPow {
    pub fn to_f64(self) -> f64 {
        self.coeff as f64 * (self.base as f64).powf(self.num as f64 / self.den as f64)
    }

    /// The bound as an exact integer, when the exponent is integral.
    pub fn as_integer(self) -> Option<u128> {
        if self.num.is_multiple_of(self.den) {
            (self.base as u128)
                .checked_pow(self.num / self.den)
                .and_then(|p| p.checked_mul(self.coeff))
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct BoundValue {
    pub value: f64,
    pub exact: Option<ExactPow>,
}

/// Evaluates a closed-form bound.
pub fn theorem_bound(formula: &BoundFormula) -> Result<BoundValue> {
    let val = |value: f64, exact: Option<ExactPow>| Ok(BoundValue { value, exact });
    match *formula {
        BoundFormula::General { n } => val(
            theta(4).powi(n as i32),
            Some(ExactPow { coeff: 1, base: 4, num: n, den: 5 }),
        ),
        BoundFormula::K5Free { n } => val(
            theta(3).powi(n as i32),
            Some(ExactPow { coeff: 1, base: 3, num: n, den: 4 }),
        ),
        BoundFormula::MK5Free { m, n } => {
            if m < 1 {
                return Err(Error::Argument("m must be at least 1".into()));
            }
            if n < 5 * (m - 1) {
                return Err(Error::Argument(format!(
                    "need n >= 5(m-1), got n={n}, m={m}"
                )));
            }
            let coeff = 4u128.pow(m - 1);
            let exp = n - 5 * (m - 1);
            val(
                coeff as f64 * theta(3).powi(exp as i32),
                Some(ExactPow { coeff, base: 3, num: exp, den: 4 }),
            )
        }
        BoundFormula::K4Free { n } => val(
            2f64.powf(n as f64 / 3.0),
            Some(ExactPow { coeff: 1, base: 2, num: n, den: 3 }),
        ),
        BoundFormula::K4FreeStrong { n } => {
            let t2 = theta(2);
            val((t2.powi(-4) + t2.powi(-5) + t2.powi(-6)) * t2.powi(n as i32), None)
        }
        BoundFormula::TriangleFree { n } => val(gamma(4).powi(n as i32), None),
        BoundFormula::TriangleFree2Degenerate { n } => val(gamma(2).powi(n as i32), None),
        BoundFormula::TpBound { n } => {
            if n == 3 {
                return Err(Error::Argument("the 2^{n/4} triangular-path bound excludes n = 3".into()));
            }
            val(
                2f64.powf(n as f64 / 4.0),
                Some(ExactPow { coeff: 1, base: 2, num: n, den: 4 }),
            )
        }
        BoundFormula::TcBound { n } => {
            if n < 9 {
                return Err(Error::Argument("the triangular-cycle bound needs n >= 9".into()));
            }
            val(
                2f64.powf(n as f64 / 4.0) * (2f64.powf(-0.5) + 2f64.powf(-0.25)),
                None,
            )
        }
    }
}
