//! Two-component rational curves tangent at their node.
//!
//! The tangency locus inside a product of one-pointed spaces is the pulled-back
//! diagonal cut by the Euler class `psi_1 + psi_2 + c_1(ev^* T P^2)`. With the
//! diagonal split as `sum_{mu+nu=2} ev_1^*(a^mu) ev_2^*(a^nu)` and
//! `c_1(T P^2) = 3a` placed on the second factor, every term is a product of two
//! one-point integrals.

use num_traits::Zero;

use crate::arith::{ExactInteger, ExactRational};
use crate::engine::{expect_integer, Engine};
use crate::error::{invalid, Result};
use crate::memo::InvariantKey;
use crate::tautological::DIAGONAL_SPLIT;

impl Engine {
    /// Two-component curves of degrees `d1`, `d2` through `m1`, `m2` points,
    /// tangent at the node, with the node on `n` general lines.
    pub fn tangency_count(&self, d1: i64, d2: i64, m1: i64, m2: i64, n: i64) -> Result<ExactInteger> {
        if d1 < 1 || d2 < 1 {
            return Err(invalid(format!("component degrees must be positive, got ({d1}, {d2})")));
        }
        let value = self.tangency(d1, d2, m1, m2, n);
        expect_integer(InvariantKey::Tangency { d1, d2, m1, m2, n }, &value)
    }

    pub(crate) fn tangency(&self, d1: i64, d2: i64, m1: i64, m2: i64, n: i64) -> ExactRational {
        if d1 < 1 || d2 < 1 || m1 < 0 || m2 < 0 || n < 0 || m1 + m2 + n + 1 != 3 * (d1 + d2) - 2 {
            return ExactRational::zero();
        }
        self.memo(InvariantKey::Tangency { d1, d2, m1, m2, n }, || {
            let mut acc = ExactRational::zero();
            for (mu, nu) in DIAGONAL_SPLIT {
                let first_plain = self.phi(0, d1, mu + n, m1);
                let first_psi = self.phi(1, d1, mu + n, m1);
                let second_plain = self.phi(0, d2, nu, m2);
                let second_psi = self.phi(1, d2, nu, m2);
                let second_tangent = self.phi(0, d2, nu + 1, m2) * ExactRational::from_integer(3.into());
                acc += &first_psi * &second_plain + &first_plain * second_psi + first_plain * second_tangent;
            }
            acc
        })
    }
}
