//! Rational quartics with an E6 singularity `(t^3, t^4)`.
//!
//! The WDVV relation on the closure of the E6 locus in the four-pointed space
//! of quartics picks up, besides ghost-bubble terms in `N4(E6, n + k)`,
//! configurations made of a cuspidal cubic and a line tangent to the cusp
//! branch. Those are counted by [`Engine::cusp_tangent_line_count`] via the
//! Chow ring of (lines) x (cubics) x (plane). Configurations with the line
//! attached through a ghost bubble enter with multiplicity two, the others
//! with multiplicity one.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{binomial, ExactInteger, ExactRational};
use crate::chow::{class_pa2, ChowElement};
use crate::engine::{expect_integer, Engine};
use crate::error::{invalid, Error, Result};
use crate::memo::InvariantKey;

/// Dimension of (lines) x (cubics) x (plane).
const AMBIENT_DIMENSION: i64 = 2 + 9 + 2;
/// Codimension of the tangent-to-cusp-branch locus.
const PA2_CODIMENSION: i64 = 6;

/// Both sides of the E6 relation at a given `n`, split by origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct E6Relation {
    pub n: i64,
    /// `16 N(n+2)` on the `(12|34)` side, excluding the unknown `N(n)`.
    pub lhs_bubble: ExactInteger,
    pub lhs_multiplicity_one: ExactInteger,
    /// Before doubling.
    pub lhs_multiplicity_two: ExactInteger,
    /// `4 N(n+1)` on the `(13|24)` side.
    pub rhs_bubble: ExactInteger,
    pub rhs_multiplicity_one: ExactInteger,
    /// Before doubling.
    pub rhs_multiplicity_two: ExactInteger,
}

impl E6Relation {
    /// Everything on the `(12|34)` side except the unknown `N4(E6, n)`.
    pub fn lhs_known(&self) -> ExactInteger {
        &self.lhs_bubble + &self.lhs_multiplicity_one + &self.lhs_multiplicity_two * 2
    }

    pub fn rhs(&self) -> ExactInteger {
        &self.rhs_bubble + &self.rhs_multiplicity_one + &self.rhs_multiplicity_two * 2
    }

    pub fn solve(&self) -> ExactInteger {
        self.rhs() - self.lhs_known()
    }
}

impl Engine {
    /// Number of configurations of a cuspidal cubic through `m1` points and a
    /// line through `m2` points tangent to the cusp branch, with the cusp on
    /// `n` general lines.
    pub fn cusp_tangent_line_count(&self, m1: i64, m2: i64, n: i64) -> Result<ExactInteger> {
        if m1 < 0 || m2 < 0 || n < 0 {
            return Err(invalid(format!("indices must be nonnegative, got ({m1}, {m2}, {n})")));
        }
        let key = InvariantKey::CuspTangent { m1, m2, n };
        if let Some(v) = self.store().get(&key) {
            return expect_integer(key, &v);
        }
        let value = cusp_tangent_raw(m1, m2, n)?;
        let value = self.memo(key, || ExactRational::from_integer(value));
        expect_integer(key, &value)
    }

    /// The unhalved intersection number `[PA2] . y1^m2 . y3^m1 . a^n`.
    pub fn cusp_tangent_intersection(&self, m1: i64, m2: i64, n: i64) -> Result<ExactInteger> {
        if m1 < 0 || m2 < 0 || n < 0 {
            return Err(invalid(format!("indices must be nonnegative, got ({m1}, {m2}, {n})")));
        }
        Ok(pa2_intersection(m1, m2, n))
    }

    pub fn e6_relation(&self, n: i64) -> Result<E6Relation> {
        if !(0..=2).contains(&n) {
            return Err(invalid(format!("the E6 relation is used for n in 0..=2, got {n}")));
        }
        let e6 = |k: i64| -> Result<ExactInteger> { self.e6_quartic_count(k) };
        let ct = |m1: i64, m2: i64| self.cusp_tangent_line_count(m1, m2, n);
        let b = |k: i64| binomial(6 - n, k);
        let (ct2, ct1, ct0) = (ct(5 - n, 2)?, ct(6 - n, 1)?, ct(7 - n, 0)?);

        Ok(E6Relation {
            n,
            lhs_bubble: e6(n + 2)? * 16,
            lhs_multiplicity_one: (b(5 - n) * &ct2 + b(6 - n) * &ct1) * 9,
            lhs_multiplicity_two: b(2) * &ct2 + b(1) * &ct1 + b(0) * &ct0,
            rhs_bubble: e6(n + 1)? * 4,
            rhs_multiplicity_one: (b(4 - n) * &ct2 + b(5 - n) * &ct1 + b(6 - n) * &ct0) * 3,
            rhs_multiplicity_two: (b(1) * &ct2 + b(0) * &ct1) * 3,
        })
    }

    /// Rational quartics with an E6 point on `n` general lines through
    /// `8 - n` general points.
    pub fn e6_quartic_count(&self, n: i64) -> Result<ExactInteger> {
        if n < 0 {
            return Err(invalid(format!("line count must be nonnegative, got {n}")));
        }
        if n >= 3 {
            return Ok(ExactInteger::zero());
        }
        let key = InvariantKey::E6 { n };
        if let Some(v) = self.store().get(&key) {
            return expect_integer(key, &v);
        }
        // Solved from n = 2 downwards; each step only needs larger n.
        let value = self.e6_relation(n)?.solve();
        if value < ExactInteger::zero() {
            return Err(Error::Consistency(format!("{key} solved to negative {value}")));
        }
        let stored = self.memo(key, || ExactRational::from_integer(value));
        expect_integer(key, &stored)
    }
}

fn pa2_intersection(m1: i64, m2: i64, n: i64) -> ExactInteger {
    if m1 + m2 + n != AMBIENT_DIMENSION - PA2_CODIMENSION {
        return ExactInteger::zero();
    }
    let exp = |v: i64| u32::try_from(v).unwrap_or(u32::MAX).min(16);
    let integrand = class_pa2()
        * ChowElement::y1().pow(exp(m2))
        * ChowElement::y3().pow(exp(m1))
        * ChowElement::a().pow(exp(n));
    integrand.integrate()
}

fn cusp_tangent_raw(m1: i64, m2: i64, n: i64) -> Result<BigInt> {
    let raw = pa2_intersection(m1, m2, n);
    let (half, rem) = raw.div_rem(&BigInt::from(2));
    if !rem.is_zero() {
        return Err(Error::Consistency(format!(
            "cusp-tangent intersection ({m1},{m2},{n}) = {raw} is odd"
        )));
    }
    Ok(half)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cusp_tangent_table() {
        let e = Engine::new();
        let expected = [
            ((5, 2, 0), 5),
            ((6, 1, 0), 18),
            ((7, 0, 0), 24),
            ((4, 2, 1), 1),
            ((5, 1, 1), 7),
            ((6, 0, 1), 12),
            ((3, 2, 2), 0),
            ((4, 1, 2), 1),
            ((5, 0, 2), 2),
        ];
        for ((m1, m2, n), v) in expected {
            assert_eq!(e.cusp_tangent_line_count(m1, m2, n).unwrap(), v.into(), "({m1},{m2},{n})");
        }
    }

    #[test]
    fn cusp_tangent_off_shell_and_overflow() {
        let e = Engine::new();
        assert!(e.cusp_tangent_line_count(7, 0, 1).unwrap().is_zero());
        assert!(e.cusp_tangent_line_count(4, 0, 3).unwrap().is_zero());
        assert!(e.cusp_tangent_line_count(0, 7, 0).unwrap().is_zero());
        assert!(e.cusp_tangent_line_count(-1, 8, 0).is_err());
    }

    #[test]
    fn raw_intersections_are_even() {
        let e = Engine::new();
        for n in 0..=7 {
            for m2 in 0..=(7 - n) {
                let raw = e.cusp_tangent_intersection(7 - n - m2, m2, n).unwrap();
                assert!(raw.is_even(), "({},{m2},{n}) -> {raw}", 7 - n - m2);
            }
        }
    }

    #[test]
    fn quartic_counts() {
        let e = Engine::new();
        assert_eq!(e.e6_quartic_count(2).unwrap(), 3.into());
        assert_eq!(e.e6_quartic_count(1).unwrap(), 33.into());
        assert_eq!(e.e6_quartic_count(0).unwrap(), 147.into());
        assert_eq!(e.e6_quartic_count(5).unwrap(), 0.into());
        assert!(e.e6_quartic_count(-1).is_err());
    }

    #[test]
    fn free_quartic_relation_terms() {
        let e = Engine::new();
        let rel = e.e6_relation(0).unwrap();
        assert_eq!(rel.lhs_bubble, 48.into());
        assert_eq!(rel.lhs_multiplicity_one, 432.into());
        assert_eq!(rel.lhs_multiplicity_two, 207.into());
        assert_eq!(rel.rhs_bubble, 132.into());
        assert_eq!(rel.rhs_multiplicity_one, 621.into());
        assert_eq!(rel.rhs_multiplicity_two, 144.into());
    }
}
