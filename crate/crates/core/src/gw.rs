//! Genus-zero counts of rational plane curves through points (Kontsevich).

use num_traits::Zero;

use crate::arith::{binomial, ExactInteger, ExactRational};
use crate::engine::Engine;
use crate::error::{invalid, Result};
use crate::memo::InvariantKey;

impl Engine {
    /// Number of rational degree-`d` plane curves through `m` general points.
    /// Zero unless `m = 3d - 1`.
    pub fn kontsevich_n(&self, d: i64, m: i64) -> Result<ExactInteger> {
        if d < 1 {
            return Err(invalid(format!("degree must be positive, got {d}")));
        }
        Ok(self.n(d, m))
    }

    /// Total version used inside other recursions: zero for any `d < 1` or
    /// off-shell `m`.
    pub(crate) fn n(&self, d: i64, m: i64) -> ExactInteger {
        if d < 1 || m != 3 * d - 1 {
            return ExactInteger::zero();
        }
        if d == 1 {
            return ExactInteger::from(1);
        }
        let value = self.memo(InvariantKey::Kontsevich { d, m }, || {
            ExactRational::from_integer(self.n_recursion(d))
        });
        value.to_integer()
    }

    fn n_recursion(&self, d: i64) -> ExactInteger {
        let total = 3 * d - 4;
        let mut acc = ExactInteger::zero();
        for d1 in 1..d {
            let d2 = d - d1;
            for m1 in 0..=total {
                let m2 = total - m1;
                let glued = self.n(d1, m1 + 1) * self.n(d2, m2 + 1) * (d1 * d1 * d2 * d2);
                let bubbled = self.n(d1, m1 + 2) * self.n(d2, m2) * (d1 * d2 * d2 * d2);
                let term = glued - bubbled;
                if !term.is_zero() {
                    acc += binomial(total, m1) * term;
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(d: i64, m: i64) -> ExactInteger {
        Engine::new().kontsevich_n(d, m).unwrap()
    }

    #[test]
    fn known_values() {
        assert_eq!(n(1, 2), 1.into());
        assert_eq!(n(1, 5), 0.into());
        assert_eq!(n(2, 5), 1.into());
        assert_eq!(n(3, 8), 12.into());
        assert_eq!(n(4, 11), 620.into());
        assert_eq!(n(5, 14), 87304.into());
    }

    #[test]
    fn rejects_nonpositive_degree() {
        assert!(Engine::new().kontsevich_n(0, 2).is_err());
        assert!(Engine::new().kontsevich_n(-3, 2).is_err());
    }

    #[test]
    fn off_shell_vanishes() {
        let engine = Engine::new();
        for d in 1..=9 {
            for m in -2..=30 {
                if m != 3 * d - 1 {
                    assert!(engine.kontsevich_n(d, m).unwrap().is_zero(), "d={d} m={m}");
                }
            }
        }
    }

    #[test]
    fn positive_through_degree_twelve() {
        let engine = Engine::new();
        for d in 1..=12 {
            assert!(engine.kontsevich_n(d, 3 * d - 1).unwrap() > ExactInteger::zero());
        }
    }

    #[test]
    fn splitting_sum_order_independent() {
        // Re-evaluate the recursion with the (d1, m1) loops reversed.
        let engine = Engine::new();
        for d in 2..=8i64 {
            let total = 3 * d - 4;
            let mut acc = ExactInteger::zero();
            for d1 in (1..d).rev() {
                let d2 = d - d1;
                for m1 in (0..=total).rev() {
                    let m2 = total - m1;
                    acc += binomial(total, m1)
                        * (engine.n(d1, m1 + 1) * engine.n(d2, m2 + 1) * (d1 * d1 * d2 * d2)
                            - engine.n(d1, m1 + 2) * engine.n(d2, m2) * (d1 * d2 * d2 * d2));
                }
            }
            assert_eq!(acc, engine.kontsevich_n(d, 3 * d - 1).unwrap());
        }
    }
}
