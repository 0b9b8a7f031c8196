//! One- and two-point integrals over spaces of stable maps to the plane.
//!
//! `phi1(k, d, j, m)` integrates `psi^k * ev^*(a^j) * H^m` over the one-pointed
//! space of degree-`d` maps, where `psi` is the first Chern class of the
//! cotangent line at the marked point and `H` is the point-incidence divisor.
//! `phi2(d, j1, j2, m)` is the two-pointed analogue without `psi`.
//!
//! The `psi` integrals come from writing `psi` as a combination of `H`,
//! `ev^*(a)` and boundary divisors, then splitting the boundary through the
//! Kunneth decomposition of the plane's diagonal, `sum_{mu+nu=2} a^mu (x) a^nu`.

use num_traits::Zero;

use crate::arith::{binomial, frac, ExactRational};
use crate::engine::Engine;
use crate::error::{invalid, Result};
use crate::memo::InvariantKey;

/// Inverse intersection pairing on the plane: `a^mu . a^nu = 1` iff `mu + nu = 2`.
pub(crate) const DIAGONAL_SPLIT: [(i64, i64); 3] = [(0, 2), (1, 1), (2, 0)];

impl Engine {
    pub fn phi1(&self, k: i64, d: i64, j: i64, m: i64) -> Result<ExactRational> {
        if !(0..=1).contains(&k) {
            return Err(invalid(format!("psi power must be 0 or 1, got {k}")));
        }
        if d < 1 {
            return Err(invalid(format!("degree must be positive, got {d}")));
        }
        Ok(self.phi(k, d, j, m))
    }

    pub fn phi2(&self, d: i64, j1: i64, j2: i64, m: i64) -> Result<ExactRational> {
        if d < 1 {
            return Err(invalid(format!("degree must be positive, got {d}")));
        }
        if !(0..=2).contains(&j2) {
            return Err(invalid(format!("second evaluation power must be 0, 1 or 2, got {j2}")));
        }
        Ok(self.phi_two_point(d, j1, j2, m))
    }

    /// Total over all indices; `k` must be 0 or 1.
    pub(crate) fn phi(&self, k: i64, d: i64, j: i64, m: i64) -> ExactRational {
        match k {
            0 => self.phi_plain(d, j, m),
            1 => self.phi_psi(d, j, m),
            _ => unreachable!("psi power {k}"),
        }
    }

    fn phi_plain(&self, d: i64, j: i64, m: i64) -> ExactRational {
        if d < 1 || j < 0 || m < 0 || j + m != 3 * d {
            return ExactRational::zero();
        }
        match j {
            1 => ExactRational::from_integer(self.n(d, 3 * d - 1) * d),
            2 => ExactRational::from_integer(self.n(d, 3 * d - 1)),
            _ => ExactRational::zero(),
        }
    }

    fn phi_two_point(&self, d: i64, j1: i64, j2: i64, m: i64) -> ExactRational {
        if d < 1 || j1 < 0 || m < 0 || j1 + j2 + m != 3 * d + 1 {
            return ExactRational::zero();
        }
        match j2 {
            1 => self.phi_plain(d, j1, m) * frac(d, 1),
            2 => self.phi_plain(d, j1, m + 1),
            // Fundamental class pulled back along the forgetful map.
            _ => ExactRational::zero(),
        }
    }

    fn phi_psi(&self, d: i64, j: i64, m: i64) -> ExactRational {
        if d < 1 || j < 0 || m < 0 || 1 + j + m != 3 * d {
            return ExactRational::zero();
        }
        self.memo(InvariantKey::PhiPsi { d, j, m }, || self.phi_psi_expand(d, j, m))
    }

    fn phi_psi_expand(&self, d: i64, j: i64, m: i64) -> ExactRational {
        let dd = d * d;
        let mut acc = self.phi_plain(d, j, m + 1) * frac(1, dd) - self.phi_plain(d, j + 1, m) * frac(2, d);
        for m1 in 0..=m {
            let m2 = m - m1;
            let choose = ExactRational::from_integer(binomial(m, m1));
            for d1 in 1..d {
                let d2 = d - d1;
                for (mu, nu) in DIAGONAL_SPLIT {
                    let left = self.phi_two_point(d1, j, mu, m1);
                    if left.is_zero() {
                        continue;
                    }
                    let right = self.phi_plain(d2, nu, m2);
                    acc += &choose * frac(d2 * d2, dd) * left * right;
                }
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn plain_integrals() {
        let e = Engine::new();
        assert_eq!(e.phi1(0, 1, 1, 2).unwrap(), int(1));
        assert_eq!(e.phi1(0, 2, 3, 3).unwrap(), int(0));
        assert_eq!(e.phi1(0, 3, 0, 9).unwrap(), int(0));
        assert_eq!(e.phi1(0, 3, 1, 8).unwrap(), int(36));
        assert_eq!(e.phi1(0, 3, 2, 7).unwrap(), int(12));
    }

    #[test]
    fn psi_integrals() {
        let e = Engine::new();
        // d = 1: empty splitting sum, 1 - 2.
        assert_eq!(e.phi1(1, 1, 1, 1).unwrap(), int(-1));
        // d = 2: 2/4 - 1 + 6 * (1/4) * 1 * 1.
        assert_eq!(e.phi1(1, 2, 1, 4).unwrap(), int(1));
    }

    #[test]
    fn rejects_bad_psi_power_and_degree() {
        let e = Engine::new();
        assert!(e.phi1(2, 2, 1, 3).is_err());
        assert!(e.phi1(-1, 2, 1, 3).is_err());
        assert!(e.phi1(0, 0, 1, 3).is_err());
        assert!(e.phi2(1, 1, 3, 0).is_err());
        assert!(e.phi2(0, 1, 1, 2).is_err());
    }

    #[test]
    fn two_point_conversion() {
        let e = Engine::new();
        assert_eq!(e.phi2(1, 1, 1, 2).unwrap(), int(1));
        assert_eq!(e.phi2(1, 1, 2, 1).unwrap(), int(1));
        assert_eq!(e.phi2(2, 1, 0, 6).unwrap(), int(0));
        for d in 1..=5 {
            for j1 in 0..=4 {
                for m in 0..=16 {
                    let lhs = e.phi2(d, j1, 1, m).unwrap();
                    let rhs = e.phi1(0, d, j1, m).unwrap() * int(d);
                    assert_eq!(lhs, rhs, "d={d} j1={j1} m={m}");
                }
            }
        }
    }

    #[test]
    fn fundamental_class_insertion_vanishes() {
        let e = Engine::new();
        for d in 1..=5 {
            for j1 in 0..=4 {
                for m in 0..=16 {
                    assert!(e.phi2(d, j1, 0, m).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn dimension_vanishing() {
        let e = Engine::new();
        for d in 1..=5 {
            for k in 0..=1 {
                for j in 0..=4 {
                    for m in 0..=16 {
                        if k + j + m != 3 * d {
                            assert!(e.phi1(k, d, j, m).unwrap().is_zero(), "k={k} d={d} j={j} m={m}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn agrees_with_kontsevich() {
        let e = Engine::new();
        for d in 1..=6 {
            let n = ExactRational::from_integer(e.kontsevich_n(d, 3 * d - 1).unwrap());
            assert_eq!(e.phi1(0, d, 1, 3 * d - 1).unwrap(), &n * int(d));
            assert_eq!(e.phi1(0, d, 2, 3 * d - 2).unwrap(), n);
        }
    }

    #[test]
    fn repeated_and_concurrent_evaluation_is_stable() {
        let cold: Vec<_> = {
            let e = Engine::new();
            (1..=6).flat_map(|d| (0..=3).map(move |j| (d, j))).map(|(d, j)| e.phi1(1, d, j, 3 * d - 1 - j).unwrap()).collect()
        };
        let shared = Engine::new();
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..4)
                .map(|_| {
                    s.spawn(|| {
                        (1..=6)
                            .rev()
                            .flat_map(|d| (0..=3).map(move |j| (d, j)))
                            .map(|(d, j)| shared.phi1(1, d, j, 3 * d - 1 - j).unwrap())
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            for h in handles {
                let mut got = h.join().unwrap();
                // produced in reverse degree order
                let mut expected = cold.clone();
                expected.sort();
                got.sort();
                assert_eq!(got, expected);
            }
        });
    }
}
