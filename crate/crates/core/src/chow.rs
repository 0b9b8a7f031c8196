//! Integer Chow ring of `P^2 x P^9 x P^2`, i.e. `Z[y1, y3, a] / (y1^3, y3^10, a^3)`.
//!
//! `y1` is the hyperplane class of the space of lines, `y3` that of the space
//! of plane cubics and `a` the hyperplane class of the plane itself.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::arith::ExactInteger;

/// Exclusive exponent bounds for `(y1, y3, a)`.
pub const EXPONENT_LIMITS: [u32; 3] = [3, 10, 3];

/// Exponent triple of `y1^e1 * y3^e3 * a^ea`.
pub type Monomial = [u32; 3];

pub const TOP: Monomial = [2, 9, 2];

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChowElement {
    terms: BTreeMap<Monomial, ExactInteger>,
}

fn in_range(e: &Monomial) -> bool {
    e.iter().zip(EXPONENT_LIMITS).all(|(x, lim)| *x < lim)
}

impl ChowElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial([0, 0, 0], ExactInteger::one())
    }

    /// `coeff * y1^e1 * y3^e3 * a^ea`; zero when an exponent overflows.
    pub fn monomial(exponents: Monomial, coeff: impl Into<ExactInteger>) -> Self {
        let mut out = Self::zero();
        out.add_term(exponents, coeff.into());
        out
    }

    pub fn y1() -> Self {
        Self::monomial([1, 0, 0], 1)
    }

    pub fn y3() -> Self {
        Self::monomial([0, 1, 0], 1)
    }

    pub fn a() -> Self {
        Self::monomial([0, 0, 1], 1)
    }

    fn add_term(&mut self, exponents: Monomial, coeff: ExactInteger) {
        if coeff.is_zero() || !in_range(&exponents) {
            return;
        }
        let slot = self.terms.entry(exponents).or_insert_with(ExactInteger::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exponents: Monomial) -> ExactInteger {
        self.terms.get(&exponents).cloned().unwrap_or_else(ExactInteger::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &ExactInteger)> {
        self.terms.iter()
    }

    pub fn scale(&self, factor: impl Into<ExactInteger>) -> Self {
        let factor = factor.into();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(*e, c * &factor);
        }
        out
    }

    pub fn pow(&self, exp: u32) -> Self {
        (0..exp).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Degree of the pairing with the fundamental class: the coefficient of
    /// `y1^2 y3^9 a^2`.
    pub fn integrate(&self) -> ExactInteger {
        self.coefficient(TOP)
    }
}

pub fn chow_mul(x: &ChowElement, y: &ChowElement) -> ChowElement {
    let mut out = ChowElement::zero();
    for (ex, cx) in &x.terms {
        for (ey, cy) in &y.terms {
            let e = [ex[0] + ey[0], ex[1] + ey[1], ex[2] + ey[2]];
            out.add_term(e, cx * cy);
        }
    }
    out
}

pub fn chow_integrate(x: &ChowElement) -> ExactInteger {
    x.integrate()
}

impl Mul for &ChowElement {
    type Output = ChowElement;
    fn mul(self, rhs: &ChowElement) -> ChowElement {
        chow_mul(self, rhs)
    }
}

impl Mul for ChowElement {
    type Output = ChowElement;
    fn mul(self, rhs: ChowElement) -> ChowElement {
        chow_mul(&self, &rhs)
    }
}

impl Add for &ChowElement {
    type Output = ChowElement;
    fn add(self, rhs: &ChowElement) -> ChowElement {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Add for ChowElement {
    type Output = ChowElement;
    fn add(self, rhs: ChowElement) -> ChowElement {
        &self + &rhs
    }
}

impl Neg for ChowElement {
    type Output = ChowElement;
    fn neg(self) -> ChowElement {
        self.scale(-1)
    }
}

impl Sub for ChowElement {
    type Output = ChowElement;
    fn sub(self, rhs: ChowElement) -> ChowElement {
        &self + &(-rhs)
    }
}

impl fmt::Display for ChowElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (name, exp) in ["y1", "y3", "a"].iter().zip(e) {
                match exp {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{exp}")?,
                }
            }
        }
        Ok(())
    }
}

/// Cuspidal cubics with the cusp at the marked point.
pub fn class_a2f() -> ChowElement {
    ChowElement::monomial([0, 2, 2], 24) + ChowElement::monomial([0, 3, 1], 12) + ChowElement::monomial([0, 4, 0], 2)
}

/// Additionally the line passes through the cusp.
pub fn class_a2l() -> ChowElement {
    (ChowElement::y1() + ChowElement::a()) * class_a2f()
}

/// Additionally the line is tangent to the cusp branch: multiply by the Euler
/// class `y3 + 2*lambda + 3a` with `lambda = y1 - 2a`.
pub fn class_pa2() -> ChowElement {
    let lambda = ChowElement::y1() - ChowElement::a().scale(2);
    let euler = ChowElement::y3() + lambda.scale(2) + ChowElement::a().scale(3);
    class_a2l() * euler
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: Monomial, c: i64) -> ChowElement {
        ChowElement::monomial(e, c)
    }

    #[test]
    fn products_and_truncation() {
        let s = ChowElement::y1() + ChowElement::a();
        assert_eq!(&s * &s, m([2, 0, 0], 1) + m([1, 0, 1], 2) + m([0, 0, 2], 1));
        assert!((ChowElement::a().pow(2) * ChowElement::a()).is_zero());
        assert!((ChowElement::y3().pow(9) * ChowElement::y3()).is_zero());
        assert!(ChowElement::y1().pow(3).is_zero());
    }

    #[test]
    fn integration() {
        assert_eq!(chow_integrate(&m(TOP, 1)), 1.into());
        assert_eq!(chow_integrate(&m([1, 9, 2], 1)), 0.into());
        assert_eq!(chow_integrate(&(m(TOP, 24) + m([1, 8, 2], 7))), 24.into());
    }

    #[test]
    fn cusp_class_coefficients() {
        let f = class_a2f();
        let y3 = ChowElement::y3();
        let a = ChowElement::a();
        let y1sq = ChowElement::y1().pow(2);
        assert_eq!((&f * &y3.pow(7) * y1sq.clone()).integrate(), 24.into());
        assert_eq!((&f * &y3.pow(6) * a.clone() * y1sq.clone()).integrate(), 12.into());
        assert_eq!((&f * &y3.pow(5) * a.pow(2) * y1sq).integrate(), 2.into());
    }

    #[test]
    fn tangent_class_is_homogeneous_of_degree_six() {
        let pa2 = class_pa2();
        assert!(!pa2.is_zero());
        for (e, _) in pa2.terms() {
            assert_eq!(e.iter().sum::<u32>(), 6);
        }
        assert_eq!((class_pa2() * ChowElement::y3().pow(7)).integrate(), 48.into());
        assert_eq!((class_pa2() * ChowElement::y1() * ChowElement::y3().pow(6)).integrate(), 36.into());
    }

    #[test]
    fn display() {
        assert_eq!(class_a2f().to_string(), "2*y3^4 + 12*y3^3*a + 24*y3^2*a^2");
        assert_eq!(ChowElement::zero().to_string(), "0");
    }
}
