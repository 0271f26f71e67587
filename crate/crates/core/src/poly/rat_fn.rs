use num_traits::Signed;

use super::{IntPoly, LaurentSeries};
use crate::error::{Error, Result};

/// Rational function `num/den` over the integers, kept in reduced form:
/// the polynomial gcd of numerator and denominator is a unit, contents are
/// coprime, and the lowest nonzero coefficient of the denominator is
/// positive. Equal functions therefore compare equal structurally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFn {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFn {
                num: IntPoly::zero(),
                den: IntPoly::one(),
            });
        }
        let g = num.gcd(&den);
        let mut num = num.divexact(&g)?;
        let mut den = den.divexact(&g)?;
        // strip common powers of q
        let k = num.order().unwrap().min(den.order().unwrap());
        if k > 0 {
            num = num.divexact(&IntPoly::monomial(1.into(), k))?;
            den = den.divexact(&IntPoly::monomial(1.into(), k))?;
        }
        let cg = num_integer::gcd(num.content(), den.content());
        num = num.divexact(&IntPoly::constant(cg.clone()))?;
        den = den.divexact(&IntPoly::constant(cg))?;
        let low = den.coeff(den.order().unwrap());
        if low.is_negative() {
            num = num.neg();
            den = den.neg();
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RationalFn {
            num: p,
            den: IntPoly::one(),
        }
    }

    /// `q^shift * num / den` with a possibly negative shift.
    pub fn new_shifted(num: IntPoly, den: IntPoly, shift: i64) -> Result<Self> {
        if shift >= 0 {
            RationalFn::new(num.shift_up(shift as usize), den)
        } else {
            RationalFn::new(num, den.shift_up((-shift) as usize))
        }
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &RationalFn) -> RationalFn {
        let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
        RationalFn::new(num, self.den.mul(&rhs.den)).expect("denominators nonzero")
    }

    pub fn sub(&self, rhs: &RationalFn) -> RationalFn {
        let num = self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den));
        RationalFn::new(num, self.den.mul(&rhs.den)).expect("denominators nonzero")
    }

    pub fn mul(&self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
            .expect("denominators nonzero")
    }

    /// Substitute `q -> q^k` in both numerator and denominator.
    pub fn substitute_pow(&self, k: usize) -> RationalFn {
        RationalFn::new(self.num.substitute_pow(k), self.den.substitute_pow(k))
            .expect("denominator stays nonzero")
    }

    /// Expand to a Laurent series with all exponents `< n`.
    pub fn series(&self, n: i64) -> Result<LaurentSeries> {
        LaurentSeries::from_rational(&self.num, &self.den, n)
    }
}
