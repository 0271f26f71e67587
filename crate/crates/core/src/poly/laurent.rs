use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::IntPoly;
use crate::error::{Error, Result};

/// Truncated Laurent series with exact rational coefficients.
///
/// Coefficients are stored for exponents `min_exp..trunc_order` and are
/// claimed correct exactly on that range; arithmetic propagates the
/// tightest truncation of its inputs and never extrapolates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentSeries {
    min_exp: i64,
    coeffs: Vec<BigRational>,
    trunc_order: i64,
}

impl LaurentSeries {
    pub fn new(min_exp: i64, coeffs: Vec<BigRational>, trunc_order: i64) -> Self {
        assert_eq!(
            coeffs.len() as i64,
            trunc_order - min_exp,
            "coefficient count must match the exponent window"
        );
        assert!(trunc_order > min_exp, "empty exponent window");
        LaurentSeries {
            min_exp,
            coeffs,
            trunc_order,
        }
    }

    pub fn zero(trunc_order: i64) -> Self {
        LaurentSeries::new(0, vec![BigRational::zero(); trunc_order.max(1) as usize], trunc_order.max(1))
    }

    /// Series with integer coefficients `c_l q^l` for `l = 0..`.
    pub fn from_int_coeffs(coeffs: &[i64], trunc_order: i64) -> Self {
        let mut v: Vec<BigRational> = coeffs
            .iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect();
        v.resize(trunc_order as usize, BigRational::zero());
        LaurentSeries::new(0, v, trunc_order)
    }

    pub fn from_poly(p: &IntPoly, trunc_order: i64) -> Self {
        let mut v = Vec::with_capacity(trunc_order as usize);
        for i in 0..trunc_order {
            v.push(BigRational::from_integer(p.coeff(i as usize)));
        }
        LaurentSeries::new(0, v, trunc_order)
    }

    /// Expand `num/den` with all coefficients of exponent `< n`.
    ///
    /// `den` may vanish at 0 as long as it is `q^k * unit`; the result is
    /// then a genuine Laurent series starting at exponent `-k`.
    pub fn from_rational(num: &IntPoly, den: &IntPoly, n: i64) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let k = den.order().expect("nonzero polynomial has an order");
        let unit: Vec<BigRational> = (k..=den.degree().unwrap())
            .map(|i| BigRational::from_integer(den.coeff(i)))
            .collect();
        let min_exp = -(k as i64);
        if n <= min_exp {
            return Err(Error::TruncationTooShort);
        }
        let len = (n - min_exp) as usize;
        let mut out: Vec<BigRational> = Vec::with_capacity(len);
        for i in 0..len {
            let mut c = BigRational::from_integer(num.coeff(i));
            for j in 1..unit.len().min(i + 1) {
                c -= &unit[j] * &out[i - j];
            }
            out.push(c / &unit[0]);
        }
        Ok(LaurentSeries::new(min_exp, out, n))
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn trunc_order(&self) -> i64 {
        self.trunc_order
    }

    /// Coefficient of `q^e`; zero below the window, `None` at or beyond the
    /// truncation order where nothing is known.
    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if e >= self.trunc_order {
            return None;
        }
        if e < self.min_exp {
            return Some(BigRational::zero());
        }
        Some(self.coeffs[(e - self.min_exp) as usize].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest exponent carrying a nonzero coefficient, if any.
    pub fn order(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|i| self.min_exp + i as i64)
    }

    pub fn add(&self, rhs: &LaurentSeries) -> LaurentSeries {
        self.zip(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &LaurentSeries) -> LaurentSeries {
        self.zip(rhs, |a, b| a - b)
    }

    fn zip(
        &self,
        rhs: &LaurentSeries,
        f: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> LaurentSeries {
        let min_exp = self.min_exp.min(rhs.min_exp);
        let trunc = self.trunc_order.min(rhs.trunc_order);
        let coeffs = (min_exp..trunc)
            .map(|e| f(self.coeff(e).unwrap(), rhs.coeff(e).unwrap()))
            .collect();
        LaurentSeries::new(min_exp, coeffs, trunc)
    }

    pub fn mul(&self, rhs: &LaurentSeries) -> LaurentSeries {
        let min_exp = self.min_exp + rhs.min_exp;
        // the product coefficient at e is complete only while both factors
        // are inside their known windows
        let trunc = (self.trunc_order + rhs.min_exp).min(rhs.trunc_order + self.min_exp);
        let mut out = vec![BigRational::zero(); (trunc - min_exp) as usize];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let e = self.min_exp + i as i64 + rhs.min_exp + j as i64;
                if e >= trunc {
                    break;
                }
                out[(e - min_exp) as usize] += a * b;
            }
        }
        LaurentSeries::new(min_exp, out, trunc)
    }

    pub fn scale(&self, c: &BigRational) -> LaurentSeries {
        LaurentSeries::new(
            self.min_exp,
            self.coeffs.iter().map(|a| a * c).collect(),
            self.trunc_order,
        )
    }

    /// Multiply by `q^k` (k may be negative).
    pub fn shift(&self, k: i64) -> LaurentSeries {
        LaurentSeries::new(self.min_exp + k, self.coeffs.clone(), self.trunc_order + k)
    }

    /// Substitute `q -> q^k`; exponents scale by `k` and the truncation
    /// window scales to the largest provably known order.
    pub fn substitute_pow(&self, k: i64) -> LaurentSeries {
        assert!(k >= 1);
        if k == 1 {
            return self.clone();
        }
        let min_exp = self.min_exp * k;
        let trunc = (self.trunc_order - 1) * k + 1;
        let mut out = vec![BigRational::zero(); (trunc - min_exp) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[(i as i64 * k) as usize] = c.clone();
        }
        LaurentSeries::new(min_exp, out, trunc)
    }

    /// Coefficient-wise equality for every exponent below `n` (and below
    /// both truncation orders).
    pub fn eq_through(&self, rhs: &LaurentSeries, n: i64) -> bool {
        let hi = n.min(self.trunc_order).min(rhs.trunc_order);
        let lo = self.min_exp.min(rhs.min_exp);
        (lo..hi).all(|e| self.coeff(e) == rhs.coeff(e))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn geometric_series() {
        let s = LaurentSeries::from_rational(
            &IntPoly::one(),
            &IntPoly::from_i64(&[1, -1]),
            4,
        )
        .unwrap();
        for e in 0..4 {
            assert_eq!(s.coeff(e), Some(q(1)));
        }
        assert_eq!(s.coeff(4), None);
    }

    #[test]
    fn long_division_example() {
        // (1+q^2)/(1-q) = 1 + q + 2q^2 + 2q^3 + 2q^4 + ...
        let s = LaurentSeries::from_rational(
            &IntPoly::from_i64(&[1, 0, 1]),
            &IntPoly::from_i64(&[1, -1]),
            5,
        )
        .unwrap();
        let expect = [1, 1, 2, 2, 2];
        for (e, &c) in expect.iter().enumerate() {
            assert_eq!(s.coeff(e as i64), Some(q(c)));
        }
    }

    #[test]
    fn node_euler_series() {
        // (1-q+q^2)/(1-q)^2 = 1 + q + 2q^2 + 3q^3 + 4q^4 + ...
        let s = LaurentSeries::from_rational(
            &IntPoly::from_i64(&[1, -1, 1]),
            &IntPoly::from_i64(&[1, -2, 1]),
            5,
        )
        .unwrap();
        let expect = [1, 1, 2, 3, 4];
        for (e, &c) in expect.iter().enumerate() {
            assert_eq!(s.coeff(e as i64), Some(q(c)));
        }
    }

    #[test]
    fn laurent_shift_from_denominator() {
        // 1/(q - q^2) = q^{-1} + 1 + q + ...
        let s = LaurentSeries::from_rational(
            &IntPoly::one(),
            &IntPoly::from_i64(&[0, 1, -1]),
            3,
        )
        .unwrap();
        assert_eq!(s.min_exp(), -1);
        assert_eq!(s.coeff(-1), Some(q(1)));
        assert_eq!(s.coeff(0), Some(q(1)));
        assert_eq!(s.coeff(2), Some(q(1)));
    }

    #[test]
    fn substitution_doubles_exponents() {
        let s = LaurentSeries::new(-1, vec![q(1), q(0), q(1)], 2);
        let t = s.substitute_pow(2);
        assert_eq!(t.coeff(-2), Some(q(1)));
        assert_eq!(t.coeff(-1), Some(q(0)));
        assert_eq!(t.coeff(2), Some(q(1)));
        assert_eq!(t.trunc_order(), 3);
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            LaurentSeries::from_rational(&IntPoly::one(), &IntPoly::zero(), 5),
            Err(crate::Error::DivisionByZero)
        );
    }
}
