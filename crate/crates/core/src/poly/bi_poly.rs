use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use super::{IntPoly, QPoly};

/// Polynomial in `t` whose coefficients are polynomials in the Lefschetz
/// class `L` (rendered elsewhere as 𝕃). Houses motivic zeta numerators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    coeffs: Vec<IntPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<IntPoly>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::new(vec![IntPoly::one()])
    }

    /// Build from `(t-exponent, L-exponent, coefficient)` triples.
    pub fn from_terms(terms: &[(usize, usize, i64)]) -> Self {
        let t_deg = terms.iter().map(|&(i, _, _)| i).max().unwrap_or(0);
        let mut coeffs = vec![IntPoly::zero(); t_deg + 1];
        for &(i, j, c) in terms {
            coeffs[i] = coeffs[i].add(&IntPoly::monomial(c.into(), j));
        }
        BiPoly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in `t`, or `None` for zero.
    pub fn t_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, t_exp: usize) -> IntPoly {
        self.coeffs.get(t_exp).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|i| self.coeff(i).add(&rhs.coeff(i))).collect())
    }

    pub fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        BiPoly::new((0..n).map(|i| self.coeff(i).sub(&rhs.coeff(i))).collect())
    }

    pub fn mul(&self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![IntPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(out)
    }

    /// Specialize `L` to a rational value, leaving a polynomial in `t`.
    pub fn eval_l(&self, v: &BigRational) -> QPoly {
        QPoly::new(self.coeffs.iter().map(|c| c.eval(v)).collect())
    }

    /// Specialize `L = 1`; every coefficient collapses to its coefficient
    /// sum, which stays integral.
    pub fn eval_l_one(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| c.eval_int(&1.into()))
                .collect(),
        )
    }

    /// Expand `self / (1-t)^b` to `n` coefficients (exponents `0..n`),
    /// each a polynomial in `L`.
    pub fn expand_over_one_minus_t(&self, b: u32, n: usize) -> Vec<IntPoly> {
        let den = IntPoly::from_i64(&[1, -1]).pow(b);
        let mut out: Vec<IntPoly> = Vec::with_capacity(n);
        for i in 0..n {
            // c_i = f_i - sum_{j=1..} den_j * c_{i-j}; den_0 = 1
            let mut c = self.coeff(i);
            for j in 1..=i.min(den.degree().unwrap_or(0)) {
                c = c.sub(&out[i - j].scale(&den.coeff(j)));
            }
            out.push(c);
        }
        out
    }
}
