//! Global-curve Euler series, the generalized product formula and BPS
//! integer extraction.
//!
//! Half-integer powers of `q` never appear: every factor is rewritten in
//! `x = q/(1-q)^2` and `T = q + 1/q`, both exact rational functions of `q`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, LaurentSeries};
use crate::zeta::{self, SingularityType};

/// Chebyshev-style recurrence polynomials with `F_i(q + 1/q) = q^i + q^{-i}`.
pub fn f_poly(i: u32) -> IntPoly {
    match i {
        0 => IntPoly::constant(2.into()),
        1 => IntPoly::var(),
        _ => {
            let t = IntPoly::var();
            let mut prev = f_poly(0);
            let mut cur = f_poly(1);
            for _ in 2..=i {
                let next = t.mul(&cur).sub(&prev);
                prev = cur;
                cur = next;
            }
            cur
        }
    }
}

fn binom(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for j in 0..k.min(n - k) {
        r = r * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    r
}

/// The combination of `F`-polynomials satisfying
/// `sum_{l=0}^i q^{2l} - (1-q)^{2i} = q^i G_i(q + 1/q)`.
pub fn g_poly(i: u32) -> IntPoly {
    assert!(i >= 1);
    let mut acc = IntPoly::zero();
    // odd-distance terms pick up the binomial straight, even-distance terms
    // the complement `1 - binom`, and the constant term follows the parity
    // of i
    for j in 1..=i {
        let b = binom(2 * i, i + j);
        let coeff = if (i + j) % 2 == 1 {
            b
        } else {
            BigInt::one() - b
        };
        acc = acc.add(&f_poly(j).scale(&coeff));
    }
    let central = binom(2 * i, i);
    let constant = if i % 2 == 1 {
        central
    } else {
        BigInt::one() - central
    };
    acc.add(&IntPoly::constant(constant))
}

/// `G`-polynomial for the `<3,4>` branch in the product formula.
pub fn g_poly_e6() -> IntPoly {
    IntPoly::from_i64(&[9, -14, 6])
}

/// `G`-polynomial for the `<3,5>` branch in the product formula.
pub fn g_poly_e8() -> IntPoly {
    IntPoly::from_i64(&[-15, 33, -27, 8])
}

/// `q^half_exp * G(q + 1/q)` as a polynomial in `q`; requires
/// `deg G <= half_exp`.
fn g_substituted(g: &IntPoly, half_exp: u32) -> IntPoly {
    let (shift, p) = g.eval_at_q_plus_qinv();
    assert!(shift <= half_exp as usize, "G degree exceeds the factor exponent");
    p.shift_up(half_exp as usize - shift)
}

/// Check `sum_{l=0}^i q^{2l} - (1-q)^{2i} = q^i G_i(q + 1/q)` exactly.
pub fn verify_w2(i: u32) -> bool {
    let mut lhs = IntPoly::zero();
    for l in 0..=i {
        lhs = lhs.add(&IntPoly::monomial(1.into(), 2 * l as usize));
    }
    let lhs = lhs.sub(&IntPoly::from_i64(&[1, -1]).pow(2 * i));
    lhs == g_substituted(&g_poly(i), i)
}

/// Description of an integral curve: arithmetic genus plus the multiset of
/// its singularities, all from the supported families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveSpec {
    genus: u64,
    singularities: Vec<(SingularityType, u32)>,
}

impl CurveSpec {
    /// Fails when the geometric genus `g - sum(mult * delta)` would be
    /// negative.
    pub fn new(genus: u64, singularities: Vec<(SingularityType, u32)>) -> Result<Self> {
        let spent: u64 = singularities
            .iter()
            .map(|(s, m)| s.delta() * *m as u64)
            .sum();
        if spent > genus {
            return Err(Error::InvalidCurveSpec);
        }
        Ok(CurveSpec {
            genus,
            singularities,
        })
    }

    pub fn genus(&self) -> u64 {
        self.genus
    }

    pub fn singularities(&self) -> &[(SingularityType, u32)] {
        &self.singularities
    }

    pub fn geometric_genus(&self) -> u64 {
        self.genus
            - self
                .singularities
                .iter()
                .map(|(s, m)| s.delta() * *m as u64)
                .sum::<u64>()
    }
}

/// `sum_l chi(C^{[l]}) q^l`: the product of the local Euler-number zeta
/// factors with the smooth-part prefactor `(1-q)^{2g~-2+sum b_i}`.
pub fn curve_euler_series(c: &CurveSpec, n: i64) -> Result<LaurentSeries> {
    let g_tilde = c.geometric_genus() as i64;
    let mut num = IntPoly::one();
    for (s, m) in c.singularities() {
        let f = zeta::zeta_closed_form(*s).numerator().eval_l_one();
        num = num.mul(&f.pow(*m));
    }
    // the (1-q)^{b_i} denominators cancel against the prefactor, leaving
    // a net power 2g~ - 2
    let net = 2 * g_tilde - 2;
    let one_minus_q = IntPoly::from_i64(&[1, -1]);
    let (num, den) = if net >= 0 {
        (num.mul(&one_minus_q.pow(net as u32)), IntPoly::one())
    } else {
        (num, one_minus_q.pow((-net) as u32))
    };
    LaurentSeries::from_rational(&num, &den, n)
}

/// The right side of the generalized product formula, as the shifted series
/// `sum_l chi(C^{[l]}) q^{l+1-g}` with lowest exponent `1 - g`.
pub fn kawai_product_series(c: &CurveSpec, n: i64) -> Result<LaurentSeries> {
    let g = c.genus() as i64;
    let one_minus_q = IntPoly::from_i64(&[1, -1]);
    let mut num = IntPoly::one();
    let mut den_pow: i64 = 0; // power of (1-q) downstairs
    let mut q_shift: i64 = 0; // power of q upstairs (may go negative)

    // prefactor ((1-q)^2 / q)^{g-1}
    den_pow -= 2 * (g - 1);
    q_shift -= g - 1;

    for (s, m) in c.singularities() {
        let (factor_num, half_exp) = match s {
            // 1 + q/(1-q)^2 = ((1-q)^2 + q)/(1-q)^2
            SingularityType::A1 => (one_minus_q.pow(2).add(&IntPoly::var()), 1u32),
            SingularityType::A2d(d) => {
                let i = *d;
                (
                    one_minus_q.pow(2 * i).add(&g_substituted(&g_poly(i), i)),
                    i,
                )
            }
            SingularityType::E6 => (
                one_minus_q.pow(6).add(&g_substituted(&g_poly_e6(), 3)),
                3,
            ),
            SingularityType::E8 => (
                one_minus_q.pow(8).add(&g_substituted(&g_poly_e8(), 4)),
                4,
            ),
        };
        num = num.mul(&factor_num.pow(*m));
        den_pow += 2 * half_exp as i64 * *m as i64;
    }

    let (mut num, mut den) = if den_pow >= 0 {
        (num, one_minus_q.pow(den_pow as u32))
    } else {
        (num.mul(&one_minus_q.pow((-den_pow) as u32)), IntPoly::one())
    };
    if q_shift >= 0 {
        num = num.shift_up(q_shift as usize);
    } else {
        den = den.shift_up((-q_shift) as usize);
    }
    LaurentSeries::from_rational(&num, &den, n)
}

/// BPS numbers `n_h` for `g~ <= h <= g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpsVector {
    entries: BTreeMap<i64, BigInt>,
}

impl BpsVector {
    pub fn get(&self, h: i64) -> BigInt {
        self.entries.get(&h).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.entries.iter()
    }
}

/// Peel the integers `n_h` out of `sum_l chi q^{l+1-g}`, highest `h` first:
/// `x^{1-h}` has strictly increasing lowest exponent `1-h` as `h` drops, so
/// the lowest surviving coefficient always belongs to the current `h`.
pub fn bps_decompose(series: &LaurentSeries, g: u64, g_tilde: u64) -> Result<BpsVector> {
    let n = series.trunc_order();
    let mut rem = series.clone();
    let mut entries = BTreeMap::new();
    for h in (g_tilde as i64..=g as i64).rev() {
        let c = rem.coeff(1 - h).ok_or(Error::TruncationTooShort)?;
        if !c.is_integer() {
            return Err(Error::DecompositionFailure);
        }
        let nh = c.to_integer();
        if !nh.is_zero() {
            let x_pow = x_power_series(1 - h, n)?;
            rem = rem.sub(&x_pow.scale(&c));
        }
        entries.insert(h, nh);
    }
    if !rem.is_zero() {
        return Err(Error::DecompositionFailure);
    }
    Ok(BpsVector { entries })
}

/// `(q/(1-q)^2)^e` as a Laurent series, `e` of either sign.
fn x_power_series(e: i64, n: i64) -> Result<LaurentSeries> {
    let one_minus_q = IntPoly::from_i64(&[1, -1]);
    let (num, den) = if e >= 0 {
        (
            IntPoly::monomial(1.into(), e as usize),
            one_minus_q.pow(2 * e as u32),
        )
    } else {
        (
            one_minus_q.pow((-2 * e) as u32),
            IntPoly::monomial(1.into(), (-e) as usize),
        )
    };
    LaurentSeries::from_rational(&num, &den, n)
}

/// Full pipeline: Euler series, BPS vector and the product-formula check.
pub fn analyze_curve(c: &CurveSpec, n: i64) -> Result<(LaurentSeries, BpsVector, bool)> {
    let chi = curve_euler_series(c, n)?;
    let g = c.genus();
    let shifted = chi.shift(1 - g as i64);
    let bps = bps_decompose(&shifted, g, c.geometric_genus())?;
    let product = kawai_product_series(c, shifted.trunc_order())?;
    let matches = product.eq_through(&shifted, shifted.trunc_order());
    Ok((chi, bps, matches))
}

/// Default truncation: `max conductor + 2g + 10`.
pub fn default_truncation(c: &CurveSpec) -> i64 {
    let max_c = c
        .singularities()
        .iter()
        .map(|(s, _)| s.conductor().unwrap_or(2))
        .max()
        .unwrap_or(0);
    (max_c + 2 * c.genus() + 10) as i64
}
