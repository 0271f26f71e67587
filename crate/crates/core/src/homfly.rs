//! Skein-relation oracle for `T(2,n)` torus knots and the bottom-row
//! consistency check against the semimodule generating function.
//!
//! Skein convention: `a P(L+) - a^{-1} P(L-) = (q - q^{-1}) P(L0)` with the
//! unknot normalized to 1. All-positive 2-strand braids then recurse
//! downward in `a`, and a final mirror `a -> a^{-1}`, `z -> -z` moves the
//! bottom row to positive `a`-powers. The trefoil value
//! `2a^2 - a^4 + a^2 (q - q^{-1})^2` anchors the convention.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RationalFn};
use crate::semigroup::NumericalSemigroup;
use crate::semimodule;

/// Laurent polynomial in `(a, z)`; exponent pair maps to its coefficient.
/// `z` stands for `q - q^{-1}`.
type AzPoly = BTreeMap<(i64, i64), BigInt>;

fn az_add_assign(lhs: &mut AzPoly, rhs: &AzPoly) {
    for (&k, c) in rhs {
        let e = lhs.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            lhs.remove(&k);
        }
    }
}

/// Multiply by the monomial `coeff * a^da * z^dz`.
fn az_mul_monomial(p: &AzPoly, da: i64, dz: i64, coeff: &BigInt) -> AzPoly {
    p.iter()
        .map(|(&(ea, ez), c)| ((ea + da, ez + dz), c * coeff))
        .collect()
}

fn az_mirror(p: &AzPoly) -> AzPoly {
    p.iter()
        .map(|(&(ea, ez), c)| {
            let c = if ez % 2 == 0 { c.clone() } else { -c };
            ((-ea, ez), c)
        })
        .collect()
}

/// Normalized skein polynomial of the closed 2-strand braid with `n`
/// positive crossings, before mirroring. Links (even `n`) carry `z^{-1}`.
fn braid2_az(n: u64) -> AzPoly {
    // P(0): two-component unlink (a - a^{-1}) / z
    let mut prev: AzPoly = AzPoly::new();
    prev.insert((1, -1), BigInt::one());
    prev.insert((-1, -1), -BigInt::one());
    // P(1): unknot
    let mut cur: AzPoly = AzPoly::new();
    cur.insert((0, 0), BigInt::one());
    if n == 0 {
        return prev;
    }
    for _ in 2..=n {
        // P(k) = a^{-2} P(k-2) + a^{-1} z P(k-1)
        let mut next = az_mul_monomial(&prev, -2, 0, &BigInt::one());
        az_add_assign(&mut next, &az_mul_monomial(&cur, -1, 1, &BigInt::one()));
        prev = cur;
        cur = next;
    }
    cur
}

/// HOMFLY polynomial of a knot as a finite sum of `a^i q^j` terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomflyPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl HomflyPoly {
    /// `(a-exponent, q-exponent) -> coefficient`, nonzero entries only.
    pub fn terms(&self) -> &BTreeMap<(i64, i64), BigInt> {
        &self.terms
    }

    pub fn a_support(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.terms.keys().map(|&(a, _)| a).collect();
        v.dedup();
        v
    }

    pub fn eval_a1_q1(&self) -> BigInt {
        self.terms.values().sum()
    }
}

/// Normalized HOMFLY of the torus knot `T(2,n)`, mirrored into positive
/// `a`-powers. `n` must be odd and positive.
pub fn torus2_homfly(n: u64) -> Result<HomflyPoly> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::InvalidInput("T(2,n) is a knot only for odd n >= 1"));
    }
    let mirrored = az_mirror(&braid2_az(n));
    let mut terms = BTreeMap::new();
    for (&(ea, ez), c) in &mirrored {
        debug_assert!(ez >= 0, "knot polynomial must be polynomial in z");
        // z^k = (q - q^{-1})^k
        for (j, b) in binomial_expand_z(ez as u32) {
            let e = terms.entry((ea, j)).or_insert_with(BigInt::zero);
            *e += c * b;
            if e.is_zero() {
                terms.remove(&(ea, j));
            }
        }
    }
    Ok(HomflyPoly { terms })
}

/// Expansion of `(q - q^{-1})^k` as `(q-exponent, coefficient)` pairs.
fn binomial_expand_z(k: u32) -> Vec<(i64, BigInt)> {
    let mut coeffs: Vec<(i64, BigInt)> = alloc::vec![(0, BigInt::one())];
    for _ in 0..k {
        let mut next: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (e, c) in &coeffs {
            *next.entry(e + 1).or_insert_with(BigInt::zero) += c;
            *next.entry(e - 1).or_insert_with(BigInt::zero) -= c;
        }
        coeffs = next.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    }
    coeffs
}

/// The bottom row predicted by the semimodule generating function:
/// `f(q^2)/(1 - q^2)`.
pub fn predicted_bottom_row(s: &NumericalSemigroup) -> Result<RationalFn> {
    let (_, nf) = semimodule::igen(s, s.conductor() as i64 + 2)?;
    Ok(nf.substitute_pow(2))
}

/// Bottom row actually carried by the skein oracle: the coefficient of
/// `a^{mu-1}` in the unnormalized HOMFLY, times `q^{mu-1}`.
pub fn computed_bottom_row(d: u32) -> Result<RationalFn> {
    let n = 2 * d as u64 + 1;
    let mu = 2 * d as i64;
    let mirrored = az_mirror(&braid2_az(n));
    // unnormalized: multiply by (a - a^{-1}) / z
    let mut unnorm = az_mul_monomial(&mirrored, 1, -1, &BigInt::one());
    az_add_assign(&mut unnorm, &az_mul_monomial(&mirrored, -1, -1, &(-BigInt::one())));
    // coefficient of a^{mu-1}, a Laurent polynomial in z
    let row: Vec<(i64, BigInt)> = unnorm
        .iter()
        .filter(|(&(ea, _), _)| ea == mu - 1)
        .map(|(&(_, ez), c)| (ez, c.clone()))
        .collect();
    // substitute z = (q^2 - 1)/q and multiply by q^{mu-1}
    let q2m1 = IntPoly::from_i64(&[-1, 0, 1]);
    let mut acc = RationalFn::from_poly(IntPoly::zero());
    for (ez, c) in row {
        let term = if ez >= 0 {
            RationalFn::new_shifted(q2m1.pow(ez as u32).scale(&c), IntPoly::one(), -ez)?
        } else {
            RationalFn::new_shifted(IntPoly::constant(c), q2m1.pow((-ez) as u32), -ez)?
        };
        acc = acc.add(&term);
    }
    RationalFn::new_shifted(IntPoly::one(), IntPoly::one(), mu - 1).map(|q_pow| acc.mul(&q_pow))
}

/// Exact equality of the skein bottom row with `f(q^2)/(1-q^2)` for the
/// semigroup `<2, 2d+1>`.
pub fn compare_bottom_row(d: u32) -> Result<bool> {
    let s = NumericalSemigroup::new(&[2, 2 * d as u64 + 1])?;
    Ok(predicted_bottom_row(&s)? == computed_bottom_row(d)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknot_is_one() {
        let p = torus2_homfly(1).unwrap();
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.terms().get(&(0, 0)), Some(&BigInt::one()));
    }

    #[test]
    fn even_or_zero_rejected() {
        assert!(torus2_homfly(0).is_err());
        assert!(torus2_homfly(4).is_err());
    }

    #[test]
    fn trefoil_anchor() {
        // 2a^2 - a^4 + a^2 (q - q^{-1})^2 = a^2 q^2 + a^2 q^{-2} - a^4
        let p = torus2_homfly(3).unwrap();
        let mut expect = BTreeMap::new();
        expect.insert((2, 2), BigInt::one());
        expect.insert((2, -2), BigInt::one());
        expect.insert((4, 0), -BigInt::one());
        assert_eq!(p.terms(), &expect);
    }

    #[test]
    fn skein_degeneration_at_one() {
        for n in [1u64, 3, 5, 7, 9, 11] {
            assert_eq!(torus2_homfly(n).unwrap().eval_a1_q1(), BigInt::one());
        }
    }

    #[test]
    fn a_support_window() {
        for n in (1u64..=17).step_by(2) {
            let p = torus2_homfly(n).unwrap();
            for a in p.a_support() {
                assert!(
                    a == n as i64 - 1 || a == n as i64 + 1 || a == n as i64 + 3,
                    "T(2,{n}) has a-power {a}"
                );
            }
        }
    }

    #[test]
    fn trefoil_bottom_row() {
        let predicted = predicted_bottom_row(&NumericalSemigroup::new(&[2, 3]).unwrap()).unwrap();
        // (1 + q^4)/(1 - q^2)
        let expect = RationalFn::new(
            IntPoly::from_i64(&[1, 0, 0, 0, 1]),
            IntPoly::from_i64(&[1, 0, -1]),
        )
        .unwrap();
        assert_eq!(predicted, expect);
        assert_eq!(computed_bottom_row(1).unwrap(), expect);
    }

    #[test]
    fn bottom_rows_agree() {
        for d in 1..=8 {
            assert!(compare_bottom_row(d).unwrap(), "d={d}");
        }
    }
}
