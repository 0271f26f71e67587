//! Severi-strata degrees recovered from the semimodule generating function.
//!
//! With `f = (1-q) * I(q)`, the degrees solve
//! `f(q) = sum_{h=0}^{delta} q^{delta-h} (1-q)^{2h} d_h`.
//! The basis polynomial for `h` has lowest term `q^{delta-h}` with
//! coefficient 1, so the system is triangular from the constant term up;
//! the remaining `delta` coefficient equations must close with zero
//! residual.

use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, QPoly};
use crate::semigroup::NumericalSemigroup;
use crate::semimodule;

/// Degrees `deg V_0, ..., deg V_delta`, stored as exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeveriDegrees {
    delta: u64,
    degrees: Vec<BigRational>,
}

impl SeveriDegrees {
    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// `degrees[h]` is the degree of the stratum where the delta-invariant
    /// stays `>= h`.
    pub fn degrees(&self) -> &[BigRational] {
        &self.degrees
    }

    pub fn all_integral(&self) -> bool {
        self.degrees.iter().all(|d| d.is_integer())
    }
}

/// Basis polynomial `q^{delta-h} (1-q)^{2h}`.
fn basis(delta: u64, h: u64) -> IntPoly {
    IntPoly::from_i64(&[1, -1])
        .pow(2 * h as u32)
        .shift_up((delta - h) as usize)
}

/// Forward evaluation `sum_h q^{delta-h} (1-q)^{2h} d_h`; the inverse of
/// [`solve`], used by round-trip tests and the residual check.
pub fn forward(delta: u64, degrees: &[BigRational]) -> QPoly {
    let mut acc = QPoly::zero();
    for (h, d) in degrees.iter().enumerate() {
        acc = acc.add(&QPoly::from_int(&basis(delta, h as u64)).scale(d));
    }
    acc
}

/// Solve the triangular system for a given target polynomial `f`.
pub fn solve(delta: u64, f: &QPoly) -> Result<SeveriDegrees> {
    let mut rem = f.clone();
    let mut degrees = alloc::vec![BigRational::zero(); delta as usize + 1];
    for h in (0..=delta).rev() {
        // lowest unresolved exponent is delta - h, where only basis h
        // contributes (with coefficient 1)
        let d = rem.coeff((delta - h) as usize);
        if !d.is_zero() {
            rem = rem.sub(&QPoly::from_int(&basis(delta, h)).scale(&d));
        }
        degrees[h as usize] = d;
    }
    if !rem.is_zero() {
        return Err(Error::InversionFailure);
    }
    Ok(SeveriDegrees { delta, degrees })
}

/// Severi-strata degrees of the branch with semigroup `s`.
pub fn severi_degrees(s: &NumericalSemigroup) -> Result<SeveriDegrees> {
    let delta = s.delta();
    let (_, nf) = semimodule::igen(s, s.conductor() as i64 + 2)?;
    if nf.num().degree() != Some(s.conductor() as usize) && s.conductor() > 0 {
        return Err(Error::InvalidInput("numerator degree disagrees with the conductor"));
    }
    solve(delta, &QPoly::from_int(nf.num()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cusp_degrees() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        let d = severi_degrees(&s).unwrap();
        assert_eq!(d.degrees(), &[rat(2), rat(1)]);
    }

    #[test]
    fn smooth_branch() {
        let s = NumericalSemigroup::new(&[1]).unwrap();
        let d = severi_degrees(&s).unwrap();
        assert_eq!(d.degrees(), &[rat(1)]);
    }

    #[test]
    fn e6_zero_residual_and_top_degree_one() {
        let s = NumericalSemigroup::new(&[3, 4]).unwrap();
        let d = severi_degrees(&s).unwrap();
        assert_eq!(d.delta(), 3);
        assert_eq!(d.degrees()[3], rat(1));
        assert!(d.all_integral());
    }

    #[test]
    fn top_degree_equals_constant_term() {
        // f(0) = 1 forces deg V_delta = 1 for every supported branch
        for gens in [[2u64, 5], [3, 5], [4, 5], [5, 6]] {
            let s = NumericalSemigroup::new(&gens).unwrap();
            let d = severi_degrees(&s).unwrap();
            assert_eq!(d.degrees()[d.delta() as usize], rat(1));
        }
    }

    #[test]
    fn roundtrip_small_vectors() {
        let degrees = [rat(3), rat(-1), rat(7), rat(0), rat(5)];
        let f = forward(4, &degrees);
        let solved = solve(4, &f).unwrap();
        assert_eq!(solved.degrees(), &degrees);
    }

    #[test]
    fn residual_rejects_garbage() {
        // q^3 is not in the span of the delta=1 basis {q, (1-q)^2}
        let f = QPoly::from_int(&IntPoly::from_i64(&[0, 0, 0, 1]));
        assert_eq!(solve(1, &f).err(), Some(Error::InversionFailure));
    }
}
