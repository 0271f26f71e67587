//! Closed-form motivic Hilbert zeta functions for the four supported
//! singularity families and their specializations.

use alloc::vec::Vec;

use crate::error::Result;
use crate::poly::{BiPoly, IntPoly, LaurentSeries};
use crate::semigroup::NumericalSemigroup;
use crate::semimodule;

/// The singularity families with known affine cell decompositions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SingularityType {
    /// Ordinary node; two branches, no semigroup model.
    A1,
    /// `A_{2d}`: the branch with semigroup `<2, 2d+1>`.
    A2d(u32),
    /// The branch with semigroup `<3, 4>`.
    E6,
    /// The branch with semigroup `<3, 5>`.
    E8,
}

impl SingularityType {
    /// Number of branches at the point.
    pub fn branches(&self) -> u32 {
        match self {
            SingularityType::A1 => 2,
            _ => 1,
        }
    }

    pub fn delta(&self) -> u64 {
        match self {
            SingularityType::A1 => 1,
            SingularityType::A2d(d) => *d as u64,
            SingularityType::E6 => 3,
            SingularityType::E8 => 4,
        }
    }

    /// Conductor of the associated semigroup (irreducible types only).
    pub fn conductor(&self) -> Option<u64> {
        self.semigroup().map(|s| s.conductor())
    }

    /// Milnor number; `mu = 2 delta` for plane singularities.
    pub fn milnor(&self) -> u64 {
        2 * self.delta()
    }

    /// The value semigroup of the branch; `None` for the node.
    pub fn semigroup(&self) -> Option<NumericalSemigroup> {
        let gens: &[u64] = match self {
            SingularityType::A1 => return None,
            SingularityType::A2d(d) => return NumericalSemigroup::new(&[2, 2 * *d as u64 + 1]).ok(),
            SingularityType::E6 => &[3, 4],
            SingularityType::E8 => &[3, 5],
        };
        NumericalSemigroup::new(gens).ok()
    }
}

/// A motivic Hilbert zeta function in rational form `f(t, L)/(1-t)^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaFn {
    numerator: BiPoly,
    branch_exponent: u32,
}

impl ZetaFn {
    pub fn new(numerator: BiPoly, branch_exponent: u32) -> Self {
        assert!(branch_exponent >= 1);
        assert!(
            numerator.coeff(0).is_one(),
            "zeta numerator must have constant term 1"
        );
        ZetaFn {
            numerator,
            branch_exponent,
        }
    }

    pub fn numerator(&self) -> &BiPoly {
        &self.numerator
    }

    pub fn branch_exponent(&self) -> u32 {
        self.branch_exponent
    }

    /// Classes `[C^{[l]}]` for `l < n`, as polynomials in `L`.
    pub fn class_series(&self, n: usize) -> Vec<IntPoly> {
        self.numerator
            .expand_over_one_minus_t(self.branch_exponent, n)
    }

    /// Specialization `L = 1`: the Euler-number series.
    pub fn euler_series(&self, n: i64) -> LaurentSeries {
        let num = self.numerator.eval_l_one();
        let den = IntPoly::from_i64(&[1, -1]).pow(self.branch_exponent);
        LaurentSeries::from_rational(&num, &den, n).expect("denominator is a power of 1-t")
    }
}

/// The closed-form zeta function of a singularity family.
pub fn zeta_closed_form(s: SingularityType) -> ZetaFn {
    match s {
        SingularityType::A1 => {
            // (1 - t + L t^2) / (1-t)^2
            ZetaFn::new(BiPoly::from_terms(&[(0, 0, 1), (1, 0, -1), (2, 1, 1)]), 2)
        }
        SingularityType::A2d(d) => {
            // (sum_{i=0..d} L^i t^{2i}) / (1-t)
            let terms: Vec<(usize, usize, i64)> =
                (0..=d as usize).map(|i| (2 * i, i, 1)).collect();
            ZetaFn::new(BiPoly::from_terms(&terms), 1)
        }
        SingularityType::E6 => ZetaFn::new(
            BiPoly::from_terms(&[(0, 0, 1), (2, 1, 1), (3, 2, 1), (4, 2, 1), (6, 3, 1)]),
            1,
        ),
        SingularityType::E8 => ZetaFn::new(
            BiPoly::from_terms(&[
                (0, 0, 1),
                (2, 1, 1),
                (3, 2, 1),
                (4, 2, 1),
                (5, 3, 1),
                (6, 3, 1),
                (8, 4, 1),
            ]),
            1,
        ),
    }
}

/// Does the Euler-number specialization of the zeta function agree with the
/// semimodule generating function through order `n`? Irreducible types only.
pub fn check_euler_equals_igen(s: SingularityType, n: i64) -> Result<bool> {
    let sg = s
        .semigroup()
        .ok_or(crate::Error::InvalidInput("type has more than one branch"))?;
    let z = zeta_closed_form(s);
    let euler = z.euler_series(n);
    let (igen_series, _) = semimodule::igen(&sg, n)?;
    Ok(euler.eq_through(&igen_series, n))
}
