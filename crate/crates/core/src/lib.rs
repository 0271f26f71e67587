//! Exact combinatorial invariants of plane curve singularities.
//!
//! Everything in this crate is computed in exact arithmetic over
//! arbitrary-precision integers and rationals. The main pieces:
//!
//! * [`poly`] — dense polynomials, truncated Laurent series and reduced
//!   rational functions, the engine underneath everything else.
//! * [`semigroup`] — numerical semigroups and their gap/conductor data.
//! * [`semimodule`] — enumeration of semimodules of fixed codimension and
//!   the generating function `I(q)` in rational normal form.
//! * [`zeta`] — closed-form motivic Hilbert zeta functions for the
//!   `A1`, `A2d`, `E6` and `E8` families and their specializations.
//! * [`kawai`] — global curve Euler series, the product formula with its
//!   `F_i`/`G_i` polynomials, and BPS integer extraction.
//! * [`severi`] — Severi-strata degrees by triangular inversion.
//! * [`homfly`] — a skein-relation oracle for `T(2,n)` torus knots and
//!   the bottom-row consistency check.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

#[cfg(feature = "std")]
extern crate std;

pub mod error;
pub mod homfly;
pub mod kawai;
pub mod poly;
pub mod semigroup;
pub mod semimodule;
pub mod severi;
pub mod zeta;

pub use error::Error;
pub use homfly::HomflyPoly;
pub use kawai::{BpsVector, CurveSpec};
pub use poly::{BiPoly, IntPoly, LaurentSeries, QPoly, RationalFn};
pub use semigroup::NumericalSemigroup;
pub use semimodule::SemiModule;
pub use severi::SeveriDegrees;
pub use zeta::{SingularityType, ZetaFn};
