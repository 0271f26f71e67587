//! Dense exact-arithmetic polynomial and series types.
//!
//! Degrees in this problem domain are tiny (bounded by conductors and
//! genera), so everything is dense and every coefficient is an
//! arbitrary-precision integer or rational. All values are immutable
//! after construction.

mod bi_poly;
mod int_poly;
mod laurent;
mod rat_fn;

pub use bi_poly::BiPoly;
pub use int_poly::{IntPoly, QPoly};
pub use laurent::LaurentSeries;
pub use rat_fn::RationalFn;
