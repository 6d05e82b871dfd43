//! Exact arithmetic laboratory for hyperelliptic curves `y^2 = Q(x)` over
//! small odd prime fields.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * prime fields and their extensions ([`field`]),
//! * polynomials over `F_q`, Möbius / von Mangoldt sieves and the quadratic
//!   residue symbol ([`poly`]),
//! * point counts, scaled Frobenius traces and L-polynomials, computed by two
//!   independent routes ([`curve`]),
//! * the character sums `sigma(f; a)` and `S(b; n)` ([`charsum`]),
//! * exact family averages of scaled traces and their predicted main terms
//!   ([`ensemble`]).
//!
//! Traces are carried as the integers `t_n = q^n + 1 - #C(F_{q^n})`, so no
//! irrational `sqrt(q)` ever enters exact code paths.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod charsum;
pub mod curve;
pub mod ensemble;
mod error;
pub mod field;
pub mod poly;
pub mod rational;

pub use curve::{Curve, FrobeniusData};
pub use ensemble::{FamilyKind, FamilySpec};
pub use error::Error;
pub use field::{ExtElem, ExtFieldCtx, FieldCtx};
pub use poly::{IrreducibleTable, Poly};

pub type Result<T, E = Error> = core::result::Result<T, E>;
