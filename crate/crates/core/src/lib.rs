//! Exact finite-dimensional laboratory for common spectral properties of
//! `AC` and `BA` under the intertwining condition
//! `A(BA)^2 = ABACA = ACABA = (AC)^2A`.
//!
//! * [`ratmat`]: rational matrices, canonical subspaces, polynomials.
//! * [`invariants`]: Grabiner sequences `c_n`, `c'_n`, `k_n`, the derived
//!   degrees and regularity classes `R_1..R_19`.
//! * [`intertwine`]: operator triples, the quotient maps induced by `ACA`, and
//!   the verifiers for the AC/BA equalities.
//! * [`drazin`]: Drazin inverses and the `BS^2A` transfer.
//! * [`genlab`]: conforming (and deliberately non-conforming) triple generators.

pub mod drazin;
pub mod error;
pub mod genlab;
pub mod intertwine;
pub mod invariants;
pub mod ratmat;

pub use error::{LabError, Result};
pub use ratmat::{Mat, Poly, Rat, Subspace};
