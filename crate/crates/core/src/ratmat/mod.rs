//! Exact dense linear algebra over Q.
//!
//! Everything here is rational arithmetic on arbitrary-precision integers:
//! ranks, kernels and images are decided exactly, which is what lets the rest
//! of the crate compare quotient dimensions with tolerance zero.

mod mat;
mod poly;
mod subspace;

pub use mat::Mat;
pub use poly::Poly;
pub use subspace::Subspace;

use num_bigint::BigInt;

use crate::error::{LabError, Result};

/// Arbitrary-precision rational, always kept in lowest terms.
pub type Rat = num_rational::BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` (optional leading `-`, decimal digits, `q != 0`).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let err = || LabError::ParseRational(s.to_string());
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits_ok = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    let unsigned = num.strip_prefix('-').unwrap_or(num);
    if !digits_ok(unsigned) {
        return Err(err());
    }
    let n: BigInt = num.parse().map_err(|_| err())?;
    match den {
        None => Ok(Rat::from_integer(n)),
        Some(d) => {
            if !digits_ok(d) {
                return Err(err());
            }
            let d: BigInt = d.parse().map_err(|_| err())?;
            if d == BigInt::from(0) {
                return Err(err());
            }
            Ok(Rat::new(n, d))
        }
    }
}
