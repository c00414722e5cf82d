use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Mat, Rat};
use crate::error::Result;

/// Univariate polynomial over Q, coefficients lowest degree first. The
/// coefficient vector never carries trailing zeros; the zero polynomial is
/// the empty vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rat::one(), 1)
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rat) -> Self {
        Self::new(vec![-r.clone(), Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// `Q(M)` by Horner's scheme.
    pub fn eval_mat(&self, m: &Mat) -> Result<Mat> {
        let n = m.ensure_square()?;
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            if !c.is_zero() {
                acc = &acc + &Mat::identity(n).scale(c);
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer((i as i64).into()))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.leading().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Multiplicity of the root `0` (number of trailing zero coefficients).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// The polynomial with every factor `x` removed.
    pub fn strip_zero_roots(&self) -> Poly {
        Poly::new(self.coeffs[self.zero_root_multiplicity()..].to_vec())
    }

    /// Multiplicity of `r` as a root.
    pub fn root_multiplicity(&self, r: &Rat) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::linear_root(r);
        let mut p = self.clone();
        let mut m = 0;
        loop {
            let (q, rem) = p.div_rem(&lin);
            if !rem.is_zero() {
                return m;
            }
            m += 1;
            p = q;
        }
    }

    /// Scalar multiple with coprime integer coefficients and positive leading
    /// coefficient.
    fn primitive_integer(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() {
            for c in &mut ints {
                *c /= &g;
            }
        }
        if ints.last().is_some_and(Signed::is_negative) {
            for c in &mut ints {
                *c = -&*c;
            }
        }
        ints
    }

    /// All rational roots with their multiplicities, ascending.
    ///
    /// A rational root `p/q` of a primitive integer polynomial with leading
    /// coefficient `a` has `q | a`, so `a * root` is an integer. Real roots of
    /// the squarefree part are isolated with Sturm sequences until each
    /// interval is narrower than `1/a`; the single integer candidate inside is
    /// then tested exactly. Exact hits during bisection are deflated out and
    /// isolation restarts on the quotient.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut found: Vec<Rat> = Vec::new();
        let zero_mult = self.zero_root_multiplicity();
        let stripped = self.strip_zero_roots();
        let mut g = if stripped.degree().unwrap_or(0) == 0 {
            Poly::one()
        } else {
            let sq = stripped.div_rem(&stripped.gcd(&stripped.derivative())).0;
            sq.monic()
        };
        'restart: while g.degree().unwrap_or(0) > 0 {
            let ints = g.primitive_integer();
            let lead = Rat::from_integer(ints.last().expect("nonzero").clone());
            let chain = sturm_chain(&g);
            let bound = cauchy_bound(&g);
            let mut stack = vec![(-bound.clone(), bound)];
            while let Some((lo, hi)) = stack.pop() {
                let count = sign_changes(&chain, &lo) - sign_changes(&chain, &hi);
                if count == 0 {
                    continue;
                }
                if count == 1 {
                    // A simple root strictly inside; the endpoints are never
                    // roots, so the sign of g alone locates it.
                    let (mut lo, mut hi) = (lo, hi);
                    let lo_positive = g.eval(&lo).is_positive();
                    while (&hi - &lo) * &lead >= Rat::one() {
                        let mid = (&lo + &hi) / Rat::from_integer(2.into());
                        let v = g.eval(&mid);
                        if v.is_zero() {
                            g = g.div_rem(&Poly::linear_root(&mid)).0;
                            found.push(mid);
                            continue 'restart;
                        }
                        if v.is_positive() == lo_positive {
                            lo = mid;
                        } else {
                            hi = mid;
                        }
                    }
                    let m = (&hi * &lead).floor();
                    if m > &lo * &lead {
                        let candidate = m / &lead;
                        if g.eval(&candidate).is_zero() {
                            found.push(candidate);
                        }
                    }
                    continue;
                }
                let mid = (&lo + &hi) / Rat::from_integer(2.into());
                if g.eval(&mid).is_zero() {
                    g = g.div_rem(&Poly::linear_root(&mid)).0;
                    found.push(mid);
                    continue 'restart;
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
            break;
        }
        let mut out: Vec<(Rat, usize)> = found
            .into_iter()
            .map(|r| {
                let m = stripped.root_multiplicity(&r);
                (r, m)
            })
            .collect();
        if zero_mult > 0 {
            out.push((Rat::zero(), zero_mult));
        }
        out.sort_by(|a, b| a.0.cmp(&b.0));
        out.dedup_by(|a, b| a.0 == b.0);
        out
    }
}

fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().expect("nonempty").is_zero() {
        let n = chain.len();
        let r = chain[n - 2].div_rem(&chain[n - 1]).1;
        if r.is_zero() {
            break;
        }
        // Only signs matter, so a positive rescaling keeps coefficients small.
        let scale = r.leading().abs().recip();
        chain.push(r.scale(&-scale));
    }
    chain.retain(|q| !q.is_zero());
    chain
}

fn sign_changes(chain: &[Poly], x: &Rat) -> usize {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Strict bound `1 + max |c_i / c_n|` on the modulus of every root.
fn cauchy_bound(p: &Poly) -> Rat {
    let lead = p.leading();
    let n = p.coeffs.len() - 1;
    let m = p.coeffs[..n]
        .iter()
        .map(|c| (c / &lead).abs())
        .max()
        .unwrap_or_else(Rat::zero);
    m + Rat::one()
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                    let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn sub(self, rhs: &'a Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;

    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::{rat, ratio};

    #[test]
    fn eval_mat_examples() {
        let m = Mat::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(Poly::one().eval_mat(&m).unwrap(), Mat::identity(2));
        assert_eq!(Poly::x().eval_mat(&m).unwrap(), m);
        assert!(Poly::from_i64(&[-1, 0, 1]).eval_mat(&m).unwrap().is_zero());
        assert!(Poly::x().eval_mat(&Mat::zeros(1, 2)).is_err());
    }

    #[test]
    fn division_and_gcd() {
        let a = Poly::from_i64(&[-1, 0, 1]); // (x-1)(x+1)
        let b = Poly::from_i64(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q, Poly::from_i64(&[1, 1]));
        assert!(r.is_zero());
        let c = Poly::from_i64(&[1, -2, 1]); // (x-1)^2
        assert_eq!(a.gcd(&c), b);
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (x - 2)^2 (3x - 1) x^2 (x^2 + 1)
        let p = [
            Poly::from_i64(&[-2, 1]),
            Poly::from_i64(&[-2, 1]),
            Poly::from_i64(&[-1, 3]),
            Poly::from_i64(&[0, 0, 1]),
            Poly::from_i64(&[1, 0, 1]),
        ]
        .iter()
        .fold(Poly::one(), |acc, f| &acc * f);
        assert_eq!(
            p.rational_roots(),
            vec![(rat(0), 2), (ratio(1, 3), 1), (rat(2), 2)]
        );
    }

    #[test]
    fn rational_roots_skip_irrational() {
        assert!(Poly::from_i64(&[-2, 0, 1]).rational_roots().is_empty());
        assert_eq!(
            Poly::from_i64(&[6, -5, 1]).rational_roots(),
            vec![(rat(2), 1), (rat(3), 1)]
        );
        assert_eq!(Poly::from_i64(&[5]).rational_roots(), vec![]);
    }

    #[test]
    fn rational_roots_negative_and_fractional() {
        // (x + 5/2)(x - 7/3)(x + 1)
        let p = [
            Poly::new(vec![ratio(5, 2), rat(1)]),
            Poly::new(vec![ratio(-7, 3), rat(1)]),
            Poly::from_i64(&[1, 1]),
        ]
        .iter()
        .fold(Poly::one(), |acc, f| &acc * f);
        assert_eq!(
            p.rational_roots(),
            vec![(ratio(-5, 2), 1), (rat(-1), 1), (ratio(7, 3), 1)]
        );
    }

    #[test]
    fn display() {
        assert_eq!(Poly::from_i64(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(Poly::new(vec![ratio(1, 2), rat(-3)]).to_string(), "-3x + 1/2");
        assert_eq!(Poly::zero().to_string(), "0");
    }
}
