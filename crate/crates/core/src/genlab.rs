//! Operator-triple synthesis: the two block examples, algebraic families that
//! satisfy the intertwining condition by construction, and non-conforming
//! adversarial triples.
//!
//! Every conforming template is re-checked with [`check_condition`] before it
//! is returned.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{LabError, Result};
use crate::intertwine::{check_condition, nonzero_charpolys, OperatorTriple};
use crate::ratmat::{rat, Mat, Poly, Rat};

pub const DEFAULT_ENTRY_BOUND: u32 = 5;
pub const DEFAULT_DIM_CAP: usize = 12;
pub const HARD_DIM_CAP: usize = 24;
const NONCONFORMING_RETRIES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Template {
    PaperEx1,
    PaperEx2,
    CEqualsB,
    AbaEqAca,
    Conjugated,
    DirectSum,
    Nonconforming,
}

impl Template {
    pub const ALL: [Template; 7] = [
        Template::PaperEx1,
        Template::PaperEx2,
        Template::CEqualsB,
        Template::AbaEqAca,
        Template::Conjugated,
        Template::DirectSum,
        Template::Nonconforming,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Template::PaperEx1 => "paper_ex1",
            Template::PaperEx2 => "paper_ex2",
            Template::CEqualsB => "c_equals_b",
            Template::AbaEqAca => "aba_eq_aca",
            Template::Conjugated => "conjugated",
            Template::DirectSum => "direct_sum",
            Template::Nonconforming => "nonconforming",
        }
    }

    pub fn is_paper(self) -> bool {
        matches!(self, Template::PaperEx1 | Template::PaperEx2)
    }
}

impl fmt::Display for Template {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Template {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        Template::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Template::ALL.iter().map(|t| t.name()).collect();
                LabError::InvalidSpec(format!(
                    "unknown template {s:?}; expected one of {}",
                    names.join(", ")
                ))
            })
    }
}

/// `block_dim` is `dim X` (the size of `P` for the block-example templates, which
/// then act on `X ⊕ X ⊕ X`); `dim_y` defaults to `block_dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub template: Template,
    pub block_dim: usize,
    pub dim_y: Option<usize>,
    pub seed: u64,
    pub entry_bound: u32,
}

impl GenSpec {
    pub fn new(template: Template, block_dim: usize, seed: u64) -> Self {
        Self {
            template,
            block_dim,
            dim_y: None,
            seed,
            entry_bound: DEFAULT_ENTRY_BOUND,
        }
    }

    pub fn with_dim_y(mut self, dim_y: usize) -> Self {
        self.dim_y = Some(dim_y);
        self
    }

    pub fn with_entry_bound(mut self, bound: u32) -> Self {
        self.entry_bound = bound;
        self
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.block_dim, self.dim_y.unwrap_or(self.block_dim))
    }

    pub fn validate(&self) -> Result<()> {
        let (dx, dy) = self.dims();
        if self.template.is_paper() {
            if self.block_dim < 2 {
                return Err(LabError::InvalidSpec(
                    "block-example templates need block_dim >= 2 for a nontrivial idempotent".into(),
                ));
            }
            if self.dim_y.is_some_and(|d| d != self.block_dim) {
                return Err(LabError::InvalidSpec(
                    "block-example templates act on X ⊕ X ⊕ X; dim_y cannot differ".into(),
                ));
            }
            if 3 * self.block_dim > HARD_DIM_CAP {
                return Err(LabError::InvalidSpec(format!(
                    "3 * block_dim = {} exceeds the cap {HARD_DIM_CAP}",
                    3 * self.block_dim
                )));
            }
        }
        let min = if self.template == Template::DirectSum { 2 } else { 1 };
        if dx < min || dy < min {
            return Err(LabError::InvalidSpec(format!(
                "{} needs dimensions >= {min}, got ({dx}, {dy})",
                self.template
            )));
        }
        if dx > HARD_DIM_CAP || dy > HARD_DIM_CAP {
            return Err(LabError::InvalidSpec(format!(
                "dimensions ({dx}, {dy}) exceed the cap {HARD_DIM_CAP}"
            )));
        }
        if self.entry_bound == 0 {
            return Err(LabError::InvalidSpec("entry_bound must be positive".into()));
        }
        Ok(())
    }
}

/// Rational sampler: numerators in `[-b, b]`, denominators `1` three times
/// out of four and otherwise in `[2, b]`.
struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    fn new(seed: u64, bound: u32) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: i64::from(bound),
        }
    }

    fn entry(&mut self) -> Rat {
        let b = self.bound;
        let num = self.rng.gen_range(-b..=b);
        let den = if b >= 2 && self.rng.gen_ratio(1, 4) {
            self.rng.gen_range(2..=b)
        } else {
            1
        };
        Rat::new(BigInt::from(num), BigInt::from(den))
    }

    fn nonzero_entry(&mut self) -> Rat {
        loop {
            let e = self.entry();
            if !e.is_zero() {
                return e;
            }
        }
    }

    fn mat(&mut self, rows: usize, cols: usize) -> Mat {
        let data = (0..rows * cols).map(|_| self.entry()).collect();
        Mat::new(rows, cols, data).expect("sized")
    }

    fn vector(&mut self, n: usize) -> Vec<Rat> {
        (0..n).map(|_| self.entry()).collect()
    }

    /// Random `rows x cols` matrix of rank at most `r`.
    fn low_rank(&mut self, rows: usize, cols: usize, r: usize) -> Mat {
        &self.mat(rows, r) * &self.mat(r, cols)
    }

    /// `Π L U`: unit lower times unit upper triangular, rows permuted.
    fn invertible(&mut self, n: usize) -> (Mat, Mat) {
        let mut l = Mat::identity(n);
        let mut u = Mat::identity(n);
        for i in 0..n {
            for j in 0..i {
                l.set(i, j, self.entry());
                u.set(j, i, self.entry());
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut self.rng);
        let mut p = Mat::zeros(n, n);
        for (i, &j) in perm.iter().enumerate() {
            p.set(i, j, Rat::one());
        }
        let m = &p * &(&l * &u);
        let inv = m.inverse().expect("unit triangular factors are invertible");
        (m, inv)
    }
}

fn is_idempotent(p: &Mat) -> bool {
    p.is_square() && &(p * p) == p
}

/// The two block examples on `X ⊕ X ⊕ X`, built exactly as written:
/// `A = [[0, I, 0], [0, P, 0], [0, 0, 0]]`, `B = diag(I, I, 0)`, and
/// `C = [[0, 0, 0], [I, 0, 0], [0, I, 0]]` (`which = 1`) or
/// `C = [[0, 0, 0], [P, 0, 0], [0, I, 0]]` (`which = 2`).
///
/// The claimed properties are not enforced here; see [`paper_claims`].
pub fn paper_example(which: u8, p: &Mat) -> Result<OperatorTriple> {
    if !is_idempotent(p) {
        return Err(LabError::NotIdempotent);
    }
    let m = p.rows();
    let (z, i) = (Mat::zeros(m, m), Mat::identity(m));
    if p == &z || p == &i {
        return Err(LabError::TrivialIdempotent);
    }
    let c_low = match which {
        1 => i.clone(),
        2 => p.clone(),
        _ => {
            return Err(LabError::InvalidSpec(format!(
                "example {which} does not exist; expected 1 or 2"
            )))
        }
    };
    let block = |rows: [[&Mat; 3]; 3]| {
        Mat::from_blocks(
            &rows
                .iter()
                .map(|r| r.iter().map(|&b| b.clone()).collect())
                .collect::<Vec<_>>(),
        )
    };
    let a = block([[&z, &i, &z], [&z, p, &z], [&z, &z, &z]])?;
    let b = block([[&i, &z, &z], [&z, &i, &z], [&z, &z, &z]])?;
    let c = block([[&z, &z, &z], [&c_low, &z, &z], [&z, &i, &z]])?;
    OperatorTriple::new(a, b, c)
}

/// The three assertions attached to the block examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PaperClaims {
    pub condition: bool,
    pub aba_ne_aca: bool,
    pub bab_ne_b2: bool,
}

impl PaperClaims {
    pub fn all(&self) -> bool {
        self.condition && self.aba_ne_aca && self.bab_ne_b2
    }
}

pub fn paper_claims(t: &OperatorTriple) -> PaperClaims {
    let b = t.b();
    PaperClaims {
        condition: check_condition(t).holds,
        aba_ne_aca: t.aba() != t.aca(),
        bab_ne_b2: &(b * t.a()) * b != b * b,
    }
}

/// `diag(1, .., 1, 0, .., 0)` of size `n` with `r` ones.
pub fn coordinate_idempotent(n: usize, r: usize) -> Mat {
    Mat::from_diagonal(&(0..n).map(|i| rat(i64::from(i < r))).collect::<Vec<_>>())
}

fn ensure_conforming(t: OperatorTriple, what: &str) -> Result<OperatorTriple> {
    if t.condition_holds() {
        Ok(t)
    } else {
        Err(LabError::Generator(format!(
            "{what} produced a triple violating the condition"
        )))
    }
}

fn c_equals_b(s: &mut Sampler, dx: usize, dy: usize) -> Result<OperatorTriple> {
    let a = s.mat(dy, dx);
    let b = s.mat(dx, dy);
    OperatorTriple::new(a, b.clone(), b)
}

/// A random element `K` with `AKA = 0`: `K = Σ v xᵀ + Σ y wᵀ` for `v` in
/// `N(A)` and `w` in `N(Aᵀ)`; these span the whole solution space.
fn annihilated_perturbation(s: &mut Sampler, a: &Mat) -> Mat {
    let (dy, dx) = (a.rows(), a.cols());
    let outer = |u: &[Rat], w: &[Rat]| {
        let data = u.iter().flat_map(|x| w.iter().map(move |y| x * y)).collect();
        Mat::new(u.len(), w.len(), data).expect("sized")
    };
    let mut k = Mat::zeros(dx, dy);
    for v in a.kernel().basis() {
        k = &k + &outer(v, &s.vector(dy));
    }
    for w in a.transpose().kernel().basis() {
        k = &k + &outer(&s.vector(dx), w);
    }
    k
}

/// `C = B + K` with `AKA = 0`, so `ACA = ABA`; `A` has rank
/// `max(1, min(dx, dy) - 1)` so that `K` can be nonzero when `dx = dy`.
fn aba_eq_aca(s: &mut Sampler, dx: usize, dy: usize) -> Result<OperatorTriple> {
    let r = dx.min(dy).saturating_sub(1).max(1);
    let a = s.low_rank(dy, dx, r);
    let b = s.mat(dx, dy);
    let k = annihilated_perturbation(s, &a);
    let c = &b + &k;
    OperatorTriple::new(a, b, c)
}

/// `(VAU⁻¹, UBV⁻¹, UCV⁻¹)`.
pub fn conjugate(t: &OperatorTriple, u: (&Mat, &Mat), v: (&Mat, &Mat)) -> Result<OperatorTriple> {
    let (u, u_inv) = u;
    let (v, v_inv) = v;
    OperatorTriple::new(
        &(v * t.a()) * u_inv,
        &(u * t.b()) * v_inv,
        &(u * t.c()) * v_inv,
    )
}

fn conjugated(s: &mut Sampler, dx: usize, dy: usize) -> Result<OperatorTriple> {
    let base = if s.rng.gen_bool(0.5) {
        aba_eq_aca(s, dx, dy)?
    } else {
        c_equals_b(s, dx, dy)?
    };
    let u = s.invertible(dx);
    let v = s.invertible(dy);
    conjugate(&base, (&u.0, &u.1), (&v.0, &v.1))
}

pub fn direct_sum(t1: &OperatorTriple, t2: &OperatorTriple) -> Result<OperatorTriple> {
    OperatorTriple::new(
        Mat::block_diag(t1.a(), t2.a()),
        Mat::block_diag(t1.b(), t2.b()),
        Mat::block_diag(t1.c(), t2.c()),
    )
}

fn direct_sum_random(s: &mut Sampler, dx: usize, dy: usize) -> Result<OperatorTriple> {
    let (dx1, dy1) = (dx / 2, dy / 2);
    let t1 = aba_eq_aca(s, dx1, dy1)?;
    let t2 = if s.rng.gen_bool(0.5) {
        conjugated(s, dx - dx1, dy - dy1)?
    } else {
        c_equals_b(s, dx - dx1, dy - dy1)?
    };
    direct_sum(&t1, &t2)
}

/// Upper-trapezoidal `A`, `B`, `C` with nonzero diagonals, conjugated; kept
/// only if the condition fails and the nonzero spectra of `AC` and `BA`
/// differ, so some rational `λ != 0` separates the two sides.
fn nonconforming(s: &mut Sampler, dx: usize, dy: usize) -> Result<OperatorTriple> {
    for _ in 0..NONCONFORMING_RETRIES {
        let a = upper_trapezoid(s, dy, dx, &mut |s| s.nonzero_entry());
        let b = upper_trapezoid(s, dx, dy, &mut |s| s.nonzero_entry());
        let c = upper_trapezoid(s, dx, dy, &mut |s| s.nonzero_entry());
        let base = OperatorTriple::new(a, b, c)?;
        let (p_ac, p_ba) = nonzero_charpolys(&base)?;
        if base.condition_holds() || p_ac == p_ba {
            continue;
        }
        let u = s.invertible(dx);
        let v = s.invertible(dy);
        return conjugate(&base, (&u.0, &u.1), (&v.0, &v.1));
    }
    Err(LabError::Generator(format!(
        "no nonconforming triple found in {NONCONFORMING_RETRIES} draws"
    )))
}

/// Deterministic in `spec`. Block-example templates use `P = diag(1, .., 1, 0, .., 0)`
/// with a seed-chosen number of ones (`diag(1, 0)` when `block_dim = 2`) and
/// are returned as written, whether or not they conform.
pub fn generate(spec: &GenSpec) -> Result<OperatorTriple> {
    spec.validate()?;
    let (dx, dy) = spec.dims();
    let mut s = Sampler::new(spec.seed, spec.entry_bound);
    match spec.template {
        Template::PaperEx1 | Template::PaperEx2 => {
            let r = 1 + (spec.seed % (dx as u64 - 1)) as usize;
            let which = if spec.template == Template::PaperEx1 { 1 } else { 2 };
            paper_example(which, &coordinate_idempotent(dx, r))
        }
        Template::CEqualsB => ensure_conforming(c_equals_b(&mut s, dx, dy)?, "c_equals_b"),
        Template::AbaEqAca => ensure_conforming(aba_eq_aca(&mut s, dx, dy)?, "aba_eq_aca"),
        Template::Conjugated => ensure_conforming(conjugated(&mut s, dx, dy)?, "conjugated"),
        Template::DirectSum => ensure_conforming(direct_sum_random(&mut s, dx, dy)?, "direct_sum"),
        Template::Nonconforming => nonconforming(&mut s, dx, dy),
    }
}

fn upper_trapezoid(s: &mut Sampler, rows: usize, cols: usize, diag: &mut dyn FnMut(&mut Sampler) -> Rat) -> Mat {
    let mut m = Mat::zeros(rows, cols);
    for i in 0..rows {
        for j in i..cols {
            let v = if i == j { diag(s) } else { s.entry() };
            m.set(i, j, v);
        }
    }
    m
}

/// A conforming triple whose `AC` and `BA` both have characteristic
/// polynomials that split over Q.
///
/// `A` and `B` are upper trapezoidal, so `BA` is upper triangular with
/// diagonal `B_ii A_ii`; `C = B + K` with `AKA = 0`, so the nonzero spectrum of
/// `AC` is that of `BA`. The result is then conjugated. `spec.template` is
/// ignored apart from validation.
pub fn rational_spectrum_instance(spec: &GenSpec) -> Result<OperatorTriple> {
    spec.validate()?;
    let (dx, dy) = spec.dims();
    let mut s = Sampler::new(spec.seed ^ 0x5eed_5bec, spec.entry_bound);
    let a = upper_trapezoid(&mut s, dy, dx, &mut |s| {
        if s.rng.gen_ratio(1, 3) {
            Rat::zero()
        } else {
            s.nonzero_entry()
        }
    });
    let b = upper_trapezoid(&mut s, dx, dy, &mut |s| s.nonzero_entry());
    let k = annihilated_perturbation(&mut s, &a);
    let c = &b + &k;
    let base = OperatorTriple::new(a, b, c)?;
    let u = s.invertible(dx);
    let v = s.invertible(dy);
    let t = conjugate(&base, (&u.0, &u.1), (&v.0, &v.1))?;
    let t = ensure_conforming(t, "rational_spectrum_instance")?;
    if !has_rational_spectrum(&t)? {
        return Err(LabError::Generator(
            "rational_spectrum_instance produced an irrational eigenvalue".into(),
        ));
    }
    Ok(t)
}

/// The polynomial is a product of rational linear factors.
pub fn splits_over_q(p: &Poly) -> bool {
    let roots: usize = p.rational_roots().iter().map(|(_, m)| m).sum();
    Some(roots) == p.degree().or(Some(0))
}

pub fn has_rational_spectrum(t: &OperatorTriple) -> Result<bool> {
    Ok(splits_over_q(&t.ac().charpoly()?) && splits_over_q(&t.ba().charpoly()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::rational_eigenvalues;
    use crate::ratmat::ratio;

    fn p2() -> Mat {
        coordinate_idempotent(2, 1)
    }

    #[test]
    fn template_names_round_trip() {
        for t in Template::ALL {
            assert_eq!(t.name().parse::<Template>().unwrap(), t);
        }
        assert!("paper_ex3".parse::<Template>().is_err());
    }

    #[test]
    fn paper_example_shapes_and_errors() {
        let t = paper_example(1, &p2()).unwrap();
        assert_eq!((t.dim_x(), t.dim_y()), (6, 6));
        assert_eq!(
            paper_example(1, &Mat::from_i64(&[&[1, 1], &[0, 0]])).map(|_| ()),
            Ok(())
        );
        assert_eq!(
            paper_example(1, &Mat::from_i64(&[&[2, 0], &[0, 0]])).unwrap_err(),
            LabError::NotIdempotent
        );
        assert_eq!(paper_example(2, &Mat::identity(2)).unwrap_err(), LabError::TrivialIdempotent);
        assert_eq!(paper_example(2, &Mat::zeros(2, 2)).unwrap_err(), LabError::TrivialIdempotent);
        assert!(matches!(paper_example(3, &p2()), Err(LabError::InvalidSpec(_))));
    }

    #[test]
    fn paper_example_blocks_are_verbatim() {
        let t = paper_example(2, &p2()).unwrap();
        // A: I in block (0, 1), P in block (1, 1).
        assert_eq!(t.a().get(0, 2), &rat(1));
        assert_eq!(t.a().get(1, 3), &rat(1));
        assert_eq!(t.a().get(2, 2), &rat(1));
        assert_eq!(t.a().get(3, 3), &rat(0));
        // C: P in block (1, 0), I in block (2, 1).
        assert_eq!(t.c().get(2, 0), &rat(1));
        assert_eq!(t.c().get(3, 1), &rat(0));
        assert_eq!(t.c().get(4, 2), &rat(1));
        assert_eq!(t.b(), &Mat::from_diagonal(&[1, 1, 1, 1, 0, 0].map(rat)));
    }

    #[test]
    fn example_one_as_written_violates_the_condition() {
        // BA = A and (AC)^2 = AC, so A(BA)^2 = A^3 while (AC)^2 A = A.
        let t = paper_example(1, &p2()).unwrap();
        let claims = paper_claims(&t);
        assert!(!claims.condition);
        assert!(claims.aba_ne_aca && claims.bab_ne_b2);
        assert_eq!(t.ba(), t.a().clone());
    }

    #[test]
    fn example_two_conforms_but_aba_equals_aca() {
        for p in [p2(), coordinate_idempotent(3, 2), Mat::from_i64(&[&[1, 1], &[0, 0]])] {
            let claims = paper_claims(&paper_example(2, &p).unwrap());
            assert!(claims.condition && claims.bab_ne_b2);
            assert!(!claims.aba_ne_aca);
        }
    }

    #[test]
    fn generated_triples_conform() {
        for template in [Template::CEqualsB, Template::AbaEqAca, Template::Conjugated, Template::DirectSum] {
            for seed in 0..4 {
                for (dx, dy) in [(2, 2), (3, 4), (4, 3), (5, 5)] {
                    let t = generate(&GenSpec::new(template, dx, seed).with_dim_y(dy)).unwrap();
                    assert!(check_condition(&t).holds, "{template} {seed} {dx}x{dy}");
                    assert_eq!((t.dim_x(), t.dim_y()), (dx, dy));
                }
            }
        }
    }

    #[test]
    fn aba_eq_aca_gives_c_different_from_b() {
        let t = generate(&GenSpec::new(Template::AbaEqAca, 4, 1)).unwrap();
        assert_eq!(t.aba(), t.aca());
        assert_ne!(t.b(), t.c());
    }

    #[test]
    fn nonconforming_fails_the_condition() {
        for seed in 0..5 {
            let t = generate(&GenSpec::new(Template::Nonconforming, 3, seed)).unwrap();
            assert!(!check_condition(&t).holds);
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let spec = GenSpec::new(Template::Conjugated, 4, 99).with_dim_y(3);
        assert_eq!(generate(&spec).unwrap(), generate(&spec).unwrap());
        let other = GenSpec { seed: 100, ..spec.clone() };
        assert_ne!(generate(&spec).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn entries_respect_the_bound() {
        let t = generate(&GenSpec::new(Template::CEqualsB, 6, 3).with_entry_bound(2)).unwrap();
        for e in t.a().entries().iter().chain(t.b().entries()) {
            assert!(e.numer().magnitude() <= &2u32.into() && e.denom() <= &2.into());
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!(generate(&GenSpec::new(Template::PaperEx1, 1, 0)).is_err());
        assert!(generate(&GenSpec::new(Template::PaperEx2, 2, 0).with_dim_y(3)).is_err());
        assert!(generate(&GenSpec::new(Template::CEqualsB, 25, 0)).is_err());
        assert!(generate(&GenSpec::new(Template::CEqualsB, 0, 0)).is_err());
        assert!(generate(&GenSpec::new(Template::DirectSum, 1, 0)).is_err());
        assert!(generate(&GenSpec::new(Template::CEqualsB, 3, 0).with_entry_bound(0)).is_err());
    }

    #[test]
    fn paper_templates_via_generate() {
        let t = generate(&GenSpec::new(Template::PaperEx1, 2, 5)).unwrap();
        assert_eq!(t, paper_example(1, &p2()).unwrap());
        let t = generate(&GenSpec::new(Template::PaperEx2, 3, 1)).unwrap();
        assert_eq!(t.dim_x(), 9);
    }

    #[test]
    fn rational_spectrum_instances_split() {
        for seed in 0..6 {
            for (dx, dy) in [(3, 3), (4, 2), (2, 5)] {
                let spec = GenSpec::new(Template::AbaEqAca, dx, seed).with_dim_y(dy);
                let t = rational_spectrum_instance(&spec).unwrap();
                assert!(t.condition_holds());
                let total: usize = rational_eigenvalues(&t.ac()).unwrap().iter().map(|(_, m)| m).sum();
                assert_eq!(total, dy);
            }
        }
    }

    #[test]
    fn direct_sum_spectrum_is_the_union() {
        let t1 = rational_spectrum_instance(&GenSpec::new(Template::AbaEqAca, 2, 1)).unwrap();
        let t2 = rational_spectrum_instance(&GenSpec::new(Template::AbaEqAca, 3, 2)).unwrap();
        let t = direct_sum(&t1, &t2).unwrap();
        let p = t.ba().charpoly().unwrap();
        assert_eq!(p, &t1.ba().charpoly().unwrap() * &t2.ba().charpoly().unwrap());
        assert!(splits_over_q(&p));
    }

    #[test]
    fn splitting_detects_irrational_roots() {
        assert!(splits_over_q(&Poly::from_i64(&[-1, 0, 1])));
        assert!(!splits_over_q(&Poly::from_i64(&[-2, 0, 1])));
        assert!(splits_over_q(&Poly::new(vec![ratio(-1, 4), Rat::zero(), rat(1)])));
    }
}
