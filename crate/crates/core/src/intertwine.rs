//! Operator triples `A: X -> Y`, `B, C: Y -> X` under the intertwining
//! condition `A(BA)^2 = ABACA = ACABA = (AC)^2A`, the quotient maps induced
//! by `ACA`, and the checks comparing `AC - λ` with `BA - λ`.
//!
//! A nonzero `λ` is handled by rescaling `A` to `A/λ`: the condition is
//! homogeneous of degree three in `A`, and `A'C - I = (AC - λ)/λ` has the
//! same kernel and range chains as `AC - λ`.

use num_traits::{One, Zero};

use crate::error::{LabError, Result};
use crate::invariants::{is_closed, PowerChains, RegularityClass, InvariantProfile};
use crate::ratmat::{ratio, Mat, Poly, Rat, Subspace};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorTriple {
    a: Mat,
    b: Mat,
    c: Mat,
    dim_x: usize,
    dim_y: usize,
    condition_holds: bool,
}

impl OperatorTriple {
    /// `a` is `dim_y x dim_x`, `b` and `c` are `dim_x x dim_y`.
    pub fn new(a: Mat, b: Mat, c: Mat) -> Result<Self> {
        let (dim_y, dim_x) = (a.rows(), a.cols());
        for (name, m) in [("B", &b), ("C", &c)] {
            if m.rows() != dim_x || m.cols() != dim_y {
                return Err(LabError::DimensionMismatch(format!(
                    "{name} is {}x{} but A is {dim_y}x{dim_x}, so {name} must be {dim_x}x{dim_y}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let mut t = Self {
            a,
            b,
            c,
            dim_x,
            dim_y,
            condition_holds: false,
        };
        t.condition_holds = condition_residuals(&t).iter().all(Mat::is_zero);
        Ok(t)
    }

    pub fn a(&self) -> &Mat {
        &self.a
    }

    pub fn b(&self) -> &Mat {
        &self.b
    }

    pub fn c(&self) -> &Mat {
        &self.c
    }

    pub fn dim_x(&self) -> usize {
        self.dim_x
    }

    pub fn dim_y(&self) -> usize {
        self.dim_y
    }

    /// Cached result of [`check_condition`].
    pub fn condition_holds(&self) -> bool {
        self.condition_holds
    }

    pub fn require_condition(&self) -> Result<()> {
        if self.condition_holds {
            Ok(())
        } else {
            Err(LabError::ConditionNotSatisfied)
        }
    }

    pub fn ba(&self) -> Mat {
        &self.b * &self.a
    }

    pub fn ca(&self) -> Mat {
        &self.c * &self.a
    }

    pub fn ab(&self) -> Mat {
        &self.a * &self.b
    }

    pub fn ac(&self) -> Mat {
        &self.a * &self.c
    }

    pub fn aba(&self) -> Mat {
        &self.a * &self.ba()
    }

    pub fn aca(&self) -> Mat {
        &self.a * &self.ca()
    }

    /// `(A/mu, B, C)`; preserves the condition for every `mu != 0`.
    pub fn scaled(&self, mu: &Rat) -> Result<Self> {
        if mu.is_zero() {
            return Err(LabError::ZeroLambda);
        }
        Ok(Self {
            a: self.a.scale(&mu.recip()),
            b: self.b.clone(),
            c: self.c.clone(),
            dim_x: self.dim_x,
            dim_y: self.dim_y,
            condition_holds: self.condition_holds,
        })
    }

    /// Same triple with `B` and `C` replaced (shapes must match).
    pub fn with_bc(&self, b: Mat, c: Mat) -> Result<Self> {
        Self::new(self.a.clone(), b, c)
    }
}

fn condition_residuals(t: &OperatorTriple) -> [Mat; 3] {
    let (ba, ca) = (t.ba(), t.ca());
    let a_ba = &t.a * &ba;
    let a_ca = &t.a * &ca;
    let a_ba_ba = &a_ba * &ba;
    let a_ba_ca = &a_ba * &ca;
    let a_ca_ba = &a_ca * &ba;
    let a_ca_ca = &a_ca * &ca;
    [
        &a_ba_ba - &a_ba_ca,
        &a_ba_ca - &a_ca_ba,
        &a_ca_ba - &a_ca_ca,
    ]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub holds: bool,
    /// `A(BA)^2 - ABACA`, `ABACA - ACABA`, `ACABA - (AC)^2A`.
    pub residuals: [Mat; 3],
}

pub fn check_condition(t: &OperatorTriple) -> ConditionReport {
    let residuals = condition_residuals(t);
    ConditionReport {
        holds: residuals.iter().all(Mat::is_zero),
        residuals,
    }
}

/// `ABA(CA - I)^k = (AB - I)^k ABA` and `ACA(BA - I)^k = (AC - I)^k ACA`.
pub fn power_identity(t: &OperatorTriple, k: usize) -> Result<bool> {
    t.require_condition()?;
    let one = Rat::one();
    let (aba, aca) = (t.aba(), t.aca());
    let lhs1 = &aba * &t.ca().shift(&one).pow(k);
    let rhs1 = &t.ab().shift(&one).pow(k) * &aba;
    let lhs2 = &aca * &t.ba().shift(&one).pow(k);
    let rhs2 = &t.ac().shift(&one).pow(k) * &aca;
    Ok(lhs1 == rhs1 && lhs2 == rhs2)
}

/// Outcome of the four inclusions for one polynomial `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InclusionReport {
    /// `ABA R(Q(CA-I)) ⊆ R(Q(AB-I))`, `ABA N(Q(CA-I)) ⊆ N(Q(AB-I))`,
    /// `ACA R(Q(BA-I)) ⊆ R(Q(AC-I))`, `ACA N(Q(BA-I)) ⊆ N(Q(AC-I))`.
    pub parts: [bool; 4],
}

impl InclusionReport {
    pub fn all(&self) -> bool {
        self.parts.iter().all(|&b| b)
    }
}

pub fn inclusion_lemma(t: &OperatorTriple, q: &Poly) -> Result<InclusionReport> {
    t.require_condition()?;
    let one = Rat::one();
    let q_ca = q.eval_mat(&t.ca().shift(&one))?;
    let q_ab = q.eval_mat(&t.ab().shift(&one))?;
    let q_ba = q.eval_mat(&t.ba().shift(&one))?;
    let q_ac = q.eval_mat(&t.ac().shift(&one))?;
    let (aba, aca) = (t.aba(), t.aca());
    let parts = [
        q_ab.image().contains(&q_ca.image().map(&aba)?)?,
        q_ab.kernel().contains(&q_ca.kernel().map(&aba)?)?,
        q_ac.image().contains(&q_ba.image().map(&aca)?)?,
        q_ac.kernel().contains(&q_ba.kernel().map(&aca)?)?,
    ];
    Ok(InclusionReport { parts })
}

/// `Q = 1, x, x^2, x^3` and one fixed cubic with non-integer coefficients.
pub fn default_inclusion_polys() -> Vec<Poly> {
    vec![
        Poly::one(),
        Poly::x(),
        Poly::from_i64(&[0, 0, 1]),
        Poly::from_i64(&[0, 0, 0, 1]),
        Poly::new(vec![ratio(5, 2), ratio(-1, 3), Rat::zero(), ratio(2, 1)]),
    ]
}

/// Linear map `x + source_small ↦ carrier·x + target_small` between
/// subquotients `source_big/source_small -> target_big/target_small`.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub source_big: Subspace,
    pub source_small: Subspace,
    pub target_big: Subspace,
    pub target_small: Subspace,
    pub carrier: Mat,
}

impl QuotientMap {
    /// Fails unless both pairs are nested and the carrier respects them.
    pub fn new(
        source_big: Subspace,
        source_small: Subspace,
        target_big: Subspace,
        target_small: Subspace,
        carrier: Mat,
    ) -> Result<Self> {
        let map = Self {
            source_big,
            source_small,
            target_big,
            target_small,
            carrier,
        };
        if !map.source_big.contains(&map.source_small)?
            || !map.target_big.contains(&map.target_small)?
        {
            return Err(LabError::NotNested);
        }
        if !map.is_well_defined()? {
            return Err(LabError::Postcondition(
                "carrier does not map the source pair into the target pair".into(),
            ));
        }
        Ok(map)
    }

    pub fn is_well_defined(&self) -> Result<bool> {
        Ok(self
            .target_small
            .contains(&self.source_small.map(&self.carrier)?)?
            && self
                .target_big
                .contains(&self.source_big.map(&self.carrier)?)?)
    }

    pub fn source_dim(&self) -> usize {
        self.source_big.dim() - self.source_small.dim()
    }

    pub fn target_dim(&self) -> usize {
        self.target_big.dim() - self.target_small.dim()
    }

    /// Matrix of the induced map, `target_dim x source_dim`, in the bases
    /// given by complements of the small spaces inside the big ones.
    pub fn matrix(&self) -> Mat {
        let src = self
            .source_big
            .complement_in(&self.source_small)
            .expect("nested by construction");
        let tgt = self
            .target_big
            .complement_in(&self.target_small)
            .expect("nested by construction");
        let n = self.target_big.ambient_dim();
        let small_dim = self.target_small.dim();
        let columns: Vec<Vec<Rat>> = self
            .target_small
            .basis()
            .iter()
            .chain(&tgt)
            .cloned()
            .collect();
        let basis = Mat::from_columns(n, &columns);
        let images: Vec<Vec<Rat>> = src.iter().map(|v| self.carrier.apply(v)).collect();
        let coords = basis
            .solve(&Mat::from_columns(n, &images))
            .expect("well-defined map lands in target_big");
        let mut m = Mat::zeros(tgt.len(), src.len());
        for i in 0..tgt.len() {
            for j in 0..src.len() {
                m.set(i, j, coords.get(small_dim + i, j).clone());
            }
        }
        m
    }

    pub fn injective_by_rank(&self) -> bool {
        self.matrix().rank() == self.source_dim()
    }

    /// `carrier^{-1}(target_small) ∩ source_big ⊆ source_small`.
    pub fn injective_by_preimage(&self) -> bool {
        let pre = Subspace::preimage(&self.carrier, &self.target_small)
            .and_then(|p| p.intersect(&self.source_big))
            .expect("dimensions agree by construction");
        self.source_small
            .contains(&pre)
            .expect("dimensions agree by construction")
    }
}

/// `BA - λ` and `AC - λ` of one triple, realised as `BA' - I`, `A'C - I` with
/// `A' = A/λ`, plus their power chains and the carrier `A'CA'`.
#[derive(Debug, Clone)]
pub struct ShiftedPair {
    lambda: Rat,
    ba: PowerChains,
    ac: PowerChains,
    carrier: Mat,
}

impl ShiftedPair {
    /// Does not require the condition; callers that rely on the lemmas check it.
    pub fn new(t: &OperatorTriple, lambda: &Rat) -> Result<Self> {
        let s = t.scaled(lambda)?;
        let one = Rat::one();
        Ok(Self {
            lambda: lambda.clone(),
            ba: PowerChains::new(&s.ba().shift(&one))?,
            ac: PowerChains::new(&s.ac().shift(&one))?,
            carrier: s.aca(),
        })
    }

    pub fn lambda(&self) -> &Rat {
        &self.lambda
    }

    pub fn ba_chains(&self) -> &PowerChains {
        &self.ba
    }

    pub fn ac_chains(&self) -> &PowerChains {
        &self.ac
    }

    /// `R(T^n)/R(T^{n+1})` on both sides.
    pub fn gamma(&self, n: usize) -> Result<QuotientMap> {
        QuotientMap::new(
            self.ba.image(n).clone(),
            self.ba.image(n + 1).clone(),
            self.ac.image(n).clone(),
            self.ac.image(n + 1).clone(),
            self.carrier.clone(),
        )
    }

    /// `N(T^{n+1})/N(T^n)` on both sides.
    pub fn psi(&self, n: usize) -> Result<QuotientMap> {
        QuotientMap::new(
            self.ba.kernel(n + 1).clone(),
            self.ba.kernel(n).clone(),
            self.ac.kernel(n + 1).clone(),
            self.ac.kernel(n).clone(),
            self.carrier.clone(),
        )
    }

    /// `(R(T) + N(T^{n+1})) / (R(T) + N(T^n))` on both sides.
    pub fn phi(&self, n: usize) -> Result<QuotientMap> {
        QuotientMap::new(
            self.ba.range_plus_kernel(n + 1),
            self.ba.range_plus_kernel(n),
            self.ac.range_plus_kernel(n + 1),
            self.ac.range_plus_kernel(n),
            self.carrier.clone(),
        )
    }

    /// `R(T) + N(T^n)` for `AC - λ` and `BA - λ` with their closedness flags.
    pub fn closedness(&self, n: usize) -> ClosednessCheck {
        let ac_sum = self.ac.range_plus_kernel(n);
        let ba_sum = self.ba.range_plus_kernel(n);
        ClosednessCheck {
            ac_closed: is_closed(&ac_sum),
            ba_closed: is_closed(&ba_sum),
            ac_sum,
            ba_sum,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClosednessCheck {
    pub ac_sum: Subspace,
    pub ba_sum: Subspace,
    pub ac_closed: bool,
    pub ba_closed: bool,
}

fn conforming_pair(t: &OperatorTriple, lambda: &Rat) -> Result<ShiftedPair> {
    t.require_condition()?;
    ShiftedPair::new(t, lambda)
}

/// `Γ_ACA: R((BA-λ)^n)/R((BA-λ)^{n+1}) -> R((AC-λ)^n)/R((AC-λ)^{n+1})`.
pub fn gamma_map(t: &OperatorTriple, n: usize, lambda: &Rat) -> Result<QuotientMap> {
    conforming_pair(t, lambda)?.gamma(n)
}

/// `Ψ_ACA: N((BA-λ)^{n+1})/N((BA-λ)^n) -> N((AC-λ)^{n+1})/N((AC-λ)^n)`.
pub fn psi_map(t: &OperatorTriple, n: usize, lambda: &Rat) -> Result<QuotientMap> {
    conforming_pair(t, lambda)?.psi(n)
}

/// `Φ_ACA` between the `R(T) + N(T^n)` chains of `BA - λ` and `AC - λ`.
pub fn phi_map(t: &OperatorTriple, n: usize, lambda: &Rat) -> Result<QuotientMap> {
    conforming_pair(t, lambda)?.phi(n)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceRow {
    pub n: usize,
    pub c_ac: usize,
    pub c_ba: usize,
    pub cp_ac: usize,
    pub cp_ba: usize,
    pub k_ac: usize,
    pub k_ba: usize,
}

impl SequenceRow {
    pub fn c_holds(&self) -> bool {
        self.c_ac == self.c_ba
    }

    pub fn cp_holds(&self) -> bool {
        self.cp_ac == self.cp_ba
    }

    pub fn k_holds(&self) -> bool {
        self.k_ac == self.k_ba
    }

    pub fn holds(&self) -> bool {
        self.c_holds() && self.cp_holds() && self.k_holds()
    }
}

/// Side-by-side Grabiner sequences of `AC - λ` and `BA - λ`.
#[derive(Debug, Clone)]
pub struct SequenceReport {
    pub lambda: Rat,
    pub rows: Vec<SequenceRow>,
    pub ac_profile: InvariantProfile,
    pub ba_profile: InvariantProfile,
}

impl SequenceReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(SequenceRow::holds)
    }

    /// `c`, `c'`, `k` totals agree.
    pub fn totals_hold(&self) -> bool {
        let (a, b) = (&self.ac_profile, &self.ba_profile);
        a.c_total == b.c_total && a.cp_total == b.cp_total && a.k_total == b.k_total
    }

    /// `asc` and `dsc` agree.
    pub fn degrees_hold(&self) -> bool {
        let (a, b) = (&self.ac_profile, &self.ba_profile);
        a.asc == b.asc && a.dsc == b.dsc
    }
}

/// Tabulates the sequences without requiring the condition (used for
/// reports and negative controls).
pub fn compare_sequences(t: &OperatorTriple, lambda: &Rat, n_max: usize) -> Result<SequenceReport> {
    if lambda.is_zero() {
        return Err(LabError::ZeroLambda);
    }
    let ac = PowerChains::new(&t.ac().shift(lambda))?;
    let ba = PowerChains::new(&t.ba().shift(lambda))?;
    let rows = (0..=n_max)
        .map(|n| SequenceRow {
            n,
            c_ac: ac.c(n),
            c_ba: ba.c(n),
            cp_ac: ac.cp(n),
            cp_ba: ba.cp(n),
            k_ac: ac.k(n),
            k_ba: ba.k(n),
        })
        .collect();
    Ok(SequenceReport {
        lambda: lambda.clone(),
        rows,
        ac_profile: InvariantProfile::from_chains(&ac),
        ba_profile: InvariantProfile::from_chains(&ba),
    })
}

pub fn verify_sequence_equalities(
    t: &OperatorTriple,
    lambda: &Rat,
    n_max: usize,
) -> Result<SequenceReport> {
    t.require_condition()?;
    compare_sequences(t, lambda, n_max)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipRow {
    pub lambda: Rat,
    /// Regularity index `1..=19`.
    pub index: usize,
    /// `λ ∈ σ_{R_i}(AC)`.
    pub in_ac_spectrum: bool,
    /// `λ ∈ σ_{R_i}(BA)`.
    pub in_ba_spectrum: bool,
}

impl MembershipRow {
    pub fn agrees(&self) -> bool {
        self.in_ac_spectrum == self.in_ba_spectrum
    }
}

#[derive(Debug, Clone, Default)]
pub struct TheoremReport {
    pub rows: Vec<MembershipRow>,
    /// Probes equal to zero, which the statement excludes.
    pub skipped: Vec<Rat>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(MembershipRow::agrees)
    }
}

fn regularity_of(t: &Mat) -> Result<RegularityClass> {
    let chains = PowerChains::new(t)?;
    let p = InvariantProfile::from_chains(&chains);
    Ok(RegularityClass::from_profile(&p, &chains))
}

pub fn compare_memberships(t: &OperatorTriple, lambdas: &[Rat]) -> Result<TheoremReport> {
    let mut report = TheoremReport::default();
    let (ac, ba) = (t.ac(), t.ba());
    for lambda in lambdas {
        if lambda.is_zero() {
            report.skipped.push(lambda.clone());
            continue;
        }
        let ac_class = regularity_of(&ac.shift(lambda))?;
        let ba_class = regularity_of(&ba.shift(lambda))?;
        for i in 1..=19 {
            report.rows.push(MembershipRow {
                lambda: lambda.clone(),
                index: i,
                in_ac_spectrum: !ac_class.memberships[i - 1],
                in_ba_spectrum: !ba_class.memberships[i - 1],
            });
        }
    }
    Ok(report)
}

/// `σ_{R_i}(AC)∖{0} = σ_{R_i}(BA)∖{0}` checked pointwise at each probe.
pub fn verify_theorem(t: &OperatorTriple, lambdas: &[Rat]) -> Result<TheoremReport> {
    t.require_condition()?;
    compare_memberships(t, lambdas)
}

/// Every rational eigenvalue of `AC` and `BA`, `1`, and two rationals that
/// are eigenvalues of neither; sorted, without duplicates, zero included if
/// it is an eigenvalue (callers skip it).
pub fn default_probes(t: &OperatorTriple) -> Result<Vec<Rat>> {
    let p_ac = t.ac().charpoly()?;
    let p_ba = t.ba().charpoly()?;
    let mut probes: Vec<Rat> = p_ac
        .rational_roots()
        .into_iter()
        .chain(p_ba.rational_roots())
        .map(|(r, _)| r)
        .collect();
    probes.push(Rat::one());
    let mut extra = 0;
    for k in 1.. {
        let candidate = ratio(2 * k + 5, 3);
        let candidate = if k % 2 == 0 { -candidate } else { candidate };
        if !p_ac.eval(&candidate).is_zero() && !p_ba.eval(&candidate).is_zero() {
            probes.push(candidate);
            extra += 1;
            if extra == 2 {
                break;
            }
        }
    }
    probes.sort();
    probes.dedup();
    Ok(probes)
}

/// Characteristic polynomials of `AC` and `BA` with every factor `x` removed.
pub fn nonzero_charpolys(t: &OperatorTriple) -> Result<(Poly, Poly)> {
    Ok((
        t.ac().charpoly()?.strip_zero_roots().monic(),
        t.ba().charpoly()?.strip_zero_roots().monic(),
    ))
}

pub fn nonzero_charpoly_match(t: &OperatorTriple) -> Result<bool> {
    t.require_condition()?;
    let (ac, ba) = nonzero_charpolys(t)?;
    Ok(ac == ba)
}

fn binomial(n: usize, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc *= ratio((n - i) as i64, (i + 1) as i64);
    }
    acc
}

#[derive(Debug, Clone)]
pub struct ShiftPolyCheck {
    pub b_n: Mat,
    pub c_n: Mat,
    /// `(I - BA)^n = I - B_n A`.
    pub ba_identity: bool,
    /// `(I - AC)^n = I - A C_n`.
    pub ac_identity: bool,
    /// `(A, B_n, C_n)` satisfies the condition.
    pub condition: bool,
}

impl ShiftPolyCheck {
    pub fn holds(&self) -> bool {
        self.ba_identity && self.ac_identity && self.condition
    }
}

/// `B_n = Σ_{k=1}^n (-1)^{k-1} C(n,k) B(AB)^{k-1}` and
/// `C_n = Σ_{k=1}^n (-1)^{k-1} C(n,k) (CA)^{k-1} C`, with their identities
/// evaluated but not enforced.
pub fn shift_poly_check(t: &OperatorTriple, n: usize) -> Result<ShiftPolyCheck> {
    if n == 0 {
        return Err(LabError::ZeroShiftOrder);
    }
    let (ab, ca) = (t.ab(), t.ca());
    let mut b_n = Mat::zeros(t.dim_x, t.dim_y);
    let mut c_n = Mat::zeros(t.dim_x, t.dim_y);
    let mut b_term = t.b.clone();
    let mut c_term = t.c.clone();
    for k in 1..=n {
        let mut coef = binomial(n, k);
        if k % 2 == 0 {
            coef = -coef;
        }
        b_n = &b_n + &b_term.scale(&coef);
        c_n = &c_n + &c_term.scale(&coef);
        b_term = &b_term * &ab;
        c_term = &ca * &c_term;
    }
    let ix = Mat::identity(t.dim_x);
    let iy = Mat::identity(t.dim_y);
    let ba_identity = (&ix - &t.ba()).pow(n) == &ix - &(&b_n * &t.a);
    let ac_identity = (&iy - &t.ac()).pow(n) == &iy - &(&t.a * &c_n);
    let condition = t.with_bc(b_n.clone(), c_n.clone())?.condition_holds();
    Ok(ShiftPolyCheck {
        b_n,
        c_n,
        ba_identity,
        ac_identity,
        condition,
    })
}

/// `(B_n, C_n)`; requires the condition and enforces all three identities.
pub fn shift_polys(t: &OperatorTriple, n: usize) -> Result<(Mat, Mat)> {
    if n == 0 {
        return Err(LabError::ZeroShiftOrder);
    }
    t.require_condition()?;
    let check = shift_poly_check(t, n)?;
    if !check.holds() {
        return Err(LabError::Postcondition(format!(
            "shift polynomials of order {n}: (I-BA)^n identity {}, (I-AC)^n identity {}, condition {}",
            check.ba_identity, check.ac_identity, check.condition
        )));
    }
    Ok((check.b_n, check.c_n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genlab::{generate, paper_example, GenSpec, Template};
    use crate::ratmat::rat;

    fn p2() -> Mat {
        Mat::from_i64(&[&[1, 0], &[0, 0]])
    }

    fn ex2() -> OperatorTriple {
        paper_example(2, &p2()).unwrap()
    }

    fn aba_triple(seed: u64, dx: usize, dy: usize) -> OperatorTriple {
        generate(&GenSpec::new(Template::AbaEqAca, dx, seed).with_dim_y(dy)).unwrap()
    }

    #[test]
    fn shape_mismatch_is_rejected() {
        let a = Mat::zeros(3, 2);
        let err = OperatorTriple::new(a.clone(), Mat::zeros(2, 3), Mat::zeros(3, 2));
        assert!(matches!(err, Err(LabError::DimensionMismatch(_))));
        assert!(OperatorTriple::new(a, Mat::zeros(2, 3), Mat::zeros(2, 3)).is_ok());
    }

    #[test]
    fn c_equal_b_always_conforms() {
        let a = Mat::from_i64(&[&[1, 2, 0], &[0, -1, 3]]);
        let b = Mat::from_i64(&[&[2, 1], &[0, 1], &[1, 1]]);
        let t = OperatorTriple::new(a, b.clone(), b).unwrap();
        let r = check_condition(&t);
        assert!(r.holds);
        assert!(r.residuals.iter().all(Mat::is_zero));
    }

    #[test]
    fn residuals_are_reported() {
        let a = Mat::from_i64(&[&[1, 1], &[0, 1]]);
        let b = Mat::from_i64(&[&[1, 0], &[1, 1]]);
        let c = Mat::from_i64(&[&[0, 1], &[2, 0]]);
        let t = OperatorTriple::new(a, b, c).unwrap();
        let r = check_condition(&t);
        assert!(!r.holds);
        assert!(!t.condition_holds());
        assert!(r.residuals.iter().any(|m| !m.is_zero()));
        assert_eq!(power_identity(&t, 1), Err(LabError::ConditionNotSatisfied));
    }

    #[test]
    fn power_identity_examples() {
        let t = ex2();
        assert!(power_identity(&t, 0).unwrap());
        assert!(power_identity(&t, 1).unwrap());
        assert!(power_identity(&aba_triple(3, 4, 4), 4).unwrap());
    }

    #[test]
    fn inclusion_examples() {
        let t = ex2();
        assert!(inclusion_lemma(&t, &Poly::one()).unwrap().all());
        for n in 1..=4 {
            let q = Poly::monomial(rat(1), n);
            assert!(inclusion_lemma(&t, &q).unwrap().all(), "x^{n}");
        }
        let q = Poly::new(vec![ratio(1, 2), rat(-3), rat(0), ratio(4, 5)]);
        assert!(inclusion_lemma(&aba_triple(5, 3, 4), &q).unwrap().all());
    }

    #[test]
    fn maps_outside_spectrum_are_trivial() {
        let t = ex2();
        let lambda = rat(5);
        for map in [
            gamma_map(&t, 0, &lambda).unwrap(),
            psi_map(&t, 0, &lambda).unwrap(),
            phi_map(&t, 0, &lambda).unwrap(),
        ] {
            assert_eq!(map.source_dim(), 0);
            assert_eq!(map.target_dim(), 0);
            assert!(map.injective_by_rank() && map.injective_by_preimage());
        }
    }

    #[test]
    fn maps_on_paper_example() {
        let t = ex2();
        let g = gamma_map(&t, 0, &rat(1)).unwrap();
        assert!(g.injective_by_rank() && g.injective_by_preimage());
        assert_eq!(g.source_dim(), g.target_dim());
        let p = psi_map(&t, 0, &rat(1)).unwrap();
        assert!(p.injective_by_rank() && p.injective_by_preimage());
        let f = phi_map(&t, 1, &rat(1)).unwrap();
        assert!(f.injective_by_rank() && f.injective_by_preimage());
    }

    #[test]
    fn maps_on_generated_triples() {
        let t = aba_triple(11, 4, 3);
        let g = gamma_map(&t, 1, &rat(2)).unwrap();
        assert!(g.injective_by_rank() && g.injective_by_preimage());
        let p = psi_map(&t, 2, &ratio(1, 2)).unwrap();
        assert!(p.injective_by_rank() && p.injective_by_preimage());
        let f = phi_map(&t, 0, &rat(3)).unwrap();
        assert!(f.injective_by_rank() && f.injective_by_preimage());
    }

    #[test]
    fn maps_reject_zero_lambda_and_bad_triples() {
        let t = ex2();
        assert_eq!(gamma_map(&t, 0, &rat(0)).unwrap_err(), LabError::ZeroLambda);
        let bad = generate(&GenSpec::new(Template::Nonconforming, 3, 1)).unwrap();
        assert_eq!(
            psi_map(&bad, 0, &rat(1)).unwrap_err(),
            LabError::ConditionNotSatisfied
        );
    }

    #[test]
    fn quotient_matrix_detects_non_injective_maps() {
        // Q^2 -> Q^2 / span{e1} through the projection onto e1: kills everything.
        let full = Subspace::full(2);
        let zero = Subspace::zero(2);
        let e1 = Subspace::span(2, vec![vec![rat(1), rat(0)]]);
        let proj = Mat::from_i64(&[&[1, 0], &[0, 0]]);
        let map = QuotientMap::new(full, zero, Subspace::full(2), e1, proj).unwrap();
        assert_eq!(map.matrix().rank(), 0);
        assert!(!map.injective_by_rank());
        assert!(!map.injective_by_preimage());
    }

    #[test]
    fn sequence_equalities() {
        let t = ex2();
        let far = verify_sequence_equalities(&t, &rat(7), 6).unwrap();
        assert!(far.rows.iter().all(|r| r.c_ac + r.c_ba + r.cp_ac + r.cp_ba + r.k_ac + r.k_ba == 0));
        let r = verify_sequence_equalities(&t, &rat(1), 6).unwrap();
        assert!(r.holds() && r.totals_hold() && r.degrees_hold());
        assert_eq!(
            verify_sequence_equalities(&t, &rat(0), 3).unwrap_err(),
            LabError::ZeroLambda
        );
    }

    #[test]
    fn theorem_on_paper_example() {
        let t = ex2();
        let probes = default_probes(&t).unwrap();
        assert!(probes.contains(&rat(1)));
        let r = verify_theorem(&t, &probes).unwrap();
        assert!(r.holds());
        assert_eq!(r.skipped, vec![rat(0)]);
        let at_one: Vec<_> = r.rows.iter().filter(|row| row.lambda == rat(1)).collect();
        assert_eq!(at_one.len(), 19);
        // 1 is an eigenvalue of both, so neither AC - 1 nor BA - 1 is onto.
        assert!(at_one[0].in_ac_spectrum && at_one[0].in_ba_spectrum);
    }

    #[test]
    fn theorem_off_spectrum_is_all_false() {
        let t = aba_triple(2, 3, 3);
        let (p_ac, p_ba) = (t.ac().charpoly().unwrap(), t.ba().charpoly().unwrap());
        let lambda = ratio(97, 13);
        assert!(!p_ac.eval(&lambda).is_zero() && !p_ba.eval(&lambda).is_zero());
        let r = verify_theorem(&t, &[lambda]).unwrap();
        assert!(r.rows.iter().all(|row| !row.in_ac_spectrum && !row.in_ba_spectrum));
    }

    #[test]
    fn charpoly_match_examples() {
        let a = Mat::from_i64(&[&[1, 2, 0], &[0, -1, 3]]);
        let b = Mat::from_i64(&[&[2, 1], &[0, 1], &[1, 1]]);
        let t = OperatorTriple::new(a, b.clone(), b).unwrap();
        assert!(nonzero_charpoly_match(&t).unwrap());
        assert!(nonzero_charpoly_match(&ex2()).unwrap());
        assert!(nonzero_charpoly_match(&aba_triple(9, 4, 5)).unwrap());
    }

    #[test]
    fn shift_poly_examples() {
        let t = aba_triple(4, 3, 3);
        let (b1, c1) = shift_polys(&t, 1).unwrap();
        assert_eq!((&b1, &c1), (t.b(), t.c()));
        let (b2, _) = shift_polys(&t, 2).unwrap();
        let expected = &t.b().scale(&rat(2)) - &(t.b() * &t.ab());
        assert_eq!(b2, expected);
        assert!(shift_polys(&ex2(), 4).is_ok());
        assert_eq!(shift_polys(&t, 0).unwrap_err(), LabError::ZeroShiftOrder);
    }

    #[test]
    fn closedness_sums_are_materialised() {
        let pair = ShiftedPair::new(&ex2(), &rat(1)).unwrap();
        for n in 0..4 {
            let c = pair.closedness(n);
            assert!(c.ac_closed && c.ba_closed);
            assert_eq!(c.ac_sum.ambient_dim(), 6);
        }
    }
}
