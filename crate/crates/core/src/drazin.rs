//! Drazin inverses by core-nilpotent decomposition, and the transfer of a
//! Drazin inverse of `AC` to one of `BA` under the intertwining condition.
//!
//! At finite dimension a Riesz operator is a nilpotent one, so the
//! "generalized Drazin-Riesz" conditions reduce to the classical three:
//! `TS = ST`, `STS = S`, `T^2 S - T` nilpotent.

use crate::error::{LabError, Result};
use crate::intertwine::OperatorTriple;
use crate::ratmat::{Mat, Rat};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DrazinResult {
    pub inverse: Mat,
    /// `asc(T) = dsc(T)`; `0` exactly when `T` is invertible.
    pub index: usize,
    /// `T^2 S`, the part of `T` living on `R(T^d)`.
    pub core_part: Mat,
    /// `T - T^2 S`, nilpotent of degree `index`.
    pub nilpotent_part: Mat,
}

/// `m` is nilpotent with the degree a Drazin index `index` calls for: zero
/// when `index = 0`, otherwise `m^index = 0` and `m^(index-1) != 0`.
pub fn degree_matches_index(m: &Mat, index: usize) -> bool {
    if index == 0 {
        m.is_zero()
    } else {
        m.nilpotency_degree() == Some(index)
    }
}

/// The three defining identities for `s` against `t`, with the nilpotency
/// degree of `T^2 S - T` when it is nilpotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DrazinCheck {
    pub commutes: bool,
    pub absorbs: bool,
    pub residual_degree: Option<usize>,
}

impl DrazinCheck {
    pub fn holds(&self) -> bool {
        self.commutes && self.absorbs && self.residual_degree.is_some()
    }
}

pub fn check_drazin(t: &Mat, s: &Mat) -> Result<DrazinCheck> {
    let n = t.ensure_square()?;
    if s.rows() != n || s.cols() != n {
        return Err(LabError::DimensionMismatch(format!(
            "candidate inverse is {}x{}, expected {n}x{n}",
            s.rows(),
            s.cols()
        )));
    }
    let ts = t * s;
    let st = s * t;
    Ok(DrazinCheck {
        commutes: ts == st,
        absorbs: &st * s == *s,
        residual_degree: (&(t * &ts) - t).nilpotency_degree(),
    })
}

fn ascent(t: &Mat) -> usize {
    let n = t.rows();
    let mut power = Mat::identity(n);
    let mut rank = n;
    for d in 0..=n {
        let next = &power * t;
        let next_rank = next.rank();
        if next_rank == rank {
            return d;
        }
        power = next;
        rank = next_rank;
    }
    n
}

/// `Q^n = R(T^d) ⊕ N(T^d)` with `d = asc(T)`; `S` inverts `T` on the first
/// summand and vanishes on the second.
pub fn drazin_inverse(t: &Mat) -> Result<DrazinResult> {
    let n = t.ensure_square()?;
    let d = ascent(t);
    let td = t.pow(d);
    let range = td.image();
    let kernel = td.kernel();
    let r = range.dim();
    let columns: Vec<Vec<Rat>> = range.basis().iter().chain(kernel.basis()).cloned().collect();
    let u = Mat::from_columns(n, &columns);
    let u_inv = u
        .inverse()
        .ok_or_else(|| LabError::Postcondition("range and kernel of T^d are not complementary".into()))?;
    let m = &(&u_inv * t) * &u;
    let mut core = Mat::zeros(r, r);
    for i in 0..r {
        for j in 0..r {
            core.set(i, j, m.get(i, j).clone());
        }
    }
    let core_inv = core
        .inverse()
        .ok_or_else(|| LabError::Postcondition("T is not invertible on R(T^d)".into()))?;
    let mut block = Mat::zeros(n, n);
    for i in 0..r {
        for j in 0..r {
            block.set(i, j, core_inv.get(i, j).clone());
        }
    }
    let s = &(&u * &block) * &u_inv;

    let check = check_drazin(t, &s)?;
    let core_part = &(t * t) * &s;
    let nilpotent_part = t - &core_part;
    if !check.holds() || !degree_matches_index(&nilpotent_part, d) {
        return Err(LabError::Postcondition(format!(
            "Drazin identities failed at ascent {d}: {check:?}"
        )));
    }
    Ok(DrazinResult {
        inverse: s,
        index: d,
        core_part,
        nilpotent_part,
    })
}

#[derive(Debug, Clone)]
pub struct TransferReport {
    pub s_ac: DrazinResult,
    /// `T = B S^2 A`.
    pub t_ba: Mat,
    /// `T(BA) = (BA)T`.
    pub commutes: bool,
    /// `T(BA)T = T`.
    pub absorbs: bool,
    /// Nilpotency degree of `(BA)^2 T - BA`, if nilpotent.
    pub residual_degree: Option<usize>,
    /// All three identities hold.
    pub verified: bool,
    /// `T` equals the independently computed Drazin inverse of `BA`.
    pub matches_oracle: bool,
    pub ba_drazin: DrazinResult,
}

pub fn transfer(t: &OperatorTriple) -> Result<TransferReport> {
    t.require_condition()?;
    let ba = t.ba();
    let s_ac = drazin_inverse(&t.ac())?;
    let s = &s_ac.inverse;
    let t_ba = &(t.b() * &(s * s)) * t.a();
    let check = check_drazin(&ba, &t_ba)?;
    let ba_drazin = drazin_inverse(&ba)?;
    Ok(TransferReport {
        matches_oracle: t_ba == ba_drazin.inverse,
        commutes: check.commutes,
        absorbs: check.absorbs,
        residual_degree: check.residual_degree,
        verified: check.holds(),
        s_ac,
        t_ba,
        ba_drazin,
    })
}

/// The opposite direction: from `S' = (BA)^D`, the candidate `A S'^2 C`
/// for `(AC)^D`.
#[derive(Debug, Clone)]
pub struct ReverseTransferReport {
    pub candidate: Mat,
    pub verified: bool,
    pub matches_oracle: bool,
}

pub fn reverse_transfer(t: &OperatorTriple) -> Result<ReverseTransferReport> {
    t.require_condition()?;
    let s = drazin_inverse(&t.ba())?.inverse;
    let candidate = &(t.a() * &(&s * &s)) * t.c();
    let ac = t.ac();
    let verified = check_drazin(&ac, &candidate)?.holds();
    Ok(ReverseTransferReport {
        matches_oracle: candidate == drazin_inverse(&ac)?.inverse,
        candidate,
        verified,
    })
}

/// Intermediate identities of the transfer argument, evaluated entrywise.
#[derive(Debug, Clone)]
pub struct ProofReport {
    /// `P = ACS - I`.
    pub p: Mat,
    /// `ACS = SAC`.
    pub acs_eq_sac: bool,
    /// `T(BA)^2 - BA = BPA` for `T = BS^2A`.
    pub residual_factorises: bool,
    /// `(PA)B(PA)B(PA) = (PA)B(PA)C(PA) = (PA)C(PA)B(PA) = (PA)C(PA)C(PA)`,
    /// as the three consecutive equalities.
    pub cycle: [bool; 3],
    /// `(PA)C = (AC)^2 S - AC`.
    pub pac_formula: bool,
    /// `(PA)C` is nilpotent of degree equal to the Drazin index of `AC`.
    pub pac_degree_is_index: bool,
    /// Drazin index of `AC`.
    pub ac_index: usize,
}

impl ProofReport {
    pub fn holds(&self) -> bool {
        self.acs_eq_sac
            && self.residual_factorises
            && self.cycle.iter().all(|&b| b)
            && self.pac_formula
            && self.pac_degree_is_index
    }
}

pub fn proof_identities(t: &OperatorTriple) -> Result<ProofReport> {
    t.require_condition()?;
    let (a, b, c) = (t.a(), t.b(), t.c());
    let ac = t.ac();
    let ba = t.ba();
    let dr = drazin_inverse(&ac)?;
    let s = &dr.inverse;
    let acs = &ac * s;
    let p = acs.shift(&Rat::from_integer(1.into()));
    let pa = &p * a;
    let pab = &pa * b;
    let pac_ = &pa * c;
    let chain = [
        &(&pab * &pab) * &pa,
        &(&pab * &pac_) * &pa,
        &(&pac_ * &pab) * &pa,
        &(&pac_ * &pac_) * &pa,
    ];
    let t_ba = &(b * &(s * s)) * a;
    let residual = &(&t_ba * &(&ba * &ba)) - &ba;
    Ok(ProofReport {
        acs_eq_sac: acs == s * &ac,
        residual_factorises: residual == &(b * &p) * a,
        cycle: [
            chain[0] == chain[1],
            chain[1] == chain[2],
            chain[2] == chain[3],
        ],
        pac_formula: pac_ == &(&(&ac * &ac) * s) - &ac,
        pac_degree_is_index: degree_matches_index(&pac_, dr.index),
        ac_index: dr.index,
        p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genlab::{generate, paper_example, rational_spectrum_instance, GenSpec, Template};
    use crate::ratmat::{rat, ratio};

    #[test]
    fn invertible_gives_the_inverse() {
        let t = Mat::from_i64(&[&[2, 1], &[1, 1]]);
        let d = drazin_inverse(&t).unwrap();
        assert_eq!(d.inverse, t.inverse().unwrap());
        assert_eq!(d.index, 0);
        assert!(d.nilpotent_part.is_zero());
        assert_eq!(d.core_part, t);
    }

    #[test]
    fn nilpotent_gives_zero() {
        let j3 = Mat::from_i64(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        let d = drazin_inverse(&j3).unwrap();
        assert!(d.inverse.is_zero());
        assert_eq!(d.index, 3);
        assert_eq!(d.nilpotent_part, j3);
        let z = drazin_inverse(&Mat::zeros(2, 2)).unwrap();
        assert_eq!((z.index, z.inverse.is_zero()), (1, true));
    }

    #[test]
    fn block_example() {
        // diag(2, J_2) -> diag(1/2, 0, 0), index 2.
        let t = Mat::from_i64(&[&[2, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        let d = drazin_inverse(&t).unwrap();
        assert_eq!(d.inverse, Mat::from_diagonal(&[ratio(1, 2), rat(0), rat(0)]));
        assert_eq!(d.index, 2);
        assert!((&d.core_part * &d.nilpotent_part).is_zero());
        assert!((&d.nilpotent_part * &d.core_part).is_zero());
    }

    #[test]
    fn similarity_hides_the_blocks() {
        let t = Mat::from_i64(&[&[2, 0, 0], &[0, 0, 1], &[0, 0, 0]]);
        let u = Mat::from_i64(&[&[1, 2, 0], &[0, 1, -1], &[1, 0, 1]]);
        let ui = u.inverse().unwrap();
        let conj = &(&u * &t) * &ui;
        let d = drazin_inverse(&conj).unwrap();
        let expected = &(&u * &Mat::from_diagonal(&[ratio(1, 2), rat(0), rat(0)])) * &ui;
        assert_eq!(d.inverse, expected);
    }

    #[test]
    fn check_rejects_wrong_candidates() {
        let t = Mat::from_i64(&[&[1, 1], &[0, 0]]);
        let d = drazin_inverse(&t).unwrap();
        assert!(check_drazin(&t, &d.inverse).unwrap().holds());
        assert!(!check_drazin(&t, &Mat::identity(2)).unwrap().holds());
        assert!(check_drazin(&t, &Mat::identity(3)).is_err());
    }

    #[test]
    fn transfer_classical_case() {
        let a = Mat::from_i64(&[&[1, 2], &[0, 1]]);
        let b = Mat::from_i64(&[&[3, 0], &[1, 1]]);
        let t = OperatorTriple::new(a, b.clone(), b).unwrap();
        let r = transfer(&t).unwrap();
        assert!(r.verified && r.matches_oracle);
        assert_eq!(r.t_ba, t.ba().inverse().unwrap());
        assert_eq!(r.s_ac.index, 0);
    }

    #[test]
    fn transfer_on_block_example() {
        let p = Mat::from_i64(&[&[1, 0], &[0, 0]]);
        let t = paper_example(2, &p).unwrap();
        let r = transfer(&t).unwrap();
        assert!(r.verified && r.matches_oracle);
        assert!(proof_identities(&t).unwrap().holds());
        assert!(reverse_transfer(&t).unwrap().matches_oracle);
    }

    #[test]
    fn transfer_on_generated_triples() {
        for seed in 0..6 {
            let spec = GenSpec::new(Template::AbaEqAca, 4, seed).with_dim_y(3);
            for t in [generate(&spec).unwrap(), rational_spectrum_instance(&spec).unwrap()] {
                let r = transfer(&t).unwrap();
                assert!(r.verified && r.matches_oracle, "seed {seed}");
                let p = proof_identities(&t).unwrap();
                assert!(p.holds(), "seed {seed}: {p:?}");
                let rev = reverse_transfer(&t).unwrap();
                assert!(rev.verified && rev.matches_oracle);
            }
        }
    }

    #[test]
    fn invertible_ac_has_zero_p() {
        let a = Mat::from_i64(&[&[1, 1], &[0, 2]]);
        let b = Mat::from_i64(&[&[1, 0], &[1, 1]]);
        let t = OperatorTriple::new(a, b.clone(), b).unwrap();
        let p = proof_identities(&t).unwrap();
        assert!(p.p.is_zero());
        assert_eq!(p.ac_index, 0);
        assert!(p.pac_degree_is_index);
        assert!(p.holds());
    }

    #[test]
    fn transfer_requires_the_condition() {
        let t = generate(&GenSpec::new(Template::Nonconforming, 3, 0)).unwrap();
        assert_eq!(transfer(&t).unwrap_err(), LabError::ConditionNotSatisfied);
        assert_eq!(proof_identities(&t).unwrap_err(), LabError::ConditionNotSatisfied);
    }
}
