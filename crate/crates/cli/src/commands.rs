use std::fs;
use std::path::Path;

use num_traits::Zero;

use spectral_core::drazin::{proof_identities, transfer};
use spectral_core::genlab::{generate, GenSpec, Template};
use spectral_core::intertwine::{
    check_condition, compare_memberships, compare_sequences, default_inclusion_polys,
    default_probes, inclusion_lemma, nonzero_charpolys, shift_poly_check, OperatorTriple,
    ShiftedPair,
};
use spectral_core::Rat;

use crate::document::{Metadata, TripleDocument};
use crate::error::CliError;
use crate::report::{
    CharpolySection, Check, ConditionSection, DrazinSection, ProbeSection, Report,
};

#[derive(Debug, Clone, Default)]
pub struct ProbeOptions {
    /// Explicit probes; the default set when `None`.
    pub lambdas: Option<Vec<Rat>>,
    /// Largest `n` tabulated; `max(dim X, dim Y)` when `None`.
    pub n_max: Option<usize>,
}

pub fn read_document(path: &Path) -> Result<TripleDocument, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        action: "read",
        path: path.display().to_string(),
        source,
    })?;
    TripleDocument::parse(&text)
}

pub fn write_document(path: &Path, doc: &TripleDocument) -> Result<(), CliError> {
    fs::write(path, doc.to_json()).map_err(|source| CliError::Io {
        action: "write",
        path: path.display().to_string(),
        source,
    })
}

fn n_max(t: &OperatorTriple, opts: &ProbeOptions) -> usize {
    opts.n_max.unwrap_or_else(|| t.dim_x().max(t.dim_y()))
}

fn probes(t: &OperatorTriple, opts: &ProbeOptions) -> Result<Vec<Rat>, CliError> {
    match &opts.lambdas {
        Some(l) => Ok(l.clone()),
        None => Ok(default_probes(t)?),
    }
}

/// Invariant tables, memberships, the charpoly comparison and, when the
/// condition holds, the Drazin transfer. A violated condition is a warning.
pub fn build_report(t: &OperatorTriple, name: Option<String>, opts: &ProbeOptions) -> Result<Report, CliError> {
    let condition = check_condition(t);
    let mut warnings = Vec::new();
    let mut notes = Vec::new();
    if !condition.holds {
        warnings.push(
            "the intertwining condition does not hold; equalities below are not expected".into(),
        );
    }
    if t.b() == t.c() {
        notes.push("C = B: the classical Jacobson setting".into());
    }
    let n_max = n_max(t, opts);
    let mut sections = Vec::new();
    for lambda in probes(t, opts)? {
        if lambda.is_zero() {
            notes.push("lambda = 0 skipped: the theorem excludes 0".into());
            continue;
        }
        let seq = compare_sequences(t, &lambda, n_max)?;
        let theorem = compare_memberships(t, std::slice::from_ref(&lambda))?;
        sections.push(ProbeSection::new(&seq, &theorem));
    }
    let (ac, ba) = nonzero_charpolys(t)?;
    let drazin = if condition.holds {
        Some(DrazinSection::new(&transfer(t)?, &proof_identities(t)?))
    } else {
        notes.push("Drazin transfer skipped: its hypothesis is the condition".into());
        None
    };
    Ok(Report {
        name,
        dim_x: t.dim_x(),
        dim_y: t.dim_y(),
        condition: ConditionSection::from(&condition),
        warnings,
        notes,
        probes: sections,
        charpoly: CharpolySection {
            holds: ac == ba,
            ac_nonzero: ac.to_string(),
            ba_nonzero: ba.to_string(),
        },
        drazin,
        checks: Vec::new(),
    })
}

fn check(name: impl Into<String>, holds: bool) -> Check {
    Check {
        name: name.into(),
        holds,
        detail: None,
    }
}

/// Quotient-map injectivity at one `λ`: every map is well defined and both
/// injectivity tests pass; the detail names the first failure.
fn maps_check(t: &OperatorTriple, lambda: &Rat, n_max: usize) -> Result<Check, CliError> {
    let pair = ShiftedPair::new(t, lambda)?;
    let mut failure = None;
    'outer: for n in 0..=n_max {
        let maps = [("Gamma", pair.gamma(n)), ("Psi", pair.psi(n)), ("Phi", pair.phi(n))];
        for (label, map) in maps {
            let why = match map {
                Err(e) => Some(e.to_string()),
                Ok(m) => match (m.injective_by_rank(), m.injective_by_preimage()) {
                    (true, true) => None,
                    (r, p) => Some(format!("rank test {r}, preimage test {p}")),
                },
            };
            if let Some(why) = why {
                failure = Some(format!("{label} at n = {n}: {why}"));
                break 'outer;
            }
        }
    }
    Ok(Check {
        name: format!("quotient maps injective, lambda = {lambda}"),
        holds: failure.is_none(),
        detail: failure,
    })
}

/// Runs every verifier. Under `strict` a violated condition is an error;
/// otherwise it is a FAIL row and only the unconditional comparisons run.
pub fn verify(t: &OperatorTriple, name: Option<String>, strict: bool, opts: &ProbeOptions) -> Result<Report, CliError> {
    let holds = t.condition_holds();
    if strict && !holds {
        return Err(CliError::ConditionViolated);
    }
    let mut report = build_report(t, name, opts)?;
    let n_max = n_max(t, opts);
    let mut checks = vec![check("intertwining condition", holds)];
    if holds {
        for q in default_inclusion_polys() {
            let r = inclusion_lemma(t, &q)?;
            let mut c = check(format!("inclusion lemma, Q = {q}"), r.all());
            if !r.all() {
                c.detail = Some(format!("parts {:?}", r.parts));
            }
            checks.push(c);
        }
        for p in &report.probes {
            let lambda = spectral_core::ratmat::parse_rat(&p.lambda)?;
            checks.push(maps_check(t, &lambda, n_max)?);
        }
    }
    for p in &report.probes {
        checks.push(check(format!("sequence equalities, lambda = {}", p.lambda), p.sequences_hold()));
        checks.push(check(
            format!("sigma_R_i memberships agree, lambda = {}", p.lambda),
            p.memberships_agree(),
        ));
    }
    checks.push(check("nonzero charpoly match", report.charpoly.holds));
    if holds {
        for n in 1..=4 {
            let s = shift_poly_check(t, n)?;
            let mut c = check(format!("shift polynomials, n = {n}"), s.holds());
            if !s.holds() {
                c.detail = Some(format!(
                    "(I-BA)^n {}, (I-AC)^n {}, condition {}",
                    s.ba_identity, s.ac_identity, s.condition
                ));
            }
            checks.push(c);
        }
        let d = report.drazin.as_ref().expect("present when the condition holds");
        checks.push(check("Drazin transfer identities", d.verified));
        checks.push(check("Drazin transfer equals (BA)^D", d.matches_oracle));
        checks.push(check("transfer proof identities", d.proof.holds));
    }
    report.checks = checks;
    Ok(report)
}

/// The Drazin section alone; the condition is required.
pub fn drazin(t: &OperatorTriple) -> Result<DrazinSection, CliError> {
    if !t.condition_holds() {
        return Err(CliError::ConditionViolated);
    }
    Ok(DrazinSection::new(&transfer(t)?, &proof_identities(t)?))
}

#[derive(Debug, Clone)]
pub struct GenerateOptions {
    pub template: String,
    pub dim: usize,
    pub dim_y: Option<usize>,
    pub seed: u64,
    pub entry_bound: u32,
}

pub fn generate_document(opts: &GenerateOptions) -> Result<TripleDocument, CliError> {
    let template: Template = opts
        .template
        .parse()
        .map_err(|e: spectral_core::LabError| CliError::Argument(e.to_string()))?;
    let mut spec = GenSpec::new(template, opts.dim, opts.seed).with_entry_bound(opts.entry_bound);
    spec.dim_y = opts.dim_y;
    spec.validate().map_err(|e| CliError::Argument(e.to_string()))?;
    let t = generate(&spec)?;
    Ok(TripleDocument::from_triple(
        &t,
        Metadata {
            name: Some(format!("{template} dim {} seed {}", opts.dim, opts.seed)),
            seed: Some(opts.seed),
            template: Some(template.to_string()),
        },
    ))
}
