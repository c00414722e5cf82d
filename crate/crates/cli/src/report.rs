//! Machine-readable reports and the text table rendered from them.
//!
//! Every verdict stored here is a boolean returned by `spectral-core`; the
//! renderer only formats.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use spectral_core::drazin::{DrazinResult, ProofReport, TransferReport};
use spectral_core::intertwine::{ConditionReport, SequenceReport, TheoremReport};
use spectral_core::invariants::InvariantProfile;
use spectral_core::Mat;

pub type Rows = Vec<Vec<String>>;

pub fn mat_rows(m: &Mat) -> Rows {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(ToString::to_string).collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSection {
    pub holds: bool,
    /// Nonzero entries of `A(BA)^2 - ABACA`, `ABACA - ACABA`, `ACABA - (AC)^2A`.
    pub residual_nonzero: [usize; 3],
}

impl From<&ConditionReport> for ConditionSection {
    fn from(r: &ConditionReport) -> Self {
        let count = |m: &Mat| m.entries().iter().filter(|x| **x != num_traits::Zero::zero()).count();
        Self {
            holds: r.holds,
            residual_nonzero: [
                count(&r.residuals[0]),
                count(&r.residuals[1]),
                count(&r.residuals[2]),
            ],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRowOut {
    pub n: usize,
    pub c_ac: usize,
    pub c_ba: usize,
    pub cp_ac: usize,
    pub cp_ba: usize,
    pub k_ac: usize,
    pub k_ba: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileOut {
    pub asc: usize,
    pub dsc: usize,
    pub asc_e: usize,
    pub dsc_e: usize,
    pub dis: usize,
    pub dis_e: usize,
    pub c_total: usize,
    pub cp_total: usize,
    pub k_total: usize,
}

impl From<&InvariantProfile> for ProfileOut {
    fn from(p: &InvariantProfile) -> Self {
        Self {
            asc: p.asc,
            dsc: p.dsc,
            asc_e: p.asc_e,
            dsc_e: p.dsc_e,
            dis: p.dis,
            dis_e: p.dis_e,
            c_total: p.c_total,
            cp_total: p.cp_total,
            k_total: p.k_total,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityRow {
    pub index: usize,
    pub in_ac_spectrum: bool,
    pub in_ba_spectrum: bool,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeSection {
    pub lambda: String,
    pub rows: Vec<SequenceRowOut>,
    pub ac_profile: ProfileOut,
    pub ba_profile: ProfileOut,
    pub totals_hold: bool,
    pub degrees_hold: bool,
    pub regularity: Vec<RegularityRow>,
}

impl ProbeSection {
    pub fn new(seq: &SequenceReport, theorem: &TheoremReport) -> Self {
        Self {
            lambda: seq.lambda.to_string(),
            rows: seq
                .rows
                .iter()
                .map(|r| SequenceRowOut {
                    n: r.n,
                    c_ac: r.c_ac,
                    c_ba: r.c_ba,
                    cp_ac: r.cp_ac,
                    cp_ba: r.cp_ba,
                    k_ac: r.k_ac,
                    k_ba: r.k_ba,
                    holds: r.holds(),
                })
                .collect(),
            ac_profile: (&seq.ac_profile).into(),
            ba_profile: (&seq.ba_profile).into(),
            totals_hold: seq.totals_hold(),
            degrees_hold: seq.degrees_hold(),
            regularity: theorem
                .rows
                .iter()
                .filter(|r| r.lambda == seq.lambda)
                .map(|r| RegularityRow {
                    index: r.index,
                    in_ac_spectrum: r.in_ac_spectrum,
                    in_ba_spectrum: r.in_ba_spectrum,
                    agrees: r.agrees(),
                })
                .collect(),
        }
    }

    pub fn sequences_hold(&self) -> bool {
        self.rows.iter().all(|r| r.holds) && self.totals_hold && self.degrees_hold
    }

    pub fn memberships_agree(&self) -> bool {
        self.regularity.iter().all(|r| r.agrees)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharpolySection {
    pub ac_nonzero: String,
    pub ba_nonzero: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofOut {
    pub acs_eq_sac: bool,
    pub residual_factorises: bool,
    pub cycle: [bool; 3],
    pub pac_formula: bool,
    pub pac_degree_is_index: bool,
    pub holds: bool,
}

impl From<&ProofReport> for ProofOut {
    fn from(p: &ProofReport) -> Self {
        Self {
            acs_eq_sac: p.acs_eq_sac,
            residual_factorises: p.residual_factorises,
            cycle: p.cycle,
            pac_formula: p.pac_formula,
            pac_degree_is_index: p.pac_degree_is_index,
            holds: p.holds(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DrazinSection {
    pub s_ac: Rows,
    pub index: usize,
    pub t_ba: Rows,
    pub commutes: bool,
    pub absorbs: bool,
    pub residual_nilpotent: bool,
    pub residual_degree: Option<usize>,
    pub verified: bool,
    pub matches_oracle: bool,
    pub proof: ProofOut,
}

impl DrazinSection {
    pub fn new(tr: &TransferReport, proof: &ProofReport) -> Self {
        let s: &DrazinResult = &tr.s_ac;
        Self {
            s_ac: mat_rows(&s.inverse),
            index: s.index,
            t_ba: mat_rows(&tr.t_ba),
            commutes: tr.commutes,
            absorbs: tr.absorbs,
            residual_nilpotent: tr.residual_degree.is_some(),
            residual_degree: tr.residual_degree,
            verified: tr.verified,
            matches_oracle: tr.matches_oracle,
            proof: proof.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub name: Option<String>,
    pub dim_x: usize,
    pub dim_y: usize,
    pub condition: ConditionSection,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
    pub probes: Vec<ProbeSection>,
    pub charpoly: CharpolySection,
    pub drazin: Option<DrazinSection>,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.holds)
    }

    /// Number of FAIL verdicts the text rendering carries.
    pub fn fail_rows(&self) -> usize {
        let mut fails = usize::from(!self.condition.holds) + usize::from(!self.charpoly.holds);
        for p in &self.probes {
            fails += p.rows.iter().filter(|r| !r.holds).count();
            fails += usize::from(!p.totals_hold) + usize::from(!p.degrees_hold);
            fails += usize::from(!p.memberships_agree());
        }
        if let Some(d) = &self.drazin {
            let pr = &d.proof;
            fails += [
                d.commutes,
                d.absorbs,
                d.residual_nilpotent,
                d.matches_oracle,
                pr.acs_eq_sac,
                pr.residual_factorises,
                pr.cycle.iter().all(|&b| b),
                pr.pac_formula,
                pr.pac_degree_is_index,
            ]
            .iter()
            .filter(|b| !**b)
            .count();
        }
        fails + self.checks.iter().filter(|c| !c.holds).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "HOLD"
    } else {
        "FAIL"
    }
}

fn write_matrix(out: &mut String, indent: &str, rows: &Rows) {
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for r in rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "{indent}[ {} ]", cells.join("  "));
    }
}

/// Text rendering of `report`.
pub fn render_human(report: &Report) -> String {
    let mut out = String::new();
    let name = report.name.as_deref().unwrap_or("triple");
    let _ = writeln!(out, "{name}: dim X = {}, dim Y = {}", report.dim_x, report.dim_y);
    let c = &report.condition;
    let _ = writeln!(
        out,
        "condition A(BA)^2 = ABACA = ACABA = (AC)^2A: {} (nonzero residual entries {:?})",
        verdict(c.holds),
        c.residual_nonzero
    );
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    for n in &report.notes {
        let _ = writeln!(out, "note: {n}");
    }

    for p in &report.probes {
        let _ = writeln!(out, "\nlambda = {}", p.lambda);
        let _ = writeln!(
            out,
            "  {:>3}  {:>5} {:>5}  {:>6} {:>6}  {:>5} {:>5}  verdict",
            "n", "c:AC", "c:BA", "c':AC", "c':BA", "k:AC", "k:BA"
        );
        for r in &p.rows {
            let _ = writeln!(
                out,
                "  {:>3}  {:>5} {:>5}  {:>6} {:>6}  {:>5} {:>5}  {}",
                r.n, r.c_ac, r.c_ba, r.cp_ac, r.cp_ba, r.k_ac, r.k_ba, verdict(r.holds)
            );
        }
        for (label, pr) in [("AC", &p.ac_profile), ("BA", &p.ba_profile)] {
            let _ = writeln!(
                out,
                "  {label} - lambda: asc {} dsc {} asc_e {} dsc_e {} dis {} dis_e {}; c {} c' {} k {}",
                pr.asc, pr.dsc, pr.asc_e, pr.dsc_e, pr.dis, pr.dis_e, pr.c_total, pr.cp_total, pr.k_total
            );
        }
        let _ = writeln!(
            out,
            "  totals c, c', k: {}   asc, dsc: {}",
            verdict(p.totals_hold),
            verdict(p.degrees_hold)
        );
        if !p.regularity.is_empty() {
            let mark = |b: bool| if b { "x" } else { "." };
            let idx: Vec<String> = p.regularity.iter().map(|r| format!("{:>3}", r.index)).collect();
            let ac: Vec<String> = p.regularity.iter().map(|r| format!("{:>3}", mark(r.in_ac_spectrum))).collect();
            let ba: Vec<String> = p.regularity.iter().map(|r| format!("{:>3}", mark(r.in_ba_spectrum))).collect();
            let _ = writeln!(out, "  lambda in sigma_R_i (x = member)");
            let _ = writeln!(out, "     i {}", idx.join(""));
            let _ = writeln!(out, "    AC {}", ac.join(""));
            let _ = writeln!(out, "    BA {}", ba.join(""));
            let _ = writeln!(out, "  memberships: {}", verdict(p.memberships_agree()));
        }
    }

    let cp = &report.charpoly;
    let _ = writeln!(
        out,
        "\nnonzero-root charpoly: AC {}  |  BA {}  {}",
        cp.ac_nonzero,
        cp.ba_nonzero,
        verdict(cp.holds)
    );

    if let Some(d) = &report.drazin {
        out.push('\n');
        out.push_str(&render_drazin(d));
    }

    if !report.checks.is_empty() {
        let _ = writeln!(out, "\nchecks:");
        for c in &report.checks {
            match &c.detail {
                Some(d) => {
                    let _ = writeln!(out, "  {}  {} ({d})", verdict(c.holds), c.name);
                }
                None => {
                    let _ = writeln!(out, "  {}  {}", verdict(c.holds), c.name);
                }
            }
        }
        let _ = writeln!(out, "result: {}", if report.passed() { "PASS" } else { "FAIL" });
    }
    out
}

/// Text rendering of a Drazin section.
pub fn render_drazin(d: &DrazinSection) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "Drazin inverse S of AC (index {}):", d.index);
    write_matrix(&mut out, "  ", &d.s_ac);
    let _ = writeln!(out, "T = B S^2 A:");
    write_matrix(&mut out, "  ", &d.t_ba);
    let degree = d.residual_degree.map_or("-".to_string(), |k| k.to_string());
    let _ = writeln!(out, "  T(BA) = (BA)T: {}", verdict(d.commutes));
    let _ = writeln!(out, "  T(BA)T = T: {}", verdict(d.absorbs));
    let _ = writeln!(
        out,
        "  (BA)^2 T - BA nilpotent: {} (degree {degree})",
        verdict(d.residual_nilpotent)
    );
    let _ = writeln!(out, "  T = (BA)^D computed directly: {}", verdict(d.matches_oracle));
    let pr = &d.proof;
    let _ = writeln!(out, "  ACS = SAC: {}", verdict(pr.acs_eq_sac));
    let _ = writeln!(out, "  T(BA)^2 - BA = BPA: {}", verdict(pr.residual_factorises));
    let _ = writeln!(out, "  (PA) cycle chain: {}", verdict(pr.cycle.iter().all(|&b| b)));
    let _ = writeln!(out, "  (PA)C = (AC)^2 S - AC: {}", verdict(pr.pac_formula));
    let _ = writeln!(out, "  (PA)C nilpotent of degree = index: {}", verdict(pr.pac_degree_is_index));
    out
}
