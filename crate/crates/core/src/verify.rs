//! Verification harness: brute force against closed forms, invariants,
//! claim lists and figure presets.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::analysis::{analyze, Analysis};
use crate::classify::{classify, diff_claims, Classification, DiffRecord};
use crate::closed_form::{
    family_closed_form, quotient_closed_form, ClosedFormReport, ClosedFormSource,
};
use crate::error::{Error, Result};
use crate::family::{CentralBase, FamilySpec};
use crate::figures::{check_figure, Figure, FigureMismatch};
use crate::jacobi::DEFAULT_TOL;
use crate::par;

/// Scaled tolerance for Jacobi eigenvalues against exact spectra.
pub const NUMERIC_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Quick,
    Full,
}

impl FromStr for Scope {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Scope::Quick),
            "full" => Ok(Scope::Full),
            _ => Err(Error::Parse(format!(
                "unknown scope `{s}` (expected quick or full)"
            ))),
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Scope::Quick => "quick",
            Scope::Full => "full",
        })
    }
}

/// Instances covered by a scope, in a fixed order.
pub fn instances(scope: Scope) -> Vec<FamilySpec> {
    let (d, t, sd, v, u6, un, um, heis, ext) = match scope {
        Scope::Quick => (24, 12, 8, 8, 10, 6, 6, &[3u32, 5][..], 4),
        Scope::Full => (40, 24, 16, 16, 20, 8, 9, &[3u32, 5, 7][..], 8),
    };
    let mut out = Vec::new();
    out.extend((3..=d).map(|n| FamilySpec::Dihedral { n }));
    out.extend((2..=t).map(|n| FamilySpec::Dicyclic { n }));
    out.extend((2..=sd).map(|n| FamilySpec::Semidihedral { n }));
    out.extend((2..=v).map(|n| FamilySpec::V8n { n }));
    out.extend((2..=u6).map(|n| FamilySpec::U6n { n }));
    for n in 2..=un {
        out.extend((2..=um).map(|m| FamilySpec::Unm { n, m }));
    }
    out.extend(heis.iter().map(|&p| FamilySpec::Heisenberg { p }));
    for base in [CentralBase::D8, CentralBase::Q8] {
        out.extend((1..=ext).map(|m| FamilySpec::CentralExt { base, m }));
    }
    if scope == Scope::Full {
        out.extend((1..=3).map(|m| FamilySpec::CentralExt {
            base: CentralBase::Heisenberg(3),
            m,
        }));
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Pipeline,
    Structure,
    ExactSpectrum,
    Numeric,
    ClosedForm,
    Integrality,
    Trace,
    SelfConsistency,
    RouteAgreement,
    Claims,
    Figure,
}

impl Check {
    pub fn name(self) -> &'static str {
        match self {
            Check::Pipeline => "pipeline",
            Check::Structure => "structure",
            Check::ExactSpectrum => "exact_spectrum",
            Check::Numeric => "numeric",
            Check::ClosedForm => "closed_form",
            Check::Integrality => "integrality",
            Check::Trace => "trace",
            Check::SelfConsistency => "self_consistency",
            Check::RouteAgreement => "route_agreement",
            Check::Claims => "claims",
            Check::Figure => "figure",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: Check,
    pub subject: String,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}: {}",
            self.check.name(),
            self.subject,
            self.detail
        )
    }
}

/// Outcome of every check on one instance.
#[derive(Debug, Clone)]
pub struct InstanceResult {
    pub spec: FamilySpec,
    /// `None` when the brute-force pipeline did not produce a graph.
    pub classification: Option<Classification>,
    pub closed_form: Option<ClosedFormReport>,
    pub passed: Vec<Check>,
    pub failures: Vec<Failure>,
    pub diffs: Vec<DiffRecord>,
    pub skipped: Option<String>,
}

impl InstanceResult {
    fn new(spec: FamilySpec) -> Self {
        InstanceResult {
            spec,
            classification: None,
            closed_form: None,
            passed: Vec::new(),
            failures: Vec::new(),
            diffs: Vec::new(),
            skipped: None,
        }
    }

    fn record(&mut self, check: Check, ok: bool, detail: impl FnOnce() -> String) {
        if ok {
            self.passed.push(check);
        } else {
            self.failures.push(Failure {
                check,
                subject: self.spec.to_string(),
                detail: detail(),
            });
        }
    }

    pub fn failed(&self, check: Check) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }
}

fn compare_closed_form(a: &Analysis, cf: &ClosedFormReport) -> Vec<String> {
    let r = &a.report;
    let mut bad = Vec::new();
    if cf.vertex_count != (r.vertex_count as i64).into() {
        bad.push(format!("|V| {} vs {}", r.vertex_count, cf.vertex_count));
    }
    if cf.le_cn != r.le_cn {
        bad.push(format!("LE {} vs {}", r.le_cn, cf.le_cn));
    }
    if cf.le_plus_cn != r.le_plus_cn {
        bad.push(format!("LE+ {} vs {}", r.le_plus_cn, cf.le_plus_cn));
    }
    match &cf.cnl_spec {
        Some(s) if *s == r.spectra.cnl => {}
        Some(s) => bad.push(format!("CNL spectrum {} vs {}", r.spectra.cnl, s)),
        None => bad.push("CNL spectrum missing".into()),
    }
    match &cf.cnsl_spec {
        Some(s) if *s == r.spectra.cnsl => {}
        Some(s) => bad.push(format!("CNSL spectrum {} vs {}", r.spectra.cnsl, s)),
        None => bad.push("CNSL spectrum missing".into()),
    }
    bad
}

fn routes_agree(spec: &FamilySpec) -> Option<std::result::Result<(), String>> {
    if matches!(
        spec,
        FamilySpec::Heisenberg { .. } | FamilySpec::CentralExt { .. }
    ) {
        return None;
    }
    let fam = family_closed_form(spec).ok()?;
    let quo = quotient_closed_form(spec).ok()?;
    if !fam.realizable || !quo.realizable {
        return None;
    }
    let same = fam.le_cn == quo.le_cn
        && fam.le_plus_cn == quo.le_plus_cn
        && fam.cnl_spec == quo.cnl_spec
        && fam.cnsl_spec == quo.cnsl_spec;
    Some(if same {
        Ok(())
    } else {
        Err(format!(
            "{} gives LE {} LE+ {}, {} gives LE {} LE+ {}",
            fam.source, fam.le_cn, fam.le_plus_cn, quo.source, quo.le_cn, quo.le_plus_cn
        ))
    })
}

/// Every per-instance check against `source`.
pub fn check_instance(spec: &FamilySpec, source: &dyn ClosedFormSource) -> InstanceResult {
    let mut out = InstanceResult::new(*spec);
    let a = match analyze(spec) {
        Ok(a) => a,
        Err(Error::AbelianGroup) => {
            out.skipped = Some(format!("{} is abelian", spec.group_name()));
            return out;
        }
        Err(e) => {
            out.record(Check::Pipeline, false, || e.to_string());
            return out;
        }
    };
    out.passed.push(Check::Pipeline);
    let r = &a.report;

    if let Some(ok) = a.structure_matches_prediction() {
        out.record(Check::Structure, ok, || {
            format!(
                "graph is {}, predicted {}",
                a.decomposition,
                a.predicted
                    .as_ref()
                    .map(|p| p.to_string())
                    .unwrap_or_default()
            )
        });
    }
    out.record(Check::ExactSpectrum, a.exact_verified, || {
        "clique-union spectrum fails the nullity check".into()
    });
    match a.numeric_check(DEFAULT_TOL, NUMERIC_TOL) {
        Ok(n) => out.record(Check::Numeric, n.all(), || format!("{n:?}")),
        Err(e) => out.record(Check::Numeric, false, || e.to_string()),
    }
    out.record(
        Check::Integrality,
        r.spectra.cnl.is_integral() && r.spectra.cnsl.is_integral(),
        || format!("CNL {} CNSL {}", r.spectra.cnl, r.spectra.cnsl),
    );
    let v = a.graph.vertex_count();
    let trace_ok = r.spectra.cn.weighted_sum() == a.cn.trace().into()
        && r.spectra.cnl.weighted_sum() == a.matrices.cnl.trace().into()
        && r.spectra.cnsl.weighted_sum() == a.matrices.cnsl.trace().into()
        && a.matrices.cnl.trace() == a.matrices.cnrs.trace()
        && a.matrices.cnsl.trace() == a.matrices.cnrs.trace()
        && [&r.spectra.cn, &r.spectra.cnl, &r.spectra.cnsl]
            .iter()
            .all(|s| s.dim() == v);
    out.record(Check::Trace, trace_ok, || {
        "spectrum sums or sizes disagree with traces".into()
    });

    match source.closed_form(spec) {
        Ok(cf) => {
            if cf.realizable {
                let bad = compare_closed_form(&a, &cf);
                out.record(Check::ClosedForm, bad.is_empty(), || {
                    format!("{}: {}", cf.source, bad.join("; "))
                });
            }
            if let Some(ok) = cf.self_consistent() {
                out.record(Check::SelfConsistency, ok, || {
                    format!("{}: energies disagree with its own spectra", cf.source)
                });
            }
            out.closed_form = Some(cf);
        }
        Err(e) => out.record(Check::ClosedForm, false, || e.to_string()),
    }
    if let Some(res) = routes_agree(spec) {
        out.record(Check::RouteAgreement, res.is_ok(), || {
            res.err().unwrap_or_default()
        });
    }

    let c = classify(r);
    out.diffs = diff_claims(spec, &c);
    let diffs = &out.diffs;
    let detail = diffs
        .iter()
        .map(|d| {
            format!(
                "{} {}: computed {}, claimed {}",
                d.citation, d.field, d.computed, d.claimed
            )
        })
        .collect::<Vec<_>>()
        .join("; ");
    let ok = diffs.is_empty();
    out.record(Check::Claims, ok, || detail);
    out.classification = Some(c);
    out
}

#[derive(Debug, Clone)]
pub struct FigureResult {
    pub figure: Figure,
    pub points: usize,
    pub mismatches: Vec<FigureMismatch>,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub scope: Scope,
    pub instances: Vec<InstanceResult>,
    pub figures: Vec<FigureResult>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn failures(&self) -> Vec<Failure> {
        let mut out: Vec<Failure> = self
            .instances
            .iter()
            .flat_map(|i| i.failures.iter().cloned())
            .collect();
        for f in &self.figures {
            out.extend(f.mismatches.iter().map(|m| Failure {
                check: Check::Figure,
                subject: f.figure.to_string(),
                detail: m.to_string(),
            }));
        }
        out
    }

    pub fn is_clean(&self) -> bool {
        self.failures().is_empty()
    }

    /// Passed and failed counts per check.
    pub fn tally(&self) -> BTreeMap<Check, (usize, usize)> {
        let mut t: BTreeMap<Check, (usize, usize)> = BTreeMap::new();
        for i in &self.instances {
            for c in &i.passed {
                t.entry(*c).or_default().0 += 1;
            }
            for f in &i.failures {
                t.entry(f.check).or_default().1 += 1;
            }
        }
        for f in &self.figures {
            let e = t.entry(Check::Figure).or_default();
            e.0 += f.points - f.mismatches.len();
            e.1 += f.mismatches.len();
        }
        t
    }

    pub fn render(&self) -> String {
        let mut s = format!(
            "verify {}: {} instances, {} skipped, {:.1}s\n",
            self.scope,
            self.instances.len(),
            self.instances
                .iter()
                .filter(|i| i.skipped.is_some())
                .count(),
            self.elapsed.as_secs_f64()
        );
        for (check, (pass, fail)) in self.tally() {
            s += &format!("  {:<17} {pass:>5} passed {fail:>4} failed\n", check.name());
        }
        let failures = self.failures();
        for f in &failures {
            s += &format!("FAIL {f}\n");
        }
        s += if failures.is_empty() {
            "clean\n"
        } else {
            "not clean\n"
        };
        s
    }
}

pub fn verify(scope: Scope, source: &dyn ClosedFormSource) -> VerifyReport {
    let start = Instant::now();
    let instances = par::map(&instances(scope), |s| check_instance(s, source));
    let figures = par::map(&Figure::ALL, |&f| {
        let (points, mismatches) = check_figure(f, &f.rows());
        FigureResult {
            figure: f,
            points,
            mismatches,
        }
    });
    VerifyReport {
        scope,
        instances,
        figures,
        elapsed: start.elapsed(),
    }
}
