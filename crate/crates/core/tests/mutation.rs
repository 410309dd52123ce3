//! The harness must notice a single altered formula branch and name it.

use ccc_spectra::closed_form::{ClosedFormReport, ClosedFormSource, Formulas};
use ccc_spectra::family::FamilySpec;
use ccc_spectra::rational::Rational;
use ccc_spectra::verify::{verify, Check, Scope};
use ccc_spectra::Result;

/// Adds one to `LE_CN` on every report whose source tag starts with `branch`.
struct OffByOne {
    branch: &'static str,
}

impl ClosedFormSource for OffByOne {
    fn closed_form(&self, spec: &FamilySpec) -> Result<ClosedFormReport> {
        let mut r = Formulas.closed_form(spec)?;
        if r.source.starts_with(self.branch) {
            r.le_cn += Rational::from_int(1);
        }
        Ok(r)
    }
}

fn mutated_failures(branch: &'static str) -> Vec<String> {
    let report = verify(Scope::Quick, &OffByOne { branch });
    assert!(!report.is_clean());
    report
        .failures()
        .into_iter()
        .filter(|f| f.check == Check::ClosedForm)
        .map(|f| f.detail)
        .collect()
}

#[test]
fn family_branch_mutation_is_named() {
    let bad = mutated_failures("dicyclic[le_plus:general]");
    assert_eq!(bad.len(), 10);
    assert!(bad
        .iter()
        .all(|d| d.starts_with("dicyclic[le_plus:general]: LE")));
}

#[test]
fn quotient_branch_mutation_is_named() {
    let bad = mutated_failures("zpzp-quotient[general]");
    assert!(!bad.is_empty());
    assert!(bad.iter().all(|d| d.starts_with("zpzp-quotient[general]")));
}

#[test]
fn unmutated_source_only_reports_known_claim_diff() {
    let report = verify(Scope::Quick, &Formulas);
    let fails = report.failures();
    assert_eq!(fails.len(), 1, "{fails:?}");
    assert_eq!(fails[0].check, Check::Claims);
    assert_eq!(fails[0].subject, "v8n:n=4");
}
