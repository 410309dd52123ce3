//! Integrality, hyper/border-energetic status and energy ordering, and a
//! diff of computed classifications against the published claims.

use serde::Serialize;

use crate::analysis::analyze;
use crate::family::FamilySpec;
use crate::par;
use crate::rational::Rational;
use crate::spectra::EnergyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Below,
    Border,
    Hyper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Ordering {
    AllEqual,
    /// `E_CN < LE+_CN < LE_CN`.
    StrictChain,
    Other,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Below => "below",
            Status::Border => "border",
            Status::Hyper => "hyper",
        })
    }
}

impl std::fmt::Display for Ordering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Ordering::AllEqual => "all_equal",
            Ordering::StrictChain => "strict_chain",
            Ordering::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub cnl_integral: bool,
    pub cnsl_integral: bool,
    pub cnl_status: Status,
    pub cnsl_status: Status,
    pub ordering: Ordering,
    pub benchmark: Rational,
}

/// `LE_CN(K_n) = LE+_CN(K_n) = 2(n-1)(n-2)`.
pub fn benchmark(vertex_count: usize) -> Rational {
    let n = vertex_count as i64;
    Rational::from_int(2 * (n - 1) * (n - 2))
}

fn status(energy: &Rational, bench: &Rational) -> Status {
    match energy.cmp(bench) {
        std::cmp::Ordering::Less => Status::Below,
        std::cmp::Ordering::Equal => Status::Border,
        std::cmp::Ordering::Greater => Status::Hyper,
    }
}

pub fn classify(report: &EnergyReport) -> Classification {
    let bench = benchmark(report.vertex_count);
    let (e, lp, l) = (&report.e_cn, &report.le_plus_cn, &report.le_cn);
    let ordering = if e == lp && lp == l {
        Ordering::AllEqual
    } else if e < lp && lp < l {
        Ordering::StrictChain
    } else {
        Ordering::Other
    };
    Classification {
        cnl_integral: report.spectra.cnl.is_integral(),
        cnsl_integral: report.spectra.cnsl.is_integral(),
        cnl_status: status(l, &bench),
        cnsl_status: status(lp, &bench),
        ordering,
        benchmark: bench,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Field {
    CnlBorder,
    CnlHyper,
    CnslBorder,
    CnslHyper,
    /// `AllEqual` when the predicate holds, `StrictChain` otherwise.
    Ordering,
}

impl Field {
    fn name(&self) -> &'static str {
        match self {
            Field::CnlBorder => "cnl_border",
            Field::CnlHyper => "cnl_hyper",
            Field::CnslBorder => "cnsl_border",
            Field::CnslHyper => "cnsl_hyper",
            Field::Ordering => "ordering",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Semantics {
    /// The predicate holds exactly when the property does.
    Iff,
    /// The predicate implies the property.
    Sufficient,
}

pub struct Claim {
    pub citation: &'static str,
    pub field: Field,
    pub semantics: Semantics,
    pub applies: fn(&FamilySpec) -> bool,
    pub predicate: fn(&FamilySpec) -> bool,
}

fn is_dihedral(s: &FamilySpec) -> bool {
    matches!(s, FamilySpec::Dihedral { .. })
}
fn is_dicyclic(s: &FamilySpec) -> bool {
    matches!(s, FamilySpec::Dicyclic { .. })
}
fn is_semidihedral(s: &FamilySpec) -> bool {
    matches!(s, FamilySpec::Semidihedral { .. })
}
fn is_u6n(s: &FamilySpec) -> bool {
    matches!(s, FamilySpec::U6n { .. })
}
fn is_unm(s: &FamilySpec) -> bool {
    matches!(s, FamilySpec::Unm { m, .. } if *m >= 3)
}
fn is_v8n(s: &FamilySpec) -> bool {
    matches!(s, FamilySpec::V8n { .. })
}
fn is_zpzp_quotient(s: &FamilySpec) -> bool {
    matches!(
        s,
        FamilySpec::Heisenberg { .. } | FamilySpec::CentralExt { .. }
    )
}
fn is_named(s: &FamilySpec) -> bool {
    !is_zpzp_quotient(s) && !matches!(s, FamilySpec::Unm { m: 2, .. })
}
fn never(_: &FamilySpec) -> bool {
    false
}
fn always(_: &FamilySpec) -> bool {
    true
}
fn n_of(s: &FamilySpec) -> u32 {
    match *s {
        FamilySpec::Dihedral { n }
        | FamilySpec::Dicyclic { n }
        | FamilySpec::Semidihedral { n }
        | FamilySpec::U6n { n }
        | FamilySpec::Unm { n, .. }
        | FamilySpec::V8n { n } => n,
        FamilySpec::Heisenberg { p } => p,
        FamilySpec::CentralExt { m, .. } => m,
    }
}

fn unm_cnl_hyper(s: &FamilySpec) -> bool {
    let FamilySpec::Unm { n, m } = *s else {
        return false;
    };
    !(m == 3 || m == 4 || m == 6 || (m == 5 && (n == 2 || n == 3)) || (m == 8 && n == 2))
}

fn unm_cnsl_hyper(s: &FamilySpec) -> bool {
    let FamilySpec::Unm { n, m } = *s else {
        return false;
    };
    !(m == 3
        || m == 4
        || m == 6
        || ((m == 5 || m == 7 || m == 9) && n == 2)
        || (m == 5 && (n == 3 || n == 4))
        || (m == 8 && n == 2)
        || (m == 10 && n == 2))
}

/// Energies coincide exactly for these; `SD_24` stands for the listed
/// `SD_28`, which is not a member of the family.
fn all_equal_listed(s: &FamilySpec) -> bool {
    match *s {
        FamilySpec::Dihedral { n } => (3..=6).contains(&n),
        FamilySpec::Dicyclic { n } => n == 2 || n == 3,
        FamilySpec::Semidihedral { n } => n == 3,
        FamilySpec::V8n { n } => n == 2,
        FamilySpec::U6n { .. } => true,
        FamilySpec::Unm { m, .. } => m == 3 || m == 4 || m == 6,
        _ => false,
    }
}

pub static CLAIMS: &[Claim] = &[
    Claim {
        citation: "dihedral.cnl-border",
        field: Field::CnlBorder,
        semantics: Semantics::Iff,
        applies: is_dihedral,
        predicate: |s| matches!(n_of(s), 3 | 11),
    },
    Claim {
        citation: "dihedral.cnl-hyper",
        field: Field::CnlHyper,
        semantics: Semantics::Iff,
        applies: is_dihedral,
        predicate: |s| n_of(s) >= 13,
    },
    Claim {
        citation: "dihedral.cnsl-border",
        field: Field::CnslBorder,
        semantics: Semantics::Iff,
        applies: is_dihedral,
        predicate: |s| n_of(s) == 3,
    },
    Claim {
        citation: "dihedral.cnsl-hyper",
        field: Field::CnslHyper,
        semantics: Semantics::Iff,
        applies: is_dihedral,
        predicate: |s| n_of(s).is_multiple_of(2) && n_of(s) >= 20,
    },
    Claim {
        citation: "dicyclic.cnl-border",
        field: Field::CnlBorder,
        semantics: Semantics::Iff,
        applies: is_dicyclic,
        predicate: never,
    },
    Claim {
        citation: "dicyclic.cnl-hyper",
        field: Field::CnlHyper,
        semantics: Semantics::Iff,
        applies: is_dicyclic,
        predicate: |s| n_of(s) >= 7,
    },
    Claim {
        citation: "dicyclic.cnsl-border",
        field: Field::CnslBorder,
        semantics: Semantics::Iff,
        applies: is_dicyclic,
        predicate: never,
    },
    Claim {
        citation: "dicyclic.cnsl-hyper",
        field: Field::CnslHyper,
        semantics: Semantics::Iff,
        applies: is_dicyclic,
        predicate: |s| n_of(s) >= 10,
    },
    Claim {
        citation: "semidihedral.cnl-border",
        field: Field::CnlBorder,
        semantics: Semantics::Iff,
        applies: is_semidihedral,
        predicate: never,
    },
    Claim {
        citation: "semidihedral.cnl-hyper",
        field: Field::CnlHyper,
        semantics: Semantics::Iff,
        applies: is_semidihedral,
        predicate: |s| n_of(s) >= 4,
    },
    Claim {
        citation: "semidihedral.cnsl-border",
        field: Field::CnslBorder,
        semantics: Semantics::Iff,
        applies: is_semidihedral,
        predicate: never,
    },
    Claim {
        citation: "semidihedral.cnsl-hyper",
        field: Field::CnslHyper,
        semantics: Semantics::Iff,
        applies: is_semidihedral,
        predicate: |s| n_of(s) >= 6,
    },
    Claim {
        citation: "unm.cnl-border",
        field: Field::CnlBorder,
        semantics: Semantics::Iff,
        applies: is_unm,
        predicate: never,
    },
    Claim {
        citation: "unm.cnl-hyper",
        field: Field::CnlHyper,
        semantics: Semantics::Iff,
        applies: is_unm,
        predicate: unm_cnl_hyper,
    },
    Claim {
        citation: "unm.cnsl-border",
        field: Field::CnslBorder,
        semantics: Semantics::Iff,
        applies: is_unm,
        predicate: never,
    },
    Claim {
        citation: "unm.cnsl-hyper",
        field: Field::CnslHyper,
        semantics: Semantics::Iff,
        applies: is_unm,
        predicate: unm_cnsl_hyper,
    },
    Claim {
        citation: "u6n.cnl-hyper",
        field: Field::CnlHyper,
        semantics: Semantics::Iff,
        applies: is_u6n,
        predicate: never,
    },
    Claim {
        citation: "u6n.cnsl-hyper",
        field: Field::CnslHyper,
        semantics: Semantics::Iff,
        applies: is_u6n,
        predicate: never,
    },
    Claim {
        citation: "v8n.cnl-hyper",
        field: Field::CnlHyper,
        semantics: Semantics::Sufficient,
        applies: is_v8n,
        predicate: |s| n_of(s) >= 6,
    },
    Claim {
        citation: "v8n.cnsl-hyper",
        field: Field::CnslHyper,
        semantics: Semantics::Sufficient,
        applies: is_v8n,
        predicate: |s| n_of(s) >= 4,
    },
    Claim {
        citation: "named-families.ordering",
        field: Field::Ordering,
        semantics: Semantics::Iff,
        applies: is_named,
        predicate: all_equal_listed,
    },
    Claim {
        citation: "zpzp-quotient.cnl-hyper",
        field: Field::CnlHyper,
        semantics: Semantics::Iff,
        applies: is_zpzp_quotient,
        predicate: never,
    },
    Claim {
        citation: "zpzp-quotient.cnsl-hyper",
        field: Field::CnslHyper,
        semantics: Semantics::Iff,
        applies: is_zpzp_quotient,
        predicate: never,
    },
    Claim {
        citation: "zpzp-quotient.ordering",
        field: Field::Ordering,
        semantics: Semantics::Iff,
        applies: is_zpzp_quotient,
        predicate: always,
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiffRecord {
    pub family: String,
    pub params: String,
    pub field: String,
    pub computed: String,
    pub claimed: String,
    pub citation: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct IffReport {
    pub checked: usize,
    pub diffs: Vec<DiffRecord>,
    /// Instances without a graph (abelian) or that failed to build.
    pub skipped: Vec<(String, String)>,
}

impl IffReport {
    pub fn is_clean(&self) -> bool {
        self.diffs.is_empty()
    }
}

/// Diffs one classified instance against every applicable claim.
pub fn diff_claims(spec: &FamilySpec, c: &Classification) -> Vec<DiffRecord> {
    let mut out = Vec::new();
    for claim in CLAIMS.iter().filter(|cl| (cl.applies)(spec)) {
        let holds = (claim.predicate)(spec);
        let (computed, claimed, mismatch) = match claim.field {
            Field::Ordering => {
                let want = if holds {
                    Ordering::AllEqual
                } else {
                    Ordering::StrictChain
                };
                (c.ordering.to_string(), want.to_string(), c.ordering != want)
            }
            field => {
                let (status, target) = match field {
                    Field::CnlBorder => (c.cnl_status, Status::Border),
                    Field::CnlHyper => (c.cnl_status, Status::Hyper),
                    Field::CnslBorder => (c.cnsl_status, Status::Border),
                    _ => (c.cnsl_status, Status::Hyper),
                };
                let actual = status == target;
                let mismatch = match claim.semantics {
                    Semantics::Iff => actual != holds,
                    Semantics::Sufficient => holds && !actual,
                };
                let claimed = match (claim.semantics, holds) {
                    (_, true) => "true".to_string(),
                    (Semantics::Iff, false) => "false".to_string(),
                    (Semantics::Sufficient, false) => "unspecified".to_string(),
                };
                (actual.to_string(), claimed, mismatch)
            }
        };
        if mismatch {
            out.push(DiffRecord {
                family: spec.group_name(),
                params: spec.params_compact(),
                field: claim.field.name().to_string(),
                computed,
                claimed: claimed,
                citation: claim.citation.to_string(),
            });
        }
    }
    out
}

/// Classifies every instance by brute force and diffs against [`CLAIMS`].
/// Results are merged in input order.
pub fn check_iff_lists(specs: &[FamilySpec]) -> IffReport {
    let rows = par::map(specs, |spec| {
        analyze(spec).map(|a| diff_claims(spec, &classify(&a.report)))
    });
    let mut report = IffReport::default();
    for (spec, row) in specs.iter().zip(rows) {
        match row {
            Ok(diffs) => {
                report.checked += 1;
                report.diffs.extend(diffs);
            }
            Err(e) => {
                report.skipped.push((spec.to_string(), e.to_string()));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{CccGraph, CliqueDecomposition};
    use crate::matrix::cn_matrix;
    use crate::spectra::{clique_union_spectra, energies};

    fn specs(kind: &str, range: std::ops::RangeInclusive<u32>) -> Vec<FamilySpec> {
        range
            .map(|n| format!("{kind}:n={n}").parse().unwrap())
            .collect()
    }

    #[test]
    fn k4_is_border() {
        let d = CliqueDecomposition::new([(4, 1)]);
        let cn = cn_matrix(&CccGraph::clique_union(&d.parts));
        let r = energies(clique_union_spectra(&d), cn.entry_sum(), 4).unwrap();
        let c = classify(&r);
        assert_eq!(
            (c.cnl_status, c.cnsl_status),
            (Status::Border, Status::Border)
        );
        assert_eq!(c.benchmark, Rational::from_int(12));
    }

    #[test]
    fn d22_border() {
        let a = analyze(&"dihedral:n=11".parse().unwrap()).unwrap();
        let c = classify(&a.report);
        assert_eq!(a.report.le_cn, Rational::from_int(40));
        assert_eq!(c.cnl_status, Status::Border);
    }

    #[test]
    fn dihedral_lists() {
        let r = check_iff_lists(&specs("dihedral", 3..=24));
        assert_eq!(r.checked, 22);
        assert!(r.is_clean(), "{:?}", r.diffs);
    }

    #[test]
    fn dicyclic_and_u6n_lists() {
        assert!(check_iff_lists(&specs("dicyclic", 2..=12)).is_clean());
        assert!(check_iff_lists(&specs("u6n", 2..=10)).is_clean());
    }

    #[test]
    fn abelian_instances_are_skipped() {
        let r = check_iff_lists(&["unm:n=2,m=2".parse().unwrap()]);
        assert_eq!(r.checked, 0);
        assert_eq!(r.skipped.len(), 1);
    }

    #[test]
    fn sufficient_claims_only_fire_one_way() {
        let c = Classification {
            cnl_integral: true,
            cnsl_integral: true,
            cnl_status: Status::Hyper,
            cnsl_status: Status::Hyper,
            ordering: Ordering::StrictChain,
            benchmark: Rational::zero(),
        };
        // hyper below the threshold is not a contradiction
        let d = diff_claims(&"v8n:n=3".parse().unwrap(), &c);
        assert!(d.is_empty(), "{d:?}");
        let below = Classification {
            cnsl_status: Status::Below,
            ..c
        };
        let d = diff_claims(&"v8n:n=6".parse().unwrap(), &below);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].citation, "v8n.cnsl-hyper");
    }
}
