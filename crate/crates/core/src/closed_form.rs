//! Closed-form CNL / CNSL spectra and energies as exact rational functions
//! of the group parameters.
//!
//! Two routes exist: by central quotient ([`zpzp_closed_form`],
//! [`d2n_quotient_closed_form`]) and by family ([`family_closed_form`]).
//! Branches are chosen first-match-wins in the order they are listed, and
//! the chosen branch names are recorded in [`ClosedFormReport::source`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{is_prime, CentralBase, FamilySpec};
use crate::rational::Rational;
use crate::spectra::SpectrumMultiset;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedFormReport {
    pub source: String,
    pub params: Vec<(String, i64)>,
    /// May be fractional for non-realizable parameters.
    pub vertex_count: Rational,
    /// `None` when some multiplicity is negative or fractional.
    pub cnl_spec: Option<SpectrumMultiset>,
    pub cnsl_spec: Option<SpectrumMultiset>,
    pub le_cn: Rational,
    pub le_plus_cn: Rational,
    pub realizable: bool,
}

impl ClosedFormReport {
    /// `tr(CNL) / |V|`, when the spectrum is available.
    pub fn delta(&self) -> Option<Rational> {
        let s = self.cnl_spec.as_ref()?;
        if self.vertex_count.is_zero() {
            return None;
        }
        Some(&s.weighted_sum() / &self.vertex_count)
    }

    /// Recomputes both energies from the report's own spectra and checks
    /// them against the stated values.
    pub fn self_consistent(&self) -> Option<bool> {
        let delta = self.delta()?;
        let cnl = self.cnl_spec.as_ref()?;
        let cnsl = self.cnsl_spec.as_ref()?;
        let dims = Rational::from_int(cnl.dim() as i64) == self.vertex_count
            && Rational::from_int(cnsl.dim() as i64) == self.vertex_count;
        Some(
            dims && cnsl.weighted_sum() == cnl.weighted_sum()
                && cnl.deviation(&delta) == self.le_cn
                && cnsl.deviation(&delta) == self.le_plus_cn,
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        let params: serde_json::Map<String, serde_json::Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), (*v).into()))
            .collect();
        serde_json::json!({
            "source": self.source,
            "params": params,
            "realizable": self.realizable,
            "vertex_count": self.vertex_count,
            "delta": self.delta(),
            "le_cn": self.le_cn,
            "le_cn_f": self.le_cn.to_f64(),
            "le_plus_cn": self.le_plus_cn,
            "le_plus_cn_f": self.le_plus_cn.to_f64(),
            "cnl_spec": self.cnl_spec,
            "cnsl_spec": self.cnsl_spec,
        })
    }
}

fn q(num: i128, den: i128) -> Rational {
    Rational::ratio(num, den)
}

fn int(n: i128) -> Rational {
    Rational::ratio(n, 1)
}

/// Builds a spectrum if every multiplicity is a non-negative integer.
fn spectrum(entries: Vec<(Rational, Rational)>) -> Option<SpectrumMultiset> {
    let mut out = Vec::with_capacity(entries.len());
    for (value, mult) in entries {
        if mult.is_negative() || !mult.is_integer() {
            return None;
        }
        out.push((value, mult.to_i64()? as usize));
    }
    Some(SpectrumMultiset::new(out))
}

fn ints(entries: &[(i128, i128)]) -> Option<SpectrumMultiset> {
    spectrum(entries.iter().map(|&(v, m)| (int(v), int(m))).collect())
}

fn params(pairs: &[(&str, u32)]) -> Vec<(String, i64)> {
    pairs
        .iter()
        .map(|&(k, v)| (k.to_string(), v as i64))
        .collect()
}

/// `G/Z(G) = Z_p x Z_p`, `|Z(G)| = z`.
pub fn zpzp_closed_form(p: u32, z: u32) -> Result<ClosedFormReport> {
    if !is_prime(p) || z < 2 {
        return Err(Error::InvalidParameters(format!(
            "need p prime and z >= 2, got p={p}, z={z}"
        )));
    }
    let (pi, zi) = (p as i128, z as i128);
    let a = pi * zi - zi;
    let mult = q((pi + 1) * (a - pi), pi);
    let cnl_spec = spectrum(vec![
        (int(0), int(pi + 1)),
        (q(a * (a - 2 * pi), pi * pi), mult.clone()),
    ]);
    let cnsl_spec = spectrum(vec![
        (q(2 * (a - pi) * (a - 2 * pi), pi * pi), int(pi + 1)),
        (q((a - 2 * pi) * (a - 2 * pi), pi * pi), mult),
    ]);
    let (branch, le) = if p == 2 && z == 3 {
        ("p2-z3", q(3, 2))
    } else if z == 2 {
        ("z2", q(4 * (pi - 2) * (pi + 1), pi * pi))
    } else {
        (
            "general",
            q(
                2 * (pi + 1) * (pi * (zi - 2) - zi) * (pi * (zi - 1) - zi),
                pi * pi,
            ),
        )
    };
    Ok(ClosedFormReport {
        source: format!("zpzp-quotient[{branch}]"),
        params: params(&[("p", p), ("z", z)]),
        vertex_count: q((pi * pi - 1) * zi, pi),
        cnl_spec,
        cnsl_spec,
        le_cn: le.clone(),
        le_plus_cn: le,
        realizable: z.is_multiple_of(p),
    })
}

/// `G/Z(G) = D_2n`, `|Z(G)| = z`.
pub fn d2n_quotient_closed_form(n: u32, z: u32) -> Result<ClosedFormReport> {
    if n < 3 || z < 1 || (n.is_multiple_of(2) && z < 2) {
        return Err(Error::InvalidParameters(format!(
            "need n >= 3, z >= 1 and z >= 2 for even n; got n={n}, z={z}"
        )));
    }
    let (ni, zi) = (n as i128, z as i128);
    let a = ni * zi - zi;
    let big_cnl = (q(a * (a - 4), 4), q(a - 2, 2));
    let big_cnsl = [
        (q((a - 2) * (a - 4), 2), int(1)),
        (q((a - 4) * (a - 4), 4), q(a - 2, 2)),
    ];
    let report = if n.is_multiple_of(2) {
        let cnl_spec = spectrum(vec![
            (int(0), int(3)),
            big_cnl,
            (q(zi * (zi - 4), 4), int(zi - 2)),
        ]);
        let mut cnsl = big_cnsl.to_vec();
        cnsl.push((q((zi - 2) * (zi - 4), 2), int(2)));
        cnsl.push((q((zi - 4) * (zi - 4), 4), int(zi - 2)));
        let le = q(
            (a - 2) * (ni * (zi + 1) * ((ni - 2) * zi - 4) + 11 * zi - 4),
            2 * (ni + 1),
        );
        let (br, le_plus) = if n == 4 && z == 2 {
            ("n4-z2", q(28, 5))
        } else if n == 4 {
            ("n4", q(3 * zi * zi * (4 * zi - 6), 5))
        } else {
            (
                "general",
                q((ni - 2) * (ni - 1) * zi * zi * (ni * zi - 6), 2 * (ni + 1)),
            )
        };
        ClosedFormReport {
            source: format!("d2n-quotient.even[le:general,le_plus:{br}]"),
            params: params(&[("n", n), ("z", z)]),
            vertex_count: q((ni + 1) * zi, 2),
            cnl_spec,
            cnsl_spec: spectrum(cnsl),
            le_cn: le,
            le_plus_cn: le_plus,
            realizable: z.is_multiple_of(2),
        }
    } else {
        let cnl_spec = spectrum(vec![
            (int(0), int(2)),
            big_cnl,
            (int(zi * (zi - 2)), int(zi - 1)),
        ]);
        let mut cnsl = big_cnsl.to_vec();
        cnsl.push((int(2 * (zi - 1) * (zi - 2)), int(1)));
        cnsl.push((int((zi - 2) * (zi - 2)), int(zi - 1)));
        let (br_le, le) = if n == 3 && z == 1 {
            ("n3-z1", int(0))
        } else if n == 3 {
            ("n3", int(4 * (zi - 1) * (zi - 2)))
        } else {
            (
                "general",
                q(
                    (a - 2)
                        * ((ni - 3) * (ni + 1) * zi * zi + ((ni - 6) * ni + 17) * zi
                            - 4 * (ni + 1)),
                    2 * (ni + 1),
                ),
            )
        };
        let (br_plus, le_plus) = if (n == 3 || n == 5) && z == 1 {
            ("n3-or-n5-z1", int(0))
        } else if n == 3 {
            ("n3", int(4 * (zi - 1) * (zi - 2)))
        } else if n >= 7 && z == 1 {
            ("z1", q((ni - 5) * (ni - 3) * (ni + 3), 2 * (ni + 1)))
        } else {
            (
                "general",
                q(
                    (ni - 3) * (ni - 1) * zi * zi * (ni * zi + zi - 6),
                    2 * (ni + 1),
                ),
            )
        };
        ClosedFormReport {
            source: format!("d2n-quotient.odd[le:{br_le},le_plus:{br_plus}]"),
            params: params(&[("n", n), ("z", z)]),
            vertex_count: q((ni + 1) * zi, 2),
            cnl_spec,
            cnsl_spec: spectrum(cnsl),
            le_cn: le,
            le_plus_cn: le_plus,
            realizable: true,
        }
    };
    Ok(report)
}

struct Family {
    tag: String,
    vertex_count: i128,
    cnl: Option<SpectrumMultiset>,
    cnsl: Option<SpectrumMultiset>,
    le: Rational,
    le_plus: Rational,
}

/// Family-level formulas, evaluated directly from the family parameters.
pub fn family_closed_form(spec: &FamilySpec) -> Result<ClosedFormReport> {
    spec.validate()?;
    let f = match *spec {
        FamilySpec::Dihedral { n } => dihedral(n as i128),
        FamilySpec::Dicyclic { n } => dicyclic(n as i128),
        FamilySpec::U6n { n } => u6n(n as i128),
        FamilySpec::Unm { n, m } => unm(n as i128, m as i128),
        FamilySpec::Semidihedral { n } => semidihedral(n as i128),
        FamilySpec::V8n { n } => v8n(n as i128),
        FamilySpec::Heisenberg { .. } | FamilySpec::CentralExt { .. } => {
            return Err(Error::UnsupportedFamily(spec.group_name()))
        }
    };
    let realizable = !matches!(spec, FamilySpec::Unm { m: 2, .. });
    Ok(ClosedFormReport {
        source: f.tag,
        params: spec
            .params()
            .into_iter()
            .filter_map(|(k, v)| v.parse().ok().map(|v| (k.to_string(), v)))
            .collect(),
        vertex_count: int(f.vertex_count),
        cnl_spec: f.cnl,
        cnsl_spec: f.cnsl,
        le_cn: f.le,
        le_plus_cn: f.le_plus,
        realizable,
    })
}

fn dihedral(n: i128) -> Family {
    if n % 2 == 1 {
        Family {
            tag: "dihedral.odd".into(),
            vertex_count: (n + 1) / 2,
            cnl: spectrum(vec![
                (int(0), int(2)),
                (q((n - 1) * (n - 5), 4), q(n - 3, 2)),
            ]),
            cnsl: spectrum(vec![
                (int(0), int(1)),
                (q((n - 3) * (n - 5), 2), int(1)),
                (q((n - 5) * (n - 5), 4), q(n - 3, 2)),
            ]),
            le: q((n - 5) * (n - 3) * (n - 1), n + 1),
            le_plus: q((n - 5) * (n - 3) * (n + 3), 2 * (n + 1)),
        }
    } else {
        let (br, le_plus) = if n == 8 {
            ("n8", q(28, 5))
        } else {
            ("general", q((n - 6) * (n - 4) * (n - 2), n + 2))
        };
        Family {
            tag: format!("dihedral.even[le_plus:{br}]"),
            vertex_count: (n + 2) / 2,
            cnl: spectrum(vec![
                (int(0), int(3)),
                (q((n - 2) * (n - 6), 4), q(n - 4, 2)),
            ]),
            cnsl: spectrum(vec![
                (int(0), int(2)),
                (q((n - 4) * (n - 6), 2), int(1)),
                (q((n - 6) * (n - 6), 4), q(n - 4, 2)),
            ]),
            le: q(3 * (n - 6) * (n - 4) * (n - 2), 2 * (n + 2)),
            le_plus,
        }
    }
}

fn dicyclic(n: i128) -> Family {
    let (br, le_plus) = if n == 4 {
        ("n4", q(28, 5))
    } else {
        ("general", q(4 * (n - 3) * (n - 2) * (n - 1), n + 1))
    };
    Family {
        tag: format!("dicyclic[le_plus:{br}]"),
        vertex_count: n + 1,
        cnl: ints(&[(0, 3), ((n - 1) * (n - 3), n - 2)]),
        cnsl: ints(&[
            (0, 2),
            (2 * (n - 2) * (n - 3), 1),
            ((n - 3) * (n - 3), n - 2),
        ]),
        le: q(6 * (n - 3) * (n - 2) * (n - 1), n + 1),
        le_plus,
    }
}

fn u6n(n: i128) -> Family {
    Family {
        tag: "u6n".into(),
        vertex_count: 2 * n,
        cnl: ints(&[(0, 2), (n * (n - 2), 2 * (n - 1))]),
        cnsl: ints(&[(2 * (n - 1) * (n - 2), 2), ((n - 2) * (n - 2), 2 * (n - 1))]),
        le: int(4 * (n - 2) * (n - 1)),
        le_plus: int(4 * (n - 2) * (n - 1)),
    }
}

fn unm(n: i128, m: i128) -> Family {
    if m % 2 == 0 {
        let a = n * m - 2 * n;
        let big_cnl = (q(a * (a - 4), 4), q(a - 2, 2));
        let big_cnsl = [
            (q((a - 2) * (a - 4), 2), int(1)),
            (q((a - 4) * (a - 4), 4), q(a - 2, 2)),
        ];
        // m/2 odd: the quotient D_m has odd degree and the small part is a
        // single K_2n rather than 2K_n
        let (cnl, cnsl) = if m % 4 == 2 && m > 2 {
            let mut cnsl = big_cnsl.to_vec();
            cnsl.push((int(2 * (2 * n - 1) * (2 * n - 2)), int(1)));
            cnsl.push((int((2 * n - 2) * (2 * n - 2)), int(2 * n - 1)));
            (
                spectrum(vec![
                    (int(0), int(2)),
                    (int(2 * n * (2 * n - 2)), int(2 * n - 1)),
                    big_cnl,
                ]),
                spectrum(cnsl),
            )
        } else {
            let mut cnsl = vec![
                (int(2 * (n - 1) * (n - 2)), int(2)),
                (int((n - 2) * (n - 2)), int(2 * (n - 1))),
            ];
            cnsl.extend(big_cnsl);
            (
                spectrum(vec![
                    (int(0), int(3)),
                    (int(n * (n - 2)), int(2 * (n - 1))),
                    big_cnl,
                ]),
                spectrum(cnsl),
            )
        };
        let (br_le, le) = match m {
            2 => ("m2", int(4 * (n - 1) * (2 * n - 1))),
            4 => ("m4", int(6 * (n - 2) * (n - 1))),
            6 => ("m6", int(8 * (n - 1) * (2 * n - 1))),
            _ => (
                "general",
                q(
                    ((m - 2) * n - 2) * (m * (2 * n + 1) * ((m - 4) * n - 4) + 44 * n - 8),
                    2 * (m + 2),
                ),
            ),
        };
        let (br_plus, le_plus) = match m {
            2 => ("m2", int(4 * (n - 1) * (2 * n - 1))),
            4 => ("m4", int(6 * (n - 2) * (n - 1))),
            6 => ("m6", int(8 * n * (2 * n - 3) + 8)),
            8 => ("m8", q(24 * n * n * (4 * n - 3), 5)),
            _ => ("general", q((m - 4) * (m - 2) * n * n * (m * n - 6), m + 2)),
        };
        Family {
            tag: format!("unm.even[le:{br_le},le_plus:{br_plus}]"),
            vertex_count: (m + 2) * n / 2,
            cnl,
            cnsl,
            le,
            le_plus,
        }
    } else {
        let a = n * m - n;
        let cnl = spectrum(vec![
            (int(0), int(2)),
            (int(n * (n - 2)), int(n - 1)),
            (q(a * (a - 4), 4), q(a - 2, 2)),
        ]);
        let cnsl = spectrum(vec![
            (int(2 * (n - 1) * (n - 2)), int(1)),
            (int((n - 2) * (n - 2)), int(n - 1)),
            (q((a - 2) * (a - 4), 2), int(1)),
            (q((a - 4) * (a - 4), 4), q(a - 2, 2)),
        ]);
        let (br_le, le) = if m == 3 {
            ("m3", int(4 * (n - 1) * (n - 2)))
        } else {
            (
                "general",
                q(
                    ((m - 1) * n - 2)
                        * ((m - 3) * (m + 1) * n * n + ((m - 6) * m + 17) * n - 4 * (m + 1)),
                    2 * (m + 1),
                ),
            )
        };
        let (br_plus, le_plus) = if m == 3 {
            ("m3", int(4 * (n - 1) * (n - 2)))
        } else {
            (
                "general",
                q((m - 3) * (m - 1) * n * n * (m * n + n - 6), 2 * (m + 1)),
            )
        };
        Family {
            tag: format!("unm.odd[le:{br_le},le_plus:{br_plus}]"),
            vertex_count: (m + 1) * n / 2,
            cnl,
            cnsl,
            le,
            le_plus,
        }
    }
}

/// Shared by `SD_8n` with `n` even and `V_8n` with `n` odd:
/// the graph is `K_{2n-1} u 2K_1`.
fn k2n1_two_isolated(n: i128) -> (Option<SpectrumMultiset>, Option<SpectrumMultiset>, Rational) {
    (
        ints(&[(0, 3), ((2 * n - 1) * (2 * n - 3), 2 * n - 2)]),
        ints(&[
            (0, 2),
            (2 * (2 * n - 2) * (2 * n - 3), 1),
            ((2 * n - 3) * (2 * n - 3), 2 * n - 2),
        ]),
        q(12 * (n - 1) * (4 * (n - 2) * n + 3), 2 * n + 1),
    )
}

fn semidihedral(n: i128) -> Family {
    if n % 2 == 0 {
        let (cnl, cnsl, le) = k2n1_two_isolated(n);
        let (br, le_plus) = if n == 2 {
            ("n2", q(28, 5))
        } else {
            (
                "general",
                q(8 * (n - 1) * (2 * n - 3) * (2 * n - 1), 2 * n + 1),
            )
        };
        Family {
            tag: format!("semidihedral.even[le_plus:{br}]"),
            vertex_count: 2 * n + 1,
            cnl,
            cnsl,
            le,
            le_plus,
        }
    } else {
        let (br, le, le_plus) = if n == 3 {
            ("n3", int(24), int(24))
        } else {
            (
                "general",
                q(4 * (2 * n - 3) * (5 * (n - 3) * n + 4), n + 1),
                q(16 * (n - 3) * (n - 1) * (2 * n - 1), n + 1),
            )
        };
        Family {
            tag: format!("semidihedral.odd[{br}]"),
            vertex_count: 2 * n + 2,
            cnl: ints(&[(0, 2), (8, 3), ((2 * n - 2) * (2 * n - 4), 2 * n - 3)]),
            cnsl: ints(&[
                (2 * (2 * n - 3) * (2 * n - 4), 1),
                ((2 * n - 4) * (2 * n - 4), 2 * n - 3),
                (12, 1),
                (4, 3),
            ]),
            le,
            le_plus,
        }
    }
}

fn v8n(n: i128) -> Family {
    if n % 2 == 0 {
        Family {
            tag: "v8n.even".into(),
            vertex_count: 2 * n + 2,
            cnl: ints(&[(0, 5), ((2 * n - 2) * (2 * n - 4), 2 * n - 3)]),
            cnsl: ints(&[
                (0, 4),
                (2 * (2 * n - 3) * (2 * n - 4), 1),
                ((2 * n - 4) * (2 * n - 4), 2 * n - 3),
            ]),
            le: q(20 * (n - 2) * (n - 1) * (2 * n - 3), n + 1),
            le_plus: q(16 * (n - 2) * (n - 1) * (2 * n - 3), n + 1),
        }
    } else {
        let (cnl, cnsl, le) = k2n1_two_isolated(n);
        Family {
            tag: "v8n.odd".into(),
            vertex_count: 2 * n + 1,
            cnl,
            cnsl,
            le,
            le_plus: q(8 * (n - 1) * (2 * n - 3) * (2 * n - 1), 2 * n + 1),
        }
    }
}

/// Central-quotient parameters of a family instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum QuotientParams {
    ZpZp {
        p: u32,
        z: u32,
    },
    Dihedral {
        n: u32,
        z: u32,
    },
    /// `G` is abelian.
    Abelian,
}

pub fn quotient_params(spec: &FamilySpec) -> QuotientParams {
    use QuotientParams::*;
    match *spec {
        FamilySpec::Dihedral { n } if n % 2 == 1 => Dihedral { n, z: 1 },
        FamilySpec::Dihedral { n: 4 } => ZpZp { p: 2, z: 2 },
        FamilySpec::Dihedral { n } => Dihedral { n: n / 2, z: 2 },
        FamilySpec::Dicyclic { n: 2 } => ZpZp { p: 2, z: 2 },
        FamilySpec::Dicyclic { n } => Dihedral { n, z: 2 },
        FamilySpec::U6n { n } => Dihedral { n: 3, z: n },
        FamilySpec::Unm { m: 2, .. } => Abelian,
        FamilySpec::Unm { n, m: 4 } => ZpZp { p: 2, z: 2 * n },
        FamilySpec::Unm { n, m } if m % 2 == 1 => Dihedral { n: m, z: n },
        FamilySpec::Unm { n, m } => Dihedral { n: m / 2, z: 2 * n },
        FamilySpec::Semidihedral { n } if n % 2 == 0 => Dihedral { n: 2 * n, z: 2 },
        FamilySpec::Semidihedral { n } => Dihedral { n, z: 4 },
        FamilySpec::V8n { n } if n % 2 == 1 => Dihedral { n: 2 * n, z: 2 },
        FamilySpec::V8n { n: 2 } => ZpZp { p: 2, z: 4 },
        FamilySpec::V8n { n } => Dihedral { n, z: 4 },
        FamilySpec::Heisenberg { p } => ZpZp { p, z: p },
        FamilySpec::CentralExt { base, m } => {
            let p = base.prime();
            let z = match base {
                CentralBase::D8 | CentralBase::Q8 => 2 * m,
                CentralBase::Heisenberg(p) => p * m,
            };
            ZpZp { p, z }
        }
    }
}

/// The quotient-level formulas evaluated at the instance's quotient
/// parameters.
pub fn quotient_closed_form(spec: &FamilySpec) -> Result<ClosedFormReport> {
    spec.validate()?;
    match quotient_params(spec) {
        QuotientParams::ZpZp { p, z } => zpzp_closed_form(p, z),
        QuotientParams::Dihedral { n, z } => d2n_quotient_closed_form(n, z),
        QuotientParams::Abelian => Err(Error::NotRealizable(format!(
            "{} is abelian",
            spec.group_name()
        ))),
    }
}

/// Family formulas where they exist, the quotient formulas otherwise.
pub fn closed_form_for(spec: &FamilySpec) -> Result<ClosedFormReport> {
    match spec {
        FamilySpec::Heisenberg { .. } | FamilySpec::CentralExt { .. } => quotient_closed_form(spec),
        _ => family_closed_form(spec),
    }
}

/// Pluggable provider of closed forms, so the verification harness can be
/// run against altered formulas.
pub trait ClosedFormSource: Sync {
    fn closed_form(&self, spec: &FamilySpec) -> Result<ClosedFormReport>;
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Formulas;

impl ClosedFormSource for Formulas {
    fn closed_form(&self, spec: &FamilySpec) -> Result<ClosedFormReport> {
        closed_form_for(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> ClosedFormReport {
        family_closed_form(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn zpzp_branches() {
        let r = zpzp_closed_form(2, 2).unwrap();
        assert!(r.le_cn.is_zero() && r.le_plus_cn.is_zero() && r.realizable);
        let r = zpzp_closed_form(2, 3).unwrap();
        assert_eq!(r.le_cn, Rational::new(3, 2));
        assert!(!r.realizable);
        assert!(r.cnl_spec.is_none());
        assert_eq!(r.source, "zpzp-quotient[p2-z3]");
        let r = zpzp_closed_form(3, 3).unwrap();
        assert!(r.le_cn.is_zero());
        assert_eq!(r.self_consistent(), Some(true));
        assert!(zpzp_closed_form(4, 4).is_err());
        assert!(zpzp_closed_form(3, 1).is_err());
    }

    #[test]
    fn d2n_quotient_branches() {
        let r = d2n_quotient_closed_form(4, 2).unwrap();
        assert_eq!(r.le_plus_cn, Rational::new(28, 5));
        let r = d2n_quotient_closed_form(3, 1).unwrap();
        assert!(r.le_cn.is_zero() && r.le_plus_cn.is_zero());
        let r = d2n_quotient_closed_form(7, 1).unwrap();
        assert_eq!(
            (r.le_cn.clone(), r.le_plus_cn.clone()),
            (6.into(), 5.into())
        );
        assert_eq!(r.source, "d2n-quotient.odd[le:general,le_plus:z1]");
        assert!(!d2n_quotient_closed_form(6, 3).unwrap().realizable);
        assert!(d2n_quotient_closed_form(4, 1).is_err());
        assert!(d2n_quotient_closed_form(2, 2).is_err());
    }

    #[test]
    fn family_examples() {
        let r = fam("dicyclic:n=5");
        assert_eq!(r.le_cn, Rational::from_int(24));
        assert_eq!(
            r.cnl_spec,
            Some(SpectrumMultiset::from_ints(&[(0, 3), (8, 3)]))
        );
        assert_eq!(fam("semidihedral:n=2").le_plus_cn, Rational::new(28, 5));
        assert_eq!(fam("v8n:n=3").le_cn, Rational::new(360, 7));
        assert!(!fam("unm:n=3,m=2").realizable);
        assert!(matches!(
            family_closed_form(&"heisenberg:p=3".parse().unwrap()),
            Err(Error::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn sd_even_and_v_odd_coincide() {
        for n in [4u32, 6, 8, 10] {
            let sd = fam(&format!("semidihedral:n={n}"));
            let v = fam(&format!("v8n:n={}", n + 1));
            let (_, _, sd_le) = k2n1_two_isolated(n as i128);
            assert_eq!(sd.le_cn, sd_le);
            let (_, _, v_le) = k2n1_two_isolated(n as i128 + 1);
            assert_eq!(v.le_cn, v_le);
        }
    }

    // Even m with m = 2 mod 4 and m >= 10: the family-level even-m formula
    // disagrees with the quotient route, and the quotient route is the
    // one the brute-force pipeline confirms.
    #[test]
    fn unm_even_general_formula_erratum() {
        let spec: FamilySpec = "unm:n=2,m=10".parse().unwrap();
        let fam = family_closed_form(&spec).unwrap();
        let quo = quotient_closed_form(&spec).unwrap();
        assert_eq!(fam.le_cn, Rational::from_int(280));
        assert_eq!(quo.le_cn, Rational::from_int(252));
        assert_eq!(quo.le_plus_cn, Rational::from_int(192));
        assert_eq!(fam.self_consistent(), Some(false));
        assert_eq!(quo.self_consistent(), Some(true));
    }

    #[test]
    fn routes_agree_on_small_instances() {
        for s in [
            "dihedral:n=9",
            "dihedral:n=12",
            "dicyclic:n=4",
            "u6n:n=5",
            "unm:n=3,m=6",
            "semidihedral:n=3",
            "v8n:n=4",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            let a = family_closed_form(&spec).unwrap();
            let b = quotient_closed_form(&spec).unwrap();
            assert_eq!((&a.le_cn, &a.le_plus_cn), (&b.le_cn, &b.le_plus_cn), "{s}");
            assert_eq!(
                (&a.cnl_spec, &a.cnsl_spec),
                (&b.cnl_spec, &b.cnsl_spec),
                "{s}"
            );
            assert_eq!(a.self_consistent(), Some(true), "{s}");
        }
    }
}
