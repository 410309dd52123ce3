//! Parameter sweeps over a family and their CSV / JSON reports.

use serde::Serialize;

use crate::analysis::analyze;
use crate::classify::{classify, Classification};
use crate::closed_form::{ClosedFormSource, Formulas};
use crate::error::{Error, Result};
use crate::family::{split_spec, FamilyKind, FamilySpec};
use crate::group::order_cap;
use crate::par;
use crate::rational::Rational;

/// Column order of the CSV report.
pub const CSV_HEADER: [&str; 12] = [
    "family",
    "params",
    "vertices",
    "e_cn",
    "le_cn",
    "le_plus_cn",
    "e_cn_f",
    "le_cn_f",
    "le_plus_cn_f",
    "cnl_status",
    "cnsl_status",
    "ordering",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Range {
    pub min: u32,
    pub max: u32,
    pub step: u32,
}

impl Range {
    pub fn new(min: u32, max: u32, step: u32) -> Result<Self> {
        if step == 0 || min > max {
            return Err(Error::InvalidParameters(format!(
                "empty range {min}..{max} step {step}"
            )));
        }
        Ok(Range { min, max, step })
    }

    pub fn values(&self) -> impl Iterator<Item = u32> {
        (self.min..=self.max).step_by(self.step as usize)
    }
}

/// Parses `a..b` (inclusive).
pub fn parse_range(s: &str, step: u32) -> Result<Range> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("expected `a..b`, got `{s}`")))?;
    let num = |t: &str| {
        t.trim()
            .trim_start_matches('=')
            .parse::<u32>()
            .map_err(|_| Error::Parse(format!("bad range bound in `{s}`")))
    };
    Range::new(num(a)?, num(b)?, step)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ParamValue {
    Fixed(String),
    Ranged(Range),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepSpec {
    pub kind: FamilyKind,
    pub params: Vec<(String, ParamValue)>,
    pub include_oracle: bool,
}

impl SweepSpec {
    /// Template syntax: `dihedral:n=*` takes `range` for `*`; inline
    /// ranges (`unm:n=2..6,m=*`) are also accepted. At most two parameters
    /// may be ranged.
    pub fn parse(template: &str, range: Option<Range>, include_oracle: bool) -> Result<Self> {
        let (kind, raw) = split_spec(template)?;
        let mut params = Vec::with_capacity(raw.len());
        for (k, v) in raw {
            let value = if v == "*" {
                ParamValue::Ranged(
                    range.ok_or_else(|| Error::Parse(format!("`{k}=*` needs --range")))?,
                )
            } else if v.contains("..") {
                ParamValue::Ranged(parse_range(&v, 1)?)
            } else {
                ParamValue::Fixed(v)
            };
            params.push((k, value));
        }
        let ranged = params
            .iter()
            .filter(|(_, v)| matches!(v, ParamValue::Ranged(_)))
            .count();
        if ranged == 0 || ranged > 2 {
            return Err(Error::Parse(format!(
                "a sweep needs one or two ranged parameters, `{template}` has {ranged}"
            )));
        }
        Ok(SweepSpec {
            kind,
            params,
            include_oracle,
        })
    }

    /// Instances in parameter order (first ranged parameter outermost).
    pub fn instances(&self) -> Result<Vec<FamilySpec>> {
        let mut assignments: Vec<Vec<(String, String)>> = vec![Vec::new()];
        for (k, v) in &self.params {
            let values: Vec<String> = match v {
                ParamValue::Fixed(s) => vec![s.clone()],
                ParamValue::Ranged(r) => r.values().map(|x| x.to_string()).collect(),
            };
            assignments = assignments
                .into_iter()
                .flat_map(|a| {
                    values.iter().map(move |x| {
                        let mut a = a.clone();
                        a.push((k.clone(), x.clone()));
                        a
                    })
                })
                .collect();
        }
        let cap = order_cap();
        let specs = assignments
            .iter()
            .map(|a| FamilySpec::from_parts(self.kind, a))
            .collect::<Result<Vec<_>>>()?;
        if let Some(s) = specs.iter().find(|s| s.order() > cap) {
            return Err(Error::OrderCapExceeded {
                order: s.order(),
                cap,
            });
        }
        Ok(specs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RowData {
    pub vertices: usize,
    pub e_cn: Rational,
    pub le_cn: Rational,
    pub le_plus_cn: Rational,
    pub classification: Classification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Oracle {
    Match,
    Mismatch(String),
    NotRealizable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub spec: FamilySpec,
    pub data: std::result::Result<RowData, String>,
    pub oracle: Option<Oracle>,
}

/// Brute-force values for one instance, optionally compared to the
/// closed forms.
pub fn compute_row(spec: &FamilySpec, oracle: Option<&dyn ClosedFormSource>) -> SweepRow {
    let analysis = match analyze(spec) {
        Ok(a) => a,
        Err(e) => {
            return SweepRow {
                spec: *spec,
                data: Err(e.to_string()),
                oracle: None,
            }
        }
    };
    let r = &analysis.report;
    let oracle = oracle.map(|src| match src.closed_form(spec) {
        Ok(cf) if !cf.realizable => Oracle::NotRealizable,
        Ok(cf) => {
            let mut bad = Vec::new();
            if cf.le_cn != r.le_cn {
                bad.push(format!("le_cn {} != {}", r.le_cn, cf.le_cn));
            }
            if cf.le_plus_cn != r.le_plus_cn {
                bad.push(format!("le_plus_cn {} != {}", r.le_plus_cn, cf.le_plus_cn));
            }
            if cf.cnl_spec.as_ref() != Some(&r.spectra.cnl) {
                bad.push("cnl spectrum".into());
            }
            if cf.cnsl_spec.as_ref() != Some(&r.spectra.cnsl) {
                bad.push("cnsl spectrum".into());
            }
            if !analysis.exact_verified {
                bad.push("exact spectrum verification".into());
            }
            if bad.is_empty() {
                Oracle::Match
            } else {
                Oracle::Mismatch(format!("{}: {}", cf.source, bad.join(", ")))
            }
        }
        Err(e) => Oracle::Mismatch(e.to_string()),
    });
    SweepRow {
        spec: *spec,
        data: Ok(RowData {
            vertices: r.vertex_count,
            e_cn: r.e_cn.clone(),
            le_cn: r.le_cn.clone(),
            le_plus_cn: r.le_plus_cn.clone(),
            classification: classify(r),
        }),
        oracle,
    }
}

pub fn run_sweep(s: &SweepSpec) -> Result<Vec<SweepRow>> {
    let specs = s.instances()?;
    let oracle: Option<&dyn ClosedFormSource> = s.include_oracle.then_some(&Formulas);
    Ok(par::map(&specs, |spec| compute_row(spec, oracle)))
}

fn float(r: &Rational) -> String {
    format!("{:.6}", r.to_f64())
}

fn csv_record(row: &SweepRow, with_oracle: bool) -> Vec<String> {
    let mut rec = vec![row.spec.kind().to_string(), row.spec.params_compact()];
    match &row.data {
        Ok(d) => rec.extend([
            d.vertices.to_string(),
            d.e_cn.to_string(),
            d.le_cn.to_string(),
            d.le_plus_cn.to_string(),
            float(&d.e_cn),
            float(&d.le_cn),
            float(&d.le_plus_cn),
            d.classification.cnl_status.to_string(),
            d.classification.cnsl_status.to_string(),
            d.classification.ordering.to_string(),
        ]),
        Err(e) => {
            rec.extend(std::iter::repeat_n(String::new(), 7));
            rec.extend(["error".to_string(), "error".to_string(), e.clone()]);
        }
    }
    if with_oracle {
        rec.push(match &row.oracle {
            Some(Oracle::Match) => "match".into(),
            Some(Oracle::NotRealizable) => "not_realizable".into(),
            Some(Oracle::Mismatch(m)) => format!("mismatch: {m}"),
            None => String::new(),
        });
    }
    rec
}

/// CSV with [`CSV_HEADER`], plus an `oracle` column when requested.
pub fn to_csv(rows: &[SweepRow], with_oracle: bool) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = CSV_HEADER.to_vec();
    if with_oracle {
        header.push("oracle");
    }
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(&header).map_err(io)?;
    for row in rows {
        w.write_record(csv_record(row, with_oracle)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

pub fn to_json(rows: &[SweepRow]) -> serde_json::Value {
    let rows: Vec<serde_json::Value> = rows
        .iter()
        .map(|row| {
            let mut obj = serde_json::json!({
                "family": row.spec.kind().to_string(),
                "params": row.spec.params_compact(),
                "group": row.spec.group_name(),
            });
            match &row.data {
                Ok(d) => {
                    obj["vertices"] = d.vertices.into();
                    obj["e_cn"] = d.e_cn.to_string().into();
                    obj["le_cn"] = d.le_cn.to_string().into();
                    obj["le_plus_cn"] = d.le_plus_cn.to_string().into();
                    obj["e_cn_f"] = d.e_cn.to_f64().into();
                    obj["le_cn_f"] = d.le_cn.to_f64().into();
                    obj["le_plus_cn_f"] = d.le_plus_cn.to_f64().into();
                    obj["cnl_status"] = d.classification.cnl_status.to_string().into();
                    obj["cnsl_status"] = d.classification.cnsl_status.to_string().into();
                    obj["ordering"] = d.classification.ordering.to_string().into();
                    obj["cnl_integral"] = d.classification.cnl_integral.into();
                    obj["cnsl_integral"] = d.classification.cnsl_integral.into();
                }
                Err(e) => obj["error"] = e.clone().into(),
            }
            if let Some(o) = &row.oracle {
                obj["oracle"] = serde_json::to_value(o).unwrap_or_default();
            }
            obj
        })
        .collect();
    serde_json::Value::Array(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn template_expansion() {
        let s =
            SweepSpec::parse("dihedral:n=*", Some(Range::new(3, 9, 2).unwrap()), false).unwrap();
        let names: Vec<String> = s
            .instances()
            .unwrap()
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert_eq!(names.len(), 4);
        assert_eq!(names[0], "dihedral:n=3");
        assert_eq!(names[3], "dihedral:n=9");
        let s =
            SweepSpec::parse("unm:n=2..3,m=*", Some(Range::new(3, 4, 1).unwrap()), false).unwrap();
        let names: Vec<String> = s
            .instances()
            .unwrap()
            .iter()
            .map(|x| x.params_compact())
            .collect();
        assert_eq!(names, ["n=2;m=3", "n=2;m=4", "n=3;m=3", "n=3;m=4"]);
        let s = SweepSpec::parse(
            "central_ext:base=q8,m=*",
            Some(Range::new(1, 2, 1).unwrap()),
            false,
        );
        assert_eq!(s.unwrap().instances().unwrap().len(), 2);
    }

    #[test]
    fn template_errors() {
        assert!(SweepSpec::parse("dihedral:n=*", None, false).is_err());
        assert!(SweepSpec::parse("dihedral:n=5", None, false).is_err());
        assert!(Range::new(5, 3, 1).is_err());
        assert!(Range::new(1, 3, 0).is_err());
        let big = SweepSpec::parse(
            "dihedral:n=*",
            Some(Range::new(3, 5000, 1000).unwrap()),
            false,
        );
        assert!(matches!(
            big.unwrap().instances(),
            Err(Error::OrderCapExceeded { .. })
        ));
    }

    #[test]
    fn rows_and_csv() {
        let s = SweepSpec::parse("dihedral:n=*", Some(Range::new(7, 8, 1).unwrap()), true).unwrap();
        let rows = run_sweep(&s).unwrap();
        assert!(rows.iter().all(|r| r.oracle == Some(Oracle::Match)));
        let csv = to_csv(&rows, false).unwrap();
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        assert_eq!(
            lines.next().unwrap(),
            "dihedral,n=7,4,4,6,5,4.000000,6.000000,5.000000,below,below,strict_chain"
        );
        assert_eq!(csv, to_csv(&run_sweep(&s).unwrap(), false).unwrap());
    }

    #[test]
    fn failed_rows_are_kept() {
        let spec: FamilySpec = "unm:n=2,m=2".parse().unwrap();
        let row = compute_row(&spec, None);
        assert!(row.data.is_err());
        let csv = to_csv(&[row], false).unwrap();
        assert!(csv.lines().nth(1).unwrap().starts_with("unm,n=2;m=2,,"));
    }
}
