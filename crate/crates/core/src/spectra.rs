//! Exact CN / CNL / CNSL spectra and the three energies.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::CliqueDecomposition;
use crate::matrix::IntMatrix;
use crate::rational::Rational;

/// Eigenvalues with positive multiplicities, ascending, equal values merged.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpectrumMultiset {
    pairs: Vec<(Rational, usize)>,
}

impl SpectrumMultiset {
    pub fn new(entries: impl IntoIterator<Item = (Rational, usize)>) -> Self {
        let mut pairs: Vec<(Rational, usize)> = Vec::new();
        for (v, k) in entries {
            if k == 0 {
                continue;
            }
            match pairs.iter_mut().find(|(w, _)| *w == v) {
                Some(p) => p.1 += k,
                None => pairs.push((v, k)),
            }
        }
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        SpectrumMultiset { pairs }
    }

    pub fn from_ints(entries: &[(i64, usize)]) -> Self {
        Self::new(entries.iter().map(|&(v, k)| (Rational::from_int(v), k)))
    }

    pub fn pairs(&self) -> &[(Rational, usize)] {
        &self.pairs
    }

    pub fn dim(&self) -> usize {
        self.pairs.iter().map(|p| p.1).sum()
    }

    /// `sum of multiplicity * eigenvalue`.
    pub fn weighted_sum(&self) -> Rational {
        self.pairs
            .iter()
            .map(|(v, k)| v * &Rational::from_int(*k as i64))
            .sum()
    }

    pub fn is_integral(&self) -> bool {
        self.pairs.iter().all(|(v, _)| v.is_integer())
    }

    /// `sum of multiplicity * |eigenvalue - shift|`.
    pub fn deviation(&self, shift: &Rational) -> Rational {
        self.pairs
            .iter()
            .map(|(v, k)| (v - shift).abs() * (*k as i64))
            .sum()
    }

    /// Eigenvalues expanded by multiplicity, as floats, ascending.
    pub fn expanded_f64(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|(v, k)| std::iter::repeat_n(v.to_f64(), *k))
            .collect()
    }
}

impl std::fmt::Display for SpectrumMultiset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms: Vec<String> = self
            .pairs
            .iter()
            .map(|(v, k)| format!("({v})^{k}"))
            .collect();
        write!(f, "{{{}}}", terms.join(", "))
    }
}

impl Serialize for SpectrumMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            value: &'a Rational,
            mult: usize,
        }
        let mut seq = s.serialize_seq(Some(self.pairs.len()))?;
        for (value, mult) in &self.pairs {
            seq.serialize_element(&Entry { value, mult: *mult })?;
        }
        seq.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Spectra {
    pub cn: SpectrumMultiset,
    pub cnl: SpectrumMultiset,
    pub cnsl: SpectrumMultiset,
}

/// Per `K_m` part with count `l`: CN `{((m-1)(m-2))^l, (-(m-2))^(l(m-1))}`,
/// CNL `{0^l, (m(m-2))^(l(m-1))}`, CNSL `{(2(m-1)(m-2))^l, ((m-2)^2)^(l(m-1))}`.
pub fn clique_union_spectra(d: &CliqueDecomposition) -> Spectra {
    let mut cn = Vec::new();
    let mut cnl = Vec::new();
    let mut cnsl = Vec::new();
    for &(m, l) in &d.parts {
        let mi = m as i64;
        let rest = l * (m - 1);
        cn.push(((mi - 1) * (mi - 2), l));
        cn.push((-(mi - 2), rest));
        cnl.push((0, l));
        cnl.push((mi * (mi - 2), rest));
        cnsl.push((2 * (mi - 1) * (mi - 2), l));
        cnsl.push(((mi - 2) * (mi - 2), rest));
    }
    Spectra {
        cn: SpectrumMultiset::from_ints(&cn),
        cnl: SpectrumMultiset::from_ints(&cnl),
        cnsl: SpectrumMultiset::from_ints(&cnsl),
    }
}

/// True iff multiplicities sum to the dimension and
/// `nullity(M - lambda I) = k` for every claimed `(lambda, k)`.
pub fn exact_spectrum_verify(m: &IntMatrix, s: &SpectrumMultiset) -> bool {
    s.dim() == m.dim() && s.pairs().iter().all(|(v, k)| m.nullity_shifted(v) == *k)
}

/// Numeric eigenvalues match the expanded exact spectrum within
/// `tol * max(1, max |entry|)`.
pub fn numeric_matches(m: &IntMatrix, s: &SpectrumMultiset, numeric: &[f64], tol: f64) -> bool {
    let exact = s.expanded_f64();
    let scale = (m.max_abs_entry() as f64).max(1.0);
    exact.len() == numeric.len()
        && exact
            .iter()
            .zip(numeric)
            .all(|(a, b)| (a - b).abs() <= tol * scale)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnergyReport {
    pub vertex_count: usize,
    pub trace_cnrs: i64,
    pub delta: Rational,
    pub e_cn: Rational,
    pub le_cn: Rational,
    pub le_plus_cn: Rational,
    pub spectra: Spectra,
}

impl EnergyReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertex_count": self.vertex_count,
            "trace_cnrs": self.trace_cnrs,
            "delta": self.delta,
            "delta_f": self.delta.to_f64(),
            "e_cn": self.e_cn,
            "e_cn_f": self.e_cn.to_f64(),
            "le_cn": self.le_cn,
            "le_cn_f": self.le_cn.to_f64(),
            "le_plus_cn": self.le_plus_cn,
            "le_plus_cn_f": self.le_plus_cn.to_f64(),
            "cn_spec": self.spectra.cn,
            "cnl_spec": self.spectra.cnl,
            "cnsl_spec": self.spectra.cnsl,
        })
    }
}

pub fn energies(spectra: Spectra, trace_cnrs: i64, vertex_count: usize) -> Result<EnergyReport> {
    if vertex_count == 0 {
        return Err(Error::InvalidParameters(
            "vertex count must be positive".into(),
        ));
    }
    let trace = Rational::from_int(trace_cnrs);
    for (name, s) in [("CNL", &spectra.cnl), ("CNSL", &spectra.cnsl)] {
        let sum = s.weighted_sum();
        if sum != trace {
            return Err(Error::TraceMismatch {
                matrix: name,
                spectrum_sum: sum.to_string(),
                trace: trace_cnrs,
            });
        }
    }
    let delta = Rational::new(trace_cnrs, vertex_count as i64);
    let e_cn = spectra.cn.deviation(&Rational::zero());
    let le_cn = spectra.cnl.deviation(&delta);
    let le_plus_cn = spectra.cnsl.deviation(&delta);
    Ok(EnergyReport {
        vertex_count,
        trace_cnrs,
        delta,
        e_cn,
        le_cn,
        le_plus_cn,
        spectra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::CccGraph;
    use crate::matrix::{cn_matrix, cnl_cnsl_matrices};

    fn dec(parts: &[(usize, usize)]) -> CliqueDecomposition {
        CliqueDecomposition::new(parts.iter().copied())
    }

    fn report(parts: &[(usize, usize)]) -> EnergyReport {
        let d = dec(parts);
        let cn = cn_matrix(&CccGraph::clique_union(&d.parts));
        energies(clique_union_spectra(&d), cn.entry_sum(), d.vertex_count()).unwrap()
    }

    #[test]
    fn k4_spectra() {
        let s = clique_union_spectra(&dec(&[(4, 1)]));
        assert_eq!(s.cnl, SpectrumMultiset::from_ints(&[(0, 1), (8, 3)]));
        assert_eq!(s.cnsl, SpectrumMultiset::from_ints(&[(12, 1), (4, 3)]));
    }

    #[test]
    fn isolated_vertices() {
        let s = clique_union_spectra(&dec(&[(1, 3)]));
        let zero = SpectrumMultiset::from_ints(&[(0, 3)]);
        assert_eq!((s.cn.clone(), s.cnl.clone()), (zero.clone(), zero.clone()));
        assert_eq!(s.cnsl, zero);
    }

    #[test]
    fn sd16_shape() {
        let s = clique_union_spectra(&dec(&[(3, 1), (1, 2)]));
        assert_eq!(s.cnl, SpectrumMultiset::from_ints(&[(0, 3), (3, 2)]));
        assert_eq!(
            s.cnsl,
            SpectrumMultiset::from_ints(&[(4, 1), (1, 2), (0, 2)])
        );
        let cn = cn_matrix(&CccGraph::clique_union(&[(3, 1), (1, 2)]));
        let m = cnl_cnsl_matrices(&cn);
        assert!(exact_spectrum_verify(&m.cnl, &s.cnl));
        assert!(exact_spectrum_verify(&m.cnsl, &s.cnsl));
        assert!(exact_spectrum_verify(&cn, &s.cn));
    }

    #[test]
    fn verify_rejects_wrong_spectra() {
        let cnl = cnl_cnsl_matrices(&cn_matrix(&CccGraph::clique_union(&[(4, 1)]))).cnl;
        assert!(exact_spectrum_verify(
            &cnl,
            &SpectrumMultiset::from_ints(&[(0, 1), (8, 3)])
        ));
        assert!(!exact_spectrum_verify(
            &cnl,
            &SpectrumMultiset::from_ints(&[(0, 4)])
        ));
        assert!(exact_spectrum_verify(
            &IntMatrix::zeros(3),
            &SpectrumMultiset::from_ints(&[(0, 3)])
        ));
    }

    #[test]
    fn energies_of_examples() {
        let k4 = report(&[(4, 1)]);
        assert_eq!(k4.delta, Rational::from_int(6));
        assert_eq!(k4.le_cn, Rational::from_int(12));
        let q8 = report(&[(1, 3)]);
        assert!(q8.e_cn.is_zero() && q8.le_cn.is_zero() && q8.le_plus_cn.is_zero());
        let d14 = report(&[(3, 1), (1, 1)]);
        assert_eq!(d14.delta, Rational::new(3, 2));
        assert_eq!(d14.le_cn, Rational::from_int(6));
        assert_eq!(d14.le_plus_cn, Rational::from_int(5));
    }

    #[test]
    fn trace_mismatch() {
        let s = clique_union_spectra(&dec(&[(4, 1)]));
        assert!(matches!(
            energies(s, 23, 4),
            Err(Error::TraceMismatch { matrix: "CNL", .. })
        ));
    }

    #[test]
    fn json_shape() {
        let s = SpectrumMultiset::new([(Rational::new(28, 5), 2)]);
        assert_eq!(
            serde_json::to_value(&s).unwrap(),
            serde_json::json!([{"value": "28/5", "mult": 2}])
        );
    }
}
