//! End-to-end brute-force pipeline for one group instance.

use serde::Serialize;

use crate::classes::{central_quotient_type, conjugacy_classes, CentralQuotientType};
use crate::error::Result;
use crate::family::FamilySpec;
use crate::graph::{
    build_ccc_graph, decompose_cliques, family_structure, CccGraph, CliqueDecomposition,
};
use crate::group::{build_group, GroupTable};
use crate::jacobi::numeric_eigenvalues;
use crate::matrix::{cn_matrix, cnl_cnsl_matrices, CnMatrices, IntMatrix};
use crate::spectra::{
    clique_union_spectra, energies, exact_spectrum_verify, numeric_matches, EnergyReport,
};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub spec: FamilySpec,
    pub order: usize,
    pub center_size: usize,
    pub quotient: CentralQuotientType,
    pub graph: CccGraph,
    pub decomposition: CliqueDecomposition,
    /// `None` when the quotient has no structural prediction.
    pub predicted: Option<CliqueDecomposition>,
    pub cn: IntMatrix,
    pub matrices: CnMatrices,
    pub report: EnergyReport,
    /// Every clique-union spectrum passed the exact nullity check
    /// against its matrix.
    pub exact_verified: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericCheck {
    pub cn: bool,
    pub cnl: bool,
    pub cnsl: bool,
}

impl NumericCheck {
    pub fn all(&self) -> bool {
        self.cn && self.cnl && self.cnsl
    }
}

pub fn analyze(spec: &FamilySpec) -> Result<Analysis> {
    let g = build_group(*spec)?;
    analyze_group(&g)
}

pub fn analyze_group(g: &GroupTable) -> Result<Analysis> {
    let spec = *g.spec();
    let p = conjugacy_classes(g);
    let quotient = central_quotient_type(g, &p);
    let graph = build_ccc_graph(g, &p)?;
    let decomposition = decompose_cliques(&graph)?;
    let predicted = family_structure(&spec, &quotient).ok();
    let cn = cn_matrix(&graph);
    let matrices = cnl_cnsl_matrices(&cn);
    let spectra = clique_union_spectra(&decomposition);
    let exact_verified = exact_spectrum_verify(&cn, &spectra.cn)
        && exact_spectrum_verify(&matrices.cnl, &spectra.cnl)
        && exact_spectrum_verify(&matrices.cnsl, &spectra.cnsl);
    let report = energies(spectra, matrices.cnrs.trace(), graph.vertex_count())?;
    Ok(Analysis {
        spec,
        order: g.order(),
        center_size: p.center_size(),
        quotient,
        graph,
        decomposition,
        predicted,
        cn,
        matrices,
        report,
        exact_verified,
    })
}

impl Analysis {
    /// Jacobi eigenvalues against the exact spectra, within `tol` scaled by
    /// each matrix's largest entry.
    pub fn numeric_check(&self, jacobi_tol: f64, tol: f64) -> Result<NumericCheck> {
        let s = &self.report.spectra;
        let check = |m: &IntMatrix, spec| -> Result<bool> {
            Ok(numeric_matches(
                m,
                spec,
                &numeric_eigenvalues(m, jacobi_tol)?,
                tol,
            ))
        };
        Ok(NumericCheck {
            cn: check(&self.cn, &s.cn)?,
            cnl: check(&self.matrices.cnl, &s.cnl)?,
            cnsl: check(&self.matrices.cnsl, &s.cnsl)?,
        })
    }

    pub fn structure_matches_prediction(&self) -> Option<bool> {
        self.predicted.as_ref().map(|p| *p == self.decomposition)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn d14_pipeline() {
        let a = analyze(&"dihedral:n=7".parse().unwrap()).unwrap();
        assert_eq!(a.decomposition.parts, vec![(3, 1), (1, 1)]);
        assert!(a.exact_verified);
        assert_eq!(a.structure_matches_prediction(), Some(true));
        assert_eq!(a.report.le_cn, Rational::from_int(6));
        assert_eq!(a.report.le_plus_cn, Rational::from_int(5));
        assert!(a.numeric_check(1e-10, 1e-8).unwrap().all());
    }

    #[test]
    fn sd16_pipeline() {
        let a = analyze(&"semidihedral:n=2".parse().unwrap()).unwrap();
        assert_eq!(a.report.le_plus_cn, Rational::new(28, 5));
    }
}
