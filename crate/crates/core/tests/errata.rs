//! Places where printed formulas and brute force part ways, pinned so that
//! a change in either side is noticed.

use ccc_spectra::analysis::analyze;
use ccc_spectra::classify::{benchmark, classify, Ordering, Status};
use ccc_spectra::closed_form::{family_closed_form, zpzp_closed_form};
use ccc_spectra::family::FamilySpec;
use ccc_spectra::rational::Rational;
use ccc_spectra::spectra::SpectrumMultiset;
use ccc_spectra::Error;

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap()
}

#[test]
fn dihedral_even_cnsl_multiplicity_is_half_of_n_minus_4() {
    let a = analyze(&spec("dihedral:n=12")).unwrap();
    let cnsl = &a.report.spectra.cnsl;
    assert!(cnsl.pairs().contains(&(Rational::from_int(9), 4)));
    assert_eq!(cnsl.dim(), a.graph.vertex_count());
    assert_eq!(
        family_closed_form(&spec("dihedral:n=12"))
            .unwrap()
            .cnsl_spec
            .as_ref(),
        Some(cnsl)
    );
}

#[test]
fn unm_m_2_mod_4_spectra_follow_the_clique_structure() {
    let a = analyze(&spec("unm:n=3,m=6")).unwrap();
    assert_eq!(a.decomposition.to_string(), "2K_6");
    let cf = family_closed_form(&spec("unm:n=3,m=6")).unwrap();
    assert_eq!(cf.cnl_spec.as_ref(), Some(&a.report.spectra.cnl));
    assert_eq!(cf.le_cn, a.report.le_cn);
}

#[test]
fn unm_general_even_formula_fails_at_m_10() {
    let s = spec("unm:n=2,m=10");
    let a = analyze(&s).unwrap();
    assert_eq!(a.report.le_cn, Rational::from_int(252));
    assert_eq!(a.report.le_plus_cn, Rational::from_int(192));
    let cf = family_closed_form(&s).unwrap();
    assert_eq!(cf.le_cn, Rational::from_int(280));
    assert_eq!(cf.cnl_spec.as_ref(), Some(&a.report.spectra.cnl));
    assert_eq!(cf.self_consistent(), Some(false));
}

#[test]
fn unm_with_m_2_is_abelian() {
    let s = spec("unm:n=4,m=2");
    assert!(matches!(analyze(&s), Err(Error::AbelianGroup)));
    assert!(!family_closed_form(&s).unwrap().realizable);
}

#[test]
fn v32_is_not_cnsl_hyperenergetic() {
    let r = analyze(&spec("v8n:n=4")).unwrap().report;
    assert_eq!(r.vertex_count, 10);
    assert_eq!(r.le_plus_cn, Rational::from_int(96));
    assert_eq!(benchmark(10), Rational::from_int(144));
    assert_eq!(classify(&r).cnsl_status, Status::Below);
    for n in [5, 6, 7, 8] {
        let r = analyze(&FamilySpec::V8n { n }).unwrap().report;
        assert_eq!(classify(&r).cnsl_status, Status::Hyper, "n={n}");
    }
}

#[test]
fn sd24_has_all_equal_ordering() {
    let r = analyze(&spec("semidihedral:n=3")).unwrap().report;
    assert_eq!(r.e_cn, Rational::from_int(24));
    assert_eq!(classify(&r).ordering, Ordering::AllEqual);
    let r = analyze(&spec("semidihedral:n=7")).unwrap().report;
    assert_eq!(classify(&r).ordering, Ordering::StrictChain);
}

#[test]
fn zpzp_prime_2_center_3_is_not_a_group() {
    let r = zpzp_closed_form(2, 3).unwrap();
    assert_eq!(r.le_cn, Rational::new(3, 2));
    assert!(!r.realizable);
    assert_eq!(r.cnl_spec, None::<SpectrumMultiset>);
}
