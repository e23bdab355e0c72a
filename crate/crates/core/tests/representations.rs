mod common;

use qchl::catalog;
use qchl::linalg::RatMatrix;
use qchl::rational::q;
use qchl::representations::{
    adjoint_rep, check_equivalence, check_hom_module, check_representation, coadjoint_rep,
    dual_rep, tensor_rep, HomModuleForm, Representation,
};

use common::*;

#[test]
fn adjoint_and_coadjoint_of_catalog_lie_algebras() {
    for (name, a) in catalog_lie_algebras() {
        let ad = adjoint_rep(&a);
        assert!(check_representation(&ad, false).passed(), "{name}");
        let (co, report) = coadjoint_rep(&a);
        if report.passed() {
            assert!(check_representation(&co, false).passed(), "{name} coadjoint");
        }
    }
}

#[test]
fn sl2_coadjoint_is_equivalent_to_adjoint_through_the_killing_form() {
    let a = catalog::sl2_hom(&q(1), &q(1), &q(0), &q(0), &q(0), &q(0));
    let (co, report) = coadjoint_rep(&a);
    assert!(report.passed());
    let k = RatMatrix::from_rows(killing_trace(&a));
    assert!(check_equivalence(&adjoint_rep(&a), &co, &k).passed());
}

#[test]
fn double_dual_is_equivalent_through_the_parity_map() {
    let a = catalog::build_default("nilpotent_L").unwrap();
    let ad = adjoint_rep(&a);
    let (d, r1) = dual_rep(&ad);
    let (dd, r2) = dual_rep(&d);
    assert!(r1.passed() && r2.passed());
    assert_eq!(dd.beta(), ad.beta());
    assert_ne!(dd.rho(), ad.rho());
    let space = a.space();
    let parity: Vec<_> = (0..a.dim())
        .map(|i| space.eps(space.degree(i), space.degree(i)))
        .collect();
    assert!(check_equivalence(&ad, &dd, &RatMatrix::diagonal(&parity)).passed());
}

#[test]
fn tensoring_with_the_scalar_module_changes_nothing() {
    let a = catalog::sl2_hom(&q(1), &q(1), &q(0), &q(0), &q(0), &q(0));
    let ad = adjoint_rep(&a);
    let t = tensor_rep(&ad, &Representation::scalar(&a)).unwrap();
    assert!(check_representation(&t, true).passed());
    assert!(check_equivalence(&ad, &t, &RatMatrix::identity(3)).passed());
    let tt = tensor_rep(&ad, &ad).unwrap();
    assert_eq!(tt.dim(), 9);
    assert!(check_representation(&tt, true).passed());
}

#[test]
fn scaled_action_breaks_the_module_axiom() {
    let a = catalog::sl2_hom(&q(1), &q(1), &q(0), &q(0), &q(0), &q(0));
    let mut rho: Vec<RatMatrix> = adjoint_rep(&a).rho().to_vec();
    rho[0] = rho[0].scale(&q(2));
    let r = Representation::new(a.clone(), a.space().clone(), a.alpha().clone(), rho).unwrap();
    assert!(check_hom_module(&adjoint_rep(&a), HomModuleForm::Cyclic).passed);
    assert!(!check_hom_module(&r, HomModuleForm::Cyclic).passed);
    assert!(!check_representation(&r, false).passed());
}

#[test]
fn module_identity_forms_on_catalog_adjoints() {
    for (name, a) in catalog_lie_algebras() {
        let ad = adjoint_rep(&a);
        let eq = check_representation(&ad, false).passed();
        let cyclic = check_hom_module(&ad, HomModuleForm::Cyclic).passed;
        let literal = check_hom_module(&ad, HomModuleForm::Literal).passed;
        println!("{name}: module equation {eq}, cyclic {cyclic}, literal {literal}");
        assert_eq!(eq, cyclic, "{name}");
    }
}

#[test]
fn printed_module_identity_fails_on_a_super_tensor_module() {
    let a = catalog::build_default("nilpotent_L").unwrap();
    let ad = adjoint_rep(&a);
    let (co, _) = coadjoint_rep(&a);
    let t = tensor_rep(&ad, &co).unwrap();
    assert!(check_representation(&t, false).passed());
    assert!(check_hom_module(&t, HomModuleForm::Cyclic).passed);
    let literal = check_hom_module(&t, HomModuleForm::Literal);
    assert!(!literal.passed && literal.witness.is_some());
}
