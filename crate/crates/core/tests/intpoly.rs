use patchspec::arith::{PAdicApprox, UniPolyQ};
use patchspec::intpoly::*;
use proptest::prelude::*;

fn dom(s: &str) -> IntDomain {
    IntDomain::parse_id(s).unwrap()
}

fn poly(s: &str, d: &IntDomain) -> IntPoly {
    IntPoly::parse(s, d).unwrap()
}

#[test]
fn membership_examples() {
    let z = dom("Z");
    assert!(int_membership(&poly("X*(X-1)/2", &z), &z).unwrap());
    assert!(!int_membership(&poly("X/2", &z), &z).unwrap());
    let only3 = dom("Zloc:3");
    assert!(int_membership(&poly("X*(X-1)/2", &only3), &only3).unwrap());
    let only2 = dom("Zloc:2");
    assert!(!int_membership(&poly("X/3 + X^2/2", &only2), &only2).unwrap());
    assert!(int_membership(&poly("X*(X-1)*(X-2)/6", &z), &z).unwrap());
}

#[test]
fn mpalpha_examples() {
    let x = UniPolyQ::parse("X").unwrap();
    let x1 = UniPolyQ::parse("X + 1").unwrap();
    let a = PAdicApprox::new(2, 3, 0).unwrap();
    assert_eq!(mpalpha_membership(&x, &a).unwrap(), MpMembership::In);
    assert_eq!(mpalpha_membership(&x1, &a).unwrap(), MpMembership::Out);
    let b = PAdicApprox::new(2, 2, 4).unwrap();
    assert_eq!(mpalpha_membership(&x, &b).unwrap(), MpMembership::In);
    assert!(mpalpha_membership(&UniPolyQ::parse("X/2").unwrap(), &a).is_err());
}

#[test]
fn zx_contractions() {
    let c = |p, k, a| mpalpha_contract_zx(&PAdicApprox::new(p, k, a).unwrap()).ideal;
    assert_eq!(c(2, 3, 0), "(2, X)");
    assert_eq!(c(3, 2, 5), "(3, X - 2)");
    assert_eq!(c(5, 1, 0), "(5, X)");
}

#[test]
fn lambda_tables() {
    let z = lambda_classify(&dom("Z")).unwrap();
    assert_eq!(z.lambda0_text, "all closed points of Z");
    assert_eq!(z.lambda1_text, "(0)");
    assert_eq!(z.d0.id(), "Z");
    assert_eq!(z.d1.id(), "Q");
    assert!(z.sampled.iter().all(|p| p.witness_integer_valued && !p.witness_in_polynomial_ring));
    assert!(!z.sampled.is_empty());

    let s = lambda_classify(&dom("Zloc:2,3")).unwrap();
    assert_eq!(s.lambda0_text, "(2), (3)");
    assert_eq!(s.sampled.iter().map(|p| p.residue_size).collect::<Vec<_>>(), vec![2, 3]);

    let q = lambda_classify(&dom("QX")).unwrap();
    assert_eq!(q.lambda0_text, "∅");
    assert_eq!(q.d0, IntDomain::RationalFunctions);
}

#[test]
fn decomposition_examples() {
    let s = dom("Zloc:2,3");
    let r = decomposition_check(&s, &[poly("X*(X-1)/2", &s)]).unwrap();
    assert!(r.lines[0].in_int_d && r.lines[0].in_d1_x && r.lines[0].in_int_d0);
    let z = dom("Z");
    let r = decomposition_check(&z, &[poly("X/2", &z)]).unwrap();
    assert!(!r.lines[0].in_int_d && !r.lines[0].in_int_d0);
    let qx = dom("QX");
    let r = decomposition_check(&qx, &[poly("Y/X", &qx), poly("(X^2+1)*Y^2 - 3/2", &qx)]).unwrap();
    assert!(!r.lines[0].in_int_d && !r.lines[0].in_d1_x);
    assert!(r.lines[1].in_int_d);
    assert_eq!(r.discrepancies, 0);
}

#[test]
fn prop34_readings() {
    assert_eq!(prop34_check(&dom("Zloc:2,3")).unwrap().status, Prop34Status::Pass);
    assert_eq!(prop34_check(&dom("QX")).unwrap().status, Prop34Status::Pass);
    let z = prop34_check(&dom("Z")).unwrap();
    assert_eq!(z.status, Prop34Status::DualReading);
    assert!(z.image_equals_lambda0 && !z.lambda0_closed_in_spec && z.full_image_closed);
    assert_eq!(z.readings.len(), 2);
}

#[test]
fn thm37_instances() {
    for id in ["Z", "Zloc:2,3", "QX"] {
        let r = thm37_check(&dom(id)).unwrap();
        assert!(r.condition1 && r.condition2 && r.equivalent, "{id}: {:?}", r.trace);
    }
    assert!(thm37_check(&IntDomain::RationalFunctions).is_err());
}

#[test]
fn lemma36_on_semilocal() {
    let r = lemma36_instance(&dom("Zloc:2,3")).unwrap();
    assert!(r.equal);
    assert!(lemma36_instance(&dom("QX")).is_err());
}

proptest! {
    #[test]
    fn binomial_and_evaluation_criteria_agree(cs in prop::collection::vec((-20i64..20, 1i64..13), 1..6)) {
        let text = cs.iter().enumerate().map(|(i, (n, d))| format!("{n}/{d}*X^{i}")).collect::<Vec<_>>().join(" + ");
        let z = dom("Z");
        let f = poly(&text, &z);
        prop_assert_eq!(int_membership(&f, &z).unwrap(), int_membership_binomial(&f, &z).unwrap());
    }
}
