use patchspec::ho::{ho_demo, ho_fip_witness, ho_in_core, ho_in_d, ho_in_mi, ho_limit_contains, HoConfig};
use patchspec::pvmd::descriptor_for_id;
use proptest::prelude::*;

#[test]
fn memberships_at_level_three() {
    let cfg = HoConfig::new(3).unwrap();
    let t = cfg.parse("T").unwrap();
    assert!(ho_in_d(&t) && ho_in_core(&t) && ho_limit_contains(&t));
    let one = cfg.parse("1").unwrap();
    assert!(ho_in_d(&one) && !ho_in_core(&one));
    let q = cfg.parse("T/U").unwrap();
    assert!(!ho_in_d(&q));
    let x = cfg.parse("X0").unwrap();
    assert!(!ho_in_mi(&x, 1).unwrap());
}

#[test]
fn every_level_is_not_pvmd() {
    for n in [2, 3, 5] {
        let d = descriptor_for_id(&format!("HO:{n}")).unwrap();
        let v = patchspec::pvmd::check(&d, patchspec::pvmd::Criterion::Thm24).unwrap();
        assert_eq!(v.is_pvmd, Some(false), "HO:{n}");
        assert_eq!(v.certificate.offending.as_deref(), Some("Y_U"));
    }
}

#[test]
fn demo_is_deterministic_in_the_seed() {
    let cfg = HoConfig::new(4).unwrap();
    let fs = [cfg.parse("T").unwrap(), cfg.parse("U").unwrap()];
    let a = render(&ho_demo(&cfg, &fs, 3).unwrap());
    let b = render(&ho_demo(&cfg, &fs, 3).unwrap());
    assert_eq!(a, b);
}

fn render(d: &patchspec::ho::HoDemo) -> String {
    format!("{d:?}")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn fip_bound_covers_the_family(a in 0usize..4, b in 0usize..4) {
        let cfg = HoConfig::new(4).unwrap();
        let fs = [cfg.parse(&format!("T + X{a}*U")).unwrap(), cfg.parse(&format!("U*X{b}")).unwrap()];
        let w = ho_fip_witness(&fs).unwrap();
        prop_assert!(w.tail_holds);
        for c in w.checks.iter().filter(|c| c.index > w.bound) {
            prop_assert!(c.in_mi);
        }
    }
}
