use patchspec::spectra::file::{parse_model, parse_subset};
use patchspec::spectra::{
    extend_fip, generization, is_patch_closed, is_zariski_closed, patch_closure, specialization, ultrafilter_limit,
    zariski_closure, IndexSet, PointRef, SpectrumModel, SubsetDesc, UltrafilterDesc,
};
use proptest::prelude::*;

fn spec_z() -> SpectrumModel {
    parse_model("family Z generic (0)\nlabels primes\nelements integers\n").unwrap()
}

const DIAMOND: &str = "point z\npoint p\npoint q\npoint m\nle z p\nle z q\nle p m\nle q m\n\
                       elem f vanishes p m\nelem g vanishes q m\n";

fn index_set() -> impl Strategy<Value = IndexSet> {
    prop_oneof![
        prop::collection::btree_set(0usize..40, 0..6).prop_map(IndexSet::finite),
        prop::collection::btree_set(0usize..40, 0..6).prop_map(IndexSet::cofinite),
        (2usize..5, prop::collection::btree_set(0usize..5, 1..3))
            .prop_map(|(m, r)| IndexSet::periodic(m, r.into_iter().filter(|&x| x < m))),
    ]
}

#[test]
fn spec_z_closures() {
    let m = spec_z();
    let y = parse_subset("in (2) (3) (5)\n", &m).unwrap();
    assert_eq!(patch_closure(&m, &y).unwrap(), y);
    assert_eq!(m.describe(&zariski_closure(&m, &y).unwrap()), "(2), (3), (5)");
    let y = parse_subset("cofinite-of Z except 0\n", &m).unwrap();
    let c = patch_closure(&m, &y).unwrap();
    assert!(c.contains(&PointRef::Generic).unwrap());
    assert_eq!(c.difference(&y).unwrap(), SubsetDesc::family(true, IndexSet::empty()));
    assert!(!is_patch_closed(&m, &y).unwrap());
    assert!(is_patch_closed(&m, &c).unwrap());
    assert!(!is_zariski_closed(&m, &c).unwrap());
}

#[test]
fn poset_topologies() {
    let m = parse_model(DIAMOND).unwrap();
    let y = parse_subset("in p\n", &m).unwrap();
    assert_eq!(m.describe(&zariski_closure(&m, &y).unwrap()), "m, p");
    assert_eq!(m.describe(&generization(&m, &y).unwrap()), "p, z");
    assert_eq!(m.describe(&specialization(&m, &y).unwrap()), "m, p");
    // Finite spectra carry the discrete patch topology.
    assert_eq!(patch_closure(&m, &y).unwrap(), y);
    assert_eq!(m.describe(&m.vanishing("f").unwrap()), "m, p");
    assert!(parse_subset("in nowhere\n", &m).is_err());
    assert!(parse_model("point a\nle a b\n").is_err());
}

#[test]
fn nonprincipal_limit_is_generic() {
    let m = spec_z();
    let y = SubsetDesc::family(false, IndexSet::all());
    let p = ultrafilter_limit(&m, &y, &UltrafilterDesc::nonprincipal("Z")).unwrap();
    assert_eq!(p, PointRef::Generic);
}

#[test]
fn fip_extension_of_periodic_sets() {
    let m = spec_z();
    let y = SubsetDesc::family(false, IndexSet::all());
    let evens = SubsetDesc::family(false, IndexSet::periodic(2, [0]));
    let u = extend_fip(&m, &y, &[evens.clone(), SubsetDesc::family(false, IndexSet::cofinite([4]))], Some("Z")).unwrap();
    assert_eq!(u.contains(&m, &evens).unwrap(), Some(true));
    assert_eq!(ultrafilter_limit(&m, &y, &u).unwrap(), PointRef::Generic);
    let odds = SubsetDesc::family(false, IndexSet::periodic(2, [1]));
    assert!(extend_fip(&m, &y, &[evens, odds], None).is_err());
}

proptest! {
    #[test]
    fn closure_laws_on_spec_z(ix in index_set(), generic in any::<bool>(), jx in index_set()) {
        let m = spec_z();
        let y = SubsetDesc::family(generic, ix.clone());
        let p = patch_closure(&m, &y).unwrap();
        let z = zariski_closure(&m, &y).unwrap();
        prop_assert!(y.is_subset(&p).unwrap());
        prop_assert_eq!(patch_closure(&m, &p).unwrap(), p.clone());
        prop_assert!(p.is_subset(&z).unwrap());
        prop_assert_eq!(zariski_closure(&m, &z).unwrap(), z.clone());
        // The generic point is a patch limit exactly of infinite sets.
        prop_assert_eq!(p.contains(&PointRef::Generic).unwrap(), generic || ix.is_infinite());
        let w = SubsetDesc::family(generic, ix.union(&jx));
        prop_assert!(p.is_subset(&patch_closure(&m, &w).unwrap()).unwrap());
    }
}
