use std::collections::BTreeMap;

use patchspec::arith::primes::nth_prime;
use patchspec::pvmd::*;
use patchspec::spectra::{ConstructibleBasicSet, PointMap, PointRef, SpectralMap, SubsetDesc};
use patchspec::star::CatalogDomain;
use patchspec::Error;

fn desc(id: &str) -> DomainDescriptor {
    descriptor_for_id(id).unwrap()
}

fn thm24(id: &str) -> Verdict {
    pvmd_check_closure(&desc(id)).unwrap()
}

/// Explicit map from `source` into `target`, sending each labeled point of
/// the source to the target point with the given label.
fn by_labels(source: &DomainDescriptor, target: &DomainDescriptor, pairs: &[(&str, &str)]) -> SpectralMap {
    let table: BTreeMap<PointRef, PointRef> = pairs
        .iter()
        .map(|(a, b)| (source.model.resolve(a).unwrap(), target.model.resolve(b).unwrap()))
        .collect();
    SpectralMap::new(source.model.clone(), target.model.clone(), PointMap::Explicit(table)).unwrap()
}

#[test]
fn closure_criterion_on_the_catalog() {
    let z = thm24("Z");
    assert_eq!(z.is_pvmd, Some(true));
    assert!(z.certificate.closure.as_deref().unwrap().contains("(0)"));
    assert_eq!(thm24("ZX").is_pvmd, Some(true));
    assert_eq!(thm24("Q").is_pvmd, Some(true));
    let ho = thm24("HO:4");
    assert_eq!(ho.is_pvmd, Some(false));
    assert_eq!(ho.certificate.offending.as_deref(), Some("Y_U"));
}

#[test]
fn negative_certificates_are_sound() {
    for n in [1, 2, 5] {
        let d = desc(&format!("HO:{n}"));
        let v = pvmd_check_closure(&d).unwrap();
        let p = v.certificate.offending_point.clone().unwrap();
        let closure = patchspec::spectra::patch_closure(&d.model, &d.y).unwrap();
        assert!(closure.contains(&p).unwrap());
        assert!(d.t_spec.contains(&p).unwrap());
        assert!(!d.essential.contains(&p).unwrap());
    }
}

#[test]
fn corollaries_on_examples() {
    assert_eq!(pvmd_check_essential_closed(&desc("Z")).unwrap().is_pvmd, Some(true));
    assert_eq!(pvmd_check_essential_closed(&desc("ZX")).unwrap().is_pvmd, Some(true));
    assert_eq!(pvmd_check_essential_closed(&desc("HO:3")).unwrap().is_pvmd, Some(false));
    assert_eq!(pvmd_check_compact(&desc("Z")).unwrap().is_pvmd, Some(true));
    assert_eq!(pvmd_check_compact(&desc("Zloc:2,3")).unwrap().is_pvmd, Some(true));
    assert!(matches!(pvmd_check_compact(&desc("HO:3")), Err(Error::UnsupportedModel(_))));
    assert_eq!(griffin_check(&desc("Z")).unwrap().is_pvmd, Some(true));
    assert_eq!(griffin_check(&desc("ZX")).unwrap().is_pvmd, Some(true));
    assert_eq!(griffin_check(&desc("Zloc:5")).unwrap().is_pvmd, Some(true));
    assert!(griffin_check(&desc("HO:3")).is_err());
    assert_eq!(check_or_unknown(&desc("HO:3"), Criterion::Griffin).is_pvmd, None);
}

#[test]
fn criteria_agree_across_the_catalog() {
    for id in catalog_ids() {
        let a = criterion_agreement(&desc(id));
        assert!(a.agree, "{id}: {:?}", a.verdicts);
    }
}

#[test]
fn prufer_domains_pass_every_applicable_criterion() {
    for id in catalog_ids() {
        let d = desc(id);
        if !d.flags.prufer {
            continue;
        }
        for c in [Criterion::Thm24, Criterion::Cor26, Criterion::Cor27, Criterion::Griffin] {
            let v = check_or_unknown(&d, c);
            assert_ne!(v.is_pvmd, Some(false), "{id} under {c}");
        }
    }
}

#[test]
fn pullbacks() {
    let cases = [("Z", 1), ("Q", 1), ("Z", 2), ("ZX", 2), ("Zloc:2,3", 3)];
    for (top, rank) in cases {
        let top = desc(top);
        let v = ValuationDesc { rank, residue_field: top.fraction_field.clone() };
        let (r, verdict) = pullback_verdict(&v, &top).unwrap();
        assert_eq!(verdict.is_pvmd, Some(true), "{}", r.id);
        assert_eq!(verdict.criterion, Criterion::Ex28);
    }
    let field = pullback_construct(&ValuationDesc { rank: 1, residue_field: "Q".into() }, &desc("Q")).unwrap();
    assert_eq!(field.describe(&field.model.full()), "P0, M_V");
    let wrong = ValuationDesc { rank: 1, residue_field: "Q(X)".into() };
    assert!(matches!(pullback_construct(&wrong, &desc("Z")), Err(Error::Precondition(_))));
    let ho = desc("HO:2");
    let v = ValuationDesc { rank: 1, residue_field: ho.fraction_field.clone() };
    assert!(matches!(pullback_construct(&v, &ho), Err(Error::Precondition(_))));
}

#[test]
fn transfer_and_localization() {
    let z = desc("Z");
    let zi = desc("Zi");
    let map = SpectralMap::gaussian_contraction(zi.model.clone(), z.model.clone()).unwrap();
    let v = transfer_check(&z, &zi, &map).unwrap();
    assert_eq!((v.is_pvmd, v.criterion), (Some(true), Criterion::Cor211));

    let id = SpectralMap::new(z.model.clone(), z.model.clone(), PointMap::Identity).unwrap();
    assert_eq!(transfer_check(&z, &z, &id).unwrap().is_pvmd, Some(true));

    let zx = desc("ZX");
    let b = desc("Zloc:2");
    let bad = by_labels(&b, &zx, &[("(0)", "(0)"), ("(2)", "(2, X)")]);
    assert_eq!(transfer_check(&zx, &b, &bad).unwrap_err(), Error::CenterNotTPrime("(2, X)".into()));

    let x = z.model.shape.subset_of(&[z.model.resolve("(2)").unwrap(), z.model.resolve("(3)").unwrap()]).unwrap();
    let (semilocal, v) = localization_intersection(&z, &x).unwrap();
    assert_eq!(semilocal.id, CatalogDomain::localized_only([2, 3]).id());
    assert_eq!(v.is_pvmd, Some(true));
    let zero = z.model.shape.singleton(&PointRef::Generic).unwrap();
    let (q, v) = localization_intersection(&z, &zero).unwrap();
    assert_eq!((q.id.as_str(), v.is_pvmd), ("Q", Some(true)));

    let cap = zx.model.shape.singleton(&zx.model.resolve("(2, X)").unwrap()).unwrap();
    assert_eq!(localization_intersection(&zx, &cap).unwrap_err(), Error::CenterNotTPrime("(2, X)".into()));
    let upper = zx.model.shape.singleton(&zx.model.resolve("(X^2 + 1)").unwrap()).unwrap();
    let (_, v) = localization_intersection(&zx, &upper).unwrap();
    assert_eq!(v.is_pvmd, Some(true));
}

#[test]
fn finite_intersections() {
    let d = desc("Zloc:2,3");
    let parts: Vec<IntersectionPart> = [2u64, 3]
        .iter()
        .map(|p| {
            let di = desc(&format!("Zloc:{p}"));
            let to_d = by_labels(&di, &d, &[("(0)", "(0)"), (&format!("({p})"), &format!("({p})"))]);
            IntersectionPart { descriptor: di, to_d }
        })
        .collect();
    let v = intersection_pvmd_check(&d, &IntersectionParts::Finite(parts), None).unwrap();
    assert_eq!((v.is_pvmd, v.criterion), (Some(true), Criterion::Cor215));

    let ho = desc("HO:2");
    let bad = IntersectionPart { descriptor: ho.clone(), to_d: SpectralMap::new(ho.model.clone(), ho.model.clone(), PointMap::Identity).unwrap() };
    assert!(matches!(intersection_pvmd_check(&ho, &IntersectionParts::Finite(vec![bad]), None), Err(Error::Precondition(_))));
}

fn local_part(z: &DomainDescriptor, j: usize) -> patchspec::Result<IntersectionPart> {
    let p = nth_prime(j);
    let di = descriptor_for_id(&format!("Zloc:{p}"))?;
    let mut table = BTreeMap::new();
    table.insert(di.model.resolve("(0)")?, PointRef::Generic);
    table.insert(di.model.resolve(&format!("({p})"))?, PointRef::Index(j));
    let to_d = SpectralMap::new(di.model.clone(), z.model.clone(), PointMap::Explicit(table))?;
    Ok(IntersectionPart { descriptor: di, to_d })
}

#[test]
fn indexed_intersection_of_all_local_rings() {
    let z = desc("Z");
    let part = |j: usize| local_part(&z, j);
    let parts = IntersectionParts::Indexed { family: "Z".into(), part: &part, sample: 12 };
    let neighborhood = |p: &PointRef| match p {
        PointRef::Index(j) => Some(ConstructibleBasicSet::new("1", [nth_prime(*j).to_string()])),
        _ => None,
    };
    let v = intersection_pvmd_check(&z, &parts, Some(&Finiteness::Neighborhood(&neighborhood))).unwrap();
    assert_eq!((v.is_pvmd, v.criterion), (Some(true), Criterion::Thm214));
    let cert = v.certificate.locally_finite.unwrap();
    assert!(cert.checks.iter().filter(|c| c.point != "(0)").all(|c| c.members_met == Some(1)));

    let ideal_only = |p: &PointRef| match p {
        PointRef::Index(j) => Some(vec![nth_prime(*j).to_string()]),
        _ => None,
    };
    let v = intersection_pvmd_check(&z, &parts, Some(&Finiteness::IdealOnly(&ideal_only))).unwrap();
    assert_eq!(v.is_pvmd, Some(true));
    let element_only = |p: &PointRef| match p {
        PointRef::Index(_) => Some("0".to_string()),
        _ => None,
    };
    let err = intersection_pvmd_check(&z, &parts, Some(&Finiteness::ElementOnly(&element_only)));
    assert!(err.is_err());
    assert!(matches!(intersection_pvmd_check(&z, &parts, None), Err(Error::Precondition(_))));
}

#[test]
fn subset_helpers_used_in_examples() {
    let z = desc("Z");
    assert!(matches!(z.y, SubsetDesc::Family { generic: false, .. }));
}
