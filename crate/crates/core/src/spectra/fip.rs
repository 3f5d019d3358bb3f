use super::model::SpectrumModel;
use super::shape::project;
use super::subset::SubsetDesc;
use super::ultrafilter::UltrafilterDesc;
use crate::{Error, Result};

/// Extends a family of subsets of `Y` with the finite intersection property
/// to a representable ultrafilter.
///
/// `explicit` lists finitely many members. `cofinite_in` names a family
/// whose cofinite index sets are all declared members; those meet every
/// infinite set, so they impose no further check.
pub fn extend_fip(m: &SpectrumModel, y: &SubsetDesc, explicit: &[SubsetDesc], cofinite_in: Option<&str>) -> Result<UltrafilterDesc> {
    m.shape.validate(y)?;
    let traces: Vec<SubsetDesc> = explicit.iter().map(|f| f.intersection(y)).collect::<Result<_>>()?;
    for (i, a) in traces.iter().enumerate() {
        if a.is_empty() {
            return Err(Error::NoFiniteIntersection(format!("member {i} misses Y")));
        }
        for (j, b) in traces.iter().enumerate().skip(i + 1) {
            if a.intersection(b)?.is_empty() {
                return Err(Error::NoFiniteIntersection(format!("members {i} and {j} are disjoint on Y")));
            }
        }
    }
    let mut meet = y.clone();
    for t in &traces {
        meet = meet.intersection(t)?;
    }
    if meet.is_empty() {
        return Err(Error::NoFiniteIntersection("the explicit members have empty common intersection".into()));
    }
    let mut infinite_family = None;
    for f in m.shape.families() {
        let path = m.shape.family_path(&f.name).expect("listed family");
        if let SubsetDesc::Family { indices, .. } = project(&path, &meet)? {
            if indices.is_infinite() {
                infinite_family = Some((f.name.clone(), indices.clone()));
                break;
            }
        }
    }
    match (infinite_family, cofinite_in) {
        (Some((family, indices)), rule) => {
            if rule.is_some_and(|r| r != family) {
                return Err(Error::UltrafilterNotSupported(format!(
                    "cofinite rule lives in {} but the explicit members concentrate on {family}",
                    rule.unwrap_or_default()
                )));
            }
            Ok(UltrafilterDesc::NonprincipalClass { family, concentrated_on: indices })
        }
        (None, Some(rule)) => Err(Error::UltrafilterNotSupported(format!(
            "explicit members meet in a finite set, which cofinite members of {rule} may exclude"
        ))),
        (None, None) => {
            let least = m.shape.finite_members(&meet)?.into_iter().min().expect("nonempty");
            Ok(UltrafilterDesc::Principal(least))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::ActivePrimes;
    use crate::spectra::{FinitePoset, IndexSet, PointRef, Shape};

    #[test]
    fn principal_and_empty() {
        let s = Shape::Poset(FinitePoset::new(&["a", "b"], &[]).unwrap());
        let m = SpectrumModel::bare("ab", s);
        let y = m.full();
        let u = extend_fip(&m, &y, &[SubsetDesc::poset(["a"]), SubsetDesc::poset(["a", "b"])], None).unwrap();
        assert_eq!(u, UltrafilterDesc::Principal(PointRef::Id("a".into())));
        let e = extend_fip(&m, &y, &[SubsetDesc::poset(["a"]), SubsetDesc::poset(["b"])], None);
        assert!(matches!(e, Err(Error::NoFiniteIntersection(_))));
    }

    #[test]
    fn cofinite_family_gives_nonprincipal() {
        let z = SpectrumModel::integers(ActivePrimes::all());
        let y = SubsetDesc::family(false, IndexSet::all());
        let members = [SubsetDesc::family(false, IndexSet::cofinite([0, 1])), SubsetDesc::family(true, IndexSet::cofinite([4]))];
        let u = extend_fip(&z, &y, &members, Some("Z")).unwrap();
        for f in &members {
            assert_eq!(u.contains(&z, &f.intersection(&y).unwrap()).unwrap(), Some(true));
        }
    }
}
