use serde::Serialize;

use super::indexset::IndexSet;
use super::model::SpectrumModel;
use super::shape::{project, wrap_point, PathStep};
use super::subset::{PointRef, SubsetDesc};
use crate::{Error, Result};

/// A representable ultrafilter on a subset of a model.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum UltrafilterDesc {
    Principal(PointRef),
    /// Any nonprincipal ultrafilter on the closed points of `family` that
    /// contains the infinite index set `concentrated_on`.
    NonprincipalClass { family: String, concentrated_on: IndexSet },
}

impl UltrafilterDesc {
    /// The nonprincipal class supported on all closed points of `family`.
    pub fn nonprincipal(family: impl Into<String>) -> Self {
        UltrafilterDesc::NonprincipalClass { family: family.into(), concentrated_on: IndexSet::all() }
    }

    /// Whether `s` belongs to the ultrafilter; `None` when the answer differs
    /// between members of a nonprincipal class.
    pub fn contains(&self, m: &SpectrumModel, s: &SubsetDesc) -> Result<Option<bool>> {
        match self {
            UltrafilterDesc::Principal(p) => Ok(Some(s.contains(p)?)),
            UltrafilterDesc::NonprincipalClass { family, concentrated_on } => {
                let path = family_path(m, family)?;
                let indices = family_indices(project(&path, s)?)?;
                if concentrated_on.difference(indices).is_finite() {
                    Ok(Some(true))
                } else if concentrated_on.intersection(indices).is_finite() {
                    Ok(Some(false))
                } else {
                    Ok(None)
                }
            }
        }
    }
}

fn family_path(m: &SpectrumModel, family: &str) -> Result<Vec<PathStep>> {
    m.shape.family_path(family).ok_or_else(|| Error::UnknownPoint(format!("family {family}")))
}

fn family_indices(s: &SubsetDesc) -> Result<&IndexSet> {
    match s {
        SubsetDesc::Family { indices, .. } => Ok(indices),
        _ => Err(Error::ShapeMismatch("expected a family subset".into())),
    }
}

/// The limit point `Y_U = {a : V(a) ∩ Y ∈ U}`.
///
/// A principal ultrafilter converges to its point. Every nonzero element of a
/// family vanishes on a set that is finite or cofinite, so a nonprincipal
/// class converges to the family generic.
pub fn ultrafilter_limit(m: &SpectrumModel, y: &SubsetDesc, u: &UltrafilterDesc) -> Result<PointRef> {
    m.shape.validate(y)?;
    match u {
        UltrafilterDesc::Principal(p) => {
            m.shape.validate_point(p)?;
            if y.contains(p)? {
                Ok(p.clone())
            } else {
                Err(Error::UltrafilterNotSupported(format!("{} is not in Y", m.label(p))))
            }
        }
        UltrafilterDesc::NonprincipalClass { family, concentrated_on } => {
            let path = family_path(m, family)?;
            let on_y = family_indices(project(&path, y)?)?;
            if on_y.is_finite() {
                return Err(Error::UltrafilterNotSupported(format!("Y meets family {family} in a finite set")));
            }
            if concentrated_on.is_finite() || !concentrated_on.difference(on_y).is_finite() {
                return Err(Error::UltrafilterNotSupported("support is not an infinite subset of Y".into()));
            }
            Ok(wrap_point(&path, PointRef::Generic))
        }
    }
}

/// All ultrafilters on a finite `Y`: one principal ultrafilter per point.
pub fn principal_ultrafilters(m: &SpectrumModel, y: &SubsetDesc) -> Result<Vec<UltrafilterDesc>> {
    Ok(m.shape.finite_members(y)?.into_iter().map(UltrafilterDesc::Principal).collect())
}

/// Independent route to the limit: collect the sampled elements `a` with
/// `V(a) ∩ Y ∈ U` and find the candidate point with exactly those elements.
pub fn limit_from_elements(m: &SpectrumModel, y: &SubsetDesc, u: &UltrafilterDesc, sample: usize) -> Result<Option<PointRef>> {
    let mut ideal = Vec::new();
    for sym in m.elements.symbols() {
        let trace = m.vanishing(&sym)?.intersection(y)?;
        match u.contains(m, &trace)? {
            Some(true) => ideal.push(sym),
            Some(false) => {}
            None => return Err(Error::UltrafilterNotSupported(format!("membership of V({sym}) ∩ Y is undetermined"))),
        }
    }
    for p in m.shape.points(sample) {
        if m.ideal_at(&p)? == ideal {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

/// Checks the ultrafilter axioms on `Y` against a list of subsets of `Y`:
/// `Y ∈ U`, `∅ ∉ U`, closure under intersection and supersets, and
/// exactly one of `A`, `Y \ A` in `U`.
pub fn ultrafilter_axioms_hold(m: &SpectrumModel, y: &SubsetDesc, u: &UltrafilterDesc, subsets: &[SubsetDesc]) -> Result<bool> {
    let has = |s: &SubsetDesc| -> Result<Option<bool>> { u.contains(m, &s.intersection(y)?) };
    if has(y)? != Some(true) || has(&m.empty())? != Some(false) {
        return Ok(false);
    }
    for a in subsets {
        let a = a.intersection(y)?;
        let (ina, inc) = (has(&a)?, has(&y.difference(&a)?)?);
        if let (Some(x), Some(z)) = (ina, inc) {
            if x == z {
                return Ok(false);
            }
        }
        for b in subsets {
            let b = b.intersection(y)?;
            let inb = has(&b)?;
            if ina == Some(true) && inb == Some(true) && has(&a.intersection(&b)?)? != Some(true) {
                return Ok(false);
            }
            if ina == Some(true) && a.is_subset(&b)? && inb != Some(true) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::ActivePrimes;

    #[test]
    fn limits_on_spec_z() {
        let z = SpectrumModel::integers(ActivePrimes::all());
        let max = SubsetDesc::family(false, IndexSet::all());
        let u = UltrafilterDesc::nonprincipal("Z");
        assert_eq!(ultrafilter_limit(&z, &max, &u).unwrap(), PointRef::Generic);
        assert_eq!(limit_from_elements(&z, &max, &u, 16).unwrap(), Some(PointRef::Generic));
        let p = UltrafilterDesc::Principal(PointRef::Index(5));
        assert_eq!(ultrafilter_limit(&z, &max, &p).unwrap(), PointRef::Index(5));
        let finite = SubsetDesc::family(false, IndexSet::finite([1, 2]));
        assert!(matches!(ultrafilter_limit(&z, &finite, &u), Err(Error::UltrafilterNotSupported(_))));
    }
}
