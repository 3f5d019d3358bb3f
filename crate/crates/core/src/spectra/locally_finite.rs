use serde::Serialize;

use super::closure::is_patch_closed;
use super::indexset::IndexSet;
use super::model::SpectrumModel;
use super::shape::{project, set_at, PathStep};
use super::subset::{PointRef, SubsetDesc};
use crate::{Error, Result};

/// `D(f) ∩ V(a_1, ..., a_k)`; the symbol `1` denotes the whole space for `D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructibleBasicSet {
    pub f: String,
    pub a: Vec<String>,
}

impl ConstructibleBasicSet {
    pub fn new(f: impl Into<String>, a: impl IntoIterator<Item = impl Into<String>>) -> Self {
        ConstructibleBasicSet { f: f.into(), a: a.into_iter().map(Into::into).collect() }
    }

    pub fn whole() -> Self {
        ConstructibleBasicSet { f: "1".into(), a: vec![] }
    }

    pub fn evaluate(&self, m: &SpectrumModel) -> Result<SubsetDesc> {
        let mut out = if self.f == "1" { m.full() } else { m.shape.complement(&m.vanishing(&self.f)?)? };
        for a in &self.a {
            out = out.intersection(&m.vanishing(a)?)?;
        }
        Ok(out)
    }
}

/// The members of a union, listed or given by an index rule.
#[derive(Debug, Clone)]
pub enum MemberFamily {
    Explicit(Vec<SubsetDesc>),
    /// Member `j` is the closed point `j` of `family`, together with the
    /// family generic when `with_generic` holds.
    PerIndex { family: String, with_generic: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessCheck {
    pub point: String,
    pub in_union: bool,
    pub neighborhood: Option<ConstructibleBasicSet>,
    /// Members met by the neighborhood; `None` means infinitely many.
    pub members_met: Option<usize>,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocallyFiniteCertificate {
    pub union: SubsetDesc,
    pub patch_closed: bool,
    pub checks: Vec<WitnessCheck>,
    /// Points of the union where no finite witness was found; harmless for
    /// closedness, reported for inspection.
    pub failing_inside_union: Vec<String>,
}

/// Union of a locally finite family of patch-closed sets, with a certificate.
///
/// A witness is demanded at each sampled point outside the union; a point
/// outside the union with no neighborhood meeting finitely many members is
/// an error. Points inside the union never obstruct closedness, so witness
/// failures there are only recorded.
pub fn locally_finite_union(
    m: &SpectrumModel,
    members: &MemberFamily,
    witness: &dyn Fn(&PointRef) -> Option<ConstructibleBasicSet>,
    sample: usize,
) -> Result<LocallyFiniteCertificate> {
    let union = match members {
        MemberFamily::Explicit(list) => {
            let mut u = m.empty();
            for (i, c) in list.iter().enumerate() {
                m.shape.validate(c)?;
                if !is_patch_closed(m, c)? {
                    return Err(Error::MemberNotClosed(i));
                }
                u = u.union(c)?;
            }
            u
        }
        MemberFamily::PerIndex { family, with_generic } => {
            let path = m.shape.family_path(family).ok_or_else(|| Error::UnknownPoint(format!("family {family}")))?;
            lift(m, &path, SubsetDesc::family(*with_generic, IndexSet::all()))?
        }
    };
    let mut checks = Vec::new();
    let mut outside_failures = Vec::new();
    let mut inside_failures = Vec::new();
    for p in m.shape.points(sample) {
        let in_union = union.contains(&p)?;
        let nb = witness(&p);
        let met = match &nb {
            None => None,
            Some(n) => {
                let set = n.evaluate(m)?;
                if !set.contains(&p)? {
                    return Err(Error::WitnessFailed(format!("neighborhood of {} does not contain it", m.label(&p))));
                }
                members_met(m, members, &set)?
            }
        };
        let ok = met.is_some();
        if !ok {
            if in_union {
                inside_failures.push(m.label(&p));
            } else {
                outside_failures.push(m.label(&p));
            }
        }
        checks.push(WitnessCheck { point: m.label(&p), in_union, neighborhood: nb, members_met: met, ok });
    }
    if !outside_failures.is_empty() {
        return Err(Error::NotLocallyFinite(outside_failures));
    }
    if !is_patch_closed(m, &union)? {
        return Err(Error::NotLocallyFinite(vec!["a point beyond the sampled range".into()]));
    }
    Ok(LocallyFiniteCertificate { union, patch_closed: true, checks, failing_inside_union: inside_failures })
}

fn lift(m: &SpectrumModel, path: &[PathStep], inner: SubsetDesc) -> Result<SubsetDesc> {
    let mut out = m.empty();
    set_at(&mut out, path, inner)?;
    Ok(out)
}

fn members_met(m: &SpectrumModel, members: &MemberFamily, set: &SubsetDesc) -> Result<Option<usize>> {
    match members {
        MemberFamily::Explicit(list) => {
            let mut n = 0;
            for c in list {
                if !c.intersection(set)?.is_empty() {
                    n += 1;
                }
            }
            Ok(Some(n))
        }
        MemberFamily::PerIndex { family, with_generic } => {
            let path = m.shape.family_path(family).expect("checked");
            match project(&path, set)? {
                SubsetDesc::Family { generic, indices, .. } => {
                    if (*with_generic && *generic) || indices.is_infinite() {
                        Ok(None)
                    } else {
                        Ok(Some(indices.iter().count()))
                    }
                }
                _ => Err(Error::ShapeMismatch("expected a family subset".into())),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::ActivePrimes;
    use crate::arith::primes::nth_prime;

    fn prime_witness(p: &PointRef) -> Option<ConstructibleBasicSet> {
        match p {
            PointRef::Index(j) => Some(ConstructibleBasicSet::new("1", [nth_prime(*j).to_string()])),
            _ => Some(ConstructibleBasicSet::new("2", Vec::<String>::new())),
        }
    }

    #[test]
    fn closed_points_alone_fail_at_generic() {
        let z = SpectrumModel::integers(ActivePrimes::all());
        let fam = MemberFamily::PerIndex { family: "Z".into(), with_generic: false };
        let err = locally_finite_union(&z, &fam, &prime_witness, 16).unwrap_err();
        assert_eq!(err, Error::NotLocallyFinite(vec!["(0)".into()]));
    }

    #[test]
    fn with_generic_is_closed() {
        let z = SpectrumModel::integers(ActivePrimes::all());
        let fam = MemberFamily::PerIndex { family: "Z".into(), with_generic: true };
        let cert = locally_finite_union(&z, &fam, &prime_witness, 16).unwrap();
        assert_eq!(cert.union, z.full());
        assert_eq!(cert.failing_inside_union, vec!["(0)".to_string()]);
    }

    #[test]
    fn two_finite_sets() {
        let z = SpectrumModel::integers(ActivePrimes::all());
        let a = SubsetDesc::family(false, IndexSet::finite([0]));
        let b = SubsetDesc::family(false, IndexSet::finite([3]));
        let fam = MemberFamily::Explicit(vec![a, b]);
        let cert = locally_finite_union(&z, &fam, &|_| Some(ConstructibleBasicSet::whole()), 8).unwrap();
        assert_eq!(cert.union, SubsetDesc::family(false, IndexSet::finite([0, 3])));
    }
}
