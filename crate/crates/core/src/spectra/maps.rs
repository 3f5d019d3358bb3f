use std::collections::BTreeMap;

use super::closure::is_patch_closed;
use super::indexset::IndexSet;
use super::model::SpectrumModel;
use super::shape::Shape;
use super::subset::{PointRef, SubsetDesc};
use crate::arith::primes::{gaussian_fiber, gaussian_prime_at, nth_prime, prime_index};
use crate::{Error, Result};

/// How a spectral map acts on points.
#[derive(Debug, Clone)]
pub enum PointMap {
    Identity,
    /// The source is the top model of an ordinal-sum target.
    TopEmbedding,
    /// Family to family, generic to generic, closed point `j` to `image_of(j)`;
    /// `fiber_of(k)` lists the finite preimage of closed point `k`.
    IndexContraction { image_of: fn(usize) -> usize, fiber_of: fn(usize) -> Vec<usize> },
    /// A table on a finite source.
    Explicit(BTreeMap<PointRef, PointRef>),
}

/// A continuous map between spectrum models, checked at construction.
#[derive(Debug, Clone)]
pub struct SpectralMap {
    pub source: SpectrumModel,
    pub target: SpectrumModel,
    pub rule: PointMap,
}

const SAMPLE: usize = 24;

impl SpectralMap {
    /// Validates monotonicity on sampled comparable pairs and that each target
    /// element understood by the source has `V_source(e) = f⁻¹(V_target(e))`.
    pub fn new(source: SpectrumModel, target: SpectrumModel, rule: PointMap) -> Result<Self> {
        match (&rule, &source.shape, &target.shape) {
            (PointMap::Identity, s, t) if s == t => {}
            (PointMap::TopEmbedding, s, Shape::OrdinalSum { top, .. }) if s == top.as_ref() => {}
            (PointMap::IndexContraction { .. }, Shape::Family(_), Shape::Family(_)) => {}
            (PointMap::Explicit(_), s, _) if s.is_finite() => {}
            _ => return Err(Error::InvalidMap("map rule does not fit the model shapes".into())),
        }
        let map = SpectralMap { source, target, rule };
        let pts = map.source.shape.points(SAMPLE);
        for a in &pts {
            let fa = map.apply(a)?;
            for b in &pts {
                if map.source.shape.leq(a, b)? && !map.target.shape.leq(&fa, &map.apply(b)?)? {
                    return Err(Error::InvalidMap(format!(
                        "not monotone: {} ⊆ {}",
                        map.source.label(a),
                        map.source.label(b)
                    )));
                }
            }
        }
        for sym in map.target.elements.symbols() {
            let Ok(vs) = map.source.vanishing(&sym) else { continue };
            let pulled = map.preimage(&map.target.vanishing(&sym)?)?;
            if pulled != vs {
                return Err(Error::InvalidMap(format!("vanishing set of {sym} does not pull back")));
            }
        }
        Ok(map)
    }

    /// Contraction from the maximal spectrum model of `Z[i]` to that of `Z`.
    pub fn gaussian_contraction(source: SpectrumModel, target: SpectrumModel) -> Result<Self> {
        fn image_of(j: usize) -> usize {
            prime_index(gaussian_prime_at(j).0).expect("prime")
        }
        fn fiber_of(k: usize) -> Vec<usize> {
            gaussian_fiber(nth_prime(k))
        }
        SpectralMap::new(source, target, PointMap::IndexContraction { image_of, fiber_of })
    }

    pub fn apply(&self, p: &PointRef) -> Result<PointRef> {
        self.source.shape.validate_point(p)?;
        match &self.rule {
            PointMap::Identity => Ok(p.clone()),
            PointMap::TopEmbedding => Ok(PointRef::top(p.clone())),
            PointMap::IndexContraction { image_of, .. } => match p {
                PointRef::Generic => Ok(PointRef::Generic),
                PointRef::Index(j) => Ok(PointRef::Index(image_of(*j))),
                _ => Err(Error::InvalidMap("contraction handles only generic and closed points".into())),
            },
            PointMap::Explicit(table) => {
                table.get(p).cloned().ok_or_else(|| Error::InvalidMap(format!("no image for {}", self.source.label(p))))
            }
        }
    }

    pub fn preimage(&self, s: &SubsetDesc) -> Result<SubsetDesc> {
        self.target.shape.validate(s)?;
        match &self.rule {
            PointMap::Identity => Ok(s.clone()),
            PointMap::TopEmbedding => match s {
                SubsetDesc::Ordinal { top, .. } => Ok(top.as_ref().clone()),
                _ => Err(Error::ShapeMismatch("expected an ordinal-sum subset".into())),
            },
            PointMap::IndexContraction { fiber_of, .. } => match s {
                SubsetDesc::Family { generic, indices, caps } if caps.is_empty() => {
                    let pre = |set: &BTreeIndices| IndexSet::finite(set.iter().flat_map(|&k| fiber_of(k)));
                    let indices = if let Some(members) = indices.finite_members() {
                        pre(members)
                    } else if let Some(except) = indices.cofinite_exceptions() {
                        pre(except).complement()
                    } else {
                        return Err(Error::Unrepresentable("preimage of a periodic index set".into()));
                    };
                    Ok(SubsetDesc::family(*generic, indices))
                }
                _ => Err(Error::Unrepresentable("contraction acts on generic and closed points only".into())),
            },
            PointMap::Explicit(_) => {
                let mut hits = Vec::new();
                for p in self.source.shape.points(0) {
                    if s.contains(&self.apply(&p)?)? {
                        hits.push(p);
                    }
                }
                self.source.shape.subset_of(&hits)
            }
        }
    }

    pub fn image(&self, s: &SubsetDesc) -> Result<SubsetDesc> {
        self.source.shape.validate(s)?;
        match &self.rule {
            PointMap::Identity => Ok(s.clone()),
            PointMap::TopEmbedding => {
                Ok(SubsetDesc::Ordinal { bottom: Default::default(), top: Box::new(s.clone()) })
            }
            PointMap::IndexContraction { image_of, fiber_of } => match s {
                SubsetDesc::Family { generic, indices, caps } if caps.is_empty() => {
                    let indices = if let Some(members) = indices.finite_members() {
                        IndexSet::finite(members.iter().map(|&j| image_of(j)))
                    } else if let Some(except) = indices.cofinite_exceptions() {
                        let missed = except
                            .iter()
                            .map(|&j| image_of(j))
                            .filter(|&k| fiber_of(k).iter().all(|j| except.contains(j)));
                        IndexSet::cofinite(missed)
                    } else {
                        return Err(Error::Unrepresentable("image of a periodic index set".into()));
                    };
                    Ok(SubsetDesc::family(*generic, indices))
                }
                _ => Err(Error::Unrepresentable("contraction acts on generic and closed points only".into())),
            },
            PointMap::Explicit(_) => {
                let pts = self.source.shape.finite_members(s)?;
                let imgs = pts.iter().map(|p| self.apply(p)).collect::<Result<Vec<_>>>()?;
                self.target.shape.subset_of(&imgs)
            }
        }
    }

    /// Image of a patch-closed set, checked to be patch-closed again.
    pub fn image_patch_closed(&self, s: &SubsetDesc) -> Result<SubsetDesc> {
        if !is_patch_closed(&self.source, s)? {
            return Err(Error::Precondition("source subset is not patch-closed".into()));
        }
        let img = self.image(s)?;
        if !is_patch_closed(&self.target, &img)? {
            return Err(Error::InvalidMap("image of a patch-closed set is not patch-closed".into()));
        }
        Ok(img)
    }
}

type BTreeIndices = std::collections::BTreeSet<usize>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::ActivePrimes;
    use crate::spectra::{Family, IndexLabels, IntegerElements};
    use std::sync::Arc;

    fn zi() -> SpectrumModel {
        let shape = Shape::Family(Family::new("Zi", "(0)", IndexLabels::Gaussian));
        SpectrumModel::new("Zi", shape, Arc::new(IntegerElements)).unwrap()
    }

    #[test]
    fn gaussian_contraction_is_surjective_on_maximals() {
        let z = SpectrumModel::integers(ActivePrimes::all());
        let map = SpectralMap::gaussian_contraction(zi(), z).unwrap();
        let all_max = SubsetDesc::family(false, IndexSet::all());
        assert_eq!(map.image(&all_max).unwrap(), all_max);
        let above5 = map.preimage(&SubsetDesc::family(false, IndexSet::singleton(2))).unwrap();
        assert_eq!(above5, SubsetDesc::family(false, IndexSet::finite([2, 3])));
        let missing_one = SubsetDesc::family(true, IndexSet::cofinite([2]));
        assert_eq!(map.image(&missing_one).unwrap(), SubsetDesc::family(true, IndexSet::all()));
        let closed = SubsetDesc::family(true, IndexSet::cofinite([2, 3]));
        assert_eq!(map.image_patch_closed(&closed).unwrap(), SubsetDesc::family(true, IndexSet::cofinite([2])));
    }

    #[test]
    fn identity() {
        let z = SpectrumModel::integers(ActivePrimes::all());
        let map = SpectralMap::new(z.clone(), z.clone(), PointMap::Identity).unwrap();
        let s = SubsetDesc::family(false, IndexSet::finite([1, 4]));
        assert_eq!(map.preimage(&s).unwrap(), s);
    }
}
