use serde::Serialize;

use super::model::SpectrumModel;
use super::shape::Shape;
use super::subset::SubsetDesc;
use crate::{Error, Result};

/// Smallest Zariski-closed set containing `y`.
///
/// Closed sets are specialization-closed, but in a model with a family an
/// up-closed infinite set of closed points still misses its limit, so the
/// patch limits are added before taking the up-closure.
pub fn zariski_closure(m: &SpectrumModel, y: &SubsetDesc) -> Result<SubsetDesc> {
    let patch = m.shape.patch_closure(y)?;
    m.shape.up_closure(&patch)
}

/// `Y` together with every ultrafilter limit point of `Y`.
pub fn patch_closure(m: &SpectrumModel, y: &SubsetDesc) -> Result<SubsetDesc> {
    m.shape.patch_closure(y)
}

pub fn is_patch_closed(m: &SpectrumModel, y: &SubsetDesc) -> Result<bool> {
    Ok(&patch_closure(m, y)? == y)
}

pub fn is_zariski_closed(m: &SpectrumModel, y: &SubsetDesc) -> Result<bool> {
    Ok(&zariski_closure(m, y)? == y)
}

/// Every prime contained in some member of `Y`.
pub fn generization(m: &SpectrumModel, y: &SubsetDesc) -> Result<SubsetDesc> {
    m.shape.down_closure(y)
}

/// Every prime containing some member of `Y`.
pub fn specialization(m: &SpectrumModel, y: &SubsetDesc) -> Result<SubsetDesc> {
    m.shape.up_closure(y)
}

/// Evidence for Zariski quasi-compactness of a subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompactnessCertificate {
    pub compact: bool,
    /// Elements `f` whose basic opens `D(f)` cover `Y`; empty when `Y` is finite.
    pub cover: Vec<String>,
    pub reason: String,
}

/// Quasi-compactness on finite posets and on single families.
pub fn is_quasi_compact(m: &SpectrumModel, y: &SubsetDesc) -> Result<CompactnessCertificate> {
    m.shape.validate(y)?;
    match &m.shape {
        Shape::Poset(_) => Ok(CompactnessCertificate { compact: true, cover: vec![], reason: "finite space".into() }),
        Shape::Family(_) => {
            if y.is_finite() {
                return Ok(CompactnessCertificate { compact: true, cover: vec![], reason: "finite subset".into() });
            }
            let syms = m.elements.symbols();
            let full = m.full();
            let mut opens = Vec::new();
            for s in &syms {
                let v = m.vanishing(s)?;
                if v != full {
                    opens.push((s.clone(), v));
                }
            }
            for (i, (a, va)) in opens.iter().enumerate() {
                for (b, vb) in &opens[i + 1..] {
                    if va.intersection(vb)?.intersection(y)?.is_empty() {
                        return Ok(CompactnessCertificate {
                            compact: true,
                            cover: vec![a.clone(), b.clone()],
                            reason: format!("D({a}) and D({b}) omit disjoint finite sets"),
                        });
                    }
                }
            }
            Ok(CompactnessCertificate {
                compact: true,
                cover: vec![],
                reason: "every basic open omits a finite set; no two-element cover in the sampled alphabet".into(),
            })
        }
        _ => Err(Error::UnsupportedModel("quasi-compactness is decided only on finite posets and single families".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes::ActivePrimes;
    use crate::spectra::{IndexSet, PointRef};

    #[test]
    fn spec_z_examples() {
        let z = SpectrumModel::integers(ActivePrimes::all());
        let generic = SubsetDesc::family(true, IndexSet::empty());
        assert_eq!(zariski_closure(&z, &generic).unwrap(), z.full());
        let m2 = z.shape.singleton(&PointRef::Index(2)).unwrap();
        assert_eq!(zariski_closure(&z, &m2).unwrap(), m2);
        let max = SubsetDesc::family(false, IndexSet::all());
        assert!(!is_patch_closed(&z, &max).unwrap());
        assert!(is_patch_closed(&z, &z.full()).unwrap());
        let cert = is_quasi_compact(&z, &max).unwrap();
        assert!(cert.compact);
        assert_eq!(cert.cover.len(), 2);
        assert_eq!(generization(&z, &m2).unwrap(), SubsetDesc::family(true, IndexSet::singleton(2)));
    }
}
