use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive, Zero};

use super::indexset::IndexSet;
use super::shape::{IndexLabels, Shape};
use super::subset::{PointRef, SubsetDesc};
use crate::arith::primes::{factorize, gaussian_fiber, ActivePrimes};
use crate::arith::BigInt;
use crate::{Error, Result};

/// Vanishing-set semantics of an element alphabet: `e ↦ V(e)`.
pub trait ElementSemantics: Send + Sync + fmt::Debug {
    fn vanishing(&self, shape: &Shape, sym: &str) -> Result<SubsetDesc>;

    /// A finite sample of the alphabet used by checks that sweep elements.
    fn symbols(&self) -> Vec<String>;
}

/// Elements given by an explicit table of vanishing sets.
#[derive(Debug, Clone, Default)]
pub struct Tabulated(pub BTreeMap<String, SubsetDesc>);

impl ElementSemantics for Tabulated {
    fn vanishing(&self, _shape: &Shape, sym: &str) -> Result<SubsetDesc> {
        self.0.get(sym).cloned().ok_or_else(|| Error::UnknownElement(sym.into()))
    }

    fn symbols(&self) -> Vec<String> {
        self.0.keys().cloned().collect()
    }
}

/// Integers acting on a family labeled by active rational primes or by the
/// maximal ideals of `Z[i]`: `V(n)` is the set of primes dividing `n`.
#[derive(Debug, Clone)]
pub struct IntegerElements;

impl ElementSemantics for IntegerElements {
    fn vanishing(&self, shape: &Shape, sym: &str) -> Result<SubsetDesc> {
        let n: BigInt = sym.trim().parse().map_err(|_| Error::UnknownElement(sym.into()))?;
        let family = match shape {
            Shape::Family(f) => f,
            _ => return Err(Error::UnsupportedModel("integer elements need a single family".into())),
        };
        if n.is_zero() {
            return Ok(shape.full());
        }
        let mut idx = Vec::new();
        for p in factorize(&n.abs()).into_keys() {
            let p = p.to_u64().ok_or_else(|| Error::UnknownElement(sym.into()))?;
            match &family.labels {
                IndexLabels::Primes(active) => idx.extend(active.index_of(p)),
                IndexLabels::Gaussian => idx.extend(gaussian_fiber(p)),
                _ => return Err(Error::UnsupportedModel("family is not labeled by primes".into())),
            }
        }
        Ok(SubsetDesc::family(false, IndexSet::finite(idx)))
    }

    fn symbols(&self) -> Vec<String> {
        ["0", "1", "-1", "2", "6", "15", "30", "77", "210", "1001", "-12"].iter().map(|s| s.to_string()).collect()
    }
}

/// A symbolic model of a prime spectrum.
#[derive(Clone)]
pub struct SpectrumModel {
    pub name: String,
    pub shape: Shape,
    pub elements: Arc<dyn ElementSemantics>,
}

impl fmt::Debug for SpectrumModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SpectrumModel").field("name", &self.name).field("shape", &self.shape).finish()
    }
}

impl SpectrumModel {
    /// Builds a model and checks that every sampled vanishing set is
    /// up-closed, and finite on finite-character families unless it is `V(0)`.
    pub fn new(name: impl Into<String>, shape: Shape, elements: Arc<dyn ElementSemantics>) -> Result<Self> {
        let model = SpectrumModel { name: name.into(), shape, elements };
        for sym in model.elements.symbols() {
            let v = model.vanishing(&sym)?;
            if model.shape.up_closure(&v)? != v {
                return Err(Error::InvalidModel(format!("V({sym}) is not closed under specialization")));
            }
            if v != model.shape.full() {
                for f in model.shape.families() {
                    if !f.finite_character {
                        continue;
                    }
                    let path = model.shape.family_path(&f.name).expect("listed family");
                    if let SubsetDesc::Family { generic, indices, .. } = super::shape::project(&path, &v)? {
                        if *generic || indices.is_infinite() {
                            return Err(Error::InvalidModel(format!(
                                "nonzero element {sym} vanishes on infinitely many points of finite-character family {}",
                                f.name
                            )));
                        }
                    }
                }
            }
        }
        Ok(model)
    }

    /// A model with only the shape and no elements.
    pub fn bare(name: impl Into<String>, shape: Shape) -> Self {
        SpectrumModel { name: name.into(), shape, elements: Arc::new(Tabulated::default()) }
    }

    /// `Spec(Z)` or a localization: generic `(0)` below the active primes.
    pub fn integers(active: ActivePrimes) -> Self {
        use super::shape::{Family, FinitePoset};
        match active.finite_list() {
            Some(ps) => {
                let mut ids = vec!["(0)".to_string()];
                ids.extend(ps.iter().map(|p| format!("({p})")));
                let rel: Vec<(String, String)> = ids[1..].iter().map(|id| ("(0)".to_string(), id.clone())).collect();
                let poset = FinitePoset::new(&ids, &rel).expect("star poset");
                let mut table = BTreeMap::new();
                table.insert("0".to_string(), SubsetDesc::poset(ids.clone()));
                table.insert("1".to_string(), SubsetDesc::poset(Vec::<String>::new()));
                for p in &ps {
                    table.insert(p.to_string(), SubsetDesc::poset([format!("({p})")]));
                }
                SpectrumModel::new("Zloc", Shape::Poset(poset), Arc::new(Tabulated(table))).expect("valid model")
            }
            None => {
                let shape = Shape::Family(Family::new("Z", "(0)", IndexLabels::Primes(active)));
                SpectrumModel::new("Z", shape, Arc::new(IntegerElements)).expect("valid model")
            }
        }
    }

    pub fn vanishing(&self, sym: &str) -> Result<SubsetDesc> {
        let v = self.elements.vanishing(&self.shape, sym)?;
        self.shape.validate(&v)?;
        Ok(v)
    }

    pub fn full(&self) -> SubsetDesc {
        self.shape.full()
    }

    pub fn empty(&self) -> SubsetDesc {
        self.shape.empty()
    }

    pub fn label(&self, p: &PointRef) -> String {
        self.shape.label(p)
    }

    pub fn resolve(&self, token: &str) -> Result<PointRef> {
        self.shape.resolve(token).ok_or_else(|| Error::UnknownPoint(token.into()))
    }

    /// Human-readable rendering of a subset, points sorted by label.
    pub fn describe(&self, s: &SubsetDesc) -> String {
        let parts = describe_in(&self.shape, s);
        if parts.is_empty() {
            return "∅".into();
        }
        parts.join(", ")
    }

    /// Elements vanishing at `p`, drawn from the sampled alphabet.
    pub fn ideal_at(&self, p: &PointRef) -> Result<Vec<String>> {
        let mut out = Vec::new();
        for sym in self.elements.symbols() {
            if self.vanishing(&sym)?.contains(p)? {
                out.push(sym);
            }
        }
        Ok(out)
    }
}

fn describe_in(shape: &Shape, s: &SubsetDesc) -> Vec<String> {
    match (shape, s) {
        (Shape::Family(f), SubsetDesc::Family { generic, indices, caps }) => {
            let mut out = Vec::new();
            if *generic {
                out.push(f.generic_label.clone());
            }
            if let Some(members) = indices.finite_members() {
                out.extend(members.iter().map(|&j| f.labels.label(j)));
            } else if let Some(except) = indices.cofinite_exceptions() {
                if except.is_empty() {
                    out.push(format!("all closed points of {}", f.name));
                } else {
                    let ex: Vec<String> = except.iter().map(|&j| f.labels.label(j)).collect();
                    out.push(format!("all closed points of {} except {{{}}}", f.name, ex.join(", ")));
                }
            } else {
                out.push(format!("closed points of {} with index {}", f.name, indices));
            }
            out.extend(caps.iter().cloned());
            out.sort();
            out
        }
        (Shape::DisjointUnion(parts), SubsetDesc::Union(subs)) => {
            parts.iter().zip(subs).flat_map(|(p, s)| describe_in(p, s)).collect()
        }
        (Shape::OrdinalSum { top, .. }, SubsetDesc::Ordinal { bottom, top: t }) => {
            let mut out: Vec<String> = bottom.iter().cloned().collect();
            out.extend(describe_in(top, t));
            out
        }
        (_, SubsetDesc::Poset(ids)) => ids.iter().cloned().collect(),
        _ => vec![format!("{s:?}")],
    }
}
