use std::collections::BTreeSet;
use std::sync::Arc;

use super::element::{ho_in_core, ho_in_d, HoConfig};
use crate::pvmd::{DomainDescriptor, DomainKind, Flags};
use crate::spectra::{ElementSemantics, Family, FinitePoset, IndexLabels, IndexSet, Shape, SpectrumModel, SubsetDesc};
use crate::{Error, Result};

/// Name of the family of points `m_i ∩ D`.
pub const HO_FAMILY: &str = "m";
/// Label of the nonprincipal ultrafilter limit.
pub const LIMIT_LABEL: &str = "Y_U";
/// Representatives of the height-one primes of `R` contracted to `D`.
pub const HEIGHT_ONE_BLOCK: [&str; 2] = ["(T)", "(U)"];

/// `V(x)` for `x ∈ D`, read off the valuations: `m_i` holds `x` iff
/// `v_i(x) ≥ 1`, the limit holds it iff the `(T,U)`-order is positive, and
/// `(T)`, `(U)` hold it iff the variable divides the reduced numerator.
#[derive(Debug, Clone)]
pub struct HoElements {
    cfg: HoConfig,
}

impl ElementSemantics for HoElements {
    fn vanishing(&self, shape: &Shape, sym: &str) -> Result<SubsetDesc> {
        let x = self.cfg.parse(sym)?;
        if !ho_in_d(&x) {
            return Err(Error::UnknownElement(format!("{sym} is not in D")));
        }
        if x.is_zero() {
            return Ok(shape.full());
        }
        let n = self.cfg.level();
        let low: Vec<usize> = (0..n).filter(|&i| x.valuation(i).at_least(1)).collect();
        let indices = if x.order().at_least(1) {
            IndexSet::cofinite((0..n).filter(|i| !low.contains(i)))
        } else {
            IndexSet::finite(low)
        };
        let mut block = BTreeSet::new();
        for (label, var) in HEIGHT_ONE_BLOCK.iter().zip(["T", "U"]) {
            if x.num().exact_div(&self.cfg.var(var)?)?.is_some() {
                block.insert(label.to_string());
            }
        }
        Ok(SubsetDesc::Ordinal {
            bottom: BTreeSet::new(),
            top: Box::new(SubsetDesc::Union(vec![
                SubsetDesc::Family { generic: ho_in_core(&x), indices, caps: BTreeSet::new() },
                SubsetDesc::Poset(block),
            ])),
        })
    }

    fn symbols(&self) -> Vec<String> {
        ["1", "T", "U", "X0", "T + X0*U", "X0*U", "T*U", "T^2 + U^2", "0"].iter().map(|s| s.to_string()).collect()
    }
}

impl HoConfig {
    /// `(0)` under the disjoint union of the family `{m_i ∩ D}` with limit
    /// `Y_U` and the height-one block.
    pub fn model(&self) -> Result<SpectrumModel> {
        let family = Family::new(HO_FAMILY, LIMIT_LABEL, IndexLabels::Prefix("m_".into())).without_finite_character();
        let block = FinitePoset::new(&HEIGHT_ONE_BLOCK, &[])?;
        let shape = Shape::OrdinalSum {
            bottom: vec!["(0)".into()],
            top: Box::new(Shape::DisjointUnion(vec![Shape::Family(family), Shape::Poset(block)])),
        };
        SpectrumModel::new(format!("HO:{}", self.level()), shape, Arc::new(HoElements { cfg: self.clone() }))
    }

    /// `Y = {𝔭 ∩ D} ∪ {m_i ∩ D}`, every point but `Y_U` essential, and
    /// `t-Spec(D) = Spec(D)`.
    pub fn descriptor(&self) -> Result<DomainDescriptor> {
        let model = self.model()?;
        let top = |generic: bool, block: bool| SubsetDesc::Union(vec![
            SubsetDesc::family(generic, IndexSet::all()),
            SubsetDesc::poset(if block { HEIGHT_ONE_BLOCK.to_vec() } else { vec![] }),
        ]);
        let y = SubsetDesc::Ordinal { bottom: BTreeSet::new(), top: Box::new(top(false, true)) };
        let essential = SubsetDesc::Ordinal { bottom: ["(0)".to_string()].into(), top: Box::new(top(false, true)) };
        let t_spec = model.full();
        let flags = Flags { essential_domain: true, t_finite_character: false, prufer: false, krull_type: false };
        let n = self.level();
        DomainDescriptor::new(
            format!("HO:{n}"),
            DomainKind::HeinzerOhm { level: n },
            format!("Q(X0..X{}, T, U)", n - 1),
            model,
            y,
            essential,
            t_spec,
            flags,
        )
    }
}
