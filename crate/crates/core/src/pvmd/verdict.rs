use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::spectra::{LocallyFiniteCertificate, PointRef, Shape, SubsetDesc};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Criterion {
    Thm24,
    Cor26,
    Cor27,
    Griffin,
    Thm214,
    Cor215,
    Cor211,
    Ex28,
}

impl Criterion {
    pub const CLOSURE_FAMILY: [Criterion; 4] = [Criterion::Thm24, Criterion::Cor26, Criterion::Cor27, Criterion::Griffin];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Thm24 => "thm24",
            Criterion::Cor26 => "cor26",
            Criterion::Cor27 => "cor27",
            Criterion::Griffin => "griffin",
            Criterion::Thm214 => "thm214",
            Criterion::Cor215 => "cor215",
            Criterion::Cor211 => "cor211",
            Criterion::Ex28 => "ex28",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Criterion::Thm24,
            Criterion::Cor26,
            Criterion::Cor27,
            Criterion::Griffin,
            Criterion::Thm214,
            Criterion::Cor215,
            Criterion::Cor211,
            Criterion::Ex28,
        ]
        .into_iter()
        .find(|c| c.name() == s)
        .ok_or_else(|| Error::Parse(format!("unknown criterion {s}")))
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Certificate {
    /// The closure that was compared against `E(D)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closure: Option<String>,
    /// A point of the closure outside `E(D)`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub offending_point: Option<PointRef>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub locally_finite: Option<LocallyFiniteCertificate>,
    pub trace: Vec<String>,
}

/// Outcome of a criterion; `is_pvmd = None` means the criterion did not apply.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub is_pvmd: Option<bool>,
    pub criterion: Criterion,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn unknown(criterion: Criterion, reason: impl Into<String>) -> Self {
        Verdict { is_pvmd: None, criterion, certificate: Certificate { trace: vec![reason.into()], ..Default::default() } }
    }
}

/// A deterministic member of a nonempty subset: generic and named points
/// before indexed ones, lower components first.
pub fn first_point(shape: &Shape, s: &SubsetDesc) -> Option<PointRef> {
    match (shape, s) {
        (Shape::Poset(p), SubsetDesc::Poset(ids)) => p.ids().iter().find(|id| ids.contains(*id)).cloned().map(PointRef::Id),
        (Shape::Family(_), SubsetDesc::Family { generic, indices, caps }) => {
            if *generic {
                Some(PointRef::Generic)
            } else if let Some(c) = caps.iter().next() {
                Some(PointRef::Id(c.clone()))
            } else {
                indices.first().map(PointRef::Index)
            }
        }
        (Shape::DisjointUnion(parts), SubsetDesc::Union(subs)) => parts
            .iter()
            .zip(subs)
            .enumerate()
            .find_map(|(k, (p, s))| first_point(p, s).map(|q| PointRef::component(k, q))),
        (Shape::OrdinalSum { bottom, top }, SubsetDesc::Ordinal { bottom: b, top: t }) => bottom
            .iter()
            .find(|id| b.contains(*id))
            .cloned()
            .map(PointRef::Bottom)
            .or_else(|| first_point(top, t).map(PointRef::top)),
        _ => None,
    }
}
