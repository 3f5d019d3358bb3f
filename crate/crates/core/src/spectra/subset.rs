use std::collections::BTreeSet;

use serde::Serialize;

use super::indexset::IndexSet;
use crate::{Error, Result};

/// Address of one point of a spectrum model, relative to its shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PointRef {
    /// A named point: a poset point, or a materialized cap of a family.
    Id(String),
    /// The distinguished generic (limit) point of a family.
    Generic,
    /// The `j`-th closed point of a family.
    Index(usize),
    /// A point of the `k`-th component of a disjoint union.
    Component(usize, Box<PointRef>),
    /// A point of the bottom chain of an ordinal sum.
    Bottom(String),
    /// A point of the top model of an ordinal sum.
    Top(Box<PointRef>),
}

impl PointRef {
    pub fn component(k: usize, inner: PointRef) -> Self {
        PointRef::Component(k, Box::new(inner))
    }

    pub fn top(inner: PointRef) -> Self {
        PointRef::Top(Box::new(inner))
    }
}

/// A finitely described subset, mirroring the shape it lives in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum SubsetDesc {
    Poset(BTreeSet<String>),
    Family { generic: bool, indices: IndexSet, caps: BTreeSet<String> },
    Union(Vec<SubsetDesc>),
    Ordinal { bottom: BTreeSet<String>, top: Box<SubsetDesc> },
}

impl SubsetDesc {
    pub fn poset<S: Into<String>>(ids: impl IntoIterator<Item = S>) -> Self {
        SubsetDesc::Poset(ids.into_iter().map(Into::into).collect())
    }

    pub fn family(generic: bool, indices: IndexSet) -> Self {
        SubsetDesc::Family { generic, indices, caps: BTreeSet::new() }
    }

    fn zip(&self, other: &SubsetDesc, op: SetOp) -> Result<SubsetDesc> {
        use SubsetDesc::*;
        let pick = |a: bool, b: bool| match op {
            SetOp::Union => a || b,
            SetOp::Intersection => a && b,
            SetOp::Difference => a && !b,
        };
        let sets = |a: &BTreeSet<String>, b: &BTreeSet<String>| -> BTreeSet<String> {
            match op {
                SetOp::Union => a.union(b).cloned().collect(),
                SetOp::Intersection => a.intersection(b).cloned().collect(),
                SetOp::Difference => a.difference(b).cloned().collect(),
            }
        };
        Ok(match (self, other) {
            (Poset(a), Poset(b)) => Poset(sets(a, b)),
            (Family { generic: g1, indices: i1, caps: c1 }, Family { generic: g2, indices: i2, caps: c2 }) => Family {
                generic: pick(*g1, *g2),
                indices: match op {
                    SetOp::Union => i1.union(i2),
                    SetOp::Intersection => i1.intersection(i2),
                    SetOp::Difference => i1.difference(i2),
                },
                caps: sets(c1, c2),
            },
            (Union(a), Union(b)) if a.len() == b.len() => {
                Union(a.iter().zip(b).map(|(x, y)| x.zip(y, op)).collect::<Result<_>>()?)
            }
            (Ordinal { bottom: b1, top: t1 }, Ordinal { bottom: b2, top: t2 }) => {
                Ordinal { bottom: sets(b1, b2), top: Box::new(t1.zip(t2, op)?) }
            }
            _ => return Err(Error::ShapeMismatch("set operation on differently shaped subsets".into())),
        })
    }

    pub fn union(&self, other: &SubsetDesc) -> Result<SubsetDesc> {
        self.zip(other, SetOp::Union)
    }

    pub fn intersection(&self, other: &SubsetDesc) -> Result<SubsetDesc> {
        self.zip(other, SetOp::Intersection)
    }

    pub fn difference(&self, other: &SubsetDesc) -> Result<SubsetDesc> {
        self.zip(other, SetOp::Difference)
    }

    pub fn is_subset(&self, other: &SubsetDesc) -> Result<bool> {
        Ok(self.difference(other)?.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        match self {
            SubsetDesc::Poset(s) => s.is_empty(),
            SubsetDesc::Family { generic, indices, caps } => !generic && indices.is_empty() && caps.is_empty(),
            SubsetDesc::Union(parts) => parts.iter().all(SubsetDesc::is_empty),
            SubsetDesc::Ordinal { bottom, top } => bottom.is_empty() && top.is_empty(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            SubsetDesc::Poset(_) => true,
            SubsetDesc::Family { indices, .. } => indices.is_finite(),
            SubsetDesc::Union(parts) => parts.iter().all(SubsetDesc::is_finite),
            SubsetDesc::Ordinal { top, .. } => top.is_finite(),
        }
    }

    pub fn contains(&self, p: &PointRef) -> Result<bool> {
        match (self, p) {
            (SubsetDesc::Poset(s), PointRef::Id(id)) => Ok(s.contains(id)),
            (SubsetDesc::Family { generic, .. }, PointRef::Generic) => Ok(*generic),
            (SubsetDesc::Family { indices, .. }, PointRef::Index(j)) => Ok(indices.contains(*j)),
            (SubsetDesc::Family { caps, .. }, PointRef::Id(id)) => Ok(caps.contains(id)),
            (SubsetDesc::Union(parts), PointRef::Component(k, inner)) => match parts.get(*k) {
                Some(part) => part.contains(inner),
                None => Err(Error::UnknownPoint(format!("{p:?}"))),
            },
            (SubsetDesc::Ordinal { bottom, .. }, PointRef::Bottom(id)) => Ok(bottom.contains(id)),
            (SubsetDesc::Ordinal { top, .. }, PointRef::Top(inner)) => top.contains(inner),
            _ => Err(Error::UnknownPoint(format!("{p:?}"))),
        }
    }
}

#[derive(Clone, Copy)]
enum SetOp {
    Union,
    Intersection,
    Difference,
}
