use std::collections::{BTreeMap, BTreeSet};

use super::indexset::IndexSet;
use super::subset::{PointRef, SubsetDesc};
use num_traits::ToPrimitive;

use crate::arith::factor::{irreducible_at, irreducible_index, zx_height_one_at, zx_height_one_index, ZxFactor};
use crate::arith::primes::{gaussian_prime_at, ActivePrimes};
use crate::arith::UniPolyZ;
use crate::{Error, Result};

/// A finite poset of named points; `leq(p, q)` means `p ⊆ q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    ids: Vec<String>,
    index: BTreeMap<String, usize>,
    leq: Vec<Vec<bool>>,
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of `relations` and rejects cycles.
    pub fn new<S: AsRef<str>>(ids: &[S], relations: &[(S, S)]) -> Result<Self> {
        let ids: Vec<String> = ids.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = BTreeMap::new();
        for (k, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), k).is_some() {
                return Err(Error::InvalidModel(format!("duplicate point {id}")));
            }
        }
        let n = ids.len();
        let mut leq = vec![vec![false; n]; n];
        for (k, row) in leq.iter_mut().enumerate() {
            row[k] = true;
        }
        for (a, b) in relations {
            let pos = |s: &S| {
                index.get(s.as_ref()).copied().ok_or_else(|| Error::InvalidModel(format!("unknown point {}", s.as_ref())))
            };
            let (i, j) = (pos(a)?, pos(b)?);
            leq[i][j] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::InvalidModel(format!("order is not antisymmetric at {} and {}", ids[i], ids[j])));
                }
            }
        }
        Ok(FinitePoset { ids, index, leq })
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn leq(&self, a: &str, b: &str) -> Result<bool> {
        let i = self.position(a).ok_or_else(|| Error::UnknownPoint(a.into()))?;
        let j = self.position(b).ok_or_else(|| Error::UnknownPoint(b.into()))?;
        Ok(self.leq[i][j])
    }

    /// Points that are minimal under `leq`.
    pub fn minimal(&self) -> Vec<String> {
        (0..self.len())
            .filter(|&j| (0..self.len()).all(|i| i == j || !self.leq[i][j]))
            .map(|j| self.ids[j].clone())
            .collect()
    }

    fn up(&self, s: &BTreeSet<String>) -> BTreeSet<String> {
        let pos: Vec<usize> = s.iter().filter_map(|id| self.position(id)).collect();
        (0..self.len()).filter(|&j| pos.iter().any(|&i| self.leq[i][j])).map(|j| self.ids[j].clone()).collect()
    }

    fn down(&self, s: &BTreeSet<String>) -> BTreeSet<String> {
        let pos: Vec<usize> = s.iter().filter_map(|id| self.position(id)).collect();
        (0..self.len()).filter(|&i| pos.iter().any(|&j| self.leq[i][j])).map(|i| self.ids[i].clone()).collect()
    }
}

/// How the closed points of a family are named.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IndexLabels {
    /// `prefix` followed by the index, e.g. `m_3`.
    Prefix(String),
    /// `(p)` for the `j`-th active rational prime.
    Primes(ActivePrimes),
    /// Maximal ideals of `Z[i]` in the order of the rational prime below them.
    Gaussian,
    /// Explicit names for the first indices, `prefix` + index afterwards.
    Named { names: Vec<String>, prefix: String },
    /// Height-one primes of `Z[X]`: rational primes at even indices,
    /// catalogued irreducible polynomials at odd ones.
    ZxHeightOne,
    /// Maximal ideals of `Q[X]`, one per catalogued irreducible polynomial.
    QxMaximal,
}

impl IndexLabels {
    pub fn label(&self, j: usize) -> String {
        match self {
            IndexLabels::Prefix(p) => format!("{p}{j}"),
            IndexLabels::Primes(active) => match active.nth(j) {
                Some(p) => format!("({p})"),
                None => format!("#{j}"),
            },
            IndexLabels::Gaussian => gaussian_label(j),
            IndexLabels::Named { names, prefix } => names.get(j).cloned().unwrap_or_else(|| format!("{prefix}{j}")),
            IndexLabels::ZxHeightOne => match zx_height_one_at(j) {
                Some(q) => format!("({q})"),
                None => format!("h{j}"),
            },
            IndexLabels::QxMaximal => match irreducible_at(j) {
                Some(f) => format!("({f})"),
                None => format!("h{j}"),
            },
        }
    }

    pub fn parse(&self, token: &str) -> Option<usize> {
        match self {
            IndexLabels::Prefix(p) => token.strip_prefix(p.as_str())?.parse().ok(),
            IndexLabels::Primes(active) => {
                let p: u64 = token.strip_prefix('(')?.strip_suffix(')')?.trim().parse().ok()?;
                active.index_of(p)
            }
            IndexLabels::Gaussian => (0..4096).find(|&j| gaussian_label(j) == token),
            IndexLabels::Named { names, prefix } => names
                .iter()
                .position(|n| n == token)
                .or_else(|| token.strip_prefix(prefix.as_str())?.parse().ok()),
            IndexLabels::ZxHeightOne | IndexLabels::QxMaximal => {
                if let Some(j) = token.strip_prefix('h').and_then(|r| r.parse().ok()) {
                    return Some(j);
                }
                let f = UniPolyZ::parse(token.strip_prefix('(')?.strip_suffix(')')?).ok()?;
                let q = match f.degree()? {
                    0 => ZxFactor::Prime(f.lead()?.to_u64()?),
                    _ => ZxFactor::Poly(f),
                };
                match (self, q) {
                    (IndexLabels::QxMaximal, ZxFactor::Poly(f)) => irreducible_index(&f),
                    (IndexLabels::ZxHeightOne, q) => zx_height_one_index(&q),
                    _ => None,
                }
            }
        }
    }
}

fn gaussian_label(j: usize) -> String {
    let (p, branch) = gaussian_prime_at(j);
    if p == 2 {
        return "(1+i)".into();
    }
    if p % 4 == 3 {
        return format!("({p})");
    }
    let mut a = 1u64;
    while a * a < p {
        let rest = p - a * a;
        let b = (rest as f64).sqrt().round() as u64;
        if b * b == rest && a > b {
            let bi = if b == 1 { "i".to_string() } else { format!("{b}i") };
            return if branch == 0 { format!("({a}+{bi})") } else { format!("({a}-{bi})") };
        }
        a += 1;
    }
    format!("({p},{branch})")
}

/// A height-two point above finitely many closed points of a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cap {
    pub id: String,
    pub above: BTreeSet<usize>,
}

/// A generic point below a countable antichain of closed points, optionally
/// with finitely many caps above them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Family {
    pub name: String,
    pub generic_label: String,
    pub labels: IndexLabels,
    /// Every nonzero element vanishes at finitely many closed points.
    pub finite_character: bool,
    pub caps: Vec<Cap>,
}

impl Family {
    pub fn new(name: impl Into<String>, generic_label: impl Into<String>, labels: IndexLabels) -> Self {
        Family { name: name.into(), generic_label: generic_label.into(), labels, finite_character: true, caps: Vec::new() }
    }

    pub fn with_caps(mut self, caps: Vec<Cap>) -> Self {
        self.caps = caps;
        self
    }

    pub fn without_finite_character(mut self) -> Self {
        self.finite_character = false;
        self
    }

    fn cap(&self, id: &str) -> Option<&Cap> {
        self.caps.iter().find(|c| c.id == id)
    }
}

/// The order-theoretic shape of a spectrum model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Shape {
    Poset(FinitePoset),
    Family(Family),
    DisjointUnion(Vec<Shape>),
    /// A finite chain placed below every point of `top`; listed bottom-up.
    OrdinalSum { bottom: Vec<String>, top: Box<Shape> },
}

impl Shape {
    pub fn full(&self) -> SubsetDesc {
        match self {
            Shape::Poset(p) => SubsetDesc::Poset(p.ids.iter().cloned().collect()),
            Shape::Family(f) => SubsetDesc::Family {
                generic: true,
                indices: IndexSet::all(),
                caps: f.caps.iter().map(|c| c.id.clone()).collect(),
            },
            Shape::DisjointUnion(parts) => SubsetDesc::Union(parts.iter().map(Shape::full).collect()),
            Shape::OrdinalSum { bottom, top } => {
                SubsetDesc::Ordinal { bottom: bottom.iter().cloned().collect(), top: Box::new(top.full()) }
            }
        }
    }

    pub fn empty(&self) -> SubsetDesc {
        match self {
            Shape::Poset(_) => SubsetDesc::Poset(BTreeSet::new()),
            Shape::Family(_) => SubsetDesc::family(false, IndexSet::empty()),
            Shape::DisjointUnion(parts) => SubsetDesc::Union(parts.iter().map(Shape::empty).collect()),
            Shape::OrdinalSum { top, .. } => SubsetDesc::Ordinal { bottom: BTreeSet::new(), top: Box::new(top.empty()) },
        }
    }

    /// Checks that `s` has this shape and names only existing points.
    pub fn validate(&self, s: &SubsetDesc) -> Result<()> {
        match (self, s) {
            (Shape::Poset(p), SubsetDesc::Poset(ids)) => match ids.iter().find(|id| p.position(id).is_none()) {
                Some(id) => Err(Error::UnknownPoint(id.clone())),
                None => Ok(()),
            },
            (Shape::Family(f), SubsetDesc::Family { caps, .. }) => match caps.iter().find(|c| f.cap(c).is_none()) {
                Some(c) => Err(Error::UnknownPoint(c.clone())),
                None => Ok(()),
            },
            (Shape::DisjointUnion(parts), SubsetDesc::Union(subs)) if parts.len() == subs.len() => {
                parts.iter().zip(subs).try_for_each(|(p, s)| p.validate(s))
            }
            (Shape::OrdinalSum { bottom, top }, SubsetDesc::Ordinal { bottom: b, top: t }) => {
                if let Some(id) = b.iter().find(|id| !bottom.contains(id)) {
                    return Err(Error::UnknownPoint(id.clone()));
                }
                top.validate(t)
            }
            _ => Err(Error::ShapeMismatch("subset shape differs from model shape".into())),
        }
    }

    pub fn validate_point(&self, p: &PointRef) -> Result<()> {
        let ok = match (self, p) {
            (Shape::Poset(poset), PointRef::Id(id)) => poset.position(id).is_some(),
            (Shape::Family(_), PointRef::Generic | PointRef::Index(_)) => true,
            (Shape::Family(f), PointRef::Id(id)) => f.cap(id).is_some(),
            (Shape::DisjointUnion(parts), PointRef::Component(k, inner)) => {
                return parts.get(*k).ok_or_else(|| Error::UnknownPoint(format!("{p:?}")))?.validate_point(inner)
            }
            (Shape::OrdinalSum { bottom, .. }, PointRef::Bottom(id)) => bottom.contains(id),
            (Shape::OrdinalSum { top, .. }, PointRef::Top(inner)) => return top.validate_point(inner),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::UnknownPoint(format!("{p:?}")))
        }
    }

    pub fn complement(&self, s: &SubsetDesc) -> Result<SubsetDesc> {
        self.full().difference(s)
    }

    /// `a ⊆ b` as prime ideals.
    pub fn leq(&self, a: &PointRef, b: &PointRef) -> Result<bool> {
        self.validate_point(a)?;
        self.validate_point(b)?;
        Ok(match (self, a, b) {
            (Shape::Poset(p), PointRef::Id(x), PointRef::Id(y)) => p.leq(x, y)?,
            (Shape::Family(_), PointRef::Generic, _) => true,
            (Shape::Family(_), PointRef::Index(i), PointRef::Index(j)) => i == j,
            (Shape::Family(f), PointRef::Index(i), PointRef::Id(c)) => f.cap(c).is_some_and(|c| c.above.contains(i)),
            (Shape::Family(_), PointRef::Id(x), PointRef::Id(y)) => x == y,
            (Shape::DisjointUnion(parts), PointRef::Component(i, x), PointRef::Component(j, y)) => {
                i == j && parts[*i].leq(x, y)?
            }
            (Shape::OrdinalSum { bottom, .. }, PointRef::Bottom(x), PointRef::Bottom(y)) => {
                let pos = |s: &String| bottom.iter().position(|b| b == s);
                pos(x) <= pos(y)
            }
            (Shape::OrdinalSum { .. }, PointRef::Bottom(_), PointRef::Top(_)) => true,
            (Shape::OrdinalSum { top, .. }, PointRef::Top(x), PointRef::Top(y)) => top.leq(x, y)?,
            _ => false,
        })
    }

    /// Specialization closure: every prime containing a member.
    pub fn up_closure(&self, s: &SubsetDesc) -> Result<SubsetDesc> {
        self.validate(s)?;
        Ok(match (self, s) {
            (Shape::Poset(p), SubsetDesc::Poset(ids)) => SubsetDesc::Poset(p.up(ids)),
            (Shape::Family(f), SubsetDesc::Family { generic, indices, caps }) => {
                if *generic {
                    self.full()
                } else {
                    let mut caps = caps.clone();
                    for c in &f.caps {
                        if c.above.iter().any(|&j| indices.contains(j)) {
                            caps.insert(c.id.clone());
                        }
                    }
                    SubsetDesc::Family { generic: false, indices: indices.clone(), caps }
                }
            }
            (Shape::DisjointUnion(parts), SubsetDesc::Union(subs)) => {
                SubsetDesc::Union(parts.iter().zip(subs).map(|(p, s)| p.up_closure(s)).collect::<Result<_>>()?)
            }
            (Shape::OrdinalSum { bottom, top }, SubsetDesc::Ordinal { bottom: b, top: t }) => {
                match bottom.iter().position(|id| b.contains(id)) {
                    Some(first) => SubsetDesc::Ordinal {
                        bottom: bottom[first..].iter().cloned().collect(),
                        top: Box::new(top.full()),
                    },
                    None => SubsetDesc::Ordinal { bottom: BTreeSet::new(), top: Box::new(top.up_closure(t)?) },
                }
            }
            _ => unreachable!("validated"),
        })
    }

    /// Generization: every prime contained in a member.
    pub fn down_closure(&self, s: &SubsetDesc) -> Result<SubsetDesc> {
        self.validate(s)?;
        Ok(match (self, s) {
            (Shape::Poset(p), SubsetDesc::Poset(ids)) => SubsetDesc::Poset(p.down(ids)),
            (Shape::Family(f), SubsetDesc::Family { generic, indices, caps }) => {
                let mut indices = indices.clone();
                for c in caps {
                    if let Some(cap) = f.cap(c) {
                        indices = indices.union(&IndexSet::finite(cap.above.iter().copied()));
                    }
                }
                let generic = *generic || !s.is_empty();
                SubsetDesc::Family { generic, indices, caps: caps.clone() }
            }
            (Shape::DisjointUnion(parts), SubsetDesc::Union(subs)) => {
                SubsetDesc::Union(parts.iter().zip(subs).map(|(p, s)| p.down_closure(s)).collect::<Result<_>>()?)
            }
            (Shape::OrdinalSum { bottom, top }, SubsetDesc::Ordinal { bottom: b, top: t }) => {
                if !t.is_empty() {
                    SubsetDesc::Ordinal { bottom: bottom.iter().cloned().collect(), top: Box::new(top.down_closure(t)?) }
                } else {
                    let last = bottom.iter().rposition(|id| b.contains(id)).map_or(0, |k| k + 1);
                    SubsetDesc::Ordinal { bottom: bottom[..last].iter().cloned().collect(), top: t.clone() }
                }
            }
            _ => unreachable!("validated"),
        })
    }

    /// Constructible closure: adds the family generic exactly when a family
    /// part is infinite; finite parts and poset parts are already closed.
    pub fn patch_closure(&self, s: &SubsetDesc) -> Result<SubsetDesc> {
        self.validate(s)?;
        Ok(match (self, s) {
            (Shape::Poset(_), _) => s.clone(),
            (Shape::Family(_), SubsetDesc::Family { generic, indices, caps }) => SubsetDesc::Family {
                generic: *generic || indices.is_infinite(),
                indices: indices.clone(),
                caps: caps.clone(),
            },
            (Shape::DisjointUnion(parts), SubsetDesc::Union(subs)) => {
                SubsetDesc::Union(parts.iter().zip(subs).map(|(p, s)| p.patch_closure(s)).collect::<Result<_>>()?)
            }
            (Shape::OrdinalSum { top, .. }, SubsetDesc::Ordinal { bottom, top: t }) => {
                SubsetDesc::Ordinal { bottom: bottom.clone(), top: Box::new(top.patch_closure(t)?) }
            }
            _ => unreachable!("validated"),
        })
    }

    /// All points when the shape is finite, otherwise every non-index point
    /// plus the first `sample` indices of each family.
    pub fn points(&self, sample: usize) -> Vec<PointRef> {
        match self {
            Shape::Poset(p) => p.ids.iter().cloned().map(PointRef::Id).collect(),
            Shape::Family(f) => std::iter::once(PointRef::Generic)
                .chain((0..sample).map(PointRef::Index))
                .chain(f.caps.iter().map(|c| PointRef::Id(c.id.clone())))
                .collect(),
            Shape::DisjointUnion(parts) => parts
                .iter()
                .enumerate()
                .flat_map(|(k, p)| p.points(sample).into_iter().map(move |q| PointRef::component(k, q)))
                .collect(),
            Shape::OrdinalSum { bottom, top } => bottom
                .iter()
                .cloned()
                .map(PointRef::Bottom)
                .chain(top.points(sample).into_iter().map(PointRef::top))
                .collect(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Shape::Poset(_) => true,
            Shape::Family(_) => false,
            Shape::DisjointUnion(parts) => parts.iter().all(Shape::is_finite),
            Shape::OrdinalSum { top, .. } => top.is_finite(),
        }
    }

    /// Members of a finite subset, in point order.
    pub fn finite_members(&self, s: &SubsetDesc) -> Result<Vec<PointRef>> {
        self.validate(s)?;
        if !s.is_finite() {
            return Err(Error::Unrepresentable("subset is infinite".into()));
        }
        Ok(match (self, s) {
            (Shape::Poset(_), SubsetDesc::Poset(ids)) => ids.iter().cloned().map(PointRef::Id).collect(),
            (Shape::Family(_), SubsetDesc::Family { generic, indices, caps }) => {
                let mut out: Vec<PointRef> = Vec::new();
                if *generic {
                    out.push(PointRef::Generic);
                }
                out.extend(indices.iter().map(PointRef::Index));
                out.extend(caps.iter().cloned().map(PointRef::Id));
                out
            }
            (Shape::DisjointUnion(parts), SubsetDesc::Union(subs)) => {
                let mut out = Vec::new();
                for (k, (p, s)) in parts.iter().zip(subs).enumerate() {
                    out.extend(p.finite_members(s)?.into_iter().map(|q| PointRef::component(k, q)));
                }
                out
            }
            (Shape::OrdinalSum { bottom, top }, SubsetDesc::Ordinal { bottom: b, top: t }) => {
                let mut out: Vec<PointRef> =
                    bottom.iter().filter(|id| b.contains(*id)).cloned().map(PointRef::Bottom).collect();
                out.extend(top.finite_members(t)?.into_iter().map(PointRef::top));
                out
            }
            _ => unreachable!("validated"),
        })
    }

    /// The subset consisting of exactly the listed points.
    pub fn subset_of(&self, points: &[PointRef]) -> Result<SubsetDesc> {
        let mut out = self.empty();
        for p in points {
            out = out.union(&self.singleton(p)?)?;
        }
        Ok(out)
    }

    pub fn singleton(&self, p: &PointRef) -> Result<SubsetDesc> {
        self.validate_point(p)?;
        Ok(match (self, p) {
            (Shape::Poset(_), PointRef::Id(id)) => SubsetDesc::poset([id.clone()]),
            (Shape::Family(_), PointRef::Generic) => SubsetDesc::family(true, IndexSet::empty()),
            (Shape::Family(_), PointRef::Index(j)) => SubsetDesc::family(false, IndexSet::singleton(*j)),
            (Shape::Family(_), PointRef::Id(id)) => {
                SubsetDesc::Family { generic: false, indices: IndexSet::empty(), caps: [id.clone()].into() }
            }
            (Shape::DisjointUnion(parts), PointRef::Component(k, inner)) => SubsetDesc::Union(
                parts
                    .iter()
                    .enumerate()
                    .map(|(i, part)| if i == *k { part.singleton(inner) } else { Ok(part.empty()) })
                    .collect::<Result<_>>()?,
            ),
            (Shape::OrdinalSum { top, .. }, PointRef::Bottom(id)) => {
                SubsetDesc::Ordinal { bottom: [id.clone()].into(), top: Box::new(top.empty()) }
            }
            (Shape::OrdinalSum { top, .. }, PointRef::Top(inner)) => {
                SubsetDesc::Ordinal { bottom: BTreeSet::new(), top: Box::new(top.singleton(inner)?) }
            }
            _ => unreachable!("validated"),
        })
    }

    pub fn label(&self, p: &PointRef) -> String {
        match (self, p) {
            (Shape::Family(f), PointRef::Generic) => f.generic_label.clone(),
            (Shape::Family(f), PointRef::Index(j)) => f.labels.label(*j),
            (Shape::DisjointUnion(parts), PointRef::Component(k, inner)) => match parts.get(*k) {
                Some(part) => part.label(inner),
                None => format!("{p:?}"),
            },
            (Shape::OrdinalSum { top, .. }, PointRef::Top(inner)) => top.label(inner),
            (_, PointRef::Id(id) | PointRef::Bottom(id)) => id.clone(),
            _ => format!("{p:?}"),
        }
    }

    /// Resolves a textual point token; accepts labels, `family:j`, and cap ids.
    pub fn resolve(&self, token: &str) -> Option<PointRef> {
        match self {
            Shape::Poset(p) => p.position(token).map(|_| PointRef::Id(token.to_string())),
            Shape::Family(f) => {
                if token == f.generic_label {
                    return Some(PointRef::Generic);
                }
                if f.cap(token).is_some() {
                    return Some(PointRef::Id(token.to_string()));
                }
                if let Some(rest) = token.strip_prefix(&format!("{}:", f.name)) {
                    return rest.parse().ok().map(PointRef::Index);
                }
                f.labels.parse(token).map(PointRef::Index)
            }
            Shape::DisjointUnion(parts) => parts
                .iter()
                .enumerate()
                .find_map(|(k, part)| part.resolve(token).map(|q| PointRef::component(k, q))),
            Shape::OrdinalSum { bottom, top } => {
                if bottom.iter().any(|b| b == token) {
                    Some(PointRef::Bottom(token.to_string()))
                } else {
                    top.resolve(token).map(PointRef::top)
                }
            }
        }
    }

    /// Finds the family called `name` and returns a wrapper turning one of its
    /// points into a point of `self`.
    pub fn family_path(&self, name: &str) -> Option<Vec<PathStep>> {
        match self {
            Shape::Family(f) => (f.name == name).then(Vec::new),
            Shape::Poset(_) => None,
            Shape::DisjointUnion(parts) => parts.iter().enumerate().find_map(|(k, p)| {
                p.family_path(name).map(|mut path| {
                    path.insert(0, PathStep::Component(k));
                    path
                })
            }),
            Shape::OrdinalSum { top, .. } => top.family_path(name).map(|mut path| {
                path.insert(0, PathStep::Top);
                path
            }),
        }
    }

    pub fn families(&self) -> Vec<&Family> {
        match self {
            Shape::Family(f) => vec![f],
            Shape::Poset(_) => vec![],
            Shape::DisjointUnion(parts) => parts.iter().flat_map(Shape::families).collect(),
            Shape::OrdinalSum { top, .. } => top.families(),
        }
    }
}

/// One step from an outer shape into an inner one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathStep {
    Component(usize),
    Top,
}

pub fn wrap_point(path: &[PathStep], p: PointRef) -> PointRef {
    path.iter().rev().fold(p, |acc, step| match step {
        PathStep::Component(k) => PointRef::component(*k, acc),
        PathStep::Top => PointRef::top(acc),
    })
}

/// The part of `s` that lives at the end of `path`.
pub fn project<'a>(path: &[PathStep], s: &'a SubsetDesc) -> Result<&'a SubsetDesc> {
    let mut cur = s;
    for step in path {
        cur = match (step, cur) {
            (PathStep::Component(k), SubsetDesc::Union(parts)) => {
                parts.get(*k).ok_or_else(|| Error::ShapeMismatch("component out of range".into()))?
            }
            (PathStep::Top, SubsetDesc::Ordinal { top, .. }) => top,
            _ => return Err(Error::ShapeMismatch("path does not match subset".into())),
        };
    }
    Ok(cur)
}

/// Replaces the part of `s` at the end of `path` by `inner`.
pub fn set_at(s: &mut SubsetDesc, path: &[PathStep], inner: SubsetDesc) -> Result<()> {
    match (path.first(), s) {
        (None, s) => {
            *s = inner;
            Ok(())
        }
        (Some(PathStep::Component(k)), SubsetDesc::Union(parts)) => {
            let part = parts.get_mut(*k).ok_or_else(|| Error::ShapeMismatch("component out of range".into()))?;
            set_at(part, &path[1..], inner)
        }
        (Some(PathStep::Top), SubsetDesc::Ordinal { top, .. }) => set_at(top, &path[1..], inner),
        _ => Err(Error::ShapeMismatch("path does not match subset".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec_z() -> Shape {
        Shape::Family(Family::new("Z", "(0)", IndexLabels::Primes(ActivePrimes::all())))
    }

    #[test]
    fn chain_closures() {
        let s = Shape::Poset(FinitePoset::new(&["p", "q"], &[("p", "q")]).unwrap());
        let y = SubsetDesc::poset(["p"]);
        assert_eq!(s.up_closure(&y).unwrap(), SubsetDesc::poset(["p", "q"]));
        assert_eq!(s.down_closure(&SubsetDesc::poset(["q"])).unwrap(), SubsetDesc::poset(["p", "q"]));
        assert!(FinitePoset::new(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
    }

    #[test]
    fn family_closures() {
        let z = spec_z();
        let all_max = SubsetDesc::family(false, IndexSet::all());
        assert_eq!(z.patch_closure(&all_max).unwrap(), z.full());
        let m2 = SubsetDesc::family(false, IndexSet::singleton(0));
        assert_eq!(z.up_closure(&m2).unwrap(), m2);
        assert_eq!(z.down_closure(&m2).unwrap(), SubsetDesc::family(true, IndexSet::singleton(0)));
        assert_eq!(z.up_closure(&SubsetDesc::family(true, IndexSet::empty())).unwrap(), z.full());
    }

    #[test]
    fn labels_resolve() {
        let z = spec_z();
        assert_eq!(z.resolve("(7)"), Some(PointRef::Index(3)));
        assert_eq!(z.resolve("(0)"), Some(PointRef::Generic));
        assert_eq!(z.resolve("Z:2"), Some(PointRef::Index(2)));
        assert_eq!(z.label(&PointRef::Index(4)), "(11)");
        let g = IndexLabels::Gaussian;
        assert_eq!(g.label(2), "(2+i)");
        assert_eq!(g.parse("(2-i)"), Some(3));
        assert_eq!(g.label(6), "(3+2i)");
        let zx = IndexLabels::ZxHeightOne;
        assert_eq!(zx.parse("(5)"), Some(4));
        let j = zx.parse("(X^2+1)").unwrap();
        assert_eq!(zx.label(j), "(X^2 + 1)");
    }
}
