use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::elem::FracElem;
use crate::arith::factor::{fp, reduce_mod_p, split_low_degree, zx_height_one_at, zx_height_one_index, irreducible_index, ZxFactor};
use crate::arith::primes::ActivePrimes;
use crate::arith::{content_primitive, gcd_z, BigInt, UniPolyZ};
use crate::spectra::{
    Cap, ElementSemantics, Family, FinitePoset, IndexLabels, IndexSet, IntegerElements, Shape, SpectrumModel, SubsetDesc,
    Tabulated,
};
use crate::{Error, Result};

/// The integral domains the toolkit knows how to reason about.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CatalogDomain {
    /// The field `Q`.
    Field,
    IntegersZ,
    LocalizedZ(ActivePrimes),
    PolyQ,
    PolyZX,
    /// `Z + XQ[X]`, a Bezout domain known only through classification rules.
    ZPlusXQX,
    /// `Z[i]`, a Dedekind domain known only through classification rules.
    GaussianZi,
    /// `π⁻¹(top)` for a valuation domain `V` of the given rank whose residue
    /// field contains the fraction field of `top`.
    PullbackVD { rank: usize, top: Box<CatalogDomain> },
}

/// Maximal ideals `(p, f)` of `Z[X]` carried as caps of the height-one family.
pub const ZX_CAPS: &[(u64, &[i64])] = &[
    (2, &[0, 1]),
    (2, &[1, 1]),
    (2, &[1, 1, 1]),
    (3, &[0, 1]),
    (3, &[-1, 1]),
    (3, &[1, 1]),
    (3, &[1, 0, 1]),
    (5, &[0, 1]),
    (5, &[-2, 1]),
    (7, &[0, 1]),
];

/// Height-one indices scanned when listing the points below a cap.
const CAP_SCAN: usize = 240;

pub fn cap_label(p: u64, f: &UniPolyZ) -> String {
    format!("({p}, {f})")
}

/// `f ∈ (p, g)` for `g` irreducible modulo `p`.
pub fn in_zx_maximal(f: &UniPolyZ, p: u64, g: &UniPolyZ) -> bool {
    let fr = reduce_mod_p(f, p);
    fr.is_empty() || fp::rem(&fr, &reduce_mod_p(g, p), p).is_empty()
}

fn zx_caps() -> Vec<Cap> {
    ZX_CAPS
        .iter()
        .map(|(p, cs)| {
            let g = UniPolyZ::from_i64s(cs);
            let above = (0..CAP_SCAN)
                .filter(|&j| match zx_height_one_at(j) {
                    Some(ZxFactor::Prime(q)) => q == *p,
                    Some(ZxFactor::Poly(f)) => in_zx_maximal(&f, *p, &g),
                    None => false,
                })
                .collect();
            Cap { id: cap_label(*p, &g), above }
        })
        .collect()
}

/// Polynomials acting on the height-one family of `Z[X]` or the maximal
/// family of `Q[X]`; vanishing sets come from low-degree splitting.
#[derive(Debug, Clone)]
pub struct PolyElements {
    pub integral: bool,
}

impl ElementSemantics for PolyElements {
    fn vanishing(&self, shape: &Shape, sym: &str) -> Result<SubsetDesc> {
        let f = UniPolyZ::parse(sym).map_err(|_| Error::UnknownElement(sym.into()))?;
        if f.is_zero() {
            return Ok(shape.full());
        }
        let split = split_low_degree(&f).ok_or_else(|| Error::UnknownElement(format!("{sym}: supply a factorization")))?;
        let mut idx = Vec::new();
        for q in split.keys() {
            let j = match (self.integral, q) {
                (true, q) => zx_height_one_index(q),
                (false, ZxFactor::Prime(_)) => continue,
                (false, ZxFactor::Poly(g)) => irreducible_index(g),
            };
            idx.push(j.ok_or_else(|| Error::UnknownElement(format!("{sym}: factor {q} is outside the enumeration")))?);
        }
        let caps: BTreeSet<String> = if self.integral {
            ZX_CAPS
                .iter()
                .filter(|(p, cs)| in_zx_maximal(&f, *p, &UniPolyZ::from_i64s(cs)))
                .map(|(p, cs)| cap_label(*p, &UniPolyZ::from_i64s(cs)))
                .collect()
        } else {
            BTreeSet::new()
        };
        Ok(SubsetDesc::Family { generic: false, indices: IndexSet::finite(idx), caps })
    }

    fn symbols(&self) -> Vec<String> {
        let mut v = vec!["0", "1", "X", "X^2+1", "X^2-1", "X-2", "2*X+1", "X^2+X+1"];
        if self.integral {
            v.extend(["2", "6", "2*X+2", "3*X-3", "5*X^2+5"]);
        }
        v.into_iter().map(String::from).collect()
    }
}

/// The top of a pullback spectrum: the generic point of the top domain
/// becomes the glue point `M_V`.
pub fn glue_top_shape(shape: &Shape) -> Shape {
    match shape {
        Shape::Family(f) => Shape::Family(Family { generic_label: "M_V".into(), ..f.clone() }),
        Shape::Poset(p) => {
            let ids: Vec<String> = p.ids().iter().map(|id| if id == "(0)" { "M_V".into() } else { id.clone() }).collect();
            let mut rel = Vec::new();
            for (i, a) in p.ids().iter().enumerate() {
                for (j, b) in p.ids().iter().enumerate() {
                    if i != j && p.leq(a, b).unwrap_or(false) {
                        rel.push((ids[i].clone(), ids[j].clone()));
                    }
                }
            }
            Shape::Poset(FinitePoset::new(&ids, &rel).expect("relabeling keeps the order"))
        }
        other => other.clone(),
    }
}

/// Transports a subset of the top domain's spectrum along [`glue_top_shape`].
pub fn glue_top_subset(s: &SubsetDesc) -> SubsetDesc {
    match s {
        SubsetDesc::Poset(ids) => SubsetDesc::Poset(ids.iter().map(|id| if id == "(0)" { "M_V".into() } else { id.clone() }).collect()),
        other => other.clone(),
    }
}

impl CatalogDomain {
    pub fn localized_only(ps: impl IntoIterator<Item = u64>) -> Self {
        CatalogDomain::LocalizedZ(ActivePrimes::only(ps))
    }

    pub fn localized_inverting(ps: impl IntoIterator<Item = u64>) -> Self {
        CatalogDomain::LocalizedZ(ActivePrimes::all_except(ps))
    }

    pub fn pullback(rank: usize, top: CatalogDomain) -> Self {
        CatalogDomain::PullbackVD { rank, top: Box::new(top) }
    }

    /// Short identifier, also accepted by [`CatalogDomain::parse_id`].
    pub fn id(&self) -> String {
        match self {
            CatalogDomain::Field => "Q".into(),
            CatalogDomain::IntegersZ => "Z".into(),
            CatalogDomain::LocalizedZ(ActivePrimes::Only(s)) => {
                format!("Zloc:{}", s.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            }
            CatalogDomain::LocalizedZ(ActivePrimes::AllExcept(s)) => {
                format!("Zinv:{}", s.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            }
            CatalogDomain::PolyQ => "QX".into(),
            CatalogDomain::PolyZX => "ZX".into(),
            CatalogDomain::ZPlusXQX => "Z+XQX".into(),
            CatalogDomain::GaussianZi => "Zi".into(),
            CatalogDomain::PullbackVD { rank, top } => format!("pullback:{rank}:{}", top.id()),
        }
    }

    pub fn parse_id(s: &str) -> Result<Self> {
        let s = s.trim();
        let primes = |rest: &str| -> Result<Vec<u64>> {
            rest.split(',')
                .map(|t| {
                    let p: u64 = t.trim().parse().map_err(|_| Error::Parse(format!("bad prime {t}")))?;
                    if crate::arith::primes::is_prime(p) {
                        Ok(p)
                    } else {
                        Err(Error::Parse(format!("{p} is not prime")))
                    }
                })
                .collect()
        };
        Ok(match s {
            "Q" => CatalogDomain::Field,
            "Z" => CatalogDomain::IntegersZ,
            "QX" | "Q[X]" => CatalogDomain::PolyQ,
            "ZX" | "Z[X]" => CatalogDomain::PolyZX,
            "Z+XQX" | "Z+XQ[X]" => CatalogDomain::ZPlusXQX,
            "Zi" | "Z[i]" => CatalogDomain::GaussianZi,
            _ => {
                if let Some(rest) = s.strip_prefix("Zloc:") {
                    CatalogDomain::localized_only(primes(rest)?)
                } else if let Some(rest) = s.strip_prefix("Zinv:") {
                    CatalogDomain::localized_inverting(primes(rest)?)
                } else if let Some(rest) = s.strip_prefix("pullback:") {
                    let (rank, top) = rest.split_once(':').ok_or_else(|| Error::Parse(format!("bad pullback id {s}")))?;
                    let rank: usize = rank.parse().map_err(|_| Error::Parse(format!("bad rank {rank}")))?;
                    if rank == 0 {
                        return Err(Error::Parse("valuation rank must be positive".into()));
                    }
                    CatalogDomain::pullback(rank, CatalogDomain::parse_id(top)?)
                } else {
                    return Err(Error::Parse(format!("unknown catalog domain {s}")));
                }
            }
        })
    }

    /// Colon, v- and t-operations are available through the gcd rule.
    pub fn supports_ideal_arithmetic(&self) -> bool {
        matches!(
            self,
            CatalogDomain::Field
                | CatalogDomain::IntegersZ
                | CatalogDomain::LocalizedZ(_)
                | CatalogDomain::PolyQ
                | CatalogDomain::PolyZX
        )
    }

    pub fn is_ufd(&self) -> bool {
        self.supports_ideal_arithmetic()
    }

    pub fn is_prufer(&self) -> bool {
        match self {
            CatalogDomain::PolyZX => false,
            CatalogDomain::PullbackVD { top, .. } => top.is_prufer(),
            _ => true,
        }
    }

    /// Elements of the domain are constants (the domain sits inside `Q`).
    fn is_rational_domain(&self) -> bool {
        matches!(self, CatalogDomain::Field | CatalogDomain::IntegersZ | CatalogDomain::LocalizedZ(_))
    }

    fn require_arith(&self) -> Result<()> {
        if self.supports_ideal_arithmetic() {
            Ok(())
        } else {
            Err(Error::UnsupportedDomain(self.id()))
        }
    }

    /// Checks that `x` lies in the fraction field of the domain.
    pub fn check_in_fraction_field(&self, x: &FracElem) -> Result<()> {
        if self.is_rational_domain() && !x.is_rational() {
            return Err(Error::Precondition(format!("{x} is not in the fraction field of {}", self.id())));
        }
        Ok(())
    }

    /// Membership in the domain itself.
    pub fn contains(&self, x: &FracElem) -> Result<bool> {
        self.check_in_fraction_field(x)?;
        let den_is_unit = x.den().is_constant() && x.den().lead().is_some_and(One::is_one);
        Ok(match self {
            CatalogDomain::Field => true,
            CatalogDomain::IntegersZ | CatalogDomain::PolyZX => den_is_unit,
            CatalogDomain::LocalizedZ(active) => active.active_part(&x.den().constant_coeff()).is_one(),
            CatalogDomain::PolyQ => x.den().is_constant(),
            CatalogDomain::ZPlusXQX => {
                x.den().is_constant() && (x.num().constant_coeff() % x.den().constant_coeff()).is_zero()
            }
            _ => return Err(Error::UnsupportedDomain(self.id())),
        })
    }

    /// Canonical associate of a nonzero element: a fixed representative of
    /// `x · units`.
    pub fn normalize_associate(&self, x: &FracElem) -> Result<FracElem> {
        self.require_arith()?;
        self.check_in_fraction_field(x)?;
        if x.is_zero() {
            return Ok(x.clone());
        }
        Ok(match self {
            CatalogDomain::Field => FracElem::one(),
            CatalogDomain::IntegersZ | CatalogDomain::PolyZX => {
                if x.num().lead().is_some_and(|l| l.is_negative()) {
                    x.neg()
                } else {
                    x.clone()
                }
            }
            CatalogDomain::LocalizedZ(active) => {
                let n = active.active_part(&x.num().constant_coeff()).abs();
                let d = active.active_part(&x.den().constant_coeff()).abs();
                FracElem::new(UniPolyZ::constant(n), UniPolyZ::constant(d))?
            }
            CatalogDomain::PolyQ => {
                let (_, n) = content_primitive(x.num())?;
                let (_, d) = content_primitive(x.den())?;
                FracElem::new(n.normalize_sign(), d.normalize_sign())?
            }
            _ => unreachable!("arith required"),
        })
    }

    /// `x | y` in the domain, i.e. `y/x ∈ D`.
    pub fn divides(&self, x: &FracElem, y: &FracElem) -> Result<bool> {
        if x.is_zero() {
            return Ok(y.is_zero());
        }
        self.contains(&y.div(x)?)
    }

    /// Greatest common divisor of nonzero elements of the fraction field,
    /// as a canonical associate: `h/d` where `d` clears all denominators and
    /// `h` is the gcd of the cleared numerators.
    pub fn gcd(&self, xs: &[FracElem]) -> Result<FracElem> {
        self.require_arith()?;
        let nonzero: Vec<&FracElem> = xs.iter().filter(|x| !x.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let mut d = UniPolyZ::one();
        for x in &nonzero {
            self.check_in_fraction_field(x)?;
            let g = gcd_z(&d, x.den())?;
            d = d.mul(x.den()).exact_div(&g)?.expect("lcm");
        }
        let mut h = UniPolyZ::zero();
        for x in &nonzero {
            let cleared = x.num().mul(&d.exact_div(x.den())?.expect("lcm"));
            h = gcd_z(&h, &cleared)?;
        }
        self.normalize_associate(&FracElem::new(h, d)?)
    }

    /// Symbolic spectrum of the domain.
    pub fn model(&self) -> Result<SpectrumModel> {
        Ok(match self {
            CatalogDomain::Field => {
                let poset = FinitePoset::new(&["(0)"], &[])?;
                let mut t = std::collections::BTreeMap::new();
                t.insert("0".to_string(), SubsetDesc::poset(["(0)"]));
                t.insert("1".to_string(), SubsetDesc::poset(Vec::<String>::new()));
                SpectrumModel::new("Q", Shape::Poset(poset), Arc::new(Tabulated(t)))?
            }
            CatalogDomain::IntegersZ => SpectrumModel::integers(ActivePrimes::all()),
            CatalogDomain::LocalizedZ(active) => {
                let mut m = SpectrumModel::integers(active.clone());
                m.name = self.id();
                m
            }
            CatalogDomain::PolyQ => {
                let shape = Shape::Family(Family::new("QX", "(0)", IndexLabels::QxMaximal));
                SpectrumModel::new("QX", shape, Arc::new(PolyElements { integral: false }))?
            }
            CatalogDomain::PolyZX => {
                let shape = Shape::Family(Family::new("ZX", "(0)", IndexLabels::ZxHeightOne).with_caps(zx_caps()));
                SpectrumModel::new("ZX", shape, Arc::new(PolyElements { integral: true }))?
            }
            CatalogDomain::GaussianZi => {
                let shape = Shape::Family(Family::new("Zi", "(0)", IndexLabels::Gaussian));
                SpectrumModel::new("Zi", shape, Arc::new(IntegerElements))?
            }
            CatalogDomain::ZPlusXQX => return Err(Error::UnsupportedDomain(self.id())),
            CatalogDomain::PullbackVD { rank, top } => {
                let top_model = top.model()?;
                let bottom = (0..*rank).map(|k| format!("P{k}")).collect();
                let shape = Shape::OrdinalSum { bottom, top: Box::new(glue_top_shape(&top_model.shape)) };
                SpectrumModel::bare(self.id(), shape)
            }
        })
    }
}

impl fmt::Display for CatalogDomain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

impl Serialize for CatalogDomain {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.id())
    }
}

/// Integer value of a constant element, if it is one.
pub fn as_integer(x: &FracElem) -> Option<BigInt> {
    (x.is_rational() && x.den().lead().is_some_and(One::is_one)).then(|| x.num().constant_coeff())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> FracElem {
        FracElem::parse(s).unwrap()
    }

    #[test]
    fn gcd_rule() {
        let z = CatalogDomain::IntegersZ;
        assert_eq!(z.gcd(&[e("4"), e("6")]).unwrap(), e("2"));
        assert_eq!(z.gcd(&[e("1/2"), e("1/3")]).unwrap(), e("1/6"));
        let zx = CatalogDomain::PolyZX;
        assert_eq!(zx.gcd(&[e("5"), e("X")]).unwrap(), e("1"));
        assert_eq!(zx.gcd(&[e("4*X+4"), e("6*X+6")]).unwrap(), e("2*X+2"));
        let qx = CatalogDomain::PolyQ;
        assert_eq!(qx.gcd(&[e("4*X+4"), e("6*X^2-6")]).unwrap(), e("X+1"));
        let loc = CatalogDomain::localized_only([2, 3]);
        assert_eq!(loc.gcd(&[e("10"), e("30")]).unwrap(), e("2"));
    }

    #[test]
    fn ids_round_trip() {
        for id in ["Z", "Zloc:2,3", "Zinv:2", "QX", "ZX", "Zi", "Q", "pullback:2:Z"] {
            assert_eq!(CatalogDomain::parse_id(id).unwrap().id(), id);
        }
        assert!(CatalogDomain::parse_id("Zloc:4").is_err());
    }

    #[test]
    fn models_build() {
        for d in [CatalogDomain::PolyZX, CatalogDomain::PolyQ, CatalogDomain::GaussianZi, CatalogDomain::pullback(2, CatalogDomain::IntegersZ)] {
            d.model().unwrap();
        }
        let zx = CatalogDomain::PolyZX.model().unwrap();
        let v = zx.vanishing("2*X+2").unwrap();
        assert_eq!(zx.describe(&v), "(2), (2, X + 1), (2, X), (2, X^2 + X + 1), (3, X + 1), (X + 1)");
    }
}
