use std::fmt;

use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use super::domain::{cap_label, CatalogDomain, ZX_CAPS};
use crate::arith::factor::{
    fp, irreducible_at, irreducible_index, irreducible_low_degree, reduce_mod_p, zx_height_one_at, zx_height_one_index,
    ZxFactor,
};
use crate::arith::primes::{gaussian_prime_at, is_prime, ActivePrimes};
use crate::arith::{content_primitive, UniPolyZ};
use crate::spectra::{IndexLabels, PointRef};
use crate::{Error, Result};

/// A prime ideal of a catalog domain, given by generator data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PrimeDesc {
    Zero,
    /// `(p)` in `Z`, a localization, or `Z[X]`; `pZ + XQ[X]` in `Z + XQ[X]`.
    Rational(u64),
    /// `(f)` for `f` primitive irreducible of positive degree: an upper to
    /// zero in `Z[X]`, a maximal ideal in `Q[X]`.
    Upper(UniPolyZ),
    /// `(p, f)` in `Z[X]` with `f` irreducible modulo `p`.
    Maximal { p: u64, f: UniPolyZ },
    /// The `j`-th maximal ideal of `Z[i]`.
    Gaussian(usize),
    /// `XQ[X]` in `Z + XQ[X]`.
    XQX,
    /// The `k`-th nonmaximal prime of the valuation domain in a pullback.
    PullbackBottom(usize),
    /// `π⁻¹` of a prime of the top domain; `π⁻¹((0))` is `M_V`.
    PullbackTop(Box<PrimeDesc>),
}

fn invalid(p: &PrimeDesc, d: &CatalogDomain, why: &str) -> Error {
    Error::InvalidPrime(format!("{p} over {}: {why}", d.id()))
}

/// Monic reduction of `f` modulo `p`, the canonical form of `(p, f)`.
fn monic_mod_p(f: &UniPolyZ, p: u64) -> fp::Poly {
    let r = reduce_mod_p(f, p);
    let lead = *r.last().expect("nonzero mod p");
    let inv = (0..p).find(|&x| (x * lead) % p == 1).expect("p prime");
    r.iter().map(|c| c * inv % p).collect()
}

impl PrimeDesc {
    /// Checks the generator data against the domain's prime classification.
    pub fn validate(&self, d: &CatalogDomain) -> Result<()> {
        let bad = |why: &str| Err(invalid(self, d, why));
        match (d, self) {
            (CatalogDomain::PullbackVD { rank, .. }, PrimeDesc::PullbackBottom(k)) => {
                if k < rank {
                    Ok(())
                } else {
                    bad("index exceeds the valuation rank")
                }
            }
            (CatalogDomain::PullbackVD { top, .. }, PrimeDesc::PullbackTop(inner)) => inner.validate(top),
            (CatalogDomain::PullbackVD { .. }, _) => bad("pullback primes are bottom or top primes"),
            (_, PrimeDesc::Zero) => Ok(()),
            (CatalogDomain::IntegersZ | CatalogDomain::PolyZX | CatalogDomain::ZPlusXQX, PrimeDesc::Rational(p)) => {
                if is_prime(*p) {
                    Ok(())
                } else {
                    bad("not a prime number")
                }
            }
            (CatalogDomain::LocalizedZ(active), PrimeDesc::Rational(p)) => {
                if !is_prime(*p) {
                    bad("not a prime number")
                } else if !active.is_active(*p) {
                    bad("the prime is inverted")
                } else {
                    Ok(())
                }
            }
            (CatalogDomain::PolyQ | CatalogDomain::PolyZX | CatalogDomain::ZPlusXQX, PrimeDesc::Upper(f)) => {
                if f.degree().unwrap_or(0) == 0 {
                    return bad("an upper needs a polynomial of positive degree");
                }
                if matches!(d, CatalogDomain::PolyZX) && !content_primitive(f)?.0.is_one() {
                    return bad("the polynomial is not primitive");
                }
                if irreducible_low_degree(f) == Some(false) {
                    return bad("the polynomial is reducible");
                }
                if matches!(d, CatalogDomain::ZPlusXQX) && f.constant_coeff() == 0.into() {
                    return bad("(X) meets Z + XQ[X] in XQ[X]");
                }
                Ok(())
            }
            (CatalogDomain::PolyZX, PrimeDesc::Maximal { p, f }) => {
                if !is_prime(*p) {
                    return bad("not a prime number");
                }
                let r = reduce_mod_p(f, *p);
                if r.len() < 2 || !fp::is_irreducible(&r, *p) {
                    return bad("the polynomial is not irreducible modulo p");
                }
                Ok(())
            }
            (CatalogDomain::GaussianZi, PrimeDesc::Gaussian(_)) => Ok(()),
            (CatalogDomain::ZPlusXQX, PrimeDesc::XQX) => Ok(()),
            _ => bad("not a prime of this domain"),
        }
    }

    /// t-prime rule. UFDs: `(0)` and height-one primes. Prüfer domains: every
    /// prime. Pullbacks: bottom primes and `π⁻¹` of top t-primes.
    pub fn is_t_prime(&self, d: &CatalogDomain) -> Result<bool> {
        self.validate(d)?;
        Ok(match (d, self) {
            (CatalogDomain::PolyZX, PrimeDesc::Maximal { .. }) => false,
            (CatalogDomain::PullbackVD { top, .. }, PrimeDesc::PullbackTop(inner)) => inner.is_t_prime(top)?,
            _ => true,
        })
    }

    /// Whether the localization at the prime is a valuation domain.
    pub fn essential_at(&self, d: &CatalogDomain) -> Result<bool> {
        self.validate(d)?;
        Ok(match (d, self) {
            (CatalogDomain::PolyZX, PrimeDesc::Maximal { .. }) => false,
            (CatalogDomain::PullbackVD { top, .. }, PrimeDesc::PullbackTop(inner)) => inner.essential_at(top)?,
            _ => true,
        })
    }

    /// Canonical form: uppers with positive leading coefficient, maximal
    /// ideals with the monic reduction of `f` lifted to `0..p`.
    pub fn canonical(&self) -> PrimeDesc {
        match self {
            PrimeDesc::Upper(f) => PrimeDesc::Upper(f.normalize_sign()),
            PrimeDesc::Maximal { p, f } => {
                let r = monic_mod_p(f, *p);
                PrimeDesc::Maximal { p: *p, f: UniPolyZ::new(r.iter().map(|&c| c.into()).collect()) }
            }
            PrimeDesc::PullbackTop(inner) => PrimeDesc::PullbackTop(Box::new(inner.canonical())),
            other => other.clone(),
        }
    }

    /// The point of the domain's spectrum model.
    pub fn point(&self, d: &CatalogDomain) -> Result<PointRef> {
        self.validate(d)?;
        let unmaterialized = || invalid(self, d, "not materialized in the spectrum model");
        Ok(match (d, self) {
            (CatalogDomain::Field, PrimeDesc::Zero) => PointRef::Id("(0)".into()),
            (CatalogDomain::LocalizedZ(ActivePrimes::Only(_)), PrimeDesc::Zero) => PointRef::Id("(0)".into()),
            (CatalogDomain::LocalizedZ(ActivePrimes::Only(_)), PrimeDesc::Rational(p)) => PointRef::Id(format!("({p})")),
            (CatalogDomain::IntegersZ, PrimeDesc::Rational(p)) => {
                PointRef::Index(ActivePrimes::all().index_of(*p).expect("validated prime"))
            }
            (CatalogDomain::LocalizedZ(active), PrimeDesc::Rational(p)) => {
                PointRef::Index(active.index_of(*p).expect("validated prime"))
            }
            (CatalogDomain::PolyQ, PrimeDesc::Upper(f)) => PointRef::Index(irreducible_index(f).ok_or_else(unmaterialized)?),
            (CatalogDomain::PolyZX, PrimeDesc::Rational(p)) => {
                PointRef::Index(zx_height_one_index(&ZxFactor::Prime(*p)).expect("validated prime"))
            }
            (CatalogDomain::PolyZX, PrimeDesc::Upper(f)) => {
                PointRef::Index(zx_height_one_index(&ZxFactor::Poly(f.normalize_sign())).ok_or_else(unmaterialized)?)
            }
            (CatalogDomain::PolyZX, PrimeDesc::Maximal { p, f }) => {
                let target = monic_mod_p(f, *p);
                let (q, g) = ZX_CAPS
                    .iter()
                    .find(|(q, g)| q == p && monic_mod_p(&UniPolyZ::from_i64s(g), *q) == target)
                    .ok_or_else(unmaterialized)?;
                PointRef::Id(cap_label(*q, &UniPolyZ::from_i64s(g)))
            }
            (CatalogDomain::GaussianZi, PrimeDesc::Gaussian(j)) => PointRef::Index(*j),
            (CatalogDomain::ZPlusXQX, _) => return Err(Error::UnsupportedDomain(d.id())),
            (CatalogDomain::PullbackVD { .. }, PrimeDesc::PullbackBottom(k)) => PointRef::Bottom(format!("P{k}")),
            (CatalogDomain::PullbackVD { top, .. }, PrimeDesc::PullbackTop(inner)) => match inner.point(top)? {
                PointRef::Id(id) if id == "(0)" => PointRef::top(PointRef::Id("M_V".into())),
                q => PointRef::top(q),
            },
            (_, PrimeDesc::Zero) => PointRef::Generic,
            _ => return Err(invalid(self, d, "no point in the spectrum model")),
        })
    }

    /// Inverse of [`PrimeDesc::point`].
    pub fn at(d: &CatalogDomain, p: &PointRef) -> Result<PrimeDesc> {
        let unknown = || Error::UnknownPoint(format!("{p:?} in {}", d.id()));
        Ok(match (d, p) {
            (CatalogDomain::PullbackVD { rank, .. }, PointRef::Bottom(id)) => {
                let k: usize = id.strip_prefix('P').and_then(|k| k.parse().ok()).ok_or_else(unknown)?;
                if k >= *rank {
                    return Err(unknown());
                }
                PrimeDesc::PullbackBottom(k)
            }
            (CatalogDomain::PullbackVD { top, .. }, PointRef::Top(inner)) => {
                let inner = match &**inner {
                    PointRef::Id(id) if id == "M_V" => PointRef::Id("(0)".into()),
                    q => q.clone(),
                };
                PrimeDesc::PullbackTop(Box::new(PrimeDesc::at(top, &inner)?))
            }
            (_, PointRef::Generic) => PrimeDesc::Zero,
            (_, PointRef::Id(id)) if id == "(0)" => PrimeDesc::Zero,
            (CatalogDomain::LocalizedZ(ActivePrimes::Only(s)), PointRef::Id(id)) => {
                let p: u64 = id.strip_prefix('(').and_then(|r| r.strip_suffix(')')).and_then(|r| r.parse().ok()).ok_or_else(unknown)?;
                if !s.contains(&p) {
                    return Err(unknown());
                }
                PrimeDesc::Rational(p)
            }
            (CatalogDomain::IntegersZ, PointRef::Index(j)) => PrimeDesc::Rational(ActivePrimes::all().nth(*j).ok_or_else(unknown)?),
            (CatalogDomain::LocalizedZ(active), PointRef::Index(j)) => PrimeDesc::Rational(active.nth(*j).ok_or_else(unknown)?),
            (CatalogDomain::PolyQ, PointRef::Index(j)) => PrimeDesc::Upper(irreducible_at(*j).ok_or_else(unknown)?),
            (CatalogDomain::PolyZX, PointRef::Index(j)) => match zx_height_one_at(*j).ok_or_else(unknown)? {
                ZxFactor::Prime(p) => PrimeDesc::Rational(p),
                ZxFactor::Poly(f) => PrimeDesc::Upper(f),
            },
            (CatalogDomain::PolyZX, PointRef::Id(id)) => {
                let (p, g) = ZX_CAPS
                    .iter()
                    .find(|(q, g)| cap_label(*q, &UniPolyZ::from_i64s(g)) == *id)
                    .ok_or_else(unknown)?;
                PrimeDesc::Maximal { p: *p, f: UniPolyZ::from_i64s(g) }
            }
            (CatalogDomain::GaussianZi, PointRef::Index(j)) => PrimeDesc::Gaussian(*j),
            _ => return Err(unknown()),
        })
    }

    /// Parses `prime over <domain>: <prime>` or a bare `upper (f)`, which
    /// is taken over `Z[X]`.
    pub fn parse(s: &str) -> Result<(CatalogDomain, PrimeDesc)> {
        let s = s.trim();
        if s.starts_with("upper") {
            let d = CatalogDomain::PolyZX;
            let p = PrimeDesc::parse_in(&d, s)?;
            return Ok((d, p));
        }
        let rest = s.strip_prefix("prime over").ok_or_else(|| Error::Parse(format!("expected `prime over`: {s}")))?;
        let (dom, body) = rest.split_once(':').ok_or_else(|| Error::Parse("expected `:` after the domain".into()))?;
        // Domain ids may themselves contain `:`.
        let (dom, body) = match CatalogDomain::parse_id(dom) {
            Ok(d) => (d, body),
            Err(_) => {
                let (d, b) = rest.rsplit_once(':').ok_or_else(|| Error::Parse("expected `:`".into()))?;
                (CatalogDomain::parse_id(d)?, b)
            }
        };
        let p = PrimeDesc::parse_in(&dom, body)?;
        Ok((dom, p))
    }

    /// Parses a prime literal relative to a known domain.
    pub fn parse_in(d: &CatalogDomain, body: &str) -> Result<PrimeDesc> {
        let body = body.trim();
        let p = match d {
            CatalogDomain::PullbackVD { top, .. } => {
                if let Some(k) = body.strip_prefix('P').and_then(|k| k.parse().ok()) {
                    PrimeDesc::PullbackBottom(k)
                } else if body == "M_V" {
                    PrimeDesc::PullbackTop(Box::new(PrimeDesc::Zero))
                } else {
                    let inner = body.strip_prefix("top").unwrap_or(body);
                    PrimeDesc::PullbackTop(Box::new(PrimeDesc::parse_in(top, inner)?))
                }
            }
            CatalogDomain::GaussianZi => {
                if body == "(0)" {
                    PrimeDesc::Zero
                } else {
                    let j = IndexLabels::Gaussian.parse(body).ok_or_else(|| Error::Parse(format!("unknown prime {body}")))?;
                    PrimeDesc::Gaussian(j)
                }
            }
            CatalogDomain::ZPlusXQX if body == "XQ[X]" => PrimeDesc::XQX,
            _ => {
                let upper = body.strip_prefix("upper").map(str::trim);
                let inner = upper
                    .unwrap_or(body)
                    .strip_prefix('(')
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| Error::Parse(format!("expected a parenthesized prime: {body}")))?;
                let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
                match parts.as_slice() {
                    [one] => {
                        let f = UniPolyZ::parse(one)?;
                        match f.degree() {
                            None => PrimeDesc::Zero,
                            Some(0) if upper.is_none() => {
                                let p = f.lead().and_then(|c| c.abs().to_u64()).ok_or_else(|| Error::Parse(format!("bad prime {one}")))?;
                                PrimeDesc::Rational(p)
                            }
                            Some(0) => return Err(Error::Parse("an upper needs a polynomial of positive degree".into())),
                            Some(_) => PrimeDesc::Upper(f.normalize_sign()),
                        }
                    }
                    [p, f] => {
                        let p: u64 = p.parse().map_err(|_| Error::Parse(format!("bad prime {p}")))?;
                        PrimeDesc::Maximal { p, f: UniPolyZ::parse(f)? }
                    }
                    _ => return Err(Error::Parse(format!("unrecognized prime {body}"))),
                }
            }
        };
        p.validate(d)?;
        Ok(p)
    }
}

impl fmt::Display for PrimeDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeDesc::Zero => write!(f, "(0)"),
            PrimeDesc::Rational(p) => write!(f, "({p})"),
            PrimeDesc::Upper(g) => write!(f, "({g})"),
            PrimeDesc::Maximal { p, f: g } => write!(f, "({p}, {g})"),
            PrimeDesc::Gaussian(j) => write!(f, "{}", IndexLabels::Gaussian.label(*j)),
            PrimeDesc::XQX => write!(f, "XQ[X]"),
            PrimeDesc::PullbackBottom(k) => write!(f, "P{k}"),
            PrimeDesc::PullbackTop(inner) if **inner == PrimeDesc::Zero => write!(f, "M_V"),
            PrimeDesc::PullbackTop(inner) => write!(f, "π⁻¹{inner}"),
        }
    }
}

impl Serialize for PrimeDesc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Every prime with finite generator data that the catalog lists explicitly.
pub fn tabulated_primes(d: &CatalogDomain) -> Vec<PrimeDesc> {
    let mut out = vec![PrimeDesc::Zero];
    match d {
        CatalogDomain::Field => {}
        CatalogDomain::IntegersZ => out.extend([2, 3, 5, 7].map(PrimeDesc::Rational)),
        CatalogDomain::LocalizedZ(active) => out.extend((0..4).filter_map(|j| active.nth(j)).map(PrimeDesc::Rational)),
        CatalogDomain::PolyQ => out.extend((0..4).filter_map(irreducible_at).map(PrimeDesc::Upper)),
        CatalogDomain::PolyZX => {
            out.extend([2, 3, 5].map(PrimeDesc::Rational));
            out.extend((0..4).filter_map(irreducible_at).map(PrimeDesc::Upper));
            out.extend(ZX_CAPS.iter().map(|(p, g)| PrimeDesc::Maximal { p: *p, f: UniPolyZ::from_i64s(g) }));
        }
        CatalogDomain::GaussianZi => out.extend((0..5).map(PrimeDesc::Gaussian)),
        CatalogDomain::ZPlusXQX => {
            out.push(PrimeDesc::XQX);
            out.extend([2, 3].map(PrimeDesc::Rational));
            out.push(PrimeDesc::Upper(UniPolyZ::from_i64s(&[1, 0, 1])));
        }
        CatalogDomain::PullbackVD { rank, top } => {
            out.clear();
            out.extend((0..*rank).map(PrimeDesc::PullbackBottom));
            out.extend(tabulated_primes(top).into_iter().map(|q| PrimeDesc::PullbackTop(Box::new(q))));
        }
    }
    out
}

/// The `j`-th prime of an indexed family of the domain, when it has one.
pub fn indexed_prime(d: &CatalogDomain, j: usize) -> Option<PrimeDesc> {
    match d {
        CatalogDomain::IntegersZ => Some(PrimeDesc::Rational(ActivePrimes::all().nth(j)?)),
        CatalogDomain::LocalizedZ(active) if !active.is_finite() => Some(PrimeDesc::Rational(active.nth(j)?)),
        CatalogDomain::PolyQ => irreducible_at(j).map(PrimeDesc::Upper),
        CatalogDomain::PolyZX => match zx_height_one_at(j)? {
            ZxFactor::Prime(p) => Some(PrimeDesc::Rational(p)),
            ZxFactor::Poly(f) => Some(PrimeDesc::Upper(f)),
        },
        CatalogDomain::GaussianZi => Some(PrimeDesc::Gaussian(j)),
        CatalogDomain::PullbackVD { top, .. } => indexed_prime(top, j).map(|q| PrimeDesc::PullbackTop(Box::new(q))),
        _ => None,
    }
}

/// Rational prime below a maximal ideal of `Z[i]`.
pub fn gaussian_contraction(j: usize) -> u64 {
    gaussian_prime_at(j).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_rules() {
        let (d, m) = PrimeDesc::parse("prime over Z[X]: (5, X-2)").unwrap();
        assert!(!m.is_t_prime(&d).unwrap());
        assert!(!m.essential_at(&d).unwrap());
        let (d, u) = PrimeDesc::parse("upper (X^2+1)").unwrap();
        assert!(u.is_t_prime(&d).unwrap() && u.essential_at(&d).unwrap());
        let (d, p) = PrimeDesc::parse("prime over Z: (7)").unwrap();
        assert!(p.is_t_prime(&d).unwrap());
        assert!(PrimeDesc::parse("prime over Z[X]: (5, X^2+1)").is_err());
        assert!(PrimeDesc::parse("prime over Zloc:2,3: (5)").is_err());
    }

    #[test]
    fn points_round_trip() {
        for d in [
            CatalogDomain::IntegersZ,
            CatalogDomain::localized_only([2, 3]),
            CatalogDomain::localized_inverting([2]),
            CatalogDomain::PolyQ,
            CatalogDomain::PolyZX,
            CatalogDomain::GaussianZi,
            CatalogDomain::pullback(2, CatalogDomain::PolyZX),
            CatalogDomain::pullback(1, CatalogDomain::Field),
        ] {
            let model = d.model().unwrap();
            for p in tabulated_primes(&d) {
                let pt = p.point(&d).unwrap();
                model.shape.validate_point(&pt).unwrap();
                assert_eq!(PrimeDesc::at(&d, &pt).unwrap().canonical(), p.canonical(), "{d} {p}");
            }
        }
    }

    #[test]
    fn maximal_matches_cap() {
        let d = CatalogDomain::PolyZX;
        let m = PrimeDesc::Maximal { p: 5, f: UniPolyZ::from_i64s(&[3, 1]) };
        assert_eq!(m.point(&d).unwrap(), PointRef::Id("(5, X - 2)".into()));
    }
}
