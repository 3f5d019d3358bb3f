use std::fmt;

use serde::Serialize;

use super::domain::CatalogDomain;
use super::elem::FracElem;
use crate::arith::factor::generate_unit_ideal;
use crate::{Error, Result};

/// Generators of a fractional ideal; `(0)` is its own variant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IdealGens {
    Zero,
    Gens(Vec<FracElem>),
}

/// A finitely generated fractional ideal over a catalog domain.
#[derive(Debug, Clone, Serialize)]
pub struct FracIdealFG {
    pub domain: CatalogDomain,
    pub gens: IdealGens,
}

impl FracIdealFG {
    /// Zero generators are dropped; an all-zero list gives `(0)`.
    pub fn new(domain: CatalogDomain, gens: Vec<FracElem>) -> Result<Self> {
        for g in &gens {
            domain.check_in_fraction_field(g)?;
        }
        let nonzero: Vec<FracElem> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        let gens = if nonzero.is_empty() { IdealGens::Zero } else { IdealGens::Gens(nonzero) };
        Ok(FracIdealFG { domain, gens })
    }

    pub fn zero(domain: CatalogDomain) -> Self {
        FracIdealFG { domain, gens: IdealGens::Zero }
    }

    pub fn principal(domain: CatalogDomain, g: FracElem) -> Result<Self> {
        FracIdealFG::new(domain, vec![g])
    }

    pub fn is_zero(&self) -> bool {
        self.gens == IdealGens::Zero
    }

    pub fn generators(&self) -> &[FracElem] {
        match &self.gens {
            IdealGens::Zero => &[],
            IdealGens::Gens(g) => g,
        }
    }

    fn require_nonzero(&self) -> Result<&[FracElem]> {
        match &self.gens {
            IdealGens::Zero => Err(Error::ZeroIdeal),
            IdealGens::Gens(g) => Ok(g),
        }
    }

    /// Canonical gcd of the generators.
    pub fn gcd(&self) -> Result<FracElem> {
        self.domain.gcd(self.require_nonzero()?)
    }

    /// `(D : I) = (1/g)D`.
    pub fn colon_to_domain(&self) -> Result<FracIdealFG> {
        let g = self.gcd()?;
        FracIdealFG::principal(self.domain.clone(), self.domain.normalize_associate(&g.inverse()?)?)
    }

    /// `I^v = gD`.
    pub fn v_closure(&self) -> Result<FracIdealFG> {
        FracIdealFG::principal(self.domain.clone(), self.gcd()?)
    }

    /// Equal to the v-closure for finitely generated ideals.
    pub fn t_closure(&self) -> Result<FracIdealFG> {
        if self.is_zero() {
            self.domain.gcd(&[FracElem::one()])?;
            return Ok(self.clone());
        }
        self.v_closure()
    }

    /// `I = I^t`, i.e. the generators divided by their gcd generate `D`.
    pub fn is_t_ideal(&self) -> Result<bool> {
        let gens = match &self.gens {
            IdealGens::Zero => {
                self.domain.gcd(&[FracElem::one()])?;
                return Ok(true);
            }
            IdealGens::Gens(g) => g,
        };
        let g = self.gcd()?;
        match self.domain {
            CatalogDomain::PolyZX => {
                let quotients = gens
                    .iter()
                    .map(|x| {
                        let q = x.div(&g)?;
                        debug_assert!(q.den().is_constant());
                        Ok(q.num().clone())
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(generate_unit_ideal(&quotients))
            }
            // The remaining arithmetic domains are PIDs.
            _ => Ok(true),
        }
    }

    /// Member-set equality for principal-gcd ideals: `I ⊆ J` and `J ⊆ I`.
    /// Sound for ideals known to be principal (all computed ideals).
    pub fn same_principal(&self, other: &FracIdealFG) -> Result<bool> {
        match (&self.gens, &other.gens) {
            (IdealGens::Zero, IdealGens::Zero) => Ok(true),
            (IdealGens::Zero, _) | (_, IdealGens::Zero) => Ok(false),
            _ => {
                let (a, b) = (self.gcd()?, other.gcd()?);
                Ok(self.domain.divides(&a, &b)? && self.domain.divides(&b, &a)?)
            }
        }
    }

    /// `x · I`.
    pub fn scale(&self, x: &FracElem) -> Result<FracIdealFG> {
        FracIdealFG::new(self.domain.clone(), self.generators().iter().map(|g| g.mul(x)).collect())
    }

    /// Parses `ideal over <domain>: g1, g2, ...`; a generator may be written
    /// `name=value`.
    pub fn parse(s: &str) -> Result<Self> {
        let rest = s.trim().strip_prefix("ideal over").ok_or_else(|| Error::Parse(format!("expected `ideal over`: {s}")))?;
        let (dom, gens) = rest.split_once(':').ok_or_else(|| Error::Parse("expected `:` after the domain".into()))?;
        let domain = CatalogDomain::parse_id(dom)?;
        let gens = gens
            .split(',')
            .map(|g| {
                let g = g.trim();
                let v = g.split_once('=').map_or(g, |(_, v)| v.trim());
                FracElem::parse(v)
            })
            .collect::<Result<Vec<_>>>()?;
        if gens.is_empty() {
            return Err(Error::Parse("ideal needs a generator".into()));
        }
        FracIdealFG::new(domain, gens)
    }
}

impl fmt::Display for FracIdealFG {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.gens {
            IdealGens::Zero => write!(f, "(0)"),
            IdealGens::Gens(g) => {
                let parts: Vec<String> = g.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(s: &str) -> FracIdealFG {
        FracIdealFG::parse(s).unwrap()
    }

    #[test]
    fn closures_over_z() {
        let i = ideal("ideal over Z: 4, 6");
        assert_eq!(i.colon_to_domain().unwrap().to_string(), "(1/2)");
        assert_eq!(i.v_closure().unwrap().to_string(), "(2)");
        assert_eq!(i.t_closure().unwrap().to_string(), "(2)");
        assert!(i.is_t_ideal().unwrap());
    }

    #[test]
    fn closures_over_zx() {
        let i = ideal("ideal over Z[X]: p=5, X");
        assert_eq!(i.colon_to_domain().unwrap().to_string(), "(1)");
        assert_eq!(i.v_closure().unwrap().to_string(), "(1)");
        assert!(!i.is_t_ideal().unwrap());
        assert!(!ideal("ideal over ZX: 2*X+2, 4").is_t_ideal().unwrap());
        assert!(ideal("ideal over ZX: 2*X+2, 4*X+4").is_t_ideal().unwrap());
        let z = FracIdealFG::zero(CatalogDomain::PolyZX);
        assert!(z.is_t_ideal().unwrap());
        assert!(z.t_closure().unwrap().is_zero());
        assert_eq!(z.v_closure().unwrap_err(), Error::ZeroIdeal);
    }

    #[test]
    fn oracle_domains_refuse_arithmetic() {
        let i = FracIdealFG::new(CatalogDomain::GaussianZi, vec![FracElem::integer(2)]).unwrap();
        assert!(matches!(i.v_closure(), Err(Error::UnsupportedDomain(_))));
    }
}
