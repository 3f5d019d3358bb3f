use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::arith::primes::ActivePrimes;
use crate::arith::{parse_poly, Alphabet, BigInt, Rational, UniPolyQ};
use crate::star::{CatalogDomain, FracElem};
use crate::{Error, Result};

/// A base ring `D` for which `Int(D)` membership is decidable here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum IntDomain {
    /// `S⁻¹Z` with the active (non-inverted) primes; all primes give `Z` and
    /// none gives `Q`.
    Localized(ActivePrimes),
    /// `Q[X]`; integer-valued polynomials are written in a new variable `Y`.
    PolyQ,
    /// `Q(X)`, the fraction field of `Q[X]`.
    RationalFunctions,
}

impl IntDomain {
    pub fn integers() -> Self {
        IntDomain::Localized(ActivePrimes::all())
    }

    pub fn rationals() -> Self {
        IntDomain::Localized(ActivePrimes::only([]))
    }

    pub fn from_catalog(d: &CatalogDomain) -> Result<Self> {
        match d {
            CatalogDomain::IntegersZ => Ok(IntDomain::integers()),
            CatalogDomain::LocalizedZ(a) => Ok(IntDomain::Localized(a.clone())),
            CatalogDomain::Field => Ok(IntDomain::rationals()),
            CatalogDomain::PolyQ => Ok(IntDomain::PolyQ),
            other => Err(Error::UnsupportedDomain(other.id())),
        }
    }

    /// The catalog domain, when there is one (`Q(X)` has none).
    pub fn catalog(&self) -> Option<CatalogDomain> {
        match self {
            IntDomain::Localized(a) if a.finite_list().is_some_and(|l| l.is_empty()) => Some(CatalogDomain::Field),
            IntDomain::Localized(a) if *a == ActivePrimes::all() => Some(CatalogDomain::IntegersZ),
            IntDomain::Localized(a) => Some(CatalogDomain::LocalizedZ(a.clone())),
            IntDomain::PolyQ => Some(CatalogDomain::PolyQ),
            IntDomain::RationalFunctions => None,
        }
    }

    pub fn id(&self) -> String {
        self.catalog().map_or_else(|| "Q(X)".to_string(), |c| c.id())
    }

    pub fn parse_id(s: &str) -> Result<Self> {
        match s.trim() {
            "Q(X)" => Ok(IntDomain::RationalFunctions),
            other => IntDomain::from_catalog(&CatalogDomain::parse_id(other)?),
        }
    }

    /// Coefficients live in `Q` (`false` means `Q(X)`).
    pub fn rational_coefficients(&self) -> bool {
        matches!(self, IntDomain::Localized(_))
    }

    /// `x ∈ D` for an element of the fraction field.
    pub fn contains(&self, x: &FracElem) -> Result<bool> {
        match self {
            IntDomain::Localized(active) => {
                let q = x.to_rational().ok_or_else(|| Error::Precondition(format!("{x} is not in Q")))?;
                Ok(active.active_part(q.denom()).is_one())
            }
            IntDomain::PolyQ => Ok(x.den().is_constant()),
            IntDomain::RationalFunctions => Ok(true),
        }
    }

    /// `Int(D) = D[X]` for fields and for `Q[X]` (infinite residue fields).
    pub fn int_is_polynomial_ring(&self) -> bool {
        match self {
            IntDomain::Localized(a) => a.finite_list().is_some_and(|l| l.is_empty()),
            _ => true,
        }
    }
}

/// A polynomial over the fraction field of an [`IntDomain`], coefficients
/// listed from the constant term up.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<FracElem>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<FracElem>) -> Self {
        while coeffs.last().is_some_and(FracElem::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_q(f: &UniPolyQ) -> Self {
        IntPoly::new(f.coeffs().iter().map(FracElem::rational).collect())
    }

    /// Back to `Q[X]` when every coefficient is rational.
    pub fn to_q(&self) -> Option<UniPolyQ> {
        self.coeffs.iter().map(FracElem::to_rational).collect::<Option<Vec<_>>>().map(UniPolyQ::new)
    }

    pub fn coeffs(&self) -> &[FracElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(FracElem::is_rational)
    }

    pub fn eval(&self, a: &FracElem) -> FracElem {
        self.coeffs.iter().rev().fold(FracElem::zero(), |acc, c| acc.mul(a).add(c))
    }

    pub fn eval_int(&self, a: i64) -> FracElem {
        self.eval(&FracElem::integer(a))
    }

    pub fn add(&self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let zero = FracElem::zero();
        IntPoly::new((0..n).map(|i| self.coeffs.get(i).unwrap_or(&zero).add(o.coeffs.get(i).unwrap_or(&zero))).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(FracElem::neg).collect())
    }

    pub fn sub(&self, o: &IntPoly) -> IntPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::new(vec![]);
        }
        let mut out = vec![FracElem::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        IntPoly::new(out)
    }

    /// `f` in `X` over `Q`, or for `Q[X]` and `Q(X)` a quotient `g/h` with
    /// `g` in `X, Y` and `h` in `X` alone.
    pub fn parse(s: &str, d: &IntDomain) -> Result<Self> {
        if d.rational_coefficients() {
            return Ok(IntPoly::from_q(&UniPolyQ::parse(s)?));
        }
        let xy = Alphabet::new(["X", "Y"]);
        let (num, den) = split_quotient(s);
        let num = parse_poly(num, &xy)?;
        let den = match den {
            Some(den) => parse_poly(den, &xy)?,
            None => crate::arith::MultiPoly::one(&xy),
        };
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if den.mentions(1) {
            return Err(Error::Parse("the denominator may not mention Y".into()));
        }
        let in_x = |p: &crate::arith::MultiPoly| {
            let deg = p.degree_in(0) as usize;
            let mut v = vec![Rational::zero(); deg + 1];
            for (e, c) in p.terms() {
                v[e[0] as usize] = c.clone();
            }
            FracElem::from_q(&UniPolyQ::new(v))
        };
        let d = in_x(&den);
        (0..=num.degree_in(1)).map(|k| in_x(&num.coeff_in(1, k)).div(&d)).collect::<Result<Vec<_>>>().map(IntPoly::new)
    }

    pub fn variable(&self) -> &'static str {
        if self.is_rational() {
            "X"
        } else {
            "Y"
        }
    }
}

/// Splits at the last top-level `/` whose right side is not a plain number.
fn split_quotient(s: &str) -> (&str, Option<&str>) {
    let mut depth = 0i32;
    let mut split = None;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => split = Some(i),
            _ => {}
        }
    }
    match split {
        Some(i) if !s[i + 1..].trim().chars().all(|c| c.is_ascii_digit()) => (&s[..i], Some(&s[i + 1..])),
        _ => (s, None),
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.to_q() {
            return write!(f, "{q}");
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let y = match k {
                0 => String::new(),
                1 => "*Y".into(),
                _ => format!("*Y^{k}"),
            };
            parts.push(format!("({c}){y}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `f ∈ Int(D)`: the values at `0, 1, …, deg f` lie in `D`.
///
/// For `S⁻¹Z` this is the density criterion: `Z` is dense in each `Z_p` and
/// a polynomial with `p`-integral values on `deg f + 1` consecutive integers
/// has `p`-integral binomial coordinates. For `Q[X]` the values determine the
/// coefficients by interpolation over `Q`.
pub fn int_membership(f: &IntPoly, d: &IntDomain) -> Result<bool> {
    if d.rational_coefficients() && !f.is_rational() {
        return Err(Error::Precondition(format!("{f} has coefficients outside Q")));
    }
    let deg = f.degree().unwrap_or(0) as i64;
    for a in 0..=deg {
        if !d.contains(&f.eval_int(a))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Coordinates of `f` in the binomial basis `C(X, k)`: the iterated forward
/// differences at `0`.
pub fn binomial_coordinates(f: &IntPoly) -> Vec<FracElem> {
    let deg = f.degree().unwrap_or(0);
    let mut values: Vec<FracElem> = (0..=deg as i64).map(|a| f.eval_int(a)).collect();
    let mut out = Vec::new();
    while !values.is_empty() {
        out.push(values[0].clone());
        values = values.windows(2).map(|w| w[1].add(&w[0].neg())).collect();
    }
    out
}

/// Independent membership test: every binomial coordinate lies in `D`.
pub fn int_membership_binomial(f: &IntPoly, d: &IntDomain) -> Result<bool> {
    if d.rational_coefficients() && !f.is_rational() {
        return Err(Error::Precondition(format!("{f} has coefficients outside Q")));
    }
    for c in binomial_coordinates(f) {
        if !d.contains(&c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every coefficient of `f` lies in `D`, i.e. `f ∈ D[X]`.
pub fn coefficients_in(f: &IntPoly, d: &IntDomain) -> Result<bool> {
    for c in f.coeffs() {
        if !d.contains(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `C(X, k)` as a rational polynomial.
pub fn binomial_poly(k: usize) -> UniPolyQ {
    let mut out = UniPolyQ::constant(Rational::one());
    for j in 0..k {
        let factor = UniPolyQ::new(vec![Rational::from_integer(BigInt::from(-(j as i64))), Rational::one()]);
        out = out.mul(&factor).scale(&Rational::new(BigInt::one(), BigInt::from(j as i64 + 1)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> IntPoly {
        IntPoly::from_q(&UniPolyQ::parse(s).unwrap())
    }

    #[test]
    fn membership_examples() {
        let z = IntDomain::integers();
        assert!(int_membership(&q("X*(X-1)/2"), &z).unwrap());
        assert!(!int_membership(&q("X/2"), &z).unwrap());
        let only3 = IntDomain::Localized(ActivePrimes::only([3]));
        assert!(int_membership(&q("X*(X-1)/2"), &only3).unwrap());
        assert!(!int_membership(&q("X*(X-1)*(X-2)/9"), &only3).unwrap());
        assert!(int_membership(&q("0"), &z).unwrap());
        assert!(int_membership(&q("(X^5 - X)/5"), &z).unwrap());
    }

    #[test]
    fn binomial_basis_agrees() {
        for k in 0..7 {
            let b = IntPoly::from_q(&binomial_poly(k));
            assert!(int_membership_binomial(&b, &IntDomain::integers()).unwrap());
            let coords = binomial_coordinates(&b);
            assert!(coords[k].is_one() && coords[..k].iter().all(FracElem::is_zero));
        }
    }

    #[test]
    fn polynomials_over_qx() {
        let d = IntDomain::PolyQ;
        let f = IntPoly::parse("Y^2 + X*Y", &d).unwrap();
        assert!(int_membership(&f, &d).unwrap());
        let g = IntPoly::parse("Y/X", &d).unwrap();
        assert_eq!(g.to_string(), "(1/X)*Y");
        assert!(!int_membership(&g, &d).unwrap());
        assert!(int_membership(&g, &IntDomain::RationalFunctions).unwrap());
        assert!(IntPoly::parse("Y/(X+Y)", &d).is_err());
    }
}
