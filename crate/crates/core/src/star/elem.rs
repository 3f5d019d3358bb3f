use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{gcd_z, BigInt, Rational, UniPolyQ, UniPolyZ};
use crate::{Error, Result};

/// An element `num/den` of `Q(X)`; constants cover `Q`.
///
/// Invariants: `den ≠ 0`, `gcd(num, den) = 1` in `Z[X]`, `den` has positive
/// leading coefficient, and `0` is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FracElem {
    num: UniPolyZ,
    den: UniPolyZ,
}

impl FracElem {
    pub fn new(num: UniPolyZ, den: UniPolyZ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(FracElem { num, den: UniPolyZ::one() });
        }
        let g = gcd_z(&num, &den)?;
        let mut n = num.exact_div(&g)?.expect("gcd divides");
        let mut d = den.exact_div(&g)?.expect("gcd divides");
        if d.lead().is_some_and(|l| l.is_negative()) {
            n = n.neg();
            d = d.neg();
        }
        Ok(FracElem { num: n, den: d })
    }

    pub fn from_poly(f: UniPolyZ) -> Self {
        FracElem::new(f, UniPolyZ::one()).expect("nonzero denominator")
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        FracElem::from_poly(UniPolyZ::constant(n.into()))
    }

    pub fn rational(r: &Rational) -> Self {
        FracElem::new(UniPolyZ::constant(r.numer().clone()), UniPolyZ::constant(r.denom().clone())).expect("nonzero")
    }

    pub fn from_q(f: &UniPolyQ) -> Self {
        match f.primitive_z() {
            None => FracElem::integer(0),
            Some((c, g)) => FracElem::from_poly(g.scale(c.numer())).div(&FracElem::integer(c.denom().clone())).expect("nonzero"),
        }
    }

    pub fn zero() -> Self {
        FracElem::integer(0)
    }

    pub fn one() -> Self {
        FracElem::integer(1)
    }

    pub fn num(&self) -> &UniPolyZ {
        &self.num
    }

    pub fn den(&self) -> &UniPolyZ {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_constant() && self.den.is_constant() && self.num == self.den
    }

    /// Both numerator and denominator are constants.
    pub fn is_rational(&self) -> bool {
        self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| Rational::new(self.num.constant_coeff(), self.den.constant_coeff()))
    }

    pub fn mul(&self, o: &FracElem) -> FracElem {
        FracElem::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn div(&self, o: &FracElem) -> Result<FracElem> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        FracElem::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn add(&self, o: &FracElem) -> FracElem {
        FracElem::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn neg(&self) -> FracElem {
        FracElem { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn inverse(&self) -> Result<FracElem> {
        FracElem::one().div(self)
    }

    /// Parses a polynomial in `X` with rational coefficients, or a quotient
    /// `f/g` of such, parenthesized as needed: `(X+1)/X`, `(X^2-1)/(X-1)`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = strip_parens(s.trim());
        let direct = UniPolyQ::parse(s);
        if let Ok(f) = direct {
            return Ok(FracElem::from_q(&f));
        }
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
            Some(i) if depth == 0 => FracElem::parse(&s[..i])?.div(&FracElem::parse(&s[i + 1..])?),
            _ => Err(direct.unwrap_err()),
        }
    }
}

/// Removes one pair of parentheses enclosing the whole string.
fn strip_parens(s: &str) -> &str {
    let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) else { return s };
    let mut depth = 0i32;
    for ch in inner.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth < 0 {
            return s;
        }
    }
    inner.trim()
}

impl fmt::Display for FracElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.lead().is_some_and(One::is_one) {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &UniPolyZ| if p.num_terms() > 1 { format!("({p})") } else { p.to_string() };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for FracElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FracElem({self})")
    }
}

impl Serialize for FracElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

trait TermCount {
    fn num_terms(&self) -> usize;
}

impl TermCount for UniPolyZ {
    fn num_terms(&self) -> usize {
        self.coeffs().iter().filter(|c| !c.is_zero()).count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form() {
        let x = FracElem::parse("(2*X+2)/(-4)").unwrap();
        assert_eq!(x.to_string(), "(-X - 1)/2");
        assert_eq!(FracElem::parse("6/4").unwrap().to_string(), "3/2");
        let y = FracElem::parse("(X^2-1)/(X-1)").unwrap();
        assert_eq!(y.to_string(), "X + 1");
        assert!(FracElem::parse("X/2").unwrap().mul(&FracElem::integer(2)).to_string() == "X");
    }
}
