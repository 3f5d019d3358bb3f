//! Univariate polynomials over `Z` and `Q` in the variable `X`.

use super::{parse_poly, Alphabet, MultiPoly, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::fmt;

/// Integer polynomial, coefficients from degree 0 upwards. The zero
/// polynomial is the empty list; otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniPolyZ {
    coeffs: Vec<BigInt>,
}

/// Rational polynomial in the same canonical form as [`UniPolyZ`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPolyQ {
    coeffs: Vec<Rational>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

impl UniPolyZ {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        UniPolyZ { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        UniPolyZ { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn parse(s: &str) -> Result<Self> {
        let q = UniPolyQ::parse(s)?;
        q.to_z().ok_or_else(|| Error::Parse(format!("{s} has non-integer coefficients")))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn constant_coeff(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    pub fn to_q(&self) -> UniPolyQ {
        UniPolyQ::new(self.coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_default()
                        + o.coeffs.get(i).cloned().unwrap_or_default()
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPolyZ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, a: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * a + c)
    }

    /// Exact quotient in `Z[X]`, if `d` divides `self`.
    pub fn exact_div(&self, d: &Self) -> Result<Option<Self>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.to_q().div_rem(&d.to_q())?;
        if !r.is_zero() {
            return Ok(None);
        }
        Ok(q.to_z())
    }

    pub fn divides(&self, f: &Self) -> bool {
        !self.is_zero() && matches!(f.exact_div(self), Ok(Some(_)))
    }

    /// Multiplies by `-1` if needed so the leading coefficient is positive.
    pub fn normalize_sign(&self) -> Self {
        match self.lead() {
            Some(l) if l.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    pub fn mod_p(&self, p: u64) -> Self {
        let p = BigInt::from(p);
        Self::new(self.coeffs.iter().map(|c| c.mod_floor(&p)).collect())
    }
}

impl UniPolyQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        UniPolyQ { coeffs }
    }

    pub fn zero() -> Self {
        UniPolyQ { coeffs: vec![] }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::from_multi(&parse_poly(s, &Alphabet::univariate())?)
    }

    /// Converts a polynomial over the univariate alphabet `[X]`.
    pub fn from_multi(p: &MultiPoly) -> Result<Self> {
        if p.alphabet().len() != 1 {
            return Err(Error::AlphabetMismatch {
                left: p.alphabet().names().to_vec(),
                right: vec!["X".into()],
            });
        }
        let deg = p.degree_in(0) as usize;
        let mut v = vec![Rational::zero(); deg + 1];
        for (e, c) in p.terms() {
            v[e[0] as usize] = c.clone();
        }
        Ok(Self::new(v))
    }

    pub fn to_multi(&self) -> MultiPoly {
        let a = Alphabet::univariate();
        MultiPoly::from_terms(
            &a,
            self.coeffs.iter().enumerate().map(|(i, c)| (vec![i as u32], c.clone())),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
                        + o.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPolyQ { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dl = d.lead().ok_or(Error::DivisionByZero)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Self {
        match self.lead() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => Self::zero(),
        }
    }

    pub fn eval(&self, a: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * a + c)
    }

    /// Lowest common denominator of the coefficients (1 for the zero polynomial).
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `Some` when every coefficient is an integer.
    pub fn to_z(&self) -> Option<UniPolyZ> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(UniPolyZ::new)
    }

    /// Clears denominators: returns `(c, g)` with `self = c * g`, `g` primitive in
    /// `Z[X]` with positive leading coefficient.
    pub fn primitive_z(&self) -> Option<(Rational, UniPolyZ)> {
        if self.is_zero() {
            return None;
        }
        let l = self.denominator_lcm();
        let z = self.scale(&Rational::from_integer(l.clone())).to_z().expect("cleared");
        let z = z.normalize_sign();
        let (cont, prim) = content_primitive(&z).expect("nonzero");
        let sign = if self.lead().is_some_and(|x| x.is_negative()) { -1 } else { 1 };
        Some((Rational::new(cont * sign, l), prim))
    }
}

/// Splits `f` into a positive content and a primitive part.
pub fn content_primitive(f: &UniPolyZ) -> Result<(BigInt, UniPolyZ)> {
    if f.is_zero() {
        return Err(Error::ZeroContent);
    }
    let c = f.coeffs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let prim = UniPolyZ::new(f.coeffs.iter().map(|x| x / &c).collect());
    Ok((c, prim))
}

/// Monic gcd over `Q`.
pub fn gcd_q(f: &UniPolyQ, g: &UniPolyQ) -> Result<UniPolyQ> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// Gcd in `Z[X]`: gcd of contents times the primitive gcd, positive leading coefficient.
pub fn gcd_z(f: &UniPolyZ, g: &UniPolyZ) -> Result<UniPolyZ> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    if f.is_zero() {
        return Ok(g.normalize_sign());
    }
    if g.is_zero() {
        return Ok(f.normalize_sign());
    }
    let (cf, pf) = content_primitive(f)?;
    let (cg, pg) = content_primitive(g)?;
    let c = cf.gcd(&cg);
    let h = gcd_q(&pf.to_q(), &pg.to_q())?;
    let (_, hp) = h.primitive_z().expect("gcd nonzero");
    Ok(hp.scale(&c))
}

impl fmt::Display for UniPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_q().to_multi())
    }
}

impl fmt::Debug for UniPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPolyZ({self})")
    }
}

impl fmt::Display for UniPolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_multi())
    }
}

impl fmt::Debug for UniPolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPolyQ({self})")
    }
}

impl Serialize for UniPolyZ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Serialize for UniPolyQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(s: &str) -> UniPolyZ {
        UniPolyZ::parse(s).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_z(&z("X^2-1"), &z("X-1")).unwrap(), z("X-1"));
        assert_eq!(gcd_z(&z("5"), &z("X")).unwrap(), z("1"));
        assert_eq!(gcd_z(&z("4X+4"), &z("6X+6")).unwrap(), z("2X+2"));
        assert_eq!(gcd_z(&UniPolyZ::zero(), &UniPolyZ::zero()), Err(Error::GcdOfZeros));
        let q = gcd_q(&z("2X^2-2").to_q(), &z("3X-3").to_q()).unwrap();
        assert_eq!(q, z("X-1").to_q());
    }

    #[test]
    fn content_examples() {
        assert_eq!(content_primitive(&z("2X+4")).unwrap(), (2.into(), z("X+2")));
        assert_eq!(content_primitive(&z("X")).unwrap(), (1.into(), z("X")));
        assert_eq!(content_primitive(&z("-6X^2+9")).unwrap(), (3.into(), z("-2X^2+3")));
        assert_eq!(content_primitive(&UniPolyZ::zero()), Err(Error::ZeroContent));
    }

    #[test]
    fn division() {
        assert_eq!(z("X^2-1").exact_div(&z("X+1")).unwrap(), Some(z("X-1")));
        assert_eq!(z("X^2-1").exact_div(&z("2X+2")).unwrap(), None);
        assert!(z("X").exact_div(&UniPolyZ::zero()).is_err());
    }

    #[test]
    fn primitive_of_rational() {
        let f = UniPolyQ::parse("-X/2 + 1/3").unwrap();
        let (c, g) = f.primitive_z().unwrap();
        assert_eq!(g, z("3X-2"));
        assert_eq!(g.to_q().scale(&c), f);
    }
}
