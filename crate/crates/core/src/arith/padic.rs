use super::{primes::is_prime, Rational, UniPolyQ};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

/// A p-adic integer known modulo `p^k`: the residue `a` with `0 <= a < p^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PAdicApprox {
    p: u64,
    precision: u32,
    #[serde(serialize_with = "ser_big")]
    residue: BigInt,
}

fn ser_big<S: serde::Serializer>(b: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&b.to_string())
}

impl PAdicApprox {
    /// Reduces `a` modulo `p^k`.
    pub fn new(p: u64, precision: u32, a: impl Into<BigInt>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidPadic(format!("{p} is not prime")));
        }
        if precision == 0 {
            return Err(Error::InvalidPadic("precision must be at least 1".into()));
        }
        let m = BigInt::from(p).pow(precision);
        Ok(PAdicApprox { p, precision, residue: a.into().mod_floor(&m) })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn residue(&self) -> &BigInt {
        &self.residue
    }

    pub fn modulus(&self) -> BigInt {
        BigInt::from(self.p).pow(self.precision)
    }

    /// The same p-adic number known to one more digit, `a + digit * p^k`.
    pub fn refine(&self, digit: u64) -> Self {
        let a = &self.residue + BigInt::from(digit % self.p) * self.modulus();
        PAdicApprox::new(self.p, self.precision + 1, a).expect("valid")
    }

    /// Representative of `α mod p` in `0..p`.
    pub fn first_digit(&self) -> u64 {
        (&self.residue % BigInt::from(self.p)).try_into().expect("small")
    }
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// `f(a) mod p^k`, evaluated at the residue representative `a`.
///
/// When some coefficient carries `p` in its denominator the value at the
/// representative is computed exactly and must itself be `p`-integral; such a
/// value is only meaningful for `a`, not for every lift of it.
pub fn eval_mod_pk(f: &UniPolyQ, a: &PAdicApprox) -> Result<BigInt> {
    let m = a.modulus();
    let pb = BigInt::from(a.p);
    if f.coeffs().iter().any(|c| (c.denom() % &pb).is_zero()) {
        let v = f.eval(&Rational::from_integer(a.residue.clone()));
        return reduce(&v, &pb, &m, a.p);
    }
    let p = BigInt::from(a.p);
    let mut acc = BigInt::zero();
    for c in f.coeffs().iter().rev() {
        acc = (acc * &a.residue).mod_floor(&m);
        acc = (acc + reduce(c, &p, &m, a.p)?).mod_floor(&m);
    }
    Ok(acc)
}

fn reduce(c: &Rational, p: &BigInt, m: &BigInt, praw: u64) -> Result<BigInt> {
    if (c.denom() % p).is_zero() {
        return Err(Error::DenominatorDivisibleByP(praw));
    }
    let inv = inverse_mod(c.denom(), m).expect("coprime");
    Ok((c.numer() * inv).mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let x = UniPolyQ::parse("X").unwrap();
        assert_eq!(eval_mod_pk(&x, &PAdicApprox::new(2, 3, 3).unwrap()).unwrap(), 3.into());
        let x3 = UniPolyQ::parse("X/3").unwrap();
        assert_eq!(
            eval_mod_pk(&x3, &PAdicApprox::new(3, 2, 1).unwrap()),
            Err(Error::DenominatorDivisibleByP(3))
        );
        let b = UniPolyQ::parse("X(X-1)/2").unwrap();
        assert_eq!(eval_mod_pk(&b, &PAdicApprox::new(2, 3, 4).unwrap()).unwrap(), 6.into());
        assert_eq!(eval_mod_pk(&b, &PAdicApprox::new(3, 2, 4).unwrap()).unwrap(), 6.into());
        assert_eq!(
            eval_mod_pk(&x3, &PAdicApprox::new(3, 2, 4).unwrap()),
            Err(Error::DenominatorDivisibleByP(3))
        );
    }

    #[test]
    fn construction() {
        assert!(PAdicApprox::new(4, 2, 1).is_err());
        assert!(PAdicApprox::new(2, 0, 1).is_err());
        let a = PAdicApprox::new(3, 2, 14).unwrap();
        assert_eq!(a.residue(), &BigInt::from(5));
        assert_eq!(a.first_digit(), 2);
        assert_eq!(a.refine(1).residue(), &BigInt::from(14));
    }
}
