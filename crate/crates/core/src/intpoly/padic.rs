use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::domain::{int_membership, IntDomain, IntPoly};
use crate::arith::factor::irreducible_low_degree;
use crate::arith::primes::p_valuation;
use crate::arith::{eval_mod_pk, BigInt, PAdicApprox, Rational, UniPolyQ};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MpMembership {
    In,
    Out,
    NeedsPrecision,
}

impl fmt::Display for MpMembership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MpMembership::In => "in",
            MpMembership::Out => "out",
            MpMembership::NeedsPrecision => "needs_precision",
        })
    }
}

/// `f ∈ m_{p,α}`, i.e. `v_p(f(α)) ≥ 1`, from `α mod p^k`.
///
/// With `f = g / (p^e u)`, `g ∈ Z[X]` and `p ∤ u`, the residue `g(α) mod p^k`
/// is exact. A nonzero residue fixes `v_p(f(α)) = v_p(g(α)) − e`; a zero one
/// only bounds it below by `k − e`.
pub fn mpalpha_membership(f: &UniPolyQ, alpha: &PAdicApprox) -> Result<MpMembership> {
    if !int_membership(&IntPoly::from_q(f), &IntDomain::integers())? {
        return Err(Error::Precondition(format!("{f} is not in Int(Z)")));
    }
    if f.is_zero() {
        return Ok(MpMembership::In);
    }
    let p = alpha.p();
    let lcm = f.denominator_lcm();
    let e = p_valuation(&lcm, p).expect("nonzero") as i64;
    let g = f.scale(&Rational::from_integer(lcm));
    let residue = eval_mod_pk(&g, alpha)?;
    let k = alpha.precision() as i64;
    let v = if residue.is_zero() { None } else { Some(p_valuation(&residue, p).expect("nonzero") as i64 - e) };
    Ok(match v {
        Some(v) if v >= 1 => MpMembership::In,
        Some(_) => MpMembership::Out,
        None if k - e >= 1 => MpMembership::In,
        None => MpMembership::NeedsPrecision,
    })
}

/// `m_{p,α} ∩ Z[X] = (p, X − a)` with `a ≡ α (mod p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ZxContraction {
    pub p: u64,
    pub a: u64,
    pub ideal: String,
}

pub fn mpalpha_contract_zx(alpha: &PAdicApprox) -> ZxContraction {
    let (p, a) = (alpha.p(), alpha.first_digit());
    let ideal = if a == 0 { format!("({p}, X)") } else { format!("({p}, X - {a})") };
    ZxContraction { p, a, ideal }
}

/// A nonzero prime of `Int(Z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntPrimeDesc {
    /// `q·Q[X] ∩ Int(Z)` for `q` irreducible over `Q`.
    UpperToZero(UniPolyQ),
    /// `{f : f(α) ∈ pZ_p}` with `α` known modulo `p^k`.
    MaxPAdic(PAdicApprox),
}

impl IntPrimeDesc {
    /// Checks irreducibility of uppers with the low-degree method.
    pub fn upper(q: UniPolyQ) -> Result<Self> {
        let (_, prim) = q.primitive_z().ok_or(Error::ZeroIdeal)?;
        match irreducible_low_degree(&prim) {
            Some(true) => Ok(IntPrimeDesc::UpperToZero(q.monic())),
            Some(false) => Err(Error::InvalidDescriptor(format!("{q} is reducible over Q"))),
            None => Err(Error::Unrepresentable(format!("irreducibility of {q} is not decided"))),
        }
    }

    /// Membership of an element of `Int(Z)`.
    pub fn contains(&self, f: &UniPolyQ) -> Result<MpMembership> {
        match self {
            IntPrimeDesc::UpperToZero(q) => {
                let (_, r) = f.div_rem(q)?;
                Ok(if r.is_zero() { MpMembership::In } else { MpMembership::Out })
            }
            IntPrimeDesc::MaxPAdic(alpha) => mpalpha_membership(f, alpha),
        }
    }

    /// The prime of `Z` below.
    pub fn contraction_to_z(&self) -> String {
        match self {
            IntPrimeDesc::UpperToZero(_) => "(0)".into(),
            IntPrimeDesc::MaxPAdic(a) => format!("({})", a.p()),
        }
    }

    /// Contraction to `Z[X]`.
    pub fn contraction_to_zx(&self) -> String {
        match self {
            IntPrimeDesc::UpperToZero(q) => format!("({q})"),
            IntPrimeDesc::MaxPAdic(a) => mpalpha_contract_zx(a).ideal,
        }
    }
}

impl fmt::Display for IntPrimeDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IntPrimeDesc::UpperToZero(q) => write!(f, "({q})Q[X] ∩ Int"),
            IntPrimeDesc::MaxPAdic(a) => write!(f, "m_{{{}, {} mod {}^{}}}", a.p(), a.residue(), a.p(), a.precision()),
        }
    }
}

impl Serialize for IntPrimeDesc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Every `m_{p,α}` with `α` running over the residues modulo `p^k`.
pub fn padic_maximals(p: u64, k: u32) -> Result<Vec<IntPrimeDesc>> {
    let m = BigInt::from(p).pow(k).to_u64().ok_or_else(|| Error::Unrepresentable("p^k too large".into()))?;
    (0..m).map(|a| PAdicApprox::new(p, k, a).map(IntPrimeDesc::MaxPAdic)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> UniPolyQ {
        UniPolyQ::parse(s).unwrap()
    }

    fn al(p: u64, k: u32, a: i64) -> PAdicApprox {
        PAdicApprox::new(p, k, a).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert_eq!(mpalpha_membership(&q("X"), &al(2, 3, 0)).unwrap(), MpMembership::In);
        assert_eq!(mpalpha_membership(&q("X + 1"), &al(2, 3, 0)).unwrap(), MpMembership::Out);
        assert_eq!(mpalpha_membership(&q("X"), &al(2, 2, 4)).unwrap(), MpMembership::In);
        assert!(mpalpha_membership(&q("X/2"), &al(2, 2, 0)).is_err());
    }

    #[test]
    fn denominators_cost_precision() {
        let b = q("X*(X-1)/2");
        // α ≡ 0 mod 2 does not fix α(α−1)/2 mod 2.
        assert_eq!(mpalpha_membership(&b, &al(2, 1, 0)).unwrap(), MpMembership::NeedsPrecision);
        assert_eq!(mpalpha_membership(&b, &al(2, 2, 0)).unwrap(), MpMembership::In);
        assert_eq!(mpalpha_membership(&b, &al(2, 2, 2)).unwrap(), MpMembership::Out);
    }

    #[test]
    fn contractions() {
        assert_eq!(mpalpha_contract_zx(&al(2, 3, 0)).ideal, "(2, X)");
        assert_eq!(mpalpha_contract_zx(&al(3, 2, 5)).ideal, "(3, X - 2)");
        assert_eq!(mpalpha_contract_zx(&al(5, 1, 0)).ideal, "(5, X)");
        let up = IntPrimeDesc::upper(q("X^2 + 1")).unwrap();
        assert_eq!(up.contains(&q("X^3 + X")).unwrap(), MpMembership::In);
        assert_eq!(up.contraction_to_z(), "(0)");
        assert!(IntPrimeDesc::upper(q("X^2 - 1")).is_err());
        assert_eq!(padic_maximals(3, 2).unwrap().len(), 9);
    }
}
