//! Low-degree splitting in `Z[X]` by rational roots, arithmetic over `F_p`,
//! and a fixed enumeration of primitive irreducible polynomials.
//!
//! Splitting is complete only when every factor left after removing rational
//! roots has degree at most 3; beyond that the helpers return `None`.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::primes::{factorize, prime_index};
use super::unipoly::{content_primitive, UniPolyQ, UniPolyZ};
use super::{BigInt, Rational};

/// An irreducible element of `Z[X]` up to sign.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ZxFactor {
    Prime(u64),
    /// Primitive, positive leading coefficient, irreducible over `Q`.
    Poly(UniPolyZ),
}

impl ZxFactor {
    pub fn to_poly(&self) -> UniPolyZ {
        match self {
            ZxFactor::Prime(p) => UniPolyZ::constant(BigInt::from(*p)),
            ZxFactor::Poly(f) => f.clone(),
        }
    }
}

impl std::fmt::Display for ZxFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ZxFactor::Prime(p) => write!(f, "{p}"),
            ZxFactor::Poly(g) => write!(f, "{g}"),
        }
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factorize(&n.abs()) {
        let mut next = Vec::new();
        for d in &out {
            let mut q = d.clone();
            for _ in 0..=e {
                next.push(q.clone());
                q *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// A linear factor `bX - a` of a primitive polynomial, if one exists.
fn linear_factor(f: &UniPolyZ) -> Option<UniPolyZ> {
    let c = f.coeffs();
    if c.len() < 2 {
        return None;
    }
    if c[0].is_zero() {
        return Some(UniPolyZ::x());
    }
    let lead = f.lead().expect("nonzero");
    for b in divisors(lead) {
        for a in divisors(&c[0]) {
            for a in [a.clone(), -a] {
                if a.gcd(&b) != BigInt::one() {
                    continue;
                }
                let cand = UniPolyZ::new(vec![-a.clone(), b.clone()]);
                if cand.divides(f) {
                    return Some(cand.normalize_sign());
                }
            }
        }
    }
    None
}

/// Splits a nonzero integer polynomial into irreducibles with multiplicities,
/// discarding the sign. `None` when an unsplit factor of degree ≥ 4 remains.
pub fn split_low_degree(f: &UniPolyZ) -> Option<BTreeMap<ZxFactor, u32>> {
    let (content, mut prim) = content_primitive(f).ok()?;
    let mut out = BTreeMap::new();
    for (p, e) in factorize(&content) {
        out.insert(ZxFactor::Prime(p.to_u64()?), e);
    }
    prim = prim.normalize_sign();
    while let Some(l) = linear_factor(&prim) {
        prim = prim.exact_div(&l).ok()??.normalize_sign();
        *out.entry(ZxFactor::Poly(l)).or_insert(0) += 1;
    }
    match prim.degree() {
        Some(0) => {}
        Some(d) if d <= 3 => *out.entry(ZxFactor::Poly(prim)).or_insert(0) += 1,
        _ => return None,
    }
    Some(out)
}

/// Irreducibility over `Q` of a primitive nonconstant polynomial of degree ≤ 3.
pub fn irreducible_low_degree(f: &UniPolyZ) -> Option<bool> {
    if f.degree().unwrap_or(0) == 0 || f.degree()? > 3 {
        return None;
    }
    let (c, _) = content_primitive(f).ok()?;
    Some(c.is_one() && linear_factor(f).is_none_or(|l| l.degree() == f.degree()))
}

/// Polynomials over `F_p`, low to high, trimmed.
pub mod fp {
    pub type Poly = Vec<u64>;

    pub fn trim(mut f: Poly) -> Poly {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    fn inv(a: u64, p: u64) -> u64 {
        let mut r = 1u64;
        let (mut b, mut e) = (a % p, p - 2);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    }

    pub fn rem(f: &Poly, g: &Poly, p: u64) -> Poly {
        let mut r = f.clone();
        let dg = g.len() - 1;
        let li = inv(g[dg], p);
        while r.len() > dg && !r.is_empty() {
            let k = r.len() - 1 - dg;
            let c = r[r.len() - 1] * li % p;
            for (i, &gi) in g.iter().enumerate() {
                r[k + i] = (r[k + i] + p - c * gi % p) % p;
            }
            r = trim(r);
        }
        r
    }

    /// Monic gcd; the empty polynomial when both are zero.
    pub fn gcd(f: &Poly, g: &Poly, p: u64) -> Poly {
        let (mut a, mut b) = (trim(f.clone()), trim(g.clone()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        if let Some(&l) = a.last() {
            let li = inv(l, p);
            a.iter_mut().for_each(|c| *c = *c * li % p);
        }
        a
    }

    /// Irreducibility by trial division with every monic polynomial of
    /// degree up to half the degree.
    pub fn is_irreducible(f: &Poly, p: u64) -> bool {
        let f = trim(f.clone());
        let d = match f.len() {
            0 | 1 => return false,
            n => n - 1,
        };
        for k in 1..=d / 2 {
            let count = (p as u128).pow(k as u32);
            if count > 2_000_000 {
                return true;
            }
            for code in 0..count as u64 {
                let mut g = vec![0u64; k + 1];
                let mut c = code;
                for slot in g.iter_mut().take(k) {
                    *slot = c % p;
                    c /= p;
                }
                g[k] = 1;
                if rem(&f, &g, p).is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

pub fn reduce_mod_p(f: &UniPolyZ, p: u64) -> fp::Poly {
    fp::trim(f.mod_p(p).coeffs().iter().map(|c| c.to_u64().expect("reduced")).collect())
}

/// `f` stays of full degree and irreducible modulo `p`.
pub fn is_irreducible_mod_p(f: &UniPolyZ, p: u64) -> bool {
    let r = reduce_mod_p(f, p);
    Some(r.len().saturating_sub(1)) == f.degree() && fp::is_irreducible(&r, p)
}

/// Bezout over `Q`: `(g, s, t)` with `s·f + t·h = g` and `g` the monic gcd.
pub fn bezout_q(f: &UniPolyQ, h: &UniPolyQ) -> Option<(UniPolyQ, UniPolyQ, UniPolyQ)> {
    if f.is_zero() && h.is_zero() {
        return None;
    }
    let one = UniPolyQ::constant(Rational::one());
    let (mut r0, mut r1) = (f.clone(), h.clone());
    let (mut s0, mut s1) = (one.clone(), UniPolyQ::zero());
    let (mut t0, mut t1) = (UniPolyQ::zero(), one);
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1).ok()?;
        r0 = std::mem::replace(&mut r1, r);
        let s = s0.sub(&q.mul(&s1));
        s0 = std::mem::replace(&mut s1, s);
        let t = t0.sub(&q.mul(&t1));
        t0 = std::mem::replace(&mut t1, t);
    }
    let l = r0.lead().cloned()?;
    let li = Rational::one() / l;
    Some((r0.scale(&li), s0.scale(&li), t0.scale(&li)))
}

/// Whether integer polynomials with coprime gcd generate the unit ideal of `Z[X]`.
///
/// A proper ideal lies in some maximal `(p, g)`; such `p` divides the integer
/// `N` produced by clearing denominators in a rational Bezout identity, and
/// then the reductions modulo `p` share a factor.
pub fn generate_unit_ideal(gens: &[UniPolyZ]) -> bool {
    let nonzero: Vec<&UniPolyZ> = gens.iter().filter(|g| !g.is_zero()).collect();
    let Some(first) = nonzero.first() else { return false };
    let mut acc = first.to_q();
    let mut coeffs: Vec<UniPolyQ> = vec![UniPolyQ::constant(Rational::one())];
    for g in &nonzero[1..] {
        let Some((d, s, t)) = bezout_q(&acc, &g.to_q()) else { return false };
        coeffs = coeffs.iter().map(|c| c.mul(&s)).collect();
        coeffs.push(t);
        acc = d;
    }
    let acc = {
        let l = acc.lead().cloned().expect("nonzero");
        acc.scale(&(Rational::one() / l))
    };
    if acc.degree() != Some(0) {
        return false;
    }
    let n = coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(&c.denominator_lcm()));
    for (p, _) in factorize(&n) {
        let Some(p) = p.to_u64() else { return false };
        let mut g = Vec::new();
        for f in &nonzero {
            g = fp::gcd(&g, &reduce_mod_p(f, p), p);
        }
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Primitive irreducible polynomials of degree 1 or 2 with coefficients in
/// `[-6, 6]`, ordered by coefficient height, then degree, then coefficients.
fn catalog() -> &'static Vec<UniPolyZ> {
    static CAT: OnceLock<Vec<UniPolyZ>> = OnceLock::new();
    CAT.get_or_init(|| {
        let mut out: Vec<(i64, usize, Vec<i64>, UniPolyZ)> = Vec::new();
        let range: Vec<i64> = (-6..=6).collect();
        for &a1 in &range {
            for &a0 in &range {
                if a1 > 0 {
                    let f = UniPolyZ::from_i64s(&[a0, a1]);
                    if content_primitive(&f).is_ok_and(|(c, _)| c.is_one()) {
                        out.push((a0.abs().max(a1), 1, vec![a1, a0], f));
                    }
                }
                for &a2 in range.iter().filter(|&&a| a > 0) {
                    let f = UniPolyZ::from_i64s(&[a0, a1, a2]);
                    if irreducible_low_degree(&f) == Some(true) {
                        out.push((a0.abs().max(a1.abs()).max(a2), 2, vec![a2, a1, a0], f));
                    }
                }
            }
        }
        out.sort_by(|x, y| (x.0, x.1, &x.2).cmp(&(y.0, y.1, &y.2)));
        out.into_iter().map(|t| t.3).collect()
    })
}

/// The `k`-th catalogued primitive irreducible polynomial.
pub fn irreducible_at(k: usize) -> Option<UniPolyZ> {
    catalog().get(k).cloned()
}

pub fn irreducible_index(f: &UniPolyZ) -> Option<usize> {
    let f = f.normalize_sign();
    catalog().iter().position(|g| *g == f)
}

/// Position of a height-one prime of `Z[X]` in the interleaved enumeration:
/// rational primes at even positions, catalogued polynomials at odd ones.
pub fn zx_height_one_index(q: &ZxFactor) -> Option<usize> {
    match q {
        ZxFactor::Prime(p) => prime_index(*p).map(|k| 2 * k),
        ZxFactor::Poly(f) => irreducible_index(f).map(|k| 2 * k + 1),
    }
}

pub fn zx_height_one_at(j: usize) -> Option<ZxFactor> {
    if j % 2 == 0 {
        Some(ZxFactor::Prime(super::primes::nth_prime(j / 2)))
    } else {
        irreducible_at(j / 2).map(ZxFactor::Poly)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(cs: &[i64]) -> UniPolyZ {
        UniPolyZ::from_i64s(cs)
    }

    #[test]
    fn splitting() {
        let f = z(&[-12, 0, 12]);
        let s = split_low_degree(&f).unwrap();
        assert_eq!(s.get(&ZxFactor::Prime(2)), Some(&2));
        assert_eq!(s.get(&ZxFactor::Prime(3)), Some(&1));
        assert_eq!(s.get(&ZxFactor::Poly(z(&[-1, 1]))), Some(&1));
        assert_eq!(s.get(&ZxFactor::Poly(z(&[1, 1]))), Some(&1));
        let g = split_low_degree(&z(&[0, 0, 2, 4])).unwrap();
        assert_eq!(g.get(&ZxFactor::Poly(z(&[0, 1]))), Some(&2));
        assert_eq!(g.get(&ZxFactor::Poly(z(&[1, 2]))), Some(&1));
        assert_eq!(irreducible_low_degree(&z(&[1, 0, 1])), Some(true));
        assert_eq!(irreducible_low_degree(&z(&[-2, 0, 0, 1])), Some(true));
    }

    #[test]
    fn unit_ideals() {
        assert!(!generate_unit_ideal(&[z(&[2]), z(&[0, 1])]));
        assert!(generate_unit_ideal(&[z(&[1, 1]), z(&[0, 1])]));
        assert!(!generate_unit_ideal(&[z(&[1, 1]), z(&[-1, 1])]));
        assert!(generate_unit_ideal(&[z(&[3]), z(&[2])]));
        assert!(!generate_unit_ideal(&[z(&[1, 0, 1]), z(&[5])]));
    }

    #[test]
    fn mod_p_irreducibility() {
        assert!(is_irreducible_mod_p(&z(&[1, 1, 1]), 2));
        assert!(!is_irreducible_mod_p(&z(&[1, 0, 1]), 5));
        assert!(is_irreducible_mod_p(&z(&[-2, 1]), 5));
    }

    #[test]
    fn enumeration() {
        assert_eq!(irreducible_at(0), Some(z(&[-1, 1])));
        let x = z(&[0, 1]);
        let k = irreducible_index(&x).unwrap();
        assert_eq!(zx_height_one_at(2 * k + 1), Some(ZxFactor::Poly(x)));
        assert_eq!(zx_height_one_index(&ZxFactor::Prime(5)), Some(4));
    }
}
