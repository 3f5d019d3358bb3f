//! Small-prime utilities used to index closed points of `Spec(Z)`-shaped models.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Iterator over all primes in increasing order.
pub fn primes() -> impl Iterator<Item = u64> {
    (2u64..).filter(|&n| is_prime(n))
}

/// The `j`-th prime, zero based (`nth_prime(0) == 2`).
pub fn nth_prime(j: usize) -> u64 {
    primes().nth(j).expect("infinitely many primes")
}

/// Position of `p` in the list of primes, if `p` is prime.
pub fn prime_index(p: u64) -> Option<usize> {
    if !is_prime(p) {
        return None;
    }
    Some(primes().take_while(|&q| q < p).count())
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn p_valuation(n: &BigInt, p: u64) -> Option<u32> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut m = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        m = q;
        v += 1;
    }
}

/// Trial-division factorization of a nonzero integer (sign dropped).
///
/// Intended for the small integers that appear as ideal generators; the
/// remaining cofactor above the trial bound is reported as a single factor.
pub fn factorize(n: &BigInt) -> BTreeMap<BigInt, u32> {
    let mut out = BTreeMap::new();
    let mut m = n.abs();
    if m.is_zero() || m.is_one() {
        return out;
    }
    let mut d = BigInt::from(2u32);
    while &d * &d <= m {
        while (&m % &d).is_zero() {
            *out.entry(d.clone()).or_insert(0) += 1;
            m /= &d;
        }
        d += 1u32;
        if d.to_u64().map_or(true, |x| x > 10_000_000) {
            break;
        }
    }
    if !m.is_one() {
        *out.entry(m).or_insert(0) += 1;
    }
    out
}

/// Distinct prime divisors of a nonzero integer that fit in `u64`.
pub fn prime_divisors(n: &BigInt) -> Vec<u64> {
    factorize(n).keys().filter_map(|p| p.to_u64()).collect()
}


/// Which rational primes stay non-units in a localization of `Z`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum ActivePrimes {
    /// Every prime except the listed (inverted) ones: `Z[1/p_1, ..., 1/p_k]`.
    AllExcept(std::collections::BTreeSet<u64>),
    /// Only the listed primes: the semilocal ring `Z_(p_1) ∩ ... ∩ Z_(p_k)`.
    Only(std::collections::BTreeSet<u64>),
}

impl ActivePrimes {
    pub fn all() -> Self {
        ActivePrimes::AllExcept(Default::default())
    }

    pub fn only(ps: impl IntoIterator<Item = u64>) -> Self {
        ActivePrimes::Only(ps.into_iter().collect())
    }

    pub fn all_except(ps: impl IntoIterator<Item = u64>) -> Self {
        ActivePrimes::AllExcept(ps.into_iter().collect())
    }

    pub fn is_active(&self, p: u64) -> bool {
        is_prime(p)
            && match self {
                ActivePrimes::AllExcept(s) => !s.contains(&p),
                ActivePrimes::Only(s) => s.contains(&p),
            }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ActivePrimes::Only(_))
    }

    /// The `j`-th active prime in increasing order.
    pub fn nth(&self, j: usize) -> Option<u64> {
        match self {
            ActivePrimes::AllExcept(s) => primes().filter(|p| !s.contains(p)).nth(j),
            ActivePrimes::Only(s) => s.iter().copied().filter(|&p| is_prime(p)).nth(j),
        }
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        if !self.is_active(p) {
            return None;
        }
        Some(match self {
            ActivePrimes::AllExcept(s) => primes().take_while(|&q| q < p).filter(|q| !s.contains(q)).count(),
            ActivePrimes::Only(s) => s.iter().filter(|&&q| q < p && is_prime(q)).count(),
        })
    }

    /// Listed active primes when finitely many.
    pub fn finite_list(&self) -> Option<Vec<u64>> {
        match self {
            ActivePrimes::Only(s) => Some(s.iter().copied().filter(|&p| is_prime(p)).collect()),
            ActivePrimes::AllExcept(_) => None,
        }
    }

    /// Removes every inactive prime from a nonzero integer, keeping the sign.
    pub fn active_part(&self, n: &BigInt) -> BigInt {
        let mut out = if n.is_negative() { -BigInt::one() } else { BigInt::one() };
        for (p, e) in factorize(n) {
            if p.to_u64().is_some_and(|q| self.is_active(q)) {
                out *= p.pow(e);
            }
        }
        out
    }
}

/// Number of prime ideals of `Z[i]` above the rational prime `p`.
pub fn gaussian_split_count(p: u64) -> usize {
    if p == 2 || p % 4 == 3 {
        1
    } else {
        2
    }
}

/// Index `j` of the enumeration of maximal ideals of `Z[i]` ordered by the
/// rational prime below them, then by branch: returns `(p, branch)`.
pub fn gaussian_prime_at(j: usize) -> (u64, usize) {
    let mut seen = 0;
    for p in primes() {
        let c = gaussian_split_count(p);
        if j < seen + c {
            return (p, j - seen);
        }
        seen += c;
    }
    unreachable!()
}

/// Positions of the maximal ideals of `Z[i]` lying over `p`.
pub fn gaussian_fiber(p: u64) -> Vec<usize> {
    let start: usize = primes().take_while(|&q| q < p).map(gaussian_split_count).sum();
    (start..start + gaussian_split_count(p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_primes() {
        let v: Vec<u64> = primes().take(6).collect();
        assert_eq!(v, vec![2, 3, 5, 7, 11, 13]);
        assert_eq!(nth_prime(0), 2);
        assert_eq!(prime_index(13), Some(5));
        assert_eq!(prime_index(12), None);
    }

    #[test]
    fn active_primes() {
        let a = ActivePrimes::all_except([2]);
        assert_eq!(a.nth(0), Some(3));
        assert_eq!(a.index_of(7), Some(2));
        let b = ActivePrimes::only([3, 2]);
        assert_eq!(b.nth(1), Some(3));
        assert_eq!(b.nth(2), None);
        assert_eq!(b.active_part(&BigInt::from(-60)), BigInt::from(-12));
    }

    #[test]
    fn gaussian_enumeration() {
        assert_eq!(gaussian_prime_at(0), (2, 0));
        assert_eq!(gaussian_prime_at(1), (3, 0));
        assert_eq!(gaussian_prime_at(2), (5, 0));
        assert_eq!(gaussian_prime_at(3), (5, 1));
        assert_eq!(gaussian_fiber(5), vec![2, 3]);
        assert_eq!(gaussian_fiber(7), vec![4]);
    }

    #[test]
    fn factorization() {
        let f = factorize(&BigInt::from(-360));
        assert_eq!(f[&BigInt::from(2)], 3);
        assert_eq!(f[&BigInt::from(3)], 2);
        assert_eq!(f[&BigInt::from(5)], 1);
        assert_eq!(p_valuation(&BigInt::from(48), 2), Some(4));
        assert_eq!(p_valuation(&BigInt::from(0), 2), None);
    }
}
