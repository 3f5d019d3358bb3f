use super::Rational;
use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// Ordered variable names. Exponent vectors are dense over this list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet(Arc<Vec<String>>);

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Alphabet(Arc::new(names.into_iter().map(Into::into).collect()))
    }

    /// `X0..X{n-1}, T, U`.
    pub fn heinzer_ohm(n: usize) -> Self {
        let mut v: Vec<String> = (0..n).map(|i| format!("X{i}")).collect();
        v.push("T".into());
        v.push("U".into());
        Alphabet(Arc::new(v))
    }

    pub fn univariate() -> Self {
        Alphabet::new(["X"])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub type Exponents = Vec<u32>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Multivariate polynomial with rational coefficients. No zero coefficient is
/// ever stored, so the zero polynomial has an empty term map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero(alphabet: &Alphabet) -> Self {
        MultiPoly { alphabet: alphabet.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(alphabet: &Alphabet, c: Rational) -> Self {
        Self::monomial(alphabet, c, vec![0; alphabet.len()])
    }

    pub fn one(alphabet: &Alphabet) -> Self {
        Self::constant(alphabet, Rational::one())
    }

    pub fn monomial(alphabet: &Alphabet, c: Rational, exps: Exponents) -> Self {
        assert_eq!(exps.len(), alphabet.len(), "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        MultiPoly { alphabet: alphabet.clone(), terms }
    }

    /// The variable `name`, or `None` when it is not in the alphabet.
    pub fn var(alphabet: &Alphabet, name: &str) -> Option<Self> {
        let i = alphabet.position(name)?;
        let mut e = vec![0; alphabet.len()];
        e[i] = 1;
        Some(Self::monomial(alphabet, Rational::one(), e))
    }

    pub fn from_terms(
        alphabet: &Alphabet,
        terms: impl IntoIterator<Item = (Exponents, Rational)>,
    ) -> Self {
        let mut p = Self::zero(alphabet);
        for (e, c) in terms {
            assert_eq!(e.len(), alphabet.len(), "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> Rational {
        let z = vec![0; self.alphabet.len()];
        self.terms.get(&z).cloned().unwrap_or_else(Rational::zero)
    }

    /// Largest exponent of the variable at position `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    pub fn mentions(&self, i: usize) -> bool {
        self.degree_in(i) > 0
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::AlphabetMismatch {
                left: self.alphabet.names().to_vec(),
                right: other.alphabet.names().to_vec(),
            });
        }
        Ok(())
    }

    pub fn apply(&self, other: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
        self.check(other)?;
        Ok(match op {
            PolyOp::Add => self.add_unchecked(other, false),
            PolyOp::Sub => self.add_unchecked(other, true),
            PolyOp::Mul => self.mul_unchecked(other),
        })
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.apply(other, PolyOp::Add)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.apply(other, PolyOp::Sub)
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.apply(other, PolyOp::Mul)
    }

    fn add_unchecked(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            let c = if negate { -c.clone() } else { c.clone() };
            out.add_term(e.clone(), c);
        }
        out
    }

    fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.alphabet);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.alphabet);
        }
        MultiPoly {
            alphabet: self.alphabet.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::one(&self.alphabet);
        for _ in 0..k {
            out = out.mul_unchecked(self);
        }
        out
    }

    /// Substitutes zero for every variable whose position is in `vars`.
    pub fn set_zero(&self, vars: &[usize]) -> MultiPoly {
        MultiPoly::from_terms(
            &self.alphabet,
            self.terms
                .iter()
                .filter(|(e, _)| vars.iter().all(|&i| e[i] == 0))
                .map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    /// Greatest monomial dividing every term (exponent-wise minimum).
    pub fn monomial_content(&self) -> Exponents {
        let n = self.alphabet.len();
        if self.is_zero() {
            return vec![0; n];
        }
        (0..n).map(|i| self.terms.keys().map(|e| e[i]).min().unwrap_or(0)).collect()
    }

    /// Divides by the monomial `x^e`; returns `None` when some term is not divisible.
    pub fn div_monomial(&self, e: &Exponents) -> Option<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (te, c) in &self.terms {
            if te.iter().zip(e).any(|(a, b)| a < b) {
                return None;
            }
            terms.insert(te.iter().zip(e).map(|(a, b)| a - b).collect(), c.clone());
        }
        Some(MultiPoly { alphabet: self.alphabet.clone(), terms })
    }

    /// Exact quotient `self / divisor` in the polynomial ring, if it exists.
    ///
    /// Uses multivariate division with respect to the lexicographic order on
    /// exponent vectors; the remainder is zero iff the divisor divides exactly.
    pub fn exact_div(&self, divisor: &MultiPoly) -> Result<Option<MultiPoly>> {
        self.check(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (lead_e, lead_c) = divisor.leading_term().expect("nonzero");
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.alphabet);
        while let Some((e, c)) = rem.leading_term() {
            if e.iter().zip(lead_e).any(|(a, b)| a < b) {
                return Ok(None);
            }
            let qe: Exponents = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            let qc = c / lead_c;
            let t = MultiPoly::monomial(&self.alphabet, qc, qe);
            rem = rem.add_unchecked(&t.mul_unchecked(divisor), true);
            quot = quot.add_unchecked(&t, false);
        }
        Ok(Some(quot))
    }

    /// Coefficient of `x_v^k` as a polynomial not mentioning `x_v`.
    pub fn coeff_in(&self, v: usize, k: u32) -> MultiPoly {
        MultiPoly::from_terms(
            &self.alphabet,
            self.terms.iter().filter(|(e, _)| e[v] == k).map(|(e, c)| {
                let mut e = e.clone();
                e[v] = 0;
                (e, c.clone())
            }),
        )
    }

    fn var_power(&self, v: usize, k: u32) -> MultiPoly {
        let mut e = vec![0; self.alphabet.len()];
        e[v] = k;
        MultiPoly::monomial(&self.alphabet, Rational::one(), e)
    }

    /// Scaled so that the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> MultiPoly {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }

    /// Greatest common divisor in `Q[alphabet]`, monic in the lexicographic
    /// order; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        Ok(gcd_rec(self, other))
    }

    /// Content with respect to `x_v`: the gcd of the coefficients.
    fn content_in(&self, v: usize) -> MultiPoly {
        let mut g = MultiPoly::zero(&self.alphabet);
        for k in 0..=self.degree_in(v) {
            let c = self.coeff_in(v, k);
            if !c.is_zero() {
                g = gcd_rec(&g, &c);
                if g.is_constant() {
                    break;
                }
            }
        }
        g
    }

    /// Pseudo-remainder of `self` by `b` as polynomials in `x_v`.
    fn prem_in(&self, b: &MultiPoly, v: usize) -> MultiPoly {
        let db = b.degree_in(v);
        let lb = b.coeff_in(v, db);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lr = r.coeff_in(v, dr);
            let shift = lr.mul_unchecked(&self.var_power(v, dr - db)).mul_unchecked(b);
            r = r.mul_unchecked(&lb).add_unchecked(&shift, true);
        }
        r
    }

    /// Lexicographically largest exponent vector and its coefficient.
    pub fn leading_term(&self) -> Option<(&Exponents, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Renames into a larger alphabet that contains every variable of `self`.
    pub fn embed(&self, target: &Alphabet) -> Result<MultiPoly> {
        let map: Vec<usize> = self
            .alphabet
            .names()
            .iter()
            .map(|n| {
                target.position(n).ok_or_else(|| Error::AlphabetMismatch {
                    left: self.alphabet.names().to_vec(),
                    right: target.names().to_vec(),
                })
            })
            .collect::<Result<_>>()?;
        Ok(MultiPoly::from_terms(
            target,
            self.terms.iter().map(|(e, c)| {
                let mut ne = vec![0; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            }),
        ))
    }
}

/// Recursive primitive remainder sequence on the highest-index variable
/// mentioned by either argument.
fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    let Some(v) = (0..a.alphabet.len()).rev().find(|&i| a.mentions(i) || b.mentions(i)) else {
        return MultiPoly::one(&a.alphabet);
    };
    let (ca, cb) = (a.content_in(v), b.content_in(v));
    let c = gcd_rec(&ca, &cb);
    let mut p = a.exact_div(&ca).expect("same alphabet").expect("content divides");
    let mut q = b.exact_div(&cb).expect("same alphabet").expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    while !q.is_zero() {
        let r = p.prem_in(&q, v);
        p = q;
        q = if r.is_zero() { r } else { r.exact_div(&r.content_in(v)).expect("same alphabet").expect("content divides") };
    }
    let pp = p.exact_div(&p.content_in(v)).expect("same alphabet").expect("content divides");
    pp.mul_unchecked(&c).monic()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let is_const = e.iter().all(|&x| x == 0);
            let mut wrote = false;
            if !a.is_one() || is_const {
                write!(f, "{a}")?;
                wrote = true;
            }
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.alphabet.names()[i])?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, parse_poly};

    fn ho() -> Alphabet {
        Alphabet::heinzer_ohm(2)
    }

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &ho()).unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(p("X0 + T").add(&p("-X0")).unwrap(), p("T"));
    }

    #[test]
    fn product_and_absorption() {
        assert_eq!(p("T").mul(&p("U")).unwrap().to_string(), "T*U");
        assert!(p("T + 3").mul(&MultiPoly::zero(&ho())).unwrap().is_zero());
    }

    #[test]
    fn alphabet_mismatch_is_an_error() {
        let other = Alphabet::univariate();
        let x = MultiPoly::var(&other, "X").unwrap();
        assert!(matches!(p("T").add(&x), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn exact_division() {
        let f = p("(T + X0*U)*(T - U^2)");
        assert_eq!(f.exact_div(&p("T - U^2")).unwrap(), Some(p("T + X0*U")));
        assert_eq!(p("T + 1").exact_div(&p("U")).unwrap(), None);
        assert_eq!(p("6*T").exact_div(&MultiPoly::constant(&ho(), int(3))).unwrap(), Some(p("2*T")));
    }

    #[test]
    fn display_round_trip() {
        let f = p("3/2*X0^2*T - U + 7");
        assert_eq!(parse_poly(&f.to_string(), &ho()).unwrap(), f);
    }

    #[test]
    fn gcd_recovers_common_factors() {
        let g = p("T + U");
        let a = g.mul(&p("1 + T")).unwrap();
        let b = g.mul(&p("X0 - U^2")).unwrap().mul(&p("2")).unwrap();
        assert_eq!(a.gcd(&b).unwrap(), g);
        let h = p("X0*T + X1^2");
        let a = h.mul(&h).unwrap().mul(&p("T")).unwrap();
        let b = h.mul(&p("T*U + 3")).unwrap();
        assert_eq!(a.gcd(&b).unwrap(), h.monic());
        assert!(p("T").gcd(&p("U")).unwrap().is_constant());
        assert_eq!(p("0").gcd(&p("2*T")).unwrap(), p("T"));
    }
}
