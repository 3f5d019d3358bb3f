use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{rational_valuation, Value, WeightVector};
use crate::arith::{parse_poly, Alphabet, MultiPoly};
use crate::{Error, Result};

/// Truncation of the Heinzer–Ohm construction: variables `X0..X{n-1}, T, U`
/// over `Q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HoConfig {
    n: usize,
    alphabet: Alphabet,
}

impl HoConfig {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("the truncation level must be at least 1".into()));
        }
        Ok(HoConfig { n, alphabet: Alphabet::heinzer_ohm(n) })
    }

    pub fn level(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn var(&self, name: &str) -> Result<MultiPoly> {
        MultiPoly::var(&self.alphabet, name).ok_or_else(|| Error::UnknownElement(name.into()))
    }

    /// Parses `f` or `f/g`; `X_3` and `X3` both name the fourth variable.
    /// Rational coefficients such as `2/5*T` stay inside a polynomial.
    pub fn parse(&self, s: &str) -> Result<HoElement> {
        let s = s.replace("X_", "X");
        let s = s.trim();
        let whole = parse_poly(s, &self.alphabet);
        if let Ok(f) = whole {
            return Ok(HoElement::poly(f));
        }
        let mut depth = 0i32;
        for (i, ch) in s.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                '/' if depth == 0 => {
                    if let (Ok(n), Ok(d)) = (parse_poly(&s[..i], &self.alphabet), parse_poly(&s[i + 1..], &self.alphabet)) {
                        return HoElement::new(n, d);
                    }
                }
                _ => {}
            }
        }
        whole.map(HoElement::poly)
    }
}

/// An element `num/den` of `Q(X0..X{n-1}, T, U)` in lowest terms with a
/// monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct HoElement {
    num: MultiPoly,
    den: MultiPoly,
}

impl HoElement {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(HoElement { den: MultiPoly::one(num.alphabet()), num });
        }
        let g = num.gcd(&den)?;
        let num = num.exact_div(&g)?.expect("gcd divides");
        let den = den.exact_div(&g)?.expect("gcd divides");
        let lead = den.leading_term().expect("nonzero").1.clone();
        Ok(HoElement { num: num.scale(&(lead.recip())), den: den.monic() })
    }

    pub fn poly(f: MultiPoly) -> Self {
        let one = MultiPoly::one(f.alphabet());
        HoElement::new(f, one).expect("nonzero denominator")
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn level(&self) -> usize {
        self.num.alphabet().len() - 2
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn mul(&self, o: &HoElement) -> Result<HoElement> {
        HoElement::new(self.num.mul(&o.num)?, self.den.mul(&o.den)?)
    }

    pub fn div(&self, o: &HoElement) -> Result<HoElement> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        HoElement::new(self.num.mul(&o.den)?, self.den.mul(&o.num)?)
    }

    /// `v_i(x)`; indices at or past the level use the common tail value.
    pub fn valuation(&self, i: usize) -> Value {
        let w = if i < self.level() { WeightVector::heinzer_ohm(self.level(), i) } else { WeightVector::tail(self.level()) };
        rational_valuation(&self.num, &self.den, &w).expect("nonzero denominator")
    }

    /// `(T,U)`-adic order, which is also `v_i(x)` for every `X_i` not mentioned.
    pub fn order(&self) -> Value {
        self.valuation(usize::MAX)
    }

    /// Largest `i` with `X_i` in the numerator or denominator.
    pub fn max_x_index(&self) -> Option<usize> {
        (0..self.level()).rev().find(|&i| self.num.mentions(i) || self.den.mentions(i))
    }
}

impl fmt::Display for HoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &MultiPoly| if p.num_terms() > 1 { format!("({p})") } else { p.to_string() };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for HoElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HoElement({self})")
    }
}

impl Serialize for HoElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `x ∈ R = K(X)[T,U]_(T,U)`: the reduced denominator survives `T = U = 0`.
pub fn ho_in_r(x: &HoElement) -> bool {
    let n = x.level();
    x.is_zero() || !x.den.set_zero(&[n, n + 1]).is_zero()
}

/// `x ∈ D = R ∩ ⋂ V_i`. The unmaterialized `v_i` all take the tail value.
pub fn ho_in_d(x: &HoElement) -> bool {
    ho_in_r(x) && (0..=x.level()).all(|i| x.valuation(i).at_least(0))
}

/// `x ∈ D ∩ (T,U)R`.
pub fn ho_in_core(x: &HoElement) -> bool {
    ho_in_d(x) && x.order().at_least(1)
}

/// `v_i(x) ≥ 1`, for a materialized index `i`.
pub fn ho_in_mi(x: &HoElement, i: usize) -> Result<bool> {
    if i >= x.level() {
        return Err(Error::IndexNotMaterialized { index: i, level: x.level() });
    }
    Ok(x.valuation(i).at_least(1))
}

/// Sound lower bound for membership in the limit prime `Y_U`: the core.
pub fn ho_limit_contains(x: &HoElement) -> bool {
    ho_in_core(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> HoConfig {
        HoConfig::new(4).unwrap()
    }

    fn e(s: &str) -> HoElement {
        cfg().parse(s).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(ho_in_r(&e("T/X_0")));
        assert!(!ho_in_r(&e("X_0/T")));
        assert!(ho_in_r(&e("X0^3*U + 7")));
        assert!(ho_in_r(&e("(T^2 + T*U)/((T + U)*(1 + T))")));
        assert!(!ho_in_r(&e("T/U")));
        assert!(ho_in_d(&e("T/X_0")));
        assert!(!ho_in_d(&e("T/X_0^2")));
        assert!(ho_in_d(&e("1")));
        assert!(ho_in_core(&e("T")));
        assert!(!ho_in_core(&e("1")));
        assert!(ho_in_core(&e("X_0*U")));
        assert!(ho_limit_contains(&e("U*X_3")));
        assert!(!ho_limit_contains(&e("1")));
    }

    #[test]
    fn maximal_ideals() {
        for i in 0..4 {
            assert!(ho_in_mi(&e("T"), i).unwrap());
        }
        assert!(!ho_in_mi(&e("X_1"), 0).unwrap());
        assert!(ho_in_mi(&e("X_2"), 2).unwrap());
        assert_eq!(ho_in_mi(&e("T"), 4), Err(Error::IndexNotMaterialized { index: 4, level: 4 }));
    }

    #[test]
    fn lowest_terms() {
        assert_eq!(e("(2*T*X0 + 2*T)/(4*X0 + 4)").to_string(), "1/2*T");
        assert_eq!(e("X0/2").to_string(), "1/2*X0");
        assert_eq!(e("T/(X0 + T)").valuation(0), Value::Finite(0));
        assert_eq!(e("T/(X0 + T)").valuation(1), Value::Finite(1));
    }
}
