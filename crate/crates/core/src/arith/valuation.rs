use super::MultiPoly;
use crate::error::{Error, Result};
use serde::Serialize;
use std::fmt;

/// A valuation value: an integer or the top element `+∞` (value of zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Value {
    Finite(i64),
    Infinity,
}

impl Value {
    pub fn finite(self) -> Option<i64> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Infinity => None,
        }
    }

    pub fn add(self, o: Value) -> Value {
        match (self, o) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::Infinity,
        }
    }

    /// `self >= k`, with `+∞` above everything.
    pub fn at_least(self, k: i64) -> bool {
        self >= Value::Finite(k)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Infinity => write!(f, "+inf"),
        }
    }
}

/// One nonnegative weight per alphabet symbol.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightVector(pub Vec<u32>);

impl WeightVector {
    /// Weights of `v_i` on `X0..X{n-1}, T, U`: 1 on `X_i`, `T` and `U`, 0 elsewhere.
    pub fn heinzer_ohm(n: usize, i: usize) -> Self {
        let mut w = vec![0; n + 2];
        if i < n {
            w[i] = 1;
        }
        w[n] = 1;
        w[n + 1] = 1;
        WeightVector(w)
    }

    /// Weight 1 on `T` and `U` only: the common value of every `v_i` whose
    /// variable `X_i` is not materialized, and also the `(T,U)`-adic order.
    pub fn tail(n: usize) -> Self {
        Self::heinzer_ohm(n, usize::MAX)
    }
}

/// Minimum over the stored terms of the weighted exponent sum; `+∞` for zero.
pub fn monomial_valuation(f: &MultiPoly, w: &WeightVector) -> Value {
    assert_eq!(w.0.len(), f.alphabet().len(), "weight vector length");
    f.terms()
        .map(|(e, _)| e.iter().zip(&w.0).map(|(&a, &b)| (a * b) as i64).sum::<i64>())
        .min()
        .map_or(Value::Infinity, Value::Finite)
}

/// Value of the quotient `num / den`.
pub fn rational_valuation(num: &MultiPoly, den: &MultiPoly, w: &WeightVector) -> Result<Value> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let d = monomial_valuation(den, w).finite().expect("nonzero denominator");
    Ok(match monomial_valuation(num, w) {
        Value::Finite(n) => Value::Finite(n - d),
        Value::Infinity => Value::Infinity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{parse_poly, Alphabet};

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &Alphabet::heinzer_ohm(2)).unwrap()
    }

    #[test]
    fn heinzer_ohm_weights() {
        let v0 = WeightVector::heinzer_ohm(2, 0);
        let v1 = WeightVector::heinzer_ohm(2, 1);
        assert_eq!(monomial_valuation(&p("T"), &v0), Value::Finite(1));
        assert_eq!(monomial_valuation(&p("X1"), &v0), Value::Finite(0));
        assert_eq!(monomial_valuation(&p("X0*T + U^2"), &v0), Value::Finite(2));
        assert_eq!(monomial_valuation(&p("0"), &v0), Value::Infinity);
        assert_eq!(rational_valuation(&p("T"), &p("X0"), &v0).unwrap(), Value::Finite(0));
        assert_eq!(rational_valuation(&p("T"), &p("X0"), &v1).unwrap(), Value::Finite(1));
        let f = p("T + X1*U");
        assert_eq!(rational_valuation(&f, &f, &v1).unwrap(), Value::Finite(0));
        assert!(rational_valuation(&f, &p("0"), &v1).is_err());
    }

    #[test]
    fn infinity_is_top() {
        assert!(Value::Infinity > Value::Finite(i64::MAX));
        assert!(Value::Infinity.at_least(5));
    }
}
