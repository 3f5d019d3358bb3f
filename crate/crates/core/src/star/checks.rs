//! Independent oracles and report-producing checks for the star operations.

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::domain::CatalogDomain;
use super::elem::FracElem;
use super::ideal::FracIdealFG;
use crate::arith::factor::{split_low_degree, ZxFactor};
use crate::arith::primes::{factorize, ActivePrimes};
use crate::arith::{BigInt, UniPolyZ};
use crate::{Error, Result};

/// Double colon over `Z` by sweeping candidates: the colon's least positive
/// element of the form `1/m` with `m ≤ bound`, then the least positive
/// integer `y ≤ bound` with `y·(1/m) ∈ Z`.
///
/// Returns `None` when the sweep bound is too small to decide.
pub fn brute_force_v_closure_z(gens: &[BigInt], bound: u64) -> Option<BigInt> {
    let gens: Vec<&BigInt> = gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return None;
    }
    let m = (1..=bound).rev().find(|&m| gens.iter().all(|g| (*g % BigInt::from(m)).is_zero()))?;
    let y = (1..=bound).find(|&y| (y % m) == 0)?;
    Some(BigInt::from(y))
}

/// Multiplicity of the irreducible `q` in `f`, by repeated exact division.
fn multiplicity(f: &UniPolyZ, q: &UniPolyZ) -> Result<u32> {
    let mut f = f.clone();
    let mut e = 0;
    while let Some(next) = f.exact_div(q)? {
        if f.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        f = next;
        e += 1;
    }
    Ok(e)
}

/// Divisorial closure over `Z[X]` from valuations: `∏ q^{min_i v_q(g_i)}`
/// over the irreducible factors `q` of all numerators and denominators.
///
/// Returns `None` when some numerator or denominator does not split by the
/// low-degree method.
pub fn valuation_v_closure_zx(gens: &[FracElem]) -> Result<Option<FracElem>> {
    let gens: Vec<&FracElem> = gens.iter().filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let mut factors: Vec<ZxFactor> = Vec::new();
    for g in &gens {
        for part in [g.num(), g.den()] {
            let Some(split) = split_low_degree(part) else { return Ok(None) };
            factors.extend(split.into_keys());
        }
    }
    factors.sort();
    factors.dedup();
    let mut out = FracElem::one();
    for q in factors {
        let qp = q.to_poly();
        let mut least: Option<i64> = None;
        for g in &gens {
            let v = multiplicity(g.num(), &qp)? as i64 - multiplicity(g.den(), &qp)? as i64;
            least = Some(least.map_or(v, |l| l.min(v)));
        }
        let e = least.expect("nonempty");
        let qe = FracElem::from_poly(qp.pow(e.unsigned_abs() as u32));
        out = if e >= 0 { out.mul(&qe) } else { out.div(&qe)? };
    }
    Ok(Some(out))
}

/// Checks `x ∈ (D : I)` directly (`x·g ∈ D` for every generator) against
/// the principal colon computed by the gcd rule; returns the first
/// candidate on which they disagree.
pub fn colon_sweep_mismatch(i: &FracIdealFG, candidates: &[FracElem]) -> Result<Option<FracElem>> {
    let colon = i.colon_to_domain()?;
    let gen = colon.generators()[0].clone();
    for x in candidates {
        let direct = i.generators().iter().map(|g| i.domain.contains(&x.mul(g))).collect::<Result<Vec<_>>>()?;
        let direct = direct.into_iter().all(|b| b);
        let via_rule = i.domain.divides(&gen, x)?;
        if direct != via_rule {
            return Ok(Some(x.clone()));
        }
    }
    Ok(None)
}

/// Verdict of the t-maximal representation `D = ∩ D_M` on one element.
#[derive(Debug, Clone, Serialize)]
pub struct RepresentationLine {
    pub element: FracElem,
    pub in_domain: bool,
    /// t-maximal ideals `M` with `x ∉ D_M`.
    pub excluded_by: Vec<String>,
    pub consistent: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct RepresentationReport {
    pub domain: CatalogDomain,
    pub lines: Vec<RepresentationLine>,
    /// Elements whose denominator could not be split; left undecided.
    pub undecided: Vec<FracElem>,
    pub violations: usize,
}

/// Height-one t-maximal primes dividing the reduced denominator of `x`.
fn excluding_primes(d: &CatalogDomain, x: &FracElem) -> Result<Option<Vec<String>>> {
    let den = x.den();
    Ok(Some(match d {
        CatalogDomain::Field => vec![],
        CatalogDomain::IntegersZ => factorize(&den.constant_coeff()).into_keys().map(|p| format!("({p})")).collect(),
        CatalogDomain::LocalizedZ(active) => factorize(&active.active_part(&den.constant_coeff()))
            .into_keys()
            .map(|p| format!("({p})"))
            .collect(),
        CatalogDomain::PolyQ | CatalogDomain::PolyZX => {
            let Some(split) = split_low_degree(den) else { return Ok(None) };
            split
                .into_keys()
                .filter(|q| matches!(d, CatalogDomain::PolyZX) || matches!(q, ZxFactor::Poly(_)))
                .map(|q| format!("({q})"))
                .collect()
        }
        _ => return Err(Error::UnsupportedDomain(d.id())),
    }))
}

/// For each sample `x`: `x ∈ D` iff `x ∈ D_M` for every t-maximal `M`.
/// Membership in `D_M` is read off the reduced denominator.
pub fn t_representation_check(d: &CatalogDomain, samples: &[FracElem]) -> Result<RepresentationReport> {
    let mut lines = Vec::new();
    let mut undecided = Vec::new();
    for x in samples {
        let in_domain = d.contains(x)?;
        match excluding_primes(d, x)? {
            None => undecided.push(x.clone()),
            Some(excluded_by) => {
                let consistent = in_domain == excluded_by.is_empty();
                lines.push(RepresentationLine { element: x.clone(), in_domain, excluded_by, consistent });
            }
        }
    }
    let violations = lines.iter().filter(|l| !l.consistent).count();
    Ok(RepresentationReport { domain: d.clone(), lines, undecided, violations })
}

/// Contraction to `Z` of a t-ideal of a localization of `Z`.
#[derive(Debug, Clone, Serialize)]
pub struct ContractionCheck {
    pub ideal: String,
    pub contraction: String,
    pub contraction_is_t_ideal: bool,
    /// Integers in `-bound..=bound` where membership in `I ∩ Z` and in the
    /// computed contraction disagree.
    pub mismatches: Vec<i64>,
}

/// `I ∩ Z` for an integral ideal `I` of `S⁻¹Z`, checked against membership
/// on a window of integers.
pub fn contraction_check(i: &FracIdealFG, bound: i64) -> Result<ContractionCheck> {
    let CatalogDomain::LocalizedZ(active) = &i.domain else {
        return Err(Error::Precondition("contraction is defined for localizations of Z".into()));
    };
    let g = i.v_closure()?.generators()[0].clone();
    if !i.domain.contains(&g)? {
        return Err(Error::Precondition(format!("{i} is not an integral ideal")));
    }
    let c = active_generator(active, &g);
    let contraction = FracIdealFG::principal(CatalogDomain::IntegersZ, FracElem::integer(c.clone()))?;
    let mut mismatches = Vec::new();
    for n in -bound..=bound {
        let x = FracElem::integer(n);
        let in_i = i.domain.divides(&g, &x)?;
        let in_c = (BigInt::from(n) % &c).is_zero();
        if in_i != in_c {
            mismatches.push(n);
        }
    }
    Ok(ContractionCheck {
        ideal: i.to_string(),
        contraction: contraction.to_string(),
        contraction_is_t_ideal: contraction.is_t_ideal()?,
        mismatches,
    })
}

fn active_generator(active: &ActivePrimes, g: &FracElem) -> BigInt {
    active.active_part(&g.num().constant_coeff()).abs()
}

/// Sign-insensitive comparison of two elements.
pub fn equal_up_to_sign(a: &FracElem, b: &FracElem) -> bool {
    a == b || a.neg() == *b
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> FracElem {
        FracElem::parse(s).unwrap()
    }

    #[test]
    fn oracles_agree_on_examples() {
        assert_eq!(brute_force_v_closure_z(&[4.into(), 6.into()], 100), Some(2.into()));
        let v = valuation_v_closure_zx(&[e("4*X+4"), e("6*X^2-6")]).unwrap().unwrap();
        assert!(equal_up_to_sign(&v, &e("2*X+2")));
        let i = FracIdealFG::parse("ideal over Z[X]: p=5, X").unwrap();
        let cands: Vec<FracElem> = ["1", "1/5", "1/X", "X/5", "(X+1)/X", "X^3-2"].iter().map(|s| e(s)).collect();
        assert_eq!(colon_sweep_mismatch(&i, &cands).unwrap(), None);
    }

    #[test]
    fn representation_reports() {
        let r = t_representation_check(&CatalogDomain::IntegersZ, &[e("1/2")]).unwrap();
        assert_eq!(r.lines[0].excluded_by, vec!["(2)"]);
        let r = t_representation_check(&CatalogDomain::PolyZX, &[e("X"), e("(X+1)/5")]).unwrap();
        assert!(r.lines[0].excluded_by.is_empty());
        assert_eq!(r.lines[1].excluded_by, vec!["(5)"]);
        assert_eq!(r.violations, 0);
    }

    #[test]
    fn contraction_from_localization() {
        let d = CatalogDomain::localized_only([2, 3]);
        let i = FracIdealFG::principal(d, e("30")).unwrap();
        let c = contraction_check(&i, 60).unwrap();
        assert_eq!(c.contraction, "(6)");
        assert!(c.contraction_is_t_ideal && c.mismatches.is_empty());
    }
}
