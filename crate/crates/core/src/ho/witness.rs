use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::element::{ho_in_core, ho_in_d, ho_in_mi, ho_in_r, HoConfig, HoElement};
use crate::arith::{Exponents, MultiPoly, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, Serialize)]
pub struct FipCheck {
    pub index: usize,
    pub element: HoElement,
    pub in_mi: bool,
}

/// `m_i ∩ D ∈ V(f_1, …, f_h) ∩ Y` for every `i > bound`.
#[derive(Debug, Clone, Serialize)]
pub struct FipWitness {
    pub bound: usize,
    pub checks: Vec<FipCheck>,
    /// The same membership for every unmaterialized index at once.
    pub tail_holds: bool,
}

/// Witness for the finite intersection property of `{V(f) ∩ Y : f ∈ core}`.
pub fn ho_fip_witness(fs: &[HoElement]) -> Result<FipWitness> {
    let Some(level) = fs.first().map(HoElement::level) else {
        return Err(Error::Precondition("the family is empty".into()));
    };
    for f in fs {
        if f.level() != level {
            return Err(Error::Precondition("elements come from different truncation levels".into()));
        }
        if !ho_in_core(f) {
            return Err(Error::NotInCore(f.to_string()));
        }
    }
    let bound = fs.iter().filter_map(HoElement::max_x_index).max().unwrap_or(0);
    let mut checks = Vec::new();
    for i in bound + 1..level {
        for f in fs {
            checks.push(FipCheck { index: i, element: f.clone(), in_mi: ho_in_mi(f, i)? });
        }
    }
    let tail_holds = fs.iter().all(|f| f.order().at_least(1));
    if let Some(c) = checks.iter().find(|c| !c.in_mi) {
        return Err(Error::WitnessFailed(format!("{} is not in m_{}", c.element, c.index)));
    }
    if !tail_holds {
        return Err(Error::WitnessFailed("the unmaterialized m_i miss some element".into()));
    }
    Ok(FipWitness { bound, checks, tail_holds })
}

/// One direction of the comparability failure: every sampled polynomial `d`
/// with `d·num/den ∈ D` lies in the core.
#[derive(Debug, Clone, Serialize)]
pub struct CertificateStep {
    pub statement: String,
    pub samples: usize,
    /// Samples where the hypothesis held.
    pub instances: usize,
    pub violations: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NonvaluationCertificate {
    pub pair: (String, String),
    pub seed: u64,
    pub steps: Vec<CertificateStep>,
    pub conclusion: String,
}

/// `Some(in_core(d))` when `d·T/U ∈ R`, `None` for a vacuous sample.
pub fn divisibility_instance(cfg: &HoConfig, d: &HoElement, swap: bool) -> Result<Option<bool>> {
    let (a, b) = if swap { ("U", "T") } else { ("T", "U") };
    let q = d.mul(&HoElement::poly(cfg.var(a)?))?.div(&HoElement::poly(cfg.var(b)?))?;
    Ok(ho_in_r(&q).then(|| ho_in_core(d)))
}

/// Random polynomial with at most four terms of total degree at most three
/// and small integer coefficients.
pub fn random_poly(cfg: &HoConfig, rng: &mut ChaCha8Rng) -> MultiPoly {
    let vars = cfg.alphabet().len();
    let terms = rng.gen_range(1..=4);
    let mut out = Vec::new();
    for _ in 0..terms {
        let mut e: Exponents = vec![0; vars];
        for _ in 0..rng.gen_range(0..=3) {
            e[rng.gen_range(0..vars)] += 1;
        }
        let c = loop {
            let c: i64 = rng.gen_range(-3..=3);
            if !c.is_zero() {
                break c;
            }
        };
        out.push((e, Rational::from_integer(c.into())));
    }
    MultiPoly::from_terms(cfg.alphabet(), out)
}

/// Machine-checked steps showing neither `T/U` nor `U/T` lies in `D_{Y_U}`.
///
/// Half the samples are multiplied by the divisor so the hypothesis is
/// exercised; a violation means the construction is wrong.
pub fn ho_nonvaluation_certificate(cfg: &HoConfig, seed: u64, samples: usize) -> Result<NonvaluationCertificate> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut steps = Vec::new();
    for swap in [false, true] {
        let (a, b) = if swap { ("U", "T") } else { ("T", "U") };
        let mut step = CertificateStep {
            statement: format!("d·{a}/{b} ∈ R implies d ∈ D ∩ (T,U)R"),
            samples,
            instances: 0,
            violations: Vec::new(),
        };
        for k in 0..samples {
            let mut d = random_poly(cfg, &mut rng);
            if d.is_zero() {
                d = MultiPoly::one(cfg.alphabet());
            }
            if k % 2 == 0 {
                d = d.mul(&cfg.var(b)?)?;
            }
            let d = HoElement::poly(d);
            debug_assert!(ho_in_d(&d));
            match divisibility_instance(cfg, &d, swap)? {
                Some(true) => step.instances += 1,
                Some(false) => step.violations.push(d.to_string()),
                None => {}
            }
        }
        steps.push(step);
    }
    if let Some(s) = steps.iter().find(|s| !s.violations.is_empty()) {
        return Err(Error::CertificateFailed(format!("{}: fails at {}", s.statement, s.violations[0])));
    }
    Ok(NonvaluationCertificate {
        pair: ("T".into(), "U".into()),
        seed,
        steps,
        conclusion: "any s ∈ D with s·T/U ∈ D or s·U/T ∈ D lies in the core ⊆ Y_U, so neither T/U nor U/T is in D_{Y_U}: it is not a valuation domain".into(),
    })
}

/// One row of the demo membership table.
#[derive(Debug, Clone, Serialize)]
pub struct MembershipRow {
    pub element: HoElement,
    pub in_d: bool,
    pub in_core: bool,
    /// `v_i(f) ≥ 1` for each materialized `i`.
    pub in_mi: Vec<bool>,
    /// The common answer for every unmaterialized `i`.
    pub in_tail: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct HoDemo {
    pub level: usize,
    pub fip: FipWitness,
    pub table: Vec<MembershipRow>,
    pub limit_members: Vec<HoElement>,
    pub certificate: NonvaluationCertificate,
}

pub const CERTIFICATE_SAMPLES: usize = 500;

/// FIP bound, membership table, limit lower bound and certificate for a
/// family of core elements.
pub fn ho_demo(cfg: &HoConfig, fs: &[HoElement], seed: u64) -> Result<HoDemo> {
    let fip = ho_fip_witness(fs)?;
    let table = fs
        .iter()
        .map(|f| {
            Ok(MembershipRow {
                element: f.clone(),
                in_d: ho_in_d(f),
                in_core: ho_in_core(f),
                in_mi: (0..cfg.level()).map(|i| ho_in_mi(f, i)).collect::<Result<_>>()?,
                in_tail: f.order().at_least(1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let limit_members = fs.iter().filter(|f| super::ho_limit_contains(f)).cloned().collect();
    let certificate = ho_nonvaluation_certificate(cfg, seed, CERTIFICATE_SAMPLES)?;
    Ok(HoDemo { level: cfg.level(), fip, table, limit_members, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fip_examples() {
        let cfg = HoConfig::new(4).unwrap();
        let w = ho_fip_witness(&[cfg.parse("T").unwrap(), cfg.parse("U").unwrap()]).unwrap();
        assert_eq!(w.bound, 0);
        assert!(w.checks.iter().all(|c| c.in_mi) && w.checks.len() == 6);
        let w = ho_fip_witness(&[cfg.parse("T + X_0*U").unwrap()]).unwrap();
        assert_eq!((w.bound, w.checks.len()), (0, 3));
        assert_eq!(ho_fip_witness(&[cfg.parse("1").unwrap()]).unwrap_err(), Error::NotInCore("1".into()));
        let w = ho_fip_witness(&[cfg.parse("T/(X_2 + T)").unwrap(), cfg.parse("U").unwrap()]).unwrap();
        assert_eq!(w.bound, 2);
    }

    #[test]
    fn certificate_instances() {
        let cfg = HoConfig::new(3).unwrap();
        assert_eq!(divisibility_instance(&cfg, &cfg.parse("U*X_0").unwrap(), false).unwrap(), Some(true));
        assert_eq!(divisibility_instance(&cfg, &cfg.parse("1").unwrap(), false).unwrap(), None);
        let c = ho_nonvaluation_certificate(&cfg, 7, 500).unwrap();
        assert!(c.steps.iter().all(|s| s.instances >= 250 && s.violations.is_empty()));
    }
}
