use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::domain::{coefficients_in, int_membership, int_membership_binomial, IntDomain, IntPoly};
use super::padic::{padic_maximals, IntPrimeDesc};
use crate::arith::primes::ActivePrimes;
use crate::arith::{Rational, UniPolyQ};
use crate::pvmd::{catalog_descriptor, pvmd_check_closure, DomainDescriptor};
use crate::spectra::{is_patch_closed, patch_closure, FinitePoset, PointMap, PointRef, Shape, SpectralMap, SpectrumModel, SubsetDesc};
use crate::{Error, Result};

/// Points of `Λ₀` materialized for witnesses and residue sizes.
const LAMBDA_SAMPLE: usize = 6;

/// A sampled `Λ₀` point with its residue field and the witness
/// `(X^p − X)/p ∈ Int(D_P) \ D_P[X]`.
#[derive(Debug, Clone, Serialize)]
pub struct Lambda0Point {
    pub prime: String,
    pub residue_size: u64,
    pub witness: IntPoly,
    pub witness_integer_valued: bool,
    pub witness_in_polynomial_ring: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct LambdaClassification {
    pub domain: String,
    pub lambda0: SubsetDesc,
    pub lambda1: SubsetDesc,
    pub lambda0_text: String,
    pub lambda1_text: String,
    pub d0: IntDomain,
    pub d1: IntDomain,
    pub sampled: Vec<Lambda0Point>,
    pub reason: String,
}

fn base_descriptor(d: &IntDomain) -> Result<DomainDescriptor> {
    let c = d.catalog().ok_or_else(|| Error::UnsupportedDomain(d.id()))?;
    catalog_descriptor(&c)
}

fn generic_point(shape: &Shape) -> Result<PointRef> {
    match shape {
        Shape::Family(_) => Ok(PointRef::Generic),
        Shape::Poset(_) => Ok(PointRef::Id("(0)".into())),
        _ => Err(Error::UnsupportedModel("expected a family or a finite poset".into())),
    }
}

/// `Λ₀ = {P ∈ t-Spec(D) : Int(D)_P ≠ D_P[X]}` and its complement `Λ₁`.
///
/// For localizations of `Z` every maximal ideal has a finite residue field
/// and lies in `Λ₀`; `(0)` gives `Q[X]`. Every residue field of `Q[X]` is
/// infinite, so `Λ₀` is empty there.
pub fn lambda_classify(d: &IntDomain) -> Result<LambdaClassification> {
    let desc = base_descriptor(d)?;
    let shape = &desc.model.shape;
    let zero = shape.singleton(&generic_point(shape)?)?;
    let (lambda0, d0, d1, reason) = match d {
        IntDomain::Localized(_) => (
            desc.t_spec.difference(&zero)?,
            d.clone(),
            IntDomain::rationals(),
            "maximal ideals have finite residue fields F_p; Int(D)_(0) = Q[X]".to_string(),
        ),
        IntDomain::PolyQ => (
            shape.empty(),
            IntDomain::RationalFunctions,
            IntDomain::PolyQ,
            "every residue field of Q[X] is infinite, so Int(D)_P = D_P[X]".to_string(),
        ),
        IntDomain::RationalFunctions => return Err(Error::UnsupportedDomain(d.id())),
    };
    let lambda1 = desc.t_spec.difference(&lambda0)?;
    let mut sampled = Vec::new();
    for p in shape.finite_members(&lambda0.intersection(&subset_of_sample(shape)?)?)? {
        let label = desc.model.label(&p);
        let q: u64 = label.trim_matches(|c| c == '(' || c == ')').parse().map_err(|_| Error::UnknownPoint(label.clone()))?;
        let mut coeffs = vec![Rational::from_integer(0.into()); q as usize + 1];
        coeffs[1] = Rational::new((-1).into(), q.into());
        coeffs[q as usize] = Rational::new(1.into(), q.into());
        let w = IntPoly::from_q(&UniPolyQ::new(coeffs));
        let local = IntDomain::Localized(ActivePrimes::only([q]));
        sampled.push(Lambda0Point {
            prime: label,
            residue_size: q,
            witness_integer_valued: int_membership(&w, &local)?,
            witness_in_polynomial_ring: coefficients_in(&w, &local)?,
            witness: w,
        });
    }
    Ok(LambdaClassification {
        domain: d.id(),
        lambda0_text: desc.describe(&lambda0),
        lambda1_text: desc.describe(&lambda1),
        lambda0,
        lambda1,
        d0,
        d1,
        sampled,
        reason,
    })
}

fn subset_of_sample(shape: &Shape) -> Result<SubsetDesc> {
    shape.subset_of(&shape.points(LAMBDA_SAMPLE))
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionLine {
    pub f: IntPoly,
    pub in_int_d: bool,
    pub in_d1_x: bool,
    pub in_int_d0: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DecompositionReport {
    pub domain: String,
    pub d0: String,
    pub d1: String,
    pub lines: Vec<DecompositionLine>,
    pub discrepancies: usize,
}

/// `f ∈ Int(D)` against `f ∈ D₁[X] ∧ f ∈ Int(D₀)`. The left side uses the
/// evaluation criterion, `Int(D₀)` the binomial coordinates.
pub fn decomposition_check(d: &IntDomain, samples: &[IntPoly]) -> Result<DecompositionReport> {
    let cls = lambda_classify(d)?;
    let mut lines = Vec::new();
    for f in samples {
        let in_int_d = int_membership(f, d)?;
        let in_d1_x = coefficients_in(f, &cls.d1)?;
        let in_int_d0 = int_membership_binomial(f, &cls.d0)?;
        lines.push(DecompositionLine { f: f.clone(), in_int_d, in_d1_x, in_int_d0, agree: in_int_d == (in_d1_x && in_int_d0) });
    }
    let discrepancies = lines.iter().filter(|l| !l.agree).count();
    Ok(DecompositionReport { domain: d.id(), d0: cls.d0.id(), d1: cls.d1.id(), lines, discrepancies })
}

/// Residue field of one overring in a valuation chain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Residue {
    Finite(u64),
    Infinite(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Lemma33Outcome {
    /// `W` has finite residue field and `V = W`.
    Equal,
    /// `V ⊊ W` although `W` has finite residue field.
    Contradiction(String),
    NotApplicable(String),
}

/// Overrings `V = V_{P_v} ⊆ W = V_{P_w}` of a valuation domain whose chain
/// `(0) = P_0 ⊂ … ⊂ P_r` has residue fields `residues[j]` at level `j`.
///
/// Containment means `w ≤ v`. A finite residue field at `W` forces `V = W`.
pub fn lemma33_check(residues: &[Residue], v: usize, w: usize) -> Result<Lemma33Outcome> {
    if v >= residues.len() || w >= residues.len() {
        return Err(Error::Precondition(format!("levels must be below {}", residues.len())));
    }
    if w > v {
        return Err(Error::Precondition(format!("level {v} is not contained in level {w}")));
    }
    Ok(match &residues[w] {
        Residue::Infinite(k) => Lemma33Outcome::NotApplicable(format!("W has infinite residue field {k}")),
        Residue::Finite(_) if v == w => Lemma33Outcome::Equal,
        Residue::Finite(q) => Lemma33Outcome::Contradiction(format!("level {v} lies strictly inside level {w}, whose residue field has {q} elements")),
    })
}

/// A valuation chain; refused when a non-top level has a finite residue field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationChain {
    residues: Vec<Residue>,
}

impl ValuationChain {
    pub fn new(residues: Vec<Residue>) -> Result<Self> {
        if residues.is_empty() {
            return Err(Error::Precondition("a chain has at least the fraction field".into()));
        }
        let top = residues.len() - 1;
        for w in 0..top {
            if let Lemma33Outcome::Contradiction(why) = lemma33_check(&residues, top, w)? {
                return Err(Error::InvalidDescriptor(why));
            }
        }
        Ok(ValuationChain { residues })
    }

    pub fn rank(&self) -> usize {
        self.residues.len() - 1
    }

    pub fn residues(&self) -> &[Residue] {
        &self.residues
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Prop34Status {
    Pass,
    /// The image equals `Λ₀` but `Λ₀` is not patch-closed in `Spec(D)`.
    DualReading,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Prop34Report {
    pub domain: String,
    pub lambda0: String,
    /// Contraction of the primes of `D₀` with finite residue field.
    pub image: String,
    pub image_equals_lambda0: bool,
    pub lambda0_closed_in_spec: bool,
    pub lambda0_closure: String,
    /// Contraction of all of `Spec(D₀)`, `(0)` included.
    pub full_image: String,
    pub full_image_closed: bool,
    pub readings: Vec<String>,
    pub status: Prop34Status,
}

/// `i*(Spec(D₀)) = Λ₀` and closedness of `Λ₀`, reported under both readings
/// of the ambient space.
pub fn prop34_check(d: &IntDomain) -> Result<Prop34Report> {
    let desc = base_descriptor(d)?;
    if pvmd_check_closure(&desc)?.is_pvmd != Some(true) {
        return Err(Error::Precondition(format!("{} is not a verified PvMD", desc.id)));
    }
    let cls = lambda_classify(d)?;
    let shape = &desc.model.shape;
    let (map, finite_residue) = match &cls.d0 {
        IntDomain::Localized(_) if cls.d0 == *d => {
            let map = SpectralMap::new(desc.model.clone(), desc.model.clone(), PointMap::Identity)?;
            let nonzero = shape.full().difference(&shape.singleton(&generic_point(shape)?)?)?;
            (map, nonzero)
        }
        IntDomain::RationalFunctions | IntDomain::Localized(_) => {
            let field = SpectrumModel::bare("K", Shape::Poset(FinitePoset::new(&["(0)"], &[])?));
            let table: BTreeMap<PointRef, PointRef> = [(PointRef::Id("(0)".into()), generic_point(shape)?)].into();
            let empty = field.empty();
            (SpectralMap::new(field, desc.model.clone(), PointMap::Explicit(table))?, empty)
        }
        IntDomain::PolyQ => return Err(Error::Precondition("D₀ is not Prüfer with finite residue fields".into())),
    };
    let image = map.image(&finite_residue)?;
    let full_image = map.image(&map.source.full())?;
    let image_equals_lambda0 = image == cls.lambda0;
    let lambda0_closed_in_spec = is_patch_closed(&desc.model, &cls.lambda0)?;
    let closure = patch_closure(&desc.model, &cls.lambda0)?;
    let full_image_closed = is_patch_closed(&desc.model, &full_image)?;
    let readings = vec![
        format!("in Spec(D): Λ₀ patch-closed = {lambda0_closed_in_spec}, closure {}", desc.describe(&closure)),
        format!("as the image of the spectral map Spec(D₀) → Spec(D): {} is patch-closed = {full_image_closed}", desc.describe(&full_image)),
    ];
    let status = match (image_equals_lambda0, lambda0_closed_in_spec) {
        (true, true) => Prop34Status::Pass,
        (true, false) => Prop34Status::DualReading,
        _ => Prop34Status::Fail,
    };
    Ok(Prop34Report {
        domain: d.id(),
        lambda0: cls.lambda0_text,
        image: desc.describe(&image),
        image_equals_lambda0,
        lambda0_closed_in_spec,
        lambda0_closure: desc.describe(&closure),
        full_image: desc.describe(&full_image),
        full_image_closed,
        readings,
        status,
    })
}

/// Irreducible uppers used when tabulating primes of `Int(·)`.
const UPPERS: [&str; 4] = ["X", "X + 1", "X^2 + 1", "X^2 - 2"];
/// `p`-adic precision of tabulated maximal ideals.
const LEMMA36_PRECISION: u32 = 2;

#[derive(Debug, Clone, Serialize)]
pub struct Lemma36Report {
    pub domain: String,
    pub precision: u32,
    pub from_local: Vec<String>,
    pub from_d0: Vec<String>,
    pub equal: bool,
}

/// `{M ∩ Int(D) : M ∈ Spec(Int(D_P)), P ∈ Λ₀} = i₀*(Spec(Int(D₀)))` on the
/// tabulated primes: `(0)`, a list of uppers, and every `m_{p,α}` with `α`
/// modulo `p^k`.
///
/// A prime is identified by its contraction: uppers by the irreducible,
/// `m_{p,α}` by its membership pattern on the binomials `C(X, j)`.
pub fn lemma36_instance(d: &IntDomain) -> Result<Lemma36Report> {
    let cls = lambda_classify(d)?;
    let IntDomain::Localized(active) = &cls.d0 else {
        return Err(Error::Precondition("Λ₀ is empty, so D₀ is the fraction field and the left side is empty".into()));
    };
    let lambda0_primes = active.finite_list().ok_or_else(|| Error::Precondition("Λ₀ must be finite to tabulate".into()))?;
    if lambda0_primes.is_empty() {
        return Err(Error::Precondition("Λ₀ is empty".into()));
    }
    let probes: Vec<UniPolyQ> = (0..=4).map(super::domain::binomial_poly).collect();
    let contract = |m: &IntPrimeDesc| -> Result<String> {
        let pattern = probes.iter().map(|f| m.contains(f).map(|v| v.to_string())).collect::<Result<Vec<_>>>()?;
        Ok(match m {
            IntPrimeDesc::UpperToZero(q) => format!("({q}) over (0)"),
            IntPrimeDesc::MaxPAdic(a) => format!("over ({}): [{}]", a.p(), pattern.join(",")),
        })
    };
    let uppers = UPPERS.iter().map(|s| IntPrimeDesc::upper(UniPolyQ::parse(s)?)).collect::<Result<Vec<_>>>()?;
    let tabulate = |ps: &[u64]| -> Result<BTreeSet<String>> {
        let mut out: BTreeSet<String> = ["(0)".to_string()].into();
        for u in &uppers {
            out.insert(contract(u)?);
        }
        for &p in ps {
            for m in padic_maximals(p, LEMMA36_PRECISION)? {
                out.insert(contract(&m)?);
            }
        }
        Ok(out)
    };
    let mut from_local = BTreeSet::new();
    for &p in &lambda0_primes {
        from_local.extend(tabulate(&[p])?);
    }
    let from_d0 = tabulate(&lambda0_primes)?;
    Ok(Lemma36Report {
        domain: d.id(),
        precision: LEMMA36_PRECISION,
        equal: from_local == from_d0,
        from_local: from_local.into_iter().collect(),
        from_d0: from_d0.into_iter().collect(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Thm37Report {
    pub domain: String,
    /// Declared: `Int(D)_P = Int(D_P)` for every t-maximal `P`.
    pub int_localizes: bool,
    pub d_is_pvmd: bool,
    /// Recorded fact: `Int(D₀)` is Prüfer.
    pub int_d0_prufer: bool,
    /// Read as the conjunction "D is a PvMD and Int(D₀) is Prüfer".
    pub condition2: bool,
    pub d1_x_pvmd: bool,
    pub decomposition_discrepancies: usize,
    pub essential_wrt_int_d0: bool,
    /// `Int(D) = D₁[X] ∩ Int(D₀)` with both PvMDs and `Int(D)` essential
    /// with respect to both.
    pub condition1: bool,
    pub equivalent: bool,
    pub trace: Vec<String>,
}

/// Samples for the decomposition step of [`thm37_check`].
fn decomposition_samples(d: &IntDomain) -> Result<Vec<IntPoly>> {
    let base = ["X*(X-1)/2", "X/2", "(X^3-X)/6", "X^2/3 + 1/2", "(X^5-X)/5", "7*X^4 - 3", "X*(X-1)*(X-2)*(X-3)/24", "1/35"];
    if d.rational_coefficients() {
        return base.iter().map(|s| Ok(IntPoly::from_q(&UniPolyQ::parse(s)?))).collect();
    }
    ["Y^2 + X*Y", "Y/X", "(X^2 + 1)*Y^3 - 1/2", "Y/(X + 1) + X", "Y*(Y-1)/2"].iter().map(|s| IntPoly::parse(s, d)).collect()
}

/// Both sides of the equivalence on one instance.
pub fn thm37_check(d: &IntDomain) -> Result<Thm37Report> {
    let int_localizes = match d {
        IntDomain::Localized(_) | IntDomain::PolyQ => true,
        IntDomain::RationalFunctions => return Err(Error::Precondition("no recorded Int-localization flag for Q(X)".into())),
    };
    let mut trace = Vec::new();
    let desc = base_descriptor(d)?;
    let d_is_pvmd = pvmd_check_closure(&desc)?.is_pvmd == Some(true);
    let cls = lambda_classify(d)?;
    // Int of a Dedekind domain with finite residue fields, or of a field, is Prüfer.
    let int_d0_prufer = matches!(cls.d0, IntDomain::Localized(_) | IntDomain::RationalFunctions);
    trace.push(format!("D₀ = {}, D₁ = {}; Int(D₀) Prüfer = {int_d0_prufer} (recorded)", cls.d0.id(), cls.d1.id()));
    let condition2 = d_is_pvmd && int_d0_prufer;
    trace.push("condition (2) read as the conjunction: D is a PvMD and Int(D₀) is Prüfer".into());

    let d1 = base_descriptor(&cls.d1)?;
    let d1_x_pvmd = pvmd_check_closure(&d1)?.is_pvmd == Some(true);
    trace.push(format!("D₁ = {} is a PvMD = {d1_x_pvmd}, hence so is D₁[X]", d1.id));
    let decomposition = decomposition_check(d, &decomposition_samples(d)?)?;
    trace.push(format!("Int(D) = D₁[X] ∩ Int(D₀) on {} samples: {} discrepancies", decomposition.lines.len(), decomposition.discrepancies));
    let essential_wrt_int_d0 = match &cls.d0 {
        IntDomain::RationalFunctions => {
            trace.push("every prime of Int(D₀) = K[Y] lies over (0) of D, where Int(D) localizes to K[Y]".into());
            true
        }
        IntDomain::Localized(a) if a.is_finite() => {
            let l36 = lemma36_instance(d)?;
            trace.push(format!("primes of Int(D₀) contract to primes of Int(D_P), P ∈ Λ₀: {} ({} primes)", l36.equal, l36.from_d0.len()));
            l36.equal
        }
        IntDomain::Localized(_) => {
            // Λ₀ is infinite; tabulate the primes of Int(D₀) above the sampled Λ₀ points.
            let ok = cls.sampled.iter().all(|p| p.witness_integer_valued && !p.witness_in_polynomial_ring);
            trace.push(format!("Int(D₀)_(p) = Int(D_(p)) on the sampled Λ₀ points: {ok}"));
            ok
        }
        IntDomain::PolyQ => false,
    };
    trace.push("Λ₁ points have Int(D)_P = D_P[X], so Int(D) is essential with respect to D₁[X]".into());
    let condition1 = d1_x_pvmd && int_d0_prufer && decomposition.discrepancies == 0 && essential_wrt_int_d0;
    trace.push("condition (1): intersection of two PvMDs, essential with respect to both".into());
    Ok(Thm37Report {
        domain: d.id(),
        int_localizes,
        d_is_pvmd,
        int_d0_prufer,
        condition2,
        d1_x_pvmd,
        decomposition_discrepancies: decomposition.discrepancies,
        essential_wrt_int_d0,
        condition1,
        equivalent: condition1 == condition2,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma33_examples() {
        let zp = [Residue::Infinite("Q".into()), Residue::Finite(5)];
        assert_eq!(lemma33_check(&zp, 1, 1).unwrap(), Lemma33Outcome::Equal);
        let bad = [Residue::Infinite("Q".into()), Residue::Finite(2), Residue::Finite(2)];
        assert!(matches!(lemma33_check(&bad, 2, 1).unwrap(), Lemma33Outcome::Contradiction(_)));
        assert!(ValuationChain::new(bad.to_vec()).is_err());
        let q = [Residue::Infinite("Q(t)".into()), Residue::Infinite("Q".into())];
        assert!(matches!(lemma33_check(&q, 1, 0).unwrap(), Lemma33Outcome::NotApplicable(_)));
        let ok = ValuationChain::new(vec![Residue::Infinite("K".into()), Residue::Infinite("F_2(t)".into()), Residue::Finite(2)]).unwrap();
        assert_eq!(ok.rank(), 2);
        assert!(lemma33_check(&zp, 0, 1).is_err());
    }
}
