//! One check per numbered acceptance criterion.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::gen::{all_posets, big, finite_indices, infinite_indices, int_z_member, nonzero_int, poset_subsets, q_poly, qx_poly, zx_poly};
use super::CheckOutcome;
use crate::arith::primes::{nth_prime, ActivePrimes};
use crate::arith::{PAdicApprox, UniPolyQ};
use crate::ho::{ho_demo, ho_in_core, random_poly, HoConfig, HoElement, HO_FAMILY, LIMIT_LABEL};
use crate::intpoly::{
    decomposition_check, lambda_classify, mpalpha_contract_zx, mpalpha_membership, prop34_check, thm37_check, IntDomain, IntPoly,
    MpMembership, Prop34Status,
};
use crate::pvmd::{
    catalog_ids, criterion_agreement, descriptor_for_id, intersection_pvmd_check, pvmd_check_closure, Criterion, DomainDescriptor,
    Finiteness, IntersectionPart, IntersectionParts,
};
use crate::spectra::{
    patch_closure, principal_ultrafilters, ultrafilter_limit, ConstructibleBasicSet, PointMap, PointRef, SpectralMap, SpectrumModel,
    SubsetDesc, UltrafilterDesc,
};
use crate::star::checks::{brute_force_v_closure_z, colon_sweep_mismatch, equal_up_to_sign, valuation_v_closure_zx};
use crate::star::{as_integer, CatalogDomain, FracElem, FracIdealFG};
use crate::Result;

fn same(a: &SubsetDesc, b: &SubsetDesc) -> Result<bool> {
    Ok(a.is_subset(b)? && b.is_subset(a)?)
}

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ salt)
}

/// Criterion 1: on every poset with at most four points, the patch closure
/// of each subset, the set of its ultrafilter limits, and the subset agree.
pub fn hochster_poset_oracle(_seed: u64) -> Result<CheckOutcome> {
    let posets = all_posets(4)?;
    let mut failures = Vec::new();
    let mut cases = 0;
    for m in &posets {
        for y in poset_subsets(m) {
            cases += 1;
            let closure = patch_closure(m, &y)?;
            let limits: Vec<PointRef> =
                principal_ultrafilters(m, &y)?.iter().map(|u| ultrafilter_limit(m, &y, u)).collect::<Result<_>>()?;
            let limits = m.shape.subset_of(&limits)?;
            if !same(&closure, &y)? || !same(&limits, &y)? {
                failures.push(format!("{}: Y = {}", m.name, m.describe(&y)));
            }
        }
    }
    let ok = format!("{} posets up to isomorphism, {cases} subsets", posets.len());
    if posets.len() != 24 {
        failures.push(format!("expected 24 posets on 1..4 points, found {}", posets.len()));
    }
    Ok(CheckOutcome::from_failures(cases, failures, ok))
}

/// Criterion 2: on Spec(Z), 100 random infinite subsets gain exactly the
/// generic point and 100 finite ones gain nothing.
pub fn spec_z_closure_exactness(seed: u64) -> Result<CheckOutcome> {
    let m = SpectrumModel::integers(ActivePrimes::all());
    let generic = m.shape.singleton(&PointRef::Generic)?;
    let mut r = rng(seed, 2);
    let mut failures = Vec::new();
    for k in 0..200 {
        let infinite = k < 100;
        let indices = if infinite { infinite_indices(&mut r) } else { finite_indices(&mut r) };
        let y = SubsetDesc::family(r.gen_bool(0.3), indices);
        let closure = patch_closure(&m, &y)?;
        let expected = if infinite { y.union(&generic)? } else { y.clone() };
        if !same(&closure, &expected)? {
            failures.push(format!("{} ↦ {}", m.describe(&y), m.describe(&closure)));
        }
    }
    Ok(CheckOutcome::from_failures(200, failures, "100 infinite and 100 finite subsets"))
}

/// Random elements of the core `D ∩ (T,U)R`, drawn as products and
/// quotients that land in the core more often than uniform samples.
pub(crate) fn core_samples(cfg: &HoConfig, r: &mut ChaCha8Rng, count: usize) -> Result<Vec<HoElement>> {
    let gens: Vec<HoElement> = ["T", "U", "T + X_0*U", "T^2 + U", "T*U"].iter().map(|s| cfg.parse(s)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        if tries > 50 * count {
            return Err(crate::Error::WitnessFailed("could not sample enough core elements".into()));
        }
        let g = HoElement::poly(random_poly(cfg, r));
        let mut x = gens[r.gen_range(0..gens.len())].mul(&g)?;
        if r.gen_bool(0.3) {
            let i = r.gen_range(0..cfg.level());
            x = x.div(&cfg.parse(&format!("X_{i} + T"))?)?;
        } else if r.gen_bool(0.3) {
            let c = nonzero_int(r, 3);
            x = x.div(&HoElement::poly(random_poly(cfg, r).add(&crate::arith::MultiPoly::constant(cfg.alphabet(), crate::arith::int(c)))?))
                .unwrap_or(x);
        }
        if !x.is_zero() && ho_in_core(&x) {
            out.push(x);
        }
    }
    Ok(out)
}

/// Criterion 3 at truncation levels 2, 4 and 8.
pub fn ho_replication(seed: u64) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in [2usize, 4, 8] {
        let cfg = HoConfig::new(n)?;
        let fs: Vec<HoElement> = ["T", "U", "T + X_0*U"].iter().map(|s| cfg.parse(s)).collect::<Result<_>>()?;
        let demo = ho_demo(&cfg, &fs, seed)?;
        if !demo.fip.tail_holds || demo.fip.checks.iter().any(|c| !c.in_mi) {
            failures.push(format!("n = {n}: FIP witness fails"));
        }
        let steps_ok = demo.certificate.steps.iter().all(|s| s.samples == 500 && s.violations.is_empty() && s.instances > 0);
        if !steps_ok {
            failures.push(format!("n = {n}: non-valuation certificate"));
        }
        // Core ⊆ Y_U through the nonprincipal ultrafilter on {m_i}.
        let d = cfg.descriptor()?;
        let u = UltrafilterDesc::nonprincipal(HO_FAMILY);
        let mut r = rng(seed, 3 + n as u64);
        for x in core_samples(&cfg, &mut r, 500)? {
            cases += 1;
            let trace = d.model.vanishing(&x.to_string())?.intersection(&d.y)?;
            if u.contains(&d.model, &trace)? != Some(true) {
                failures.push(format!("n = {n}: {x} is in the core but not in the limit"));
            }
        }
        let v = pvmd_check_closure(&d)?;
        if v.is_pvmd != Some(false) || v.certificate.offending.as_deref() != Some(LIMIT_LABEL) {
            failures.push(format!("n = {n}: verdict {:?} offending {:?}", v.is_pvmd, v.certificate.offending));
        }
    }
    Ok(CheckOutcome::from_failures(cases, failures, "FIP bound 0, 500 core samples and 2×500 certificate instances per level, NOT PvMD at Y_U"))
}

/// Criterion 4: 500 ideals over Z against the brute-force double colon,
/// 200 over Z[X] against factor valuations and a colon membership sweep.
pub fn star_oracle_equivalence(seed: u64) -> Result<CheckOutcome> {
    let mut r = rng(seed, 4);
    let mut failures = Vec::new();
    for _ in 0..500 {
        let gens: Vec<i64> = (0..r.gen_range(1..=4)).map(|_| nonzero_int(&mut r, 1000)).collect();
        let i = FracIdealFG::new(CatalogDomain::IntegersZ, gens.iter().map(|&g| FracElem::integer(g)).collect())?;
        let rule = as_integer(&i.v_closure()?.generators()[0]).map(|g| g.abs());
        let oracle = brute_force_v_closure_z(&gens.iter().map(|&g| big(g)).collect::<Vec<_>>(), 1000);
        if rule.is_none() || rule != oracle {
            failures.push(format!("Z {gens:?}: rule {rule:?}, oracle {oracle:?}"));
        }
    }
    for _ in 0..200 {
        let gens: Vec<FracElem> = (0..r.gen_range(1..=3)).map(|_| FracElem::from_poly(zx_poly(&mut r, 3, 20))).collect();
        let i = FracIdealFG::new(CatalogDomain::PolyZX, gens.clone())?;
        let g = i.v_closure()?.generators()[0].clone();
        match valuation_v_closure_zx(&gens)? {
            Some(v) if equal_up_to_sign(&v, &g) => {}
            other => failures.push(format!("Z[X] {i}: rule {g}, valuations {other:?}")),
        }
        let inv = g.inverse()?;
        let mut candidates = vec![FracElem::one(), inv.clone()];
        for s in ["2", "X", "X + 1", "3*X - 1"] {
            let s = FracElem::parse(s)?;
            candidates.push(inv.mul(&s));
            candidates.push(inv.div(&s)?);
        }
        if let Some(x) = colon_sweep_mismatch(&i, &candidates)? {
            failures.push(format!("Z[X] {i}: colon membership differs at {x}"));
        }
    }
    Ok(CheckOutcome::from_failures(700, failures, "500 ideals over Z, 200 over Z[X]"))
}

/// Criterion 5: criterion agreement over the catalog, pullbacks and the
/// Heinzer–Ohm descriptors; Z[X] is a PvMD and Heinzer–Ohm is not.
pub fn criterion_agreement_suite(_seed: u64) -> Result<CheckOutcome> {
    let mut ids: Vec<String> = catalog_ids().into_iter().map(String::from).collect();
    for n in [2, 4, 8] {
        let id = format!("HO:{n}");
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    let mut failures = Vec::new();
    let mut decided_pairs = 0;
    for id in &ids {
        let a = criterion_agreement(&descriptor_for_id(id)?);
        decided_pairs += a.verdicts.iter().filter(|v| v.is_pvmd.is_some()).count();
        if !a.agree {
            failures.push(format!("{id}: {:?}", a.verdicts.iter().map(|v| v.is_pvmd).collect::<Vec<_>>()));
        }
    }
    if pvmd_check_closure(&descriptor_for_id("ZX")?)?.is_pvmd != Some(true) {
        failures.push("Z[X] is not reported PvMD".into());
    }
    for n in [2, 4, 8] {
        if pvmd_check_closure(&descriptor_for_id(&format!("HO:{n}"))?)?.is_pvmd != Some(false) {
            failures.push(format!("HO:{n} is not reported NOT PvMD"));
        }
    }
    Ok(CheckOutcome::from_failures(ids.len(), failures, format!("{} descriptors, {decided_pairs} decided verdicts", ids.len())))
}

/// Explicit map sending the generic and the unique closed point of `Z_(p)`
/// to the corresponding points of `target`.
fn local_map(local: &DomainDescriptor, target: &DomainDescriptor, p: u64, image: PointRef) -> Result<SpectralMap> {
    let mut table = BTreeMap::new();
    table.insert(local.model.resolve("(0)")?, target.model.resolve("(0)")?);
    table.insert(local.model.resolve(&format!("({p})"))?, image);
    SpectralMap::new(local.model.clone(), target.model.clone(), PointMap::Explicit(table))
}

/// Criterion 6: the locally-finite intersection corollary on {Z_(2), Z_(3)} and the indexed theorem on all
/// `Z_(p)` with finiteness data `(1, (p_j))`.
pub fn intersection_theorems(_seed: u64) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let d = descriptor_for_id("Zloc:2,3")?;
    let parts = [2u64, 3]
        .iter()
        .map(|&p| {
            let local = descriptor_for_id(&format!("Zloc:{p}"))?;
            let image = d.model.resolve(&format!("({p})"))?;
            Ok(IntersectionPart { to_d: local_map(&local, &d, p, image)?, descriptor: local })
        })
        .collect::<Result<Vec<_>>>()?;
    let v = intersection_pvmd_check(&d, &IntersectionParts::Finite(parts), None)?;
    let lf_ok = |v: &crate::pvmd::Verdict| v.certificate.locally_finite.as_ref().is_some_and(|c| c.patch_closed && c.checks.iter().all(|w| w.in_union || w.ok));
    if v.is_pvmd != Some(true) || v.criterion != Criterion::Cor215 || !lf_ok(&v) {
        failures.push(format!("finite intersection: {:?} via {}", v.is_pvmd, v.criterion));
    }

    let z = descriptor_for_id("Z")?;
    let part = |j: usize| -> Result<IntersectionPart> {
        let p = nth_prime(j);
        let local = descriptor_for_id(&format!("Zloc:{p}"))?;
        Ok(IntersectionPart { to_d: local_map(&local, &z, p, PointRef::Index(j))?, descriptor: local })
    };
    let neighborhood = |q: &PointRef| match q {
        PointRef::Index(j) => Some(ConstructibleBasicSet::new("1", [nth_prime(*j).to_string()])),
        _ => None,
    };
    let indexed = IntersectionParts::Indexed { family: "Z".into(), part: &part, sample: 48 };
    let v = intersection_pvmd_check(&z, &indexed, Some(&Finiteness::Neighborhood(&neighborhood)))?;
    if v.is_pvmd != Some(true) || v.criterion != Criterion::Thm214 || !lf_ok(&v) {
        failures.push(format!("indexed intersection: {:?} via {}", v.is_pvmd, v.criterion));
    }
    Ok(CheckOutcome::from_failures(2, failures, "both intersections PvMD with locally finite certificates"))
}

/// Random polynomials of degree at most 6 for the decomposition check.
fn decomposition_samples(d: &IntDomain, r: &mut ChaCha8Rng) -> Vec<IntPoly> {
    (0..200)
        .map(|k| match d {
            IntDomain::PolyQ => qx_poly(r, 6),
            // Half the samples are members, so both verdicts are exercised.
            _ if k % 2 == 0 => IntPoly::from_q(&int_z_member(r, 6)),
            _ => IntPoly::from_q(&q_poly(r, 6)),
        })
        .collect()
}

/// Criterion 7: the instance suite over `Int(D)`.
pub fn int_instance_suite(seed: u64) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut cases = 0;
    let expect = [("Z", "all closed points of Z", "(0)"), ("Zloc:2,3", "(2), (3)", "(0)"), ("QX", "∅", "(0), all closed points of QX")];
    let mut r = rng(seed, 7);
    for (id, l0, l1) in expect {
        let d = IntDomain::parse_id(id)?;
        let c = lambda_classify(&d)?;
        if c.lambda0_text != l0 || c.lambda1_text != l1 {
            failures.push(format!("{id}: Λ₀ = {}, Λ₁ = {}", c.lambda0_text, c.lambda1_text));
        }
        if c.sampled.iter().any(|p| !p.witness_integer_valued || p.witness_in_polynomial_ring) {
            failures.push(format!("{id}: a Λ₀ witness (X^p − X)/p misbehaves"));
        }
        let rep = decomposition_check(&d, &decomposition_samples(&d, &mut r))?;
        cases += rep.lines.len();
        if rep.discrepancies > 0 {
            let bad = rep.lines.iter().find(|l| !l.agree).expect("a discrepancy");
            failures.push(format!("{id}: decomposition fails at {}", bad.f));
        }
        let t = thm37_check(&d)?;
        if !t.equivalent || !t.condition1 || !t.condition2 {
            failures.push(format!("{id}: decomposition equivalence (1) = {}, (2) = {}", t.condition1, t.condition2));
        }
        let p = prop34_check(&d)?;
        let want = if id == "Z" { Prop34Status::DualReading } else { Prop34Status::Pass };
        if p.status != want || p.readings.len() != 2 {
            failures.push(format!("{id}: Λ₀ image status {:?}", p.status));
        }
    }
    let primes = [2u64, 3, 5, 7, 11, 13];
    for _ in 0..100 {
        cases += 1;
        let p = primes[r.gen_range(0..primes.len())];
        let k = r.gen_range(1..=4u32);
        let modulus = p.pow(k) as i64;
        let alpha = r.gen_range(0..modulus);
        let a = PAdicApprox::new(p, k, alpha)?;
        let c = mpalpha_contract_zx(&a);
        let rep = big(alpha).mod_floor(&big(p as i64)).to_u64().expect("small");
        let want = if rep == 0 { format!("({p}, X)") } else { format!("({p}, X - {rep})") };
        let lin = UniPolyQ::parse(&format!("X - {rep}"))?;
        let pc = UniPolyQ::constant(crate::arith::int(p as i64));
        let gens_in = mpalpha_membership(&lin, &a)? == MpMembership::In && mpalpha_membership(&pc, &a)? == MpMembership::In;
        if c.ideal != want || !gens_in {
            failures.push(format!("p = {p}, α = {alpha} mod {p}^{k}: {}", c.ideal));
        }
    }
    Ok(CheckOutcome::from_failures(cases, failures, "three domains, 600 decompositions, 100 contractions"))
}
