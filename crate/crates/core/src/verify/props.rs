//! Property suites at the sample sizes stated for each module.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::acceptance::core_samples;
use super::gen::{all_posets, big, finite_indices, int_z_member, nonzero_int, poset_subsets, zx_poly};
use super::CheckOutcome;
use crate::arith::primes::{factorize, is_prime, ActivePrimes};
use crate::arith::{gcd_q, monomial_valuation, rat, Alphabet, PAdicApprox, Rational, UniPolyQ, UniPolyZ, WeightVector};
use crate::ho::{ho_in_core, ho_in_d, ho_in_mi, random_poly, HoConfig, HoElement};
use crate::intpoly::{int_membership, lambda_classify, lemma36_instance, mpalpha_membership, IntDomain, IntPoly, MpMembership};
use crate::pvmd::{catalog_ids, check_or_unknown, descriptor_for_id, pullback_verdict, pvmd_check_closure, Criterion, ValuationDesc};
use crate::spectra::{
    extend_fip, is_patch_closed, patch_closure, ultrafilter::ultrafilter_axioms_hold, ultrafilter_limit, zariski_closure, IndexSet,
    PointRef, SpectrumModel, SubsetDesc, UltrafilterDesc,
};
use crate::star::checks::contraction_check;
use crate::star::{indexed_prime, tabulated_primes, CatalogDomain, FracElem, FracIdealFG};
use crate::{Error, Result};

fn rng(seed: u64, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0xD134_2543_DE82_EF95) ^ salt)
}

fn same(a: &SubsetDesc, b: &SubsetDesc) -> Result<bool> {
    Ok(a.is_subset(b)? && b.is_subset(a)?)
}

pub fn ring_laws(seed: u64) -> Result<CheckOutcome> {
    let cfg = HoConfig::new(2)?;
    let mut r = rng(seed, 101);
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let (a, b, c) = (random_poly(&cfg, &mut r), random_poly(&cfg, &mut r), random_poly(&cfg, &mut r));
        let assoc_add = a.add(&b)?.add(&c)? == a.add(&b.add(&c)?)?;
        let assoc_mul = a.mul(&b)?.mul(&c)? == a.mul(&b.mul(&c)?)?;
        let distrib = a.mul(&b.add(&c)?)? == a.mul(&b)?.add(&a.mul(&c)?)?;
        let commute = a.mul(&b)? == b.mul(&a)?;
        if !(assoc_add && assoc_mul && distrib && commute) {
            failures.push(format!("a = {a}, b = {b}, c = {c}"));
        }
    }
    Ok(CheckOutcome::from_failures(1000, failures, "1000 random triples"))
}

pub fn valuation_laws(seed: u64) -> Result<CheckOutcome> {
    let cfg = HoConfig::new(2)?;
    let mut r = rng(seed, 102);
    let mut failures = Vec::new();
    for _ in 0..1000 {
        let w = WeightVector((0..cfg.alphabet().len()).map(|_| r.gen_range(0..4)).collect());
        let (f, g) = (random_poly(&cfg, &mut r), random_poly(&cfg, &mut r));
        let (vf, vg) = (monomial_valuation(&f, &w), monomial_valuation(&g, &w));
        let product = monomial_valuation(&f.mul(&g)?, &w) == vf.add(vg);
        let ultrametric = monomial_valuation(&f.add(&g)?, &w) >= vf.min(vg);
        if !product || !ultrametric {
            failures.push(format!("f = {f}, g = {g}, w = {:?}", w.0));
        }
    }
    Ok(CheckOutcome::from_failures(1000, failures, "1000 pairs with random weights"))
}

fn divides_q(d: &UniPolyQ, f: &UniPolyQ) -> Result<bool> {
    Ok(d.is_zero() && f.is_zero() || !d.is_zero() && f.div_rem(d)?.1.is_zero())
}

pub fn gcd_laws(seed: u64) -> Result<CheckOutcome> {
    let mut r = rng(seed, 103);
    let mut failures = Vec::new();
    for _ in 0..300 {
        let h = super::gen::q_poly(&mut r, 2);
        let (a, b) = (super::gen::q_poly(&mut r, 3), super::gen::q_poly(&mut r, 3));
        let (f, g) = (h.mul(&a), h.mul(&b));
        if f.is_zero() && g.is_zero() {
            continue;
        }
        let d = gcd_q(&f, &g)?;
        if !divides_q(&d, &f)? || !divides_q(&d, &g)? || !divides_q(&h, &d)? {
            failures.push(format!("univariate: f = {f}, g = {g}, gcd = {d}"));
        }
    }
    let alphabet = Alphabet::heinzer_ohm(1);
    let cfg = HoConfig::new(1)?;
    for _ in 0..100 {
        let h = random_poly(&cfg, &mut r);
        let (a, b) = (random_poly(&cfg, &mut r), random_poly(&cfg, &mut r));
        let (f, g) = (h.mul(&a)?, h.mul(&b)?);
        let d = f.gcd(&g)?;
        let ok = f.exact_div(&d)?.is_some() && g.exact_div(&d)?.is_some() && d.exact_div(&h)?.is_some();
        if !ok || d.alphabet() != &alphabet {
            failures.push(format!("multivariate: f = {f}, g = {g}, gcd = {d}"));
        }
    }
    Ok(CheckOutcome::from_failures(400, failures, "300 univariate and 100 multivariate pairs"))
}

/// Random constructible set: a Boolean combination of vanishing sets.
fn random_constructible(m: &SpectrumModel, r: &mut ChaCha8Rng) -> Result<SubsetDesc> {
    let symbols = m.elements.symbols();
    let pick = |r: &mut ChaCha8Rng| -> Result<SubsetDesc> {
        let v = m.vanishing(&symbols[r.gen_range(0..symbols.len())])?;
        if r.gen_bool(0.5) {
            m.shape.complement(&v)
        } else {
            Ok(v)
        }
    };
    let mut s = pick(r)?;
    for _ in 0..r.gen_range(0..3) {
        let t = pick(r)?;
        s = match r.gen_range(0..3) {
            0 => s.union(&t)?,
            1 => s.intersection(&t)?,
            _ => s.difference(&t)?,
        };
    }
    Ok(s)
}

fn closure_laws_on(m: &SpectrumModel, y: &SubsetDesc, z: &SubsetDesc, failures: &mut Vec<String>) -> Result<()> {
    type Closure = fn(&SpectrumModel, &SubsetDesc) -> Result<SubsetDesc>;
    for (name, cl) in [("patch", patch_closure as Closure), ("zariski", zariski_closure as Closure)] {
        let cy = cl(m, y)?;
        let extensive = y.is_subset(&cy)?;
        let idempotent = same(&cl(m, &cy)?, &cy)?;
        let monotone = !y.is_subset(z)? || cy.is_subset(&cl(m, z)?)?;
        if !(extensive && idempotent && monotone) {
            failures.push(format!("{name} closure on {}: Y = {}", m.name, m.describe(y)));
        }
    }
    if !is_patch_closed(m, &zariski_closure(m, y)?)? {
        failures.push(format!("Zariski closure not patch-closed on {}: Y = {}", m.name, m.describe(y)));
    }
    Ok(())
}

pub fn closure_laws(seed: u64) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for m in all_posets(4)? {
        let subsets = poset_subsets(&m);
        for y in &subsets {
            for z in &subsets {
                if y.is_subset(z)? {
                    cases += 1;
                    closure_laws_on(&m, y, z, &mut failures)?;
                }
            }
        }
    }
    let models = [
        SpectrumModel::integers(ActivePrimes::all()),
        CatalogDomain::PolyZX.model()?,
        CatalogDomain::PolyQ.model()?,
        HoConfig::new(3)?.model()?,
    ];
    let mut r = rng(seed, 104);
    for k in 0..200 {
        let m = &models[k % models.len()];
        let y = random_constructible(m, &mut r)?;
        let z = y.union(&random_constructible(m, &mut r)?)?;
        cases += 1;
        closure_laws_on(m, &y, &z, &mut failures)?;
    }
    Ok(CheckOutcome::from_failures(cases, failures, "all comparable subset pairs on 24 posets, 200 symbolic subsets"))
}

pub fn ultrafilter_laws(seed: u64) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for m in all_posets(4)? {
        let subsets = poset_subsets(&m);
        for y in &subsets {
            for p in m.shape.finite_members(y)? {
                cases += 1;
                let u = UltrafilterDesc::Principal(p.clone());
                if ultrafilter_limit(&m, y, &u)? != p || !ultrafilter_axioms_hold(&m, y, &u, &subsets)? {
                    failures.push(format!("{}: principal at {} on {}", m.name, m.label(&p), m.describe(y)));
                }
            }
        }
    }
    let z = SpectrumModel::integers(ActivePrimes::all());
    let closed = SubsetDesc::family(false, IndexSet::all());
    let mut r = rng(seed, 105);
    let tests: Vec<SubsetDesc> = (0..12)
        .map(|k| {
            let f = finite_indices(&mut r);
            SubsetDesc::family(r.gen_bool(0.5), if k % 2 == 0 { f } else { f.complement() })
        })
        .collect();
    let u = UltrafilterDesc::nonprincipal("Z");
    cases += 1;
    if ultrafilter_limit(&z, &closed, &u)? != PointRef::Generic || !ultrafilter_axioms_hold(&z, &closed, &u, &tests)? {
        failures.push("nonprincipal class on Max(Z)".into());
    }
    Ok(CheckOutcome::from_failures(cases, failures, "every principal ultrafilter on 24 posets, the nonprincipal class on Max(Z)"))
}

pub fn fip_extension(seed: u64) -> Result<CheckOutcome> {
    let z = SpectrumModel::integers(ActivePrimes::all());
    let closed = SubsetDesc::family(false, IndexSet::all());
    let mut r = rng(seed, 106);
    let mut failures = Vec::new();
    let mut cases = 0;
    for _ in 0..10 {
        let explicit: Vec<SubsetDesc> =
            (0..3).map(|_| SubsetDesc::family(false, finite_indices(&mut r).complement())).collect();
        let u = extend_fip(&z, &closed, &explicit, Some("Z"))?;
        for s in &explicit {
            cases += 1;
            if u.contains(&z, s)? != Some(true) {
                failures.push(format!("explicit member {} missing", z.describe(s)));
            }
        }
        for _ in 0..100 {
            cases += 1;
            let s = SubsetDesc::family(false, finite_indices(&mut r).complement());
            if u.contains(&z, s.intersection(&closed).as_ref().map_err(Clone::clone)?)? != Some(true) {
                failures.push(format!("cofinite member {} missing", z.describe(&s)));
            }
        }
    }
    Ok(CheckOutcome::from_failures(cases, failures, "10 extensions, 30 explicit and 1000 cofinite members"))
}

/// A random nonzero element of the fraction field of `d`.
fn random_element(d: &CatalogDomain, r: &mut ChaCha8Rng) -> Result<FracElem> {
    Ok(match d {
        CatalogDomain::PolyQ | CatalogDomain::PolyZX => {
            let num = FracElem::from_poly(zx_poly(r, 2, 6));
            if r.gen_bool(0.3) {
                num.div(&FracElem::from_poly(zx_poly(r, 1, 3)))?
            } else {
                num
            }
        }
        _ => FracElem::rational(&rat(nonzero_int(r, 60), if r.gen_bool(0.3) { r.gen_range(1..13) } else { 1 })),
    })
}

pub fn star_closure_laws(seed: u64) -> Result<CheckOutcome> {
    let domains = [CatalogDomain::IntegersZ, CatalogDomain::localized_only([2, 3]), CatalogDomain::PolyQ, CatalogDomain::PolyZX];
    let mut r = rng(seed, 107);
    let mut failures = Vec::new();
    for d in &domains {
        for _ in 0..200 {
            let gens = (0..r.gen_range(1..=3)).map(|_| random_element(d, &mut r)).collect::<Result<Vec<_>>>()?;
            let i = FracIdealFG::new(d.clone(), gens)?;
            let v = i.v_closure()?;
            let g = &v.generators()[0];
            let extensive = i.generators().iter().map(|x| d.divides(g, x)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b);
            let idempotent = v.v_closure()?.same_principal(&v)?;
            let f = random_element(d, &mut r)?;
            let scaling = i.scale(&f)?.v_closure()?.same_principal(&v.scale(&f)?)?;
            if !(extensive && idempotent && scaling) {
                failures.push(format!("{}: I = {i}, f = {f}", d.id()));
            }
        }
    }
    Ok(CheckOutcome::from_failures(800, failures, "200 (f, I) pairs in each of Z, Z_(2,3), Q[X], Z[X]"))
}

/// `(c, f)` over `Z[X]` after removing the common content: principal iff
/// `f` reduces to a nonzero constant modulo every prime dividing `c`.
fn unit_pair_oracle(c: i64, f: &UniPolyZ) -> Result<bool> {
    let content = f.coeffs().iter().fold(big(c), |acc, x| num_integer::Integer::gcd(&acc, x));
    let c = big(c) / &content;
    let f = UniPolyZ::new(f.coeffs().iter().map(|x| x / &content).collect());
    for (p, _) in factorize(&c) {
        let p: u64 = num_traits::ToPrimitive::to_u64(&p).ok_or_else(|| Error::Precondition("prime too large".into()))?;
        if f.mod_p(p).degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn t_ideal_principal(seed: u64) -> Result<CheckOutcome> {
    let mut r = rng(seed, 108);
    let mut failures = Vec::new();
    for k in 0..500 {
        if k % 5 == 0 {
            let gens = (0..r.gen_range(1..=3)).map(|_| FracElem::integer(nonzero_int(&mut r, 200))).collect();
            let i = FracIdealFG::new(CatalogDomain::IntegersZ, gens)?;
            if !i.is_t_ideal()? {
                failures.push(format!("Z: {i} is principal but not reported a t-ideal"));
            }
            continue;
        }
        let c = r.gen_range(2..40);
        let f = zx_poly(&mut r, 2, 10);
        let i = FracIdealFG::new(CatalogDomain::PolyZX, vec![FracElem::integer(c), FracElem::from_poly(f.clone())])?;
        if i.is_t_ideal()? != unit_pair_oracle(c, &f)? {
            failures.push(format!("Z[X]: {i}"));
        }
    }
    Ok(CheckOutcome::from_failures(500, failures, "400 pairs (c, f) over Z[X], 100 ideals over Z"))
}

pub fn essential_in_t_spec(seed: u64) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for id in catalog_ids().into_iter().filter(|id| !id.starts_with("HO:")) {
        let d = CatalogDomain::parse_id(id)?;
        let mut primes = tabulated_primes(&d);
        primes.extend((0..200).filter_map(|j| indexed_prime(&d, j)));
        for p in primes {
            cases += 1;
            if p.essential_at(&d)? && !p.is_t_prime(&d)? {
                failures.push(format!("{p} over {id} is essential but not a t-prime"));
            }
        }
    }
    let mut r = rng(seed, 109);
    for d in [CatalogDomain::localized_only([2, 3]), CatalogDomain::localized_inverting([2]), CatalogDomain::localized_only([5])] {
        for _ in 0..20 {
            cases += 1;
            let i = FracIdealFG::principal(d.clone(), FracElem::integer(nonzero_int(&mut r, 500)))?;
            let c = contraction_check(&i, 60)?;
            if !c.contraction_is_t_ideal || !c.mismatches.is_empty() {
                failures.push(format!("{i} over {}: contraction {}", d.id(), c.contraction));
            }
        }
    }
    Ok(CheckOutcome::from_failures(cases, failures, "tabulated and 200 indexed primes per catalog domain, 60 contractions"))
}

pub fn pvmd_soundness(_seed: u64) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for n in 1..=5 {
        cases += 1;
        let d = descriptor_for_id(&format!("HO:{n}"))?;
        let v = pvmd_check_closure(&d)?;
        let Some(p) = v.certificate.offending_point.clone() else {
            failures.push(format!("HO:{n}: no offending point"));
            continue;
        };
        if !patch_closure(&d.model, &d.y)?.contains(&p)? || !d.t_spec.contains(&p)? || d.essential.contains(&p)? {
            failures.push(format!("HO:{n}: offending point {} is not a sound witness", d.model.label(&p)));
        }
    }
    for id in catalog_ids() {
        let d = descriptor_for_id(id)?;
        if !d.flags.prufer {
            continue;
        }
        for c in Criterion::CLOSURE_FAMILY {
            cases += 1;
            if check_or_unknown(&d, c).is_pvmd == Some(false) {
                failures.push(format!("Prüfer {id} rejected by {c}"));
            }
        }
    }
    for top in ["Q", "Z", "Zloc:2,3", "QX", "ZX"] {
        let top = descriptor_for_id(top)?;
        for rank in 1..=4 {
            cases += 1;
            let v = ValuationDesc { rank, residue_field: top.fraction_field.clone() };
            let (built, verdict) = pullback_verdict(&v, &top)?;
            if verdict.is_pvmd != Some(true) || pvmd_check_closure(&built)?.is_pvmd != Some(true) {
                failures.push(format!("pullback {}", built.id));
            }
        }
    }
    Ok(CheckOutcome::from_failures(cases, failures, "5 negative certificates, Prüfer catalog entries, 20 pullbacks"))
}

pub fn ho_laws(seed: u64) -> Result<CheckOutcome> {
    let cfg = HoConfig::new(6)?;
    let n = cfg.level();
    let mut r = rng(seed, 110);
    let mut failures = Vec::new();
    for _ in 0..500 {
        let i = r.gen_range(0..n);
        let f = HoElement::poly(random_poly(&cfg, &mut r).set_zero(&[i]));
        if f.valuation(i) != f.order() {
            failures.push(format!("v_{i}({f}) = {} but the (T,U)-order is {}", f.valuation(i), f.order()));
        }
    }
    let mut mixed = core_samples(&cfg, &mut r, 150)?;
    for _ in 0..350 {
        let num = random_poly(&cfg, &mut r);
        let x = if r.gen_bool(0.5) {
            HoElement::poly(num)
        } else {
            let den = random_poly(&cfg, &mut r);
            if den.is_zero() {
                continue;
            }
            HoElement::new(num, den)?
        };
        mixed.push(x);
    }
    for x in &mixed {
        if ho_in_core(x) != (ho_in_d(x) && x.order().at_least(1)) {
            failures.push(format!("core membership of {x}"));
        }
    }
    let fixed: Vec<HoElement> =
        ["T", "U", "T + X_0*U", "T/(X_2 + T)", "U*X_1", "T^2 + U^2", "T*U/(X_3 + U)", "X_0*T + X_1*U"].iter().map(|s| cfg.parse(s)).collect::<Result<_>>()?;
    let mut pairs = 0;
    for (a, f) in fixed.iter().enumerate() {
        for g in &fixed[a..] {
            let top = f.max_x_index().into_iter().chain(g.max_x_index()).max().unwrap_or(0);
            if top + 1 >= n {
                continue;
            }
            pairs += 1;
            let mut found = false;
            for i in 0..n {
                if ho_in_mi(f, i)? && ho_in_mi(g, i)? {
                    found = true;
                    break;
                }
            }
            if !found {
                failures.push(format!("no materialized m_i holds both {f} and {g}"));
            }
        }
    }
    Ok(CheckOutcome::from_failures(500 + mixed.len() + pairs, failures, format!("500 tail valuations, {} core checks, {pairs} FIP pairs", mixed.len())))
}

/// A member of `Int(D)` for `D = Z` or `Z_(2,3)`.
fn int_member(d: &IntDomain, r: &mut ChaCha8Rng) -> IntPoly {
    let deg = r.gen_range(0..=4);
    let f = int_z_member(r, deg);
    let f = match d {
        IntDomain::Localized(a) if *a != ActivePrimes::all() => f.scale(&Rational::new(One::one(), big([1, 5, 7, 35][r.gen_range(0..4)]))),
        _ => f,
    };
    IntPoly::from_q(&f)
}

pub fn int_ring_laws(seed: u64) -> Result<CheckOutcome> {
    let domains = [IntDomain::integers(), IntDomain::parse_id("Zloc:2,3")?];
    let mut r = rng(seed, 111);
    let mut failures = Vec::new();
    for k in 0..500 {
        let d = &domains[k % 2];
        let (f, g) = (int_member(d, &mut r), int_member(d, &mut r));
        for (op, h) in [("+", f.add(&g)), ("−", f.sub(&g)), ("×", f.mul(&g))] {
            if !int_membership(&h, d)? {
                failures.push(format!("{} over {}: ({f}) {op} ({g})", h, d.id()));
            }
        }
    }
    let qx = IntDomain::PolyQ;
    for k in 0..200 {
        let (d, f) = match k % 3 {
            0 => (domains[0].clone(), IntPoly::from_q(&zx_poly(&mut r, 5, 30).to_q())),
            1 => {
                let dens = [1, 5, 7, 25];
                let cs = (0..=r.gen_range(0..5)).map(|_| rat(super::gen::small_int(&mut r, 20), dens[r.gen_range(0..4)])).collect();
                (domains[1].clone(), IntPoly::from_q(&UniPolyQ::new(cs)))
            }
            _ => {
                let cs = (0..=r.gen_range(0..4)).map(|_| FracElem::from_poly(zx_poly(&mut r, 2, 9)).div(&FracElem::integer(r.gen_range(1..4)))).collect::<Result<Vec<_>>>()?;
                (qx.clone(), IntPoly::new(cs))
            }
        };
        if !int_membership(&f, &d)? {
            failures.push(format!("{f} has coefficients in {} but is not in Int", d.id()));
        }
    }
    Ok(CheckOutcome::from_failures(700, failures, "500 member pairs, 200 polynomials with coefficients in D"))
}

pub fn int_soundness(seed: u64) -> Result<CheckOutcome> {
    let domains = [IntDomain::integers(), IntDomain::parse_id("Zloc:2,3")?];
    let mut r = rng(seed, 112);
    let mut failures = Vec::new();
    let mut members = 0;
    while members < 200 {
        let d = &domains[members % 2];
        // Random candidates; only flagged members are evaluated.
        let f = if r.gen_bool(0.5) { int_member(d, &mut r) } else { IntPoly::from_q(&super::gen::q_poly(&mut r, 4)) };
        if !int_membership(&f, d)? {
            continue;
        }
        members += 1;
        let q = f.to_q().expect("rational coefficients");
        let IntDomain::Localized(active) = d else { unreachable!("localizations of Z") };
        for _ in 0..200 {
            let den = if *active == ActivePrimes::all() { 1 } else { [1, 5, 7, 11, 35][r.gen_range(0..5)] };
            let a = rat(r.gen_range(-1_000_000..=1_000_000), den);
            let value = q.eval(&a);
            if !active.active_part(value.denom()).is_one() {
                failures.push(format!("{f} at {a} over {} gives {value}", d.id()));
            }
        }
    }
    Ok(CheckOutcome::from_failures(40_000, failures, "200 members at 200 points each"))
}

pub fn precision_monotonicity(seed: u64) -> Result<CheckOutcome> {
    let mut r = rng(seed, 113);
    let primes = [2u64, 3, 5, 7];
    let mut failures = Vec::new();
    let mut resolved = 0;
    for _ in 0..500 {
        let f = int_z_member(&mut r, 4);
        let p = primes[r.gen_range(0..primes.len())];
        let k = r.gen_range(1..=4u32);
        let a = PAdicApprox::new(p, k, r.gen_range(0..p.pow(k) as i64))?;
        let b = a.refine(r.gen_range(0..p));
        let (va, vb) = (mpalpha_membership(&f, &a)?, mpalpha_membership(&f, &b)?);
        if va == MpMembership::NeedsPrecision && vb != MpMembership::NeedsPrecision {
            resolved += 1;
        }
        if va != MpMembership::NeedsPrecision && va != vb {
            failures.push(format!("{f} at {} mod {p}^{k}: {va} then {vb}", a.residue()));
        }
    }
    Ok(CheckOutcome::from_failures(500, failures, format!("500 refinements, {resolved} undecided verdicts resolved")))
}

pub fn lambda_laws(_seed: u64) -> Result<CheckOutcome> {
    let mut failures = Vec::new();
    let mut cases = 0;
    for id in ["Z", "Zloc:2,3", "Zloc:5", "QX"] {
        let c = lambda_classify(&IntDomain::parse_id(id)?)?;
        for p in &c.sampled {
            cases += 1;
            if !is_prime(p.residue_size) || p.prime != format!("({})", p.residue_size) {
                failures.push(format!("{id}: residue field of {} has {} elements", p.prime, p.residue_size));
            }
        }
    }
    cases += 1;
    if !lemma36_instance(&IntDomain::parse_id("Zloc:2,3")?)?.equal {
        failures.push("the tabulated primes over Λ₀ of Z_(2,3) differ".into());
    }
    Ok(CheckOutcome::from_failures(cases, failures, "finite residue fields on sampled Λ₀ points, one prime correspondence"))
}
