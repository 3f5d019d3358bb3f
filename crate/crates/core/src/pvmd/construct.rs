use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::criteria::pvmd_check_closure;
use super::descriptor::{catalog_descriptor, DomainDescriptor, DomainKind, Flags};
use super::verdict::{first_point, Certificate, Criterion, Verdict};
use crate::arith::primes::ActivePrimes;
use crate::spectra::{
    generization, is_patch_closed, locally_finite_union, patch_closure, ConstructibleBasicSet, MemberFamily, PointMap,
    PointRef, Shape, SpectralMap, SpectrumModel, SubsetDesc,
};
use crate::star::{glue_top_shape, glue_top_subset, CatalogDomain, PrimeDesc};
use crate::{Error, Result};

/// A valuation domain given by its rank and residue field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValuationDesc {
    pub rank: usize,
    pub residue_field: String,
}

fn require_pvmd(d: &DomainDescriptor, role: &str) -> Result<Verdict> {
    let v = pvmd_check_closure(d)?;
    if v.is_pvmd != Some(true) {
        return Err(Error::Precondition(format!("{role} {} is not a verified PvMD", d.id)));
    }
    Ok(v)
}

/// `R = π⁻¹(D)` for `π : V → k` and a PvMD `D` with fraction field `k`.
///
/// `Spec(R)` is the ordinal sum of `Spec(V) \ {M_V}` under `Spec(D)`, with
/// `π⁻¹((0)) = M_V`. The representation is `{π⁻¹(P) : P ∈ t-Spec(D)}`, each
/// a t-prime with `R_{π⁻¹(P)} = π⁻¹(D_P)`.
pub fn pullback_construct(v: &ValuationDesc, top: &DomainDescriptor) -> Result<DomainDescriptor> {
    if v.rank == 0 {
        return Err(Error::Precondition("the valuation domain needs positive rank".into()));
    }
    if v.residue_field != top.fraction_field {
        return Err(Error::Precondition(format!(
            "residue field {} differs from the fraction field {} of {}",
            v.residue_field, top.fraction_field, top.id
        )));
    }
    require_pvmd(top, "top domain")?;
    let bottom: Vec<String> = (0..v.rank).map(|k| format!("P{k}")).collect();
    let glued = glue_top_shape(&top.model.shape);
    let shape = Shape::OrdinalSum { bottom: bottom.clone(), top: Box::new(glued.clone()) };
    let id = match &top.kind {
        DomainKind::Catalog(c) => CatalogDomain::pullback(v.rank, c.clone()).id(),
        _ => format!("pullback:{}:{}", v.rank, top.id),
    };
    let model = SpectrumModel::bare(id.clone(), shape);
    let embed = SpectralMap::new(SpectrumModel::bare(top.id.clone(), glued), model.clone(), PointMap::TopEmbedding)?;
    let y = embed.image_patch_closed(&glue_top_subset(&top.t_spec))?;
    let all_bottom = SubsetDesc::Ordinal { bottom: bottom.into_iter().collect(), top: Box::new(top.model.shape.empty()) };
    let essential = all_bottom.union(&embed.image(&glue_top_subset(&top.essential))?)?;
    let t_spec = all_bottom.union(&y)?;
    let tfc = top.flags.t_finite_character && top.model.shape.is_finite();
    let flags = Flags { essential_domain: true, t_finite_character: tfc, prufer: top.flags.prufer, krull_type: tfc };
    let kind = match &top.kind {
        DomainKind::Catalog(c) => DomainKind::Catalog(CatalogDomain::pullback(v.rank, c.clone())),
        _ => DomainKind::Abstract,
    };
    DomainDescriptor::new(id, kind, format!("Frac(V{} over {})", v.rank, v.residue_field), model, y, essential, t_spec, flags)
}

/// The pullback together with its closure verdict.
pub fn pullback_verdict(v: &ValuationDesc, top: &DomainDescriptor) -> Result<(DomainDescriptor, Verdict)> {
    let r = pullback_construct(v, top)?;
    let mut verdict = pvmd_check_closure(&r)?;
    verdict.criterion = Criterion::Ex28;
    verdict.certificate.trace.insert(0, "Y_R = π⁻¹(t-Spec(D)) is the image of a patch-closed set".into());
    Ok((r, verdict))
}

/// `B` is a PvMD when `A` is one and the centers in `A` of the essential
/// representation of `B` stay in `t-Spec(A)` after patch closure.
pub fn transfer_check(a: &DomainDescriptor, b: &DomainDescriptor, centers: &SpectralMap) -> Result<Verdict> {
    require_pvmd(a, "base domain")?;
    if !b.flags.essential_domain {
        return Err(Error::Precondition(format!("{} is not essential", b.id)));
    }
    if centers.source.shape != b.model.shape || centers.target.shape != a.model.shape {
        return Err(Error::InvalidMap("the center map must run from Spec(B) to Spec(A)".into()));
    }
    let image = centers.image(&b.y)?;
    let closure = patch_closure(&a.model, &image)?;
    let outside = closure.difference(&a.t_spec)?;
    if let Some(p) = first_point(&a.model.shape, &outside) {
        return Err(Error::CenterNotTPrime(a.model.label(&p)));
    }
    let trace = vec![
        format!("ι*(Y_B) = {}", a.describe(&image)),
        format!("Cl^c(ι*(Y_B)) = {} ⊆ t-Spec(A)", a.describe(&closure)),
        "each A_(P ∩ A) is a valuation domain inside B_P, so B_P is one".into(),
    ];
    Ok(Verdict {
        is_pvmd: Some(true),
        criterion: Criterion::Cor211,
        certificate: Certificate { closure: Some(a.describe(&closure)), trace, ..Default::default() },
    })
}

/// `B = ∩{A_P : P ∈ X}` for t-primes `X` of a PvMD `A`, checked by transfer
/// with `L = K`.
///
/// Localizations of `Z` come out as catalog domains; otherwise `Spec(B)` is
/// modeled by its image in `Spec(A)`: the generization of `X`.
pub fn localization_intersection(a: &DomainDescriptor, x: &SubsetDesc) -> Result<(DomainDescriptor, Verdict)> {
    a.model.shape.validate(x)?;
    if x.is_empty() {
        return Err(Error::Precondition("X is empty".into()));
    }
    if let Some(p) = first_point(&a.model.shape, &x.difference(&a.t_spec)?) {
        return Err(Error::CenterNotTPrime(a.model.label(&p)));
    }
    let (b, centers) = match integer_localization(a, x)? {
        Some(found) => found,
        None => {
            let gen = generization(&a.model, x)?;
            let flags = Flags { essential_domain: true, t_finite_character: a.flags.t_finite_character, prufer: a.flags.prufer, krull_type: a.flags.krull_type };
            let b = DomainDescriptor::new(
                format!("{} localized at {}", a.id, a.describe(x)),
                DomainKind::Abstract,
                a.fraction_field.clone(),
                a.model.clone(),
                x.clone(),
                gen.clone(),
                gen,
                Flags { prufer: false, ..flags },
            )?;
            let map = SpectralMap::new(a.model.clone(), a.model.clone(), PointMap::Identity)?;
            (b, map)
        }
    };
    let mut verdict = transfer_check(a, &b, &centers)?;
    verdict.certificate.trace.push("transfer with L = K".into());
    Ok((b, verdict))
}

/// `∩ Z_(p)` over finitely many primes, or `Q` when only `(0)` is listed.
fn integer_localization(a: &DomainDescriptor, x: &SubsetDesc) -> Result<Option<(DomainDescriptor, SpectralMap)>> {
    let DomainKind::Catalog(dom @ (CatalogDomain::IntegersZ | CatalogDomain::LocalizedZ(_))) = &a.kind else {
        return Ok(None);
    };
    if !x.is_finite() {
        return Ok(None);
    }
    let mut primes = BTreeSet::new();
    for p in a.model.shape.finite_members(x)? {
        if let PrimeDesc::Rational(q) = PrimeDesc::at(dom, &p)? {
            primes.insert(q);
        }
    }
    let target = if primes.is_empty() {
        CatalogDomain::Field
    } else {
        CatalogDomain::LocalizedZ(ActivePrimes::only(primes))
    };
    let b = catalog_descriptor(&target)?;
    let mut table = BTreeMap::new();
    for p in b.model.shape.points(0) {
        table.insert(p.clone(), PrimeDesc::at(&target, &p)?.point(dom)?);
    }
    let map = SpectralMap::new(b.model.clone(), a.model.clone(), PointMap::Explicit(table))?;
    Ok(Some((b, map)))
}

/// One member `D_i` of an intersection with its contraction map to `D`.
#[derive(Debug, Clone)]
pub struct IntersectionPart {
    pub descriptor: DomainDescriptor,
    pub to_d: SpectralMap,
}

pub enum IntersectionParts<'a> {
    Finite(Vec<IntersectionPart>),
    /// Part `j` has center set `{generic, j}` in the family `family` of `D`;
    /// parts are materialized on the first `sample` indices.
    Indexed { family: String, part: &'a dyn Fn(usize) -> Result<IntersectionPart>, sample: usize },
}

/// Local finiteness data at each point of `Spec(D)`.
pub enum Finiteness<'a> {
    /// `(f, 𝔞)` with finitely many parts having a t-prime in `D(f) ∩ V(𝔞)`.
    Neighborhood(&'a dyn Fn(&PointRef) -> Option<ConstructibleBasicSet>),
    /// Only `f`, with `𝔞 = (0)`.
    ElementOnly(&'a dyn Fn(&PointRef) -> Option<String>),
    /// Only `𝔞`, with `f = 1`.
    IdealOnly(&'a dyn Fn(&PointRef) -> Option<Vec<String>>),
}

const WITNESS_SAMPLE: usize = 48;

/// `D = ∩ D_i` of PvMDs, essential with respect to the parts, is a PvMD
/// when the center sets form a locally finite family.
pub fn intersection_pvmd_check(d: &DomainDescriptor, parts: &IntersectionParts, finiteness: Option<&Finiteness>) -> Result<Verdict> {
    let mut trace = Vec::new();
    let check_part = |j: usize, part: &IntersectionPart| -> Result<SubsetDesc> {
        require_pvmd(&part.descriptor, &format!("part {j}"))?;
        if part.to_d.target.shape != d.model.shape || part.to_d.source.shape != part.descriptor.model.shape {
            return Err(Error::InvalidMap(format!("part {j}: contraction map does not run into Spec(D)")));
        }
        part.to_d.image_patch_closed(&part.descriptor.t_spec)
    };
    let (members, criterion) = match parts {
        IntersectionParts::Finite(list) => {
            if list.is_empty() {
                return Err(Error::Precondition("no parts".into()));
            }
            let mut sets = Vec::new();
            for (j, part) in list.iter().enumerate() {
                let c = check_part(j, part)?;
                trace.push(format!("centers of {}: {}", part.descriptor.id, d.describe(&c)));
                sets.push(c);
            }
            (MemberFamily::Explicit(sets), Criterion::Cor215)
        }
        IntersectionParts::Indexed { family, part, sample } => {
            let path = d.model.shape.family_path(family).ok_or_else(|| Error::UnknownPoint(format!("family {family}")))?;
            for j in 0..*sample {
                let p = part(j)?;
                let c = check_part(j, &p)?;
                let expected = d.model.shape.subset_of(&[
                    crate::spectra::wrap_point(&path, PointRef::Generic),
                    crate::spectra::wrap_point(&path, PointRef::Index(j)),
                ])?;
                if c != expected {
                    return Err(Error::WitnessFailed(format!("part {j} does not have the declared center set")));
                }
            }
            trace.push(format!("parts 0..{sample} verified PvMD with center sets {{generic, j}}"));
            (MemberFamily::PerIndex { family: family.clone(), with_generic: true }, Criterion::Thm214)
        }
    };
    let whole = |_: &PointRef| Some(ConstructibleBasicSet::whole());
    let neighborhood: Box<dyn Fn(&PointRef) -> Option<ConstructibleBasicSet> + '_> = match finiteness {
        None => {
            if matches!(parts, IntersectionParts::Indexed { .. }) {
                return Err(Error::Precondition("an infinite family needs finiteness data".into()));
            }
            trace.push("finitely many parts: the whole space meets finitely many center sets".into());
            Box::new(whole)
        }
        Some(Finiteness::Neighborhood(w)) => Box::new(|p: &PointRef| w(p)),
        Some(Finiteness::ElementOnly(w)) => {
            trace.push("condition read as f ∉ q, matching the general neighborhood form; the stated f ∉ q ∩ D is equivalent for f ∈ D".into());
            Box::new(|p: &PointRef| w(p).map(|f| ConstructibleBasicSet::new(f, ["0"])))
        }
        Some(Finiteness::IdealOnly(w)) => Box::new(|p: &PointRef| w(p).map(|a| ConstructibleBasicSet::new("1", a))),
    };
    let cert = locally_finite_union(&d.model, &members, &*neighborhood, WITNESS_SAMPLE)?;
    trace.push(format!("union of center sets = {}, patch-closed", d.describe(&cert.union)));
    if !cert.failing_inside_union.is_empty() {
        trace.push(format!("no finite witness inside the union at {}", cert.failing_inside_union.join(", ")));
    }
    if !cert.union.is_subset(&d.essential)? {
        let p = first_point(&d.model.shape, &cert.union.difference(&d.essential)?).expect("nonempty");
        return Err(Error::WitnessFailed(format!("D is not essential at the center {}", d.model.label(&p))));
    }
    debug_assert!(is_patch_closed(&d.model, &cert.union)?);
    trace.push("union ⊆ E(D): closed essential representation".into());
    Ok(Verdict {
        is_pvmd: Some(true),
        criterion,
        certificate: Certificate { closure: Some(d.describe(&cert.union)), locally_finite: Some(cert), trace, ..Default::default() },
    })
}
