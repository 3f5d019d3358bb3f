use serde::Serialize;

use crate::spectra::{is_patch_closed, IndexSet, Shape, SpectrumModel, SubsetDesc};
use crate::star::{CatalogDomain, PrimeDesc};
use crate::{Error, Result};

/// Where a descriptor's classification rules come from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum DomainKind {
    /// Rules are the catalog's per-prime rules; checked on sampled points.
    Catalog(CatalogDomain),
    /// The Heinzer–Ohm domain truncated at the given number of variables.
    HeinzerOhm { level: usize },
    /// Sets declared by the caller.
    Abstract,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Flags {
    pub essential_domain: bool,
    pub t_finite_character: bool,
    pub prufer: bool,
    pub krull_type: bool,
}

/// A domain with its spectrum model, an essential representation `Y`, and
/// the sets `E(D)` and `t-Spec(D)`.
///
/// Invariants: `Y ⊆ E(D) ⊆ t-Spec(D)`, `t-Spec(D)` is patch-closed, the
/// Prüfer flag forces `E(D) = t-Spec(D) = Spec(D)`, and Krull type implies
/// essential with t-finite character.
#[derive(Debug, Clone)]
pub struct DomainDescriptor {
    pub id: String,
    pub kind: DomainKind,
    pub fraction_field: String,
    pub model: SpectrumModel,
    pub y: SubsetDesc,
    pub essential: SubsetDesc,
    pub t_spec: SubsetDesc,
    pub flags: Flags,
}

/// Points checked against catalog rules when a descriptor is built.
const RULE_SAMPLE: usize = 32;

impl DomainDescriptor {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        id: impl Into<String>,
        kind: DomainKind,
        fraction_field: impl Into<String>,
        model: SpectrumModel,
        y: SubsetDesc,
        essential: SubsetDesc,
        t_spec: SubsetDesc,
        flags: Flags,
    ) -> Result<Self> {
        let d = DomainDescriptor {
            id: id.into(),
            kind,
            fraction_field: fraction_field.into(),
            model,
            y,
            essential,
            t_spec,
            flags,
        };
        d.validate()?;
        Ok(d)
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: String| Err(Error::InvalidDescriptor(format!("{}: {why}", self.id)));
        for s in [&self.y, &self.essential, &self.t_spec] {
            self.model.shape.validate(s)?;
        }
        if self.y.is_empty() {
            return bad("the representation Y is empty".into());
        }
        if !self.y.is_subset(&self.essential)? {
            return bad("Y contains a point whose localization is not a valuation domain".into());
        }
        if !self.essential.is_subset(&self.t_spec)? {
            return bad("E(D) is not contained in t-Spec(D)".into());
        }
        if !is_patch_closed(&self.model, &self.t_spec)? {
            return bad("t-Spec(D) is not patch-closed".into());
        }
        let full = self.model.full();
        if self.flags.prufer && (self.essential != full || self.t_spec != full) {
            return bad("a Prüfer domain has E(D) = t-Spec(D) = Spec(D)".into());
        }
        if self.flags.krull_type && !(self.flags.essential_domain && self.flags.t_finite_character) {
            return bad("Krull type requires an essential domain with t-finite character".into());
        }
        if let DomainKind::Catalog(dom) = &self.kind {
            for p in self.model.shape.points(RULE_SAMPLE) {
                let prime = PrimeDesc::at(dom, &p)?;
                let label = self.model.label(&p);
                if prime.essential_at(dom)? != self.essential.contains(&p)? {
                    return bad(format!("E(D) disagrees with the catalog rule at {label}"));
                }
                if prime.is_t_prime(dom)? != self.t_spec.contains(&p)? {
                    return bad(format!("t-Spec(D) disagrees with the catalog rule at {label}"));
                }
            }
        }
        Ok(())
    }

    pub fn describe(&self, s: &SubsetDesc) -> String {
        self.model.describe(s)
    }

    pub fn summary(&self) -> DescriptorSummary {
        DescriptorSummary {
            id: self.id.clone(),
            fraction_field: self.fraction_field.clone(),
            y: self.describe(&self.y),
            essential: self.describe(&self.essential),
            t_spec: self.describe(&self.t_spec),
            flags: self.flags,
        }
    }
}

/// Text view of a descriptor for listings.
#[derive(Debug, Clone, Serialize)]
pub struct DescriptorSummary {
    pub id: String,
    pub fraction_field: String,
    pub y: String,
    pub essential: String,
    pub t_spec: String,
    pub flags: Flags,
}

pub(crate) fn fraction_field_of(d: &CatalogDomain) -> String {
    match d {
        CatalogDomain::Field | CatalogDomain::IntegersZ | CatalogDomain::LocalizedZ(_) => "Q".into(),
        CatalogDomain::PolyQ | CatalogDomain::PolyZX | CatalogDomain::ZPlusXQX => "Q(X)".into(),
        CatalogDomain::GaussianZi => "Q(i)".into(),
        CatalogDomain::PullbackVD { rank, top } => format!("Frac(V{rank} over {})", fraction_field_of(top)),
    }
}

/// Descriptor of a catalog domain. Pullbacks go through
/// [`super::pullback_construct`].
pub fn catalog_descriptor(d: &CatalogDomain) -> Result<DomainDescriptor> {
    if let CatalogDomain::PullbackVD { rank, top } = d {
        let top = catalog_descriptor(top)?;
        let v = super::ValuationDesc { rank: *rank, residue_field: top.fraction_field.clone() };
        return super::pullback_construct(&v, &top);
    }
    let model = d.model()?;
    let full = model.full();
    let (y, t_spec) = match &model.shape {
        Shape::Poset(p) => {
            let ids: Vec<String> = p.ids().iter().filter(|id| *id != "(0)").cloned().collect();
            let y = if ids.is_empty() { SubsetDesc::poset(["(0)"]) } else { SubsetDesc::poset(ids) };
            (y, full.clone())
        }
        Shape::Family(_) => {
            // Caps are the height-two maximals of Z[X]; they are not t-primes.
            (SubsetDesc::family(false, IndexSet::all()), SubsetDesc::family(true, IndexSet::all()))
        }
        _ => return Err(Error::UnsupportedDomain(d.id())),
    };
    let flags = Flags { essential_domain: true, t_finite_character: true, prufer: d.is_prufer(), krull_type: true };
    DomainDescriptor::new(d.id(), DomainKind::Catalog(d.clone()), fraction_field_of(d), model, y, t_spec.clone(), t_spec, flags)
}

/// Descriptor by identifier: catalog ids and `HO:<level>`.
pub fn descriptor_for_id(id: &str) -> Result<DomainDescriptor> {
    if let Some(level) = id.trim().strip_prefix("HO:") {
        let n: usize = level.parse().map_err(|_| Error::Parse(format!("bad level {level}")))?;
        return crate::ho::HoConfig::new(n)?.descriptor();
    }
    catalog_descriptor(&CatalogDomain::parse_id(id)?)
}

/// Identifiers of every descriptor the catalog can build.
pub fn catalog_ids() -> Vec<&'static str> {
    vec![
        "Q",
        "Z",
        "Zloc:2,3",
        "Zloc:5",
        "Zinv:2",
        "Zinv:2,3",
        "QX",
        "ZX",
        "Zi",
        "pullback:1:Q",
        "pullback:1:Z",
        "pullback:2:Z",
        "pullback:1:Zloc:2,3",
        "pullback:1:QX",
        "pullback:2:ZX",
        "HO:2",
        "HO:4",
        "HO:8",
    ]
}
