use serde::Serialize;

use super::descriptor::DomainDescriptor;
use super::verdict::{first_point, Certificate, Criterion, Verdict};
use crate::spectra::{generization, is_quasi_compact, patch_closure, PointRef, Shape, SubsetDesc};
use crate::{Error, Result};

/// Compares a closure with `E(D)`; a point outside is a t-prime (the closure
/// stays in the patch-closed `t-Spec(D)`) with non-valuation localization.
fn against_essential(
    d: &DomainDescriptor,
    criterion: Criterion,
    closure: SubsetDesc,
    mut trace: Vec<String>,
) -> Result<Verdict> {
    let bad = closure.difference(&d.essential)?;
    let closure_text = d.describe(&closure);
    if bad.is_empty() {
        trace.push("closure ⊆ E(D)".into());
        return Ok(Verdict {
            is_pvmd: Some(true),
            criterion,
            certificate: Certificate { closure: Some(closure_text), trace, ..Default::default() },
        });
    }
    let p = first_point(&d.model.shape, &bad).expect("nonempty difference");
    let label = d.model.label(&p);
    if !closure.is_subset(&d.t_spec)? {
        return Err(Error::InvalidDescriptor(format!("{}: closure leaves t-Spec(D)", d.id)));
    }
    trace.push(format!("{label} lies in the closure, inside t-Spec(D), and D_P is not a valuation domain"));
    Ok(Verdict {
        is_pvmd: Some(false),
        criterion,
        certificate: Certificate {
            closure: Some(closure_text),
            offending: Some(label),
            offending_point: Some(p),
            trace,
            ..Default::default()
        },
    })
}

/// PvMD iff the patch closure of the essential representation stays in `E(D)`.
pub fn pvmd_check_closure(d: &DomainDescriptor) -> Result<Verdict> {
    let closure = patch_closure(&d.model, &d.y)?;
    let trace = vec![format!("Y = {}", d.describe(&d.y)), format!("Cl^c(Y) = {}", d.describe(&closure))];
    against_essential(d, Criterion::Thm24, closure, trace)
}

/// PvMD iff essential and `E(D)` is patch-closed.
pub fn pvmd_check_essential_closed(d: &DomainDescriptor) -> Result<Verdict> {
    if !d.flags.essential_domain {
        return Ok(Verdict {
            is_pvmd: Some(false),
            criterion: Criterion::Cor26,
            certificate: Certificate { trace: vec!["D is not essential".into()], ..Default::default() },
        });
    }
    let closure = patch_closure(&d.model, &d.essential)?;
    let trace = vec![format!("E(D) = {}", d.describe(&d.essential)), format!("Cl^c(E(D)) = {}", d.describe(&closure))];
    against_essential(d, Criterion::Cor26, closure, trace)
}

/// Zariski quasi-compactness of `Y` plus essentiality of its generization.
/// When the declared `Y` fails, `t-Spec(D)` is tried: it is a compact
/// representation whenever `D` is a PvMD.
pub fn pvmd_check_compact(d: &DomainDescriptor) -> Result<Verdict> {
    if !matches!(d.model.shape, Shape::Poset(_) | Shape::Family(_)) {
        return Err(Error::UnsupportedModel(format!("{}: compactness is decided on finite posets and single families", d.id)));
    }
    let mut trace = Vec::new();
    for (name, y) in [("Y", &d.y), ("t-Spec(D)", &d.t_spec)] {
        let cert = is_quasi_compact(&d.model, y)?;
        let gen = generization(&d.model, y)?;
        trace.push(format!("{name} quasi-compact: {} ({})", cert.compact, cert.reason));
        if !cert.cover.is_empty() {
            trace.push(format!("cover by D(f) for f in {{{}}}", cert.cover.join(", ")));
        }
        trace.push(format!("{name}^gen = {}", d.describe(&gen)));
        if cert.compact && gen.is_subset(&d.essential)? {
            trace.push(format!("{name}^gen ⊆ E(D)"));
            return Ok(Verdict {
                is_pvmd: Some(true),
                criterion: Criterion::Cor27,
                certificate: Certificate { closure: Some(d.describe(&gen)), trace, ..Default::default() },
            });
        }
        if name == "t-Spec(D)" && cert.compact {
            // t-Spec(D) ⊆ E(D) would make its generization essential too.
            let bad = gen.difference(&d.essential)?;
            let p = first_point(&d.model.shape, &bad).expect("nonempty difference");
            trace.push(format!("{} lies below a t-prime and D_P is not a valuation domain", d.model.label(&p)));
            return Ok(Verdict {
                is_pvmd: Some(false),
                criterion: Criterion::Cor27,
                certificate: Certificate {
                    closure: Some(d.describe(&gen)),
                    offending: Some(d.model.label(&p)),
                    offending_point: Some(p),
                    trace,
                    ..Default::default()
                },
            });
        }
    }
    Ok(Verdict { is_pvmd: None, criterion: Criterion::Cor27, certificate: Certificate { trace, ..Default::default() } })
}

/// Griffin's criterion by way of the finite-character closure: a finite `Y`
/// is closed, an infinite one in a finite-character family gains exactly the
/// generic point.
pub fn griffin_check(d: &DomainDescriptor) -> Result<Verdict> {
    let mut trace = Vec::new();
    let closure = if d.y.is_finite() {
        trace.push("Y is finite, hence patch-closed".into());
        d.y.clone()
    } else {
        match &d.model.shape {
            Shape::Family(f) if f.finite_character => {
                let lemma = d.y.union(&d.model.shape.singleton(&PointRef::Generic)?)?;
                let computed = patch_closure(&d.model, &d.y)?;
                if lemma != computed {
                    return Err(Error::InvalidDescriptor(format!("{}: closure is not Y plus the generic point", d.id)));
                }
                trace.push(format!("Y is infinite of finite character: Cl^c(Y) = Y ∪ {{{}}}", f.generic_label));
                lemma
            }
            _ => return Err(Error::Precondition(format!("{}: Y is not of finite character", d.id))),
        }
    };
    against_essential(d, Criterion::Griffin, closure, trace)
}

pub fn check(d: &DomainDescriptor, c: Criterion) -> Result<Verdict> {
    match c {
        Criterion::Thm24 => pvmd_check_closure(d),
        Criterion::Cor26 => pvmd_check_essential_closed(d),
        Criterion::Cor27 => pvmd_check_compact(d),
        Criterion::Griffin => griffin_check(d),
        other => Err(Error::Precondition(format!("{other} needs more than a single descriptor"))),
    }
}

/// Like [`check`], with precondition failures reported as an unknown verdict.
pub fn check_or_unknown(d: &DomainDescriptor, c: Criterion) -> Verdict {
    check(d, c).unwrap_or_else(|e| Verdict::unknown(c, e.to_string()))
}

/// Griffin when it applies, otherwise the closure criterion.
pub fn check_auto(d: &DomainDescriptor) -> Result<Verdict> {
    match griffin_check(d) {
        Ok(v) => Ok(v),
        Err(Error::Precondition(_)) => pvmd_check_closure(d),
        Err(e) => Err(e),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Agreement {
    pub id: String,
    pub verdicts: Vec<Verdict>,
    pub agree: bool,
}

/// Runs every closure-family criterion and compares the applicable ones.
pub fn criterion_agreement(d: &DomainDescriptor) -> Agreement {
    let verdicts: Vec<Verdict> = Criterion::CLOSURE_FAMILY.iter().map(|&c| check_or_unknown(d, c)).collect();
    let decided: Vec<bool> = verdicts.iter().filter_map(|v| v.is_pvmd).collect();
    let agree = decided.windows(2).all(|w| w[0] == w[1]);
    Agreement { id: d.id.clone(), verdicts, agree }
}
