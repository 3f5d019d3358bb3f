//! Decision procedures for the Prüfer v-multiplication property.
//!
//! Every criterion compares a patch closure with the essential prime
//! spectrum `E(D)`; the constructions build new descriptors from verified
//! ones and carry their certificates along.

mod construct;
mod criteria;
mod descriptor;
mod verdict;

pub use construct::{
    intersection_pvmd_check, localization_intersection, pullback_construct, pullback_verdict, transfer_check, Finiteness,
    IntersectionPart, IntersectionParts, ValuationDesc,
};
pub use criteria::{
    check, check_auto, check_or_unknown, criterion_agreement, griffin_check, pvmd_check_closure, pvmd_check_compact,
    pvmd_check_essential_closed, Agreement,
};
pub use descriptor::{catalog_descriptor, catalog_ids, descriptor_for_id, DescriptorSummary, DomainDescriptor, DomainKind, Flags};
pub use verdict::{first_point, Certificate, Criterion, Verdict};
