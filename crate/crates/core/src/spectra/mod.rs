//! Symbolic prime spectra with their Zariski and constructible topologies.

pub mod closure;
pub mod file;
pub mod fip;
mod indexset;
pub mod locally_finite;
pub mod maps;
mod model;
mod shape;
mod subset;
pub mod ultrafilter;

pub use closure::{
    generization, is_patch_closed, is_quasi_compact, is_zariski_closed, patch_closure, specialization, zariski_closure,
    CompactnessCertificate,
};
pub use fip::extend_fip;
pub use indexset::IndexSet;
pub use locally_finite::{locally_finite_union, ConstructibleBasicSet, LocallyFiniteCertificate, MemberFamily};
pub use maps::{PointMap, SpectralMap};
pub use model::{ElementSemantics, IntegerElements, SpectrumModel, Tabulated};
pub use shape::{project, set_at, wrap_point, Cap, Family, FinitePoset, IndexLabels, PathStep, Shape};
pub use subset::{PointRef, SubsetDesc};
pub use ultrafilter::{limit_from_elements, principal_ultrafilters, ultrafilter_limit, UltrafilterDesc};
