//! A truncation of the Heinzer–Ohm domain `D = R ∩ ⋂ V_i`, an essential
//! domain that is not a PvMD.
//!
//! Only `X0..X{n-1}` are materialized. Every `v_i` with `i ≥ n` agrees with
//! the `(T,U)`-adic order on the materialized elements, so one tail check
//! covers all of them.

mod element;
mod model;
mod witness;

pub use element::{ho_in_core, ho_in_d, ho_in_mi, ho_in_r, ho_limit_contains, HoConfig, HoElement};
pub use model::{HoElements, HEIGHT_ONE_BLOCK, HO_FAMILY, LIMIT_LABEL};
pub use witness::{
    divisibility_instance, ho_demo, ho_fip_witness, ho_nonvaluation_certificate, random_poly, CertificateStep, FipCheck,
    FipWitness, HoDemo, MembershipRow, NonvaluationCertificate, CERTIFICATE_SAMPLES,
};
