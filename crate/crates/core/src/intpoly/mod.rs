//! Integer-valued polynomials over the catalog: membership, the primes
//! `m_{p,α}`, the split `t-Spec(D) = Λ₀ ⊔ Λ₁`, and instance checks of the
//! results relating `Int(D)` to `Int(D₀)`.

mod domain;
mod lambda;
mod padic;

pub use domain::{
    binomial_coordinates, binomial_poly, coefficients_in, int_membership, int_membership_binomial, IntDomain, IntPoly,
};
pub use lambda::{
    decomposition_check, lambda_classify, lemma33_check, lemma36_instance, prop34_check, thm37_check, DecompositionLine,
    DecompositionReport, Lambda0Point, LambdaClassification, Lemma33Outcome, Lemma36Report, Prop34Report, Prop34Status,
    Residue, Thm37Report, ValuationChain,
};
pub use padic::{mpalpha_contract_zx, mpalpha_membership, padic_maximals, IntPrimeDesc, MpMembership, ZxContraction};
