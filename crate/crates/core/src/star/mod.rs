//! Fractional ideals over catalog domains and the v- and t-operations.
//!
//! Ideal arithmetic is available only where the gcd rule is valid: `Q`,
//! `Z`, its localizations, `Q[X]` and `Z[X]`. The remaining domains expose
//! prime classifications only.

pub mod checks;
mod domain;
mod elem;
mod ideal;
mod prime;

pub use domain::{as_integer, cap_label, glue_top_shape, glue_top_subset, in_zx_maximal, CatalogDomain, PolyElements, ZX_CAPS};
pub use elem::FracElem;
pub use ideal::{FracIdealFG, IdealGens};
pub use prime::{gaussian_contraction, indexed_prime, tabulated_primes, PrimeDesc};
