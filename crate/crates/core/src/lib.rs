//! Exact spectra of congruence complex- and quaternionic-hyperbolic manifolds.
//!
//! This crate computes, entirely in exact rational arithmetic, the quantized
//! part of the Laplacian spectrum on congruence quotients of the complex
//! hyperbolic spaces `SU(n,1)/S(U(n)×U(1))` and the quaternionic hyperbolic
//! spaces `Sp(n,1)/(Sp(n)×Sp(1))`:
//!
//! * closed-form lists of the discrete ("quantized") eigenvalues, by form
//!   degree or Hodge type, together with the thresholds below which no other
//!   eigenvalue can occur — both unconditionally and under the Ramanujan
//!   conjecture ([`spectra`]);
//! * an exact model of archimedean Arthur parameters for the quaternionic
//!   family, their admissibility constraints, infinitesimal characters and
//!   Casimir eigenvalues ([`arthur`], [`infchar`]);
//! * a brute-force oracle that enumerates every admissible parameter up to a
//!   height bound and recomputes the spectra from first principles, so the
//!   closed forms can be verified independently ([`oracle`]).
//!
//! No floating point is used anywhere: the spectral dichotomy this crate
//! verifies — every positive eigenvalue is either an explicit even integer or
//! lies above an explicit rational threshold — is meaningless under rounding,
//! so every quantity is an exact [`Rational`].
//!
//! # Example
//!
//! ```
//! use autospec_core::{groups::{Family, GroupDatum}, spectra};
//!
//! // Functions on a congruence quotient of quaternionic hyperbolic 1-space:
//! // discrete eigenvalues {0, 8}, continuous spectrum from 9 - (12/13)^2.
//! let spec = spectra::spherical_spectrum(1);
//! assert_eq!(spec.discrete.len(), 2);
//! assert_eq!(spec.threshold_ramanujan, autospec_core::Rational::int(9));
//!
//! let g = GroupDatum::new(Family::Quaternionic, 1).unwrap();
//! assert_eq!(g.dual_dim, 5);
//! ```

pub mod arthur;
pub mod error;
pub mod groups;
pub mod infchar;
pub mod io;
pub mod oracle;
pub mod rational;
pub mod spectra;
pub mod weights;

pub use error::Error;
pub use rational::Rational;
pub use weights::{Multiset, WeightVector, WeylType};
