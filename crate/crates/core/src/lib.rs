//! Exact computations around nilpotent tuples in `SU(2)`, `SO(3)` and `U(2)`.
//!
//! Every non-abelian nilpotent subgroup of `SU(2)` is conjugate to a
//! generalized quaternion group `Q_{2^{q+1}} = μ_{2^q} ∪ wμ_{2^q}`. That turns
//! questions about spaces of nilpotent tuples into finite questions, and this
//! crate answers them exactly:
//!
//! * [`quat_group`] and [`su2_exact`] do the group arithmetic without any
//!   floating point (ξ-exponents, rational angles, quaternions over `Q(√2)`).
//! * [`subgroups`] classifies subgroups, computes lower central series,
//!   normalizers and the poset of maximal class-`< r` subgroups.
//! * [`hom_count`] enumerates generating tuples, counts conjugation orbits and
//!   checks every closed formula for component and summand counts.
//! * [`um_blocks`] is the block-partition procedure for nil-2 tuples of
//!   monomial unitary matrices.
//! * [`f2_groebner`] and [`spectral`] handle graded `F₂` algebra: Gröbner
//!   bases, colon ideals, Hilbert functions and spectral-sequence pages.
//! * [`verify`] bundles the end-to-end checks used by `nilhom verify`.
//!
//! ```
//! use nilhom::hom_count::{su2_component_count, Method};
//!
//! let report = su2_component_count(2, 3, Method::Both).unwrap();
//! assert_eq!(report.total_nonabelian, 7u32.into());
//! assert_eq!(report.agree, Some(true));
//! ```

pub mod error;
pub mod f2_groebner;
pub mod hom_count;
pub mod quat_group;
pub mod spectral;
pub mod su2_exact;
pub mod subgroups;
pub mod um_blocks;
pub mod verify;

pub use error::{Error, Result};
