//! Exact combinatorial types of Hirzebruch-Jung singularities.
//!
//! The normalization of an irreducible quasi-ordinary hypersurface germ is a
//! toric (Hirzebruch-Jung) singularity. Its combinatorial type, once the edges
//! of the cone are ordered, is a unique upper-triangular integer matrix. This
//! crate computes that matrix from the characteristic exponents of the germ,
//! using only exact integer and rational arithmetic.
//!
//! * [`algebra`]: big integers, rationals, triangular matrices.
//! * [`lattice`]: ambient and sublattice normal forms, congruence sublattices.
//! * [`pipeline`]: characteristic exponents to type matrix, with a full trace.
//! * [`surface`]: the surface case, `(n, q)` types and continued fractions.
//! * [`group`]: invariant factors and characters of the local fundamental group.
//! * [`oracle`]: brute-force cross-checks.
//! * [`cli`]: the job runner behind the `hjtype` binary.
//!
//! ```
//! use hjtype::pipeline::{normalize_qo, CharacteristicExponents};
//!
//! let e = CharacteristicExponents::parse("1/4 1/6 1/6 ; 3/8 5/12 7/12", None).unwrap();
//! let trace = normalize_qo(&e).unwrap();
//! assert_eq!(
//!     trace.type_matrix.to_string(),
//!     "[ 1 -1 -3]\n[ 0  4  0]\n[ 0  0  4]"
//! );
//! ```

pub mod algebra;
pub mod cli;
pub mod error;
pub mod group;
pub mod lattice;
pub mod oracle;
pub mod pipeline;
pub mod surface;

pub use algebra::{Integer, Rational, TriMatrix};
pub use error::{Error, Result};
pub use lattice::{AmbientNormalForm, SublatticeNormalForm};
pub use pipeline::{normalize_qo, CharacteristicExponents, NormalizationTrace};
