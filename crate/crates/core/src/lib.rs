//! Exact-arithmetic machinery for quaternionic lattices and CM-embedding
//! certificates.
//!
//! Everything here is computed over arbitrary-precision integers and
//! rationals; there is no floating point anywhere. The crate is organized
//! around the pipeline that the `evilforge` CLI drives:
//!
//! - [`exactlin`] — integer/rational matrices, Hermite normal form, lattice
//!   intersections, Fincke–Pohst enumeration and rational form invariants.
//! - [`realquad`] — real quadratic fields: units, class numbers, splitting,
//!   residue symbols and residue rings modulo prime powers.
//! - [`quatalg`] — the definite quaternion algebra ramified at `{p, ∞}`,
//!   explicit maximal orders, the trace-zero congruence lattice and 2×2
//!   matrices over the algebra with their degree map.
//! - [`ssembed`] — relative CM orders, the base-changed ternary norm form,
//!   the local representability criteria and the global embedding search.
//! - [`polarize`] — polarization matrices on a product of supersingular
//!   elliptic curves, the rank 5/6 symmetric-endomorphism lattices, ring
//!   embeddings compatible with a polarization, and the end-to-end
//!   certificate builder plus its independent verifier.
//! - [`oracle`] — brute-force cross-checks (naive box enumeration) shipped
//!   with the library so the self-test command can replay them.

pub mod arith;
pub mod error;
pub mod exactlin;
pub mod oracle;
pub mod polarize;
pub mod quatalg;
pub mod realquad;
pub mod ssembed;

pub use error::{Error, Result};
