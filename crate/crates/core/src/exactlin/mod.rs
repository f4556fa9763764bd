//! Exact integer/rational linear algebra and lattice machinery.

mod enumerate;
mod forms;
mod hnf;
mod lattice;
mod matrix;

pub use enumerate::fincke_pohst;
pub use forms::{
    diagonalize_over_q, diagonalize_rational, hasse_invariant, hilbert_symbol, relevant_places,
    Place, QFormDiag,
};
pub use hnf::{hnf, left_kernel, row_space_eq};
pub use lattice::{kernel_mod_lattice, lattice_intersect, IntLattice};
pub use matrix::{IntMatrix, RatMatrix};
