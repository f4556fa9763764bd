mod algebra;
mod order;

pub use algebra::{QuatAlgebra, QuatElem};
pub use order::{lambda_o, lambda_o_index, make_bp, MaximalOrder};
