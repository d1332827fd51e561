//! Integer lattices (exact LLL reduction, Gram–Schmidt cutoff, Hermite
//! normal form) and linear algebra over prime fields.

mod fp;
mod hnf;
mod lll;

pub use fp::{fp_intersect, fp_kernel, rref_fp, rref_rational, FpSubspace};
pub use hnf::{hnf_basis, same_lattice, solve_integral};
pub use lll::{cutoff_split, gram_schmidt, lll_reduce, GSOData, IntLattice};
