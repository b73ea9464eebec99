//! Certificate finders: R-trees, interleavings of integer sets, unavoidable
//! 0-1 submatrices, and nonseparating induced paths. Each finder has an
//! independent checker next to it.

mod interleave;
mod matrix;
mod nonsep;
mod rtree;

pub use interleave::{check_interleave_certificate, interleave_or_gap, InterleaveCertificate};
pub use matrix::{check_pattern, unavoidable_submatrix, MatrixPattern, PatternMatch, ZeroOneMatrix};
pub use nonsep::{
    is_nonseparating_induced_path, is_subdivision_of_3connected, nonseparating_induced_path, nonseparating_induced_path_traced,
};
pub use rtree::{check_r_tree, find_r_tree, r_tree_structure, RTreeCertificate, RTreeStructure};
