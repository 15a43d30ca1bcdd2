//! Fans, the class-group grading of the Cox ring, and graded monomial bases.

pub mod basis;
pub mod divisor;
pub mod fan;
pub mod flag;
pub mod lattice;
pub mod polytope;

pub use basis::{monomial_cmp, MonomialBasis};
pub use divisor::{critical_degree, degree_of_monomial, is_ample, ClassGroup, DivisorClass};
pub use fan::Fan;
pub use flag::{flag_z_monomials, Flag};
pub use polytope::{lattice_index, lattice_points};
