//! Linear Hamiltonian actions: matrix Lie algebras, their modules,
//! symplectic forms, moment maps and generic invariants.

pub mod algebra;
pub mod fiber_example;
pub mod laurent;
pub mod model;
pub mod modules;
pub mod moment;
pub mod table2;

pub use algebra::{LieAlgebra, SimpleAlgebra};
pub use fiber_example::{knop_example_suite, ReducibleFiberExample};
pub use model::{Block, LinearHamiltonianModel};
pub use modules::{parse_expression, Atom, Module, Summand};
pub use moment::{
    check_moment_identities, cotangent_moment, invariants, moment_map, restrict_moment,
    InvariantReport, MomentCheck,
};
pub use table2::{verify_row, verify_table2};
