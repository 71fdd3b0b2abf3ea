//! The C^1 virtual element: DoFs, traces, projector, stabilization, local
//! stiffness and load.

mod element;
mod interpolate;
mod layout;
mod load;
mod local;
mod projector;
mod stabilization;

pub use element::{eval_tau_poly, reconstruct_edge_traces, tau_powers, EdgeData, EdgePoint, EdgeTrace, VemElement};
pub use interpolate::{interpolate, interpolate_polynomial};
pub use layout::{dof_count, DofKind, DofLayout};
pub use load::{local_load, project_function_l2, ritz_load};
pub use local::{kernel_dimension, local_operators, local_stiffness, LocalOperators, KERNEL_TOL};
pub use projector::{
    boundary_constraints, gram_matrix, internal_moment_matrix, ritz_projector, ritz_rhs, ritz_rhs_matrix, Projector,
};
pub use stabilization::{stabilization_rows, StabPart, StabilizationRows};
