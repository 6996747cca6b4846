//! Finite difference approximation of Riemann-Liouville space fractional
//! derivatives on non-uniform meshes, via mollifier-based function splitting,
//! and a Crank-Nicolson solver for the space fractional diffusion equation
//!
//!   du/dt = K * D^alpha u + f(x,t)   on (0,b) x (0,T],   1 < alpha < 2.
//!
//! The domain [0,b] is split at a point `a` with a transition zone of width
//! `2*eps`. A smooth cutoff (mollified indicator) decomposes the unknown into
//! two pieces with small common support; each piece is discretized by a
//! shifted Grünwald-type formula on its own uniform sub-mesh (fine step on one
//! side, coarse on the other), and linear interpolation couples the grids.
//!
//! Modules follow the pipeline: [`weights`] (coefficient families),
//! [`mollify`] (cutoff functions), [`mesh`] (two-scale partitions and discrete
//! norms), [`fracop`] (pointwise derivative operators), [`assembly`] (system
//! matrices and boundary vectors), [`cn_solver`] (time stepping and stability
//! diagnostics), [`harness`] (manufactured solutions and convergence studies).

use std::fmt;

pub mod assembly;
pub mod cn_solver;
pub mod fracop;
pub mod harness;
pub mod mesh;
pub mod mollify;
pub mod weights;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Invalid fractional order, scheme triple, or weight-table request.
    InvalidParameter(String),
    /// Mesh construction failed (divisibility or sizing).
    Mesh(String),
    /// Operator/mesh/scheme mismatch at evaluation time.
    Operator(String),
    /// Linear algebra failure (singular matrix, eigensolver breakdown).
    Linalg(String),
    /// I/O failure while emitting results.
    Io(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Mesh(msg) => write!(f, "mesh error: {msg}"),
            Error::Operator(msg) => write!(f, "operator error: {msg}"),
            Error::Linalg(msg) => write!(f, "linear algebra error: {msg}"),
            Error::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub use assembly::{assemble_left, assemble_right, condition_number_2norm, perturbation_bound, precondition, AssembledSystem, ProblemSide};
pub use cn_solver::{iteration_matrix_radius, solve, DiffusionProblem, SolveResult};
pub use fracop::rl_exact_monomial;
pub use mesh::{build_mesh, discrete_l2, observed_rate, GridFunction, MeshCase, MeshConfig};
pub use mollify::{Mollifier, SplitSpec};
pub use weights::{grunwald_coeffs, interp_weights, shifted_weights, FractionalOrder, SchemeKind, SchemeParams, WeightTable};
