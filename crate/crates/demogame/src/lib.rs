//! Age-structured population projection and two-country policy games.
//!
//! The [`leslie`] module projects populations forward with Leslie
//! matrices (per-class fertilities on the first row, survival
//! probabilities on the sub-diagonal) plus optional per-class
//! immigration, and computes the dominant growth rate and stable age
//! distribution.
//!
//! The [`game`] module treats two countries choosing demographic
//! policies as a bimatrix game: payoffs are projected population
//! totals, the sequential (leader/follower) form is expanded into
//! contingent follower strategies, and the solver enumerates pure Nash
//! equilibria and backward-induction outcomes.
//!
//! Scenarios — initial populations plus the per-policy matrices and
//! immigration vectors — are loaded from JSON files ([`scenario`]) or
//! taken from the built-in example returned by
//! [`Scenario::builtin_paper`]. The [`report`] module renders payoff
//! tables, game trees, and trajectories as CSV, Markdown, or DOT.

pub mod cli;
pub mod game;
pub mod leslie;
pub mod report;
pub mod scenario;

pub use game::{
    backward_induction, build_sequential_normal_form, build_simultaneous_normal_form,
    enumerate_follower_strategies, profile_payoffs, pure_nash, verify_equilibrium, BimatrixGame,
    ContingentStrategy, GameError, JointProfile, NashResult, SpeResult, TieBreak,
};
pub use leslie::{
    EigenResult, ImmigrationVector, LeslieError, LeslieMatrix, NegativePolicy, PopulationVector,
    DEFAULT_EIGEN_MAX_ITER, DEFAULT_EIGEN_TOL,
};
pub use report::{Format, RenderOptions, ReportError};
pub use scenario::{CountryDynamics, CountrySpec, EffectEntry, Scenario, ScenarioError};
