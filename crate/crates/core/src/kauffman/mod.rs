//! The regular-isotopy Kauffman polynomial at its 5-move-invariant points.

mod closed;
mod engine;
mod invariants;
mod point;

pub use closed::{
    closed_tangle_coeffs, closure_matrix, f1_closed, f2_closed, f3_closed, skein_tangle_coeffs,
    solve_tangle_coeffs, TangleCoefficients,
};
pub use engine::{lambda_eval, lambda_eval_with, LambdaEngine, DEFAULT_SKEIN_CAP};
pub use invariants::{
    f_invariants, f_invariants_with, f_invariants_with_strategy, lambda_values, orbit_eq_mod_a,
    AOrbit, FInvariantSet,
};
pub use point::{EvalPoint, SkeinConstants};
