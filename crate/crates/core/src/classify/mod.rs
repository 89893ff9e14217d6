//! Rational tangles and Montesinos links up to 5-moves.

mod invariants;
mod montesinos;
mod normal_form;
mod tangle_reduce;

pub use invariants::{
    f_closed, normal_form_f_invariants, normal_form_invariants, vbar_closed, InvariantTuple,
};
pub use montesinos::{classify_montesinos, rational_link_class, RationalClass};
pub use normal_form::NormalForm;
pub use tangle_reduce::{
    reduce_rational_tangle, reduce_with_limits, residue_key, BasicTangle, ReduceLimits,
};
