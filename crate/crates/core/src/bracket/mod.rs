//! Kauffman bracket, Jones polynomial and the closed forms of the reduced
//! Jones polynomial for the five normal forms.

mod closed;
mod jones;
mod state_sum;

pub use closed::{
    determinant_filter, v1_closed, v1_formal, v2_closed, v3_closed, v4_closed, v5_closed,
};
pub use jones::{
    determinant, invariants_of_polynomial, jones, jones_default, jones_invariants,
    jones_invariants_with, jones_with, JonesInvariants,
};
pub use state_sum::{
    kauffman_bracket, kauffman_bracket_with, loop_value, BracketPolynomial, Strategy,
    DEFAULT_BRACKET_CAP,
};
