//! Exact arithmetic in `Q(ζ20)` and half-integer Laurent polynomials.

mod doteq;
mod field;
mod laurent;

pub use doteq::{
    complex_norm, doteq_canonical, eval_at_root, field_div, to_quotient, unit_orbit_eq, DoteqClass,
    UnitOrbitValue,
};
pub use field::{CycloInt, QuotientElement, GALOIS_EXPONENTS, RANK};
pub use laurent::HalfLaurent;
