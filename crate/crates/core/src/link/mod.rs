//! Rational tangles, Montesinos links and planar diagrams.

mod conway;
mod diagram;
mod dt;
mod fraction;
mod montesinos;
mod tangle;

pub use conway::{parse_conway, ConwayNotation};
pub use diagram::{Crossing, LinkDiagram, Orientation};
pub use dt::{dt_to_diagram, parse_dt_table, DTCode, MAX_DT_CROSSINGS};
pub(crate) use fraction::cf_expand_with;
pub use fraction::{cf_from_fraction, cf_value, ContinuedFraction, Fraction};
pub use montesinos::MontesinosDescriptor;
pub use tangle::{Corner, Tangle};
