//! Canonical representation of duality-functor group elements.
//!
//! An element is a pair (π, θ): the permutation π of the building-bundle
//! indices `{0,1,2,3}` and the automorphism θ it induces on the
//! statomorphism group `G₃`. Equality of functors up to natural isomorphism
//! is equality of these pairs.
//!
//! Words act leftmost letter first: the θ of `XY` is obtained by applying
//! the `X` row to the components and then the `Y` row to the result. Under
//! this convention the row printed for `YX` in the `(XYXZ)²` worked example
//! is exactly `eval_word("YX")`, and every intermediate row of that example
//! matches its label.

mod element;
mod row;
mod slot;
mod theta;

pub use element::{
    compose, element_order, equal, eval_word, generator_element, invert, matrix6, DualityElement,
};
pub use row::{
    describe_row, parse_rho, parse_row, render_rho, ActionRow, RhoStyle, RowParseError,
    CLASS_TABLE_ORDER, GENERATOR_TABLE_ORDER,
};
pub use slot::{PairKey, Slot};
pub use theta::{RhoPart, SignedSlotMap, ThetaAut};
