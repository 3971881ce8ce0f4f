//! Split preorders on finite ordinals, their faithful representation as
//! relations between function spaces, and the translation of conjunctive and
//! disjunctive derivations into split preorders.
//!
//! - [`relcore`]: finite relations, closures, preorder enumeration.
//! - [`splitpre`]: split preorders, identities and composition.
//! - [`cones`]: preorders as sets of monotone functions into a chain.
//! - [`brauer`]: the representation functor and its checks.
//! - [`logic`]: formulas, derivations, and proof equivalence.
//! - [`cli`]: the text format, DOT output and command handlers.

pub mod brauer;
pub mod cli;
pub mod cones;
pub mod error;
pub mod logic;
pub mod relcore;
pub mod splitpre;

pub use error::{Error, Result};
