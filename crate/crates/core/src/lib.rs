//! Combinatorics of the cell decomposition of the Hilbert scheme of points
//! in the projective plane: staircases and their weight orders, cell labels
//! and degrees, the cup-product vanishing mask, line-bundle weights at fixed
//! points, generic monomial staircases, and the toric intersection criterion.

pub mod bb_core;
pub mod cli;
pub mod cover;
pub mod cup;
pub mod error;
pub mod es_weights;
pub mod generic_ideals;
pub mod orders;
pub mod partitions;
pub mod triples;

pub use error::{Error, Result};
pub use orders::{OrderResult, Weight2, XiKind};
pub use partitions::StandardSet;
pub use triples::Triple;
