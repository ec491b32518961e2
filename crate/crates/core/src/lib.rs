//! Exact laboratory for multifold graph colouring.
//!
//! Decides `(a, b)`-colourability, `(a, b)`-choosability and
//! `(a, b)`-paintability on small graphs, plays the painting game with
//! constructive Painter strategies, and checks colouring certificates for a
//! catalog of planar gadgets.

mod bits;
pub mod catalog;
pub mod choosability;
pub mod claims;
pub mod cli;
pub mod colouring;
pub mod error;
pub mod graph;
pub mod hypergraph;
pub mod painting;
pub mod rational;
pub mod solver;

pub use error::{Error, Result};
pub use rational::Rational;
