//! Lattice vertex operator algebra data for the twisted principal
//! realization of simply-laced affine algebras under a diagram automorphism
//! of order two: root systems and their folding, the cocycle and its lift,
//! twisted modes with their commutation relations, and Nahm-sum characters.

pub mod characters;
pub mod cli;
pub mod cocycle;
pub mod error;
pub mod lattice;
pub mod modes;
pub mod report;

pub use error::{Error, Result};
