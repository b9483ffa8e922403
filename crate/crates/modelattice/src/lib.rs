//! Small-ball mode definitions for probability measures on metric spaces:
//! the quantifier-string grammar and its classification into ten meaningful
//! classes, the implication lattice and its quotients, an exact 1-D
//! ball-mass engine for the separating counterexample measures, a
//! finite-truncation certificate checker, and sequence-space (ℓ²) tools
//! including seeded Monte Carlo for Gaussian-dominated measures.

pub mod quantifier;

pub mod acceptance;
pub mod checker;
pub mod ell2;
pub mod examples;
pub mod measure;

pub use quantifier::{ModeClass, ModeDefinition, Polarity, Quantifier, Variable};
