//! Finite-truncation evaluation of mode definitions.
