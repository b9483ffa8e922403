//! Builders for the counterexample measures and their certificates.
