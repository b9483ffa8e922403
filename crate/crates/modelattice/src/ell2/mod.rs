//! Sequence-space measures.
