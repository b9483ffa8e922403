//! Acceptance criteria runners.
