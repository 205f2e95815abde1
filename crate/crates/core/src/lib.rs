//! Adjoint L-functions of the non-supercuspidal L-parameters of GSp(4).
//!
//! [`reps`] builds the parameter of a catalogue row, [`engine`] computes
//! `ker(ad N)` on sp(4) and reads off the L-function, [`lfun`] handles the
//! formal Euler products and their poles at `s = 1`.

pub mod chars;
pub mod cli;
pub mod engine;
pub mod lfun;
pub mod qlinalg;
pub mod reps;
pub mod sp4;
pub mod verify;
