//! Reset words and state preparation for qutrits.
//!
//! A short sequence of quantum channels can drive *every* qutrit density
//! matrix onto one fixed pure target state, mirroring how a synchronizing
//! word resets a classical finite automaton. This crate implements both
//! sides of that picture:
//!
//! * [`dfa`] - deterministic finite automata, synchronizing-word tests,
//!   shortest reset words via subset BFS, and a pair-merging heuristic.
//! * [`channels`] - the two-letter qutrit alphabet (an irreversible
//!   rotate-and-reset channel and a planar rotation), an optional phase
//!   gate, and word application in both Schrödinger and Heisenberg pictures.
//! * [`qsync`] - synchronization fidelity, worst-case fidelity over all
//!   inputs, robustness scans over the channel angles, and brute-force
//!   search for short reset words.
//! * [`prep`] - the family of states reachable after a reset, its coverage
//!   of the real sphere, and compilation of a target state into a full
//!   reset-and-prepare gate sequence.
//! * [`linalg`] - minimal dense complex linear algebra for dimension 3.
//!
//! Grid scans, word searches, and coverage probes run data-parallel via
//! rayon when the default `parallel` feature is enabled; every such entry
//! point also has an always-available `*_seq` twin that produces bitwise
//! identical results on one thread.

pub mod channels;
pub mod dfa;
mod error;
mod exec;
pub mod linalg;
pub mod prep;
pub mod qsync;

pub use error::{Error, Result};
