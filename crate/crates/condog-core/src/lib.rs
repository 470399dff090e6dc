//! Exact solver for the connected domination game with predominated
//! vertices: bitset graphs, the game engine, named graph families,
//! scripted strategies, and the unbounded-game characterization.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in the companion
//! `condog` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bits;
pub mod engine;
pub mod error;
pub mod families;
pub mod graph;
pub mod isolation;
pub mod strategy;
pub mod value;

pub use bits::{VertexId, VertexSet, Word};
pub use engine::{
    connected_domination_number, continuation_value, game_connected_domination, legal_ordering,
    solve_unmemoized, GameState, SolveContext,
};
pub use error::Error;
pub use families::FamilySpec;
pub use graph::{Graph, LabeledGraph};
pub use isolation::{
    sgame_infinite_by_characterization, sgame_infinite_by_characterization_with,
    tree_sgame_infinite, x_isolation_line, x_isolation_winner, IsolationConvention,
};
pub use strategy::{play_out, Playout, PlayoutOutcome, Strategy};
pub use value::{GameValue, Turn};
