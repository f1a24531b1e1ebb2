//! Far-commutation exchanges, block pushes and orbit search.

mod exchange;
mod orbit;
mod push;
mod trace;

pub use exchange::{
    exchange, exchange_delta, is_locally_thin, legal_sites, recomputed_delta, IllegalReason,
    LocalThinness, MoveError,
};
pub use orbit::{orbit_min_width, OrbitResult};
pub use push::{push_block, Direction};
pub use trace::{pair_delta, MoveStep, MoveTrace};
