pub mod counting;
pub mod entropy;
pub mod error;
pub mod fibonacci;
pub mod io;
pub mod lattice;
pub mod mixing;
pub mod multiplicative;
pub mod reproduce;
pub mod sft;
pub mod systems;
