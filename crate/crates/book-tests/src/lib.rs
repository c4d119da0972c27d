//! Each chapter of the guide becomes the doc comment of a module, so its
//! listings run under `cargo test --doc`.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/lattices.md")]
pub mod lattices {}
#[doc = include_str!("../../../book/src/shifts.md")]
pub mod shifts {}
#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}
#[doc = include_str!("../../../book/src/entropy.md")]
pub mod entropy {}
#[doc = include_str!("../../../book/src/systems.md")]
pub mod systems {}
#[doc = include_str!("../../../book/src/multiplicative.md")]
pub mod multiplicative {}
#[doc = include_str!("../../../book/src/gluing.md")]
pub mod gluing {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
