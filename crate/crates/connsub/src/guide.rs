//! The user guide, bound chapter by chapter from `book/src` so that every
//! code block in the book compiles and runs as a doc-test of this crate.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/counting.md")]
pub mod counting {}

#[doc = include_str!("../../../book/src/complement-sums.md")]
pub mod complement_sums {}

#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}

#[doc = include_str!("../../../book/src/searching.md")]
pub mod searching {}
