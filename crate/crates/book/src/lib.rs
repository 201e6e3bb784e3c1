//! The guide in `book/`, compiled so that every snippet runs as a doctest.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/algebras.md")]
pub mod algebras {}
#[doc = include_str!("../../../book/src/enveloping.md")]
pub mod enveloping {}
#[doc = include_str!("../../../book/src/rmatrices.md")]
pub mod rmatrices {}
#[doc = include_str!("../../../book/src/twists.md")]
pub mod twists {}
#[doc = include_str!("../../../book/src/qdeform.md")]
pub mod qdeform {}
#[doc = include_str!("../../../book/src/suites.md")]
pub mod suites {}
#[doc = include_str!("../../../book/src/conventions.md")]
pub mod conventions {}
