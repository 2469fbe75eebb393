//! The book's chapters, compiled as rustdoc so their snippets run as
//! doc-tests. One module per chapter keeps failures traceable.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/numbers.md")]
pub mod numbers {}
#[doc = include_str!("../../../book/src/triangle.md")]
pub mod triangle {}
#[doc = include_str!("../../../book/src/configurations.md")]
pub mod configurations {}
#[doc = include_str!("../../../book/src/necklaces.md")]
pub mod necklaces {}
#[doc = include_str!("../../../book/src/series.md")]
pub mod series {}
#[doc = include_str!("../../../book/src/roots.md")]
pub mod roots {}
#[doc = include_str!("../../../book/src/curve.md")]
pub mod curve {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../book/src/limits.md")]
pub mod limits {}
