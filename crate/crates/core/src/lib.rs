//! Self-dual codes over small rings from circulant constructions.
//!
//! Ring codes are built from λ-circulant blocks (four-circulant form) or
//! extended one step at a time (building-up), then mapped to binary
//! self-dual codes through Gray maps and enumerated by weight.

pub mod catalog;
pub mod circulant;
pub mod construct;
pub mod error;
pub mod genfile;
pub mod gf2;
pub mod ring;
pub mod search;

pub use error::{Error, Result};
pub use ring::{RingElement, RingId, RingVector};

/// The guide's chapters, compiled so their snippets run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/circulants.md")]
    mod circulants {}
    #[doc = include_str!("../../../book/src/constructions.md")]
    mod constructions {}
    #[doc = include_str!("../../../book/src/binary-codes.md")]
    mod binary_codes {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/catalog.md")]
    mod catalog {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
