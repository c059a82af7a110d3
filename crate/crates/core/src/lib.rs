//! Exact field towers and the algorithms built on them: factoring, a lazily
//! grown algebraic closure, embedding extension, finite groups, Galois
//! groups and difference fields.

pub mod arith;
pub mod closure;
pub mod difference;
pub mod embed;
pub mod error;
pub mod factor;
pub mod galois;
pub mod groups;
pub mod tower;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/towers.md")]
    mod towers {}
    #[doc = include_str!("../../../book/src/factoring.md")]
    mod factoring {}
    #[doc = include_str!("../../../book/src/closure.md")]
    mod closure {}
    #[doc = include_str!("../../../book/src/embeddings.md")]
    mod embeddings {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/galois.md")]
    mod galois {}
    #[doc = include_str!("../../../book/src/difference.md")]
    mod difference {}
}
