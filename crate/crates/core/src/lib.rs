//! Abacus combinatorics, the LLT algorithm, Jantzen–Schaper bounds and
//! block analysis for decomposition numbers of q-Schur algebras.

pub mod abacus;
pub mod blocks;
pub mod error;
pub mod fock;
pub mod jantzen;
pub mod notation;
pub mod orders;
pub mod partition;
pub mod poly;

pub use error::{Error, Result};
pub use partition::Partition;
pub use poly::VPolynomial;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/abacus.md")]
    mod abacus {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/llt.md")]
    mod llt {}
    #[doc = include_str!("../../../book/src/jantzen.md")]
    mod jantzen {}
    #[doc = include_str!("../../../book/src/adjustment.md")]
    mod adjustment {}
}
