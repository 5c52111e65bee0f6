//! Exact computation and brute-force checking of left dual `(b,c)`-core
//! inverses and related generalized inverses in `*`-rings.
//!
//! Two families of rings are supported: `n x n` matrices over an exact field
//! (rationals, gaussian rationals, `GF(p)`) and small enumerated rings
//! (`Z_n`, `M_k(Z_p)`). Everything is written against [`ring::StarRing`].

pub mod cli;
pub mod dynamic;
pub mod error;
pub mod finite;
pub mod ginverse;
pub mod matrix;
pub mod matrix_ring;
pub mod oracle;
pub mod ring;
pub mod scalar;

pub use error::{Error, Result};
pub use finite::{ElementSet, FiniteRing};
pub use matrix::Matrix;
pub use matrix_ring::MatrixRing;
pub use ring::{RingDescriptor, StarRing};
