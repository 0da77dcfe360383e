//! Exact symbolic Stirling-type polynomials in `X1, X2, ...`.
//!
//! Families, each indexed by `1 <= k <= n`:
//!
//! * `S(n,k)`, first kind, with integer coefficients;
//! * `B(n,k)`, the partial exponential Bell polynomials;
//! * `Bt(n,k)`, `B(n,k)` with `X1 = 0`;
//! * `L(n,k)`, Lah polynomials;
//! * `A(n,k) = S(n,k) / X1^(2n-1)`, kept as a [`LaurentX1`].
//!
//! Most entries can be built more than one way (sums over partition types,
//! recurrences, composition), which is what the identity suite compares.
//! Integer tables and EGF reversion live in [`stirling`] and [`series`].
//!
//! `no_std` with `alloc`. Coefficients are [`BigInt`];
//! evaluation is over [`BigRational`].

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod combinat;
mod error;
pub mod msp;
pub mod poly;
pub mod ptypes;
pub mod series;
pub mod stirling;

pub use error::{Error, Result};
pub use msp::{MspCache, MspKind};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{LaurentX1, MPoly, Monomial};
pub use ptypes::PartitionType;
pub use series::{EgfCoeffs, TPoly};
pub use stirling::{NumberKind, NumberTable};
