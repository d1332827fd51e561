//! Polynomial factorization over `Q` and over rational function fields
//! `F_q(t)`, with a lattice-based recombination step.

mod error;

pub mod bivariate;
pub mod config;
pub mod ext;
pub mod factorization;
pub mod ff_factor;
pub mod fp;
pub mod gf;
pub mod hensel;
pub mod integer;
pub mod knapsack_fqt;
pub mod knapsack_q;
pub mod lattice;
pub mod poly;
pub mod ring;
pub mod zassenhaus;

pub use error::{Error, Result};
pub use ext::ExtField;
pub use fp::PrimeField;
pub use gf::{FqElem, GaloisField, GfElem};
pub use integer::Integers;
pub use poly::{Poly, PolyRing};
pub use ring::{EuclideanDomain, Field, FiniteField, Order, Ring};

/// Polynomial in `Z[X]`.
pub type IntPoly = Poly<num_bigint::BigInt>;
/// Polynomial in `F_q[t]` (or `F_q[X]`).
pub type FqPoly = Poly<GfElem>;
/// Polynomial in `F_q[t][X]`: coefficients in `X` are polynomials in `t`.
pub type FqBiPoly = Poly<Poly<GfElem>>;

pub use config::{BoundMode, Config, PartStats, Strategy};
pub use factorization::{
    factor_bivariate, factor_integer, factor_rational, Factorization, FqtFactorization, QFactorization, RatPoly,
};
