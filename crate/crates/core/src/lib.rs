//! Binary operations on LR-tableaux whose entries all equal 1, and their
//! use for computing generic extensions of homomorphisms from semisimple
//! nilpotent operators to nilpotent operators.
//!
//! The combinatorial side ([`partition`], [`tableau`], [`star`],
//! [`picket`], [`generic_ext`]) works with integers only. The [`oracle`]
//! recomputes the same generic extensions by brute-force linear algebra
//! over a small prime field; it is generic over [`field::FiniteField`],
//! with the concrete fields aliased below.

pub mod cli;
pub mod error;
pub mod field;
pub mod generic_ext;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod picket;
pub mod star;
pub mod tableau;
pub mod verify;

pub use error::{Error, Result};
pub use field::{FieldParam, FiniteField, Fp};
pub use generic_ext::{generic_extension, generic_extension_by_free, generic_extension_s1};
pub use partition::Partition;
pub use picket::{end_dim, hom_dim, hom_dim_picket, hom_leq, H1Object, Picket};
pub use star::{fill, star_ext, star_lr1, star_lr1_traced, StarTrace};
pub use tableau::{AnyTableau, Convention, ExtTableau, LrTableau};

/// The field with two elements, the oracle's default.
pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
pub type Gf5 = Fp<5>;
pub type Gf7 = Fp<7>;

/// Matrices over the default oracle field.
pub type Matrix2 = linalg::Matrix<Gf2>;
/// Matrix realizations over the default oracle field.
pub type MatObject2 = oracle::MatObject<Gf2>;
