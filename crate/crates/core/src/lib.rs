//! Exact computations in split Grothendieck rings of generalized Soergel
//! bimodule categories.
//!
//! The categories are generated by `B_t = R ⊗_{R^t} R(1)` for every reflection
//! `t` (not only the simple ones) and, in the extended variant, by the twisted
//! bimodules `R_w`. For `W` of type `A2` the rings have rank 20 and 25 over
//! `Z[v^±1]`; [`grotring`] realizes them on classes `[R(A)]` of rings of
//! functions on unions of twisted graphs, [`presented`] checks a presentation
//! by three generators, and [`hilbert`] computes Hilbert functions of the
//! `R(A)` directly as an independent oracle. [`characters`] and [`explorer`]
//! cover the `B2` and `A3` computations.
//!
//! Arithmetic is generic over the coefficient ring; the aliases below fix it to
//! arbitrary-precision integers.

pub mod coxeter;
pub mod explorer;
pub mod error;
pub mod grotring;
pub mod laurent;
pub mod linalg;
pub mod presented;
pub mod characters;
pub mod hilbert;
pub mod parse;

use num_bigint::BigInt;

pub use coxeter::{CoxeterGroup, Elem, ElemSet, GroupDescriptor, GroupElement, GroupKind};
pub use error::{Error, Result};
pub use grotring::{BasisClass, Variant};
pub use laurent::{Coefficient, Laurent, Sign};

pub type Integer = BigInt;
pub type LaurentPoly = Laurent<BigInt>;
pub type RingElement = grotring::RingElement<BigInt>;
pub type Ring = grotring::GrothendieckRing<BigInt>;
pub type WordExpr = grotring::GeneratorWordExpr<BigInt>;
pub type AlgebraElement = presented::AlgebraElement<BigInt>;
pub type UngradedCharacter = characters::GroupRing<BigInt>;
