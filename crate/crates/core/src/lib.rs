//! Rings and fields built from semigroups.
//!
//! Given a semigroup `H`, [`CanonicalSum`] is an element of the ring `R(H)`
//! of formal signed sums of elements of `H`, and for commutative `H`,
//! [`Fraction`] is an element of the field of fractions `F(H)`. Maps out of
//! `H` lift uniquely through both constructions; see [`homlift`].
//!
//! ```
//! use sgr_core::{eval_str, Semigroup};
//!
//! let h = Semigroup::parse("free:a,b").unwrap();
//! let v = eval_str("(a + b)*(a - b)", &h).unwrap();
//! assert_eq!(v.to_string(), "+aa -ab +ba -bb");
//! ```

pub mod error;
pub mod expr;
pub mod formal;
pub mod fraction;
pub mod homlift;
pub mod laws;
pub mod oracle;
pub mod sample;
pub mod semigroup;

pub use error::{Error, Result};
pub use expr::{eval_expr, eval_ring, eval_str, parse_expr, Expr, Value};
pub use formal::{embed_e1, normalize, unit_of, CanonicalSum, FormalSum, Sign, SignedEntry};
pub use fraction::{checked_mul, embed_e2, Fraction};
pub use homlift::{
    check_field_lift, check_ring_hom, check_semigroup_hom, lift_to_field, lift_to_ring, FieldAdapter, Integers,
    RationalFunctions, Rationals, RingAdapter, SemigroupHom,
};
pub use laws::{check_axioms, AxiomConfig, AxiomReport};
pub use sample::rng_from_seed;
pub use semigroup::{validate_cayley, CayleyTable, Element, Semigroup};
