//! Independent reference implementations used to validate the main
//! modules: a brute-force closure for the equivalence of formal sums, the
//! polynomial model of `R(nat+)`, and exhaustive searches over small
//! semigroups.

mod closure;
mod poly;
mod search;

pub use closure::{rewrite_closure_equiv, RewriteClosure};
pub use poly::{from_poly, to_poly, IntPolynomial, RatFunction};
pub use search::{enumerate_semigroups, sums_in_box, zero_divisor_search, zero_divisor_search_in};
