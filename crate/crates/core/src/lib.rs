//! Exact arithmetic for the splitting of rational primes in orders of number fields.
//!
//! The crate connects the factorization of a monic integer polynomial modulo a
//! prime `p` with the factorization of `p` into prime ideals:
//!
//! * [`fppoly`]: polynomials over a prime field, factorization and counts of
//!   irreducibles.
//! * [`zpoly`]: integer polynomials, discriminants and the cofactor polynomial
//!   `M` with `F = Π Pᵢ^eᵢ − p·M`.
//! * [`criteria`]: the index-divisibility test, prime splitting from a
//!   polynomial, and the common-index-divisor supply test.
//! * [`orders`]: orders given by multiplication tables, characteristic
//!   polynomials, element indices and p-maximal enlargement.
//! * [`ideals`]: ideals as Hermite-normal-form lattices, products, norms,
//!   valuations, brute-force factorization of `p·O` and CRT generators.
//! * [`indexform`]: the symbolic index form and its common value divisors.

pub mod criteria;
mod error;
pub mod examples;
pub mod fppoly;
pub mod ideals;
pub mod indexform;
pub mod lattice;
mod modp;
pub mod orders;
pub mod polytext;
pub mod zpoly;

pub use criteria::{
    assign_prime_functions, common_index_divisor, factor_prime_via_polynomial, index_divisible,
    CommonIndexReport, IndexVerdict, PrimeIdealSymbol, ShapePart, SplittingShape,
};
pub use error::{Error, Result};
pub use fppoly::{
    count_monic_irreducibles, enumerate_monic_irreducibles, FpPoly, MonicIrreducibles,
    PrimeModulus,
};
pub use ideals::{crt_good_generator, factor_p_in_order, LatticeIdeal, PrimeFactor};
pub use indexform::{common_value_divisor, index_form, MultiPoly};
pub use orders::{cubic_family, maximal_order, p_enlarge, CubicFamily, MaximalOrder, Order, OrderElement};
pub use zpoly::ZPoly;
