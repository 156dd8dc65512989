//! Exact arithmetic: big rationals, cyclotomic fields, Galois actions,
//! certified signs and elementary number theory.
//!
//! The central type is [`CyclotomicNumber`], an element of `Q(ζ_n)` stored
//! in the power basis `1, ζ_n, …, ζ_n^{φ(n)−1}` reduced modulo the n-th
//! cyclotomic polynomial. The representation is canonical, so the zero
//! test is exact; that zero test is what makes [`certified_sign`] a proof
//! rather than a heuristic. The fixed embedding throughout is
//! `ζ_n = exp(2πi/n)`.

mod cyclotomic;
mod galois;
mod integers;
mod interval;
mod poly;
mod sign;

pub use cyclotomic::{sin_pi_frac, sqrt_int, CyclotomicNumber};
pub use galois::{
    algebraic_norm, conjugates, galois_apply, is_totally_positive, norm_is_integral, GaloisElement,
};
pub use integers::{
    bezout, crt_solve, euler_phi, factorize, gcd_i128, gcd_u64, is_prime, jacobi, lcm_u64,
};
pub use interval::{DyadicInterval, RealEvaluator};
pub use sign::{certified_sign, decimal_string, to_f64_approx, Precision, Sign, SignOrZero};

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

/// Rational from an `i64`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// Rational `n/d`. Panics if `d = 0`.
pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}
