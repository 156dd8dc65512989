//! Galois actions on cyclotomic numbers: `σ_k : ζ_n ↦ ζ_n^k`, conjugate
//! orbits, algebraic norms and total positivity.

use num_traits::One;

use super::cyclotomic::CyclotomicNumber;
use super::sign::{certified_sign, Precision, Sign};
use super::{integers, Rational};
use crate::{Error, Result};

/// The automorphism `σ_k` of `Q(ζ_n)` sending `ζ_n ↦ ζ_n^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisElement {
    k: u64,
    n: u64,
}

impl GaloisElement {
    /// Requires `gcd(k, n) = 1`; `k` is reduced into `1..n`.
    pub fn new(k: i64, n: u64) -> Result<Self> {
        if n <= 1 {
            return Ok(GaloisElement { k: 1, n });
        }
        let k = k.rem_euclid(n as i64) as u64;
        let g = integers::gcd_u64(k, n);
        if g != 1 {
            return Err(Error::NotCoprime { k, n, g });
        }
        Ok(GaloisElement { k, n })
    }

    pub fn residue(&self) -> u64 {
        self.k
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    /// Apply to `x`. The element's conductor must divide the conductor of
    /// `σ`, or vice versa; the action happens at the element's conductor,
    /// where the residue must stay coprime.
    pub fn apply(&self, x: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        let n = x.conductor();
        let k = self.k % n;
        let g = integers::gcd_u64(k, n);
        if n > 1 && g != 1 {
            return Err(Error::NotCoprime { k: self.k, n, g });
        }
        if n == 1 || k == 1 {
            return Ok(x.clone());
        }
        Ok(CyclotomicNumber::from_scattered(
            n,
            x.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(j, c)| (j as u64 * k % n, c.clone())),
        ))
    }
}

/// Apply `σ_k` to `x` at the conductor of `x`.
pub fn galois_apply(k: i64, x: &CyclotomicNumber) -> Result<CyclotomicNumber> {
    GaloisElement::new(k, x.conductor())?.apply(x)
}

/// The orbit of `x` under the full Galois group of its ambient field,
/// with exact duplicates removed (order: increasing residue of first
/// appearance).
pub fn conjugates(x: &CyclotomicNumber) -> Vec<CyclotomicNumber> {
    let n = x.conductor();
    let mut out: Vec<CyclotomicNumber> = Vec::new();
    for k in 1..=n.max(1) {
        if integers::gcd_u64(k, n) != 1 && n > 1 {
            continue;
        }
        let y = galois_apply(k as i64, x).expect("coprime residue");
        if !out.iter().any(|z| z == &y) {
            out.push(y);
        }
        if n == 1 {
            break;
        }
    }
    out
}

/// Field norm of `x` over ℚ (the product over the whole Galois orbit of
/// the ambient field `Q(ζ_n)`, counted with multiplicity).
pub fn algebraic_norm(x: &CyclotomicNumber) -> Rational {
    let n = x.conductor();
    let mut acc = CyclotomicNumber::one(n);
    if n <= 2 {
        return x.to_rational().expect("degree-one field");
    }
    // pair σ_k with σ_{n−k}: the partial products stay real and balanced
    for k in 1..=n / 2 {
        if integers::gcd_u64(k, n) != 1 {
            continue;
        }
        let a = galois_apply(k as i64, x).expect("coprime");
        let b = galois_apply((n - k) as i64, x).expect("coprime");
        acc = &acc * &(&a * &b);
    }
    acc.to_rational()
        .expect("norm of a cyclotomic number is rational")
}

/// True when every Galois conjugate of the totally real `x` is a
/// positive real number.
pub fn is_totally_positive(x: &CyclotomicNumber, prec: Precision) -> Result<bool> {
    for c in conjugates(x) {
        match certified_sign(&c, prec)? {
            Some(Sign::Plus) => continue,
            _ => return Ok(false),
        }
    }
    Ok(true)
}

/// True when the norm is a rational integer.
pub fn norm_is_integral(x: &CyclotomicNumber) -> bool {
    algebraic_norm(x).denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, sqrt_int, CyclotomicNumber};

    #[test]
    fn identity_fixes_everything() {
        let x =
            &CyclotomicNumber::zeta_pow(15, 4) - &CyclotomicNumber::zeta_pow(15, 2).scale(&rat(3));
        assert_eq!(galois_apply(1, &x).unwrap(), x);
    }

    #[test]
    fn sigma_k_on_zeta() {
        let z = CyclotomicNumber::zeta(9);
        assert_eq!(
            galois_apply(4, &z).unwrap(),
            CyclotomicNumber::zeta_pow(9, 4)
        );
        assert!(galois_apply(3, &z).is_err());
    }

    #[test]
    fn composition_law() {
        let x =
            &CyclotomicNumber::zeta_pow(20, 7).scale(&rat(2)) + &CyclotomicNumber::zeta_pow(20, 3);
        for k in [1i64, 3, 7, 9, 11, 13, 17, 19] {
            for l in [3i64, 9, 17] {
                let a = galois_apply(k, &galois_apply(l, &x).unwrap()).unwrap();
                let b = galois_apply(k * l, &x).unwrap();
                assert_eq!(a, b, "k={k} l={l}");
            }
        }
    }

    #[test]
    fn conjugation_is_sigma_minus_one() {
        let x =
            &CyclotomicNumber::zeta_pow(28, 5) + &CyclotomicNumber::zeta_pow(28, 11).scale(&rat(3));
        assert_eq!(x.conjugate(), galois_apply(-1, &x).unwrap());
    }

    #[test]
    fn rationals_are_fixed() {
        let q = CyclotomicNumber::from_rational_at(crate::exact::rat_frac(22, 7), 20);
        assert_eq!(conjugates(&q), vec![q.clone()]);
    }

    #[test]
    fn orbit_of_golden_trace() {
        // ζ5 + ζ5^4 has degree 2 over Q
        let x = &CyclotomicNumber::zeta_pow(5, 1) + &CyclotomicNumber::zeta_pow(5, 4);
        assert_eq!(conjugates(&x).len(), 2);
    }

    #[test]
    fn norm_of_rational_and_root_of_unity() {
        let three = CyclotomicNumber::from_rational_at(rat(3), 7);
        assert_eq!(algebraic_norm(&three), rat(729)); // 3^φ(7)
        let z5 = CyclotomicNumber::zeta(5);
        assert_eq!(algebraic_norm(&z5), rat(1));
    }

    #[test]
    fn sqrt5_norm_and_conjugates() {
        let s = sqrt_int(5);
        assert_eq!(algebraic_norm(&s), rat(25)); // (√5·(−√5))² over Q(ζ5)
        assert_eq!(conjugates(&s).len(), 2);
    }
}
