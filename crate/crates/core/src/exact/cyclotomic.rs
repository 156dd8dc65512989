//! Elements of cyclotomic fields `Q(ζ_n)` in the power basis reduced
//! modulo Φ_n, with exact arithmetic over big rationals.
//!
//! The power basis modulo Φ_n makes the representation canonical: an
//! element is zero iff every coefficient is zero. Mixed-conductor
//! arithmetic embeds both operands into the lcm conductor and leaves the
//! result there; [`CyclotomicNumber::minimize_conductor`] is available
//! when a smaller field is wanted, but nothing calls it implicitly.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use super::{integers, poly, Integer, Rational};
use crate::{Error, Result};

/// Cached per-conductor data: φ(n) and Φ_n.
pub(crate) struct CycloTable {
    pub phi: usize,
    /// Full coefficients of Φ_n (monic, ascending).
    pub full: Vec<Integer>,
    /// Sparse lower part of Φ_n: nonzero `(index, coeff)` below the
    /// leading term, as used by the reduction loop.
    pub lower: Vec<(usize, Integer)>,
}

fn tables() -> &'static Mutex<HashMap<u64, Arc<CycloTable>>> {
    static TABLES: OnceLock<Mutex<HashMap<u64, Arc<CycloTable>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

pub(crate) fn table(n: u64) -> Arc<CycloTable> {
    assert!(n >= 1, "conductor must be positive");
    if let Some(t) = tables().lock().unwrap().get(&n) {
        return Arc::clone(t);
    }
    // build outside the lock; a racing duplicate build is harmless
    let full = poly::cyclotomic_poly(n);
    let phi = full.len() - 1;
    let lower: Vec<(usize, Integer)> = full[..phi]
        .iter()
        .cloned()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let t = Arc::new(CycloTable { phi, full, lower });
    let mut guard = tables().lock().unwrap();
    Arc::clone(guard.entry(n).or_insert(t))
}

/// An exact element of `Q(ζ_n)` with `ζ_n = exp(2πi/n)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    conductor: u64,
    /// Length φ(n), coordinates in the basis `ζ_n^0 … ζ_n^{φ(n)−1}`.
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    /// Zero at the given conductor.
    pub fn zero(conductor: u64) -> Self {
        let t = table(conductor);
        CyclotomicNumber {
            conductor,
            coeffs: vec![Rational::zero(); t.phi],
        }
    }

    /// One at the given conductor.
    pub fn one(conductor: u64) -> Self {
        Self::from_rational_at(Rational::one(), conductor)
    }

    /// A rational number, represented at conductor 1.
    pub fn from_rational(r: Rational) -> Self {
        Self::from_rational_at(r, 1)
    }

    /// A rational number represented at the given conductor.
    pub fn from_rational_at(r: Rational, conductor: u64) -> Self {
        let mut x = Self::zero(conductor);
        x.coeffs[0] = r;
        x
    }

    /// An integer represented at conductor 1.
    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::rat(n))
    }

    /// The primitive root of unity `ζ_n`.
    pub fn zeta(n: u64) -> Self {
        Self::zeta_pow(n, 1)
    }

    /// `ζ_n^e` for any integer exponent (reduced mod n).
    pub fn zeta_pow(n: u64, e: i64) -> Self {
        let e = e.rem_euclid(n as i64) as usize;
        let t = table(n);
        if e < t.phi {
            let mut x = Self::zero(n);
            x.coeffs[e] = Rational::one();
            return x;
        }
        let mut ints = vec![Integer::zero(); e + 1];
        ints[e] = Integer::one();
        poly::reduce_int(&mut ints, &t.lower, t.phi);
        CyclotomicNumber {
            conductor: n,
            coeffs: ints.into_iter().map(Rational::from_integer).collect(),
        }
    }

    /// Build from coefficients in the power basis; the vector is reduced
    /// modulo Φ_n, so any length is accepted.
    pub fn from_coeffs(conductor: u64, coeffs: Vec<Rational>) -> Self {
        let t = table(conductor);
        if coeffs.len() <= t.phi {
            let mut c = coeffs;
            c.resize(t.phi, Rational::zero());
            return CyclotomicNumber {
                conductor,
                coeffs: c,
            };
        }
        let (mut ints, den) = poly::to_common_denominator(&coeffs);
        poly::reduce_int(&mut ints, &t.lower, t.phi);
        CyclotomicNumber {
            conductor,
            coeffs: ints
                .into_iter()
                .map(|i| Rational::new(i, den.clone()))
                .collect(),
        }
    }

    /// Accumulate scattered `ζ_n^e` terms and reduce once.
    pub(crate) fn from_scattered<I>(conductor: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (u64, Rational)>,
    {
        let mut dense = vec![Rational::zero(); conductor as usize];
        for (e, c) in terms {
            dense[(e % conductor) as usize] += c;
        }
        Self::from_coeffs(conductor, dense)
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree φ(n) of the ambient field.
    pub fn phi(&self) -> usize {
        self.coeffs.len()
    }

    /// Exact zero test (the representation is canonical).
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// True when the element lies in ℚ as represented (all basis
    /// coordinates above the constant vanish).
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, when [`Self::is_rational`] holds.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Represent the same number at a larger conductor `m` (requires
    /// `n | m`).
    pub fn embed(&self, m: u64) -> Result<Self> {
        if m % self.conductor != 0 {
            return Err(Error::ConductorNotDivisible {
                src: self.conductor,
                dst: m,
            });
        }
        if m == self.conductor {
            return Ok(self.clone());
        }
        let step = m / self.conductor;
        Ok(Self::from_scattered(
            m,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (j as u64 * step, c.clone())),
        ))
    }

    /// Lift two elements to their common (lcm) conductor.
    pub fn lift_pair(a: &Self, b: &Self) -> (Self, Self) {
        if a.conductor == b.conductor {
            return (a.clone(), b.clone());
        }
        let m = integers::lcm_u64(a.conductor, b.conductor);
        (
            a.embed(m).expect("lcm is a multiple"),
            b.embed(m).expect("lcm is a multiple"),
        )
    }

    /// Complex conjugate (the Galois action of `−1`).
    pub fn conjugate(&self) -> Self {
        if self.conductor <= 2 {
            return self.clone();
        }
        let n = self.conductor;
        Self::from_scattered(
            n,
            self.coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| ((n - j as u64 % n) % n, c.clone())),
        )
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse.
    ///
    /// Computed modulo word-size primes, lifted by CRT and rational
    /// reconstruction, then re-verified by one exact multiplication, so
    /// the result is unconditionally correct.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational_at(r.recip(), self.conductor));
        }
        let t = table(self.conductor);
        let (ints, den) = poly::to_common_denominator(&self.coeffs);
        let max_bits = ints.iter().map(|c| c.bits()).max().unwrap_or(0) + den.bits();
        let mut num_primes = (max_bits as usize / 60 + 4).max(4);
        loop {
            if let Some(candidate) = poly::modular_inverse_candidate(&ints, &t.full, num_primes) {
                // inverse of self = den * inverse(ints)
                let inv = CyclotomicNumber {
                    conductor: self.conductor,
                    coeffs: candidate
                        .into_iter()
                        .map(|c| c * Rational::from_integer(den.clone()))
                        .collect(),
                };
                let check = self * &inv;
                if check.is_one() {
                    return Ok(inv);
                }
            }
            num_primes *= 2;
            assert!(
                num_primes < (1 << 20),
                "modular inverse did not stabilize; conductor {}",
                self.conductor
            );
        }
    }

    fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// Exact division.
    pub fn try_div(&self, rhs: &Self) -> Result<Self> {
        let inv = rhs.inv()?;
        let (a, b) = Self::lift_pair(self, &inv);
        Ok(&a * &b)
    }

    /// Integer power; negative exponents require invertibility.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        let mut acc = Self::one(self.conductor);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Re-express at the smallest divisor conductor that contains the
    /// element. This pass is explicit and optional; arithmetic never
    /// minimizes implicitly.
    pub fn minimize_conductor(&self) -> Self {
        let n = self.conductor;
        for m in integers::divisors(n) {
            if m == n {
                break;
            }
            if let Some(c) = self.solve_at_subconductor(m) {
                return c;
            }
        }
        self.clone()
    }

    /// Try to write `self` in the power basis of `Q(ζ_m)` for `m | n` by
    /// solving the exact linear system of the embedding.
    #[allow(clippy::needless_range_loop)]
    fn solve_at_subconductor(&self, m: u64) -> Option<CyclotomicNumber> {
        let tm = table(m);
        let step = self.conductor / m;
        let rows = self.coeffs.len();
        let cols = tm.phi;
        // augmented matrix [E | x], columns = embedded basis vectors
        let mut aug: Vec<Vec<Rational>> = vec![vec![Rational::zero(); cols + 1]; rows];
        for j in 0..cols {
            let base = Self::zeta_pow(self.conductor, (j as u64 * step) as i64);
            for i in 0..rows {
                aug[i][j] = base.coeffs[i].clone();
            }
        }
        for i in 0..rows {
            aug[i][cols] = self.coeffs[i].clone();
        }
        // exact Gaussian elimination
        let mut pivot_row = 0usize;
        let mut pivots = Vec::new();
        for col in 0..cols {
            let Some(r) = (pivot_row..rows).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(pivot_row, r);
            let inv = aug[pivot_row][col].clone().recip();
            for v in aug[pivot_row].iter_mut() {
                *v *= &inv;
            }
            for r2 in 0..rows {
                if r2 != pivot_row && !aug[r2][col].is_zero() {
                    let f = aug[r2][col].clone();
                    for c2 in col..=cols {
                        let t = &aug[pivot_row][c2] * &f;
                        aug[r2][c2] -= t;
                    }
                }
            }
            pivots.push((pivot_row, col));
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        // consistency: rows beyond pivots must be all-zero
        for r in pivot_row..rows {
            if !aug[r][cols].is_zero() {
                return None;
            }
        }
        let mut sol = vec![Rational::zero(); cols];
        for &(r, c) in &pivots {
            sol[c] = aug[r][cols].clone();
        }
        Some(CyclotomicNumber {
            conductor: m,
            coeffs: sol,
        })
    }
}

impl PartialEq for CyclotomicNumber {
    /// Semantic equality: compared after embedding into the lcm conductor.
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::lift_pair(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl std::ops::Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Add for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: Self) -> CyclotomicNumber {
        let (mut a, b) = CyclotomicNumber::lift_pair(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }
}

impl std::ops::Sub for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: Self) -> CyclotomicNumber {
        let (mut a, b) = CyclotomicNumber::lift_pair(self, rhs);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }
}

impl std::ops::Mul for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: Self) -> CyclotomicNumber {
        let (a, b) = CyclotomicNumber::lift_pair(self, rhs);
        let t = table(a.conductor);
        let (ai, ad) = poly::to_common_denominator(&a.coeffs);
        let (bi, bd) = poly::to_common_denominator(&b.coeffs);
        let mut prod = poly::mul_int(&ai, &bi);
        poly::reduce_int(&mut prod, &t.lower, t.phi);
        let den = ad * bd;
        CyclotomicNumber {
            conductor: a.conductor,
            coeffs: prod
                .into_iter()
                .map(|c| Rational::new(c, den.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.conductor;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if j == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if j == 1 {
                    write!(f, "z{n}")?;
                } else {
                    write!(f, "z{n}^{j}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber({self})")
    }
}

/// Exact `sin(jπ/m)` as an element of `Q(ζ_l)` with `l = lcm(2m, 4)`,
/// from `sin(t) = (e^{it} − e^{−it})/2i`.
pub fn sin_pi_frac(j: i64, m: u64) -> CyclotomicNumber {
    assert!(m >= 1);
    let n = integers::lcm_u64(2 * m, 4);
    let step = (n / (2 * m)) as i64;
    let plus = CyclotomicNumber::zeta_pow(n, j * step);
    let minus = CyclotomicNumber::zeta_pow(n, -j * step);
    let diff = &plus - &minus;
    // 1/(2i) = -ζ_n^{n/4} / 2
    let inv_2i = CyclotomicNumber::zeta_pow(n, (n / 4) as i64).scale(&super::rat_frac(-1, 2));
    &diff * &inv_2i
}

/// The positive square root of a non-negative integer `m` as an exact
/// cyclotomic number.
///
/// Square factors come out as integers; each odd prime in the squarefree
/// part contributes its quadratic Gauss sum (`√p` for `p ≡ 1 (mod 4)`,
/// `√p = −i·g_p` at conductor 4p for `p ≡ 3 (mod 4)`), and the prime 2
/// contributes `ζ_8 + ζ_8^{−1}`.
pub fn sqrt_int(m: u64) -> CyclotomicNumber {
    if m == 0 {
        return CyclotomicNumber::zero(1);
    }
    let mut rational_part = Integer::one();
    let mut out = CyclotomicNumber::one(1);
    for (p, e) in integers::factorize(m) {
        rational_part *= Integer::from(p).pow(e / 2);
        if e % 2 == 1 {
            let factor = if p == 2 {
                &CyclotomicNumber::zeta_pow(8, 1) + &CyclotomicNumber::zeta_pow(8, -1)
            } else {
                sqrt_odd_prime(p)
            };
            out = &out * &factor;
        }
    }
    out.scale(&Rational::from_integer(rational_part))
}

fn sqrt_odd_prime(p: u64) -> CyclotomicNumber {
    // quadratic Gauss sum g_p = Σ_a (a/p) ζ_p^a
    let g = CyclotomicNumber::from_scattered(
        p,
        (1..p).map(|a| {
            let s = integers::jacobi(a as i128, p as i128).expect("odd prime");
            (a, super::rat(s as i64))
        }),
    );
    if p % 4 == 1 {
        g // g_p = √p
    } else {
        // g_p = i√p, so √p = −i·g_p at conductor 4p
        let g4 = g.embed(4 * p).expect("p | 4p");
        let minus_i = CyclotomicNumber::zeta_pow(4 * p, 3 * p as i64);
        &g4 * &minus_i
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_frac};

    #[test]
    fn zeta4_squared_is_minus_one() {
        let i = CyclotomicNumber::zeta(4);
        assert_eq!(&i * &i, CyclotomicNumber::from_int(-1));
    }

    #[test]
    fn additive_identity() {
        let x =
            &CyclotomicNumber::zeta_pow(7, 3) + &CyclotomicNumber::from_rational(rat_frac(2, 3));
        let z = CyclotomicNumber::zero(7);
        assert_eq!(&x + &z, x);
    }

    #[test]
    fn product_of_conjugate_pairs_in_q7() {
        // (ζ7 + ζ7^6)(ζ7^2 + ζ7^5) = ζ7 + ζ7^3 + ζ7^4 + ζ7^6
        let a = &CyclotomicNumber::zeta_pow(7, 1) + &CyclotomicNumber::zeta_pow(7, 6);
        let b = &CyclotomicNumber::zeta_pow(7, 2) + &CyclotomicNumber::zeta_pow(7, 5);
        let expect = [1i64, 3, 4, 6]
            .iter()
            .fold(CyclotomicNumber::zero(7), |acc, &e| {
                &acc + &CyclotomicNumber::zeta_pow(7, e)
            });
        assert_eq!(&a * &b, expect);
    }

    #[test]
    fn embed_known_values() {
        let m1 = CyclotomicNumber::from_int(-1);
        assert_eq!(m1.embed(14).unwrap(), CyclotomicNumber::zeta_pow(14, 7));
        let z3 = CyclotomicNumber::zeta(3);
        assert_eq!(z3.embed(12).unwrap(), CyclotomicNumber::zeta_pow(12, 4));
        assert!(z3.embed(8).is_err());
    }

    #[test]
    fn embedding_commutes_with_arithmetic() {
        let a = &CyclotomicNumber::zeta_pow(6, 1).scale(&rat(3)) - &CyclotomicNumber::from_int(2);
        let b =
            &CyclotomicNumber::zeta_pow(4, 1) + &CyclotomicNumber::from_rational(rat_frac(1, 5));
        let direct = &a * &b;
        let lifted = &a.embed(24).unwrap() * &b.embed(24).unwrap();
        assert_eq!(direct, lifted);
        assert_eq!(direct.embed(48).unwrap(), lifted.embed(48).unwrap());
    }

    #[test]
    fn inverse_roundtrip() {
        let x = &CyclotomicNumber::zeta_pow(20, 3).scale(&rat_frac(7, 2))
            - &CyclotomicNumber::zeta_pow(20, 17).scale(&rat(4));
        let inv = x.inv().unwrap();
        assert_eq!(&x * &inv, CyclotomicNumber::one(20));
        assert!(CyclotomicNumber::zero(5).inv().is_err());
    }

    #[test]
    fn sin_pi_frac_values() {
        assert_eq!(sin_pi_frac(1, 2), CyclotomicNumber::from_int(1));
        assert_eq!(
            sin_pi_frac(1, 6),
            CyclotomicNumber::from_rational(rat_frac(1, 2))
        );
        assert_eq!(sin_pi_frac(0, 9), CyclotomicNumber::zero(36));
        // reflection symmetry at a few (j, m)
        for (j, m) in [(1u64, 5u64), (2, 7), (3, 11), (5, 12)] {
            assert_eq!(sin_pi_frac(j as i64, m), sin_pi_frac((m - j) as i64, m));
        }
    }

    #[test]
    fn sqrt_int_squares_back() {
        for m in [1u64, 2, 3, 4, 5, 12, 45, 49, 101] {
            let s = sqrt_int(m);
            assert_eq!(&s * &s, CyclotomicNumber::from_int(m as i64), "m = {m}");
        }
        assert_eq!(sqrt_int(1), CyclotomicNumber::from_int(1));
        assert_eq!(sqrt_int(4), CyclotomicNumber::from_int(2));
    }

    #[test]
    fn minimize_conductor_finds_subfield() {
        let d1 = CyclotomicNumber::from_scattered(
            7,
            [
                (1u64, rat(28)),
                (6, rat(28)),
                (2, rat(14)),
                (5, rat(14)),
                (0, rat(33)),
            ],
        );
        let lifted = d1.embed(28).unwrap();
        let min = lifted.minimize_conductor();
        assert_eq!(min.conductor(), 7);
        assert_eq!(min, d1);
        // a primitive 28th root does not minimize
        let z = CyclotomicNumber::zeta(28);
        assert_eq!(z.minimize_conductor().conductor(), 28);
    }

    #[test]
    fn display_reads_naturally() {
        let x = &CyclotomicNumber::zeta_pow(7, 2).scale(&rat(-3)) + &CyclotomicNumber::from_int(5);
        assert_eq!(x.to_string(), "5 - 3*z7^2");
    }
}
