//! Dense polynomial helpers for the cyclotomic layer: cyclotomic
//! polynomials over ℤ, reduction modulo a sparse monic polynomial, and a
//! modular (CRT + rational reconstruction) inverse for elements of
//! `Q[x]/Φ_n`. Results of the modular inverse are always re-verified by
//! an exact multiplication in the caller, so the reconstruction itself
//! does not need to be trusted.

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{integers, Integer, Rational};

/// Coefficients of the n-th cyclotomic polynomial Φ_n, ascending degree,
/// monic, degree φ(n).
///
/// Computed by exact division: Φ_n = (x^n − 1) / ∏_{d|n, d<n} Φ_d.
pub(crate) fn cyclotomic_poly(n: u64) -> Vec<Integer> {
    let mut memo: std::collections::HashMap<u64, Vec<Integer>> = std::collections::HashMap::new();
    memo.insert(1, vec![Integer::from(-1), Integer::from(1)]);
    for d in integers::divisors(n) {
        if d == 1 || memo.contains_key(&d) {
            continue;
        }
        // x^d - 1
        let mut num = vec![Integer::zero(); d as usize + 1];
        num[0] = Integer::from(-1);
        num[d as usize] = Integer::one();
        for e in integers::divisors(d) {
            if e < d {
                num = div_exact_int(&num, &memo[&e]);
            }
        }
        memo.insert(d, num);
    }
    memo.remove(&n).expect("divisor loop covers n")
}

/// Exact division of integer polynomials with monic divisor.
fn div_exact_int(num: &[Integer], den: &[Integer]) -> Vec<Integer> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let mut quot = vec![Integer::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = std::mem::replace(&mut rem[k + dd], Integer::zero());
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate().take(dd) {
                if !d.is_zero() {
                    let t = &c * d;
                    rem[k + i] -= t;
                }
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(Integer::is_zero), "division was not exact");
    quot
}

/// Reduce an integer coefficient vector modulo a monic polynomial of
/// degree `deg` given by its sparse lower part `(index, coeff)`.
/// The vector is truncated to length `deg`.
pub(crate) fn reduce_int(coeffs: &mut Vec<Integer>, lower: &[(usize, Integer)], deg: usize) {
    let mut top = coeffs.len();
    while top > deg {
        top -= 1;
        let c = std::mem::replace(&mut coeffs[top], Integer::zero());
        if !c.is_zero() {
            let shift = top - deg;
            for (i, v) in lower {
                let t = &c * v;
                coeffs[shift + i] -= t;
            }
        }
    }
    coeffs.truncate(deg);
    coeffs.resize(deg, Integer::zero());
}

/// Schoolbook product of integer polynomials.
pub(crate) fn mul_int(a: &[Integer], b: &[Integer]) -> Vec<Integer> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Integer::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if !bj.is_zero() {
                out[i + j] += ai * bj;
            }
        }
    }
    out
}

/// Split rational coefficients into an integer vector and a common
/// (positive) denominator.
pub(crate) fn to_common_denominator(coeffs: &[Rational]) -> (Vec<Integer>, Integer) {
    let mut den = Integer::one();
    for c in coeffs {
        let d = c.denom();
        let g = den.gcd(d);
        den = &den / &g * d;
    }
    let ints = coeffs
        .iter()
        .map(|c| c.numer() * (&den / c.denom()))
        .collect();
    (ints, den)
}

// ---- modular inverse machinery ----

fn inv_mod_p(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p
    let mut acc = 1u64;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn poly_mod_p(a: &[Integer], p: u64) -> Vec<u64> {
    let pp = Integer::from(p);
    let mut out: Vec<u64> = a
        .iter()
        .map(|c| {
            let r = c.mod_floor(&pp);
            r.to_u64().expect("residue fits u64")
        })
        .collect();
    while out.last().is_some_and(|&c| c == 0) {
        out.pop();
    }
    out
}

fn poly_divmod_p(num: &mut Vec<u64>, den: &[u64], p: u64) {
    let dd = den.len() - 1;
    let lead_inv = inv_mod_p(den[dd], p);
    while num.len() > dd {
        let top = num.len() - 1;
        let c = ((num[top] as u128 * lead_inv as u128) % p as u128) as u64;
        if c != 0 {
            let shift = top - dd;
            for (i, &d) in den.iter().enumerate().take(dd) {
                let t = (c as u128 * d as u128) % p as u128;
                let cur = num[shift + i] as u128;
                num[shift + i] = ((cur + p as u128 - t) % p as u128) as u64;
            }
        }
        num.pop();
        while num.last().is_some_and(|&x| x == 0) {
            num.pop();
        }
    }
}

/// Inverse of `a` modulo the monic `m` over F_p. `None` when not coprime.
fn poly_inv_mod_p(a: &[u64], m: &[u64], p: u64) -> Option<Vec<u64>> {
    // invariant: s0*a ≡ r0, s1*a ≡ r1  (mod m)
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() && r1.len() > 1 {
        let (q, r) = poly_divmod_full_p(&r0, &r1, p);
        let qs1 = poly_mul_p(&q, &s1, p);
        let s2 = poly_sub_p(&s0, &qs1, p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r1.is_empty() {
        return None; // gcd has positive degree
    }
    let c = inv_mod_p(r1[0], p);
    let mut inv = s1;
    for x in &mut inv {
        *x = ((*x as u128 * c as u128) % p as u128) as u64;
    }
    // reduce mod m to canonical length
    poly_divmod_p(&mut inv, m, p);
    Some(inv)
}

fn poly_divmod_full_p(num: &[u64], den: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![], rem);
    }
    let mut quot = vec![0u64; rem.len() - dd];
    let lead_inv = inv_mod_p(den[dd], p);
    for k in (0..quot.len()).rev() {
        let c = ((rem[k + dd] as u128 * lead_inv as u128) % p as u128) as u64;
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                let t = (c as u128 * d as u128) % p as u128;
                let cur = rem[k + i] as u128;
                rem[k + i] = ((cur + p as u128 - t) % p as u128) as u64;
            }
        }
    }
    while rem.last().is_some_and(|&x| x == 0) {
        rem.pop();
    }
    (quot, rem)
}

fn poly_mul_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            let t = (ai as u128 * bj as u128 + out[i + j] as u128) % p as u128;
            out[i + j] = t as u64;
        }
    }
    while out.last().is_some_and(|&x| x == 0) {
        out.pop();
    }
    out
}

#[allow(clippy::needless_range_loop)]
fn poly_sub_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for i in 0..n {
        let av = a.get(i).copied().unwrap_or(0) as u128;
        let bv = b.get(i).copied().unwrap_or(0) as u128;
        out[i] = ((av + p as u128 - bv) % p as u128) as u64;
    }
    while out.last().is_some_and(|&x| x == 0) {
        out.pop();
    }
    out
}

/// Rational reconstruction of `c (mod m)`: a fraction `a/b` with
/// `|a|, b ≤ √(m/2)` and `a ≡ c·b (mod m)`, if one exists.
fn rational_reconstruct(c: &Integer, m: &Integer) -> Option<Rational> {
    let bound = (m / Integer::from(2)).sqrt();
    let mut r0 = m.clone();
    let mut r1 = c.clone();
    let mut t0 = Integer::zero();
    let mut t1 = Integer::one();
    while r1.abs() > bound {
        if r1.is_zero() {
            return None;
        }
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if t1.is_negative() {
        r1 = -r1;
        t1 = -t1;
    }
    Some(Rational::new(r1, t1))
}

/// Candidate inverse of the integer polynomial `a` in `Q[x]/(m)`, where
/// `m` is monic with the given sparse lower part, computed modulo a batch
/// of word-size primes and lifted by CRT + rational reconstruction.
///
/// The caller must verify the candidate with an exact multiplication and
/// retry with a larger `num_primes` on failure.
pub(crate) fn modular_inverse_candidate(
    a: &[Integer],
    m_full: &[Integer],
    num_primes: usize,
) -> Option<Vec<Rational>> {
    let deg = m_full.len() - 1;
    let mut primes = Vec::with_capacity(num_primes);
    let mut cand = (1u64 << 62) - 1;
    while primes.len() < num_primes {
        if integers::is_prime(cand) {
            primes.push(cand);
        }
        cand -= 2;
    }

    let mut modulus = Integer::one();
    let mut residues: Vec<Integer> = vec![Integer::zero(); deg];
    let mut used = 0usize;
    for &p in &primes {
        let ap = poly_mod_p(a, p);
        if ap.is_empty() {
            continue; // p divides every coefficient; useless prime
        }
        let mp = poly_mod_p(m_full, p);
        if mp.len() != deg + 1 {
            continue;
        }
        let Some(inv) = poly_inv_mod_p(&ap, &mp, p) else {
            continue; // p divides the norm of a
        };
        // CRT merge
        let pp = Integer::from(p);
        let (_, u, _) = big_bezout(&modulus, &pp);
        for (j, r) in residues.iter_mut().enumerate() {
            let vj = Integer::from(inv.get(j).copied().unwrap_or(0));
            // x ≡ r (mod modulus), x ≡ vj (mod p)
            let diff = (&vj - &*r).mod_floor(&pp);
            let t = (diff * &u).mod_floor(&pp);
            *r += &modulus * t;
        }
        modulus *= pp;
        used += 1;
    }
    if used == 0 {
        return None;
    }
    let mut out = Vec::with_capacity(deg);
    for r in &residues {
        out.push(rational_reconstruct(r, &modulus)?);
    }
    Some(out)
}

fn big_bezout(a: &Integer, b: &Integer) -> (Integer, Integer, Integer) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (Integer::one(), Integer::zero());
    let (mut y0, mut y1) = (Integer::zero(), Integer::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let x2 = &x0 - &q * &x1;
        let y2 = &y0 - &q * &y1;
        r0 = std::mem::replace(&mut r1, r2);
        x0 = std::mem::replace(&mut x1, x2);
        y0 = std::mem::replace(&mut y1, y2);
    }
    (r0, x0, y0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn phi_as_i64(n: u64) -> Vec<i64> {
        cyclotomic_poly(n)
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn cyclotomic_polys_small() {
        assert_eq!(phi_as_i64(1), vec![-1, 1]);
        assert_eq!(phi_as_i64(2), vec![1, 1]);
        assert_eq!(phi_as_i64(3), vec![1, 1, 1]);
        assert_eq!(phi_as_i64(4), vec![1, 0, 1]);
        assert_eq!(phi_as_i64(6), vec![1, -1, 1]);
        assert_eq!(phi_as_i64(12), vec![1, 0, -1, 0, 1]);
        // first index with a coefficient outside {-1,0,1}
        assert_eq!(phi_as_i64(105)[7], -2);
    }

    #[test]
    fn cyclotomic_degree_is_phi() {
        for n in 1..=120u64 {
            assert_eq!(
                cyclotomic_poly(n).len() as u64 - 1,
                integers::euler_phi(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn modular_inverse_roundtrip() {
        // invert 1 + 2x in Q[x]/Φ_7 and check by multiplication mod Φ_7
        let m = cyclotomic_poly(7);
        let a = vec![Integer::from(1), Integer::from(2)];
        let inv = modular_inverse_candidate(&a, &m, 8).unwrap();
        let (ints, den) = to_common_denominator(&inv);
        let mut prod = mul_int(&a, &ints);
        let lower: Vec<(usize, Integer)> = m[..m.len() - 1]
            .iter()
            .cloned()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        reduce_int(&mut prod, &lower, 6);
        assert_eq!(prod[0], den);
        assert!(prod[1..].iter().all(Integer::is_zero));
    }
}
