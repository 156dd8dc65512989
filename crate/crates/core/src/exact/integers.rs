//! Elementary number theory on machine integers: gcd/Bezout, CRT,
//! Jacobi symbols, deterministic primality, factorization, φ.

use crate::{Error, Result};

/// Euclidean gcd on `u64`.
pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// gcd on `i128`, always non-negative.
pub fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Least common multiple on `u64`.
pub fn lcm_u64(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u64(a, b) * b
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b) ≥ 0`.
pub fn bezout(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Solve the simultaneous congruences `x ≡ r_i (mod m_i)`.
///
/// Moduli need not be pairwise coprime; incompatible residues are
/// rejected. Returns the canonical residue `0 ≤ x < M` together with the
/// combined modulus `M = lcm(m_i)`.
pub fn crt_solve(residues: &[(i128, i128)]) -> Result<(i128, i128)> {
    let mut x: i128 = 0;
    let mut m: i128 = 1;
    for &(r, n) in residues {
        if n <= 0 {
            return Err(Error::InvalidArgument(format!("nonpositive modulus {n}")));
        }
        let r = r.rem_euclid(n);
        let (g, p, _) = bezout(m, n);
        if (r - x) % g != 0 {
            return Err(Error::IncompatibleResidues(x, r));
        }
        let lcm = m / g * n;
        // x' = x + m * ((r - x)/g * p mod n/g)
        let step = ((r - x) / g % (n / g) * (p % (n / g))).rem_euclid(n / g);
        x = (x + m * step).rem_euclid(lcm);
        m = lcm;
    }
    Ok((x, m))
}

/// Jacobi symbol `(a/m)` for odd positive `m`.
///
/// Returns 0 when `gcd(a, m) > 1`; callers that need a unit must check.
pub fn jacobi(a: i128, m: i128) -> Result<i32> {
    if m <= 0 || m % 2 == 0 {
        return Err(Error::EvenModulus(m));
    }
    let mut a = a.rem_euclid(m);
    let mut m = m;
    let mut sign = 1i32;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if m % 8 == 3 || m % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut m);
        if a % 4 == 3 && m % 4 == 3 {
            sign = -sign;
        }
        a %= m;
    }
    Ok(if m == 1 { sign } else { 0 })
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, m);
        }
        b = mulmod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller–Rabin for `u64` (fixed witness set).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // Sufficient witnesses for all n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization of `n` by trial division, as `(prime, exponent)`
/// pairs in ascending order. Conductors in this crate stay small, so no
/// heavier machinery is warranted.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut out = n;
    for (p, _) in factorize(n) {
        out -= out / p;
    }
    out
}

/// Divisors of `n` in ascending order.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(prev.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}
