//! Arbitrary-precision dyadic interval arithmetic with directed
//! rounding, used to certify signs and print decimals of exact
//! cyclotomic numbers. Nothing here is trusted for equalities — only
//! for separating a provably nonzero real number from zero.

use num_traits::{Signed, ToPrimitive, Zero};

use super::cyclotomic::CyclotomicNumber;
use super::{Integer, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Dir {
    Down,
    Up,
}

/// Exact dyadic number `mant · 2^exp`.
#[derive(Debug, Clone)]
pub(crate) struct Dyadic {
    mant: Integer,
    exp: i64,
}

impl Dyadic {
    fn zero() -> Self {
        Dyadic {
            mant: Integer::zero(),
            exp: 0,
        }
    }

    fn from_int(n: i64) -> Self {
        Dyadic {
            mant: Integer::from(n),
            exp: 0,
        }
    }

    fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    fn neg(&self) -> Self {
        Dyadic {
            mant: -&self.mant,
            exp: self.exp,
        }
    }

    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.exp >= other.exp {
            let shift = (self.exp - other.exp) as usize;
            Dyadic {
                mant: (&self.mant << shift) + &other.mant,
                exp: other.exp,
            }
        } else {
            other.add(self)
        }
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        Dyadic {
            mant: &self.mant * &other.mant,
            exp: self.exp + other.exp,
        }
    }

    /// Keep at most `prec` mantissa bits, rounding in the given direction.
    fn round(&self, prec: u32, dir: Dir) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = (bits - prec as u64) as usize;
        let floor = &self.mant >> shift;
        let rem = &self.mant - (&floor << shift);
        let mant = match dir {
            Dir::Down => floor,
            Dir::Up => {
                if rem.is_zero() {
                    floor
                } else {
                    floor + 1
                }
            }
        };
        Dyadic {
            mant,
            exp: self.exp + shift as i64,
        }
    }

    /// `num/den` rounded to `prec` bits in the given direction
    /// (`den > 0`).
    fn from_ratio(num: &Integer, den: &Integer, prec: u32, dir: Dir) -> Self {
        if num.is_zero() {
            return Dyadic::zero();
        }
        let scale = prec as i64 + 8 + den.bits() as i64 - num.bits() as i64;
        let scaled = if scale >= 0 {
            num << scale as usize
        } else {
            // value has far more integer bits than prec; still exact here,
            // rounding happens below
            num.clone()
        };
        let eff_scale = if scale >= 0 { scale } else { 0 };
        let (q, r) = num_integer::Integer::div_mod_floor(&scaled, den);
        let mant = match dir {
            Dir::Down => q,
            Dir::Up => {
                if r.is_zero() {
                    q
                } else {
                    q + 1
                }
            }
        };
        Dyadic {
            mant,
            exp: -eff_scale,
        }
        .round(prec + 8, dir)
    }

    fn from_rational(r: &Rational, prec: u32, dir: Dir) -> Self {
        Self::from_ratio(r.numer(), r.denom(), prec, dir)
    }

    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let diff = self.sub(other);
        if diff.mant.is_zero() {
            std::cmp::Ordering::Equal
        } else if diff.mant.is_positive() {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Less
        }
    }

    fn sign_num(&self) -> i32 {
        if self.mant.is_zero() {
            0
        } else if self.mant.is_positive() {
            1
        } else {
            -1
        }
    }

    fn to_f64(&self) -> f64 {
        let bits = self.mant.bits();
        if bits == 0 {
            return 0.0;
        }
        if bits <= 53 {
            return self.mant.to_f64().unwrap_or(0.0) * 2f64.powi(self.exp as i32);
        }
        let shift = (bits - 53) as usize;
        let top = (&self.mant >> shift).to_f64().unwrap_or(0.0);
        top * 2f64.powi((self.exp + shift as i64) as i32)
    }

    fn to_rational(&self) -> Rational {
        let two = Integer::from(2);
        if self.exp >= 0 {
            Rational::from_integer(&self.mant * two.pow(self.exp as u32))
        } else {
            Rational::new(self.mant.clone(), two.pow((-self.exp) as u32))
        }
    }
}

/// Closed interval `[lo, hi]` with dyadic endpoints; all operations
/// round outward at the working precision.
#[derive(Debug, Clone)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
}

impl DyadicInterval {
    fn point(d: Dyadic) -> Self {
        DyadicInterval {
            lo: d.clone(),
            hi: d,
        }
    }

    fn zero() -> Self {
        Self::point(Dyadic::zero())
    }

    fn from_int(n: i64) -> Self {
        Self::point(Dyadic::from_int(n))
    }

    fn from_rational(r: &Rational, prec: u32) -> Self {
        DyadicInterval {
            lo: Dyadic::from_rational(r, prec, Dir::Down),
            hi: Dyadic::from_rational(r, prec, Dir::Up),
        }
    }

    fn add(&self, other: &Self, prec: u32) -> Self {
        DyadicInterval {
            lo: self.lo.add(&other.lo).round(prec, Dir::Down),
            hi: self.hi.add(&other.hi).round(prec, Dir::Up),
        }
    }

    fn sub(&self, other: &Self, prec: u32) -> Self {
        DyadicInterval {
            lo: self.lo.sub(&other.hi).round(prec, Dir::Down),
            hi: self.hi.sub(&other.lo).round(prec, Dir::Up),
        }
    }

    fn neg(&self) -> Self {
        DyadicInterval {
            lo: self.hi.neg(),
            hi: self.lo.neg(),
        }
    }

    fn mul(&self, other: &Self, prec: u32) -> Self {
        let products = [
            self.lo.mul(&other.lo),
            self.lo.mul(&other.hi),
            self.hi.mul(&other.lo),
            self.hi.mul(&other.hi),
        ];
        let mut lo = products[0].clone();
        let mut hi = products[0].clone();
        for p in &products[1..] {
            if p.cmp(&lo) == std::cmp::Ordering::Less {
                lo = p.clone();
            }
            if p.cmp(&hi) == std::cmp::Ordering::Greater {
                hi = p.clone();
            }
        }
        DyadicInterval {
            lo: lo.round(prec, Dir::Down),
            hi: hi.round(prec, Dir::Up),
        }
    }

    /// Divide by a positive machine integer.
    fn div_u64(&self, d: u64, prec: u32) -> Self {
        let den = Integer::from(d);
        DyadicInterval {
            lo: Dyadic::from_ratio(&self.lo.mant, &den, prec, Dir::Down)
                .mul(&Dyadic {
                    mant: Integer::from(1),
                    exp: self.lo.exp,
                })
                .round(prec, Dir::Down),
            hi: Dyadic::from_ratio(&self.hi.mant, &den, prec, Dir::Up)
                .mul(&Dyadic {
                    mant: Integer::from(1),
                    exp: self.hi.exp,
                })
                .round(prec, Dir::Up),
        }
    }

    /// Multiply by an exact rational.
    fn scale_rat(&self, r: &Rational, prec: u32) -> Self {
        self.mul(&Self::from_rational(r, prec + 8), prec)
    }

    fn abs_hi(&self) -> Dyadic {
        let a = self.lo.neg();
        if a.cmp(&self.hi) == std::cmp::Ordering::Greater {
            a
        } else {
            self.hi.clone()
        }
    }

    /// Widen symmetrically by `±b` (b ≥ 0).
    fn widen(&self, b: &Dyadic, prec: u32) -> Self {
        DyadicInterval {
            lo: self.lo.sub(b).round(prec, Dir::Down),
            hi: self.hi.add(b).round(prec, Dir::Up),
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.lo.sign_num() <= 0 && self.hi.sign_num() >= 0
    }

    /// +1 / −1 when the interval is strictly on one side of zero.
    pub fn determined_sign(&self) -> Option<i32> {
        if self.lo.sign_num() > 0 {
            Some(1)
        } else if self.hi.sign_num() < 0 {
            Some(-1)
        } else {
            None
        }
    }

    pub fn midpoint_f64(&self) -> f64 {
        (self.lo.to_f64() + self.hi.to_f64()) / 2.0
    }

    pub(crate) fn midpoint_rational(&self) -> Rational {
        (self.lo.to_rational() + self.hi.to_rational()) / Rational::from_integer(Integer::from(2))
    }

    pub(crate) fn width_rational(&self) -> Rational {
        self.hi.sub(&self.lo).to_rational()
    }

    /// `max(|lo|, |hi|)` as an exact rational.
    pub(crate) fn mag_rational(&self) -> Rational {
        self.abs_hi().to_rational()
    }
}

/// Enclosure of π by a Machin formula with alternating-series bounds.
fn pi_interval(prec: u32) -> DyadicInterval {
    let wp = prec + 24;
    let a5 = arctan_recip(5, wp);
    let a239 = arctan_recip(239, wp);
    let sixteen = DyadicInterval::from_int(16);
    let four = DyadicInterval::from_int(4);
    sixteen.mul(&a5, wp).sub(&four.mul(&a239, wp), wp)
}

/// arctan(1/x) for integer x ≥ 2: alternating series with the first
/// omitted term as the remainder bound.
fn arctan_recip(x: u64, prec: u32) -> DyadicInterval {
    let wp = prec + 16;
    let x2 = Integer::from(x) * Integer::from(x);
    let mut power = Integer::from(x); // x^(2k+1)
    let mut acc = DyadicInterval::zero();
    let mut k = 0u64;
    loop {
        let den = &power * Integer::from(2 * k + 1);
        let term = DyadicInterval {
            lo: Dyadic::from_ratio(&Integer::from(1), &den, wp, Dir::Down),
            hi: Dyadic::from_ratio(&Integer::from(1), &den, wp, Dir::Up),
        };
        // magnitude cutoff: term < 2^-wp
        if term.hi.mant.bits() as i64 + term.hi.exp < -(wp as i64) {
            return acc.widen(&term.hi, wp);
        }
        acc = if k % 2 == 0 {
            acc.add(&term, wp)
        } else {
            acc.sub(&term, wp)
        };
        power *= &x2;
        k += 1;
    }
}

/// cos and sin of `2π·f` for an exact rational `f`, by octant reduction
/// and Taylor series on `[0, π/4]`.
pub(crate) fn cos_sin_2pi(f: &Rational, prec: u32) -> (DyadicInterval, DyadicInterval) {
    let wp = prec + 24;
    // reduce f mod 1 into [0, 1)
    let floor = f.floor();
    let f = f - floor;
    let four = Rational::from_integer(Integer::from(4));
    let q = (&f * &four)
        .floor()
        .to_integer()
        .to_i64()
        .expect("quadrant") as u8;
    let h = &f - Rational::new(Integer::from(q), Integer::from(4));
    let eighth = Rational::new(Integer::from(1), Integer::from(8));
    let (theta_frac, mirrored) = if h > eighth {
        (Rational::new(Integer::from(1), Integer::from(4)) - h, true)
    } else {
        (h, false)
    };
    let pi = pi_interval(wp);
    let t = pi.scale_rat(&(theta_frac * Rational::from_integer(Integer::from(2))), wp);
    let (c, s) = taylor_cos_sin(&t, wp);
    let (c0, s0) = if mirrored { (s, c) } else { (c, s) };
    match q {
        0 => (c0, s0),
        1 => (s0.neg(), c0),
        2 => (c0.neg(), s0.neg()),
        _ => (s0, c0.neg()),
    }
}

/// Simultaneous Taylor enclosures of cos t and sin t for `0 ≤ t ≤ π/4`.
fn taylor_cos_sin(t: &DyadicInterval, prec: u32) -> (DyadicInterval, DyadicInterval) {
    let wp = prec + 16;
    let t2 = t.mul(t, wp);
    // cos: Σ (-1)^k t^{2k} / (2k)!
    let mut cos_acc = DyadicInterval::from_int(1);
    let mut term = DyadicInterval::from_int(1);
    let mut k = 1u64;
    loop {
        term = term.mul(&t2, wp).div_u64((2 * k - 1) * (2 * k), wp);
        let bound = term.abs_hi();
        if bound.mant.bits() as i64 + bound.exp < -(wp as i64) {
            cos_acc = cos_acc.widen(&bound, wp);
            break;
        }
        cos_acc = if k % 2 == 1 {
            cos_acc.sub(&term, wp)
        } else {
            cos_acc.add(&term, wp)
        };
        k += 1;
    }
    // sin: Σ (-1)^k t^{2k+1} / (2k+1)!
    let mut sin_acc = t.clone();
    let mut term = t.clone();
    let mut k = 1u64;
    loop {
        term = term.mul(&t2, wp).div_u64((2 * k) * (2 * k + 1), wp);
        let bound = term.abs_hi();
        if bound.mant.bits() as i64 + bound.exp < -(wp as i64) {
            sin_acc = sin_acc.widen(&bound, wp);
            break;
        }
        sin_acc = if k % 2 == 1 {
            sin_acc.sub(&term, wp)
        } else {
            sin_acc.add(&term, wp)
        };
        k += 1;
    }
    (cos_acc, sin_acc)
}

/// Evaluator for the real parts of cyclotomic numbers at one conductor
/// and precision: builds the table of `cos(2πj/n)` once by incremental
/// complex rotation.
pub struct RealEvaluator {
    n: u64,
    prec: u32,
    cos: Vec<DyadicInterval>,
}

impl RealEvaluator {
    pub fn new(n: u64, prec: u32) -> Self {
        let wp = prec + 32;
        let mut cos = Vec::with_capacity(n as usize);
        let mut sin = Vec::with_capacity(n as usize);
        cos.push(DyadicInterval::from_int(1));
        sin.push(DyadicInterval::zero());
        if n > 1 {
            let (c1, s1) = cos_sin_2pi(&Rational::new(Integer::from(1), Integer::from(n)), wp);
            cos.push(c1.clone());
            sin.push(s1.clone());
            for j in 2..n as usize {
                let c = cos[j - 1].mul(&c1, wp).sub(&sin[j - 1].mul(&s1, wp), wp);
                let s = sin[j - 1].mul(&c1, wp).add(&cos[j - 1].mul(&s1, wp), wp);
                cos.push(c);
                sin.push(s);
            }
        }
        RealEvaluator { n, prec, cos }
    }

    /// Enclosure of `Re(x)` for `x` at this evaluator's conductor.
    pub fn eval_re(&self, x: &CyclotomicNumber) -> DyadicInterval {
        assert_eq!(x.conductor(), self.n, "conductor mismatch");
        let wp = self.prec + 32;
        let mut acc = DyadicInterval::zero();
        for (j, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&self.cos[j].scale_rat(c, wp), wp);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat_frac;

    fn approx(i: &DyadicInterval) -> f64 {
        i.midpoint_f64()
    }

    #[test]
    fn pi_is_pi() {
        let pi = pi_interval(128);
        assert!((approx(&pi) - std::f64::consts::PI).abs() < 1e-12);
        assert!(!pi.contains_zero());
    }

    #[test]
    fn cos_sin_match_f64() {
        for (num, den) in [
            (0i64, 1i64),
            (1, 12),
            (1, 8),
            (3, 8),
            (5, 7),
            (11, 13),
            (7, 4),
            (13, 9),
        ] {
            let f = rat_frac(num, den);
            let (c, s) = cos_sin_2pi(&f, 96);
            let x = 2.0 * std::f64::consts::PI * (num as f64) / (den as f64);
            assert!((approx(&c) - x.cos()).abs() < 1e-10, "cos {num}/{den}");
            assert!((approx(&s) - x.sin()).abs() < 1e-10, "sin {num}/{den}");
        }
    }

    #[test]
    fn interval_sign_detection() {
        let x = DyadicInterval::from_rational(&rat_frac(-3, 7), 64);
        assert_eq!(x.determined_sign(), Some(-1));
        let y = DyadicInterval::from_rational(&rat_frac(1, 1000000), 64);
        assert_eq!(y.determined_sign(), Some(1));
    }

    #[test]
    fn evaluator_matches_cosine_sum() {
        // Re(ζ7 + ζ7^6) = 2 cos(2π/7)
        let x = &CyclotomicNumber::zeta_pow(7, 1) + &CyclotomicNumber::zeta_pow(7, 6);
        let ev = RealEvaluator::new(7, 128);
        let i = ev.eval_re(&x);
        let expect = 2.0 * (2.0 * std::f64::consts::PI / 7.0).cos();
        assert!((approx(&i) - expect).abs() < 1e-12);
    }
}
