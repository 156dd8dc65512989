//! Certified signs of totally real cyclotomic numbers, and decimal
//! rendering for reports.
//!
//! Zero is decided symbolically (the canonical representation makes the
//! zero test exact); a nonzero sign is decided by interval evaluation at
//! doubling precision, which must terminate for any nonzero input.

use num_traits::{Signed, ToPrimitive};

use super::cyclotomic::CyclotomicNumber;
use super::interval::RealEvaluator;
use super::{Integer, Rational};
use crate::{Error, Result};

/// Sign of a nonzero real number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i32(v: i32) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn product(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+1" } else { "-1" })
    }
}

/// `None` encodes an exact zero.
pub type SignOrZero = Option<Sign>;

/// Precision schedule for interval refinement. The cap is passed per
/// call; there is no ambient state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Precision {
    pub start_bits: u32,
    pub cap_bits: u32,
}

impl Default for Precision {
    fn default() -> Self {
        Precision {
            start_bits: 128,
            cap_bits: 16384,
        }
    }
}

impl Precision {
    pub fn new(start_bits: u32, cap_bits: u32) -> Self {
        Precision {
            start_bits: start_bits.max(16),
            cap_bits: cap_bits.max(start_bits),
        }
    }
}

/// Certified sign of a totally real cyclotomic number under the standard
/// embedding `ζ_n = exp(2πi/n)`.
///
/// Returns `None` for an exact zero. Inputs not fixed by complex
/// conjugation are rejected.
pub fn certified_sign(x: &CyclotomicNumber, prec: Precision) -> Result<SignOrZero> {
    if x.is_zero() {
        return Ok(None);
    }
    if let Some(r) = x.to_rational() {
        return Ok(Some(if r.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }));
    }
    if x.conjugate() != *x {
        return Err(Error::NotTotallyReal);
    }
    let mut bits = prec.start_bits;
    loop {
        let ev = RealEvaluator::new(x.conductor(), bits);
        let enclosure = ev.eval_re(x);
        match enclosure.determined_sign() {
            Some(1) => return Ok(Some(Sign::Plus)),
            Some(_) => return Ok(Some(Sign::Minus)),
            None => {
                if bits >= prec.cap_bits {
                    return Err(Error::PrecisionExhausted {
                        cap_bits: prec.cap_bits,
                    });
                }
                bits = (bits * 2).min(prec.cap_bits);
            }
        }
    }
}

/// Fast approximate value for displays; exact code never consumes this.
pub fn to_f64_approx(x: &CyclotomicNumber) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    if let Some(r) = x.to_rational() {
        if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
            if d.is_finite() && n.is_finite() {
                return n / d;
            }
        }
    }
    let ev = RealEvaluator::new(x.conductor(), 128);
    ev.eval_re(x).midpoint_f64()
}

/// Decimal rendering of a totally real `x` to `sig_digits` significant
/// digits (round to nearest, ties away from zero). Deterministic across
/// runs; meant for reports, not for arithmetic.
pub fn decimal_string(x: &CyclotomicNumber, sig_digits: u32, prec: Precision) -> Result<String> {
    if x.is_zero() {
        return Ok("0".to_string());
    }
    if x.conjugate() != *x {
        return Err(Error::NotTotallyReal);
    }
    let mut bits = prec.start_bits.max(64 + 4 * sig_digits);
    loop {
        let ev = RealEvaluator::new(x.conductor(), bits);
        let enclosure = ev.eval_re(x);
        let width = enclosure.width_rational();
        let mag = enclosure.mag_rational();
        // relative width < 10^-(sig+2) guarantees stable digits
        let tol = Rational::new(Integer::from(1), Integer::from(10).pow(sig_digits + 2));
        if enclosure.determined_sign().is_some() && width < &mag * &tol {
            return Ok(format_decimal(&enclosure.midpoint_rational(), sig_digits));
        }
        if bits >= prec.cap_bits {
            return Err(Error::PrecisionExhausted {
                cap_bits: prec.cap_bits,
            });
        }
        bits = (bits * 2).min(prec.cap_bits);
    }
}

/// Render a nonzero rational to `sig` significant decimal digits.
fn format_decimal(v: &Rational, sig: u32) -> String {
    let neg = v.is_negative();
    let v = v.abs();
    // decimal exponent d with 10^d ≤ v < 10^(d+1)
    let ten = Rational::from_integer(Integer::from(10));
    let mut d: i64 = 0;
    let mut probe = Rational::from_integer(Integer::from(1));
    if v >= Rational::from_integer(Integer::from(1)) {
        while &probe * &ten <= v {
            probe *= &ten;
            d += 1;
        }
    } else {
        while probe > v {
            probe /= &ten;
            d -= 1;
        }
    }
    // digits = round(v / 10^(d - sig + 1))
    let shift = d - sig as i64 + 1;
    let scaled = if shift >= 0 {
        v / Rational::from_integer(Integer::from(10).pow(shift as u32))
    } else {
        v * Rational::from_integer(Integer::from(10).pow((-shift) as u32))
    };
    // round half away from zero: floor(x + 1/2) for positive x
    let rounded: Integer = ((scaled.numer() * Integer::from(2) + scaled.denom())
        / (scaled.denom() * Integer::from(2)))
    .clone();
    let mut digits = rounded.to_string();
    // rounding may carry into an extra digit (e.g. 999.96 -> 10000)
    let mut exp10 = d;
    if digits.len() as u32 > sig {
        digits.truncate(sig as usize);
        exp10 += 1;
    }
    let sign = if neg { "-" } else { "" };
    if exp10 >= 0 && (exp10 as usize) < 40 {
        let int_len = exp10 as usize + 1;
        if int_len >= digits.len() {
            let zeros = "0".repeat(int_len - digits.len());
            format!("{sign}{digits}{zeros}")
        } else {
            format!("{sign}{}.{}", &digits[..int_len], &digits[int_len..])
        }
    } else if (-6..0).contains(&exp10) {
        let zeros = "0".repeat((-exp10 - 1) as usize);
        format!("{sign}0.{zeros}{digits}")
    } else {
        let head = &digits[..1];
        let tail = &digits[1..];
        if tail.is_empty() {
            format!("{sign}{head}e{exp10}")
        } else {
            format!("{sign}{head}.{tail}e{exp10}")
        }
    }
}
