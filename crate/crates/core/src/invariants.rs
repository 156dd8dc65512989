//! Numerical invariants of `C_r = so(2r)_{2r}`: twists, quantum
//! dimensions, T-order, Gauss sums and central charges, plus the exact
//! sine-product formulas for the square roots of the local-module global
//! dimensions in types D and B.
//!
//! Conventions: `q = ζ_{8r−4}`, twists are `θ_λ = q^{(λ|λ+2ρ)}` realized
//! at conductor `16(2r−1)` (the pairing lies in ¼ℤ), and quantum
//! dimensions come from the q-Weyl product
//! `∏_{α>0} [(λ+ρ|α)]_q / [(ρ|α)]_q`, which keeps the global dimension
//! cross-check against the sine-product formula a genuine two-route
//! consistency test.

use serde::Serialize;

use crate::exact::{
    self, certified_sign, decimal_string, sqrt_int, to_f64_approx, CyclotomicNumber, Precision,
    Rational, Sign,
};
use crate::roots::{alcove_d, build_root_system, c_count, d_count, LieType, RootSystem, Weight};
use crate::{Error, Result};

/// The quantum parameter `q = exp(πi/(4r−2)) = ζ_{8r−4}`.
pub fn q_param(r: usize) -> Result<CyclotomicNumber> {
    check_rank(r)?;
    Ok(CyclotomicNumber::zeta(8 * r as u64 - 4))
}

fn check_rank(r: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::RankTooSmall {
            rank: r as u64,
            min: 2,
        });
    }
    Ok(())
}

/// Twist conductor `16(2r−1)`.
pub fn twist_conductor(r: usize) -> u64 {
    16 * (2 * r as u64 - 1)
}

struct Ctx {
    r: usize,
    sys: RootSystem,
}

impl Ctx {
    fn new(r: usize) -> Result<Ctx> {
        check_rank(r)?;
        Ok(Ctx {
            r,
            sys: build_root_system(LieType::D, r)?,
        })
    }

    fn assert_in_alcove(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.r {
            return Err(Error::RankMismatch(w.rank(), self.r));
        }
        let ok = w.parity_consistent() && w.dominant_d() && {
            let shifted = w.add(&self.sys.rho);
            let limit = 4 * (4 * self.r as i64 - 3);
            self.sys
                .positive_roots
                .iter()
                .all(|a| shifted.inner4(a) <= limit)
        };
        if ok {
            Ok(())
        } else {
            Err(Error::OutsideAlcove(w.to_string()))
        }
    }

    /// `4·(λ|λ+2ρ)`, an integer: the twist exponent over `ζ_{16(2r−1)}`.
    fn twist_exponent4(&self, w: &Weight) -> i64 {
        w.inner4(&w.add(&self.sys.rho.scale(2)))
    }

    fn twist(&self, w: &Weight) -> CyclotomicNumber {
        CyclotomicNumber::zeta_pow(twist_conductor(self.r), self.twist_exponent4(w))
    }

    /// `q^a − q^{−a}` at conductor `8r−4`.
    fn qnum(&self, a: i64) -> CyclotomicNumber {
        let n = 8 * self.r as u64 - 4;
        &CyclotomicNumber::zeta_pow(n, a) - &CyclotomicNumber::zeta_pow(n, -a)
    }

    /// Numerator product `∏_α (q^{(λ+ρ|α)} − q^{−(λ+ρ|α)})`.
    fn weyl_numerator(&self, w: &Weight) -> CyclotomicNumber {
        let shifted = w.add(&self.sys.rho);
        let mut acc = CyclotomicNumber::one(8 * self.r as u64 - 4);
        for a in &self.sys.positive_roots {
            acc = &acc * &self.qnum(shifted.inner4(a) / 4);
        }
        acc
    }

    fn weyl_denominator(&self) -> CyclotomicNumber {
        let mut acc = CyclotomicNumber::one(8 * self.r as u64 - 4);
        for a in &self.sys.positive_roots {
            acc = &acc * &self.qnum(self.sys.rho.inner4(a) / 4);
        }
        acc
    }
}

/// Twist `θ_λ = q^{(λ|λ+2ρ)}` of an alcove weight, as an exact root of
/// unity at conductor `16(2r−1)`.
pub fn twist(r: usize, w: &Weight) -> Result<CyclotomicNumber> {
    let ctx = Ctx::new(r)?;
    ctx.assert_in_alcove(w)?;
    Ok(ctx.twist(w))
}

/// Twist exponent: the integer `e` with `θ_λ = ζ_{16(2r−1)}^e`, reduced
/// into `0..16(2r−1)`.
pub fn twist_exponent(r: usize, w: &Weight) -> Result<u64> {
    let ctx = Ctx::new(r)?;
    ctx.assert_in_alcove(w)?;
    let n = twist_conductor(r) as i64;
    Ok(ctx.twist_exponent4(w).rem_euclid(n) as u64)
}

/// Quantum dimension of an alcove weight by the q-Weyl product.
pub fn qdim(r: usize, w: &Weight) -> Result<CyclotomicNumber> {
    let ctx = Ctx::new(r)?;
    ctx.assert_in_alcove(w)?;
    let num = ctx.weyl_numerator(w);
    let den = ctx.weyl_denominator();
    num.try_div(&den)
}

/// One simple object of `C_r`.
#[derive(Debug, Clone)]
pub struct CategoryObject {
    pub weight: Weight,
    /// Exponent of the twist over `ζ_{16(2r−1)}`.
    pub twist_exponent: u64,
    pub twist: CyclotomicNumber,
    pub qdim: CyclotomicNumber,
}

/// All per-object data of `C_r` plus the derived global invariants.
#[derive(Debug, Clone)]
pub struct CategoryData {
    pub rank: usize,
    pub q: CyclotomicNumber,
    pub objects: Vec<CategoryObject>,
    /// Order of the T-matrix (lcm of the orders of all twists).
    pub t_order: u64,
    /// Global dimension `Σ d_λ²`, exact.
    pub dim_total: CyclotomicNumber,
}

impl CategoryData {
    /// Enumerate the alcove and compute every twist and quantum
    /// dimension. With the `parallel` feature the per-object work is
    /// distributed across threads.
    pub fn build(r: usize) -> Result<CategoryData> {
        let ctx = Ctx::new(r)?;
        let alcove = alcove_d(r)?;
        let den_inv = ctx.weyl_denominator().inv()?;

        let make = |w: &Weight| -> CategoryObject {
            let e4 = ctx.twist_exponent4(w);
            let n = twist_conductor(r) as i64;
            CategoryObject {
                weight: w.clone(),
                twist_exponent: e4.rem_euclid(n) as u64,
                twist: ctx.twist(w),
                qdim: &ctx.weyl_numerator(w) * &den_inv,
            }
        };

        #[cfg(feature = "parallel")]
        let objects: Vec<CategoryObject> = {
            use rayon::prelude::*;
            alcove.par_iter().map(make).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let objects: Vec<CategoryObject> = alcove.iter().map(make).collect();

        let n_twist = twist_conductor(r);
        let t_order = objects.iter().fold(1u64, |acc, o| {
            let ord = n_twist / exact::gcd_u64(n_twist, o.twist_exponent);
            exact::lcm_u64(acc, ord)
        });
        let mut dim_total = CyclotomicNumber::zero(8 * r as u64 - 4);
        for o in &objects {
            dim_total = &dim_total + &(&o.qdim * &o.qdim);
        }
        Ok(CategoryData {
            rank: r,
            q: q_param(r)?,
            objects,
            t_order,
            dim_total,
        })
    }

    /// Gauss sum `τ_n = Σ d_λ² θ_λ^n`.
    pub fn gauss_sum(&self, n: i64) -> CyclotomicNumber {
        let nt = twist_conductor(self.rank);
        let mut acc = CyclotomicNumber::zero(nt);
        for o in &self.objects {
            let theta_n = CyclotomicNumber::zeta_pow(nt, o.twist_exponent as i64 * n);
            acc = &acc + &(&(&o.qdim * &o.qdim) * &theta_n);
        }
        acc
    }

    /// Exact positive `√dim(C_r)` as `√8·D_r` (odd r) or `4·D_r`
    /// (even r), cross-checked against `dim_total`.
    pub fn sqrt_dim_total(&self) -> Result<CyclotomicNumber> {
        let d = sqrt_dim_formula_d(self.rank)?;
        let factor = if self.rank % 2 == 1 {
            sqrt_int(8)
        } else {
            CyclotomicNumber::from_int(4)
        };
        let s = &factor * &d;
        if &s * &s != self.dim_total {
            return Err(Error::VerificationFailed(format!(
                "sine-product formula disagrees with Σ d² at rank {}",
                self.rank
            )));
        }
        Ok(s)
    }

    /// Central charge `ξ_n = τ_n / |τ_n|`, exact.
    ///
    /// `|τ_n|` is recovered exactly when `τ_n·conj(τ_n)` equals a
    /// rational square times `dim(C_r)` (always the case for `n = ±1`);
    /// other moduli are reported as unsupported rather than approximated.
    pub fn central_charge(&self, n: i64) -> Result<CyclotomicNumber> {
        let tau = self.gauss_sum(n);
        if tau.is_zero() {
            return Err(Error::VanishingGaussSum);
        }
        let modulus_sq = &tau * &tau.conjugate();
        let ratio = modulus_sq.try_div(&self.dim_total)?;
        let Some(t) = ratio.to_rational() else {
            return Err(Error::UnsupportedModulus(ratio.to_string()));
        };
        let Some(f) = rational_sqrt(&t) else {
            return Err(Error::UnsupportedModulus(t.to_string()));
        };
        // |τ_n| = √dim(C_r) · f
        let sqrt_dim = self.sqrt_dim_total()?;
        let modulus = sqrt_dim.scale(&f);
        tau.try_div(&modulus)
    }

    /// `dim(𝒟_r) = dim(C_r)/8` (odd r) or `/16` (even r).
    pub fn dim_local(&self) -> CyclotomicNumber {
        let div = if self.rank % 2 == 1 { 8 } else { 16 };
        self.dim_total.scale(&exact::rat_frac(1, div))
    }

    /// JSON-serializable export of the category data.
    pub fn export(&self) -> CategoryExport {
        CategoryExport {
            rank: self.rank,
            num_objects: self.objects.len(),
            t_order: self.t_order,
            twist_conductor: twist_conductor(self.rank),
            dim_decimal: decimal_string(&self.dim_total, 50, Precision::default())
                .unwrap_or_else(|_| "unavailable".into()),
            dim_rounding: "nearest, 50 significant digits".into(),
            objects: self
                .objects
                .iter()
                .map(|o| ObjectExport {
                    coords2: o.weight.coords2().to_vec(),
                    twist_exponent_num: o.twist_exponent,
                    qdim_approx: to_f64_approx(&o.qdim),
                })
                .collect(),
        }
    }
}

/// Square root of a non-negative rational if it is an exact square.
fn rational_sqrt(t: &Rational) -> Option<Rational> {
    use num_traits::Signed;
    if t.is_negative() {
        return None;
    }
    let sn = t.numer().sqrt();
    let sd = t.denom().sqrt();
    (&sn * &sn == *t.numer() && &sd * &sd == *t.denom()).then(|| Rational::new(sn, sd))
}

/// Serializable category export.
#[derive(Debug, Serialize)]
pub struct CategoryExport {
    pub rank: usize,
    pub num_objects: usize,
    pub t_order: u64,
    pub twist_conductor: u64,
    pub dim_decimal: String,
    pub dim_rounding: String,
    pub objects: Vec<ObjectExport>,
}

#[derive(Debug, Serialize)]
pub struct ObjectExport {
    pub coords2: Vec<i64>,
    pub twist_exponent_num: u64,
    pub qdim_approx: f64,
}

/// Order of the T-matrix of `C_r`.
pub fn t_order(r: usize) -> Result<u64> {
    Ok(CategoryData::build(r)?.t_order)
}

/// Exact positive `D_r = √dim(𝒟_r)` by the sine-product formula:
/// `Y·√(2r−1)·(∏_j sin(jπ/(4r−2))^{𝔡_r(j)})⁻¹` for odd r and
/// `Z·(∏_j …)⁻¹` for even r, with `Y = 2^{(−2r²+3r−1)/2}(2r−1)^{(r−1)/2}`
/// and `Z = 2^{((3−2r)r−2)/2}(2r−1)^{r/2}`.
///
/// The constants are normalized so that `(8 or 16)·D_r² = Σ d_λ²`
/// exactly; the tests verify this against the alcove sum.
pub fn sqrt_dim_formula_d(r: usize) -> Result<CyclotomicNumber> {
    check_rank(r)?;
    let m = 4 * r as u64 - 2;
    let mut prod = CyclotomicNumber::one(2 * m);
    for j in 1..=(2 * r as u64).saturating_sub(3) {
        let e = d_count(r as u64, j);
        if e > 0 {
            prod = &prod * &exact::sin_pi_frac(j as i64, m).pow(e as i64)?;
        }
    }
    let inv = prod.inv()?;
    let two_r1 = 2 * r as i64 - 1;
    if r % 2 == 1 {
        let e2 = (-2 * (r as i64) * (r as i64) + 3 * r as i64 - 1) / 2;
        let y = pow2_rational(e2)
            * Rational::from_integer(exact::Integer::from(two_r1).pow((r as u32 - 1) / 2));
        Ok(&inv.scale(&y) * &sqrt_int(two_r1 as u64))
    } else {
        let e2 = ((3 - 2 * r as i64) * r as i64 - 2) / 2;
        let z = pow2_rational(e2)
            * Rational::from_integer(exact::Integer::from(two_r1).pow(r as u32 / 2));
        Ok(inv.scale(&z))
    }
}

/// Exact positive `B_b = √dim(so(2b+1)_{2b+1})` in `Q(ζ_{16b})`:
/// `W·√b·(∏_l sin((2l−1)π/8b) · ∏_j sin(jπ/4b)^{𝔠_b(j)})⁻¹` with
/// `W = b^{(b−1)/2} / 2^{b²−b−1}`.
pub fn sqrt_dim_formula_b(b: usize) -> Result<CyclotomicNumber> {
    check_rank(b)?;
    let bu = b as u64;
    let mut prod = CyclotomicNumber::one(16 * bu);
    for l in 1..=bu {
        prod = &prod * &exact::sin_pi_frac(2 * l as i64 - 1, 8 * bu);
    }
    for j in 1..=(2 * bu - 2) {
        let e = c_count(bu, j);
        if e > 0 {
            prod = &prod * &exact::sin_pi_frac(j as i64, 4 * bu).pow(e as i64)?;
        }
    }
    let inv = prod.inv()?;
    let denom = pow2_rational(-((b as i64) * (b as i64) - b as i64 - 1));
    if b % 2 == 1 {
        let w = Rational::from_integer(exact::Integer::from(bu).pow((b as u32 - 1) / 2)) * denom;
        Ok(&inv.scale(&w) * &sqrt_int(bu))
    } else {
        // b^{(b−1)/2}·√b = b^{b/2} is rational for even b
        let w = Rational::from_integer(exact::Integer::from(bu).pow(b as u32 / 2)) * denom;
        Ok(inv.scale(&w))
    }
}

fn pow2_rational(e: i64) -> Rational {
    let two = exact::Integer::from(2);
    if e >= 0 {
        Rational::from_integer(two.pow(e as u32))
    } else {
        Rational::new(exact::Integer::from(1), two.pow((-e) as u32))
    }
}

/// Twist report for one invertible object.
#[derive(Debug, Clone)]
pub struct InvertibleEntry {
    pub weight: Weight,
    pub computed: CyclotomicNumber,
    pub expected: CyclotomicNumber,
    pub matches: bool,
}

/// The three nontrivial invertible objects `λ1 = 2rω_{r−1}`,
/// `λ2 = 2rω_1`, `λ3 = 2rω_r` with computed twists, compared against the
/// closed values `exp(r²πi/2), 1, exp(r²πi/2)`.
pub fn invertible_data(r: usize) -> Result<Vec<InvertibleEntry>> {
    let ctx = Ctx::new(r)?;
    let weights = Weight::invertibles_d(r);
    let i_pow = CyclotomicNumber::zeta_pow(4, (r * r) as i64);
    let expected = [i_pow.clone(), CyclotomicNumber::from_int(1), i_pow];
    Ok(weights
        .into_iter()
        .zip(expected)
        .map(|(weight, expected)| {
            ctx.assert_in_alcove(&weight)
                .expect("invertibles lie in the alcove");
            let computed = ctx.twist(&weight);
            let matches = computed == expected;
            InvertibleEntry {
                weight,
                computed,
                expected,
                matches,
            }
        })
        .collect())
}

/// `dim(𝒟_r)` from scratch (builds the category data).
pub fn dim_local(r: usize) -> Result<CyclotomicNumber> {
    Ok(CategoryData::build(r)?.dim_local())
}

/// Certify that a computed dimension is a positive real.
pub fn certify_positive(x: &CyclotomicNumber, prec: Precision) -> Result<bool> {
    Ok(certified_sign(x, prec)? == Some(Sign::Plus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{galois_apply, rat};

    #[test]
    fn q_param_basics() {
        let q4 = q_param(4).unwrap();
        assert_eq!(q4.conductor(), 28);
        assert_eq!(q4.pow(14).unwrap(), CyclotomicNumber::from_int(-1));
        let q2 = q_param(2).unwrap();
        assert_eq!(q2.pow(6).unwrap(), CyclotomicNumber::from_int(-1));
        for k in [5i64, 11, 13] {
            assert_eq!(
                galois_apply(k, &q4).unwrap(),
                q4.pow(k).unwrap(),
                "σ_k(q) = q^k"
            );
        }
        assert!(q_param(1).is_err());
    }

    #[test]
    fn twist_known_values() {
        for r in [3usize, 4, 5] {
            assert_eq!(
                twist(r, &Weight::zero(r)).unwrap(),
                CyclotomicNumber::from_int(1)
            );
            // θ_{2e1} = −exp(πi/(2r−1)) = ζ_{2(2r−1)}^{2r}
            let two_e1 = Weight::from_int_coords(
                &std::iter::once(2)
                    .chain(std::iter::repeat(0).take(r - 1))
                    .collect::<Vec<_>>(),
            );
            let m = 2 * (2 * r as u64 - 1);
            assert_eq!(
                twist(r, &two_e1).unwrap(),
                CyclotomicNumber::zeta_pow(m, 1 + m as i64 / 2),
                "r={r}"
            );
            // θ_{ω_r} = exp(rπi/8) = ζ_16^r
            let spin = Weight::fundamental_d(r, r);
            assert_eq!(
                twist(r, &spin).unwrap(),
                CyclotomicNumber::zeta_pow(16, r as i64),
                "r={r}"
            );
        }
        // weight outside the alcove is rejected
        let big = Weight::from_int_coords(&[9, 0, 0, 0]);
        assert!(matches!(twist(4, &big), Err(Error::OutsideAlcove(_))));
    }

    #[test]
    fn qdim_unit_and_invertibles() {
        for r in [3usize, 4] {
            assert_eq!(
                qdim(r, &Weight::zero(r)).unwrap(),
                CyclotomicNumber::from_int(1)
            );
            for w in Weight::invertibles_d(r) {
                assert_eq!(qdim(r, &w).unwrap(), CyclotomicNumber::from_int(1), "r={r}");
            }
        }
    }

    #[test]
    fn qdim_of_2omega2_matches_closed_form() {
        let w = Weight::from_coords2(vec![4, 4, 0, 0]); // 2ω2 at r = 4
        let d = qdim(4, &w).unwrap();
        let mut expect = CyclotomicNumber::from_rational_at(rat(33), 7);
        for (e, c) in [(1i64, 28i64), (6, 28), (2, 14), (5, 14)] {
            expect = &expect + &CyclotomicNumber::zeta_pow(7, e).scale(&rat(c));
        }
        assert_eq!(d, expect);
        let approx = to_f64_approx(&d);
        assert!((approx - 61.685).abs() < 1e-3, "≈ 61.685, got {approx}");
    }

    #[test]
    fn t_orders() {
        assert_eq!(t_order(3).unwrap(), 80);
        assert_eq!(t_order(5).unwrap(), 144);
        // even case: odd part 7, 2-part ≤ 2^4 (the computed value is 4·7)
        let n4 = t_order(4).unwrap();
        assert_eq!(n4 % 7, 0);
        let odd_part = {
            let mut m = n4;
            while m % 2 == 0 {
                m /= 2;
            }
            m
        };
        assert_eq!(odd_part, 7);
        assert!(n4 / odd_part <= 16);
        assert_eq!(n4, 28);
    }

    #[test]
    fn twist_orders_divide_conductor() {
        for r in [3usize, 4] {
            let data = CategoryData::build(r).unwrap();
            let n = twist_conductor(r) as i64;
            for o in &data.objects {
                assert_eq!(
                    o.twist.pow(n).unwrap(),
                    CyclotomicNumber::from_int(1),
                    "θ^{n} = 1 at r={r}"
                );
            }
            if r % 2 == 1 {
                assert_eq!(data.t_order, twist_conductor(r));
            }
        }
    }

    #[test]
    fn gauss_sum_basics() {
        let data = CategoryData::build(2).unwrap();
        assert_eq!(data.gauss_sum(0), data.dim_total);
        assert_eq!(data.gauss_sum(-1), data.gauss_sum(1).conjugate());
        // modularity: τ1 · conj(τ1) = dim
        let t1 = data.gauss_sum(1);
        assert_eq!(&t1 * &t1.conjugate(), data.dim_total);
    }

    #[test]
    fn dim_c2_is_144() {
        // so(4)_4 splits into two level-4 sl2 factors of dimension 12
        let data = CategoryData::build(2).unwrap();
        assert_eq!(data.dim_total.to_rational().unwrap(), rat(144));
        assert_eq!(data.dim_local().to_rational().unwrap(), rat(9));
    }

    #[test]
    fn dimension_two_route_check_small_ranks() {
        for r in [2usize, 3] {
            let data = CategoryData::build(r).unwrap();
            let d = sqrt_dim_formula_d(r).unwrap();
            let scale = rat(if r % 2 == 1 { 8 } else { 16 });
            assert_eq!(
                (&d * &d).scale(&scale),
                data.dim_total,
                "(8|16)·D_r² = Σ d² at r={r}"
            );
            assert!(certify_positive(&d, Precision::default()).unwrap());
        }
    }

    #[test]
    fn central_charges_small_ranks() {
        // ξ1(C_r) = exp(πi r²/4) = ζ8^{r²}
        for r in [2usize, 3] {
            let data = CategoryData::build(r).unwrap();
            let xi = data.central_charge(1).unwrap();
            assert_eq!(xi, CyclotomicNumber::zeta_pow(8, (r * r) as i64), "r={r}");
        }
    }

    #[test]
    fn invertible_twists() {
        for entry in invertible_data(4).unwrap() {
            assert!(entry.matches);
            assert_eq!(entry.computed, CyclotomicNumber::from_int(1));
        }
        let r5 = invertible_data(5).unwrap();
        assert_eq!(r5[1].computed, CyclotomicNumber::from_int(1)); // θ_{λ2}
        assert_eq!(r5[2].computed, CyclotomicNumber::zeta(4)); // θ_{λ3} = i
        assert!(r5.iter().all(|e| e.matches));
    }

    #[test]
    fn qdims_real_positive_and_in_t_order_field() {
        for r in [2usize, 3] {
            let data = CategoryData::build(r).unwrap();
            for o in &data.objects {
                assert_eq!(o.qdim.conjugate(), o.qdim, "d real at r={r}");
                assert!(certify_positive(&o.qdim, Precision::default()).unwrap());
                // d_λ ∈ Q_{N_r}: conductor 8r−4 divides N_r
                assert_eq!(data.t_order % o.qdim.conductor(), 0);
            }
        }
    }

    #[test]
    fn b_formula_field_containment() {
        for b in [3usize, 5, 7] {
            let v = sqrt_dim_formula_b(b).unwrap();
            assert_eq!(v.conductor(), 16 * b as u64);
            assert_eq!(galois_apply(1, &v).unwrap(), v);
            assert!(certify_positive(&v, Precision::default()).unwrap());
        }
    }

    #[test]
    fn b3_matches_float_oracle() {
        // independent route: numeric interval evaluation of the defining
        // product at 512 bits, never touching the cyclotomic
        // representation
        let exact_val = sqrt_dim_formula_b(3).unwrap();
        let enclosure = crate::exact::RealEvaluator::new(48, 512).eval_re(&exact_val);
        let got = enclosure.midpoint_f64();

        let b = 3f64;
        let mut prod = 1f64;
        for l in 1..=3 {
            prod *= ((2 * l - 1) as f64 * std::f64::consts::PI / (8.0 * b)).sin();
        }
        for j in 1..=4u64 {
            prod *= ((j as f64) * std::f64::consts::PI / (4.0 * b))
                .sin()
                .powi(c_count(3, j) as i32);
        }
        let w = b.powf(1.0) / 2f64.powi(5); // b^{(b−1)/2} / 2^{b²−b−1}
        let oracle = w * b.sqrt() / prod;
        assert!(
            (got - oracle).abs() < 1e-9 * oracle.abs(),
            "exact {got} vs float oracle {oracle}"
        );
    }

    #[test]
    fn export_shape() {
        let data = CategoryData::build(2).unwrap();
        let e = data.export();
        assert_eq!(e.rank, 2);
        assert_eq!(e.num_objects, 25);
        assert_eq!(e.twist_conductor, 48);
        assert_eq!(
            e.dim_decimal,
            "144.00000000000000000000000000000000000000000000000"
        );
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.contains("\"twist_exponent_num\""));
    }
}
