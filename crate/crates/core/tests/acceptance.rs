//! Acceptance suite: one test per criterion, each printing a PASS line
//! with its headline numbers (visible under `--nocapture`).
//!
//! The rank-5 dimension double-check is in the extended suite: run
//! `cargo test --test acceptance -- --ignored` to include it.

use wittsig::exact::{
    self, certified_sign, conjugates, galois_apply, jacobi, sin_pi_frac, CyclotomicNumber,
    Precision, Sign,
};
use wittsig::invariants::{sqrt_dim_formula_d, CategoryData};
use wittsig::roots::{d_count, d_count_bruteforce, s_set};
use wittsig::signature::{
    build_galois_element, check_periodicity_d, ising_obstruction, pointed_signature, signature_d,
    verify_bd_separation, verify_independence_d_even, verify_independence_d_odd,
    verify_jacobi_conditions, SignatureFamily,
};

fn pass(criterion: &str, detail: &str) {
    println!("[PASS] {criterion}: {detail}");
}

#[test]
fn criterion_01_d_count_oracle() {
    let mut checked = 0u64;
    for r in 2..=50u64 {
        for j in 1..=2 * r {
            assert_eq!(
                d_count(r, j),
                d_count_bruteforce(r, j),
                "closed form vs brute force at r={r}, j={j}"
            );
            checked += 1;
        }
    }
    pass("criterion-01 d-count oracle", &format!("{checked} pairs"));
}

#[test]
fn criterion_02_s_set_parity() {
    for r in 1..=200u64 {
        assert_eq!(s_set(r).len() % 2, 0, "|S_r| must be even at r={r}");
    }
    pass("criterion-02 S_r parity", "r = 1..=200");
}

#[test]
fn criterion_03_sine_galois_law() {
    let prec = Precision::default();
    let mut checked = 0u64;
    for m in 1..=30u64 {
        let n = exact::lcm_u64(2 * m, 4);
        for j in 1..2 * m {
            let s = sin_pi_frac(j as i64, m);
            for k in 1..n {
                if exact::gcd_u64(k, n) != 1 {
                    continue;
                }
                let conj = galois_apply(k as i64, &s).unwrap();
                let got = certified_sign(&conj, prec).unwrap();
                if j == m {
                    assert_eq!(got, None, "sin(π) = 0 at m={m}, k={k}");
                    continue;
                }
                let minus_one_over_k = jacobi(-1, k as i128).unwrap();
                let kj = (k * j) % (2 * m);
                let s_factor = if kj < m { 1 } else { -1 };
                let expect = minus_one_over_k * s_factor;
                assert_eq!(got.map(Sign::to_i32), Some(expect), "m={m} j={j} k={k}");
                checked += 1;
            }
        }
    }
    pass(
        "criterion-03 sine-Galois law",
        &format!("{checked} sign identities, m <= 30"),
    );
}

fn dimension_double_check(r: usize) {
    let data = CategoryData::build(r).unwrap();
    let d = sqrt_dim_formula_d(r).unwrap();
    let scale = exact::rat(if r % 2 == 1 { 8 } else { 16 });
    assert_eq!(
        (&d * &d).scale(&scale),
        data.dim_total,
        "(8|16)·D_r² = Σ d_λ² at r={r}"
    );
}

#[test]
fn criterion_04_dimension_double_check() {
    for r in [2usize, 3, 4] {
        dimension_double_check(r);
    }
    pass("criterion-04 dimension double-check", "r = 2, 3, 4 exact");
}

#[test]
#[ignore = "extended suite: covers rank 5 and the per-object checks at ranks 4 and 5"]
fn criterion_04_extended_rank5() {
    dimension_double_check(5);
    // the rank-5 invariants that ride along: exact ξ1, per-object
    // reality/positivity, and containment in the T-order field
    for r in [4usize, 5] {
        let data = CategoryData::build(r).unwrap();
        let xi = data.central_charge(1).unwrap();
        assert_eq!(
            xi,
            CyclotomicNumber::zeta_pow(8, (r * r) as i64),
            "ξ1 at r={r}"
        );
        for o in &data.objects {
            assert_eq!(o.qdim.conjugate(), o.qdim, "d_λ real at r={r}");
            assert_eq!(
                certified_sign(&o.qdim, Precision::default()).unwrap(),
                Some(Sign::Plus),
                "d_λ > 0 at r={r}"
            );
            assert_eq!(data.t_order % o.qdim.conductor(), 0, "d_λ ∈ Q_N at r={r}");
        }
    }
    pass(
        "criterion-04-extended dimension double-check",
        "r = 5 exact, object checks r = 4, 5",
    );
}

#[test]
fn criterion_05_central_charge() {
    for r in [2usize, 3, 4] {
        let data = CategoryData::build(r).unwrap();
        let xi = data.central_charge(1).unwrap();
        assert_eq!(
            xi,
            CyclotomicNumber::zeta_pow(8, (r * r) as i64),
            "ξ1 = exp(πi r²/4) at r={r}"
        );
    }
    pass("criterion-05 central charge", "ξ1 exact for r = 2, 3, 4");
}

#[test]
fn criterion_06_t_order() {
    let n3 = CategoryData::build(3).unwrap().t_order;
    assert_eq!(n3, 80);
    let n5 = CategoryData::build(5).unwrap().t_order;
    assert_eq!(n5, 144);
    let n4 = CategoryData::build(4).unwrap().t_order;
    let mut odd = n4;
    let mut two_part = 1u64;
    while odd % 2 == 0 {
        odd /= 2;
        two_part *= 2;
    }
    assert_eq!(odd, 7, "odd part of N_4");
    assert!(two_part <= 16, "2-part of N_4 bounded by 2^4");
    pass(
        "criterion-06 T-order",
        &format!("N_3 = {n3}, N_5 = {n5}, N_4 = {n4}"),
    );
}

#[test]
fn criterion_07_signature_propositions() {
    // odd ranks ≡ 5 (mod 8)
    assert_eq!(signature_d(5, 5).unwrap(), Sign::Minus);
    assert_eq!(signature_d(13, 13).unwrap(), Sign::Minus);
    // even cases
    assert_eq!(signature_d(4, 9).unwrap(), Sign::Minus);
    assert_eq!(signature_d(6, 5).unwrap(), Sign::Minus);
    // separation instances at r = 12, b = 23: D-side +1, B-side (+1, −1)
    let sep = verify_bd_separation(12).unwrap();
    assert!(sep.passed(), "separation battery failed: {sep:?}");
    assert_eq!(sep.checks.len(), 3);
    assert_eq!(sep.checks[2].parameters["k"], serde_json::json!(193));
    pass(
        "criterion-07 signature propositions",
        "ε_D5(σ5), ε_D13(σ13), ε_D4(σ9), ε_D6(σ5) = −1; ε_D12(σ9), ε_B23(σ9) = +1; ε_B23(σ193) = −1",
    );
}

#[test]
fn criterion_08_periodicity() {
    for r in [4usize, 5, 6] {
        let rep = check_periodicity_d(r, 300).unwrap();
        assert!(
            rep.ok,
            "periodicity violations at r={r}: {:?}",
            rep.violations
        );
        assert_eq!(rep.profile.modulus, 4 * r as u64 - 2);
        assert!(rep.checked >= 80, "window actually swept at r={r}");
    }
    pass(
        "criterion-08 periodicity",
        "r = 4, 5, 6 constant on classes mod 4r−2, k <= 300",
    );
}

#[test]
fn criterion_09_independence_witnesses() {
    // odd family: primes 41, 73 -> ranks 21, 37
    let odd = verify_independence_d_odd(&[41, 73]).unwrap();
    assert!(odd.passed(), "odd-family independence failed: {:?}", odd);
    // the pinned-first run uses the CRT element 1169
    assert_eq!(odd.checks[0].parameters["k"], serde_json::json!(1169));
    // even families: prime 7 (rank 4) and prime 11 (rank 6), joint run
    let even = verify_independence_d_even(&[7], &[11]).unwrap();
    assert!(even.passed(), "even-family independence failed: {:?}", even);
    // single-prime direct instances
    let k41 = build_galois_element((21, 82), &[]).unwrap();
    assert_eq!(k41, 21);
    assert_eq!(signature_d(21, 21).unwrap(), Sign::Minus);
    pass(
        "criterion-09 independence witnesses",
        "primes {41, 73} flip only the pinned coordinate; even run {7} × {11} likewise",
    );
}

#[test]
fn criterion_10_pointed_ising_exclusion() {
    // pointed signatures match Jacobi symbols for p ≡ 1 (mod 4), p <= 100
    let mut primes_checked = 0;
    for p in (5..=100u64).step_by(4) {
        if !exact::is_prime(p) {
            continue;
        }
        for k in 1..p {
            assert_eq!(
                pointed_signature(p, k as i64).unwrap().to_i32(),
                jacobi(k as i128, p as i128).unwrap(),
                "p={p} k={k}"
            );
        }
        primes_checked += 1;
    }
    // odd Ising powers never absorb a pointed central charge
    for m in [1i64, 3, 5, 7, 9, 11, 13, 15] {
        for ell in 0..8 {
            assert!(!ising_obstruction(m, ell), "m={m} ell={ell}");
        }
    }
    // the Jacobi-symbol chain for p ∈ {7, 23}: (2/p) = 1
    let set = verify_jacobi_conditions(&[7, 23]).unwrap();
    assert!(set.passed());
    assert_eq!(jacobi(2, 7).unwrap(), 1);
    assert_eq!(jacobi(2, 23).unwrap(), 1);
    pass(
        "criterion-10 pointed/Ising exclusion",
        &format!("{primes_checked} primes ≡ 1 (mod 4), Ising sweep, (2/7) = (2/23) = 1"),
    );
}

#[test]
fn criterion_11_anisotropy_d4() {
    let rep = wittsig::anisotropy::anisotropy_report(Precision::default()).unwrap();
    assert_eq!(rep.trivial_twist_count, 12);
    assert_eq!(rep.bound_a1, 11);
    assert_eq!(rep.bound_a2, 2);
    assert_eq!(rep.totally_positive_survivors, vec![(0, 1), (0, 2)]);
    assert_eq!(rep.norm_integral_survivors, vec![(0, 2)]);
    assert!(rep.final_ratio_strictly_between_1_and_2);
    let d1: f64 = rep.d1_decimal.parse().unwrap();
    let d2: f64 = rep.d2_decimal.parse().unwrap();
    let dim: f64 = rep.dim_decimal.parse().unwrap();
    let ratio: f64 = rep.final_ratio_decimal.parse().unwrap();
    assert!((d1 - 61.685).abs() < 1e-3, "d1 ~ 61.685, got {d1}");
    assert!((d2 - 289.197).abs() < 1e-3, "d2 ~ 289.197, got {d2}");
    assert!((dim - 489669.5).abs() < 0.5, "dim ~ 489669.5, got {dim}");
    assert!((ratio - 1.459).abs() < 1e-3, "ratio ~ 1.459, got {ratio}");
    assert!(rep.verdict.starts_with("completely anisotropic"));
    // spot checks of the positivity filter: 1 + d2 is totally positive,
    // 1 + d1 is not
    let find = |a1: u32, a2: u32| {
        rep.candidates
            .iter()
            .find(|c| (c.a1, c.a2) == (a1, a2))
            .unwrap()
    };
    assert!(find(0, 1).totally_positive);
    assert!(!find(1, 0).totally_positive);
    // conjugate data the positivity filter rests on
    let d1_conj: Vec<f64> = rep
        .d1_conjugate_decimals
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for expect in [61.685, -4.688, 0.003] {
        assert!(
            d1_conj.iter().any(|c| (c - expect).abs() < 2e-3),
            "conjugate ≈ {expect} missing from {d1_conj:?}"
        );
    }
    pass(
        "criterion-11 anisotropy of D4",
        &format!(
            "census 12, bounds (11, 2), survivors {:?} -> {:?}, ratio {}",
            rep.totally_positive_survivors, rep.norm_integral_survivors, rep.final_ratio_decimal
        ),
    );
}

struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 33
    }
}

#[test]
fn criterion_12_signature_homomorphism() {
    // ε is a homomorphism under products: sgn(σ_k(√dimA·√dimB)) equals
    // the product of the individual signatures
    let mut families = Vec::new();
    for r in 2..=6usize {
        families.push(SignatureFamily::new_d(r).unwrap());
    }
    for b in [3usize, 5, 7] {
        families.push(SignatureFamily::new_b(b).unwrap());
    }
    let mut rng = Lcg(0x5eed_cafe_f00d);
    let prec = Precision::default();
    for trial in 0..20 {
        let a = &families[(rng.next() % families.len() as u64) as usize];
        let b = &families[(rng.next() % families.len() as u64) as usize];
        let n = exact::lcm_u64(a.conductor(), b.conductor());
        let k = loop {
            let k = 1 + rng.next() % (10 * n);
            if exact::gcd_u64(k, n) == 1 {
                break k;
            }
        };
        let product = a.sqrt_dim() * b.sqrt_dim();
        let conj = galois_apply(k as i64, &product).unwrap();
        let lhs = certified_sign(&conj, prec).unwrap().unwrap();
        let rhs = a.sign(k as i64).unwrap().product(b.sign(k as i64).unwrap());
        assert_eq!(
            lhs, rhs,
            "trial {trial}: {}{} × {}{} at k={k}",
            a.family, a.rank, b.family, b.rank
        );
    }
    pass(
        "criterion-12 signature homomorphism",
        "20 random cross-family products",
    );
}

// not a numbered criterion: the spec's orbit example for conjugate data
#[test]
fn conjugate_orbit_of_d1_has_three_values() {
    let data = CategoryData::build(4).unwrap();
    let census = wittsig::anisotropy::trivial_twist_objects(&data).unwrap();
    let (d1, _) = wittsig::anisotropy::local_dims(&data, &census).unwrap();
    assert_eq!(conjugates(&d1).len(), 3);
}
