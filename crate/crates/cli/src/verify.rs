//! The `verify` subcommand: named claim batteries with machine-readable
//! reports. Progress goes to stderr; the data stream stays clean.

use serde_json::json;

use wittsig::exact::{
    self, certified_sign, galois_apply, jacobi, sin_pi_frac, CyclotomicNumber, Sign,
};
use wittsig::invariants::{sqrt_dim_formula_d, t_order, CategoryData};
use wittsig::report::{ReportSet, VerifierReport};
use wittsig::roots::{d_count, d_count_bruteforce, s_set};
use wittsig::signature;

use crate::config::{Format, RunConfig};
use crate::output::{emit, render_report_set};
use crate::{classify, Failure};

pub struct Params {
    pub rank: Option<usize>,
    pub window: Option<u64>,
    pub primes: Vec<u64>,
    pub primes7: Vec<u64>,
    pub primes11: Vec<u64>,
    pub b: Option<usize>,
    pub k: Option<u64>,
    pub x_max: Option<u64>,
    pub max_m: Option<u64>,
    pub max_rank: Option<u64>,
    pub max_p: Option<u64>,
}

pub const CLAIMS: &[&str] = &[
    "lemma-d-count",
    "lemma-s-parity",
    "lemma-sine-galois",
    "lemma-t-order",
    "dim-double-check",
    "central-charge",
    "periodicity",
    "prop-d-odd-sign",
    "prop-d-even-sign",
    "lemma-b-shift",
    "prop-bd-separation",
    "thm-independence-odd",
    "thm-independence-even",
    "thm-pointed-ising",
    "jacobi-conditions",
    "anisotropy-d4",
    "all",
];

pub fn cmd_verify(claim: &str, params: &Params, config: &RunConfig) -> Result<(), Failure> {
    let sets = run_claim(claim, params, config)?;
    let all_ok = sets.iter().all(ReportSet::passed);
    let body = match config.format {
        Format::Json => {
            if sets.len() == 1 {
                render_report_set(&sets[0], Format::Json)
            } else {
                format!(
                    "{:#}\n",
                    serde_json::Value::Array(
                        sets.iter()
                            .map(|s| serde_json::to_value(s).expect("serializable"))
                            .collect()
                    )
                )
            }
        }
        other => sets
            .iter()
            .map(|s| render_report_set(s, other))
            .collect::<Vec<_>>()
            .join(""),
    };
    emit(config, &body)?;
    if all_ok {
        Ok(())
    } else {
        Err(Failure::verification("one or more checks failed"))
    }
}

fn check_rank(rank: usize) -> Result<(), Failure> {
    if rank < 2 {
        return Err(Failure::usage(format!(
            "rank {rank} is below the minimum 2 for these families"
        )));
    }
    Ok(())
}

fn run_claim(claim: &str, params: &Params, config: &RunConfig) -> Result<Vec<ReportSet>, Failure> {
    match claim {
        "lemma-d-count" => Ok(vec![claim_d_count(params.max_rank.unwrap_or(50))]),
        "lemma-s-parity" => Ok(vec![claim_s_parity(params.max_rank.unwrap_or(200))]),
        "lemma-sine-galois" => Ok(vec![claim_sine_galois(params.max_m.unwrap_or(30), config)?]),
        "lemma-t-order" => Ok(vec![claim_t_order(params.rank, config)?]),
        "dim-double-check" => {
            let r = params.rank.unwrap_or(4);
            check_rank(r)?;
            config.check_conductor(wittsig::invariants::twist_conductor(r))?;
            Ok(vec![claim_dim_double_check(r)?])
        }
        "central-charge" => {
            let r = params.rank.unwrap_or(4);
            check_rank(r)?;
            config.check_conductor(wittsig::invariants::twist_conductor(r))?;
            Ok(vec![claim_central_charge(r)?])
        }
        "periodicity" => {
            let r = params.rank.unwrap_or(4);
            check_rank(r)?;
            config.check_conductor(8 * r as u64 - 4)?;
            eprintln!("sweeping periodicity at rank {r}...");
            let rep = signature::check_periodicity_d(r, params.window.unwrap_or(200))
                .map_err(classify)?;
            let check = VerifierReport::new(
                "periodicity",
                json!({
                    "rank": r,
                    "window": rep.window,
                    "checked": rep.checked,
                    "profile": rep.profile.signs,
                }),
                json!([]),
                json!(rep.violations),
            );
            Ok(vec![ReportSet::new("periodicity", vec![check])])
        }
        "prop-d-odd-sign" => {
            let r = params.rank.unwrap_or(5);
            if r % 8 != 5 {
                return Err(Failure::usage(format!("rank {r} is not 5 mod 8")));
            }
            config.check_conductor(8 * r as u64 - 4)?;
            let computed = signature::signature_d(r, r as i64).map_err(classify)?;
            Ok(vec![ReportSet::new(
                "prop-d-odd-sign",
                vec![VerifierReport::new(
                    "prop-d-odd-sign",
                    json!({"rank": r, "k": r}),
                    json!(-1),
                    json!(computed.to_i32()),
                )],
            )])
        }
        "prop-d-even-sign" => {
            let r = params.rank.unwrap_or(4);
            let k = match r % 8 {
                4 => 2 * r as i64 + 1,
                6 => r as i64 - 1,
                other => {
                    return Err(Failure::usage(format!(
                        "rank {r} is {other} mod 8; need 4 or 6"
                    )))
                }
            };
            config.check_conductor(8 * r as u64 - 4)?;
            let computed = signature::signature_d(r, k).map_err(classify)?;
            Ok(vec![ReportSet::new(
                "prop-d-even-sign",
                vec![VerifierReport::new(
                    "prop-d-even-sign",
                    json!({"rank": r, "k": k}),
                    json!(-1),
                    json!(computed.to_i32()),
                )],
            )])
        }
        "lemma-b-shift" => {
            let b = params.b.unwrap_or(3);
            check_rank(b)?;
            config.check_conductor(16 * b as u64)?;
            let set = signature::check_shift_b(b, params.k.unwrap_or(1), params.x_max.unwrap_or(3))
                .map_err(classify)?;
            Ok(vec![set])
        }
        "prop-bd-separation" => {
            let r = params.rank.unwrap_or(12);
            config.check_conductor(16 * (2 * r as u64 - 1))?;
            eprintln!(
                "building exact √dim for ranks {r} (D) and {} (B)...",
                2 * r - 1
            );
            Ok(vec![signature::verify_bd_separation(r).map_err(classify)?])
        }
        "thm-independence-odd" => {
            let primes = if params.primes.is_empty() {
                vec![41, 73]
            } else {
                params.primes.clone()
            };
            for &p in &primes {
                config.check_conductor(4 * p)?;
            }
            eprintln!("independence run over primes {primes:?}...");
            Ok(vec![
                signature::verify_independence_d_odd(&primes).map_err(classify)?
            ])
        }
        "thm-independence-even" => {
            let primes7 = if params.primes7.is_empty() {
                vec![7]
            } else {
                params.primes7.clone()
            };
            let primes11 = if params.primes11.is_empty() {
                vec![11]
            } else {
                params.primes11.clone()
            };
            for &p in primes7.iter().chain(&primes11) {
                config.check_conductor(4 * p)?;
            }
            eprintln!("independence run over primes {primes7:?} and {primes11:?}...");
            Ok(vec![signature::verify_independence_d_even(
                &primes7, &primes11,
            )
            .map_err(classify)?])
        }
        "thm-pointed-ising" => {
            let max_p = params.max_p.unwrap_or(100);
            config.check_conductor(4 * max_p)?;
            Ok(vec![
                signature::verify_pointed_ising(max_p).map_err(classify)?
            ])
        }
        "jacobi-conditions" => {
            let primes = if params.primes.is_empty() {
                vec![7, 23]
            } else {
                params.primes.clone()
            };
            Ok(vec![
                signature::verify_jacobi_conditions(&primes).map_err(classify)?
            ])
        }
        "anisotropy-d4" => {
            eprintln!("running the anisotropy pipeline...");
            Ok(vec![claim_anisotropy(config)?])
        }
        "all" => {
            let mut sets = vec![claim_d_count(50), claim_s_parity(200)];
            sets.push(claim_sine_galois(30, config)?);
            sets.push(claim_t_order(None, config)?);
            for r in [2usize, 3, 4] {
                sets.push(claim_dim_double_check(r)?);
                sets.push(claim_central_charge(r)?);
            }
            for r in [4usize, 5, 6] {
                eprintln!("periodicity sweep at rank {r}...");
                let rep = signature::check_periodicity_d(r, 300).map_err(classify)?;
                sets.push(ReportSet::new(
                    "periodicity",
                    vec![VerifierReport::new(
                        "periodicity",
                        json!({"rank": r, "window": 300, "checked": rep.checked}),
                        json!([]),
                        json!(rep.violations),
                    )],
                ));
            }
            eprintln!("signature propositions...");
            for (r, k, expect) in [(5usize, 5i64, -1), (13, 13, -1), (4, 9, -1), (6, 5, -1)] {
                let computed = signature::signature_d(r, k).map_err(classify)?;
                sets.push(ReportSet::new(
                    if r % 2 == 1 {
                        "prop-d-odd-sign"
                    } else {
                        "prop-d-even-sign"
                    },
                    vec![VerifierReport::new(
                        if r % 2 == 1 {
                            "prop-d-odd-sign"
                        } else {
                            "prop-d-even-sign"
                        },
                        json!({"rank": r, "k": k}),
                        json!(expect),
                        json!(computed.to_i32()),
                    )],
                ));
            }
            sets.push(signature::check_shift_b(3, 1, 3).map_err(classify)?);
            eprintln!("separation at rank 12 (this builds the rank-23 B value)...");
            sets.push(signature::verify_bd_separation(12).map_err(classify)?);
            eprintln!("independence witnesses...");
            sets.push(signature::verify_independence_d_odd(&[41, 73]).map_err(classify)?);
            sets.push(signature::verify_independence_d_even(&[7], &[11]).map_err(classify)?);
            sets.push(signature::verify_pointed_ising(100).map_err(classify)?);
            sets.push(signature::verify_jacobi_conditions(&[7, 23]).map_err(classify)?);
            eprintln!("anisotropy pipeline...");
            sets.push(claim_anisotropy(config)?);
            Ok(sets)
        }
        unknown => Err(Failure::usage(format!(
            "unknown claim {unknown:?}; known claims: {}",
            CLAIMS.join(", ")
        ))),
    }
}

fn claim_d_count(max_rank: u64) -> ReportSet {
    let mut first_violation: Option<(u64, u64)> = None;
    for r in 2..=max_rank {
        for j in 1..=2 * r {
            if d_count(r, j) != d_count_bruteforce(r, j) {
                first_violation = Some((r, j));
            }
        }
    }
    ReportSet::new(
        "lemma-d-count",
        vec![VerifierReport::new(
            "lemma-d-count",
            json!({"max_rank": max_rank, "first_violation": first_violation}),
            json!(true),
            json!(first_violation.is_none()),
        )],
    )
}

fn claim_s_parity(max_rank: u64) -> ReportSet {
    let first_odd = (1..=max_rank).find(|&r| s_set(r).len() % 2 == 1);
    ReportSet::new(
        "lemma-s-parity",
        vec![VerifierReport::new(
            "lemma-s-parity",
            json!({"max_rank": max_rank, "first_odd": first_odd}),
            json!(true),
            json!(first_odd.is_none()),
        )],
    )
}

fn claim_sine_galois(max_m: u64, config: &RunConfig) -> Result<ReportSet, Failure> {
    eprintln!("exhaustive sine-Galois sweep up to m = {max_m}...");
    let mut checked = 0u64;
    let mut first_violation: Option<(u64, u64, u64)> = None;
    'outer: for m in 1..=max_m {
        let n = exact::lcm_u64(2 * m, 4);
        for j in 1..2 * m {
            if j == m {
                continue;
            }
            let s = sin_pi_frac(j as i64, m);
            for k in 1..n {
                if exact::gcd_u64(k, n) != 1 {
                    continue;
                }
                let conj = galois_apply(k as i64, &s).map_err(classify)?;
                let got = certified_sign(&conj, config.precision)
                    .map_err(classify)?
                    .map(Sign::to_i32);
                let kj = (k * j) % (2 * m);
                let expect = jacobi(-1, k as i128).map_err(classify)? * if kj < m { 1 } else { -1 };
                checked += 1;
                if got != Some(expect) {
                    first_violation = Some((m, j, k));
                    break 'outer;
                }
            }
        }
    }
    Ok(ReportSet::new(
        "lemma-sine-galois",
        vec![VerifierReport::new(
            "lemma-sine-galois",
            json!({"max_m": max_m, "checked": checked, "first_violation": first_violation}),
            json!(true),
            json!(first_violation.is_none()),
        )],
    ))
}

fn claim_t_order(rank: Option<usize>, config: &RunConfig) -> Result<ReportSet, Failure> {
    let mut checks = Vec::new();
    match rank {
        Some(r) => {
            check_rank(r)?;
            config.check_conductor(wittsig::invariants::twist_conductor(r))?;
            let n = t_order(r).map_err(classify)?;
            let mut odd = n;
            let mut s = 0u32;
            while odd % 2 == 0 {
                odd /= 2;
                s += 1;
            }
            checks.push(VerifierReport::new(
                "lemma-t-order",
                json!({"rank": r, "t_order": n, "two_exponent": s}),
                json!(true),
                json!(odd == 2 * r as u64 - 1 && s <= 4),
            ));
            if r % 2 == 1 {
                checks.push(VerifierReport::new(
                    "lemma-t-order",
                    json!({"rank": r, "kind": "odd rank exact value"}),
                    json!(16 * (2 * r as u64 - 1)),
                    json!(n),
                ));
            }
        }
        None => {
            for (r, expect) in [(3usize, 80u64), (5, 144)] {
                let n = t_order(r).map_err(classify)?;
                checks.push(VerifierReport::new(
                    "lemma-t-order",
                    json!({"rank": r}),
                    json!(expect),
                    json!(n),
                ));
            }
            let n4 = t_order(4).map_err(classify)?;
            let mut odd = n4;
            let mut s = 0u32;
            while odd % 2 == 0 {
                odd /= 2;
                s += 1;
            }
            checks.push(VerifierReport::new(
                "lemma-t-order",
                json!({"rank": 4, "t_order": n4, "two_exponent": s}),
                json!(true),
                json!(odd == 7 && s <= 4),
            ));
        }
    }
    Ok(ReportSet::new("lemma-t-order", checks))
}

fn claim_dim_double_check(r: usize) -> Result<ReportSet, Failure> {
    eprintln!("dimension double-check at rank {r}...");
    let data = CategoryData::build(r).map_err(classify)?;
    let d = sqrt_dim_formula_d(r).map_err(classify)?;
    let scale = exact::rat(if r % 2 == 1 { 8 } else { 16 });
    let equal = (&d * &d).scale(&scale) == data.dim_total;
    Ok(ReportSet::new(
        "dim-double-check",
        vec![VerifierReport::new(
            "dim-double-check",
            json!({"rank": r, "objects": data.objects.len()}),
            json!(true),
            json!(equal),
        )],
    ))
}

fn claim_central_charge(r: usize) -> Result<ReportSet, Failure> {
    let data = CategoryData::build(r).map_err(classify)?;
    let xi = data.central_charge(1).map_err(classify)?;
    let expect = CyclotomicNumber::zeta_pow(8, (r * r) as i64);
    // equality is semantic (the two sides live at different conductors)
    Ok(ReportSet::new(
        "central-charge",
        vec![VerifierReport::new(
            "central-charge",
            json!({"rank": r, "xi_1": xi.to_string(), "closed_form": expect.to_string()}),
            json!(true),
            json!(xi == expect),
        )],
    ))
}

fn claim_anisotropy(config: &RunConfig) -> Result<ReportSet, Failure> {
    let rep = wittsig::anisotropy::anisotropy_report(config.precision).map_err(classify)?;
    let checks = vec![
        VerifierReport::new(
            "anisotropy-d4",
            json!({"stage": "trivial-twist census"}),
            json!(12),
            json!(rep.trivial_twist_count),
        ),
        VerifierReport::new(
            "anisotropy-d4",
            json!({"stage": "candidate bounds"}),
            json!([11, 2]),
            json!([rep.bound_a1, rep.bound_a2]),
        ),
        VerifierReport::new(
            "anisotropy-d4",
            json!({"stage": "totally positive survivors"}),
            json!([[0, 1], [0, 2]]),
            json!(rep.totally_positive_survivors),
        ),
        VerifierReport::new(
            "anisotropy-d4",
            json!({"stage": "norm-integral survivors"}),
            json!([[0, 2]]),
            json!(rep.norm_integral_survivors),
        ),
        VerifierReport::new(
            "anisotropy-d4",
            json!({"stage": "final ratio in (1,2)", "ratio": rep.final_ratio_decimal}),
            json!(true),
            json!(rep.final_ratio_strictly_between_1_and_2),
        ),
        VerifierReport::new(
            "anisotropy-d4",
            json!({"stage": "verdict"}),
            json!(true),
            json!(rep.verdict.starts_with("completely anisotropic")),
        ),
    ];
    Ok(ReportSet::new("anisotropy-d4", checks))
}
