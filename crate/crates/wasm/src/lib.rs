//! Browser bindings for the interactive demo page: three operations,
//! each returning a JSON string the page renders directly.
//!
//! Ranks are capped so every call stays comfortably interactive; the
//! exact arithmetic underneath is the same as in the library and CLI.
//! The `*_impl` functions are plain Rust so they test on the host; the
//! exported wrappers only translate errors for JS.

use wasm_bindgen::prelude::*;

use wittsig::exact::{gcd_u64, Precision};
use wittsig::invariants::CategoryData;
use wittsig::signature::{Family, SignatureFamily};

fn invariants_impl(rank: u32) -> Result<String, String> {
    if !(2..=6).contains(&rank) {
        return Err("rank must be between 2 and 6 in the demo".into());
    }
    let data = CategoryData::build(rank as usize).map_err(|e| e.to_string())?;
    serde_json::to_string(&data.export()).map_err(|e| e.to_string())
}

fn signature_profile_impl(family: &str, rank: u32, window: u32) -> Result<String, String> {
    let fam = match family {
        "D" | "d" => Family::D,
        "B" | "b" => Family::B,
        _ => return Err("family must be D or B".into()),
    };
    match fam {
        Family::D if !(2..=16).contains(&rank) => {
            return Err("type D rank must be between 2 and 16 in the demo".into())
        }
        Family::B if !(3..=9).contains(&rank) || rank % 2 == 0 => {
            return Err("type B rank must be odd, between 3 and 9, in the demo".into())
        }
        _ => {}
    }
    let window = window.clamp(1, 600) as u64;
    let member = SignatureFamily::new(fam, rank as usize)
        .map_err(|e| e.to_string())?
        .with_precision(Precision::default());
    let conductor = member.conductor();
    let modulus = match fam {
        Family::D => 4 * rank as u64 - 2,
        Family::B => 8 * rank as u64,
    };
    let mut ks = Vec::new();
    let mut signs = Vec::new();
    for k in 1..=window {
        if gcd_u64(k % conductor, conductor) != 1 {
            continue;
        }
        ks.push(k);
        signs.push(member.sign(k as i64).map_err(|e| e.to_string())?.to_i32());
    }
    serde_json::to_string(&serde_json::json!({
        "family": fam.to_string(),
        "rank": rank,
        "conductor": conductor,
        "periodicity_modulus": modulus,
        "k": ks,
        "sign": signs,
    }))
    .map_err(|e| e.to_string())
}

fn anisotropy_impl() -> Result<String, String> {
    let rep =
        wittsig::anisotropy::anisotropy_report(Precision::default()).map_err(|e| e.to_string())?;
    serde_json::to_string(&rep).map_err(|e| e.to_string())
}

/// Category data of `so(2r)_{2r}` for 2 ≤ r ≤ 6: per-object twist
/// exponents and quantum dimensions, T-order and the global dimension.
#[wasm_bindgen]
pub fn invariants_json(rank: u32) -> Result<String, JsError> {
    invariants_impl(rank).map_err(|e| JsError::new(&e))
}

/// Signature profile `k ↦ sgn(σ_k(√dim))` for coprime `k ≤ window`.
/// Family "D" accepts 2 ≤ rank ≤ 16, family "B" odd ranks 3 ≤ rank ≤ 9.
#[wasm_bindgen]
pub fn signature_profile_json(family: &str, rank: u32, window: u32) -> Result<String, JsError> {
    signature_profile_impl(family, rank, window).map_err(|e| JsError::new(&e))
}

/// The full exclusion pipeline for the local-module category of
/// `so(8)_8`, as the same report the CLI emits.
#[wasm_bindgen]
pub fn anisotropy_json() -> Result<String, JsError> {
    anisotropy_impl().map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariants_payload_parses() {
        let s = invariants_impl(3).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["t_order"], 80);
        assert!(invariants_impl(9).is_err());
    }

    #[test]
    fn profile_payload_parses() {
        let s = signature_profile_impl("D", 4, 60).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["periodicity_modulus"], 14);
        let ks = v["k"].as_array().unwrap();
        let signs = v["sign"].as_array().unwrap();
        assert_eq!(ks.len(), signs.len());
        assert_eq!(signs[0], 1); // ε(σ1) = +1
        assert!(signature_profile_impl("B", 4, 10).is_err());
        assert!(signature_profile_impl("X", 4, 10).is_err());
    }

    #[test]
    fn anisotropy_payload_parses() {
        let s = anisotropy_impl().unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["bound_a1"], 11);
        assert!(v["verdict"].as_str().unwrap().contains("anisotropic"));
    }
}
