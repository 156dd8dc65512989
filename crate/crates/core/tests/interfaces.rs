//! The machine-readable surfaces: alcove JSON lines, category-data
//! export, and verifier report JSON.

use wittsig::invariants::CategoryData;
use wittsig::roots::alcove_jsonl;
use wittsig::signature::verify_jacobi_conditions;

#[test]
fn alcove_jsonl_schema() {
    let dump = alcove_jsonl(3).unwrap();
    let mut count = 0;
    for line in dump.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        let coords = v["coords2"].as_array().unwrap();
        assert_eq!(coords.len(), 3);
        assert!(v["level_pairing"].is_i64());
        count += 1;
    }
    assert!(count > 10);
    // deterministic bytes
    assert_eq!(dump, alcove_jsonl(3).unwrap());
    // unit object appears with level pairing 0
    assert!(dump.contains("{\"coords2\":[0,0,0],\"level_pairing\":0}"));
}

#[test]
fn category_export_schema() {
    let data = CategoryData::build(3).unwrap();
    let json = serde_json::to_value(data.export()).unwrap();
    assert_eq!(json["rank"], 3);
    assert_eq!(json["t_order"], 80);
    assert_eq!(json["twist_conductor"], 80);
    let objects = json["objects"].as_array().unwrap();
    assert_eq!(objects.len(), data.objects.len());
    for o in objects {
        assert!(o["coords2"].is_array());
        assert!(o["twist_exponent_num"].as_u64().unwrap() < 80);
        assert!(o["qdim_approx"].as_f64().unwrap() > 0.0);
    }
    assert!(json["dim_decimal"].as_str().unwrap().len() >= 50);
    assert!(json["dim_rounding"].as_str().unwrap().contains("50"));
}

#[test]
fn verifier_report_schema() {
    let set = verify_jacobi_conditions(&[7]).unwrap();
    let json = serde_json::to_value(&set).unwrap();
    assert_eq!(json["claim"], "jacobi-conditions");
    assert_eq!(json["status"], "ok");
    for check in json["checks"].as_array().unwrap() {
        for key in ["claim", "parameters", "expected", "computed", "status"] {
            assert!(check.get(key).is_some(), "missing {key}");
        }
    }
}
