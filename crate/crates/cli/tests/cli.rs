use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn glinf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glinf")).args(args).output().expect("binary runs")
}

fn glinf_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_glinf")).args(args).env(key, value).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn lr_box_times_box() {
    let out = glinf(&["lr", "[1]", "[1]"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["decomposition"]["[2]"], 1);
    assert_eq!(v["decomposition"]["[1,1]"], 1);
    assert_eq!(v["decomposition"].as_object().unwrap().len(), 2);
}

#[test]
fn lr_empty_factor_is_identity() {
    let v = json(&glinf(&["lr", "[]", "[3,1]"]));
    let d = v["decomposition"].as_object().unwrap();
    assert_eq!(d.len(), 1);
    assert_eq!(d["[3,1]"], 1);
}

#[test]
fn lr_single_coefficient_with_oracle() {
    let out = glinf(&["--format", "tsv", "lr", "[2,1]", "[2,1]", "[3,2,1]", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[3,2,1]\t2");
    let v = json(&glinf(&["lr", "[2,1]", "[2,1]", "[3,2,1]", "--oracle"]));
    assert_eq!(v["coefficient"], 2);
    assert_eq!(v["oracle"], 2);
}

#[test]
fn cauchy_passes() {
    for (n, dmax) in [("2", "4"), ("1", "10")] {
        let out = glinf(&["cauchy", "--n", n, "--dmax", dmax]);
        assert_eq!(out.status.code(), Some(0), "n = {n}");
        assert_eq!(json(&out)["passed"], true);
    }
}

#[test]
fn singular_poly_degree_two() {
    let v = json(&glinf(&["singular-poly", "--n", "2", "--d", "2"]));
    assert_eq!(v["dim"], 2);
    assert_eq!(v["passed"], true);
}

fn lowest_labels(v: &Value) -> Vec<(u64, String)> {
    let blocks = v["singular"].as_array().unwrap();
    let Some(min) = blocks.iter().map(|b| b["level"].as_u64().unwrap()).min() else {
        return Vec::new();
    };
    blocks
        .iter()
        .filter(|b| b["level"].as_u64() == Some(min))
        .flat_map(|b| b["vectors"].as_array().unwrap().iter())
        .map(|x| (min, x["det_monomial"].as_str().unwrap_or("?").to_string()))
        .collect()
}

#[test]
fn singular_ghat_examples() {
    let v = json(&glinf(&["singular-ghat", "--c", "0", "--level-max", "3"]));
    assert_eq!(lowest_labels(&v), vec![(1, "Det_1·v".to_string())]);
    let v = json(&glinf(&["singular-ghat", "--c", "-1", "--level-max", "4"]));
    assert_eq!(lowest_labels(&v), vec![(4, "Det_2·v".to_string())]);
    let v = json(&glinf(&["singular-ghat", "--c", "1/2", "--level-max", "4"]));
    assert!(v["singular"].as_array().unwrap().is_empty());
}

#[test]
fn rational_spellings_agree() {
    let a = glinf(&["singular-ghat", "--c", "0.5", "--level-max", "3"]);
    let b = glinf(&["singular-ghat", "--c", "1/2", "--level-max", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn commutator_check_passes() {
    let out = glinf(&["commutator-check", "--k", "2", "--l", "2", "--c", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["equal"], true);
}

#[test]
fn reciprocity_adjoint_and_trivial() {
    let out = glinf(&["reciprocity", "--nu", "[1,0,-1]", "--lambda-minus", "[1]", "--mu-plus", "[1]", "--N-list", "4,5,6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["lhs"], 1);
    assert_eq!(v["equal"], true);
    let out = glinf(&["reciprocity", "--nu", "[0]", "--lambda-minus", "[]", "--mu-plus", "[]", "--N-list", "3,4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["lhs"], 1);
}

#[test]
fn reciprocity_rank_below_bound_is_usage_error() {
    let out = glinf(&["reciprocity", "--nu", "[1,0,-1]", "--lambda-minus", "[1]", "--mu-plus", "[1]", "--N-list", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("below the required minimum"));
}

#[test]
fn seeded_random_batch_is_reproducible() {
    let args = ["reciprocity", "--random", "12", "--seed", "7", "--max-size", "3"];
    let a = glinf(&args);
    let b = glinf(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8_lossy(&a.stdout);
    let last: Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["summary"]["cases"], 12);
    assert_eq!(last["summary"]["failed"], 0);
}

#[test]
fn batch_file_reports_bad_lines_and_continues() {
    let dir = std::env::temp_dir().join(format!("glinf-batch-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cases.jsonl");
    let mut f = std::fs::File::create(&path).unwrap();
    writeln!(f, r#"{{"nu":[1,0,-1],"lambda_minus":[1],"mu_plus":[1],"n_list":[4,5]}}"#).unwrap();
    writeln!(f, "not json").unwrap();
    writeln!(f, r#"{{"nu":[0,0],"lambda_minus":[],"mu_plus":[],"n_list":[2,3]}}"#).unwrap();
    drop(f);
    let out = glinf(&["reciprocity", "--batch", path.to_str().unwrap()]);
    let lines: Vec<Value> =
        String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0].get("report").is_some());
    assert!(lines[1].get("error").is_some());
    assert!(lines[2].get("report").is_some());
    assert_eq!(lines[3]["summary"]["errors"], 1);
    assert_ne!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn invalid_partition_is_usage_error() {
    let out = glinf(&["lr", "[1,2]", "[1]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error:"));
}

#[test]
fn band_escape_suggests_truncation() {
    let out = glinf(&["singular-ghat", "--c", "0", "--level-max", "3", "--band", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("use a truncation of at least"));
}

#[test]
fn environment_caps_are_enforced() {
    let out = glinf_env(&["singular-ghat", "--c", "0", "--level-max", "4"], "GLINF_MAX_LEVEL", "3");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("GLINF_MAX_LEVEL"));
    let out = glinf_env(&["cauchy", "--n", "2", "--dmax", "6"], "GLINF_MAX_DEGREE", "4");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tsv_and_json_agree_on_kac_radul() {
    let j = json(&glinf(&["kac-radul", "--nu", "[1,0,-1]", "--N", "4", "--size-bound", "2"]));
    let t = glinf(&["--format", "tsv", "kac-radul", "--nu", "[1,0,-1]", "--N", "4", "--size-bound", "2"]);
    let tsv: Vec<(String, u64)> = String::from_utf8_lossy(&t.stdout)
        .lines()
        .map(|l| {
            let (k, v) = l.split_once('\t').unwrap();
            (k.to_string(), v.parse().unwrap())
        })
        .collect();
    let obj = j.as_object().unwrap();
    assert_eq!(tsv.len(), obj.len());
    for (k, v) in &tsv {
        assert_eq!(obj[k], *v);
    }
    assert_eq!(obj["[2]|[2]"], 1);
}
