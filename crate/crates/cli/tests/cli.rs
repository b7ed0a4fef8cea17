use std::path::PathBuf;
use std::process::{Command, Output};

use jumploci_cli::CliError;
use jumploci_core::Error;
use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jumploci")).args(args).output().unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn compute_flag() {
    let v = json(&["compute", "--input", &data("flag.session")]);
    assert_eq!(v["jump_numbers"], serde_json::json!([8, 12, 14, 16]));
    assert_eq!(v["rank"], 16);
    assert_eq!(v["complexity"], 3);
    assert_eq!(v["betti_degree"], 4);
    assert_eq!(v["bass_degree"], 4);
    assert!(v["duality"].is_null());
    let raw = String::from_utf8(run(&["compute", "--input", &data("flag.session")]).stdout).unwrap();
    let keys = ["rank", "jump_numbers", "loci", "complexity", "betti_degree", "bass_degree", "duality"];
    let at: Vec<usize> = keys.iter().map(|k| raw.find(&format!("\"{k}\"")).unwrap()).collect();
    assert!(at.windows(2).all(|w| w[0] < w[1]), "{raw}");
}

#[test]
fn perfect_module_has_no_betti_degree() {
    let v = json(&["compute", "--input", &data("ring_itself.session")]);
    assert!(v["betti_degree"].is_null());
    assert_eq!(v["complexity"], 0);
}

#[test]
fn koszulcx_has_one_plateau_then_the_unit_ideal() {
    let v = json(&["compute", "--input", &data("koszulcx.session")]);
    let loci = v["loci"].as_array().unwrap();
    assert_eq!(loci.len(), 2);
    assert_eq!(loci[0]["ideal"], serde_json::json!([]));
    assert_eq!((loci[0]["i_from"].as_u64(), loci[0]["i_to"].as_u64()), (Some(0), Some(4)));
    assert_eq!(loci[1]["ideal"], serde_json::json!(["1"]));
}

#[test]
fn json_is_byte_identical_across_runs() {
    for cmd in ["compute", "dual"] {
        let a = run(&[cmd, "--input", &data("flag.session"), "--seed", "11"]);
        let b = run(&[cmd, "--input", &data("flag.session"), "--seed", "11"]);
        assert_eq!(a.stdout, b.stdout);
    }
    let a = run(&["oracle", "--points", "4", "--input", &data("final.session"), "--seed", "5"]);
    let b = run(&["oracle", "--points", "4", "--input", &data("final.session"), "--seed", "5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn betti_matches_the_quasi_polynomials() {
    let v = json(&["betti", "--n", "20", "--input", &data("final.session")]);
    let m = &v["module"];
    assert_eq!(m["quasi_polynomial"]["even"], serde_json::json!(["1", "3/2"]));
    assert_eq!(m["quasi_polynomial"]["odd"], serde_json::json!(["3/2", "3/2"]));
    let d = &v["dual"];
    assert_eq!(d["quasi_polynomial"]["even"], serde_json::json!(["2", "3/2"]));
    assert_eq!(d["quasi_polynomial"]["odd"], serde_json::json!(["3/2", "3/2"]));
    let betti: Vec<u64> = m["betti"].as_array().unwrap().iter().map(|b| b.as_u64().unwrap()).collect();
    assert_eq!(betti.len(), 21);
    for (i, b) in betti.iter().enumerate().skip(4) {
        let expected = if i % 2 == 0 { 3 * i / 2 + 1 } else { (3 * i + 3) / 2 };
        assert_eq!(*b as usize, expected, "beta_{i}");
    }
}

#[test]
fn dual_on_e_homotopies_is_all_equal() {
    let v = json(&["dual", "--input", &data("e_homotopies.session")]);
    assert_eq!(v["duality"]["per_index_equal"], true);
    assert_eq!(v["duality"]["bdeg_equal"], true);
}

#[test]
fn realize_and_crk() {
    let v = json(&["realize", "--chain", &data("two_step.chain"), "--input", &data("flag.session")]);
    assert_eq!(v["plateaus"], serde_json::json!([[0, 8], [9, 24], [25, 56], [57, 57]]));
    assert_eq!(v["report"]["jump_numbers"], serde_json::json!([8, 24, 56]));
    let v = json(&["crk", "--point", "0,0,0", "--input", &data("flag.session")]);
    assert_eq!(v["crk"], 16);
    let v = json(&["crk", "--point", "1,-1/2", "--input", &data("koszulcx.session")]);
    assert_eq!(v["crk"], 4);
}

#[test]
fn text_format_and_output_file() {
    let out = run(&["compute", "--input", &data("flag.session"), "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("jump numbers 8, 12, 14, 16"), "{text}");
    let path = std::env::temp_dir().join(format!("jumploci-cli-test-{}.json", std::process::id()));
    let out = run(&["compute", "--input", &data("final.session"), "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["betti_degree"], 3);
    std::fs::remove_file(path).unwrap();
}

#[test]
fn input_errors_exit_with_1() {
    let dir = std::env::temp_dir().join(format!("jumploci-cli-bad-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("gf4.session");
    std::fs::write(&bad, "field GF(4)\n").unwrap();
    let out = run(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, column 10: invalid field: 4 is not prime"));
    let out = run(&["compute", "--input", dir.join("missing").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["realize", "--chain", &data("bad.chain"), "--input", &data("flag.session")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid chain"));
    let out = run(&["crk", "--point", "1,2", "--input", &data("flag.session")]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["oracle", "--input", &data("koszulcx.session")]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn internal_errors_map_to_exit_code_2() {
    assert_eq!(CliError::Core(Error::RouteDisagreement("x".into())).exit_code(), 2);
    assert_eq!(CliError::Core(Error::Internal("x".into())).exit_code(), 2);
    assert_eq!(CliError::Check("x".into()).exit_code(), 2);
    assert_eq!(CliError::Core(Error::NotRegular).exit_code(), 1);
}

#[test]
fn verbose_prints_groebner_statistics() {
    let out = Command::new(env!("CARGO_BIN_EXE_jumploci"))
        .args(["compute", "--input", &data("final.session")])
        .env("JUMPLOCI_VERBOSE", "1")
        .output()
        .unwrap();
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.starts_with("gb: "), "{err}");
    assert!(!err.starts_with("gb: 0 pairs"), "{err}");
}
