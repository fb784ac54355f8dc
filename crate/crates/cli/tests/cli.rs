use std::process::Command;

use alcove_cli::config::JobConfig;
use alcove_cli::run;
use alcove_cli::tables::{parse_rows, FacetRow, RelposRow, Row, SpiralRow, WeightRow, WeylBallRow};
use serde_json::Value;

fn alcove(args: &[&str]) -> (String, String, i32) {
    run(std::iter::once("alcove").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let (out, err, code) = alcove(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn data_lines(tsv: &str) -> Vec<&str> {
    tsv.lines().filter(|l| !l.starts_with('#')).skip(1).collect()
}

/// Parses every row, re-prints it, and compares with the original lines.
fn round_trip<R: Row + PartialEq + std::fmt::Debug>(tsv: &str) -> Vec<R> {
    let rows: Vec<R> = parse_rows(tsv).unwrap();
    let printed: Vec<String> = rows.iter().map(|r| r.fields().join("\t")).collect();
    assert_eq!(printed, data_lines(tsv));
    for (r, line) in rows.iter().zip(data_lines(tsv)) {
        let fields: Vec<&str> = line.split('\t').collect();
        assert_eq!(&R::parse(&fields).unwrap(), r);
    }
    rows
}

#[test]
fn tables_round_trip() {
    let t = ok(&["--system", "C2", "--radius", "2", "table", "weyl-ball", "--format", "tsv"]);
    let rows = round_trip::<WeylBallRow>(&t);
    // s0 and s2 commute, so length 2 has five elements
    assert_eq!(rows.len(), 1 + 3 + 5);
    assert!(rows.windows(2).all(|w| w[0].length <= w[1].length));

    let t = ok(&["--system", "A2", "--radius", "1", "table", "facets", "--format", "tsv"]);
    round_trip::<FacetRow>(&t);

    let t = ok(&["--system", "G2", "--theta", "[1,1]", "--m", "3", "table", "spiral", "--window=-3:3", "--format", "tsv"]);
    round_trip::<SpiralRow>(&t);

    let t = ok(&["--system", "C2", "--sigma", "1", "--radius", "2", "table", "relpos", "--format", "tsv"]);
    let rows = round_trip::<RelposRow>(&t);
    assert!(rows.iter().any(|r| r.good) && rows.iter().any(|r| !r.good));

    let t = ok(&["--system", "A2", "--depth", "2", "table", "weights", "--lambda0", "[1/5,2/7]", "--format", "tsv"]);
    round_trip::<WeightRow>(&t);
}

#[test]
fn json_mirrors_tsv() {
    let args = ["--system", "A2", "--radius", "1", "table", "facets"];
    let json: Value = serde_json::from_str(&ok(&args)).unwrap();
    let tsv = ok(&[&args[..], &["--format", "tsv"]].concat());
    let rows: Vec<FacetRow> = parse_rows(&tsv).unwrap();
    let arr = json["result"].as_array().unwrap();
    assert_eq!(arr.len(), rows.len());
    for (obj, row) in arr.iter().zip(&rows) {
        for (col, val) in FacetRow::COLUMNS.iter().zip(row.fields()) {
            assert_eq!(obj[*col].as_str().unwrap(), val);
        }
    }
}

#[test]
fn spec_table_examples() {
    // generic λ₀ and N = 1: one weight per element of the ball
    let t = ok(&["--system", "A2", "--depth", "1", "table", "weights", "--lambda0", "[1/5,2/7]", "--format", "tsv"]);
    let rows: Vec<WeightRow> = parse_rows(&t).unwrap();
    assert_eq!(rows.len(), 1 + 3);
    assert!(rows.iter().all(|r| r.multiplicity == 1));

    // radius 0: one face of the fundamental alcove per proper subset of the nodes
    for (sys, nodes) in [("A2", 3), ("C3", 4), ("G2", 3)] {
        let t = ok(&["--system", sys, "--radius", "0", "table", "facets", "--format", "tsv"]);
        assert_eq!(data_lines(&t).len(), (1 << nodes) - 1, "{sys}");
    }

    // λ = 0, ε = 1: P_n is everything of degree n̄ when n ≤ 0, L lives in degree 0 only
    let t = ok(&["--system", "A2", "--theta", "[1,1]", "--m", "3", "table", "spiral", "--lambda", "[0,0]", "--window=-2:2", "--format", "tsv"]);
    let rows: Vec<SpiralRow> = parse_rows(&t).unwrap();
    assert!(rows.iter().all(|r| r.p && r.l == (r.n == 0) && r.u == (r.n < 0)));
    let degree = |root: &str| -> i64 {
        let v: Vec<i64> = serde_json::from_str(root).unwrap();
        v.iter().sum::<i64>().rem_euclid(3)
    };
    for n in -2i64..=2 {
        let members: Vec<&str> = rows.iter().filter(|r| r.n == n).map(|r| r.member.as_str()).collect();
        let roots = members.iter().filter(|m| **m != "h").count();
        let expected = match (n > 0, n.rem_euclid(3)) {
            (true, _) | (false, 0) => 0,
            _ => 3,
        };
        assert_eq!(roots, expected, "degree {n}");
        assert_eq!(members.contains(&"h"), n <= 0 && n.rem_euclid(3) == 0);
        assert!(members.iter().filter(|m| **m != "h").all(|m| degree(m) == n.rem_euclid(3)));
    }
}

#[test]
fn spiral_command_example() {
    let (out, _, code) = alcove(&[
        "--system", "A1", "--theta", "1/2", "--theta-basis", "coroot", "--m", "2", "--d", "1", "spiral", "--facet", "e|{1}",
        "--window", "-4:4", "--format", "tsv",
    ]);
    assert_eq!(code, 0);
    let rows: Vec<SpiralRow> = parse_rows(&out).unwrap();
    assert!(!rows.is_empty());
    // θ̃ = α∨/2 pairs to 1 with α; without the coroot basis flag it is not a cocharacter
    let (_, err, code) = alcove(&["--system", "A1", "--theta", "1/2", "--m", "2", "spiral"]);
    assert_eq!(code, 2, "{err}");
}

#[test]
fn ddaha_literals() {
    let out = ok(&["--system", "A1", "ddaha", "--expr", "s1*s0*x1^2 + (3/2)*s1", "--format", "tsv"]);
    assert!(out.contains("normal_form\t(3/2)*s1 + s1*s0*x1^2"));
    let out = ok(&["--system", "A1", "ddaha", "--expr", "x1", "--times", "s1"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    // m = d = 1 gives h = c/2 = 1, and (x1 − s1 x1)/α1 = 2
    assert_eq!(v["result"]["product"], "2 - s1*x1");
    // h = 0 is refused unless asked for, and then gives the smash product
    assert_eq!(alcove(&["--system", "A1", "ddaha", "--u", "0"]).2, 2);
    assert_eq!(alcove(&["--system", "A1", "ddaha", "--c", "1"]).2, 2);
    let out = ok(&["--system", "A1", "ddaha", "--expr", "x1", "--times", "s1", "--u", "0", "--unsafe-params"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["result"]["product"], "-s1*x1");
}

#[test]
fn from_sigma_pipeline_flags_bc() {
    let out = ok(&["--system", "C2", "--sigma", "1", "ddaha", "--from-sigma", "--expr", "s0*s1"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let id = &v["result"]["type_identification"];
    let labels: Vec<&str> = id["candidates"].as_array().unwrap().iter().map(|c| c["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["A1", "BC1"]);
    assert_eq!(id["chosen"]["label"], "BC1");
    assert_eq!(v["result"]["group"], "affine BC1");
}

#[test]
fn relative_output_shape() {
    let out = ok(&["--system", "A3", "--sigma", "1,3", "--radius", "4", "relative"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let r = &v["result"];
    assert_eq!(r["admissible"], true);
    assert_eq!(r["sigma_complement"], serde_json::json!([0, 2]));
    for s in r["simples"].as_array().unwrap() {
        assert_eq!(s["rel_length"], 1);
        assert!(s["word"].is_string() && s["length"].is_u64());
    }
    assert_eq!(r["coxeter_matrix"].as_array().unwrap().len(), 2);
}

#[test]
fn exit_codes() {
    assert_eq!(alcove(&["--system", "A2", "--finite", "--sigma", "1", "relative"]).2, 1);
    assert_eq!(alcove(&["--system", "A2", "--finite", "--sigma", "1", "certify"]).2, 1);
    assert_eq!(alcove(&["--system", "X2", "root"]).2, 2);
    assert_eq!(alcove(&["--system", "A2", "--sigma", "7", "root"]).2, 2);
    assert_eq!(alcove(&["--system", "A2", "--window", "root"]).2, 2);
    assert_eq!(alcove(&["--system", "A2", "--radius", "8", "--ball-cap", "20", "weyl"]).2, 3);
    assert_eq!(alcove(&["--system", "B2", "--finite", "--sigma", "1", "certify"]).2, 0);
    assert_eq!(alcove(&["--system", "A1", "certify"]).2, 0);
}

#[test]
fn config_file_and_reproducible_header() {
    let dir = std::env::temp_dir().join(format!("alcove-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("job.toml");
    std::fs::write(&path, "system = \"C2\"\nsigma = [1]\nradius = 2\nseed = 7\n[grading]\ntheta = \"[1,0]\"\nm = 2\n").unwrap();
    let p = path.to_str().unwrap();
    let first = ok(&["--config", p, "--radius", "1", "certify"]);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["config"]["radius"], 1);
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["config"]["grading"]["m"], 2);

    // the embedded config alone regenerates the run
    let cfg: JobConfig = serde_json::from_value(v["config"].clone()).unwrap();
    let again = dir.join("again.toml");
    std::fs::write(&again, toml::to_string(&cfg).unwrap()).unwrap();
    assert_eq!(ok(&["--config", again.to_str().unwrap(), "certify"]), first);

    std::fs::write(&path, "system = \"C2\"\nbogus = 1\n").unwrap();
    assert_eq!(alcove(&["--config", p, "root"]).2, 2);
    assert_eq!(alcove(&["--config", dir.join("missing.toml").to_str().unwrap(), "root"]).2, 2);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn binary_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_alcove");
    let args = ["--system", "C2", "--sigma", "1", "--theta", "[1,0]", "--m", "2", "--seed", "3", "certify"];
    let a = Command::new(exe).args(args).output().unwrap();
    let b = Command::new(exe).args(args).output().unwrap();
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn weyl_element_json() {
    let out = ok(&["--system", "A1", "weyl", "--word", "s0*s1"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let el = &v["result"]["element"];
    assert_eq!(el["length"], 2);
    assert_eq!(el["element"]["mu"], serde_json::json!(["2"]));
    assert_eq!(el["element"]["w"], serde_json::json!([["1"]]));
}
