use std::process::{Command, Output};

use serde_json::Value;
use sp4kl::config::{CommandConfig, Format, NSpec, RunConfig, Suite};
use sp4kl_core::exact::frac;
use sp4kl_core::{LatticeDesc, WeylWord};

fn sp4kl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sp4kl"))
        .args(args)
        .env_remove("SP4KL_BUDGET")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = sp4kl(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn csv_rows(args: &[&str]) -> (Vec<String>, Vec<Vec<String>>) {
    let out = sp4kl(args);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let mut r = csv::Reader::from_reader(out.stdout.as_slice());
    let header = r.headers().unwrap().iter().map(String::from).collect();
    let rows = r
        .records()
        .map(|rec| rec.unwrap().iter().map(String::from).collect())
        .collect();
    (header, rows)
}

#[test]
fn config_round_trips() {
    let commands = [
        CommandConfig::Kl {
            lattice: LatticeDesc::paramodular(3),
            w: WeylWord::S1S2S1,
            c: [3, 3],
            m: [1, 1],
            n: NSpec::Fixed([1, 1]),
        },
        CommandConfig::Scan {
            lattice: LatticeDesc::full(),
            ws: vec![WeylWord::Id, WeylWord::Long],
            c1_max: 4,
            c2_max: 8,
            m: [1, -2],
            n: NSpec::Auto,
        },
        CommandConfig::Geo {
            lattice: LatticeDesc::paramodular(2),
            w: WeylWord::S2S1S2,
            z: frac(9, 4),
        },
        CommandConfig::Atlas {
            lattice: LatticeDesc::paramodular(7),
            sigma: frac(9, 22),
            m: frac(1, 1),
            general: 12,
            yoshida: 3,
            gl2: 5,
        },
        CommandConfig::Enumerate {
            lattice: LatticeDesc::full(),
            w: WeylWord::S2S1,
            c: [2, 3],
        },
        CommandConfig::Verify {
            suite: Suite::LemmaRamified,
            qmax: 5,
            cmax: 4,
        },
    ];
    for command in commands {
        let mut cfg = RunConfig::new(command);
        cfg.format = Format::Csv;
        cfg.output = Some("out.csv".into());
        let text = serde_json::to_string(&cfg).unwrap();
        let back: RunConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back, cfg, "{text}");
    }
}

#[test]
fn kl_examples() {
    let r = json(&[
        "kl",
        "--lattice",
        "pa:3",
        "--w",
        "s1s2s1",
        "--c",
        "3,3",
        "--M",
        "1,1",
        "--N",
        "1,1",
    ]);
    assert_eq!(r["schema"], "sp4kl-report/1");
    assert_eq!(r["config"]["command"], "kl");
    assert_eq!(r["result"]["exact_value"], 9);
    assert_eq!(r["result"]["set_size"], 9);
    assert_eq!(r["result"]["closed_form_match"], true);

    let r = json(&[
        "kl",
        "--lattice",
        "full",
        "--w",
        "1",
        "--c",
        "1,1",
        "--M",
        "1,1",
        "--N",
        "1,1",
    ]);
    assert_eq!(r["result"]["exact_value"], 1);
    assert_eq!(r["result"]["closed_form_match"], Value::Null);

    let r = json(&[
        "kl",
        "--lattice",
        "pa:2",
        "--w",
        "s2s1s2",
        "--c",
        "2,4",
        "--M",
        "1,1",
        "--N",
        "auto",
    ]);
    assert_eq!(r["config"]["n"], "auto");
    assert_eq!(r["result"]["query"]["n"], serde_json::json!([1, 1]));
    assert_eq!(r["result"]["admissible"], true);
    assert_eq!(r["result"]["exact_value"], 0);
    assert_eq!(r["result"]["closed_form_match"], true);
}

#[test]
fn kl_long_element_closed_form_with_twisted_n() {
    for n in ["1,2", "0,4", "2,7"] {
        let r = json(&[
            "kl",
            "--lattice",
            "pa:3",
            "--w",
            "s1s2s1s2",
            "--c",
            "3,27",
            "--N",
            n,
        ]);
        assert_eq!(r["result"]["closed_form_match"], true, "N = {n}");
    }
}

#[test]
fn scan_long_element_full_level() {
    let (header, rows) = csv_rows(&[
        "scan",
        "--lattice",
        "full",
        "--w",
        "s1s2s1s2",
        "--c1-max",
        "4",
        "--c2-max",
        "4",
        "--format",
        "csv",
    ]);
    assert_eq!(header[..3], ["w", "c1", "c2"]);
    assert_eq!(rows.len(), 16);
    let slack = header
        .iter()
        .position(|h| h == "trivial_bound_slack")
        .unwrap();
    for row in &rows {
        assert!(row[slack].parse::<f64>().unwrap() >= -1e-12, "{row:?}");
    }
    let keys: Vec<(u64, u64)> = rows
        .iter()
        .map(|r| (r[1].parse().unwrap(), r[2].parse().unwrap()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn scan_paramodular_vanishes_off_the_level() {
    let (header, rows) = csv_rows(&[
        "scan",
        "--lattice",
        "pa:2",
        "--w",
        "relevant",
        "--c1-max",
        "4",
        "--c2-max",
        "8",
        "--format",
        "csv",
    ]);
    assert_eq!(rows.len(), 4 * 4 * 8);
    let value = header.iter().position(|h| h == "exact_value").unwrap();
    let ws: Vec<&str> = rows.iter().map(|r| r[0].as_str()).collect();
    let mut sorted = ws.clone();
    sorted.dedup();
    assert_eq!(sorted, ["1", "s1s2s1", "s2s1s2", "s1s2s1s2"]);
    for row in rows.iter().filter(|r| r[0] != "1") {
        if row[1].parse::<u64>().unwrap() % 2 == 1 {
            assert_eq!(row[value], "0", "{row:?}");
        }
    }
}

#[test]
fn scan_empty_range_is_header_only() {
    let out = sp4kl(&[
        "scan",
        "--lattice",
        "full",
        "--c1-max",
        "0",
        "--c2-max",
        "3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("w,c1,c2,"));
}

#[test]
fn scan_marks_budget_rows() {
    let (header, rows) = csv_rows(&[
        "scan",
        "--lattice",
        "pa:3",
        "--w",
        "s1s2s1s2",
        "--c1-max",
        "3",
        "--c2-max",
        "9",
        "--budget",
        "30",
        "--format",
        "csv",
    ]);
    let status = header.iter().position(|h| h == "status").unwrap();
    assert!(rows.iter().any(|r| r[status] == "budget_exceeded"));
    assert!(rows.iter().any(|r| r[status] == "ok"));
}

#[test]
fn exit_codes() {
    assert_eq!(
        sp4kl(&["kl", "--lattice", "pa:0", "--w", "1", "--c", "1,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        sp4kl(&["kl", "--lattice", "full", "--w", "1", "--c", "0,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(sp4kl(&["frobnicate"]).status.code(), Some(1));
    let big = ["kl", "--lattice", "pa:5", "--w", "s1s2s1s2", "--c", "5,125"];
    let mut args = big.to_vec();
    args.extend(["--budget", "10"]);
    assert_eq!(sp4kl(&args).status.code(), Some(2));
    let env = Command::new(env!("CARGO_BIN_EXE_sp4kl"))
        .args(big)
        .env("SP4KL_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(env.status.code(), Some(2));
    assert_eq!(sp4kl(&["verify", "exponents"]).status.code(), Some(0));
    let failing = sp4kl(&["verify", "vanishing"]);
    assert_eq!(failing.status.code(), Some(3));
    assert!(
        String::from_utf8_lossy(&failing.stderr).contains("FAIL divisibility vanishing (literal)")
    );
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("sp4kl-test-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let out = sp4kl(&[
        "geo",
        "--lattice",
        "pa:2",
        "--w",
        "s1s2s1",
        "--Z",
        "2",
        "--output",
        p,
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(r["config"]["z"], "2");
    assert_eq!(r["result"]["value"], "1");
}

#[test]
fn geo_vanishes_below_the_level() {
    let r = json(&["geo", "--lattice", "pa:5", "--w", "s1s2s1", "--Z", "4"]);
    assert_eq!(r["result"]["value"], "0");
    let r = json(&["geo", "--lattice", "pa:2", "--w", "s2s1s2", "--Z", "7/2"]);
    assert_eq!(r["result"]["value"], "0");
    assert_eq!(
        sp4kl(&["geo", "--lattice", "pa:2", "--w", "1", "--Z", "3"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn atlas_columns() {
    let r = json(&[
        "atlas",
        "--lattice",
        "pa:7",
        "--sigma",
        "3/2",
        "--general",
        "40",
        "--gl2",
        "3",
    ]);
    assert_eq!(r["result"]["total"], 1);
    let r = json(&[
        "atlas",
        "--lattice",
        "pa:7",
        "--sigma",
        "1/2",
        "--general",
        "40",
        "--gl2",
        "3",
    ]);
    assert_eq!(r["result"]["total"], 4);
    let letters: Vec<&str> = r["result"]["columns"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["tag"].as_str().unwrap())
        .collect();
    assert_eq!(letters, ["G", "Y", "Q", "P", "B", "F"]);
    assert_eq!(
        sp4kl(&["atlas", "--lattice", "full", "--sigma", "0"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn enumerate_lists_the_set() {
    let r = json(&[
        "enumerate",
        "--lattice",
        "pa:2",
        "--w",
        "s1s2s1",
        "--c",
        "2,2",
    ]);
    let elements = r["result"].as_array().unwrap();
    assert_eq!(elements.len(), 4);
    assert_eq!(r["checks"][0]["passed"], true);
}
