use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn grr(args: &[&str]) -> Output {
    grr_env(args, &[])
}

fn grr_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_grr"));
    cmd.args(args).env_remove("GRR_NODE_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    assert_eq!(code(o), 0, "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("grr-cli-{}-{name}", std::process::id()))
}

const M11: &str = "(1,2,3,4,5,6,7,8,9,10,11);(3,7,11,8)(4,10,5,6)";
const X11: &str = "(1,2,3,4,5,6,7,8,9,10,11)";
const Y11: &str = "(2,4)(3,5)(6,8)(9,10)";

#[test]
fn certify_a7_with_exhaustive_check() {
    let o = grr(&[
        "certify",
        "--group",
        "A7",
        "--x",
        "(1,2,3,4,5,6,7)",
        "--y",
        "(1,2)(3,4)",
        "--k",
        "5",
        "--exhaustive",
        "--json",
    ]);
    let r = json(&o);
    assert_eq!(r["command"], "certify");
    assert_eq!(r["inputs"]["k"], 5);
    let res = &r["results"];
    assert_eq!(res["certificate"]["group_order"], "2520");
    assert_eq!(res["certificate"]["verdict"], "not_GRR_autgs_nontrivial");
    assert_eq!(res["certificate"]["aut_gs_order"], 2);
    assert_eq!(res["exhaustive"]["aut_order"], "5040");
    assert_eq!(res["exhaustive"]["agrees"], true);
    assert!(r["version"].is_string());
    assert!(r["timings"]["certify"].is_number());
}

#[test]
fn certify_mathieu_is_a_grr() {
    let r = json(&grr(&[
        "certify",
        "--group",
        M11,
        "--x",
        X11,
        "--y",
        Y11,
        "--k",
        "5",
        "--exhaustive",
        "--json",
    ]));
    assert_eq!(r["results"]["certificate"]["verdict"], "GRR_certified");
    assert_eq!(r["results"]["exhaustive"]["is_grr"], true);
    assert_eq!(r["results"]["method"], "table");
}

#[test]
fn valency_below_five_is_a_usage_error() {
    let o = grr(&[
        "certify",
        "--group",
        "A7",
        "--x",
        "(1,2,3,4,5,6,7)",
        "--y",
        "(1,2)(3,4)",
        "--k",
        "4",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("k >= 5"));
}

#[test]
fn reflection_fails_hypotheses() {
    // In D_7 a reflection y inverts x, so yxy lies in <x>.
    let r = json(&grr(&[
        "certify",
        "--group",
        "(1,2,3,4,5,6,7);(2,7)(3,6)(4,5)",
        "--x",
        "(1,2,3,4,5,6,7)",
        "--y",
        "(2,7)(3,6)(4,5)",
        "--k",
        "5",
        "--json",
    ]));
    let cert = &r["results"]["certificate"];
    assert_eq!(cert["checks"]["yxy_outside_cyclic"], false);
    assert_eq!(cert["verdict"], "hypotheses_failed");
}

#[test]
fn parse_errors_exit_2() {
    assert_eq!(
        code(&grr(&[
            "certify",
            "--group",
            "A7",
            "--x",
            "(1,2",
            "--y",
            "(1,2)(3,4)",
            "--k",
            "5"
        ])),
        2
    );
    assert_eq!(
        code(&grr(&[
            "certify", "--group", "Q7", "--x", "(1,2)", "--y", "(1,2)", "--k", "5"
        ])),
        2
    );
    assert_eq!(
        code(&grr(&[
            "certify",
            "--group",
            "A7",
            "--x",
            "(1,2,3,4,5,6,7)",
            "--y",
            "(1,2)",
            "--k",
            "5"
        ])),
        2
    );
    assert_eq!(code(&grr(&["no-such-command"])), 2);
}

#[test]
fn limits_exit_3() {
    // Too large to enumerate, and an exhaustive check needs the table.
    let o = grr(&[
        "certify",
        "--group",
        "A9",
        "--x",
        "(1,2,3,4,5,6,7)",
        "--y",
        "(1,2)(3,4)",
        "--k",
        "5",
        "--exhaustive",
        "--cap",
        "1000",
    ]);
    assert_eq!(code(&o), 3);
    // Without the table only alternating and symmetric groups are supported.
    let o = grr(&[
        "certify", "--group", M11, "--x", X11, "--y", Y11, "--k", "5", "--cap", "100",
    ]);
    assert_eq!(code(&o), 3);
    let args = [
        "certify",
        "--group",
        "A7",
        "--x",
        "(1,2,3,4,5,6,7)",
        "--y",
        "(1,2)(3,4)",
        "--k",
        "5",
        "--exhaustive",
    ];
    assert_eq!(code(&grr_env(&args, &[("GRR_NODE_BUDGET", "1")])), 3);
    assert_eq!(code(&grr_env(&args, &[("GRR_NODE_BUDGET", "lots")])), 2);
}

#[test]
fn large_alternating_group_uses_permutation_path() {
    let c = json(&grr(&["construct-an", "--n", "14", "--json"]));
    let (x, y) = (
        c["results"]["x"].as_str().unwrap(),
        c["results"]["y"].as_str().unwrap(),
    );
    let r = json(&grr(&[
        "certify", "--group", "A14", "--x", x, "--y", y, "--k", "6", "--json",
    ]));
    assert_eq!(r["results"]["method"], "permutation");
    assert_eq!(r["results"]["certificate"]["group_order"], "43589145600");
    assert_eq!(r["results"]["certificate"]["verdict"], "GRR_certified");
}

#[test]
fn construct_an_14() {
    let r = json(&grr(&["construct-an", "--n", "14", "--json"]));
    let res = &r["results"];
    assert_eq!(res["p"], 11);
    assert_eq!(res["x"], "(1,2,3,4,5,6,7,8,9,10,11)");
    assert_eq!(res["y"], "(2,13)(3,14)(9,10)(11,12)");
    assert_eq!(res["fix_y"], serde_json::json!([1, 4, 5, 6, 7, 8]));
    assert_eq!(
        res["fix_conjugated_y"],
        serde_json::json!([2, 5, 6, 7, 8, 9])
    );
    let ks: Vec<u64> = res["valencies"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["k"].as_u64().unwrap())
        .collect();
    assert_eq!(ks, vec![5, 6, 7, 8]);
    for v in res["valencies"].as_array().unwrap() {
        assert_eq!(v["aut_gs_order"], 1);
        assert_eq!(v["admissible"], true);
    }
}

#[test]
fn construct_an_rejects_small_n_and_bad_p() {
    assert_eq!(code(&grr(&["construct-an", "--n", "13"])), 2);
    assert_eq!(code(&grr(&["construct-an", "--n", "14", "--p", "13"])), 2);
    assert_eq!(code(&grr(&["construct-an", "--n", "14", "--k", "3..6"])), 2);
}

#[test]
fn construct_an_30_range() {
    let r = json(&grr(&[
        "construct-an",
        "--n",
        "30",
        "--k",
        "5..9",
        "--json",
    ]));
    let vals = r["results"]["valencies"].as_array().unwrap();
    assert_eq!(vals.len(), 5);
    assert!(vals.iter().all(|v| v["aut_gs_order"] == 1));
}

#[test]
fn census_rows_and_determinism() {
    let file = fixture("small_groups.txt");
    let run = |jobs: &str| {
        json(&grr(&[
            "census",
            &file,
            "--exhaustive",
            "--jobs",
            jobs,
            "--json",
        ]))
    };
    let first = run("1");
    let rows = first["results"]["rows"].as_array().unwrap();
    let status = |label: &str| {
        rows.iter()
            .find(|r| r["label"] == label)
            .map(|r| r["status"].as_str().unwrap().to_string())
            .unwrap()
    };
    let verdict = |label: &str| {
        rows.iter().find(|r| r["label"] == label).unwrap()["outcome"]["certificate"]["verdict"]
            .as_str()
            .unwrap()
            .to_string()
    };
    assert_eq!(rows.len(), 9);
    assert_eq!(status("C7"), "no_involution");
    assert_eq!(status("F21"), "no_involution");
    assert_eq!(status("not-member"), "error");
    assert_eq!(verdict("M11"), "GRR_certified");
    assert_eq!(verdict("A7"), "not_GRR_autgs_nontrivial");
    assert_eq!(verdict("S5"), "hypotheses_failed");
    assert!(rows
        .iter()
        .filter_map(|r| r["outcome"]["exhaustive"]["agrees"].as_bool())
        .all(|a| a));
    assert_eq!(first["results"], run("4")["results"]);
    assert_eq!(first["results"], run("1")["results"]);
}

#[test]
fn census_of_empty_file() {
    let path = temp_path("empty.txt");
    std::fs::write(&path, "# nothing here\n").unwrap();
    let r = json(&grr(&["census", path.to_str().unwrap(), "--json"]));
    assert_eq!(r["results"]["rows"], serde_json::json!([]));
    std::fs::remove_file(path).ok();
    assert_eq!(code(&grr(&["census", "/nonexistent/census.txt"])), 2);
}

/// graph6 written directly from the definition: N(n) = n + 63, then the
/// upper triangle column by column, six bits per byte.
fn graph6_oracle(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<u8> {
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(adjacent(i, j));
        }
    }
    let mut out = vec![n as u8 + 63];
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for (b, &bit) in chunk.iter().enumerate() {
            v |= (bit as u8) << (5 - b);
        }
        out.push(v + 63);
    }
    out.push(b'\n');
    out
}

#[test]
fn export_circulant() {
    let path = temp_path("c7.g6");
    let o = grr(&[
        "export",
        "--circulant",
        "7:1,2",
        "--format",
        "graph6",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let bytes = std::fs::read(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(bytes[0], 70);
    let expected = graph6_oracle(7, |i, j| matches!((j - i) % 7, 1 | 2 | 5 | 6));
    assert_eq!(bytes, expected);

    let o = grr(&["export", "--circulant", "7:1,2", "--format", "dimacs"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("p edge 7 14"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 14);

    assert_eq!(
        code(&grr(&["export", "--circulant", "7:1,2", "--format", "gml"])),
        2
    );
}

#[test]
fn export_group_graphs_agree() {
    let by_circulant = grr(&["export", "--circulant", "7:1,2", "--format", "dimacs"]).stdout;
    let by_group = grr(&[
        "export",
        "--group",
        "C7",
        "--connection",
        "(1,2,3,4,5,6,7);(1,3,5,7,2,4,6)",
        "--format",
        "dimacs",
    ]);
    assert_eq!(code(&by_group), 0);
    let edges = |b: &[u8]| -> usize {
        String::from_utf8_lossy(b)
            .lines()
            .filter(|l| l.starts_with("e "))
            .count()
    };
    assert_eq!(edges(&by_group.stdout), edges(&by_circulant));
    let gamma = grr(&[
        "export",
        "--group",
        "A7",
        "--x",
        "(1,2,3,4,5,6,7)",
        "--y",
        "(1,2)(3,4)",
        "--k",
        "5",
        "--format",
        "dimacs",
    ]);
    assert_eq!(
        String::from_utf8_lossy(&gamma.stdout).lines().next(),
        Some("p edge 2520 6300")
    );
}

#[test]
fn ppd_and_sample() {
    let r = json(&grr(&["ppd", "--r", "2", "--m", "6", "--json"]));
    assert_eq!(r["results"]["primes"], serde_json::json!([]));
    let r = json(&grr(&["ppd", "--r", "2", "--m", "9", "--json"]));
    assert_eq!(r["results"]["primes"], serde_json::json!([73]));
    let args = [
        "sample",
        "--group",
        "A5",
        "--x",
        "(1,2,3,4,5)",
        "--trials",
        "300",
        "--seed",
        "1",
        "--json",
    ];
    let a = json(&grr(&args));
    assert_eq!(a["results"], json(&grr(&args))["results"]);
    let est = a["results"]["estimate"]["estimate"].as_f64().unwrap();
    assert!((est - 10.0 / 15.0).abs() < 0.1, "{est}");
    assert_eq!(
        code(&grr(&["sample", "--group", "C7", "--x", "(1,2,3,4,5,6,7)"])),
        2
    );
}
