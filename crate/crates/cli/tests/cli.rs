use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn rainbow(dir: &Path, args: &[&str]) -> Run {
    let Output { status, stdout, stderr } =
        Command::new(env!("CARGO_BIN_EXE_rainbow")).current_dir(dir).args(args).output().expect("binary runs");
    Run {
        code: status.code().expect("exited normally"),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn ok(dir: &Path, args: &[&str]) -> Value {
    let r = rainbow(dir, args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    serde_json::from_str(r.stdout.trim()).unwrap()
}

fn read_json(path: PathBuf) -> Value {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn grid_workflow_gives_five_colors() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["gen", "--family", "path", "--n", "4", "-o", "p4.json"]);
    ok(d, &["gen", "--family", "path", "--n", "3", "-o", "p3.json"]);
    let shape = ok(d, &["product", "--kind", "cartesian", "--g", "p4.json", "--h", "p3.json", "-o", "gh.json"]);
    assert_eq!(shape["n"], 12);
    assert_eq!(shape["m"], 17);
    let summary = ok(
        d,
        &[
            "color",
            "--op",
            "cartesian",
            "--g",
            "p4.json",
            "--h",
            "p3.json",
            "-o",
            "derived.json",
            "--coloring",
            "c.json",
            "--report",
            "report.json",
        ],
    );
    assert_eq!(summary["colors_used"], 5);
    assert_eq!(summary["ok"], true);
    assert_eq!(read_json(d.join("report.json")), summary);
    assert_eq!(fs::read(d.join("derived.json")).unwrap(), fs::read(d.join("gh.json")).unwrap());
    let v = ok(d, &["verify", "--graph", "gh.json", "--coloring", "c.json", "--k", "3"]);
    assert_eq!(v["ok"], true);
    assert_eq!(read_json(d.join("c.json"))["palette"], 5);
}

#[test]
fn solve_cycle_five() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["gen", "--family", "cycle", "--n", "5", "-o", "c5.json"]);
    let out = ok(d, &["solve", "--graph", "c5.json", "--k", "3", "--emit-witness", "w.json"]);
    assert_eq!(out["status"], "exact");
    assert_eq!(out["value"], 3);
    assert_eq!(read_json(d.join("w.json")), out["witness"]);
    assert_eq!(ok(d, &["verify", "--graph", "c5.json", "--coloring", "w.json"])["ok"], true);
    let rc = ok(d, &["solve", "--graph", "c5.json", "--k", "2"]);
    assert_eq!(rc["value"], 3);
}

#[test]
fn three_colors_on_p5_fail() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["gen", "--family", "path", "--n", "5", "-o", "p5.json"]);
    fs::write(d.join("c.json"), r#"{"palette":3,"colors":[0,1,2,0]}"#).unwrap();
    let r = rainbow(d, &["verify", "--graph", "p5.json", "--coloring", "c.json", "--k", "3"]);
    assert_eq!(r.code, 2);
    let v: Value = serde_json::from_str(r.stdout.trim()).unwrap();
    assert_eq!(v["ok"], false);
    assert_eq!(v["failing"], serde_json::json!([0, 1, 4]));
}

#[test]
fn budget_exhaustion_exits_three() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["gen", "--family", "complete_bipartite", "--s", "4", "--t", "5", "-o", "k45.json"]);
    let r = rainbow(d, &["solve", "--graph", "k45.json", "--budget", "50", "--emit-witness", "best.json"]);
    assert_eq!(r.code, 3, "{}", r.stderr);
    let out: Value = serde_json::from_str(r.stdout.trim()).unwrap();
    assert_eq!(out["status"], "unknown");
    assert!(out["lower"].as_u64().unwrap() <= out["upper"].as_u64().unwrap());
    assert_eq!(ok(d, &["verify", "--graph", "k45.json", "--coloring", "best.json"])["ok"], true);
}

#[test]
fn errors_are_json_with_exit_four() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    let error = |args: &[&str]| {
        let r = rainbow(d, args);
        assert_eq!(r.code, 4, "{args:?}: {}", r.stdout);
        serde_json::from_str::<Value>(r.stderr.trim()).unwrap()
    };
    assert_eq!(error(&["verify", "--graph", "missing.json", "--coloring", "x.json"])["error"], "io");

    fs::write(d.join("bad.json"), "{\"n\": 3, \"edges\": [[0, 3]]}").unwrap();
    assert_eq!(error(&["sdiam", "--graph", "bad.json"])["error"], "parse");

    ok(d, &["gen", "--family", "path", "--n", "4", "-o", "p4.json"]);
    fs::write(d.join("short.json"), r#"{"palette":2,"colors":[0,1]}"#).unwrap();
    assert_eq!(error(&["verify", "--graph", "p4.json", "--coloring", "short.json"])["error"], "check");
    assert_eq!(error(&["gen", "--family", "cycle", "--n", "2", "-o", "c.json"])["error"], "family");
    assert_eq!(error(&["gen", "--family", "cycle", "-o", "c.json"])["error"], "usage");

    ok(d, &["gen", "--family", "complete", "--n", "3", "-o", "k3.json"]);
    let routed =
        error(&["color", "--op", "lex", "--g", "k3.json", "--h", "k3.json", "-o", "x.json", "--coloring", "y.json"]);
    assert_eq!(routed["error"], "routed");
    assert_eq!(routed["family"]["n"], 9);
    assert_eq!(routed["oracle"]["upper"], 3);

    fs::write(d.join("two.json"), r#"{"palette":2,"colors":[0,1,0]}"#).unwrap();
    let e = error(&[
        "color",
        "--op",
        "subdiv",
        "--g",
        "p4.json",
        "--cg",
        "two.json",
        "--edge",
        "0",
        "-o",
        "x.json",
        "--coloring",
        "y.json",
    ]);
    assert_eq!(e["error"], "operand_not_rainbow");
    assert_eq!(e["failing"], serde_json::json!([0, 1, 3]));

    let clap = rainbow(d, &["solve", "--graph", "p4.json", "--k", "4"]);
    assert_ne!(clap.code, 0);
}

#[test]
fn every_operation_colors_and_verifies() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["gen", "--family", "path", "--n", "3", "-o", "p3.json"]);
    ok(d, &["gen", "--family", "path", "--n", "2", "-o", "k2.json"]);
    ok(d, &["gen", "--family", "cycle", "--n", "4", "-o", "c4.json"]);
    ok(d, &["gen", "--family", "path", "--n", "5", "-o", "p5.json"]);
    let cases: Vec<Vec<&str>> = vec![
        vec!["--op", "strong", "--g", "p3.json", "--h", "c4.json"],
        vec!["--op", "lex", "--g", "c4.json", "--h", "p3.json"],
        vec!["--op", "lex", "--g", "p3.json", "--h", "k2.json"],
        vec!["--op", "join", "--g", "k2.json", "--h", "p5.json"],
        vec!["--op", "join", "--g", "p3.json", "--h", "c4.json"],
        vec!["--op", "split", "--g", "c4.json", "--vertex", "1", "--n1", "0", "--n2", "2"],
        vec!["--op", "subdiv", "--g", "c4.json", "--edge", "2"],
        vec!["--op", "grid", "--dims", "3,2,2"],
    ];
    for case in cases {
        let mut args = vec!["color"];
        args.extend(&case);
        args.extend(["-o", "g.json", "--coloring", "c.json", "--dot", "g.dot"]);
        let summary = ok(d, &args);
        assert_eq!(summary["ok"], true, "{case:?}");
        assert_eq!(ok(d, &["verify", "--graph", "g.json", "--coloring", "c.json"])["ok"], true, "{case:?}");
        let dot = fs::read_to_string(d.join("g.dot")).unwrap();
        assert!(dot.starts_with("graph") && dot.contains("color="), "{case:?}");
    }
    let join =
        ok(d, &["color", "--op", "join", "--g", "k2.json", "--h", "p5.json", "-o", "g.json", "--coloring", "c.json"]);
    assert_eq!(join["reported_bound"], 4);
    assert_eq!(join["colors_used"], 7);
}

#[test]
fn reruns_are_byte_identical_and_jobs_do_not_matter() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["gen", "--random", "--n", "7", "--density", "0.3", "--seed", "11", "-o", "r.json"]);
    ok(d, &["gen", "--random", "--n", "7", "--density", "0.3", "--seed", "11", "-o", "r2.json"]);
    assert_eq!(fs::read(d.join("r.json")).unwrap(), fs::read(d.join("r2.json")).unwrap());
    ok(d, &["gen", "--family", "cycle", "--n", "4", "-o", "c4.json"]);

    let mut runs = Vec::new();
    for (i, jobs) in ["1", "4", "1"].into_iter().enumerate() {
        let (w, m) = (format!("w{i}.json"), format!("m{i}.json"));
        let solved =
            rainbow(d, &["--jobs", jobs, "--manifest", &m, "solve", "--graph", "r.json", "--emit-witness", &w]);
        assert_eq!(solved.code, 0, "{}", solved.stderr);
        let c = format!("c{i}.json");
        let summary = ok(
            d,
            &[
                "--jobs",
                jobs,
                "color",
                "--op",
                "lex",
                "--g",
                "r.json",
                "--h",
                "c4.json",
                "-o",
                "g.json",
                "--coloring",
                &c,
            ],
        );
        runs.push((
            solved.stdout,
            fs::read(d.join(&w)).unwrap(),
            summary,
            fs::read(d.join(&c)).unwrap(),
            read_json(d.join(&m)),
        ));
    }
    let (first, rest) = runs.split_first().unwrap();
    for run in rest {
        assert_eq!(run.0, first.0);
        assert_eq!(run.1, first.1);
        assert_eq!(run.2, first.2);
        assert_eq!(run.3, first.3);
        assert_eq!(run.4["inputs"], first.4["inputs"]);
        let digests =
            |m: &Value| m["outputs"].as_array().unwrap().iter().map(|o| o["sha256"].clone()).collect::<Vec<_>>();
        assert_eq!(digests(&run.4), digests(&first.4));
    }
    let manifest = &first.4;
    assert_eq!(manifest["command"], "solve");
    assert_eq!(manifest["params"]["jobs"], 1);
    assert_eq!(manifest["outputs"][0]["path"], "w0.json");
    assert_eq!(manifest["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn product_map_and_oracle_output() {
    let tmp = TempDir::new().unwrap();
    let d = tmp.path();
    ok(d, &["gen", "--family", "path", "--n", "3", "-o", "p3.json"]);
    ok(d, &["product", "--kind", "lex", "--g", "p3.json", "--h", "p3.json", "-o", "lex.json", "--map", "map.json"]);
    let map = read_json(d.join("map.json"));
    assert_eq!(map["kind"], "lexicographic");
    assert_eq!(map["vertices"][4], serde_json::json!([1, 1]));
    assert_eq!(read_json(d.join("lex.json"))["edges"].as_array().unwrap().len(), 24);
    assert_eq!(map["edge_classes"].as_array().unwrap().len(), 24);
    let joined = ok(d, &["product", "--kind", "join", "--g", "p3.json", "--h", "p3.json", "-o", "j.json"]);
    assert_eq!(joined["m"], 13);

    let entry = ok(d, &["oracle", "--family", "complete_bipartite", "--s", "2", "--t", "9"]);
    assert_eq!(entry["lower"], 5);
    assert_eq!(entry["upper"], 5);
    assert_eq!(entry["provenance"], "two_sided_table");
    let sd = ok(d, &["sdiam", "--graph", "p3.json", "--triples", "t.jsonl"]);
    assert_eq!(sd["sdiam3"], 2);
    assert_eq!(fs::read_to_string(d.join("t.jsonl")).unwrap(), "{\"d\":2,\"triple\":[0,1,2]}\n");
}
