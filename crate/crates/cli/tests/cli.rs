use std::io::Write;
use std::process::Command;

use metricdim_cli::{run, Output};
use serde_json::Value;
use tempfile::NamedTempFile;

fn graph_file(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn call(args: &[&str]) -> Output {
    let argv = std::iter::once("metricdim").chain(args.iter().copied());
    run(argv)
}

fn report(out: &Output) -> Value {
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {:?}", out.stdout))
}

const C5: &str = r#"{"type":"family","family":"cycle","n":5}"#;
const TAIL_C7: &str =
    r#"{"type":"tail_product","base":"one_way","H":{"type":"family","family":"cycle","n":7}}"#;

#[test]
fn dim_golden() {
    let f = graph_file(C5);
    let out = call(&["dim", f.path().to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let expected = r#"{
  "command": "dim",
  "input_digest": "DIGEST",
  "result": {
    "basis": [
      0,
      1
    ],
    "beta": 2
  },
  "status": "ok"
}
"#;
    let digest = report(&out)["input_digest"].as_str().unwrap().to_string();
    assert_eq!(digest.len(), 64);
    assert_eq!(out.stdout, expected.replace("DIGEST", &digest));
}

#[test]
fn certify_and_refute() {
    let f = graph_file(TAIL_C7);
    let path = f.path().to_str().unwrap();
    let out = call(&["certify", path, "--set", "0:0,0:3"]);
    assert_eq!(out.code, 0);
    assert_eq!(report(&out)["result"]["verdict"], "PASS");

    let c6 = graph_file(
        r#"{"type":"tail_product","base":"one_way","H":{"type":"family","family":"cycle","n":6}}"#,
    );
    let out = call(&["certify", c6.path().to_str().unwrap(), "--set", "0:0,0:3"]);
    assert_eq!(out.code, 1);
    let r = report(&out);
    assert_eq!(r["status"], "refuted");
    assert_eq!(r["result"]["witness"], serde_json::json!(["0:1", "0:5"]));

    let out = call(&["refute", c6.path().to_str().unwrap(), "--set", "0:0,0:1"]);
    assert_eq!(out.code, 1);
    // the refuted pair is unresolved when checked again
    let w = report(&out)["result"]["witness"].clone();
    let pair: Vec<&str> = w
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let a: metricdim::tail::TailVertex = pair[0].parse().unwrap();
    let b: metricdim::tail::TailVertex = pair[1].parse().unwrap();
    let tp = metricdim::tail::TailProduct::new(
        metricdim::tail::Base::OneWay,
        metricdim::make_family(metricdim::Family::Cycle, 6).unwrap(),
    );
    for x in [(0, 0), (0, 1)].map(|(l, h)| metricdim::tail::TailVertex::new(l, h)) {
        assert_eq!(tp.distance(a, x).unwrap(), tp.distance(b, x).unwrap());
    }

    let out = call(&["certify", path, "--set", "0:0,0:3", "--window", "1"]);
    assert_eq!(out.code, 2);
    assert_eq!(report(&out)["status"], "error");
}

#[test]
fn emitted_bases_verify() {
    let g = graph_file(
        r#"{"type":"product","left":{"type":"family","family":"path","n":3},"right":{"type":"family","family":"cycle","n":4}}"#,
    );
    let path = g.path().to_str().unwrap();
    let basis = report(&call(&["dim", path]))["result"]["basis"].clone();
    let set: Vec<String> = basis.as_array().unwrap().iter().map(|v| v.to_string()).collect();
    let out = call(&["verify", path, "--set", &set.join(",")]);
    assert_eq!(out.code, 0);
    assert_eq!(report(&out)["result"]["verdict"], "PASS");

    let out = call(&["verify", path, "--set", "0"]);
    assert_eq!(out.code, 1);
    let w = report(&out)["result"]["witness"].clone();
    assert_eq!(w.as_array().unwrap().len(), 2);

    let psi = report(&call(&["psi", path]))["result"]["set"].clone();
    let set: Vec<String> = psi.as_array().unwrap().iter().map(|v| v.to_string()).collect();
    assert_eq!(call(&["double", path, "--set", &set.join(",")]).code, 0);
}

#[test]
fn trees_and_bounds() {
    let t = graph_file(r#"{"type":"k_way_path","k":3}"#);
    let out = call(&["tree-basis", t.path().to_str().unwrap()]);
    assert_eq!(
        report(&out)["result"]["basis"],
        serde_json::json!(["r:0:1", "r:1:1"])
    );
    let out = call(&["tree-dim", t.path().to_str().unwrap()]);
    assert_eq!(report(&out)["result"]["dimension"], 2);

    let c4 = graph_file(C5.replace('5', "4").as_str());
    let out = call(&["tree-dim", c4.path().to_str().unwrap()]);
    assert_eq!(out.code, 2);

    let k6 = graph_file(
        r#"{"type":"tail_product","base":"two_way","H":{"type":"family","family":"complete","n":6}}"#,
    );
    let r = report(&call(&["bounds", k6.path().to_str().unwrap()]));
    assert_eq!(r["result"]["exact"], 5);

    let inf = graph_file(r#"{"type":"product","left":{"type":"k_way_path","k":1},"right":{"type":"comb"}}"#);
    let r = report(&call(&["dim", inf.path().to_str().unwrap()]));
    assert_eq!(r["result"]["beta"], "infinite");
}

#[test]
fn tables_match() {
    let out = call(&["tables", "--max-n", "8"]);
    assert_eq!(out.code, 0);
    assert_eq!(report(&out)["result"]["mismatches"], 0);
}

#[test]
fn usage_errors() {
    assert_eq!(call(&["dim"]).code, 2);
    assert_eq!(call(&["dim", "/nonexistent/graph.json"]).code, 2);
    let bad = graph_file("{\"type\":\"finite\"");
    assert_eq!(call(&["dim", bad.path().to_str().unwrap()]).code, 2);
    let c5 = graph_file(C5);
    assert_eq!(
        call(&["verify", c5.path().to_str().unwrap(), "--set", "9"]).code,
        2
    );
    assert_eq!(call(&["--help"]).code, 0);
}

#[test]
fn output_is_identical_across_thread_counts() {
    let g = graph_file(
        r#"{"type":"product","left":{"type":"family","family":"complete","n":4},"right":{"type":"family","family":"cycle","n":5}}"#,
    );
    let path = g.path().to_str().unwrap();
    for cmd in ["dim", "psi"] {
        let outputs: Vec<String> = ["1", "2", "4"]
            .iter()
            .map(|t| call(&["--threads", t, cmd, path]).stdout)
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{cmd}");
        assert_eq!(outputs[0], call(&[cmd, path]).stdout);
    }
}

#[test]
fn binary_exit_codes() {
    let f = graph_file(TAIL_C7);
    let bin = env!("CARGO_BIN_EXE_metricdim");
    let ok = Command::new(bin)
        .args(["certify", f.path().to_str().unwrap(), "--set", "0:0,0:3"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["result"]["verdict"], "PASS");
    let bad = Command::new(bin).arg("nope").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
