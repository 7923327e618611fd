mod common;

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use common::*;
use serde_json::Value;

fn session(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("sessions").join(name)
}

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cmlocus"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_line(out: &Output) -> String {
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(out.stdout.is_empty());
    err.trim_end().to_string()
}

#[test]
fn two_planes_report() {
    let path = session("two_planes.session");
    let v = json(&run(&["--input", path.to_str().unwrap(), "--json", "report", "M"], None));
    assert_eq!(v["depth"], 1);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["equidimensional"], true);
    assert_eq!(v["serre"]["1"], true);
    assert_eq!(v["serre"]["2"], false);
    let p = v["primes"].as_array().unwrap();
    let m = p.iter().find(|e| e["name"] == "m").unwrap();
    assert_eq!((m["depth"].clone(), m["dim"].clone(), m["cm"].clone()), (1.into(), 2.into(), false.into()));
}

#[test]
fn deficiency_ideals_round_trip() {
    let path = session("two_planes.session");
    let v = json(&run(&["--input", path.to_str().unwrap(), "--json", "deficiency", "M"], None));
    let r = ring(&["x", "y", "z", "w"]);
    let a: Vec<_> = v["a"]
        .as_array()
        .unwrap()
        .iter()
        .map(|gens| {
            let gens: Vec<&str> = gens.as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
            ideal(&r, &gens)
        })
        .collect();
    assert_eq!(a.len(), 5);
    assert!(a[0].is_unit() && a[3].is_unit() && a[4].is_unit());
    assert_eq!(a[1], ideal(&r, &["x", "y", "z", "w"]));
    assert_eq!(a[2], ideal(&r, &["xz", "xw", "yz", "yw"]));
    assert_eq!(v["nonzero"], serde_json::json!([1, 2]));
}

#[test]
fn stdin_and_several_commands() {
    let text = "ring QQ[x,y] grevlex\nideal I = x^2, x*y\nmodule N = quotient I\n";
    let v = json(&run(&["--json", "psd N 0; psd N 1"], Some(text)));
    let arr = v.as_array().unwrap();
    assert_eq!(arr.len(), 2);
    assert_eq!(arr[0]["psd"], 0);
    assert_eq!(arr[1]["psd"], 1);
}

#[test]
fn field_override() {
    let text = "ring QQ[x,y] grevlex\nideal I = x + 7*y\nmodule N = quotient I\n";
    let v = json(&run(&["--json", "--field", "fp:7", "dim", "N"], Some(text)));
    assert_eq!(v["dim"], 1);
    let out = run(&["--field", "fp:9", "dim", "N"], Some(text));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes_and_messages() {
    let two = session("two_planes.session");
    let two = two.to_str().unwrap();

    let out = run(&["--input", two, "psd", "Nope", "1"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_line(&out).starts_with("error code=undefined-name command line, column 5"));

    let out = run(&["gb"], Some("ring QQ[x,y] grevlex\nideal I = x, y,\n"));
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_line(&out), "error code=syntax line 2, column 16: empty generator in list");

    let out = run(&["--input", "/nonexistent/file.session", "gb"], None);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_line(&out).starts_with("error code=io"));

    let out = run(&["--input", two, "psd", "M", "9"], None);
    assert_eq!(out.status.code(), Some(3));
    assert!(error_line(&out).starts_with("error code=index"));

    let out = run(&["--input", two, "--max-steps", "1", "report", "M"], None);
    assert_eq!(out.status.code(), Some(4));
    assert!(error_line(&out).starts_with("error code=budget"));
}

#[test]
fn json_output_is_deterministic() {
    let path = session("mixed.session");
    let args = ["--input", path.to_str().unwrap(), "--json"];
    let first = run(&args, None);
    assert!(first.status.success());
    for _ in 0..3 {
        assert_eq!(run(&args, None).stdout, first.stdout);
    }
}
