#![allow(dead_code)]

use std::io::Write;
use std::process::Command;

use tempfile::NamedTempFile;

pub const RADIATION: &str = r#"{"epochs":[{"law":"power-law","t_start":1e-45,"t_end":1,"coefficient":1e-33,"exponent":0.5}]}"#;
pub const PRESENT_DAY: &str = r#"{"epochs":[{"law":"power-law","t_start":1,"t_end":1e18,"coefficient":4.4e26,"exponent":0}]}"#;
pub const INFLATION: &str = r#"{"initial_radius": 1e-55, "epochs": [{"law":"power-law","t_start":5.39e-44,"t_end":1e-37,"coefficient":1e-33,"exponent":0.5},{"law":"inflation","t_start":1e-37,"t_end":1e-32,"efolds":48}]}"#;
pub const OVERLAPPING: &str = r#"{"epochs":[{"law":"power-law","t_start":1e-44,"t_end":1e-36,"coefficient":1e-33,"exponent":0.5},{"law":"inflation","t_start":1e-37,"t_end":1e-32,"efolds":48}]}"#;

pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn config(json: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

pub fn run(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_universal-clock"))
        .args(args)
        .output()
        .expect("binary runs");
    Output {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn run_with(json: &str, args: &[&str]) -> Output {
    let cfg = config(json);
    let path = cfg.path().to_str().unwrap().to_owned();
    let mut full = vec!["--config", path.as_str()];
    full.extend_from_slice(args);
    run(&full)
}

pub fn json(out: &Output) -> serde_json::Value {
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("stdout is JSON")
}
