use serde_json::Value;
use std::process::{Command, Output};

fn rcgeom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rcgeom")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn tmp_file(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("rcgeom-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

const STD: [&str; 8] = ["-b", "a=(0,0)", "-b", "b=(1,0)", "-b", "p=(0,0)", "-b", "q=(0,2)"];

#[test]
fn eval_ext_and_ip() {
    let mut args = vec!["eval", "ext(a,b,p,q)"];
    args.extend(STD);
    let out = rcgeom(&args);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let r = &v["report"]["results"][0];
    assert_eq!(r["point"]["x"]["exact"], "3");
    assert_eq!(r["point"]["y"]["exact"], "0");
    assert_eq!(r["doubling_holds"], true);

    let out = rcgeom(&["eval", "ip(a,p,c,b,q)", "-b", "a=(0,0)", "-b", "p=(1,1)", "-b", "c=(2,2)", "-b", "b=(2,0)", "-b", "q=(2,1)"]);
    let r = &json(&out)["report"]["results"][0];
    assert_eq!(r["point"]["x"]["exact"], "4/3");
    assert_eq!(r["point"]["y"]["exact"], "2/3");
}

#[test]
fn eval_over_series_and_witness() {
    let out = rcgeom(&["eval", "ext(a,b,a,b)", "--model", "dehn", "-b", "a=(0,0)", "-b", "b=(1 - e, 0)"]);
    assert_eq!(code(&out), 0);
    let r = &json(&out)["report"]["results"][0];
    assert_eq!(r["point"]["x"]["exact"], "2 - 2*e + O(e^16)");
    let out = rcgeom(&["eval", "ext(a,d,d,t)", "--witness", "2"]);
    assert_eq!(json(&out)["report"]["results"][0]["point"]["y"]["exact"], "0");
}

#[test]
fn eval_errors() {
    let out = rcgeom(&["eval", "ext(a,b,p,zz)", "-b", "a=(0,0)", "-b", "b=(1,0)", "-b", "p=(0,0)"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("zz"));
    assert_eq!(code(&rcgeom(&["eval", "ext(a,b"])), 2);
    assert_eq!(code(&rcgeom(&["eval", "a", "-b", "a=(0"])), 2);
    // p not inside: precondition violated
    let out = rcgeom(&["eval", "ip(a,p,c,b,q)", "-b", "a=(0,0)", "-b", "p=(5,5)", "-b", "c=(2,2)", "-b", "b=(2,0)", "-b", "q=(2,1)"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn eval_term_file() {
    let f = tmp_file("terms.txt", "# two terms\next(a,b,p,q)\n\next(b,a,p,q)\n");
    let mut args = vec!["eval".to_string(), format!("@{}", f.display())];
    args.extend(STD.iter().map(|s| s.to_string()));
    let args: Vec<&str> = args.iter().map(String::as_str).collect();
    let v = json(&rcgeom(&args));
    assert_eq!(v["report"]["results"].as_array().unwrap().len(), 2);
    assert_eq!(v["report"]["results"][1]["point"]["x"]["exact"], "-2");
}

#[test]
fn refute_sample_and_files() {
    let out = rcgeom(&["refute"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["report"]["verdict"], "REFUTED");
    assert_eq!(v["report"]["k"], 4);
    assert_eq!(v["report"]["certificate"]["reach_bound"]["exact"], "32");
    assert_eq!(v["report"]["certificate"]["required_magnitude"]["exact"], "64");

    let empty = tmp_file("empty.txt", "# nothing\n");
    let v = json(&rcgeom(&["refute", empty.to_str().unwrap()]));
    assert_eq!(v["report"]["verdict"], "REFUTED");
    assert_eq!(v["report"]["k"], 1);

    let bad = tmp_file("bad.txt", "ext(a,b,a,b)\n");
    assert_eq!(code(&rcgeom(&["refute", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&rcgeom(&["refute", "/nonexistent/file"])), 2);
}

#[test]
fn enumerate_small() {
    let v = json(&rcgeom(&["enumerate", "--size", "0"]));
    assert_eq!(v["report"]["count"], 5);
    let v = json(&rcgeom(&["enumerate", "--size", "1"]));
    assert_eq!(v["report"]["all_within_bound"], true);
    assert_eq!(v["report"]["consequent_pairs"], 0);
    for row in v["report"]["rows"].as_array().unwrap() {
        let bound = if row["size"] == 0 { "2" } else { "4" };
        assert_eq!(row["bound"]["exact"], bound);
        assert_eq!(row["within_bound"], true);
    }
    assert_eq!(code(&rcgeom(&["enumerate", "--size", "3"])), 2);
    assert_eq!(code(&rcgeom(&["enumerate", "--size", "1", "--max-symbols", "0"])), 2);
}

#[test]
fn enumerate_points_file() {
    let f = tmp_file("pts.txt", "u = (0, 0)\nv = (1, 0)\n");
    let v = json(&rcgeom(&["enumerate", "--points", f.to_str().unwrap(), "--size", "1"]));
    assert_eq!(v["report"]["consequent_pairs"], Value::Null);
    let terms: Vec<&str> = v["report"]["rows"].as_array().unwrap().iter().map(|r| r["term"].as_str().unwrap()).collect();
    assert_eq!(&terms[..2], ["u", "v"]);
    assert!(terms.contains(&"ext(u,v,u,v)"));
}

#[test]
fn demos() {
    let out = rcgeom(&["--format", "text", "demo", "perp", "--c", "(0, 1)"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("disjunct 1"));
    let out = rcgeom(&["--format", "text", "demo", "perp", "--c", "(1/2, 0)"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("disjunct 2"));
    let v = json(&rcgeom(&["demo", "dehn"]));
    assert_eq!(v["report"]["slope_line_intercept"], "-e^-1");
    assert_eq!(v["report"]["slope_line_intercept_finitely_bounded"], false);
    let text = String::from_utf8_lossy(&rcgeom(&["--format", "text", "demo", "dehn"]).stdout).to_string();
    assert!(text.contains("x-intercept -e^-1") && text.contains("not finitely bounded"));
    assert_eq!(code(&rcgeom(&["demo", "nope"])), 2);
}

#[test]
fn axiom_check_models() {
    let v = json(&rcgeom(&["axiom-check", "--model", "euclid", "--trials", "200", "--seed", "3"]));
    for row in v["report"]["table"].as_array().unwrap() {
        assert_eq!(row["passed"], 200, "{row}");
    }
    let v = json(&rcgeom(&["axiom-check", "--model", "dehn", "--trials", "50"]));
    let rows = v["report"]["table"].as_array().unwrap();
    let last = rows.last().unwrap();
    assert!(last["axiom"].as_str().unwrap().starts_with("A10"));
    assert_eq!(last["failed"], 1);
    assert!(rows[..rows.len() - 1].iter().all(|r| r["failed"] == 0 && r["errors"] == 0));
    assert_eq!(code(&rcgeom(&["axiom-check", "--model", "hyperbolic"])), 2);
}

#[test]
fn same_seed_same_bytes() {
    let a = rcgeom(&["axiom-check", "--model", "euclid", "--trials", "50", "--seed", "42"]);
    let b = rcgeom(&["axiom-check", "--model", "euclid", "--trials", "50", "--seed", "42"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["order"], 16);
    assert_eq!(v["version"], env!("CARGO_PKG_VERSION"));
    let e1 = rcgeom(&["enumerate", "--size", "1"]);
    let e2 = rcgeom(&["enumerate", "--size", "1"]);
    assert_eq!(e1.stdout, e2.stdout);
}

#[test]
fn root_and_out_file() {
    let v = json(&rcgeom(&["root", "--", "-5", "-2", "0"]));
    assert_eq!(v["report"]["cauchy_bound"]["exact"], "6");
    assert_eq!(v["report"]["within_bound"], true);
    assert!(v["report"]["root"]["approx"].as_str().unwrap().starts_with("2.09455"));
    assert_eq!(code(&rcgeom(&["root", "1", "2"])), 2);
    let dir = std::env::temp_dir().join(format!("rcgeom-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    let out = rcgeom(&["--out", path.to_str().unwrap(), "root", "-8", "0", "0"]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["report"]["root"]["exact"], "2");
}
