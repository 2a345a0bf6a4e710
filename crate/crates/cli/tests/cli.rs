use std::path::Path;
use std::process::{Command, Output};

fn bdisk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bdisk"))
        .args(args)
        .env_remove("BDISK_OUT_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn read(p: &Path) -> String {
    std::fs::read_to_string(p).unwrap()
}

#[test]
fn eval_prints_values() {
    let o = bdisk(&["eval", "--op", "Cbar", "--fn", "const:1", "--n", "7", "--point", "0.1,-0.2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1");

    // the diameter endpoint is a node of every quadrant operator
    let o = bdisk(&["eval", "--op", "Bbar", "--fn", "example1", "--n", "10", "--point", "1,0"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 5.0_f64.sin()).abs() < 1e-11);

    let o = bdisk(&["eval", "--op", "Bstancu-disk", "--fn", "example3_h", "--n", "5", "--point", "-0.3,0.4", "--json"]);
    let j: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(j["function"], "example3_h");
    assert_eq!(j["n"], 5);
    assert!(j["value"].as_f64().unwrap().is_finite());
}

#[test]
fn usage_and_domain_errors_exit_with_two() {
    for args in [
        vec!["eval", "--op", "Cbar", "--fn", "example1", "--n", "5", "--point", "0.9,0.9"],
        vec!["eval", "--op", "nope", "--fn", "example1", "--n", "5", "--point", "0,0"],
        vec!["table", "--example", "9"],
        vec!["table", "--example", "1", "--n", "0"],
        vec!["mesh", "--kind", "stancu", "--n", "0", "--out", "-"],
        vec!["frobnicate"],
    ] {
        let o = bdisk(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn mesh_files_have_the_expected_rows() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert!(bdisk(&["mesh", "--kind", "quadrant", "--n", "15", "--dedup", "--out", d]).status.success());
    let text = read(&dir.path().join("mesh_quadrant_15.csv"));
    assert_eq!(text.lines().count(), 481 + 1);
    assert_eq!(text.lines().next().unwrap(), "x,y,quadrant,k,j");

    let o = bdisk(&["mesh", "--kind", "stancu", "--n", "200", "--out", "-"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 40401 + 1);
    for line in text.lines().skip(1) {
        let mut it = line.split(',').map(|c| c.parse::<f64>().unwrap());
        let (x, y) = (it.next().unwrap(), it.next().unwrap());
        assert!(x * x + y * y <= 1.0 + 1e-8);
    }
}

#[test]
fn section_of_the_step_function_stays_in_range() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_bdisk"))
        .args(["section", "--op", "Cbar", "--fn", "example4", "--n", "10,40,160"])
        .env("BDISK_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = read(&dir.path().join("section_Cbar_example4.csv"));
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "s,x,y,f,Cbar_10,Cbar_40,Cbar_160");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 801);
    for r in rows {
        for v in r.split(',').skip(4).map(|c| c.parse::<f64>().unwrap()) {
            assert!((-1e-12..=1.0 + 1e-12).contains(&v));
        }
    }
}

#[test]
fn table_is_independent_of_thread_count() {
    let run = |threads: &str| {
        let o = bdisk(&["--threads", threads, "table", "--example", "2", "--n", "10,30", "--out", "-"]);
        assert!(o.status.success());
        o.stdout
    };
    let one = run("1");
    assert_eq!(String::from_utf8_lossy(&one).lines().next().unwrap(), "n,rmse_C,rmse_B");
    assert_eq!(one, run("4"));
    assert_eq!(one, run("1"));
}
