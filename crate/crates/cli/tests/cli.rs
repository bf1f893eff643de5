use std::process::{Command, Output};

fn rich_ss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rich-ss"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn classify_matches_golden_tables() {
    let b = rich_ss(&["classify", "B", "5", "4"]);
    assert!(b.status.success());
    assert_eq!(stdout(&b), include_str!("golden/b5_4.md"));
    let d = rich_ss(&["classify", "--type", "D", "--n", "5", "--r", "3"]);
    assert_eq!(stdout(&d), include_str!("golden/d5_3.md"));
    let t = rich_ss(&["tables"]);
    let both = format!(
        "{}\n{}\n",
        include_str!("golden/b5_4.md"),
        include_str!("golden/d5_3.md")
    );
    assert_eq!(stdout(&t), both);
}

#[test]
fn classify_json_and_csv() {
    let o = rich_ss(&["classify", "D", "5", "3", "--format", "json"]);
    let v = json(&o);
    assert_eq!(v["type"], "D");
    assert_eq!(v["omega"], serde_json::json!(["3/2", "3/2", "3", "2", "1"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["v"]["window"], serde_json::json!([-4, 5, -1, 2, 3]));
    assert_eq!(
        rows[3]["w"]["weight_root_basis"],
        serde_json::json!(["-3/2", "-1/2", "-1", "0", "0"])
    );
    let back: richardson_ss::report::ClassifyReport = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(back.rows.len(), 4);

    let c = stdout(&rich_ss(&["classify", "B", "5", "4", "--format", "csv"]));
    let lines: Vec<&str> = c.lines().collect();
    assert_eq!(lines[0], "label,v,v_weight,w_weight,w");
    assert_eq!(lines.len(), 5);
    assert_eq!(
        lines[1],
        "(2),\"(3,4,5,-1,2)\",\"(0,1,0,0,0)\",\"(0,-1,0,0,0)\",\"(3,4,5,-2,1)\""
    );
}

#[test]
fn check_reports_counterexample() {
    let o = rich_ss(&["check", "B", "4", "3", "1,2,-3,4", "1,4,-3,2"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["richardson_nonempty"], true);
    assert_eq!(v["semistable"], "no");
    assert_eq!(v["reason"], "no_zero_sum_chain");
    let w = json(&rich_ss(&[
        "check",
        "D",
        "4",
        "3",
        "--word",
        "s4 s1 s2 s3",
        "s4 s3 s1 s2 s3",
    ]));
    assert_eq!(w["pair"]["v"], serde_json::json!([-1, 4, -2, 3]));
    assert_eq!(w["semistable"], "no");
}

#[test]
fn equal_pair_with_nonzero_weight_is_not_semistable() {
    let v = json(&rich_ss(&[
        "check",
        "B",
        "5",
        "4",
        "3,4,5,-1,2",
        "3,4,5,-1,2",
    ]));
    assert_eq!(v["richardson_nonempty"], true);
    assert_eq!(v["semistable"], "no");
}

#[test]
fn check_reports_empty_richardson() {
    let v = json(&rich_ss(&[
        "check",
        "B",
        "5",
        "4",
        "3,4,5,-1,2",
        "1,2,5,-4,3",
    ]));
    assert_eq!(v["richardson_nonempty"], false);
    assert_eq!(v["reason"], "richardson_empty");
}

#[test]
fn certify_prints_a_valid_chain() {
    let o = rich_ss(&["certify", "D", "5", "3", "-4,5,-1,2,3", "-4,5,-3,-2,-1"]);
    assert!(o.status.success());
    let v = json(&o);
    let chain = v["chain"].as_array().unwrap();
    assert_eq!(chain.len(), 4);
    assert_eq!(chain[0], serde_json::json!([-4, 5, -1, 2, 3]));
    assert_eq!(chain[3], serde_json::json!([-4, 5, -3, -2, -1]));
    let none = rich_ss(&["certify", "B", "4", "3", "1,2,-3,4", "1,4,-3,2"]);
    assert_eq!(none.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    assert_eq!(
        rich_ss(&["check", "X", "4", "3", "1,2,3,4", "1,2,3,4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(rich_ss(&["classify", "D", "3", "1"]).status.code(), Some(2));
    assert_eq!(rich_ss(&["classify", "B", "4", "5"]).status.code(), Some(2));
    assert_eq!(
        rich_ss(&["check", "D", "4", "3", "-1,2,3,4", "1,2,3,4"])
            .status
            .code(),
        Some(2)
    );
    let o = rich_ss(&["check", "B", "4", "3", "2,1,3,4", "1,4,-3,2"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("(1,2,3,4)"));
    assert_eq!(rich_ss(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn verify_small_sweep_passes() {
    let o = rich_ss(&["verify", "--max-n", "3", "--types", "BC", "--samples", "20"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("fail 0\n"));
}
