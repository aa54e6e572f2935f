use std::process::{Command, Output};

fn liebound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_liebound")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verdict_exit_codes() {
    assert_eq!(liebound(&["verdict", "G2", "--dim", "6"]).status.code(), Some(0));
    assert_eq!(liebound(&["verdict", "G2", "--dim", "7"]).status.code(), Some(1));
    assert_eq!(liebound(&["verdict", "A3", "-d", "7"]).status.code(), Some(2));
    assert_eq!(liebound(&["verdict", "A2 x Aff1", "--dim", "4"]).status.code(), Some(2));
}

#[test]
fn errors_exit_3() {
    for args in [
        &["verdict", "C2", "--dim", "1"][..],
        &["verdict", "A2 x Aff1 x Aff2", "--dim", "1"],
        &["verdict", "G2"],
        &["tables", "nope"],
        &["parabolic", "B4", "--node", "5"],
        &["homotopy", "D3"],
        &["bogus"],
    ] {
        let o = liebound(args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verdict_json_fields() {
    let o = liebound(&["verdict", "B2", "--dim", "4", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "Embeds");
    assert_eq!(v["total_dim"], 10);
    assert_eq!(v["d"], 4);
    for key in ["rule", "inequality", "semantics"] {
        assert!(v[key].is_string(), "{key}");
    }
}

#[test]
fn diagnose_does_not_change_verdict() {
    let plain = liebound(&["verdict", "A1^2 x E8", "--dim", "126", "--json"]);
    let diag = liebound(&["verdict", "A1^2 x E8", "--dim", "126", "--json", "--diagnose"]);
    assert_eq!(plain.status.code(), diag.status.code());
    let v: serde_json::Value = serde_json::from_str(&stdout(&diag)).unwrap();
    assert_eq!(v["parabolic_certificate"]["certifies"], true);
}

#[test]
fn tables_match_golden() {
    for id in ["dims", "parabolic-classical", "parabolic-exceptional", "homotopy", "margins"] {
        let o = liebound(&["tables", id]);
        assert!(o.status.success());
        let golden = std::fs::read_to_string(format!("{}/../core/golden/{id}.tsv", env!("CARGO_MANIFEST_DIR"))).unwrap();
        assert_eq!(stdout(&o), golden, "{id}");
    }
    let o = liebound(&["tables", "homotopy", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 9);
}

#[test]
fn parabolic_report() {
    let o = liebound(&["parabolic", "B4", "--node", "2"]);
    let text = stdout(&o);
    let row = text.lines().nth(1).unwrap();
    assert_eq!(row, "B_4\t2\ta_1 + b_2\t36\t13\t11\t25\t24\tyes\t9\tyes");

    let o = liebound(&["parabolic", "G2", "--all"]);
    assert_eq!(stdout(&o).lines().count(), 3);
    let o = liebound(&["parabolic", "E8"]);
    assert!(stdout(&o).lines().nth(1).unwrap().starts_with("E_8\t4\ta_1 + a_2 + a_4\t248\t35\t"));
}

#[test]
fn homotopy_report() {
    let o = liebound(&["homotopy", "D4"]);
    assert!(stdout(&o).contains("rational_homotopy_type: {3, 7, 7, 11}\n"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("liebound-out-{}.tsv", std::process::id()));
    let o = liebound(&["tables", "homotopy", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(written.starts_with("type\tdim\trational_homotopy_type\n"));
}
