use std::process::{Command, Output};

fn domino(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domino")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_table_for_three() {
    let o = domino(&["compute", "--n", "3", "--field", "Q", "--method", "koszul", "--format", "table"]);
    assert_eq!(o.status.code(), Some(0));
    let expected = concat!(
        "I_3 over Q (koszul)\n",
        "       0 1 2\n",
        "total: 3 3 1\n",
        "    3: 3 . .\n",
        "    4: . 2 .\n",
        "    5: . 1 1\n",
    );
    assert_eq!(stdout(&o), expected);
}

#[test]
fn compute_csv_rows() {
    let o = domino(&["compute", "--n", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,i,j,value\n3,0,3,3\n3,1,5,2\n3,1,6,1\n3,2,7,1\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--n", "0"][..],
        &["compute", "--n", "3", "--field", "F4"],
        &["compute", "--n", "3", "--method", "guess"],
        &["compute", "--n", "3", "--format", "xml"],
        &["verify", "--max-n", "3", "--checks", "nothing"],
        &["compute", "--n", "12"],
        &["compute"],
    ] {
        let o = domino(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_pdreg_reports_each_n() {
    let o = domino(&["verify", "--max-n", "5", "--checks", "pdreg"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for n in 1..=5usize {
        let line = format!("n={n} pdreg PASS pd = {}, reg = {}, beta({},{}) = 1", n - 1, 2 * n - 1, n - 1, 3 * n - 2);
        assert!(text.contains(&line), "{line}\n{text}");
    }
    assert!(text.ends_with("all checks passed\n"));
}

#[test]
fn verify_recursion_prints_reconciliation() {
    let o = domino(&["verify", "--min-n", "4", "--max-n", "5", "--checks", "recursion", "--field", "F2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("base case s = 0: mismatch"));
    assert!(text.contains("unique reconciling setting: s = -1"));
}

#[test]
fn export_round_trips_table() {
    let dir = std::env::temp_dir().join(format!("domino-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("i4.json");
    let o = domino(&["export", "--n", "4", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);
    assert_eq!(v["complement"]["facets"].as_array().unwrap().len(), 5);
    assert_eq!(v["link"][0], "y3");
    let table = serde_json::to_string(&v["table"]).unwrap();
    let doc: domino_ideals::betti::TableDocument = serde_json::from_str(&table).unwrap();
    let (n, t) = doc.into_table().unwrap();
    assert_eq!(n, 4);
    assert_eq!(t.get(3, 10), 1);
    std::fs::remove_dir_all(&dir).unwrap();
}
