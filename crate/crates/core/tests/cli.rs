use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gsp4-adjoint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn compute_vid_has_a_triple_pole() {
    let o = run(&["compute", "case=VId", "sigma=s"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("L(s,Ad) = L(s,1)^4 L(s,nu)^3 L(s,nu^-1)^3"), "{out}");
    assert!(out.contains("ord_s=1: 3"));
    assert!(out.contains("GP-R: holds"));
}

#[test]
fn iiib_branch_doubles_the_pole() {
    let o = run(&["compute", "case=IIIb chi=chi sigma=s", "--branch", "chi=nu"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("ord_s=1: 2"));
    let o = run(&["compute", "case=IIIb chi=chi sigma=s", "--branch", "chi=nu^-1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ord_s1"], 2);
}

#[test]
fn ixa_spec_with_forward_declaration() {
    let o = run(&["compute", "case=IXa pi=pi1 omega=xi selftwists=xi xi=xi[2]", "--format=latex"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("\\otimes \\xi\\nu"));
}

#[test]
fn exit_codes() {
    let o = run(&["compute", "case=IIa chi=nu^(1/2) sigma=sigma"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("χ²≠ν^{±1}"));
    let o = run(&["compute", "case=IIa chi=(nu sigma=s"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte"));
    assert_eq!(run(&["table", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn table_pole_column() {
    let o = run(&["table", "--format=md"]);
    assert!(o.status.success());
    let want = [
        ("I", "0"), ("IIa", "0"), ("IIb", "1"), ("IIIa", "0"), ("IIIb", "1 or 2"),
        ("IVa", "0"), ("IVb", "1"), ("IVc", "1"), ("IVd", "2"), ("Va", "0"),
        ("Vb", "1"), ("Vc", "1"), ("Vd", "2"), ("VIa", "0"), ("VIb", "0"),
        ("VIc", "1"), ("VId", "3"), ("VII", "0"), ("VIIIa", "0"), ("VIIIb", "0"),
        ("IXa", "0"), ("IXb", "1"), ("X", "0"), ("XIa", "0"), ("XIb", "1"),
    ];
    let got: Vec<(String, String)> = stdout(&o)
        .lines()
        .skip(2)
        .map(|l| {
            let cells: Vec<&str> = l.split('|').map(str::trim).collect();
            (cells[1].to_string(), cells[3].to_string())
        })
        .collect();
    let want: Vec<(String, String)> = want.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    assert_eq!(got, want);
}

#[test]
fn verify_reports_seed_and_passes() {
    let o = run(&["verify", "linalg", "--seed", "42"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("# seed = 42"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 3);
}

#[test]
fn gsp_flag_adds_zeta() {
    let o = run(&["compute", "case=IVa", "sigma=s", "--gsp"]);
    assert!(stdout(&o).contains("L(s,Ad) = L(s,1) L(s,nu) L(s,nu^3)"), "{}", stdout(&o));
}
