use std::io::Write;
use std::process::{Command, Output, Stdio};

fn liegen(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_liegen"))
        .args(args)
        .env_remove("LIEGEN_SEED")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariants_of_remark_algebra() {
    let o = liegen(&["invariants", "catalog:remark_5d"], "");
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("N_rank=1 j0=2 N_wedge=1\n"));
}

#[test]
fn product_pipes_into_invariants() {
    let p = liegen(&["product", "r2_aff", "r2_aff"], "");
    assert!(p.status.success());
    let o = liegen(&["invariants", "-", "--format", "machine"], &stdout(&p));
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "n_rank=1"));
    assert!(out.lines().any(|l| l == "consistent=true"));
}

#[test]
fn product_writes_file() {
    let dir = std::env::temp_dir().join(format!("liegen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("h.lie");
    let o = liegen(&["product", "L1", "L1", "-o", path.to_str().unwrap()], "");
    assert!(o.status.success());
    let info = liegen(&["info", path.to_str().unwrap(), "--format", "machine"], "");
    let out = stdout(&info);
    assert!(out.contains("dim=3\n") && out.contains("nilpotent=true\n"), "{out}");
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn seed_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_liegen"))
        .args(["invariants", "h1", "--format", "machine"])
        .env("LIEGEN_SEED", "42")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("seed=42\n"));
}

#[test]
fn input_errors_exit_with_two() {
    let o = liegen(&["info", "-"], "dim 3\n[X1,X2] = X4\n");
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 2"), "{err}");

    // Jacobi fails on (X1, X2, X3)
    let o = liegen(&["info", "-"], "dim 3; [X1,X2]=X2; [X1,X3]=X3; [X2,X3]=X1");
    assert_eq!(o.status.code(), Some(2));

    let o = liegen(&["structures", "r2", "--E", "diag:1,1,1"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = liegen(&["paracomplex-build", "r2", "r2", "--m", "1"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = liegen(&["classify"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn structures_report() {
    let o = liegen(&["structures", "h1", "--E", "diag:1,-1,-1", "--format", "machine"], "");
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("valid=true") && out.contains("plus_dim=1 minus_dim=2"), "{out}");

    let o = liegen(&["structures", "r4_0", "--E", "1 0 0 0; 0 1 0 0; 0 0 -1 0; 0 0 0 -1"], "");
    assert!(o.status.success());
    assert!(stdout(&o).contains("not a product structure"));
}

#[test]
fn extend_with_explicit_choice() {
    let o = liegen(
        &["extend", "r2", "r2", "--E1", "diag:1,-1", "--E2", "diag:-1,1", "--choices", "-", "--format", "machine"],
        "",
    );
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("choice=")).count(), 1);
    assert!(out.contains("choice=- "));

    let o = liegen(&["extend", "r2", "r2", "--E1", "diag:1,-1", "--E2", "diag:-1,1", "--choices", "+-"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn paracomplex_build_balanced() {
    let o = liegen(&["paracomplex-build", "L2", "L2", "--m", "1", "--format", "machine"], "");
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("plus_dim=4 minus_dim=4") && out.contains("valid=true"), "{out}");
}

#[test]
fn catalog_round_trip() {
    let list = liegen(&["catalog", "--format", "machine"], "");
    assert!(stdout(&list).contains("name=remark_5d dim=5"));
    for name in ["remark_5d", "paper_example_10d", "rn_7", "L3"] {
        let text = stdout(&liegen(&["catalog", name], ""));
        let a = stdout(&liegen(&["info", "-", "--format", "machine"], &text));
        let b = stdout(&liegen(&["info", name, "--format", "machine"], ""));
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn theorem1_reports_center_mismatch() {
    let o = liegen(&["theorem1", "L1", "L1", "--format", "machine"], "");
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("center=1,3,false"), "{out}");
    assert!(out.contains("center_exact=1,1,true"), "{out}");
    assert!(out.contains("solvability_index=2,1"), "{out}");
}

#[test]
fn help_and_version_succeed() {
    assert!(liegen(&["--help"], "").status.success());
    assert!(liegen(&["--version"], "").status.success());
}
