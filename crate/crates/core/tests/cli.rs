use std::io::Write;

use sextic_groups::cli::run;

fn sextic(args: &[&str]) -> sextic_groups::cli::Outcome {
    run(std::iter::once("sextic").chain(args.iter().copied()))
}

#[test]
fn verify_a17_passes() {
    let out = sextic(&["cases", "verify", "a17+a2", "--no-timestamp"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    for name in ["abelianization: Z6", "rb3-epimorphism", "s3-epi"] {
        assert!(
            out.stdout
                .lines()
                .any(|l| l.starts_with("PASS") && l.contains(name)),
            "{}",
            out.stdout
        );
    }
}

#[test]
fn failing_checks_exit_one() {
    let out = sextic(&["cases", "verify", "a11+a5+a3", "--no-timestamp"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.contains("FAIL"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(sextic(&["frobnicate"]).code, 2);
    assert_eq!(sextic(&["cases", "verify", "no-such-case"]).code, 2);
    assert_eq!(sextic(&["--format", "yaml", "cases", "list"]).code, 2);
}

#[test]
fn inconclusive_is_not_failure() {
    let out = sextic(&["invariants", "coset", "group:rb3", "--coset-limit", "50"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("INCONCLUSIVE"));
}

#[test]
fn json_is_deterministic() {
    let args = [
        "--format",
        "json",
        "--no-timestamp",
        "--seed",
        "7",
        "geometry",
        "family",
        "tangent",
        "--samples",
        "5",
    ];
    let a = sextic(&args);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, sextic(&args).stdout);
    let v: serde_json::Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["schema"], "1");
    assert_eq!(v["checks"].as_array().unwrap().len(), 5);
    assert!(v.get("timestamp").is_none());
}

#[test]
fn timestamp_present_by_default() {
    let out = sextic(&["--format", "json", "cases", "list"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert!(v["timestamp"].is_u64());
}

#[test]
fn abelianize_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "gens: u v\nu u\nv v v").unwrap();
    let out = sextic(&[
        "invariants",
        "abelianize",
        "--presentation",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout.trim(), "Z6");
}

#[test]
fn export_writes_registry() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("registry.json");
    let out = sextic(&["cases", "export", "--output", path.to_str().unwrap()]);
    assert_eq!(out.code, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, sextic_groups::registry::export_json().unwrap());
}

#[test]
fn present_double_cover_and_quotient() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "gens: a d\na d a d a d d^-1 a^-1 d^-1 a^-1 d^-1 a^-1").unwrap();
    let path = f.path().to_str().unwrap();
    let out = sextic(&[
        "present",
        "double-cover",
        "--presentation",
        path,
        "--distinguished",
        "d",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("gens: a ab"), "{}", out.stdout);
    let out = sextic(&[
        "present",
        "quotient",
        "--presentation",
        path,
        "--relations",
        "a = d",
    ]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.lines().count() >= 2);
}

#[test]
fn identities_all_pass() {
    let out = sextic(&["geometry", "identity", "all"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}
