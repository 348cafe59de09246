use std::process::{Command, Output};

fn flagpath(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagpath")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn check_reports_octahedron() {
    let out = flagpath(&["check", "cross:3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("flag=true normal=true n=6 d=2 facets=8"));
}

#[test]
fn check_rejects_non_flag_input() {
    let out = flagpath(&["check", "simplexbd:3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("flag=false"));
}

#[test]
fn segment_between_antipodal_facets() {
    let out = flagpath(&["segment", "cross:3", "--from", "1 3 5", "--to", "2 4 6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let facets: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(facets.len(), 4);
    assert_eq!(facets[0], "1 3 5");
    assert_eq!(facets[3], "2 4 6");
    assert!(text.contains("# 3 steps, non-revisiting, bound 3"));
}

#[test]
fn segment_trace_lists_pearls() {
    let out = flagpath(&["segment", "cross:3", "--from", "1,3,5", "--to", "2,4,6", "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().any(|l| l.starts_with("# dim 2 pearls")));
}

#[test]
fn segment_preconditions_exit_two() {
    let out = flagpath(&["segment", "simplexbd:3", "--from", "1 2 3", "--to", "2 3 4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = flagpath(&["segment", "cross:3", "--from", "1 2 3", "--to", "2 4 6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_writes_canonical_lists() {
    for (spec, lines) in [("cross:3", 8), ("cycle:4", 4), ("sd(cycle:3)", 6), ("simplexbd:3", 4)] {
        let out = flagpath(&["generate", spec]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(stdout(&out).lines().count(), lines, "{spec}");
    }
    assert_eq!(stdout(&flagpath(&["generate", "cycle:4"])), "1 2\n1 4\n2 3\n3 4\n");
}

#[test]
fn generated_file_round_trips() {
    let dir = std::env::temp_dir().join(format!("flagpath-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("oct.txt");
    let file_str = file.to_str().unwrap();
    assert_eq!(flagpath(&["generate", "cross:3", "-o", file_str]).status.code(), Some(0));
    let out = flagpath(&["audit", file_str, "--all-pairs"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("pairs_checked=28"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn audit_json_and_sampling() {
    let out = flagpath(&["audit", "cross:3", "--sample", "50", "--seed", "9", "--json", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("\"schema\": \"flagpath.audit.v1\""));
    assert!(text.contains("\"pairs_checked\": 50"));
    assert!(text.contains("\"violations\": []"));
}

#[test]
fn audit_of_non_normal_complex_exits_two() {
    let out = flagpath(&["audit", "wedge(cross:3,cross:3)", "--all-pairs"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_three() {
    assert_eq!(flagpath(&["audit", "cross:3"]).status.code(), Some(3));
    assert_eq!(flagpath(&["frobnicate"]).status.code(), Some(3));
    assert_eq!(flagpath(&["check", "cross:x"]).status.code(), Some(3));
    assert_eq!(flagpath(&["segment", "cross:3", "--from", "1 a", "--to", "2 4 6"]).status.code(), Some(3));
}
