//! End-to-end tests of the binary: exit codes, JSON determinism, file
//! handling and the environment-variable cap.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use qshell::{render_rank_table, render_subspace_list, uniform_matroid};

fn qshell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshell"))
        .args(args)
        .env_remove("QSHELL_MAX_SUBSPACES")
        .output()
        .expect("binary runs")
}

fn qshell_with_env(args: &[&str], cap: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qshell"))
        .args(args)
        .env("QSHELL_MAX_SUBSPACES", cap)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn stderr(output: &Output) -> String {
    String::from_utf8_lossy(&output.stderr).into_owned()
}

fn write_file(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn sphere_homology_matches_and_exits_zero() {
    let output = qshell(&["sphere-homology", "--n", "3", "--q", "2"]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("H~_1 = Z^8"));
    assert!(text.contains("verdict: match"));
    assert!(text.contains("euler characteristic: consistent"));
}

#[test]
fn matroid_shell_reports_the_full_pipeline() {
    let output = qshell(&["matroid-shell", "--uniform", "2", "3", "2", "--random-orders", "3"]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("rank axioms (r1)-(r3): pass"));
    assert!(text.contains("canonical order shells: yes (21 witnessed pairs)"));
    assert!(text.contains("interval partition: sizes"));
    assert!(text.contains("15 faces covered"));
    assert!(text.contains("random orders: 3 of 3 shuffles shell"));
}

#[test]
fn verify_accepts_a_valid_rank_table() {
    let dir = tempfile::tempdir().unwrap();
    let oracle = uniform_matroid(1, 2, 2).unwrap();
    let path = write_file(dir.path(), "table.txt", &render_rank_table(&oracle));
    let output = qshell(&["verify", "--rank-table", &path]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("dual exchange: 6 (B1, B2, y) triples"));
    assert!(text.contains("verdict: pass"));
}

#[test]
fn verify_rejects_axiom_violations_with_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    // The diagonal line of F_2^2 alone: passes (b1)-(b3), fails (b4).
    let path = write_file(dir.path(), "bases.txt", "q=2 n=2\n\n1 1\n");
    let output = qshell(&["verify", "--bases", &path]);
    assert_eq!(output.status.code(), Some(3));
    let text = stdout(&output);
    assert!(text.contains("(b4) maximal intersections: 1 violation(s)"));
    assert!(text.contains("verdict: fail — axiom (b4)"));
}

#[test]
fn verify_flags_independence_holes() {
    let dir = tempfile::tempdir().unwrap();
    // Lines of F_2^2 without the zero subspace: not downward closed.
    let path = write_file(dir.path(), "family.txt", "q=2 n=2\n\n0 1\n\n1 0\n\n1 1\n");
    let output = qshell(&["verify", "--independents", &path]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stdout(&output).contains("(i2) downward closure"));
}

#[test]
fn malformed_rank_tables_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    // Incomplete: the full space's row is missing.
    let path =
        write_file(dir.path(), "partial.txt", "q=2 n=2\n0 | 0\n0,1 | 1\n1,0 | 1\n1,1 | 1\n");
    let output = qshell(&["verify", "--rank-table", &path]);
    assert_eq!(output.status.code(), Some(3));
    assert!(stderr(&output).contains("rank table misses"));
}

#[test]
fn unreadable_and_unparsable_inputs_exit_four() {
    let output = qshell(&["homology", "--from-file", "/no/such/file.txt"]);
    assert_eq!(output.status.code(), Some(4));

    let dir = tempfile::tempdir().unwrap();
    let path = write_file(dir.path(), "bad.txt", "q=2 n=2\n\n5 0\n");
    let output = qshell(&["homology", "--from-file", &path]);
    assert_eq!(output.status.code(), Some(4));
    assert!(stderr(&output).contains("line 3"));

    let path = write_file(dir.path(), "noheader.txt", "1 0\n0 1\n");
    let output = qshell(&["verify", "--independents", &path]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn resource_caps_exit_two() {
    let output = qshell(&["sphere-homology", "--n", "4", "--q", "3", "--max-subspaces", "10"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("above the cap"));

    // The environment variable mirrors the flag ...
    let output = qshell_with_env(&["sphere-homology", "--n", "3", "--q", "2"], "5");
    assert_eq!(output.status.code(), Some(2));

    // ... but an explicit flag wins.
    let output = qshell_with_env(
        &["sphere-homology", "--n", "3", "--q", "2", "--max-subspaces", "100"],
        "5",
    );
    assert_eq!(output.status.code(), Some(0));

    // A nonsensical variable is refused rather than ignored.
    let output = qshell_with_env(&["sphere-homology", "--n", "2", "--q", "2"], "lots");
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn oversized_and_invalid_field_orders_exit_two() {
    let output = qshell(&["sphere-homology", "--n", "2", "--q", "11"]);
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr(&output).contains("exceeds the command line cap"));

    let output = qshell(&["sphere-homology", "--n", "2", "--q", "6"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical_and_truncated() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let output = qshell(&[
            "homology",
            "--uniform",
            "2",
            "3",
            "2",
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    }
    let bytes_a = fs::read(&a).unwrap();
    let bytes_b = fs::read(&b).unwrap();
    assert_eq!(bytes_a, bytes_b, "identical invocations must serialize identically");

    let text = String::from_utf8(bytes_a).unwrap();
    let expected = format!(
        "{{\"q\":2,\"n\":3,\"complex\":\"uniform\",\"degrees\":[{{\"p\":-1,\"betti\":0,\
         \"torsion\":[]}},{{\"p\":0,\"betti\":0,\"torsion\":[]}},{{\"p\":1,\"betti\":8,\
         \"torsion\":[]}}],\"euler_ok\":true,\"version\":\"{}\",\"params\":{{\"k\":2,\"n\":3,\
         \"q\":2}}}}\n",
        env!("CARGO_PKG_VERSION")
    );
    assert_eq!(text, expected);
}

#[test]
fn sphere_homology_writes_json_too() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sphere.json");
    let output =
        qshell(&["sphere-homology", "--n", "2", "--q", "3", "--json", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("{\"q\":3,\"n\":2,\"complex\":\"sphere\","));
    assert!(text.contains("\"degrees\":[{\"p\":-1,\"betti\":0,\"torsion\":[]},{\"p\":0,\"betti\":3,\"torsion\":[]}]"));
    assert!(text.contains("\"euler_ok\":true"));
}

#[test]
fn homology_from_file_closes_downward() {
    let dir = tempfile::tempdir().unwrap();
    // Two planes of F_2^3 given without their lines.
    let path = write_file(
        dir.path(),
        "faces.txt",
        "q=2 n=3\n\n1 0 0\n0 1 0\n\n1 0 0\n0 0 1\n",
    );
    let output = qshell(&["homology", "--from-file", &path]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("missing faces were added"));
    // Two planes glued along a line are contractible after puncturing.
    assert!(text.contains("H~_0 = 0"));
    assert!(text.contains("euler characteristic: consistent"));
}

#[test]
fn explore_links_surveys_a_sphere_file() {
    let dir = tempfile::tempdir().unwrap();
    let sphere = qshell::q_sphere(3, 2).unwrap();
    let spec = sphere.lattice().spec().clone();
    let listed = render_subspace_list(&spec, 3, &sphere.facets());
    let path = write_file(dir.path(), "sphere.txt", &listed);

    let output = qshell(&["explore-links", "--from-file", &path, "--pivot", "1,0,0"]);
    assert_eq!(output.status.code(), Some(0), "stderr: {}", stderr(&output));
    let text = stdout(&output);
    assert!(text.contains("pivot (1,0,0): contained in 3 of 7 facets (l = 3)"));
    assert!(text.contains("pivot-first order shells: yes"));
    assert!(text.contains("cone with apex <(1,0,0)>"));
    assert!(text.contains("sphere links for i = 4..7: complete at 4 of 4 positions"));

    // Unparsable pivots are a parse failure.
    let output = qshell(&["explore-links", "--from-file", &path, "--pivot", "fish"]);
    assert_eq!(output.status.code(), Some(4));
}

#[test]
fn clap_usage_errors_exit_two() {
    // Missing required source group.
    let output = qshell(&["homology"]);
    assert_eq!(output.status.code(), Some(2));
    // Conflicting sources.
    let output = qshell(&["homology", "--sphere", "2", "2", "--uniform", "1", "2", "2"]);
    assert_eq!(output.status.code(), Some(2));
}
