//! End-to-end tests running the coverlab binary as a subprocess: exit codes,
//! output formats, range guards, and byte-level determinism.

use std::io::Write;
use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    run_with_env(args, &[])
}

fn run_with_env(args: &[&str], env: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_coverlab"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    let output = cmd.output().expect("failed to run coverlab");
    (
        output.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&output.stdout).to_string(),
        String::from_utf8_lossy(&output.stderr).to_string(),
    )
}

fn write_temp(name: &str, content: &str) -> tempfile::TempPath {
    let mut file = tempfile::Builder::new()
        .prefix(name)
        .suffix(".txt")
        .tempfile()
        .expect("create temp file");
    file.write_all(content.as_bytes()).expect("write temp file");
    file.into_temp_path()
}

#[test]
fn cover_ideal_crown3_text_is_the_canonical_generator_list() {
    let (code, stdout, _) = run(&["cover-ideal", "--crown", "3", "--text"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "y1y2y3, x1x2x3, x2x3y2y3, x1x3y1y3, x1x2y1y2\n");
}

#[test]
fn hilbert_symbolic_square_json_matches_schema() {
    let (code, stdout, _) =
        run(&["hilbert", "--multipartite", "1,1,1", "--symbolic", "--s", "2", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["coeffs"], serde_json::json!([1, 0, 0, -1, -3, 3]));
    assert_eq!(value["den_pow"], 3);
}

#[test]
fn crown_below_range_is_a_usage_error() {
    let (code, _, stderr) = run(&["reg", "--crown", "2", "--s", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("n >= 3"), "stderr: {stderr}");
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let (code, _, _) = run(&["cover-ideal", "--crown", "3", "--bogus"]);
    assert_eq!(code, 2);
}

#[test]
fn missing_graph_selector_is_a_usage_error() {
    let (code, _, _) = run(&["cover-ideal"]);
    assert_eq!(code, 2);
}

#[test]
fn out_of_range_powers_are_usage_errors() {
    let (code, _, stderr) = run(&["bracket-power", "--crown", "3", "--s", "0"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("s >= 1"), "stderr: {stderr}");
    let (code, _, stderr) = run(&["hilbert", "--crown", "2", "--s", "1", "--closed-form"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("n >= 3"), "stderr: {stderr}");
}

#[test]
fn csv_outside_verify_is_a_usage_error() {
    let (code, _, stderr) = run(&["cover-ideal", "--crown", "3", "--csv"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--csv"), "stderr: {stderr}");
}

#[test]
fn reg_of_crown3_cover_ideal() {
    let (code, stdout, _) = run(&["reg", "--crown", "3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "4");
    let (code, stdout, _) = run(&["reg", "--crown", "3", "--s", "2", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["regularity"], 8);
}

#[test]
fn power_commands_print_generators() {
    let (code, stdout, _) =
        run(&["power", "--multipartite", "1,1", "--s", "2", "--text"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "x21^2, x11x21, x11^2\n");
    let (code, stdout, _) =
        run(&["bracket-power", "--multipartite", "1,1,1", "--s", "2", "--text"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "x21^2x31^2, x11^2x31^2, x11^2x21^2\n");
    let (code, stdout, _) =
        run(&["symbolic-power", "--multipartite", "1,1,1", "--s", "2", "--text"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "x11x21x31, x21^2x31^2, x11^2x31^2, x11^2x21^2\n");
}

#[test]
fn mult_command_matches_the_formulas() {
    let (code, stdout, _) =
        run(&["mult", "--multipartite", "1,1,1", "--which", "cover", "--s", "2"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "9");
    let (code, stdout, _) =
        run(&["mult", "--crown", "3", "--which", "edge", "--s", "2", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["multiplicity"], 8);
}

#[test]
fn betti_json_has_entries_reg_and_pd() {
    let (code, stdout, _) = run(&["betti", "--multipartite", "1,1,1", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["reg"], 2);
    assert_eq!(value["pd"], 2);
    let entries = value["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert_eq!(entries[3]["i"], 1);
    assert_eq!(entries[3]["b"], serde_json::json!([1, 1, 1]));
    assert_eq!(entries[3]["rank"], 2);
}

#[test]
fn edge_file_graphs_flow_through_the_pipeline() {
    let path = write_temp("path_graph", "a b\nb c  # a path\n");
    let arg = path.to_str().unwrap();
    let (code, stdout, _) = run(&["cover-ideal", "--edge-file", arg]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "b, ac");
    let (code, stdout, _) = run(&["edge-ideal", "--edge-file", arg]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "bc, ab");
}

#[test]
fn loops_and_duplicate_edges_are_reported() {
    let loopy = write_temp("loop_graph", "a a\n");
    let (code, _, stderr) = run(&["cover-ideal", "--edge-file", loopy.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("loop"), "stderr: {stderr}");
    let dup = write_temp("dup_graph", "a b\nb a\n");
    let (code, _, stderr) = run(&["edge-ideal", "--edge-file", dup.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("duplicate edge"), "stderr: {stderr}");
}

#[test]
fn betti_of_an_edgeless_graph_is_a_computation_error() {
    let empty = write_temp("edgeless", "# comments only\n");
    let (code, _, stderr) = run(&["betti", "--edge-file", empty.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(stderr.contains("unit ideal"), "stderr: {stderr}");
}

#[test]
fn graph_text_output_is_valid_edge_list_input() {
    let (code, stdout, _) = run(&["graph", "crown", "--n", "3"]);
    assert_eq!(code, 0);
    let path = write_temp("crown3_roundtrip", &stdout);
    let (code, regen, _) = run(&["edge-ideal", "--edge-file", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(regen.trim().split(", ").count(), 6);
}

#[test]
fn graph_json_lists_vertices_and_edges() {
    let (code, stdout, _) = run(&["graph", "multipartite", "--parts", "2,1", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["vertices"], serde_json::json!(["x11", "x12", "x21"]));
    assert_eq!(value["edges"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_crown_small_grid_passes() {
    let (code, stdout, _) = run(&["verify", "crown", "--n", "3", "--s-max", "2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("summary: 16 pass, 0 fail, 0 skipped"), "stdout: {stdout}");
}

#[test]
fn verify_multiplicity_triangle_records() {
    let (code, stdout, _) = run(&[
        "verify",
        "multiplicity",
        "--graph",
        "triangle",
        "--s-max",
        "3",
        "--csv",
        "--no-timing",
    ]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout.lines().next().unwrap(),
        "theorem,params,expected,computed,status,ms"
    );
    for (s, value) in [(1, 3), (2, 9), (3, 18)] {
        let row = format!("cover-symbolic-multiplicity,graph=triangle s={s},{value},{value},pass,");
        assert!(stdout.contains(&row), "missing row {row:?} in {stdout}");
    }
}

#[test]
fn verify_multipartite_records_the_two_part_recursion_check() {
    let (code, stdout, _) = run(&[
        "verify",
        "multipartite",
        "--parts",
        "2,1",
        "--s-max",
        "2",
        "--no-timing",
    ]);
    assert_eq!(code, 0);
    assert!(stdout.contains("pass symbolic-power-recursion parts=2,1 s=2"));
    assert!(stdout.contains("pass bipartite-power-collapse parts=2,1 s=2"));
}

#[test]
fn verify_output_is_byte_identical_without_timing() {
    let args =
        ["verify", "multipartite", "--parts", "2,1,1", "--s-max", "3", "--json", "--no-timing"];
    let (code_a, a, _) = run(&args);
    let (code_b, b, _) = run(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(a, b);
}

#[test]
fn verify_is_thread_count_independent() {
    let args = ["verify", "crown", "--n", "3", "--s-max", "3", "--csv", "--no-timing"];
    let (_, one, _) = run_with_env(&args, &[("COVERLAB_THREADS", "1")]);
    let (_, many, _) = run_with_env(&args, &[("COVERLAB_THREADS", "5")]);
    assert_eq!(one, many);
}

#[test]
fn out_of_guard_instances_are_skipped_not_errors() {
    let (code, stdout, _) =
        run(&["verify", "crown", "--n", "6", "--s-max", "1", "--no-timing"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("skipped"), "stdout: {stdout}");
    assert!(stdout.contains("--force"), "stdout: {stdout}");
    assert!(stdout.contains("0 fail"), "stdout: {stdout}");
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let target = tempfile::Builder::new()
        .prefix("coverlab_out")
        .suffix(".json")
        .tempfile()
        .expect("create temp file")
        .into_temp_path();
    let path = target.to_str().unwrap();
    let (code, stdout, _) =
        run(&["hilbert", "--crown", "3", "--s", "1", "--json", "--out", path]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let written = std::fs::read_to_string(path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&written).unwrap();
    assert_eq!(value["den_pow"], 6);
}

#[test]
fn closed_form_flag_emits_family_series() {
    let (code, stdout, _) =
        run(&["hilbert", "--crown", "3", "--s", "2", "--closed-form", "--json"]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["coeffs"], serde_json::json!([1, 2, 3, 4, 5, 6, 4, -4, -3]));
    assert_eq!(value["den_pow"], 4);
    // No closed form for ordinary multipartite powers.
    let (code, _, stderr) =
        run(&["hilbert", "--multipartite", "2,1,1", "--s", "2", "--closed-form"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--symbolic or --bracket"), "stderr: {stderr}");
}

#[test]
fn reduced_series_reports_dimension_and_multiplicity() {
    let (code, stdout, _) = run(&[
        "hilbert",
        "--multipartite",
        "1,1,1",
        "--symbolic",
        "--s",
        "2",
        "--reduced",
        "--json",
    ]);
    assert_eq!(code, 0);
    let value: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(value["coeffs"], serde_json::json!([1, 2, 3, 3]));
    assert_eq!(value["den_pow"], 1);
    assert_eq!(value["mult"], 9);
}
