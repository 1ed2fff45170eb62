use std::io::Write;
use std::process::{Command, Output};

fn corners(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_corners")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    format!("{}/../core/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn poly_of_small_tree_like_tableaux() {
    let o = corners(&["poly", "--family", "tlt", "--size", "3", "--stat", "weight"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{\"terms\":[[1,2,0],[2,1,1],[1,0,2],[1,1,0],[1,0,1]]}\n");
}

#[test]
fn poly_over_symmetric_sizes_skips_even_ones() {
    let o = corners(&["poly", "--family", "tlt-sym", "--sizes", "6..7", "--stat", "noc", "--format", "ascii"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "7: 12x^2 + 28x + 12\n");
}

#[test]
fn verify_reports_each_size() {
    let o = corners(&["verify", "--identity", "conj1", "--sizes", "3..6"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 4);
    assert!(lines.iter().all(|l| l["equal"] == true));
    assert_eq!(lines[0]["n"], 3);
    assert_eq!(lines[0]["lhs"], serde_json::json!({"terms": [[1, 1, 1]]}));
}

#[test]
fn verify_csv_summary() {
    let o = corners(&["verify", "--identity", "lem-X", "--size", "3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().collect();
    assert_eq!(rows[0], "id,n,i,equal,millis");
    assert!(rows[1].starts_with("lem-X,3,2,true,"));
    assert!(rows[2].starts_with("lem-X,3,3,true,"));
}

#[test]
fn map_reproduces_the_type_b_pair() {
    let o = corners(&["map", "--bijection", "phib", "--input", &golden("fig6_type_b.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("fig7_type_b_partition.json")).unwrap());
    let o = corners(&["map", "--bijection", "psib", "--input", &golden("fig7_type_b_partition.json")]);
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("fig6_type_b.json")).unwrap());
}

#[test]
fn map_alpha_and_beta_of_the_tree_like_example() {
    let o = corners(&["map", "--bijection", "alpha", "--input", &golden("fig2_tree_like.json")]);
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("fig3_alternative.json")).unwrap());
    let o = corners(&["map", "--bijection", "beta", "--input", &golden("fig2_tree_like.json")]);
    assert_eq!(stdout(&o), std::fs::read_to_string(golden("fig5_star.json")).unwrap());
}

#[test]
fn roundtrip_over_families() {
    for (b, sizes) in [("alpha", "1..5"), ("psi", "1..5"), ("gamma", "1..6"), ("phib", "1..4"), ("beta-inv", "1..5")] {
        let o = corners(&["roundtrip", "--bijection", b, "--sizes", sizes]);
        assert_eq!(o.status.code(), Some(0), "{b}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = corners(&["roundtrip", "--bijection", "phi", "--family", "at-star", "--size", "4"]);
    assert_eq!(stdout(&o), "{\"family\":\"at-star\",\"size\":4,\"objects\":24,\"distinct\":true}\n");
}

#[test]
fn enumerate_emits_one_object_per_line() {
    let o = corners(&["enumerate", "--family", "lp-b", "--size", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 8);
    let o = corners(&["enumerate", "--family", "tlt", "--size", "4", "--limit", "2", "--oracle"]);
    assert_eq!(stdout(&o).lines().count(), 2);
    let transport = corners(&["enumerate", "--family", "at-star", "--size", "4"]);
    let oracle = corners(&["enumerate", "--family", "at-star", "--size", "4", "--oracle"]);
    assert_eq!(stdout(&transport), stdout(&oracle));
}

#[test]
fn render_shows_arrows_and_empty_columns() {
    let o = corners(&["render", "--input", &golden("fig3_alternative.json")]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7);
    assert_eq!(out.lines().last().unwrap().trim(), "|  |");
    let o = corners(&["render", "--input", &golden("fig7_type_b_partition.json")]);
    assert!(stdout(&o).starts_with("-7 -4 -2 -1 3 5 6 8 9 10\narcs: "));
}

#[test]
fn output_is_repeatable() {
    let args = ["enumerate", "--family", "tlt-sym", "--size", "7"];
    assert_eq!(stdout(&corners(&args)), stdout(&corners(&args)));
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    assert_eq!(corners(&["poly", "--family", "nope", "--size", "3"]).status.code(), Some(2));
    assert_eq!(corners(&["poly", "--family", "at-sym", "--size", "3"]).status.code(), Some(2));
    assert_eq!(corners(&["poly", "--family", "lp", "--size", "3", "--stat", "noc"]).status.code(), Some(2));
    assert_eq!(corners(&["verify", "--identity", "nope"]).status.code(), Some(2));
    assert_eq!(corners(&["enumerate", "--family", "tlt", "--size", "9", "--oracle"]).status.code(), Some(2));
    let wrong = corners(&["map", "--bijection", "phi", "--input", &golden("fig6_type_b.json")]);
    assert_eq!(wrong.status.code(), Some(2));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, r#"{{"border":"SSWW","points":[[1,3]]}}"#).unwrap();
    let o = corners(&["render", "--input", bad.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
}
