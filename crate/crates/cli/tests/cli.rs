use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::TempDir;

use uberhom::graph::{encode_graph6, SimpleGraph};

fn uberhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_uberhom"))
        .args(args)
        .env_remove("UBERHOM_CAP")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path_str(&path)
}

fn path_str(p: &Path) -> String {
    p.to_str().unwrap().to_string()
}

#[test]
fn horizontal_on_coloured_simplices() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.txt", "3\n0 1 2\n");
    let out = json_of(&uberhom(&["horizontal", &tri, "--colouring", "100"]));
    assert_eq!(out["results"][0]["ranks"], json!({ "(0,0)": 1 }));
    let tet = write(&dir, "tet.txt", "# tetrahedron\n4\n0 1 2 3\n");
    let out = json_of(&uberhom(&["horizontal", &tet, "--colouring", "1010"]));
    assert_eq!(out["results"][0]["ranks"], json!({ "(0,0)": 1 }));
    assert_eq!(out["metadata"]["vertex_order"], json!([0, 1, 2, 3]));
    assert_eq!(out["metadata"]["input_sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn all_colourings_enumerated() {
    let out = json_of(&uberhom(&[
        "horizontal",
        "boundary:3",
        "--colouring",
        "all",
    ]));
    assert_eq!(out["results"].as_array().unwrap().len(), 16);
    let out = json_of(&uberhom(&["morse", "loop:5", "--colouring", "level:2"]));
    assert_eq!(out["results"].as_array().unwrap().len(), 10);
}

#[test]
fn generators_are_cycles_of_the_right_bidegree() {
    let out = json_of(&uberhom(&[
        "horizontal",
        "simplex:2",
        "--colouring",
        "000",
        "--generators",
    ]));
    let gens = &out["results"][0]["generators"];
    assert_eq!(gens["(2,3)"], json!([[[0, 1, 2]]]));
    assert_eq!(gens["(0,1)"].as_array().unwrap().len(), 3);
}

#[test]
fn uber_of_an_edge() {
    let out = json_of(&uberhom(&["uber", "simplex:1"]));
    assert_eq!(
        out["results"]["degrees"],
        json!({ "0": { "(0,1)": 2, "(1,2)": 1 }, "1": { "(0,0)": 1 } })
    );
    assert_eq!(out["results"]["ranks"]["(1,0,0)"], json!(1));
    let out = json_of(&uberhom(&["uber0", "simplex:1"]));
    assert_eq!(out["results"]["ranks"], json!({ "(0,1)": 2, "(1,2)": 1 }));
}

#[test]
fn dissimilarity_of_the_cubic_pair() {
    let dir = TempDir::new().unwrap();
    let prism = encode_graph6(&SimpleGraph::prism());
    let k33 = encode_graph6(&SimpleGraph::complete_bipartite(3, 3).unwrap());
    let corpus = write(&dir, "pair.g6", &format!("prism {prism}\nk33 {k33}\n"));
    let out = json_of(&uberhom(&["dissim", &corpus]));
    let row = &out["results"][0];
    assert_eq!(row["delta"], json!({ "numerator": 2, "denominator": 3 }));
    assert_eq!(row["first_level"], json!(2));
    let csv = uberhom(&["dissim", &corpus, "--format", "csv"]);
    assert_eq!(
        String::from_utf8(csv.stdout).unwrap(),
        "first,second,numerator,denominator,first_level\nprism,k33,2,3,2\n"
    );
    let capped = uberhom(&["dissim", &corpus, "--level", "1", "--format", "csv"]);
    assert!(String::from_utf8(capped.stdout)
        .unwrap()
        .ends_with("prism,k33,0,1,\n"));
}

#[test]
fn theta_of_k4_is_symmetric() {
    let out = json_of(&uberhom(&["theta", "complete:4", "--level", "1"]));
    let groups = out["results"][0]["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 4);
    assert!(groups.iter().all(|g| g == &groups[0]));
}

#[test]
fn graph_homologies() {
    let out = json_of(&uberhom(&["graph-hom", "h0", "complete:4"]));
    assert_eq!(out["results"]["ranks"], json!({ "1": 1 }));
    let out = json_of(&uberhom(&["graph-hom", "h1_0", "complete:3"]));
    assert_eq!(out["results"]["ranks"], json!({ "0": 3 }));
    let out = json_of(&uberhom(&["matching-complex", "complete:4"]));
    assert_eq!(out["results"]["reduced_betti"], json!({ "0": 2 }));
}

#[test]
fn tait_and_decomposition() {
    let dir = TempDir::new().unwrap();
    let tri = write(&dir, "tri.rot", "v 0: 1 2\nv 1: 2 0\nv 2: 0 1\n");
    let out = json_of(&uberhom(&["tait", &tri]));
    assert_eq!(out["results"]["edges"].as_array().unwrap().len(), 12);
    let out = json_of(&uberhom(&["verify-thm42", &tri]));
    assert_eq!(out["results"]["holds"], json!(true));
}

#[test]
fn table_and_csv_formats() {
    let out = uberhom(&["uber", "simplex:1", "--format", "table"]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "degree  bidegree  rank\n0       (0,1)     2\n0       (1,2)     1\n1       (0,0)     1\n"
    );
    let out = uberhom(&[
        "euler",
        "simplex:2",
        "--colouring",
        "111",
        "--format",
        "csv",
    ]);
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "colouring,polynomial\n111,1\n"
    );
}

#[test]
fn output_is_identical_across_thread_counts() {
    let args = ["uber", "boundary:3"];
    let one = uberhom(&[&args[..], &["--jobs", "1"]].concat());
    let four = uberhom(&[&args[..], &["--jobs", "4"]].concat());
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let again = uberhom(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(four.stdout, again.stdout);
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.txt", "3\n0 1 q\n");
    assert_eq!(uberhom(&["uber", &bad]).status.code(), Some(2));
    let bad_g6 = write(&dir, "bad.g6", "a ~~~\n");
    assert_eq!(uberhom(&["dissim", &bad_g6]).status.code(), Some(2));
    assert_eq!(
        uberhom(&["horizontal", "simplex:2", "--colouring", "10"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(
        uberhom(&["horizontal", "simplex:2", "--colouring", "elementary:5"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(uberhom(&["uber", "loop:25"]).status.code(), Some(4));
    assert_eq!(
        uberhom(&["uber", "simplex:3", "--cap", "3"]).status.code(),
        Some(4)
    );
    let env_capped = Command::new(env!("CARGO_BIN_EXE_uberhom"))
        .args(["uber", "simplex:3"])
        .env("UBERHOM_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(env_capped.status.code(), Some(4));
    assert_eq!(uberhom(&["uber", "no_such_thing"]).status.code(), Some(1));
}
