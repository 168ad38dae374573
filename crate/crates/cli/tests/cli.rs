use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use spline_split::fixtures;
use spline_split::mesh::SimplicialComplex;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_spline-split"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

const OUTER_AND_INNER: &str = r#"[["1","0"],["0","1"],["-1","-1"],["3","0"],["0","3"],["-3","-3"]]"#;

fn interior_triangle_files(dir: &Path, w: (&str, &str)) -> (PathBuf, PathBuf) {
    let coarse = write(
        dir,
        "coarse.json",
        &format!(
            r#"{{"ambient_dim":2,"vertices":{OUTER_AND_INNER},"cells":[[0,1,2],[0,1,3],[0,2,3],[3,4,1],[1,4,5],[1,5,2],[2,5,3]]}}"#
        ),
    );
    let piece = write(
        dir,
        "piece.json",
        &format!(
            r#"{{"ambient_dim":2,"vertices":[["1","0"],["0","1"],["-1","-1"],["{}","{}"]],"cells":[[0,1,3],[1,2,3],[0,2,3]]}}"#,
            w.0, w.1
        ),
    );
    (coarse, piece)
}

fn parse_mesh(path: &Path) -> SimplicialComplex {
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    let k = v["ambient_dim"].as_u64().unwrap() as usize;
    let verts = v["vertices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            spline_split::mesh::Point::new(p.as_array().unwrap().iter().map(|x| x.as_str().unwrap().parse().unwrap()).collect())
        })
        .collect();
    let cells = v["cells"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_array().unwrap().iter().map(|i| i.as_u64().unwrap() as usize).collect())
        .collect();
    SimplicialComplex::new(k, verts, cells).unwrap()
}

#[test]
fn validate_two_triangles() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "m.json", r#"{"ambient_dim":2,"vertices":[["0","0"],["1","0"],["0","1"],["1","1"]],"cells":[[0,1,2],[1,2,3]]}"#);
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn validate_overlap() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "m.json", r#"{"ambient_dim":2,"vertices":[["0","0"],["2","0"],["0","2"],["1","1"]],"cells":[[0,1,2],[0,1,3]]}"#);
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_ne!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("improper intersection"));
}

#[test]
fn validate_zero_denominator() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "m.json", r#"{"ambient_dim":2,"vertices":[["0","0"],["1/0","0"],["0","1"]],"cells":[[0,1,2]]}"#);
    let o = run(&["validate", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero denominator"));
}

#[test]
fn dim_rows() {
    let dir = tempfile::tempdir().unwrap();
    let a2 = dir.path().join("a2.json");
    let o = run(&["subdivide", "T2", "--scheme", "alfeld", "-o", a2.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["dim", a2.to_str().unwrap(), "--r", "1", "--d", "3", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().nth(1), Some("2,1,3,12,12,12"));

    let o = run(&["dim", "F2", "--r", "1", "--d", "2", "--method", "all"]);
    assert_eq!(stdout(&o), "k,r,d,oracle,euler,formula\n2,1,2,9,9,9\n");

    let o = run(&["dim", "T2", "--r", "5", "--d", "2", "--method", "all"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("2,5,2,6,6,6"));
}

#[test]
fn dim_disagreement_exits_one() {
    // the Alfeld split compared against the facet-split closed form
    let o = run(&["dim", "A2", "--r", "1", "--d-range", "0..4", "--scheme", "facet"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn dim_formula_needs_scheme() {
    let dir = tempfile::tempdir().unwrap();
    let (coarse, _) = interior_triangle_files(dir.path(), ("0", "0"));
    let o = run(&["dim", coarse.to_str().unwrap(), "--r", "1", "--d", "2", "--method", "formula"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn subdivide_counts_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: [(&str, &str, Option<&str>, usize, SimplicialComplex); 3] = [
        ("T3", "alfeld", None, 4, fixtures::alfeld_split(3)),
        ("T2", "facet", None, 6, fixtures::facet_split_mesh(2)),
        ("T3", "double-alfeld", Some("0"), 7, fixtures::double_alfeld_steps(3, Some(vec![0])).unwrap().pop().unwrap().fine),
    ];
    for (i, (mesh, scheme, subset, cells, expected)) in cases.into_iter().enumerate() {
        let out = dir.path().join(format!("out{i}.json"));
        let mut args = vec!["subdivide", mesh, "--scheme", scheme, "-o", out.to_str().unwrap()];
        if let Some(s) = subset {
            args.extend(["--subset", s]);
        }
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        let back = parse_mesh(&out);
        assert_eq!(back.num_cells(), cells);
        assert_eq!(back, expected.canonical());
        let record: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(dir.path().join(format!("out{i}.json.record.json"))).unwrap()).unwrap();
        assert!(!record["steps"].as_array().unwrap().is_empty());
    }
}

#[test]
fn subdivide_is_deterministic() {
    let a = run(&["subdivide", "T3", "--scheme", "facet"]);
    let b = run(&["subdivide", "T3", "--scheme", "facet"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_split_interior_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let (coarse, piece) = interior_triangle_files(dir.path(), ("0", "0"));
    let o = run(&["check-split", coarse.to_str().unwrap(), "--cell", "0", piece.to_str().unwrap(), "--r", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let (coarse, piece) = interior_triangle_files(dir.path(), ("1/5", "1/10"));
    let o = run(&["check-split", coarse.to_str().unwrap(), "--cell", "0", piece.to_str().unwrap(), "--r", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness"));
    let o = run(&["check-split", coarse.to_str().unwrap(), "--cell", "0", piece.to_str().unwrap(), "--r", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn homology_lower_groups_vanish() {
    let o = run(&["homology", "A2", "--r", "1", "--d-range", "0..5"]);
    assert_eq!(o.status.code(), Some(0));
    for line in stdout(&o).lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert_eq!(&f[3..5], ["0", "0"]);
    }
}

#[test]
fn basis_size() {
    let o = run(&["basis", "A2", "--r", "1", "--d", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 12);
    assert_eq!(v["basis"].as_array().unwrap().len(), 12);
}

#[test]
fn verify_filtered_passes() {
    let o = run(&["verify", "--k", "2", "--criteria", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("OVERALL PASS"));
}

#[test]
fn verify_catches_injected_error() {
    let o = run(&["verify", "--k", "2", "--criteria", "3", "--inject-formula-error", "facet", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["results"][0]["id"], 3);
    assert_eq!(v["results"][0]["passed"], false);
}
