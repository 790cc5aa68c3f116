use std::fs;
use std::path::Path;

use monocount::run;

fn ok(args: &[&str]) -> String {
    let mut full = vec!["monocount"];
    full.extend_from_slice(args);
    let (out, err, code) = run(full);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn fails(args: &[&str]) -> (String, i32) {
    let mut full = vec!["monocount"];
    full.extend_from_slice(args);
    let (_, err, code) = run(full);
    (err, code)
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn queens_examples() {
    let v = json(&ok(&["queens", "--n", "8", "--k", "8", "--format", "json"]));
    assert_eq!(v["rows"][0]["mu"], 11);
    assert_eq!(v["rows"][0]["phi"][11].to_string(), "48");
    assert_eq!(v["complete"], true);

    let v = json(&ok(&["queens", "--n", "1", "--k", "0", "--format", "json"]));
    assert_eq!(v["rows"][0]["phi"].to_string(), "[0,1]");

    let csv = ok(&["queens", "--n", "3", "--k", "1", "--format", "csv"]);
    assert_eq!(csv, "k,u,phi\n1,0,0\n1,1,1\n1,2,0\n1,3,8\n");
}

#[test]
fn queens_errors() {
    let (err, code) = fails(&[
        "queens",
        "--n",
        "6",
        "--kmin",
        "2",
        "--kmax",
        "6",
        "--node-budget",
        "10",
    ]);
    assert_eq!(code, 2, "{err}");
    assert!(err.starts_with("error[budget]:"), "{err}");

    let (err, code) = fails(&["queens", "--n", "0", "--k", "1"]);
    assert_eq!(code, 1, "{err}");
    let (err, code) = fails(&["queens", "--bogus"]);
    assert_eq!(code, 1);
    assert!(
        err.starts_with("error[input]:") && err.trim_end().lines().count() == 1,
        "{err}"
    );
}

#[test]
fn custom_piece_and_graph() {
    let dir = tempfile::tempdir().unwrap();
    let rook = write(
        dir.path(),
        "rook.json",
        r#"{"moves": [[1,0],[-1,0],[0,1],[0,-1]], "sliding": true}"#,
    );
    let a = ok(&[
        "queens",
        "--n",
        "4",
        "--kmin",
        "0",
        "--kmax",
        "4",
        "--piece-file",
        &rook,
        "--format",
        "csv",
    ]);
    let b = ok(&[
        "queens", "--n", "4", "--kmin", "0", "--kmax", "4", "--piece", "rook", "--format", "csv",
    ]);
    assert_eq!(a, b);

    // A path on three vertices.
    let graph = write(dir.path(), "path.txt", "vertices 3\n0 1\n1 2\n");
    let csv = ok(&["queens", "--graph", &graph, "--k", "1", "--format", "csv"]);
    assert_eq!(csv, "k,u,phi\n1,0,0\n1,1,1\n1,2,2\n");
}

#[test]
fn output_is_thread_independent() {
    let args = |t: &'static str| {
        [
            "queens",
            "--n",
            "6",
            "--kmin",
            "0",
            "--kmax",
            "6",
            "--format",
            "json",
            "--threads",
            t,
        ]
    };
    let one = ok(&args("1"));
    assert_eq!(one, ok(&args("4")));
    assert_eq!(one, ok(&args("3")));
}

#[test]
fn walks_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let knight = write(
        dir.path(),
        "knight.json",
        r#"{"dimension": 2, "steps": [[1,2],[2,1],[-1,2],[-2,1],[1,-2],[2,-1],[-1,-2],[-2,-1]]}"#,
    );
    let v = json(&ok(&["walks", "--steps", &knight, "--format", "json"]));
    assert_eq!(v["f"]["closed_form"]["display"], "7d^2 + 4d + 1");
    assert_eq!(v["f"]["closed_form"]["stable_from"], 3);
    assert_eq!(v["g"]["closed_form"]["display"], "28d - 20");

    let line = write(dir.path(), "line.json", r#"{"dimension": 2, "steps": [[1,0],[-1,0]]}"#);
    let v = json(&ok(&["walks", "--steps", &line, "--format", "json"]));
    assert_eq!(v["g"]["closed_form"]["display"], "2");
    assert_eq!(v["g"]["closed_form"]["stable_from"], 1);

    let zero = write(dir.path(), "zero.json", r#"{"dimension": 2, "steps": [[0,0],[1,0]]}"#);
    let (err, code) = fails(&["walks", "--steps", &zero]);
    assert_eq!(code, 1, "{err}");
    let dup = write(dir.path(), "dup.json", r#"{"dimension": 2, "steps": [[1,0],[1,0]]}"#);
    assert_eq!(fails(&["walks", "--steps", &dup]).1, 1);
}

#[test]
fn pretty_walks_use_braces() {
    let out = ok(&["walks", "--preset", "knight"]);
    assert!(out.contains("28d - 20"), "{out}");
    assert!(out.contains("if d >= 5"), "{out}");
    assert!(out.contains('⎧') && out.contains('⎩'), "{out}");
}

#[test]
fn exported_initial_ideal_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let export = dir.path().join("export");
    ok(&["walks", "--preset", "knight", "--export-dir", export.to_str().unwrap()]);
    for name in ["presentation.gb", "kernel.gb", "homogeneous.gb", "kernel_initial.ideal"] {
        assert!(export.join(name).exists(), "{name}");
    }
    let ideal = export.join("kernel_initial.ideal");
    let v = json(&ok(&[
        "hilbert",
        "--ideal",
        ideal.to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(v["closed_form"]["display"], "28d - 20");

    let ideal = export.join("homogeneous_initial.ideal");
    let v = json(&ok(&[
        "hilbert",
        "--ideal",
        ideal.to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(v["closed_form"]["display"], "7d^2 + 4d + 1");
}

#[test]
fn hilbert_examples() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "empty.ideal", "# nothing\n");
    let out = ok(&["hilbert", "--ideal", &empty, "--vars", "8"]);
    assert!(out.contains("1 / (1-t)^8"), "{out}");

    let x1 = write(dir.path(), "x1.ideal", "x1\n");
    let out = ok(&["hilbert", "--ideal", &x1, "--vars", "2"]);
    assert!(out.contains("1 / (1-t)\n") || out.contains("1 / (1-t) "), "{out}");

    let named = write(dir.path(), "named.ideal", "vars a b\na^2*b\n");
    let v = json(&ok(&["hilbert", "--ideal", &named, "--format", "json"]));
    assert_eq!(v["closed_form"]["display"], "3");

    let bad = write(dir.path(), "bad.ideal", "vars a b\na\nc\n");
    let (err, code) = fails(&["hilbert", "--ideal", &bad]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn oracle_examples() {
    let csv = ok(&[
        "oracle", "walks", "--preset", "knight", "--dmax", "4", "--format", "csv",
    ]);
    let g: Vec<&str> = csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(g, ["1", "8", "32", "68", "96"]);

    let csv = ok(&[
        "oracle", "walks", "--preset", "knight", "--dmax", "0", "--format", "csv",
    ]);
    assert_eq!(csv, "d,f,g\n0,1,1\n");

    let csv = ok(&["oracle", "queens", "--n", "3", "--k", "1", "--format", "csv"]);
    assert_eq!(csv, "k,s,count\n1,1,1\n1,3,8\n");

    let (err, code) = fails(&["oracle", "queens", "--n", "6", "--k", "4", "--node-budget", "5"]);
    assert_eq!(code, 2, "{err}");
}
