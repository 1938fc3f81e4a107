use ebr_core::cli::run_with;
use ebr_core::ebr_to_flagmap;
use ebr_core::families::torus_rect;
use serde_json::Value;

const TORUS_FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/torus_no_colouring.json");

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("ebrmap").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn analyze_torus_rect() {
    let v = run_json(&["analyze", "--family", "torus-rect", "--params", "a=4,c=3"]);
    assert_eq!(v["order"], 48);
    assert_eq!(v["chi"], 0);
    assert_eq!(v["V"], 12);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["degeneracy_class"], "proper");
}

#[test]
fn analyze_dihedral_row() {
    let v = run_json(&["analyze", "--family", "dihedral", "--params", "m=4,row=3"]);
    assert_eq!(v["chi"], -1);
    assert_eq!(v["fully_regular"], false);
    assert_eq!(v["orientable"], false);
}

#[test]
fn analyze_presentation() {
    // the {4,4} torus grid with a 2 x 2 block of corners
    let pres = "<r0, r2, p0, p2 | r0^2, r2^2, p0^2, p2^2, (r0 r2)^2, (p0 p2)^2, (r0 p0)^2, (r2 p2)^2, (r0 p2)^2, (r2 p0)^2>";
    let v = run_json(&["analyze", "--presentation", pres, "--slots", "r0,r2,p0,p2"]);
    let direct = torus_rect(2, 2).unwrap().invariants().unwrap();
    assert_eq!(v["order"], direct.order);
    assert_eq!(v["chi"], direct.chi);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.txt");
    std::fs::write(&path, pres).unwrap();
    let from_file = run_json(&["analyze", "--presentation", path.to_str().unwrap(), "--slots", "r0,r2,p0,p2"]);
    assert_eq!(from_file, v);

    let cube = "<a, b, c | a^2, b^2, c^2, (a c)^2, (b c)^3, (a b)^4>";
    let boundary = run_json(&["analyze", "--presentation", cube, "--slots", "a,c,b,-"]);
    assert_eq!(boundary["boundary_type"], "boundary-a");
    assert_eq!(boundary["order"], 48);
}

#[test]
fn construct_cube() {
    let v = run_json(&["construct", "--catalog", "cube", "--construction", "1"]);
    assert_eq!(v["order"], 48);
    assert_eq!(v["type"], serde_json::json!([3, 8]));
    let v = run_json(&["construct", "--catalog", "cube", "--construction", "3"]);
    assert_eq!((&v["k"], &v["l"]), (&serde_json::json!(6), &serde_json::json!(8)));
    assert_eq!(v["chi"], 2);
}

#[test]
fn enumerate_dih8() {
    let v = run_json(&["enumerate", "--group", "Dih(8)", "--proper", "--distinct", "--chi-max", "-1"]);
    let classes = v.as_array().unwrap();
    assert_eq!(classes.len(), 2);
    let mut rows: Vec<i64> = classes.iter().map(|c| c["table_row"].as_i64().unwrap()).collect();
    rows.sort();
    assert_eq!(rows, [1, 3]);
}

#[test]
fn colourable() {
    let v = run_json(&["colourable", "--flagmap", TORUS_FIXTURE]);
    assert_eq!(v, serde_json::json!({ "colourable": false }));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.json");
    let flags = ebr_to_flagmap(&torus_rect(2, 3).unwrap()).unwrap();
    std::fs::write(&path, serde_json::to_string(&flags).unwrap()).unwrap();
    let v = run_json(&["colourable", "--flagmap", path.to_str().unwrap()]);
    assert_eq!(v["colourable"], true);
    let witness = v["witness"].as_array().unwrap();
    assert_eq!(witness.len(), flags.edge_count());
    assert_eq!(witness[0], "shaded");
}

#[test]
fn export_dot() {
    let dir = tempfile::tempdir().unwrap();
    let corners = dir.path().join("corners.dot");
    let v = run_json(&[
        "export", "--dot", "corners", "--out", corners.to_str().unwrap(), "--family", "torus-rect", "--params", "a=2,c=2",
    ]);
    assert_eq!(v["written"], corners.to_str().unwrap());
    let text = std::fs::read_to_string(&corners).unwrap();
    assert!(text.starts_with("graph corners"));
    for colour in ["red", "green", "blue", "yellow"] {
        assert!(text.contains(&format!("color={colour}")), "{colour}");
    }

    let underlying = dir.path().join("underlying.dot");
    run_json(&[
        "export", "--dot", "underlying", "--out", underlying.to_str().unwrap(), "--family", "cycle", "--params", "m=3",
    ]);
    assert!(std::fs::read_to_string(&underlying).unwrap().contains("style=dashed"));

    let (code, _, err) = run(&[
        "export", "--dot", "underlying", "--out", underlying.to_str().unwrap(), "--catalog", "cube", "--construction", "1",
    ]);
    assert_eq!(code, 1, "{err}");
}

#[test]
fn output_is_byte_stable() {
    let args = ["enumerate", "--group", "Dih(12)", "--proper", "--distinct", "--chi-max", "-1"];
    let first = run(&args);
    assert_eq!(first.0, 0);
    assert_eq!(run(&args), first);
    let threaded = run(&[&args[..], &["--threads", "3"]].concat());
    assert_eq!(threaded, first);
}

#[test]
fn input_errors_exit_1() {
    for args in [
        &["analyze", "--family", "torus-rect", "--params", "a=0,c=3"][..],
        &["analyze", "--family", "moebius", "--params", "a=1"],
        &["analyze", "--presentation", "<a, b | a^2, b^2, (a b)^3>", "--slots", "a,b,a b,-"],
        &["analyze", "--presentation", "<a | a^2", "--slots", "a,a,a,a"],
        &["construct", "--catalog", "cube", "--construction", "4"],
        &["construct", "--catalog", "cube", "--construction", "5"],
        &["enumerate", "--group", "Dih(7)"],
        &["colourable", "--flagmap", "/nonexistent/flags.json"],
        &["analyze"],
        &["frobnicate"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 1, "{args:?}: {out}");
        assert!(!err.is_empty(), "{args:?}");
    }
}

#[test]
fn resource_bounds_exit_2() {
    let (code, _, err) = run(&[
        "analyze", "--presentation", "<a, b | a^2, b^2>", "--slots", "a,b,a,b", "--max-cosets", "100",
    ]);
    assert_eq!(code, 2, "{err}");
    let (code, _, _) = run(&["enumerate", "--group", "Dih(8)", "--budget", "5"]);
    assert_eq!(code, 2);
}

#[test]
fn help_exits_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("enumerate"));
}
