use std::path::Path;
use std::process::{Command, Output};

use concentric_cycles::geometry::perimeter;
use concentric_cycles::{Radii, ReducedConfiguration};
use concentric_cycles_cli::{read_sweep_csv, CatalogueJson, RunRecord, SweepJson};

fn concyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_concyc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn catalogue(args: &[&str]) -> CatalogueJson {
    let o = concyc(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn critical_three_circles() {
    let cat = catalogue(&["critical", "--radii", "1,2,3"]);
    assert_eq!(cat.points.len(), 6);
    assert_eq!(cat.euler_sum, 0);
    assert!(cat.warnings.is_empty());
    let mirrored = cat.points.iter().filter(|p| p.mirror_of.is_some()).count();
    assert_eq!(mirrored, 2);
}

#[test]
fn critical_equal_radii_warns() {
    let cat = catalogue(&["critical", "--radii", "1,1,1"]);
    assert!(cat.warnings.iter().any(|w| w == "non-generic radii"));
}

#[test]
fn critical_reference_radii_shapes() {
    let cat = catalogue(&["critical", "--radii", "3,2.53,3,4.6"]);
    let shapes: Vec<String> = cat.points.iter().map(|p| p.shape.to_string()).collect();
    assert!(shapes.iter().any(|s| s == "convex"));
    assert!(shapes.iter().any(|s| s == "partially-aligned"));
}

#[test]
fn repeated_radius_flags() {
    let a = concyc(&["critical", "--radius", "1", "--radius", "2", "--radius", "3"]);
    let b = concyc(&["critical", "--radii", "1,2,3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn invalid_input_exits_with_two() {
    for args in [
        &["critical", "--radii", "1,-2,3"][..],
        &["critical", "--radii", "1,0,3"],
        &["critical", "--radii", "1,2"],
        &["critical", "--radii", "1,x,3"],
        &["sweep", "--radii", "1,2,3", "--vary", "2", "--from", "2", "--to", "2"],
        &["sweep", "--radii", "1,2,3", "--vary", "4", "--from", "1.5", "--to", "2.5"],
        &["sweep", "--radii", "1,2,3", "--vary", "2", "--from", "-1", "--to", "2.5"],
        &["check-config", "--radii", "1,2,3", "--angles", "1"],
        &["critical", "--radii", "1,2,3", "--tol", "0"],
    ] {
        let o = concyc(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn output_is_byte_identical() {
    let a = concyc(&["critical", "--radii", "1.3,2.9,0.7,4.1"]);
    let b = concyc(&["critical", "--radii", "1.3,2.9,0.7,4.1"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn stored_perimeters_reproduce_bit_for_bit() {
    let cat = catalogue(&["critical", "--radii", "1.3,2.9,0.7,4.1"]);
    let radii = Radii::new(cat.radii.clone()).unwrap();
    for p in &cat.points {
        let l = perimeter(&radii, &ReducedConfiguration::new(p.angles.clone())).unwrap();
        assert_eq!(l.to_bits(), p.perimeter.to_bits());
    }
}

#[test]
fn run_record_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.json");
    let o = concyc(&["critical", "--radii", "1,2,3", "--json", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let record: RunRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(record.inputs.command, "critical");
    assert_eq!(record.timing_seconds, None);
    let again = serde_json::to_string_pretty(&record).unwrap() + "\n";
    assert_eq!(again, text);
    let cat: CatalogueJson = serde_json::from_value(record.output).unwrap();
    assert_eq!(cat.points.len(), 6);
}

fn run_sweep(dir: &Path, steps: &str) -> (String, SweepJson) {
    let csv = dir.join(format!("s{steps}.csv"));
    let json = dir.join(format!("e{steps}.json"));
    let o = concyc(&[
        "sweep", "--radii", "3,2.53,3,4.6", "--vary", "2", "--from", "2.53", "--to", "1.0", "--steps", steps,
        "--csv", csv.to_str().unwrap(), "--json", json.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let events = serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    (std::fs::read_to_string(csv).unwrap(), events)
}

#[test]
fn reference_sweep_files() {
    let dir = tempfile::tempdir().unwrap();
    let (csv, events) = run_sweep(dir.path(), "200");
    let find = |kind: &str, target: f64, tol: f64| {
        events
            .events
            .iter()
            .any(|e| e.kind == kind && (e.param - target).abs() <= tol)
    };
    assert!(find("Tangency", 1.7, 0.05));
    assert!(find("Pitchfork", 1.13, 0.02));

    let samples = read_sweep_csv(csv.as_bytes()).unwrap();
    assert_eq!(samples.len(), events.branches.iter().map(|b| b.samples).sum::<usize>());
    // branch ids follow perimeter order at the start parameter
    let start: Vec<f64> = (0..18)
        .map(|id| samples.iter().find(|s| s.branch_id == id).unwrap().perimeter)
        .collect();
    assert!(start.windows(2).all(|w| w[0] <= w[1] + 1e-9));

    // writing the parsed samples reproduces the file
    let mut again = Vec::new();
    concentric_cycles_cli::write_sweep_csv(&mut again, 4, &samples).unwrap();
    assert_eq!(String::from_utf8(again).unwrap(), csv);
}

#[test]
fn sweep_events_stable_under_refinement() {
    let dir = tempfile::tempdir().unwrap();
    let (_, coarse) = run_sweep(dir.path(), "200");
    let (_, fine) = run_sweep(dir.path(), "400");
    assert_eq!(coarse.events.len(), fine.events.len());
    for (a, b) in coarse.events.iter().zip(&fine.events) {
        assert_eq!(a.kind, b.kind);
        assert!((a.param - b.param).abs() < 1e-4);
    }
}

#[test]
fn sweep_csv_to_stdout() {
    let o = concyc(&["sweep", "--radii", "1,2,3", "--vary", "2", "--from", "1.5", "--to", "2.5", "--steps", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let samples = read_sweep_csv(o.stdout.as_slice()).unwrap();
    assert_eq!(samples.len(), 6 * 11);
    assert!(String::from_utf8(o.stderr).unwrap().is_empty());
}

#[test]
fn verify_passes() {
    for args in [
        &["verify", "--radii", "1,2,3"][..],
        &["verify", "--radii", "1,2,3,4.6"],
        &["verify", "--pentagram"],
    ] {
        let o = concyc(args);
        let text = stdout(&o);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{text}");
        assert!(!text.contains("FAIL"));
        assert!(text.contains("all checks passed"));
    }
    let text = stdout(&concyc(&["verify", "--radii", "1,2,3,4.6"]));
    assert!(text.contains("PASS no self-intersecting critical points"));
    let text = stdout(&concyc(&["verify", "--pentagram"]));
    assert!(text.contains("PASS pentagram Hessian is negative definite"));
}

#[test]
fn verify_failure_exits_with_one() {
    // a coarse oracle grid misses critical points, which the verifier must report
    let o = concyc(&["verify", "--radii", "0.5,4.5,0.6,4.7", "--grid", "3"]);
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert!(stdout(&o).contains("FAIL brute-force oracle agrees"));
}

#[test]
fn check_config_equilateral_triangle() {
    let third = std::f64::consts::TAU / 3.0;
    let angles = format!("{},{}", third, 2.0 * third);
    let o = concyc(&["check-config", "--radii", "1,1,1", "--angles", &angles]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["stationary"], true);
    assert_eq!(v["shape"], "convex");
    for d in v["tangential_distances"].as_array().unwrap() {
        assert!((d.as_f64().unwrap() - 0.5).abs() < 1e-12);
    }
    assert!(v["vertex_events"]
        .as_array()
        .unwrap()
        .iter()
        .all(|e| e["kind"] == "reflection"));
}

#[test]
fn parades_and_closed_forms() {
    let o = concyc(&["parades", "--radii", "1,2,3,4.6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
    assert_eq!(v[0]["hessian"]["morse_index"], 0);

    let o = concyc(&["closed-form", "--radii", "1,1,1,1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["quadrilateral_inradius"].as_f64().unwrap() - 0.5f64.sqrt()).abs() < 1e-12);

    let o = concyc(&["closed-form", "--radii", "1,1,1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["triangle_inradius"].as_f64().unwrap() - 0.5).abs() < 1e-12);
}
