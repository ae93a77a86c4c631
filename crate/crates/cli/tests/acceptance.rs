//! Acceptance suite.
//!
//! One test per criterion; each prints a single `criterion N: PASS` line
//! when it succeeds (visible with `--nocapture`). Every comparison is
//! exact; there are no tolerances anywhere, only the stated time budgets.

use std::path::PathBuf;
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use lawcos_cli::batch::{next_triangle, SplitMix64};
use lawcos_core::comparisons::{
    build_anderson_parallelograms, build_boyadzhiev_parallelograms, build_euclid_triangles,
    parallelograms_congruent,
};
use lawcos_core::figure::{AngleClass, Figure, LabeledTriangle, SquareColor, VertexLabel};
use lawcos_core::polygon::Location;
use lawcos_core::verify::{run_all, RunOptions};
use lawcos_core::{convex_interiors_intersect, dot_at, squared_distance, Point, Scalar};

fn s(text: &str) -> Scalar {
    text.parse().unwrap()
}

fn pt(x: i64, y: i64) -> Point {
    Point::from_ints(x, y)
}

/// The four desk instances, in spec order.
fn desk_instances() -> [(&'static str, [Point; 3]); 4] {
    [
        ("T1", [pt(0, 1), pt(0, 0), pt(1, 0)]),
        ("T2", [pt(1, 3), pt(0, 0), pt(5, 0)]),
        ("T3", [pt(1, 0), Point::new(s("1/2"), s("2")), pt(0, 0)]),
        ("T4", [pt(2, 1), pt(0, 0), pt(1, 0)]),
    ]
}

fn desk_point_args() -> [&'static str; 4] {
    ["0,1 0,0 1,0", "1,3 0,0 5,0", "1,0 1/2,2 0,0", "2,1 0,0 1,0"]
}

fn lawcos(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lawcos"))
        .args(args)
        .env("LAWCOS_NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("lawcos-acceptance-{}-{name}", std::process::id()));
    path
}

fn passed(n: u32, what: &str) {
    println!("criterion {n}: PASS - {what}");
}

#[test]
fn criterion_1_desk_instances() {
    for (name, [a, b, c]) in desk_instances() {
        let start = Instant::now();
        let report = run_all(a, b, c, &RunOptions::default()).unwrap();
        let elapsed = start.elapsed();
        assert!(
            elapsed < Duration::from_millis(100),
            "{name} took {elapsed:?}, budget 100 ms"
        );
        assert!(report.all_pass, "{name}: {:?}", report.failed_check_names());
        for check in &report.checks {
            assert!(check.residual.is_zero(), "{name} {}: residual {}", check.name, check.residual);
        }
    }
    // Exit code 0 through the CLI for all four.
    for points in desk_point_args() {
        let out = lawcos(&["verify", "--points", points]);
        assert_eq!(out.status.code(), Some(0), "{points}");
    }

    // T2: chain total 40 = 2 dot = 4 x blue area 10.
    let [a, b, c] = desk_instances()[1].1.clone();
    let t2 = run_all(a, b, c, &RunOptions::default()).unwrap();
    assert_eq!(t2.chain.sides, s("40"));
    assert_eq!(t2.chain.blue_quadruple, s("40"));
    assert_eq!(t2.chain.twice_dot_cab, s("40"));
    assert_eq!(t2.figure.pair(VertexLabel::C).copy1.signed_area(), s("10"));

    // T3: total 1 with the green square's far pieces negative (acute case
    // with the altitude through B longer than CA).
    let [a, b, c] = desk_instances()[2].1.clone();
    let t3 = run_all(a, b, c, &RunOptions::default()).unwrap();
    assert_eq!(t3.chain.sides, s("1"));
    assert!(t3.figure.green.far_start.signed_area().is_negative());
    assert!(t3.figure.green.far_end.signed_area().is_negative());
    assert_eq!(t3.case.angles.a, AngleClass::Acute);
    assert_eq!(t3.case.angles.b, AngleClass::Acute);
    assert_eq!(t3.case.angles.c, AngleClass::Acute);
    assert!(t3.case.altitude_exceeds_side.green);

    // T4: obtuse case, total counted as negative.
    let [a, b, c] = desk_instances()[3].1.clone();
    let t4 = run_all(a, b, c, &RunOptions::default()).unwrap();
    assert_eq!(t4.chain.sides, s("-2"));
    assert_eq!(t4.chain.blue_quadruple, s("-2"));

    // T1: Pythagorean degeneration at the right angle B: the green pair
    // and every piece adjacent to B vanish.
    let [a, b, c] = desk_instances()[0].1.clone();
    let t1 = run_all(a, b, c, &RunOptions::default()).unwrap();
    let pair = t1.figure.pair(VertexLabel::B);
    assert!(pair.copy1.signed_area().is_zero());
    assert!(pair.copy2.signed_area().is_zero());
    for color in [SquareColor::Red, SquareColor::Blue] {
        let d = t1.figure.dissection(color);
        let end = d.end_for(VertexLabel::B).unwrap();
        assert!(d.near(end).signed_area().is_zero());
        assert!(d.far(end).signed_area().is_zero());
    }

    passed(1, "T1-T4 verify with zero residuals in < 100 ms each");
}

#[test]
fn criterion_2_randomized_suite() {
    let report = temp_path("batch-1000.json");
    let start = Instant::now();
    let out = lawcos(&[
        "batch",
        "--count",
        "1000",
        "--seed",
        "42",
        "--bound",
        "100",
        "--report",
        report.to_str().unwrap(),
    ]);
    let elapsed = start.elapsed();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}, budget 10 s");
    let json = std::fs::read_to_string(&report).unwrap();
    std::fs::remove_file(&report).ok();
    assert!(json.contains("\"failures\":[]"), "{json}");

    // The per-instance suite covers every advertised family and count.
    let mut rng = SplitMix64::new(42);
    let [a, b, c] = next_triangle(&mut rng, 100);
    let instance = run_all(a, b, c, &RunOptions::default()).unwrap();
    let count_prefix = |prefix: &str| {
        instance
            .checks
            .iter()
            .filter(|check| check.name.starts_with(prefix))
            .count()
    };
    assert_eq!(count_prefix("chain.L"), 5);
    assert_eq!(count_prefix("decomp.square."), 3);
    assert_eq!(count_prefix("decomp.group."), 6);
    assert_eq!(count_prefix("decomp.rect."), 6);
    assert_eq!(count_prefix("pair."), 3);
    assert_eq!(count_prefix("euclid."), 18);
    assert_eq!(count_prefix("parallelogram."), 6);
    assert_eq!(count_prefix("disjoint."), 3);

    passed(2, "batch --count 1000 --seed 42 --bound 100: zero failures in < 10 s");
}

/// The same triangle stream the batch command generates.
fn random_suite() -> impl Iterator<Item = [Point; 3]> {
    let mut rng = SplitMix64::new(42);
    std::iter::repeat_with(move || next_triangle(&mut rng, 100)).take(1000)
}

#[test]
fn criterion_3_euclid_contrast() {
    for [a, b, c] in random_suite() {
        let triangle = LabeledTriangle::new(a, b, c).unwrap();
        let eight_t = &Scalar::from_int(8) * &triangle.unsigned_area();
        let figure = Figure::build(triangle);
        for e in build_euclid_triangles(&figure) {
            let d = figure.dissection(e.color);
            let end = d.end_for(e.anchor).unwrap();
            let colored = d.colored(end);
            let gap = &e.squared_third_side() - &squared_distance(&colored.v2, &colored.v3);
            assert_eq!(gap, eight_t, "third-side gap at {} of {}", e.anchor, e.color);
            assert_eq!(
                e.dot_at_anchor(),
                -&dot_at(&colored.v1, &colored.v2, &colored.v3),
                "dot contrast at {} of {}",
                e.anchor,
                e.color
            );
        }
    }
    passed(3, "Euclid third-side gap = 8 area and dot negation at all 6000 anchors");
}

#[test]
fn criterion_4_parallelogram_congruence() {
    let desk = desk_instances().map(|(_, points)| points);
    let instances = desk.into_iter().chain(random_suite());
    for [a, b, c] in instances {
        let figure = Figure::build(LabeledTriangle::new(a, b, c).unwrap());
        let euclid = build_euclid_triangles(&figure);
        let anderson = build_anderson_parallelograms(&figure);
        let boyadzhiev = build_boyadzhiev_parallelograms(&euclid);
        assert_eq!(anderson.len(), 6);
        for (p1, p2) in anderson.iter().zip(&boyadzhiev) {
            assert_eq!((p1.color, p1.anchor), (p2.color, p2.anchor));
            assert!(
                parallelograms_congruent(p1, p2),
                "at {} of {}",
                p1.anchor,
                p1.color
            );
        }
    }
    passed(4, "all Anderson/Boyadzhiev counterparts congruent on T1-T4 and the random suite");
}

#[test]
fn criterion_5_disjointness_in_the_generic_regime() {
    let mut rng = SplitMix64::new(2024);
    let mut accepted = 0u32;
    let mut attempts = 0u64;
    while accepted < 200 {
        attempts += 1;
        assert!(attempts < 200_000, "filter accepted only {accepted} of {attempts}");
        let [a, b, c] = next_triangle(&mut rng, 100);
        let figure = Figure::build(LabeledTriangle::new(a, b, c).unwrap());
        let case = figure.classify();
        let acute = VertexLabel::ALL
            .into_iter()
            .all(|v| *case.angles.get(v) == AngleClass::Acute);
        let inside = SquareColor::ALL
            .into_iter()
            .all(|color| *case.reflected.get(color) == Location::Inside);
        if !(acute && inside) {
            continue;
        }
        accepted += 1;
        for pair in &figure.pairs {
            let p1 = pair.copy1.to_polygon().expect("nondegenerate in this regime");
            let p2 = pair.copy2.to_polygon().expect("nondegenerate in this regime");
            assert!(
                !convex_interiors_intersect(&p1, &p2),
                "pair {} of triangle {:?} overlaps",
                pair.color,
                figure.triangle
            );
        }
    }
    passed(5, "200 acute all-inside instances: every colored pair has disjoint interiors");
}

#[test]
fn criterion_6_determinism_and_exit_codes() {
    // Byte-identical JSON and SVG across repeated runs.
    let json_a = temp_path("det-a.json");
    let json_b = temp_path("det-b.json");
    let svg_a = temp_path("det-a.svg");
    let svg_b = temp_path("det-b.svg");
    for (json, svg) in [(&json_a, &svg_a), (&json_b, &svg_b)] {
        let out = lawcos(&[
            "verify",
            "--points",
            "1,0 1/2,2 0,0",
            "--report",
            json.to_str().unwrap(),
            "--svg",
            svg.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    let report_bytes = std::fs::read(&json_a).unwrap();
    assert_eq!(report_bytes, std::fs::read(&json_b).unwrap(), "JSON not deterministic");
    assert_eq!(
        std::fs::read(&svg_a).unwrap(),
        std::fs::read(&svg_b).unwrap(),
        "SVG not deterministic"
    );
    assert!(!report_bytes.is_empty());
    for path in [&json_a, &json_b, &svg_a, &svg_b] {
        std::fs::remove_file(path).ok();
    }

    let batch_args = ["batch", "--count", "60", "--seed", "9", "--bound", "25"];
    let batch_a = temp_path("det-batch-a.json");
    let batch_b = temp_path("det-batch-b.json");
    for path in [&batch_a, &batch_b] {
        let mut args = batch_args.to_vec();
        args.extend(["--report", path.to_str().unwrap()]);
        assert_eq!(lawcos(&args).status.code(), Some(0));
    }
    assert_eq!(
        std::fs::read(&batch_a).unwrap(),
        std::fs::read(&batch_b).unwrap(),
        "batch JSON not deterministic"
    );
    std::fs::remove_file(&batch_a).ok();
    std::fs::remove_file(&batch_b).ok();

    // Exit-code contract.
    for points in desk_point_args() {
        assert_eq!(lawcos(&["verify", "--points", points]).status.code(), Some(0));
    }
    for bad in ["1,3 0,0", "1,x 0,0 5,0", "0,0 1,1 2,2"] {
        assert_eq!(lawcos(&["verify", "--points", bad]).status.code(), Some(2), "{bad}");
    }

    passed(6, "byte-identical JSON/SVG on repeated runs; exit codes 0/2 as contracted");
}
