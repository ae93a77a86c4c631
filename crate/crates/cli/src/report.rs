//! JSON serialization of verification reports.
//!
//! All numbers are exact rational strings (`p/q`, or `p` for integers),
//! never floats. Key order is fixed by struct declaration order and the
//! output is a single compact line terminated by LF, so identical inputs
//! produce byte-identical reports.

use lawcos_core::figure::{SquareColor, VertexLabel};
use lawcos_core::verify::VerificationReport;
use lawcos_core::{Point, Scalar};
use serde::Serialize;

#[derive(Serialize)]
struct JsonReport {
    input: JsonInput,
    orientation: &'static str,
    case: JsonCase,
    areas: JsonAreas,
    checks: Vec<JsonCheck>,
    all_pass: bool,
}

#[derive(Serialize)]
struct JsonInput {
    #[serde(rename = "A")]
    a: [String; 2],
    #[serde(rename = "B")]
    b: [String; 2],
    #[serde(rename = "C")]
    c: [String; 2],
}

#[derive(Serialize)]
struct JsonPerVertex {
    #[serde(rename = "A")]
    a: String,
    #[serde(rename = "B")]
    b: String,
    #[serde(rename = "C")]
    c: String,
}

#[derive(Serialize)]
struct JsonPerColor<T> {
    red: T,
    green: T,
    blue: T,
}

#[derive(Serialize)]
struct JsonCase {
    angles: JsonPerVertex,
    /// Location of each reflected vertex relative to its square, keyed by
    /// the vertex that was reflected.
    reflected: JsonPerVertex,
    altitude_exceeds_side: JsonPerColor<bool>,
}

#[derive(Serialize)]
struct JsonColored {
    #[serde(rename = "red_at_B")]
    red_at_b: String,
    #[serde(rename = "red_at_C")]
    red_at_c: String,
    #[serde(rename = "green_at_C")]
    green_at_c: String,
    #[serde(rename = "green_at_A")]
    green_at_a: String,
    #[serde(rename = "blue_at_A")]
    blue_at_a: String,
    #[serde(rename = "blue_at_B")]
    blue_at_b: String,
}

#[derive(Serialize)]
struct JsonAreas {
    /// Unsigned square areas (equal to the squared side lengths).
    squares: JsonPerColor<String>,
    /// Signed piece areas in index order 1..4 per square.
    pieces: JsonPerColor<[String; 4]>,
    /// Signed colored-triangle areas.
    colored: JsonColored,
    blue_quadruple: String,
    #[serde(rename = "dot_CAB")]
    dot_cab: String,
}

#[derive(Serialize)]
struct JsonCheck {
    name: String,
    status: &'static str,
    residual: String,
}

fn point_strings(p: &Point) -> [String; 2] {
    [p.x.to_string(), p.y.to_string()]
}

fn scalar_string(s: &Scalar) -> String {
    s.to_string()
}

/// Renders a verification report as deterministic compact JSON.
pub fn emit_report(report: &VerificationReport) -> String {
    let triangle = &report.figure.triangle;
    let case = &report.case;
    let pieces = |color: SquareColor| {
        report
            .figure
            .dissection(color)
            .pieces()
            .map(|t| t.signed_area().to_string())
    };
    let colored = |color: SquareColor, at: VertexLabel| {
        let d = report.figure.dissection(color);
        let end = d.end_for(at).expect("vertex on edge");
        d.colored(end).signed_area().to_string()
    };

    let json = JsonReport {
        input: JsonInput {
            a: point_strings(triangle.a()),
            b: point_strings(triangle.b()),
            c: point_strings(triangle.c()),
        },
        orientation: triangle.orientation().name(),
        case: JsonCase {
            angles: JsonPerVertex {
                a: case.angles.a.name().to_string(),
                b: case.angles.b.name().to_string(),
                c: case.angles.c.name().to_string(),
            },
            // A' lives in the red square, B' in the green, C' in the blue.
            reflected: JsonPerVertex {
                a: case.reflected.red.to_string(),
                b: case.reflected.green.to_string(),
                c: case.reflected.blue.to_string(),
            },
            altitude_exceeds_side: JsonPerColor {
                red: case.altitude_exceeds_side.red,
                green: case.altitude_exceeds_side.green,
                blue: case.altitude_exceeds_side.blue,
            },
        },
        areas: JsonAreas {
            squares: JsonPerColor {
                red: scalar_string(&report.figure.red.square.signed_area().abs()),
                green: scalar_string(&report.figure.green.square.signed_area().abs()),
                blue: scalar_string(&report.figure.blue.square.signed_area().abs()),
            },
            pieces: JsonPerColor {
                red: pieces(SquareColor::Red),
                green: pieces(SquareColor::Green),
                blue: pieces(SquareColor::Blue),
            },
            colored: JsonColored {
                red_at_b: colored(SquareColor::Red, VertexLabel::B),
                red_at_c: colored(SquareColor::Red, VertexLabel::C),
                green_at_c: colored(SquareColor::Green, VertexLabel::C),
                green_at_a: colored(SquareColor::Green, VertexLabel::A),
                blue_at_a: colored(SquareColor::Blue, VertexLabel::A),
                blue_at_b: colored(SquareColor::Blue, VertexLabel::B),
            },
            blue_quadruple: scalar_string(&report.chain.blue_quadruple),
            dot_cab: scalar_string(&lawcos_core::dot_at(
                triangle.c(),
                triangle.a(),
                triangle.b(),
            )),
        },
        checks: report
            .checks
            .iter()
            .map(|c| JsonCheck {
                name: c.name.clone(),
                status: c.status.name(),
                residual: c.residual.to_string(),
            })
            .collect(),
        all_pass: report.all_pass,
    };
    let mut text = serde_json::to_string(&json).expect("report serializes");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct JsonBatch {
    count: u64,
    seed: u64,
    bound: i64,
    failures: Vec<JsonBatchFailure>,
    all_pass: bool,
}

#[derive(Serialize)]
struct JsonBatchFailure {
    index: u64,
    #[serde(rename = "A")]
    a: [String; 2],
    #[serde(rename = "B")]
    b: [String; 2],
    #[serde(rename = "C")]
    c: [String; 2],
    failed_checks: Vec<String>,
}

/// Renders a batch summary as deterministic compact JSON. Elapsed time is
/// deliberately excluded so identical inputs give byte-identical output.
pub fn emit_batch_report(summary: &crate::batch::BatchSummary) -> String {
    let json = JsonBatch {
        count: summary.count,
        seed: summary.seed,
        bound: summary.bound,
        failures: summary
            .failures
            .iter()
            .map(|f| JsonBatchFailure {
                index: f.index,
                a: point_strings(&f.points[0]),
                b: point_strings(&f.points[1]),
                c: point_strings(&f.points[2]),
                failed_checks: f.failed_checks.clone(),
            })
            .collect(),
        all_pass: summary.failures.is_empty(),
    };
    let mut text = serde_json::to_string(&json).expect("summary serializes");
    text.push('\n');
    text
}

#[cfg(test)]
mod tests {
    use super::*;
    use lawcos_core::verify::{run_all, RunOptions};

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    fn report_for(points: [(i64, i64); 3]) -> VerificationReport {
        let [a, b, c] = points.map(|(x, y)| Point::from_ints(x, y));
        run_all(a, b, c, &RunOptions::default()).unwrap()
    }

    #[test]
    fn emits_the_documented_key_values() {
        let text = emit_report(&report_for([(1, 3), (0, 0), (5, 0)]));
        assert!(text.contains("\"blue_quadruple\":\"40\""));
        assert!(text.contains("\"dot_CAB\":\"20\""));
        assert!(text.contains("\"pieces\":{\"red\":[\"6\",\"1\",\"3/2\",\"4\"]"));
        assert!(text.ends_with('\n'));
        assert!(!text.trim_end().contains('\n'), "single compact line");

        let text = emit_report(&report_for([(2, 1), (0, 0), (1, 0)]));
        assert!(text.contains("\"blue_quadruple\":\"-2\""));
    }

    #[test]
    fn output_is_byte_identical_across_runs() {
        let run = || emit_report(&report_for([(1, 3), (0, 0), (5, 0)]));
        assert_eq!(run(), run());
    }

    /// Parsing the serialized rational strings reproduces the exact
    /// scalars that went in.
    #[test]
    fn rational_strings_round_trip() {
        let report = report_for([(2, 1), (0, 0), (1, 0)]);
        let text = emit_report(&report);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();

        let parse = |v: &serde_json::Value| -> Scalar {
            v.as_str().expect("rational string").parse().unwrap()
        };
        assert_eq!(parse(&value["input"]["A"][0]), s("2"));
        assert_eq!(
            parse(&value["areas"]["blue_quadruple"]),
            report.chain.blue_quadruple
        );
        assert_eq!(
            parse(&value["areas"]["dot_CAB"]),
            lawcos_core::dot_at(
                report.figure.triangle.c(),
                report.figure.triangle.a(),
                report.figure.triangle.b()
            )
        );
        for color in lawcos_core::figure::SquareColor::ALL {
            let d = report.figure.dissection(color);
            let json_pieces = &value["areas"]["pieces"][color.name()];
            for (i, piece) in d.pieces().iter().enumerate() {
                assert_eq!(parse(&json_pieces[i]), piece.signed_area());
            }
            assert_eq!(
                parse(&value["areas"]["squares"][color.name()]),
                d.square.signed_area().abs()
            );
        }
        for (i, check) in report.checks.iter().enumerate() {
            assert_eq!(parse(&value["checks"][i]["residual"]), check.residual);
        }
    }
}
