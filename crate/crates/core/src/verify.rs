//! The exact check suite.
//!
//! Every equation check compares two independently computed rational
//! values; it passes exactly when the residual is zero. There is no
//! tolerance anywhere. Boolean checks (congruence, disjointness) report a
//! residual of 0 or 1.
//!
//! Oriented areas are normalized by the recorded orientation sign of the
//! input triangle, so the whole suite passes for clockwise inputs too; see
//! the [`crate::figure`] module docs for the sign conventions.

use crate::comparisons::{
    build_anderson_parallelograms, build_boyadzhiev_parallelograms, build_euclid_triangles,
    parallelograms_congruent, EuclidTriangle, Parallelogram,
};
use crate::error::GeomError;
use crate::figure::{
    CaseReport, EdgeEnd, Figure, LabeledTriangle, SquareColor, VertexLabel,
};
use crate::point::{dot_at, squared_distance, Point};
use crate::polygon::{convex_interiors_intersect, polygon_signed_area, Location};
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn name(self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

/// One named exact check. `status == Pass` iff `residual == 0` for
/// equation checks; skipped checks state the failed precondition in
/// `note`.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    pub residual: Scalar,
    pub note: String,
}

impl CheckResult {
    fn equation(name: impl Into<String>, lhs: Scalar, rhs: Scalar, note: impl Into<String>) -> Self {
        let residual = &lhs - &rhs;
        CheckResult {
            name: name.into(),
            status: if residual.is_zero() {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            residual,
            note: format!("{} vs {}; {}", lhs, rhs, note.into()),
        }
    }

    fn boolean(name: impl Into<String>, holds: bool, note: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: if holds { CheckStatus::Pass } else { CheckStatus::Fail },
            residual: if holds { Scalar::zero() } else { Scalar::one() },
            note: note.into(),
        }
    }

    fn skipped(name: impl Into<String>, precondition: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            status: CheckStatus::Skipped,
            residual: Scalar::zero(),
            note: format!("precondition failed: {}", precondition.into()),
        }
    }
}

/// Which optional check families to run. The core families (chain,
/// decompositions, pair congruence) always run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub euclid: bool,
    pub parallelograms: bool,
    pub disjointness: bool,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { euclid: true, parallelograms: true, disjointness: true }
    }
}

/// The six displayed quantities of the identity chain, already normalized
/// to the counterclockwise reading by the orientation sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainValues {
    /// `BC^2 + CA^2 - AB^2`.
    pub sides: Scalar,
    /// red square + green square - blue square (unsigned areas).
    pub squares: Scalar,
    /// `2 s (sum red pieces + sum green pieces - sum blue pieces)`.
    pub pieces: Scalar,
    /// `2 s (colored sums with the chain's signs)`.
    pub colored: Scalar,
    /// `4 s [blue colored triangle]`.
    pub blue_quadruple: Scalar,
    /// `2 (A - C).(B - C)`, the right-hand side of the law of cosines.
    pub twice_dot_cab: Scalar,
}

pub fn chain_values(figure: &Figure) -> ChainValues {
    let t = &figure.triangle;
    let sigma = t.orientation_sign();
    let two_sigma = &Scalar::from_int(2) * &sigma;

    let sides = &(&t.squared_side(SquareColor::Red) + &t.squared_side(SquareColor::Green))
        - &t.squared_side(SquareColor::Blue);
    let squares = &(&figure.red.square.signed_area().abs()
        + &figure.green.square.signed_area().abs())
        - &figure.blue.square.signed_area().abs();
    let pieces = &two_sigma
        * &(&(&figure.red.piece_area_sum() + &figure.green.piece_area_sum())
            - &figure.blue.piece_area_sum());
    let colored_sum = |d: &crate::figure::EdgeDissection| {
        &d.colored_start.signed_area() + &d.colored_end.signed_area()
    };
    let colored = &two_sigma
        * &(&(&colored_sum(&figure.red) + &colored_sum(&figure.green))
            - &colored_sum(&figure.blue));
    let blue_quadruple =
        &(&Scalar::from_int(4) * &sigma) * &figure.pair(VertexLabel::C).copy1.signed_area();
    let twice_dot_cab =
        &Scalar::from_int(2) * &dot_at(t.c(), t.a(), t.b());

    ChainValues { sides, squares, pieces, colored, blue_quadruple, twice_dot_cab }
}

/// The five line-by-line equalities of the displayed identity chain.
pub fn check_chain(figure: &Figure) -> Vec<CheckResult> {
    let v = chain_values(figure);
    vec![
        CheckResult::equation(
            "chain.L1.sides_vs_squares",
            v.sides.clone(),
            v.squares.clone(),
            "side squares against erected-square areas",
        ),
        CheckResult::equation(
            "chain.L2.squares_vs_pieces",
            v.squares,
            v.pieces.clone(),
            "square areas against doubled signed piece sums",
        ),
        CheckResult::equation(
            "chain.L3.pieces_vs_colored",
            v.pieces,
            v.colored.clone(),
            "grouped piece sums against colored-triangle areas",
        ),
        CheckResult::equation(
            "chain.L4.colored_vs_quadruple",
            v.colored,
            v.blue_quadruple.clone(),
            "chain total against four blue areas",
        ),
        CheckResult::equation(
            "chain.L5.quadruple_vs_dot",
            v.blue_quadruple,
            v.twice_dot_cab,
            "four blue areas against twice the dot at C",
        ),
    ]
}

/// Per square: side^2 = 2 s (sum of pieces). Per endpoint group:
/// near + far = colored. Per sub-rectangle: shoelace(rect) = -2 colored
/// (the signed, case-free form of "the triangle has half the rectangle's
/// area").
pub fn check_decompositions(figure: &Figure) -> Vec<CheckResult> {
    let sigma = figure.triangle.orientation_sign();
    let two_sigma = &Scalar::from_int(2) * &sigma;
    let mut results = Vec::with_capacity(15);

    for d in figure.dissections() {
        results.push(CheckResult::equation(
            format!("decomp.square.{}", d.color),
            &two_sigma * &d.piece_area_sum(),
            d.squared_base(),
            "doubled piece sum against squared side",
        ));
    }
    for d in figure.dissections() {
        for end in [EdgeEnd::Start, EdgeEnd::End] {
            let label = d.label_at(end);
            results.push(CheckResult::equation(
                format!("decomp.group.{}.at_{}", d.color, label),
                &d.near(end).signed_area() + &d.far(end).signed_area(),
                d.colored(end).signed_area(),
                "near + far pieces against the colored triangle",
            ));
        }
    }
    for d in figure.dissections() {
        for end in [EdgeEnd::Start, EdgeEnd::End] {
            let label = d.label_at(end);
            let rect_area = polygon_signed_area(d.rect(end)).expect("four corners");
            let colored = d.colored(end).signed_area();
            let inverted = {
                let along = dot_at(&d.base_start, &d.apex, &d.base_end);
                along.is_negative() || along > d.squared_base()
            };
            let note = if inverted {
                "inverted foot: signed identity only"
            } else {
                "rectangle is twice the colored triangle, unsigned form applies"
            };
            results.push(CheckResult::equation(
                format!("decomp.rect.{}.at_{}", d.color, label),
                rect_area,
                -&(&Scalar::from_int(2) * &colored),
                note,
            ));
        }
    }
    results
}

/// Each colored pair: equal signed areas and equal sorted squared side
/// multisets (congruence).
pub fn check_pair_congruence(figure: &Figure) -> Vec<CheckResult> {
    VertexLabel::ALL
        .into_iter()
        .map(|anchor| {
            let pair = figure.pair(anchor);
            let name = format!("pair.{}.congruent", pair.color);
            let area1 = pair.copy1.signed_area();
            let area2 = pair.copy2.signed_area();
            let sides1 = pair.copy1.sorted_squared_sides();
            let sides2 = pair.copy2.sorted_squared_sides();
            if area1 != area2 {
                return CheckResult::equation(name, area1, area2, "copy areas differ");
            }
            let side_residual: Scalar = sides1
                .iter()
                .zip(sides2.iter())
                .map(|(s1, s2)| (s1 - s2).abs())
                .sum();
            CheckResult {
                name,
                status: if side_residual.is_zero() {
                    CheckStatus::Pass
                } else {
                    CheckStatus::Fail
                },
                residual: side_residual,
                note: format!(
                    "areas {} = {}, squared sides {:?} vs {:?}",
                    area1, area2, sides1, sides2
                ),
            }
        })
        .collect()
}

/// Conditional disjointness: when both copies of a pair have positive
/// oriented area and the reflected vertices of both host squares lie
/// inside or on their squares, the two copies must have disjoint
/// interiors. Otherwise the check is skipped with the failed precondition.
pub fn check_disjointness(figure: &Figure, case: &CaseReport) -> Vec<CheckResult> {
    let sigma = figure.triangle.orientation_sign();
    VertexLabel::ALL
        .into_iter()
        .map(|anchor| {
            let pair = figure.pair(anchor);
            let name = format!("disjoint.{}", pair.color);
            if pair
                .copies()
                .iter()
                .any(|c| !(&sigma * &c.signed_area()).is_positive())
            {
                return CheckResult::skipped(name, "a copy has non-positive oriented area");
            }
            if let Some(host) = pair
                .hosts
                .iter()
                .find(|h| *case.reflected.get(**h) == Location::Outside)
            {
                return CheckResult::skipped(
                    name,
                    format!("reflected vertex outside the {host} square"),
                );
            }
            let poly1 = pair.copy1.to_polygon().expect("positive area");
            let poly2 = pair.copy2.to_polygon().expect("positive area");
            CheckResult::boolean(
                name,
                !convex_interiors_intersect(&poly1, &poly2),
                "interiors of the two copies share no point",
            )
        })
        .collect()
}

/// Per anchor: |Euclid area| = |colored area|, squared third sides differ
/// by `8 |area(ABC)|`, and the anchor dots are negatives.
pub fn check_euclid_relations(figure: &Figure, euclid: &[EuclidTriangle]) -> Vec<CheckResult> {
    let eight_t = &Scalar::from_int(8) * &figure.triangle.unsigned_area();
    let mut results = Vec::with_capacity(18);
    for e in euclid {
        let d = figure.dissection(e.color);
        let end = d.end_for(e.anchor).expect("anchor on host edge");
        let colored = d.colored(end);
        let prefix = format!("euclid.{}.at_{}", e.color, e.anchor);
        results.push(CheckResult::equation(
            format!("{prefix}.area"),
            e.triangle.signed_area().abs(),
            colored.signed_area().abs(),
            "area magnitudes agree",
        ));
        results.push(CheckResult::equation(
            format!("{prefix}.third_side"),
            &e.squared_third_side() - &squared_distance(&colored.v2, &colored.v3),
            eight_t.clone(),
            "third-side gap is eight triangle areas",
        ));
        results.push(CheckResult::equation(
            format!("{prefix}.dot"),
            e.dot_at_anchor(),
            -&dot_at(&colored.v1, &colored.v2, &colored.v3),
            "anchor dots are negatives (pi/2 + x against pi/2 - x)",
        ));
    }
    results
}

/// Every Anderson parallelogram is congruent to the Boyadzhiev one at the
/// same square and anchor.
pub fn check_parallelogram_congruence(
    anderson: &[Parallelogram],
    boyadzhiev: &[Parallelogram],
) -> Vec<CheckResult> {
    anderson
        .iter()
        .map(|a| {
            let name = format!("parallelogram.{}.at_{}.congruent", a.color, a.anchor);
            let Some(b) = boyadzhiev
                .iter()
                .find(|b| (b.color, b.anchor) == (a.color, a.anchor))
            else {
                return CheckResult::boolean(name, false, "missing counterpart");
            };
            let note = if a.degenerate {
                "degenerate (right-angle anchor): both collapse to equal segments"
            } else {
                "equal sorted squared sides and diagonals"
            };
            CheckResult::boolean(name, parallelograms_congruent(a, b), note)
        })
        .collect()
}

/// All comparison checks at once, matching the construction sets.
pub fn check_comparisons(
    figure: &Figure,
    euclid: &[EuclidTriangle],
    anderson: &[Parallelogram],
    boyadzhiev: &[Parallelogram],
) -> Vec<CheckResult> {
    let mut results = check_euclid_relations(figure, euclid);
    results.extend(check_parallelogram_congruence(anderson, boyadzhiev));
    results
}

/// The comparison constructions derived from one figure.
#[derive(Debug, Clone)]
pub struct ComparisonSet {
    pub euclid: Vec<EuclidTriangle>,
    pub anderson: Vec<Parallelogram>,
    pub boyadzhiev: Vec<Parallelogram>,
}

impl ComparisonSet {
    pub fn build(figure: &Figure) -> ComparisonSet {
        let euclid = build_euclid_triangles(figure);
        let anderson = build_anderson_parallelograms(figure);
        let boyadzhiev = build_boyadzhiev_parallelograms(&euclid);
        ComparisonSet { euclid, anderson, boyadzhiev }
    }
}

/// Everything one verification run produces.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub figure: Figure,
    pub comparisons: ComparisonSet,
    pub case: CaseReport,
    pub chain: ChainValues,
    pub checks: Vec<CheckResult>,
    pub all_pass: bool,
}

impl VerificationReport {
    pub fn failed_check_names(&self) -> Vec<String> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Fail)
            .map(|c| c.name.clone())
            .collect()
    }
}

/// Builds the figure and the comparison constructions for `(a, b, c)` and
/// runs every applicable check.
pub fn run_all(
    a: Point,
    b: Point,
    c: Point,
    options: &RunOptions,
) -> Result<VerificationReport, GeomError> {
    let triangle = LabeledTriangle::new(a, b, c)?;
    let figure = Figure::build(triangle);
    let case = figure.classify();
    let chain = chain_values(&figure);
    let comparisons = ComparisonSet::build(&figure);

    let mut checks = check_chain(&figure);
    checks.extend(check_decompositions(&figure));
    checks.extend(check_pair_congruence(&figure));
    if options.disjointness {
        checks.extend(check_disjointness(&figure, &case));
    }
    if options.euclid {
        checks.extend(check_euclid_relations(&figure, &comparisons.euclid));
    }
    if options.parallelograms {
        checks.extend(check_parallelogram_congruence(
            &comparisons.anderson,
            &comparisons.boyadzhiev,
        ));
    }
    let all_pass = checks.iter().all(|c| c.status != CheckStatus::Fail);

    Ok(VerificationReport { figure, comparisons, case, chain, checks, all_pass })
}
