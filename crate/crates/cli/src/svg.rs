//! Deterministic SVG rendering of the figure.
//!
//! Geometry is computed exactly and converted to decimals only for the
//! final coordinate text, with a fixed formatter, so a given
//! `(input, options)` pair always produces byte-identical output. The
//! y-axis is flipped (`y -> -y`) for the screen convention.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use lawcos_core::figure::{EdgeEnd, Figure, SquareColor};
use lawcos_core::verify::ComparisonSet;
use lawcos_core::{Point, Scalar};

/// Drawable layers; the base triangle is always drawn.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Layer {
    Squares,
    Pieces,
    Colored,
    Euclid,
    Parallelograms,
    Labels,
}

/// Hex fills for the three squares and everything cut from them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorMap {
    pub red: String,
    pub green: String,
    pub blue: String,
}

impl Default for ColorMap {
    fn default() -> Self {
        ColorMap {
            red: "#d62728".to_string(),
            green: "#2ca02c".to_string(),
            blue: "#1f77b4".to_string(),
        }
    }
}

impl ColorMap {
    fn hex(&self, color: SquareColor) -> &str {
        match color {
            SquareColor::Red => &self.red,
            SquareColor::Green => &self.green,
            SquareColor::Blue => &self.blue,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub width_px: u32,
    /// Fraction of the figure's larger dimension added as margin on every
    /// side; must lie in `[0, 1/2)`.
    pub padding_fraction: f64,
    pub show: BTreeSet<Layer>,
    pub colors: ColorMap,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width_px: 800,
            padding_fraction: 0.08,
            show: BTreeSet::from([Layer::Squares, Layer::Pieces, Layer::Colored, Layer::Labels]),
            colors: ColorMap::default(),
        }
    }
}

impl RenderOptions {
    pub fn validate(&self) -> Result<(), String> {
        if !(0.0..0.5).contains(&self.padding_fraction) {
            return Err(format!(
                "padding fraction {} out of [0, 1/2)",
                self.padding_fraction
            ));
        }
        if self.width_px == 0 {
            return Err("width must be positive".to_string());
        }
        Ok(())
    }
}

/// Fixed decimal formatter: four places, trailing zeros trimmed.
fn num(v: f64) -> String {
    let mut text = format!("{v:.4}");
    if text.contains('.') {
        while text.ends_with('0') {
            text.pop();
        }
        if text.ends_with('.') {
            text.pop();
        }
    }
    if text == "-0" {
        text = "0".to_string();
    }
    text
}

/// A point in screen coordinates (y flipped).
fn coords(p: &Point) -> (String, String) {
    (num(p.x.to_f64()), num(-p.y.to_f64()))
}

fn points_attr(points: &[&Point]) -> String {
    let mut out = String::new();
    for (i, p) in points.iter().enumerate() {
        let (x, y) = coords(p);
        if i > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{x},{y}");
    }
    out
}

struct Bounds {
    min_x: Option<Scalar>,
    max_x: Option<Scalar>,
    min_y: Option<Scalar>,
    max_y: Option<Scalar>,
}

impl Bounds {
    fn new() -> Self {
        Bounds { min_x: None, max_x: None, min_y: None, max_y: None }
    }

    fn include(&mut self, p: &Point) {
        let update = |slot: &mut Option<Scalar>, v: &Scalar, keep_smaller: bool| {
            let replace = match slot.as_ref() {
                None => true,
                Some(current) => {
                    if keep_smaller {
                        v < current
                    } else {
                        v > current
                    }
                }
            };
            if replace {
                *slot = Some(v.clone());
            }
        };
        update(&mut self.min_x, &p.x, true);
        update(&mut self.max_x, &p.x, false);
        update(&mut self.min_y, &p.y, true);
        update(&mut self.max_y, &p.y, false);
    }
}

/// Renders the figure (and optionally the comparison constructions) as an
/// SVG 1.1 document.
pub fn render_svg(
    figure: &Figure,
    comparisons: Option<&ComparisonSet>,
    options: &RenderOptions,
) -> String {
    let show = |layer: Layer| options.show.contains(&layer);
    let triangle = &figure.triangle;

    // Exact bounding box over everything that will be drawn.
    let mut bounds = Bounds::new();
    for v in [triangle.a(), triangle.b(), triangle.c()] {
        bounds.include(v);
    }
    for d in figure.dissections() {
        if show(Layer::Squares) || show(Layer::Pieces) || show(Layer::Colored) {
            for corner in d.square.corners() {
                bounds.include(corner);
            }
        }
        if show(Layer::Pieces) {
            bounds.include(&d.apex_reflected);
            bounds.include(&d.foot);
        }
    }
    if let Some(sets) = comparisons {
        if show(Layer::Euclid) {
            for e in &sets.euclid {
                for v in e.triangle.vertices() {
                    bounds.include(v);
                }
            }
        }
        if show(Layer::Parallelograms) {
            for p in sets.anderson.iter().chain(&sets.boyadzhiev) {
                for v in &p.vertices {
                    bounds.include(v);
                }
            }
        }
    }

    let min_x = bounds.min_x.expect("nonempty").to_f64();
    let max_x = bounds.max_x.expect("nonempty").to_f64();
    let min_y = bounds.min_y.expect("nonempty").to_f64();
    let max_y = bounds.max_y.expect("nonempty").to_f64();
    let raw_w = max_x - min_x;
    let raw_h = max_y - min_y;
    let pad = options.padding_fraction * raw_w.max(raw_h).max(1e-9);
    let view_w = raw_w + 2.0 * pad;
    let view_h = raw_h + 2.0 * pad;
    // Screen y of the top edge is -(max_y) - pad.
    let view = format!(
        "{} {} {} {}",
        num(min_x - pad),
        num(-max_y - pad),
        num(view_w),
        num(view_h)
    );
    let height_px = (options.width_px as f64 * view_h / view_w).round().max(1.0);
    // Stroke and marker sizes scale with the figure.
    let unit = view_w.max(view_h) / 200.0;
    let stroke = num(unit);
    let thin = num(unit * 0.5);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" height=\"{}\" viewBox=\"{view}\">",
        options.width_px,
        num(height_px),
    );

    if show(Layer::Pieces) {
        let _ = writeln!(svg, "<defs>");
        for color in SquareColor::ALL {
            let hex = options.colors.hex(color);
            let step = num(unit * 2.5);
            let _ = writeln!(
                svg,
                "<pattern id=\"hatch-{color}\" patternUnits=\"userSpaceOnUse\" \
                 width=\"{step}\" height=\"{step}\" patternTransform=\"rotate(45)\">\
                 <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"{step}\" stroke=\"{hex}\" stroke-width=\"{thin}\"/>\
                 </pattern>"
            );
        }
        let _ = writeln!(svg, "</defs>");
    }

    // Colored triangles first (solid), pieces above them (translucent),
    // outlines on top.
    if show(Layer::Colored) {
        for d in figure.dissections() {
            let hex = options.colors.hex(d.color);
            for end in [EdgeEnd::Start, EdgeEnd::End] {
                let colored = d.colored(end);
                if colored.is_degenerate() {
                    continue;
                }
                let _ = writeln!(
                    svg,
                    "<polygon class=\"colored colored-{}\" points=\"{}\" fill=\"{hex}\" stroke=\"none\"/>",
                    d.color,
                    points_attr(&colored.vertices()),
                );
            }
        }
    }

    if show(Layer::Pieces) {
        let sigma = triangle.orientation_sign();
        for d in figure.dissections() {
            let hex = options.colors.hex(d.color);
            for piece in d.pieces() {
                let oriented = &sigma * &piece.signed_area();
                let negative = oriented.is_negative();
                let fill = if negative {
                    format!("url(#hatch-{})", d.color)
                } else {
                    hex.to_string()
                };
                let class = if negative {
                    format!("piece piece-{} negative", d.color)
                } else {
                    format!("piece piece-{}", d.color)
                };
                let _ = writeln!(
                    svg,
                    "<polygon class=\"{class}\" points=\"{}\" fill=\"{fill}\" \
                     fill-opacity=\"0.32\" stroke=\"{hex}\" stroke-width=\"{thin}\"/>",
                    points_attr(&piece.vertices()),
                );
            }
        }
        for d in figure.dissections() {
            let hex = options.colors.hex(d.color);
            let (cx, cy) = coords(&d.apex_reflected);
            let _ = writeln!(
                svg,
                "<circle class=\"reflected reflected-{}\" cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"{hex}\"/>",
                d.color,
                num(unit * 1.2),
            );
            let (fx, fy) = coords(&d.foot);
            let _ = writeln!(
                svg,
                "<circle class=\"foot foot-{}\" cx=\"{fx}\" cy=\"{fy}\" r=\"{}\" fill=\"none\" \
                 stroke=\"{hex}\" stroke-width=\"{thin}\"/>",
                d.color,
                num(unit),
            );
        }
    }

    if show(Layer::Squares) {
        for d in figure.dissections() {
            let _ = writeln!(
                svg,
                "<polygon class=\"square square-{}\" points=\"{}\" fill=\"none\" \
                 stroke=\"{}\" stroke-width=\"{stroke}\"/>",
                d.color,
                points_attr(&d.square.corners()),
                options.colors.hex(d.color),
            );
        }
    }

    if let Some(sets) = comparisons {
        if show(Layer::Euclid) {
            let dash = format!("{} {}", num(unit * 3.0), num(unit * 2.0));
            for e in &sets.euclid {
                let _ = writeln!(
                    svg,
                    "<polygon class=\"euclid euclid-{}\" points=\"{}\" fill=\"none\" \
                     stroke=\"{}\" stroke-width=\"{thin}\" stroke-dasharray=\"{dash}\"/>",
                    e.color,
                    points_attr(&e.triangle.vertices()),
                    options.colors.hex(e.color),
                );
            }
        }
        if show(Layer::Parallelograms) {
            let dash = format!("{} {}", num(unit), num(unit));
            for p in sets.anderson.iter().chain(&sets.boyadzhiev) {
                let verts: Vec<&Point> = p.vertices.iter().collect();
                let _ = writeln!(
                    svg,
                    "<polygon class=\"parallelogram {} parallelogram-{}\" points=\"{}\" \
                     fill=\"none\" stroke=\"{}\" stroke-width=\"{thin}\" stroke-dasharray=\"{dash}\"/>",
                    p.kind.name(),
                    p.color,
                    points_attr(&verts),
                    options.colors.hex(p.color),
                );
            }
        }
    }

    let _ = writeln!(
        svg,
        "<polygon class=\"triangle\" points=\"{}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"{stroke}\"/>",
        points_attr(&[triangle.a(), triangle.b(), triangle.c()]),
    );

    if show(Layer::Labels) {
        let font = num(unit * 8.0);
        let offset = unit * 1.6;
        let mut label = |text: &str, p: &Point| {
            let x = num(p.x.to_f64() + offset);
            let y = num(-p.y.to_f64() - offset);
            let _ = writeln!(
                svg,
                "<text class=\"label\" x=\"{x}\" y=\"{y}\" font-size=\"{font}\" \
                 font-family=\"sans-serif\">{text}</text>"
            );
        };
        label("A", triangle.a());
        label("B", triangle.b());
        label("C", triangle.c());
        if show(Layer::Pieces) {
            label("A'", &figure.red.apex_reflected);
            label("B'", &figure.green.apex_reflected);
            label("C'", &figure.blue.apex_reflected);
        }
    }

    svg.push_str("</svg>\n");
    svg
}
