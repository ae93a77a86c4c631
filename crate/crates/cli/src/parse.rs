//! Parsing of triangle input text.
//!
//! Format: three whitespace-separated points `x,y`, where each coordinate
//! is an integer, a finite decimal or a fraction `p/q`, all parsed exactly.

use lawcos_core::{Point, Scalar};
use thiserror::Error;

/// Parse failure with the byte offset of the offending token.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError { position, message: message.into() }
    }
}

fn tokens(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out
}

fn parse_coordinate(position: usize, token: &str) -> Result<Scalar, ParseError> {
    token
        .parse::<Scalar>()
        .map_err(|e| ParseError::new(position, e.to_string()))
}

/// Parses one `x,y` point token.
pub fn parse_point(position: usize, token: &str) -> Result<Point, ParseError> {
    let Some((x, y)) = token.split_once(',') else {
        return Err(ParseError::new(
            position,
            format!("expected `x,y`, got `{token}`"),
        ));
    };
    if y.contains(',') {
        return Err(ParseError::new(
            position,
            format!("too many commas in `{token}`"),
        ));
    }
    let x_scalar = parse_coordinate(position, x)?;
    let y_scalar = parse_coordinate(position + x.len() + 1, y)?;
    Ok(Point::new(x_scalar, y_scalar))
}

/// Parses a full triangle `x1,y1 x2,y2 x3,y3` into `[A, B, C]`.
///
/// Degeneracy is not checked here; the verifier rejects collinear input.
pub fn parse_triangle(text: &str) -> Result<[Point; 3], ParseError> {
    let tokens = tokens(text);
    if tokens.len() != 3 {
        let position = tokens
            .get(3)
            .map(|(p, _)| *p)
            .unwrap_or_else(|| text.len());
        return Err(ParseError::new(
            position,
            format!("expected 3 points, got {}", tokens.len()),
        ));
    }
    let a = parse_point(tokens[0].0, tokens[0].1)?;
    let b = parse_point(tokens[1].0, tokens[1].1)?;
    let c = parse_point(tokens[2].0, tokens[2].1)?;
    Ok([a, b, c])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Scalar {
        text.parse().unwrap()
    }

    #[test]
    fn parses_desk_triangles() {
        let [a, b, c] = parse_triangle("1,3 0,0 5,0").unwrap();
        assert_eq!(a, Point::from_ints(1, 3));
        assert_eq!(b, Point::from_ints(0, 0));
        assert_eq!(c, Point::from_ints(5, 0));

        let [a, b, _] = parse_triangle("1,0 1/2,2 0,0").unwrap();
        assert_eq!(a, Point::from_ints(1, 0));
        assert_eq!(b, Point::new(s("1/2"), s("2")));
    }

    #[test]
    fn parses_decimals_exactly() {
        let [a, ..] = parse_triangle("0.5,-2.25 0,0 1,0").unwrap();
        assert_eq!(a, Point::new(s("1/2"), s("-9/4")));
    }

    #[test]
    fn wrong_point_count() {
        let err = parse_triangle("1,3 0,0").unwrap_err();
        assert!(err.message.contains("expected 3 points, got 2"));
        assert!(parse_triangle("1,3 0,0 5,0 7,7").is_err());
        assert!(parse_triangle("").is_err());
    }

    #[test]
    fn error_positions_point_at_the_bad_token() {
        let err = parse_triangle("1,3 0,x 5,0").unwrap_err();
        assert_eq!(err.position, 6);
        let err = parse_triangle("1,3 00 5,0").unwrap_err();
        assert_eq!(err.position, 4);
        let err = parse_triangle("1,3 0,0 5,1/0").unwrap_err();
        assert_eq!(err.position, 10);
    }
}
