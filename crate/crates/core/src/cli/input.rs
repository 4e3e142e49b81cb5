use std::collections::HashMap;

use crate::cli::CliError;
use crate::geometry::{Point, PointSet};

/// Parses the point file format: one `x y` pair of decimal integers per
/// line, separated by whitespace. Lines whose first non-blank character is
/// `#` are comments; blank lines are skipped. Indices follow file order.
pub fn parse_points(text: &str) -> Result<PointSet, CliError> {
    let mut points = Vec::new();
    let mut lines_of: Vec<usize> = Vec::new();
    let mut first_seen: HashMap<Point, usize> = HashMap::new();

    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(xs), Some(ys), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(CliError::Parse {
                line: line_no,
                message: format!("expected two integers, got '{line}'"),
            });
        };
        let parse = |s: &str| {
            s.parse::<i64>().map_err(|_| CliError::Parse {
                line: line_no,
                message: format!("'{s}' is not an integer"),
            })
        };
        let pt = Point::new(parse(xs)?, parse(ys)?);
        if !pt.in_bounds() {
            return Err(CliError::Range {
                line: line_no,
                x: pt.x,
                y: pt.y,
            });
        }
        let index = points.len();
        if let Some(&first) = first_seen.get(&pt) {
            return Err(CliError::Duplicate {
                first_line: lines_of[first],
                second_line: line_no,
                first,
                second: index,
            });
        }
        first_seen.insert(pt, index);
        lines_of.push(line_no);
        points.push(pt);
    }
    Ok(PointSet::new(points)?)
}
