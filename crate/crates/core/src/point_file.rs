//! Plain-text point files: one `x y` pair per line, coordinates written as
//! `int` or `int/int`. Blank lines and lines starting with `#` are skipped.

use std::collections::HashMap;

use crate::error::ParseError;
use crate::geometry::Point;
use crate::point_set::PointSet;
use crate::rational::Rational;

pub fn parse(text: &str) -> Result<PointSet, ParseError> {
    let mut seen: HashMap<Point, usize> = HashMap::new();
    let mut pts = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let [xs, ys] = tokens[..] else {
            return Err(ParseError::BadLine {
                line,
                found: body.to_string(),
            });
        };
        let coord = |s: &str| {
            s.parse::<Rational>()
                .map_err(|e| ParseError::BadCoordinate {
                    line,
                    source: Box::new(e),
                })
        };
        let p = Point::new(coord(xs)?, coord(ys)?);
        if let Some(&first) = seen.get(&p) {
            return Err(ParseError::DuplicatePoint {
                line,
                first,
                point: Box::new(p),
            });
        }
        seen.insert(p.clone(), line);
        pts.push(p);
    }
    Ok(pts.into_iter().collect())
}

/// One `x y` line per point, in the set's insertion order.
pub fn format(set: &PointSet) -> String {
    let mut out = String::new();
    for p in set.iter() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_and_fractions() {
        let set = parse("# square\n0 0\n\n1 0\n  1/2 -3/4 \n").unwrap();
        assert_eq!(set.len(), 3);
        assert!(set.contains(&Point::new(
            Rational::new(1, 2).unwrap(),
            Rational::new(-3, 4).unwrap()
        )));
    }

    #[test]
    fn reports_errors_with_lines() {
        assert_eq!(
            parse("0 0\n1 2 3\n"),
            Err(ParseError::BadLine {
                line: 2,
                found: "1 2 3".into()
            })
        );
        assert!(matches!(
            parse("0 0\n\n1 x\n"),
            Err(ParseError::BadCoordinate { line: 3, .. })
        ));
        assert!(matches!(
            parse("1 0\n0 0\n2/2 0\n"),
            Err(ParseError::DuplicatePoint {
                line: 3,
                first: 1,
                ..
            })
        ));
        assert!(matches!(
            parse("1/0 0\n"),
            Err(ParseError::BadCoordinate { line: 1, .. })
        ));
    }

    #[test]
    fn round_trip() {
        let set = parse("0 0\n1/3 2\n-5 7/2\n").unwrap();
        assert_eq!(parse(&format(&set)).unwrap(), set);
        assert_eq!(format(&set), "0 0\n1/3 2\n-5 7/2\n");
    }
}
