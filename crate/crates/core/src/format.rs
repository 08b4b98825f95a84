//! Plain-text set files.
//!
//! Point sets: the first data line is the field designation `p,k`; every
//! following data line is `a b`, two canonical codes. `#` starts a comment and
//! blank lines are ignored.
//!
//! ```text
//! # four corners of a unit square
//! 3,1
//! 0 0
//! 1 0
//! 0 1
//! 1 1
//! ```
//!
//! Scalar sets: line 1 is `p,k`, line 2 the member codes, space-separated and
//! strictly increasing.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ffield::{Elem, FieldSpec};
use crate::plane::{Point, PointSet};
use crate::sumsets::ScalarSet;

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn header(lines: &mut impl Iterator<Item = (usize, impl AsRef<str>)>) -> Result<FieldSpec> {
    let (no, line) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing field designation".into(),
    })?;
    FieldSpec::from_designation(line.as_ref()).map_err(|e| match e {
        Error::Parse { msg, .. } => Error::Parse { line: no, msg },
        other => other,
    })
}

fn parse_code(spec: &FieldSpec, tok: &str, line: usize) -> Result<Elem> {
    let code = tok.parse::<u64>().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a canonical code, got {tok:?}"),
    })?;
    spec.elem(code).map_err(|e| Error::Parse {
        line,
        msg: e.to_string(),
    })
}

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    let mut lines = data_lines(text);
    let spec = header(&mut lines)?;
    let mut seen: BTreeMap<Point, usize> = BTreeMap::new();
    for (no, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(Error::Parse {
                line: no,
                msg: format!("expected two codes, got {line:?}"),
            });
        };
        let pt = Point::new(parse_code(&spec, a, no)?, parse_code(&spec, b, no)?);
        if seen.insert(pt, no).is_some() {
            return Err(Error::DuplicatePoint { point: pt, line: no });
        }
    }
    PointSet::new(&spec, seen.into_keys())
}

pub fn write_point_set(e: &PointSet) -> String {
    let mut out = format!("{}\n", e.spec().designation());
    for pt in e.iter() {
        let _ = writeln!(out, "{} {}", pt.x, pt.y);
    }
    out
}

pub fn parse_scalar_set(text: &str) -> Result<ScalarSet> {
    let mut lines = data_lines(text);
    let spec = header(&mut lines)?;
    let Some((no, line)) = lines.next() else {
        return Ok(ScalarSet::empty(&spec));
    };
    let mut members: Vec<Elem> = Vec::new();
    for tok in line.split_whitespace() {
        let e = parse_code(&spec, tok, no)?;
        if members.last().is_some_and(|&last| last >= e) {
            return Err(Error::Parse {
                line: no,
                msg: "codes must be strictly increasing".into(),
            });
        }
        members.push(e);
    }
    if let Some((extra, _)) = lines.next() {
        return Err(Error::Parse {
            line: extra,
            msg: "unexpected data after the member line".into(),
        });
    }
    ScalarSet::new(&spec, members)
}

pub fn write_scalar_set(s: &ScalarSet) -> String {
    let codes: Vec<String> = s.iter().map(|e| e.to_string()).collect();
    format!("{}\n{}\n", s.spec().designation(), codes.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ffield::make_field;
    use proptest::prelude::*;

    #[test]
    fn parses_with_comments() {
        let text = "# square\n3,1\n0 0\n1 0 # corner\n\n0 1\n1 1\n";
        let e = parse_point_set(text).unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(e.spec().q(), 3);
        assert_eq!(write_point_set(&e), "3,1\n0 0\n0 1\n1 0\n1 1\n");
    }

    #[test]
    fn duplicate_names_line() {
        let err = parse_point_set("2,2\n0 1\n3 3\n0 1\n").unwrap_err();
        assert!(matches!(err, Error::DuplicatePoint { line: 4, .. }), "{err}");
        assert!(err.to_string().contains("line 4"));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_point_set(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_point_set("4,1\n"), Err(Error::NotPrime(4))));
        assert!(matches!(
            parse_point_set("3,1\n0 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_point_set("3,1\n0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_point_set("3,1\n0 1 2\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_point_set("x\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn scalar_sets() {
        let s = parse_scalar_set("7,1\n1 2 4\n").unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(write_scalar_set(&s), "7,1\n1 2 4\n");
        assert!(parse_scalar_set("7,1\n2 1\n").is_err());
        assert!(parse_scalar_set("7,1\n1 1\n").is_err());
        assert!(parse_scalar_set("7,1\n1 7\n").is_err());
        assert!(parse_scalar_set("7,1\n1\n2\n").is_err());
        assert!(parse_scalar_set("7,1\n").unwrap().is_empty());
    }

    proptest! {
        #[test]
        fn point_set_text_round_trip(bits in prop::collection::vec(any::<bool>(), 81)) {
            let f = make_field(3, 2).unwrap();
            let e = PointSet::new(&f, (0..81u32).filter(|&i| bits[i as usize]).map(|i| Point::from_codes(i / 9, i % 9))).unwrap();
            prop_assert_eq!(parse_point_set(&write_point_set(&e)).unwrap(), e);
        }
    }
}
