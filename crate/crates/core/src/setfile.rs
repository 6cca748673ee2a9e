//! The plain-text set-file format.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 0
//! 3 0
//! ```
//!
//! The first data line fixes the modulus, every following data line is one
//! point with coordinates in `0..n`. Duplicates and out-of-range coordinates
//! are rejected with the offending line number. Writing is canonical, so a
//! parse/write round trip is byte-identical once the input is canonical.

use crate::error::{Error, Result};
use crate::group::PointSet;

pub fn parse_set(text: &str) -> Result<PointSet> {
    let mut modulus: Option<u32> = None;
    let mut pairs: Vec<(i64, i64)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split_whitespace();
        match modulus {
            None => {
                if fields.next() != Some("n") {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "expected header line \"n <modulus>\"".into(),
                    });
                }
                let value = fields.next().ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "missing modulus after \"n\"".into(),
                })?;
                let n: u32 = value.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid modulus {value:?}"),
                })?;
                if n < 2 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("modulus must be at least 2, got {n}"),
                    });
                }
                if fields.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "trailing tokens after the modulus".into(),
                    });
                }
                modulus = Some(n);
            }
            Some(n) => {
                let parse_coord = |token: Option<&str>| -> Result<i64> {
                    let token = token.ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: "expected two coordinates".into(),
                    })?;
                    let value: i64 = token.parse().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("invalid coordinate {token:?}"),
                    })?;
                    if !(0..i64::from(n)).contains(&value) {
                        return Err(Error::Parse {
                            line: line_no,
                            message: format!("coordinate {value} out of range 0..{n}"),
                        });
                    }
                    Ok(value)
                };
                let x1 = parse_coord(fields.next())?;
                let x2 = parse_coord(fields.next())?;
                if fields.next().is_some() {
                    return Err(Error::Parse {
                        line: line_no,
                        message: "trailing tokens after the coordinates".into(),
                    });
                }
                if pairs.contains(&(x1, x2)) {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("duplicate element ({x1}, {x2})"),
                    });
                }
                pairs.push((x1, x2));
            }
        }
    }

    let n = modulus.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing header line \"n <modulus>\"".into(),
    })?;
    Ok(PointSet::from_pairs(n, pairs))
}

/// Canonical text form: header, then the points in lexicographic order.
pub fn format_set(set: &PointSet) -> String {
    let mut out = format!("n {}\n", set.modulus());
    for e in set.iter() {
        out.push_str(&format!("{} {}\n", e.x1(), e.x2()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_the_corner_square() {
        let set = parse_set("n 4\n0 0\n3 0\n0 3\n3 3\n").unwrap();
        assert_eq!(set, PointSet::from_pairs(4, [(0, 0), (3, 0), (0, 3), (3, 3)]));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let set = parse_set("# comment\n\nn 2\n1 1\n").unwrap();
        assert_eq!(set, PointSet::from_pairs(2, [(1, 1)]));
    }

    #[test]
    fn duplicate_elements_are_rejected() {
        let err = parse_set("n 4\n0 0\n0 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn out_of_range_coordinates_are_rejected() {
        let err = parse_set("n 4\n0 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    #[test]
    fn missing_header_is_rejected() {
        assert!(matches!(parse_set("0 0\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_set(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_set("n 1\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn malformed_lines_carry_their_number() {
        let err = parse_set("n 4\n0\n").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn empty_set_files_are_allowed() {
        let set = parse_set("n 4\n").unwrap();
        assert!(set.is_empty());
        assert_eq!(set.modulus(), 4);
    }

    proptest! {
        #[test]
        fn write_then_read_round_trips(
            n in 2u32..=12,
            seed in any::<u64>(),
        ) {
            use rand::{RngExt, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let pairs: Vec<(i64, i64)> = (0..rng.random_range(0..20))
                .map(|_| (rng.random_range(0..i64::from(n)), rng.random_range(0..i64::from(n))))
                .collect();
            let set = PointSet::from_pairs(n, pairs);
            let text = format_set(&set);
            let reparsed = parse_set(&text).unwrap();
            prop_assert_eq!(&reparsed, &set);
            // canonical text is a fixed point
            prop_assert_eq!(format_set(&reparsed), text);
        }
    }
}
