//! Character-grid rendering of point sets, origin at the bottom left.
//!
//! A set renders as n lines of n cells, `█` for members and `·` otherwise,
//! with the row of second-coordinate n-1 printed first so the origin sits at
//! the bottom left, matching the usual picture of the group. A legend line
//! states the modulus and what is being shown.

use crate::error::{Error, Result};
use crate::group::{GroupElement, PointSet};
use crate::transform::ZeroSet;
use crate::MAX_MODULUS;

const FILLED: char = '█';
const EMPTY: char = '·';

/// Renders a point set with a caller-supplied legend tag.
pub fn render_points(set: &PointSet, legend: &str) -> Result<String> {
    let n = set.modulus();
    if n > MAX_MODULUS {
        return Err(Error::ModulusTooLarge {
            n,
            bound: MAX_MODULUS,
        });
    }
    let mut out = String::new();
    for row in (0..n).rev() {
        for col in 0..n {
            let e = GroupElement::new(n, i64::from(col), i64::from(row));
            out.push(if set.contains(e) { FILLED } else { EMPTY });
        }
        out.push('\n');
    }
    out.push_str(&format!("n={n} {legend}\n"));
    Ok(out)
}

/// Renders a zero set, tagging the legend with its form.
pub fn render_zero_set(z: &ZeroSet) -> Result<String> {
    render_points(z.points(), &format!("{} zero set", z.form().label()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::{zero_set, Form};

    #[test]
    fn symplectic_zero_set_of_the_axis() {
        let a = PointSet::from_pairs(4, (0..4).map(|k| (k, 0)));
        let z = zero_set(&a, Form::Symplectic).unwrap();
        let grid = render_zero_set(&z).unwrap();
        assert_eq!(
            grid,
            "████\n████\n████\n····\nn=4 symplectic zero set\n"
        );
    }

    #[test]
    fn euclidean_zero_set_of_the_axis() {
        let a = PointSet::from_pairs(4, (0..4).map(|k| (k, 0)));
        let z = zero_set(&a, Form::Euclidean).unwrap();
        let grid = render_zero_set(&z).unwrap();
        assert_eq!(
            grid,
            "·███\n·███\n·███\n·███\nn=4 euclidean zero set\n"
        );
    }

    #[test]
    fn empty_set_renders_blank() {
        let grid = render_points(&PointSet::empty(2), "point set").unwrap();
        assert_eq!(grid, "··\n··\nn=2 point set\n");
    }

    #[test]
    fn oversized_grids_are_rejected() {
        let set = PointSet::empty(MAX_MODULUS + 1);
        assert!(matches!(
            render_points(&set, "point set"),
            Err(Error::ModulusTooLarge { .. })
        ));
    }
}
