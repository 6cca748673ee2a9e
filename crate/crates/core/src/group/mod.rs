//! Elements, subgroups and symplectic geometry of Z_n x Z_n.
//!
//! The symplectic form `<<x,y>> = x1*y2 - x2*y1 (mod n)` is the pairing that
//! drives everything else in this crate; the Euclidean inner product is kept
//! alongside it for comparison. Both are exposed as checked operations that
//! reject operands with different ambient moduli.

mod point_set;
mod subgroup;
mod symplectomorphism;

pub use point_set::PointSet;
pub use subgroup::{enumerate_lagrangians, enumerate_subgroups, Subgroup};
pub use symplectomorphism::Symplectomorphism;

use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A point of Z_n x Z_n with its ambient modulus attached.
///
/// Coordinates are always kept reduced to `0..n`. Mixing elements with
/// different moduli in group arithmetic is a caller bug and panics; the
/// checked pairings below return an error instead.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GroupElement {
    x1: u32,
    x2: u32,
    n: u32,
}

impl GroupElement {
    /// Builds the element `(x1, x2)` of Z_n x Z_n, reducing mod `n`.
    /// Negative inputs wrap around. Panics if `n < 2`.
    pub fn new(n: u32, x1: i64, x2: i64) -> Self {
        assert!(n >= 2, "modulus must be at least 2, got {n}");
        let m = i64::from(n);
        GroupElement {
            x1: x1.rem_euclid(m) as u32,
            x2: x2.rem_euclid(m) as u32,
            n,
        }
    }

    /// The identity (0, 0) of Z_n x Z_n.
    pub fn zero(n: u32) -> Self {
        GroupElement::new(n, 0, 0)
    }

    pub fn x1(self) -> u32 {
        self.x1
    }

    pub fn x2(self) -> u32 {
        self.x2
    }

    pub fn modulus(self) -> u32 {
        self.n
    }

    pub fn is_zero(self) -> bool {
        self.x1 == 0 && self.x2 == 0
    }

    /// Scalar multiple `k * self` in the additive group.
    pub fn scale(self, k: i64) -> Self {
        GroupElement::new(
            self.n,
            k.wrapping_mul(i64::from(self.x1)).rem_euclid(i64::from(self.n)),
            k.wrapping_mul(i64::from(self.x2)).rem_euclid(i64::from(self.n)),
        )
    }

    /// Order of the element: the least `k >= 1` with `k * self = 0`.
    ///
    /// Equals `n / gcd(n, x1, x2)`.
    pub fn order(self) -> u32 {
        self.n / gcd(self.n, gcd(self.x1, self.x2))
    }

    /// Position of the element in the lexicographic scan of Z_n x Z_n.
    pub(crate) fn index(self) -> usize {
        (self.x1 as usize) * (self.n as usize) + self.x2 as usize
    }

    pub(crate) fn from_index(n: u32, index: usize) -> Self {
        let nn = n as usize;
        debug_assert!(index < nn * nn);
        GroupElement {
            x1: (index / nn) as u32,
            x2: (index % nn) as u32,
            n,
        }
    }
}

impl Add for GroupElement {
    type Output = GroupElement;

    fn add(self, rhs: GroupElement) -> GroupElement {
        assert_eq!(self.n, rhs.n, "modulus mismatch in element addition");
        GroupElement {
            x1: (self.x1 + rhs.x1) % self.n,
            x2: (self.x2 + rhs.x2) % self.n,
            n: self.n,
        }
    }
}

impl Sub for GroupElement {
    type Output = GroupElement;

    fn sub(self, rhs: GroupElement) -> GroupElement {
        assert_eq!(self.n, rhs.n, "modulus mismatch in element subtraction");
        GroupElement {
            x1: (self.n + self.x1 - rhs.x1) % self.n,
            x2: (self.n + self.x2 - rhs.x2) % self.n,
            n: self.n,
        }
    }
}

impl Neg for GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        GroupElement {
            x1: (self.n - self.x1) % self.n,
            x2: (self.n - self.x2) % self.n,
            n: self.n,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x1, self.x2)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        (self.x1, self.x2).serialize(serializer)
    }
}

/// Symplectic form `<<x, y>> = x1*y2 - x2*y1 (mod n)`.
pub fn symplectic_form(x: GroupElement, y: GroupElement) -> Result<u32> {
    check_same_modulus(x, y)?;
    Ok(sym_residue(x, y))
}

/// Euclidean inner product `<x, y> = x1*y1 + x2*y2 (mod n)`.
pub fn euclidean_inner(x: GroupElement, y: GroupElement) -> Result<u32> {
    check_same_modulus(x, y)?;
    Ok(euc_residue(x, y))
}

pub(crate) fn sym_residue(x: GroupElement, y: GroupElement) -> u32 {
    debug_assert_eq!(x.n, y.n);
    let n = u64::from(x.n);
    let pos = u64::from(x.x1) * u64::from(y.x2) % n;
    let neg = u64::from(x.x2) * u64::from(y.x1) % n;
    ((pos + n - neg) % n) as u32
}

pub(crate) fn euc_residue(x: GroupElement, y: GroupElement) -> u32 {
    debug_assert_eq!(x.n, y.n);
    let n = u64::from(x.n);
    ((u64::from(x.x1) * u64::from(y.x1) + u64::from(x.x2) * u64::from(y.x2)) % n) as u32
}

fn check_same_modulus(x: GroupElement, y: GroupElement) -> Result<()> {
    if x.n != y.n {
        return Err(Error::ModulusMismatch {
            left: x.n,
            right: y.n,
        });
    }
    Ok(())
}

/// Finds some `h'` in `hprime` with `<<h, h'>> = 1`, if one exists.
///
/// Returns the lexicographically least such partner. When `h` generates an
/// order-n subgroup and `hprime` is a complementary order-n subgroup, a
/// partner always exists; for other inputs the search may come up empty and
/// `None` is returned rather than guessing.
pub fn find_symplectic_basis_partner(h: GroupElement, hprime: &Subgroup) -> Option<GroupElement> {
    assert_eq!(h.modulus(), hprime.modulus(), "modulus mismatch");
    hprime
        .carrier()
        .iter()
        .find(|&&candidate| sym_residue(h, candidate) == 1)
        .copied()
}

pub(crate) fn gcd(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Extended gcd over the integers: returns `(g, s, t)` with `s*a + t*b = g`.
pub(crate) fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        return (a, 1, 0);
    }
    let (g, s, t) = ext_gcd(b, a % b);
    (g, t, s - (a / b) * t)
}
