//! Exact sums of n-th roots of unity and the cyclotomic zero test.
//!
//! A [`CycloSum`] holds the integer coefficient of every power of
//! `w = e^{2 pi i / n}`. Whether such a sum vanishes is decided exactly: the
//! associated integer polynomial vanishes at `w` if and only if it is
//! divisible by the n-th cyclotomic polynomial. Floating point appears only
//! in [`CycloSum::approx_complex`], which exists to cross-validate the exact
//! route, never to replace it.

use std::f64::consts::TAU;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Largest `n` for which cyclotomic polynomials are computed. Far beyond the
/// group-theoretic bound; the cap keeps the memoization table small.
pub const MAX_CYCLOTOMIC_N: u32 = 512;

const OVERFLOW_MSG: &str = "integer overflow in cyclotomic arithmetic";

/// A dense integer polynomial, constant term first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloPolynomial {
    coeffs: Vec<i64>,
}

impl CycloPolynomial {
    fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
            coeffs.pop();
        }
        CycloPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

/// The n-th cyclotomic polynomial, by exact division of `x^n - 1` by the
/// cyclotomic polynomials of all proper divisors of `n`.
///
/// Results are memoized in a read-mostly cache: lookups after population are
/// lock-free, and a racing population writes the identical value, so the
/// first writer simply wins.
pub fn cyclotomic_polynomial(n: u32) -> Result<Arc<CycloPolynomial>> {
    if n == 0 || n > MAX_CYCLOTOMIC_N {
        return Err(Error::ModulusTooLarge {
            n,
            bound: MAX_CYCLOTOMIC_N,
        });
    }
    static CACHE: OnceLock<Vec<OnceLock<Arc<CycloPolynomial>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| {
        (0..=MAX_CYCLOTOMIC_N).map(|_| OnceLock::new()).collect()
    });

    if let Some(hit) = cache[n as usize].get() {
        return Ok(hit.clone());
    }
    // Fill in divisor order so each step only divides by known factors.
    for d in divisors(n) {
        let slot = &cache[d as usize];
        if slot.get().is_some() {
            continue;
        }
        let mut poly = x_n_minus_one(d);
        for e in divisors(d) {
            if e == d {
                continue;
            }
            let phi_e = cache[e as usize].get().expect("divisors visited in order");
            poly = poly_div_exact(&poly, phi_e);
        }
        let _ = slot.set(Arc::new(CycloPolynomial::from_coeffs(poly)));
    }
    Ok(cache[n as usize].get().expect("just populated").clone())
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for d in 1..=n {
        if n.is_multiple_of(d) {
            out.push(d);
        }
    }
    out
}

fn x_n_minus_one(n: u32) -> Vec<i64> {
    let mut coeffs = vec![0i64; n as usize + 1];
    coeffs[0] = -1;
    coeffs[n as usize] = 1;
    coeffs
}

/// Exact division of `num` by a monic `den`; panics if the remainder is
/// nonzero or a coefficient overflows.
fn poly_div_exact(num: &[i64], den: &CycloPolynomial) -> Vec<i64> {
    let d = den.coeffs.len() - 1;
    assert_eq!(den.coeffs[d], 1, "divisor must be monic");
    let mut rem: Vec<i64> = num.to_vec();
    let mut quot = vec![0i64; rem.len().saturating_sub(d)];
    for i in (d..rem.len()).rev() {
        let factor = rem[i];
        if factor == 0 {
            continue;
        }
        quot[i - d] = factor;
        for (j, &c) in den.coeffs.iter().enumerate() {
            let prod = factor.checked_mul(c).expect(OVERFLOW_MSG);
            rem[i - d + j] = rem[i - d + j].checked_sub(prod).expect(OVERFLOW_MSG);
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact cyclotomic division");
    quot
}

/// Remainder of `poly` modulo the monic `den`, truncated to degree < deg(den).
fn poly_rem(poly: &[i64], den: &CycloPolynomial) -> Vec<i64> {
    let d = den.coeffs.len() - 1;
    let mut rem: Vec<i64> = poly.to_vec();
    for i in (d..rem.len()).rev() {
        let factor = rem[i];
        if factor == 0 {
            continue;
        }
        for (j, &c) in den.coeffs.iter().enumerate() {
            let prod = factor.checked_mul(c).expect(OVERFLOW_MSG);
            rem[i - d + j] = rem[i - d + j].checked_sub(prod).expect(OVERFLOW_MSG);
        }
    }
    rem.truncate(d.max(1));
    rem
}

/// An exact integer combination of the n-th roots of unity:
/// `counts[j]` is the coefficient of `w^j`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycloSum {
    n: u32,
    counts: Vec<i64>,
}

impl CycloSum {
    /// The zero sum over n-th roots of unity.
    pub fn zero(n: u32) -> Self {
        assert!(
            (1..=MAX_CYCLOTOMIC_N).contains(&n),
            "root order {n} out of range 1..={MAX_CYCLOTOMIC_N}"
        );
        CycloSum {
            n,
            counts: vec![0; n as usize],
        }
    }

    /// Wraps an explicit coefficient vector; the length fixes `n`.
    pub fn from_counts(counts: Vec<i64>) -> Self {
        let n = counts.len() as u32;
        assert!(
            (1..=MAX_CYCLOTOMIC_N).contains(&n),
            "root order {n} out of range 1..={MAX_CYCLOTOMIC_N}"
        );
        CycloSum { n, counts }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn counts(&self) -> &[i64] {
        &self.counts
    }

    /// Adds one root `w^j` (j taken mod n) to the sum.
    pub fn add_root(&mut self, j: u32) {
        let idx = (j % self.n) as usize;
        self.counts[idx] = self.counts[idx].checked_add(1).expect(OVERFLOW_MSG);
    }

    /// Componentwise sum of two coefficient vectors.
    pub fn add(&self, other: &CycloSum) -> Result<CycloSum> {
        if self.n != other.n {
            return Err(Error::ModulusMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let counts = self
            .counts
            .iter()
            .zip(&other.counts)
            .map(|(&a, &b)| a.checked_add(b).expect(OVERFLOW_MSG))
            .collect();
        Ok(CycloSum { n: self.n, counts })
    }

    pub fn negate(&self) -> CycloSum {
        CycloSum {
            n: self.n,
            counts: self.counts.iter().map(|&c| c.checked_neg().expect(OVERFLOW_MSG)).collect(),
        }
    }

    /// Sum of all coefficients; for an indicator-function transform this is
    /// the cardinality of the underlying set.
    pub fn total(&self) -> i64 {
        self.counts.iter().fold(0i64, |acc, &c| acc.checked_add(c).expect(OVERFLOW_MSG))
    }

    /// Exact zero test: the sum vanishes iff the coefficient polynomial has
    /// remainder zero modulo the n-th cyclotomic polynomial.
    pub fn is_zero(&self) -> bool {
        let phi = cyclotomic_polynomial(self.n).expect("n bounded at construction");
        poly_rem(&self.counts, &phi).iter().all(|&c| c == 0)
    }

    /// Floating-point evaluation `(re, im)`; cross-validation only.
    pub fn approx_complex(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (j, &c) in self.counts.iter().enumerate() {
            let theta = TAU * (j as f64) / (self.n as f64);
            re += (c as f64) * theta.cos();
            im += (c as f64) * theta.sin();
        }
        (re, im)
    }

    pub fn approx_magnitude(&self) -> f64 {
        let (re, im) = self.approx_complex();
        re.hypot(im)
    }
}
