//! Dense polynomials in one variable `q` with exact `i64` coefficients.
//!
//! Every counting routine in this crate returns its refined answer as a
//! [`QPoly`], so that integer totals (`eval(1)`), single coefficients, and
//! whole coefficient rows can all be compared exactly.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub};

/// A polynomial in `q`, stored by ascending degree with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        QPoly::constant(1)
    }

    /// A constant polynomial.
    pub fn constant(c: i64) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// The monomial `q`.
    pub fn q() -> Self {
        QPoly::monomial(1, 1)
    }

    /// The monomial `c * q^deg`.
    pub fn monomial(c: i64, deg: usize) -> Self {
        let mut coeffs = vec![0; deg + 1];
        coeffs[deg] = c;
        QPoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from coefficients by ascending degree.
    pub fn from_coeffs(coeffs: impl Into<Vec<i64>>) -> Self {
        let mut p = QPoly { coeffs: coeffs.into() };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// Coefficients by ascending degree (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// The coefficient of `q^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Evaluates at an integer point.
    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0i64, |acc, &c| acc * x + c)
    }

    /// Formal derivative with respect to `q`.
    pub fn derivative(&self) -> QPoly {
        let coeffs: Vec<i64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| c * k as i64)
            .collect();
        QPoly::from_coeffs(coeffs)
    }

    /// The polynomial multiplied by an integer scalar.
    pub fn scaled(&self, c: i64) -> QPoly {
        QPoly::from_coeffs(self.coeffs.iter().map(|&a| a * c).collect::<Vec<_>>())
    }

    /// `k`-th power (with `pow(0)` the constant `1`).
    pub fn pow(&self, k: u32) -> QPoly {
        let mut acc = QPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The reversal `q^d * p(1/q)`.
    ///
    /// # Panics
    /// Panics if `d` is smaller than the degree.
    pub fn reversed(&self, d: usize) -> QPoly {
        assert!(
            self.degree().map_or(true, |deg| deg <= d),
            "reversal degree {d} below polynomial degree"
        );
        let mut coeffs = vec![0; d + 1];
        for (k, &c) in self.coeffs.iter().enumerate() {
            coeffs[d - k] = c;
        }
        QPoly::from_coeffs(coeffs)
    }

    /// Exact division by two, or `None` if any coefficient is odd.
    pub fn halved(&self) -> Option<QPoly> {
        if self.coeffs.iter().any(|&c| c % 2 != 0) {
            return None;
        }
        Some(QPoly::from_coeffs(
            self.coeffs.iter().map(|&c| c / 2).collect::<Vec<_>>(),
        ))
    }

    /// Adds `c * q^k` in place.
    pub fn add_term(&mut self, c: i64, k: usize) {
        if c == 0 {
            return;
        }
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += c;
        self.trim();
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![0; self.coeffs.len().max(rhs.coeffs.len())];
        for (k, slot) in coeffs.iter_mut().enumerate() {
            *slot = self.coeff(k) + rhs.coeff(k);
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        self + &rhs.scaled(-1)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(coeffs)
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        *self = &*self + rhs;
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.unsigned_abs();
            match k {
                0 => write!(f, "{a}")?,
                _ => {
                    if a != 1 {
                        write!(f, "{a}")?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = QPoly::from_coeffs(vec![1, 2, 0, 0]);
        assert_eq!(p.coeffs(), &[1, 2]);
        assert_eq!(p.degree(), Some(1));
        assert!(QPoly::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(QPoly::zero().degree(), None);
    }

    #[test]
    fn ring_operations() {
        let p = QPoly::from_coeffs(vec![1, 1]); // 1 + q
        let sq = &p * &p;
        assert_eq!(sq.coeffs(), &[1, 2, 1]);
        assert_eq!(p.pow(4).coeffs(), &[1, 4, 6, 4, 1]);
        assert_eq!((&sq - &p).coeffs(), &[0, 1, 1]);
        assert_eq!((&sq + &p).eval(2), 9 + 3);
        let mut acc = QPoly::zero();
        acc += &p;
        acc += &p;
        assert_eq!(acc, p.scaled(2));
    }

    #[test]
    fn calculus_and_reversal() {
        let p = QPoly::from_coeffs(vec![3, 0, 5, 7]); // 3 + 5q^2 + 7q^3
        assert_eq!(p.derivative().coeffs(), &[0, 10, 21]);
        assert_eq!(p.reversed(3).coeffs(), &[7, 5, 0, 3]);
        assert_eq!(p.reversed(4).coeffs(), &[0, 7, 5, 0, 3]);
        assert_eq!(QPoly::zero().derivative(), QPoly::zero());
    }

    #[test]
    #[should_panic(expected = "reversal degree")]
    fn reversal_below_degree_panics() {
        QPoly::from_coeffs(vec![1, 1, 1]).reversed(1);
    }

    #[test]
    fn halving() {
        assert_eq!(
            QPoly::from_coeffs(vec![2, 4]).halved(),
            Some(QPoly::from_coeffs(vec![1, 2]))
        );
        assert_eq!(QPoly::from_coeffs(vec![2, 3]).halved(), None);
    }

    #[test]
    fn add_term_grows_and_trims() {
        let mut p = QPoly::one();
        p.add_term(5, 3);
        assert_eq!(p.coeffs(), &[1, 0, 0, 5]);
        p.add_term(-5, 3);
        assert_eq!(p.coeffs(), &[1]);
    }

    #[test]
    fn display_formats() {
        assert_eq!(QPoly::zero().to_string(), "0");
        let p = QPoly::from_coeffs(vec![1, -2, 0, 1]);
        assert_eq!(p.to_string(), "1 - 2q + q^3");
        assert_eq!(QPoly::monomial(-3, 2).to_string(), "-3q^2");
    }

    proptest::proptest! {
        #[test]
        fn ring_laws_and_evaluation(
            a in proptest::collection::vec(-100i64..=100, 0..6),
            b in proptest::collection::vec(-100i64..=100, 0..6),
            c in proptest::collection::vec(-100i64..=100, 0..6),
            x in -4i64..=4,
        ) {
            let (a, b, c) = (
                QPoly::from_coeffs(a),
                QPoly::from_coeffs(b),
                QPoly::from_coeffs(c),
            );
            proptest::prop_assert_eq!(&a * &b, &b * &a);
            proptest::prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            proptest::prop_assert_eq!((&a + &b).eval(x), a.eval(x) + b.eval(x));
            proptest::prop_assert_eq!((&a * &b).eval(x), a.eval(x) * b.eval(x));
            proptest::prop_assert_eq!(a.scaled(2).halved(), Some(a.clone()));
            if let Some(d) = a.degree() {
                proptest::prop_assert_eq!(a.reversed(d).reversed(d), a.clone());
            }
            // d(ab) = a db + b da
            let product_rule = &(&a * &b.derivative()) + &(&b * &a.derivative());
            proptest::prop_assert_eq!((&a * &b).derivative(), product_rule);
        }
    }
}
