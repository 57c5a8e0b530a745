//! Dense univariate polynomials over an exact coefficient scalar.
//!
//! The scalar is abstracted through [`Coeff`] so the same machinery serves
//! integer polynomials (`Polynomial<i64>`) and class-function-coefficient
//! polynomials (`Polynomial<ClassFunction>`). Coefficients are stored in
//! ascending degree order with trailing zeros trimmed; the zero polynomial is
//! the empty vector.

use crate::error::{Error, Result};
use num_traits::Zero;
use std::ops::{Mul, Sub};

/// Scalar requirements for polynomial coefficients: an additive group with
/// integer scaling. Ring multiplication is only required by [`Polynomial::mul`].
pub trait Coeff:
    Clone + PartialEq + Zero + Sub<Output = Self> + Mul<i64, Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + Sub<Output = T> + Mul<i64, Output = T>
{
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> Polynomial<C> {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `t^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    /// Whether the coefficients satisfy `c_i = c_{s-i}` after padding to
    /// degree `s`. Fails when the actual degree exceeds `s`.
    pub fn is_palindromic(&self, s: usize) -> bool {
        if self.degree().is_some_and(|d| d > s) {
            return false;
        }
        (0..=s / 2).all(|i| self.coeff(i) == self.coeff(s - i))
    }

    /// Coefficients of the expansion in the basis `t^i (1+t)^(s-2i)`,
    /// `i = 0..floor(s/2)`, valid for palindromic input of degree `s`.
    /// The basis is triangular when processed by ascending `i`, so each
    /// gamma coefficient is read off the residual and eliminated.
    pub fn gamma_basis(&self, s: usize) -> Result<Vec<C>> {
        if let Some(d) = self.degree() {
            if d > s {
                return Err(Error::DegreeMismatch {
                    expected: s,
                    found: d,
                });
            }
        }
        if !self.is_palindromic(s) {
            return Err(Error::NotPalindromic(s));
        }
        let mut residual: Vec<C> = (0..=s).map(|i| self.coeff(i)).collect();
        let mut gammas = Vec::with_capacity(s / 2 + 1);
        for i in 0..=s / 2 {
            let g = residual[i].clone();
            let width = s - 2 * i;
            for j in 0..=width {
                let b = binomial(width, j);
                residual[i + j] = residual[i + j].clone() - g.clone() * b;
            }
            gammas.push(g);
        }
        debug_assert!(residual.iter().all(|c| c.is_zero()));
        let rebuilt = Self::from_gamma_basis(&gammas, s);
        if rebuilt != Self::new((0..=s).map(|i| self.coeff(i)).collect()) {
            return Err(Error::NotPalindromic(s));
        }
        Ok(gammas)
    }

    /// Reassemble `sum_i gamma_i t^i (1+t)^(s-2i)`.
    pub fn from_gamma_basis(gammas: &[C], s: usize) -> Self {
        let mut coeffs = vec![C::zero(); s + 1];
        for (i, g) in gammas.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let width = s - 2 * i;
            for j in 0..=width {
                let b = binomial(width, j);
                coeffs[i + j] = coeffs[i + j].clone() + g.clone() * b;
            }
        }
        Self::new(coeffs)
    }
}

impl<C: Coeff + Mul<Output = C>> Polynomial<C> {
    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::new(coeffs)
    }
}

impl Polynomial<i64> {
    pub fn one() -> Self {
        Self::constant(1)
    }

    /// `1 + t + ... + t^(len-1)`.
    pub fn geometric(len: usize) -> Self {
        Self::new(vec![1; len])
    }

    /// `(1 + t)^k`.
    pub fn binomial_power(k: usize) -> Self {
        Self::new((0..=k).map(|j| binomial(k, j)).collect())
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, c| acc * x + c)
    }
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial overflow")
}
