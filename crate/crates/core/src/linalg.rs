//! Dense square complex matrices.

use std::ops::{Add, Mul, Sub};

use ndarray::{Array1, Array2, ArrayView2};
use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};

/// Dense square matrix of complex entries.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexMatrix {
    data: Array2<C64>,
}

impl ComplexMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { data: Array2::zeros((n, n)) }
    }

    pub fn identity(n: usize) -> Self {
        Self { data: Array2::eye(n) }
    }

    pub fn from_array(data: Array2<C64>) -> Result<Self> {
        let (rows, cols) = data.dim();
        if rows != cols {
            return Err(Error::Shape { expected: rows, found: cols });
        }
        Ok(Self { data })
    }

    pub fn from_diag(diag: &[C64]) -> Self {
        Self { data: Array2::from_diag(&Array1::from(diag.to_vec())) }
    }

    /// `|a⟩⟨b|`
    pub fn outer(a: &[C64], b: &[C64]) -> Self {
        assert_eq!(a.len(), b.len());
        let n = a.len();
        Self { data: Array2::from_shape_fn((n, n), |(i, j)| a[i] * b[j].conj()) }
    }

    /// `(X + X†)/2` with standard complex Gaussian entries in `X`.
    pub fn random_hermitian<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let x = Array2::from_shape_simple_fn((n, n), || C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)));
        let x = Self { data: x };
        (&x + &x.dagger()).scale(C64::new(0.5, 0.0))
    }

    pub fn size(&self) -> usize {
        self.data.nrows()
    }

    pub fn view(&self) -> ArrayView2<'_, C64> {
        self.data.view()
    }

    pub fn into_array(self) -> Array2<C64> {
        self.data
    }

    pub fn get(&self, row: usize, col: usize) -> C64 {
        self.data[(row, col)]
    }

    pub fn set(&mut self, row: usize, col: usize, value: C64) {
        self.data[(row, col)] = value;
    }

    pub fn dagger(&self) -> Self {
        Self { data: self.data.t().mapv(|z| z.conj()) }
    }

    pub fn dot(&self, other: &Self) -> Self {
        Self { data: self.data.dot(&other.data) }
    }

    pub fn apply(&self, v: &[C64]) -> Vec<C64> {
        self.data.dot(&Array1::from(v.to_vec())).to_vec()
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self { data: &self.data * factor }
    }

    /// `self += factor * other`
    pub fn add_scaled(&mut self, factor: C64, other: &Self) {
        self.data.scaled_add(factor, &other.data);
    }

    pub fn trace(&self) -> C64 {
        self.data.diag().sum()
    }

    /// `Tr[self · other]` without forming the product.
    pub fn trace_product(&self, other: &Self) -> C64 {
        let n = self.size();
        let mut acc = C64::new(0.0, 0.0);
        for i in 0..n {
            for k in 0..n {
                acc += self.data[(i, k)] * other.data[(k, i)];
            }
        }
        acc
    }

    pub fn powi(&self, exp: u64) -> Self {
        let mut result = Self::identity(self.size());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.dot(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.dot(&base);
            }
        }
        result
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Largest entry of `|A - A†|`.
    pub fn hermiticity_residue(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    /// Largest entry of `|A A† - I|`.
    pub fn unitarity_residue(&self) -> f64 {
        self.dot(&self.dagger()).max_abs_diff(&Self::identity(self.size()))
    }

    fn one_norm(&self) -> f64 {
        self.data
            .columns()
            .into_iter()
            .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Matrix exponential by scaling and squaring of a truncated Taylor series.
    pub fn expm(&self) -> Self {
        let n = self.size();
        let norm = self.one_norm();
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
        let scaled = self.scale(C64::new(0.5f64.powi(squarings as i32), 0.0));

        let mut sum = Self::identity(n);
        let mut term = Self::identity(n);
        for k in 1..=40 {
            term = term.dot(&scaled).scale(C64::new(1.0 / k as f64, 0.0));
            sum.add_scaled(C64::new(1.0, 0.0), &term);
            if term.max_abs() < 1e-20 {
                break;
            }
        }
        for _ in 0..squarings {
            sum = sum.dot(&sum);
        }
        sum
    }

    /// Cholesky factorisation attempt; succeeds iff the Hermitian matrix is
    /// positive definite (up to rounding).
    pub fn is_positive_definite(&self) -> bool {
        let n = self.size();
        let mut l = Array2::<C64>::zeros((n, n));
        for j in 0..n {
            let mut d = self.data[(j, j)].re;
            for k in 0..j {
                d -= l[(j, k)].norm_sqr();
            }
            if !(d > 0.0) {
                return false;
            }
            let d = d.sqrt();
            l[(j, j)] = C64::new(d, 0.0);
            for i in (j + 1)..n {
                let mut s = self.data[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)].conj();
                }
                l[(i, j)] = s / d;
            }
        }
        true
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn add(self, rhs: Self) -> ComplexMatrix {
        ComplexMatrix { data: &self.data + &rhs.data }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn sub(self, rhs: Self) -> ComplexMatrix {
        ComplexMatrix { data: &self.data - &rhs.data }
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;
    fn mul(self, rhs: Self) -> ComplexMatrix {
        self.dot(rhs)
    }
}
