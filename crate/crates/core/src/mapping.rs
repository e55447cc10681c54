//! Phase-space representatives of operators.
//!
//! An operator decomposes as `Ô = Σ O(m,n) G(m,n)` with coefficients
//! `O(m,n) = (1/N) Tr[G(m,n) Ô]`. Products compose through the triple-product
//! kernel:
//!
//! ```text
//! (AB)(m,n) = (1/N) Σ_{u,v,r,s} A(u,v) B(r,s) Tr[G(m,n) G(u,v) G(r,s)]
//! ```

use ndarray::Array2;
use num_complex::Complex64 as C64;

use crate::basis::{kernel_from_offsets, BasisSet};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::schwinger::Dimension;

/// Complex function on the `N × N` label grid, stored at `[j + h, l + h]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PhaseSpaceFunction {
    dim: Dimension,
    values: Array2<C64>,
}

impl PhaseSpaceFunction {
    pub fn from_fn(dim: Dimension, mut f: impl FnMut(i64, i64) -> C64) -> Self {
        let h = dim.h();
        let values = Array2::from_shape_fn((dim.n(), dim.n()), |(a, b)| f(a as i64 - h, b as i64 - h));
        Self { dim, values }
    }

    pub fn constant(dim: Dimension, value: C64) -> Self {
        Self { dim, values: Array2::from_elem((dim.n(), dim.n()), value) }
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    /// Value at label `(j, l)`, both taken mod `N`.
    pub fn get(&self, j: i64, l: i64) -> C64 {
        let (a, b) = (self.dim.reduce(j) + self.dim.h(), self.dim.reduce(l) + self.dim.h());
        self.values[(a as usize, b as usize)]
    }

    pub fn values(&self) -> &Array2<C64> {
        &self.values
    }

    /// Largest `|Im O(m,n)|`.
    pub fn imag_residue(&self) -> f64 {
        self.values.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    pub fn real_part(&self) -> Array2<f64> {
        self.values.mapv(|z| z.re)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self { dim: self.dim, values: &self.values * factor }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::Shape { expected: self.dim.n(), found: other.dim.n() });
        }
        Ok(())
    }
}

impl std::ops::Add for &PhaseSpaceFunction {
    type Output = PhaseSpaceFunction;
    fn add(self, rhs: Self) -> PhaseSpaceFunction {
        assert_eq!(self.dim, rhs.dim);
        PhaseSpaceFunction { dim: self.dim, values: &self.values + &rhs.values }
    }
}

impl std::ops::Sub for &PhaseSpaceFunction {
    type Output = PhaseSpaceFunction;
    fn sub(self, rhs: Self) -> PhaseSpaceFunction {
        assert_eq!(self.dim, rhs.dim);
        PhaseSpaceFunction { dim: self.dim, values: &self.values - &rhs.values }
    }
}

fn check_operator(op: &ComplexMatrix, basis: &BasisSet) -> Result<()> {
    if op.size() != basis.dim().n() {
        return Err(Error::Shape { expected: basis.dim().n(), found: op.size() });
    }
    Ok(())
}

/// `O(m,n) = (1/N) Tr[G(m,n) Ô]`
pub fn map_operator(op: &ComplexMatrix, basis: &BasisSet) -> Result<PhaseSpaceFunction> {
    check_operator(op, basis)?;
    let dim = basis.dim();
    let inv_n = 1.0 / dim.n() as f64;
    Ok(PhaseSpaceFunction::from_fn(dim, |j, l| basis.element(j, l).trace_product(op) * inv_n))
}

/// `Tr[G(m,n) Ô]`: the representative normalised so that the identity maps
/// to the constant 1.
pub fn symbol(op: &ComplexMatrix, basis: &BasisSet) -> Result<PhaseSpaceFunction> {
    check_operator(op, basis)?;
    Ok(PhaseSpaceFunction::from_fn(basis.dim(), |j, l| basis.element(j, l).trace_product(op)))
}

/// `Ô = Σ O(m,n) G(m,n)`
pub fn reconstruct(f: &PhaseSpaceFunction, basis: &BasisSet) -> Result<ComplexMatrix> {
    if f.dim != basis.dim() {
        return Err(Error::Shape { expected: basis.dim().n(), found: f.dim.n() });
    }
    let mut op = ComplexMatrix::zeros(f.dim.n());
    for (label, g) in basis.iter() {
        op.add_scaled(f.get(label.j, label.l), g);
    }
    Ok(op)
}

/// `Tr[Ô₁ Ô₂] = N Σ O₁(m,n) O₂(m,n)` for representatives from
/// [`map_operator`]. In the [`symbol`] normalisation the same trace reads
/// `(1/N) Σ`.
pub fn trace_pair(f: &PhaseSpaceFunction, g: &PhaseSpaceFunction) -> Result<C64> {
    f.check_same(g)?;
    let sum: C64 = f.values.iter().zip(g.values.iter()).map(|(a, b)| a * b).sum();
    Ok(sum * f.dim.n() as f64)
}

/// Tabulated triple-product kernel. The kernel depends on its three labels
/// only through the offsets `(m-u, n-v, m-r, n-s)` mod `N`, so `N⁴` values
/// cover every triple.
#[derive(Clone, Debug)]
pub struct ProductKernel {
    dim: Dimension,
    table: Vec<C64>,
}

impl ProductKernel {
    pub fn new(dim: Dimension) -> Self {
        let n = dim.n();
        let mut table = Vec::with_capacity(n.pow(4));
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                for c in 0..n as i64 {
                    for d in 0..n as i64 {
                        table.push(kernel_from_offsets([a, b, c, d], dim));
                    }
                }
            }
        }
        Self { dim, table }
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    /// `Tr[G(m,n) G(u,v) G(r,s)]`
    pub fn value(&self, m: i64, n: i64, u: i64, v: i64, r: i64, s: i64) -> C64 {
        let d = self.dim;
        let size = d.n();
        let idx = ((d.index(m - u) * size + d.index(n - v)) * size + d.index(m - r)) * size + d.index(n - s);
        self.table[idx]
    }

    /// Representative of the product of the operators represented by `f`
    /// and `g` (in that order).
    pub fn compose(&self, f: &PhaseSpaceFunction, g: &PhaseSpaceFunction) -> Result<PhaseSpaceFunction> {
        f.check_same(g)?;
        if f.dim != self.dim {
            return Err(Error::Shape { expected: self.dim.n(), found: f.dim.n() });
        }
        let d = self.dim;
        let inv_n = 1.0 / d.n() as f64;
        Ok(PhaseSpaceFunction::from_fn(d, |m, n| {
            let mut acc = C64::new(0.0, 0.0);
            for u in d.labels() {
                for v in d.labels() {
                    let fuv = f.get(u, v);
                    if fuv == C64::new(0.0, 0.0) {
                        continue;
                    }
                    for r in d.labels() {
                        for s in d.labels() {
                            acc += fuv * g.get(r, s) * self.value(m, n, u, v, r, s);
                        }
                    }
                }
            }
            acc * inv_n
        }))
    }
}

fn check_dim(f: &PhaseSpaceFunction, dim: Dimension) -> Result<()> {
    if f.dim != dim {
        return Err(Error::Shape { expected: dim.n(), found: f.dim.n() });
    }
    Ok(())
}

/// Representative of `A·B` from the representatives of `A` and `B`.
pub fn product_representative(
    f: &PhaseSpaceFunction,
    g: &PhaseSpaceFunction,
    dim: Dimension,
) -> Result<PhaseSpaceFunction> {
    check_dim(f, dim)?;
    check_dim(g, dim)?;
    ProductKernel::new(dim).compose(f, g)
}

/// Representative of `[A, B]`.
pub fn commutator_representative(
    f: &PhaseSpaceFunction,
    g: &PhaseSpaceFunction,
    dim: Dimension,
) -> Result<PhaseSpaceFunction> {
    check_dim(f, dim)?;
    check_dim(g, dim)?;
    let kernel = ProductKernel::new(dim);
    Ok(&kernel.compose(f, g)? - &kernel.compose(g, f)?)
}
