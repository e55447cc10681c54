//! Hermitian phase-point operator basis.
//!
//! ```text
//! G(j, l) = (1/N) Σ_{m,n=-h}^{h} D(m, n) exp[-2πi(mj + nl)/N] exp[iπ φ(m+h, n+h; N)]
//! D(m, n) = exp(iπmn/N) Vⁿ Uᵐ
//! ```
//!
//! `D(m, n)` is the displacement operator. With `U V = ω V U` it equals
//! `exp(-iπmn/N) Uᵐ Vⁿ` and satisfies `D(m, n)† = D(-m, -n)`, which makes
//! every `G(j, l)` Hermitian.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::schwinger::{build_u, build_v, modular_phase, Dimension};

/// Phase-space site `(j, l)` with both coordinates in `[-h, h]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PhasePointLabel {
    pub j: i64,
    pub l: i64,
}

impl PhasePointLabel {
    pub fn new(j: i64, l: i64, dim: Dimension) -> Result<Self> {
        let label = Self { j, l };
        label.check(dim)?;
        Ok(label)
    }

    fn check(self, dim: Dimension) -> Result<()> {
        if dim.contains(self.j) && dim.contains(self.l) {
            Ok(())
        } else {
            Err(Error::Label { j: self.j, l: self.l, h: dim.h() })
        }
    }

    /// All `N²` labels, `j` major.
    pub fn all(dim: Dimension) -> impl Iterator<Item = Self> {
        dim.labels().flat_map(move |j| dim.labels().map(move |l| Self { j, l }))
    }
}

fn sign_of(phase: i64) -> f64 {
    if phase.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Coefficient multiplying `Vⁿ Uᵐ` in `G(j, l)`, without the `1/N`.
fn sum_coefficient(m: i64, n: i64, label: PhasePointLabel, dim: Dimension) -> C64 {
    let h = dim.h();
    dim.half_phase(m * n)
        * dim.omega_pow(-(m * label.j + n * label.l))
        * sign_of(modular_phase(m + h, n + h, dim))
}

/// One basis element, summed term by term with explicit operator powers.
pub fn build_g(label: PhasePointLabel, dim: Dimension) -> Result<ComplexMatrix> {
    label.check(dim)?;
    let n_dim = dim.n();
    let (u, v) = (build_u(dim), build_v(dim));
    let mut g = ComplexMatrix::zeros(n_dim);
    for m in dim.labels() {
        let um = u.powi(dim.index(m) as u64);
        for n in dim.labels() {
            let vn = v.powi(dim.index(n) as u64);
            g.add_scaled(sum_coefficient(m, n, label, dim), &vn.dot(&um));
        }
    }
    Ok(g.scale(C64::new(1.0 / n_dim as f64, 0.0)))
}

/// The full set of `N²` basis elements.
#[derive(Clone, Debug)]
pub struct BasisSet {
    dim: Dimension,
    elements: Vec<ComplexMatrix>,
}

impl BasisSet {
    pub fn dim(&self) -> Dimension {
        self.dim
    }

    fn slot(&self, j: i64, l: i64) -> usize {
        let n = self.dim.n();
        let h = self.dim.h();
        ((j + h) as usize) * n + (l + h) as usize
    }

    pub fn get(&self, label: PhasePointLabel) -> &ComplexMatrix {
        &self.elements[self.slot(label.j, label.l)]
    }

    /// Element at `(j, l)`; panics outside `[-h, h]`.
    pub fn element(&self, j: i64, l: i64) -> &ComplexMatrix {
        assert!(self.dim.contains(j) && self.dim.contains(l), "label ({j}, {l}) out of range");
        &self.elements[self.slot(j, l)]
    }

    pub fn iter(&self) -> impl Iterator<Item = (PhasePointLabel, &ComplexMatrix)> {
        PhasePointLabel::all(self.dim).zip(self.elements.iter())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// All basis elements. The `N²` operators `Vⁿ Uᵐ` are formed once from
/// precomputed powers of `U` and `V` and shared across labels.
pub fn build_all(dim: Dimension) -> BasisSet {
    let n_dim = dim.n();
    let (u, v) = (build_u(dim), build_v(dim));
    let u_pows: Vec<ComplexMatrix> = dim.labels().map(|m| u.powi(dim.index(m) as u64)).collect();
    let v_pows: Vec<ComplexMatrix> = dim.labels().map(|n| v.powi(dim.index(n) as u64)).collect();
    let monomials: Vec<(i64, i64, ComplexMatrix)> = dim
        .labels()
        .zip(&u_pows)
        .flat_map(|(m, um)| dim.labels().zip(&v_pows).map(move |(n, vn)| (m, n, vn.dot(um))))
        .collect();

    let inv_n = C64::new(1.0 / n_dim as f64, 0.0);
    let elements = PhasePointLabel::all(dim)
        .map(|label| {
            let mut g = ComplexMatrix::zeros(n_dim);
            for (m, n, op) in &monomials {
                g.add_scaled(sum_coefficient(*m, *n, label, dim) * inv_n, op);
            }
            g
        })
        .collect();
    BasisSet { dim, elements }
}

/// Parity of the sign picked up when `D(X, Y)` with unreduced indices is
/// rewritten as `D(x, y)` with `x, y ∈ [-h, h]`:
/// `X = x + pN, Y = y + qN  ⇒  D(X, Y) = (-1)^{xq + yp + pq} D(x, y)`.
fn wrap_parity(big_x: i64, big_y: i64, dim: Dimension) -> i64 {
    let n = dim.n() as i64;
    let (x, y) = (dim.reduce(big_x), dim.reduce(big_y));
    let (p, q) = ((big_x - x) / n, (big_y - y) / n);
    (x * q + y * p + p * q).rem_euclid(2)
}

/// `Tr[G(m,n) G(u,v) G(r,s)]` as a function of the label offsets
/// `(m-u, n-v, m-r, n-s)`.
pub(crate) fn kernel_from_offsets(offsets: [i64; 4], dim: Dimension) -> C64 {
    let n = dim.n() as i64;
    let [du, dv, dr, ds] = offsets;
    let mut acc = C64::new(0.0, 0.0);
    for a in dim.labels() {
        for b in dim.labels() {
            for c in dim.labels() {
                for d in dim.labels() {
                    let exponent = a * d - b * c
                        + n * wrap_parity(a + c, b + d, dim)
                        + 2 * (a * du + b * dv + c * dr + d * ds);
                    acc += dim.half_phase(exponent);
                }
            }
        }
    }
    acc / (n * n) as f64
}

/// Triple-product kernel `Tr[G†(m,n) G(u,v) G(r,s)]` evaluated as the
/// quadruple phase sum
///
/// ```text
/// (1/N²) Σ_{a,b,c,d} e^{iπ(ad - bc)/N} (-1)^{w(a+c, b+d)}
///        e^{2πi[a(m-u) + b(n-v) + c(m-r) + d(n-s)]/N}
/// ```
///
/// where `w` is the wrap parity of the reduced index pair.
pub fn triple_product_kernel(
    first: PhasePointLabel,
    second: PhasePointLabel,
    third: PhasePointLabel,
    dim: Dimension,
) -> Result<C64> {
    first.check(dim)?;
    second.check(dim)?;
    third.check(dim)?;
    Ok(kernel_from_offsets(
        [first.j - second.j, first.l - second.l, first.j - third.j, first.l - third.l],
        dim,
    ))
}
