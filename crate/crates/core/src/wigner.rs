//! Discrete Wigner function.
//!
//! For a pure state with amplitudes `ψ_k` in the `U` eigenbasis
//!
//! ```text
//! ρ_w(m,n) = (1/N²) Σ_{j,l,k} ψ*_k ψ_{k-l} exp[(2πi/N)(jk - jl/2 - mj - nl)]
//! ```
//!
//! with `j, l, m, n ∈ [-h, h]` and amplitude indices taken mod `N`. The
//! grid equals `(1/N) Tr[G(m,n) |ψ⟩⟨ψ|]`. It is the double Fourier transform
//! of the characteristic grid
//!
//! ```text
//! ρ_s(j,l) = Σ_k ψ*_k ψ_{k-l} exp[(2πi/N)(jk - jl/2)]
//! ```
//!
//! which [`wigner_fast`] evaluates with FFTs.

use ndarray::Array2;
use num_complex::Complex64 as C64;
use rustfft::FftPlanner;

use crate::basis::BasisSet;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::mapping::map_operator;
use crate::schwinger::{Dimension, StateVector};

/// Tolerated deviation of a state norm from 1.
pub const NORM_TOLERANCE: f64 = 1e-8;
/// Tolerated Hermiticity, trace and positivity defects of a density operator.
pub const DENSITY_TOLERANCE: f64 = 1e-8;
/// Noise floor used by [`support_count`] unless a caller picks another.
pub const DEFAULT_SUPPORT_THRESHOLD: f64 = 1e-10;

/// Real Wigner function on the label grid, stored at `[m + h, n + h]`.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerGrid {
    dim: Dimension,
    values: Array2<f64>,
    imag_residue: f64,
}

impl WignerGrid {
    fn from_complex(dim: Dimension, values: Array2<C64>) -> Self {
        let imag_residue = values.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
        Self { dim, values: values.mapv(|z| z.re), imag_residue }
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn values(&self) -> &Array2<f64> {
        &self.values
    }

    /// Value at label `(m, n)`, both taken mod `N`.
    pub fn get(&self, m: i64, n: i64) -> f64 {
        let h = self.dim.h();
        self.values[((self.dim.reduce(m) + h) as usize, (self.dim.reduce(n) + h) as usize)]
    }

    /// Largest imaginary part discarded when the grid was formed.
    pub fn imag_residue(&self) -> f64 {
        self.imag_residue
    }

    pub fn sum(&self) -> f64 {
        self.values.sum()
    }

    /// `Σ_n ρ_w(m, n)` for `m = -h..=h`: the `U`-basis distribution.
    pub fn position_marginal(&self) -> Vec<f64> {
        self.values.rows().into_iter().map(|r| r.sum()).collect()
    }

    /// `Σ_m ρ_w(m, n)` for `n = -h..=h`: the `V`-basis distribution.
    pub fn momentum_marginal(&self) -> Vec<f64> {
        self.values.columns().into_iter().map(|c| c.sum()).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Pointwise weighted sum of grids of the same dimension.
    pub fn mixture(parts: &[(f64, &WignerGrid)]) -> Self {
        let dim = parts[0].1.dim;
        let mut values = Array2::zeros((dim.n(), dim.n()));
        for (w, g) in parts {
            assert_eq!(g.dim, dim);
            values.scaled_add(*w, &g.values);
        }
        Self { dim, values, imag_residue: 0.0 }
    }
}

/// `ρ_s(j, l)` stored at `[j + h, l + h]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacteristicGrid {
    dim: Dimension,
    values: Array2<C64>,
}

impl CharacteristicGrid {
    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn values(&self) -> &Array2<C64> {
        &self.values
    }

    pub fn get(&self, j: i64, l: i64) -> C64 {
        let h = self.dim.h();
        self.values[((j + h) as usize, (l + h) as usize)]
    }

    pub fn max_modulus(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

fn check_normalized(state: &StateVector) -> Result<()> {
    let norm = state.norm();
    if (norm - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::Normalization { norm });
    }
    Ok(())
}

/// Direct evaluation of the triple sum. The `j` sum only depends on
/// `2(k - m) - l` mod `2N` and is tabulated first; the remaining `k` and `l`
/// sums are carried out explicitly, `O(N³)` overall.
pub fn wigner_pure(state: &StateVector) -> Result<WignerGrid> {
    check_normalized(state)?;
    let dim = state.dim();
    let n = dim.n() as i64;
    let h = dim.h();
    let psi = state.amplitudes();

    // Σ_j exp(iπ j t / N), t = 2(k - m) - l mod 2N
    let dirichlet: Vec<C64> = (0..2 * n).map(|t| dim.labels().map(|j| dim.half_phase(j * t)).sum()).collect();

    let mut inner = Array2::<C64>::zeros((n as usize, n as usize));
    for m in dim.labels() {
        for l in dim.labels() {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..n {
                let t = (2 * (k - m) - l).rem_euclid(2 * n) as usize;
                acc += psi[k as usize].conj() * psi[dim.index(k - l)] * dirichlet[t];
            }
            inner[((m + h) as usize, (l + h) as usize)] = acc;
        }
    }

    let norm = 1.0 / (n * n) as f64;
    let values = Array2::from_shape_fn((n as usize, n as usize), |(a, b)| {
        let nn = b as i64 - h;
        let acc: C64 = dim
            .labels()
            .map(|l| dim.omega_pow(-nn * l) * inner[(a, (l + h) as usize)])
            .sum();
        acc * norm
    });
    Ok(WignerGrid::from_complex(dim, values))
}

/// Characteristic grid: one inverse FFT over `k` per `l`.
pub fn characteristic(state: &StateVector) -> Result<CharacteristicGrid> {
    check_normalized(state)?;
    let dim = state.dim();
    let n = dim.n();
    let h = dim.h();
    let psi = state.amplitudes();
    let fft = FftPlanner::<f64>::new().plan_fft_inverse(n);

    let mut values = Array2::<C64>::zeros((n, n));
    let mut buf = vec![C64::new(0.0, 0.0); n];
    for l in dim.labels() {
        for (k, slot) in buf.iter_mut().enumerate() {
            *slot = psi[k].conj() * psi[dim.index(k as i64 - l)];
        }
        // buf[j mod N] = Σ_k a_l[k] exp(2πi jk / N)
        fft.process(&mut buf);
        for j in dim.labels() {
            values[((j + h) as usize, (l + h) as usize)] = buf[dim.index(j)] * dim.half_phase(-j * l);
        }
    }
    Ok(CharacteristicGrid { dim, values })
}

/// Forward 2D DFT of `ρ_s` scaled by `1/N²`.
pub fn wigner_from_characteristic(chi: &CharacteristicGrid) -> WignerGrid {
    let dim = chi.dim;
    let n = dim.n();
    let h = dim.h();
    let fft = FftPlanner::<f64>::new().plan_fft_forward(n);

    // periodic layout: work[j mod N][l mod N]
    let mut work = Array2::<C64>::zeros((n, n));
    for j in dim.labels() {
        for l in dim.labels() {
            work[(dim.index(j), dim.index(l))] = chi.get(j, l);
        }
    }
    let mut buf = vec![C64::new(0.0, 0.0); n];
    for mut row in work.rows_mut() {
        buf.iter_mut().zip(row.iter()).for_each(|(b, v)| *b = *v);
        fft.process(&mut buf);
        row.iter_mut().zip(&buf).for_each(|(v, b)| *v = *b);
    }
    for mut col in work.columns_mut() {
        buf.iter_mut().zip(col.iter()).for_each(|(b, v)| *b = *v);
        fft.process(&mut buf);
        col.iter_mut().zip(&buf).for_each(|(v, b)| *v = *b);
    }

    let norm = 1.0 / (n * n) as f64;
    let values = Array2::from_shape_fn((n, n), |(a, b)| {
        work[(dim.index(a as i64 - h), dim.index(b as i64 - h))] * norm
    });
    WignerGrid::from_complex(dim, values)
}

/// FFT path: `O(N² log N)`.
pub fn wigner_fast(state: &StateVector) -> Result<WignerGrid> {
    Ok(wigner_from_characteristic(&characteristic(state)?))
}

/// Wigner function of a density operator, `(1/N) Tr[G(m,n) ρ]`.
///
/// Inputs whose Hermiticity defect is at most [`DENSITY_TOLERANCE`] are
/// symmetrised as `(ρ + ρ†)/2`; larger defects, a trace away from 1, or a
/// negative eigenvalue beyond the tolerance are rejected.
pub fn wigner_density(rho: &ComplexMatrix, basis: &BasisSet) -> Result<WignerGrid> {
    let n = basis.dim().n();
    if rho.size() != n {
        return Err(Error::Shape { expected: n, found: rho.size() });
    }
    let residue = rho.hermiticity_residue();
    if residue > DENSITY_TOLERANCE {
        return Err(Error::Density(format!("Hermiticity defect {residue:.3e}")));
    }
    let sym = (rho + &rho.dagger()).scale(C64::new(0.5, 0.0));
    let trace = sym.trace().re;
    if (trace - 1.0).abs() > DENSITY_TOLERANCE {
        return Err(Error::Density(format!("trace {trace} differs from 1")));
    }
    let shifted = &sym + &ComplexMatrix::identity(n).scale(C64::new(DENSITY_TOLERANCE, 0.0));
    if !shifted.is_positive_definite() {
        return Err(Error::Density("not positive semidefinite".into()));
    }
    let rep = map_operator(&sym, basis)?;
    Ok(WignerGrid::from_complex(basis.dim(), rep.values().clone()))
}

/// `Tr[ρ²] = N Σ ρ_w(m,n)²` for grids normalised so that the marginals are
/// probabilities.
pub fn purity_sum(w: &WignerGrid) -> f64 {
    w.values.iter().map(|v| v * v).sum::<f64>() * w.dim.n() as f64
}

/// Number of sites with `|ρ_w(m,n)| > threshold`.
///
/// # Panics
/// If `threshold` is not strictly positive.
pub fn support_count(w: &WignerGrid, threshold: f64) -> usize {
    assert!(threshold > 0.0, "support threshold must be positive");
    w.values.iter().filter(|v| v.abs() > threshold).count()
}
