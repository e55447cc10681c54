//! The Schwinger unitary pair on an odd-dimensional state space.
//!
//! Conventions: `U` is diagonal in the computational basis `{|u_k⟩}` with
//! eigenvalue `ω^k`, `ω = exp(2πi/N)`, and `V` is the cyclic shift
//! `V|u_k⟩ = |u_{k+1 mod N}⟩`. Together they satisfy `U V = ω V U`.
//!
//! Phase-space labels run over the symmetric range `[-h, h]`, `h = (N-1)/2`.
//! A label `k` lives at array index `k mod N`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Odd state-space dimension `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimension(usize);

impl Dimension {
    pub fn new(n: i64) -> Result<Self> {
        if n < 1 || n % 2 == 0 {
            return Err(Error::Dimension(n));
        }
        Ok(Self(n as usize))
    }

    #[inline]
    pub fn n(self) -> usize {
        self.0
    }

    #[inline]
    pub fn h(self) -> i64 {
        (self.0 as i64 - 1) / 2
    }

    /// `ε = sqrt(2π/N)`
    pub fn epsilon(self) -> f64 {
        (TAU / self.0 as f64).sqrt()
    }

    /// `ω^k`
    pub fn omega_pow(self, k: i64) -> C64 {
        let r = k.rem_euclid(self.0 as i64) as f64;
        C64::from_polar(1.0, TAU * r / self.0 as f64)
    }

    /// `exp(iπ k / N)` evaluated with `k` reduced mod `2N`.
    pub fn half_phase(self, k: i64) -> C64 {
        let two_n = 2 * self.0 as i64;
        let r = k.rem_euclid(two_n) as f64;
        C64::from_polar(1.0, PI * r / self.0 as f64)
    }

    /// Labels `-h..=h` in increasing order.
    pub fn labels(self) -> impl Iterator<Item = i64> + Clone {
        let h = self.h();
        -h..=h
    }

    /// Array index of a label (any integer, taken mod `N`).
    #[inline]
    pub fn index(self, label: i64) -> usize {
        label.rem_euclid(self.0 as i64) as usize
    }

    /// Canonical representative of `k mod N` in `[-h, h]`.
    #[inline]
    pub fn reduce(self, k: i64) -> i64 {
        let h = self.h();
        (k + h).rem_euclid(self.0 as i64) - h
    }

    pub fn contains(self, label: i64) -> bool {
        label.abs() <= self.h()
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `U = diag(1, ω, ω², …, ω^{N-1})`
pub fn build_u(dim: Dimension) -> ComplexMatrix {
    let diag: Vec<C64> = (0..dim.n() as i64).map(|k| dim.omega_pow(k)).collect();
    ComplexMatrix::from_diag(&diag)
}

/// Cyclic shift `V|u_k⟩ = |u_{k+1 mod N}⟩`.
pub fn build_v(dim: Dimension) -> ComplexMatrix {
    let n = dim.n();
    let mut v = ComplexMatrix::zeros(n);
    for k in 0..n {
        v.set((k + 1) % n, k, C64::new(1.0, 0.0));
    }
    v
}

/// Finite Fourier transform between the `U` and `V` eigenbases.
///
/// Row `j` of `F` is `⟨v_j|`, where `V|v_j⟩ = ω^j |v_j⟩`; the columns of
/// `F†` are the `V` eigenvectors and `F V F† = diag(ω^j)`.
pub fn finite_fourier(dim: Dimension) -> ComplexMatrix {
    let n = dim.n();
    let norm = 1.0 / (n as f64).sqrt();
    let mut f = ComplexMatrix::zeros(n);
    for j in 0..n {
        for k in 0..n {
            f.set(j, k, dim.omega_pow((j * k) as i64) * norm);
        }
    }
    f
}

/// Amplitudes of `|v_j⟩` in the `U` eigenbasis: `ω^{-jk}/√N`.
pub fn v_eigenvector(j: i64, dim: Dimension) -> Vec<C64> {
    let norm = 1.0 / (dim.n() as f64).sqrt();
    (0..dim.n() as i64).map(|k| dim.omega_pow(-j * k) * norm).collect()
}

/// Integer modular phase `φ(m, n; N) = N⌊m/N⌋⌊n/N⌋ - m⌊n/N⌋ - n⌊m/N⌋`.
pub fn modular_phase(m: i64, n: i64, dim: Dimension) -> i64 {
    let big = dim.n() as i64;
    let im = m.div_euclid(big);
    let in_ = n.div_euclid(big);
    big * im * in_ - m * in_ - n * im
}

/// Kronecker delta modulo `N`.
pub fn mod_delta(a: i64, b: i64, dim: Dimension) -> bool {
    (a - b).rem_euclid(dim.n() as i64) == 0
}

/// State amplitudes `ψ_k` in the `U` eigenbasis, array index `k ∈ [0, N)`.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector {
    dim: Dimension,
    amplitudes: Vec<C64>,
}

impl StateVector {
    /// Wraps raw amplitudes; the norm is not adjusted.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        let dim = Dimension::new(amplitudes.len() as i64)?;
        Ok(Self { dim, amplitudes })
    }

    /// Wraps amplitudes and rescales them to unit norm.
    pub fn normalized(amplitudes: Vec<C64>) -> Result<Self> {
        let mut state = Self::new(amplitudes)?;
        let norm = state.norm();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::Normalization { norm });
        }
        state.amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(state)
    }

    /// `|u_k⟩`
    pub fn u_eigenstate(k: i64, dim: Dimension) -> Self {
        let mut amplitudes = vec![C64::new(0.0, 0.0); dim.n()];
        amplitudes[dim.index(k)] = C64::new(1.0, 0.0);
        Self { dim, amplitudes }
    }

    /// `|v_j⟩`
    pub fn v_eigenstate(j: i64, dim: Dimension) -> Self {
        Self { dim, amplitudes: v_eigenvector(j, dim) }
    }

    /// Haar-random pure state.
    pub fn random<R: Rng + ?Sized>(dim: Dimension, rng: &mut R) -> Self {
        let amplitudes: Vec<C64> = (0..dim.n())
            .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
            .collect();
        Self::normalized(amplitudes).expect("gaussian sample has nonzero norm")
    }

    pub fn dim(&self) -> Dimension {
        self.dim
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    /// Amplitude at a label, taken mod `N`.
    pub fn amplitude(&self, label: i64) -> C64 {
        self.amplitudes[self.dim.index(label)]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `|ψ⟩⟨ψ|`
    pub fn density(&self) -> ComplexMatrix {
        ComplexMatrix::outer(&self.amplitudes, &self.amplitudes)
    }

    /// Multiply every amplitude by `exp(iθ)`.
    pub fn with_global_phase(&self, theta: f64) -> Self {
        let phase = C64::from_polar(1.0, theta);
        Self { dim: self.dim, amplitudes: self.amplitudes.iter().map(|a| a * phase).collect() }
    }
}
