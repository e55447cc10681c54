//! Continuum limits of the discrete phase space.
//!
//! With `ε = sqrt(2π/N)` the Schwinger pair is written as exponentials of
//! Hermitian operators built from the `U` and `V` eigenprojectors.
//!
//! * Cartesian: `Q = Σ j ε^{2-δ} q0 |u_j⟩⟨u_j|`, `P = Σ j ε^δ p0 |v_j⟩⟨v_j|`,
//!   `U = exp(iε^δ Q/q0)`, `V = exp(iε^{2-δ} P/p0)`, `δ ∈ (0, 2)`. Phase-space
//!   site `(m, n)` sits at `q = Δq m`, `p = Δp n` with `Δq Δp = 2π p0 q0 / N`.
//! * Angular (`δ = 0`): `Θ = Σ j ε² θ0 |u_j⟩⟨u_j|`, `M = Σ j m0 |v_j⟩⟨v_j|`,
//!   `U = exp(iΘ/θ0)`, `V = exp(iε² M/m0)`. Angles have spacing `2πθ0/N` and
//!   the angular momentum stays integer.
//!
//! The convergence studies compare rescaled discrete Wigner grids with the
//! corresponding continuum Wigner functions at `ħ = p0 q0 = m0 θ0 = 1`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;

use crate::basis::BasisSet;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::mapping::{symbol, PhaseSpaceFunction};
use crate::quadrature::GaussLegendre;
use crate::schwinger::{build_u, build_v, finite_fourier, v_eigenvector, Dimension, StateVector};
use crate::wigner::wigner_fast;

/// Grid parameters for the Cartesian limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CartesianScaling {
    pub dim: Dimension,
    pub delta: f64,
    pub p0: f64,
    pub q0: f64,
}

impl CartesianScaling {
    pub fn new(dim: Dimension, delta: f64, p0: f64, q0: f64) -> Result<Self> {
        if !(delta > 0.0 && delta < 2.0) {
            return Err(Error::Scaling(delta));
        }
        if !(p0 > 0.0 && q0 > 0.0) {
            return Err(Error::Parameter(format!("p0 = {p0} and q0 = {q0} must be positive")));
        }
        Ok(Self { dim, delta, p0, q0 })
    }

    /// `p0 = q0 = 1`, so that `ħ = 1`.
    pub fn unit(dim: Dimension, delta: f64) -> Result<Self> {
        Self::new(dim, delta, 1.0, 1.0)
    }

    /// `Δq = q0 ε^{2-δ}`
    pub fn dq(&self) -> f64 {
        self.q0 * self.dim.epsilon().powf(2.0 - self.delta)
    }

    /// `Δp = p0 ε^δ`
    pub fn dp(&self) -> f64 {
        self.p0 * self.dim.epsilon().powf(self.delta)
    }
}

/// Grid parameters for the angular limit.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AngularScaling {
    pub dim: Dimension,
    pub theta0: f64,
    pub m0: f64,
}

impl AngularScaling {
    pub fn new(dim: Dimension, theta0: f64, m0: f64) -> Result<Self> {
        if !(theta0 > 0.0 && m0 > 0.0) {
            return Err(Error::Parameter(format!("theta0 = {theta0} and m0 = {m0} must be positive")));
        }
        Ok(Self { dim, theta0, m0 })
    }

    /// Radians and `ħ = 1`.
    pub fn unit(dim: Dimension) -> Self {
        Self { dim, theta0: 1.0, m0: 1.0 }
    }

    /// `Δθ = θ0 ε² = 2πθ0/N`
    pub fn dtheta(&self) -> f64 {
        self.theta0 * self.dim.epsilon().powi(2)
    }
}

/// `Σ_j f(j) |v_j⟩⟨v_j|`
fn v_spectral(dim: Dimension, f: impl Fn(i64) -> f64) -> ComplexMatrix {
    let fourier = finite_fourier(dim);
    let mut diag = vec![C64::new(0.0, 0.0); dim.n()];
    for j in dim.labels() {
        diag[dim.index(j)] = C64::new(f(j), 0.0);
    }
    fourier.dagger().dot(&ComplexMatrix::from_diag(&diag)).dot(&fourier)
}

/// `Σ_j f(j) |u_j⟩⟨u_j|`
fn u_spectral(dim: Dimension, f: impl Fn(i64) -> f64) -> ComplexMatrix {
    let mut diag = vec![C64::new(0.0, 0.0); dim.n()];
    for j in dim.labels() {
        diag[dim.index(j)] = C64::new(f(j), 0.0);
    }
    ComplexMatrix::from_diag(&diag)
}

/// Momentum and position operators `(P, Q)`.
pub fn build_pq(scaling: &CartesianScaling) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let s = CartesianScaling::new(scaling.dim, scaling.delta, scaling.p0, scaling.q0)?;
    let (dp, dq) = (s.dp(), s.dq());
    Ok((v_spectral(s.dim, |j| j as f64 * dp), u_spectral(s.dim, |j| j as f64 * dq)))
}

/// Angular momentum and angle operators `(M, Θ)`.
pub fn build_m_theta(scaling: &AngularScaling) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let s = AngularScaling::new(scaling.dim, scaling.theta0, scaling.m0)?;
    let dtheta = s.dtheta();
    Ok((v_spectral(s.dim, |j| j as f64 * s.m0), u_spectral(s.dim, |j| j as f64 * dtheta)))
}

/// Largest entrywise deviations `(|exp(iε^{2-δ}P/p0) - V|, |exp(iε^δ Q/q0) - U|)`,
/// with the exponentials computed by [`ComplexMatrix::expm`].
pub fn cartesian_exponential_residues(scaling: &CartesianScaling) -> Result<(f64, f64)> {
    let (p, q) = build_pq(scaling)?;
    let eps = scaling.dim.epsilon();
    let v_gen = p.scale(C64::new(0.0, eps.powf(2.0 - scaling.delta) / scaling.p0));
    let u_gen = q.scale(C64::new(0.0, eps.powf(scaling.delta) / scaling.q0));
    Ok((
        v_gen.expm().max_abs_diff(&build_v(scaling.dim)),
        u_gen.expm().max_abs_diff(&build_u(scaling.dim)),
    ))
}

/// Largest entrywise deviations `(|exp(iε² M/m0) - V|, |exp(iΘ/θ0) - U|)`.
pub fn angular_exponential_residues(scaling: &AngularScaling) -> Result<(f64, f64)> {
    let (m, theta) = build_m_theta(scaling)?;
    let eps2 = scaling.dim.epsilon().powi(2);
    let v_gen = m.scale(C64::new(0.0, eps2 / scaling.m0));
    let u_gen = theta.scale(C64::new(0.0, 1.0 / scaling.theta0));
    Ok((
        v_gen.expm().max_abs_diff(&build_v(scaling.dim)),
        u_gen.expm().max_abs_diff(&build_u(scaling.dim)),
    ))
}

/// Wigner function of the normalised Gaussian `ψ(q) ∝ exp(-q²/2σ²)` at `ħ = 1`:
/// `(1/π) exp(-q²/σ² - σ²p²)`.
pub fn continuum_wigner_cartesian(q: f64, p: f64, sigma: f64) -> Result<f64> {
    if !(sigma > 0.0) {
        return Err(Error::Parameter(format!("sigma must be positive, got {sigma}")));
    }
    Ok((-(q * q) / (sigma * sigma) - sigma * sigma * p * p).exp() / PI)
}

/// Per-dimension errors of a convergence study.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConvergenceReport {
    #[serde(rename = "N")]
    pub dims: Vec<usize>,
    pub errors: Vec<f64>,
    pub norm: String,
}

/// Name of the error norm recorded in reports.
pub const MAX_ABS_NORM: &str = "max_abs";

impl ConvergenceReport {
    pub fn is_strictly_decreasing(&self) -> bool {
        self.errors.windows(2).all(|w| w[1] < w[0])
    }

    pub fn final_error(&self) -> Option<f64> {
        self.errors.last().copied()
    }

    /// `log(e_i/e_{i+1}) / log(N_{i+1}/N_i)` for consecutive pairs.
    pub fn observed_orders(&self) -> Vec<f64> {
        self.errors
            .windows(2)
            .zip(self.dims.windows(2))
            .map(|(e, n)| (e[0] / e[1]).ln() / (n[1] as f64 / n[0] as f64).ln())
            .collect()
    }
}

/// Discretised Gaussian `ψ_j ∝ exp(-q_j²/2σ²)` on the `Q` grid.
pub fn gaussian_state(scaling: &CartesianScaling, sigma: f64) -> Result<StateVector> {
    let dim = scaling.dim;
    let dq = scaling.dq();
    let mut amps = vec![C64::new(0.0, 0.0); dim.n()];
    for j in dim.labels() {
        let q = j as f64 * dq;
        amps[dim.index(j)] = C64::new((-(q * q) / (2.0 * sigma * sigma)).exp(), 0.0);
    }
    StateVector::normalized(amps)
}

/// Max error of the rescaled discrete Gaussian Wigner grid on the central
/// half `|m|, |n| ≤ h/2`.
pub fn cartesian_error(sigma: f64, scaling: &CartesianScaling) -> Result<f64> {
    let dim = scaling.dim;
    let (dq, dp) = (scaling.dq(), scaling.dp());
    let max_sigma = dim.n() as f64 * dq / 8.0;
    if !(sigma >= dq && sigma <= max_sigma) {
        return Err(Error::Resolution { sigma, min: dq, max: max_sigma, n: dim.n() });
    }
    let grid = wigner_fast(&gaussian_state(scaling, sigma)?)?;
    let cell = dq * dp;
    let h = dim.h();
    let mut worst: f64 = 0.0;
    for m in dim.labels().filter(|m| 2 * m.abs() <= h) {
        for n in dim.labels().filter(|n| 2 * n.abs() <= h) {
            let reference = continuum_wigner_cartesian(m as f64 * dq, n as f64 * dp, sigma)?;
            worst = worst.max((grid.get(m, n) / cell - reference).abs());
        }
    }
    Ok(worst)
}

/// Convergence of the discrete Gaussian Wigner function towards the
/// Weyl-Wigner Gaussian (`p0 = q0 = 1`).
pub fn cartesian_convergence(sigma: f64, dims: &[Dimension], delta: f64) -> Result<ConvergenceReport> {
    if !(sigma > 0.0) {
        return Err(Error::Parameter(format!("sigma must be positive, got {sigma}")));
    }
    let errors = dims
        .par_iter()
        .map(|&dim| cartesian_error(sigma, &CartesianScaling::unit(dim, delta)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceReport { dims: dims.iter().map(|d| d.n()).collect(), errors, norm: MAX_ABS_NORM.into() })
}

/// Superposition `Σ_m c_m |v_m⟩` of angular momentum eigenstates with
/// `m ∈ [-M, M]`.
#[derive(Clone, Debug, PartialEq)]
pub struct AngularState {
    coeffs: Vec<C64>,
}

impl AngularState {
    /// `coeffs[i]` is the amplitude of `m = i - M`; the length must be odd
    /// and the coefficients normalised.
    pub fn new(coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::Parameter(format!(
                "expected an odd number of coefficients centred on m = 0, got {}",
                coeffs.len()
            )));
        }
        let norm: f64 = coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        if (norm - 1.0).abs() > 1e-8 {
            return Err(Error::Normalization { norm });
        }
        Ok(Self { coeffs })
    }

    pub fn m_max(&self) -> usize {
        self.coeffs.len() / 2
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, C64)> + '_ {
        let m_max = self.m_max() as i64;
        self.coeffs.iter().enumerate().map(move |(i, c)| (i as i64 - m_max, *c))
    }

    /// Discrete state on `N` levels.
    pub fn embed(&self, dim: Dimension) -> Result<StateVector> {
        if self.m_max() as i64 >= dim.h() {
            return Err(Error::Embedding { m_max: self.m_max(), h: dim.h() });
        }
        let mut amps = vec![C64::new(0.0, 0.0); dim.n()];
        for (m, c) in self.terms() {
            for (a, v) in amps.iter_mut().zip(v_eigenvector(m, dim)) {
                *a += c * v;
            }
        }
        StateVector::new(amps)
    }

    /// Continuum wave function `ψ(θ) = Σ_m c_m e^{-imθ}/√(2π)`, the limit of
    /// `⟨u_k|ψ⟩ / √Δθ` at `θ = 2πk/N`.
    pub fn wave_function(&self, theta: f64) -> C64 {
        let norm = 1.0 / TAU.sqrt();
        self.terms().map(|(m, c)| c * C64::from_polar(norm, -(m as f64) * theta)).sum()
    }

    /// `W(θ, l) = (1/2π) ∫_{-π}^{π} dα ψ*(θ - α/2) ψ(θ + α/2) e^{ilα}`
    /// by Gauss-Legendre quadrature.
    pub fn wigner_reference(&self, rule: &GaussLegendre, theta: f64, l: i64) -> C64 {
        let integral: C64 = rule.integrate(-PI, PI, |alpha| {
            self.wave_function(theta - alpha / 2.0).conj()
                * self.wave_function(theta + alpha / 2.0)
                * C64::from_polar(1.0, l as f64 * alpha)
        });
        integral / TAU
    }
}

/// Quadrature rule adequate for superpositions up to `m_max`.
pub fn angular_rule(m_max: usize) -> GaussLegendre {
    GaussLegendre::new(64 + 8 * m_max)
}

/// Max error of `ρ_w(m, l)/Δθ` against the angular Wigner function over all
/// angle sites and `|l| ≤ M`.
pub fn angular_error(state: &AngularState, dim: Dimension) -> Result<f64> {
    let grid = wigner_fast(&state.embed(dim)?)?;
    let scaling = AngularScaling::unit(dim);
    let dtheta = scaling.dtheta();
    let rule = angular_rule(state.m_max());
    let m_max = state.m_max() as i64;
    let mut worst: f64 = 0.0;
    for k in dim.labels() {
        let theta = k as f64 * dtheta;
        for l in -m_max..=m_max {
            let reference = state.wigner_reference(&rule, theta, l);
            worst = worst.max((C64::new(grid.get(k, l) / dtheta, 0.0) - reference).norm());
        }
    }
    Ok(worst)
}

/// Convergence of the discrete Wigner function of an angular momentum
/// superposition towards the angular Wigner function (`θ0 = m0 = 1`).
pub fn angular_convergence(coeffs: &[C64], dims: &[Dimension]) -> Result<ConvergenceReport> {
    let state = AngularState::new(coeffs.to_vec())?;
    let errors = dims
        .par_iter()
        .map(|&dim| angular_error(&state, dim))
        .collect::<Result<Vec<_>>>()?;
    Ok(ConvergenceReport { dims: dims.iter().map(|d| d.n()).collect(), errors, norm: MAX_ABS_NORM.into() })
}

/// Number and phase representatives in the Pegg-Barnett scheme.
///
/// The number operator is `M` at `m0 = 1`, the phase operator is
/// `Θ + θ_ref` at `θ0 = 1`. Both are returned as `Tr[G(m,n) Ô]`, the
/// normalisation in which the identity maps to 1, so that they read `n` and
/// `θ_ref + 2πm/N`.
pub fn pegg_barnett_map(
    theta_ref: f64,
    dim: Dimension,
    basis: &BasisSet,
) -> Result<(PhaseSpaceFunction, PhaseSpaceFunction)> {
    if basis.dim() != dim {
        return Err(Error::Shape { expected: dim.n(), found: basis.dim().n() });
    }
    let steps = theta_ref * dim.n() as f64 / TAU;
    if !steps.is_finite() || (steps - steps.round()).abs() > 1e-9 {
        return Err(Error::ReferenceAngle(theta_ref));
    }
    let (number, theta) = build_m_theta(&AngularScaling::unit(dim))?;
    let phase = &theta + &ComplexMatrix::identity(dim.n()).scale(C64::new(theta_ref, 0.0));
    Ok((symbol(&number, basis)?, symbol(&phase, basis)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::build_all;

    fn dim(n: i64) -> Dimension {
        Dimension::new(n).unwrap()
    }

    #[test]
    fn q_in_label_order_n3() {
        let d = dim(3);
        let s = CartesianScaling::unit(d, 1.0).unwrap();
        let (p, q) = build_pq(&s).unwrap();
        let eps = d.epsilon();
        for (j, expected) in [(-1, -eps), (0, 0.0), (1, eps)] {
            let i = d.index(j);
            assert!((q.get(i, i) - C64::new(expected, 0.0)).norm() < 1e-15);
        }
        assert!(p.hermiticity_residue() < 1e-14);
        assert!(q.hermiticity_residue() < 1e-14);
    }

    #[test]
    fn delta_outside_open_interval() {
        for delta in [0.0, 2.0, -1.0, 2.5, f64::NAN] {
            assert!(matches!(CartesianScaling::unit(dim(3), delta), Err(Error::Scaling(_))));
        }
        let bad = CartesianScaling { dim: dim(3), delta: 2.0, p0: 1.0, q0: 1.0 };
        assert!(build_pq(&bad).is_err());
    }

    #[test]
    fn exponentials_reproduce_schwinger_pair() {
        for n in [3, 7, 21] {
            for delta in [0.5, 1.0, 1.5] {
                let s = CartesianScaling::new(dim(n), delta, 2.0, 0.5).unwrap();
                let (rv, ru) = cartesian_exponential_residues(&s).unwrap();
                assert!(rv < 1e-12 && ru < 1e-12, "N={n} δ={delta}: {rv:e} {ru:e}");
            }
            let (rv, ru) = angular_exponential_residues(&AngularScaling::unit(dim(n))).unwrap();
            assert!(rv < 1e-12 && ru < 1e-12);
        }
    }

    #[test]
    fn angle_and_momentum_spectra_n3() {
        let d = dim(3);
        let (m, theta) = build_m_theta(&AngularScaling::unit(d)).unwrap();
        for (j, expected) in [(-1, -TAU / 3.0), (0, 0.0), (1, TAU / 3.0)] {
            let i = d.index(j);
            assert!((theta.get(i, i).re - expected).abs() < 1e-15);
        }
        // ⟨v_j|M|v_j⟩ = j
        let f = finite_fourier(d);
        let diag = f.dot(&m).dot(&f.dagger());
        for j in d.labels() {
            let i = d.index(j);
            assert!((diag.get(i, i) - C64::new(j as f64, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn gaussian_reference_values() {
        assert!((continuum_wigner_cartesian(0.0, 0.0, 1.0).unwrap() - 1.0 / PI).abs() < 1e-16);
        let a = continuum_wigner_cartesian(0.7, -1.3, 0.8).unwrap();
        let b = continuum_wigner_cartesian(-0.7, 1.3, 0.8).unwrap();
        assert_eq!(a, b);
        assert!(continuum_wigner_cartesian(0.0, 0.0, 0.0).is_err());
        assert!(continuum_wigner_cartesian(0.0, 0.0, -1.0).is_err());
    }

    #[test]
    fn gaussian_reference_integrates_to_one() {
        let rule = GaussLegendre::new(80);
        let sigma = 1.3;
        let total: f64 = rule.integrate(-12.0, 12.0, |q| {
            rule.integrate(-12.0, 12.0, |p| continuum_wigner_cartesian(q, p, sigma).unwrap())
        });
        assert!((total - 1.0).abs() < 1e-6);
    }

    #[test]
    fn resolution_limits() {
        let d = dim(21);
        assert!(matches!(cartesian_convergence(0.1, &[d], 1.0), Err(Error::Resolution { .. })));
        assert!(matches!(cartesian_convergence(5.0, &[d], 1.0), Err(Error::Resolution { .. })));
        let single = cartesian_convergence(1.0, &[d], 1.0).unwrap();
        assert_eq!(single.dims, vec![21]);
        assert_eq!(single.errors.len(), 1);
    }

    #[test]
    fn angular_eigenstate_is_flat() {
        let state = AngularState::new(vec![C64::new(1.0, 0.0)]).unwrap();
        let rule = angular_rule(0);
        for theta in [-3.0, -0.5, 0.0, 1.1, 3.1] {
            let w0 = state.wigner_reference(&rule, theta, 0);
            assert!((w0 - C64::new(1.0 / TAU, 0.0)).norm() < 1e-14);
            let w1 = state.wigner_reference(&rule, theta, 1);
            assert!(w1.norm() < 1e-14);
        }
        for n in [5, 21] {
            assert!(angular_error(&state, dim(n)).unwrap() < 1e-10);
        }
    }

    /// Closed form for two adjacent components: the cross term integrates
    /// `e^{i(l - 1/2)α}` over `[-π, π]`.
    #[test]
    fn angular_reference_matches_closed_form() {
        let c = C64::new(0.6, 0.0);
        let s = C64::new(0.0, 0.8);
        let state = AngularState::new(vec![C64::new(0.0, 0.0), c, s]).unwrap();
        let rule = angular_rule(1);
        for theta in [-2.0, 0.0, 0.4, 2.9] {
            for l in -1..=1i64 {
                // ψ*(θ-α/2)ψ(θ+α/2) = (1/2π) Σ c*_a c_b e^{i(a-b)θ} e^{-i(a+b)α/2}
                let mut expected = C64::new(0.0, 0.0);
                for (a, ca) in [(0i64, c), (1, s)] {
                    for (b, cb) in [(0i64, c), (1, s)] {
                        let freq = l as f64 - (a + b) as f64 / 2.0;
                        let integral = if freq == 0.0 { TAU } else { 2.0 * (PI * freq).sin() / freq };
                        expected += ca.conj() * cb * C64::from_polar(1.0, (a - b) as f64 * theta) * integral
                            / (TAU * TAU);
                    }
                }
                assert!((state.wigner_reference(&rule, theta, l) - expected).norm() < 1e-13);
            }
        }
    }

    #[test]
    fn angular_state_validation() {
        assert!(AngularState::new(vec![C64::new(1.0, 0.0); 2]).is_err());
        assert!(AngularState::new(vec![C64::new(1.0, 0.0); 3]).is_err());
        let wide = AngularState::new(vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0)]).unwrap();
        assert!(matches!(wide.embed(dim(3)), Err(Error::Embedding { .. })));
        assert!(wide.embed(dim(5)).is_ok());
    }

    #[test]
    fn global_phase_does_not_change_grid() {
        let d = dim(21);
        let c = vec![C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
        let rotated = vec![C64::new(0.0, 0.0), C64::from_polar(1.0, 0.9), C64::new(0.0, 0.0)];
        let a = wigner_fast(&AngularState::new(c).unwrap().embed(d).unwrap()).unwrap();
        let b = wigner_fast(&AngularState::new(rotated).unwrap().embed(d).unwrap()).unwrap();
        assert!(a.max_abs_diff(&b) < 1e-15);
    }

    #[test]
    fn pegg_barnett_n3() {
        let d = dim(3);
        let basis = build_all(d);
        let (number, phase) = pegg_barnett_map(0.0, d, &basis).unwrap();
        for m in d.labels() {
            for n in d.labels() {
                assert!((number.get(m, n) - C64::new(n as f64, 0.0)).norm() < 1e-10);
                assert!((phase.get(m, n) - C64::new(TAU * m as f64 / 3.0, 0.0)).norm() < 1e-10);
            }
        }
        let (_, shifted) = pegg_barnett_map(TAU / 3.0, d, &basis).unwrap();
        for m in d.labels() {
            assert!((shifted.get(m, 0).re - (TAU / 3.0 + TAU * m as f64 / 3.0)).abs() < 1e-10);
        }
        assert!(matches!(pegg_barnett_map(0.5, d, &basis), Err(Error::ReferenceAngle(_))));
        assert!(pegg_barnett_map(0.0, dim(5), &basis).is_err());
    }

    #[test]
    fn pegg_barnett_n1() {
        let d = dim(1);
        let basis = build_all(d);
        let (number, phase) = pegg_barnett_map(TAU, d, &basis).unwrap();
        assert!(number.get(0, 0).norm() < 1e-15);
        assert!((phase.get(0, 0) - C64::new(TAU, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn report_helpers() {
        let r = ConvergenceReport { dims: vec![10, 20, 40], errors: vec![1.0, 0.25, 0.0625], norm: MAX_ABS_NORM.into() };
        assert!(r.is_strictly_decreasing());
        for order in r.observed_orders() {
            assert!((order - 2.0).abs() < 1e-12);
        }
        let flat = ConvergenceReport { dims: vec![1, 2], errors: vec![1.0, 1.0], norm: MAX_ABS_NORM.into() };
        assert!(!flat.is_strictly_decreasing());
    }
}
