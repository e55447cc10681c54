//! Numerical self-checks run by the `basis-check` and `verify-all` commands.

use std::f64::consts::TAU;

use num_complex::Complex64 as C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::basis::{build_all, triple_product_kernel, BasisSet, PhasePointLabel};
use crate::continuum::{angular_exponential_residues, cartesian_exponential_residues, pegg_barnett_map, AngularScaling, CartesianScaling};
use crate::linalg::ComplexMatrix;
use crate::mapping::{commutator_representative, map_operator, product_representative, reconstruct, trace_pair};
use crate::schwinger::{finite_fourier, Dimension, StateVector};
use crate::wigner::{purity_sum, support_count, wigner_fast, wigner_pure, DEFAULT_SUPPORT_THRESHOLD};

/// Largest `N` for which every label triple of the kernel is checked.
pub const FULL_KERNEL_MAX_N: usize = 5;
/// Largest `N` for which product and commutator representatives are checked.
pub const PRODUCT_MAX_N: usize = 7;

#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn bound(name: &str, value: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            passed: value <= tolerance,
            detail: format!("max deviation {value:.3e} (tolerance {tolerance:.0e})"),
        }
    }

    fn skipped(name: &str, why: &str) -> Self {
        Self { name: name.to_string(), passed: true, detail: format!("skipped: {why}") }
    }
}

impl std::fmt::Display for CheckResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Unit trace, Hermiticity, orthogonality and completeness of the basis.
pub fn basis_checks(basis: &BasisSet) -> Vec<CheckResult> {
    let n = basis.dim().n();
    let mut trace: f64 = 0.0;
    let mut herm: f64 = 0.0;
    let mut sum = ComplexMatrix::zeros(n);
    for (_, g) in basis.iter() {
        trace = trace.max((g.trace() - C64::new(1.0, 0.0)).norm());
        herm = herm.max(g.hermiticity_residue());
        sum.add_scaled(C64::new(1.0, 0.0), g);
    }
    let mut ortho: f64 = 0.0;
    for (a, ga) in basis.iter() {
        let ga_dag = ga.dagger();
        for (b, gb) in basis.iter() {
            let expected = if a == b { n as f64 } else { 0.0 };
            ortho = ortho.max((ga_dag.trace_product(gb) - C64::new(expected, 0.0)).norm());
        }
    }
    let complete = sum.max_abs_diff(&ComplexMatrix::identity(n).scale(C64::new(n as f64, 0.0)));
    vec![
        CheckResult::bound("unit trace", trace, 1e-12),
        CheckResult::bound("hermiticity", herm, 1e-12),
        CheckResult::bound("orthogonality", ortho, 1e-10),
        CheckResult::bound("completeness", complete, 1e-10),
    ]
}

/// Triple-product kernel against `Tr[G†GG]`: every triple up to
/// [`FULL_KERNEL_MAX_N`], a random sample beyond.
pub fn kernel_check<R: Rng + ?Sized>(basis: &BasisSet, rng: &mut R) -> CheckResult {
    let dim = basis.dim();
    let labels: Vec<PhasePointLabel> = PhasePointLabel::all(dim).collect();
    let mut worst: f64 = 0.0;
    let mut check = |a: PhasePointLabel, b: PhasePointLabel, c: PhasePointLabel| {
        let oracle = basis.get(a).dagger().dot(basis.get(b)).trace_product(basis.get(c));
        let k = triple_product_kernel(a, b, c, dim).expect("labels in range");
        worst = worst.max((k - oracle).norm());
    };
    let name = if dim.n() <= FULL_KERNEL_MAX_N {
        for &a in &labels {
            for &b in &labels {
                for &c in &labels {
                    check(a, b, c);
                }
            }
        }
        "product kernel (all triples)"
    } else {
        for _ in 0..500 {
            let pick = |rng: &mut R| labels[rng.random_range(0..labels.len())];
            let (a, b, c) = (pick(rng), pick(rng), pick(rng));
            check(a, b, c);
        }
        "product kernel (500 sampled triples)"
    };
    CheckResult::bound(name, worst, 1e-10)
}

/// Round trip, trace rule, reality, product and commutator composition.
pub fn mapping_checks<R: Rng + ?Sized>(basis: &BasisSet, operators: usize, rng: &mut R) -> Vec<CheckResult> {
    let dim = basis.dim();
    let n = dim.n();
    let mut round: f64 = 0.0;
    let mut trace: f64 = 0.0;
    let mut real: f64 = 0.0;
    let ops: Vec<ComplexMatrix> = (0..operators).map(|_| ComplexMatrix::random_hermitian(n, rng)).collect();
    let reps: Vec<_> = ops.iter().map(|a| map_operator(a, basis).expect("matching dimension")).collect();
    for (i, (a, fa)) in ops.iter().zip(&reps).enumerate() {
        round = round.max(reconstruct(fa, basis).expect("matching dimension").max_abs_diff(a));
        real = real.max(fa.imag_residue());
        let (b, fb) = (&ops[(i + 1) % ops.len()], &reps[(i + 1) % ops.len()]);
        trace = trace.max((trace_pair(fa, fb).expect("same dimension") - a.trace_product(b)).norm());
    }
    let mut out = vec![
        CheckResult::bound("mapping round trip", round, 1e-10),
        CheckResult::bound("trace rule", trace, 1e-10),
        CheckResult::bound("hermitian representatives real", real, 1e-12),
    ];
    if n <= PRODUCT_MAX_N && ops.len() >= 2 {
        let (a, b) = (&ops[0], &ops[1]);
        let prod = product_representative(&reps[0], &reps[1], dim).expect("same dimension");
        let prod_oracle = map_operator(&a.dot(b), basis).expect("matching dimension");
        let comm = commutator_representative(&reps[0], &reps[1], dim).expect("same dimension");
        let comm_oracle = map_operator(&(&a.dot(b) - &b.dot(a)), basis).expect("matching dimension");
        out.push(CheckResult::bound("product representative", prod.max_abs_diff(&prod_oracle), 1e-9));
        out.push(CheckResult::bound("commutator representative", comm.max_abs_diff(&comm_oracle), 1e-9));
    } else {
        out.push(CheckResult::skipped("product representative", "N above composition limit"));
    }
    out
}

/// Wigner-function properties over seeded random pure states.
pub fn wigner_checks<R: Rng + ?Sized>(basis: &BasisSet, states: usize, rng: &mut R) -> Vec<CheckResult> {
    let dim = basis.dim();
    let n = dim.n();
    let fourier = finite_fourier(dim);
    let (mut imag, mut trace_form, mut pos, mut mom, mut bound, mut purity, mut fast): (f64, f64, f64, f64, f64, f64, f64) =
        (0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0);
    let mut min_support = usize::MAX;
    for _ in 0..states {
        let state = StateVector::random(dim, rng);
        let w = wigner_pure(&state).expect("normalised state");
        imag = imag.max(w.imag_residue());
        let oracle = map_operator(&state.density(), basis).expect("matching dimension");
        for m in dim.labels() {
            for k in dim.labels() {
                trace_form = trace_form.max((oracle.get(m, k) - C64::new(w.get(m, k), 0.0)).norm());
            }
        }
        let v_amps = fourier.apply(state.amplitudes());
        for (label, p) in dim.labels().zip(w.position_marginal()) {
            pos = pos.max((p - state.amplitude(label).norm_sqr()).abs());
        }
        for (label, p) in dim.labels().zip(w.momentum_marginal()) {
            mom = mom.max((p - v_amps[dim.index(label)].norm_sqr()).abs());
        }
        bound = bound.max(w.values().iter().map(|v| v * v - 1.0).fold(f64::MIN, f64::max));
        purity = purity.max((purity_sum(&w) - 1.0).abs());
        min_support = min_support.min(support_count(&w, DEFAULT_SUPPORT_THRESHOLD));
        fast = fast.max(wigner_fast(&state).expect("normalised state").max_abs_diff(&w));
    }
    vec![
        CheckResult::bound("wigner reality", imag, 1e-12),
        CheckResult::bound("wigner equals (1/N)Tr[G rho]", trace_form, 1e-10),
        CheckResult::bound("U marginal", pos, 1e-10),
        CheckResult::bound("V marginal", mom, 1e-10),
        CheckResult::bound("pointwise bound", bound.max(0.0), 1e-10),
        CheckResult::bound("purity sum", purity, 1e-9),
        CheckResult {
            name: "support count".into(),
            passed: min_support >= n,
            detail: format!("minimum {min_support} sites above {DEFAULT_SUPPORT_THRESHOLD:.0e} (need {n})"),
        },
        CheckResult::bound("fast path equals slow path", fast, 1e-10),
    ]
}

/// Number/phase representatives and the exponential identities.
pub fn continuum_checks(basis: &BasisSet) -> Vec<CheckResult> {
    let dim = basis.dim();
    let n = dim.n() as f64;
    let mut pb: f64 = 0.0;
    for theta_ref in [0.0, TAU / n] {
        let (number, phase) = pegg_barnett_map(theta_ref, dim, basis).expect("valid reference angle");
        for m in dim.labels() {
            for k in dim.labels() {
                pb = pb.max((number.get(m, k) - C64::new(k as f64, 0.0)).norm());
                pb = pb.max((phase.get(m, k) - C64::new(theta_ref + TAU * m as f64 / n, 0.0)).norm());
            }
        }
    }
    let mut expo: f64 = 0.0;
    for delta in [0.5, 1.0, 1.5] {
        let (rv, ru) = cartesian_exponential_residues(&CartesianScaling::unit(dim, delta).expect("delta in range"))
            .expect("valid scaling");
        expo = expo.max(rv).max(ru);
    }
    let (rv, ru) = angular_exponential_residues(&AngularScaling::unit(dim)).expect("valid scaling");
    expo = expo.max(rv).max(ru);
    vec![
        CheckResult::bound("pegg-barnett representatives", pb, 1e-10),
        CheckResult::bound("exponential identities", expo, 1e-12),
    ]
}

/// Every check at one dimension.
pub fn verify_all(dim: Dimension, seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ dim.n() as u64);
    let basis = build_all(dim);
    let mut out = basis_checks(&basis);
    out.push(kernel_check(&basis, &mut rng));
    out.extend(mapping_checks(&basis, 5, &mut rng));
    out.extend(wigner_checks(&basis, 10, &mut rng));
    out.extend(continuum_checks(&basis));
    out
}
