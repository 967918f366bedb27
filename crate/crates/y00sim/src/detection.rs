//! Quantum-detection bounds and measurement-outcome samplers.
//!
//! Optimal measurements are never materialized as operators; each bound is
//! evaluated spectrally from coherent-state overlaps. The samplers model the
//! two receivers the pipeline uses: heterodyne detection (outcome density
//! `(1/pi) exp(-|b - a|^2)`, variance 1/2 per quadrature) and direct photon
//! counting (Poisson with mean `efficiency * |a|^2`).

use ndarray::Array2;
use ndarray_linalg::{EigValsh, UPLO};
use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Normal, Poisson};
use std::f64::consts::{PI, SQRT_2, TAU};

use crate::coherent::{
    overlap, signed_combination_spectrum, CoherentAmplitude, MixtureState, PSD_CLIP,
};
use crate::protocol::{Constellation, Scheme};
use crate::{exec, Error, Result};

/// Binary state-discrimination instance: distinguish `rho0` (prior `p0`)
/// from `rho1` (prior `p1`).
#[derive(Debug, Clone)]
pub struct BinaryDiscriminationProblem {
    pub rho0: MixtureState,
    pub rho1: MixtureState,
    pub p0: f64,
    pub p1: f64,
}

impl BinaryDiscriminationProblem {
    pub fn new(rho0: MixtureState, rho1: MixtureState, p0: f64, p1: f64) -> Result<Self> {
        if !(p0 >= 0.0 && p1 >= 0.0) || (p0 + p1 - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidInput(format!(
                "priors ({p0}, {p1}) must be nonnegative and sum to 1"
            )));
        }
        Ok(Self { rho0, rho1, p0, p1 })
    }

    pub fn equal_priors(rho0: MixtureState, rho1: MixtureState) -> Result<Self> {
        Self::new(rho0, rho1, 0.5, 0.5)
    }
}

/// One sampled measurement result.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeasurementOutcome {
    /// Heterodyne point in the complex plane.
    HeterodynePoint(Complex64),
    /// Direct-detection photon count.
    PhotonCount(u64),
}

fn ensemble_order_key(m: &MixtureState, prior: f64) -> Vec<u64> {
    let mut key = Vec::with_capacity(1 + 3 * m.len());
    key.push(prior.to_bits());
    for (s, w) in m.states().iter().zip(m.weights()) {
        key.push(w.to_bits());
        key.push(s.re().to_bits());
        key.push(s.im().to_bits());
    }
    key
}

/// Minimum average error probability for the binary discrimination problem:
/// `(1 - ||p1 rho1 - p0 rho0||_1) / 2`, always in `[0, 1/2]`.
///
/// The trace norm is the absolute eigenvalue sum of the signed combination
/// over the pooled state list. The two ensembles are put in a canonical
/// order first, so swapping `(rho0, p0)` with `(rho1, p1)` returns the exact
/// same value.
pub fn helstrom_error(problem: &BinaryDiscriminationProblem) -> Result<f64> {
    let key0 = ensemble_order_key(&problem.rho0, problem.p0);
    let key1 = ensemble_order_key(&problem.rho1, problem.p1);
    let (neg, pneg, pos, ppos) = if key0 <= key1 {
        (&problem.rho0, problem.p0, &problem.rho1, problem.p1)
    } else {
        (&problem.rho1, problem.p1, &problem.rho0, problem.p0)
    };
    let mut states = Vec::with_capacity(neg.len() + pos.len());
    let mut coeffs = Vec::with_capacity(neg.len() + pos.len());
    for (&s, &w) in neg.states().iter().zip(neg.weights()) {
        states.push(s);
        coeffs.push(-pneg * w);
    }
    for (&s, &w) in pos.states().iter().zip(pos.weights()) {
        states.push(s);
        coeffs.push(ppos * w);
    }
    let spectrum = signed_combination_spectrum(&states, &coeffs)?;
    let trace_norm: f64 = spectrum.eigenvalues.iter().map(|l| l.abs()).sum();
    Ok((0.5 * (1.0 - trace_norm)).clamp(0.0, 0.5))
}

/// Ring-constellation first Gram row: states `r exp(2 pi i d / n)`.
fn ring_gram_row(count: usize, radius: f64) -> Vec<Complex64> {
    let r2 = radius * radius;
    (0..count)
        .map(|d| {
            let theta = TAU * d as f64 / count as f64;
            // <a_0|a_d> = exp(r^2 (e^{i theta} - 1))
            Complex64::new(r2 * (theta.cos() - 1.0), r2 * theta.sin()).exp()
        })
        .collect()
}

/// Eigenvalues of a Hermitian circulant matrix from its first row:
/// `lambda_m = sum_d row[d] exp(2 pi i m d / n)`.
fn circulant_eigenvalues(row: &[Complex64]) -> Result<Vec<f64>> {
    let n = row.len();
    let twiddle: Vec<Complex64> = (0..n)
        .map(|t| Complex64::from_polar(1.0, TAU * t as f64 / n as f64))
        .collect();
    let lambdas = exec::map_indexed(n, |m| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (d, &v) in row.iter().enumerate() {
            acc += v * twiddle[(m * d) % n];
        }
        acc
    });
    let mut out = Vec::with_capacity(n);
    for l in lambdas {
        if l.im.abs() > 1e-9 * (1.0 + l.re.abs()) {
            return Err(Error::Eigensolver(format!(
                "circulant spectrum not real: imaginary part {}",
                l.im
            )));
        }
        if l.re < PSD_CLIP * n as f64 {
            return Err(Error::Eigensolver(format!(
                "circulant Gram eigenvalue {} below PSD tolerance",
                l.re
            )));
        }
        out.push(l.re.max(0.0));
    }
    Ok(out)
}

/// Helstrom error for a signed coefficient pattern over the full `count`-point
/// ring at `radius`.
///
/// Because the ring Gram matrix is circulant, its eigenbasis is the discrete
/// Fourier basis, so `G^(1/2) diag(c) G^(1/2)` reduces to one dense Hermitian
/// eigenproblem instead of two plus a matrix product. Values match the
/// generic [`helstrom_error`] route to working precision.
pub(crate) fn psk_ring_signed_helstrom(count: usize, radius: f64, coeffs: &[f64]) -> Result<f64> {
    assert_eq!(coeffs.len(), count);
    let n = count;
    let lambdas = circulant_eigenvalues(&ring_gram_row(n, radius))?;
    let sqrt_l: Vec<f64> = lambdas.iter().map(|l| l.sqrt()).collect();
    // Fourier transform of the coefficient pattern.
    let twiddle: Vec<Complex64> = (0..n)
        .map(|t| Complex64::from_polar(1.0, -TAU * t as f64 / n as f64))
        .collect();
    let chat = exec::map_indexed(n, |t| {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &c) in coeffs.iter().enumerate() {
            acc += c * twiddle[(t * j) % n];
        }
        acc / n as f64
    });
    // T[m][m'] = sqrt(l_m l_m') chat[(m - m') mod n]
    let rows = exec::map_indexed(n, |m| {
        (m..n)
            .map(|mp| sqrt_l[m] * sqrt_l[mp] * chat[(n + m - mp) % n].conj())
            .collect::<Vec<_>>()
    });
    let mut t = Array2::zeros((n, n));
    for (m, row) in rows.iter().enumerate() {
        for (dm, &v) in row.iter().enumerate() {
            let mp = m + dm;
            t[(m, mp)] = v;
            t[(mp, m)] = v.conj();
        }
    }
    let vals = t
        .eigvalsh(UPLO::Lower)
        .map_err(|e| Error::Eigensolver(e.to_string()))?;
    let trace_norm: f64 = vals.iter().map(|l| l.abs()).sum();
    Ok((0.5 * (1.0 - trace_norm)).clamp(0.0, 0.5))
}

/// Square-root-measurement error for `count` equiprobable symmetric pure
/// states on the ring of the given radius.
///
/// The Gram matrix is circulant; with its DFT eigenvalues `lambda_k` the
/// success probability is `((1/count) sum_k sqrt(lambda_k))^2`. For
/// geometrically uniform pure-state sets this measurement is optimal and the
/// minimax prior is uniform by symmetry.
pub fn srm_symmetric_error(count: usize, radius: f64) -> Result<f64> {
    if count == 0 {
        return Err(Error::InvalidInput("state count must be >= 1".into()));
    }
    if !(radius.is_finite() && radius >= 0.0) {
        return Err(Error::InvalidInput(format!("bad ring radius {radius}")));
    }
    let lambdas = circulant_eigenvalues(&ring_gram_row(count, radius))?;
    let s: f64 = lambdas.iter().map(|l| l.sqrt()).sum();
    let success = (s / count as f64).powi(2);
    Ok((1.0 - success).clamp(0.0, 1.0 - 1.0 / count as f64))
}

/// Standard normal CDF.
pub fn normal_cdf(x: f64) -> f64 {
    0.5 * libm::erfc(-x / SQRT_2)
}

/// Error probability between neighboring ring states under the unit-variance
/// Gaussian design rule: `1/2 - integral_0^t0 of the standard normal density`
/// with threshold `t0 = pi sqrt(mean_photon) / (2 m_bases)`.
///
/// Strictly increasing in `m_bases`, decreasing in `mean_photon`.
pub fn neighbor_error(mean_photon: f64, m_bases: u32) -> f64 {
    assert!(mean_photon >= 0.0, "mean photon number must be nonnegative");
    assert!(m_bases >= 1, "basis count must be >= 1");
    let t0 = PI * mean_photon.sqrt() / (2.0 * m_bases as f64);
    1.0 - normal_cdf(t0)
}

/// Neighbor error under the heterodyne convention (per-quadrature variance
/// 1/2), where the same geometric threshold sits at `sqrt(2) t0` noise units.
/// Reported alongside [`neighbor_error`]; the design rule does not state
/// which convention it assumes.
pub fn neighbor_error_heterodyne(mean_photon: f64, m_bases: u32) -> f64 {
    assert!(mean_photon >= 0.0, "mean photon number must be nonnegative");
    assert!(m_bases >= 1, "basis count must be >= 1");
    let t0 = PI * mean_photon.sqrt() / (2.0 * m_bases as f64);
    1.0 - normal_cdf(SQRT_2 * t0)
}

/// Smallest basis count `M` with `neighbor_error(mean_photon, M) >= target`.
///
/// Ties resolve to the smaller `M`; integer bisection on the monotone rule.
pub fn design_basis_count(mean_photon: f64, target_error: f64) -> Result<u32> {
    if !(target_error > 0.0 && target_error < 0.5) {
        return Err(Error::InvalidInput(format!(
            "target error {target_error} must lie strictly between 0 and 0.5"
        )));
    }
    if !(mean_photon.is_finite() && mean_photon >= 0.0) {
        return Err(Error::InvalidInput(format!(
            "bad mean photon number {mean_photon}"
        )));
    }
    if neighbor_error(mean_photon, 1) >= target_error {
        return Ok(1);
    }
    let mut hi = 1u32;
    while neighbor_error(mean_photon, hi) < target_error {
        hi = hi.saturating_mul(2);
        if hi == u32::MAX {
            break;
        }
    }
    let mut lo = hi / 2; // error(lo) < target <= error(hi)
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if neighbor_error(mean_photon, mid) >= target_error {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// Draws one heterodyne outcome for the given state: each quadrature is
/// Gaussian with mean `(re, im)` and variance 1/2.
pub fn heterodyne_sample<R: Rng + ?Sized>(
    state: CoherentAmplitude,
    rng: &mut R,
) -> MeasurementOutcome {
    let normal = Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2).expect("valid sigma");
    let re = state.re() + normal.sample(rng);
    let im = state.im() + normal.sample(rng);
    MeasurementOutcome::HeterodynePoint(Complex64::new(re, im))
}

/// Draws one direct-detection photon count: Poisson with mean
/// `efficiency * |alpha|^2`.
pub fn photon_count_sample<R: Rng + ?Sized>(
    state: CoherentAmplitude,
    efficiency: f64,
    rng: &mut R,
) -> Result<MeasurementOutcome> {
    if !(0.0..=1.0).contains(&efficiency) {
        return Err(Error::InvalidInput(format!(
            "detector efficiency {efficiency} outside [0, 1]"
        )));
    }
    let mean = efficiency * state.mean_photon_number();
    if mean == 0.0 {
        return Ok(MeasurementOutcome::PhotonCount(0));
    }
    let poisson = Poisson::new(mean)
        .map_err(|e| Error::InvalidInput(format!("bad Poisson mean {mean}: {e}")))?;
    let count: f64 = poisson.sample(rng);
    Ok(MeasurementOutcome::PhotonCount(count as u64))
}

/// Whether the ring state at `angle` falls in the upper half-plane
/// `[axis, axis + pi)`.
pub(crate) fn in_upper_half_plane(angle: f64, axis: f64) -> bool {
    (angle - axis).rem_euclid(TAU) < PI
}

/// Optimal error probability for telling the two half-plane ensembles of a
/// phase-shift-keyed constellation apart.
///
/// States with angle in `[axis_angle, axis_angle + pi)` form the "up"
/// ensemble, the rest "down"; both are equal-weight mixtures with priors
/// 1/2. Returns their Helstrom error.
pub fn half_plane_error(constellation: &Constellation, axis_angle: f64) -> Result<f64> {
    if constellation.scheme() != Scheme::Psk {
        return Err(Error::InvalidInput(
            "half-plane discrimination is defined for phase-shift keying".into(),
        ));
    }
    let n = constellation.num_states() as usize;
    let m = constellation.m_bases() as f64;
    let coeffs: Vec<f64> = (0..n)
        .map(|idx| {
            let angle = PI * idx as f64 / m;
            if in_upper_half_plane(angle, axis_angle) {
                0.5 / m
            } else {
                -0.5 / m
            }
        })
        .collect();
    psk_ring_signed_helstrom(n, constellation.radius(), &coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::protocol::Constellation;
    use approx::assert_abs_diff_eq;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn amp(re: f64, im: f64) -> CoherentAmplitude {
        CoherentAmplitude::new(re, im).unwrap()
    }

    fn pure_pair_problem(alpha: f64) -> BinaryDiscriminationProblem {
        BinaryDiscriminationProblem::equal_priors(
            MixtureState::pure(amp(alpha, 0.0)),
            MixtureState::pure(amp(-alpha, 0.0)),
        )
        .unwrap()
    }

    #[test]
    fn helstrom_on_identical_mixtures_is_exactly_half() {
        let m = MixtureState::uniform(vec![amp(1.0, 0.0), amp(0.0, 1.0)]).unwrap();
        let p = BinaryDiscriminationProblem::equal_priors(m.clone(), m).unwrap();
        assert_eq!(helstrom_error(&p).unwrap(), 0.5);
    }

    #[test]
    fn helstrom_antipodal_pair_closed_form() {
        let p = pure_pair_problem(1.0);
        let expect = 0.5 * (1.0 - (1.0 - (-4.0f64).exp()).sqrt());
        assert_abs_diff_eq!(helstrom_error(&p).unwrap(), expect, epsilon = 1e-12);
        assert_abs_diff_eq!(helstrom_error(&p).unwrap(), 0.004600, epsilon = 5e-7);
    }

    #[test]
    fn helstrom_orthogonal_pair_is_zero() {
        let p = pure_pair_problem(20.0);
        assert_abs_diff_eq!(helstrom_error(&p).unwrap(), 0.0, epsilon = 1e-9);
    }

    #[test]
    fn helstrom_is_exactly_swap_symmetric() {
        let r0 = MixtureState::uniform(vec![amp(0.5, 0.0), amp(0.0, 0.7)]).unwrap();
        let r1 = MixtureState::pure(amp(-0.4, 0.2));
        let a = BinaryDiscriminationProblem::new(r0.clone(), r1.clone(), 0.3, 0.7).unwrap();
        let b = BinaryDiscriminationProblem::new(r1, r0, 0.7, 0.3).unwrap();
        assert_eq!(helstrom_error(&a).unwrap(), helstrom_error(&b).unwrap());
    }

    #[test]
    fn srm_single_state_has_no_error() {
        assert_abs_diff_eq!(srm_symmetric_error(1, 3.0).unwrap(), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn srm_zero_radius_is_guessing() {
        assert_abs_diff_eq!(srm_symmetric_error(4, 0.0).unwrap(), 0.75, epsilon = 1e-12);
    }

    #[test]
    fn srm_two_states_attains_helstrom() {
        for r in [0.1, 0.5, 1.0, 2.0] {
            let srm = srm_symmetric_error(2, r).unwrap();
            let hel = helstrom_error(&pure_pair_problem(r)).unwrap();
            assert_abs_diff_eq!(srm, hel, epsilon = 1e-9);
        }
    }

    #[test]
    fn ring_route_matches_generic_helstrom() {
        // 8-point ring, alternating-sign pattern, radius 2.
        let n = 8usize;
        let radius = 2.0;
        let coeffs: Vec<f64> = (0..n)
            .map(|i| if i % 2 == 0 { -0.125 } else { 0.125 })
            .collect();
        let fast = psk_ring_signed_helstrom(n, radius, &coeffs).unwrap();
        let states: Vec<CoherentAmplitude> = (0..n)
            .map(|i| CoherentAmplitude::from_polar(radius, TAU * i as f64 / n as f64).unwrap())
            .collect();
        let even = MixtureState::uniform(states.iter().step_by(2).copied().collect()).unwrap();
        let odd = MixtureState::uniform(states.iter().skip(1).step_by(2).copied().collect())
            .unwrap();
        let generic =
            helstrom_error(&BinaryDiscriminationProblem::equal_priors(even, odd).unwrap())
                .unwrap();
        assert_abs_diff_eq!(fast, generic, epsilon = 1e-12);
    }

    #[test]
    fn neighbor_error_design_points() {
        assert_abs_diff_eq!(neighbor_error(0.0, 5), 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(neighbor_error(1e4, 1000), 0.4376, epsilon = 5e-4);
        assert_abs_diff_eq!(neighbor_error(1e5, 10_000), 0.4802, epsilon = 5e-4);
    }

    #[test]
    fn neighbor_error_monotone_in_bases() {
        let mut prev = 0.0;
        for m in [10u32, 20, 50, 100, 1000, 10_000] {
            let e = neighbor_error(1e4, m);
            assert!(e > prev);
            prev = e;
        }
        // t0 <= 0.0025 regime approaches the guessing limit.
        let m_large = (PI * 100.0 / (2.0 * 0.0025)).ceil() as u32;
        assert!(neighbor_error(1e4, m_large) >= 0.499);
    }

    #[test]
    fn design_basis_count_boundaries() {
        // A target exactly attained at M is returned as M.
        let target = neighbor_error(1e4, 1000);
        assert_eq!(design_basis_count(1e4, target).unwrap(), 1000);
        assert!(neighbor_error(1e4, 999) < target);
        // Vanishing target is satisfied by a single basis.
        assert_eq!(design_basis_count(1e5, 1e-9).unwrap(), 1);
        assert!(design_basis_count(1e4, 0.5).is_err());
        assert!(design_basis_count(1e4, 0.0).is_err());
    }

    #[test]
    fn design_basis_count_matches_reference_scale() {
        // Around M = 1e4 for mean photon 1e5 at a 0.48 target.
        let m = design_basis_count(1e5, 0.48).unwrap();
        assert!((9_000..=11_000).contains(&m), "designed M = {m}");
        assert!(neighbor_error(1e5, m) >= 0.48);
        assert!(neighbor_error(1e5, m - 1) < 0.48);
    }

    #[test]
    fn heterodyne_sampler_statistics() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let n = 100_000;
        let state = amp(3.0, 0.0);
        let mut sum_re = 0.0;
        let mut sum_im = 0.0;
        let mut sq_re = 0.0;
        for _ in 0..n {
            let MeasurementOutcome::HeterodynePoint(z) = heterodyne_sample(state, &mut rng)
            else {
                panic!("wrong outcome kind")
            };
            sum_re += z.re;
            sum_im += z.im;
            sq_re += z.re * z.re;
        }
        let mean_re = sum_re / n as f64;
        let var_re = sq_re / n as f64 - mean_re * mean_re;
        assert_abs_diff_eq!(mean_re, 3.0, epsilon = 0.01);
        assert_abs_diff_eq!(sum_im / n as f64, 0.0, epsilon = 0.01);
        assert_abs_diff_eq!(var_re, 0.5, epsilon = 0.01);
    }

    #[test]
    fn heterodyne_sampler_is_deterministic_per_seed() {
        let state = amp(1.0, -2.0);
        let mut a = ChaCha8Rng::seed_from_u64(99);
        let mut b = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..32 {
            assert_eq!(
                heterodyne_sample(state, &mut a),
                heterodyne_sample(state, &mut b)
            );
        }
    }

    #[test]
    fn photon_counter_statistics_and_edges() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            assert_eq!(
                photon_count_sample(amp(0.0, 0.0), 1.0, &mut rng).unwrap(),
                MeasurementOutcome::PhotonCount(0)
            );
            assert_eq!(
                photon_count_sample(amp(3.0, 0.0), 0.0, &mut rng).unwrap(),
                MeasurementOutcome::PhotonCount(0)
            );
        }
        let n = 100_000;
        let mut total = 0u64;
        for _ in 0..n {
            let MeasurementOutcome::PhotonCount(c) =
                photon_count_sample(amp(3.0, 0.0), 1.0, &mut rng).unwrap()
            else {
                panic!("wrong outcome kind")
            };
            total += c;
        }
        assert_abs_diff_eq!(total as f64 / n as f64, 9.0, epsilon = 0.05);
        assert!(photon_count_sample(amp(1.0, 0.0), 1.5, &mut rng).is_err());
    }

    #[test]
    fn heterodyne_sign_decision_matches_gaussian_error() {
        // Discriminating |a> from |-a> by the sign of the real quadrature
        // errs with probability Phi(-sqrt(2) a).
        let alpha = 1.0;
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 100_000;
        let mut errors = 0u64;
        for i in 0..n {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            let MeasurementOutcome::HeterodynePoint(z) =
                heterodyne_sample(amp(sign * alpha, 0.0), &mut rng)
            else {
                panic!("wrong outcome kind")
            };
            if (z.re >= 0.0) != (sign > 0.0) {
                errors += 1;
            }
        }
        let p_hat = errors as f64 / n as f64;
        let p = normal_cdf(-SQRT_2 * alpha);
        let sigma = (p * (1.0 - p) / n as f64).sqrt();
        assert!(
            (p_hat - p).abs() <= 3.0 * sigma,
            "p_hat = {p_hat}, expected {p} +- {sigma}"
        );
    }

    #[test]
    fn half_plane_degenerate_ring_is_guessing() {
        let cfg = Constellation::psk(2, 0.0).unwrap();
        assert_abs_diff_eq!(half_plane_error(&cfg, 0.0).unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn half_plane_matches_generic_helstrom_small_ring() {
        let cfg = Constellation::psk(4, 2.0).unwrap();
        let fast = half_plane_error(&cfg, 0.0).unwrap();
        let states = cfg.states();
        let up = MixtureState::uniform(states[0..4].to_vec()).unwrap();
        let down = MixtureState::uniform(states[4..8].to_vec()).unwrap();
        let generic =
            helstrom_error(&BinaryDiscriminationProblem::equal_priors(up, down).unwrap())
                .unwrap();
        assert_abs_diff_eq!(fast, generic, epsilon = 1e-12);
    }

    #[test]
    fn half_plane_is_symmetric_under_axis_flip() {
        let cfg = Constellation::psk(4, 1.5).unwrap();
        let a = half_plane_error(&cfg, 0.0).unwrap();
        let b = half_plane_error(&cfg, PI).unwrap();
        assert_abs_diff_eq!(a, b, epsilon = 1e-12);
    }

    #[test]
    fn rejects_bad_priors() {
        let m = MixtureState::pure(amp(0.0, 0.0));
        assert!(BinaryDiscriminationProblem::new(m.clone(), m.clone(), 0.6, 0.6).is_err());
        assert!(BinaryDiscriminationProblem::new(m.clone(), m, -0.5, 1.5).is_err());
    }
}
