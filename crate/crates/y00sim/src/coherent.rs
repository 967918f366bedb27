//! Exact coherent-state algebra: overlaps, Gram matrices, and spectra and
//! entropies of finite coherent-state mixtures.
//!
//! Every operator that appears in this crate is a finite real-linear
//! combination of coherent-state projectors `|a_i><a_i|`. Such an operator
//! acts nontrivially only on the span of its states, so its nonzero spectrum
//! equals the spectrum of a small Hermitian matrix assembled from pairwise
//! overlaps. This keeps spectra exact at any mean photon number; no Fock
//! cutoff is ever introduced.

use ndarray::Array2;
use ndarray_linalg::{EigValsh, Eigh, UPLO};
use num_complex::Complex64;
use std::collections::HashMap;

use crate::{exec, Error, Result};

/// Spectrum weights below this are treated as exact zeros when taking logs.
pub const ENTROPY_EIGENVALUE_FLOOR: f64 = 1e-12;

/// Gram eigenvalues in `[PSD_CLIP, 0)` are clipped to zero; anything below
/// `PSD_CLIP` is reported as an eigensolver failure.
pub const PSD_CLIP: f64 = -1e-10;

/// Complex amplitude of a coherent state, in dimensionless quadrature units.
///
/// The mean photon number of the state is `re^2 + im^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentAmplitude {
    re: f64,
    im: f64,
}

impl CoherentAmplitude {
    /// Builds an amplitude, rejecting non-finite components.
    pub fn new(re: f64, im: f64) -> Result<Self> {
        if !(re.is_finite() && im.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "coherent amplitude must be finite, got ({re}, {im})"
            )));
        }
        // Normalize -0.0 so equal states compare bit-identically.
        Ok(Self {
            re: if re == 0.0 { 0.0 } else { re },
            im: if im == 0.0 { 0.0 } else { im },
        })
    }

    pub fn vacuum() -> Self {
        Self { re: 0.0, im: 0.0 }
    }

    pub fn from_polar(radius: f64, angle: f64) -> Result<Self> {
        let z = Complex64::from_polar(radius, angle);
        Self::new(z.re, z.im)
    }

    pub fn re(self) -> f64 {
        self.re
    }

    pub fn im(self) -> f64 {
        self.im
    }

    pub fn as_complex(self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }

    /// Mean photon number `|alpha|^2`.
    pub fn mean_photon_number(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    /// Rotates the amplitude by `angle` in phase space.
    pub fn rotated(self, angle: f64) -> Self {
        let z = self.as_complex() * Complex64::from_polar(1.0, angle);
        Self::new(z.re, z.im).expect("rotation preserves finiteness")
    }

    /// Scales the amplitude by a real factor.
    pub fn scaled(self, factor: f64) -> Self {
        Self::new(self.re * factor, self.im * factor).expect("finite scale factor")
    }

    fn key_bits(self) -> (u64, u64) {
        (self.re.to_bits(), self.im.to_bits())
    }
}

/// A classical mixture of coherent states: weights `q_i` on states `a_i`.
///
/// Stands for every density operator in the crate (per-bit ensembles, the
/// total transmitted ensemble, half-plane ensembles, ...).
#[derive(Debug, Clone, PartialEq)]
pub struct MixtureState {
    states: Vec<CoherentAmplitude>,
    weights: Vec<f64>,
}

impl MixtureState {
    /// Builds a mixture; weights must be nonnegative and sum to 1 within 1e-12.
    pub fn new(states: Vec<CoherentAmplitude>, weights: Vec<f64>) -> Result<Self> {
        if states.is_empty() || states.len() != weights.len() {
            return Err(Error::InvalidInput(format!(
                "mixture needs equal nonzero state/weight counts, got {}/{}",
                states.len(),
                weights.len()
            )));
        }
        let mut sum = 0.0;
        for &w in &weights {
            if !w.is_finite() || w < 0.0 {
                return Err(Error::InvalidInput(format!("bad mixture weight {w}")));
            }
            sum += w;
        }
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidInput(format!(
                "mixture weights sum to {sum}, expected 1"
            )));
        }
        Ok(Self { states, weights })
    }

    pub fn pure(state: CoherentAmplitude) -> Self {
        Self {
            states: vec![state],
            weights: vec![1.0],
        }
    }

    /// Equal-weight mixture of the given states.
    pub fn uniform(states: Vec<CoherentAmplitude>) -> Result<Self> {
        let n = states.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty uniform mixture".into()));
        }
        let w = 1.0 / n as f64;
        Self::new(states, vec![w; n])
    }

    pub fn states(&self) -> &[CoherentAmplitude] {
        &self.states
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
}

/// Eigenvalues of a mixture or signed combination, sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumResult {
    /// Eigenvalues in descending order.
    pub eigenvalues: Vec<f64>,
    /// Sum of the eigenvalues.
    pub trace: f64,
}

/// Inner product `<a|b> = exp(-(|a|^2 + |b|^2)/2 + conj(a) b)`.
///
/// Its magnitude is at most 1, with equality exactly when `a == b`.
pub fn overlap(a: CoherentAmplitude, b: CoherentAmplitude) -> Complex64 {
    let az = a.as_complex();
    let bz = b.as_complex();
    (az.conj() * bz - Complex64::new((az.norm_sqr() + bz.norm_sqr()) / 2.0, 0.0)).exp()
}

/// Gram matrix `G[i][j] = <states[i]|states[j]>`.
///
/// Hermitian with unit diagonal, positive semidefinite.
pub fn gram_matrix(states: &[CoherentAmplitude]) -> Array2<Complex64> {
    assert!(!states.is_empty(), "gram_matrix of empty state list");
    let n = states.len();
    let upper = exec::map_indexed(n, |i| {
        (i..n)
            .map(|j| {
                if i == j {
                    Complex64::new(1.0, 0.0)
                } else {
                    overlap(states[i], states[j])
                }
            })
            .collect::<Vec<_>>()
    });
    let mut g = Array2::zeros((n, n));
    for (i, row) in upper.iter().enumerate() {
        for (dj, &v) in row.iter().enumerate() {
            let j = i + dj;
            g[(i, j)] = v;
            g[(j, i)] = v.conj();
        }
    }
    g
}

/// Merges entries whose amplitudes are bit-identical, summing coefficients.
///
/// Exact for coherent-state combinations, and it makes structural identities
/// (e.g. identical ensembles under overlap selection keying) collapse to
/// literal zeros instead of rounding noise.
fn merge_duplicates(
    states: &[CoherentAmplitude],
    coefficients: &[f64],
) -> (Vec<CoherentAmplitude>, Vec<f64>) {
    let mut index: HashMap<(u64, u64), usize> = HashMap::with_capacity(states.len());
    let mut out_states = Vec::with_capacity(states.len());
    let mut out_coeffs: Vec<f64> = Vec::with_capacity(states.len());
    for (&s, &c) in states.iter().zip(coefficients) {
        match index.entry(s.key_bits()) {
            std::collections::hash_map::Entry::Occupied(e) => out_coeffs[*e.get()] += c,
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(out_states.len());
                out_states.push(s);
                out_coeffs.push(c);
            }
        }
    }
    (out_states, out_coeffs)
}

fn eigvalsh_desc(m: &Array2<Complex64>) -> Result<Vec<f64>> {
    let vals = m
        .eigvalsh(UPLO::Lower)
        .map_err(|e| Error::Eigensolver(e.to_string()))?;
    let mut v = vals.to_vec();
    v.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
    Ok(v)
}

/// Nonzero spectrum of `sum_i q_i |a_i><a_i|`.
///
/// Computed as the eigenvalues of the Hermitian matrix
/// `T[i][j] = sqrt(q_i q_j) <a_i|a_j>`, which shares the nonzero spectrum of
/// the mixture operator. Eigenvalues sum to the total weight (1 for a valid
/// mixture).
pub fn mixture_spectrum(mixture: &MixtureState) -> Result<SpectrumResult> {
    let (states, weights) = merge_duplicates(mixture.states(), mixture.weights());
    let n = states.len();
    let mut t = Array2::zeros((n, n));
    for i in 0..n {
        for j in i..n {
            let v = if i == j {
                Complex64::new(weights[i], 0.0)
            } else {
                (weights[i] * weights[j]).sqrt() * overlap(states[i], states[j])
            };
            t[(i, j)] = v;
            t[(j, i)] = v.conj();
        }
    }
    let eigenvalues = eigvalsh_desc(&t)?;
    let trace = eigenvalues.iter().sum();
    Ok(SpectrumResult { eigenvalues, trace })
}

/// Von Neumann entropy of a coherent-state mixture, in bits.
///
/// Eigenvalues below [`ENTROPY_EIGENVALUE_FLOOR`] are treated as zero.
pub fn von_neumann_entropy(mixture: &MixtureState) -> Result<f64> {
    let spectrum = mixture_spectrum(mixture)?;
    let mut h = 0.0;
    for &lambda in &spectrum.eigenvalues {
        if lambda >= ENTROPY_EIGENVALUE_FLOOR {
            h -= lambda * lambda.log2();
        } else if lambda < PSD_CLIP {
            return Err(Error::Eigensolver(format!(
                "mixture spectrum has negative eigenvalue {lambda}"
            )));
        }
    }
    Ok(h.max(0.0))
}

/// Spectrum of the signed combination `sum_i c_i |a_i><a_i|`.
///
/// The nonzero eigenvalues equal those of `G^(1/2) diag(c) G^(1/2)` where `G`
/// is the Gram matrix of the states. `G^(1/2)` comes from a Hermitian
/// eigendecomposition with eigenvalues in `[PSD_CLIP, 0)` clipped to zero.
/// The eigenvalue sum equals `sum_i c_i`.
pub fn signed_combination_spectrum(
    states: &[CoherentAmplitude],
    coefficients: &[f64],
) -> Result<SpectrumResult> {
    if states.len() != coefficients.len() {
        return Err(Error::InvalidInput(format!(
            "{} states vs {} coefficients",
            states.len(),
            coefficients.len()
        )));
    }
    for &c in coefficients {
        if !c.is_finite() {
            return Err(Error::InvalidInput(format!("non-finite coefficient {c}")));
        }
    }
    let (states, coeffs) = merge_duplicates(states, coefficients);
    // Exact cancellations contribute nothing to the operator.
    let (states, coeffs): (Vec<_>, Vec<_>) = states
        .into_iter()
        .zip(coeffs)
        .filter(|&(_, c)| c != 0.0)
        .unzip();
    if states.is_empty() {
        return Ok(SpectrumResult {
            eigenvalues: Vec::new(),
            trace: 0.0,
        });
    }
    let n = states.len();
    let g = gram_matrix(&states);
    let (gvals, gvecs) = g
        .eigh(UPLO::Lower)
        .map_err(|e| Error::Eigensolver(e.to_string()))?;
    let mut sqrt_g = Vec::with_capacity(n);
    for &gv in gvals.iter() {
        if gv < PSD_CLIP {
            return Err(Error::Eigensolver(format!(
                "Gram matrix eigenvalue {gv} below PSD tolerance"
            )));
        }
        sqrt_g.push(gv.max(0.0).sqrt());
    }
    // Work in the Gram eigenbasis: the target matrix is
    //   T = diag(sqrt_g) (V^H diag(c) V) diag(sqrt_g).
    let rows = exec::map_indexed(n, |a| {
        (a..n)
            .map(|b| {
                let mut acc = Complex64::new(0.0, 0.0);
                for i in 0..n {
                    acc += gvecs[(i, a)].conj() * coeffs[i] * gvecs[(i, b)];
                }
                acc * (sqrt_g[a] * sqrt_g[b])
            })
            .collect::<Vec<_>>()
    });
    let mut t = Array2::zeros((n, n));
    for (a, row) in rows.iter().enumerate() {
        for (db, &v) in row.iter().enumerate() {
            let b = a + db;
            t[(a, b)] = v;
            t[(b, a)] = v.conj();
        }
    }
    let eigenvalues = eigvalsh_desc(&t)?;
    let trace = eigenvalues.iter().sum();
    Ok(SpectrumResult { eigenvalues, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn amp(re: f64, im: f64) -> CoherentAmplitude {
        CoherentAmplitude::new(re, im).unwrap()
    }

    #[test]
    fn overlap_of_identical_states_is_one() {
        assert_eq!(overlap(amp(0.0, 0.0), amp(0.0, 0.0)), Complex64::new(1.0, 0.0));
        let a = amp(1.0, 0.0);
        assert_abs_diff_eq!(overlap(a, a).re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(overlap(a, a).im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn opposite_unit_amplitudes_overlap_e_minus_four() {
        let s = overlap(amp(1.0, 0.0), amp(-1.0, 0.0));
        assert_abs_diff_eq!(s.norm_sqr(), (-4.0f64).exp(), epsilon = 1e-15);
        assert_abs_diff_eq!(s.norm_sqr(), 0.018_315_638_888_734_18, epsilon = 1e-12);
    }

    #[test]
    fn overlap_is_conjugate_symmetric() {
        let a = amp(0.3, -1.7);
        let b = amp(-2.1, 0.4);
        assert_eq!(overlap(a, b), overlap(b, a).conj());
    }

    #[test]
    fn gram_matrix_matches_closed_form_pair() {
        let g = gram_matrix(&[amp(0.0, 0.0), amp(1.0, 0.0)]);
        let s = (-0.5f64).exp();
        assert_abs_diff_eq!(g[(0, 1)].re, s, epsilon = 1e-12);
        assert_abs_diff_eq!(g[(0, 1)].re, 0.60653, epsilon = 1e-5);
        assert_eq!(g[(0, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(g[(1, 0)], g[(0, 1)].conj());
    }

    #[test]
    fn single_state_gram_is_identity() {
        let g = gram_matrix(&[amp(2.0, 3.0)]);
        assert_eq!(g[(0, 0)], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn pure_state_spectrum_is_unit() {
        let s = mixture_spectrum(&MixtureState::pure(amp(1.5, -0.5))).unwrap();
        assert_eq!(s.eigenvalues.len(), 1);
        assert_abs_diff_eq!(s.eigenvalues[0], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn two_state_mixture_spectrum_closed_form() {
        let m = MixtureState::uniform(vec![amp(0.0, 0.0), amp(1.0, 0.0)]).unwrap();
        let s = mixture_spectrum(&m).unwrap();
        let half_s = (-0.5f64).exp() / 2.0;
        assert_abs_diff_eq!(s.eigenvalues[0], 0.5 + half_s, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.5 - half_s, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[0], 0.80327, epsilon = 1e-5);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.19673, epsilon = 1e-5);
        assert_abs_diff_eq!(s.trace, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn far_separated_mixture_is_half_half() {
        let m = MixtureState::uniform(vec![amp(0.0, 0.0), amp(10.0, 0.0)]).unwrap();
        let s = mixture_spectrum(&m).unwrap();
        assert_abs_diff_eq!(s.eigenvalues[0], 0.5, epsilon = 1e-9);
        assert_abs_diff_eq!(s.eigenvalues[1], 0.5, epsilon = 1e-9);
    }

    #[test]
    fn entropy_of_pure_state_is_zero() {
        assert_abs_diff_eq!(
            von_neumann_entropy(&MixtureState::pure(amp(3.0, 1.0))).unwrap(),
            0.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn entropy_of_orthogonal_pair_is_one_bit() {
        // |a - b| = 40, overlap ~ e^{-800}: numerically orthogonal.
        let m = MixtureState::uniform(vec![amp(-20.0, 0.0), amp(20.0, 0.0)]).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&m).unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn entropy_of_vacuum_plus_one_mixture() {
        let m = MixtureState::uniform(vec![amp(0.0, 0.0), amp(1.0, 0.0)]).unwrap();
        assert_abs_diff_eq!(von_neumann_entropy(&m).unwrap(), 0.7153, epsilon = 2e-4);
    }

    #[test]
    fn signed_spectrum_matches_mixture_spectrum_for_density_coefficients() {
        let states = vec![amp(0.4, 0.1), amp(-0.9, 0.7), amp(0.0, -1.2)];
        let weights = vec![0.5, 0.3, 0.2];
        let m = MixtureState::new(states.clone(), weights.clone()).unwrap();
        let a = mixture_spectrum(&m).unwrap();
        let b = signed_combination_spectrum(&states, &weights).unwrap();
        for (x, y) in a.eigenvalues.iter().zip(&b.eigenvalues) {
            assert_abs_diff_eq!(x, y, epsilon = 1e-10);
        }
    }

    #[test]
    fn signed_spectrum_of_cancelling_pair_is_empty() {
        let s = signed_combination_spectrum(
            &[amp(1.0, 2.0), amp(1.0, 2.0)],
            &[0.5, -0.5],
        )
        .unwrap();
        assert!(s.eigenvalues.is_empty());
        assert_eq!(s.trace, 0.0);
    }

    #[test]
    fn signed_spectrum_of_antipodal_pair_closed_form() {
        let s = signed_combination_spectrum(
            &[amp(1.0, 0.0), amp(-1.0, 0.0)],
            &[0.5, -0.5],
        )
        .unwrap();
        let expect = 0.5 * (1.0 - (-4.0f64).exp()).sqrt();
        assert_eq!(s.eigenvalues.len(), 2);
        assert_abs_diff_eq!(s.eigenvalues[0], expect, epsilon = 1e-12);
        assert_abs_diff_eq!(s.eigenvalues[1], -expect, epsilon = 1e-12);
        assert_abs_diff_eq!(s.trace, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn rejects_bad_mixture_weights() {
        assert!(MixtureState::new(vec![amp(0.0, 0.0)], vec![0.9]).is_err());
        assert!(MixtureState::new(vec![amp(0.0, 0.0)], vec![-1.0, 2.0]).is_err());
        assert!(MixtureState::new(vec![], vec![]).is_err());
    }

    #[test]
    fn rejects_non_finite_amplitude() {
        assert!(CoherentAmplitude::new(f64::NAN, 0.0).is_err());
        assert!(CoherentAmplitude::new(0.0, f64::INFINITY).is_err());
    }
}
