//! The Y-00 cipher pipeline: LFSR keystream, running-key blocks, keyed
//! constellation mapping for the phase-shift and intensity schemes, the
//! randomization layers (overlap selection keying, level-numbering flips,
//! axis dither), channel models, and Bob's keyed demodulation.

use num_complex::Complex64;
use rand::Rng;
use std::f64::consts::PI;

use crate::coherent::{CoherentAmplitude, MixtureState};
use crate::detection::{heterodyne_sample, photon_count_sample, MeasurementOutcome};
use crate::{Error, Result};

/// Linear feedback shift register configuration: the shared seed key and the
/// feedback polynomial.
///
/// `taps` is a bitmask over the register bits `0..key_length_bits`; mask bit
/// `j` stands for the term `x^(j+1)` of the feedback polynomial, so the top
/// mask bit (required) is the degree term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LfsrConfig {
    key_length_bits: u32,
    taps: u64,
    seed: u64,
}

impl LfsrConfig {
    pub fn new(key_length_bits: u32, taps: u64, seed: u64) -> Result<Self> {
        if !(1..=63).contains(&key_length_bits) {
            return Err(Error::InvalidInput(format!(
                "key length {key_length_bits} outside 1..=63"
            )));
        }
        let mask = (1u64 << key_length_bits) - 1;
        if seed == 0 {
            return Err(Error::InvalidInput("all-zero LFSR seed".into()));
        }
        if seed > mask {
            return Err(Error::InvalidInput(format!(
                "seed {seed:#x} wider than {key_length_bits} bits"
            )));
        }
        if taps == 0 || taps > mask || taps >> (key_length_bits - 1) != 1 {
            return Err(Error::InvalidInput(format!(
                "taps {taps:#x} do not describe a degree-{key_length_bits} polynomial"
            )));
        }
        Ok(Self {
            key_length_bits,
            taps,
            seed,
        })
    }

    pub fn key_length_bits(&self) -> u32 {
        self.key_length_bits
    }

    pub fn taps(&self) -> u64 {
        self.taps
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Same register with a different seed; used to enumerate candidate keys.
    pub fn with_seed(&self, seed: u64) -> Result<Self> {
        Self::new(self.key_length_bits, self.taps, seed)
    }

    /// Period bound `2^|K| - 1` on the keystream.
    pub fn max_period_bits(&self) -> u64 {
        (1u64 << self.key_length_bits) - 1
    }
}

/// Fibonacci LFSR output, most significant register bit first.
///
/// Deterministic in the config; the sequence is periodic with period
/// dividing `2^|K| - 1`.
pub fn lfsr_stream(cfg: &LfsrConfig, n_bits: usize) -> Vec<u8> {
    let len = cfg.key_length_bits;
    let mask = (1u64 << len) - 1;
    let msb = 1u64 << (len - 1);
    let mut state = cfg.seed;
    let mut out = Vec::with_capacity(n_bits);
    for _ in 0..n_bits {
        out.push(u8::from(state & msb != 0));
        let feedback = ((state & cfg.taps).count_ones() & 1) as u64;
        state = ((state << 1) | feedback) & mask;
    }
    out
}

/// Running key: per-slot basis numbers `k_i` in `[0, M)` and their parities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunningKey {
    pub basis_numbers: Vec<u32>,
    pub parities: Vec<u8>,
}

/// Bits consumed per basis symbol.
pub(crate) fn bits_per_basis(m_bases: u32) -> u32 {
    if m_bases <= 1 {
        0
    } else {
        32 - (m_bases - 1).leading_zeros()
    }
}

/// Splits a bit stream into basis numbers: ceil(log2 M) bits per slot, read
/// most significant bit first and reduced mod M. A trailing partial block is
/// discarded.
///
/// For M that is not a power of two the mod-M reduction slightly biases low
/// basis numbers; production configurations use powers of two.
pub fn running_key_blocks(bits: &[u8], m_bases: u32) -> RunningKey {
    assert!(m_bases >= 2, "running key needs at least two bases");
    let w = bits_per_basis(m_bases) as usize;
    let mut basis_numbers = Vec::with_capacity(bits.len() / w);
    let mut parities = Vec::with_capacity(bits.len() / w);
    for chunk in bits.chunks_exact(w) {
        let value = chunk.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
        let k = value % m_bases;
        basis_numbers.push(k);
        parities.push((k & 1) as u8);
    }
    RunningKey {
        basis_numbers,
        parities,
    }
}

/// Modulation geometry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    /// 2M coherent states on a ring: state `m` at angle `pi m / M`.
    Psk,
    /// 2M real amplitude levels `j * a_max / (2M)`, `j = 1..=2M`.
    Imdd,
}

impl Scheme {
    pub fn as_str(self) -> &'static str {
        match self {
            Scheme::Psk => "psk",
            Scheme::Imdd => "imdd",
        }
    }
}

/// Indexed set of the 2M signal states for one scheme.
#[derive(Debug, Clone, PartialEq)]
pub struct Constellation {
    scheme: Scheme,
    m_bases: u32,
    scale: f64,
}

impl Constellation {
    /// Phase-shift keying ring of 2M states at the given radius.
    pub fn psk(m_bases: u32, radius: f64) -> Result<Self> {
        if m_bases == 0 {
            return Err(Error::InvalidInput("basis count must be >= 1".into()));
        }
        if !(radius.is_finite() && radius >= 0.0) {
            return Err(Error::InvalidInput(format!("bad ring radius {radius}")));
        }
        Ok(Self {
            scheme: Scheme::Psk,
            m_bases,
            scale: radius,
        })
    }

    /// Phase-shift keying ring with the given mean photon number per state.
    pub fn psk_mean_photon(m_bases: u32, mean_photon: f64) -> Result<Self> {
        if !(mean_photon.is_finite() && mean_photon >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "bad mean photon number {mean_photon}"
            )));
        }
        Self::psk(m_bases, mean_photon.sqrt())
    }

    /// Intensity ladder of 2M levels up to `max_amplitude`.
    pub fn imdd(m_bases: u32, max_amplitude: f64) -> Result<Self> {
        if m_bases == 0 {
            return Err(Error::InvalidInput("basis count must be >= 1".into()));
        }
        if !(max_amplitude.is_finite() && max_amplitude >= 0.0) {
            return Err(Error::InvalidInput(format!(
                "bad maximum amplitude {max_amplitude}"
            )));
        }
        Ok(Self {
            scheme: Scheme::Imdd,
            m_bases,
            scale: max_amplitude,
        })
    }

    pub fn scheme(&self) -> Scheme {
        self.scheme
    }

    pub fn m_bases(&self) -> u32 {
        self.m_bases
    }

    pub fn num_states(&self) -> u32 {
        2 * self.m_bases
    }

    /// Ring radius (PSK) or maximum level amplitude (IMDD).
    pub fn radius(&self) -> f64 {
        self.scale
    }

    pub fn max_amplitude(&self) -> f64 {
        self.scale
    }

    /// Signal state for `index` in `[0, 2M)`.
    pub fn state(&self, index: u32) -> Result<CoherentAmplitude> {
        let n = self.num_states();
        if index >= n {
            return Err(Error::InvalidInput(format!(
                "state index {index} outside 0..{n}"
            )));
        }
        match self.scheme {
            Scheme::Psk => {
                CoherentAmplitude::from_polar(self.scale, PI * index as f64 / self.m_bases as f64)
            }
            Scheme::Imdd => {
                CoherentAmplitude::new((index + 1) as f64 * self.scale / n as f64, 0.0)
            }
        }
    }

    /// All 2M states in index order.
    pub fn states(&self) -> Vec<CoherentAmplitude> {
        (0..self.num_states())
            .map(|i| self.state(i).expect("index in range"))
            .collect()
    }
}

/// Keyed randomization layers applied on top of the basis selection.
///
/// Each enabled layer consumes its own designated bits of the running-key
/// stream, one slot at a time (basis bits first, then the overlap-selection
/// bit, then the numbering-flip bit, then the dither-angle index).
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RandomizationConfig {
    /// Overlap selection keying: a keyed per-slot flip of the data bit that
    /// makes the two per-bit output ensembles coincide.
    pub osk_enabled: bool,
    /// Keyed reversal of the intensity-level numbering (IMDD only).
    pub numbering_flip_enabled: bool,
    /// Keyed global rotation of the phase-space axis (PSK only).
    pub axis_dither_enabled: bool,
    /// Finite dither angle set indexed by the sub-running key.
    pub dither_angles: Vec<f64>,
}

impl RandomizationConfig {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn osk_only() -> Self {
        Self {
            osk_enabled: true,
            ..Self::default()
        }
    }

    pub fn with_axis_dither(angles: Vec<f64>) -> Self {
        Self {
            axis_dither_enabled: true,
            dither_angles: angles,
            ..Self::default()
        }
    }

    fn validate(&self, scheme: Scheme) -> Result<()> {
        if self.axis_dither_enabled {
            if scheme != Scheme::Psk {
                return Err(Error::InvalidInput(
                    "axis dither applies to phase-shift keying only".into(),
                ));
            }
            if self.dither_angles.is_empty() {
                return Err(Error::InvalidInput("axis dither needs angles".into()));
            }
        }
        if self.numbering_flip_enabled && scheme != Scheme::Imdd {
            return Err(Error::InvalidInput(
                "numbering flip applies to the intensity scheme only".into(),
            ));
        }
        Ok(())
    }

    fn dither_index_bits(&self) -> u32 {
        if self.axis_dither_enabled {
            bits_per_basis(self.dither_angles.len() as u32)
        } else {
            0
        }
    }
}

/// Per-slot key material derived from the seed key.
#[derive(Debug, Clone, PartialEq)]
pub struct SlotKeys {
    pub running_key: RunningKey,
    pub osk_bits: Vec<u8>,
    pub flip_bits: Vec<u8>,
    pub dither_indices: Vec<usize>,
}

/// Expands the LFSR stream into per-slot basis numbers and randomization
/// bits. Alice and Bob run this identically from the shared seed key.
pub fn derive_slot_keys(
    lfsr: &LfsrConfig,
    cfg: &Constellation,
    rnd: &RandomizationConfig,
    n_slots: usize,
) -> Result<SlotKeys> {
    rnd.validate(cfg.scheme())?;
    let m = cfg.m_bases();
    let w = bits_per_basis(m);
    let per_slot = w
        + u32::from(rnd.osk_enabled)
        + u32::from(rnd.numbering_flip_enabled)
        + rnd.dither_index_bits();
    let bits = lfsr_stream(lfsr, n_slots * per_slot as usize);
    let mut cursor = bits.iter();
    let mut take = |count: u32| -> u32 {
        let mut v = 0u32;
        for _ in 0..count {
            v = (v << 1) | *cursor.next().expect("stream sized to demand") as u32;
        }
        v
    };
    let mut running_key = RunningKey {
        basis_numbers: Vec::with_capacity(n_slots),
        parities: Vec::with_capacity(n_slots),
    };
    let mut osk_bits = Vec::with_capacity(n_slots);
    let mut flip_bits = Vec::with_capacity(n_slots);
    let mut dither_indices = Vec::with_capacity(n_slots);
    for _ in 0..n_slots {
        let k = if m <= 1 { 0 } else { take(w) % m };
        running_key.basis_numbers.push(k);
        running_key.parities.push((k & 1) as u8);
        osk_bits.push(if rnd.osk_enabled { take(1) as u8 } else { 0 });
        flip_bits.push(if rnd.numbering_flip_enabled {
            take(1) as u8
        } else {
            0
        });
        dither_indices.push(if rnd.axis_dither_enabled {
            let n_angles = rnd.dither_angles.len() as u32;
            (take(rnd.dither_index_bits()) % n_angles) as usize
        } else {
            0
        });
    }
    Ok(SlotKeys {
        running_key,
        osk_bits,
        flip_bits,
        dither_indices,
    })
}

/// Maps one data bit into the PSK constellation.
///
/// The effective bit is `b' = bit XOR osk_bit`; the state index is
/// `m = basis + M * (1 XOR b' XOR parity(basis))`, then the whole
/// constellation is rotated by the dither angle. With everything disabled
/// this reproduces the half-plane/parity table: (up, even) and (down, odd)
/// carry 1, (up, odd) and (down, even) carry 0, where "up" means an angle in
/// `[0, pi)`.
pub fn psk_modulate(
    bit: u8,
    basis: u32,
    cfg: &Constellation,
    osk_bit: u8,
    dither: f64,
) -> Result<CoherentAmplitude> {
    if cfg.scheme() != Scheme::Psk {
        return Err(Error::InvalidInput("psk_modulate needs a PSK constellation".into()));
    }
    if basis >= cfg.m_bases() {
        return Err(Error::InvalidInput(format!(
            "basis {basis} outside 0..{}",
            cfg.m_bases()
        )));
    }
    let effective = (bit ^ osk_bit) & 1;
    let parity = (basis & 1) as u8;
    let index = basis + cfg.m_bases() * u32::from(1 ^ effective ^ parity);
    Ok(cfg.state(index)?.rotated(dither))
}

/// Maps one data bit into the IMDD ladder. `basis` is 1-indexed in `[1, M]`;
/// its level pair is `(basis, M + basis)`. `osk_bit = 1` swaps the pair
/// assignment and `flip_numbering = 1` reverses the level order.
pub fn imdd_modulate(
    bit: u8,
    basis: u32,
    cfg: &Constellation,
    osk_bit: u8,
    flip_numbering: u8,
) -> Result<CoherentAmplitude> {
    if cfg.scheme() != Scheme::Imdd {
        return Err(Error::InvalidInput(
            "imdd_modulate needs an intensity constellation".into(),
        ));
    }
    let m = cfg.m_bases();
    if basis == 0 || basis > m {
        return Err(Error::InvalidInput(format!("basis {basis} outside 1..={m}")));
    }
    let level = imdd_level(bit, basis, m, osk_bit, flip_numbering);
    cfg.state(level - 1)
}

/// 1-indexed transmitted level for the IMDD map.
fn imdd_level(bit: u8, basis: u32, m_bases: u32, osk_bit: u8, flip_numbering: u8) -> u32 {
    let level = if (bit ^ osk_bit) & 1 == 0 {
        basis
    } else {
        m_bases + basis
    };
    if flip_numbering & 1 == 1 {
        2 * m_bases + 1 - level
    } else {
        level
    }
}

/// Ideal linear attenuation: `a -> kappa a`, photon number scales by
/// `kappa^2`.
pub fn attenuate(state: CoherentAmplitude, kappa: f64) -> Result<CoherentAmplitude> {
    if !(0.0..=1.0).contains(&kappa) {
        return Err(Error::InvalidInput(format!(
            "attenuation {kappa} outside [0, 1]"
        )));
    }
    Ok(state.scaled(kappa))
}

/// Beam-splitting convention for making `n` copies of a state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitMode {
    /// Each copy keeps amplitude `a / n` (the attack literature's scaling;
    /// not energy conserving).
    Paper,
    /// Each copy keeps amplitude `a / sqrt(n)`, conserving total photon
    /// number.
    Unitary,
}

/// Splits a state into `n_copies` equal copies under the chosen convention.
pub fn beam_split(
    state: CoherentAmplitude,
    n_copies: usize,
    mode: SplitMode,
) -> Vec<CoherentAmplitude> {
    assert!(n_copies >= 1, "need at least one copy");
    let factor = match mode {
        SplitMode::Paper => 1.0 / n_copies as f64,
        SplitMode::Unitary => 1.0 / (n_copies as f64).sqrt(),
    };
    vec![state.scaled(factor); n_copies]
}

/// Full record of one encrypted transmission.
///
/// All per-slot lists share the plaintext length; the Bob fields are empty
/// until demodulation fills them.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceTranscript {
    pub plaintext_bits: Vec<u8>,
    pub running_key: RunningKey,
    pub osk_bits: Vec<u8>,
    pub flip_bits: Vec<u8>,
    pub dither_indices: Vec<usize>,
    pub transmitted_states: Vec<CoherentAmplitude>,
    pub bob_outcomes: Vec<MeasurementOutcome>,
    pub bob_bits: Vec<u8>,
    pub bob_bit_errors: Option<u64>,
    pub eve_taps: Option<Vec<CoherentAmplitude>>,
}

impl SequenceTranscript {
    pub fn len(&self) -> usize {
        self.plaintext_bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plaintext_bits.is_empty()
    }

    /// Records the states Eve taps, scaled by her amplitude factor.
    pub fn with_eve_taps(mut self, amplitude_factor: f64) -> Self {
        self.eve_taps = Some(
            self.transmitted_states
                .iter()
                .map(|s| s.scaled(amplitude_factor))
                .collect(),
        );
        self
    }
}

/// Encrypts a plaintext bit sequence slot by slot. Deterministic in the
/// configs.
pub fn encrypt_sequence(
    plaintext: &[u8],
    lfsr: &LfsrConfig,
    cfg: &Constellation,
    rnd: &RandomizationConfig,
) -> Result<SequenceTranscript> {
    let keys = derive_slot_keys(lfsr, cfg, rnd, plaintext.len())?;
    let mut transmitted = Vec::with_capacity(plaintext.len());
    for (i, &bit) in plaintext.iter().enumerate() {
        if bit > 1 {
            return Err(Error::InvalidInput(format!("plaintext entry {bit} is not a bit")));
        }
        let k = keys.running_key.basis_numbers[i];
        let state = match cfg.scheme() {
            Scheme::Psk => {
                let dither = if rnd.axis_dither_enabled {
                    rnd.dither_angles[keys.dither_indices[i]]
                } else {
                    0.0
                };
                psk_modulate(bit, k, cfg, keys.osk_bits[i], dither)?
            }
            Scheme::Imdd => imdd_modulate(bit, k + 1, cfg, keys.osk_bits[i], keys.flip_bits[i])?,
        };
        transmitted.push(state);
    }
    Ok(SequenceTranscript {
        plaintext_bits: plaintext.to_vec(),
        running_key: keys.running_key,
        osk_bits: keys.osk_bits,
        flip_bits: keys.flip_bits,
        dither_indices: keys.dither_indices,
        transmitted_states: transmitted,
        bob_outcomes: Vec::new(),
        bob_bits: Vec::new(),
        bob_bit_errors: None,
        eve_taps: None,
    })
}

enum IdealOutcome {
    Heterodyne(Complex64),
    Count(f64),
}

/// Decodes one PSK slot from a heterodyne point, given the slot key.
pub(crate) fn psk_decode_slot(
    point: Complex64,
    basis: u32,
    m_bases: u32,
    osk_bit: u8,
    dither: f64,
) -> u8 {
    let axis = PI * basis as f64 / m_bases as f64 + dither;
    let projection = (point * Complex64::from_polar(1.0, -axis)).re;
    let parity = (basis & 1) as u8;
    let effective = if projection >= 0.0 { 1 ^ parity } else { parity };
    (effective ^ osk_bit) & 1
}

/// Decodes one IMDD slot by thresholding the count at the midpoint of the
/// keyed level pair's mean counts.
pub(crate) fn imdd_decode_slot(
    count: f64,
    basis: u32,
    cfg: &Constellation,
    osk_bit: u8,
    flip_bit: u8,
    kappa: f64,
    efficiency: f64,
) -> Result<u8> {
    let m = cfg.m_bases();
    let mean_for = |bit: u8| -> Result<f64> {
        let level = imdd_level(bit, basis, m, osk_bit, flip_bit);
        let amp = cfg.state(level - 1)?.scaled(kappa);
        Ok(efficiency * amp.mean_photon_number())
    };
    let mu0 = mean_for(0)?;
    let mu1 = mean_for(1)?;
    let threshold = 0.5 * (mu0 + mu1);
    let bit = if mu1 >= mu0 {
        u8::from(count >= threshold)
    } else {
        u8::from(count < threshold)
    };
    Ok(bit)
}

fn demodulate_with(
    mut transcript: SequenceTranscript,
    lfsr: &LfsrConfig,
    cfg: &Constellation,
    rnd: &RandomizationConfig,
    kappa: f64,
    efficiency: f64,
    mut measure: impl FnMut(CoherentAmplitude) -> Result<IdealOutcome>,
) -> Result<SequenceTranscript> {
    let n = transcript.len();
    if transcript.transmitted_states.len() != n {
        return Err(Error::InvalidInput(format!(
            "transcript has {} states for {} plaintext bits",
            transcript.transmitted_states.len(),
            n
        )));
    }
    let keys = derive_slot_keys(lfsr, cfg, rnd, n)?;
    if keys.running_key != transcript.running_key {
        return Err(Error::InvalidInput(
            "receiver key material disagrees with the transcript".into(),
        ));
    }
    let mut bob_outcomes = Vec::with_capacity(n);
    let mut bob_bits = Vec::with_capacity(n);
    let mut errors = 0u64;
    for i in 0..n {
        let received = attenuate(transcript.transmitted_states[i], kappa)?;
        let k = keys.running_key.basis_numbers[i];
        let bit = match measure(received)? {
            IdealOutcome::Heterodyne(z) => {
                bob_outcomes.push(MeasurementOutcome::HeterodynePoint(z));
                let dither = if rnd.axis_dither_enabled {
                    rnd.dither_angles[keys.dither_indices[i]]
                } else {
                    0.0
                };
                psk_decode_slot(z, k, cfg.m_bases(), keys.osk_bits[i], dither)
            }
            IdealOutcome::Count(c) => {
                bob_outcomes.push(MeasurementOutcome::PhotonCount(c.round().max(0.0) as u64));
                imdd_decode_slot(
                    c,
                    k + 1,
                    cfg,
                    keys.osk_bits[i],
                    keys.flip_bits[i],
                    kappa,
                    efficiency,
                )?
            }
        };
        if bit != transcript.plaintext_bits[i] {
            errors += 1;
        }
        bob_bits.push(bit);
    }
    transcript.bob_outcomes = bob_outcomes;
    transcript.bob_bits = bob_bits;
    transcript.bob_bit_errors = Some(errors);
    Ok(transcript)
}

/// Bob's keyed receiver: attenuates each state by `kappa`, samples his
/// measurement (PSK: heterodyne projected on the known basis axis; IMDD:
/// photon count thresholded at the known pair midpoint), and inverts the
/// keyed map including every randomization layer.
pub fn bob_demodulate<R: Rng + ?Sized>(
    transcript: SequenceTranscript,
    lfsr: &LfsrConfig,
    cfg: &Constellation,
    rnd: &RandomizationConfig,
    kappa: f64,
    efficiency: f64,
    rng: &mut R,
) -> Result<SequenceTranscript> {
    let scheme = cfg.scheme();
    demodulate_with(transcript, lfsr, cfg, rnd, kappa, efficiency, |received| {
        Ok(match scheme {
            Scheme::Psk => {
                let MeasurementOutcome::HeterodynePoint(z) = heterodyne_sample(received, rng)
                else {
                    unreachable!()
                };
                IdealOutcome::Heterodyne(z)
            }
            Scheme::Imdd => {
                let MeasurementOutcome::PhotonCount(c) =
                    photon_count_sample(received, efficiency, rng)?
                else {
                    unreachable!()
                };
                IdealOutcome::Count(c as f64)
            }
        })
    })
}

/// Noiseless-limit demodulation: every measurement returns its exact mean.
/// Recovers the plaintext exactly for any key material when the
/// constellation is nondegenerate.
pub fn bob_demodulate_noiseless(
    transcript: SequenceTranscript,
    lfsr: &LfsrConfig,
    cfg: &Constellation,
    rnd: &RandomizationConfig,
    kappa: f64,
    efficiency: f64,
) -> Result<SequenceTranscript> {
    let scheme = cfg.scheme();
    demodulate_with(transcript, lfsr, cfg, rnd, kappa, efficiency, |received| {
        Ok(match scheme {
            Scheme::Psk => IdealOutcome::Heterodyne(received.as_complex()),
            Scheme::Imdd => IdealOutcome::Count(efficiency * received.mean_photon_number()),
        })
    })
}

/// The two per-bit output ensembles an observer without the key faces.
///
/// PSK: the even-index and odd-index state classes, uniform over the running
/// key. IMDD: the lower and upper level halves. With overlap selection
/// keying enabled both ensembles are the same uniform mixture over all 2M
/// states.
pub fn eve_bit_ensembles(
    cfg: &Constellation,
    osk_enabled: bool,
) -> Result<(MixtureState, MixtureState)> {
    let states = cfg.states();
    if osk_enabled {
        let all = MixtureState::uniform(states)?;
        return Ok((all.clone(), all));
    }
    let (class0, class1): (Vec<_>, Vec<_>) = match cfg.scheme() {
        Scheme::Psk => (
            states.iter().copied().step_by(2).collect(),
            states.iter().copied().skip(1).step_by(2).collect(),
        ),
        Scheme::Imdd => {
            let m = cfg.m_bases() as usize;
            (states[..m].to_vec(), states[m..].to_vec())
        }
    };
    Ok((MixtureState::uniform(class0)?, MixtureState::uniform(class1)?))
}

/// The upper/lower level-half ensembles of the intensity scheme. With the
/// numbering flip enabled both collapse to the uniform mixture over all
/// levels.
pub fn imdd_updown_ensembles(
    cfg: &Constellation,
    flip_enabled: bool,
) -> Result<(MixtureState, MixtureState)> {
    if cfg.scheme() != Scheme::Imdd {
        return Err(Error::InvalidInput(
            "up/down ensembles are defined for the intensity scheme".into(),
        ));
    }
    let states = cfg.states();
    if flip_enabled {
        let all = MixtureState::uniform(states)?;
        return Ok((all.clone(), all));
    }
    let m = cfg.m_bases() as usize;
    Ok((
        MixtureState::uniform(states[m..].to_vec())?,
        MixtureState::uniform(states[..m].to_vec())?,
    ))
}
