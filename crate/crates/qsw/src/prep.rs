//! The family of states reachable after a reset.
//!
//! Once a qutrit sits at `|2⟩`, iterating the two letters produces the
//! two-parameter family `B^k A2^j |2⟩` of real states on the unit sphere,
//! and adding the phase gate extends it to `C^l B^k A2^j |2⟩` with complex
//! amplitudes. With incommensurate angles these families become dense, so a
//! target state can be compiled into a reset prefix followed by a block of
//! `A`s, `B`s and `C`s.
//!
//! Distances between states are projective: `arccos |⟨psi|chi⟩|` identifies
//! `±psi`. Coverage of the sphere is probed with a deterministic seeded
//! point set, so coverage numbers are reproducible.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::channels::{phase_matrix, rot12_matrix, rot23_matrix, QuantumAlphabet};
use crate::exec;
use crate::linalg::{random_pure, ComplexVec3, PureState};
use crate::{Error, Result};

/// Cap on the number of states a family may generate at once.
pub const FAMILY_STATE_CAP: usize = 1_000_000;

/// Tolerance on `|a alpha - b beta| mod 2pi` below which an integer pair
/// counts as a commensurability witness. Distinguishes exact rational
/// relations from floating-point noise at unit scale.
pub const COMMENSURABILITY_TOL: f64 = 1e-9;

const REAL_AMPLITUDE_TOL: f64 = 1e-12;

/// Gate counts `(l, k, j)` indexing one prepared state: `l` phase gates,
/// `k` planar rotations, `j` reset-plane rotations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PrepIndex {
    pub l: usize,
    pub k: usize,
    pub j: usize,
}

impl PrepIndex {
    pub fn new(l: usize, k: usize, j: usize) -> Self {
        PrepIndex { l, k, j }
    }
}

/// A preparation family: angles for the gates and the index range `n`
/// (all gate counts run over `0..n`).
#[derive(Clone, Debug)]
pub struct PrepFamily {
    theta: f64,
    phi: f64,
    phase: Option<(f64, f64)>,
    n: usize,
}

impl PrepFamily {
    /// Real family `B^k A2^j |2⟩` with `k, j in 0..n`.
    pub fn real(theta: f64, phi: f64, n: usize) -> Result<Self> {
        Self::build(theta, phi, None, n)
    }

    /// Complex family `C^l B^k A2^j |2⟩` with `l, k, j in 0..n`.
    pub fn complex(theta: f64, phi: f64, alpha: f64, beta: f64, n: usize) -> Result<Self> {
        if !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::Validation("phase angles must be finite".into()));
        }
        Self::build(theta, phi, Some((alpha, beta)), n)
    }

    fn build(theta: f64, phi: f64, phase: Option<(f64, f64)>, n: usize) -> Result<Self> {
        if !theta.is_finite() || !phi.is_finite() {
            return Err(Error::Validation("family angles must be finite".into()));
        }
        if n == 0 {
            return Err(Error::Validation("family index range n must be >= 1".into()));
        }
        Ok(PrepFamily {
            theta,
            phi,
            phase,
            n,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn phase(&self) -> Option<(f64, f64)> {
        self.phase
    }

    pub fn is_complex(&self) -> bool {
        self.phase.is_some()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n^2` states for a real family, `n^3` with the phase gate.
    pub fn state_count(&self) -> usize {
        if self.is_complex() {
            self.n * self.n * self.n
        } else {
            self.n * self.n
        }
    }

    /// The alphabet whose letters realize this family at its angles.
    pub fn alphabet(&self) -> QuantumAlphabet {
        match self.phase {
            Some((alpha, beta)) => QuantumAlphabet::abc(self.theta, self.phi, alpha, beta),
            None => QuantumAlphabet::ab(self.theta, self.phi),
        }
    }

    pub fn contains(&self, idx: &PrepIndex) -> bool {
        idx.k < self.n && idx.j < self.n && (idx.l == 0 || (self.is_complex() && idx.l < self.n))
    }

    fn check_cap(&self) -> Result<()> {
        let count = self.state_count();
        if count > FAMILY_STATE_CAP {
            return Err(Error::Refused(format!(
                "family would generate {count} states, above the cap of {FAMILY_STATE_CAP}"
            )));
        }
        Ok(())
    }

    fn index_at(&self, flat: usize) -> PrepIndex {
        let n = self.n;
        if self.is_complex() {
            PrepIndex::new(flat / (n * n), (flat / n) % n, flat % n)
        } else {
            PrepIndex::new(0, flat / n, flat % n)
        }
    }
}

/// Index range that spaces successive rotations `delta` apart over a full
/// turn: `ceil(2 pi / delta)`.
pub fn index_range_for_spacing(delta: f64) -> Result<usize> {
    if !delta.is_finite() || delta <= 0.0 {
        return Err(Error::Validation(format!(
            "spacing must be a positive angle, got {delta}"
        )));
    }
    Ok((std::f64::consts::TAU / delta).ceil() as usize)
}

/// The state `C^l B^k A2^j |2⟩`, built by iterated matrix application.
///
/// The amplitude magnitudes equal `(|sin k phi cos j theta|,
/// |cos k phi cos j theta|, |sin j theta|)`.
pub fn prep_state(family: &PrepFamily, idx: &PrepIndex) -> Result<PureState> {
    if !family.contains(idx) {
        return Err(Error::Validation(format!(
            "index (l={}, k={}, j={}) outside the family ranges (n = {}, {})",
            idx.l,
            idx.k,
            idx.j,
            family.n,
            if family.is_complex() {
                "with phase gate"
            } else {
                "real family"
            }
        )));
    }
    let a2 = rot23_matrix(family.theta);
    let b = rot12_matrix(family.phi);
    let mut v = ComplexVec3::unit(1);
    for _ in 0..idx.j {
        v = a2.mul_vec(&v);
    }
    for _ in 0..idx.k {
        v = b.mul_vec(&v);
    }
    if let Some((alpha, beta)) = family.phase {
        let c = phase_matrix(alpha, beta);
        for _ in 0..idx.l {
            v = c.mul_vec(&v);
        }
    }
    PureState::new(v)
}

fn family_states_with(family: &PrepFamily, parallel: bool) -> Result<Vec<(PrepIndex, PureState)>> {
    family.check_cap()?;
    Ok(exec::indexed_map_choice(parallel, family.state_count(), |flat| {
        let idx = family.index_at(flat);
        let state = prep_state(family, &idx).expect("enumerated index is in range");
        (idx, state)
    }))
}

/// Every state of the family, in lexicographic `(l, k, j)` index order.
pub fn generate_family(family: &PrepFamily) -> Result<Vec<(PrepIndex, PureState)>> {
    family_states_with(family, true)
}

/// Single-threaded twin of [`generate_family`]; identical results.
pub fn generate_family_seq(family: &PrepFamily) -> Result<Vec<(PrepIndex, PureState)>> {
    family_states_with(family, false)
}

/// How well a family covers the space of pure states.
#[derive(Clone, Debug)]
pub struct CoverageReport {
    pub family: PrepFamily,
    /// Largest projective angle from any probe target to its nearest
    /// family state.
    pub covering_radius: f64,
    pub num_states: usize,
    /// The probe target realizing the covering radius.
    pub worst_target: PureState,
}

fn splitmix64(seed: u64) -> u64 {
    let mut z = seed.wrapping_add(0x9E3779B97F4A7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

/// Deterministic low-discrepancy probe set on the real unit sphere: a
/// golden-angle lattice, rotated in azimuth by a seed-derived offset.
fn sphere_lattice(num: usize, seed: u64) -> Vec<[f64; 3]> {
    let offset = (splitmix64(seed) >> 11) as f64 / (1u64 << 53) as f64;
    let golden = std::f64::consts::PI * (3.0 - 5.0_f64.sqrt());
    (0..num)
        .map(|i| {
            let z = 1.0 - 2.0 * (i as f64 + 0.5) / num as f64;
            let r = (1.0 - z * z).max(0.0).sqrt();
            let az = golden * i as f64 + std::f64::consts::TAU * offset;
            [r * az.cos(), r * az.sin(), z]
        })
        .collect()
}

fn covering_radius_with(
    family: &PrepFamily,
    num_probes: usize,
    seed: u64,
    parallel: bool,
) -> Result<CoverageReport> {
    if num_probes < 100 {
        return Err(Error::Validation(format!(
            "coverage needs at least 100 probe targets, got {num_probes}"
        )));
    }
    let states = generate_family_seq(family)?;
    let num_states = states.len();

    let (probes, angles): (Vec<PureState>, Vec<f64>) = if family.is_complex() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let probes: Vec<PureState> = (0..num_probes).map(|_| random_pure(&mut rng)).collect();
        let amp: Vec<ComplexVec3> = states.iter().map(|(_, s)| *s.amplitudes()).collect();
        let angles = exec::indexed_map_choice(parallel, num_probes, |i| {
            let t = probes[i].amplitudes();
            let best = amp
                .iter()
                .map(|s| t.inner(s).norm())
                .fold(0.0f64, f64::max);
            best.clamp(0.0, 1.0).acos()
        });
        (probes, angles)
    } else {
        // real family: probe the real sphere and use real dot products
        let lattice = sphere_lattice(num_probes, seed);
        let amp: Vec<[f64; 3]> = states
            .iter()
            .map(|(_, s)| {
                let a = s.amplitudes().0;
                [a[0].re, a[1].re, a[2].re]
            })
            .collect();
        let angles = exec::indexed_map_choice(parallel, num_probes, |i| {
            let t = lattice[i];
            let best = amp
                .iter()
                .map(|s| (t[0] * s[0] + t[1] * s[1] + t[2] * s[2]).abs())
                .fold(0.0f64, f64::max);
            best.clamp(0.0, 1.0).acos()
        });
        let probes = lattice
            .into_iter()
            .map(|p| {
                PureState::new(ComplexVec3::from_real(p[0], p[1], p[2]))
                    .expect("lattice points are unit vectors")
            })
            .collect();
        (probes, angles)
    };

    // first probe index wins ties, independent of evaluation order
    let mut worst = 0usize;
    for (i, a) in angles.iter().enumerate() {
        if *a > angles[worst] {
            worst = i;
        }
    }
    Ok(CoverageReport {
        family: family.clone(),
        covering_radius: angles[worst],
        num_states,
        worst_target: probes[worst],
    })
}

/// Covering radius of the family against `num_probes` deterministic probe
/// targets: real families are probed with a seeded lattice on the real
/// sphere, complex families with seeded Haar-random states.
pub fn covering_radius(family: &PrepFamily, num_probes: usize, seed: u64) -> Result<CoverageReport> {
    covering_radius_with(family, num_probes, seed, true)
}

/// Single-threaded twin of [`covering_radius`]; identical results.
pub fn covering_radius_seq(
    family: &PrepFamily,
    num_probes: usize,
    seed: u64,
) -> Result<CoverageReport> {
    covering_radius_with(family, num_probes, seed, false)
}

/// A compiled preparation: reset prefix plus gate blocks.
#[derive(Clone, Debug)]
pub struct CompileResult {
    pub index: PrepIndex,
    /// `"ABA"` then `j` letters `A`, `k` letters `B`, `l` letters `C`.
    pub full_word: String,
    /// `|⟨target|state(index)⟩|^2`.
    pub predicted_fidelity: f64,
}

fn compile_target_with(
    family: &PrepFamily,
    target: &PureState,
    parallel: bool,
) -> Result<CompileResult> {
    if !family.is_complex() && !target.amplitudes().is_real(REAL_AMPLITUDE_TOL) {
        return Err(Error::Validation(
            "target has complex amplitudes but the family has no phase gate C; \
             build the family with (alpha, beta)"
                .into(),
        ));
    }
    family.check_cap()?;
    let fidelities = exec::indexed_map_choice(parallel, family.state_count(), |flat| {
        let idx = family.index_at(flat);
        let state = prep_state(family, &idx).expect("enumerated index is in range");
        target.overlap(&state).norm_sqr()
    });
    // strict improvement keeps the lexicographically smallest index on ties
    let mut best = 0usize;
    for (i, f) in fidelities.iter().enumerate() {
        if *f > fidelities[best] {
            best = i;
        }
    }
    let index = family.index_at(best);
    let mut full_word = String::from("ABA");
    full_word.push_str(&"A".repeat(index.j));
    full_word.push_str(&"B".repeat(index.k));
    full_word.push_str(&"C".repeat(index.l));
    Ok(CompileResult {
        index,
        full_word,
        predicted_fidelity: fidelities[best],
    })
}

/// Exhaustive scan over the family for the state closest to `target` in
/// projective distance; ties go to the smallest `(l, k, j)`.
///
/// Real-valued targets are required when the family has no phase gate.
pub fn compile_target(family: &PrepFamily, target: &PureState) -> Result<CompileResult> {
    compile_target_with(family, target, true)
}

/// Single-threaded twin of [`compile_target`]; identical results.
pub fn compile_target_seq(family: &PrepFamily, target: &PureState) -> Result<CompileResult> {
    compile_target_with(family, target, false)
}

/// Result of searching for integer pairs `(a, b)` with
/// `a alpha ≈ b beta (mod 2pi)`.
#[derive(Clone, Copy, Debug)]
pub struct CommensurabilityReport {
    pub commensurate_pair_found: bool,
    /// The witness with the smallest `a + b`, when one exists.
    pub witness: Option<(u64, u64)>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Searches coprime pairs `a, b <= max_denominator` for
/// `|a alpha - b beta| mod 2pi <= 1e-9`, in order of increasing `a + b`.
/// Pairs with `a = 0` or `b = 0` test commensurability of a single angle
/// with `2pi`.
pub fn check_incommensurability(
    alpha: f64,
    beta: f64,
    max_denominator: u64,
) -> Result<CommensurabilityReport> {
    if max_denominator < 1 {
        return Err(Error::Validation("max_denominator must be >= 1".into()));
    }
    if !alpha.is_finite() || !beta.is_finite() {
        return Err(Error::Validation("angles must be finite".into()));
    }
    let tau = std::f64::consts::TAU;
    for sum in 1..=(2 * max_denominator) {
        let lo = sum.saturating_sub(max_denominator);
        let hi = sum.min(max_denominator);
        for a in lo..=hi {
            let b = sum - a;
            if gcd(a, b) != 1 {
                continue;
            }
            let x = (a as f64 * alpha - b as f64 * beta).abs() % tau;
            let folded = x.min(tau - x);
            if folded <= COMMENSURABILITY_TOL {
                return Ok(CommensurabilityReport {
                    commensurate_pair_found: true,
                    witness: Some((a, b)),
                });
            }
        }
    }
    Ok(CommensurabilityReport {
        commensurate_pair_found: false,
        witness: None,
    })
}
