//! Quantum letters as Kraus channels.
//!
//! The alphabet that drives a qutrit consists of three parametric channel
//! families plus the identity:
//!
//! * [`rot23_with_reset`] - the irreversible letter `A`: one Kraus operator
//!   projects `|1⟩` onto `|2⟩`, the other rotates by `theta` in the (2,3)
//!   plane. `A(rho) = A1 rho A1† + A2 rho A2†`.
//! * [`rot12`] - the unitary letter `B`, a rotation by `phi` in the (1,2)
//!   plane.
//! * [`phase`] - the unitary letter `C`, `diag(1, e^{i alpha}, e^{i beta})`,
//!   which extends the real alphabet to complex amplitudes.
//!
//! Letters concatenate into words; a word applies left-to-right, so `ABA`
//! applies `A` first. The Heisenberg-picture dual [`QuantumWord::adjoint_apply`]
//! evolves observables backwards and is what worst-case fidelities are
//! computed from.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::linalg::{ComplexMat3, DensityMatrix, C64};
use crate::{Error, Result};

/// Entrywise tolerance on the completeness sum `Σ K†K = I`.
pub const COMPLETENESS_TOL: f64 = 1e-12;

/// A trace-preserving quantum channel given by its Kraus operators.
#[derive(Clone, Debug)]
pub struct KrausChannel {
    name: String,
    ops: Vec<ComplexMat3>,
}

impl KrausChannel {
    /// Validates completeness eagerly: `Σ K†K = I` within
    /// [`COMPLETENESS_TOL`] entrywise. All downstream trace-preservation
    /// guarantees rely on this check.
    pub fn new(name: impl Into<String>, ops: Vec<ComplexMat3>) -> Result<Self> {
        let name = name.into();
        if ops.is_empty() {
            return Err(Error::Validation(format!(
                "channel {name} has no Kraus operators"
            )));
        }
        let mut sum = ComplexMat3::zeros();
        for k in &ops {
            sum = sum + k.adjoint() * *k;
        }
        let dev = (sum - ComplexMat3::identity()).max_abs_entry();
        if dev > COMPLETENESS_TOL {
            return Err(Error::Validation(format!(
                "channel {name} violates completeness: max |Σ K†K - I| entry = {dev:.3e}"
            )));
        }
        Ok(KrausChannel { name, ops })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kraus_ops(&self) -> &[ComplexMat3] {
        &self.ops
    }

    /// `Σ K rho K†`, re-symmetrized before validation to strip benign
    /// floating-point asymmetry.
    pub fn apply(&self, rho: &DensityMatrix) -> DensityMatrix {
        let mut out = ComplexMat3::zeros();
        for k in &self.ops {
            out = out + *k * *rho.matrix() * k.adjoint();
        }
        DensityMatrix::new(out.hermitize())
            .expect("a complete channel maps density matrices to density matrices")
    }

    /// Heisenberg-picture dual `Σ K† X K` on a raw observable.
    pub fn adjoint_apply(&self, obs: &ComplexMat3) -> ComplexMat3 {
        let mut out = ComplexMat3::zeros();
        for k in &self.ops {
            out = out + k.adjoint() * *obs * *k;
        }
        out
    }

    /// True when the channel is a single Kraus operator `K` with
    /// `K†K = KK† = I` within [`COMPLETENESS_TOL`].
    pub fn is_unitary(&self) -> bool {
        if self.ops.len() != 1 {
            return false;
        }
        let k = &self.ops[0];
        let i = ComplexMat3::identity();
        (k.adjoint() * *k - i).max_abs_entry() <= COMPLETENESS_TOL
            && (*k * k.adjoint() - i).max_abs_entry() <= COMPLETENESS_TOL
    }
}

pub(crate) fn rot23_matrix(theta: f64) -> ComplexMat3 {
    let (s, c) = theta.sin_cos();
    ComplexMat3::from_real_rows([[0.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]])
}

pub(crate) fn rot12_matrix(phi: f64) -> ComplexMat3 {
    let (s, c) = phi.sin_cos();
    ComplexMat3::from_real_rows([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
}

pub(crate) fn phase_matrix(alpha: f64, beta: f64) -> ComplexMat3 {
    ComplexMat3::diagonal([
        C64::new(1.0, 0.0),
        C64::from_polar(1.0, alpha),
        C64::from_polar(1.0, beta),
    ])
}

/// The irreversible letter `A(theta)`: `A1 = |2⟩⟨1|` plus a rotation by
/// `theta` in the (2,3) plane with zero first row and column.
pub fn rot23_with_reset(theta: f64) -> KrausChannel {
    assert!(theta.is_finite(), "theta must be finite");
    let mut a1 = ComplexMat3::zeros();
    a1.0[1][0] = C64::new(1.0, 0.0);
    KrausChannel::new("rot23_with_reset", vec![a1, rot23_matrix(theta)])
        .expect("A1†A1 + A2†A2 = I for every theta")
}

/// The unitary letter `B(phi)`: rotation by `phi` in the (1,2) plane.
pub fn rot12(phi: f64) -> KrausChannel {
    assert!(phi.is_finite(), "phi must be finite");
    KrausChannel::new("rot12", vec![rot12_matrix(phi)])
        .expect("a rotation matrix is unitary for every phi")
}

/// The unitary letter `C(alpha, beta)`: `diag(1, e^{i alpha}, e^{i beta})`.
pub fn phase(alpha: f64, beta: f64) -> KrausChannel {
    assert!(
        alpha.is_finite() && beta.is_finite(),
        "alpha and beta must be finite"
    );
    KrausChannel::new("phase", vec![phase_matrix(alpha, beta)])
        .expect("a diagonal unit-modulus matrix is unitary")
}

/// The do-nothing letter.
pub fn identity() -> KrausChannel {
    KrausChannel::new("identity", vec![ComplexMat3::identity()]).expect("identity is unitary")
}

/// A named set of quantum letters, keyed by single-character names.
#[derive(Clone, Debug, Default)]
pub struct QuantumAlphabet {
    letters: BTreeMap<char, KrausChannel>,
}

impl QuantumAlphabet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Binds a channel to a letter name. Letter names are unique.
    pub fn insert(&mut self, letter: char, channel: KrausChannel) -> Result<()> {
        if self.letters.contains_key(&letter) {
            return Err(Error::Validation(format!(
                "letter {letter:?} is already bound in this alphabet"
            )));
        }
        self.letters.insert(letter, channel);
        Ok(())
    }

    /// The two-letter alphabet `{A: rot23_with_reset(theta), B: rot12(phi)}`.
    pub fn ab(theta: f64, phi: f64) -> Self {
        let mut a = Self::new();
        a.insert('A', rot23_with_reset(theta)).expect("empty alphabet");
        a.insert('B', rot12(phi)).expect("fresh letter");
        a
    }

    /// The three-letter alphabet extending [`QuantumAlphabet::ab`] with the
    /// phase gate `C(alpha, beta)`.
    pub fn abc(theta: f64, phi: f64, alpha: f64, beta: f64) -> Self {
        let mut a = Self::ab(theta, phi);
        a.insert('C', phase(alpha, beta)).expect("fresh letter");
        a
    }

    pub fn channel(&self, letter: char) -> Option<&KrausChannel> {
        self.letters.get(&letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = char> + '_ {
        self.letters.keys().copied()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses the JSON alphabet specification, e.g.
    ///
    /// ```json
    /// { "letters": {
    ///     "A": {"type": "rot23_with_reset", "theta": 1.5707},
    ///     "B": {"type": "rot12", "phi": 1.5707},
    ///     "C": {"type": "phase", "alpha": 0.9, "beta": 0.31} } }
    /// ```
    ///
    /// Angles are radians in decimal notation.
    pub fn from_spec_json(text: &str) -> Result<Self> {
        let spec: AlphabetSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("alphabet spec: {e}")))?;
        let mut alphabet = Self::new();
        for (name, letter) in spec.letters {
            let mut chars = name.chars();
            let (Some(ch), None) = (chars.next(), chars.next()) else {
                return Err(Error::Parse(format!(
                    "letter name {name:?} must be a single character"
                )));
            };
            let channel = match letter {
                LetterSpec::Rot23WithReset { theta } => rot23_with_reset(theta),
                LetterSpec::Rot12 { phi } => rot12(phi),
                LetterSpec::Phase { alpha, beta } => phase(alpha, beta),
                LetterSpec::Identity => identity(),
            };
            alphabet.insert(ch, channel)?;
        }
        Ok(alphabet)
    }
}

#[derive(Deserialize)]
struct AlphabetSpec {
    letters: BTreeMap<String, LetterSpec>,
}

#[derive(Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
enum LetterSpec {
    Rot23WithReset { theta: f64 },
    Rot12 { phi: f64 },
    Phase { alpha: f64, beta: f64 },
    Identity,
}

/// An ordered sequence of letters over one fixed alphabet. Application is
/// left-to-right: the word `ABA` applies `A`, then `B`, then `A`.
#[derive(Clone, Debug)]
pub struct QuantumWord<'a> {
    letters: Vec<char>,
    alphabet: &'a QuantumAlphabet,
}

impl<'a> QuantumWord<'a> {
    /// Validates every letter against the alphabet at construction.
    pub fn new(alphabet: &'a QuantumAlphabet, word: &str) -> Result<Self> {
        for ch in word.chars() {
            if alphabet.channel(ch).is_none() {
                return Err(Error::Validation(format!(
                    "word {word:?} uses letter {ch:?} which is not in the alphabet"
                )));
            }
        }
        Ok(QuantumWord {
            letters: word.chars().collect(),
            alphabet,
        })
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn as_string(&self) -> String {
        self.letters.iter().collect()
    }

    pub fn alphabet(&self) -> &QuantumAlphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Sequential left-to-right application; equals the nested single
    /// applications. The empty word leaves `rho` unchanged.
    pub fn apply(&self, rho: &DensityMatrix) -> DensityMatrix {
        let mut state = *rho;
        for ch in &self.letters {
            let channel = self.alphabet.channel(*ch).expect("validated at construction");
            state = channel.apply(&state);
        }
        state
    }

    /// Heisenberg-picture dual `W†(obs)`: letters applied in reverse order
    /// with `Σ K† obs K`. Satisfies `tr(W(rho) X) = tr(rho W†(X))`.
    ///
    /// Rejects observables whose Hermiticity deviation exceeds the entrywise
    /// tolerance used everywhere else.
    pub fn adjoint_apply(&self, obs: &ComplexMat3) -> Result<ComplexMat3> {
        let dev = obs.hermiticity_deviation();
        if dev > crate::linalg::HERMITICITY_TOL {
            return Err(Error::Validation(format!(
                "observable is not Hermitian: deviation {dev:.3e}"
            )));
        }
        let mut x = obs.hermitize();
        for ch in self.letters.iter().rev() {
            let channel = self.alphabet.channel(*ch).expect("validated at construction");
            x = channel.adjoint_apply(&x).hermitize();
        }
        Ok(x)
    }
}
