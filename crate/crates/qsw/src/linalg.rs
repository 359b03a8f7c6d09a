//! Minimal dense complex linear algebra for dimension 3.
//!
//! Everything a qutrit needs and nothing more: complex 3-vectors and 3x3
//! matrices, Hermitian eigenvalues via cyclic Jacobi rotations, and the two
//! validated state types [`PureState`] and [`DensityMatrix`]. All values are
//! immutable after construction and every operation is a pure function.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;

use crate::{Error, Result};

/// Complex scalar used throughout the crate.
pub type C64 = Complex64;

/// Hilbert-space dimension. Fixed; the matrices in this crate are all 3x3.
pub const DIM: usize = 3;

/// Entrywise tolerance for Hermiticity checks, `max |M - M†|`.
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Tolerance on `|tr(M) - 1|` for density matrices.
pub const UNIT_TRACE_TOL: f64 = 1e-12;
/// Tolerance on `|norm - 1|` for pure-state amplitudes.
pub const UNIT_NORM_TOL: f64 = 1e-12;
/// Eigenvalue floor for positive semidefiniteness. One order looser than
/// the arithmetic tolerances: channel application accumulates rounding.
pub const PSD_EIGENVALUE_FLOOR: f64 = -1e-10;

const JACOBI_OFF_TOL: f64 = 1e-14;
const JACOBI_MAX_SWEEPS: usize = 100;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

/// A complex 3-vector of dimensionless amplitudes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexVec3(pub [C64; 3]);

impl ComplexVec3 {
    pub fn zeros() -> Self {
        ComplexVec3([ZERO; 3])
    }

    /// Unit vector with a single 1 at `index` (0-based).
    pub fn unit(index: usize) -> Self {
        assert!(index < DIM, "unit vector index out of range");
        let mut v = [ZERO; 3];
        v[index] = ONE;
        ComplexVec3(v)
    }

    pub fn from_real(x: f64, y: f64, z: f64) -> Self {
        ComplexVec3([C64::new(x, 0.0), C64::new(y, 0.0), C64::new(z, 0.0)])
    }

    /// Inner product `⟨self|other⟩` (conjugate-linear in `self`).
    pub fn inner(&self, other: &ComplexVec3) -> C64 {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.0.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sqr().sqrt()
    }

    pub fn scale(&self, factor: C64) -> Self {
        let mut v = self.0;
        for a in &mut v {
            *a *= factor;
        }
        ComplexVec3(v)
    }

    /// Outer product `|self⟩⟨self|`.
    pub fn outer(&self) -> ComplexMat3 {
        let mut m = ComplexMat3::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] = self.0[i] * self.0[j].conj();
            }
        }
        m
    }

    /// True when every amplitude has imaginary part within `tol` of zero.
    pub fn is_real(&self, tol: f64) -> bool {
        self.0.iter().all(|a| a.im.abs() <= tol)
    }
}

/// A complex 3x3 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMat3(pub [[C64; 3]; 3]);

impl ComplexMat3 {
    pub fn zeros() -> Self {
        ComplexMat3([[ZERO; 3]; 3])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            m.0[i][i] = ONE;
        }
        m
    }

    pub fn from_rows(rows: [[C64; 3]; 3]) -> Self {
        ComplexMat3(rows)
    }

    pub fn from_real_rows(rows: [[f64; 3]; 3]) -> Self {
        ComplexMat3(rows.map(|row| row.map(|x| C64::new(x, 0.0))))
    }

    pub fn diagonal(d: [C64; 3]) -> Self {
        let mut m = Self::zeros();
        for (i, value) in d.into_iter().enumerate() {
            m.0[i][i] = value;
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] = self.0[j][i].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> C64 {
        self.0[0][0] + self.0[1][1] + self.0[2][2]
    }

    pub fn scale(&self, factor: C64) -> Self {
        let mut m = *self;
        for row in &mut m.0 {
            for a in row {
                *a *= factor;
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &ComplexVec3) -> ComplexVec3 {
        let mut out = [ZERO; 3];
        for (row, slot) in self.0.iter().zip(&mut out) {
            for (a, b) in row.iter().zip(&v.0) {
                *slot += a * b;
            }
        }
        ComplexVec3(out)
    }

    /// Largest entry modulus of `self`.
    pub fn max_abs_entry(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|a| a.norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry modulus of `M - M†`.
    pub fn hermiticity_deviation(&self) -> f64 {
        (*self - self.adjoint()).max_abs_entry()
    }

    /// Exact symmetrization `(M + M†)/2`. A mathematical no-op on Hermitian
    /// input; removes floating-point asymmetry.
    pub fn hermitize(&self) -> Self {
        (*self + self.adjoint()).scale(C64::new(0.5, 0.0))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.0
            .iter()
            .flatten()
            .map(|a| a.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..DIM {
            for j in 0..DIM {
                if i != j {
                    s += self.0[i][j].norm_sqr();
                }
            }
        }
        s.sqrt()
    }
}

impl Add for ComplexMat3 {
    type Output = ComplexMat3;
    fn add(self, rhs: ComplexMat3) -> ComplexMat3 {
        let mut m = self;
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] += rhs.0[i][j];
            }
        }
        m
    }
}

impl Sub for ComplexMat3 {
    type Output = ComplexMat3;
    fn sub(self, rhs: ComplexMat3) -> ComplexMat3 {
        let mut m = self;
        for i in 0..DIM {
            for j in 0..DIM {
                m.0[i][j] -= rhs.0[i][j];
            }
        }
        m
    }
}

impl Neg for ComplexMat3 {
    type Output = ComplexMat3;
    fn neg(self) -> ComplexMat3 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for ComplexMat3 {
    type Output = ComplexMat3;
    fn mul(self, rhs: ComplexMat3) -> ComplexMat3 {
        let mut m = ComplexMat3::zeros();
        for i in 0..DIM {
            for k in 0..DIM {
                let a = self.0[i][k];
                for j in 0..DIM {
                    m.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        m
    }
}

/// Eigenvalues of a Hermitian 3x3 matrix, ascending.
///
/// Cyclic Jacobi rotations on the Hermitian matrix, iterated until the
/// off-diagonal Frobenius norm drops below 1e-14, capped at 100 sweeps.
/// Rejects input whose Hermiticity deviation exceeds [`HERMITICITY_TOL`].
pub fn hermitian_eigenvalues(m: &ComplexMat3) -> Result<[f64; 3]> {
    let dev = m.hermiticity_deviation();
    if dev > HERMITICITY_TOL {
        return Err(Error::Validation(format!(
            "matrix is not Hermitian: max |M - M†| entry = {dev:.3e} exceeds {HERMITICITY_TOL:.0e}"
        )));
    }
    let mut a = m.hermitize();
    for _ in 0..JACOBI_MAX_SWEEPS {
        if a.off_diagonal_norm() <= JACOBI_OFF_TOL {
            break;
        }
        for (p, q) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let b = a.0[p][q];
            let abs_b = b.norm();
            if abs_b == 0.0 {
                continue;
            }
            // Phase-rotate the (p,q) entry onto the real axis, then apply a
            // real Jacobi rotation that zeroes it.
            let w = b / abs_b;
            let tau = (a.0[q][q].re - a.0[p][p].re) / (2.0 * abs_b);
            let t = if tau >= 0.0 {
                1.0 / (tau + (1.0 + tau * tau).sqrt())
            } else {
                -1.0 / (-tau + (1.0 + tau * tau).sqrt())
            };
            let c = 1.0 / (1.0 + t * t).sqrt();
            let s = t * c;
            let mut g = ComplexMat3::identity();
            g.0[p][p] = C64::new(c, 0.0);
            g.0[p][q] = C64::new(s, 0.0);
            g.0[q][p] = w.conj() * C64::new(-s, 0.0);
            g.0[q][q] = w.conj() * C64::new(c, 0.0);
            a = g.adjoint() * a * g;
        }
    }
    let mut eigs = [a.0[0][0].re, a.0[1][1].re, a.0[2][2].re];
    eigs.sort_by(|x, y| x.partial_cmp(y).expect("eigenvalues are finite"));
    Ok(eigs)
}

/// A normalized pure qutrit state.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PureState {
    amplitudes: ComplexVec3,
}

impl PureState {
    /// Wraps amplitudes whose norm is 1 within [`UNIT_NORM_TOL`].
    pub fn new(amplitudes: ComplexVec3) -> Result<Self> {
        let norm = amplitudes.norm();
        if (norm - 1.0).abs() > UNIT_NORM_TOL {
            return Err(Error::Validation(format!(
                "pure state is not normalized: |norm - 1| = {:.3e}",
                (norm - 1.0).abs()
            )));
        }
        Ok(PureState { amplitudes })
    }

    /// Normalizes arbitrary nonzero amplitudes.
    pub fn normalized(amplitudes: ComplexVec3) -> Result<Self> {
        let norm = amplitudes.norm();
        if norm <= 0.0 || !norm.is_finite() {
            return Err(Error::Validation(
                "cannot normalize a zero or non-finite amplitude vector".into(),
            ));
        }
        Ok(PureState {
            amplitudes: amplitudes.scale(C64::new(1.0 / norm, 0.0)),
        })
    }

    /// Basis ket `|label⟩` for the 1-based labels 1, 2, 3.
    pub fn basis_ket(label: usize) -> Result<Self> {
        if !(1..=DIM).contains(&label) {
            return Err(Error::Validation(format!(
                "basis label {label} out of range 1..={DIM}"
            )));
        }
        Ok(PureState {
            amplitudes: ComplexVec3::unit(label - 1),
        })
    }

    pub fn amplitudes(&self) -> &ComplexVec3 {
        &self.amplitudes
    }

    /// `⟨self|other⟩`.
    pub fn overlap(&self, other: &PureState) -> C64 {
        self.amplitudes.inner(&other.amplitudes)
    }

    /// Projector `|self⟩⟨self|` as a raw matrix.
    pub fn projector(&self) -> ComplexMat3 {
        self.amplitudes.outer()
    }

    /// Projective angle `arccos |⟨self|other⟩|`, which ignores global phase.
    pub fn projective_angle(&self, other: &PureState) -> f64 {
        self.overlap(other).norm().clamp(0.0, 1.0).acos()
    }
}

/// A validated qutrit density matrix: Hermitian, unit trace, positive
/// semidefinite within the documented tolerances.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMat3,
}

impl DensityMatrix {
    pub fn new(matrix: ComplexMat3) -> Result<Self> {
        let dev = matrix.hermiticity_deviation();
        if dev > HERMITICITY_TOL {
            return Err(Error::Validation(format!(
                "density matrix is not Hermitian: deviation {dev:.3e}"
            )));
        }
        let tr = matrix.trace();
        if (tr.re - 1.0).abs() > UNIT_TRACE_TOL || tr.im.abs() > UNIT_TRACE_TOL {
            return Err(Error::Validation(format!(
                "density matrix trace is {tr} instead of 1"
            )));
        }
        let eigs = hermitian_eigenvalues(&matrix)?;
        if eigs[0] < PSD_EIGENVALUE_FLOOR {
            return Err(Error::Validation(format!(
                "density matrix is not positive semidefinite: min eigenvalue {:.3e}",
                eigs[0]
            )));
        }
        Ok(DensityMatrix { matrix })
    }

    /// `|psi⟩⟨psi|`.
    pub fn from_pure(psi: &PureState) -> Self {
        DensityMatrix::new(psi.projector().hermitize())
            .expect("projector of a normalized state is a valid density matrix")
    }

    /// `I/3`, the state of complete ignorance.
    pub fn maximally_mixed() -> Self {
        DensityMatrix {
            matrix: ComplexMat3::identity().scale(C64::new(1.0 / 3.0, 0.0)),
        }
    }

    pub fn matrix(&self) -> &ComplexMat3 {
        &self.matrix
    }

    pub fn eigenvalues(&self) -> [f64; 3] {
        hermitian_eigenvalues(&self.matrix).expect("validated density matrix is Hermitian")
    }

    /// `⟨psi|rho|psi⟩`, clamped to `[0, 1]`.
    pub fn fidelity_with_pure(&self, psi: &PureState) -> f64 {
        let v = self.matrix.mul_vec(psi.amplitudes());
        psi.amplitudes().inner(&v).re.clamp(0.0, 1.0)
    }
}

/// One standard normal sample via the Box-Muller transform.
fn standard_normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = 1.0 - rng.gen::<f64>(); // (0, 1]
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

fn gaussian_c64(rng: &mut impl Rng) -> C64 {
    C64::new(standard_normal(rng), standard_normal(rng))
}

/// Haar-random pure state: normalized vector of standard complex Gaussians.
pub fn random_pure(rng: &mut impl Rng) -> PureState {
    loop {
        let v = ComplexVec3([
            gaussian_c64(rng),
            gaussian_c64(rng),
            gaussian_c64(rng),
        ]);
        if let Ok(psi) = PureState::normalized(v) {
            return psi;
        }
    }
}

/// Full-rank random density matrix `G G† / tr(G G†)` with standard complex
/// Gaussian `G` (a Ginibre sample).
pub fn random_density(rng: &mut impl Rng) -> DensityMatrix {
    loop {
        let mut g = ComplexMat3::zeros();
        for i in 0..DIM {
            for j in 0..DIM {
                g.0[i][j] = gaussian_c64(rng);
            }
        }
        let s = g * g.adjoint();
        let tr = s.trace().re;
        if tr <= 1e-12 {
            continue;
        }
        let rho = s.scale(C64::new(1.0 / tr, 0.0)).hermitize();
        if let Ok(dm) = DensityMatrix::new(rho) {
            return dm;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn eigenvalues_of_identity() {
        let eigs = hermitian_eigenvalues(&ComplexMat3::identity()).unwrap();
        for e in eigs {
            assert!((e - 1.0).abs() <= 1e-11);
        }
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let m = ComplexMat3::from_real_rows([[0.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 0.0]]);
        let eigs = hermitian_eigenvalues(&m).unwrap();
        assert!(eigs[0].abs() <= 1e-11);
        assert!(eigs[1].abs() <= 1e-11);
        assert!((eigs[2] - 1.0).abs() <= 1e-11);
    }

    #[test]
    fn eigenvalues_of_plus_projector() {
        // |+⟩ = (1,1,0)/sqrt(2); the projector has eigenvalues (0, 0, 1).
        let h = 0.5;
        let m = ComplexMat3::from_real_rows([[h, h, 0.0], [h, h, 0.0], [0.0, 0.0, 0.0]]);
        let eigs = hermitian_eigenvalues(&m).unwrap();
        assert!(eigs[0].abs() <= 1e-11);
        assert!(eigs[1].abs() <= 1e-11);
        assert!((eigs[2] - 1.0).abs() <= 1e-11);
    }

    // Two dense Hermitian matrices with eigenvalues frozen from an
    // independent eigensolver run, full f64 digits.
    #[test]
    #[allow(clippy::excessive_precision)]
    fn eigenvalues_match_independent_solver() {
        let h0 = ComplexMat3::from_rows([
            [
                c(-1.4238250364546312, 0.0),
                c(0.5022776115973564, 1.5533984174016793),
                c(-1.1192272198710147, 0.51459321224447574),
            ],
            [
                c(0.5022776115973564, -1.5533984174016793),
                c(-0.075343307010520971, 0.0),
                c(-0.045995924946284572, -0.62789875891987557),
            ],
            [
                c(-1.1192272198710147, -0.51459321224447574),
                c(-0.045995924946284572, 0.62789875891987557),
                c(0.36105811305489499, 0.0),
            ],
        ]);
        let expect0 = [-3.0673710432063088, 0.80356539459317, 1.1256954182028818];
        let eigs = hermitian_eigenvalues(&h0).unwrap();
        for (got, want) in eigs.iter().zip(expect0.iter()) {
            assert!((got - want).abs() <= 1e-11, "got {got}, want {want}");
        }

        let h1 = ComplexMat3::from_rows([
            [
                c(0.57585751439592869, 0.0),
                c(0.54964023971230691, 0.47368929425278117),
                c(0.58205440002795716, 1.913773856671078),
            ],
            [
                c(0.54964023971230691, -0.47368929425278117),
                c(0.90291934142505981, 0.0),
                c(-0.58604940103776537, 0.22665185022805373),
            ],
            [
                c(0.58205440002795716, -1.913773856671078),
                c(-0.58604940103776537, -0.22665185022805373),
                c(-1.3436010724863949, 0.0),
            ],
        ]);
        let expect1 = [-2.7885400717712741, 0.85055467788993133, 2.0731611772159364];
        let eigs = hermitian_eigenvalues(&h1).unwrap();
        for (got, want) in eigs.iter().zip(expect1.iter()) {
            assert!((got - want).abs() <= 1e-11, "got {got}, want {want}");
        }
    }

    #[test]
    fn eigenvalues_reject_non_hermitian() {
        let mut m = ComplexMat3::identity();
        m.0[0][1] = c(1.0, 0.0); // m[1][0] stays 0
        assert!(matches!(
            hermitian_eigenvalues(&m),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn projector_of_basis_ket() {
        let rho = DensityMatrix::from_pure(&PureState::basis_ket(2).unwrap());
        let mut want = ComplexMat3::zeros();
        want.0[1][1] = ONE;
        assert!((*rho.matrix() - want).max_abs_entry() <= 1e-15);
    }

    #[test]
    fn projector_of_complex_superposition() {
        // (1, i, 0)/sqrt(2) -> [[1/2, -i/2, 0], [i/2, 1/2, 0], [0, 0, 0]]
        let s = 1.0 / 2.0_f64.sqrt();
        let psi = PureState::new(ComplexVec3([c(s, 0.0), c(0.0, s), ZERO])).unwrap();
        let rho = DensityMatrix::from_pure(&psi);
        let want = ComplexMat3::from_rows([
            [c(0.5, 0.0), c(0.0, -0.5), ZERO],
            [c(0.0, 0.5), c(0.5, 0.0), ZERO],
            [ZERO, ZERO, ZERO],
        ]);
        assert!((*rho.matrix() - want).max_abs_entry() <= 1e-15);
    }

    #[test]
    fn projector_is_rank_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let psi = random_pure(&mut rng);
            let rho = DensityMatrix::from_pure(&psi);
            let eigs = rho.eigenvalues();
            assert!(eigs[0].abs() <= 1e-11);
            assert!(eigs[1].abs() <= 1e-11);
            assert!((eigs[2] - 1.0).abs() <= 1e-11);
            // result * psi = psi
            let v = rho.matrix().mul_vec(psi.amplitudes());
            for i in 0..DIM {
                assert!((v.0[i] - psi.amplitudes().0[i]).norm() <= 1e-12);
            }
        }
    }

    #[test]
    fn fidelity_examples() {
        let two = PureState::basis_ket(2).unwrap();
        let one = PureState::basis_ket(1).unwrap();
        assert!((DensityMatrix::from_pure(&two).fidelity_with_pure(&two) - 1.0).abs() <= 1e-12);
        assert!(
            (DensityMatrix::maximally_mixed().fidelity_with_pure(&two) - 1.0 / 3.0).abs() <= 1e-12
        );
        assert!(DensityMatrix::from_pure(&one).fidelity_with_pure(&two) <= 1e-12);
    }

    #[test]
    fn fidelity_equals_projector_trace() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let rho = random_density(&mut rng);
            let psi = random_pure(&mut rng);
            let direct = rho.fidelity_with_pure(&psi);
            let via_trace = (*rho.matrix() * psi.projector()).trace().re;
            assert!((direct - via_trace).abs() <= 1e-12);
        }
    }

    #[test]
    fn density_eigenvalues_sum_to_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let rho = random_density(&mut rng);
            let sum: f64 = rho.eigenvalues().iter().sum();
            assert!((sum - 1.0).abs() <= 1e-10);
        }
    }

    #[test]
    fn density_validation_rejects_bad_input() {
        // wrong trace
        assert!(DensityMatrix::new(ComplexMat3::identity()).is_err());
        // not Hermitian
        let mut m = ComplexMat3::diagonal([c(0.5, 0.0), c(0.5, 0.0), ZERO]);
        m.0[0][1] = c(0.1, 0.0);
        assert!(DensityMatrix::new(m).is_err());
        // Hermitian, trace 1, but indefinite
        let m = ComplexMat3::diagonal([c(1.5, 0.0), c(-0.5, 0.0), ZERO]);
        assert!(DensityMatrix::new(m).is_err());
    }

    #[test]
    fn pure_state_validation() {
        assert!(PureState::new(ComplexVec3::from_real(1.0, 1.0, 0.0)).is_err());
        assert!(PureState::normalized(ComplexVec3::zeros()).is_err());
        let psi = PureState::normalized(ComplexVec3::from_real(1.0, 1.0, 0.0)).unwrap();
        assert!((psi.amplitudes().norm() - 1.0).abs() <= 1e-15);
        assert!(PureState::basis_ket(0).is_err());
        assert!(PureState::basis_ket(4).is_err());
    }
}
