//! States, measurement bases, the measurement-entanglement construction,
//! purification, and seeded random generators.

use num_complex::Complex64;
use rand::{Rng, SeedableRng as _};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::numerics::{clamped_spectrum, herm_eig, CMatrix, CLAMP_TOL};

const UNIT_TOL: f64 = 1e-10;
const STATE_HERM_TOL: f64 = 1e-8;
const TRACE_TOL: f64 = 1e-8;

/// Unit-norm complex amplitude vector.
#[derive(Debug, Clone)]
pub struct PureState {
    amplitudes: Vec<Complex64>,
}

impl PureState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq.sqrt() - 1.0).abs() > UNIT_TOL {
            return Err(Error::InvalidState(format!(
                "pure state norm {} differs from 1 beyond {UNIT_TOL:.0e}",
                norm_sq.sqrt()
            )));
        }
        if amplitudes.iter().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::InvalidState("non-finite amplitude".into()));
        }
        Ok(Self { amplitudes })
    }

    /// Computational basis state |i> in `dim` dimensions.
    pub fn basis_state(dim: usize, i: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[i] = Complex64::new(1.0, 0.0);
        Self { amplitudes }
    }

    /// (|0> + |1>)/sqrt(2).
    pub fn plus() -> Self {
        let a = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self {
            amplitudes: vec![a, a],
        }
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Column-vector view, dim x 1.
    pub fn as_column(&self) -> CMatrix {
        CMatrix::column(&self.amplitudes)
    }

    /// Rank-one projector |psi><psi|.
    pub fn projector(&self) -> CMatrix {
        let v = self.as_column();
        v.matmul(&v.dagger()).expect("column times row")
    }

    pub fn to_density(&self) -> DensityMatrix {
        DensityMatrix::new(self.projector()).expect("projector is a valid state")
    }

    /// <self|other>.
    pub fn overlap(&self, other: &PureState) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }
}

/// Trace-one positive-semidefinite Hermitian operator.
#[derive(Debug, Clone)]
pub struct DensityMatrix {
    mat: CMatrix,
}

impl DensityMatrix {
    pub fn new(mat: CMatrix) -> Result<Self> {
        if !mat.is_square() {
            return Err(Error::InvalidState("density matrix must be square".into()));
        }
        let herm = mat.herm_residual();
        if herm > STATE_HERM_TOL {
            return Err(Error::InvalidState(format!(
                "Hermiticity residual {herm:.3e} exceeds {STATE_HERM_TOL:.0e}"
            )));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > TRACE_TOL || tr.im.abs() > TRACE_TOL {
            return Err(Error::InvalidState(format!(
                "trace = {:.10}, expected 1 ± {TRACE_TOL:.0e}",
                tr.re
            )));
        }
        let spectrum = herm_eig(&mat)?.values;
        if let Some(&min) = spectrum.first() {
            if min < -CLAMP_TOL {
                return Err(Error::InvalidState(format!(
                    "negative eigenvalue {min:.3e} below clamp threshold"
                )));
            }
        }
        Ok(Self { mat })
    }

    pub fn maximally_mixed(dim: usize) -> Self {
        let mat = CMatrix::identity(dim).scale(Complex64::new(1.0 / dim as f64, 0.0));
        Self { mat }
    }

    pub fn from_diagonal(probs: &[f64]) -> Result<Self> {
        Self::new(CMatrix::diag(probs))
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    /// Clamped eigenvalue spectrum, ascending.
    pub fn spectrum(&self) -> Result<Vec<f64>> {
        clamped_spectrum(&self.mat)
    }
}

/// Complete orthonormal measurement basis; column i is |phi_i>. Pointer
/// labels are implicitly the computational basis of a same-dimension
/// ancilla.
#[derive(Debug, Clone)]
pub struct MeasurementBasis {
    columns: CMatrix,
}

impl MeasurementBasis {
    pub fn new(columns: CMatrix) -> Result<Self> {
        if !columns.is_square() {
            return Err(Error::InvalidState("basis matrix must be square".into()));
        }
        let gram = columns.dagger().matmul(&columns)?;
        let resid = gram.max_diff(&CMatrix::identity(columns.rows()));
        if resid > UNIT_TOL {
            return Err(Error::InvalidState(format!(
                "basis unitarity residual {resid:.3e} exceeds {UNIT_TOL:.0e}"
            )));
        }
        Ok(Self { columns })
    }

    pub fn computational(dim: usize) -> Self {
        Self {
            columns: CMatrix::identity(dim),
        }
    }

    /// Two-dimensional Hadamard basis {|+>, |->}.
    pub fn hadamard() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            columns: CMatrix::from_real(2, 2, &[h, h, h, -h]).unwrap(),
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.rows()
    }

    pub fn columns(&self) -> &CMatrix {
        &self.columns
    }

    /// |phi_i> as a pure state.
    pub fn vector(&self, i: usize) -> PureState {
        let amps: Vec<Complex64> = (0..self.dim()).map(|r| self.columns[(r, i)]).collect();
        PureState { amplitudes: amps }
    }
}

/// Density matrix on a composite space with explicit factor dimensions.
#[derive(Debug, Clone)]
pub struct JointState {
    dims: Vec<usize>,
    mat: CMatrix,
}

impl JointState {
    pub fn new(dims: Vec<usize>, mat: CMatrix) -> Result<Self> {
        let total: usize = dims.iter().product();
        if total != mat.rows() || !mat.is_square() {
            return Err(Error::DimMismatch(format!(
                "joint state: dims product {} vs matrix {}x{}",
                total,
                mat.rows(),
                mat.cols()
            )));
        }
        let cap = crate::max_composite_dim();
        if total > cap {
            return Err(Error::DimensionCap { dim: total, cap });
        }
        // same validity requirements as a density matrix
        DensityMatrix::new(mat.clone())?;
        Ok(Self { dims, mat })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    /// Marginal on the given factors.
    pub fn marginal(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let reduced = self.mat.partial_trace(&self.dims, keep)?;
        DensityMatrix::new(reduced)
    }

    pub fn spectrum(&self) -> Result<Vec<f64>> {
        clamped_spectrum(&self.mat)
    }
}

/// Deterministic seeded randomness with independent per-instance streams.
#[derive(Debug, Clone)]
pub struct SeedRng {
    seed: u64,
    rng: ChaCha8Rng,
}

impl SeedRng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream for instance `index`; identical (seed, index)
    /// always yields the identical stream regardless of call order.
    pub fn split(&self, index: u64) -> SeedRng {
        // splitmix64 finalizer over (seed, index)
        let mut z = self
            .seed
            .wrapping_mul(0x9e3779b97f4a7c15)
            .wrapping_add(index)
            .wrapping_add(0x2545f4914f6cdd1d);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^= z >> 31;
        SeedRng::new(z)
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    fn normal(&mut self) -> f64 {
        self.rng.sample(StandardNormal)
    }

    fn complex_gaussian(&mut self) -> Complex64 {
        Complex64::new(self.normal(), self.normal())
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    /// Matrix of i.i.d. standard complex Gaussians.
    pub fn ginibre(&mut self, rows: usize, cols: usize) -> CMatrix {
        let mut m = CMatrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = self.complex_gaussian();
            }
        }
        m
    }
}

/// q_i = <phi_i| rho |phi_i>, the outcome distribution of measuring in the
/// given basis.
pub fn measured_distribution(rho: &DensityMatrix, basis: &MeasurementBasis) -> Result<Vec<f64>> {
    if rho.dim() != basis.dim() {
        return Err(Error::DimMismatch(format!(
            "state dim {} vs basis dim {}",
            rho.dim(),
            basis.dim()
        )));
    }
    let rotated = basis
        .columns()
        .dagger()
        .matmul(rho.mat())?
        .matmul(basis.columns())?;
    let mut probs: Vec<f64> = (0..rho.dim()).map(|i| rotated[(i, i)].re).collect();
    let sum: f64 = probs.iter().sum();
    if (sum - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidDistribution(format!(
            "outcome probabilities sum to {sum}"
        )));
    }
    for p in &mut probs {
        if *p < 0.0 {
            if *p < -CLAMP_TOL {
                return Err(Error::InvalidDistribution(format!(
                    "negative outcome probability {p}"
                )));
            }
            *p = 0.0;
        }
    }
    Ok(probs)
}

/// Pointer-entangled pure state |Psi> = sum_i a_i |phi_i>|P_i> with
/// a_i = <phi_i|psi>, on factors [d, d].
pub fn pointer_entangle_pure(psi: &PureState, basis: &MeasurementBasis) -> Result<JointState> {
    let d = psi.dim();
    if d != basis.dim() {
        return Err(Error::DimMismatch(format!(
            "state dim {} vs basis dim {}",
            d,
            basis.dim()
        )));
    }
    let mut joint = vec![Complex64::new(0.0, 0.0); d * d];
    for i in 0..d {
        let a_i = basis.vector(i).overlap(psi);
        for r in 0..d {
            // |phi_i> ⊗ |P_i> with computational pointer labels
            joint[r * d + i] += a_i * basis.columns()[(r, i)];
        }
    }
    let v = CMatrix::column(&joint);
    let mat = v.matmul(&v.dagger())?;
    JointState::new(vec![d, d], mat)
}

/// Canonical collapsed pointer entanglement for a mixed input:
/// |psi~> = sum_i sqrt(q_i) |phi_i>|P_i> with q_i = <phi_i|rho|phi_i>.
///
/// A single d-dimensional ancilla suffices because only orthonormality of
/// the pointer labels enters any derived measure; the literal three-factor
/// construction is kept as a cross-check in
/// [`three_factor_pointer_state`].
pub fn pointer_entangle_mixed(rho: &DensityMatrix, basis: &MeasurementBasis) -> Result<JointState> {
    let d = rho.dim();
    if d != basis.dim() {
        return Err(Error::DimMismatch(format!(
            "state dim {} vs basis dim {}",
            d,
            basis.dim()
        )));
    }
    let probs = measured_distribution(rho, basis)?;
    let mut joint = vec![Complex64::new(0.0, 0.0); d * d];
    for i in 0..d {
        let c_i = Complex64::new(probs[i].sqrt(), 0.0);
        for r in 0..d {
            joint[r * d + i] += c_i * basis.columns()[(r, i)];
        }
    }
    let v = CMatrix::column(&joint);
    let mat = v.matmul(&v.dagger())?;
    JointState::new(vec![d, d], mat)
}

/// Purification on d^2 dimensions with deterministic eigen-order
/// (descending) and phase convention (first nonzero eigenvector component
/// real positive); the first-factor marginal reproduces `rho`.
pub fn purify(rho: &DensityMatrix) -> Result<PureState> {
    let d = rho.dim();
    let (probs, vectors) = sorted_eig_descending(rho)?;
    let mut amps = vec![Complex64::new(0.0, 0.0); d * d];
    for (m, &p) in probs.iter().enumerate() {
        let w = Complex64::new(p.max(0.0).sqrt(), 0.0);
        for r in 0..d {
            amps[r * d + m] += w * vectors[m][r];
        }
    }
    // renormalize away clamp-level noise
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    PureState::new(amps)
}

/// Eigen-decomposition of a density matrix with the tie-breaking rules
/// used for reproducible purifications: descending eigenvalues, each
/// eigenvector re-phased so its first nonzero component is real positive.
pub fn sorted_eig_descending(rho: &DensityMatrix) -> Result<(Vec<f64>, Vec<Vec<Complex64>>)> {
    let sys = herm_eig(rho.mat())?;
    let d = rho.dim();
    let mut pairs: Vec<(f64, Vec<Complex64>)> = (0..d)
        .map(|j| {
            let mut col: Vec<Complex64> = (0..d).map(|i| sys.vectors[(i, j)]).collect();
            if let Some(first) = col.iter().find(|z| z.norm() > 1e-12) {
                let phase = first / first.norm();
                for z in &mut col {
                    *z /= phase;
                }
            }
            (sys.values[j].max(0.0), col)
        })
        .collect();
    pairs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
    let (values, vectors): (Vec<f64>, Vec<Vec<Complex64>>) = pairs.into_iter().unzip();
    Ok((values, vectors))
}

/// Literal three-factor pointer construction on factors [d, d, d]:
/// each basis component of the purification of `rho` gets its own pointer
/// label. Exists to cross-check the collapsed form.
pub fn three_factor_pointer_state(
    rho: &DensityMatrix,
    basis: &MeasurementBasis,
) -> Result<JointState> {
    let d = rho.dim();
    if d != basis.dim() {
        return Err(Error::DimMismatch(format!(
            "state dim {} vs basis dim {}",
            d,
            basis.dim()
        )));
    }
    let chi = purify(rho)?; // on H1 ⊗ H2, both of dim d
    // expand the first factor in the measurement basis: |chi> = sum_i |phi_i> ⊗ |r_i>
    // then attach a pointer: |psi~> = sum_i |phi_i> ⊗ |r_i> ⊗ |P_i>
    let mut amps = vec![Complex64::new(0.0, 0.0); d * d * d];
    for i in 0..d {
        // |r_i> = (<phi_i| ⊗ 1)|chi>
        let mut rel = vec![Complex64::new(0.0, 0.0); d];
        for s in 0..d {
            for t in 0..d {
                rel[t] += basis.columns()[(s, i)].conj() * chi.amplitudes()[s * d + t];
            }
        }
        for r in 0..d {
            let phi_ri = basis.columns()[(r, i)];
            for t in 0..d {
                amps[r * d * d + t * d + i] += phi_ri * rel[t];
            }
        }
    }
    let v = CMatrix::column(&amps);
    let mat = v.matmul(&v.dagger())?;
    JointState::new(vec![d, d, d], mat)
}

/// Haar-random pure state.
pub fn random_pure(d: usize, rng: &mut SeedRng) -> Result<PureState> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be >= 1".into()));
    }
    let g = rng.ginibre(d, 1);
    let mut amps: Vec<Complex64> = (0..d).map(|i| g[(i, 0)]).collect();
    let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    for a in &mut amps {
        *a /= norm;
    }
    PureState::new(amps)
}

/// Random density matrix of the given rank, as the partial trace of a
/// Haar-random pure state on d x rank.
pub fn random_density(d: usize, rank: usize, rng: &mut SeedRng) -> Result<DensityMatrix> {
    if d == 0 || rank == 0 || rank > d {
        return Err(Error::InvalidParameter(format!(
            "need 1 <= rank <= d, got d={d}, rank={rank}"
        )));
    }
    let psi = random_pure(d * rank, rng)?;
    let rho = psi.projector().partial_trace(&[d, rank], &[0])?;
    DensityMatrix::new(rho)
}

/// Haar-random measurement basis: QR of a Ginibre matrix with the
/// R-diagonal phase fixed.
pub fn random_basis(d: usize, rng: &mut SeedRng) -> Result<MeasurementBasis> {
    if d == 0 {
        return Err(Error::InvalidParameter("dimension must be >= 1".into()));
    }
    let q = haar_unitary(d, rng)?;
    MeasurementBasis::new(q)
}

/// Haar-random unitary via Gram-Schmidt on Ginibre columns with phase
/// correction from the triangular diagonal.
pub fn haar_unitary(d: usize, rng: &mut SeedRng) -> Result<CMatrix> {
    let isom = haar_isometry(d, d, rng)?;
    Ok(isom)
}

/// Haar-random isometry with `cols` orthonormal columns in `rows`
/// dimensions (rows >= cols), via modified Gram-Schmidt on a Ginibre
/// matrix, re-phased so the effective R diagonal is real positive.
pub fn haar_isometry(rows: usize, cols: usize, rng: &mut SeedRng) -> Result<CMatrix> {
    if rows < cols || cols == 0 {
        return Err(Error::InvalidParameter(format!(
            "isometry needs rows >= cols >= 1, got {rows}x{cols}"
        )));
    }
    let g = rng.ginibre(rows, cols);
    let mut q: Vec<Vec<Complex64>> = (0..cols)
        .map(|j| (0..rows).map(|i| g[(i, j)]).collect())
        .collect();
    for j in 0..cols {
        for k in 0..j {
            let proj: Complex64 = (0..rows).map(|i| q[k][i].conj() * q[j][i]).sum();
            for i in 0..rows {
                let sub = proj * q[k][i];
                q[j][i] -= sub;
            }
        }
        let norm: f64 = q[j].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        // Ginibre columns are almost surely independent; norm > 0
        let inv = 1.0 / norm;
        for z in &mut q[j] {
            *z *= inv;
        }
        // fix the phase so <g_j, q_j> is real positive (R_jj > 0)
        let r_jj: Complex64 = (0..rows).map(|i| q[j][i].conj() * g[(i, j)]).sum();
        let phase = r_jj / r_jj.norm();
        for z in &mut q[j] {
            *z *= phase;
        }
    }
    let mut out = CMatrix::zeros(rows, cols);
    for j in 0..cols {
        for i in 0..rows {
            out[(i, j)] = q[j][i];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn measured_distribution_maximally_mixed() {
        let rho = DensityMatrix::maximally_mixed(2);
        let q = measured_distribution(&rho, &MeasurementBasis::computational(2)).unwrap();
        assert!((q[0] - 0.5).abs() < 1e-12 && (q[1] - 0.5).abs() < 1e-12);
    }

    #[test]
    fn measured_distribution_eigenbasis() {
        let plus = PureState::plus().to_density();
        let q = measured_distribution(&plus, &MeasurementBasis::hadamard()).unwrap();
        assert!((q[0] - 1.0).abs() < 1e-12 && q[1].abs() < 1e-12);
    }

    #[test]
    fn measured_distribution_diagonal_state() {
        let rho = DensityMatrix::from_diagonal(&[0.75, 0.25]).unwrap();
        let q = measured_distribution(&rho, &MeasurementBasis::computational(2)).unwrap();
        assert!((q[0] - 0.75).abs() < 1e-12 && (q[1] - 0.25).abs() < 1e-12);
    }

    #[test]
    fn measured_distribution_dim_mismatch() {
        let rho = DensityMatrix::maximally_mixed(3);
        assert!(measured_distribution(&rho, &MeasurementBasis::computational(2)).is_err());
    }

    #[test]
    fn pointer_entangle_pure_basis_state_is_product() {
        let joint =
            pointer_entangle_pure(&PureState::basis_state(2, 0), &MeasurementBasis::computational(2))
                .unwrap();
        // |0>|P_0><0|<P_0| has a single unit entry at (0,0)
        assert!((joint.mat()[(0, 0)].re - 1.0).abs() < 1e-12);
        assert!(joint.mat().trace().re - 1.0 < 1e-12);
        let sys = joint.marginal(&[0]).unwrap();
        assert!((sys.mat()[(0, 0)].re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn pointer_entangle_plus_is_maximally_entangled() {
        let joint =
            pointer_entangle_pure(&PureState::plus(), &MeasurementBasis::computational(2)).unwrap();
        let pointer = joint.marginal(&[1]).unwrap();
        let half = DensityMatrix::maximally_mixed(2);
        assert!(pointer.mat().max_diff(half.mat()) < 1e-12);
    }

    #[test]
    fn pointer_marginal_diag_matches_distribution() {
        let mut rng = SeedRng::new(5);
        let psi = random_pure(3, &mut rng).unwrap();
        let basis = random_basis(3, &mut rng).unwrap();
        let joint = pointer_entangle_pure(&psi, &basis).unwrap();
        let pointer = joint.marginal(&[1]).unwrap();
        let q = measured_distribution(&psi.to_density(), &basis).unwrap();
        for i in 0..3 {
            assert!((pointer.mat()[(i, i)].re - q[i]).abs() < 1e-10);
        }
    }

    #[test]
    fn pointer_entangle_mixed_maximally_mixed_is_bell_like() {
        let joint = pointer_entangle_mixed(
            &DensityMatrix::maximally_mixed(2),
            &MeasurementBasis::computational(2),
        )
        .unwrap();
        // pure state with both marginals maximally mixed
        let spec = joint.spectrum().unwrap();
        assert!((spec.last().unwrap() - 1.0).abs() < 1e-10);
        let sys = joint.marginal(&[0]).unwrap();
        assert!(sys.mat().max_diff(DensityMatrix::maximally_mixed(2).mat()) < 1e-10);
    }

    #[test]
    fn pointer_entangle_mixed_schmidt_coefficients() {
        let rho = DensityMatrix::from_diagonal(&[0.75, 0.25]).unwrap();
        let joint = pointer_entangle_mixed(&rho, &MeasurementBasis::computational(2)).unwrap();
        let sys = joint.marginal(&[0]).unwrap();
        // Schmidt coefficients sqrt(0.75), sqrt(0.25) <=> marginal spectrum {0.25, 0.75}
        let spec = sys.spectrum().unwrap();
        assert!((spec[0] - 0.25).abs() < 1e-10 && (spec[1] - 0.75).abs() < 1e-10);
    }

    #[test]
    fn mixed_marginals_share_spectra() {
        let mut rng = SeedRng::new(17);
        let rho = random_density(3, 2, &mut rng).unwrap();
        let basis = random_basis(3, &mut rng).unwrap();
        let joint = pointer_entangle_mixed(&rho, &basis).unwrap();
        let s1 = joint.marginal(&[0]).unwrap().spectrum().unwrap();
        let s2 = joint.marginal(&[1]).unwrap().spectrum().unwrap();
        for (a, b) in s1.iter().zip(&s2) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn purify_pure_input() {
        let chi = purify(&PureState::basis_state(2, 0).to_density()).unwrap();
        // |0>|0>
        assert!((chi.amplitudes()[0].re - 1.0).abs() < 1e-10);
    }

    #[test]
    fn purify_marginal_reconstruction() {
        let mut rng = SeedRng::new(23);
        for d in [2usize, 4, 6] {
            let rho = random_density(d, d, &mut rng).unwrap();
            let chi = purify(&rho).unwrap();
            let marg = chi.projector().partial_trace(&[d, d], &[0]).unwrap();
            assert!(marg.max_diff(rho.mat()) < 1e-9);
        }
    }

    #[test]
    fn purify_marginals_share_positive_spectra() {
        let mut rng = SeedRng::new(29);
        let rho = random_density(4, 3, &mut rng).unwrap();
        let chi = purify(&rho).unwrap();
        let m1 = chi.projector().partial_trace(&[4, 4], &[0]).unwrap();
        let m2 = chi.projector().partial_trace(&[4, 4], &[1]).unwrap();
        let mut s1: Vec<f64> = clamped_spectrum(&m1).unwrap();
        let mut s2: Vec<f64> = clamped_spectrum(&m2).unwrap();
        s1.retain(|&p| p > 1e-9);
        s2.retain(|&p| p > 1e-9);
        assert_eq!(s1.len(), s2.len());
        for (a, b) in s1.iter().zip(&s2) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn three_factor_marginal_matches_distribution() {
        let mut rng = SeedRng::new(31);
        let rho = random_density(2, 2, &mut rng).unwrap();
        let basis = random_basis(2, &mut rng).unwrap();
        let triple = three_factor_pointer_state(&rho, &basis).unwrap();
        let sys = triple.marginal(&[0]).unwrap();
        // diagonal in the measurement basis equals the outcome distribution
        let q = measured_distribution(&rho, &basis).unwrap();
        let diag = measured_distribution(&sys, &basis).unwrap();
        for (a, b) in diag.iter().zip(&q) {
            assert!((a - b).abs() < 1e-10);
        }
    }

    #[test]
    fn random_basis_is_unitary() {
        let mut rng = SeedRng::new(37);
        for d in [2usize, 3, 5] {
            let b = random_basis(d, &mut rng).unwrap();
            let gram = b.columns().dagger().matmul(b.columns()).unwrap();
            assert!(gram.max_diff(&CMatrix::identity(d)) < 1e-10);
        }
    }

    #[test]
    fn random_density_respects_rank() {
        let mut rng = SeedRng::new(41);
        let rho = random_density(4, 2, &mut rng).unwrap();
        let spec = rho.spectrum().unwrap();
        assert!(spec[0] <= 1e-10 && spec[1] <= 1e-10);
        assert!(spec[3] > 1e-6);
    }

    #[test]
    fn fixed_seed_replays_bit_identically() {
        let run = |seed: u64| {
            let mut rng = SeedRng::new(seed);
            let psi = random_pure(2, &mut rng).unwrap();
            let rho = random_density(2, 2, &mut rng).unwrap();
            let basis = random_basis(2, &mut rng).unwrap();
            (
                psi.amplitudes().to_vec(),
                rho.mat().clone(),
                basis.columns().clone(),
            )
        };
        let (a1, r1, b1) = run(42);
        let (a2, r2, b2) = run(42);
        assert_eq!(a1, a2);
        assert_eq!(r1, r2);
        assert_eq!(b1, b2);
    }

    #[test]
    fn split_streams_are_independent_of_order() {
        let root = SeedRng::new(7);
        let mut s3 = root.split(3);
        let first = s3.uniform(0.0, 1.0);
        let mut s3_again = root.split(3);
        assert_eq!(first, s3_again.uniform(0.0, 1.0));
        let mut s4 = root.split(4);
        assert_ne!(first, s4.uniform(0.0, 1.0));
    }

    #[test]
    fn density_matrix_rejects_bad_trace() {
        let m = CMatrix::diag(&[0.6, 0.6]);
        assert!(DensityMatrix::new(m).is_err());
    }

    #[test]
    fn density_matrix_rejects_negative_eigenvalue() {
        let m = CMatrix::diag(&[1.5, -0.5]);
        assert!(DensityMatrix::new(m).is_err());
    }
}
