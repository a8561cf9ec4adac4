//! Dense complex-matrix kernel: arithmetic, Kronecker products, partial
//! trace, a cyclic-Jacobi Hermitian eigensolver and spectral matrix
//! functions. Self-contained; everything upstream builds on this module.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerance for accepting a matrix as Hermitian.
pub const HERM_TOL: f64 = 1e-8;
/// Eigenvalues in [-CLAMP_TOL, 0) are treated as floating-point noise and
/// clamped to zero; anything below signals a genuinely indefinite input.
pub const CLAMP_TOL: f64 = 1e-10;

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct CMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Build from a row-major slice of entries.
    pub fn from_rows(rows: usize, cols: usize, entries: &[Complex64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimMismatch(format!(
                "expected {} entries for {}x{}, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        let m = Self {
            rows,
            cols,
            data: entries.to_vec(),
        };
        m.check_finite()?;
        Ok(m)
    }

    /// Convenience constructor from real row-major entries.
    pub fn from_real(rows: usize, cols: usize, entries: &[f64]) -> Result<Self> {
        let cplx: Vec<Complex64> = entries.iter().map(|&r| Complex64::new(r, 0.0)).collect();
        Self::from_rows(rows, cols, &cplx)
    }

    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        let mut m = Self::zeros(n, n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        m
    }

    /// Column vector as an n x 1 matrix.
    pub fn column(entries: &[Complex64]) -> Self {
        Self {
            rows: entries.len(),
            cols: 1,
            data: entries.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn check_finite(&self) -> Result<()> {
        for r in 0..self.rows {
            for c in 0..self.cols {
                let z = self[(r, c)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: r, col: c });
                }
            }
        }
        Ok(())
    }

    /// Standard complex matrix product.
    pub fn matmul(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimMismatch(format!(
                "matmul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = CMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> CMatrix {
        let mut out = CMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Kronecker product, left factor major: composite index i_left * dim_right + i_right.
    pub fn tensor(&self, other: &CMatrix) -> CMatrix {
        let mut out = CMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> CMatrix {
        let mut out = self.clone();
        for z in &mut out.data {
            *z *= s;
        }
        out
    }

    pub fn add(&self, other: &CMatrix) -> Result<CMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimMismatch(format!(
                "add: {}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (z, w) in out.data.iter_mut().zip(&other.data) {
            *z += w;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &CMatrix) -> Result<CMatrix> {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Largest entry magnitude.
    pub fn max_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Max entry-wise deviation from another matrix.
    pub fn max_diff(&self, other: &CMatrix) -> f64 {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Deviation from Hermitian symmetry, max |H - H†|.
    pub fn herm_residual(&self) -> f64 {
        if !self.is_square() {
            return f64::INFINITY;
        }
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }

    /// Reduced matrix over the kept tensor factors, same factor ordering.
    ///
    /// `dims` lists the factor dimensions (left-major, matching `tensor`);
    /// `keep` lists the factor indices that survive.
    pub fn partial_trace(&self, dims: &[usize], keep: &[usize]) -> Result<CMatrix> {
        if !self.is_square() {
            return Err(Error::DimMismatch("partial_trace: matrix not square".into()));
        }
        let total: usize = dims.iter().product();
        if total != self.rows {
            return Err(Error::DimMismatch(format!(
                "partial_trace: dims product {} != matrix dim {}",
                total, self.rows
            )));
        }
        if keep.iter().any(|&k| k >= dims.len()) {
            return Err(Error::DimMismatch("partial_trace: keep index out of range".into()));
        }
        let mut keep_sorted = keep.to_vec();
        keep_sorted.sort_unstable();
        keep_sorted.dedup();
        let traced: Vec<usize> = (0..dims.len()).filter(|i| !keep_sorted.contains(i)).collect();
        let keep_dim: usize = keep_sorted.iter().map(|&i| dims[i]).product();
        let traced_dim: usize = traced.iter().map(|&i| dims[i]).product();

        // Strides of each factor in the composite index.
        let mut strides = vec![1usize; dims.len()];
        for i in (0..dims.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * dims[i + 1];
        }
        let expand = |factors: &[usize], idx: usize| -> usize {
            let mut rem = idx;
            let mut composite = 0;
            for &f in factors.iter().rev() {
                composite += (rem % dims[f]) * strides[f];
                rem /= dims[f];
            }
            composite
        };

        let mut out = CMatrix::zeros(keep_dim, keep_dim);
        for kr in 0..keep_dim {
            for kc in 0..keep_dim {
                let base_r = expand(&keep_sorted, kr);
                let base_c = expand(&keep_sorted, kc);
                let mut acc = Complex64::new(0.0, 0.0);
                for t in 0..traced_dim {
                    let off = expand(&traced, t);
                    acc += self[(base_r + off, base_c + off)];
                }
                out[(kr, kc)] = acc;
            }
        }
        Ok(out)
    }
}

impl std::ops::Index<(usize, usize)> for CMatrix {
    type Output = Complex64;
    fn index(&self, (r, c): (usize, usize)) -> &Complex64 {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex64 {
        &mut self.data[r * self.cols + c]
    }
}

/// Eigendecomposition of a Hermitian matrix: H = V diag(values) V†.
#[derive(Debug, Clone)]
pub struct EigenSystem {
    /// Eigenvalues in ascending order.
    pub values: Vec<f64>,
    /// Unitary matrix whose i-th column is the eigenvector of values[i].
    pub vectors: CMatrix,
}

impl EigenSystem {
    /// Rebuild V diag(values) V†.
    pub fn reconstruct(&self) -> CMatrix {
        let n = self.values.len();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            for i in 0..n {
                scaled[(i, j)] *= Complex64::new(self.values[j], 0.0);
            }
        }
        scaled.matmul(&self.vectors.dagger()).expect("square")
    }
}

/// Diagonalize the Hermitian part of `h` by cyclic complex Jacobi rotations.
///
/// Rejects inputs whose anti-Hermitian part exceeds `HERM_TOL`.
pub fn herm_eig(h: &CMatrix) -> Result<EigenSystem> {
    if !h.is_square() {
        return Err(Error::DimMismatch("herm_eig: matrix not square".into()));
    }
    let residual = h.herm_residual();
    if residual > HERM_TOL {
        return Err(Error::NotHermitian {
            residual,
            tol: HERM_TOL,
        });
    }
    let n = h.rows();
    // Work on the exactly-Hermitian part (h + h†)/2.
    let mut a = h
        .add(&h.dagger())?
        .scale(Complex64::new(0.5, 0.0));
    let mut v = CMatrix::identity(n);

    let scale = a.max_norm().max(1.0);
    let target = 1e-14 * scale;
    let max_sweeps = 60;
    for _ in 0..max_sweeps {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[(p, q)].norm());
            }
        }
        if off <= target {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[(p, q)];
                let r = apq.norm();
                if r <= target * 1e-2 {
                    continue;
                }
                let phase = apq / r; // e^{i phi}
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let tau = (app - aqq) / (2.0 * r);
                // smaller-magnitude root of t^2 - 2*tau*t - 1 = 0
                let t = if tau >= 0.0 {
                    -1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // Rotation G: G[p][p]=c, G[p][q]=s*phase, G[q][p]=-s*conj(phase), G[q][q]=c.
                let gpq = phase * s;
                // A <- G† A G, rows p,q then columns p,q.
                for j in 0..n {
                    let apj = a[(p, j)];
                    let aqj = a[(q, j)];
                    a[(p, j)] = apj * c - aqj * gpq;
                    a[(q, j)] = apj * gpq.conj() + aqj * c;
                }
                for i in 0..n {
                    let aip = a[(i, p)];
                    let aiq = a[(i, q)];
                    a[(i, p)] = aip * c - aiq * gpq.conj();
                    a[(i, q)] = aip * gpq + aiq * c;
                }
                for i in 0..n {
                    let vip = v[(i, p)];
                    let viq = v[(i, q)];
                    v[(i, p)] = vip * c - viq * gpq.conj();
                    v[(i, q)] = vip * gpq + viq * c;
                }
            }
        }
    }

    // Collect eigenpairs and sort ascending.
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = CMatrix::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for i in 0..n {
            vectors[(i, new_col)] = v[(i, old_col)];
        }
    }

    let sys = EigenSystem { values, vectors };
    let recon = sys.reconstruct();
    let herm_part = h.add(&h.dagger())?.scale(Complex64::new(0.5, 0.0));
    let resid = recon.max_diff(&herm_part);
    let bound = 1e-10 * herm_part.max_norm().max(1.0);
    if resid > bound {
        return Err(Error::Inconsistent(format!(
            "eigendecomposition residual {resid:.3e} exceeds {bound:.3e}"
        )));
    }
    Ok(sys)
}

/// V f(Lambda) V† for Hermitian `h`. Eigenvalues in [-CLAMP_TOL, 0) are
/// clamped to zero first; `require_nonneg` rejects anything below that.
pub fn spectral_fn<F: Fn(f64) -> f64>(h: &CMatrix, f: F, require_nonneg: bool) -> Result<CMatrix> {
    let sys = herm_eig(h)?;
    let n = sys.values.len();
    // positive eigenvalues at rounding level are zeroed too: functions
    // like sqrt would otherwise amplify them far above the noise floor
    let pos_noise = 1e-12 * h.max_norm().max(1.0);
    let mut mapped = Vec::with_capacity(n);
    for &lam in &sys.values {
        let lam = if (-CLAMP_TOL..pos_noise).contains(&lam) {
            0.0
        } else {
            lam
        };
        if require_nonneg && lam < 0.0 {
            return Err(Error::NotPsd { eigenvalue: lam });
        }
        mapped.push(f(lam));
    }
    let mut scaled = sys.vectors.clone();
    for j in 0..n {
        for i in 0..n {
            scaled[(i, j)] *= Complex64::new(mapped[j], 0.0);
        }
    }
    scaled.matmul(&sys.vectors.dagger())
}

/// Principal square root of a positive-semidefinite Hermitian matrix.
pub fn psd_sqrt(h: &CMatrix) -> Result<CMatrix> {
    spectral_fn(h, f64::sqrt, true)
}

/// Clamped eigenvalue spectrum of a Hermitian matrix, ascending.
pub fn clamped_spectrum(h: &CMatrix) -> Result<Vec<f64>> {
    let sys = herm_eig(h)?;
    sys.values
        .iter()
        .map(|&lam| {
            if lam < -CLAMP_TOL {
                Err(Error::NotPsd { eigenvalue: lam })
            } else {
                Ok(lam.max(0.0))
            }
        })
        .collect()
}

pub fn pauli_x() -> CMatrix {
    CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]).unwrap()
}

pub fn pauli_y() -> CMatrix {
    CMatrix::from_rows(
        2,
        2,
        &[
            Complex64::new(0.0, 0.0),
            Complex64::new(0.0, -1.0),
            Complex64::new(0.0, 1.0),
            Complex64::new(0.0, 0.0),
        ],
    )
    .unwrap()
}

pub fn pauli_z() -> CMatrix {
    CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, -1.0]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_cmatrix(rows: usize, cols: usize, seed: u64) -> CMatrix {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<Complex64> = (0..rows * cols)
            .map(|_| c(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5))
            .collect();
        CMatrix::from_rows(rows, cols, &entries).unwrap()
    }

    fn random_hermitian(n: usize, seed: u64) -> CMatrix {
        let a = random_cmatrix(n, n, seed);
        a.add(&a.dagger()).unwrap().scale(c(0.5, 0.0))
    }

    #[test]
    fn matmul_identity_and_involution() {
        let x = pauli_x();
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.matmul(&x).unwrap(), x);
        let xx = x.matmul(&x).unwrap();
        assert!(xx.max_diff(&i2) < 1e-15);
    }

    #[test]
    fn matmul_matches_triple_loop_oracle() {
        let a = random_cmatrix(3, 3, 1);
        let b = random_cmatrix(3, 3, 2);
        let fast = a.matmul(&b).unwrap();
        // naive triple loop
        let mut oracle = CMatrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    oracle[(i, j)] += a[(i, k)] * b[(k, j)];
                }
            }
        }
        assert!(fast.max_diff(&oracle) < 1e-12);
    }

    #[test]
    fn matmul_dim_mismatch_errors() {
        let a = CMatrix::zeros(2, 3);
        let b = CMatrix::zeros(2, 3);
        assert!(a.matmul(&b).is_err());
    }

    #[test]
    fn dagger_cases() {
        let i2 = CMatrix::identity(2);
        assert_eq!(i2.dagger(), i2);
        let a = random_cmatrix(3, 2, 3);
        assert!(a.dagger().dagger().max_diff(&a) < 1e-15);
        let y = pauli_y();
        assert!(y.dagger().max_diff(&y) < 1e-15);
    }

    #[test]
    fn dagger_of_product_reverses() {
        let a = random_cmatrix(3, 3, 4);
        let b = random_cmatrix(3, 3, 5);
        let lhs = a.matmul(&b).unwrap().dagger();
        let rhs = b.dagger().matmul(&a.dagger()).unwrap();
        assert!(lhs.max_diff(&rhs) < 1e-12);
    }

    #[test]
    fn tensor_identities() {
        let i2 = CMatrix::identity(2);
        let i4 = CMatrix::identity(4);
        assert_eq!(i2.tensor(&i2), i4);

        let p0 = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, 0.0]).unwrap();
        let x = pauli_x();
        let t = p0.tensor(&x);
        // block-diag(X, 0)
        let mut expect = CMatrix::zeros(4, 4);
        expect[(0, 1)] = c(1.0, 0.0);
        expect[(1, 0)] = c(1.0, 0.0);
        assert!(t.max_diff(&expect) < 1e-15);
    }

    #[test]
    fn tensor_matches_index_formula_oracle() {
        let a = random_cmatrix(2, 2, 6);
        let b = random_cmatrix(3, 3, 7);
        let t = a.tensor(&b);
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..3 {
                    for l in 0..3 {
                        let expect = a[(i, j)] * b[(k, l)];
                        assert!((t[(i * 3 + k, j * 3 + l)] - expect).norm() < 1e-15);
                    }
                }
            }
        }
    }

    #[test]
    fn trace_of_tensor_factorizes() {
        let a = random_cmatrix(3, 3, 8);
        let b = random_cmatrix(2, 2, 9);
        let lhs = a.tensor(&b).trace();
        let rhs = a.trace() * b.trace();
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn partial_trace_bell_state() {
        // |Phi+> = (|00> + |11>)/sqrt(2)
        let amp = 1.0 / 2f64.sqrt();
        let v = CMatrix::column(&[c(amp, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(amp, 0.0)]);
        let rho = v.matmul(&v.dagger()).unwrap();
        let red = rho.partial_trace(&[2, 2], &[0]).unwrap();
        let half = CMatrix::identity(2).scale(c(0.5, 0.0));
        assert!(red.max_diff(&half) < 1e-15);
    }

    #[test]
    fn partial_trace_product_state() {
        let a = random_hermitian(2, 10);
        let b = random_hermitian(3, 11);
        let joint = a.tensor(&b);
        let red = joint.partial_trace(&[2, 3], &[0]).unwrap();
        let expect = a.scale(b.trace());
        assert!(red.max_diff(&expect) < 1e-12);
    }

    #[test]
    fn partial_trace_three_factors_matches_index_sum() {
        let rho = random_hermitian(8, 12);
        let red = rho.partial_trace(&[2, 2, 2], &[0, 2]).unwrap();
        // explicit sum over the middle index
        let mut oracle = CMatrix::zeros(4, 4);
        for i0 in 0..2 {
            for i2 in 0..2 {
                for j0 in 0..2 {
                    for j2 in 0..2 {
                        let mut acc = c(0.0, 0.0);
                        for m in 0..2 {
                            acc += rho[(i0 * 4 + m * 2 + i2, j0 * 4 + m * 2 + j2)];
                        }
                        oracle[(i0 * 2 + i2, j0 * 2 + j2)] = acc;
                    }
                }
            }
        }
        assert!(red.max_diff(&oracle) < 1e-12);
    }

    #[test]
    fn partial_trace_sequential_equals_full_trace() {
        let rho = random_hermitian(12, 13);
        let step = rho.partial_trace(&[2, 3, 2], &[0, 2]).unwrap();
        let step = step.partial_trace(&[2, 2], &[1]).unwrap();
        let step = step.partial_trace(&[2], &[]).unwrap();
        assert!((step[(0, 0)] - rho.trace()).norm() < 1e-12);
    }

    #[test]
    fn herm_eig_pauli_x() {
        let sys = herm_eig(&pauli_x()).unwrap();
        assert!((sys.values[0] + 1.0).abs() < 1e-12);
        assert!((sys.values[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn herm_eig_diagonal() {
        let sys = herm_eig(&CMatrix::diag(&[0.75, 0.25])).unwrap();
        assert!((sys.values[0] - 0.25).abs() < 1e-12);
        assert!((sys.values[1] - 0.75).abs() < 1e-12);
    }

    #[test]
    fn herm_eig_random_reconstruction() {
        for seed in 0..5 {
            let h = random_hermitian(6, 100 + seed);
            let sys = herm_eig(&h).unwrap();
            assert!(sys.reconstruct().max_diff(&h) < 1e-10 * h.max_norm().max(1.0));
            // unitarity
            let vtv = sys.vectors.dagger().matmul(&sys.vectors).unwrap();
            assert!(vtv.max_diff(&CMatrix::identity(6)) < 1e-10);
            // eigenvalue sum = trace
            let sum: f64 = sys.values.iter().sum();
            assert!((sum - h.trace().re).abs() < 1e-10 * 6.0);
            // ascending order
            assert!(sys.values.windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn herm_eig_rejects_non_hermitian() {
        let a = random_cmatrix(3, 3, 55);
        assert!(matches!(herm_eig(&a), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn spectral_fn_sqrt_cases() {
        let q = CMatrix::identity(4).scale(c(0.25, 0.0));
        let s = psd_sqrt(&q).unwrap();
        assert!(s.max_diff(&CMatrix::identity(4).scale(c(0.5, 0.0))) < 1e-12);

        // projector is its own square root
        let v = CMatrix::column(&[c(0.6, 0.0), c(0.8, 0.0)]);
        let p = v.matmul(&v.dagger()).unwrap();
        assert!(psd_sqrt(&p).unwrap().max_diff(&p) < 1e-10);
    }

    #[test]
    fn spectral_fn_sqrt_squares_back() {
        for seed in 0..3 {
            let a = random_cmatrix(4, 4, 200 + seed);
            let psd = a.matmul(&a.dagger()).unwrap();
            let s = psd_sqrt(&psd).unwrap();
            assert!(s.matmul(&s).unwrap().max_diff(&psd) < 1e-9);
        }
    }

    #[test]
    fn spectral_fn_rejects_indefinite_for_sqrt() {
        let h = CMatrix::diag(&[1.0, -0.5]);
        assert!(matches!(psd_sqrt(&h), Err(Error::NotPsd { .. })));
    }
}
