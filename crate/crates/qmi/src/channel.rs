//! Completely positive trace-preserving maps in Kraus form: application,
//! extension by identity factors, composition, Heisenberg adjoints, named
//! families, and Stinespring-style random generation.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{pauli_x, pauli_y, pauli_z, CMatrix};
use crate::state::{haar_isometry, DensityMatrix, JointState, SeedRng};

const COMPLETENESS_TOL: f64 = 1e-8;

/// Trace-preserving CP map as an ordered Kraus family.
#[derive(Debug, Clone)]
pub struct KrausChannel {
    dim_in: usize,
    dim_out: usize,
    kraus: Vec<CMatrix>,
}

impl KrausChannel {
    /// Validates completeness: sum_k K_k† K_k = I within 1e-8.
    pub fn new(kraus: Vec<CMatrix>) -> Result<Self> {
        let first = kraus
            .first()
            .ok_or_else(|| Error::InvalidParameter("empty Kraus family".into()))?;
        let (dim_out, dim_in) = (first.rows(), first.cols());
        for k in &kraus {
            if k.rows() != dim_out || k.cols() != dim_in {
                return Err(Error::DimMismatch(
                    "Kraus operators must share dimensions".into(),
                ));
            }
            k.check_finite()?;
        }
        let mut sum = CMatrix::zeros(dim_in, dim_in);
        for k in &kraus {
            sum = sum.add(&k.dagger().matmul(k)?)?;
        }
        let residual = sum.max_diff(&CMatrix::identity(dim_in));
        if residual > COMPLETENESS_TOL {
            return Err(Error::NotTracePreserving {
                residual,
                tol: COMPLETENESS_TOL,
            });
        }
        Ok(Self {
            dim_in,
            dim_out,
            kraus,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    /// Schroedinger action: sum_k K_k rho K_k†.
    pub fn apply(&self, rho: &DensityMatrix) -> Result<DensityMatrix> {
        let out = self.apply_mat(rho.mat())?;
        DensityMatrix::new(out)
    }

    /// Raw action on an arbitrary matrix of matching dimension.
    pub fn apply_mat(&self, mat: &CMatrix) -> Result<CMatrix> {
        if mat.rows() != self.dim_in {
            return Err(Error::DimMismatch(format!(
                "channel input dim {} vs state dim {}",
                self.dim_in,
                mat.rows()
            )));
        }
        let mut out = CMatrix::zeros(self.dim_out, self.dim_out);
        for k in &self.kraus {
            out = out.add(&k.matmul(mat)?.matmul(&k.dagger())?)?;
        }
        Ok(out)
    }

    /// Acts on one tensor factor of a joint state, identity on the rest.
    /// Requires dim_out = dim_in (the factor structure is preserved).
    pub fn apply_extended(&self, joint: &JointState, target_factor: usize) -> Result<JointState> {
        let dims = joint.dims();
        if target_factor >= dims.len() {
            return Err(Error::DimMismatch(format!(
                "target factor {} out of range for {} factors",
                target_factor,
                dims.len()
            )));
        }
        if dims[target_factor] != self.dim_in || self.dim_out != self.dim_in {
            return Err(Error::DimMismatch(format!(
                "channel {}->{} cannot act on factor of dim {}",
                self.dim_in, self.dim_out, dims[target_factor]
            )));
        }
        let left: usize = dims[..target_factor].iter().product();
        let right: usize = dims[target_factor + 1..].iter().product();
        let id_left = CMatrix::identity(left);
        let id_right = CMatrix::identity(right);
        let mut out = CMatrix::zeros(joint.mat().rows(), joint.mat().cols());
        for k in &self.kraus {
            let big_k = id_left.tensor(k).tensor(&id_right);
            out = out.add(&big_k.matmul(joint.mat())?.matmul(&big_k.dagger())?)?;
        }
        JointState::new(dims.to_vec(), out)
    }

    /// Kraus family {K2_l K1_k}; acts as e2 after e1.
    pub fn compose(e2: &KrausChannel, e1: &KrausChannel) -> Result<KrausChannel> {
        if e1.dim_out != e2.dim_in {
            return Err(Error::DimMismatch(format!(
                "compose: inner dim {} vs {}",
                e1.dim_out, e2.dim_in
            )));
        }
        let mut kraus = Vec::with_capacity(e1.kraus.len() * e2.kraus.len());
        for k2 in &e2.kraus {
            for k1 in &e1.kraus {
                kraus.push(k2.matmul(k1)?);
            }
        }
        KrausChannel::new(kraus)
    }

    /// Heisenberg adjoint with Kraus family {K_k†}: unital but in general
    /// not trace-preserving, hence a distinct type.
    pub fn adjoint_channel(&self) -> AdjointChannel {
        AdjointChannel {
            kraus: self.kraus.iter().map(CMatrix::dagger).collect(),
        }
    }
}

/// Heisenberg-picture adjoint of a channel. Maps I to I; not a
/// [`KrausChannel`] because it may decrease trace.
#[derive(Debug, Clone)]
pub struct AdjointChannel {
    kraus: Vec<CMatrix>,
}

impl AdjointChannel {
    pub fn kraus(&self) -> &[CMatrix] {
        &self.kraus
    }

    /// sum_k K_k† A K_k, evaluated on an arbitrary operator.
    pub fn apply_mat(&self, mat: &CMatrix) -> Result<CMatrix> {
        let dim = self.kraus[0].cols();
        if mat.rows() != dim {
            return Err(Error::DimMismatch(format!(
                "adjoint input dim {} vs operator dim {}",
                dim,
                mat.rows()
            )));
        }
        let mut out = CMatrix::zeros(self.kraus[0].rows(), self.kraus[0].rows());
        for k in &self.kraus {
            out = out.add(&k.matmul(mat)?.matmul(&k.dagger())?)?;
        }
        Ok(out)
    }
}

pub fn identity(d: usize) -> KrausChannel {
    KrausChannel::new(vec![CMatrix::identity(d)]).expect("identity is complete")
}

pub fn unitary(u: &CMatrix) -> Result<KrausChannel> {
    if !u.is_square() {
        return Err(Error::InvalidParameter("unitary must be square".into()));
    }
    let gram = u.dagger().matmul(u)?;
    let resid = gram.max_diff(&CMatrix::identity(u.rows()));
    if resid > 1e-8 {
        return Err(Error::InvalidParameter(format!(
            "matrix is not unitary: residual {resid:.3e}"
        )));
    }
    KrausChannel::new(vec![u.clone()])
}

fn check_unit_interval(name: &str, v: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&v) || !v.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "{name} = {v} outside [0, 1]"
        )));
    }
    Ok(())
}

/// rho -> (1-p) rho + p I/2 on a qubit.
pub fn depolarizing(p: f64) -> Result<KrausChannel> {
    check_unit_interval("p", p)?;
    let c0 = Complex64::new((1.0 - 3.0 * p / 4.0).sqrt(), 0.0);
    let cp = Complex64::new((p / 4.0).sqrt(), 0.0);
    KrausChannel::new(vec![
        CMatrix::identity(2).scale(c0),
        pauli_x().scale(cp),
        pauli_y().scale(cp),
        pauli_z().scale(cp),
    ])
}

/// Qubit phase damping scaling off-diagonals by (1 - lambda).
pub fn dephasing(lambda: f64) -> Result<KrausChannel> {
    check_unit_interval("lambda", lambda)?;
    let q = lambda / 2.0;
    KrausChannel::new(vec![
        CMatrix::identity(2).scale(Complex64::new((1.0 - q).sqrt(), 0.0)),
        pauli_z().scale(Complex64::new(q.sqrt(), 0.0)),
    ])
}

pub fn amplitude_damping(gamma: f64) -> Result<KrausChannel> {
    check_unit_interval("gamma", gamma)?;
    let k0 = CMatrix::from_real(2, 2, &[1.0, 0.0, 0.0, (1.0 - gamma).sqrt()])?;
    let k1 = CMatrix::from_real(2, 2, &[0.0, gamma.sqrt(), 0.0, 0.0])?;
    KrausChannel::new(vec![k0, k1])
}

pub fn bit_flip(p: f64) -> Result<KrausChannel> {
    check_unit_interval("p", p)?;
    KrausChannel::new(vec![
        CMatrix::identity(2).scale(Complex64::new((1.0 - p).sqrt(), 0.0)),
        pauli_x().scale(Complex64::new(p.sqrt(), 0.0)),
    ])
}

/// Complete dephasing in the computational basis, as explicit projectors.
pub fn complete_dephasing(d: usize) -> KrausChannel {
    let kraus: Vec<CMatrix> = (0..d)
        .map(|i| {
            let mut m = CMatrix::zeros(d, d);
            m[(i, i)] = Complex64::new(1.0, 0.0);
            m
        })
        .collect();
    KrausChannel::new(kraus).expect("projector family is complete")
}

/// Random channel: Kraus operators are the blocks of a Haar-random
/// isometry from d to d * kraus_count dimensions.
pub fn random_channel(d: usize, kraus_count: usize, rng: &mut SeedRng) -> Result<KrausChannel> {
    if d == 0 || kraus_count == 0 {
        return Err(Error::InvalidParameter(
            "dimension and Kraus count must be >= 1".into(),
        ));
    }
    let isom = haar_isometry(d * kraus_count, d, rng)?;
    let mut kraus = Vec::with_capacity(kraus_count);
    for k in 0..kraus_count {
        let mut block = CMatrix::zeros(d, d);
        for r in 0..d {
            for c in 0..d {
                // environment index major: row (k*d + r) of the isometry
                block[(r, c)] = isom[(k * d + r, c)];
            }
        }
        kraus.push(block);
    }
    KrausChannel::new(kraus)
}
