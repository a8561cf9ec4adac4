//! Information quantities: Shannon and von Neumann entropy, measured
//! information, channel mutual information for pure and mixed inputs, the
//! entropy-exchange cross-check, Holevo/separable reductions, and both
//! fidelity notions. All entropies are in bits.

use num_complex::Complex64;
use serde::Serialize;

use crate::channel::KrausChannel;
use crate::error::{Error, Result};
use crate::numerics::{psd_sqrt, CMatrix, CLAMP_TOL};
use crate::state::{
    measured_distribution, pointer_entangle_mixed, pointer_entangle_pure,
    three_factor_pointer_state, DensityMatrix, JointState, MeasurementBasis, PureState,
};

/// -sum p_i log2 p_i with 0 log 0 := 0. Entries in [-1e-12, 0) are
/// clamped; the vector must sum to 1 within 1e-9.
pub fn shannon_entropy(probs: &[f64]) -> Result<f64> {
    let mut total = 0.0;
    let mut acc = 0.0;
    for &p in probs {
        if p < -1e-12 || !p.is_finite() {
            return Err(Error::InvalidDistribution(format!("entry {p}")));
        }
        let p = p.max(0.0);
        total += p;
        if p > 0.0 {
            acc -= p * p.log2();
        }
    }
    if (total - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidDistribution(format!("sum = {total}")));
    }
    Ok(acc)
}

/// Shannon entropy of the clamped spectrum, base 2.
pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    shannon_entropy(&rho.spectrum()?)
}

/// Entropy of a joint state's clamped spectrum.
pub fn joint_entropy(joint: &JointState) -> Result<f64> {
    shannon_entropy(&joint.spectrum()?)
}

/// Shannon entropy of the measurement-outcome distribution; equals the
/// von Neumann entropy of the basis-dephased state.
pub fn measured_information(rho: &DensityMatrix, basis: &MeasurementBasis) -> Result<f64> {
    shannon_entropy(&measured_distribution(rho, basis)?)
}

/// sum_i <phi_i|rho|phi_i> |phi_i><phi_i|: the state dephased in the
/// measurement basis.
pub fn basis_dephase(rho: &DensityMatrix, basis: &MeasurementBasis) -> Result<DensityMatrix> {
    let q = measured_distribution(rho, basis)?;
    let d = rho.dim();
    let mut out = CMatrix::zeros(d, d);
    for (i, &p) in q.iter().enumerate() {
        if p == 0.0 {
            continue;
        }
        out = out.add(&basis.vector(i).projector().scale(Complex64::new(p, 0.0)))?;
    }
    DensityMatrix::new(out)
}

/// Input to the channel mutual information.
#[derive(Debug, Clone)]
pub enum ChannelInput {
    Pure(PureState),
    Mixed(DensityMatrix),
}

impl ChannelInput {
    fn dim(&self) -> usize {
        match self {
            ChannelInput::Pure(p) => p.dim(),
            ChannelInput::Mixed(m) => m.dim(),
        }
    }

    fn to_density(&self) -> DensityMatrix {
        match self {
            ChannelInput::Pure(p) => p.to_density(),
            ChannelInput::Mixed(m) => m.clone(),
        }
    }
}

/// Channel mutual information and its named intermediates.
#[derive(Debug, Clone, Serialize)]
pub struct MutualInfoResult {
    /// S of the system marginal after the channel, bits.
    pub measured_entropy_out: f64,
    /// S of the joint system-pointer state after the channel, bits.
    pub joint_entropy_out: f64,
    /// measured_entropy_out - joint_entropy_out, bits; may be negative.
    pub mutual_information: f64,
    /// S of the measured distribution before the channel, bits.
    pub measured_entropy_in: f64,
}

/// Mutual information of transmitting `input`, measured in `basis`,
/// through `ch`: entangle the system with a pointer register, send the
/// system factor through the channel, and return
/// S(system marginal) - S(joint state).
///
/// Internally cross-checks that the system marginal equals
/// sum_i q_i ch(|phi_i><phi_i|) within 1e-9.
pub fn mutual_information(
    input: &ChannelInput,
    basis: &MeasurementBasis,
    ch: &KrausChannel,
) -> Result<MutualInfoResult> {
    let d = input.dim();
    if d != basis.dim() || ch.dim_in() != d {
        return Err(Error::DimMismatch(format!(
            "input dim {d}, basis dim {}, channel dim {}",
            basis.dim(),
            ch.dim_in()
        )));
    }
    let joint = match input {
        ChannelInput::Pure(psi) => pointer_entangle_pure(psi, basis)?,
        ChannelInput::Mixed(rho) => pointer_entangle_mixed(rho, basis)?,
    };
    let probs = measured_distribution(&input.to_density(), basis)?;
    let measured_entropy_in = shannon_entropy(&probs)?;

    let evolved = ch.apply_extended(&joint, 0)?;
    let sys_out = evolved.marginal(&[0])?;

    // independent expression for the output measured state
    let mut expect = CMatrix::zeros(d, d);
    for (i, &q) in probs.iter().enumerate() {
        if q == 0.0 {
            continue;
        }
        let proj = basis.vector(i).projector();
        expect = expect.add(&ch.apply_mat(&proj)?.scale(Complex64::new(q, 0.0)))?;
    }
    let resid = sys_out.mat().max_diff(&expect);
    if resid > 1e-9 {
        return Err(Error::Inconsistent(format!(
            "output measured state deviates from sum_i q_i E(|phi_i><phi_i|) by {resid:.3e}"
        )));
    }

    let measured_entropy_out = von_neumann_entropy(&sys_out)?;
    let joint_entropy_out = joint_entropy(&evolved)?;
    Ok(MutualInfoResult {
        measured_entropy_out,
        joint_entropy_out,
        mutual_information: measured_entropy_out - joint_entropy_out,
        measured_entropy_in,
    })
}

/// Same quantity computed from the literal three-factor purification
/// construction; cross-checks the collapsed two-factor form.
pub fn mutual_information_three_factor(
    rho: &DensityMatrix,
    basis: &MeasurementBasis,
    ch: &KrausChannel,
) -> Result<MutualInfoResult> {
    let triple = three_factor_pointer_state(rho, basis)?;
    let measured_entropy_in = measured_information(rho, basis)?;
    let evolved = ch.apply_extended(&triple, 0)?;
    let sys_out = evolved.marginal(&[0])?;
    let measured_entropy_out = von_neumann_entropy(&sys_out)?;
    let joint_entropy_out = joint_entropy(&evolved)?;
    Ok(MutualInfoResult {
        measured_entropy_out,
        joint_entropy_out,
        mutual_information: measured_entropy_out - joint_entropy_out,
        measured_entropy_in,
    })
}

/// Entropy of the W matrix, W_kl = Tr(K_k rho K_l†). Independent route to
/// the joint output entropy: valid because the pointer-entangled state is
/// a purification of the dephased input.
pub fn entropy_exchange_crosscheck(rho_m: &DensityMatrix, ch: &KrausChannel) -> Result<f64> {
    if ch.dim_in() != rho_m.dim() {
        return Err(Error::DimMismatch(format!(
            "channel dim {} vs state dim {}",
            ch.dim_in(),
            rho_m.dim()
        )));
    }
    let n = ch.kraus().len();
    let mut w = CMatrix::zeros(n, n);
    for (k, kk) in ch.kraus().iter().enumerate() {
        for (l, kl) in ch.kraus().iter().enumerate() {
            w[(k, l)] = kk.matmul(rho_m.mat())?.matmul(&kl.dagger())?.trace();
        }
    }
    let spectrum = crate::numerics::clamped_spectrum(&w)?;
    shannon_entropy(&spectrum)
}

/// Weighted collection of density matrices.
#[derive(Debug, Clone)]
pub struct Ensemble {
    weights: Vec<f64>,
    members: Vec<DensityMatrix>,
}

impl Ensemble {
    pub fn new(weights: Vec<f64>, members: Vec<DensityMatrix>) -> Result<Self> {
        if weights.len() != members.len() || members.is_empty() {
            return Err(Error::InvalidParameter(
                "ensemble needs matching nonempty weights and members".into(),
            ));
        }
        let sum: f64 = weights.iter().sum();
        if weights.iter().any(|&w| w < 0.0) || (sum - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidDistribution(format!(
                "ensemble weights sum to {sum}"
            )));
        }
        let d = members[0].dim();
        if members.iter().any(|m| m.dim() != d) {
            return Err(Error::DimMismatch("ensemble member dims differ".into()));
        }
        Ok(Self { weights, members })
    }

    /// Spectral ensemble of a density matrix: eigenvalue weights with
    /// rank-one eigenprojector members. Zero-weight members are dropped.
    pub fn schatten(rho: &DensityMatrix) -> Result<Self> {
        let (values, vectors) = crate::state::sorted_eig_descending(rho)?;
        let mut weights = Vec::new();
        let mut members = Vec::new();
        for (p, v) in values.iter().zip(&vectors) {
            if *p <= CLAMP_TOL {
                continue;
            }
            let col = CMatrix::column(v);
            let proj = col.matmul(&col.dagger())?;
            members.push(DensityMatrix::new(proj)?);
            weights.push(*p);
        }
        // normalize away clamp-level weight loss
        let sum: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= sum;
        }
        Ensemble::new(weights, members)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn members(&self) -> &[DensityMatrix] {
        &self.members
    }

    pub fn dim(&self) -> usize {
        self.members[0].dim()
    }

    /// sum_i w_i rho_i.
    pub fn average(&self) -> Result<DensityMatrix> {
        let d = self.dim();
        let mut avg = CMatrix::zeros(d, d);
        for (w, m) in self.weights.iter().zip(&self.members) {
            avg = avg.add(&m.mat().scale(Complex64::new(*w, 0.0)))?;
        }
        DensityMatrix::new(avg)
    }

    /// True when the members are orthogonal rank-one projectors of the
    /// average (the Schatten form).
    fn is_schatten(&self) -> Result<()> {
        for (i, a) in self.members.iter().enumerate() {
            let sq = a.mat().matmul(a.mat())?;
            if sq.max_diff(a.mat()) > 1e-8 {
                return Err(Error::NotSchatten(format!("member {i} is not a projector")));
            }
            for (j, b) in self.members.iter().enumerate() {
                if i == j {
                    continue;
                }
                let overlap = a.mat().matmul(b.mat())?.trace().norm();
                if overlap > 1e-8 {
                    return Err(Error::NotSchatten(format!(
                        "members {i} and {j} overlap by {overlap:.3e}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Holevo quantity chi = S(E(rho_bar)) - sum_i w_i S(E(rho_i)).
pub fn holevo_reduction(ens: &Ensemble, ch: &KrausChannel) -> Result<f64> {
    if ch.dim_in() != ens.dim() {
        return Err(Error::DimMismatch(format!(
            "channel dim {} vs ensemble dim {}",
            ch.dim_in(),
            ens.dim()
        )));
    }
    let avg_out = ch.apply(&ens.average()?)?;
    let mut subtract = 0.0;
    for (w, m) in ens.weights().iter().zip(ens.members()) {
        subtract += w * von_neumann_entropy(&ch.apply(m)?)?;
    }
    Ok(von_neumann_entropy(&avg_out)? - subtract)
}

/// Separable-state mutual information with its named intermediates.
#[derive(Debug, Clone, Serialize)]
pub struct SeparableMutualInfo {
    /// S of the system marginal of the evolved separable state, bits.
    pub measured_entropy_out: f64,
    /// S(E⊗1(rho_c)) - S(rho_c): the unmeasured-information change.
    pub unmeasured_information: f64,
    /// measured_entropy_out - unmeasured_information, bits.
    pub mutual_information: f64,
}

/// Evaluates S(Tr_P (E⊗1) rho_c) - [S((E⊗1) rho_c) - S(rho_c)] on the
/// explicitly built separable state rho_c = sum_i w_i rho_i ⊗ |i><i|.
/// Requires the Schatten form; the result then equals
/// [`holevo_reduction`].
pub fn separable_mutual_information(
    ens: &Ensemble,
    ch: &KrausChannel,
) -> Result<SeparableMutualInfo> {
    if ch.dim_in() != ens.dim() {
        return Err(Error::DimMismatch(format!(
            "channel dim {} vs ensemble dim {}",
            ch.dim_in(),
            ens.dim()
        )));
    }
    ens.is_schatten()?;
    let d = ens.dim();
    let n = ens.members().len();
    let mut rho_c = CMatrix::zeros(d * n, d * n);
    for (i, (w, m)) in ens.weights().iter().zip(ens.members()).enumerate() {
        let mut pointer = CMatrix::zeros(n, n);
        pointer[(i, i)] = Complex64::new(1.0, 0.0);
        rho_c = rho_c.add(&m.mat().scale(Complex64::new(*w, 0.0)).tensor(&pointer))?;
    }
    let rho_c = JointState::new(vec![d, n], rho_c)?;
    let entropy_in = joint_entropy(&rho_c)?;
    let evolved = ch.apply_extended(&rho_c, 0)?;
    let measured_entropy_out = von_neumann_entropy(&evolved.marginal(&[0])?)?;
    let unmeasured_information = joint_entropy(&evolved)? - entropy_in;
    Ok(SeparableMutualInfo {
        measured_entropy_out,
        unmeasured_information,
        mutual_information: measured_entropy_out - unmeasured_information,
    })
}

/// Overlap fidelity Tr(rho sigma), intended for pure `rho`.
pub fn fidelity_pure(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimMismatch(format!(
            "fidelity dims {} vs {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    let f = rho.mat().matmul(sigma.mat())?.trace().re;
    Ok(f.clamp(0.0, 1.0 + 1e-9))
}

/// Uhlmann transition probability {Tr[(sqrt(rho) sigma sqrt(rho))^(1/2)]}^2.
pub fn fidelity_uhlmann(rho: &DensityMatrix, sigma: &DensityMatrix) -> Result<f64> {
    if rho.dim() != sigma.dim() {
        return Err(Error::DimMismatch(format!(
            "fidelity dims {} vs {}",
            rho.dim(),
            sigma.dim()
        )));
    }
    let root = psd_sqrt(rho.mat())?;
    let inner = root.matmul(sigma.mat())?.matmul(&root)?;
    let sqrt_inner = psd_sqrt(&inner)?;
    let f = sqrt_inner.trace().re.powi(2);
    Ok(f.clamp(0.0, 1.0 + 1e-9))
}
