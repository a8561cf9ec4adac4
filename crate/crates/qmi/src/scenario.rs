//! JSON scenario format for the `qmi compute` command: an input state, a
//! measurement basis, a channel, and the set of measures to evaluate.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::channel::{self, KrausChannel};
use crate::error::{Error, Result};
use crate::measures::{
    fidelity_pure, fidelity_uhlmann, holevo_reduction, measured_information, mutual_information,
    ChannelInput, Ensemble,
};
use crate::numerics::CMatrix;
use crate::state::{DensityMatrix, MeasurementBasis, PureState};

/// One complex entry as [re, im].
type Pair = [f64; 2];

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "snake_case")]
pub enum StateSpec {
    /// Pure state amplitudes as [re, im] pairs.
    Pure { amplitudes: Vec<Pair> },
    /// Density matrix entries, row-major, as [re, im] pairs.
    Density { rows: Vec<Vec<Pair>> },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum BasisSpec {
    /// "computational" or "hadamard".
    Named(String),
    /// Explicit unitary whose columns are the basis vectors.
    Explicit { columns: Vec<Vec<Pair>> },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ChannelSpec {
    /// {"name": "depolarizing", "p": 0.5} and friends.
    Named {
        name: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        p: Option<f64>,
    },
    /// Explicit Kraus operators, each row-major with [re, im] entries.
    Explicit { kraus: Vec<Vec<Vec<Pair>>> },
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Measure {
    MeasuredInformation,
    MutualInformation,
    Holevo,
    FidelityPure,
    FidelityUhlmann,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Scenario {
    pub state: StateSpec,
    pub basis: BasisSpec,
    pub channel: ChannelSpec,
    pub measures: Vec<Measure>,
}

fn to_cmatrix(rows: &[Vec<Pair>]) -> Result<CMatrix> {
    let nrows = rows.len();
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    if nrows == 0 || ncols == 0 || rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::Parse("matrix rows must be nonempty and equal length".into()));
    }
    let entries: Vec<Complex64> = rows
        .iter()
        .flatten()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    CMatrix::from_rows(nrows, ncols, &entries)
}

fn mat_to_rows(m: &CMatrix) -> Vec<Vec<Pair>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| [m[(r, c)].re, m[(r, c)].im]).collect())
        .collect()
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e))
        })
    }

    pub fn input(&self) -> Result<ChannelInput> {
        match &self.state {
            StateSpec::Pure { amplitudes } => {
                let amps: Vec<Complex64> = amplitudes
                    .iter()
                    .map(|&[re, im]| Complex64::new(re, im))
                    .collect();
                Ok(ChannelInput::Pure(PureState::new(amps)?))
            }
            StateSpec::Density { rows } => {
                Ok(ChannelInput::Mixed(DensityMatrix::new(to_cmatrix(rows)?)?))
            }
        }
    }

    pub fn basis(&self, dim: usize) -> Result<MeasurementBasis> {
        match &self.basis {
            BasisSpec::Named(name) => match name.as_str() {
                "computational" => Ok(MeasurementBasis::computational(dim)),
                "hadamard" => {
                    if dim != 2 {
                        return Err(Error::Parse("hadamard basis requires dim 2".into()));
                    }
                    Ok(MeasurementBasis::hadamard())
                }
                other => Err(Error::Parse(format!("unknown basis '{other}'"))),
            },
            BasisSpec::Explicit { columns } => MeasurementBasis::new(to_cmatrix(columns)?),
        }
    }

    pub fn channel(&self, dim: usize) -> Result<KrausChannel> {
        match &self.channel {
            ChannelSpec::Named { name, p } => {
                let param = || {
                    p.ok_or_else(|| Error::Parse(format!("channel '{name}' needs parameter p")))
                };
                match name.as_str() {
                    "identity" => Ok(channel::identity(dim)),
                    "depolarizing" => channel::depolarizing(param()?),
                    "dephasing" => channel::dephasing(param()?),
                    "amplitude_damping" => channel::amplitude_damping(param()?),
                    "bit_flip" => channel::bit_flip(param()?),
                    "complete_dephasing" => Ok(channel::complete_dephasing(dim)),
                    other => Err(Error::Parse(format!("unknown channel '{other}'"))),
                }
            }
            ChannelSpec::Explicit { kraus } => {
                let ops: Result<Vec<CMatrix>> = kraus.iter().map(|k| to_cmatrix(k)).collect();
                KrausChannel::new(ops?)
            }
        }
    }

    /// Echo of the fully resolved inputs, suitable for round-tripping
    /// back into a `Scenario`.
    pub fn resolved_echo(&self, dim: usize) -> Result<Scenario> {
        let basis = self.basis(dim)?;
        let ch = self.channel(dim)?;
        Ok(Scenario {
            state: self.state.clone(),
            basis: BasisSpec::Explicit {
                columns: mat_to_rows(basis.columns()),
            },
            channel: ChannelSpec::Explicit {
                kraus: ch.kraus().iter().map(mat_to_rows).collect(),
            },
            measures: self.measures.clone(),
        })
    }

    /// Evaluate every requested measure; returns the report document.
    pub fn evaluate(&self) -> Result<serde_json::Value> {
        let input = self.input()?;
        let rho_in = match &input {
            ChannelInput::Pure(p) => p.to_density(),
            ChannelInput::Mixed(m) => m.clone(),
        };
        let dim = rho_in.dim();
        let basis = self.basis(dim)?;
        let ch = self.channel(dim)?;
        let mut results = serde_json::Map::new();
        for m in &self.measures {
            match m {
                Measure::MeasuredInformation => {
                    results.insert(
                        "measured_information".into(),
                        json!(measured_information(&rho_in, &basis)?),
                    );
                }
                Measure::MutualInformation => {
                    let r = mutual_information(&input, &basis, &ch)?;
                    results.insert(
                        "mutual_information".into(),
                        json!({
                            "value": r.mutual_information,
                            "measured_entropy_in": r.measured_entropy_in,
                            "measured_entropy_out": r.measured_entropy_out,
                            "joint_entropy_out": r.joint_entropy_out,
                        }),
                    );
                }
                Measure::Holevo => {
                    let ens = Ensemble::schatten(&rho_in)?;
                    results.insert("holevo".into(), json!(holevo_reduction(&ens, &ch)?));
                }
                Measure::FidelityPure => {
                    let out = ch.apply(&rho_in)?;
                    results.insert("fidelity_pure".into(), json!(fidelity_pure(&rho_in, &out)?));
                }
                Measure::FidelityUhlmann => {
                    let out = ch.apply(&rho_in)?;
                    results.insert(
                        "fidelity_uhlmann".into(),
                        json!(fidelity_uhlmann(&rho_in, &out)?),
                    );
                }
            }
        }
        Ok(json!({
            "scenario": self.resolved_echo(dim)?,
            "results": results,
        }))
    }
}
