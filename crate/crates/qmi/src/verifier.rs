//! Property-sweep harness: runs each of the framework's inequality and
//! equality claims over seeded random instances and emits structured
//! reports. All checks are deterministic given the master seed; the
//! reverse-manner check records statistics without asserting the claim.

use serde::{Deserialize, Serialize};

use crate::channel::{random_channel, KrausChannel};
use crate::error::{Error, Result};
use crate::measures::{
    holevo_reduction, mutual_information, separable_mutual_information,
    ChannelInput, Ensemble,
};
use crate::state::{random_basis, random_density, random_pure, SeedRng};

/// Registered check names, in suite order.
pub const CHECK_NAMES: [&str; 5] = [
    "trivial",
    "forward_dpi",
    "pure_mixed_equivalence",
    "separable_reduction",
    "reverse_claims",
];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepConfig {
    pub check: String,
    pub instances: usize,
    pub dim: usize,
    pub kraus_count: usize,
    /// Rank used when drawing mixed states; capped at dim.
    pub mixed_rank: usize,
    pub seed: u64,
    /// Comparison tolerance; default depends on the check.
    pub tolerance: Option<f64>,
    /// Keep per-instance records in the report.
    #[serde(default)]
    pub verbose: bool,
}

impl SweepConfig {
    pub fn new(check: &str, instances: usize, dim: usize, seed: u64) -> Self {
        Self {
            check: check.to_string(),
            instances,
            dim,
            kraus_count: 3,
            mixed_rank: dim,
            seed,
            tolerance: None,
            verbose: false,
        }
    }

    fn validate(&self) -> Result<()> {
        if !CHECK_NAMES.contains(&self.check.as_str()) {
            return Err(Error::InvalidParameter(format!(
                "unknown check '{}'; known: {}",
                self.check,
                CHECK_NAMES.join(", ")
            )));
        }
        if self.instances == 0 {
            return Err(Error::InvalidParameter("instances must be >= 1".into()));
        }
        if self.dim < 2 {
            return Err(Error::InvalidParameter("dim must be >= 2".into()));
        }
        let cap = crate::max_composite_dim();
        if self.dim * self.dim > cap {
            return Err(Error::DimensionCap {
                dim: self.dim * self.dim,
                cap,
            });
        }
        if self.mixed_rank == 0 || self.mixed_rank > self.dim {
            return Err(Error::InvalidParameter(format!(
                "mixed_rank {} not in 1..={}",
                self.mixed_rank, self.dim
            )));
        }
        if self.kraus_count == 0 || self.kraus_count > 16 {
            return Err(Error::InvalidParameter(format!(
                "kraus_count {} not in 1..=16",
                self.kraus_count
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub index: u64,
    pub seed: u64,
    /// Signed violation (positive means the checked relation failed by
    /// this much); for the reverse check, the recorded difference.
    pub violation: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SweepReport {
    pub check: String,
    pub instances_run: usize,
    pub pass_count: usize,
    pub fail_count: usize,
    pub max_violation: f64,
    pub mean_violation: f64,
    /// Fraction of instances whose recorded quantity exceeded tolerance.
    pub violation_fraction: f64,
    pub worst_seed: u64,
    pub worst_index: u64,
    pub tolerance: f64,
    /// Only exploratory checks set this; their exit status ignores
    /// violations.
    pub exploratory: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub records: Option<Vec<InstanceRecord>>,
    pub wall_clock_ms: u128,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.exploratory || self.fail_count == 0
    }
}

struct Outcome {
    violation: f64,
}

fn run_sweep<F>(cfg: &SweepConfig, default_tol: f64, exploratory: bool, mut f: F) -> Result<SweepReport>
where
    F: FnMut(&mut SeedRng) -> Result<Outcome>,
{
    cfg.validate()?;
    let tol = cfg.tolerance.unwrap_or(default_tol);
    let start = std::time::Instant::now();
    let root = SeedRng::new(cfg.seed);
    let mut records = Vec::with_capacity(cfg.instances);
    for index in 0..cfg.instances as u64 {
        let mut rng = root.split(index);
        let seed = rng.seed();
        let out = f(&mut rng)?;
        records.push(InstanceRecord {
            index,
            seed,
            violation: out.violation,
            passed: out.violation <= tol,
        });
    }
    let pass_count = records.iter().filter(|r| r.passed).count();
    let worst = records
        .iter()
        .max_by(|a, b| a.violation.partial_cmp(&b.violation).unwrap())
        .expect("instances >= 1");
    let max_violation = worst.violation.max(0.0);
    let mean_violation =
        records.iter().map(|r| r.violation.max(0.0)).sum::<f64>() / records.len() as f64;
    Ok(SweepReport {
        check: cfg.check.clone(),
        instances_run: records.len(),
        pass_count,
        fail_count: records.len() - pass_count,
        max_violation,
        mean_violation,
        violation_fraction: (records.len() - pass_count) as f64 / records.len() as f64,
        worst_seed: worst.seed,
        worst_index: worst.index,
        tolerance: tol,
        exploratory,
        records: cfg.verbose.then_some(records),
        wall_clock_ms: start.elapsed().as_millis(),
    })
}

fn draw_input(cfg: &SweepConfig, rng: &mut SeedRng, index: u64) -> Result<ChannelInput> {
    // alternate pure and mixed inputs across the sweep
    if index % 2 == 0 {
        Ok(ChannelInput::Pure(random_pure(cfg.dim, rng)?))
    } else {
        Ok(ChannelInput::Mixed(random_density(
            cfg.dim,
            cfg.mixed_rank,
            rng,
        )?))
    }
}

/// Identity channel gives I = S(rho_M) exactly.
pub fn check_trivial_channel(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut index = 0u64;
    let dim = cfg.dim;
    let cfg2 = cfg.clone();
    run_sweep(cfg, 1e-9, false, move |rng| {
        let input = draw_input(&cfg2, rng, index)?;
        index += 1;
        let basis = random_basis(dim, rng)?;
        let ch = crate::channel::identity(dim);
        let res = mutual_information(&input, &basis, &ch)?;
        Ok(Outcome {
            violation: (res.mutual_information - res.measured_entropy_in).abs(),
        })
    })
}

/// Both halves of the forward data processing inequality:
/// I_{E2∘E1} <= I_{E1} and I_{E1} <= S(rho_M).
pub fn check_forward_dpi(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut index = 0u64;
    let cfg2 = cfg.clone();
    run_sweep(cfg, 1e-7, false, move |rng| {
        let input = draw_input(&cfg2, rng, index)?;
        index += 1;
        let basis = random_basis(cfg2.dim, rng)?;
        let e1 = random_channel(cfg2.dim, cfg2.kraus_count, rng)?;
        let e2 = random_channel(cfg2.dim, cfg2.kraus_count, rng)?;
        let i1 = mutual_information(&input, &basis, &e1)?;
        let i21 = mutual_information(&input, &basis, &KrausChannel::compose(&e2, &e1)?)?;
        let monotonic = i21.mutual_information - i1.mutual_information;
        let araki_lieb = i1.mutual_information - i1.measured_entropy_in;
        Ok(Outcome {
            violation: monotonic.max(araki_lieb),
        })
    })
}

/// Transmitting the pure superposition or its basis-dephased mixture
/// yields the same mutual information for every channel.
pub fn check_pure_mixed_equivalence(cfg: &SweepConfig) -> Result<SweepReport> {
    let cfg2 = cfg.clone();
    run_sweep(cfg, 1e-9, false, move |rng| {
        let psi = random_pure(cfg2.dim, rng)?;
        let basis = random_basis(cfg2.dim, rng)?;
        let ch = random_channel(cfg2.dim, cfg2.kraus_count, rng)?;
        let mixed = crate::measures::basis_dephase(&psi.to_density(), &basis)?;
        let a = mutual_information(&ChannelInput::Pure(psi), &basis, &ch)?;
        let b = mutual_information(&ChannelInput::Mixed(mixed), &basis, &ch)?;
        Ok(Outcome {
            violation: (a.mutual_information - b.mutual_information).abs(),
        })
    })
}

/// The separable-state expression equals the Holevo quantity on Schatten
/// ensembles.
pub fn check_separable_reduction(cfg: &SweepConfig) -> Result<SweepReport> {
    let cfg2 = cfg.clone();
    run_sweep(cfg, 1e-8, false, move |rng| {
        let rho = random_density(cfg2.dim, cfg2.mixed_rank, rng)?;
        let ens = Ensemble::schatten(&rho)?;
        let ch = random_channel(cfg2.dim, cfg2.kraus_count, rng)?;
        let sep = separable_mutual_information(&ens, &ch)?;
        let chi = holevo_reduction(&ens, &ch)?;
        Ok(Outcome {
            violation: (sep.mutual_information - chi).abs(),
        })
    })
}

/// Exploratory reverse-manner check. Records, per instance, the larger of
/// I_{E2∘E1} - I_{E1∘E2} (composition-order symmetry) and
/// I_{E2∘E1} - I_{E2} (reverse monotonicity), both read literally from
/// the claimed chain. Statistics only; completion is the contract.
pub fn check_reverse_claims(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut index = 0u64;
    let cfg2 = cfg.clone();
    run_sweep(cfg, 1e-7, true, move |rng| {
        let input = draw_input(&cfg2, rng, index)?;
        index += 1;
        let basis = random_basis(cfg2.dim, rng)?;
        let e1 = random_channel(cfg2.dim, cfg2.kraus_count, rng)?;
        let e2 = random_channel(cfg2.dim, cfg2.kraus_count, rng)?;
        let i21 = mutual_information(&input, &basis, &KrausChannel::compose(&e2, &e1)?)?;
        let i12 = mutual_information(&input, &basis, &KrausChannel::compose(&e1, &e2)?)?;
        let i2 = mutual_information(&input, &basis, &e2)?;
        let order_gap = (i21.mutual_information - i12.mutual_information).abs();
        let monotone_gap = i21.mutual_information - i2.mutual_information;
        Ok(Outcome {
            violation: order_gap.max(monotone_gap),
        })
    })
}

/// Dispatch a config to its check by name.
pub fn run_check(cfg: &SweepConfig) -> Result<SweepReport> {
    match cfg.check.as_str() {
        "trivial" => check_trivial_channel(cfg),
        "forward_dpi" => check_forward_dpi(cfg),
        "pure_mixed_equivalence" => check_pure_mixed_equivalence(cfg),
        "separable_reduction" => check_separable_reduction(cfg),
        "reverse_claims" => check_reverse_claims(cfg),
        other => Err(Error::InvalidParameter(format!("unknown check '{other}'"))),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteReport {
    pub master_seed: u64,
    pub reports: Vec<SweepReport>,
    pub all_assertive_passed: bool,
}

/// Runs every config in order; per-check seeds are derived from the
/// master seed so the aggregate is deterministic.
pub fn run_suite(master_seed: u64, configs: &[SweepConfig]) -> Result<SuiteReport> {
    let root = SeedRng::new(master_seed);
    let mut reports = Vec::with_capacity(configs.len());
    for (i, cfg) in configs.iter().enumerate() {
        let mut derived = cfg.clone();
        derived.seed = root.split(i as u64).seed();
        reports.push(run_check(&derived)?);
    }
    let all_assertive_passed = reports.iter().all(SweepReport::passed);
    Ok(SuiteReport {
        master_seed,
        reports,
        all_assertive_passed,
    })
}

/// The default suite: one config per registered check at desk scale.
pub fn default_suite_configs() -> Vec<SweepConfig> {
    CHECK_NAMES
        .iter()
        .map(|name| {
            let mut cfg = SweepConfig::new(name, 50, 2, 0);
            cfg.kraus_count = 3;
            cfg
        })
        .collect()
}

/// Serialize per-instance records as CSV (`index,seed,violation,passed`).
pub fn records_csv(report: &SweepReport) -> String {
    let mut out = String::from("index,seed,violation,passed\n");
    if let Some(records) = &report.records {
        for r in records {
            out.push_str(&format!(
                "{},{},{:.17e},{}\n",
                r.index, r.seed, r.violation, r.passed
            ));
        }
    }
    out
}
