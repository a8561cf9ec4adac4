//! Entropy of a state as seen through a measurement basis.

use qmi::measures::measured_information;
use qmi::state::{measured_distribution, MeasurementBasis, PureState, SeedRng};

fn main() -> qmi::error::Result<()> {
    let plus = PureState::plus().to_density();

    let comp = MeasurementBasis::computational(2);
    let had = MeasurementBasis::hadamard();

    let q_comp = measured_distribution(&plus, &comp)?;
    let q_had = measured_distribution(&plus, &had)?;
    println!("|+> in computational basis: q = {q_comp:?}");
    println!("  S(rho_M) = {:.6} bits", measured_information(&plus, &comp)?);
    println!("|+> in Hadamard basis:      q = {q_had:?}");
    println!("  S(rho_M) = {:.6} bits", measured_information(&plus, &had)?);

    // a random qutrit state carries at most log2(3) bits in any basis
    let mut rng = SeedRng::new(11);
    let rho = qmi::state::random_density(3, 3, &mut rng)?;
    let basis = qmi::state::random_basis(3, &mut rng)?;
    let s = measured_information(&rho, &basis)?;
    println!("random qutrit in a random basis: S = {s:.6} <= {:.6}", 3f64.log2());
    Ok(())
}
