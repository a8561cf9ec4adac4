//! Overlap and Uhlmann fidelities across pure and mixed pairs.

use qmi::measures::{fidelity_pure, fidelity_uhlmann};
use qmi::state::{random_density, random_pure, DensityMatrix, SeedRng};

fn main() -> qmi::error::Result<()> {
    let mut rng = SeedRng::new(3);
    let d = 3;

    let psi = random_pure(d, &mut rng)?;
    let phi = random_pure(d, &mut rng)?;
    let rho = random_density(d, d, &mut rng)?;
    let mixed = DensityMatrix::maximally_mixed(d);

    let pp_overlap = psi.overlap(&phi).norm_sqr();
    println!("pure-pure:");
    println!("  |<psi|phi>|^2          = {pp_overlap:.9}");
    println!(
        "  Tr(rho sigma)          = {:.9}",
        fidelity_pure(&psi.to_density(), &phi.to_density())?
    );
    println!(
        "  Uhlmann                = {:.9}",
        fidelity_uhlmann(&psi.to_density(), &phi.to_density())?
    );

    println!("pure-mixed:");
    println!(
        "  Tr(|psi><psi| rho)     = {:.9}",
        fidelity_pure(&psi.to_density(), &rho)?
    );
    println!(
        "  Uhlmann                = {:.9}",
        fidelity_uhlmann(&psi.to_density(), &rho)?
    );

    println!("mixed-mixed:");
    println!("  Uhlmann(rho, I/d)      = {:.9}", fidelity_uhlmann(&rho, &mixed)?);
    println!("  Uhlmann(rho, rho)      = {:.9}", fidelity_uhlmann(&rho, &rho)?);
    println!(
        "  symmetry gap           = {:.2e}",
        (fidelity_uhlmann(&rho, &mixed)? - fidelity_uhlmann(&mixed, &rho)?).abs()
    );
    Ok(())
}
