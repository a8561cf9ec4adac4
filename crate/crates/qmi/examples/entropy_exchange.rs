//! Two routes to the joint output entropy.
//!
//! The joint entropy of the evolved system-pointer state equals the
//! entropy of the W matrix W_kl = Tr(K_k rho_M K_l^dag) built from the
//! channel's Kraus operators acting on the basis-dephased input.

use qmi::measures::{basis_dephase, entropy_exchange_crosscheck, mutual_information, ChannelInput};
use qmi::state::{random_basis, random_density, random_pure, SeedRng};

fn main() -> qmi::error::Result<()> {
    let mut rng = SeedRng::new(42);
    let d = 3;
    let mut worst = 0f64;
    for i in 0..10 {
        let rho = if i % 2 == 0 {
            random_pure(d, &mut rng)?.to_density()
        } else {
            random_density(d, d, &mut rng)?
        };
        let basis = random_basis(d, &mut rng)?;
        let ch = qmi::channel::random_channel(d, 4, &mut rng)?;

        let input = ChannelInput::Mixed(rho.clone());
        let joint = mutual_information(&input, &basis, &ch)?.joint_entropy_out;
        let via_w = entropy_exchange_crosscheck(&basis_dephase(&rho, &basis)?, &ch)?;
        let gap = (joint - via_w).abs();
        worst = worst.max(gap);
        println!("instance {i}: joint path {joint:.9}, W-matrix path {via_w:.9}, gap {gap:.2e}");
    }
    println!("worst gap over 10 instances: {worst:.2e}");
    Ok(())
}
