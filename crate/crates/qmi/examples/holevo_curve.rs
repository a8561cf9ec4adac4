//! Holevo quantity of a depolarizing channel on the {|0>,|1>} ensemble,
//! compared against the closed form 1 - H2(p/2) and against the
//! separable-state evaluation.

use qmi::channel::depolarizing;
use qmi::measures::{holevo_reduction, separable_mutual_information, Ensemble};
use qmi::state::PureState;

fn h2(x: f64) -> f64 {
    let term = |p: f64| if p > 0.0 { -p * p.log2() } else { 0.0 };
    term(x) + term(1.0 - x)
}

fn main() -> qmi::error::Result<()> {
    let ens = Ensemble::new(
        vec![0.5, 0.5],
        vec![
            PureState::basis_state(2, 0).to_density(),
            PureState::basis_state(2, 1).to_density(),
        ],
    )?;

    println!("{:>5} {:>12} {:>12} {:>12}", "p", "chi", "closed form", "separable");
    for k in 0..=10 {
        let p = k as f64 / 10.0;
        let ch = depolarizing(p)?;
        let chi = holevo_reduction(&ens, &ch)?;
        let sep = separable_mutual_information(&ens, &ch)?;
        println!(
            "{:>5.2} {:>12.6} {:>12.6} {:>12.6}",
            p,
            chi,
            1.0 - h2(p / 2.0),
            sep.mutual_information
        );
    }
    Ok(())
}
