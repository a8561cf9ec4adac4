//! Mutual information of sending measured information through a channel.
//!
//! Entangle the system with a pointer register, push the system factor
//! through the channel, and compare marginal against joint entropy. The
//! difference can go negative: a fully depolarizing channel on |+> costs
//! one bit.

use qmi::channel;
use qmi::measures::{mutual_information, ChannelInput};
use qmi::state::{MeasurementBasis, PureState};

fn main() -> qmi::error::Result<()> {
    let input = ChannelInput::Pure(PureState::plus());
    let basis = MeasurementBasis::computational(2);

    let cases = [
        ("identity", channel::identity(2)),
        ("dephasing(1)", channel::dephasing(1.0)?),
        ("depolarizing(0.5)", channel::depolarizing(0.5)?),
        ("depolarizing(1)", channel::depolarizing(1.0)?),
        ("amplitude_damping(0.3)", channel::amplitude_damping(0.3)?),
    ];

    println!("{:<24} {:>10} {:>10} {:>10}", "channel", "S_out", "S_joint", "I");
    for (name, ch) in &cases {
        let r = mutual_information(&input, &basis, ch)?;
        println!(
            "{:<24} {:>10.6} {:>10.6} {:>10.6}",
            name, r.measured_entropy_out, r.joint_entropy_out, r.mutual_information
        );
    }
    Ok(())
}
