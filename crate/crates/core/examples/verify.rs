//! Check a measurement witness against a state set.
//!
//! cargo run --example verify -- states.json witness.json
//!
//! Without arguments, checks a hand-made witness for the five-state set: the
//! standard basis (accepted) and a single identity outcome (rejected).

use oneway_locc::locc::verify_report;
use oneway_locc::numerics::ket;
use oneway_locc::{builtin, CMatrix, MeasurementWitness, Party, ProductStateSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [states, witness] = args.as_slice() {
        let set = ProductStateSet::from_json(&std::fs::read_to_string(states)?)?;
        let w = MeasurementWitness::from_json(&std::fs::read_to_string(witness)?)?;
        println!("{:?}", verify_report(&set, &w)?);
        return Ok(());
    }

    let set = builtin("example1")?;
    let basis: Vec<CMatrix> = (0..4).map(|j| ket(4, j) * ket(4, j).adjoint()).collect();
    let good = MeasurementWitness::from_operators(&set, Party::Alice, basis)?;
    let r = verify_report(&set, &good)?;
    println!("standard basis: valid {} ({r:?})", r.is_valid());

    let lazy = MeasurementWitness::from_operators(&set, Party::Alice, vec![CMatrix::identity(4, 4)])?;
    let r = verify_report(&set, &lazy)?;
    println!("identity: valid {} ({r:?})", r.is_valid());
    println!("{}", good.to_json());
    Ok(())
}
