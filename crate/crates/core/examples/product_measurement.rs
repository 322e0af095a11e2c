//! Both one-way directions work for the seven-state set, yet the two
//! decompositions cannot be run side by side as a single product measurement.

use oneway_locc::locc::{nonspanning_analysis, product_measurement, ProductCheck};
use oneway_locc::{builtin, decide_one_way, Budget, Party, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let set = builtin("example3")?;
    let mut decs = Vec::new();
    for first in [Party::Alice, Party::Bob] {
        let Verdict::Yes(s) = decide_one_way(&set, first, Budget::default())? else {
            return Err(format!("{first:?}-first search did not succeed").into());
        };
        let supports: Vec<_> = s.witness.outcomes.iter().map(|o| o.survivors.clone()).collect();
        println!("{first:?} first: {supports:?}");
        decs.push(s.decomposition);
    }

    match product_measurement(&set, &decs[0], &decs[1])? {
        ProductCheck::Table { cells } => println!("product table: {cells:?}"),
        ProductCheck::Conflict { alice_outcome, bob_outcome, states } => {
            println!("cell ({alice_outcome},{bob_outcome}) keeps {states:?} together")
        }
    }

    let r = nonspanning_analysis(&set, Party::Alice, 3)?;
    println!(
        "removable 4-subsets that do not span: {}, leaving a Bob-orthogonal 3-subset: {}",
        r.non_spanning.len(),
        r.second_party_orthogonal.len()
    );
    for rem in &r.second_party_orthogonal {
        println!("  remove {:?}, keep {:?}", rem.removed, rem.kept);
    }
    Ok(())
}
