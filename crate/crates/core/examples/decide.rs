//! Decide both directions for the five-state set and print the evidence.
//!
//! cargo run --example decide

use oneway_locc::locc::SynthesisPath;
use oneway_locc::{builtin, decide_one_way, verify_protocol, Budget, Party, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let set = builtin("example1")?;
    let graphs = set.confusability_graphs()?;
    println!("G_A edges: {:?}", graphs.g_a.edges().collect::<Vec<_>>());
    println!("G_B edges: {:?}", graphs.g_b.edges().collect::<Vec<_>>());

    for first in [Party::Alice, Party::Bob] {
        println!("\n{first:?} measures first");
        match decide_one_way(&set, first, Budget::default())? {
            Verdict::Yes(s) => {
                let how = match &s.path {
                    SynthesisPath::Chordal => "chordal elimination".to_string(),
                    SynthesisPath::Greedy { order, .. } => format!("greedy, order {order:?}"),
                };
                println!("  distinguishable ({how})");
                for (j, o) in s.witness.outcomes.iter().enumerate() {
                    println!("  outcome {j}: rank {:.0}, survivors {:?}", o.operator.trace().re, o.survivors);
                }
                println!("  witness verifies: {}", verify_protocol(&set, &s.witness)?);
            }
            Verdict::No(c) => {
                println!("  not distinguishable: cover number {} exceeds dimension {}", c.cc, c.dim);
                println!("{}", c.to_json());
            }
            Verdict::Unknown(stats) => println!("  undecided after {stats:?}"),
        }
    }
    Ok(())
}
