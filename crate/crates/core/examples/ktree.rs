//! Build the sequential measurement for a k-tree and print its operators.

use oneway_locc::locc::ktree_protocol;
use oneway_locc::numerics::identity_residual;
use oneway_locc::{builtin, verify_protocol, SimpleGraph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let set = builtin("example1")?;
    let path = SimpleGraph::path(5)?;
    let w = ktree_protocol(&set, &path, 1)?.ok_or("protocol did not verify")?;
    for (j, o) in w.outcomes.iter().enumerate() {
        println!("outcome {j}, survivors {:?}", o.survivors);
        println!("{:.3}", o.operator.map(|z| z.re));
    }
    let residual = identity_residual(&w.operator_sum().ok_or("no outcomes")?);
    println!("completeness residual {residual:.2e}");
    println!("verifies: {}", verify_protocol(&set, &w)?);
    Ok(())
}
