//! Analyse a domino diagram: the built-in 3x3 tiling, or a JSON file.
//!
//! cargo run --example domino -- [diagram.json]

use oneway_locc::domino::{builtin_bennett3x3, DominoDiagram};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let diagram = match std::env::args().nth(1) {
        Some(path) => DominoDiagram::from_json(&std::fs::read_to_string(path)?)?,
        None => builtin_bennett3x3(),
    };
    let report = diagram.validate();
    if !report.is_valid() {
        return Err(report.to_string().into());
    }
    let set = diagram.generate_states()?;
    println!("{} states on a {}x{} torus", set.len(), diagram.m, diagram.n);
    println!("orthogonal: {}", set.check_mutual_orthogonality().is_empty());

    let c = diagram.consistency()?;
    println!("graphs read off the grid match the states: {}", c.is_consistent());

    let b = diagram.bounds()?;
    println!("h = {}, v = {}, cover bounds {} / {}", b.h, b.v, b.lower_row, b.lower_col);
    println!("{:#?}", diagram.verdict()?);
    Ok(())
}
