//! Run the chordal elimination on a small hand-built instance and print each
//! part of the resulting decomposition.

use oneway_locc::graphs::chordality;
use oneway_locc::locc::chordal_protocol;
use oneway_locc::numerics::real_vector;
use oneway_locc::{SimpleGraph, Tolerance};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = vec![
        real_vector(&[1., 0., 0., 0.]),
        real_vector(&[0., 1., 0., 0.]),
        real_vector(&[1., 0., 1., 1.]),
        real_vector(&[0., 1., 0., 1.]),
        real_vector(&[0., 0., 1., 0.]),
    ];
    let g = SimpleGraph::from_edges(5, [(0, 2), (0, 4), (2, 4), (2, 3), (3, 1)])?;
    let peo = chordality(&g).ok_or("graph is not chordal")?;
    println!("elimination order: {:?}", peo.order);

    let tol = Tolerance::default();
    let dec = chordal_protocol(4, &phi, &g, tol)?.ok_or("no decomposition")?;
    for (part, clique) in dec.parts.iter().zip(&dec.cliques) {
        println!("clique {:?}: dim {}", clique.to_vec(), part.dim());
        for b in part.basis() {
            let v: Vec<String> = b.iter().map(|z| format!("{:+.3}", z.re)).collect();
            println!("    [{}]", v.join(", "));
        }
    }
    let report = dec.check(4, &phi)?;
    println!("{report:?}");
    Ok(())
}
