use oneway_locc::graphs::{chordality, clique_cover_number, enumerate_clique_covers, is_ktree, maximal_cliques};
use oneway_locc::SimpleGraph;

fn show(name: &str, g: &SimpleGraph) -> Result<(), Box<dyn std::error::Error>> {
    println!("{name}: {} vertices, {} edges", g.n(), g.edge_count());
    println!("  maximal cliques {:?}", maximal_cliques(g).iter().map(|c| c.to_vec()).collect::<Vec<_>>());
    println!("  cover number {}", clique_cover_number(g)?);
    println!("  chordal {}, 1-tree {}", chordality(g).is_some(), is_ktree(g, 1).is_some());
    for cover in enumerate_clique_covers(g, usize::MAX, 3)? {
        println!("  cover {:?}", cover.cliques.iter().map(|c| c.to_vec()).collect::<Vec<_>>());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p5 = SimpleGraph::path(5)?;
    show("P5", &p5)?;
    show("house", &p5.complement())?;
    show("C5", &SimpleGraph::cycle(5)?)?;
    Ok(())
}
