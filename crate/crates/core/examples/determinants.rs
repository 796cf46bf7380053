//! Three ways to compute a colored path's determinant, plus a general graph.
//!
//! Run with `cargo run --example determinants`.

use colored_cycles::determinant::{
    det_general, det_path_disjoint, det_path_recurrence, vertex_degree_parity,
};
use colored_cycles::verify::fixture;
use colored_cycles::ColoredPath;

fn main() -> colored_cycles::Result<()> {
    // Vertices a,b,a,b joined by edges x,y,x.
    let p = ColoredPath::new(vec![0, 1, 0, 1], vec![0, 1, 0])?;
    let by_matchings = det_path_disjoint(&p);
    let by_recurrence = det_path_recurrence(&p);
    let by_expansion = det_general(&p.to_graph())?;
    println!("det K_P = {by_recurrence}");
    assert_eq!(by_matchings, by_recurrence);
    assert_eq!(by_recurrence, by_expansion);
    println!(
        "vertex-degree parity: {:?}",
        vertex_degree_parity(&by_recurrence)
    );

    // Reflecting a path never changes its determinant.
    assert_eq!(det_path_recurrence(&p.reflect()), by_recurrence);

    // Any graph up to 12 vertices goes through the memoized expansion.
    let (g, labels) = fixture("example-5-5-g1.json")?;
    println!("det K_G1 = {}", det_general(&g.to_graph())?);
    println!(
        "  vertex colors {:?}, edge colors {:?}",
        labels.vertex, labels.edge
    );
    Ok(())
}
