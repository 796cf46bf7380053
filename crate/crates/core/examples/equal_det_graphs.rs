//! Non-isomorphic colored graphs whose concentration matrices share a determinant.
//!
//! Run with `cargo run --example equal_det_graphs`.

use colored_cycles::determinant::det_general;
use colored_cycles::verify::fixture;

fn main() -> colored_cycles::Result<()> {
    for (a, b) in [
        ("example-5-5-g1.json", "example-5-5-g2.json"),
        ("example-5-5-g3.json", "example-5-5-g4.json"),
    ] {
        let (g, _) = fixture(a)?;
        let (h, _) = fixture(b)?;
        let (dg, dh) = (det_general(&g.to_graph())?, det_general(&h.to_graph())?);
        println!(
            "{a}: {} edges, {b}: {} edges",
            g.to_graph().edges().len(),
            h.to_graph().edges().len()
        );
        println!("  det = {dg}");
        assert_eq!(dg, dh);
    }
    Ok(())
}
