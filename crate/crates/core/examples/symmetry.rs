//! Dihedral symmetries of a colored cycle and the binomials they force.
//!
//! Run with `cargo run --example symmetry`.

use colored_cycles::symmetry::{generators, induced_binomials, symmetries};
use colored_cycles::verify::fixture_cycle;

fn main() -> colored_cycles::Result<()> {
    let c = fixture_cycle("fig2.json")?;
    let group = symmetries(&c);
    println!(
        "{} symmetries, generated by {:?}",
        group.len(),
        generators(&group)
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
    );
    for g in &group {
        let forced: Vec<String> = induced_binomials(&c, g)?
            .iter()
            .map(|b| b.to_string())
            .collect();
        println!(
            "  {g}: {}",
            if forced.is_empty() {
                "nothing".to_string()
            } else {
                forced.join(", ")
            }
        );
    }
    println!("canonical form {}", c.canonical_form());
    Ok(())
}
