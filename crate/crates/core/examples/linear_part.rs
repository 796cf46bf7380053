//! The full linear part of the vanishing ideal, including non-binomial forms.
//!
//! Run with `cargo run --example linear_part`.

use colored_cycles::ideal::linear_part;
use colored_cycles::verify::fixture_cycle;
use colored_cycles::ColoredCycle;

fn main() -> colored_cycles::Result<()> {
    for n in 3..=8 {
        let lp = linear_part(&ColoredCycle::uniform(n)?)?;
        println!(
            "uniform C{n}: dimension {}, spanned by binomials: {}",
            lp.dimension,
            lp.binomials_span()
        );
    }
    // Not every linear relation is a binomial.
    let lp = linear_part(&fixture_cycle("fig8.json")?)?;
    println!(
        "fig8: dimension {}, {} binomial generators",
        lp.dimension,
        lp.binomial_basis.len()
    );
    for f in &lp.extra_forms {
        println!("  {f}");
    }
    Ok(())
}
