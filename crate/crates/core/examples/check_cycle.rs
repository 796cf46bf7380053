//! Find every linear binomial of a cycle and ask whether a symmetry explains it.
//!
//! Run with `cargo run --example check_cycle [-- path/to/cycle.json]`.

use colored_cycles::ideal::conjecture_status;
use colored_cycles::model::load;
use colored_cycles::verify::fixture_cycle;

fn main() -> colored_cycles::Result<()> {
    let c = match std::env::args().nth(1) {
        Some(path) => load(path.as_ref())?.0.into_cycle()?,
        None => fixture_cycle("fig5.json")?,
    };
    let r = conjecture_status(&c)?;
    println!(
        "n = {}, symmetry group order {}",
        r.n, r.symmetry_group_order
    );
    for e in &r.binomials {
        println!(
            "  {} {}",
            if e.explained {
                "explained  "
            } else {
                "unexplained"
            },
            e.binomial()
        );
    }
    println!("every binomial explained: {}", r.holds());
    Ok(())
}
