//! Search canonical colorings for binomials no symmetry explains, and glue
//! equal-determinant paths into such a cycle by hand.
//!
//! Run with `cargo run --release --example counterexample_hunt`.

use colored_cycles::ideal::conjecture_status;
use colored_cycles::search::{
    construct_counterexample_even, hunt, Budget, Constraint, HuntOptions,
};

fn main() -> colored_cycles::Result<()> {
    let opts = HuntOptions::default();
    for (n, constraint) in [
        (4, Constraint::None),
        (5, Constraint::None),
        (9, Constraint::UniformEdge),
    ] {
        let out = hunt(n, constraint, Budget::Exhaustive, &opts)?;
        println!(
            "n={n} {constraint}: {} classes, {} flagged",
            out.examined,
            out.reports.len()
        );
        for r in out.reports.iter().take(3) {
            let list: Vec<String> = r.unexplained.iter().map(|b| b.to_string()).collect();
            println!("  {}  {}", r.canonical, list.join(", "));
        }
    }

    let sampled = hunt(
        7,
        Constraint::None,
        Budget::Sample { k: 500, seed: 7 },
        &opts,
    )?;
    println!(
        "n=7 sample: {} classes, {} flagged",
        sampled.examined,
        sampled.reports.len()
    );

    let c = construct_counterexample_even(4)?;
    let r = conjecture_status(&c)?;
    println!(
        "glued m=4 cycle {}: unexplained {:?}",
        r.canonical,
        r.unexplained
            .iter()
            .map(|b| b.to_string())
            .collect::<Vec<_>>()
    );
    Ok(())
}
