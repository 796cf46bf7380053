//! Distinct colored paths with equal determinants.
//!
//! Run with `cargo run --release --example path_configs`.

use colored_cycles::configs::{
    classify_pair, exhaustive_pair_search, gen_even_config, gen_odd_config, matches_known_family,
    DEFAULT_PAIR_BUDGET,
};
use colored_cycles::determinant::det_path_recurrence;

fn main() -> colored_cycles::Result<()> {
    for (label, (p, q)) in [
        ("even m=6", gen_even_config(6)?),
        ("odd m=7", gen_odd_config(7)?),
    ] {
        println!("{label}: {:?} / {:?}", p.vertex_colors(), p.edge_colors());
        println!("{:>9}  {:?} / {:?}", "", q.vertex_colors(), q.edge_colors());
        println!(
            "  {:?}, det has {} terms",
            classify_pair(&p, &q)?,
            det_path_recurrence(&p).terms().count()
        );
    }

    let s = exhaustive_pair_search(5, 3, 3, DEFAULT_PAIR_BUDGET)?;
    println!(
        "m=5: {} paths, {} nontrivial pairs",
        s.paths_examined,
        s.pairs.len()
    );
    for (p, q) in &s.pairs {
        println!(
            "  {:?}/{:?} ~ {:?}/{:?}  family {:?}",
            p.vertex_colors(),
            p.edge_colors(),
            q.vertex_colors(),
            q.edge_colors(),
            matches_known_family(p, q)
        );
    }

    // Uniform edges do not rule these pairs out once paths reach 8 vertices.
    let s = exhaustive_pair_search(8, 2, 1, DEFAULT_PAIR_BUDGET)?;
    for (p, q) in &s.pairs {
        println!(
            "uniform-edge m=8: {:?} ~ {:?}",
            p.vertex_colors(),
            q.vertex_colors()
        );
    }
    Ok(())
}
