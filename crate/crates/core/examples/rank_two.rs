//! Rank-2 root lattices: classification over K, their roots, and what
//! happens under scalar extension.

use rootlattice::field::make_field;
use rootlattice::qgraph::{classify_rank2, classify_rank_ge3, extend_classes, rank2_roots};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let k1 = make_field([14, 15])?;
    let k2 = make_field([210])?;

    for f in [&k1, &k2] {
        println!("over {f}:");
        for class in classify_rank2(f) {
            println!("  {:<12} |mu| = {:<4} {} {:?}", class.to_string(), class.mu_order, class.kind_name(), class.members());
        }
        let table = classify_rank_ge3(f, 8)?;
        let present: Vec<_> = table.families().into_iter().filter(|e| e.1).map(|e| e.0).collect();
        println!("  rank >= 3 families: {present:?}");
    }

    println!("extension {k1} -> {k2}:");
    for (from, to) in extend_classes(&k1, &k2)? {
        println!("  {} -> {}", from.label(), to.label());
    }

    // The six roots of O[ζ_6] over Q, as coordinates in the basis {1, ζ_6}.
    let q = make_field([])?;
    for (a, b) in rank2_roots(&q, 3)? {
        println!("  ({a}) + ({b})*zeta_6");
    }
    println!("O[zeta_28] over {k1} has {} roots", rank2_roots(&k1, 14)?.len());
    Ok(())
}
