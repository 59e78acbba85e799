//! Totally real abelian fields K = Q(ζ_2n^+ : n ∈ gens) and the graph Q_K.

use rootlattice::field::make_field;
use rootlattice::qgraph::{compute_qk, partition_classes};
use rootlattice::report::qgraph_dot;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for gens in [vec![], vec![4], vec![5], vec![14, 15], vec![210]] {
        let f = make_field(gens)?;
        let g = compute_qk(&f);
        let (primes, composite) = partition_classes(&g);
        println!("{f}: degree {}, modulus {}", f.degree(), f.modulus());
        println!("  Q_K = {:?}", g.vertices());
        println!("  edges = {:?}", g.edges());
        println!("  prime powers {primes:?}, composite components {composite:?}");
        println!("  contains sqrt2: {}, golden ratio: {}", f.contains_zeta_plus(4)?, f.contains_zeta_plus(5)?);
    }

    let small = make_field([14, 15])?;
    let big = make_field([210])?;
    println!("{small} ⊆ {big}: {}", small.subfield_of(&big));
    println!("{big} ⊆ {small}: {}", big.subfield_of(&small));
    print!("{}", qgraph_dot(&compute_qk(&small)));
    Ok(())
}
