//! Root enumeration, fundamental systems and Coxeter–Dynkin diagrams for the
//! catalogued types.

use rootlattice::rootsys::{
    decompose, default_functional, diagram_of, enumerate_roots, fundamental_system,
    functional_from_ints, gram_of_type, pair_label, recognize_type, validate_root_lattice, CoxeterType,
    GramMatrix,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for name in ["A3", "B3", "D4", "E8", "F4", "H3", "H4", "I2(7)"] {
        let t: CoxeterType = name.parse()?;
        let g = gram_of_type(t)?;
        let roots = enumerate_roots(&g, 2 * t.root_count())?.into_vec();
        let delta = fundamental_system(&roots, &g, &default_functional(&roots, t.rank()))?;
        let d = diagram_of(&delta, &g)?;
        println!("{t}: {} roots, diagram {d}, recognised as {:?}", roots.len(), recognize_type(&d)?);
    }

    // A different positive system of A2 gives a different simple system with
    // the same diagram.
    let a2 = gram_of_type(CoxeterType::A(2))?;
    let roots = enumerate_roots(&a2, 12)?.into_vec();
    for t in [[2, 1], [1, -2]] {
        let delta = fundamental_system(&roots, &a2, &functional_from_ints(&t))?;
        let shown: Vec<String> = delta.iter().map(|r| r.to_string()).collect();
        println!("A2, t = {t:?}: simple roots {shown:?}, label {}", pair_label(&delta[0], &delta[1], &a2)?);
    }

    let h3 = gram_of_type(CoxeterType::H(3))?;
    let roots = enumerate_roots(&h3, 60)?.into_vec();
    print!("{}", validate_root_lattice(&h3, &roots));

    let mixed = GramMatrix::block_diag(&[a2, gram_of_type(CoxeterType::B(2))?]);
    for (idx, block) in decompose(&mixed) {
        println!("block {idx:?}: {} x {}", block.size(), block.size());
    }
    Ok(())
}
