//! Exact arithmetic in cyclotomic fields and Kronecker's classification of
//! algebraic integers with small conjugates.

use rootlattice::cyclo::real::{approx_f64, conjugate_signs};
use rootlattice::cyclo::{
    cyclotomic_unit_c, kronecker_classify, minimal_polynomial, poly::format_poly, CycElem,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 2cos(π/5), the golden ratio.
    let phi = CycElem::zeta_plus(10);
    println!("phi = {phi}");
    println!("phi^2 - phi - 1 = {}", &(&phi.square() - &phi) - &CycElem::one());
    println!("min poly: {}", format_poly(&minimal_polynomial(&phi)));
    println!("1/phi = {} ~ {:.6}", phi.invert()?, approx_f64(&phi.invert()?)?);
    println!("conjugate signs of phi: {:?}", conjugate_signs(&phi)?);

    // Mixed moduli lift to a common field automatically.
    let sqrt2 = CycElem::zeta_plus(8);
    let sum = &phi + &sqrt2;
    println!("phi + sqrt2 lives in Q(zeta_{}), ~ {:.6}", sum.modulus(), approx_f64(&sum)?);

    // Units sin(kπ/m)/sin(π/m).
    for k in 1..=6 {
        let c = cyclotomic_unit_c(7, k);
        println!("c_{k} (m = 7) = {:.6}, norm {}", approx_f64(&c)?, c.conjugate_product());
    }

    for a in [
        CycElem::zeta_plus(14),
        sqrt2.clone(),
        CycElem::zeta(9),
        CycElem::from_int(-2),
        &phi + &CycElem::one(),
    ] {
        println!("{a}  =>  {}", kronecker_classify(&a)?);
    }
    Ok(())
}
