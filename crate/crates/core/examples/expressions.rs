//! Parsing constants such as `cos(pi/5)*2` into exact cyclotomic values.

use rootlattice::cyclo::kronecker_classify;
use rootlattice::expr::{eval_str, parse_cyc_expr};

fn main() {
    for text in [
        "z(8) + z(8)^-1",
        "cos(pi/5)*2",
        "(sqrt(5) + 1)/2",
        "cos(2*pi/7)*2 + 1",
        "z(12)^3",
        "1/0",
        "cos(pi/3",
    ] {
        match parse_cyc_expr(text) {
            Err(e) => println!("{text:<22} parse error: {e}"),
            Ok(tree) => match eval_str(text) {
                Err(e) => println!("{text:<22} {tree} fails: {e}"),
                Ok(v) => {
                    let class = kronecker_classify(&v).map(|c| c.to_string());
                    println!("{text:<22} = {v}   [{}]", class.unwrap_or_else(|e| e.to_string()));
                }
            },
        }
    }
}
