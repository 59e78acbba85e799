use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use rootlattice::arith::units_mod;
use rootlattice::cyclo::real::{eval_real, sign};
use rootlattice::cyclo::CycElem;
use rootlattice::expr::{parse_cyc_expr, CycExpr};
use rootlattice::field::make_field;
use rootlattice::qgraph::compute_qk;
use rootlattice::rootsys::{
    default_functional, enumerate_roots, fundamental_system, gram_of_type, reflect, CoxeterType,
};

const MODULI: [u64; 10] = [1, 3, 4, 5, 7, 8, 9, 12, 15, 20];

fn elem() -> impl Strategy<Value = CycElem> {
    (prop::sample::select(&MODULI[..]), prop::collection::vec(-6i64..=6, 0..24))
        .prop_map(|(n, c)| CycElem::from_int_coeffs(n, &c))
}

fn unit_for(n: u64, pick: usize) -> i64 {
    let us = units_mod(n);
    us[pick % us.len()] as i64
}

/// `Σ c_k cos(2πk/N)` of `a + conj(a)`, summed naively in f64.
fn naive_real(n: u64, coeffs: &[i64]) -> f64 {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, &c)| 2.0 * c as f64 * (2.0 * std::f64::consts::PI * k as f64 / n as f64).cos())
        .sum()
}

fn expr() -> impl Strategy<Value = CycExpr> {
    let leaf = prop_oneof![
        (-20i64..=20).prop_map(|i| CycExpr::Int(BigInt::from(i))),
        (1u64..=12).prop_map(CycExpr::Zeta),
        (1i64..=8, 1i64..=8).prop_map(|(k, m)| CycExpr::Cos(BigRational::new(k.into(), m.into()))),
        prop::sample::select(vec![2u64, 5]).prop_map(CycExpr::Sqrt),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| CycExpr::Neg(Box::new(e))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| CycExpr::Add(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| CycExpr::Sub(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| CycExpr::Mul(Box::new(a), Box::new(b))),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| CycExpr::Div(Box::new(a), Box::new(b))),
            (inner, -3i64..=3).prop_map(|(a, k)| CycExpr::Pow(Box::new(a), k)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn representation_is_canonical(a in elem(), k in 1u64..4) {
        let lifted = a.lift(a.modulus() * k);
        prop_assert_eq!(&lifted, &a);
        let (x, y) = (a.canonicalize(), lifted.canonicalize());
        prop_assert_eq!(x.structural_key(), y.structural_key());
    }

    #[test]
    fn galois_is_a_ring_map(a in elem(), b in elem(), pick in 0usize..64) {
        let n = num_integer::lcm(a.modulus(), b.modulus());
        let u = unit_for(n, pick);
        let s = |x: &CycElem| x.lift(n).galois(u).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn inverse_is_inverse(a in elem()) {
        prop_assume!(!a.is_zero());
        prop_assert_eq!(&a * &a.invert().unwrap(), CycElem::one());
    }

    #[test]
    fn sign_agrees_with_float(n in prop::sample::select(&MODULI[1..]), c in prop::collection::vec(-5i64..=5, 1..12)) {
        let a = CycElem::from_int_coeffs(n, &c);
        let real = &a + &a.conj();
        let approx = naive_real(n, &c);
        let s = sign(&real).unwrap();
        let iv = eval_real(&real, 64).unwrap();
        prop_assert!(iv.contains_f64(approx) || (iv.midpoint_f64() - approx).abs() < 1e-9);
        if approx.abs() > 1e-6 {
            prop_assert_eq!(s, if approx > 0.0 { 1 } else { -1 });
        } else {
            // Float can't decide; the exact answer must be consistent with the interval.
            prop_assert_eq!(s == 0, real.is_zero());
        }
    }

    #[test]
    fn printed_expressions_reparse(e in expr()) {
        let text = e.to_string();
        let back = parse_cyc_expr(&text).unwrap();
        prop_assert_eq!(back.to_string(), text.clone());
        match (e.eval(), back.eval()) {
            (Ok(x), Ok(y)) => prop_assert_eq!(x, y),
            (Err(x), Err(y)) => prop_assert_eq!(x, y),
            (x, y) => prop_assert!(false, "{text}: {x:?} vs {y:?}"),
        }
    }

    #[test]
    fn fields_grow_with_generators(g1 in prop::collection::vec(2u64..=30, 0..3), g2 in prop::collection::vec(2u64..=30, 0..2)) {
        let small = make_field(g1.iter().copied()).unwrap();
        let big = make_field(g1.iter().chain(&g2).copied()).unwrap();
        prop_assert!(small.subfield_of(&big));
        prop_assert_eq!(big.degree() % small.degree(), 0);
        prop_assert_eq!(&small.compositum(&big), &big);
        let q_small = compute_qk(&small);
        let q_big = compute_qk(&big);
        for v in q_small.vertices() {
            prop_assert!(q_big.contains(*v));
        }
        for &n in &g1 {
            prop_assert!(small.contains_zeta_plus(n).unwrap());
        }
    }
}

fn small_types() -> Vec<CoxeterType> {
    vec![
        CoxeterType::A(4),
        CoxeterType::B(3),
        CoxeterType::D(4),
        CoxeterType::F4,
        CoxeterType::H(3),
        CoxeterType::I2(7),
        CoxeterType::I2(12),
    ]
}

#[test]
fn enumeration_is_closed() {
    for t in small_types() {
        let g = gram_of_type(t).unwrap();
        let roots = enumerate_roots(&g, 1000).unwrap();
        for r in roots.iter() {
            assert!(roots.contains(&r.neg()), "{t}: -{r}");
            for s in roots.iter() {
                assert!(roots.contains(&reflect(r, s, &g)), "{t}: s_{r}({s})");
            }
        }
    }
}

#[test]
fn simple_roots_pair_nonpositively() {
    for t in small_types() {
        let g = gram_of_type(t).unwrap();
        let roots = enumerate_roots(&g, 1000).unwrap().into_vec();
        let delta = fundamental_system(&roots, &g, &default_functional(&roots, t.rank())).unwrap();
        for (i, a) in delta.iter().enumerate() {
            for b in &delta[i + 1..] {
                assert!(sign(&g.pair(a, b)).unwrap() <= 0, "{t}: {a}, {b}");
            }
        }
    }
}
