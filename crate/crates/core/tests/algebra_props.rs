use macdo_core::algebra::{Frac, Int, MPoly, Monomial, Var, VarUniverse};
use macdo_core::partitions::MultiIndex;
use macdo_core::qbinomial::gen_qbinom;
use proptest::prelude::*;

fn uni() -> VarUniverse {
    VarUniverse::new(2, 0).unwrap()
}

/// Sparse polynomials in `q, t, x1, x2` with Laurent exponents on `q` and `x`.
fn poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((-4i64..=4, -2i32..=2, 0i32..=2, -1i32..=2, 0i32..=2), 0..5).prop_map(|terms| {
        let u = uni();
        let parts: Vec<MPoly> = terms
            .into_iter()
            .map(|(c, q, t, x1, x2)| MPoly::term(u, c, &[(Var::Q, q), (Var::T, t), (Var::X(0), x1), (Var::X(1), x2)]))
            .collect();
        MPoly::sum(u, parts.iter())
    })
}

fn nonzero_poly() -> impl Strategy<Value = MPoly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn shift() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..=3, 2)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).divide_exact(&b), Some(a));
    }

    #[test]
    fn fraction_field_laws(a in poly(), b in nonzero_poly(), c in poly(), d in nonzero_poly()) {
        let x = Frac::new(a.clone(), &b).unwrap();
        let y = Frac::new(c.clone(), &d).unwrap();
        let sum = Frac::new(&(&a * &d) + &(&c * &b), &(&b * &d)).unwrap();
        prop_assert!(x.add(&y).frac_eq(&sum));
        prop_assert!(x.mul(&y).frac_eq(&Frac::new(&a * &c, &(&b * &d)).unwrap()));
        if !y.is_zero() {
            prop_assert!(x.mul(&y).div(&y).unwrap().frac_eq(&x));
        }
        prop_assert!(x.sub(&x).is_zero());
        prop_assert!(x.reduce().frac_eq(&x));
    }

    #[test]
    fn shifts_compose(a in poly(), g in shift(), h in shift()) {
        let gh: Vec<u32> = g.iter().zip(&h).map(|(x, y)| x + y).collect();
        prop_assert_eq!(a.shift_q(&g).shift_q(&h), a.shift_q(&gh));
    }

    #[test]
    fn shifts_are_ring_maps(a in poly(), b in poly(), g in shift()) {
        prop_assert_eq!((&a * &b).shift_q(&g), &a.shift_q(&g) * &b.shift_q(&g));
    }

    #[test]
    fn fraction_shift_matches_polynomial_shift(a in poly(), b in nonzero_poly(), g in shift()) {
        let f = Frac::new(a.clone(), &b).unwrap();
        let expect = Frac::new(a.shift_q(&g), &b.shift_q(&g)).unwrap();
        prop_assert!(f.shift_q(&g).frac_eq(&expect));
    }

    #[test]
    fn integer_arithmetic_matches_i128(a in any::<i64>(), b in any::<i64>()) {
        let (x, y) = (Int::from(a), Int::from(b));
        prop_assert_eq!((&x * &y).to_string(), (a as i128 * b as i128).to_string());
        prop_assert_eq!((&x + &y).to_string(), (a as i128 + b as i128).to_string());
        let parsed: Int = x.to_string().parse().unwrap();
        prop_assert_eq!(parsed, x);
    }

    #[test]
    fn generalized_binomial_support(a in prop::collection::vec(0u32..=2, 1..=3), b in prop::collection::vec(0u32..=2, 1..=3)) {
        prop_assume!(a.len() == b.len());
        let u = VarUniverse::new(a.len(), 0).unwrap();
        let (alpha, beta) = (MultiIndex::new(a), MultiIndex::new(b));
        match gen_qbinom(u, &alpha, &beta) {
            Ok(c) => {
                prop_assert!(beta.is_below(&alpha));
                prop_assert!(!c.is_zero());
                if beta == alpha || beta.weight() == 0 {
                    prop_assert!(c.frac_eq(&Frac::one(u)));
                }
            }
            Err(_) => prop_assert!(!beta.is_below(&alpha)),
        }
    }
}

#[test]
fn monomial_lattice_ops() {
    let u = uni();
    let a = Monomial::var(&u, Var::Q, 2).mul(&Monomial::var(&u, Var::X(0), -1));
    let b = Monomial::var(&u, Var::Q, -1).mul(&Monomial::var(&u, Var::X(1), 3));
    let meet = a.meet(&b);
    let join = a.join(&b);
    assert_eq!(meet.mul(&join), a.mul(&b));
}
