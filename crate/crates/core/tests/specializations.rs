//! Classical specializations of `P_λ(x; q, t)` checked against formulas that
//! share no code with the triangular solve.

use std::collections::BTreeMap;

use macdo_core::algebra::{Frac, MPoly, Monomial, MonomialMap, Var, VarUniverse};
use macdo_core::macdonald::{monomial_symmetric, x_monomial, JTable};
use macdo_core::partitions::{partitions_bounded, permutations, MultiIndex, Partition};
use macdo_core::raising::{build_bm, verify_raising};
use proptest::prelude::*;

/// `det(x_j^{e_i})` over all permutations.
fn alternant(uni: VarUniverse, exps: &[u32]) -> MPoly {
    let n = exps.len();
    let mut terms = Vec::new();
    for (sigma, sign) in permutations(n) {
        let mut e = vec![0u32; n];
        for (i, &s) in sigma.iter().enumerate() {
            e[s] = exps[i];
        }
        let m = x_monomial(&uni, &MultiIndex::new(e));
        terms.push(MPoly::monomial(uni, sign as i64, m));
    }
    MPoly::sum(uni, terms.iter())
}

/// Schur polynomial by the bialternant formula.
fn schur(uni: VarUniverse, lam: &Partition) -> MPoly {
    let n = uni.n_x();
    let delta: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    let shifted: Vec<u32> = (0..n).map(|i| lam.part(i) + delta[i]).collect();
    alternant(uni, &shifted)
        .divide_exact(&alternant(uni, &delta))
        .expect("the Vandermonde divides every alternant")
}

fn p_value(table: &JTable, lam: &Partition) -> Frac {
    table.p(lam).unwrap().value
}

fn table(n: usize) -> JTable {
    JTable::build(n, 4).unwrap()
}

#[test]
fn q_equals_t_gives_schur() {
    for n in 1..=3 {
        let t = table(n);
        let mut q_to_t = MonomialMap::identity(t.universe());
        q_to_t.set(Var::Q, false, Monomial::var(&t.universe(), Var::T, 1));
        for d in 0..=4 {
            for lam in partitions_bounded(d, n, d) {
                let p = p_value(&t, &lam).apply_map(&q_to_t).unwrap();
                let s = Frac::from_poly(schur(t.universe(), &lam));
                assert!(p.frac_eq(&s), "n={n} lambda={lam}");
            }
        }
    }
}

#[test]
fn t_equals_one_gives_monomial() {
    for n in 1..=3 {
        let t = table(n);
        let uni = t.universe();
        let one = [(Var::T, Frac::one(uni))];
        for d in 0..=4 {
            for lam in partitions_bounded(d, n, d) {
                let p = t.p(&lam).unwrap();
                let mut seen = BTreeMap::new();
                for (mu, c) in &p.expansion {
                    let num = c.num().eval_partial(&one, uni).unwrap();
                    let den = c.den().eval_partial(&one, uni).unwrap();
                    assert!(!den.is_zero(), "denominator vanishes at t=1 for {lam}, {mu}");
                    seen.insert(mu.clone(), num.div(&den).unwrap());
                }
                for (mu, v) in seen {
                    let expect = if mu == lam { Frac::one(uni) } else { Frac::zero(uni) };
                    assert!(v.frac_eq(&expect), "n={n} lambda={lam} mu={mu}");
                }
            }
        }
    }
}

#[test]
fn q_equals_t_equals_zero_gives_schur() {
    let t = table(3);
    for d in 0..=3 {
        for lam in partitions_bounded(d, 3, d) {
            let p = p_value(&t, &lam).eval_zero(Var::Q).unwrap().eval_zero(Var::T).unwrap();
            assert!(p.frac_eq(&Frac::from_poly(schur(t.universe(), &lam))), "lambda={lam}");
        }
    }
}

#[test]
fn p_is_monic_and_unitriangular() {
    let t = table(3);
    for d in 0..=4 {
        for lam in partitions_bounded(d, 3, d) {
            let p = t.p(&lam).unwrap();
            assert!(p.expansion[&lam].frac_eq(&Frac::one(t.universe())));
            for mu in p.expansion.keys() {
                assert!(lam.dominates(mu), "{mu} is not below {lam}");
            }
            let sum: Vec<Frac> = p
                .expansion
                .iter()
                .map(|(mu, c)| c.mul_poly(&monomial_symmetric(t.universe(), mu)))
                .collect();
            assert!(Frac::sum(t.universe(), sum.iter()).frac_eq(&p.value));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, failure_persistence: None, ..ProptestConfig::default() })]

    /// Random `(m, λ)` in two variables, against the shared tables.
    #[test]
    fn raising_on_random_rows(m in 0u32..=2, parts in prop::collection::vec(0u32..=2, 0..=2)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lam = Partition::new(parts).unwrap();
        prop_assume!(lam.part(0) <= m);
        let t = JTable::build(2, 6).unwrap();
        let op = build_bm(m, 2).unwrap();
        let r = verify_raising(&op, &t, &lam);
        prop_assert!(r.passed, "{:?}", r.detail);
    }
}
