//! Generalized q-binomial coefficients `C[α,β](x)`, interpolation points, and
//! the q-binomial and Chu–Vandermonde identities they satisfy.

use alloc::format;
use alloc::vec::Vec;

use crate::algebra::{Frac, FracBuilder, Int, MPoly, Monomial, MonomialMap, Var, VarUniverse};
use crate::error::{Error, Result};
use crate::partitions::{multi_indices_of_weight, MultiIndex};
use crate::report::IdentityReport;

/// `C(k, 2)` as a signed exponent.
pub fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// `q^a x_i / x_j`.
pub(crate) fn ratio(uni: &VarUniverse, a: i32, i: usize, j: usize) -> Monomial {
    let mut m = Monomial::var(uni, Var::Q, a);
    if i != j {
        m.0[uni.slot(Var::X(i as u8))] += 1;
        m.0[uni.slot(Var::X(j as u8))] -= 1;
    }
    m
}

/// Pushes the `k` factors of `(q^a x_i/x_j; q)_k` into the numerator.
pub(crate) fn mul_pochhammer(b: &mut FracBuilder, uni: &VarUniverse, a: i32, i: usize, j: usize, k: u32) {
    for nu in 0..k as i32 {
        b.mul_poly(&MPoly::one_minus(*uni, 1, ratio(uni, a + nu, i, j)));
    }
}

/// Pushes the `k` factors of `(q^a x_i/x_j; q)_k` into the denominator.
pub(crate) fn div_pochhammer(
    b: &mut FracBuilder,
    uni: &VarUniverse,
    a: i32,
    i: usize,
    j: usize,
    k: u32,
) -> Result<()> {
    for nu in 0..k as i32 {
        b.div_poly(&MPoly::one_minus(*uni, 1, ratio(uni, a + nu, i, j)))?;
    }
    Ok(())
}

/// The Gaussian binomial `[n k]_q`, zero when `k > n`.
pub fn q_binomial(uni: VarUniverse, n: u32, k: u32) -> MPoly {
    if k > n {
        return MPoly::zero(uni);
    }
    // Pascal row by row: [n k] = [n-1 k-1] + q^k [n-1 k]
    let mut row = alloc::vec![MPoly::one(uni)];
    for r in 1..=n {
        let mut next = Vec::with_capacity(r as usize + 1);
        for j in 0..=r {
            let left = if j > 0 { row[j as usize - 1].clone() } else { MPoly::zero(uni) };
            let right = if j < r {
                row[j as usize].mul_monomial(&Monomial::var(&uni, Var::Q, j as i32))
            } else {
                MPoly::zero(uni)
            };
            next.push(&left + &right);
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

fn check_lengths(uni: &VarUniverse, idx: &[&MultiIndex]) -> Result<()> {
    for a in idx {
        if a.len() != uni.n_x() {
            return Err(Error::Precondition(format!(
                "multi-index {a} has length {} but there are {} x-variables",
                a.len(),
                uni.n_x()
            )));
        }
    }
    Ok(())
}

/// `C[α,β](x) = ∏_{i,j} (q^{α_i-β_j+1} x_i/x_j)_{β_j} / (q^{β_i-β_j+1} x_i/x_j)_{β_j}`.
pub fn gen_qbinom(uni: VarUniverse, alpha: &MultiIndex, beta: &MultiIndex) -> Result<Frac> {
    check_lengths(&uni, &[alpha, beta])?;
    if !beta.is_below(alpha) {
        return Err(Error::Precondition(format!("beta {beta} is not below alpha {alpha}")));
    }
    let (a, bt) = (alpha.entries(), beta.entries());
    let n = a.len();
    let mut b = FracBuilder::new(uni);
    for i in 0..n {
        for j in 0..n {
            let bj = bt[j];
            mul_pochhammer(&mut b, &uni, a[i] as i32 - bj as i32 + 1, i, j, bj);
            div_pochhammer(&mut b, &uni, bt[i] as i32 - bj as i32 + 1, i, j, bj)?;
        }
    }
    Ok(b.build())
}

/// The point `p_α(x)`: for each `i` in turn, the values `-1/(q^ν x_i)` for
/// `ν = 0..α_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterpPoint {
    pub alpha: MultiIndex,
    /// `(i, ν)` per coordinate, in order.
    pub coords: Vec<(usize, u32)>,
}

impl InterpPoint {
    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// The coordinates as Laurent monomials `-q^{-ν} x_i^{-1}`.
    pub fn values(&self, uni: VarUniverse) -> Vec<MPoly> {
        self.coords
            .iter()
            .map(|&(i, nu)| MPoly::term(uni, -1, &[(Var::Q, -(nu as i32)), (Var::X(i as u8), -1)]))
            .collect()
    }

    /// The substitution `y_k -> p_α(x)_k`, from `source` (which must carry
    /// at least `|α|` y-variables) to `target`.
    pub fn substitution(&self, source: VarUniverse, target: VarUniverse) -> MonomialMap {
        let mut map = MonomialMap::substitution(source, target);
        for (k, &(i, nu)) in self.coords.iter().enumerate() {
            let mut m = Monomial::var(&target, Var::Q, -(nu as i32));
            m.0[target.slot(Var::X(i as u8))] = -1;
            map.set(Var::Y(k as u8), true, m);
        }
        map
    }
}

pub fn interp_point(alpha: &MultiIndex) -> InterpPoint {
    let coords = alpha
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| (0..a).map(move |nu| (i, nu)))
        .collect();
    InterpPoint {
        alpha: alpha.clone(),
        coords,
    }
}

/// `∏_{i,j} (q^{γ_i-α_j+1} x_i/x_j)_{α_j}`, a Laurent polynomial.
pub fn daiji_product(uni: VarUniverse, gamma: &MultiIndex, alpha: &MultiIndex) -> MPoly {
    let (g, a) = (gamma.entries(), alpha.entries());
    let mut acc = MPoly::one(uni);
    for i in 0..g.len() {
        for j in 0..a.len() {
            for nu in 0..a[j] as i32 {
                let f = MPoly::one_minus(uni, 1, ratio(&uni, g[i] as i32 - a[j] as i32 + 1 + nu, i, j));
                acc = &acc * &f;
            }
        }
    }
    acc
}

/// Evaluates `∏_{i,k} (1 + q^{γ_i} x_i y_k)` at `y = p_α(x)` and checks it
/// against [`daiji_product`], returning the closed form.
pub fn daiji_eval(uni: VarUniverse, gamma: &MultiIndex, alpha: &MultiIndex) -> Result<Frac> {
    check_lengths(&uni, &[gamma, alpha])?;
    let m = alpha.weight() as usize;
    let with_y = VarUniverse::new(uni.n_x(), m)?;
    let mut prod = MPoly::one(with_y);
    for (i, &g) in gamma.entries().iter().enumerate() {
        for k in 0..m {
            let f = &MPoly::one(with_y)
                + &MPoly::term(with_y, 1, &[(Var::Q, g as i32), (Var::X(i as u8), 1), (Var::Y(k as u8), 1)]);
            prod = &prod * &f;
        }
    }
    let direct = prod.apply_map(&interp_point(alpha).substitution(with_y, uni));
    let closed = daiji_product(uni, gamma, alpha);
    if direct != closed {
        return Err(Error::DaijiMismatch {
            gamma: format!("{gamma}"),
            alpha: format!("{alpha}"),
        });
    }
    Ok(Frac::from_poly(closed))
}

/// `Σ_{β≤α} (-1)^{|β|} q^{C(|β|,2)} C[α,β](x) u^{|β|} = (u; q)_{|α|}`.
pub fn qbinom_theorem_check(alpha: &MultiIndex) -> IdentityReport {
    let mut rep = IdentityReport::new("qbinom_theorem").param("alpha", alpha);
    let run = || -> Result<(Frac, Frac)> {
        let uni = VarUniverse::new(alpha.len().max(1), 0)?.with_u();
        let mut terms = Vec::new();
        for beta in alpha.below() {
            let w = beta.weight() as i32;
            let mut b = FracBuilder::new(uni);
            b.mul_frac(&gen_qbinom(uni, &pad(alpha, uni), &pad(&beta, uni))?);
            b.mul_int(&Int::from(if w % 2 == 0 { 1 } else { -1 }));
            let mut mono = Monomial::var(&uni, Var::Q, choose2(w as i64) as i32);
            mono.0[uni.slot(Var::U)] = w as i16;
            b.mul_monomial(&mono);
            terms.push(b.build());
        }
        let lhs = Frac::sum(uni, terms.iter());
        let rhs = crate::algebra::qpochhammer(&MPoly::var(uni, Var::U), alpha.weight());
        Ok((lhs, Frac::from_poly(rhs)))
    };
    match run() {
        Ok((lhs, rhs)) => {
            rep.expect_eq(&lhs, &rhs);
        }
        Err(e) => rep.fail(format!("{e}")),
    }
    rep
}

/// Length-0 indices live in a one-variable universe.
fn pad(a: &MultiIndex, uni: VarUniverse) -> MultiIndex {
    if a.len() == uni.n_x() {
        a.clone()
    } else {
        let mut v = a.entries().to_vec();
        v.resize(uni.n_x(), 0);
        MultiIndex::new(v)
    }
}

/// The coefficient of `u^k` in the q-binomial theorem, written as
/// `Σ_{μ≤α,|μ|=k} ∏_j [α_j μ_j]_q ∏_{i≠j} (...)/(...) = [|α| k]_q`.
pub fn chu_vandermonde_check(alpha: &MultiIndex, k: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("chu_vandermonde")
        .param("alpha", alpha)
        .param("k", k);
    let run = || -> Result<(Frac, Frac)> {
        let alpha = &pad(alpha, VarUniverse::new(alpha.len().max(1), 0)?);
        let uni = VarUniverse::new(alpha.len(), 0)?;
        let a = alpha.entries();
        let n = a.len();
        let mut terms = Vec::new();
        for mu in multi_indices_of_weight(k, n) {
            if !mu.is_below(alpha) {
                continue;
            }
            let m = mu.entries();
            let mut b = FracBuilder::new(uni);
            for j in 0..n {
                b.mul_poly(&q_binomial(uni, a[j], m[j]));
            }
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    mul_pochhammer(&mut b, &uni, a[i] as i32 - m[j] as i32 + 1, i, j, m[j]);
                    div_pochhammer(&mut b, &uni, m[i] as i32 - m[j] as i32 + 1, i, j, m[j])?;
                }
            }
            terms.push(b.build());
        }
        let lhs = Frac::sum(uni, terms.iter());
        Ok((lhs, Frac::from_poly(q_binomial(uni, alpha.weight(), k))))
    };
    match run() {
        Ok((lhs, rhs)) => {
            if rep.expect_eq(&lhs, &rhs) {
                let free = lhs
                    .to_polynomial()
                    .is_some_and(|p| (0..alpha.len()).all(|i| !p.involves(Var::X(i as u8))));
                rep.check(free, "left side does not reduce to an x-free polynomial");
            }
        }
        Err(e) => rep.fail(format!("{e}")),
    }
    rep
}

/// `Σ_{μ≤α,ν≤β,|μ|+|ν|=k} q^{(|α|-|μ|)|ν|} C[α,μ] C[β,ν] = [|α|+|β| k]_q`.
pub fn chu_vandermonde2_check(alpha: &MultiIndex, beta: &MultiIndex, k: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("chu_vandermonde2")
        .param("alpha", alpha)
        .param("beta", beta)
        .param("k", k);
    let run = || -> Result<(Frac, Frac)> {
        if alpha.len() != beta.len() {
            return Err(Error::Precondition(format!("alpha {alpha} and beta {beta} differ in length")));
        }
        let uni = VarUniverse::new(alpha.len().max(1), 0)?;
        let (alpha, beta) = (&pad(alpha, uni), &pad(beta, uni));
        let (wa, wb) = (alpha.weight(), beta.weight());
        let mut terms = Vec::new();
        for mu in alpha.below() {
            let wm = mu.weight();
            if wm > k || k - wm > wb {
                continue;
            }
            let c_mu = gen_qbinom(uni, alpha, &mu)?;
            for nu in beta.below() {
                let wn = nu.weight();
                if wm + wn != k {
                    continue;
                }
                let mut b = FracBuilder::new(uni);
                b.mul_frac(&c_mu);
                b.mul_frac(&gen_qbinom(uni, beta, &nu)?);
                b.mul_monomial(&Monomial::var(&uni, Var::Q, ((wa - wm) * wn) as i32));
                terms.push(b.build());
            }
        }
        let lhs = Frac::sum(uni, terms.iter());
        Ok((lhs, Frac::from_poly(q_binomial(uni, wa + wb, k))))
    };
    match run() {
        Ok((lhs, rhs)) => {
            if rep.expect_eq(&lhs, &rhs) {
                let free = lhs
                    .to_polynomial()
                    .is_some_and(|p| (0..alpha.len()).all(|i| !p.involves(Var::X(i as u8))));
                rep.check(free, "left side does not reduce to an x-free polynomial");
            }
        }
        Err(e) => rep.fail(format!("{e}")),
    }
    rep
}

/// `x_i -> 1/(q^{α_i} x_i)` on the x-block.
pub fn inverse_shift_map(uni: VarUniverse, alpha: &MultiIndex) -> MonomialMap {
    let mut map = MonomialMap::identity(uni);
    for (i, &a) in alpha.entries().iter().enumerate() {
        let mut m = Monomial::var(&uni, Var::Q, -(a as i32));
        m.0[uni.slot(Var::X(i as u8))] = -1;
        map.set(Var::X(i as u8), false, m);
    }
    map
}

/// `C[α,γ] C[γ,β] = C[α,β] · C[α-β, α-γ](1/(q^α x))` for `β ≤ γ ≤ α`.
pub fn qbinom_multiplicative_identity_check(
    alpha: &MultiIndex,
    gamma: &MultiIndex,
    beta: &MultiIndex,
) -> IdentityReport {
    let mut rep = IdentityReport::new("qbinom_multiplicative")
        .param("alpha", alpha)
        .param("gamma", gamma)
        .param("beta", beta);
    let run = || -> Result<(Frac, Frac)> {
        let uni = VarUniverse::new(alpha.len().max(1), 0)?;
        let (alpha, gamma, beta) = (&pad(alpha, uni), &pad(gamma, uni), &pad(beta, uni));
        if !(beta.is_below(gamma) && gamma.is_below(alpha)) {
            return Err(Error::Precondition("need beta <= gamma <= alpha".into()));
        }
        let lhs = gen_qbinom(uni, alpha, gamma)?.mul(&gen_qbinom(uni, gamma, beta)?);
        let amb = alpha.sub(beta).expect("beta <= alpha");
        let amg = alpha.sub(gamma).expect("gamma <= alpha");
        let twisted = gen_qbinom(uni, &amb, &amg)?.apply_map(&inverse_shift_map(uni, alpha))?;
        let rhs = gen_qbinom(uni, alpha, beta)?.mul(&twisted);
        Ok((lhs, rhs))
    };
    match run() {
        Ok((lhs, rhs)) => {
            rep.expect_eq(&lhs, &rhs);
        }
        Err(e) => rep.fail(format!("{e}")),
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mi(s: &str) -> MultiIndex {
        s.parse().unwrap()
    }

    fn q1() -> VarUniverse {
        VarUniverse::new(1, 0).unwrap()
    }

    fn qpoly(uni: VarUniverse, coeffs: &[i64]) -> MPoly {
        MPoly::from_terms(
            uni,
            coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| (Monomial::var(&uni, Var::Q, e as i32), Int::from(*c))),
        )
    }

    #[test]
    fn gen_qbinom_examples() {
        let u = q1();
        let c = gen_qbinom(u, &mi("2"), &mi("1")).unwrap();
        assert!(c.frac_eq(&Frac::from_poly(qpoly(u, &[1, 1]))));
        let u2 = VarUniverse::new(2, 0).unwrap();
        let one = Frac::one(u2);
        assert!(gen_qbinom(u2, &mi("2,1"), &mi("0,0")).unwrap().frac_eq(&one));
        assert!(gen_qbinom(u2, &mi("2,1"), &mi("2,1")).unwrap().frac_eq(&one));
        assert!(gen_qbinom(u2, &mi("1,1"), &mi("2,0")).is_err());
    }

    #[test]
    fn gen_qbinom_reduces_to_gaussian_at_one_variable() {
        let u = q1();
        for a in 0..=6 {
            for b in 0..=a {
                let c = gen_qbinom(u, &MultiIndex::new(alloc::vec![a]), &MultiIndex::new(alloc::vec![b]))
                    .unwrap();
                assert_eq!(c.to_polynomial(), Some(q_binomial(u, a, b)), "[{a} {b}]");
            }
        }
    }

    #[test]
    fn interpolation_points() {
        let u = VarUniverse::new(2, 0).unwrap();
        let p = interp_point(&mi("2,0"));
        assert_eq!(p.coords, alloc::vec![(0, 0), (0, 1)]);
        let vals = p.values(u);
        assert_eq!(vals[1], MPoly::term(u, -1, &[(Var::Q, -1), (Var::X(0), -1)]));
        assert_eq!(interp_point(&mi("1,1")).coords, alloc::vec![(0, 0), (1, 0)]);
        assert_eq!(interp_point(&mi("1,0")).len(), 1);
    }

    #[test]
    fn daiji_examples() {
        let u = VarUniverse::new(2, 0).unwrap();
        let a = mi("1,1");
        assert!(!daiji_eval(u, &a, &a).unwrap().is_zero());
        assert!(daiji_eval(u, &mi("2,0"), &a).unwrap().is_zero());
        let v = daiji_eval(q1(), &mi("1"), &mi("1")).unwrap();
        assert_eq!(v.as_poly(), Some(&qpoly(q1(), &[1, -1])));
    }

    #[test]
    fn daiji_vanishes_off_the_upper_set() {
        let u = VarUniverse::new(2, 0).unwrap();
        let all: Vec<MultiIndex> = (0..=3).flat_map(|w| multi_indices_of_weight(w, 2)).collect();
        for g in &all {
            for a in &all {
                let v = daiji_eval(u, g, a).unwrap();
                assert_eq!(v.is_zero(), !a.is_below(g), "gamma={g} alpha={a}");
            }
        }
    }

    #[test]
    fn identity_examples() {
        assert!(qbinom_theorem_check(&mi("0,0")).passed);
        assert!(qbinom_theorem_check(&mi("4")).passed);
        assert!(qbinom_theorem_check(&mi("2,1")).passed);
        assert!(chu_vandermonde_check(&mi("1,1"), 0).passed);
        assert!(chu_vandermonde_check(&mi("1,1"), 1).passed);
        assert!(chu_vandermonde_check(&mi("2,1"), 2).passed);
        assert!(chu_vandermonde2_check(&mi("1"), &mi("1"), 1).passed);
        assert!(chu_vandermonde2_check(&mi("1,0"), &mi("0,1"), 2).passed);
        assert!(chu_vandermonde2_check(&mi("2,1"), &mi("1,1"), 0).passed);
        assert!(qbinom_multiplicative_identity_check(&mi("2,1"), &mi("1,1"), &mi("1,0")).passed);
        assert!(qbinom_multiplicative_identity_check(&mi("2,1"), &mi("2,1"), &mi("1,0")).passed);
        assert!(qbinom_multiplicative_identity_check(&mi("2,1"), &mi("1,0"), &mi("1,0")).passed);
    }

    #[test]
    fn wrong_exponent_is_detected() {
        // the same sum with q^{(|α|+|μ|)|ν|} does not give [2 2]_q
        let u = VarUniverse::new(2, 0).unwrap();
        let (a, b) = (mi("1,0"), mi("0,1"));
        let term = gen_qbinom(u, &a, &a)
            .unwrap()
            .mul(&gen_qbinom(u, &b, &b).unwrap())
            .mul_poly(&MPoly::term(u, 1, &[(Var::Q, 2)]));
        assert!(!term.frac_eq(&Frac::from_poly(q_binomial(u, 2, 2))));
    }
}
