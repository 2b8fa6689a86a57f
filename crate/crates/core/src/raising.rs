//! The row-type raising operators `B_m` and the machinery that determines
//! them: the operators `φ_α`, the coefficients `b_α`, two independent oracles
//! for each, and the identities they are checked against.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Block, Frac, FracBuilder, Int, MPoly, Monomial, MonomialMap, Var, VarUniverse};
use crate::error::{Error, Result};
use crate::macdonald::{difference_operator, x_monomial, JTable, QDiffOp};
use crate::partitions::{multi_indices_of_weight, subsets, MultiIndex, Partition};
use crate::qbinomial::{choose2, daiji_product, div_pochhammer, gen_qbinom, interp_point, mul_pochhammer};
use crate::report::IdentityReport;

fn x_universe(n: usize) -> Result<VarUniverse> {
    Ok(VarUniverse::new(n, 0)?)
}

fn sign(k: i64) -> Int {
    Int::from(if k % 2 == 0 { 1 } else { -1 })
}

fn q_pow(uni: &VarUniverse, e: i64) -> Monomial {
    Monomial::var(uni, Var::Q, e as i32)
}

fn need_weight(m: u32, alpha: &MultiIndex) -> Result<()> {
    if alpha.weight() != m {
        return Err(Error::Precondition(format!("|{alpha}| is not {m}")));
    }
    Ok(())
}

/// `φ^{(m)}_{α,β} = (-1)^{|α|-|β|} q^{C(|α|-|β|+1, 2)} C[α,β](x)`.
pub fn phi_coeff(uni: VarUniverse, m: u32, alpha: &MultiIndex, beta: &MultiIndex) -> Result<Frac> {
    need_weight(m, alpha)?;
    let d = (alpha.weight() - beta.weight()) as i64;
    let mut b = FracBuilder::new(uni);
    b.mul_frac(&gen_qbinom(uni, alpha, beta)?);
    b.mul_int(&sign(d));
    b.mul_monomial(&q_pow(&uni, choose2(d + 1)));
    Ok(b.build())
}

/// `φ^{(m)}_α` from the closed form, as an operator.
pub fn phi_operator(uni: VarUniverse, m: u32, alpha: &MultiIndex) -> Result<QDiffOp> {
    let mut op = QDiffOp::new(uni, Block::X, Var::Q);
    for beta in alpha.below() {
        let c = phi_coeff(uni, m, alpha, &beta)?;
        op.add_term(beta, c);
    }
    Ok(op)
}

/// `ψ^{(m)}_{α,γ} = q^{(|α|-|γ|)(m-|γ|)} C[α,γ](x)`.
pub fn psi(uni: VarUniverse, m: u32, alpha: &MultiIndex, gamma: &MultiIndex) -> Result<Frac> {
    let (a, g) = (alpha.weight() as i64, gamma.weight() as i64);
    let mut b = FracBuilder::new(uni);
    b.mul_frac(&gen_qbinom(uni, alpha, gamma)?);
    b.mul_monomial(&q_pow(&uni, (a - g) * (m as i64 - g)));
    Ok(b.build())
}

type Coeffs = BTreeMap<MultiIndex, Frac>;

/// `φ^{(m)}_α` built by the induction `φ_{l+1;α} = φ_{l;α} - Σ_{γ<α,|γ|=l} ψ_{α,γ} φ_{l;γ}`
/// from `φ_{0;α} = T^α`.
pub fn phi_via_recurrence(uni: VarUniverse, m: u32, alpha: &MultiIndex) -> Result<Coeffs> {
    need_weight(m, alpha)?;
    let lattice = alpha.below();
    let mut ops: BTreeMap<MultiIndex, Coeffs> = lattice
        .iter()
        .map(|g| {
            let mut c = Coeffs::new();
            c.insert(g.clone(), Frac::one(uni));
            (g.clone(), c)
        })
        .collect();
    let mut psis: BTreeMap<(MultiIndex, MultiIndex), Frac> = BTreeMap::new();
    for l in 0..m {
        let level: Vec<&MultiIndex> = lattice.iter().filter(|g| g.weight() == l).collect();
        let mut updated = Vec::new();
        for a in lattice.iter().filter(|a| a.weight() > l) {
            let mut acc: BTreeMap<MultiIndex, Vec<Frac>> = BTreeMap::new();
            for (beta, c) in &ops[a] {
                acc.entry(beta.clone()).or_default().push(c.clone());
            }
            for g in level.iter().filter(|g| g.is_below(a)) {
                let key = (a.clone(), (*g).clone());
                if !psis.contains_key(&key) {
                    psis.insert(key.clone(), psi(uni, m, a, g)?);
                }
                let p = &psis[&key];
                for (beta, c) in &ops[*g] {
                    acc.entry(beta.clone()).or_default().push(p.mul(c).neg());
                }
            }
            let next: Coeffs = acc
                .into_iter()
                .map(|(beta, parts)| (beta, Frac::sum(uni, parts.iter()).reduce()))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            updated.push((a.clone(), next));
        }
        for (a, c) in updated {
            ops.insert(a, c);
        }
    }
    Ok(ops.remove(alpha).expect("alpha is in its own lattice"))
}

/// Closed form and recurrence agree on every coefficient of `φ^{(m)}_α`.
pub fn phi_oracle_check(n: usize, m: u32, alpha: &MultiIndex) -> IdentityReport {
    let mut rep = IdentityReport::new("phi_oracle").param("n", n).param("m", m).param("alpha", alpha);
    let run = || -> Result<(QDiffOp, Coeffs)> {
        let uni = x_universe(n)?;
        Ok((phi_operator(uni, m, alpha)?, phi_via_recurrence(uni, m, alpha)?))
    };
    match run() {
        Ok((closed, rec)) => {
            let zero = Frac::zero(closed.universe());
            for beta in alpha.below() {
                let a = closed.coeff(&beta).unwrap_or(&zero);
                let b = rec.get(&beta).unwrap_or(&zero);
                if !rep.expect_eq(a, b) {
                    rep.detail = rep.detail.take().map(|d| format!("beta={beta}: {d}"));
                    break;
                }
            }
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// `g_{α,β} = q^{-(|α|-|β|)|β|} C[α,β](x)`.
pub fn g_coeff(uni: VarUniverse, alpha: &MultiIndex, beta: &MultiIndex) -> Result<Frac> {
    let (a, b_) = (alpha.weight() as i64, beta.weight() as i64);
    let mut b = FracBuilder::new(uni);
    b.mul_frac(&gen_qbinom(uni, alpha, beta)?);
    b.mul_monomial(&q_pow(&uni, -(a - b_) * b_));
    Ok(b.build())
}

/// `f̃_{α,β} = (-1)^d q^{-C(d,2) - d|β|} C[α,β](x)` with `d = |α| - |β|`.
pub fn f_closed(uni: VarUniverse, alpha: &MultiIndex, beta: &MultiIndex) -> Result<Frac> {
    let d = (alpha.weight() - beta.weight()) as i64;
    let mut b = FracBuilder::new(uni);
    b.mul_frac(&gen_qbinom(uni, alpha, beta)?);
    b.mul_int(&sign(d));
    b.mul_monomial(&q_pow(&uni, -choose2(d) - d * beta.weight() as i64));
    Ok(b.build())
}

/// `f_{α,β} = Σ_r (-1)^r Σ_{α=γ_0>...>γ_r=β} g_{γ_0,γ_1} ... g_{γ_{r-1},γ_r}`,
/// enumerating the chains explicitly.
pub fn f_path_sum(uni: VarUniverse, alpha: &MultiIndex, beta: &MultiIndex) -> Result<Frac> {
    if !beta.is_below(alpha) {
        return Err(Error::Precondition(format!("{beta} is not below {alpha}")));
    }
    let lattice: Vec<MultiIndex> = alpha.below().into_iter().filter(|g| beta.is_below(g)).collect();
    let mut g_cache: BTreeMap<(usize, usize), Frac> = BTreeMap::new();
    for (i, a) in lattice.iter().enumerate() {
        for (j, b) in lattice.iter().enumerate() {
            if a != b && b.is_below(a) {
                g_cache.insert((i, j), g_coeff(uni, a, b)?);
            }
        }
    }
    let target = lattice.iter().position(|g| g == beta).expect("beta in lattice");
    let mut terms = Vec::new();
    // depth-first over chains starting at α (index 0)
    let mut stack: Vec<(usize, Frac, usize)> = vec![(0, Frac::one(uni), 0)];
    while let Some((at, prod, len)) = stack.pop() {
        if at == target {
            terms.push(if len % 2 == 0 { prod } else { prod.neg() });
            continue;
        }
        for next in 0..lattice.len() {
            if let Some(g) = g_cache.get(&(at, next)) {
                stack.push((next, prod.mul(g), len + 1));
            }
        }
    }
    Ok(Frac::sum(uni, terms.iter()))
}

/// The path sum equals the closed form, and `Σ_{α≥γ≥β} f̃_{α,γ} g_{γ,β} = δ_{α,β}`.
pub fn f_matrix_check(alpha: &MultiIndex, beta: &MultiIndex) -> IdentityReport {
    let mut rep = IdentityReport::new("f_matrix").param("alpha", alpha).param("beta", beta);
    let run = |rep: &mut IdentityReport| -> Result<()> {
        let uni = x_universe(alpha.len().max(1))?;
        let closed = f_closed(uni, alpha, beta)?;
        let paths = f_path_sum(uni, alpha, beta)?;
        if !rep.expect_eq(&paths, &closed) {
            return Ok(());
        }
        let mut terms = Vec::new();
        for gamma in alpha.below().into_iter().filter(|g| beta.is_below(g)) {
            terms.push(f_closed(uni, alpha, &gamma)?.mul(&g_coeff(uni, &gamma, beta)?));
        }
        let total = Frac::sum(uni, terms.iter());
        let delta = if alpha == beta { Frac::one(uni) } else { Frac::zero(uni) };
        if !rep.expect_eq(&total, &delta) {
            rep.detail = rep.detail.take().map(|d| format!("inverse relation: {d}"));
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// `b^{(m)}_α(x) = (-1)^{|α|} q^{Σ C(α_i,2)} x^α Σ_{β≤α} (-1)^{|β|} q^{C(|β|,2)} C[α,β](x)
///   ∏_{i,j} (t q^{1-β_j} x_i/x_j)_{β_j} (q^{1-α_j} x_i/x_j)_{α_j-β_j} / (q^{α_i-α_j+1} x_i/x_j)_{α_j}`.
pub fn b_coeff_closed(uni: VarUniverse, m: u32, alpha: &MultiIndex) -> Result<Frac> {
    need_weight(m, alpha)?;
    let a = alpha.entries();
    let n = a.len();
    let prefactor: i64 = a.iter().map(|&ai| choose2(ai as i64)).sum();
    let mut terms = Vec::new();
    for beta in alpha.below() {
        let bt = beta.entries();
        let w = beta.weight() as i64;
        let mut b = FracBuilder::new(uni);
        b.mul_int(&sign(w));
        b.mul_monomial(&q_pow(&uni, choose2(w)));
        for i in 0..n {
            for j in 0..n {
                // (t q^{1-β_j} x_i/x_j)_{β_j}
                for nu in 0..bt[j] as i32 {
                    let mut r = crate::qbinomial::ratio(&uni, 1 - bt[j] as i32 + nu, i, j);
                    r.0[uni.slot(Var::T)] += 1;
                    b.mul_poly(&MPoly::one_minus(uni, 1, r));
                }
                mul_pochhammer(&mut b, &uni, 1 - a[j] as i32, i, j, a[j] - bt[j]);
            }
        }
        let partial = b.build();
        if partial.is_zero() {
            continue;
        }
        let mut b = FracBuilder::new(uni);
        b.mul_frac(&partial);
        b.mul_frac(&gen_qbinom(uni, alpha, &beta)?);
        terms.push(b.build());
    }
    let mut b = FracBuilder::new(uni);
    b.mul_frac(&Frac::sum(uni, terms.iter()));
    b.mul_int(&sign(m as i64));
    b.mul_monomial(&q_pow(&uni, prefactor).mul(&x_monomial(&uni, alpha)));
    for i in 0..n {
        for j in 0..n {
            div_pochhammer(&mut b, &uni, a[i] as i32 - a[j] as i32 + 1, i, j, a[j])?;
        }
    }
    Ok(b.build().reduce())
}

/// `Ψ(x;y) = (y_1...y_m)^{-1} D_y(1; t, q) ∏_{i,j} (1 + x_i y_j)`, a polynomial.
pub fn psi_polynomial(n: usize, m: u32) -> Result<MPoly> {
    let uni = VarUniverse::new(n, m as usize)?;
    let d = difference_operator(uni, Block::Y, Var::T)?;
    let applied = d.apply_poly(&cauchy_kernel(uni, 0..m as usize))?;
    let mut b = FracBuilder::new(uni);
    b.mul_frac(&applied);
    b.div_poly(&MPoly::monomial(uni, 1, y_product(&uni, m as usize)))?;
    b.build()
        .to_polynomial()
        .ok_or_else(|| Error::Precondition("Psi(x;y) did not reduce to a polynomial".into()))
}

fn y_product(uni: &VarUniverse, m: usize) -> Monomial {
    let mut ys = Monomial::ONE;
    for j in 0..m {
        ys.0[uni.slot(Var::Y(j as u8))] = 1;
    }
    ys
}

/// `∏_{i, j ∈ ys} (1 + x_i y_j)`.
fn cauchy_kernel(uni: VarUniverse, ys: impl Iterator<Item = usize> + Clone) -> MPoly {
    let mut acc = MPoly::one(uni);
    for i in 0..uni.n_x() {
        for j in ys.clone() {
            let f = &MPoly::one(uni) + &MPoly::term(uni, 1, &[(Var::X(i as u8), 1), (Var::Y(j as u8), 1)]);
            acc = &acc * &f;
        }
    }
    acc
}

/// `b_α = Ψ(x; p_α(x)) / ∏_{i,j} (q^{α_i-α_j+1} x_i/x_j)_{α_j}`, given `Ψ`.
pub fn b_from_psi(uni: VarUniverse, psi_poly: &MPoly, alpha: &MultiIndex) -> Result<Frac> {
    let at = psi_poly.apply_map(&interp_point(alpha).substitution(psi_poly.universe(), uni));
    Ok(Frac::new(at, &daiji_product(uni, alpha, alpha))?.reduce())
}

pub fn b_coeff_via_psi(uni: VarUniverse, m: u32, alpha: &MultiIndex) -> Result<Frac> {
    need_weight(m, alpha)?;
    b_from_psi(uni, &psi_polynomial(uni.n_x(), m)?, alpha)
}

/// Closed form and interpolation agree on every `b^{(m)}_α`.
pub fn b_oracle_check(n: usize, m: u32) -> IdentityReport {
    let mut rep = IdentityReport::new("b_oracle").param("n", n).param("m", m);
    let run = |rep: &mut IdentityReport| -> Result<()> {
        let uni = x_universe(n)?;
        let psi_poly = psi_polynomial(n, m)?;
        for alpha in multi_indices_of_weight(m, n) {
            let closed = b_coeff_closed(uni, m, &alpha)?;
            let oracle = b_from_psi(uni, &psi_poly, &alpha)?;
            if !rep.expect_eq(&closed, &oracle) {
                rep.detail = rep.detail.take().map(|d| format!("alpha={alpha}: {d}"));
                break;
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// `B_m = Σ_γ b^{(m)}_γ(x) T^γ`.
#[derive(Clone, Debug)]
pub struct RaisingOperator {
    m: u32,
    op: QDiffOp,
}

impl RaisingOperator {
    /// `b_γ = Σ_{|α|=m, α≥γ} b_α φ_{α,γ}`.
    pub fn build(m: u32, n: usize) -> Result<Self> {
        let uni = x_universe(n)?;
        let alphas = multi_indices_of_weight(m, n);
        let mut bs = Vec::with_capacity(alphas.len());
        for a in &alphas {
            bs.push(b_coeff_closed(uni, m, a)?);
        }
        let mut parts: BTreeMap<MultiIndex, Vec<Frac>> = BTreeMap::new();
        for (a, b) in alphas.iter().zip(&bs) {
            for beta in a.below() {
                let c = b.mul(&phi_coeff(uni, m, a, &beta)?);
                parts.entry(beta).or_default().push(c);
            }
        }
        let mut op = QDiffOp::new(uni, Block::X, Var::Q);
        for (gamma, ps) in parts {
            let c = Frac::sum(uni, ps.iter()).reduce();
            if !c.is_zero() {
                op.add_term(gamma, c);
            }
        }
        Ok(RaisingOperator { m, op })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> usize {
        self.op.n()
    }

    pub fn op(&self) -> &QDiffOp {
        &self.op
    }

    pub fn universe(&self) -> VarUniverse {
        self.op.universe()
    }

    /// `B_m f`, unreduced.
    pub fn apply(&self, f: &MPoly) -> Result<Frac> {
        let uni = self.universe();
        let f = f.embed(uni)?;
        let parts: Vec<Frac> = self
            .op
            .coeffs()
            .iter()
            .map(|(g, c)| Frac::from_parts(c.num() * &f.shift_q(g.entries()), c.denom().clone()))
            .collect();
        Ok(Frac::sum(uni, parts.iter()))
    }

    /// `B_m f`, certified to be a polynomial by exact division.
    pub fn apply_polynomial(&self, f: &MPoly) -> Result<MPoly> {
        self.apply(f)?.to_polynomial().ok_or_else(|| {
            Error::Precondition(format!("B_{} applied to a polynomial left a nontrivial denominator", self.m))
        })
    }

    /// `b_{σγ}(σx) = b_γ(x)` for every transposition `σ`.
    pub fn equivariance_check(&self) -> IdentityReport {
        let n = self.n();
        let mut rep = IdentityReport::new("equivariance").param("m", self.m).param("n", n);
        let uni = self.universe();
        let zero = Frac::zero(uni);
        for i in 0..n {
            for j in i + 1..n {
                let mut sigma: Vec<usize> = (0..n).collect();
                sigma.swap(i, j);
                let mut map = MonomialMap::identity(uni);
                map.set(Var::X(i as u8), false, Monomial::var(&uni, Var::X(j as u8), 1));
                map.set(Var::X(j as u8), false, Monomial::var(&uni, Var::X(i as u8), 1));
                for (g, c) in self.op.coeffs() {
                    let moved = match c.apply_map(&map) {
                        Ok(v) => v,
                        Err(e) => {
                            rep.fail(e.to_string());
                            return rep;
                        }
                    };
                    let target = self.op.coeff(&g.permute(&sigma)).unwrap_or(&zero);
                    if !rep.expect_eq(&moved, target) {
                        rep.detail = rep.detail.take().map(|d| format!("swap ({},{}) gamma={g}: {d}", i + 1, j + 1));
                        return rep;
                    }
                }
            }
        }
        rep
    }

    /// No key of weight above `m`.
    pub fn order_check(&self) -> IdentityReport {
        let mut rep = IdentityReport::new("order_bound").param("m", self.m).param("n", self.n());
        let order = self.op.order();
        rep.check(order <= self.m, &format!("operator has order {order}"));
        rep
    }
}

pub fn build_bm(m: u32, n: usize) -> Result<RaisingOperator> {
    RaisingOperator::build(m, n)
}

/// `B_m J_λ = J_{(m,λ)}` when `ℓ(λ) < n`, and `0` when `ℓ(λ) = n`.
pub fn verify_raising(op: &RaisingOperator, table: &JTable, lam: &Partition) -> IdentityReport {
    let (m, n) = (op.m(), op.n());
    let mut rep = IdentityReport::new("raising").param("m", m).param("lambda", lam).param("n", n);
    let run = |rep: &mut IdentityReport| -> Result<()> {
        if lam.part(0) > m || lam.len() > n {
            return Err(Error::Precondition(format!("need lambda_1 <= {m} and length <= {n}")));
        }
        let out = op.apply_polynomial(table.j_poly(lam)?)?;
        let expect = if lam.len() < n {
            table.j_poly(&lam.prepend_row(m)?)?.clone()
        } else {
            MPoly::zero(table.universe())
        };
        rep.expect_poly_eq(&out, &expect);
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// `B_{λ_1} B_{λ_2} ... B_{λ_n} 1 = J_λ`. `ops(m)` supplies `B_m` in `n`
/// variables.
pub fn iterated_build_check<'a>(
    lam: &Partition,
    table: &JTable,
    ops: impl Fn(u32) -> Result<&'a RaisingOperator>,
) -> IdentityReport {
    let n = table.n();
    let mut rep = IdentityReport::new("iterated_build").param("lambda", lam).param("n", n);
    let run = |rep: &mut IdentityReport| -> Result<()> {
        if lam.len() > n {
            return Err(Error::Precondition(format!("partition has more than {n} parts")));
        }
        let mut f = MPoly::one(table.universe());
        for i in (0..n).rev() {
            let part = lam.part(i);
            if part == 0 {
                continue;
            }
            f = ops(part)?.apply_polynomial(&f)?;
        }
        rep.expect_poly_eq(&f, table.j_poly(lam)?);
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// `Σ_γ b_γ ∏_{i,j} (1+q^{γ_i} x_i y_j)/(1+x_i y_j)` equals
/// `(y_1..y_m)^{-1} Σ_{K⊆[m]} (-1)^{|K|} q^{C(|K|,2)} ∏_{k∈K,l∉K} (1-q y_k/y_l)/(1-y_k/y_l)
///  ∏_{i,k∈K} (1+t x_i y_k)/(1+x_i y_k)`.
pub fn key_identity_check(op: &RaisingOperator) -> IdentityReport {
    let (m, n) = (op.m(), op.n());
    let mut rep = IdentityReport::new("key_identity").param("m", m).param("n", n);
    let run = || -> Result<(Frac, Frac)> {
        let uni = VarUniverse::new(n, m as usize)?;
        let ms = m as usize;
        let kernel_factors: Vec<MPoly> = (0..n)
            .flat_map(|i| (0..ms).map(move |j| (i, j)))
            .map(|(i, j)| &MPoly::one(uni) + &MPoly::term(uni, 1, &[(Var::X(i as u8), 1), (Var::Y(j as u8), 1)]))
            .collect();
        // left side: Φ / kernel, Φ = Σ_γ b_γ kernel(q^γ x)
        let phi = phi_numerator(op, uni)?;
        let mut b = FracBuilder::new(uni);
        b.mul_frac(&phi);
        for f in &kernel_factors {
            b.div_poly(f)?;
        }
        let lhs = b.build();
        // right side, literally
        let mut terms = Vec::new();
        for set in subsets(ms) {
            let k = set.len() as i64;
            let mut b = FracBuilder::new(uni);
            b.mul_int(&sign(k));
            b.mul_monomial(&q_pow(&uni, choose2(k)));
            for &kk in &set {
                for l in (0..ms).filter(|l| !set.contains(l)) {
                    let mut r = Monomial::ONE;
                    r.0[uni.slot(Var::Y(kk as u8))] = 1;
                    r.0[uni.slot(Var::Y(l as u8))] = -1;
                    b.mul_poly(&MPoly::one_minus(uni, 1, r.mul(&q_pow(&uni, 1))));
                    b.div_poly(&MPoly::one_minus(uni, 1, r))?;
                }
                for i in 0..n {
                    let xy = [(Var::X(i as u8), 1), (Var::Y(kk as u8), 1)];
                    let with_t = [(Var::T, 1), (Var::X(i as u8), 1), (Var::Y(kk as u8), 1)];
                    b.mul_poly(&(&MPoly::one(uni) + &MPoly::term(uni, 1, &with_t)));
                    b.div_poly(&(&MPoly::one(uni) + &MPoly::term(uni, 1, &xy)))?;
                }
            }
            b.div_poly(&MPoly::monomial(uni, 1, y_product(&uni, ms)))?;
            terms.push(b.build());
        }
        Ok((lhs, Frac::sum(uni, terms.iter())))
    };
    match run() {
        Ok((l, r)) => {
            rep.expect_eq(&l, &r);
        }
        Err(e) => rep.fail(e.to_string()),
    }
    rep
}

/// `Φ(x;y) = B_x ∏_{i,j} (1 + x_i y_j)` over the operator's common denominator.
fn phi_numerator(op: &RaisingOperator, uni: VarUniverse) -> Result<Frac> {
    let kernel = cauchy_kernel(uni, 0..uni.n_y());
    let mut parts = Vec::with_capacity(op.op.coeffs().len());
    for (g, c) in op.op.coeffs() {
        parts.push(c.embed(uni)?.mul_poly(&kernel.shift_q(g.entries())));
    }
    Ok(Frac::sum(uni, parts.iter()))
}

/// `Φ(x;y) = B_x ∏(1 + x_i y_j)` has degree at most `n-1` in every `y_j`,
/// measured on its numerator over a y-free denominator.
pub fn phi_degree_check(op: &RaisingOperator) -> IdentityReport {
    let (m, n) = (op.m(), op.n());
    let mut rep = IdentityReport::new("phi_degree").param("m", m).param("n", n);
    let run = |rep: &mut IdentityReport| -> Result<()> {
        let uni = VarUniverse::new(n, m as usize)?;
        let phi = phi_numerator(op, uni)?;
        let num = phi.num();
        for j in 0..m as usize {
            let y = Var::Y(j as u8);
            if phi.denom().factors().iter().any(|(f, _)| f.involves(y)) {
                rep.fail(format!("denominator involves y{}", j + 1));
                return Ok(());
            }
            let deg = num.degree(y).unwrap_or(0);
            if deg > n as i32 - 1 {
                rep.fail(format!("degree {deg} in y{}", j + 1));
                return Ok(());
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}

/// `(1-t) Σ_i x_i^m ∏_{j≠i} (x_i - t x_j)/(x_i - x_j) T_{0,x_i}`, where
/// `T_{0,x_i}` substitutes `x_i = 0`.
#[derive(Clone, Debug)]
pub struct HallLittlewoodOperator {
    m: u32,
    uni: VarUniverse,
    coeffs: Vec<Frac>,
}

impl HallLittlewoodOperator {
    pub fn build(m: u32, n: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::Precondition("the Hall-Littlewood operator needs m >= 1".into()));
        }
        let uni = x_universe(n)?;
        let one = MPoly::one(uni);
        let t = MPoly::var(uni, Var::T);
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let xi = MPoly::var(uni, Var::X(i as u8));
            let mut b = FracBuilder::new(uni);
            b.mul_poly(&(&one - &t));
            b.mul_poly(&xi.pow(m));
            for j in (0..n).filter(|&j| j != i) {
                let xj = MPoly::var(uni, Var::X(j as u8));
                b.mul_poly(&(&xi - &(&t * &xj)));
                b.div_poly(&(&xi - &xj))?;
            }
            coeffs.push(b.build());
        }
        Ok(HallLittlewoodOperator { m, uni, coeffs })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[Frac] {
        &self.coeffs
    }

    pub fn apply(&self, f: &Frac) -> Result<Frac> {
        let f = f.embed(self.uni)?;
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            terms.push(c.mul(&f.eval_zero(Var::X(i as u8))?));
        }
        Ok(Frac::sum(self.uni, terms.iter()))
    }
}

/// `P_λ(x; 0, t)`, reduced to a polynomial.
pub fn hall_littlewood_p(table: &JTable, lam: &Partition) -> Result<Frac> {
    Ok(table.p(lam)?.value.eval_zero(Var::Q)?.reduce())
}

/// `B_m P_λ(x;0,t) = κ P_{(m,λ)}(x;0,t)` for a scalar `κ(t) ≠ 0` read off
/// the coefficient of `x^{(m,λ)}`, and `0` when `ℓ(λ) = n`.
pub fn hall_littlewood_check(op: &HallLittlewoodOperator, table: &JTable, lam: &Partition) -> IdentityReport {
    let m = op.m();
    let n = table.n();
    let mut rep = IdentityReport::new("hall_littlewood").param("m", m).param("lambda", lam).param("n", n);
    let run = |rep: &mut IdentityReport| -> Result<()> {
        if lam.part(0) > m || lam.len() > n {
            return Err(Error::Precondition(format!("need lambda_1 <= {m} and length <= {n}")));
        }
        let out = op.apply(&hall_littlewood_p(table, lam)?)?.reduce();
        if lam.len() == n {
            rep.expect_eq(&out, &Frac::zero(table.universe()));
            return Ok(());
        }
        let raised = lam.prepend_row(m)?;
        let target = hall_littlewood_p(table, &raised)?;
        let Some(poly) = out.as_poly() else {
            rep.fail("result is not a polynomial in x");
            return Ok(());
        };
        let lead = raised.to_multi_index(n).expect("length below n");
        let powers: Vec<(Var, i32)> = (0..n).map(|i| (Var::X(i as u8), lead.entries()[i] as i32)).collect();
        let kappa = poly.coefficient(&powers);
        if kappa.is_zero() {
            rep.fail(format!("coefficient of x^({lead}) vanishes"));
            return Ok(());
        }
        *rep = core::mem::replace(rep, IdentityReport::new("")).param("kappa", &kappa);
        rep.expect_eq(&out, &target.mul_poly(&kappa));
        Ok(())
    };
    if let Err(e) = run(&mut rep) {
        rep.fail(e.to_string());
    }
    rep
}
