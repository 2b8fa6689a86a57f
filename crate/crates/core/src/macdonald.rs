//! q-difference operators, Macdonald's operator `D_x(u; q, t)`, and the
//! polynomials `P_λ` and `J_λ`.
//!
//! `P_λ` is found by a triangular solve of the eigenproblem for the first
//! Macdonald operator `D_1 = Σ_i A_i(x) T_{q,x_i}` in the monomial basis, with
//! all arithmetic kept in `Z[q,t]`: the solve produces integer-polynomial
//! numerators over the product of eigenvalue gaps, and `J_λ` is obtained by
//! exact division of `c_λ` times those numerators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{Block, Frac, FracBuilder, Int, MPoly, Monomial, MonomialMap, Var, VarUniverse};
use crate::error::{Error, Result};
use crate::partitions::{dominance_order_list, partitions_bounded, permutations, subsets, MultiIndex, Partition};
use crate::qbinomial::choose2;
use crate::report::IdentityReport;

/// `Σ_γ c_γ T^γ`, the shift acting on one block of variables by one parameter.
#[derive(Clone, Debug)]
pub struct QDiffOp {
    uni: VarUniverse,
    block: Block,
    base: Var,
    coeffs: BTreeMap<MultiIndex, Frac>,
}

impl QDiffOp {
    /// The zero operator shifting `block` by powers of `base`.
    pub fn new(uni: VarUniverse, block: Block, base: Var) -> Self {
        QDiffOp {
            uni,
            block,
            base,
            coeffs: BTreeMap::new(),
        }
    }

    /// The identity in the q-shifts of the x-block.
    pub fn identity(uni: VarUniverse) -> Self {
        let mut op = QDiffOp::new(uni, Block::X, Var::Q);
        op.add_term(MultiIndex::zero(uni.n_x()), Frac::one(uni));
        op
    }

    /// `T_{q,x}^γ` alone.
    pub fn shift(uni: VarUniverse, gamma: MultiIndex) -> Self {
        let mut op = QDiffOp::new(uni, Block::X, Var::Q);
        op.add_term(gamma, Frac::one(uni));
        op
    }

    pub fn universe(&self) -> VarUniverse {
        self.uni
    }

    pub fn block(&self) -> Block {
        self.block
    }

    pub fn base(&self) -> Var {
        self.base
    }

    /// Number of shifted variables.
    pub fn n(&self) -> usize {
        self.uni.block_len(self.block)
    }

    /// Adds `c T^γ`, merging with an existing coefficient.
    pub fn add_term(&mut self, gamma: MultiIndex, c: Frac) {
        assert_eq!(gamma.len(), self.n(), "shift index has the wrong length");
        match self.coeffs.get_mut(&gamma) {
            Some(old) => *old = old.add(&c),
            None => {
                self.coeffs.insert(gamma, c);
            }
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<MultiIndex, Frac> {
        &self.coeffs
    }

    pub fn coeff(&self, gamma: &MultiIndex) -> Option<&Frac> {
        self.coeffs.get(gamma)
    }

    /// Largest `|γ|` with a nonzero coefficient.
    pub fn order(&self) -> u32 {
        self.coeffs
            .iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(g, _)| g.weight())
            .max()
            .unwrap_or(0)
    }

    /// `Σ_γ c_γ f(..., base^{γ_i} v_i, ...)`.
    pub fn apply_poly(&self, f: &MPoly) -> Result<Frac> {
        let f = f.embed(self.uni)?;
        let terms: Vec<Frac> = self
            .coeffs
            .iter()
            .map(|(g, c)| c.mul_poly(&f.shift(self.base, self.block, g.entries())))
            .collect();
        Ok(Frac::sum(self.uni, terms.iter()))
    }

    pub fn apply_frac(&self, f: &Frac) -> Result<Frac> {
        let f = f.embed(self.uni)?;
        let terms: Vec<Frac> = self
            .coeffs
            .iter()
            .map(|(g, c)| c.mul(&f.shift(self.base, self.block, g.entries())))
            .collect();
        Ok(Frac::sum(self.uni, terms.iter()))
    }
}

/// `Σ_K (-u)^{|K|} s^{C(|K|,2)} ∏_{k∈K, l∉K} (1 - s v_k/v_l)/(1 - v_k/v_l) T_{base,v}^K`
/// on the chosen block, with `s` the other parameter.
///
/// With `block = X, base = q` this is Macdonald's `D_x(u; q, t)`, `s = t`;
/// with the roles of `q` and `t` exchanged it is `D_y(u; t, q)`. When `u` is
/// absent from the universe it is specialized to 1.
pub fn difference_operator(uni: VarUniverse, block: Block, base: Var) -> Result<QDiffOp> {
    let other = match base {
        Var::Q => Var::T,
        Var::T => Var::Q,
        _ => return Err(Error::Precondition("shift parameter must be q or t".into())),
    };
    let n = uni.block_len(block);
    let mut op = QDiffOp::new(uni, block, base);
    for set in subsets(n) {
        let k = set.len() as i32;
        let mut b = FracBuilder::new(uni);
        if k % 2 == 1 {
            b.mul_int(&Int::from(-1));
        }
        let mut mono = Monomial::var(&uni, other, choose2(k as i64) as i32);
        if uni.has_u() {
            mono.0[uni.slot(Var::U)] = k as i16;
        }
        b.mul_monomial(&mono);
        for &i in &set {
            for l in (0..n).filter(|l| !set.contains(l)) {
                let r = ratio(&uni, block, i, l);
                b.mul_poly(&MPoly::one_minus(uni, 1, r.mul(&Monomial::var(&uni, other, 1))));
                b.div_poly(&MPoly::one_minus(uni, 1, r))?;
            }
        }
        op.add_term(MultiIndex::indicator(n, &set), b.build());
    }
    Ok(op)
}

/// `v_i / v_j` on a block.
fn ratio(uni: &VarUniverse, block: Block, i: usize, j: usize) -> Monomial {
    let mut m = Monomial::ONE;
    m.0[uni.slot(block.var(i))] += 1;
    m.0[uni.slot(block.var(j))] -= 1;
    m
}

/// `D_x(u; q, t)` on `n` x-variables; without `u` it is `D_x(1; q, t)`.
pub fn macdonald_d(u_included: bool, n: usize) -> Result<QDiffOp> {
    let mut uni = VarUniverse::new(n, 0)?;
    if u_included {
        uni = uni.with_u();
    }
    difference_operator(uni, Block::X, Var::Q)
}

/// `D_x(u; q, t)` from its determinant:
/// `Δ(x)^{-1} Σ_w ε(w) w(∏_i x_i^{n-i} (1 - u t^{n-i} T_{q,x_i}))`.
pub fn macdonald_d_determinantal(n: usize) -> Result<QDiffOp> {
    let uni = VarUniverse::new(n, 0)?.with_u();
    let mut nums: BTreeMap<MultiIndex, Vec<(Monomial, Int)>> = BTreeMap::new();
    for (w, sign) in permutations(n) {
        let mut staircase = Monomial::ONE;
        for (i, &wi) in w.iter().enumerate() {
            staircase.0[uni.slot(Var::X(wi as u8))] = (n - 1 - i) as i16;
        }
        for s in subsets(n) {
            let mut mono = staircase;
            let mut t_exp = 0;
            for &i in &s {
                t_exp += (n - 1 - i) as i16;
            }
            mono.0[uni.slot(Var::T)] = t_exp;
            mono.0[uni.slot(Var::U)] = s.len() as i16;
            let c = if s.len() % 2 == 0 { sign } else { -sign };
            let image: Vec<usize> = s.iter().map(|&i| w[i]).collect();
            nums.entry(MultiIndex::indicator(n, &image))
                .or_default()
                .push((mono, Int::from(c)));
        }
    }
    let mut vandermonde = MPoly::one(uni);
    for i in 0..n {
        for j in i + 1..n {
            vandermonde = &vandermonde * &(&MPoly::var(uni, Var::X(i as u8)) - &MPoly::var(uni, Var::X(j as u8)));
        }
    }
    let mut op = QDiffOp::new(uni, Block::X, Var::Q);
    for (gamma, terms) in nums {
        op.add_term(gamma, Frac::new(MPoly::from_terms(uni, terms), &vandermonde)?);
    }
    Ok(op)
}

/// `m_μ(x_1..x_n)`: the sum of the distinct monomials `x^{σμ}`.
pub fn monomial_symmetric(uni: VarUniverse, mu: &Partition) -> MPoly {
    let n = uni.n_x();
    let Some(padded) = mu.to_multi_index(n) else {
        return MPoly::zero(uni);
    };
    let exps: BTreeSet<MultiIndex> = permutations(n).iter().map(|(w, _)| padded.permute(w)).collect();
    MPoly::from_terms(
        uni,
        exps.into_iter().map(|e| (x_monomial(&uni, &e), Int::ONE)),
    )
}

/// `x^α`.
pub fn x_monomial(uni: &VarUniverse, alpha: &MultiIndex) -> Monomial {
    let mut m = Monomial::ONE;
    for (i, &a) in alpha.entries().iter().enumerate() {
        m.0[uni.slot(Var::X(i as u8))] = a as i16;
    }
    m
}

/// `c_λ = ∏_s (1 - q^{a(s)} t^{l(s)+1})` as a list of factors.
pub fn c_lambda_factors(uni: VarUniverse, lam: &Partition) -> Vec<MPoly> {
    lam.hooks()
        .into_iter()
        .map(|(a, l)| MPoly::one_minus(uni, 1, q_t(&uni, a as i32, l as i32 + 1)))
        .collect()
}

pub fn c_lambda(uni: VarUniverse, lam: &Partition) -> MPoly {
    MPoly::product_of(uni, c_lambda_factors(uni, lam).iter())
}

fn q_t(uni: &VarUniverse, a: i32, b: i32) -> Monomial {
    let mut m = Monomial::var(uni, Var::Q, a);
    m.0[uni.slot(Var::T)] = b as i16;
    m
}

/// `∏_{i=1}^n (1 - u q^{λ_i} t^{n-i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EigenValue {
    pub lam: Partition,
    pub n: usize,
}

impl EigenValue {
    /// The value in `uni`, which must carry `u`.
    pub fn value(&self, uni: VarUniverse) -> MPoly {
        let mut acc = MPoly::one(uni);
        for i in 0..self.n {
            let mut m = q_t(&uni, self.lam.part(i) as i32, (self.n - 1 - i) as i32);
            m.0[uni.slot(Var::U)] = 1;
            acc = &acc * &MPoly::one_minus(uni, 1, m);
        }
        acc
    }

    /// The `D_1` eigenvalue `Σ_i q^{λ_i} t^{n-i}`.
    pub fn first(&self, uni: VarUniverse) -> MPoly {
        MPoly::from_terms(
            uni,
            (0..self.n).map(|i| (q_t(&uni, self.lam.part(i) as i32, (self.n - 1 - i) as i32), Int::ONE)),
        )
    }
}

/// A symmetric function of `x_1..x_n` with its monomial-basis expansion.
#[derive(Clone, Debug)]
pub struct SymPoly {
    pub n: usize,
    pub value: Frac,
    pub expansion: BTreeMap<Partition, Frac>,
}

impl SymPoly {
    pub fn universe(&self) -> VarUniverse {
        self.value.universe()
    }

    /// Invariance under `x_i <-> x_j`, checked by substitution.
    pub fn is_symmetric_under(&self, i: usize, j: usize) -> bool {
        let uni = self.universe();
        let mut map = MonomialMap::identity(uni);
        map.set(Var::X(i as u8), false, Monomial::var(&uni, Var::X(j as u8), 1));
        map.set(Var::X(j as u8), false, Monomial::var(&uni, Var::X(i as u8), 1));
        self.value.apply_map(&map).is_ok_and(|v| v.frac_eq(&self.value))
    }
}

/// `J_λ` for one partition: monomial-basis coefficients in `Z[q,t]`.
#[derive(Clone, Debug)]
pub struct JEntry {
    pub lam: Partition,
    pub coeffs: BTreeMap<Partition, MPoly>,
    pub poly: MPoly,
}

/// Every `J_λ` with `ℓ(λ) ≤ n` and `|λ| ≤ max_degree`, built once and read
/// freely afterwards.
#[derive(Clone, Debug)]
pub struct JTable {
    uni: VarUniverse,
    max_degree: u32,
    entries: BTreeMap<Partition, JEntry>,
}

impl JTable {
    pub fn build(n: usize, max_degree: u32) -> Result<Self> {
        let uni = VarUniverse::new(n, 0)?;
        let mut entries = BTreeMap::new();
        for d in 0..=max_degree {
            for e in solve_degree(uni, d)? {
                entries.insert(e.lam.clone(), e);
            }
        }
        Ok(JTable {
            uni,
            max_degree,
            entries,
        })
    }

    pub fn universe(&self) -> VarUniverse {
        self.uni
    }

    pub fn n(&self) -> usize {
        self.uni.n_x()
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn entries(&self) -> impl Iterator<Item = &JEntry> {
        self.entries.values()
    }

    pub fn get(&self, lam: &Partition) -> Option<&JEntry> {
        self.entries.get(lam)
    }

    fn need(&self, lam: &Partition) -> Result<&JEntry> {
        self.get(lam).ok_or_else(|| {
            Error::Precondition(format!(
                "J_({lam}) is outside the table (n = {}, degree <= {})",
                self.n(),
                self.max_degree
            ))
        })
    }

    pub fn j_poly(&self, lam: &Partition) -> Result<&MPoly> {
        Ok(&self.need(lam)?.poly)
    }

    pub fn j(&self, lam: &Partition) -> Result<SymPoly> {
        let e = self.need(lam)?;
        Ok(SymPoly {
            n: self.n(),
            value: Frac::from_poly(e.poly.clone()),
            expansion: e
                .coeffs
                .iter()
                .map(|(mu, c)| (mu.clone(), Frac::from_poly(c.clone())))
                .collect(),
        })
    }

    /// `P_λ = J_λ / c_λ`.
    pub fn p(&self, lam: &Partition) -> Result<SymPoly> {
        let e = self.need(lam)?;
        let factors = c_lambda_factors(self.uni, lam);
        let over_c = |p: &MPoly| -> Result<Frac> {
            let mut b = FracBuilder::new(self.uni);
            b.mul_poly(p);
            for f in &factors {
                b.div_poly(f)?;
            }
            Ok(b.build())
        };
        let mut expansion = BTreeMap::new();
        for (mu, c) in &e.coeffs {
            expansion.insert(mu.clone(), over_c(c)?.reduce());
        }
        Ok(SymPoly {
            n: self.n(),
            value: over_c(&e.poly)?,
            expansion,
        })
    }
}

/// `D_1 m_ν` as a polynomial.
fn d1_on_monomial(uni: VarUniverse, nu: &Partition) -> Result<MPoly> {
    let n = uni.n_x();
    let m = monomial_symmetric(uni, nu);
    let mut terms = Vec::with_capacity(n);
    for i in 0..n {
        let mut b = FracBuilder::new(uni);
        for j in (0..n).filter(|&j| j != i) {
            let xi = MPoly::var(uni, Var::X(i as u8));
            let xj = MPoly::var(uni, Var::X(j as u8));
            b.mul_poly(&(&(&MPoly::var(uni, Var::T) * &xi) - &xj));
            b.div_poly(&(&xi - &xj))?;
        }
        let mut gamma = vec![0; n];
        gamma[i] = 1;
        b.mul_poly(&m.shift_q(&gamma));
        terms.push(b.build());
    }
    Frac::sum(uni, terms.iter())
        .to_polynomial()
        .ok_or_else(|| Error::Precondition(format!("D_1 m_({nu}) is not a polynomial")))
}

fn solve_degree(uni: VarUniverse, d: u32) -> Result<Vec<JEntry>> {
    let n = uni.n_x();
    let parts = dominance_order_list(d, n);
    // a[ν][μ]: coefficient of m_μ in D_1 m_ν
    let mut a: BTreeMap<(Partition, Partition), MPoly> = BTreeMap::new();
    for nu in &parts {
        let image = d1_on_monomial(uni, nu)?;
        for mu in &parts {
            let powers: Vec<(Var, i32)> = (0..n).map(|i| (Var::X(i as u8), mu.part(i) as i32)).collect();
            let c = image.coefficient(&powers);
            if !c.is_zero() {
                a.insert((nu.clone(), mu.clone()), c);
            }
        }
    }
    let mut out = Vec::with_capacity(parts.len());
    for lam in &parts {
        out.push(solve_one(uni, lam, &parts, &a)?);
    }
    Ok(out)
}

fn solve_one(
    uni: VarUniverse,
    lam: &Partition,
    parts: &[Partition],
    a: &BTreeMap<(Partition, Partition), MPoly>,
) -> Result<JEntry> {
    let n = uni.n_x();
    let eig = |p: &Partition| EigenValue { lam: p.clone(), n }.first(uni);
    let e_lam = eig(lam);
    // top-down over partitions dominated by λ
    let below: Vec<&Partition> = parts.iter().rev().filter(|mu| lam.dominates(mu)).collect();
    let gaps: Vec<MPoly> = below[1..].iter().map(|mu| &e_lam - &eig(mu)).collect();
    let denom = MPoly::product_of(uni, gaps.iter());
    let mut nums: Vec<(Partition, MPoly)> = vec![(lam.clone(), denom.clone())];
    for (k, mu) in below.iter().enumerate().skip(1) {
        let mut acc = MPoly::zero(uni);
        for (nu, nnu) in &nums {
            if let Some(c) = a.get(&(nu.clone(), (*mu).clone())) {
                acc = &acc + &(nnu * c);
            }
        }
        let q = acc.divide_exact(&gaps[k - 1]).ok_or_else(|| Error::Integrality {
            lambda: format!("{lam}"),
            detail: format!("triangular step at m_({mu}) is not exact"),
        })?;
        nums.push(((*mu).clone(), q));
    }
    let c = c_lambda(uni, lam);
    let mut coeffs = BTreeMap::new();
    let mut poly = MPoly::zero(uni);
    for (mu, num) in nums {
        let mut j = &num * &c;
        for g in &gaps {
            j = j.divide_exact(g).ok_or_else(|| Error::Integrality {
                lambda: format!("{lam}"),
                detail: format!("coefficient of m_({mu}) keeps the factor {g}"),
            })?;
        }
        if !j.is_zero() {
            poly = &poly + &(&j * &monomial_symmetric(uni, &mu));
            coeffs.insert(mu, j);
        }
    }
    Ok(JEntry {
        lam: lam.clone(),
        coeffs,
        poly,
    })
}

fn need_length(lam: &Partition, n: usize) -> Result<()> {
    if lam.len() > n {
        return Err(Error::Precondition(format!("partition ({lam}) has more than {n} parts")));
    }
    Ok(())
}

/// `P_λ(x; q, t)` in `n` variables.
pub fn macdonald_p(lam: &Partition, n: usize) -> Result<SymPoly> {
    need_length(lam, n)?;
    single(lam, n)?.p(lam)
}

/// `J_λ(x; q, t) = c_λ P_λ`, with every coefficient certified in `Z[q,t]`.
pub fn macdonald_j(lam: &Partition, n: usize) -> Result<SymPoly> {
    need_length(lam, n)?;
    single(lam, n)?.j(lam)
}

fn single(lam: &Partition, n: usize) -> Result<JTable> {
    let uni = VarUniverse::new(n, 0)?;
    let entries = solve_degree(uni, lam.weight())?
        .into_iter()
        .filter(|e| &e.lam == lam)
        .map(|e| (e.lam.clone(), e))
        .collect();
    Ok(JTable {
        uni,
        max_degree: lam.weight(),
        entries,
    })
}

/// `q <-> t` and `x_i -> y_i`, from `m` x-variables into `target`.
pub fn dual_map(source: VarUniverse, target: VarUniverse) -> MonomialMap {
    let mut map = MonomialMap::substitution(source, target);
    map.set(Var::Q, false, Monomial::var(&target, Var::T, 1));
    map.set(Var::T, false, Monomial::var(&target, Var::Q, 1));
    for i in 0..source.n_x() {
        map.set(Var::X(i as u8), false, Monomial::var(&target, Var::Y(i as u8), 1));
    }
    map
}

/// `D_x(u) P_λ = P_λ ∏_i (1 - u q^{λ_i} t^{n-i})`.
pub fn eigen_check(table: &JTable, lam: &Partition) -> IdentityReport {
    let n = table.n();
    let mut rep = IdentityReport::new("eigen").param("lambda", lam).param("n", n);
    let run = || -> Result<(Frac, Frac)> {
        let d = macdonald_d(true, n)?;
        let p = table.p(lam)?.value.embed(d.universe())?;
        let lhs = d.apply_frac(&p)?;
        let rhs = p.mul_poly(&EigenValue { lam: lam.clone(), n }.value(d.universe()));
        Ok((lhs, rhs))
    };
    match run() {
        Ok((l, r)) => {
            rep.expect_eq(&l, &r);
        }
        Err(e) => rep.fail(format!("{e}")),
    }
    rep
}

/// The subset-sum and determinantal forms of `D_x(u)` agree coefficientwise.
pub fn determinantal_check(n: usize) -> IdentityReport {
    let mut rep = IdentityReport::new("determinantal").param("n", n);
    let run = || -> Result<(QDiffOp, QDiffOp)> { Ok((macdonald_d(true, n)?, macdonald_d_determinantal(n)?)) };
    match run() {
        Ok((a, b)) => {
            let keys: BTreeSet<&MultiIndex> = a.coeffs().keys().chain(b.coeffs().keys()).collect();
            let zero = Frac::zero(a.universe());
            for g in keys {
                let (ca, cb) = (a.coeff(g).unwrap_or(&zero), b.coeff(g).unwrap_or(&zero));
                if !rep.expect_eq(ca, cb) {
                    rep.detail = rep.detail.take().map(|d| format!("gamma={g}: {d}"));
                    break;
                }
            }
        }
        Err(e) => rep.fail(format!("{e}")),
    }
    rep
}

/// `∏_{i,j} (1 + x_i y_j) = Σ_λ P_λ(x; q, t) P_{λ'}(y; t, q)` over
/// `λ ⊆ (m^n)`.
pub fn cauchy_dual_check(n: usize, m: usize) -> IdentityReport {
    let mut rep = IdentityReport::new("cauchy").param("n", n).param("m", m);
    let run = || -> Result<(Frac, Frac)> {
        let uni = VarUniverse::new(n, m)?;
        let mut lhs = MPoly::one(uni);
        for i in 0..n {
            for j in 0..m {
                let f = &MPoly::one(uni) + &MPoly::term(uni, 1, &[(Var::X(i as u8), 1), (Var::Y(j as u8), 1)]);
                lhs = &lhs * &f;
            }
        }
        let top = (n * m) as u32;
        let xt = JTable::build(n, top)?;
        let yt = if m >= 1 { Some(JTable::build(m, top)?) } else { None };
        let mut terms = Vec::new();
        for d in 0..=top {
            for lam in partitions_bounded(d, n, m as u32) {
                let px = xt.p(&lam)?.value.embed(uni)?;
                let conj = lam.conjugate();
                let py = match &yt {
                    Some(yt) => yt.p(&conj)?.value.apply_map(&dual_map(yt.universe(), uni))?,
                    None => Frac::one(uni),
                };
                terms.push(px.mul(&py));
            }
        }
        Ok((Frac::from_poly(lhs), Frac::sum(uni, terms.iter())))
    };
    match run() {
        Ok((l, r)) => {
            rep.expect_eq(&l, &r);
        }
        Err(e) => rep.fail(format!("{e}")),
    }
    rep
}

/// `(y_1..y_m)^{-1} D_y(1; t, q) P_μ(y; t, q) = ∏_i (1 - q^{m-i} t^{μ_i}) P_{μ-(1^m)}(y; t, q)`,
/// and `0` when `μ_m = 0`.
pub fn dual_lowering_check(mu: &Partition, m: usize) -> IdentityReport {
    let mut rep = IdentityReport::new("dual_lowering").param("mu", mu).param("m", m);
    let run = || -> Result<(Frac, Frac)> {
        need_length(mu, m)?;
        let uni = VarUniverse::new(1, m)?;
        let d = difference_operator(uni, Block::Y, Var::T)?;
        let table = JTable::build(m.max(1), mu.weight())?;
        let dual = |p: &Partition| -> Result<Frac> {
            if m == 0 {
                return Ok(Frac::one(uni));
            }
            Ok(table.p(p)?.value.apply_map(&dual_map(table.universe(), uni))?)
        };
        let p = dual(mu)?;
        let mut b = FracBuilder::new(uni);
        b.mul_frac(&d.apply_frac(&p)?);
        let mut ys = Monomial::ONE;
        for j in 0..m {
            ys.0[uni.slot(Var::Y(j as u8))] = 1;
        }
        b.div_poly(&MPoly::monomial(uni, 1, ys))?;
        let lhs = b.build();
        let rhs = match mu.remove_column(m) {
            Some(lower) if m > 0 => {
                let mut c = MPoly::one(uni);
                for i in 0..m {
                    c = &c * &MPoly::one_minus(uni, 1, q_t(&uni, (m - 1 - i) as i32, mu.part(i) as i32));
                }
                dual(&lower)?.mul_poly(&c)
            }
            _ if m == 0 => Frac::one(uni),
            _ => Frac::zero(uni),
        };
        Ok((lhs, rhs))
    };
    match run() {
        Ok((l, r)) => {
            rep.expect_eq(&l, &r);
        }
        Err(e) => rep.fail(format!("{e}")),
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(uni: VarUniverse, i: u8) -> MPoly {
        MPoly::var(uni, Var::X(i))
    }

    #[test]
    fn operator_application() {
        let uni = VarUniverse::new(2, 0).unwrap();
        let f = &x(uni, 0) * &x(uni, 1);
        let id = QDiffOp::identity(uni);
        assert_eq!(id.apply_poly(&f).unwrap().as_poly(), Some(&f));
        let t1 = QDiffOp::shift(uni, MultiIndex::new(vec![1, 0]));
        let out = t1.apply_poly(&f).unwrap();
        assert_eq!(out.as_poly(), Some(&f.mul_monomial(&Monomial::var(&uni, Var::Q, 1))));
    }

    #[test]
    fn d_operator_small_cases() {
        let d1 = macdonald_d(true, 1).unwrap();
        let uni = d1.universe();
        let one = MPoly::one(uni);
        let u = MPoly::var(uni, Var::U);
        assert!(d1.apply_poly(&one).unwrap().frac_eq(&Frac::from_poly(&one - &u)));
        assert_eq!(d1.coeffs().len(), 2);

        let d2 = macdonald_d(true, 2).unwrap();
        let uni = d2.universe();
        let one = MPoly::one(uni);
        let u = MPoly::var(uni, Var::U);
        let t = MPoly::var(uni, Var::T);
        let expect = &(&one - &u) * &(&one - &(&u * &t));
        assert!(d2.apply_poly(&one).unwrap().frac_eq(&Frac::from_poly(expect)));
        // K = {1}: -u (1 - t x1/x2)/(1 - x1/x2)
        let r = MPoly::term(uni, 1, &[(Var::X(0), 1), (Var::X(1), -1)]);
        let k1 = Frac::new(
            &(-&u) * &(&one - &(&t * &r)),
            &(&one - &r),
        )
        .unwrap();
        assert!(d2.coeff(&MultiIndex::new(vec![1, 0])).unwrap().frac_eq(&k1));
    }

    #[test]
    fn determinantal_form_agrees() {
        for n in 1..=3 {
            let rep = determinantal_check(n);
            assert!(rep.passed, "{:?}", rep.detail);
        }
    }

    #[test]
    fn small_p_and_j() {
        let uni = VarUniverse::new(2, 0).unwrap();
        let (x1, x2) = (x(uni, 0), x(uni, 1));
        let q = MPoly::var(uni, Var::Q);
        let t = MPoly::var(uni, Var::T);
        let one = MPoly::one(uni);

        let p1 = macdonald_p(&p("1"), 2).unwrap();
        assert!(p1.value.frac_eq(&Frac::from_poly(&x1 + &x2)));
        let p11 = macdonald_p(&p("1,1"), 2).unwrap();
        assert!(p11.value.frac_eq(&Frac::from_poly(&x1 * &x2)));

        let p2 = macdonald_p(&p("2"), 2).unwrap();
        let c = Frac::new(&(&one + &q) * &(&one - &t), &(&one - &(&q * &t))).unwrap();
        assert!(p2.expansion[&p("1,1")].frac_eq(&c));
        assert!(p2.expansion[&p("2")].frac_eq(&Frac::one(uni)));

        let j1 = macdonald_j(&p("1"), 2).unwrap();
        assert!(j1.value.frac_eq(&Frac::from_poly(&(&one - &t) * &(&x1 + &x2))));
        let j0 = macdonald_j(&Partition::empty(), 2).unwrap();
        assert!(j0.value.frac_eq(&Frac::one(uni)));
        let j2 = macdonald_j(&p("2"), 2).unwrap();
        let c2 = &(&one - &(&q * &t)) * &(&one - &t);
        assert!(j2.value.frac_eq(&p2.value.mul_poly(&c2)));
        assert!(macdonald_p(&p("1,1,1"), 2).is_err());
    }

    #[test]
    fn eigen_equation_holds() {
        for n in 1..=3 {
            let table = JTable::build(n, 4).unwrap();
            for e in table.entries() {
                let rep = eigen_check(&table, &e.lam);
                assert!(rep.passed, "lambda={} n={n}: {:?}", e.lam, rep.detail);
            }
        }
    }

    #[test]
    fn p_is_symmetric_and_monic() {
        let table = JTable::build(3, 4).unwrap();
        for e in table.entries() {
            let sp = table.p(&e.lam).unwrap();
            assert!(sp.is_symmetric_under(0, 1) && sp.is_symmetric_under(1, 2), "{}", e.lam);
            assert!(sp.expansion[&e.lam].frac_eq(&Frac::one(table.universe())));
            // the q = t specialization stays symmetric and monic
            let uni = table.universe();
            let mut qt = MonomialMap::identity(uni);
            qt.set(Var::Q, false, Monomial::var(&uni, Var::T, 1));
            let s = SymPoly {
                n: 3,
                value: sp.value.apply_map(&qt).unwrap(),
                expansion: BTreeMap::new(),
            };
            assert!(s.is_symmetric_under(0, 2));
            let lead = sp.expansion[&e.lam].apply_map(&qt).unwrap();
            assert!(lead.frac_eq(&Frac::one(uni)));
        }
    }

    #[test]
    fn wrong_eigenvalue_is_rejected() {
        let table = JTable::build(2, 3).unwrap();
        let d = macdonald_d(true, 2).unwrap();
        let pv = table.p(&p("2,1")).unwrap().value.embed(d.universe()).unwrap();
        let lhs = d.apply_frac(&pv).unwrap();
        let wrong = pv.mul_poly(&EigenValue { lam: p("3"), n: 2 }.value(d.universe()));
        assert!(!lhs.frac_eq(&wrong));
        let j = table.j_poly(&p("2,1")).unwrap();
        let uni = table.universe();
        let (one, q, t) = (MPoly::one(uni), MPoly::var(uni, Var::Q), MPoly::var(uni, Var::T));
        let c = &(&(&one - &(&q * &t.pow(2))) * &(&one - &t)) * &(&one - &t);
        assert_eq!(j, &(&c * &monomial_symmetric(uni, &p("2,1"))));
    }

    #[test]
    fn cauchy_and_lowering() {
        for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
            let rep = cauchy_dual_check(n, m);
            assert!(rep.passed, "n={n} m={m}: {:?}", rep.detail);
        }
        for (mu, m) in [("1", 1), ("1,0", 2), ("2,1", 2), ("1,1", 2), ("2", 1), ("", 0)] {
            let rep = dual_lowering_check(&p(mu), m);
            assert!(rep.passed, "mu={mu} m={m}: {:?}", rep.detail);
        }
    }
}
