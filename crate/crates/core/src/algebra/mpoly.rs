//! Sparse multivariate Laurent polynomials over [`Int`].

use core::cmp::Ordering;
use core::fmt;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::int::Int;
use super::var::{Block, Monomial, MonomialMap, Var, VarUniverse, MAX_VARS};
use crate::error::AlgebraError;

/// A polynomial in `Z[q^±, t, u, x^±, y]`.
///
/// Terms are kept sorted in the canonical order (lexicographic on slot order,
/// larger exponents first) with no zero coefficients and no repeated
/// exponent vectors, so derived equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPoly {
    uni: VarUniverse,
    terms: Vec<(Monomial, Int)>,
}

fn sort_terms(terms: &mut [(Monomial, Int)]) {
    terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
}

impl MPoly {
    pub fn zero(uni: VarUniverse) -> Self {
        MPoly {
            uni,
            terms: Vec::new(),
        }
    }

    pub fn one(uni: VarUniverse) -> Self {
        Self::constant(uni, Int::ONE)
    }

    pub fn constant(uni: VarUniverse, c: impl Into<Int>) -> Self {
        Self::monomial(uni, c, Monomial::ONE)
    }

    pub fn monomial(uni: VarUniverse, c: impl Into<Int>, m: Monomial) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero(uni);
        }
        MPoly {
            uni,
            terms: alloc::vec![(m, c)],
        }
    }

    pub fn var(uni: VarUniverse, v: Var) -> Self {
        Self::monomial(uni, 1, Monomial::var(&uni, v, 1))
    }

    /// `c * prod v^e`.
    pub fn term(uni: VarUniverse, c: impl Into<Int>, powers: &[(Var, i32)]) -> Self {
        let mut m = Monomial::ONE;
        for &(v, e) in powers {
            m.0[uni.slot(v)] += e as i16;
        }
        Self::monomial(uni, c, m)
    }

    /// `1 - c * m`, the building block of every q-shifted factorial.
    pub fn one_minus(uni: VarUniverse, c: impl Into<Int>, m: Monomial) -> Self {
        let one = Self::one(uni);
        &one - &Self::monomial(uni, c, m)
    }

    /// Collects arbitrary terms, combining repeats and dropping zeros.
    pub fn from_terms(uni: VarUniverse, terms: impl IntoIterator<Item = (Monomial, Int)>) -> Self {
        let mut acc: HashMap<Monomial, Int> = HashMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += &c;
        }
        Self::from_accumulator(uni, acc)
    }

    fn from_accumulator(uni: VarUniverse, acc: HashMap<Monomial, Int>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        sort_terms(&mut terms);
        MPoly { uni, terms }
    }

    pub fn universe(&self) -> VarUniverse {
        self.uni
    }

    pub fn terms(&self) -> &[(Monomial, Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Leading term in the canonical order.
    pub fn lead(&self) -> Option<&(Monomial, Int)> {
        self.terms.first()
    }

    pub fn checked_add(&self, other: &MPoly) -> Result<MPoly, AlgebraError> {
        self.same_universe(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MPoly) -> Result<MPoly, AlgebraError> {
        self.same_universe(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MPoly) -> Result<MPoly, AlgebraError> {
        self.same_universe(other)?;
        Ok(self.product(other))
    }

    fn same_universe(&self, other: &MPoly) -> Result<(), AlgebraError> {
        if self.uni == other.uni {
            Ok(())
        } else {
            Err(AlgebraError::UniverseMismatch)
        }
    }

    fn merge(&self, other: &MPoly, negate: bool) -> MPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => y.0.cmp(&x.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MPoly {
            uni: self.uni,
            terms: out,
        }
    }

    fn product(&self, other: &MPoly) -> MPoly {
        if self.is_zero() || other.is_zero() {
            return MPoly::zero(self.uni);
        }
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(c, m);
        }
        let mut acc: HashMap<Monomial, Int> =
            HashMap::with_capacity((small.len() * large.len()).min(1 << 20));
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                acc.entry(ma.mul(mb)).or_default().add_mul_assign(ca, cb);
            }
        }
        Self::from_accumulator(self.uni, acc)
    }

    /// Multiplies by `c * m`; order is preserved so no re-sort is needed.
    pub fn mul_term(&self, c: &Int, m: &Monomial) -> MPoly {
        if c.is_zero() {
            return MPoly::zero(self.uni);
        }
        MPoly {
            uni: self.uni,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MPoly {
        self.mul_term(&Int::ONE, m)
    }

    pub fn scale(&self, c: &Int) -> MPoly {
        self.mul_term(c, &Monomial::ONE)
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one(self.uni);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Sum of many polynomials through one accumulator.
    pub fn sum<'a>(uni: VarUniverse, items: impl IntoIterator<Item = &'a MPoly>) -> MPoly {
        let mut acc: HashMap<Monomial, Int> = HashMap::new();
        for p in items {
            assert_eq!(p.uni, uni, "universe mismatch in sum");
            for (m, c) in &p.terms {
                *acc.entry(*m).or_default() += c;
            }
        }
        Self::from_accumulator(uni, acc)
    }

    /// Product of many polynomials.
    pub fn product_of<'a>(uni: VarUniverse, items: impl IntoIterator<Item = &'a MPoly>) -> MPoly {
        items
            .into_iter()
            .fold(MPoly::one(uni), |acc, p| &acc * p)
    }

    /// `x_i -> param^{gamma_i} x_i` on the chosen block.
    pub fn shift(&self, param: Var, block: Block, gamma: &[u32]) -> MPoly {
        let p = self.uni.slot(param);
        let slots: Vec<(usize, i32)> = gamma
            .iter()
            .enumerate()
            .filter(|(_, &g)| g != 0)
            .map(|(i, &g)| (self.uni.slot(block.var(i)), g as i32))
            .collect();
        if slots.is_empty() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut m2 = *m;
            let add: i32 = slots.iter().map(|&(s, g)| g * m.exp(s)).sum();
            m2.0[p] += add as i16;
            (m2, c.clone())
        });
        // distinct monomials stay distinct, only the order can change
        let mut terms: Vec<_> = terms.collect();
        sort_terms(&mut terms);
        MPoly {
            uni: self.uni,
            terms,
        }
    }

    /// The q-shift `T_{q,x}^gamma`: `x_i -> q^{gamma_i} x_i`.
    pub fn shift_q(&self, gamma: &[u32]) -> MPoly {
        self.shift(Var::Q, Block::X, gamma)
    }

    /// Applies a monomial ring homomorphism.
    pub fn apply_map(&self, map: &MonomialMap) -> MPoly {
        assert_eq!(map.source, self.uni, "map source does not match polynomial");
        let terms = self.terms.iter().map(|(m, c)| {
            let (neg, img) = map.apply_monomial(m);
            (img, if neg { -c } else { c.clone() })
        });
        MPoly::from_terms(map.target, terms)
    }

    /// Re-homes the polynomial in a larger (or equal) universe.
    pub fn embed(&self, target: VarUniverse) -> Result<MPoly, AlgebraError> {
        if target == self.uni {
            return Ok(self.clone());
        }
        let used = self.support_vars();
        for v in &used {
            if !target.contains(*v) {
                return Err(AlgebraError::UniverseMismatch);
            }
        }
        let map = MonomialMap::substitution(self.uni, target);
        Ok(self.apply_map(&map))
    }

    /// Variables that occur with a nonzero exponent.
    pub fn support_vars(&self) -> Vec<Var> {
        let mut seen = [false; MAX_VARS];
        for (m, _) in &self.terms {
            for (s, e) in m.0.iter().enumerate() {
                if *e != 0 {
                    seen[s] = true;
                }
            }
        }
        (0..self.uni.width())
            .filter(|&s| seen[s])
            .map(|s| self.uni.var_at(s))
            .collect()
    }

    pub fn involves(&self, v: Var) -> bool {
        let s = self.uni.slot(v);
        self.terms.iter().any(|(m, _)| m.0[s] != 0)
    }

    /// Sets `v = 0`; fails if `v` occurs with a negative exponent.
    pub fn eval_zero(&self, v: Var) -> Result<MPoly, AlgebraError> {
        let s = self.uni.slot(v);
        if self.terms.iter().any(|(m, _)| m.0[s] < 0) {
            return Err(AlgebraError::Pole(v));
        }
        Ok(MPoly {
            uni: self.uni,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[s] == 0)
                .cloned()
                .collect(),
        })
    }

    /// Componentwise minimum exponent vector (`ONE` for the zero polynomial).
    pub fn min_monomial(&self) -> Monomial {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(first, |a, m| a.meet(&m)),
        }
    }

    pub fn max_monomial(&self) -> Monomial {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(first, |a, m| a.join(&m)),
        }
    }

    pub fn degree(&self, v: Var) -> Option<i32> {
        let s = self.uni.slot(v);
        self.terms.iter().map(|(m, _)| m.exp(s)).max()
    }

    pub fn min_degree(&self, v: Var) -> Option<i32> {
        let s = self.uni.slot(v);
        self.terms.iter().map(|(m, _)| m.exp(s)).min()
    }

    /// Positive gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> Int {
        let mut g = Int::ZERO;
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits off a unit: `self = c * m * p` with `p` primitive, free of
    /// monomial factors, and with a positive leading coefficient.
    pub fn normalize_unit(&self) -> (Int, Monomial, MPoly) {
        if self.is_zero() {
            return (Int::ZERO, Monomial::ONE, self.clone());
        }
        let m = self.min_monomial();
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        let p = MPoly {
            uni: self.uni,
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.div(&m), cc.div_exact(&c).expect("content divides")))
                .collect(),
        };
        (c, m, p)
    }

    /// No negative exponent on `t`, `u` or any `y`.
    pub fn respects_sign_contract(&self) -> bool {
        let guarded: Vec<usize> = self
            .uni
            .vars()
            .filter(|v| !v.is_laurent())
            .map(|v| self.uni.slot(v))
            .collect();
        self.terms
            .iter()
            .all(|(m, _)| guarded.iter().all(|&s| m.0[s] >= 0))
    }

    /// Exact quotient in the Laurent ring, or `None` if `den` does not divide.
    ///
    /// Both sides are shifted to honest polynomials free of monomial factors,
    /// then reduced by leading terms in the canonical order. Divisibility in
    /// the Laurent ring is equivalent to divisibility of the shifted parts.
    pub fn divide_exact(&self, den: &MPoly) -> Option<MPoly> {
        assert_eq!(self.uni, den.uni, "universe mismatch in division");
        if den.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let quotient = if den.len() == 1 {
            let (dm, dc) = &den.terms[0];
            let mut terms = Vec::with_capacity(self.len());
            for (m, c) in &self.terms {
                terms.push((m.div(dm), c.div_exact(dc)?));
            }
            MPoly {
                uni: self.uni,
                terms,
            }
        } else {
            let nm = self.min_monomial();
            let dm = den.min_monomial();
            let n0 = self.mul_monomial(&nm.inverse());
            let d0 = den.mul_monomial(&dm.inverse());
            if !n0.max_monomial().dominates(&d0.max_monomial()) {
                return None;
            }
            let (lead_m, lead_c) = d0.terms[0].clone();
            let mut rem: BTreeMap<Monomial, Int> = n0.terms.into_iter().collect();
            let mut quot = Vec::new();
            while let Some((m, c)) = rem.pop_last() {
                if !m.dominates(&lead_m) {
                    return None;
                }
                let qc = c.div_exact(&lead_c)?;
                let qm = m.div(&lead_m);
                for (tm, tc) in &d0.terms[1..] {
                    let key = qm.mul(tm);
                    let prod = &qc * tc;
                    match rem.get_mut(&key) {
                        Some(v) => {
                            *v -= &prod;
                            if v.is_zero() {
                                rem.remove(&key);
                            }
                        }
                        None => {
                            rem.insert(key, -prod);
                        }
                    }
                }
                quot.push((qm, qc));
            }
            MPoly {
                uni: self.uni,
                terms: quot,
            }
            .mul_monomial(&nm.div(&dm))
        };
        if quotient.respects_sign_contract() || !self.respects_sign_contract() {
            Some(quotient)
        } else {
            None
        }
    }

    /// Coefficient of `prod vars[i]^exps[i]`, as a polynomial in the rest.
    pub fn coefficient(&self, vars: &[(Var, i32)]) -> MPoly {
        let slots: Vec<(usize, i32)> = vars.iter().map(|&(v, e)| (self.uni.slot(v), e)).collect();
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| slots.iter().all(|&(s, e)| m.exp(s) == e))
            .map(|(m, c)| {
                let mut m2 = *m;
                for &(s, _) in &slots {
                    m2.0[s] = 0;
                }
                (m2, c.clone())
            });
        MPoly {
            uni: self.uni,
            terms: terms.collect(),
        }
    }

    /// Exponent vector restricted to the universe's present variables.
    pub fn dense_exponents(&self, m: &Monomial) -> Vec<i32> {
        self.uni.vars().map(|v| m.exp(self.uni.slot(v))).collect()
    }
}

impl Ord for MPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.uni
            .cmp(&other.uni)
            .then_with(|| self.terms.len().cmp(&other.terms.len()))
            .then_with(|| {
                for (a, b) in self.terms.iter().zip(other.terms.iter()) {
                    let o = a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for MPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl core::ops::Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.checked_add(rhs).expect("universe mismatch")
    }
}

impl core::ops::Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.checked_sub(rhs).expect("universe mismatch")
    }
}

impl core::ops::Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.checked_mul(rhs).expect("universe mismatch")
    }
}

impl core::ops::Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            uni: self.uni,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

/// Text form: terms in canonical order joined by `" + "`, each as
/// `c*q^a*t^b*x1^e1...`, dropping unit coefficients, unit exponents and
/// zero powers.
impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mut factors = Vec::new();
            for v in self.uni.vars() {
                let e = m.exp(self.uni.slot(v));
                match e {
                    0 => {}
                    1 => factors.push(alloc::format!("{v}")),
                    _ => factors.push(alloc::format!("{v}^{e}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else {
                if c.is_one() {
                } else if *c == Int::from(-1) {
                    f.write_str("-")?;
                } else {
                    write!(f, "{c}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(base; q)_k = prod_{v<k} (1 - base q^v)`, with the empty product `1`.
pub fn qpochhammer(base: &MPoly, k: u32) -> MPoly {
    let uni = base.universe();
    let one = MPoly::one(uni);
    let mut acc = one.clone();
    for v in 0..k {
        let shifted = base.mul_monomial(&Monomial::var(&uni, Var::Q, v as i32));
        acc = &acc * &(&one - &shifted);
    }
    acc
}
