//! Unreduced rational functions with factored denominators.
//!
//! A [`Frac`] is `num / den` where the denominator is kept as
//! `scale * mono * prod f_k^{e_k}`: a positive integer, a monomial in the
//! non-Laurent variables, and a multiset of normalized factors (primitive,
//! free of monomial factors, positive leading coefficient). Sums use the
//! least common multiple of the factor multisets, matched structurally, so no
//! polynomial gcd is ever computed. Equality is by cross-multiplication.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use hashbrown::HashMap;

use super::int::Int;
use super::mpoly::MPoly;
use super::var::{Block, Monomial, MonomialMap, Var, VarUniverse, MAX_VARS};
use crate::error::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Denom {
    scale: Int,
    mono: Monomial,
    factors: Vec<(MPoly, u32)>,
}

impl Denom {
    pub fn one() -> Self {
        Denom {
            scale: Int::ONE,
            mono: Monomial::ONE,
            factors: Vec::new(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.scale.is_one() && self.mono.is_one() && self.factors.is_empty()
    }

    pub fn scale(&self) -> &Int {
        &self.scale
    }

    pub fn monomial(&self) -> &Monomial {
        &self.mono
    }

    /// Normalized factors with multiplicities, in canonical order.
    pub fn factors(&self) -> &[(MPoly, u32)] {
        &self.factors
    }

    pub fn factor_count(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    fn from_parts(scale: Int, mono: Monomial, factors: BTreeMap<MPoly, u32>) -> Self {
        Denom {
            scale,
            mono,
            factors: factors.into_iter().filter(|(_, e)| *e > 0).collect(),
        }
    }

    /// The expanded denominator polynomial.
    pub fn expand(&self, uni: VarUniverse) -> MPoly {
        let mut acc = MPoly::monomial(uni, self.scale.clone(), self.mono);
        for (f, e) in &self.factors {
            for _ in 0..*e {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn lcm(&self, other: &Denom) -> Denom {
        let mut map: BTreeMap<MPoly, u32> = self.factors.iter().cloned().collect();
        for (f, e) in &other.factors {
            let slot = map.entry(f.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        Denom::from_parts(self.scale.lcm(&other.scale), self.mono.join(&other.mono), map)
    }

    pub fn mul(&self, other: &Denom) -> Denom {
        let mut map: BTreeMap<MPoly, u32> = self.factors.iter().cloned().collect();
        for (f, e) in &other.factors {
            *map.entry(f.clone()).or_insert(0) += e;
        }
        Denom::from_parts(&self.scale * &other.scale, self.mono.mul(&other.mono), map)
    }

    /// `self / sub` expanded, where `sub` divides `self` structurally.
    pub fn cofactor(&self, sub: &Denom, uni: VarUniverse) -> MPoly {
        self.lift(sub, &MPoly::one(uni))
    }

    /// `num * (self / sub)`, multiplying in one factor at a time.
    pub fn lift(&self, sub: &Denom, num: &MPoly) -> MPoly {
        let scale = self.scale.div_exact(&sub.scale).expect("lcm scale");
        let mut acc = num.mul_term(&scale, &self.mono.div(&sub.mono));
        let sub_map: BTreeMap<&MPoly, u32> = sub.factors.iter().map(|(f, e)| (f, *e)).collect();
        for (f, e) in &self.factors {
            let have = sub_map.get(f).copied().unwrap_or(0);
            for _ in have..*e {
                acc = &acc * f;
            }
        }
        acc
    }
}

/// Exact rational function `num / den`.
#[derive(Clone, Debug)]
pub struct Frac {
    num: MPoly,
    den: Denom,
}

impl Frac {
    pub fn zero(uni: VarUniverse) -> Self {
        Frac::from_poly(MPoly::zero(uni))
    }

    pub fn one(uni: VarUniverse) -> Self {
        Frac::from_poly(MPoly::one(uni))
    }

    pub fn from_poly(p: MPoly) -> Self {
        Frac {
            num: p,
            den: Denom::one(),
        }
    }

    /// `num / den` with `den` a nonzero polynomial.
    pub fn new(num: MPoly, den: &MPoly) -> Result<Self, AlgebraError> {
        let mut b = FracBuilder::new(num.universe());
        b.mul_poly(&num);
        b.div_poly(den)?;
        Ok(b.build())
    }

    /// `num / den` for a denominator already in factored form.
    pub fn from_parts(num: MPoly, den: Denom) -> Self {
        if num.is_zero() {
            return Frac::from_poly(num);
        }
        Frac { num, den }
    }

    pub fn universe(&self) -> VarUniverse {
        self.num.universe()
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn denom(&self) -> &Denom {
        &self.den
    }

    /// The expanded denominator polynomial (positive leading coefficient).
    pub fn den(&self) -> MPoly {
        self.den.expand(self.universe())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The polynomial value, if the denominator is already trivial.
    pub fn as_poly(&self) -> Option<&MPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn neg(&self) -> Frac {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Frac) -> Frac {
        Frac::sum(self.universe(), [self, other])
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        assert_eq!(self.universe(), other.universe(), "universe mismatch");
        if self.is_zero() || other.is_zero() {
            return Frac::zero(self.universe());
        }
        Frac {
            num: &self.num * &other.num,
            den: self.den.mul(&other.den),
        }
    }

    pub fn mul_poly(&self, p: &MPoly) -> Frac {
        if p.is_zero() {
            return Frac::zero(self.universe());
        }
        Frac {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, c: &Int) -> Frac {
        self.mul_poly(&MPoly::constant(self.universe(), c.clone()))
    }

    pub fn div(&self, other: &Frac) -> Result<Frac, AlgebraError> {
        let mut b = FracBuilder::new(self.universe());
        b.mul_frac(self);
        b.div_frac(other)?;
        Ok(b.build())
    }

    pub fn recip(&self) -> Result<Frac, AlgebraError> {
        Frac::one(self.universe()).div(self)
    }

    /// Sum over a common denominator: the lcm of the factor multisets.
    pub fn sum<'a>(uni: VarUniverse, items: impl IntoIterator<Item = &'a Frac>) -> Frac {
        let mut groups: HashMap<&Denom, Vec<&MPoly>> = HashMap::new();
        for f in items {
            assert_eq!(f.universe(), uni, "universe mismatch in sum");
            if !f.is_zero() {
                groups.entry(&f.den).or_default().push(&f.num);
            }
        }
        if groups.is_empty() {
            return Frac::zero(uni);
        }
        let mut keys: Vec<&Denom> = groups.keys().copied().collect();
        keys.sort_by(|a, b| a.factors.cmp(&b.factors).then(a.mono.cmp(&b.mono)));
        let lcm = keys
            .iter()
            .skip(1)
            .fold(keys[0].clone(), |acc, d| acc.lcm(d));
        let parts: Vec<MPoly> = keys
            .iter()
            .map(|d| {
                let num = MPoly::sum(uni, groups[d].iter().copied());
                lcm.lift(d, &num)
            })
            .collect();
        let num = MPoly::sum(uni, parts.iter());
        if num.is_zero() {
            return Frac::zero(uni);
        }
        Frac { num, den: lcm }
    }

    /// `a.num * (L / a.den) - b.num * (L / b.den)` with `L = lcm(a.den, b.den)`.
    ///
    /// Zero exactly when the two fractions are equal.
    pub fn cross_difference(&self, other: &Frac) -> MPoly {
        assert_eq!(self.universe(), other.universe(), "universe mismatch");
        if self.den == other.den {
            return &self.num - &other.num;
        }
        let lcm = self.den.lcm(&other.den);
        &lcm.lift(&self.den, &self.num) - &lcm.lift(&other.den, &other.num)
    }

    /// Semantic equality of rational functions.
    pub fn frac_eq(&self, other: &Frac) -> bool {
        if self.universe() != other.universe() {
            return false;
        }
        self.cross_difference(other).is_zero()
    }

    /// Cancels denominator factors that divide the numerator exactly, plus
    /// the integer and monomial parts. Never computes a gcd of polynomials.
    pub fn reduce(&self) -> Frac {
        let uni = self.universe();
        if self.num.is_zero() {
            return Frac::zero(uni);
        }
        let mut num = self.num.clone();
        let mut factors = BTreeMap::new();
        for (f, e) in &self.den.factors {
            let mut left = *e;
            while left > 0 {
                match num.divide_exact(f) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                factors.insert(f.clone(), left);
            }
        }
        let mut scale = self.den.scale.clone();
        let g = num.content().gcd(&scale);
        if !g.is_one() {
            num = num.scale_exact(&g);
            scale = scale.div_exact(&g).expect("gcd divides");
        }
        let mut mono = self.den.mono;
        let low = num.min_monomial();
        let mut cancel = Monomial::ONE;
        for s in 0..MAX_VARS {
            let c = mono.0[s].min(low.0[s]).max(0);
            cancel.0[s] = c;
            mono.0[s] -= c;
        }
        if !cancel.is_one() {
            num = num.mul_monomial(&cancel.inverse());
        }
        Frac {
            num,
            den: Denom::from_parts(scale, mono, factors),
        }
    }

    /// The polynomial value, if every denominator factor cancels.
    pub fn to_polynomial(&self) -> Option<MPoly> {
        let r = self.reduce();
        if r.den.is_one() {
            Some(r.num)
        } else {
            None
        }
    }

    /// Applies a monomial ring homomorphism to numerator and denominator.
    pub fn apply_map(&self, map: &MonomialMap) -> Result<Frac, AlgebraError> {
        let target = map.target();
        let mut b = FracBuilder::new(target);
        b.mul_poly(&self.num.apply_map(map));
        for (f, e) in &self.den.factors {
            let img = f.apply_map(map);
            for _ in 0..*e {
                b.div_poly(&img)?;
            }
        }
        let mono = MPoly::monomial(self.universe(), 1, self.den.mono).apply_map(map);
        b.div_poly(&mono)?;
        b.div_int(&self.den.scale)?;
        Ok(b.build())
    }

    /// `x_i -> param^{gamma_i} x_i` on the chosen block.
    pub fn shift(&self, param: Var, block: Block, gamma: &[u32]) -> Frac {
        if self.den.factors.is_empty() {
            return Frac {
                num: self.num.shift(param, block, gamma),
                den: self.den.clone(),
            };
        }
        let mut b = FracBuilder::new(self.universe());
        b.mul_poly(&self.num.shift(param, block, gamma));
        for (f, e) in &self.den.factors {
            let img = f.shift(param, block, gamma);
            for _ in 0..*e {
                b.div_poly(&img).expect("shift of a nonzero factor is nonzero");
            }
        }
        let mono = MPoly::monomial(self.universe(), self.den.scale.clone(), self.den.mono);
        b.div_poly(&mono.shift(param, block, gamma))
            .expect("nonzero monomial");
        b.build()
    }

    pub fn shift_q(&self, gamma: &[u32]) -> Frac {
        self.shift(Var::Q, Block::X, gamma)
    }

    pub fn embed(&self, target: VarUniverse) -> Result<Frac, AlgebraError> {
        if target == self.universe() {
            return Ok(self.clone());
        }
        let mut factors = Vec::with_capacity(self.den.factors.len());
        for (f, e) in &self.den.factors {
            factors.push((f.embed(target)?, *e));
        }
        let mono = MPoly::monomial(self.universe(), 1, self.den.mono)
            .embed(target)?
            .terms()[0]
            .0;
        factors.sort();
        Ok(Frac {
            num: self.num.embed(target)?,
            den: Denom {
                scale: self.den.scale.clone(),
                mono,
                factors,
            },
        })
    }

    /// Specializes `v = 0`, cancelling powers of `v` first.
    pub fn eval_zero(&self, v: Var) -> Result<Frac, AlgebraError> {
        let uni = self.universe();
        let s = uni.slot(v);
        let val = self.den.mono.0[s] as i32;
        let num = self
            .num
            .mul_monomial(&Monomial::var(&uni, v, -val))
            .eval_zero(v)?;
        let mut b = FracBuilder::new(uni);
        b.mul_poly(&num);
        for (f, e) in &self.den.factors {
            let img = f.eval_zero(v)?;
            for _ in 0..*e {
                b.div_poly(&img).map_err(|_| AlgebraError::Pole(v))?;
            }
        }
        let mut mono = self.den.mono;
        mono.0[s] = 0;
        b.div_poly(&MPoly::monomial(uni, self.den.scale.clone(), mono))?;
        Ok(b.build())
    }

    /// No negative exponent of `t`, `u` or `y` in the numerator.
    pub fn respects_sign_contract(&self) -> bool {
        self.num.respects_sign_contract()
    }
}

impl MPoly {
    /// Substitutes rational values for some variables. The values and the
    /// untouched variables must all live in `target`.
    pub fn eval_partial(
        &self,
        assignment: &[(Var, Frac)],
        target: VarUniverse,
    ) -> Result<Frac, AlgebraError> {
        let uni = self.universe();
        let mut map = MonomialMap::substitution(uni, target);
        for v in uni.vars() {
            let assigned = assignment.iter().any(|(a, _)| *a == v);
            if !assigned && !target.contains(v) && self.involves(v) {
                return Err(AlgebraError::UniverseMismatch);
            }
        }
        let mut values = Vec::with_capacity(assignment.len());
        for (v, val) in assignment {
            if val.universe() != target {
                return Err(AlgebraError::UniverseMismatch);
            }
            map.set(*v, false, Monomial::ONE);
            let inv = if val.is_zero() { None } else { Some(val.recip()?) };
            values.push((uni.slot(*v), val, inv));
        }
        let mut terms = Vec::with_capacity(self.len());
        for (m, c) in self.terms() {
            let mut rest = *m;
            let mut acc = Frac::from_poly(MPoly::constant(target, c.clone()));
            for (s, val, inv) in &values {
                let e = m.exp(*s);
                rest.0[*s] = 0;
                let base = if e >= 0 {
                    *val
                } else {
                    inv.as_ref().ok_or(AlgebraError::ZeroDenominator)?
                };
                for _ in 0..e.unsigned_abs() {
                    acc = acc.mul(base);
                }
            }
            let (neg, img) = map.apply_monomial(&rest);
            let mono = MPoly::monomial(target, if neg { -1 } else { 1 }, img);
            terms.push(acc.mul_poly(&mono));
        }
        Ok(Frac::sum(target, terms.iter()))
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        self.frac_eq(other)
    }
}

impl MPoly {
    /// Divides every coefficient by `c`, which must divide the content.
    pub fn scale_exact(&self, c: &Int) -> MPoly {
        MPoly::from_terms(
            self.universe(),
            self.terms()
                .iter()
                .map(|(m, k)| (*m, k.div_exact(c).expect("content divisible"))),
        )
    }
}

/// Displays `num` or `(num)/(den)`, with the common integer content removed.
impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let g = self.num.content().gcd(&self.den.scale);
        let (num, den) = if g.is_one() || g.is_zero() {
            (self.num.clone(), self.den())
        } else {
            (self.num.scale_exact(&g), self.den().scale_exact(&g))
        };
        if den.is_one() {
            write!(f, "{num}")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}

/// Accumulates a product of polynomial factors, cancelling equal normalized
/// factors between numerator and denominator before expanding.
pub struct FracBuilder {
    uni: VarUniverse,
    coeff: Int,
    den_scale: Int,
    mono: [i32; MAX_VARS],
    num_factors: BTreeMap<MPoly, u32>,
    den_factors: BTreeMap<MPoly, u32>,
}

impl FracBuilder {
    pub fn new(uni: VarUniverse) -> Self {
        FracBuilder {
            uni,
            coeff: Int::ONE,
            den_scale: Int::ONE,
            mono: [0; MAX_VARS],
            num_factors: BTreeMap::new(),
            den_factors: BTreeMap::new(),
        }
    }

    fn add_mono(&mut self, m: &Monomial, sign: i32) {
        for (o, e) in self.mono.iter_mut().zip(m.0.iter()) {
            *o += sign * *e as i32;
        }
    }

    pub fn mul_poly(&mut self, p: &MPoly) -> &mut Self {
        if self.coeff.is_zero() {
            return self;
        }
        if p.is_zero() {
            self.coeff = Int::ZERO;
            return self;
        }
        let (c, m, f) = p.normalize_unit();
        self.coeff = &self.coeff * &c;
        self.add_mono(&m, 1);
        if !f.is_one() {
            *self.num_factors.entry(f).or_insert(0) += 1;
        }
        self
    }

    pub fn div_poly(&mut self, p: &MPoly) -> Result<&mut Self, AlgebraError> {
        if p.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        let (c, m, f) = p.normalize_unit();
        if c.is_negative() {
            self.coeff = -&self.coeff;
        }
        self.den_scale = &self.den_scale * &c.abs();
        self.add_mono(&m, -1);
        if !f.is_one() {
            *self.den_factors.entry(f).or_insert(0) += 1;
        }
        Ok(self)
    }

    pub fn mul_monomial(&mut self, m: &Monomial) -> &mut Self {
        self.add_mono(m, 1);
        self
    }

    pub fn mul_int(&mut self, c: &Int) -> &mut Self {
        self.coeff = &self.coeff * c;
        self
    }

    pub fn div_int(&mut self, c: &Int) -> Result<&mut Self, AlgebraError> {
        if c.is_zero() {
            return Err(AlgebraError::ZeroDenominator);
        }
        if c.is_negative() {
            self.coeff = -&self.coeff;
        }
        self.den_scale = &self.den_scale * &c.abs();
        Ok(self)
    }

    pub fn mul_frac(&mut self, f: &Frac) -> &mut Self {
        self.mul_poly(&f.num);
        for (p, e) in &f.den.factors {
            *self.den_factors.entry(p.clone()).or_insert(0) += e;
        }
        self.add_mono(&f.den.mono, -1);
        self.den_scale = &self.den_scale * &f.den.scale;
        self
    }

    pub fn div_frac(&mut self, f: &Frac) -> Result<&mut Self, AlgebraError> {
        self.div_poly(&f.num)?;
        for (p, e) in &f.den.factors {
            *self.num_factors.entry(p.clone()).or_insert(0) += e;
        }
        self.add_mono(&f.den.mono, 1);
        self.coeff = &self.coeff * &f.den.scale;
        Ok(self)
    }

    pub fn build(&mut self) -> Frac {
        if self.coeff.is_zero() {
            return Frac::zero(self.uni);
        }
        for (f, e) in self.den_factors.iter_mut() {
            if let Some(ne) = self.num_factors.get_mut(f) {
                let c = (*ne).min(*e);
                *ne -= c;
                *e -= c;
            }
        }
        let mut num_mono = Monomial::ONE;
        let mut den_mono = Monomial::ONE;
        for s in 0..self.uni.width() {
            let e = self.mono[s];
            if e >= 0 || self.uni.var_at(s).is_laurent() {
                num_mono.0[s] = e as i16;
            } else {
                den_mono.0[s] = (-e) as i16;
            }
        }
        let g = self.coeff.gcd(&self.den_scale);
        let coeff = self.coeff.div_exact(&g).expect("gcd");
        let scale = self.den_scale.div_exact(&g).expect("gcd");
        let mut factors: Vec<&MPoly> = Vec::new();
        for (f, e) in &self.num_factors {
            for _ in 0..*e {
                factors.push(f);
            }
        }
        // multiply small factors first
        factors.sort_by_key(|f| f.len());
        let mut num = MPoly::monomial(self.uni, coeff, num_mono);
        for f in factors {
            num = &num * f;
        }
        let den_factors = core::mem::take(&mut self.den_factors);
        Frac {
            num,
            den: Denom::from_parts(scale, den_mono, den_factors),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uni() -> VarUniverse {
        VarUniverse::new(2, 0).unwrap()
    }

    fn v(var: Var) -> MPoly {
        MPoly::var(uni(), var)
    }

    fn one() -> MPoly {
        MPoly::one(uni())
    }

    #[test]
    fn frac_eq_examples() {
        let q = v(Var::Q);
        let a = Frac::new(&one() - &q.pow(2), &(&one() - &q)).unwrap();
        let b = Frac::from_poly(&one() + &q);
        assert!(a.frac_eq(&b));
        let (x1, x2) = (v(Var::X(0)), v(Var::X(1)));
        let c = Frac::new(x1.clone(), &x2).unwrap();
        let d = Frac::new(x2, &x1).unwrap();
        assert!(!c.frac_eq(&d));
        let z1 = Frac::new(MPoly::zero(uni()), &q).unwrap();
        let z2 = Frac::new(MPoly::zero(uni()), &(&one() + &q)).unwrap();
        assert!(z1.frac_eq(&z2));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            Frac::new(one(), &MPoly::zero(uni())).unwrap_err(),
            AlgebraError::ZeroDenominator
        );
    }

    #[test]
    fn sums_share_factors() {
        let q = v(Var::Q);
        let den = &one() - &q;
        let a = Frac::new(one(), &den).unwrap();
        let b = Frac::new(q.clone(), &den).unwrap();
        let s = a.add(&b);
        assert_eq!(s.denom().factor_count(), 1);
        let expect = Frac::new(&one() + &q, &den).unwrap();
        assert!(s.frac_eq(&expect));
        // 1/(1-q) - q/(1-q) = 1
        let d = a.sub(&b);
        assert_eq!(d.to_polynomial(), Some(one()));
    }

    #[test]
    fn reversed_binomials_share_one_factor() {
        let (x1, x2) = (v(Var::X(0)), v(Var::X(1)));
        let a = Frac::new(one(), &(&x1 - &x2)).unwrap();
        let b = Frac::new(one(), &(&x2 - &x1)).unwrap();
        let s = a.add(&b);
        assert!(s.is_zero());
        // 1 - x1/x2 normalizes to the same factor as x1 - x2
        let r = MPoly::term(uni(), 1, &[(Var::X(0), 1), (Var::X(1), -1)]);
        let c = Frac::new(one(), &(&one() - &r)).unwrap();
        assert_eq!(c.denom().factors()[0].0, a.denom().factors()[0].0);
    }

    #[test]
    fn equality_is_an_equivalence_and_respects_products() {
        let q = v(Var::Q);
        let t = v(Var::T);
        let a = Frac::new(&one() - &q.pow(2), &(&one() - &q)).unwrap();
        let b = Frac::from_poly(&one() + &q);
        let c = Frac::new(&(&one() + &q) * &(&one() + &t), &(&one() + &t)).unwrap();
        assert!(a.frac_eq(&a));
        assert!(a.frac_eq(&b) && b.frac_eq(&a));
        assert!(b.frac_eq(&c) && a.frac_eq(&c));
        let k = Frac::new(t.clone(), &(&q - &t)).unwrap();
        assert!(a.mul(&k).frac_eq(&b.mul(&k)));
    }

    #[test]
    fn reduce_cancels_known_factors() {
        let q = v(Var::Q);
        let t = v(Var::T);
        let f = Frac::new(&(&one() - &q.pow(2)) * &t.pow(2), &(&(&one() - &q) * &t)).unwrap();
        assert_eq!(f.to_polynomial(), Some(&(&one() + &q) * &t));
        let g = Frac::new(one(), &t).unwrap();
        assert!(g.to_polynomial().is_none());
    }

    #[test]
    fn eval_zero_cancels_valuation() {
        // q(1+t) / (q (1 - t q)) at q = 0 is 1 + t
        let q = v(Var::Q);
        let t = v(Var::T);
        let f = Frac::new(&q * &(&one() + &t), &(&q * &(&one() - &(&t * &q)))).unwrap();
        let z = f.eval_zero(Var::Q).unwrap();
        assert!(z.frac_eq(&Frac::from_poly(&one() + &t)));
        let pole = Frac::new(one(), &q).unwrap();
        assert!(pole.eval_zero(Var::Q).is_err());
    }

    #[test]
    fn partial_evaluation() {
        let u2 = VarUniverse::new(1, 2).unwrap();
        let u1 = VarUniverse::new(1, 0).unwrap();
        let x = MPoly::var(u1, Var::X(0));
        let q = MPoly::var(u1, Var::Q);
        let minus_inv = |p: &MPoly| Frac::new(MPoly::constant(u1, -1), p).unwrap();
        let f = &MPoly::one(u2) + &MPoly::term(u2, 1, &[(Var::X(0), 1), (Var::Y(0), 1)]);
        let r = f.eval_partial(&[(Var::Y(0), minus_inv(&x))], u1).unwrap();
        assert!(r.is_zero() || r.frac_eq(&Frac::zero(u1)));
        let g = MPoly::term(u2, 1, &[(Var::Y(0), 1), (Var::Y(1), 1)]);
        let r = g
            .eval_partial(
                &[(Var::Y(0), minus_inv(&x)), (Var::Y(1), minus_inv(&(&q * &x)))],
                u1,
            )
            .unwrap();
        assert!(r.frac_eq(&Frac::new(MPoly::one(u1), &(&q * &x.pow(2))).unwrap()));
        let h = MPoly::term(u2, 3, &[(Var::X(0), 2)]);
        let r = h.eval_partial(&[(Var::Y(0), minus_inv(&x))], u1).unwrap();
        assert_eq!(r.as_poly(), Some(&MPoly::term(u1, 3, &[(Var::X(0), 2)])));
    }

    #[test]
    fn shift_renormalizes_factors() {
        let q = v(Var::Q);
        let x1 = v(Var::X(0));
        let f = Frac::new(one(), &(&one() - &x1)).unwrap();
        let g = f.shift_q(&[2, 0]);
        let expect = Frac::new(one(), &(&one() - &(&q.pow(2) * &x1))).unwrap();
        assert!(g.frac_eq(&expect));
    }
}
