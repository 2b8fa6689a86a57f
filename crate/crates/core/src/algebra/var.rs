//! Variables, the ambient variable universe, and exponent vectors.

use core::fmt;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::AlgebraError;

/// Maximum number of exponent slots: `q, t, u` plus the x- and y-blocks.
pub const MAX_VARS: usize = 12;

/// A named indeterminate. `X(i)` and `Y(j)` are zero-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Q,
    T,
    U,
    X(u8),
    Y(u8),
}

impl Var {
    /// Only `q` and the x-variables may carry negative exponents.
    pub fn is_laurent(self) -> bool {
        matches!(self, Var::Q | Var::X(_))
    }

    pub fn name(self) -> String {
        match self {
            Var::Q => "q".into(),
            Var::T => "t".into(),
            Var::U => "u".into(),
            Var::X(i) => format!("x{}", i + 1),
            Var::Y(j) => format!("y{}", j + 1),
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        match s {
            "q" => Some(Var::Q),
            "t" => Some(Var::T),
            "u" => Some(Var::U),
            _ => {
                let (head, idx) = s.split_at(1);
                let i: u8 = idx.parse().ok()?;
                if i == 0 {
                    return None;
                }
                match head {
                    "x" => Some(Var::X(i - 1)),
                    "y" => Some(Var::Y(i - 1)),
                    _ => None,
                }
            }
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Which block of variables an operator acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Block {
    X,
    Y,
}

impl Block {
    pub fn var(self, i: usize) -> Var {
        match self {
            Block::X => Var::X(i as u8),
            Block::Y => Var::Y(i as u8),
        }
    }
}

/// The ambient variables of a computation.
///
/// Exponent slots are laid out as `[q, t, u, x_1..x_n, y_1..y_m]`; the
/// presence flags decide which of `q, t, u` are part of the universe (and so
/// which appear in serialized output), the slot layout never changes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarUniverse {
    has_q: bool,
    has_t: bool,
    has_u: bool,
    n_x: u8,
    n_y: u8,
}

impl VarUniverse {
    /// Universe over `q, t, x_1..x_n, y_1..y_m`.
    pub fn new(n_x: usize, n_y: usize) -> Result<Self, AlgebraError> {
        if n_x == 0 {
            return Err(AlgebraError::EmptyXBlock);
        }
        if 3 + n_x + n_y > MAX_VARS {
            return Err(AlgebraError::TooManyVariables(n_x + n_y));
        }
        Ok(VarUniverse {
            has_q: true,
            has_t: true,
            has_u: false,
            n_x: n_x as u8,
            n_y: n_y as u8,
        })
    }

    /// Universe over `q, t` alone, where coefficients in the monomial basis live.
    pub fn scalars() -> Self {
        VarUniverse {
            has_q: true,
            has_t: true,
            has_u: false,
            n_x: 0,
            n_y: 0,
        }
    }

    /// Universe over an explicit list of variables.
    pub fn from_vars(vars: &[Var]) -> Result<Self, AlgebraError> {
        let n_x = vars.iter().filter(|v| matches!(v, Var::X(_))).count();
        let n_y = vars.iter().filter(|v| matches!(v, Var::Y(_))).count();
        let mut uni = if n_x == 0 && n_y == 0 {
            VarUniverse::scalars()
        } else {
            VarUniverse::new(n_x, n_y)?
        };
        uni.has_q = vars.contains(&Var::Q);
        uni.has_t = vars.contains(&Var::T);
        uni.has_u = vars.contains(&Var::U);
        // every declared variable must be the dense one at its position
        if uni.vars().collect::<Vec<_>>() != vars {
            return Err(AlgebraError::BadVariableList);
        }
        Ok(uni)
    }

    pub fn with_u(mut self) -> Self {
        self.has_u = true;
        self
    }

    pub fn n_x(&self) -> usize {
        self.n_x as usize
    }

    pub fn n_y(&self) -> usize {
        self.n_y as usize
    }

    pub fn has_u(&self) -> bool {
        self.has_u
    }

    pub fn block_len(&self, block: Block) -> usize {
        match block {
            Block::X => self.n_x(),
            Block::Y => self.n_y(),
        }
    }

    pub fn contains(&self, v: Var) -> bool {
        match v {
            Var::Q => self.has_q,
            Var::T => self.has_t,
            Var::U => self.has_u,
            Var::X(i) => i < self.n_x,
            Var::Y(j) => j < self.n_y,
        }
    }

    /// Exponent slot of `v`. Panics if `v` is outside the universe.
    #[inline]
    pub fn slot(&self, v: Var) -> usize {
        assert!(self.contains(v), "variable {v} not in universe");
        match v {
            Var::Q => 0,
            Var::T => 1,
            Var::U => 2,
            Var::X(i) => 3 + i as usize,
            Var::Y(j) => 3 + self.n_x as usize + j as usize,
        }
    }

    /// Number of exponent slots in use.
    pub fn width(&self) -> usize {
        3 + self.n_x as usize + self.n_y as usize
    }

    pub fn var_at(&self, slot: usize) -> Var {
        match slot {
            0 => Var::Q,
            1 => Var::T,
            2 => Var::U,
            s if s < 3 + self.n_x as usize => Var::X((s - 3) as u8),
            s => Var::Y((s - 3 - self.n_x as usize) as u8),
        }
    }

    /// Present variables in id order.
    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.width())
            .map(|s| self.var_at(s))
            .filter(|v| self.contains(*v))
    }
}

/// Exponent vector indexed by universe slot. Unused slots stay zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub [i16; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn var(uni: &VarUniverse, v: Var, e: i32) -> Monomial {
        let mut m = Monomial::ONE;
        m.0[uni.slot(v)] = e as i16;
        m
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = [0i16; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a + b;
        }
        Monomial(out)
    }

    #[inline]
    pub fn div(&self, other: &Monomial) -> Monomial {
        let mut out = [0i16; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(other.0.iter())) {
            *o = a - b;
        }
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial::ONE.div(self)
    }

    pub fn pow(&self, e: i32) -> Monomial {
        let mut out = self.0;
        for o in out.iter_mut() {
            *o = (*o as i32 * e) as i16;
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (o, b) in out.iter_mut().zip(other.0.iter()) {
            *o = (*o).min(*b);
        }
        Monomial(out)
    }

    pub fn join(&self, other: &Monomial) -> Monomial {
        let mut out = self.0;
        for (o, b) in out.iter_mut().zip(other.0.iter()) {
            *o = (*o).max(*b);
        }
        Monomial(out)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a >= b)
    }

    /// Componentwise positive part.
    pub fn positive_part(&self) -> Monomial {
        let mut out = self.0;
        for o in out.iter_mut() {
            *o = (*o).max(0);
        }
        Monomial(out)
    }

    #[inline]
    pub fn exp(&self, slot: usize) -> i32 {
        self.0[slot] as i32
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0)
    }
}

/// A ring homomorphism sending each variable to `±` a Laurent monomial.
///
/// q-shifts (`x_i -> q^k x_i`), interpolation-point substitutions
/// (`y_k -> -1/(q^v x_i)`), renamings (`q <-> t`, `x -> y`) and universe
/// embeddings are all of this shape.
#[derive(Clone, Debug)]
pub struct MonomialMap {
    pub(crate) source: VarUniverse,
    pub(crate) target: VarUniverse,
    pub(crate) images: [(bool, Monomial); MAX_VARS],
}

impl MonomialMap {
    /// The identity on `source`, landing in `target` slot-by-variable.
    pub fn embedding(source: VarUniverse, target: VarUniverse) -> Result<Self, AlgebraError> {
        let mut images = [(false, Monomial::ONE); MAX_VARS];
        for v in source.vars() {
            if !target.contains(v) {
                return Err(AlgebraError::UniverseMismatch);
            }
            images[source.slot(v)] = (false, Monomial::var(&target, v, 1));
        }
        Ok(MonomialMap {
            source,
            target,
            images,
        })
    }

    /// Identity on the variables `source` shares with `target`; every other
    /// variable goes to 1 until [`MonomialMap::set`] assigns it.
    pub fn substitution(source: VarUniverse, target: VarUniverse) -> Self {
        let mut images = [(false, Monomial::ONE); MAX_VARS];
        for v in source.vars() {
            if target.contains(v) {
                images[source.slot(v)] = (false, Monomial::var(&target, v, 1));
            }
        }
        MonomialMap {
            source,
            target,
            images,
        }
    }

    /// Identity map on one universe.
    pub fn identity(uni: VarUniverse) -> Self {
        Self::embedding(uni, uni).expect("universe embeds in itself")
    }

    /// Send `v` to `sign * mono`, `sign` negative when `negate` is set.
    pub fn set(&mut self, v: Var, negate: bool, mono: Monomial) -> &mut Self {
        let slot = self.source.slot(v);
        self.images[slot] = (negate, mono);
        self
    }

    pub fn source(&self) -> VarUniverse {
        self.source
    }

    pub fn target(&self) -> VarUniverse {
        self.target
    }

    /// Image of a monomial: the sign flag and the target monomial.
    #[inline]
    pub fn apply_monomial(&self, m: &Monomial) -> (bool, Monomial) {
        let mut out = Monomial::ONE;
        let mut neg = false;
        for slot in 0..self.source.width() {
            let e = m.0[slot];
            if e == 0 {
                continue;
            }
            let (flip, img) = &self.images[slot];
            if *flip && e % 2 != 0 {
                neg = !neg;
            }
            for (o, i) in out.0.iter_mut().zip(img.0.iter()) {
                *o += i * e;
            }
        }
        (neg, out)
    }
}
