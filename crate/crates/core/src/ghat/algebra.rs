use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{q, Q};

/// Position of a matrix unit relative to the block boundary between slots 0 and 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    /// Both indices `<= 0`.
    Gl1,
    /// Both indices `>= 1`.
    Gl2,
    /// Row `>= 1`, column `<= 0`: the abelian lower-left block.
    AMinus,
    /// Row `<= 0`, column `>= 1`: the abelian upper-right block.
    APlus,
}

/// The matrix unit `E_{row,col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Unit {
    pub row: i32,
    pub col: i32,
}

impl Unit {
    pub const fn new(row: i32, col: i32) -> Self {
        Unit { row, col }
    }

    /// `y_{ij} = E_{i, 1-j}` for `i, j >= 1`.
    pub const fn y(i: i32, j: i32) -> Self {
        Unit { row: i, col: 1 - j }
    }

    /// The corner element `e_0 = E_{0,1}` of the upper-right block.
    pub const fn e0() -> Self {
        Unit { row: 0, col: 1 }
    }

    pub fn block(&self) -> Block {
        match (self.row <= 0, self.col <= 0) {
            (true, true) => Block::Gl1,
            (false, false) => Block::Gl2,
            (false, true) => Block::AMinus,
            (true, false) => Block::APlus,
        }
    }

    /// Principal degree `row - col`; positive on lowering units.
    pub fn level(&self) -> i32 {
        self.row - self.col
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.block() == Block::AMinus {
            write!(f, "y{},{}", self.row, 1 - self.col)
        } else {
            write!(f, "E{},{}", self.row, self.col)
        }
    }
}

/// The 2-cocycle: `α(E_ij, E_ji) = 1` for `i <= 0 < j`, antisymmetric, zero otherwise.
pub fn cocycle(u: Unit, v: Unit) -> i64 {
    if u.row != v.col || u.col != v.row {
        return 0;
    }
    match (u.row <= 0, u.col <= 0) {
        (true, false) => 1,
        (false, true) => -1,
        _ => 0,
    }
}

/// `[E_ab, E_cd] = δ_bc E_ad - δ_da E_cb + α(E_ab, E_cd) K`, as (matrix part, central part).
pub fn bracket_units(u: Unit, v: Unit) -> (Vec<(Unit, i64)>, i64) {
    let mut m = Vec::with_capacity(2);
    if u.col == v.row {
        m.push((Unit::new(u.row, v.col), 1));
    }
    if v.col == u.row {
        m.push((Unit::new(v.row, u.col), -1));
    }
    // [E_aa, E_aa] and similar diagonal cases cancel
    if m.len() == 2 && m[0].0 == m[1].0 {
        m.clear();
    }
    (m, cocycle(u, v))
}

/// Indices allowed by a truncation: `-size + 1 ..= size`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Band {
    pub size: i32,
}

impl Band {
    pub fn new(size: i32) -> Self {
        Band { size: size.max(1) }
    }

    pub fn lo(&self) -> i32 {
        1 - self.size
    }

    pub fn hi(&self) -> i32 {
        self.size
    }

    pub fn contains(&self, index: i32) -> bool {
        (self.lo()..=self.hi()).contains(&index)
    }

    /// Smallest band size containing `index`.
    pub fn required_for(index: i32) -> i32 {
        if index >= 1 {
            index
        } else {
            1 - index
        }
    }

    pub fn check(&self, index: i32) -> Result<()> {
        if self.contains(index) {
            Ok(())
        } else {
            Err(Error::BandEscape {
                index,
                lo: self.lo(),
                hi: self.hi(),
                suggested: Band::required_for(index),
            })
        }
    }

    pub fn check_unit(&self, u: Unit) -> Result<()> {
        self.check(u.row)?;
        self.check(u.col)
    }
}

/// A finite combination of matrix units inside a band plus a multiple of the central element `K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BandAlgebraElement {
    band: Band,
    matrix: BTreeMap<Unit, Q>,
    central: Q,
}

impl BandAlgebraElement {
    pub fn zero(band: Band) -> Self {
        BandAlgebraElement { band, matrix: BTreeMap::new(), central: Q::zero() }
    }

    pub fn unit(band: Band, row: i32, col: i32) -> Result<Self> {
        let mut x = Self::zero(band);
        x.add_unit(Unit::new(row, col), Q::one())?;
        Ok(x)
    }

    pub fn central(band: Band, k: Q) -> Self {
        BandAlgebraElement { band, matrix: BTreeMap::new(), central: k }
    }

    pub fn band(&self) -> Band {
        self.band
    }

    pub fn add_unit(&mut self, u: Unit, k: Q) -> Result<()> {
        self.band.check_unit(u)?;
        let e = self.matrix.entry(u).or_insert_with(Q::zero);
        *e += k;
        if e.is_zero() {
            self.matrix.remove(&u);
        }
        Ok(())
    }

    pub fn add_central(&mut self, k: Q) {
        self.central += k;
    }

    pub fn matrix_terms(&self) -> impl Iterator<Item = (Unit, &Q)> {
        self.matrix.iter().map(|(&u, k)| (u, k))
    }

    pub fn central_part(&self) -> &Q {
        &self.central
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_empty() && self.central.is_zero()
    }

    pub fn scale(&self, k: &Q) -> Self {
        let mut out = Self::zero(self.band);
        for (u, c) in &self.matrix {
            out.matrix.insert(*u, c * k);
        }
        out.matrix.retain(|_, c| !c.is_zero());
        out.central = &self.central * k;
        out
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        let mut out = self.clone();
        out.band = Band::new(self.band.size.max(other.band.size));
        for (u, c) in &other.matrix {
            out.add_unit(*u, c.clone())?;
        }
        out.central += &other.central;
        Ok(out)
    }
}

/// Bracket of two band elements. Both must lie in the same band; the result
/// only uses indices of the inputs, so it stays inside that band.
pub fn bracket(x: &BandAlgebraElement, y: &BandAlgebraElement) -> Result<BandAlgebraElement> {
    let band = x.band;
    for (u, _) in y.matrix_terms() {
        band.check_unit(u)?;
    }
    let mut out = BandAlgebraElement::zero(band);
    for (u, a) in x.matrix_terms() {
        for (v, b) in y.matrix_terms() {
            let ab = a * b;
            let (m, k) = bracket_units(u, v);
            for (w, s) in m {
                out.add_unit(w, &ab * q(s))?;
            }
            if k != 0 {
                out.add_central(&ab * q(k));
            }
        }
    }
    Ok(out)
}

impl fmt::Display for BandAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (u, c) in &self.matrix {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}){u}")?;
        }
        if !self.central.is_zero() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({})K", self.central)?;
        }
        Ok(())
    }
}
