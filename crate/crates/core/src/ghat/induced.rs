use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::algebra::{bracket_units, Band, BandAlgebraElement, Block, Unit};
use super::fdmodule::{TensorFactor, TensorVec, Word};
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::partitions::SemidominantWeight;

/// A PBW basis element: sorted `a₋` monomial times a pair of tensor words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Term {
    pub mono: Vec<Unit>,
    pub neg: Word,
    pub pos: Word,
}

impl Term {
    pub fn level_of_mono(&self) -> i64 {
        self.mono.iter().map(|u| u.level() as i64).sum()
    }

    fn times(&self, u: Unit) -> Term {
        let mut mono = self.mono.clone();
        let at = mono.partition_point(|&x| x <= u);
        mono.insert(at, u);
        Term { mono, neg: self.neg.clone(), pos: self.pos.clone() }
    }

    fn indices(&self) -> impl Iterator<Item = i32> + '_ {
        self.mono
            .iter()
            .flat_map(|u| [u.row, u.col])
            .chain(self.neg.iter().copied())
            .chain(self.pos.iter().copied())
    }
}

/// Finite rational combination of PBW terms.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleVector {
    terms: BTreeMap<Term, Q>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_term(t: Term, k: Q) -> Self {
        let mut v = Self::zero();
        v.add_term(t, k);
        v
    }

    pub fn add_term(&mut self, t: Term, k: Q) {
        if k.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(k);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &ModuleVector, k: &Q) {
        for (t, c) in &other.terms {
            self.add_term(t.clone(), c * k);
        }
    }

    pub fn scale(&self, k: &Q) -> ModuleVector {
        let mut out = ModuleVector::zero();
        out.add_scaled(self, k);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, t: &Term) -> Q {
        self.terms.get(t).cloned().unwrap_or_else(Q::zero)
    }

    /// Left multiplication by an element of `S(a₋)`.
    pub fn left_mul(&self, p: &AMinusPoly) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (m, a) in &p.terms {
            for (t, b) in &self.terms {
                let mut mono = t.mono.clone();
                mono.extend_from_slice(m);
                mono.sort_unstable();
                out.add_term(Term { mono, neg: t.neg.clone(), pos: t.pos.clone() }, a * b);
            }
        }
        out
    }

    /// `λ` with `self = λ·other`, if the two vectors are proportional.
    pub fn ratio_to(&self, other: &ModuleVector) -> Option<Q> {
        let (t, b) = other.terms.iter().next()?;
        let a = self.coeff(t);
        let diff = {
            let mut d = self.clone();
            d.add_scaled(other, &-(&a / b));
            d
        };
        diff.is_zero().then(|| a / b)
    }

    pub fn max_abs_index(&self) -> i32 {
        self.terms
            .keys()
            .flat_map(|t| t.indices().map(Band::required_for).collect::<Vec<_>>())
            .max()
            .unwrap_or(1)
    }
}

impl std::ops::Sub for &ModuleVector {
    type Output = ModuleVector;

    fn sub(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Q::one());
        out
    }
}

impl std::ops::Add for &ModuleVector {
    type Output = ModuleVector;

    fn add(self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &Q::one());
        out
    }
}

fn fmt_word(f: &mut fmt::Formatter<'_>, w: &[i32]) -> fmt::Result {
    for (i, x) in w.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut i = 0;
        while i < self.mono.len() {
            let u = self.mono[i];
            let run = self.mono[i..].iter().take_while(|&&x| x == u).count();
            write!(f, "{u}")?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            write!(f, " ")?;
            i += run;
        }
        if self.neg.is_empty() && self.pos.is_empty() {
            write!(f, "v")
        } else {
            write!(f, "|")?;
            fmt_word(f, &self.neg)?;
            write!(f, ";")?;
            fmt_word(f, &self.pos)?;
            write!(f, ">")
        }
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{t}")?;
            } else {
                write!(f, "({c}) {t}")?;
            }
        }
        Ok(())
    }
}

/// Element of `S(a₋)` as sorted monomials with rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AMinusPoly {
    terms: BTreeMap<Vec<Unit>, Q>,
}

impl AMinusPoly {
    pub fn one() -> Self {
        AMinusPoly { terms: BTreeMap::from([(Vec::new(), Q::one())]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn unit(u: Unit) -> Result<Self> {
        if u.block() != Block::AMinus {
            return Err(Error::WrongKind { expected: "lower-left block unit", found: u.to_string() });
        }
        Ok(AMinusPoly { terms: BTreeMap::from([(vec![u], Q::one())]) })
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Unit>, &Q)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Vec<Unit>, k: Q) {
        let e = self.terms.entry(m.clone()).or_insert_with(Q::zero);
        *e += k;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, k: &Q) -> AMinusPoly {
        let mut out = AMinusPoly::default();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, other: &AMinusPoly) -> AMinusPoly {
        let mut out = AMinusPoly::default();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut m = a.clone();
                m.extend_from_slice(b);
                m.sort_unstable();
                out.add_term(m, x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> AMinusPoly {
        (0..k).fold(AMinusPoly::one(), |acc, _| acc.mul(self))
    }

    /// Determinant of the matrix with entries `E_{rows[r], cols[s]}`.
    pub fn det(rows: &[i32], cols: &[i32]) -> Result<AMinusPoly> {
        if rows.len() != cols.len() {
            return Err(Error::RankMismatch(rows.len(), cols.len()));
        }
        for &r in rows {
            for &c in cols {
                AMinusPoly::unit(Unit::new(r, c))?;
            }
        }
        let k = rows.len();
        let mut out = AMinusPoly::default();
        let mut perm: Vec<usize> = (0..k).collect();
        leibniz(&mut perm, 0, 1, &mut |p, s| {
            let mut m: Vec<Unit> = (0..k).map(|r| Unit::new(rows[r], cols[p[r]])).collect();
            m.sort_unstable();
            out.add_term(m, q(s));
        });
        Ok(out)
    }

    /// `Det_k = det(y_{r, k+1-s})_{r,s=1..k}`: the `k×k` block of `a₋` at the
    /// central corner, displayed with column `k` nearest the diagonal.
    pub fn det_k(k: usize) -> AMinusPoly {
        let rows: Vec<i32> = (1..=k as i32).collect();
        let cols: Vec<i32> = (0..k as i32).map(|s| s + 1 - k as i32).collect();
        AMinusPoly::det(&rows, &cols).expect("corner block lies in a₋")
    }

    /// `Det_1^{l_1} ... Det_n^{l_n}`.
    pub fn det_monomial(l: &[u32]) -> AMinusPoly {
        l.iter()
            .enumerate()
            .fold(AMinusPoly::one(), |acc, (i, &e)| acc.mul(&AMinusPoly::det_k(i + 1).pow(e)))
    }
}

fn leibniz(p: &mut Vec<usize>, k: usize, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
    if k == p.len() {
        f(p, sign);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        leibniz(p, k + 1, if i == k { sign } else { -sign }, f);
        p.swap(k, i);
    }
}

/// The module induced from `L_{χ^(1)} ⊗ L_{χ^(2)}` with `a₊` acting by zero
/// and `K` by `c`, restricted to indices inside a band.
#[derive(Clone, Debug)]
pub struct InducedModule {
    chi: SemidominantWeight,
    c: Q,
    band: Band,
    neg: TensorFactor,
    pos: TensorFactor,
}

impl InducedModule {
    pub fn new(chi: &SemidominantWeight, c: Q, band: Band) -> Result<Self> {
        let chi = SemidominantWeight::new(chi.chi1.clone(), chi.chi2.clone())?;
        let neg = TensorFactor::new(&chi.chi1);
        let pos = TensorFactor::new(&chi.chi2);
        let m = InducedModule { chi, c, band, neg, pos };
        for t in m.highest_vector().terms.keys() {
            for i in t.indices() {
                band.check(i)?;
            }
        }
        Ok(m)
    }

    pub fn chi(&self) -> &SemidominantWeight {
        &self.chi
    }

    pub fn central_charge(&self) -> &Q {
        &self.c
    }

    pub fn band(&self) -> Band {
        self.band
    }

    pub(crate) fn factors(&self) -> (&TensorFactor, &TensorFactor) {
        (&self.neg, &self.pos)
    }

    /// `v_χ`: the tensor product of the two highest weight vectors.
    pub fn highest_vector(&self) -> ModuleVector {
        product_vector(Vec::new(), self.neg.highest(), self.pos.highest())
    }

    /// Principal degree of a term.
    pub fn term_level(&self, t: &Term) -> i64 {
        t.level_of_mono() + self.neg.depth(&t.neg) + self.pos.depth(&t.pos)
    }

    /// Depth of the finite-dimensional part of a term.
    pub fn term_fd_depth(&self, t: &Term) -> i64 {
        self.neg.depth(&t.neg) + self.pos.depth(&t.pos)
    }

    /// Weight of a term as sorted nonzero `(index, value)` pairs.
    pub fn term_weight(&self, t: &Term) -> Vec<(i32, i64)> {
        let mut w: BTreeMap<i32, i64> = BTreeMap::new();
        for u in &t.mono {
            *w.entry(u.row).or_default() += 1;
            *w.entry(u.col).or_default() -= 1;
        }
        for &x in &t.neg {
            *w.entry(x).or_default() += self.neg.letter_weight();
        }
        for &x in &t.pos {
            *w.entry(x).or_default() += self.pos.letter_weight();
        }
        w.into_iter().filter(|&(_, v)| v != 0).collect()
    }

    fn check_vector(&self, v: &ModuleVector) -> Result<()> {
        for t in v.terms.keys() {
            for i in t.indices() {
                self.band.check(i)?;
            }
        }
        Ok(())
    }

    /// Action of a single matrix unit.
    pub fn act_unit(&self, u: Unit, v: &ModuleVector) -> Result<ModuleVector> {
        self.band.check_unit(u)?;
        self.check_vector(v)?;
        let mut out = ModuleVector::zero();
        for (t, k) in &v.terms {
            self.push(u, &t.mono, &t.neg, &t.pos, k, &mut out);
        }
        Ok(out)
    }

    pub fn act(&self, x: &BandAlgebraElement, v: &ModuleVector) -> Result<ModuleVector> {
        self.check_vector(v)?;
        let mut out = v.scale(&(x.central_part() * &self.c));
        for (u, k) in x.matrix_terms() {
            self.band.check_unit(u)?;
            for (t, c) in &v.terms {
                self.push(u, &t.mono, &t.neg, &t.pos, &(k * c), &mut out);
            }
        }
        Ok(out)
    }

    /// `u · (mono ⊗ w)` accumulated into `out`, commuting `u` to the right.
    fn push(&self, u: Unit, mono: &[Unit], neg: &Word, pos: &Word, k: &Q, out: &mut ModuleVector) {
        if u.block() == Block::AMinus {
            let mut m = mono.to_vec();
            let at = m.partition_point(|&x| x <= u);
            m.insert(at, u);
            out.add_term(Term { mono: m, neg: neg.clone(), pos: pos.clone() }, k.clone());
            return;
        }
        let Some((&y0, rest)) = mono.split_first() else {
            match u.block() {
                Block::Gl1 => {
                    for (w, s) in self.neg.apply_word(u, neg) {
                        out.add_term(Term { mono: Vec::new(), neg: w, pos: pos.clone() }, k * q(s));
                    }
                }
                Block::Gl2 => {
                    for (w, s) in self.pos.apply_word(u, pos) {
                        out.add_term(Term { mono: Vec::new(), neg: neg.clone(), pos: w }, k * q(s));
                    }
                }
                _ => {}
            }
            return;
        };
        let mut inner = ModuleVector::zero();
        self.push(u, rest, neg, pos, k, &mut inner);
        for (t, c) in inner.terms {
            out.add_term(t.times(y0), c);
        }
        let (m, central) = bracket_units(u, y0);
        for (w, s) in m {
            self.push(w, rest, neg, pos, &(k * q(s)), out);
        }
        if central != 0 {
            out.add_term(
                Term { mono: rest.to_vec(), neg: neg.clone(), pos: pos.clone() },
                k * q(central) * &self.c,
            );
        }
    }
}

/// `mono ⊗ (a ⊗ b)` expanded over the words of `a` and `b`.
pub fn product_vector(mono: Vec<Unit>, a: &TensorVec, b: &TensorVec) -> ModuleVector {
    let mut out = ModuleVector::zero();
    for (wa, ca) in a {
        for (wb, cb) in b {
            out.add_term(Term { mono: mono.clone(), neg: wa.clone(), pos: wb.clone() }, ca * cb);
        }
    }
    out
}
