//! Sparse multivariate polynomials with exact integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exponent vector; its length is the number of variables of the owning polynomial.
pub type Exponents = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Exponents, i64>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, 1);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponents, i64)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, i64)> {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn coeff(&self, e: &[u32]) -> i64 {
        self.terms.get(e).copied().unwrap_or(0)
    }

    /// Adds `c * x^e`, dropping the term if it cancels.
    pub fn add_term(&mut self, e: Exponents, c: i64) {
        assert_eq!(e.len(), self.nvars, "exponent vector has wrong length");
        if c == 0 {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
        }
    }

    /// Lexicographically largest exponent, if any.
    pub fn leading_term(&self) -> Option<(&Exponents, i64)> {
        self.terms.iter().next_back().map(|(e, &c)| (e, c))
    }

    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == degree)
    }

    pub fn scale(&self, k: i64) -> SparsePoly {
        SparsePoly::from_terms(self.nvars, self.terms.iter().map(|(e, &c)| (e.clone(), c * k)))
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        (0..k).fold(SparsePoly::one(self.nvars), |acc, _| &acc * self)
    }

    /// Value with every variable set to 1.
    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn partial(&self, var: usize) -> SparsePoly {
        let mut out = SparsePoly::zero(self.nvars);
        for (e, &c) in &self.terms {
            if e[var] > 0 {
                let mut f = e.clone();
                f[var] -= 1;
                out.add_term(f, c * e[var] as i64);
            }
        }
        out
    }

    /// Applies the derivation sending each variable `v` to `image(v)`, a linear
    /// combination of variables.
    pub fn derive_by<F>(&self, image: F) -> SparsePoly
    where
        F: Fn(usize) -> Vec<(usize, i64)>,
    {
        let mut out = SparsePoly::zero(self.nvars);
        let images: Vec<Vec<(usize, i64)>> = (0..self.nvars).map(&image).collect();
        for (e, &c) in &self.terms {
            for (v, img) in images.iter().enumerate() {
                if e[v] == 0 {
                    continue;
                }
                for &(w, k) in img {
                    let mut f = e.clone();
                    f[v] -= 1;
                    f[w] += 1;
                    out.add_term(f, c * e[v] as i64 * k);
                }
            }
        }
        out
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;

    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, &c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;

    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self + &(-rhs)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;

    fn neg(self) -> SparsePoly {
        self.scale(-1)
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;

    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, rhs.nvars);
        let mut acc: HashMap<Exponents, i64> = HashMap::with_capacity(self.terms.len() * 4);
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let e: Exponents = a.iter().zip(b).map(|(x, y)| x + y).collect();
                *acc.entry(e).or_insert(0) += ca * cb;
            }
        }
        SparsePoly {
            nvars: self.nvars,
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, &c)) in self.terms.iter().rev().enumerate() {
            match (i, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if mag != 1 || is_const {
                write!(f, "{mag}")?;
            }
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "x{}", v + 1)?,
                    _ => write!(f, "x{}^{k}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = SparsePoly::var(2, 0);
        let y = SparsePoly::var(2, 1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.coeff(&[1, 1]), 2);
        assert_eq!(sq.coeff(&[2, 0]), 1);
        assert_eq!(sq.num_terms(), 3);
        assert!((&sq - &sq).is_zero());
        assert_eq!(s.pow(3).eval_ones(), 8);
        assert_eq!(sq.to_string(), "x1^2 + 2x1x2 + x2^2");
    }

    #[test]
    fn derivations() {
        let x = SparsePoly::var(2, 0);
        let y = SparsePoly::var(2, 1);
        let p = &x.pow(2) * &y;
        assert_eq!(p.partial(0), (&x * &y).scale(2));
        // x d/dy applied to x^2 y
        let q = p.derive_by(|v| if v == 1 { vec![(0, 1)] } else { vec![] });
        assert_eq!(q, x.pow(3));
        assert!(SparsePoly::one(2).derive_by(|v| vec![(v, 1)]).is_zero());
    }
}
