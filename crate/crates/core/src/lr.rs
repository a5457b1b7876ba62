//! Littlewood-Richardson coefficients and the Schur-polynomial oracle.
//!
//! `lr_coefficient` counts LR skew tableaux by backtracking. The oracle side
//! (`schur_poly`, `decompose_symmetric`) never looks at skew shapes: it
//! multiplies Schur polynomials over the integers and peels off leading
//! monomials, so the two routes can be compared against each other.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{OnceLock, RwLock};

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partitions::{FiniteWeight, Partition};
use crate::poly::SparsePoly;

/// A filling of the skew shape `outer / inner`.
///
/// `filling[r]` holds the entries of row `r` in the columns `inner[r]..outer[r]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub filling: Vec<Vec<u32>>,
}

impl SkewTableau {
    fn entry(&self, r: usize, c: usize) -> Option<u32> {
        let start = self.inner.row(r) as usize;
        if c < start {
            return None;
        }
        self.filling.get(r).and_then(|row| row.get(c - start)).copied()
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        for r in 0..self.outer.len() {
            let (start, end) = (self.inner.row(r) as usize, self.outer.row(r) as usize);
            if self.filling.get(r).map_or(0, Vec::len) != end.saturating_sub(start) {
                return false;
            }
            for c in start..end {
                let v = self.entry(r, c).unwrap();
                if v == 0 {
                    return false;
                }
                if c + 1 < end && self.entry(r, c + 1).unwrap() < v {
                    return false;
                }
                if r > 0 {
                    if let Some(above) = self.entry(r - 1, c) {
                        if above >= v {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Rows read right to left, top to bottom.
    pub fn reading_word(&self) -> Vec<u32> {
        self.filling.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    /// Every prefix of the reading word has at least as many `i` as `i + 1`.
    pub fn is_lattice(&self) -> bool {
        let mut counts: Vec<u32> = Vec::new();
        for v in self.reading_word() {
            let i = v as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
            if i > 0 && counts[i] > counts[i - 1] {
                return false;
            }
        }
        true
    }

    pub fn content(&self) -> Vec<u32> {
        let mut counts: Vec<u32> = Vec::new();
        for v in self.filling.iter().flatten() {
            let i = *v as usize - 1;
            if counts.len() <= i {
                counts.resize(i + 1, 0);
            }
            counts[i] += 1;
        }
        counts
    }
}

/// Backtracking over LR fillings of `outer / inner` with content `content`.
///
/// Cells are visited in reading order (rows top to bottom, right to left in a
/// row) so the lattice condition can be checked incrementally.
struct LrSearch<'a> {
    inner: &'a Partition,
    outer: &'a Partition,
    content: &'a [u32],
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<u32>>,
    counts: Vec<u32>,
}

impl<'a> LrSearch<'a> {
    fn new(inner: &'a Partition, outer: &'a Partition, content: &'a [u32]) -> Self {
        let mut cells = Vec::new();
        for r in 0..outer.len() {
            for c in (inner.row(r)..outer.row(r)).rev() {
                cells.push((r, c as usize));
            }
        }
        LrSearch {
            inner,
            outer,
            content,
            cells,
            grid: outer.rows().iter().map(|&w| vec![0; w as usize]).collect(),
            counts: vec![0; content.len()],
        }
    }

    fn run<F: FnMut(&[Vec<u32>])>(&mut self, idx: usize, visit: &mut F) {
        if idx == self.cells.len() {
            visit(&self.grid);
            return;
        }
        let (r, c) = self.cells[idx];
        let mut hi = (r as u32 + 1).min(self.content.len() as u32);
        if c + 1 < self.outer.row(r) as usize {
            hi = hi.min(self.grid[r][c + 1]);
        }
        let lo = if r > 0 && c >= self.inner.row(r - 1) as usize { self.grid[r - 1][c] + 1 } else { 1 };
        for v in lo..=hi {
            let i = v as usize - 1;
            if self.counts[i] >= self.content[i] || (i > 0 && self.counts[i] >= self.counts[i - 1]) {
                continue;
            }
            self.counts[i] += 1;
            self.grid[r][c] = v;
            self.run(idx + 1, visit);
            self.counts[i] -= 1;
        }
        self.grid[r][c] = 0;
    }
}

fn lr_shape_admissible(lambda: &Partition, mu: &Partition, nu: &Partition) -> bool {
    nu.size() == lambda.size() + mu.size() && nu.contains(lambda) && nu.contains(mu)
}

/// All LR tableaux of shape `nu / lambda` with content `mu`.
pub fn lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> Vec<SkewTableau> {
    if !lr_shape_admissible(lambda, mu, nu) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut search = LrSearch::new(lambda, nu, mu.rows());
    search.run(0, &mut |grid| {
        let filling = grid
            .iter()
            .enumerate()
            .map(|(r, row)| row[lambda.row(r) as usize..].to_vec())
            .collect();
        out.push(SkewTableau { outer: nu.clone(), inner: lambda.clone(), filling });
    });
    out
}

fn lr_count(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lr_shape_admissible(lambda, mu, nu) {
        return 0;
    }
    let mut count = 0u64;
    LrSearch::new(lambda, nu, mu.rows()).run(0, &mut |_| count += 1);
    count
}

type LrKey = (Partition, Partition, Partition);

fn lr_cache() -> &'static RwLock<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `c^ν_{λμ}`: the multiplicity of `ν` in `λ ⊗ μ`. Memoized.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if !lr_shape_admissible(lambda, mu, nu) {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&c) = lr_cache().read().unwrap().get(&key) {
        return c;
    }
    let c = lr_count(lambda, mu, nu);
    lr_cache().write().unwrap().insert(key, c);
    c
}

/// Finite multiset of keys with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionTable<K: Ord> {
    entries: BTreeMap<K, u64>,
}

impl<K: Ord> Default for DecompositionTable<K> {
    fn default() -> Self {
        DecompositionTable { entries: BTreeMap::new() }
    }
}

impl<K: Ord> DecompositionTable<K> {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `mult` copies of `key`; zero multiplicities are not stored.
    pub fn add(&mut self, key: K, mult: u64) {
        if mult > 0 {
            *self.entries.entry(key).or_insert(0) += mult;
        }
    }

    pub fn get(&self, key: &K) -> u64 {
        self.entries.get(key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u64)> {
        self.entries.iter().map(|(k, &m)| (k, m))
    }
}

impl<K: Ord + fmt::Display> DecompositionTable<K> {
    /// `key<TAB>multiplicity` lines.
    pub fn to_tsv(&self) -> String {
        self.entries.iter().map(|(k, m)| format!("{k}\t{m}\n")).collect()
    }
}

impl<K: Ord> FromIterator<(K, u64)> for DecompositionTable<K> {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        let mut t = Self::new();
        for (k, m) in iter {
            t.add(k, m);
        }
        t
    }
}

impl<K: Ord + fmt::Display> Serialize for DecompositionTable<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (k, m) in &self.entries {
            map.serialize_entry(&k.to_string(), m)?;
        }
        map.end()
    }
}

/// All `ν` with `c^ν_{λμ} > 0`, optionally restricted to at most `row_bound` rows.
pub fn tensor_decompose(lambda: &Partition, mu: &Partition, row_bound: Option<usize>) -> DecompositionTable<Partition> {
    let max_len = (lambda.len() + mu.len()).min(row_bound.unwrap_or(usize::MAX));
    Partition::all_of_size_bounded(lambda.size() + mu.size(), max_len)
        .into_iter()
        .filter(|nu| nu.contains(lambda) && nu.contains(mu))
        .map(|nu| {
            let c = lr_coefficient(lambda, mu, &nu);
            (nu, c)
        })
        .collect()
}

/// Visits every semistandard tableau of shape `shape` with entries `<= n`,
/// passing its content vector (length `n`).
fn for_each_ssyt<F: FnMut(&[u32])>(shape: &Partition, n: usize, visit: &mut F) {
    fn go<F: FnMut(&[u32])>(
        shape: &Partition,
        n: u32,
        cells: &[(usize, usize)],
        idx: usize,
        grid: &mut Vec<Vec<u32>>,
        content: &mut Vec<u32>,
        visit: &mut F,
    ) {
        if idx == cells.len() {
            visit(content);
            return;
        }
        let (r, c) = cells[idx];
        let left = if c > 0 { grid[r][c - 1] } else { 1 };
        let above = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        // Column below still needs room: entries in rows r..len(column) strictly increase.
        let col_len = shape.rows().iter().filter(|&&w| w as usize > c).count();
        let hi = n - (col_len - r - 1) as u32;
        for v in left.max(above)..=hi {
            grid[r][c] = v;
            content[v as usize - 1] += 1;
            go(shape, n, cells, idx + 1, grid, content, visit);
            content[v as usize - 1] -= 1;
        }
    }
    if shape.len() > n {
        return;
    }
    let cells: Vec<(usize, usize)> =
        (0..shape.len()).flat_map(|r| (0..shape.row(r) as usize).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<u32>> = shape.rows().iter().map(|&w| vec![0; w as usize]).collect();
    let mut content = vec![0u32; n];
    go(shape, n as u32, &cells, 0, &mut grid, &mut content, visit);
}

/// The Schur polynomial `s_λ(x_1, ..., x_n)` as a sum over semistandard tableaux.
pub fn schur_poly(lambda: &Partition, n: usize) -> SparsePoly {
    let mut p = SparsePoly::zero(n);
    for_each_ssyt(lambda, n, &mut |content| p.add_term(content.to_vec(), 1));
    p
}

/// Number of semistandard tableaux of shape `λ` with entries `<= n`.
pub fn ssyt_count(lambda: &Partition, n: usize) -> u64 {
    let mut count = 0;
    for_each_ssyt(lambda, n, &mut |_| count += 1);
    count
}

/// Kostka number `K_{λ,content}`, by stripping horizontal strips for the largest letter.
pub fn kostka(lambda: &Partition, content: &[u32]) -> u64 {
    fn strips(lambda: &[u32], size: u32, r: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if r == lambda.len() {
            if size == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let floor = lambda.get(r + 1).copied().unwrap_or(0);
        for kappa in (floor..=lambda[r]).rev() {
            let removed = lambda[r] - kappa;
            if removed > size {
                break;
            }
            cur.push(kappa);
            strips(lambda, size - removed, r + 1, cur, out);
            cur.pop();
        }
    }
    fn go(lambda: &Partition, content: &[u32], memo: &mut HashMap<(Partition, usize), u64>) -> u64 {
        let Some((&last, rest)) = content.split_last() else {
            return lambda.is_empty() as u64;
        };
        if lambda.size() != content.iter().sum::<u32>() {
            return 0;
        }
        let key = (lambda.clone(), content.len());
        if let Some(&k) = memo.get(&key) {
            return k;
        }
        let mut out = Vec::new();
        strips(lambda.rows(), last, 0, &mut Vec::new(), &mut out);
        let total = out.into_iter().map(|kappa| go(&Partition::from_parts(kappa), rest, memo)).sum();
        memo.insert(key, total);
        total
    }
    go(lambda, content, &mut HashMap::new())
}

fn is_weakly_decreasing(e: &[u32]) -> bool {
    e.windows(2).all(|w| w[0] >= w[1])
}

fn distinct_permutations(e: &[u32]) -> u64 {
    let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
    for &x in e {
        *mult.entry(x).or_insert(0) += 1;
    }
    let fact = |k: u64| (1..=k).product::<u64>();
    fact(e.len() as u64) / mult.values().map(|&m| fact(m)).product::<u64>()
}

/// Expands a symmetric polynomial in the Schur basis.
///
/// Symmetry is verified by an orbit check: every monomial must carry the
/// coefficient of its sorted representative, and each orbit must be complete.
/// Elimination then works on the dominant (partition-shaped) monomials only:
/// the lexicographically largest one is the leading term of exactly one Schur
/// polynomial, whose Kostka numbers are subtracted.
pub fn decompose_symmetric(p: &SparsePoly, n: usize) -> Result<DecompositionTable<Partition>> {
    if p.nvars() != n {
        return Err(Error::RankMismatch(p.nvars(), n));
    }
    let mut orbit_sizes: HashMap<Vec<u32>, u64> = HashMap::new();
    for (e, c) in p.terms() {
        let mut sorted = e.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        if p.coeff(&sorted) != c {
            return Err(Error::NotSymmetric(n));
        }
        *orbit_sizes.entry(sorted).or_insert(0) += 1;
    }
    if orbit_sizes.iter().any(|(e, &k)| k != distinct_permutations(e)) {
        return Err(Error::NotSymmetric(n));
    }

    let mut dominant: BTreeMap<Partition, i64> = p
        .terms()
        .filter(|(e, _)| is_weakly_decreasing(e))
        .map(|(e, c)| (Partition::from_parts(e.clone()), c))
        .collect();
    let mut table = DecompositionTable::new();
    while let Some((lead, a)) = dominant.pop_last() {
        if a < 0 {
            return Err(Error::NotSchurPositive(lead.to_string()));
        }
        for mu in Partition::all_of_size_bounded(lead.size(), n) {
            if mu >= lead || !lead.dominates(&mu) {
                continue;
            }
            let k = kostka(&lead, mu.rows()) as i64;
            if k != 0 {
                let e = dominant.entry(mu.clone()).or_insert(0);
                *e -= a * k;
                if *e == 0 {
                    dominant.remove(&mu);
                }
            }
        }
        table.add(lead, a as u64);
    }
    Ok(table)
}

fn check_rank(w: &FiniteWeight, n: usize) -> Result<()> {
    if w.rank() != n {
        return Err(Error::RankMismatch(w.rank(), n));
    }
    if !w.is_dominant() {
        return Err(Error::NotDominant(w.to_string()));
    }
    Ok(())
}

fn to_partition(w: &FiniteWeight) -> Option<Partition> {
    Partition::new(w.entries().iter().copied()).ok()
}

/// Multiplicity of the `gl_N` irreducible `ν` in `λ ⊗ μ` for dominant integral
/// weights with entries of either sign, by shifting all three to partitions.
pub fn rational_tensor_coefficient(
    lambda: &FiniteWeight,
    mu: &FiniteWeight,
    nu: &FiniteWeight,
    n: usize,
) -> Result<u64> {
    check_rank(lambda, n)?;
    check_rank(mu, n)?;
    check_rank(nu, n)?;
    if nu.total() != lambda.total() + mu.total() {
        return Ok(0);
    }
    let shift = |w: &FiniteWeight| (-w.entries().iter().copied().min().unwrap_or(0)).max(0);
    let (k, m) = (shift(lambda), shift(mu));
    let (Some(l), Some(u), Some(v)) =
        (to_partition(&lambda.shifted(k)), to_partition(&mu.shifted(m)), to_partition(&nu.shifted(k + m)))
    else {
        return Ok(0);
    };
    Ok(lr_coefficient(&l, &u, &v))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(rows: &[u32]) -> Partition {
        Partition::from_parts(rows.to_vec())
    }

    #[test]
    fn lr_basic_values() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[2, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[1, 1, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1, 1]), &p(&[3])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        // size and containment violations
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])), 0);
    }

    #[test]
    fn trivial_factor() {
        for lam in Partition::all_up_to(6) {
            assert_eq!(lr_coefficient(&lam, &Partition::empty(), &lam), 1);
            assert_eq!(lr_coefficient(&Partition::empty(), &lam, &lam), 1);
        }
    }

    #[test]
    fn enumerated_tableaux_are_lr() {
        let (l, m, n) = (p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1]));
        let tabs = lr_tableaux(&l, &m, &n);
        assert_eq!(tabs.len(), 2);
        for t in &tabs {
            assert!(t.is_semistandard());
            assert!(t.is_lattice());
            assert_eq!(t.content(), vec![2, 1]);
        }
        let bad = SkewTableau { outer: p(&[2]), inner: p(&[]), filling: vec![vec![2, 1]] };
        assert!(!bad.is_semistandard());
        let nonlattice = SkewTableau { outer: p(&[2]), inner: p(&[]), filling: vec![vec![1, 2]] };
        assert!(nonlattice.is_semistandard());
        assert!(!nonlattice.is_lattice());
    }

    #[test]
    fn decompose_examples() {
        let t = tensor_decompose(&Partition::empty(), &p(&[3, 1]), None);
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![(&p(&[3, 1]), 1)]);
        let t = tensor_decompose(&p(&[1]), &p(&[1]), None);
        assert_eq!(t.len(), 2);
        assert_eq!(t.get(&p(&[2])), 1);
        assert_eq!(t.get(&p(&[1, 1])), 1);
        let bounded = tensor_decompose(&p(&[1]), &p(&[1]), Some(1));
        assert_eq!(bounded.len(), 1);
        assert_eq!(t.to_tsv(), "[1,1]\t1\n[2]\t1\n");
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_poly(&Partition::empty(), 3), SparsePoly::one(3));
        assert_eq!(schur_poly(&p(&[1]), 2), &SparsePoly::var(2, 0) + &SparsePoly::var(2, 1));
        let s = schur_poly(&p(&[2, 1]), 3);
        assert_eq!(s.coeff(&[2, 1, 0]), 1);
        assert_eq!(s.coeff(&[1, 1, 1]), 2);
        assert_eq!(s.num_terms(), 7);
        assert_eq!(s.eval_ones(), 8);
        assert!(schur_poly(&p(&[1, 1, 1]), 2).is_zero());
        assert_eq!(ssyt_count(&p(&[2, 1]), 3), 8);
    }

    #[test]
    fn kostka_matches_schur_coefficients() {
        for lam in Partition::all_up_to(5) {
            let n = 4;
            let s = schur_poly(&lam, n);
            for mu in Partition::all_of_size_bounded(lam.size(), n) {
                let mut e = mu.rows().to_vec();
                e.resize(n, 0);
                assert_eq!(kostka(&lam, mu.rows()) as i64, s.coeff(&e), "K_{lam},{mu}");
            }
        }
    }

    #[test]
    fn oracle_decomposition_examples() {
        let t = decompose_symmetric(&schur_poly(&p(&[3, 1]), 4), 4).unwrap();
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![(&p(&[3, 1]), 1)]);

        let s1 = schur_poly(&p(&[1]), 2);
        let t = decompose_symmetric(&(&s1 * &s1), 2).unwrap();
        assert_eq!(t.get(&p(&[2])), 1);
        assert_eq!(t.get(&p(&[1, 1])), 1);
        assert_eq!(t.len(), 2);

        let prod = &schur_poly(&p(&[2, 1]), 3) * &schur_poly(&p(&[1]), 3);
        let oracle = decompose_symmetric(&prod, 3).unwrap();
        assert_eq!(oracle, tensor_decompose(&p(&[2, 1]), &p(&[1]), Some(3)));
    }

    #[test]
    fn oracle_rejects_non_symmetric() {
        let x1 = SparsePoly::var(2, 0);
        assert_eq!(decompose_symmetric(&x1, 2), Err(Error::NotSymmetric(2)));
        let x1sq = x1.pow(2);
        assert_eq!(decompose_symmetric(&x1sq, 2), Err(Error::NotSymmetric(2)));
        let neg = schur_poly(&p(&[1, 1]), 2).scale(-1);
        assert!(matches!(decompose_symmetric(&neg, 2), Err(Error::NotSchurPositive(_))));
        assert!(decompose_symmetric(&x1, 3).is_err());
    }

    #[test]
    fn mixed_tensor_examples() {
        let w = |v: &[i64]| FiniteWeight::new(v.to_vec());
        for n in 2..=5usize {
            let mut dual = vec![0; n];
            dual[n - 1] = -1;
            let mut vec_ = vec![0; n];
            vec_[0] = 1;
            let mut adj = vec![0; n];
            adj[0] = 1;
            adj[n - 1] = -1;
            let c = |nu: &[i64]| rational_tensor_coefficient(&w(&dual), &w(&vec_), &w(nu), n).unwrap();
            assert_eq!(c(&adj), 1);
            assert_eq!(c(&vec![0; n]), 1);
            let mut other = vec![0; n];
            other[0] = 2;
            other[n - 1] = -2;
            assert_eq!(c(&other), 0);
        }
        let lam = w(&[2, 0, -1]);
        let zero = FiniteWeight::zero(3);
        assert_eq!(rational_tensor_coefficient(&lam, &zero, &lam, 3).unwrap(), 1);
        assert_eq!(rational_tensor_coefficient(&lam, &zero, &w(&[1, 0, 0]), 3).unwrap(), 0);
        assert!(rational_tensor_coefficient(&w(&[0, 1]), &w(&[0, 0]), &w(&[0, 1]), 2).is_err());
        assert!(rational_tensor_coefficient(&w(&[0, 0]), &w(&[0, 0]), &w(&[0, 0, 0]), 2).is_err());
    }

    #[test]
    fn mixed_tensor_matches_laurent_oracle_in_two_variables() {
        // V* ⊗ V for gl_2: shift V* by det to (1,0), multiply characters, shift back.
        let s = &schur_poly(&p(&[1]), 2) * &schur_poly(&p(&[1]), 2);
        let t = decompose_symmetric(&s, 2).unwrap();
        let w = |v: &[i64]| FiniteWeight::new(v.to_vec());
        for (nu, m) in t.iter() {
            let unshifted = w(&[nu.row(0) as i64 - 1, nu.row(1) as i64 - 1]);
            assert_eq!(rational_tensor_coefficient(&w(&[0, -1]), &w(&[1, 0]), &unshifted, 2).unwrap(), m);
        }
        assert_eq!(rational_tensor_coefficient(&w(&[0, -1]), &w(&[1, 0]), &w(&[1, -1]), 2).unwrap(), 1);
        assert_eq!(rational_tensor_coefficient(&w(&[0, -1]), &w(&[1, 0]), &w(&[0, 0]), 2).unwrap(), 1);
    }
}
