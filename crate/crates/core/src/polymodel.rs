//! The symmetric algebra of the lower-left block of `gl_{2n}` as a module over
//! the two diagonal blocks `gl_n^(1) ⊕ gl_n^(2)`.
//!
//! Matrix units of `gl_{2n}` are 1-based. The coordinate `y_{ij}` is the unit
//! `E_{n+i, n-j+1}`; every action below is derived from the matrix bracket
//! `[E_ab, E_cd] = δ_bc E_ad - δ_da E_cb` applied as a derivation.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::lr::{ssyt_count, DecompositionTable};
use crate::partitions::{fig2_partition, theta_weight_pair, ColumnLengths, Partition};
use crate::poly::{Exponents, SparsePoly};

/// The `n x n` grid of variables `y_{ij}`, `i, j in 1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyVariableGrid {
    n: usize,
}

impl PolyVariableGrid {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        PolyVariableGrid { n }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn nvars(&self) -> usize {
        self.n * self.n
    }

    pub fn var(&self, i: usize, j: usize) -> usize {
        (i - 1) * self.n + (j - 1)
    }

    pub fn ij(&self, v: usize) -> (usize, usize) {
        (v / self.n + 1, v % self.n + 1)
    }

    /// The matrix unit `(row, col)` of `gl_{2n}` behind variable `v`.
    pub fn unit(&self, v: usize) -> (usize, usize) {
        let (i, j) = self.ij(v);
        (self.n + i, self.n - j + 1)
    }

    pub fn var_of_unit(&self, row: usize, col: usize) -> Option<usize> {
        let n = self.n;
        if (n + 1..=2 * n).contains(&row) && (1..=n).contains(&col) {
            Some(self.var(row - n, n - col + 1))
        } else {
            None
        }
    }

    pub fn y(&self, i: usize, j: usize) -> SparsePoly {
        SparsePoly::var(self.nvars(), self.var(i, j))
    }

    /// Cartan weight of a monomial: eigenvalues of `E_11, ..., E_{2n,2n}`.
    pub fn weight(&self, e: &[u32]) -> Vec<i64> {
        let mut w = vec![0i64; 2 * self.n];
        for (v, &k) in e.iter().enumerate() {
            let (row, col) = self.unit(v);
            w[row - 1] += k as i64;
            w[col - 1] -= k as i64;
        }
        w
    }
}

/// A matrix unit `E_{row,col}` of `gl_{2n}` lying in one of the diagonal blocks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockGenerator {
    pub row: usize,
    pub col: usize,
}

impl BlockGenerator {
    pub fn new(n: usize, row: usize, col: usize) -> Result<Self> {
        let block = |i: usize| if (1..=n).contains(&i) { Some(1) } else if (n + 1..=2 * n).contains(&i) { Some(2) } else { None };
        match (block(row), block(col)) {
            (Some(a), Some(b)) if a == b => Ok(BlockGenerator { row, col }),
            _ => Err(Error::NotRaising(format!("E_{{{row},{col}}}"))),
        }
    }

    pub fn is_simple_raising(&self, n: usize) -> bool {
        self.col == self.row + 1 && self.row != n
    }
}

impl std::fmt::Display for BlockGenerator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "E_{{{},{}}}", self.row, self.col)
    }
}

/// Simple raising generators `E_{a,a+1}` of both blocks.
pub fn raising_generators(n: usize) -> Vec<BlockGenerator> {
    (1..2 * n).filter(|&a| a != n).map(|a| BlockGenerator { row: a, col: a + 1 }).collect()
}

/// Simple lowering generators `E_{a+1,a}` of both blocks.
pub fn lowering_generators(n: usize) -> Vec<BlockGenerator> {
    raising_generators(n).into_iter().map(|g| BlockGenerator { row: g.col, col: g.row }).collect()
}

/// Adjoint action of a diagonal-block matrix unit on `S*(a_-)`.
pub fn adjoint_action(g: BlockGenerator, p: &SparsePoly, grid: &PolyVariableGrid) -> SparsePoly {
    let (a, b) = (g.row, g.col);
    p.derive_by(|v| {
        let (c, d) = grid.unit(v);
        let mut img = Vec::new();
        if b == c {
            img.push((grid.var_of_unit(a, d).expect("bracket leaves a_-"), 1));
        }
        if d == a {
            img.push((grid.var_of_unit(c, b).expect("bracket leaves a_-"), -1));
        }
        img
    })
}

/// Action of a simple raising generator; rejects anything else.
pub fn raising_action(g: BlockGenerator, p: &SparsePoly, n: usize) -> Result<SparsePoly> {
    if !g.is_simple_raising(n) || g.col > 2 * n {
        return Err(Error::NotRaising(g.to_string()));
    }
    let grid = PolyVariableGrid::new(n);
    if p.nvars() != grid.nvars() {
        return Err(Error::RankMismatch(p.nvars(), grid.nvars()));
    }
    Ok(adjoint_action(g, p, &grid))
}

fn leibniz<F: Fn(usize, usize) -> SparsePoly>(k: usize, nvars: usize, entry: F) -> SparsePoly {
    fn perms(k: usize) -> Vec<(Vec<usize>, i64)> {
        if k == 0 {
            return vec![(Vec::new(), 1)];
        }
        let mut out = Vec::new();
        for (p, s) in perms(k - 1) {
            // insert k-1 at each position; moving it left past t entries flips sign t times
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                let sign = if (p.len() - pos) % 2 == 0 { s } else { -s };
                out.push((q, sign));
            }
        }
        out
    }
    let mut det = SparsePoly::zero(nvars);
    for (sigma, sign) in perms(k) {
        let term = (0..k).fold(SparsePoly::constant(nvars, sign), |acc, r| &acc * &entry(r, sigma[r]));
        det = &det + &term;
    }
    det
}

/// `Det_k`: the determinant of the `k x k` corner block `(E_{n+r, n-k+s})_{r,s=1..k}`,
/// i.e. of `(y_{r, k+1-s})`.
pub fn det_k(k: usize, n: usize) -> Result<SparsePoly> {
    if k == 0 || k > n {
        return Err(Error::RankExceeded { k, n });
    }
    let grid = PolyVariableGrid::new(n);
    Ok(leibniz(k, grid.nvars(), |r, s| grid.y(r + 1, k - s)))
}

/// `Det_1^{l_1} ... Det_n^{l_n}` with `n = l.rank()`.
pub fn det_monomial(l: &ColumnLengths) -> SparsePoly {
    let n = l.rank();
    let grid = PolyVariableGrid::new(n);
    l.exponents().iter().enumerate().fold(SparsePoly::one(grid.nvars()), |acc, (i, &e)| {
        &acc * &det_k(i + 1, n).expect("k <= n").pow(e)
    })
}

/// Eigenvalues of `E_11, ..., E_{2n,2n}` if `p` is a nonzero weight vector.
pub fn cartan_eigenvalues(p: &SparsePoly, grid: &PolyVariableGrid) -> Option<Vec<i64>> {
    let mut terms = p.terms();
    let (first, _) = terms.next()?;
    let w = grid.weight(first);
    terms.all(|(e, _)| grid.weight(e) == w).then_some(w)
}

/// The expected Cartan eigenvalues of `Det_1^{l_1} ... Det_n^{l_n}`, read off
/// the half-infinite weights `(D_-, D_+)` restricted to rank `n`.
pub fn theta_values(l: &ColumnLengths) -> Vec<i64> {
    let n = l.rank() as i32;
    let (minus, plus) = theta_weight_pair(l);
    let first = (1..=n).map(|i| minus.value_at(i - n));
    let second = (1..=n).map(|i| plus.value_at(i));
    first.chain(second).collect()
}

/// All exponent vectors of total degree `d` in `nvars` variables.
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Exponents> {
    fn go(v: usize, rest: u32, cur: &mut Exponents, out: &mut Vec<Exponents>) {
        if v + 1 == cur.len() {
            cur[v] = rest;
            out.push(cur.clone());
            return;
        }
        for k in (0..=rest).rev() {
            cur[v] = k;
            go(v + 1, rest - k, cur, out);
        }
        cur[v] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(0, d, &mut vec![0; nvars], &mut out);
    out
}

/// A weight space of `S^d(a_-)` together with its singular vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightGradedComponent {
    pub degree: u32,
    /// `(h^(1) part, h^(2) part)`.
    pub weight: (Vec<i64>, Vec<i64>),
    pub basis: Vec<Exponents>,
    /// Joint kernel of the simple raising generators, as primitive integer polynomials.
    pub kernel: Vec<SparsePoly>,
}

fn monomial(nvars: usize, e: &Exponents) -> SparsePoly {
    SparsePoly::from_terms(nvars, [(e.clone(), 1)])
}

fn to_i64(x: &num_bigint::BigInt) -> i64 {
    i64::try_from(x).expect("coefficient fits in i64")
}

/// Weight blocks of `S^d(a_-)` with the joint kernel of all simple raising generators.
pub fn singular_space(n: usize, d: u32) -> Vec<WeightGradedComponent> {
    let grid = PolyVariableGrid::new(n);
    let gens = raising_generators(n);
    let mut blocks: BTreeMap<Vec<i64>, Vec<Exponents>> = BTreeMap::new();
    for e in monomials_of_degree(grid.nvars(), d) {
        blocks.entry(grid.weight(&e)).or_default().push(e);
    }
    blocks
        .into_iter()
        .map(|(weight, basis)| {
            let mut row_of: HashMap<(usize, Exponents), usize> = HashMap::new();
            let mut entries: Vec<(usize, usize, i64)> = Vec::new();
            for (col, e) in basis.iter().enumerate() {
                let m = monomial(grid.nvars(), e);
                for (gi, &g) in gens.iter().enumerate() {
                    for (f, c) in adjoint_action(g, &m, &grid).terms() {
                        let next = row_of.len();
                        let row = *row_of.entry((gi, f.clone())).or_insert(next);
                        entries.push((row, col, c));
                    }
                }
            }
            let mut rows = vec![vec![Q::zero(); basis.len()]; row_of.len()];
            for (r, c, x) in entries {
                rows[r][c] += linalg::q(x);
            }
            let kernel = linalg::kernel(&rows, basis.len())
                .iter()
                .map(|v| {
                    let ints = linalg::primitive_integer(v);
                    SparsePoly::from_terms(grid.nvars(), basis.iter().cloned().zip(ints.iter().map(to_i64)))
                })
                .collect();
            let (w1, w2) = weight.split_at(n);
            WeightGradedComponent { degree: d, weight: (w1.to_vec(), w2.to_vec()), basis, kernel }
        })
        .collect()
}

/// Outcome of comparing the computed singular vectors with the Det monomials at one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularSpaceCheck {
    pub degree: u32,
    pub kernel_dim: usize,
    pub expected_kernel_dim: usize,
    pub det_monomials_singular: bool,
    pub det_monomials_independent: bool,
    pub det_monomials_span: bool,
    pub partitions: Vec<Partition>,
}

impl SingularSpaceCheck {
    pub fn passed(&self) -> bool {
        self.kernel_dim == self.expected_kernel_dim
            && self.det_monomials_singular
            && self.det_monomials_independent
            && self.det_monomials_span
    }
}

fn coords(p: &SparsePoly, basis: &[Exponents]) -> Vec<Q> {
    basis.iter().map(|e| linalg::q(p.coeff(e))).collect()
}

/// Checks that the Det monomials of degree `d` are singular, independent and
/// span the joint raising kernel.
pub fn verify_singular_space(n: usize, d: u32) -> SingularSpaceCheck {
    let grid = PolyVariableGrid::new(n);
    let components = singular_space(n, d);
    let dets: Vec<(ColumnLengths, SparsePoly)> =
        ColumnLengths::all_of_degree(n, d).into_iter().map(|l| (l.clone(), det_monomial(&l))).collect();

    let singular = dets
        .iter()
        .all(|(_, p)| raising_generators(n).into_iter().all(|g| adjoint_action(g, p, &grid).is_zero()));

    let mut independent = true;
    let mut span = true;
    for comp in &components {
        let weight: Vec<i64> = comp.weight.0.iter().chain(&comp.weight.1).copied().collect();
        let here: Vec<Vec<Q>> = dets
            .iter()
            .filter(|(_, p)| cartan_eigenvalues(p, &grid).as_ref() == Some(&weight))
            .map(|(_, p)| coords(p, &comp.basis))
            .collect();
        if linalg::rank(&here) != here.len() {
            independent = false;
        }
        let mut all = here.clone();
        all.extend(comp.kernel.iter().map(|p| coords(p, &comp.basis)));
        if here.len() != comp.kernel.len() || linalg::rank(&all) != comp.kernel.len() {
            span = false;
        }
    }

    SingularSpaceCheck {
        degree: d,
        kernel_dim: components.iter().map(|c| c.kernel.len()).sum(),
        expected_kernel_dim: dets.len(),
        det_monomials_singular: singular,
        det_monomials_independent: independent,
        det_monomials_span: span,
        partitions: dets.iter().map(|(l, _)| fig2_partition(l)).collect(),
    }
}

/// One degree of the character identity `dim S^d = Σ_λ (#SSYT(λ, n))^2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyRow {
    pub degree: u32,
    pub lhs_dim: u64,
    pub rhs_dim: u64,
    /// `(λ, #SSYT(λ, n))` for every `|λ| = d` with at most `n` rows.
    pub terms: Vec<(Partition, u64)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CauchyReport {
    pub n: usize,
    pub rows: Vec<CauchyRow>,
}

impl CauchyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.lhs_dim == r.rhs_dim)
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

pub fn cauchy_character_check(n: usize, d_max: u32) -> CauchyReport {
    let nvars = (n * n) as u64;
    let rows = (0..=d_max)
        .map(|d| {
            let terms: Vec<(Partition, u64)> = Partition::all_of_size_bounded(d, n)
                .into_iter()
                .map(|lam| {
                    let k = ssyt_count(&lam, n);
                    (lam, k)
                })
                .collect();
            CauchyRow {
                degree: d,
                lhs_dim: binomial(nvars + d as u64 - 1, d as u64),
                rhs_dim: terms.iter().map(|(_, k)| k * k).sum(),
                terms,
            }
        })
        .collect();
    CauchyReport { n, rows }
}

/// The irreducible constituents `L_w ⊗ L_w` of `S^d(a_-)` at one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDecomposition {
    pub degree: u32,
    pub table: DecompositionTable<Partition>,
    /// Exponent vectors whose Det monomial has a Cartan weight different from θ.
    pub weight_mismatches: Vec<ColumnLengths>,
}

pub fn decomposition_report(n: usize, d_max: u32) -> Vec<DegreeDecomposition> {
    let grid = PolyVariableGrid::new(n);
    (0..=d_max)
        .map(|d| {
            let mut table = DecompositionTable::new();
            let mut weight_mismatches = Vec::new();
            for l in ColumnLengths::all_of_degree(n, d) {
                table.add(fig2_partition(&l), 1);
                if cartan_eigenvalues(&det_monomial(&l), &grid) != Some(theta_values(&l)) {
                    weight_mismatches.push(l);
                }
            }
            DegreeDecomposition { degree: d, table, weight_mismatches }
        })
        .collect()
}
