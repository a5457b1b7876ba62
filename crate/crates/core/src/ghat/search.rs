use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::algebra::{Band, Block, Unit};
use super::fdmodule::TensorVec;
use super::induced::{product_vector, AMinusPoly, InducedModule, ModuleVector, Term};
use crate::error::Result;
use crate::linalg::{kernel, primitive_integer, Q};
use crate::partitions::SemidominantWeight;

/// Monomials in `a₋` of total principal degree `level`, each sorted.
pub fn monomials_of_level(level: u32) -> Vec<Vec<Unit>> {
    let units: Vec<Unit> = (1..=level as i32)
        .flat_map(|m| (1..=m).map(move |r| Unit::new(r, r - m)))
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(units: &[Unit], start: usize, left: i32, cur: &mut Vec<Unit>, out: &mut Vec<Vec<Unit>>) {
        if left == 0 {
            let mut m = cur.clone();
            m.sort_unstable();
            out.push(m);
            return;
        }
        for i in start..units.len() {
            let u = units[i];
            if u.level() > left {
                continue;
            }
            cur.push(u);
            go(units, i, left - u.level(), cur, out);
            cur.pop();
        }
    }
    go(&units, 0, level as i32, &mut cur, &mut out);
    out
}

/// Smallest band that keeps every term and every relevant raising generator
/// in range up to `level_max`.
pub fn default_band(chi: &SemidominantWeight, level_max: u32) -> Band {
    let support = chi.chi1.body.len().max(chi.chi2.body.len()) as i32;
    Band::new(support + level_max as i32 + 1)
}

/// Basis of one weight space of the induced module at a fixed level.
#[derive(Clone, Debug)]
pub struct WeightBlock {
    pub level: u32,
    pub weight: Vec<(i32, i64)>,
    pub basis: Vec<ModuleVector>,
    /// Depth of the finite-dimensional factor of each basis vector.
    pub fd_depth: Vec<i64>,
}

/// All weight blocks of a given level, in weight order.
pub fn level_blocks(m: &InducedModule, level: u32) -> Result<Vec<WeightBlock>> {
    let (neg, pos) = m.factors();
    let fd_neg = neg.graded_basis(level as usize);
    let fd_pos = pos.graded_basis(level as usize);
    let mut fd_by_depth: Vec<Vec<(TensorVec, TensorVec)>> = vec![Vec::new(); level as usize + 1];
    for (d1, b1) in fd_neg.iter().enumerate() {
        for (d2, b2) in fd_pos.iter().enumerate() {
            if d1 + d2 <= level as usize {
                for a in b1 {
                    for b in b2 {
                        fd_by_depth[d1 + d2].push((a.clone(), b.clone()));
                    }
                }
            }
        }
    }
    let mut blocks: BTreeMap<Vec<(i32, i64)>, WeightBlock> = BTreeMap::new();
    for s in 0..=level {
        let depth = (level - s) as usize;
        if fd_by_depth[depth].is_empty() {
            continue;
        }
        for mono in monomials_of_level(s) {
            for (a, b) in &fd_by_depth[depth] {
                let v = product_vector(mono.clone(), a, b);
                let t = v.terms().next().expect("nonzero basis vector").0;
                for i in t.mono.iter().flat_map(|u| [u.row, u.col]).chain(t.neg.iter().copied()).chain(t.pos.iter().copied()) {
                    m.band().check(i)?;
                }
                let w = m.term_weight(t);
                let blk = blocks.entry(w.clone()).or_insert_with(|| WeightBlock {
                    level,
                    weight: w,
                    basis: Vec::new(),
                    fd_depth: Vec::new(),
                });
                blk.basis.push(v);
                blk.fd_depth.push(depth as i64);
            }
        }
    }
    Ok(blocks.into_values().collect())
}

/// Simple raising units `E_{a,a+1}` that can act nontrivially on a block.
pub fn relevant_raising(block: &WeightBlock, band: Band) -> Result<Vec<Unit>> {
    let mut support = BTreeSet::new();
    for v in &block.basis {
        for (t, _) in v.terms() {
            for u in &t.mono {
                support.insert(u.row);
                support.insert(u.col);
            }
            support.extend(t.neg.iter().copied());
            support.extend(t.pos.iter().copied());
        }
    }
    let mut out = BTreeSet::new();
    for &s in &support {
        out.insert(s - 1);
        out.insert(s);
    }
    out.into_iter()
        .map(|a| {
            let u = Unit::new(a, a + 1);
            band.check_unit(u)?;
            Ok(u)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularVector {
    /// Symbolic name when the vector is a Det-monomial applied to `v`.
    pub det_monomial: Option<String>,
    /// Expansion in the induced-module PBW basis.
    pub expansion: String,
    /// Whether some term multiplies the highest vector of the finite-dimensional factor.
    pub has_highest_component: bool,
    #[serde(skip)]
    pub vector: ModuleVector,
}

#[derive(Clone, Debug, Serialize)]
pub struct SingularBlock {
    pub level: u32,
    pub weight: Vec<(i32, i64)>,
    pub dim: usize,
    pub block_dim: usize,
    pub generators_as_det_monomials: Vec<String>,
    pub vectors: Vec<SingularVector>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub chi: String,
    pub c: String,
    pub level_max: u32,
    pub band: i32,
    pub blocks_examined: usize,
    pub singular: Vec<SingularBlock>,
}

impl SearchReport {
    pub fn minimal_level(&self) -> Option<u32> {
        self.singular.iter().map(|b| b.level).min()
    }

    pub fn labels(&self) -> Vec<(u32, String)> {
        self.singular
            .iter()
            .flat_map(|b| b.vectors.iter().map(move |v| (b.level, v.det_monomial.clone().unwrap_or_else(|| "?".into()))))
            .collect()
    }
}

/// Exponent vectors `l` with `Σ k² l_k = level`.
pub fn det_exponents_of_level(level: u32) -> Vec<Vec<u32>> {
    let kmax = (1..).take_while(|k| k * k <= level).last().unwrap_or(0) as usize;
    let mut out = Vec::new();
    let mut cur = vec![0u32; kmax];
    fn go(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == 0 {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let w = (k * k) as u32;
        for e in 0..=left / w {
            cur[k - 1] = e;
            go(k - 1, left - e * w, cur, out);
        }
        cur[k - 1] = 0;
    }
    go(kmax, level, &mut cur, &mut out);
    out
}

pub fn det_label(l: &[u32]) -> String {
    let parts: Vec<String> = l
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { format!("Det_{}", i + 1) } else { format!("Det_{}^{e}", i + 1) })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("·")
    }
}

/// Kernel of all raising generators on each weight block at levels `1..=level_max`.
pub fn singular_search(
    chi: &SemidominantWeight,
    c: Q,
    level_max: u32,
    band: Option<Band>,
) -> Result<SearchReport> {
    let band = band.unwrap_or_else(|| default_band(chi, level_max));
    let needed = default_band(chi, level_max);
    if band.size < needed.size {
        return Err(crate::Error::BandEscape {
            index: needed.size,
            lo: band.lo(),
            hi: band.hi(),
            suggested: needed.size,
        });
    }
    let m = InducedModule::new(chi, c.clone(), band)?;
    let v = m.highest_vector();
    let mut singular = Vec::new();
    let mut examined = 0;
    for level in 1..=level_max {
        let candidates: Vec<(String, ModuleVector)> = det_exponents_of_level(level)
            .into_iter()
            .map(|l| (det_label(&l), v.left_mul(&AMinusPoly::det_monomial(&l))))
            .collect();
        for block in level_blocks(&m, level)? {
            examined += 1;
            if let Some(found) = block_kernel(&m, &block, &candidates)? {
                singular.push(found);
            }
        }
    }
    Ok(SearchReport {
        chi: chi.to_string(),
        c: c.to_string(),
        level_max,
        band: band.size,
        blocks_examined: examined,
        singular,
    })
}

fn block_kernel(
    m: &InducedModule,
    block: &WeightBlock,
    candidates: &[(String, ModuleVector)],
) -> Result<Option<SingularBlock>> {
    let raising = relevant_raising(block, m.band())?;
    let mut row_index: BTreeMap<(Unit, Term), usize> = BTreeMap::new();
    let mut entries: Vec<Vec<(usize, Q)>> = Vec::with_capacity(block.basis.len());
    for b in &block.basis {
        let mut col = Vec::new();
        for &u in &raising {
            debug_assert_ne!(u.block(), Block::AMinus);
            let img = m.act_unit(u, b)?;
            for (t, k) in img.terms() {
                let n = row_index.len();
                let r = *row_index.entry((u, t.clone())).or_insert(n);
                col.push((r, k.clone()));
            }
        }
        entries.push(col);
    }
    let ncols = block.basis.len();
    let mut rows = vec![vec![Q::zero(); ncols]; row_index.len()];
    for (j, col) in entries.into_iter().enumerate() {
        for (r, k) in col {
            rows[r][j] += k;
        }
    }
    let ker = kernel(&rows, ncols);
    if ker.is_empty() {
        return Ok(None);
    }
    let mut vectors = Vec::new();
    for coeffs in ker {
        let ints: Vec<BigInt> = primitive_integer(&coeffs);
        let mut vec = ModuleVector::zero();
        let mut highest = false;
        for ((b, k), d) in block.basis.iter().zip(&ints).zip(&block.fd_depth) {
            if !k.is_zero() {
                vec.add_scaled(b, &Q::from_integer(k.clone()));
                highest |= *d == 0;
            }
        }
        let det_monomial = candidates
            .iter()
            .find(|(_, cand)| !cand.is_zero() && vec.ratio_to(cand).is_some())
            .map(|(name, _)| format!("{name}·v"));
        vectors.push(SingularVector {
            det_monomial,
            expansion: vec.to_string(),
            has_highest_component: highest,
            vector: vec,
        });
    }
    let generators_as_det_monomials = vectors.iter().filter_map(|v| v.det_monomial.clone()).collect();
    Ok(Some(SingularBlock {
        level: block.level,
        weight: block.weight.clone(),
        dim: vectors.len(),
        block_dim: block.basis.len(),
        generators_as_det_monomials,
        vectors,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    #[test]
    fn monomial_counts_are_plane_partitions() {
        let counts: Vec<usize> = (0..=6).map(|s| monomials_of_level(s).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 6, 13, 24, 48]);
    }

    #[test]
    fn det_exponents() {
        assert_eq!(det_exponents_of_level(4).len(), 2);
        assert_eq!(det_label(&[2, 1]), "Det_1^2·Det_2");
        assert_eq!(AMinusPoly::det_monomial(&[0, 1]), AMinusPoly::det_k(2));
    }

    #[test]
    fn first_singular_vectors() {
        let r = singular_search(&SemidominantWeight::zero(), q(0), 2, None).unwrap();
        assert_eq!(r.labels(), vec![(1, "Det_1·v".to_string())]);
        let r = singular_search(&SemidominantWeight::zero(), q(1), 3, None).unwrap();
        assert_eq!(r.minimal_level(), Some(2));
        assert_eq!(r.singular[0].generators_as_det_monomials, vec!["Det_1^2·v"]);
    }

    #[test]
    fn undersized_band_is_rejected() {
        let e = singular_search(&SemidominantWeight::zero(), q(1), 3, Some(Band::new(2))).unwrap_err();
        assert!(matches!(e, crate::Error::BandEscape { suggested: 4, .. }));
    }
}
