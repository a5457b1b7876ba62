use serde::Serialize;

use super::algebra::{Band, Unit};
use super::induced::{AMinusPoly, InducedModule, ModuleVector};
use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::partitions::SemidominantWeight;

/// Determinant of the `y`-entries with the given `y`-row and `y`-column indices,
/// columns taken in the order listed.
fn y_det(rows: &[i32], cols: &[i32]) -> AMinusPoly {
    let unit_cols: Vec<i32> = cols.iter().map(|&j| 1 - j).collect();
    AMinusPoly::det(rows, &unit_cols).expect("y-entries lie in a₋")
}

/// `Det Ã_k` minor with rows `rows` and columns `cols` (both in `2..=k`), using
/// the same column orientation as `Det_k`.
fn tilde_minor(rows: &[i32], cols: &[i32]) -> AMinusPoly {
    let mut c = cols.to_vec();
    c.reverse();
    y_det(rows, &c)
}

#[derive(Clone, Debug, Serialize)]
pub struct CommutatorReport {
    pub k: usize,
    pub l: u32,
    pub chi: String,
    pub c: String,
    pub lhs: String,
    pub rhs: String,
    pub discrepancy: String,
    pub equal: bool,
    #[serde(skip)]
    pub lhs_vector: ModuleVector,
    #[serde(skip)]
    pub rhs_vector: ModuleVector,
}

/// Compares `e_0 · Det_k^l v`, computed by PBW push-through, with the closed
/// expression
///
/// `(-1)^{1+k} l Det Ã_k Det_k^{l-1} (χ(E_00 - E_11) + c + k - l) v
///   + l Σ_{i,j=2..k} (-1)^{i+j} Det Ã_{ij} Det_k^{l-1} (y_{j1} E_{0,1-i} - y_{1i} E_{j,1}) v`
///
/// where `Ã_k` is the block of `y_{ij}`, `2 <= i,j <= k`, and `Ã_{ij}` drops its
/// `y`-row `j` and `y`-column `i`.
pub fn commutator_formula_check(k: usize, l: u32, chi: &SemidominantWeight, c: Q) -> Result<CommutatorReport> {
    if k == 0 || l == 0 {
        return Err(Error::Parse("k and l must be at least 1".into()));
    }
    let support = chi.chi1.body.len().max(chi.chi2.body.len()) as i32;
    let band = Band::new(k as i32 + support + 2);
    let m = InducedModule::new(chi, c.clone(), band)?;
    let v = m.highest_vector();
    let det = AMinusPoly::det_k(k);
    let det_rest = det.pow(l - 1);

    let lhs = m.act_unit(Unit::e0(), &v.left_mul(&det.pow(l)))?;

    let ki = k as i32;
    let tail: Vec<i32> = (2..=ki).collect();
    let lq = q(l as i64);
    let sign = if k.is_multiple_of(2) { q(-1) } else { q(1) };
    let scalar = q(chi.chi_centr) + &c + q(k as i64) - &lq;
    let first = v
        .left_mul(&tilde_minor(&tail, &tail).mul(&det_rest))
        .scale(&(sign * &lq * scalar));

    let mut sum = ModuleVector::zero();
    for i in 2..=ki {
        for j in 2..=ki {
            let rows: Vec<i32> = tail.iter().copied().filter(|&r| r != j).collect();
            let cols: Vec<i32> = tail.iter().copied().filter(|&s| s != i).collect();
            let minor = tilde_minor(&rows, &cols).mul(&det_rest);
            let sgn = if (i + j) % 2 == 0 { q(1) } else { q(-1) };
            let zp = m.act_unit(Unit::new(0, 1 - i), &v)?;
            let zm = m.act_unit(Unit::new(j, 1), &v)?;
            let a = zp.left_mul(&minor.mul(&AMinusPoly::unit(Unit::y(j, 1))?));
            let b = zm.left_mul(&minor.mul(&AMinusPoly::unit(Unit::y(1, i))?));
            sum.add_scaled(&(&a - &b), &(&sgn * &lq));
        }
    }
    let rhs = &first + &sum;
    let diff = &lhs - &rhs;
    Ok(CommutatorReport {
        k,
        l,
        chi: chi.to_string(),
        c: c.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        discrepancy: diff.to_string(),
        equal: diff.is_zero(),
        lhs_vector: lhs,
        rhs_vector: rhs,
    })
}
