//! Multiplicities of induced modules and the reciprocity identity relating
//! stable Clebsch-Gordan coefficients to mixed `gl_N` coefficients.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lr::{lr_coefficient, rational_tensor_coefficient, DecompositionTable};
use crate::partitions::{split_weight, weight_to_partition, FiniteWeight, HalfInfiniteWeight, Partition, SemidominantWeight, Sign};

/// Common size of the connecting diagram `D`, or `None` when the two blocks disagree.
fn connecting_size(inner: (&Partition, &Partition), outer: (&Partition, &Partition)) -> Option<u32> {
    let a = outer.0.size().checked_sub(inner.0.size())?;
    let b = outer.1.size().checked_sub(inner.1.size())?;
    (a == b).then_some(a)
}

/// Multiplicity of `L_{ν₁} ⊗ L_{ν₂}` in the module induced from `χ`:
/// `Σ_D c^{ν₁}_{χ^(1), D} c^{ν₂}_{χ^(2), D}`.
pub fn induced_multiplicity(chi: &SemidominantWeight, nu1: &HalfInfiniteWeight, nu2: &HalfInfiniteWeight) -> Result<u64> {
    nu1.expect_kind(Sign::Negative)?;
    nu2.expect_kind(Sign::Positive)?;
    let (c1, c2) = (weight_to_partition(&chi.chi1), weight_to_partition(&chi.chi2));
    let (n1, n2) = (weight_to_partition(nu1), weight_to_partition(nu2));
    let Some(size) = connecting_size((&c1, &c2), (&n1, &n2)) else {
        return Ok(0);
    };
    Ok(Partition::all_of_size(size)
        .iter()
        .map(|d| lr_coefficient(&c1, d, &n1) * lr_coefficient(&c2, d, &n2))
        .sum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DContribution {
    pub d: Partition,
    pub contribution: u64,
}

/// Left side of the reciprocity identity, with the nonzero contribution of every `D`.
pub fn reciprocity_lhs(
    nu: &FiniteWeight,
    lambda_minus: &HalfInfiniteWeight,
    mu_plus: &HalfInfiniteWeight,
) -> Result<(u64, Vec<DContribution>)> {
    lambda_minus.expect_kind(Sign::Negative)?;
    mu_plus.expect_kind(Sign::Positive)?;
    let (big_minus, big_plus) = split_weight(nu)?;
    let (a, b) = (big_minus.body, big_plus.body);
    let (l, m) = (&lambda_minus.body, &mu_plus.body);
    let Some(size) = connecting_size((&a, &b), (l, m)) else {
        return Ok((0, Vec::new()));
    };
    let terms: Vec<DContribution> = Partition::all_of_size(size)
        .into_iter()
        .filter_map(|d| {
            let contribution = lr_coefficient(&a, &d, l) * lr_coefficient(&b, &d, m);
            (contribution > 0).then_some(DContribution { d, contribution })
        })
        .collect();
    Ok((terms.iter().map(|t| t.contribution).sum(), terms))
}

/// Same sum as [`reciprocity_lhs`] but over every `D` with `|D| <= cap`,
/// without using the size constraint.
pub fn reciprocity_lhs_capped(
    nu: &FiniteWeight,
    lambda_minus: &HalfInfiniteWeight,
    mu_plus: &HalfInfiniteWeight,
    cap: u32,
) -> Result<u64> {
    let (big_minus, big_plus) = split_weight(nu)?;
    Ok(Partition::all_up_to(cap)
        .iter()
        .map(|d| lr_coefficient(&big_minus.body, d, &lambda_minus.body) * lr_coefficient(&big_plus.body, d, &mu_plus.body))
        .sum())
}

/// Places a half-infinite weight into rank `n`: negative bodies fill the last
/// slots, positive bodies the first ones.
pub fn embed(w: &HalfInfiniteWeight, n: usize) -> Result<FiniteWeight> {
    let zero_minus = HalfInfiniteWeight::zero(Sign::Negative);
    let zero_plus = HalfInfiniteWeight::zero(Sign::Positive);
    match w.kind {
        Sign::Negative => FiniteWeight::assemble(w, &zero_plus, n),
        Sign::Positive => FiniteWeight::assemble(&zero_minus, w, n),
    }
}

/// Smallest rank at which every weight of the triple fits with room to spare:
/// the sum of their nonzero entry counts.
pub fn stable_bound(nu: &FiniteWeight, lambda_minus: &HalfInfiniteWeight, mu_plus: &HalfInfiniteWeight) -> usize {
    nu.nonzero_count() + lambda_minus.body.len() + mu_plus.body.len()
}

#[derive(Clone, Debug, Serialize)]
pub struct ReciprocityReport {
    pub nu: FiniteWeight,
    pub lambda_minus: HalfInfiniteWeight,
    pub mu_plus: HalfInfiniteWeight,
    pub lhs: u64,
    pub rhs_by_n: BTreeMap<usize, u64>,
    pub stabilized: bool,
    pub equal: bool,
    pub stable_bound: usize,
    /// Whether every tested rank reaches `nonzero(ν) + 2|D|`, where the right
    /// side is expected to be constant.
    pub asserted: bool,
    pub d_terms: Vec<DContribution>,
}

impl ReciprocityReport {
    pub fn passed(&self) -> bool {
        self.equal && self.stabilized
    }
}

/// Both sides of the reciprocity identity; the right side evaluated at each rank in `ns`.
pub fn reciprocity_check(
    nu: &FiniteWeight,
    lambda_minus: &HalfInfiniteWeight,
    mu_plus: &HalfInfiniteWeight,
    ns: &[usize],
) -> Result<ReciprocityReport> {
    lambda_minus.expect_kind(Sign::Negative)?;
    mu_plus.expect_kind(Sign::Positive)?;
    if ns.is_empty() {
        return Err(Error::Parse("empty list of ranks".into()));
    }
    let bound = stable_bound(nu, lambda_minus, mu_plus);
    if let Some(&n) = ns.iter().find(|&&n| n < bound) {
        return Err(Error::RankTooSmall { n, min: bound });
    }
    let (lhs, d_terms) = reciprocity_lhs(nu, lambda_minus, mu_plus)?;
    let mut rhs_by_n = BTreeMap::new();
    for &n in ns {
        let c = rational_tensor_coefficient(&embed(lambda_minus, n)?, &embed(mu_plus, n)?, &nu.pad_to(n)?, n)?;
        rhs_by_n.insert(n, c);
    }
    let first = *rhs_by_n.values().next().expect("nonempty");
    let stabilized = rhs_by_n.values().all(|&v| v == first);
    let equal = rhs_by_n.values().all(|&v| v == lhs);
    let d_size = mu_plus.body.size().saturating_sub(split_weight(nu)?.1.body.size()) as usize;
    let asserted = ns.iter().all(|&n| n >= nu.nonzero_count() + 2 * d_size);
    Ok(ReciprocityReport {
        nu: nu.clone(),
        lambda_minus: HalfInfiniteWeight::negative(lambda_minus.body.clone()),
        mu_plus: HalfInfiniteWeight::positive(mu_plus.body.clone()),
        lhs,
        rhs_by_n,
        stabilized,
        equal,
        stable_bound: bound,
        asserted,
        d_terms,
    })
}

/// Key of a Kac-Radul table: a negative-type and a positive-type `gl_N` weight.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightPair {
    pub minus: HalfInfiniteWeight,
    pub plus: HalfInfiniteWeight,
}

impl fmt::Display for WeightPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.minus.body, self.plus.body)
    }
}

/// All `(λ, μ)` with `|λ|, |μ| <= size_bound` and `c^ν_{λ,μ} > 0` in rank `n`.
pub fn kac_radul_table(nu: &FiniteWeight, n: usize, size_bound: u32) -> Result<DecompositionTable<WeightPair>> {
    let nu_n = nu.pad_to(n)?;
    let mut table = DecompositionTable::new();
    let bodies = Partition::all_up_to(size_bound);
    for lam in &bodies {
        for mu in &bodies {
            if lam.len() + mu.len() > n {
                continue;
            }
            let minus = HalfInfiniteWeight::negative(lam.clone());
            let plus = HalfInfiniteWeight::positive(mu.clone());
            let c = rational_tensor_coefficient(&embed(&minus, n)?, &embed(&plus, n)?, &nu_n, n)?;
            table.add(WeightPair { minus, plus }, c);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn neg(rows: &[i64]) -> HalfInfiniteWeight {
        HalfInfiniteWeight::negative(Partition::new(rows.to_vec()).unwrap())
    }

    fn pos(rows: &[i64]) -> HalfInfiniteWeight {
        HalfInfiniteWeight::positive(Partition::new(rows.to_vec()).unwrap())
    }

    fn fw(e: &[i64]) -> FiniteWeight {
        FiniteWeight::new(e.to_vec())
    }

    #[test]
    fn multiplicity_examples() {
        let zero = SemidominantWeight::zero();
        for p in Partition::all_up_to(6) {
            for q in Partition::all_of_size(p.size()) {
                let m = induced_multiplicity(
                    &zero,
                    &HalfInfiniteWeight::negative(p.clone()),
                    &HalfInfiniteWeight::positive(q.clone()),
                )
                .unwrap();
                assert_eq!(m, u64::from(p == q));
            }
        }
        let chi = SemidominantWeight::new(neg(&[]), pos(&[1])).unwrap();
        assert_eq!(induced_multiplicity(&chi, &neg(&[1]), &pos(&[2])).unwrap(), 1);
        assert_eq!(induced_multiplicity(&chi, &neg(&[1]), &pos(&[1])).unwrap(), 0);
        assert_eq!(induced_multiplicity(&zero, &neg(&[2]), &pos(&[1])).unwrap(), 0);
    }

    #[test]
    fn lhs_examples() {
        let (v, terms) = reciprocity_lhs(&fw(&[0, 0]), &neg(&[1]), &pos(&[1])).unwrap();
        assert_eq!(v, 1);
        assert_eq!(terms, vec![DContribution { d: Partition::new(vec![1]).unwrap(), contribution: 1 }]);
        let (v, terms) = reciprocity_lhs(&fw(&[1, 0, -1]), &neg(&[1]), &pos(&[1])).unwrap();
        assert_eq!(v, 1);
        assert!(terms[0].d.is_empty());
        assert_eq!(reciprocity_lhs(&fw(&[0]), &neg(&[2]), &pos(&[1])).unwrap().0, 0);
    }

    #[test]
    fn adjoint_and_trivial_summands() {
        for n in 3..=5 {
            let mut adj = vec![0; n];
            adj[0] = 1;
            adj[n - 1] = -1;
            for nu in [vec![0; n], adj] {
                let r = reciprocity_check(&fw(&nu), &neg(&[1]), &pos(&[1]), &[n + 1, n + 2, n + 3]).unwrap();
                assert_eq!(r.lhs, 1);
                assert!(r.asserted);
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn small_rank_is_rejected() {
        let e = reciprocity_check(&fw(&[1, -1]), &neg(&[1]), &pos(&[1]), &[3]).unwrap_err();
        assert_eq!(e, Error::RankTooSmall { n: 3, min: 4 });
    }

    #[test]
    fn kac_radul_examples() {
        let t = kac_radul_table(&fw(&[0]), 4, 2).unwrap();
        assert_eq!(t.len(), 4);
        assert!(t.iter().all(|(k, m)| m == 1 && k.minus.body == k.plus.body));
        let t = kac_radul_table(&fw(&[1, -1]), 4, 1).unwrap();
        assert_eq!(t.get(&WeightPair { minus: neg(&[1]), plus: pos(&[1]) }), 1);
        assert_eq!(t.to_tsv().lines().count(), t.len());
    }

    #[test]
    fn capped_sum_matches() {
        let nu = fw(&[2, 0, -1]);
        let (l, m) = (neg(&[2, 1]), pos(&[3, 1]));
        let exact = reciprocity_lhs(&nu, &l, &m).unwrap().0;
        for cap in 2..=6 {
            assert_eq!(reciprocity_lhs_capped(&nu, &l, &m, cap).unwrap(), exact);
        }
    }
}
