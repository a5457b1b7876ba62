mod common;

use common::*;
use glinf::ghat::search::singular_search;
use glinf::ghat::{bracket, commutator_formula_check, Band, BandAlgebraElement};
use glinf::linalg::{q, Q};
use glinf::SemidominantWeight;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn jacobi(x: &BandAlgebraElement, y: &BandAlgebraElement, z: &BandAlgebraElement) -> BandAlgebraElement {
    let a = bracket(x, &bracket(y, z).unwrap()).unwrap();
    let b = bracket(y, &bracket(z, x).unwrap()).unwrap();
    let c = bracket(z, &bracket(x, y).unwrap()).unwrap();
    a.sum(&b).unwrap().sum(&c).unwrap()
}

#[test]
fn jacobi_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let band = Band::new(3);
    let mut nontrivial = 0;
    for _ in 0..200 {
        let x = random_element(&mut rng, band, 3);
        let y = random_element(&mut rng, band, 3);
        let z = random_element(&mut rng, band, 3);
        assert!(jacobi(&x, &y, &z).is_zero(), "{x} | {y} | {z}");
        nontrivial += usize::from(!bracket(&x, &bracket(&y, &z).unwrap()).unwrap().is_zero());
    }
    assert!(nontrivial > 20);
}

#[test]
fn representation_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut nontrivial = 0;
    for _ in 0..300 {
        let case = random_rep_case(&mut rng);
        assert!(rep_defect(&case).is_zero());
        let br = bracket(&case.x, &case.y).unwrap();
        nontrivial += usize::from(!case.module.act(&br, &case.v).unwrap().is_zero());
    }
    assert!(nontrivial > 30, "only {nontrivial} cases with a nonzero bracket action");
}

#[test]
fn minimal_singular_level_grows_with_negative_charge() {
    for n in 0..=2i64 {
        let r = singular_search(&SemidominantWeight::zero(), q(-n), 9, None).unwrap();
        let expected = ((n + 1) * (n + 1)) as u32;
        assert_eq!(r.minimal_level(), Some(expected), "c = {}", -n);
        assert_eq!(r.labels()[0].1, format!("Det_{}·v", n + 1));
    }
}

#[test]
fn singular_vectors_touch_the_highest_vector() {
    for w in small_chis() {
        for c in [q(0), q(1), q(-1), q(-2), q(2)] {
            let r = singular_search(&w, c.clone(), 4, None).unwrap();
            for b in &r.singular {
                for v in &b.vectors {
                    assert!(v.has_highest_component, "χ = {w}, c = {c}: {}", v.expansion);
                }
            }
        }
    }
}

#[test]
fn commutator_formula_beyond_trivial_weight() {
    let half = Q::new(1.into(), 2.into());
    let (mut total, mut nonzero) = (0, 0);
    for w in small_chis() {
        for c in [q(-2), half.clone(), q(4)] {
            for k in 1..=3 {
                for l in 1..=if k == 3 { 2 } else { 3 } {
                    let r = commutator_formula_check(k, l, &w, c.clone()).unwrap();
                    assert!(r.equal, "χ = {w}, c = {c}, k = {k}, l = {l}: {}", r.discrepancy);
                    total += 1;
                    nonzero += usize::from(!r.lhs_vector.is_zero());
                }
            }
        }
    }
    assert!(nonzero * 10 > total * 9, "{nonzero} of {total}");
}

#[test]
fn search_report_serializes() {
    let r = singular_search(&SemidominantWeight::zero(), q(-1), 4, None).unwrap();
    let json = serde_json::to_value(&r).unwrap();
    let found = &json["singular"][0];
    assert_eq!(found["level"], 4);
    assert_eq!(found["dim"], 1);
    assert_eq!(found["generators_as_det_monomials"][0], "Det_2·v");
}
