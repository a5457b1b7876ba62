#![allow(dead_code)]

use glinf::ghat::search::{default_band, level_blocks};
use glinf::ghat::{Band, BandAlgebraElement, InducedModule, ModuleVector, Unit};
use glinf::linalg::{q, Q};
use glinf::reciprocity::stable_bound;
use glinf::{FiniteWeight, HalfInfiniteWeight, Partition, SemidominantWeight};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn part(rows: &[i64]) -> Partition {
    Partition::new(rows.to_vec()).unwrap()
}

pub fn neg(rows: &[i64]) -> HalfInfiniteWeight {
    HalfInfiniteWeight::negative(part(rows))
}

pub fn pos(rows: &[i64]) -> HalfInfiniteWeight {
    HalfInfiniteWeight::positive(part(rows))
}

pub fn chi(minus: &[i64], plus: &[i64]) -> SemidominantWeight {
    SemidominantWeight::new(neg(minus), pos(plus)).unwrap()
}

pub fn random_partition<R: Rng>(rng: &mut R, size: u32) -> Partition {
    Partition::all_of_size(size).choose(rng).unwrap().clone()
}

/// Small rational with numerator in `-9..=9` and denominator in `1..=4`.
pub fn random_q<R: Rng>(rng: &mut R) -> Q {
    Q::new(rng.gen_range(-9i64..=9).into(), rng.gen_range(1i64..=4).into())
}

/// Weights used to exercise a nontrivial finite-dimensional factor: at most two boxes.
pub fn small_chis() -> Vec<SemidominantWeight> {
    vec![
        SemidominantWeight::zero(),
        chi(&[1], &[]),
        chi(&[], &[1]),
        chi(&[1], &[1]),
        chi(&[2], &[]),
        chi(&[], &[1, 1]),
    ]
}

pub fn random_unit<R: Rng>(rng: &mut R, band: Band) -> Unit {
    Unit::new(rng.gen_range(band.lo()..=band.hi()), rng.gen_range(band.lo()..=band.hi()))
}

/// A random element with up to three matrix units near the block corner and a central part.
pub fn random_element<R: Rng>(rng: &mut R, band: Band, reach: i32) -> BandAlgebraElement {
    let mut x = BandAlgebraElement::zero(band);
    let inner = Band::new(reach.min(band.size));
    for _ in 0..rng.gen_range(1..=3) {
        x.add_unit(random_unit(rng, inner), q(rng.gen_range(-3..=3))).unwrap();
    }
    if rng.gen_bool(0.5) {
        x.add_central(q(rng.gen_range(-2..=2)));
    }
    x
}

/// A random combination of PBW basis vectors of the given level.
pub fn random_vector<R: Rng>(rng: &mut R, m: &InducedModule, level: u32) -> ModuleVector {
    let basis: Vec<ModuleVector> = level_blocks(m, level).unwrap().into_iter().flat_map(|b| b.basis).collect();
    let mut v = ModuleVector::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let b = basis.choose(rng).unwrap();
        v.add_scaled(b, &q(rng.gen_range(1..=4)));
    }
    v
}

/// A module, element pair and vector for one instance of the representation identity.
pub struct RepCase {
    pub module: InducedModule,
    pub x: BandAlgebraElement,
    pub y: BandAlgebraElement,
    pub v: ModuleVector,
}

pub fn random_rep_case<R: Rng>(rng: &mut R) -> RepCase {
    let chis = small_chis();
    let w = chis.choose(rng).unwrap().clone();
    let level = rng.gen_range(0..=4);
    let band = Band::new(default_band(&w, 4).size + 1);
    let module = InducedModule::new(&w, random_q(rng), band).unwrap();
    let v = random_vector(rng, &module, level);
    let x = random_element(rng, band, 3);
    let y = random_element(rng, band, 3);
    RepCase { module, x, y, v }
}

/// `act(x, act(y, v)) - act(y, act(x, v)) - act([x, y], v)`.
pub fn rep_defect(c: &RepCase) -> ModuleVector {
    let m = &c.module;
    let xy = m.act(&c.x, &m.act(&c.y, &c.v).unwrap()).unwrap();
    let yx = m.act(&c.y, &m.act(&c.x, &c.v).unwrap()).unwrap();
    let br = m.act(&glinf::ghat::bracket(&c.x, &c.y).unwrap(), &c.v).unwrap();
    &(&xy - &yx) - &br
}

/// A reciprocity triple `(ν, λ₋, μ₊)`.
pub type Triple = (FiniteWeight, HalfInfiniteWeight, HalfInfiniteWeight);

pub fn assemble_nu(minus: &Partition, plus: &Partition) -> FiniteWeight {
    let n = (minus.len() + plus.len()).max(1);
    FiniteWeight::assemble(
        &HalfInfiniteWeight::negative(minus.clone()),
        &HalfInfiniteWeight::positive(plus.clone()),
        n,
    )
    .unwrap()
}

/// Every triple whose four partitions have size at most `max_size`.
pub fn triple_grid(max_size: u32) -> Vec<Triple> {
    let parts = Partition::all_up_to(max_size);
    let mut out = Vec::new();
    for a in &parts {
        for b in &parts {
            let nu = assemble_nu(a, b);
            for l in &parts {
                for m in &parts {
                    out.push((nu.clone(), HalfInfiniteWeight::negative(l.clone()), HalfInfiniteWeight::positive(m.clone())));
                }
            }
        }
    }
    out
}

/// Random triples built so that the connecting diagram exists: pick `Λ₋, Λ₊`,
/// a size for `D`, and grow each side by that many boxes.
pub fn random_triple<R: Rng>(rng: &mut R, max_size: u32) -> Triple {
    let d = rng.gen_range(0..=max_size);
    let a_size = rng.gen_range(0..=max_size - d);
    let b_size = rng.gen_range(0..=max_size - d);
    let a = random_partition(rng, a_size);
    let b = random_partition(rng, b_size);
    let grow = |rng: &mut R, base: &Partition| -> Partition {
        let target = base.size() + d;
        let supersets: Vec<Partition> =
            Partition::all_of_size(target).into_iter().filter(|p| p.contains(base)).collect();
        supersets.choose(rng).unwrap().clone()
    };
    let l = grow(rng, &a);
    let m = grow(rng, &b);
    (assemble_nu(&a, &b), HalfInfiniteWeight::negative(l), HalfInfiniteWeight::positive(m))
}

pub fn stable_ranks(t: &Triple) -> Vec<usize> {
    let n = stable_bound(&t.0, &t.1, &t.2).max(1);
    vec![n, n + 1, n + 2]
}
