//! Irreducible polynomial representations of the two diagonal blocks, realized
//! inside tensor powers of the natural module (positive block) and of its dual
//! (negative block).

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::algebra::Unit;
use crate::linalg::{q, rref, Q};
use crate::partitions::{HalfInfiniteWeight, Sign};

/// A tensor word: letter `i` stands for `e_i` (positive block) or `e_i^*` (negative block).
pub type Word = Vec<i32>;
pub type TensorVec = BTreeMap<Word, Q>;

/// Sorted multiset of letters; determines the weight of a word.
type Content = Vec<i32>;

#[derive(Clone, Debug)]
pub struct TensorFactor {
    kind: Sign,
    highest: TensorVec,
    highest_content: Content,
    highest_depth: i64,
}

impl TensorFactor {
    pub fn new(w: &HalfInfiniteWeight) -> Self {
        let kind = w.kind;
        let columns = w.body.conjugate();
        let letter = |r: u32| -> i32 {
            match kind {
                Sign::Positive => r as i32 + 1,
                Sign::Negative => -(r as i32),
            }
        };
        let mut highest: TensorVec = BTreeMap::from([(Vec::new(), Q::one())]);
        for &len in columns.rows() {
            let letters: Vec<i32> = (0..len).map(letter).collect();
            let wedge = antisymmetrize(&letters);
            let mut next = BTreeMap::new();
            for (w1, c1) in &highest {
                for (w2, s) in &wedge {
                    let mut w = w1.clone();
                    w.extend_from_slice(w2);
                    next.insert(w, c1 * q(*s));
                }
            }
            highest = next;
        }
        let mut highest_content: Content =
            highest.keys().next().cloned().unwrap_or_default();
        highest_content.sort_unstable();
        let mut f = TensorFactor { kind, highest, highest_content, highest_depth: 0 };
        f.highest_depth = f.raw_depth(&f.highest_content.clone());
        f
    }

    pub fn kind(&self) -> Sign {
        self.kind
    }

    pub fn highest(&self) -> &TensorVec {
        &self.highest
    }

    pub fn highest_word_content(&self) -> &[i32] {
        &self.highest_content
    }

    pub fn is_trivial(&self) -> bool {
        self.highest_content.is_empty()
    }

    fn raw_depth(&self, letters: &[i32]) -> i64 {
        let s: i64 = letters.iter().map(|&x| x as i64).sum();
        match self.kind {
            Sign::Positive => s,
            Sign::Negative => -s,
        }
    }

    /// Number of lowering steps separating a word from the highest weight.
    pub fn depth(&self, word: &[i32]) -> i64 {
        self.raw_depth(word) - self.highest_depth
    }

    /// Weight carried by a single letter at its index.
    pub fn letter_weight(&self) -> i64 {
        match self.kind {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    /// Whether `u` belongs to this factor's block.
    pub fn owns(&self, u: Unit) -> bool {
        match self.kind {
            Sign::Positive => u.row >= 1 && u.col >= 1,
            Sign::Negative => u.row <= 0 && u.col <= 0,
        }
    }

    /// Action of a block unit on a single word, as `(word, coefficient)` pairs.
    pub fn apply_word(&self, u: Unit, word: &[i32]) -> Vec<(Word, i64)> {
        let (from, to, sign) = match self.kind {
            Sign::Positive => (u.col, u.row, 1),
            Sign::Negative => (u.row, u.col, -1),
        };
        word.iter()
            .enumerate()
            .filter(|&(_, &x)| x == from)
            .map(|(i, _)| {
                let mut w = word.to_vec();
                w[i] = to;
                (w, sign)
            })
            .collect()
    }

    pub fn apply(&self, u: Unit, v: &TensorVec) -> TensorVec {
        let mut out = TensorVec::new();
        for (w, c) in v {
            for (w2, s) in self.apply_word(u, w) {
                let e = out.entry(w2).or_insert_with(Q::zero);
                *e += c * q(s);
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Simple lowering unit moving a letter one step deeper.
    fn lowering_into(&self, target: i32) -> Option<(Unit, i32)> {
        match self.kind {
            Sign::Positive if target >= 2 => Some((Unit::new(target, target - 1), target - 1)),
            Sign::Negative if target <= -1 => Some((Unit::new(target + 1, target), target + 1)),
            _ => None,
        }
    }

    fn weight_space(&self, content: &Content, memo: &mut HashMap<Content, Vec<TensorVec>>) -> Vec<TensorVec> {
        if let Some(b) = memo.get(content) {
            return b.clone();
        }
        let d = self.depth(content);
        let basis = if d == 0 {
            if *content == self.highest_content {
                vec![self.highest.clone()]
            } else {
                Vec::new()
            }
        } else if d < 0 {
            Vec::new()
        } else {
            let mut spanning = Vec::new();
            let mut distinct = content.clone();
            distinct.dedup();
            for &x in &distinct {
                let Some((u, source)) = self.lowering_into(x) else { continue };
                let mut prev = content.clone();
                let pos = prev.iter().position(|&y| y == x).expect("letter present");
                prev[pos] = source;
                prev.sort_unstable();
                for v in self.weight_space(&prev, memo) {
                    let w = self.apply(u, &v);
                    if !w.is_empty() {
                        spanning.push(w);
                    }
                }
            }
            reduce_to_basis(spanning)
        };
        memo.insert(content.clone(), basis.clone());
        basis
    }

    /// Weight bases of the irreducible module, grouped by depth `0..=max_depth`.
    pub fn graded_basis(&self, max_depth: usize) -> Vec<Vec<TensorVec>> {
        let mut memo = HashMap::new();
        let mut out: Vec<Vec<TensorVec>> = vec![Vec::new(); max_depth + 1];
        let mut frontier: Vec<Content> = vec![self.highest_content.clone()];
        for (d, slot) in out.iter_mut().enumerate() {
            let mut live = Vec::new();
            for c in &frontier {
                let b = self.weight_space(c, &mut memo);
                if !b.is_empty() {
                    slot.extend(b);
                    live.push(c.clone());
                }
            }
            if d == max_depth {
                break;
            }
            let mut next: Vec<Content> = Vec::new();
            for c in &live {
                let mut distinct = c.clone();
                distinct.dedup();
                for &x in &distinct {
                    let target = match self.kind {
                        Sign::Positive => x + 1,
                        Sign::Negative => x - 1,
                    };
                    let mut n = c.clone();
                    let pos = n.iter().position(|&y| y == x).expect("letter present");
                    n[pos] = target;
                    n.sort_unstable();
                    next.push(n);
                }
            }
            next.sort();
            next.dedup();
            frontier = next;
        }
        out
    }
}

fn antisymmetrize(letters: &[i32]) -> Vec<(Word, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..letters.len()).collect();
    permutations(&mut perm, 0, 1, &mut |p, s| {
        out.push((p.iter().map(|&i| letters[i]).collect(), s));
    });
    out
}

fn permutations(p: &mut Vec<usize>, k: usize, sign: i64, f: &mut impl FnMut(&[usize], i64)) {
    if k == p.len() {
        f(p, sign);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permutations(p, k + 1, if i == k { sign } else { -sign }, f);
        p.swap(k, i);
    }
}

/// Row-reduced basis of the span of `vecs`.
pub fn reduce_to_basis(vecs: Vec<TensorVec>) -> Vec<TensorVec> {
    if vecs.len() <= 1 {
        return vecs;
    }
    let mut keys: Vec<&Word> = vecs.iter().flat_map(|v| v.keys()).collect();
    keys.sort();
    keys.dedup();
    let index: HashMap<&Word, usize> = keys.iter().enumerate().map(|(i, w)| (*w, i)).collect();
    let mut rows: Vec<Vec<Q>> = vecs
        .iter()
        .map(|v| {
            let mut r = vec![Q::zero(); keys.len()];
            for (w, c) in v {
                r[index[w]] = c.clone();
            }
            r
        })
        .collect();
    rref(&mut rows);
    rows.into_iter()
        .map(|r| {
            r.into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (keys[i].clone(), c))
                .collect()
        })
        .collect()
}
