//! Saturations of a parity-form labeled poset: ordered partitions into
//! antichain blocks of alternating rank, their definitional predicate, and
//! the orbit/stabilizer structure under a group of automorphisms.

use crate::error::{Error, Result};
use crate::poset::{analyze, automorphism_group, EdgeLabeling, FinitePoset, LabeledPoset};
use crate::reptheory::perm::{PermGroup, Permutation};
use std::collections::BTreeMap;
use std::rc::Rc;

/// A saturated extension of a labeled poset, stored as its ordered
/// antichain-block decomposition. Block signs alternate +1, -1, +1, ...
/// because block ranks alternate 0, 1, 0, ...; they are stored explicitly
/// for the record.
#[derive(Debug, Clone)]
pub struct Saturation {
    base: Rc<LabeledPoset>,
    /// Ordered blocks, each sorted ascending.
    blocks: Vec<Vec<usize>>,
    /// Sign between consecutive blocks: `rank(A_{i+1}) - rank(A_i)`.
    block_signs: Vec<i8>,
    /// `r_Q(1)`: the ordinary grade of the underlying ordinal sum, equal to
    /// the number of block gaps.
    grade_value_one: i64,
}

impl Saturation {
    fn new(base: Rc<LabeledPoset>, blocks: Vec<Vec<usize>>) -> Self {
        let block_signs = (0..blocks.len().saturating_sub(1))
            .map(|i| if i % 2 == 0 { 1 } else { -1 })
            .collect();
        let grade_value_one = blocks.len() as i64 - 1;
        Saturation {
            base,
            blocks,
            block_signs,
            grade_value_one,
        }
    }

    pub fn base(&self) -> &LabeledPoset {
        &self.base
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_signs(&self) -> &[i8] {
        &self.block_signs
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// `r_Q(1)`, the number of block gaps.
    pub fn grade_value_one(&self) -> i64 {
        self.grade_value_one
    }

    pub fn block_names(&self) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|b| {
                b.iter()
                    .map(|&x| self.base.poset().element_name(x).to_string())
                    .collect()
            })
            .collect()
    }

    /// Canonical key for deduplication and orbit bookkeeping.
    pub fn key(&self) -> Vec<Vec<usize>> {
        self.blocks.clone()
    }

    /// The saturation as a labeled poset (Q, delta) on the same elements:
    /// consecutive blocks are fully comparable, labels follow block signs.
    pub fn as_labeled_poset(&self) -> LabeledPoset {
        let poset = self.base.poset();
        let names: Vec<String> = poset.elements().to_vec();
        let mut covers = Vec::new();
        let mut signs = Vec::new();
        for (gap, window) in self.blocks.windows(2).enumerate() {
            let s = self.block_signs[gap];
            for &a in &window[0] {
                for &b in &window[1] {
                    let pair = (names[a].clone(), names[b].clone());
                    signs.push((pair.clone(), s));
                    covers.push(pair);
                }
            }
        }
        let q = FinitePoset::new(names, &covers).expect("block ordinal sum is a poset");
        let labeling = EdgeLabeling::from_named(&q, &signs).expect("labels match covers");
        analyze(q, labeling).expect("block ordinal sum analyzes")
    }

    /// The image saturation `g . (Q, delta)`, with `x < y` in `gQ` iff
    /// `g^-1 x < g^-1 y` in `Q`: blocks map forward through `g`.
    pub fn apply(&self, g: &Permutation) -> Saturation {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let mut img: Vec<usize> = b.iter().map(|&x| g.apply(x)).collect();
                img.sort_unstable();
                img
            })
            .collect();
        Saturation::new(self.base.clone(), blocks)
    }
}

/// The definitional saturation predicate, checked independently of the
/// enumeration: (Q, delta) must share the ground set, be delta-consistent and
/// saturated, extend P, and preserve the rank function.
pub fn is_saturation(candidate: &Saturation) -> bool {
    let base = candidate.base();
    let n = base.len();
    let mut covered = vec![false; n];
    for block in candidate.blocks() {
        for &x in block {
            if x >= n || covered[x] {
                return false;
            }
            covered[x] = true;
        }
    }
    if !covered.iter().all(|&c| c) {
        return false;
    }
    let q = candidate.as_labeled_poset();
    if !q.is_consistent() {
        return false;
    }
    let (rank_q, rank_p) = match (q.rank(), base.rank()) {
        (Some(a), Some(b)) => (a, b),
        _ => return false,
    };
    if rank_q != rank_p {
        return false;
    }
    // saturated: rank-adjacent elements comparable in Q
    for x in 0..n {
        for y in 0..n {
            if (rank_q[x] - rank_q[y]).abs() == 1
                && !q.poset().leq(x, y)
                && !q.poset().leq(y, x)
            {
                return false;
            }
        }
    }
    // Q extends P
    for x in 0..n {
        for y in 0..n {
            if base.poset().lt(x, y) && !q.poset().lt(x, y) {
                return false;
            }
        }
    }
    true
}

/// All saturations of a consistent parity-form labeled poset, enumerated as
/// ordered partitions into nonempty blocks with `A_i` inside rank class
/// `i mod 2` and every strict relation of P pointing forward across blocks.
/// The result is duplicate-free by construction.
pub fn enumerate_saturations(lp: &LabeledPoset) -> Result<Vec<Saturation>> {
    let rank = lp.rank().ok_or(Error::NotConsistent)?;
    if !lp.has_parity_ranks() {
        return Err(Error::RankOutOfParityRange);
    }
    let base = Rc::new(lp.clone());
    let n = lp.len();
    let mut out = Vec::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let remaining: Vec<usize> = (0..n).collect();

    fn rec(
        lp: &LabeledPoset,
        rank: &[i64],
        base: &Rc<LabeledPoset>,
        remaining: &[usize],
        parity: i64,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Saturation>,
    ) {
        if remaining.is_empty() {
            out.push(Saturation::new(base.clone(), blocks.clone()));
            return;
        }
        // candidates: correct rank parity and minimal among the remaining
        let candidates: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&x| {
                rank[x] == parity
                    && !remaining.iter().any(|&y| lp.poset().lt(y, x))
            })
            .collect();
        if candidates.is_empty() {
            return;
        }
        for mask in 1u64..(1 << candidates.len()) {
            let block: Vec<usize> = candidates
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect();
            let rest: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|x| !block.contains(x))
                .collect();
            blocks.push(block);
            rec(lp, rank, base, &rest, 1 - parity, blocks, out);
            blocks.pop();
        }
    }

    rec(lp, rank, &base, &remaining, 0, &mut blocks, &mut out);
    debug_assert!(out.iter().all(is_saturation));
    Ok(out)
}

/// A G-orbit of saturations with its stabilizer.
#[derive(Debug, Clone)]
pub struct SaturationOrbit {
    pub representative: Saturation,
    pub members: Vec<Saturation>,
    pub stabilizer: Vec<Permutation>,
}

impl SaturationOrbit {
    pub fn orbit_size(&self) -> usize {
        self.members.len()
    }

    pub fn stabilizer_order(&self) -> usize {
        self.stabilizer.len()
    }
}

/// Partition the saturations of `lp` into orbits under `subgroup`. The
/// stabilizer of each canonical representative is computed by the direct
/// fixed-point test and cross-checked against `G intersect Aut(Q, delta)`.
pub fn saturation_orbits(lp: &LabeledPoset, subgroup: &PermGroup) -> Result<Vec<SaturationOrbit>> {
    if subgroup.degree() != lp.len()
        || !subgroup.elements().iter().all(|g| lp.is_automorphism(g))
    {
        return Err(Error::NotASubgroupOfAut);
    }
    let sats = enumerate_saturations(lp)?;
    let mut by_key: BTreeMap<Vec<Vec<usize>>, Saturation> = sats
        .into_iter()
        .map(|s| (s.key(), s))
        .collect();
    let mut orbits = Vec::new();
    while let Some(seed_key) = by_key.keys().next().cloned() {
        let seed = by_key.get(&seed_key).expect("seed present").clone();
        let mut member_keys: Vec<Vec<Vec<usize>>> = Vec::new();
        for g in subgroup.elements() {
            let img = seed.apply(g);
            let k = img.key();
            if !member_keys.contains(&k) {
                member_keys.push(k);
            }
        }
        member_keys.sort();
        let representative = by_key
            .get(&member_keys[0])
            .expect("orbit member enumerated")
            .clone();
        let stabilizer: Vec<Permutation> = subgroup
            .elements()
            .iter()
            .filter(|g| representative.apply(g).key() == representative.key())
            .cloned()
            .collect();
        // Lemma cross-check: the stabilizer is G intersect Aut(Q, delta)
        let aut_q = automorphism_group(&representative.as_labeled_poset());
        let via_lemma: Vec<Permutation> = subgroup
            .elements()
            .iter()
            .filter(|g| aut_q.contains(g))
            .cloned()
            .collect();
        assert_eq!(
            stabilizer, via_lemma,
            "stabilizer must equal G intersect Aut(Q, delta)"
        );
        assert_eq!(
            member_keys.len() * stabilizer.len(),
            subgroup.order(),
            "orbit-stabilizer"
        );
        let members: Vec<Saturation> = member_keys
            .iter()
            .map(|k| by_key.remove(k).expect("orbit members distinct"))
            .collect();
        orbits.push(SaturationOrbit {
            representative,
            members,
            stabilizer,
        });
    }
    // deterministic order: by representative key
    orbits.sort_by_key(|o| o.representative.key());
    Ok(orbits)
}
