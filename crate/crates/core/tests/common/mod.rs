#![allow(dead_code)]

//! Shared helpers for the integration suites: exhaustive enumeration of
//! small connected graded posets, deterministic labeling samples, and
//! alignment of computed character tables against printed reference tables.

use ordpoly::poset::{FinitePoset, LabeledPoset};
use ordpoly::reptheory::classfn::CharacterTable;
use ordpoly::reptheory::perm::{PermGroup, Permutation};
use std::sync::OnceLock;

/// All connected graded posets with `1..=max_n` elements, up to isomorphism,
/// enumerated by level structure: levels V_0..V_r, covers only between
/// adjacent levels, every non-maximal element covered above and every
/// non-minimal element covering below.
pub fn connected_graded_posets(max_n: usize) -> Vec<FinitePoset> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let mut seen: Vec<(Vec<usize>, Vec<Vec<(usize, usize)>>)> = Vec::new();
        for levels in compositions(n) {
            if levels.len() == 1 {
                if levels[0] == 1 {
                    out.push(build_poset(&levels, &[]));
                }
                continue;
            }
            let layer_options: Vec<Vec<Vec<(usize, usize)>>> = levels
                .windows(2)
                .map(|w| covering_bipartite_graphs(w[0], w[1]))
                .collect();
            let mut stack: Vec<Vec<Vec<(usize, usize)>>> = vec![Vec::new()];
            for options in &layer_options {
                let mut next = Vec::new();
                for prefix in &stack {
                    for opt in options {
                        let mut p = prefix.clone();
                        p.push(opt.clone());
                        next.push(p);
                    }
                }
                stack = next;
            }
            for layers in stack {
                if !layers_connected(&levels, &layers) {
                    continue;
                }
                let canon = canonical_form(&levels, &layers);
                if seen.contains(&canon) {
                    continue;
                }
                seen.push(canon);
                out.push(build_poset(&levels, &layers));
            }
        }
    }
    out
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions(n - first) {
            let mut c = vec![first];
            c.extend(rest);
            out.push(c);
        }
    }
    out
}

/// Bipartite graphs on `a x b` where every left vertex has an edge and every
/// right vertex has an edge.
fn covering_bipartite_graphs(a: usize, b: usize) -> Vec<Vec<(usize, usize)>> {
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 1u64..(1 << edges.len()) {
        let chosen: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let left: std::collections::HashSet<usize> = chosen.iter().map(|&(i, _)| i).collect();
        let right: std::collections::HashSet<usize> = chosen.iter().map(|&(_, j)| j).collect();
        if left.len() == a && right.len() == b {
            out.push(chosen);
        }
    }
    out
}

fn layers_connected(levels: &[usize], layers: &[Vec<(usize, usize)>]) -> bool {
    let n: usize = levels.iter().sum();
    let mut offsets = vec![0usize];
    for &l in levels {
        offsets.push(offsets.last().unwrap() + l);
    }
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (li, layer) in layers.iter().enumerate() {
        for &(i, j) in layer {
            let (x, y) = (offsets[li] + i, offsets[li + 1] + j);
            adj[x].push(y);
            adj[y].push(x);
        }
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == n
}

fn permutations_of(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x);
                rec(n, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    rec(n, &mut used, &mut cur, &mut out);
    out
}

fn canonical_form(
    levels: &[usize],
    layers: &[Vec<(usize, usize)>],
) -> (Vec<usize>, Vec<Vec<(usize, usize)>>) {
    let perms_per_level: Vec<Vec<Vec<usize>>> =
        levels.iter().map(|&l| permutations_of(l)).collect();
    let mut combos: Vec<Vec<usize>> = vec![Vec::new()];
    for perms in &perms_per_level {
        let mut next = Vec::new();
        for prefix in &combos {
            for (pi, _) in perms.iter().enumerate() {
                let mut p = prefix.clone();
                p.push(pi);
                next.push(p);
            }
        }
        combos = next;
    }
    let mut best: Option<Vec<Vec<(usize, usize)>>> = None;
    for combo in combos {
        let mut enc = Vec::with_capacity(layers.len());
        for (li, layer) in layers.iter().enumerate() {
            let p = &perms_per_level[li][combo[li]];
            let q = &perms_per_level[li + 1][combo[li + 1]];
            let mut mapped: Vec<(usize, usize)> =
                layer.iter().map(|&(i, j)| (p[i], q[j])).collect();
            mapped.sort_unstable();
            enc.push(mapped);
        }
        if best.as_ref().is_none_or(|b| enc < *b) {
            best = Some(enc);
        }
    }
    (levels.to_vec(), best.unwrap())
}

fn build_poset(levels: &[usize], layers: &[Vec<(usize, usize)>]) -> FinitePoset {
    let n: usize = levels.iter().sum();
    let mut offsets = vec![0usize];
    for &l in levels {
        offsets.push(offsets.last().unwrap() + l);
    }
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut covers = Vec::new();
    for (li, layer) in layers.iter().enumerate() {
        for &(i, j) in layer {
            covers.push((
                names[offsets[li] + i].clone(),
                names[offsets[li + 1] + j].clone(),
            ));
        }
    }
    FinitePoset::new(names, &covers).expect("level structure is a valid poset")
}

static FAMILY: OnceLock<Vec<FinitePoset>> = OnceLock::new();

/// The memoized family of connected graded posets with at most 6 elements.
pub fn family6() -> &'static [FinitePoset] {
    FAMILY.get_or_init(|| connected_graded_posets(6))
}

/// Deterministic pseudo-random stream for labeling samples.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }
}

/// Match the rows of a computed character table against a printed reference
/// matrix whose columns are identified by explicit class representatives.
/// Returns, for each reference row, the index of the computed row with the
/// same values, or `None` when matching fails.
pub fn align_rows(
    table: &CharacterTable,
    group: &PermGroup,
    class_reps: &[Permutation],
    reference: &[Vec<i64>],
) -> Option<Vec<usize>> {
    let classes: Vec<usize> = class_reps
        .iter()
        .map(|r| group.class_of(r).expect("representative in group"))
        .collect();
    let mut assignment = Vec::with_capacity(reference.len());
    for row in reference {
        let mut found = None;
        for (i, chi) in table.irreducibles.iter().enumerate() {
            let matches = classes.iter().zip(row.iter()).all(|(&c, &v)| {
                chi.value(c)
                    .to_integer()
                    .map(|x| x == v.into())
                    .unwrap_or(false)
            });
            if matches {
                if found.is_some() {
                    return None; // ambiguous
                }
                found = Some(i);
            }
        }
        assignment.push(found?);
    }
    let mut unique = assignment.clone();
    unique.sort_unstable();
    unique.dedup();
    if unique.len() != assignment.len() {
        return None;
    }
    Some(assignment)
}

/// Reorder a table-order multiplicity vector into reference-row order.
pub fn to_reference_order(mult: &[i64], alignment: &[usize]) -> Vec<i64> {
    alignment.iter().map(|&i| mult[i]).collect()
}

/// Graded edge labelings found by deterministic sampling, with the all-plus
/// labeling excluded.
pub fn sample_graded_labelings(
    poset: &FinitePoset,
    rng: &mut XorShift,
    attempts: usize,
) -> Vec<LabeledPoset> {
    sample_labelings(poset, rng, attempts, true)
}

/// Consistent (not necessarily graded) labelings from the same sampler.
pub fn sample_consistent_labelings(
    poset: &FinitePoset,
    rng: &mut XorShift,
    attempts: usize,
) -> Vec<LabeledPoset> {
    sample_labelings(poset, rng, attempts, false)
}

fn sample_labelings(
    poset: &FinitePoset,
    rng: &mut XorShift,
    attempts: usize,
    graded_only: bool,
) -> Vec<LabeledPoset> {
    let e = poset.covers().len();
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for _ in 0..attempts {
        let bits = rng.next();
        let signs: Vec<i8> = (0..e)
            .map(|i| if bits >> (i % 64) & 1 == 1 { 1 } else { -1 })
            .collect();
        if signs.iter().all(|&s| s == 1) || !seen.insert(signs.clone()) {
            continue;
        }
        let labeling =
            ordpoly::poset::EdgeLabeling::from_signs(poset, signs).expect("size matches");
        let lp = ordpoly::poset::analyze(poset.clone(), labeling).expect("analyzable");
        if lp.is_graded() || (!graded_only && lp.is_consistent()) {
            out.push(lp);
        }
    }
    out
}
