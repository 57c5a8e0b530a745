//! Lattice-point counting for half-open order polytopes and their fixed
//! loci, classical and equivariant h*-computation, and the saturation
//! decomposition of the equivariant h*-polynomial.

pub mod polytope;

use crate::error::{Error, Result};

use crate::poset::saturation::saturation_orbits;
use crate::poset::{automorphism_group, quotient, derive_vertex_labeling, LabeledPoset};
use crate::reptheory::classfn::{induce, restrict, CharacterTable, ClassFunction, VirtualCharacter};
use crate::reptheory::cyclotomic::Cyclotomic;
use crate::reptheory::dixon::character_table_cached;
use crate::reptheory::perm::{PermGroup, Permutation};
use crate::{CharPolynomial, IntPolynomial};
use std::collections::{HashMap, HashSet};

/// Sequence of dilate point counts `c_m = |m O(P,eps) cap Z^P|` (or a g-fixed
/// variant), for m = 0..max_dilate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DilateCounts {
    pub counts: Vec<i128>,
}

impl DilateCounts {
    pub fn max_dilate(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Strict pairs of the half-open order polytope: `p < q` is nonascending iff
/// some saturated chain from p to q carries a -1 label.
pub fn nonascending_pairs(lp: &LabeledPoset) -> Vec<(usize, usize)> {
    let n = lp.len();
    let poset = lp.poset();
    let mut memo: HashMap<(usize, usize), bool> = HashMap::new();
    fn has_negative(
        lp: &LabeledPoset,
        p: usize,
        q: usize,
        memo: &mut HashMap<(usize, usize), bool>,
    ) -> bool {
        if p == q {
            return false;
        }
        if let Some(&v) = memo.get(&(p, q)) {
            return v;
        }
        let mut result = false;
        for (pos, &(a, z)) in lp.poset().covers().iter().enumerate() {
            if a != p || !lp.poset().leq(z, q) {
                continue;
            }
            if lp.labeling().sign_at(pos) == -1 || has_negative(lp, z, q, memo) {
                result = true;
                break;
            }
        }
        memo.insert((p, q), result);
        result
    }
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if poset.lt(p, q) && has_negative(lp, p, q, &mut memo) {
                out.push((p, q));
            }
        }
    }
    out
}

/// Order constraints contracted onto the cycles of an optional fixing
/// permutation: weak edges demand `value(a) <= value(b)` for the
/// order-preserving reformulation, strict edges demand strict inequality.
struct ConstraintDag {
    nodes: usize,
    weak: Vec<(usize, usize)>,
    strict: HashSet<(usize, usize)>,
    unsatisfiable: bool,
}

fn build_dag(lp: &LabeledPoset, fix: Option<&Permutation>) -> ConstraintDag {
    let n = lp.len();
    let node_of: Vec<usize> = match fix {
        None => (0..n).collect(),
        Some(g) => {
            let mut v = vec![0usize; n];
            for (ci, cycle) in g.cycles().iter().enumerate() {
                for &x in cycle {
                    v[x] = ci;
                }
            }
            v
        }
    };
    let nodes = node_of.iter().copied().max().unwrap_or(0) + 1;
    let mut weak = HashSet::new();
    let mut strict = HashSet::new();
    let mut unsatisfiable = false;
    for (pos, &(a, b)) in lp.poset().covers().iter().enumerate() {
        let (u, v) = (node_of[a], node_of[b]);
        let is_strict = lp.labeling().sign_at(pos) == -1;
        if u == v {
            if is_strict {
                unsatisfiable = true;
            }
            continue;
        }
        weak.insert((u, v));
        if is_strict {
            strict.insert((u, v));
        }
    }
    ConstraintDag {
        nodes,
        weak: weak.into_iter().collect(),
        strict,
        unsatisfiable,
    }
}

/// Count maps `node -> {0..m}` with `value(u) <= value(v)` across weak edges
/// and strict inequality across strict edges, for every m up to `max_dilate`,
/// by dynamic programming over chains of down-closed node sets: a map of
/// maximum value m is a chain of m+1 nested closed sets ending at the full
/// set, and a step may not absorb both ends of a strict edge at once.
fn count_series_dag(dag: &ConstraintDag, max_dilate: usize) -> Vec<i128> {
    if dag.unsatisfiable {
        return vec![0; max_dilate + 1];
    }
    let n = dag.nodes;
    assert!(n <= 60, "constraint graph too large for mask-based counting");
    // enumerate closed sets (closed under predecessors) by BFS
    let mut preds_of: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &dag.weak {
        preds_of[v].push(u);
    }
    let mut ideal_set: HashSet<u64> = HashSet::new();
    let mut queue = vec![0u64];
    ideal_set.insert(0);
    while let Some(s) = queue.pop() {
        for x in 0..n {
            if s >> x & 1 == 1 {
                continue;
            }
            if preds_of[x].iter().all(|&u| s >> u & 1 == 1) {
                let t = s | 1 << x;
                if ideal_set.insert(t) {
                    queue.push(t);
                }
            }
        }
    }
    let mut ideals: Vec<u64> = ideal_set.into_iter().collect();
    ideals.sort_unstable();
    let index: HashMap<u64, usize> = ideals.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let full_idx = index[&full];
    let empty_idx = index[&0];
    let strict_blocks = |added: u64| -> bool {
        dag.strict
            .iter()
            .any(|&(u, v)| added >> u & 1 == 1 && added >> v & 1 == 1)
    };
    // valid predecessor lists
    let k = ideals.len();
    let mut preds: Vec<Vec<u32>> = vec![Vec::new(); k];
    for (j, &big) in ideals.iter().enumerate() {
        for (i, &small) in ideals.iter().enumerate() {
            if small & big == small && !strict_blocks(big & !small) {
                preds[j].push(i as u32);
            }
        }
    }
    let mut dp = vec![0i128; k];
    dp[empty_idx] = 1;
    let mut counts = Vec::with_capacity(max_dilate + 1);
    for _ in 0..=max_dilate {
        let mut next = vec![0i128; k];
        for j in 0..k {
            let mut acc = 0i128;
            for &i in &preds[j] {
                acc += dp[i as usize];
            }
            next[j] = acc;
        }
        dp = next;
        counts.push(dp[full_idx]);
    }
    counts
}

fn check_fix(lp: &LabeledPoset, fix: Option<&Permutation>) -> Result<()> {
    if let Some(g) = fix {
        if g.degree() != lp.len() || !lp.is_automorphism(g) {
            return Err(Error::NotAnAutomorphism);
        }
    }
    Ok(())
}

/// Number of lattice points of the m-th dilate of the half-open order
/// polytope, restricted to the fixed locus of `fix` when given.
pub fn count_points(lp: &LabeledPoset, m: usize, fix: Option<&Permutation>) -> Result<i128> {
    Ok(count_series(lp, m, fix)?.counts[m])
}

/// All dilate counts up to `max_dilate` in one pass.
pub fn count_series(
    lp: &LabeledPoset,
    max_dilate: usize,
    fix: Option<&Permutation>,
) -> Result<DilateCounts> {
    if !lp.is_consistent() {
        return Err(Error::NotConsistent);
    }
    check_fix(lp, fix)?;
    let dag = build_dag(lp, fix);
    Ok(DilateCounts {
        counts: count_series_dag(&dag, max_dilate),
    })
}

/// Test oracle: enumerate all maps `P -> {0..m}` directly against the full
/// defining conditions (all order relations, all nonascending pairs, and the
/// fixed-point condition), without the cover reduction or the chain DP.
pub fn count_points_bruteforce(
    lp: &LabeledPoset,
    m: usize,
    fix: Option<&Permutation>,
) -> Result<i128> {
    if !lp.is_consistent() {
        return Err(Error::NotConsistent);
    }
    check_fix(lp, fix)?;
    let n = lp.len();
    let strict = nonascending_pairs(lp);
    let mut f = vec![0usize; n];
    let mut count = 0i128;
    loop {
        let mut ok = true;
        for p in 0..n {
            for q in 0..n {
                if lp.poset().lt(p, q) && f[p] < f[q] {
                    ok = false;
                }
            }
        }
        if ok {
            for &(p, q) in &strict {
                if f[p] <= f[q] {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            if let Some(g) = fix {
                for x in 0..n {
                    if f[g.inverse().apply(x)] != f[x] {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if ok {
            count += 1;
        }
        // odometer
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(count);
            }
            if f[pos] < m {
                f[pos] += 1;
                break;
            }
            f[pos] = 0;
            pos += 1;
        }
    }
}

fn convolve_to_hstar(counts: &[i128], n: usize) -> Result<IntPolynomial> {
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc: i128 = 0;
        for i in 0..=j {
            let b = crate::poly::binomial(n + 1, j - i) as i128;
            let term = b * counts[i];
            if (j - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        coeffs.push(i64::try_from(acc).map_err(|_| {
            Error::GuardExceeded("h* coefficient exceeds 64 bits".into())
        })?);
    }
    Ok(IntPolynomial::new(coeffs))
}

/// The h*-polynomial of the half-open order polytope: the numerator of
/// `(1-t)^(|P|+1) sum_m c_m t^m`, read off from the counts m = 0..|P|.
pub fn hstar(lp: &LabeledPoset) -> Result<IntPolynomial> {
    let n = lp.len();
    let counts = count_series(lp, n, None)?;
    convolve_to_hstar(&counts.counts, n)
}

/// Independent h* route: descent generating polynomial over the linear
/// extensions of P with respect to the vertex labeling induced by the edge
/// labeling.
pub fn hstar_via_linear_extensions(lp: &LabeledPoset) -> Result<IntPolynomial> {
    let omega = derive_vertex_labeling(lp)?;
    let mut coeffs = vec![0i64; lp.len().max(1)];
    for ext in lp.poset().linear_extensions() {
        let descents = ext
            .windows(2)
            .filter(|w| omega[w[0]] > omega[w[1]])
            .count();
        coeffs[descents] += 1;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// `(1-t) prod_j (1 - t^(mu_j))` for a cycle type mu.
fn det_factor(cycle_type: &[usize]) -> IntPolynomial {
    let mut acc = IntPolynomial::new(vec![1, -1]);
    for &mu in cycle_type {
        let mut f = vec![0i64; mu + 1];
        f[0] = 1;
        f[mu] = -1;
        acc = acc.mul(&IntPolynomial::new(f));
    }
    acc
}

/// `prod_j (1 + t + ... + t^(mu_j - 1))` for a cycle type mu.
fn geometric_factor(cycle_type: &[usize]) -> IntPolynomial {
    let mut acc = IntPolynomial::one();
    for &mu in cycle_type {
        acc = acc.mul(&IntPolynomial::geometric(mu));
    }
    acc
}

fn assemble_char_polynomial(group: &PermGroup, evals: &[IntPolynomial]) -> CharPolynomial {
    let degree = evals
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .map(|d| d + 1)
        .unwrap_or(0);
    let k = group.class_count();
    let coeffs: Vec<ClassFunction> = (0..degree)
        .map(|i| {
            ClassFunction::new(
                (0..k)
                    .map(|c| Cyclotomic::from_integer(evals[c].coeff(i)))
                    .collect(),
            )
        })
        .collect();
    CharPolynomial::new(coeffs)
}

fn ensure_subgroup_of_aut(lp: &LabeledPoset, group: &PermGroup) -> Result<()> {
    if group.degree() != lp.len()
        || !group.elements().iter().all(|g| lp.is_automorphism(g))
    {
        return Err(Error::NotASubgroupOfAut);
    }
    Ok(())
}

/// Decompose every coefficient of a class-function polynomial over a table.
pub fn decompose_char_polynomial(
    table: &CharacterTable,
    poly: &CharPolynomial,
) -> Result<Vec<VirtualCharacter>> {
    poly.coeffs().iter().map(|f| table.decompose(f)).collect()
}

/// The equivariant h*-polynomial, computed per conjugacy class through the
/// fixed-locus identification with the quotient poset: the evaluation at a
/// class with cycle type mu is `hstar(P/<u>) * prod_j (1 + ... + t^(mu_j-1))`.
/// Coefficients are decomposed eagerly; a non-integral multiplicity is an
/// error, and so is a non-effective coefficient on 1-graded input.
pub fn equivariant_hstar(lp: &LabeledPoset, group: &PermGroup) -> Result<CharPolynomial> {
    if !lp.is_consistent() {
        return Err(Error::NotConsistent);
    }
    ensure_subgroup_of_aut(lp, group)?;
    let k = group.class_count();
    let mut evals = Vec::with_capacity(k);
    for c in 0..k {
        let u = group.class_representative(c).clone();
        let cyclic = PermGroup::from_generators(group.degree(), vec![u.clone()])?;
        let q = quotient(lp, &cyclic)?;
        let hq = hstar(&q)?;
        evals.push(hq.mul(&geometric_factor(&u.cycle_type())));
    }
    let poly = assemble_char_polynomial(group, &evals);
    if let Some(d) = poly.degree() {
        assert!(d <= lp.len(), "equivariant h* degree exceeds |P|");
    }
    let table = character_table_cached(group)?;
    let decomposed = decompose_char_polynomial(&table, &poly)?;
    if lp.is_one_graded() {
        for (i, v) in decomposed.iter().enumerate() {
            if !v.is_effective() {
                return Err(Error::NotEffective(format!(
                    "h* coefficient {i} of a 1-graded poset"
                )));
            }
        }
    }
    Ok(poly)
}

/// Independent equivariant route: per class, the truncated g-fixed count
/// series is multiplied by `(1-t) prod_j (1-t^(mu_j))` and the coefficients
/// beyond degree |P| must vanish inside the trusted window.
pub fn equivariant_hstar_bruteforce(
    lp: &LabeledPoset,
    group: &PermGroup,
    max_dilate: usize,
) -> Result<CharPolynomial> {
    if !lp.is_consistent() {
        return Err(Error::NotConsistent);
    }
    ensure_subgroup_of_aut(lp, group)?;
    let n = lp.len();
    let max_cycle = group
        .elements()
        .iter()
        .flat_map(|g| g.cycle_type())
        .max()
        .unwrap_or(1);
    let required = n + max_cycle + 1;
    if max_dilate < required {
        return Err(Error::InsufficientMaxDilate {
            given: max_dilate,
            required,
        });
    }
    let k = group.class_count();
    let mut evals = Vec::with_capacity(k);
    for c in 0..k {
        let u = group.class_representative(c).clone();
        let series = count_series(lp, max_dilate, Some(&u))?;
        let det = det_factor(&u.cycle_type());
        // truncated product; coefficients up to max_dilate are exact
        let mut prod = vec![0i128; max_dilate + 1];
        for (i, &ci) in series.counts.iter().enumerate() {
            if ci == 0 {
                continue;
            }
            for (j, &dj) in det.coeffs().iter().enumerate() {
                if i + j <= max_dilate {
                    prod[i + j] += ci * dj as i128;
                }
            }
        }
        for (deg, &v) in prod.iter().enumerate().skip(n + 1) {
            if v != 0 {
                return Err(Error::TruncationUnstable(deg));
            }
        }
        prod.truncate(n + 1);
        let coeffs: Result<Vec<i64>> = prod
            .into_iter()
            .map(|v| {
                i64::try_from(v)
                    .map_err(|_| Error::GuardExceeded("h* coefficient exceeds 64 bits".into()))
            })
            .collect();
        evals.push(IntPolynomial::new(coeffs?));
    }
    Ok(assemble_char_polynomial(group, &evals))
}

/// Restrict every coefficient of a class-function polynomial along a
/// subgroup inclusion.
pub fn restrict_polynomial(
    parent: &PermGroup,
    sub: &PermGroup,
    poly: &CharPolynomial,
) -> Result<CharPolynomial> {
    let coeffs: Result<Vec<ClassFunction>> = poly
        .coeffs()
        .iter()
        .map(|f| restrict(parent, sub, f))
        .collect();
    Ok(CharPolynomial::new(coeffs?))
}

/// Induce every coefficient of a class-function polynomial along a subgroup
/// inclusion.
pub fn induce_polynomial(
    sub: &PermGroup,
    parent: &PermGroup,
    poly: &CharPolynomial,
) -> Result<CharPolynomial> {
    let coeffs: Result<Vec<ClassFunction>> = poly
        .coeffs()
        .iter()
        .map(|f| induce(sub, parent, f))
        .collect();
    Ok(CharPolynomial::new(coeffs?))
}

/// The saturation decomposition of the equivariant h*-polynomial: the sum
/// over orbit representatives of `Ind Res` of the representative's own
/// equivariant h* over its full automorphism group.
pub fn hstar_via_saturations(lp: &LabeledPoset, group: &PermGroup) -> Result<CharPolynomial> {
    if !lp.is_consistent() {
        return Err(Error::NotConsistent);
    }
    if !lp.has_parity_ranks() {
        return Err(Error::RankOutOfParityRange);
    }
    ensure_subgroup_of_aut(lp, group)?;
    let orbits = saturation_orbits(lp, group)?;
    let mut total = CharPolynomial::zero();
    for orbit in &orbits {
        let q = orbit.representative.as_labeled_poset();
        let aut_q = automorphism_group(&q);
        let h_q = equivariant_hstar(&q, &aut_q)?;
        let stab = PermGroup::from_elements(group.degree(), orbit.stabilizer.clone())?;
        let restricted = restrict_polynomial(&aut_q, &stab, &h_q)?;
        let induced = induce_polynomial(&stab, group, &restricted)?;
        total = total.add(&induced);
    }
    Ok(total)
}

/// View a class function on a factor of a direct product as a class function
/// on the product, through the projection onto that factor. `split_at` is
/// the ground-set size of the left factor.
pub fn lift_factor_classfn(
    factor: &PermGroup,
    product: &PermGroup,
    split_at: usize,
    left: bool,
    f: &ClassFunction,
) -> Result<ClassFunction> {
    let mut values = Vec::with_capacity(product.class_count());
    for c in 0..product.class_count() {
        let rep = product.class_representative(c);
        let part = if left {
            Permutation::new(rep.images()[..split_at].to_vec())?
        } else {
            Permutation::new(
                rep.images()[split_at..]
                    .iter()
                    .map(|&i| i - split_at)
                    .collect(),
            )?
        };
        values.push(f.value(factor.class_of(&part)?));
    }
    Ok(ClassFunction::new(values))
}

/// Same lift applied to every coefficient of a polynomial.
pub fn lift_factor_polynomial(
    factor: &PermGroup,
    product: &PermGroup,
    split_at: usize,
    left: bool,
    poly: &CharPolynomial,
) -> Result<CharPolynomial> {
    let coeffs: Result<Vec<ClassFunction>> = poly
        .coeffs()
        .iter()
        .map(|f| lift_factor_classfn(factor, product, split_at, left, f))
        .collect();
    Ok(CharPolynomial::new(coeffs?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;
    use crate::poset::{analyze, EdgeLabeling, FinitePoset};

    fn two_chain(sign: i8) -> LabeledPoset {
        let poset = FinitePoset::chain(1);
        let labeling = EdgeLabeling::from_signs(&poset, vec![sign]).unwrap();
        analyze(poset, labeling).unwrap()
    }

    #[test]
    fn count_two_chain_weak() {
        let lp = two_chain(1);
        assert_eq!(count_points(&lp, 2, None).unwrap(), 6);
        assert_eq!(count_points(&lp, 0, None).unwrap(), 1);
    }

    #[test]
    fn count_two_chain_strict() {
        let lp = two_chain(-1);
        assert_eq!(count_points(&lp, 2, None).unwrap(), 3);
        assert_eq!(count_points(&lp, 0, None).unwrap(), 0);
    }

    #[test]
    fn count_antichain() {
        let lp = LabeledPoset::with_all_plus(FinitePoset::antichain(3));
        assert_eq!(count_points(&lp, 1, None).unwrap(), 8);
    }

    #[test]
    fn counts_match_bruteforce_fig1() {
        let lp = demo::fig1_poset();
        let g = demo::d4_group();
        for c in 0..g.class_count() {
            let u = g.class_representative(c);
            for m in 0..=3 {
                assert_eq!(
                    count_points(&lp, m, Some(u)).unwrap(),
                    count_points_bruteforce(&lp, m, Some(u)).unwrap(),
                    "class {c} dilate {m}"
                );
            }
        }
    }

    #[test]
    fn nonascending_through_chains() {
        // 3-chain with parity labels: (c0,c1)=+1, (c1,c2)=-1
        let lp = LabeledPoset::with_parity(FinitePoset::chain(2)).unwrap();
        let pairs = nonascending_pairs(&lp);
        assert!(pairs.contains(&(1, 2)));
        assert!(pairs.contains(&(0, 2)));
        assert!(!pairs.contains(&(0, 1)));
    }

    #[test]
    fn hstar_eulerian_antichain() {
        let lp = LabeledPoset::with_all_plus(FinitePoset::antichain(3));
        assert_eq!(hstar(&lp).unwrap().coeffs(), &[1, 4, 1]);
        assert_eq!(
            hstar_via_linear_extensions(&lp).unwrap().coeffs(),
            &[1, 4, 1]
        );
    }

    #[test]
    fn hstar_two_chain_is_one() {
        let lp = two_chain(1);
        assert_eq!(hstar(&lp).unwrap().coeffs(), &[1]);
        assert_eq!(hstar_via_linear_extensions(&lp).unwrap().coeffs(), &[1]);
    }

    #[test]
    fn hstar_strict_two_chain_is_t() {
        let lp = two_chain(-1);
        assert_eq!(hstar(&lp).unwrap().coeffs(), &[0, 1]);
        assert_eq!(hstar_via_linear_extensions(&lp).unwrap().coeffs(), &[0, 1]);
    }

    #[test]
    fn hstar_fig1_palindromic_degree_6() {
        let lp = demo::fig1_poset();
        let h = hstar(&lp).unwrap();
        assert_eq!(h.degree(), Some(6));
        assert!(h.is_palindromic(6));
        assert_eq!(h, hstar_via_linear_extensions(&lp).unwrap());
    }

    #[test]
    fn equivariant_evaluation_at_sigma() {
        let lp = demo::fig1_poset();
        let g = demo::d4_group();
        let poly = equivariant_hstar(&lp, &g).unwrap();
        let (sigma, _) = demo::d4_sigma_tau();
        let c = g.class_of(&sigma).unwrap();
        // evaluation at sigma: P/<sigma> is a 2-chain, so h* = 1 and the
        // factor is (1+t+t^2+t^3)^2
        let expected = IntPolynomial::geometric(4).mul(&IntPolynomial::geometric(4));
        for i in 0..=8 {
            assert_eq!(
                poly.coeff(i).value(c),
                Cyclotomic::from_integer(expected.coeff(i)),
                "degree {i}"
            );
        }
    }

    #[test]
    fn equivariant_evaluation_at_identity_is_hstar() {
        let lp = demo::fig1_poset();
        let g = demo::d4_group();
        let poly = equivariant_hstar(&lp, &g).unwrap();
        let h = hstar(&lp).unwrap();
        for i in 0..=8 {
            assert_eq!(poly.coeff(i).value(0), Cyclotomic::from_integer(h.coeff(i)));
        }
    }

    #[test]
    fn bruteforce_matches_symbolic_fig1() {
        let lp = demo::fig1_poset();
        let g = demo::d4_group();
        let a = equivariant_hstar(&lp, &g).unwrap();
        let b = equivariant_hstar_bruteforce(&lp, &g, 13).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bruteforce_trivial_group_recovers_hstar() {
        let lp = demo::fig1_poset();
        let g = PermGroup::trivial(8);
        let poly = equivariant_hstar_bruteforce(&lp, &g, 10).unwrap();
        let h = hstar(&lp).unwrap();
        for i in 0..=8 {
            assert_eq!(poly.coeff(i).value(0), Cyclotomic::from_integer(h.coeff(i)));
        }
    }

    #[test]
    fn max_dilate_guard() {
        let lp = demo::fig1_poset();
        let g = demo::d4_group();
        assert!(matches!(
            equivariant_hstar_bruteforce(&lp, &g, 5),
            Err(Error::InsufficientMaxDilate { .. })
        ));
    }

    #[test]
    fn main_theorem_on_fig1() {
        let lp = demo::fig1_poset();
        let g = demo::d4_group();
        let via_sat = hstar_via_saturations(&lp, &g).unwrap();
        let direct = equivariant_hstar(&lp, &g).unwrap();
        assert_eq!(via_sat, direct);
    }

    #[test]
    fn main_theorem_single_saturation_cases() {
        // antichain: one saturation equal to itself, stab = G
        let lp = LabeledPoset::with_all_plus(FinitePoset::antichain(3));
        let g = PermGroup::symmetric(3).unwrap();
        assert_eq!(
            hstar_via_saturations(&lp, &g).unwrap(),
            equivariant_hstar(&lp, &g).unwrap()
        );
        // 2-chain: single saturation, h* = 1
        let c = two_chain(1);
        let trivial = PermGroup::trivial(2);
        let via = hstar_via_saturations(&c, &trivial).unwrap();
        assert_eq!(via.degree(), Some(0));
        assert_eq!(via.coeff(0).value(0), Cyclotomic::one());
    }
}
