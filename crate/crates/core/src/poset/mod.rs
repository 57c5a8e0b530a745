//! Finite posets with {-1,+1} edge labelings: consistency and gradedness
//! classification, rank functions, parity labelings, ordinal sums,
//! automorphism groups, and quotients by groups of label-preserving
//! automorphisms.

pub mod saturation;

use crate::error::{Error, Result};
use crate::reptheory::perm::{PermGroup, Permutation};
use std::collections::HashMap;

/// A finite poset given by its covering relations. The order relation is the
/// reachability closure of the covers and every stored cover is verified to
/// be a genuine covering pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    elements: Vec<String>,
    /// Covering pairs (a, b) with a covered by b, sorted.
    covers: Vec<(usize, usize)>,
    /// leq[a] is the bitmask of elements b with a <= b.
    up_sets: Vec<u64>,
}

impl FinitePoset {
    pub fn new(elements: Vec<String>, covers_by_name: &[(String, String)]) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyPoset);
        }
        if elements.len() > 60 {
            return Err(Error::GuardExceeded(format!(
                "poset with {} elements exceeds the supported size",
                elements.len()
            )));
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (i, name) in elements.iter().enumerate() {
            if index.insert(name.as_str(), i).is_some() {
                return Err(Error::DuplicateIdentifier(name.clone()));
            }
        }
        let mut covers = Vec::with_capacity(covers_by_name.len());
        for (a, b) in covers_by_name {
            let ia = *index
                .get(a.as_str())
                .ok_or_else(|| Error::UnknownElement(a.clone()))?;
            let ib = *index
                .get(b.as_str())
                .ok_or_else(|| Error::UnknownElement(b.clone()))?;
            if ia == ib {
                return Err(Error::InvalidCovers(format!("loop at `{a}`")));
            }
            covers.push((ia, ib));
        }
        covers.sort_unstable();
        if covers.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidCovers("duplicate cover".into()));
        }
        Self::from_indexed(elements, covers)
    }

    fn from_indexed(elements: Vec<String>, covers: Vec<(usize, usize)>) -> Result<Self> {
        let n = elements.len();
        // transitive closure by DFS over the cover digraph, with cycle check
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(a, b) in &covers {
            children[a].push(b);
            indegree[b] += 1;
        }
        // Kahn topological order; failure means a cycle
        let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        let mut indeg = indegree.clone();
        while let Some(x) = queue.pop() {
            topo.push(x);
            for &y in &children[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    queue.push(y);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::InvalidCovers("cover relation has a cycle".into()));
        }
        let mut up_sets = vec![0u64; n];
        for &x in topo.iter().rev() {
            let mut mask = 1u64 << x;
            for &y in &children[x] {
                mask |= up_sets[y];
            }
            up_sets[x] = mask;
        }
        // genuine-cover check: no intermediate z with a < z < b
        for &(a, b) in &covers {
            for z in 0..n {
                if z != a && z != b && up_sets[a] >> z & 1 == 1 && up_sets[z] >> b & 1 == 1 {
                    return Err(Error::InvalidCovers(format!(
                        "`{}` < `{}` < `{}` makes the listed pair a non-cover",
                        elements[a], elements[z], elements[b]
                    )));
                }
            }
        }
        Ok(FinitePoset {
            elements,
            covers,
            up_sets,
        })
    }

    /// An antichain with elements `a1..ad`.
    pub fn antichain(d: usize) -> Self {
        let elements = (1..=d).map(|i| format!("a{i}")).collect();
        FinitePoset::new(elements, &[]).expect("antichain")
    }

    /// A chain with `len` edges (hence `len + 1` elements `c0 < c1 < ...`).
    pub fn chain(len: usize) -> Self {
        let elements: Vec<String> = (0..=len).map(|i| format!("c{i}")).collect();
        let covers: Vec<(String, String)> = (0..len)
            .map(|i| (format!("c{i}"), format!("c{}", i + 1)))
            .collect();
        FinitePoset::new(elements, &covers).expect("chain")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn element_name(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn element_index(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up_sets[a] >> b & 1 == 1
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.len()];
        for &(_, b) in &self.covers {
            has_lower[b] = true;
        }
        (0..self.len()).filter(|&i| !has_lower[i]).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        let mut has_upper = vec![false; self.len()];
        for &(a, _) in &self.covers {
            has_upper[a] = true;
        }
        (0..self.len()).filter(|&i| !has_upper[i]).collect()
    }

    /// Whether the comparability (Hasse) graph is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.len();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &self.covers {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
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

    /// All linear extensions, each as a sequence of element indices from
    /// bottom to top.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut indegree = vec![0usize; n];
        for &(_, b) in &self.covers {
            indegree[b] += 1;
        }
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(
            poset: &FinitePoset,
            indegree: &mut Vec<usize>,
            used: &mut Vec<bool>,
            current: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if current.len() == poset.len() {
                out.push(current.clone());
                return;
            }
            for x in 0..poset.len() {
                if !used[x] && indegree[x] == 0 {
                    used[x] = true;
                    current.push(x);
                    let mut touched = Vec::new();
                    for &(a, b) in poset.covers() {
                        if a == x {
                            indegree[b] -= 1;
                            touched.push(b);
                        }
                    }
                    rec(poset, indegree, used, current, out);
                    for b in touched {
                        indegree[b] += 1;
                    }
                    current.pop();
                    used[x] = false;
                }
            }
        }
        rec(self, &mut indegree, &mut used, &mut current, &mut out);
        out
    }
}

/// A {-1,+1} labeling of the covers of a fixed poset, stored positionally
/// against the poset's sorted cover list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeLabeling {
    signs: Vec<i8>,
}

impl EdgeLabeling {
    pub fn all_plus(poset: &FinitePoset) -> Self {
        EdgeLabeling {
            signs: vec![1; poset.covers().len()],
        }
    }

    pub fn from_signs(poset: &FinitePoset, signs: Vec<i8>) -> Result<Self> {
        if signs.len() != poset.covers().len() {
            return Err(Error::LabelingMismatch(format!(
                "{} signs for {} covers",
                signs.len(),
                poset.covers().len()
            )));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::LabelingMismatch("signs must be +1 or -1".into()));
        }
        Ok(EdgeLabeling { signs })
    }

    /// Build from (cover, sign) pairs by element name; missing covers default
    /// to +1, unknown covers are an error.
    pub fn from_named(
        poset: &FinitePoset,
        entries: &[((String, String), i8)],
    ) -> Result<Self> {
        let mut signs = vec![1i8; poset.covers().len()];
        for ((a, b), s) in entries {
            let ia = poset
                .element_index(a)
                .ok_or_else(|| Error::UnknownElement(a.clone()))?;
            let ib = poset
                .element_index(b)
                .ok_or_else(|| Error::UnknownElement(b.clone()))?;
            let pos = poset
                .covers()
                .binary_search(&(ia, ib))
                .map_err(|_| Error::LabelingMismatch(format!("`{a}` < `{b}` is not a cover")))?;
            if *s != 1 && *s != -1 {
                return Err(Error::LabelingMismatch("signs must be +1 or -1".into()));
            }
            signs[pos] = *s;
        }
        Ok(EdgeLabeling { signs })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn sign_at(&self, cover_pos: usize) -> i8 {
        self.signs[cover_pos]
    }

    pub fn is_all_plus(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }
}

/// Consistency classification of a labeled poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consistency {
    NotConsistent,
    Consistent,
    Graded,
}

/// A poset with an edge labeling, classified at construction; the rank
/// function exists exactly when the labeling is consistent.
#[derive(Debug, Clone)]
pub struct LabeledPoset {
    poset: FinitePoset,
    labeling: EdgeLabeling,
    consistency: Consistency,
    rank: Option<Vec<i64>>,
    grade_value: Option<i64>,
    is_parity_labeling: bool,
}

/// Classify a labeling: consistent iff a rank function exists with rank 0 on
/// minimal elements and rank difference equal to the sign across each cover;
/// graded additionally requires a constant rank on maximal elements.
pub fn analyze(poset: FinitePoset, labeling: EdgeLabeling) -> Result<LabeledPoset> {
    if labeling.signs().len() != poset.covers().len() {
        return Err(Error::LabelingMismatch(format!(
            "{} signs for {} covers",
            labeling.signs().len(),
            poset.covers().len()
        )));
    }
    let n = poset.len();
    let mut rank: Vec<Option<i64>> = vec![None; n];
    for m in poset.minimal_elements() {
        rank[m] = Some(0);
    }
    // assign ranks by propagation, then verify every cover in one pass
    let mut progressed = true;
    while progressed {
        progressed = false;
        for (pos, &(a, b)) in poset.covers().iter().enumerate() {
            if rank[b].is_none() {
                if let Some(ra) = rank[a] {
                    rank[b] = Some(ra + labeling.sign_at(pos) as i64);
                    progressed = true;
                }
            }
        }
    }
    let consistent = poset.covers().iter().enumerate().all(|(pos, &(a, b))| {
        match (rank[a], rank[b]) {
            (Some(ra), Some(rb)) => rb - ra == labeling.sign_at(pos) as i64,
            _ => false,
        }
    });
    let (consistency, rank_vec, grade_value) = if consistent {
        let ranks: Vec<i64> = rank.into_iter().map(|r| r.expect("rank assigned")).collect();
        let maxima = poset.maximal_elements();
        let top = ranks[maxima[0]];
        let graded = maxima.iter().all(|&m| ranks[m] == top);
        if graded {
            (Consistency::Graded, Some(ranks), Some(top))
        } else {
            (Consistency::Consistent, Some(ranks), None)
        }
    } else {
        (Consistency::NotConsistent, None, None)
    };
    let is_parity = match parity_labeling(&poset) {
        Ok(par) => par == labeling,
        Err(_) => false,
    };
    Ok(LabeledPoset {
        poset,
        labeling,
        consistency,
        rank: rank_vec,
        grade_value,
        is_parity_labeling: is_parity,
    })
}

/// The parity labeling `eps_par(p < q) = (-1)^(chain length to p)`, defined
/// whenever all saturated chains from a minimal element to any fixed element
/// agree on length mod 2.
pub fn parity_labeling(poset: &FinitePoset) -> Result<EdgeLabeling> {
    let n = poset.len();
    let mut level: Vec<Option<u8>> = vec![None; n];
    for m in poset.minimal_elements() {
        level[m] = Some(0);
    }
    let mut progressed = true;
    while progressed {
        progressed = false;
        for &(a, b) in poset.covers() {
            if let Some(la) = level[a] {
                let expect = la ^ 1;
                match level[b] {
                    None => {
                        level[b] = Some(expect);
                        progressed = true;
                    }
                    Some(lb) if lb != expect => return Err(Error::NotParityConsistent),
                    Some(_) => {}
                }
            }
        }
    }
    let signs = poset
        .covers()
        .iter()
        .map(|&(a, _)| if level[a] == Some(0) { 1 } else { -1 })
        .collect();
    EdgeLabeling::from_signs(poset, signs)
}

impl LabeledPoset {
    /// The poset with the all-plus labeling.
    pub fn with_all_plus(poset: FinitePoset) -> Self {
        let labeling = EdgeLabeling::all_plus(&poset);
        analyze(poset, labeling).expect("all-plus labeling matches covers")
    }

    /// The poset with its parity labeling.
    pub fn with_parity(poset: FinitePoset) -> Result<Self> {
        let labeling = parity_labeling(&poset)?;
        analyze(poset, labeling)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn labeling(&self) -> &EdgeLabeling {
        &self.labeling
    }

    pub fn consistency(&self) -> Consistency {
        self.consistency
    }

    pub fn is_consistent(&self) -> bool {
        self.consistency != Consistency::NotConsistent
    }

    pub fn is_graded(&self) -> bool {
        self.consistency == Consistency::Graded
    }

    /// 1-graded: graded with the all-plus labeling.
    pub fn is_one_graded(&self) -> bool {
        self.is_graded() && self.labeling.is_all_plus()
    }

    pub fn is_parity_labeling(&self) -> bool {
        self.is_parity_labeling
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn rank(&self) -> Option<&[i64]> {
        self.rank.as_deref()
    }

    pub fn rank_of(&self, i: usize) -> Option<i64> {
        self.rank.as_ref().map(|r| r[i])
    }

    pub fn grade_value(&self) -> Option<i64> {
        self.grade_value
    }

    /// Ranks confined to {0, 1}: the precondition for saturation
    /// enumeration.
    pub fn has_parity_ranks(&self) -> bool {
        match &self.rank {
            Some(r) => r.iter().all(|&v| v == 0 || v == 1),
            None => false,
        }
    }

    /// Sign of a cover pair given by element indices.
    pub fn sign_of(&self, a: usize, b: usize) -> Option<i8> {
        self.poset
            .covers()
            .binary_search(&(a, b))
            .ok()
            .map(|pos| self.labeling.sign_at(pos))
    }

    /// Whether a permutation of the elements is an automorphism of the poset
    /// preserving the labeling.
    pub fn is_automorphism(&self, g: &Permutation) -> bool {
        if g.degree() != self.len() {
            return false;
        }
        for (pos, &(a, b)) in self.poset.covers().iter().enumerate() {
            match self.sign_of(g.apply(a), g.apply(b)) {
                Some(s) if s == self.labeling.sign_at(pos) => {}
                _ => return false,
            }
        }
        // covers map into covers bijectively, which for a bijection of a
        // finite set makes the inverse cover-preserving too
        true
    }
}

/// A vertex labeling `omega: P -> 1..|P|` grouping elements by rank, with
/// `omega` increasing across +1 covers and decreasing across -1 covers. The
/// canonical choice ranks ties by element index.
pub fn derive_vertex_labeling(lp: &LabeledPoset) -> Result<Vec<usize>> {
    let rank = lp.rank().ok_or(Error::NotConsistent)?;
    let mut order: Vec<usize> = (0..lp.len()).collect();
    order.sort_by_key(|&i| (rank[i], i));
    let mut omega = vec![0usize; lp.len()];
    for (value, &i) in order.iter().enumerate() {
        omega[i] = value + 1;
    }
    Ok(omega)
}

/// The ordinal sum `lhs (+)_sign rhs`: every element of `lhs` below every
/// element of `rhs`, new covers joining the maxima of `lhs` to the minima of
/// `rhs` with the joining sign.
pub fn ordinal_sum(lhs: &LabeledPoset, rhs: &LabeledPoset, joining_sign: i8) -> Result<LabeledPoset> {
    assert!(joining_sign == 1 || joining_sign == -1);
    let mut names: Vec<String> = lhs.poset().elements().to_vec();
    let offset = names.len();
    for name in rhs.poset().elements() {
        if lhs.poset().element_index(name).is_some() {
            return Err(Error::IdentifierClash(name.clone()));
        }
        names.push(name.clone());
    }
    let mut covers: Vec<(String, String)> = Vec::new();
    let mut signs: Vec<((String, String), i8)> = Vec::new();
    for (pos, &(a, b)) in lhs.poset().covers().iter().enumerate() {
        let pair = (names[a].clone(), names[b].clone());
        signs.push((pair.clone(), lhs.labeling().sign_at(pos)));
        covers.push(pair);
    }
    for (pos, &(a, b)) in rhs.poset().covers().iter().enumerate() {
        let pair = (names[offset + a].clone(), names[offset + b].clone());
        signs.push((pair.clone(), rhs.labeling().sign_at(pos)));
        covers.push(pair);
    }
    for &a in &lhs.poset().maximal_elements() {
        for &b in &rhs.poset().minimal_elements() {
            let pair = (names[a].clone(), names[offset + b].clone());
            signs.push((pair.clone(), joining_sign));
            covers.push(pair);
        }
    }
    let poset = FinitePoset::new(names, &covers)?;
    let labeling = EdgeLabeling::from_named(&poset, &signs)?;
    analyze(poset, labeling)
}

/// The full group of poset automorphisms preserving the labeling, found by
/// backtracking over rank-, degree-, and label-signature-compatible images.
pub fn automorphism_group(lp: &LabeledPoset) -> PermGroup {
    let n = lp.len();
    let poset = lp.poset();
    // signature: (rank, multiset of incoming signs, multiset of outgoing signs)
    let mut in_signs: Vec<Vec<i8>> = vec![Vec::new(); n];
    let mut out_signs: Vec<Vec<i8>> = vec![Vec::new(); n];
    for (pos, &(a, b)) in poset.covers().iter().enumerate() {
        let s = lp.labeling().sign_at(pos);
        out_signs[a].push(s);
        in_signs[b].push(s);
    }
    for v in in_signs.iter_mut().chain(out_signs.iter_mut()) {
        v.sort_unstable();
    }
    let signature = |i: usize| {
        (
            lp.rank_of(i),
            in_signs[i].clone(),
            out_signs[i].clone(),
        )
    };
    let sigs: Vec<_> = (0..n).map(signature).collect();
    let mut found: Vec<Permutation> = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn compatible(lp: &LabeledPoset, image: &[usize], next: usize, target: usize) -> bool {
        let poset = lp.poset();
        for (pos, &(a, b)) in poset.covers().iter().enumerate() {
            let s = lp.labeling().sign_at(pos);
            let (ia, ib) = (image[a], image[b]);
            if a == next || b == next {
                let ia = if a == next { target } else { ia };
                let ib = if b == next { target } else { ib };
                if ia != usize::MAX && ib != usize::MAX && lp.sign_of(ia, ib) != Some(s) {
                    return false;
                }
            }
        }
        // non-covers must not map onto covers: checked via count preservation
        // at the end of the search (cover images are injective and land on
        // covers, and |covers| is fixed, so the inverse also preserves covers)
        true
    }

    fn rec(
        lp: &LabeledPoset,
        sigs: &[(Option<i64>, Vec<i8>, Vec<i8>)],
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
        found: &mut Vec<Permutation>,
    ) {
        let n = lp.len();
        if next == n {
            found.push(Permutation::new(image.clone()).expect("bijection"));
            return;
        }
        for target in 0..n {
            if used[target] || sigs[target] != sigs[next] {
                continue;
            }
            if compatible(lp, image, next, target) {
                image[next] = target;
                used[target] = true;
                rec(lp, sigs, image, used, next + 1, found);
                image[next] = usize::MAX;
                used[target] = false;
            }
        }
    }

    rec(lp, &sigs, &mut image, &mut used, 0, &mut found);
    PermGroup::from_elements(n, found).expect("automorphisms form a group")
}

/// The quotient poset P/G for G a group of label-preserving automorphisms:
/// elements are orbits, with `O <= O'` iff some representatives compare in P.
/// The relation is automatically reflexive and transitive; antisymmetry is
/// verified and its failure reported as an error.
pub fn quotient(lp: &LabeledPoset, subgroup: &PermGroup) -> Result<LabeledPoset> {
    if !lp.is_consistent() {
        return Err(Error::NotConsistent);
    }
    if subgroup.degree() != lp.len()
        || !subgroup.elements().iter().all(|g| lp.is_automorphism(g))
    {
        return Err(Error::NotASubgroupOfAut);
    }
    let orbits = subgroup.point_orbits();
    let k = orbits.len();
    let orbit_of: Vec<usize> = {
        let mut v = vec![0usize; lp.len()];
        for (oi, orbit) in orbits.iter().enumerate() {
            for &x in orbit {
                v[x] = oi;
            }
        }
        v
    };
    let mut rel = vec![vec![false; k]; k];
    for a in 0..lp.len() {
        for b in 0..lp.len() {
            if lp.poset().leq(a, b) {
                rel[orbit_of[a]][orbit_of[b]] = true;
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            if i != j && rel[i][j] && rel[j][i] {
                return Err(Error::QuotientNotPartialOrder);
            }
        }
    }
    // covers of the quotient order, then labels from covering representative
    // pairs (well-defined for label-preserving groups)
    let names: Vec<String> = orbits
        .iter()
        .map(|orbit| {
            let inner: Vec<&str> = orbit
                .iter()
                .map(|&x| lp.poset().element_name(x))
                .collect();
            format!("{{{}}}", inner.join(","))
        })
        .collect();
    let mut covers = Vec::new();
    let mut signs = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if i == j || !rel[i][j] {
                continue;
            }
            let has_intermediate =
                (0..k).any(|z| z != i && z != j && rel[i][z] && rel[z][j]);
            if has_intermediate {
                continue;
            }
            let mut label: Option<i8> = None;
            for &p in &orbits[i] {
                for &q in &orbits[j] {
                    if let Some(s) = lp.sign_of(p, q) {
                        match label {
                            None => label = Some(s),
                            Some(prev) => debug_assert_eq!(
                                prev, s,
                                "quotient label must not depend on representatives"
                            ),
                        }
                    }
                }
            }
            let s = label.expect("a covering pair of representatives exists");
            signs.push(((names[i].clone(), names[j].clone()), s));
            covers.push((names[i].clone(), names[j].clone()));
        }
    }
    let poset = FinitePoset::new(names, &covers)?;
    let labeling = EdgeLabeling::from_named(&poset, &signs)?;
    let result = analyze(poset, labeling)?;
    debug_assert!(result.is_consistent(), "quotient of consistent is consistent");
    Ok(result)
}

/// Orbit index map for a group acting on the elements of a poset, matching
/// the element order used by [`quotient`].
pub fn orbit_map(lp: &LabeledPoset, subgroup: &PermGroup) -> Vec<Vec<usize>> {
    debug_assert_eq!(subgroup.degree(), lp.len());
    subgroup.point_orbits()
}
