//! Permutations on a fixed ground set and explicitly enumerated permutation
//! groups with conjugacy-class data.

use crate::error::{Error, Result};
use std::collections::{HashMap, HashSet};

/// Largest group order we are willing to enumerate.
pub const GROUP_ORDER_GUARD: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!(
                    "not a permutation: {:?}",
                    images
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from disjoint-cycle data over `0..degree`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let a = cycle[w];
                let b = cycle[(w + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(Error::Parse(format!("cycle point out of range: {a}")));
                }
                images[a] = b;
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self` after `other`: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Cycles in canonical form: each cycle starts at its least point,
    /// cycles sorted by starting point. Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// Multiset of cycle lengths, sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| num::integer::lcm(acc, c.len() as u64))
    }

    /// Cycle notation, e.g. `(p1 p2)(p3 p4)`; fixed points are omitted
    /// unless the permutation is the identity.
    pub fn cycle_notation(&self, names: Option<&[String]>) -> String {
        let name = |i: usize| match names {
            Some(ns) => ns[i].clone(),
            None => (i + 1).to_string(),
        };
        let parts: Vec<String> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| {
                let inner: Vec<String> = c.into_iter().map(name).collect();
                format!("({})", inner.join(" "))
            })
            .collect();
        if parts.is_empty() {
            "e".to_string()
        } else {
            parts.join("")
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    /// Indices into the group's element list, sorted ascending.
    pub members: Vec<usize>,
    /// Index of the lexicographically least member.
    pub representative: usize,
}

#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    /// All elements, sorted by image vector; the identity is element 0.
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    generators: Vec<Permutation>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    exponent: u64,
}

impl PermGroup {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Parse(format!(
                    "generator degree {} does not match {}",
                    g.degree(),
                    degree
                )));
            }
        }
        let mut elements: HashSet<Permutation> = HashSet::new();
        let identity = Permutation::identity(degree);
        elements.insert(identity.clone());
        let mut frontier = vec![identity];
        while let Some(x) = frontier.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if !elements.contains(&y) {
                    if elements.len() >= GROUP_ORDER_GUARD {
                        return Err(Error::GroupTooLarge(elements.len() + 1));
                    }
                    elements.insert(y.clone());
                    frontier.push(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = elements.into_iter().collect();
        elements.sort();
        Self::from_sorted_elements(degree, elements, generators)
    }

    /// Build a group from an explicit element list. The list is closed under
    /// composition as a safety measure, so passing any generating set works;
    /// passing an actual subgroup reproduces it exactly.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        Self::from_generators(degree, elements)
    }

    fn from_sorted_elements(
        degree: usize,
        elements: Vec<Permutation>,
        generators: Vec<Permutation>,
    ) -> Result<Self> {
        let index: HashMap<Permutation, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let n = elements.len();
        // conjugacy classes by orbit closure under conjugation by generators
        let gens: Vec<usize> = if generators.is_empty() {
            Vec::new()
        } else {
            generators.iter().map(|g| index[g]).collect()
        };
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![start];
            class_of[start] = cid;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for &gi in &gens {
                    let g = &elements[gi];
                    let y = g.compose(&elements[x]).compose(&g.inverse());
                    let yi = index[&y];
                    if class_of[yi] == usize::MAX {
                        class_of[yi] = cid;
                        members.push(yi);
                        stack.push(yi);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: members[0],
                members,
            });
        }
        let exponent = elements
            .iter()
            .fold(1u64, |acc, p| num::integer::lcm(acc, p.order()));
        Ok(PermGroup {
            degree,
            elements,
            index,
            generators,
            classes,
            class_of,
            exponent,
        })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree, Vec::new()).expect("trivial group")
    }

    /// The full symmetric group on `0..degree`.
    pub fn symmetric(degree: usize) -> Result<Self> {
        if degree <= 1 {
            return Ok(Self::trivial(degree.max(1)));
        }
        let swap = Permutation::from_cycles(degree, &[vec![0, 1]])?;
        let cycle = Permutation::from_cycles(degree, &[(0..degree).collect()])?;
        Self::from_generators(degree, vec![swap, cycle])
    }

    /// `G x H` acting on the disjoint union of the two ground sets.
    pub fn direct_product(g: &PermGroup, h: &PermGroup) -> Result<Self> {
        let degree = g.degree + h.degree;
        let mut gens = Vec::new();
        for p in &g.generators {
            let mut images: Vec<usize> = p.images().to_vec();
            images.extend(g.degree..degree);
            gens.push(Permutation::new(images)?);
        }
        for p in &h.generators {
            let mut images: Vec<usize> = (0..g.degree).collect();
            images.extend(p.images().iter().map(|&i| i + g.degree));
            gens.push(Permutation::new(images)?);
        }
        Self::from_generators(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn element_index(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class index of a group element.
    pub fn class_of(&self, p: &Permutation) -> Result<usize> {
        self.element_index(p)
            .map(|i| self.class_of[i])
            .ok_or(Error::NotASubgroup)
    }

    pub fn class_of_index(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn class_representative(&self, class: usize) -> &Permutation {
        &self.elements[self.classes[class].representative]
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.classes[class].members.len()
    }

    /// Class index of the inverses of a class.
    pub fn inverse_class(&self, class: usize) -> usize {
        let inv = self.class_representative(class).inverse();
        self.class_of[self.index[&inv]]
    }

    pub fn is_subgroup_of(&self, parent: &PermGroup) -> bool {
        self.degree == parent.degree && self.elements.iter().all(|p| parent.contains(p))
    }

    /// Representatives of the left cosets of `sub`, in element order; the
    /// identity coset comes first.
    pub fn left_transversal(&self, sub: &PermGroup) -> Result<Vec<usize>> {
        if !sub.is_subgroup_of(self) {
            return Err(Error::NotASubgroup);
        }
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::with_capacity(self.order() / sub.order());
        for gi in 0..self.order() {
            if covered[gi] {
                continue;
            }
            reps.push(gi);
            for h in sub.elements() {
                let gh = self.elements[gi].compose(h);
                covered[self.index[&gh]] = true;
            }
        }
        Ok(reps)
    }

    /// Orbits of the natural action on ground-set points, sorted by least
    /// member.
    pub fn point_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut orbits = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                orbit.push(x);
                for g in &self.elements {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    /// All subgroups, as sorted element-index lists, found by closure
    /// extension. Exponential in general; meant for small groups.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        // multiplication and inverse tables over element indices
        let mut mul = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                mul[i * n + j] = self.index[&self.elements[i].compose(&self.elements[j])];
            }
        }
        let closure = |seed: &[usize]| -> Vec<usize> {
            let mut inside = vec![false; n];
            inside[0] = true;
            let mut members = vec![0usize];
            let mut stack = vec![0usize];
            for &s in seed {
                if !inside[s] {
                    inside[s] = true;
                    members.push(s);
                    stack.push(s);
                }
            }
            while let Some(x) = stack.pop() {
                let snapshot: Vec<usize> = members.clone();
                for &y in &snapshot {
                    for z in [mul[x * n + y], mul[y * n + x]] {
                        if !inside[z] {
                            inside[z] = true;
                            members.push(z);
                            stack.push(z);
                        }
                    }
                }
            }
            members.sort_unstable();
            members
        };
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        let trivial = vec![0usize];
        seen.insert(trivial.clone());
        let mut queue = vec![trivial];
        let mut out = Vec::new();
        while let Some(h) = queue.pop() {
            out.push(h.clone());
            let inside: HashSet<usize> = h.iter().copied().collect();
            for g in 0..n {
                if inside.contains(&g) {
                    continue;
                }
                let mut seed = h.clone();
                seed.push(g);
                let ext = closure(&seed);
                if seen.insert(ext.clone()) {
                    queue.push(ext);
                }
            }
        }
        out.sort();
        out
    }

    /// Materialize a subgroup from element indices.
    pub fn subgroup_from_indices(&self, indices: &[usize]) -> Result<PermGroup> {
        let elems: Vec<Permutation> = indices.iter().map(|&i| self.elements[i].clone()).collect();
        PermGroup::from_elements(self.degree, elems)
    }
}
