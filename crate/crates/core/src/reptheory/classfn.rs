//! Class functions, virtual characters, and character tables, together with
//! induction, restriction, and decomposition into irreducibles.

use crate::error::{Error, Result};
use crate::reptheory::cyclotomic::Cyclotomic;
use crate::reptheory::perm::PermGroup;
use num::{BigRational, Zero as NumZero};
use num_traits::Zero;
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

/// A complex class function on a fixed group, one exact cyclotomic value per
/// conjugacy class, indexed by the group's class order.
///
/// The empty value vector is the canonical additive zero: it absorbs in
/// products, adapts to the other operand's length in sums, and compares
/// equal to an explicit all-zero vector, which lets
/// `Polynomial<ClassFunction>` trim and pad coefficients without carrying the
/// class count around.
#[derive(Debug, Clone)]
pub struct ClassFunction {
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        let n = self.values.len().max(other.values.len());
        (0..n).all(|i| self.value(i) == other.value(i))
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    pub fn new(values: Vec<Cyclotomic>) -> Self {
        ClassFunction { values }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        ClassFunction {
            values: values.iter().map(|&v| Cyclotomic::from_integer(v)).collect(),
        }
    }

    pub fn constant(class_count: usize, v: i64) -> Self {
        ClassFunction {
            values: vec![Cyclotomic::from_integer(v); class_count],
        }
    }

    pub fn trivial(class_count: usize) -> Self {
        Self::constant(class_count, 1)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> Cyclotomic {
        self.values
            .get(class)
            .cloned()
            .unwrap_or_else(Cyclotomic::zero)
    }

    pub fn is_integer_valued(&self) -> bool {
        self.values.iter().all(|v| v.to_integer().is_some())
    }

    pub fn conjugate(&self) -> ClassFunction {
        ClassFunction {
            values: self.values.iter().map(|v| v.conjugate()).collect(),
        }
    }

    pub fn lex_cmp(&self, other: &ClassFunction) -> Ordering {
        let n = self.values.len().max(other.values.len());
        for i in 0..n {
            match self.value(i).lex_cmp(&other.value(i)) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl Add for ClassFunction {
    type Output = ClassFunction;
    fn add(self, rhs: ClassFunction) -> ClassFunction {
        if self.is_empty() {
            return rhs;
        }
        if rhs.is_empty() {
            return self;
        }
        assert_eq!(self.len(), rhs.len(), "class function length mismatch");
        ClassFunction {
            values: self
                .values
                .into_iter()
                .zip(rhs.values)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: ClassFunction) -> ClassFunction {
        self + (-rhs)
    }
}

impl Neg for ClassFunction {
    type Output = ClassFunction;
    fn neg(self) -> ClassFunction {
        ClassFunction {
            values: self.values.into_iter().map(|v| -v).collect(),
        }
    }
}

impl Mul for ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: ClassFunction) -> ClassFunction {
        if self.is_empty() || rhs.is_empty() {
            return ClassFunction::zero();
        }
        assert_eq!(self.len(), rhs.len(), "class function length mismatch");
        ClassFunction {
            values: self
                .values
                .into_iter()
                .zip(rhs.values)
                .map(|(a, b)| a * b)
                .collect(),
        }
    }
}

impl Mul<i64> for ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: i64) -> ClassFunction {
        let s = Cyclotomic::from_integer(rhs);
        ClassFunction {
            values: self.values.into_iter().map(|v| v * s.clone()).collect(),
        }
    }
}

impl Zero for ClassFunction {
    fn zero() -> Self {
        ClassFunction { values: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

/// An integer multiplicity vector over a fixed character table's
/// irreducibles. Effective means componentwise nonnegative; comparison pads
/// with zeros like [`ClassFunction`].
#[derive(Debug, Clone)]
pub struct VirtualCharacter {
    multiplicities: Vec<i64>,
}

impl PartialEq for VirtualCharacter {
    fn eq(&self, other: &Self) -> bool {
        let n = self.multiplicities.len().max(other.multiplicities.len());
        (0..n).all(|i| self.multiplicity(i) == other.multiplicity(i))
    }
}

impl Eq for VirtualCharacter {}

impl VirtualCharacter {
    pub fn new(multiplicities: Vec<i64>) -> Self {
        VirtualCharacter { multiplicities }
    }

    pub fn zero_of(len: usize) -> Self {
        VirtualCharacter {
            multiplicities: vec![0; len],
        }
    }

    pub fn multiplicities(&self) -> &[i64] {
        &self.multiplicities
    }

    pub fn multiplicity(&self, i: usize) -> i64 {
        self.multiplicities.get(i).copied().unwrap_or(0)
    }

    pub fn is_effective(&self) -> bool {
        self.multiplicities.iter().all(|&m| m >= 0)
    }

    pub fn is_zero_vector(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 0)
    }

    /// Pad or trim to a given length (padding with zeros).
    pub fn padded(&self, len: usize) -> VirtualCharacter {
        let mut m = self.multiplicities.clone();
        m.resize(len, 0);
        VirtualCharacter { multiplicities: m }
    }

    /// Readable form like `9 + 7*chi2 + 16*chi4` using table row names.
    pub fn display_with(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &m) in self.multiplicities.iter().enumerate() {
            if m == 0 {
                continue;
            }
            let name = names.get(i).cloned().unwrap_or_else(|| format!("chi{i}"));
            let is_trivial_name = i == 0;
            let part = if is_trivial_name {
                format!("{m}")
            } else if m == 1 {
                name
            } else {
                format!("{m}*{name}")
            };
            parts.push(part);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl Add for VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(self, rhs: VirtualCharacter) -> VirtualCharacter {
        let n = self.multiplicities.len().max(rhs.multiplicities.len());
        VirtualCharacter {
            multiplicities: (0..n)
                .map(|i| self.multiplicity(i) + rhs.multiplicity(i))
                .collect(),
        }
    }
}

impl Sub for VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(self, rhs: VirtualCharacter) -> VirtualCharacter {
        let n = self.multiplicities.len().max(rhs.multiplicities.len());
        VirtualCharacter {
            multiplicities: (0..n)
                .map(|i| self.multiplicity(i) - rhs.multiplicity(i))
                .collect(),
        }
    }
}

impl Mul<i64> for VirtualCharacter {
    type Output = VirtualCharacter;
    fn mul(self, rhs: i64) -> VirtualCharacter {
        VirtualCharacter {
            multiplicities: self.multiplicities.into_iter().map(|m| m * rhs).collect(),
        }
    }
}

impl Zero for VirtualCharacter {
    fn zero() -> Self {
        VirtualCharacter {
            multiplicities: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.multiplicities.iter().all(|&m| m == 0)
    }
}

/// An exact character table: one row per irreducible, one column per
/// conjugacy class in the group's class order. Carries enough class data to
/// compute inner products without the group at hand.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group_order: usize,
    pub class_sizes: Vec<usize>,
    /// Class index of the inverses of each class.
    pub inverse_classes: Vec<usize>,
    pub irreducibles: Vec<ClassFunction>,
    pub degrees: Vec<i64>,
    /// Row labels; `1` for the trivial character, partitions for symmetric
    /// groups, `chi1`, `chi2`, ... otherwise.
    pub names: Vec<String>,
}

impl CharacterTable {
    pub fn class_count(&self) -> usize {
        self.class_sizes.len()
    }

    /// Hermitian inner product `<f, g> = 1/|G| sum_c h_c f(c) conj(g(c))`.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for c in 0..self.class_count() {
            let term = Cyclotomic::from_integer(self.class_sizes[c] as i64)
                * f.value(c)
                * g.value(c).conjugate();
            acc = acc + term;
        }
        acc.div_integer(self.group_order as i64)
    }

    /// Decompose a class function over the irreducibles; errors when any
    /// multiplicity fails to be a rational integer.
    pub fn decompose(&self, f: &ClassFunction) -> Result<VirtualCharacter> {
        if f.len() != self.class_count() && !f.is_empty() {
            return Err(Error::SizeMismatch(f.len(), self.class_count()));
        }
        let mut mult = Vec::with_capacity(self.irreducibles.len());
        for chi in &self.irreducibles {
            let ip = self.inner_product(f, chi);
            match ip.to_integer() {
                Some(v) => mult.push(i64::try_from(&v).expect("multiplicity overflow")),
                None => return Err(Error::NotVirtual(ip.to_string())),
            }
        }
        Ok(VirtualCharacter::new(mult))
    }

    /// The class function of a multiplicity vector.
    pub fn class_function_of(&self, v: &VirtualCharacter) -> ClassFunction {
        let mut acc = ClassFunction::zero();
        for (i, chi) in self.irreducibles.iter().enumerate() {
            let m = v.multiplicity(i);
            if m != 0 {
                acc = acc + chi.clone() * m;
            }
        }
        if acc.is_empty() {
            acc = ClassFunction::new(vec![Cyclotomic::zero(); self.class_count()]);
        }
        acc
    }

    /// Exact verification of both orthogonality relations.
    pub fn verify_orthogonality(&self) -> bool {
        let k = self.class_count();
        for i in 0..self.irreducibles.len() {
            for j in 0..self.irreducibles.len() {
                let ip = self.inner_product(&self.irreducibles[i], &self.irreducibles[j]);
                let expect = Cyclotomic::from_integer(if i == j { 1 } else { 0 });
                if ip != expect {
                    return false;
                }
            }
        }
        // column orthogonality: sum_chi chi(c) conj(chi(c')) = |G|/h_c [c=c']
        for c in 0..k {
            for d in 0..k {
                let mut acc = Cyclotomic::zero();
                for chi in &self.irreducibles {
                    acc = acc + chi.value(c) * chi.value(d).conjugate();
                }
                let expect = if c == d {
                    Cyclotomic::from_rational(BigRational::new(
                        (self.group_order as i64).into(),
                        (self.class_sizes[c] as i64).into(),
                    ))
                } else {
                    Cyclotomic::zero()
                };
                if acc != expect {
                    return false;
                }
            }
        }
        true
    }
}

/// The character of the permutation action of `parent` on left cosets of
/// `sub` is `induce(sub, parent, 1)`; this implements the coset-sum formula
/// for an arbitrary class function using a fixed left transversal.
pub fn induce(sub: &PermGroup, parent: &PermGroup, f: &ClassFunction) -> Result<ClassFunction> {
    let transversal = parent.left_transversal(sub)?;
    induce_with_transversal(sub, parent, f, &transversal)
}

/// Same as [`induce`] with an explicit left-coset transversal (element
/// indices of `parent`); the result must not depend on the choice.
pub fn induce_with_transversal(
    sub: &PermGroup,
    parent: &PermGroup,
    f: &ClassFunction,
    transversal: &[usize],
) -> Result<ClassFunction> {
    if !sub.is_subgroup_of(parent) {
        return Err(Error::NotASubgroup);
    }
    let mut values = Vec::with_capacity(parent.class_count());
    for class in 0..parent.class_count() {
        let u = parent.class_representative(class);
        let mut acc = Cyclotomic::zero();
        for &ri in transversal {
            let r = parent.element(ri);
            let conj = r.inverse().compose(u).compose(r);
            if let Ok(sub_class) = sub.class_of(&conj) {
                acc = acc + f.value(sub_class);
            }
        }
        values.push(acc);
    }
    Ok(ClassFunction::new(values))
}

/// Restriction along a subgroup inclusion: the value at each subgroup class
/// is the parent value at the containing parent class.
pub fn restrict(parent: &PermGroup, sub: &PermGroup, f: &ClassFunction) -> Result<ClassFunction> {
    if !sub.is_subgroup_of(parent) {
        return Err(Error::NotASubgroup);
    }
    let mut values = Vec::with_capacity(sub.class_count());
    for class in 0..sub.class_count() {
        let rep = sub.class_representative(class);
        let parent_class = parent.class_of(rep)?;
        values.push(f.value(parent_class));
    }
    Ok(ClassFunction::new(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn virtual_character_effectiveness() {
        assert!(VirtualCharacter::new(vec![1, 0, 0, 0, 1]).is_effective());
        assert!(!VirtualCharacter::new(vec![-2, 0, 1]).is_effective());
        assert!(VirtualCharacter::new(vec![0, 0]).is_effective());
    }

    #[test]
    fn class_function_zero_adapts() {
        let z = ClassFunction::zero();
        let f = ClassFunction::from_integers(&[1, 2, 3]);
        assert_eq!(z.clone() + f.clone(), f);
        assert!((z * f).is_empty());
    }
}
