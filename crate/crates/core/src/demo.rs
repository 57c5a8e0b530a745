//! Built-in demonstration data: the 8-element poset with dihedral symmetry,
//! its D4 action, and the 3-dimensional cross-polytope under coordinate
//! permutations. These back the CLI demos and double as test fixtures.

use crate::ehrhart::polytope::{HalfspaceIneq, LatticePolytopeHRep};
use crate::poset::{FinitePoset, LabeledPoset};
use crate::reptheory::perm::{PermGroup, Permutation};

/// The 8-element 1-graded poset on p1..p8: bottom antichain p1..p4, top
/// antichain p5..p8, with pi < p(i+4) for i = 1..4 and p1 < p6, p2 < p7,
/// p3 < p8, p4 < p5.
pub fn fig1_poset() -> LabeledPoset {
    let names: Vec<String> = (1..=8).map(|i| format!("p{i}")).collect();
    let mut covers: Vec<(String, String)> = (0..4)
        .map(|i| (format!("p{}", i + 1), format!("p{}", i + 5)))
        .collect();
    covers.push(("p1".into(), "p6".into()));
    covers.push(("p2".into(), "p7".into()));
    covers.push(("p3".into(), "p8".into()));
    covers.push(("p4".into(), "p5".into()));
    let poset = FinitePoset::new(names, &covers).expect("demo poset");
    LabeledPoset::with_all_plus(poset)
}

/// The rotation sigma (p1 p2 p3 p4)(p5 p6 p7 p8) and the reflection tau
/// fixing p1, p3 and swapping p2/p4, p5/p6, p7/p8.
pub fn d4_sigma_tau() -> (Permutation, Permutation) {
    let sigma = Permutation::from_cycles(8, &[vec![0, 1, 2, 3], vec![4, 5, 6, 7]]).unwrap();
    let tau = Permutation::from_cycles(8, &[vec![1, 3], vec![4, 5], vec![6, 7]]).unwrap();
    (sigma, tau)
}

/// The dihedral group of order 8 generated by sigma and tau.
pub fn d4_group() -> PermGroup {
    let (sigma, tau) = d4_sigma_tau();
    PermGroup::from_generators(8, vec![sigma, tau]).expect("D4")
}

/// The standard 3-dimensional cross-polytope conv{+-e1, +-e2, +-e3} as
/// +-x1 +- x2 +- x3 <= 1.
pub fn cross_polytope_3() -> LatticePolytopeHRep {
    let mut inequalities = Vec::new();
    for sx in [-1i64, 1] {
        for sy in [-1i64, 1] {
            for sz in [-1i64, 1] {
                inequalities.push(HalfspaceIneq {
                    normal: vec![sx, sy, sz],
                    offset: 1,
                    strict: false,
                });
            }
        }
    }
    LatticePolytopeHRep::new(3, inequalities).expect("cross-polytope")
}

/// S3 permuting the three coordinates.
pub fn s3_coordinates() -> PermGroup {
    PermGroup::symmetric(3).expect("S3")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d4_relations_hold() {
        let (sigma, tau) = d4_sigma_tau();
        // sigma^4 = tau^2 = e and sigma tau sigma = tau
        let s2 = sigma.compose(&sigma);
        assert!(s2.compose(&s2).is_identity());
        assert!(tau.compose(&tau).is_identity());
        let sts = sigma.compose(&tau).compose(&sigma);
        assert_eq!(sts, tau);
        assert_eq!(d4_group().order(), 8);
    }

    #[test]
    fn fig1_automorphic_under_d4() {
        let lp = fig1_poset();
        for g in d4_group().elements() {
            assert!(lp.is_automorphism(g));
        }
    }
}
