//! Generic brute-force equivariant counting for explicit lattice polytopes
//! in halfspace representation, with coordinate-permutation group actions.

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::reptheory::classfn::ClassFunction;
use crate::reptheory::cyclotomic::Cyclotomic;
use crate::reptheory::perm::{PermGroup, Permutation};
use crate::{CharPolynomial, IntPolynomial};
use num::{BigInt, BigRational, Signed, Zero};

/// One inequality `normal . x <= offset` (strict when flagged).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfspaceIneq {
    pub normal: Vec<i64>,
    pub offset: i64,
    pub strict: bool,
}

/// A bounded region given by integer halfspaces; dilation scales offsets.
#[derive(Debug, Clone)]
pub struct LatticePolytopeHRep {
    dim: usize,
    inequalities: Vec<HalfspaceIneq>,
}

impl LatticePolytopeHRep {
    pub fn new(dim: usize, inequalities: Vec<HalfspaceIneq>) -> Result<Self> {
        if dim == 0 || dim > 12 {
            return Err(Error::GuardExceeded(format!(
                "polytope dimension {dim} outside supported range"
            )));
        }
        for ineq in &inequalities {
            if ineq.normal.len() != dim {
                return Err(Error::Parse(format!(
                    "normal of length {} in dimension {dim}",
                    ineq.normal.len()
                )));
            }
        }
        let poly = LatticePolytopeHRep { dim, inequalities };
        // boundedness check up front: every coordinate has finite bounds
        poly.bounding_box(1)?;
        Ok(poly)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn inequalities(&self) -> &[HalfspaceIneq] {
        &self.inequalities
    }

    /// Integer bounding box of the m-th dilate via Fourier--Motzkin
    /// elimination per coordinate. Strictness is relaxed (the box only needs
    /// to contain the region). An empty region yields an empty box.
    pub fn bounding_box(&self, m: i64) -> Result<Vec<(i64, i64)>> {
        let mut box_ = Vec::with_capacity(self.dim);
        for coord in 0..self.dim {
            let (lo, hi) = self.coordinate_bounds(coord, m)?;
            box_.push((lo, hi));
        }
        Ok(box_)
    }

    fn coordinate_bounds(&self, coord: usize, m: i64) -> Result<(i64, i64)> {
        // rational constraint rows: coefficients + rhs (normal . x <= rhs)
        let mut rows: Vec<(Vec<BigRational>, BigRational)> = self
            .inequalities
            .iter()
            .map(|ineq| {
                let coeffs = ineq
                    .normal
                    .iter()
                    .map(|&c| BigRational::from_integer(BigInt::from(c)))
                    .collect();
                let rhs = BigRational::from_integer(BigInt::from(ineq.offset * m));
                (coeffs, rhs)
            })
            .collect();
        for eliminate in 0..self.dim {
            if eliminate == coord {
                continue;
            }
            let mut pos = Vec::new();
            let mut neg = Vec::new();
            let mut zero = Vec::new();
            for (coeffs, rhs) in rows {
                let c = coeffs[eliminate].clone();
                if c.is_zero() {
                    zero.push((coeffs, rhs));
                } else if c.is_positive() {
                    pos.push((coeffs, rhs));
                } else {
                    neg.push((coeffs, rhs));
                }
            }
            let mut next = zero;
            for (pc, pr) in &pos {
                for (nc, nr) in &neg {
                    // combine to cancel the eliminated coordinate
                    let a = pc[eliminate].clone();
                    let b = -nc[eliminate].clone();
                    let coeffs: Vec<BigRational> = pc
                        .iter()
                        .zip(nc.iter())
                        .map(|(x, y)| x * &b + y * &a)
                        .collect();
                    let rhs = pr * &b + nr * &a;
                    next.push((coeffs, rhs));
                }
            }
            rows = next;
        }
        let mut upper: Option<BigRational> = None;
        let mut lower: Option<BigRational> = None;
        let mut infeasible = false;
        for (coeffs, rhs) in rows {
            let c = coeffs[coord].clone();
            if c.is_zero() {
                if rhs.is_negative() {
                    infeasible = true;
                }
                continue;
            }
            let bound = &rhs / &c;
            if c.is_positive() {
                upper = Some(match upper {
                    None => bound,
                    Some(u) => u.min(bound),
                });
            } else {
                lower = Some(match lower {
                    None => bound,
                    Some(l) => l.max(bound),
                });
            }
        }
        if infeasible {
            return Ok((0, -1));
        }
        match (lower, upper) {
            (Some(l), Some(u)) => {
                let lo = l.ceil().to_integer();
                let hi = u.floor().to_integer();
                Ok((
                    i64::try_from(&lo).map_err(|_| Error::GuardExceeded("box too large".into()))?,
                    i64::try_from(&hi).map_err(|_| Error::GuardExceeded("box too large".into()))?,
                ))
            }
            _ => Err(Error::Unbounded(coord)),
        }
    }

    fn satisfies(&self, x: &[i64], m: i64) -> bool {
        self.inequalities.iter().all(|ineq| {
            let lhs: i64 = ineq
                .normal
                .iter()
                .zip(x.iter())
                .map(|(&a, &v)| a * v)
                .sum();
            if ineq.strict {
                lhs < ineq.offset * m
            } else {
                lhs <= ineq.offset * m
            }
        })
    }

    /// Whether a coordinate permutation maps the region onto itself, decided
    /// by invariance of the normalized inequality multiset.
    pub fn preserved_by(&self, g: &Permutation) -> bool {
        if g.degree() != self.dim {
            return false;
        }
        let normalize = |ineq: &HalfspaceIneq| {
            let mut gcd: i64 = ineq.normal.iter().fold(ineq.offset.abs(), |acc, &c| {
                num::integer::gcd(acc, c.abs())
            });
            if gcd == 0 {
                gcd = 1;
            }
            let normal: Vec<i64> = ineq.normal.iter().map(|&c| c / gcd).collect();
            (normal, ineq.offset / gcd, ineq.strict)
        };
        let mut original: Vec<_> = self.inequalities.iter().map(normalize).collect();
        // g . x has coordinates (g.x)_i = x_(g^-1 i); the transformed
        // inequality has normal permuted forward
        let mut mapped: Vec<_> = self
            .inequalities
            .iter()
            .map(|ineq| {
                let mut normal = vec![0i64; self.dim];
                for (i, &c) in ineq.normal.iter().enumerate() {
                    normal[g.apply(i)] = c;
                }
                normalize(&HalfspaceIneq {
                    normal,
                    offset: ineq.offset,
                    strict: ineq.strict,
                })
            })
            .collect();
        original.sort();
        mapped.sort();
        original == mapped
    }

    /// Lattice points of the m-th dilate, restricted to the fixed locus of
    /// `fix` when given, by direct enumeration over the bounding box.
    pub fn count_points(&self, m: i64, fix: Option<&Permutation>) -> Result<i128> {
        let box_ = self.bounding_box(m)?;
        if box_.iter().any(|&(lo, hi)| lo > hi) {
            return Ok(0);
        }
        // enumerate on cycle classes when fixing
        let cycles: Vec<Vec<usize>> = match fix {
            None => (0..self.dim).map(|i| vec![i]).collect(),
            Some(g) => g.cycles(),
        };
        // a fixed point is constant on cycles; its value range is the
        // intersection of the member ranges
        let mut ranges = Vec::with_capacity(cycles.len());
        for cycle in &cycles {
            let lo = cycle.iter().map(|&i| box_[i].0).max().unwrap();
            let hi = cycle.iter().map(|&i| box_[i].1).min().unwrap();
            if lo > hi {
                return Ok(0);
            }
            ranges.push((lo, hi));
        }
        let mut values: Vec<i64> = ranges.iter().map(|&(lo, _)| lo).collect();
        let mut x = vec![0i64; self.dim];
        let mut count = 0i128;
        loop {
            for (ci, cycle) in cycles.iter().enumerate() {
                for &i in cycle {
                    x[i] = values[ci];
                }
            }
            if self.satisfies(&x, m) {
                count += 1;
            }
            let mut pos = 0;
            loop {
                if pos == ranges.len() {
                    return Ok(count);
                }
                if values[pos] < ranges[pos].1 {
                    values[pos] += 1;
                    break;
                }
                values[pos] = ranges[pos].0;
                pos += 1;
            }
        }
    }

    /// Classical h*-polynomial by truncated series times `(1-t)^(d+1)`.
    pub fn hstar(&self, max_dilate: usize) -> Result<IntPolynomial> {
        let trivial = PermGroup::trivial(self.dim);
        let poly = self.equivariant_hstar(&trivial, max_dilate)?;
        let coeffs: Vec<i64> = (0..=self.dim)
            .map(|i| {
                poly.coeff(i)
                    .value(0)
                    .to_integer()
                    .map(|v| i64::try_from(&v).expect("h* coefficient fits"))
                    .expect("integer coefficient")
            })
            .collect();
        Ok(IntPolynomial::new(coeffs))
    }

    /// Equivariant h*-polynomial under a coordinate-permutation action, by
    /// brute-force fixed counts per conjugacy class; coefficients beyond the
    /// dimension must vanish within the trusted truncation window.
    pub fn equivariant_hstar(
        &self,
        group: &PermGroup,
        max_dilate: usize,
    ) -> Result<CharPolynomial> {
        if group.degree() != self.dim {
            return Err(Error::GroupDoesNotPreserve);
        }
        for g in group.generators() {
            if !self.preserved_by(g) {
                return Err(Error::GroupDoesNotPreserve);
            }
        }
        let max_cycle = group
            .elements()
            .iter()
            .flat_map(|g| g.cycle_type())
            .max()
            .unwrap_or(1);
        let required = self.dim + max_cycle + 1;
        if max_dilate < required {
            return Err(Error::InsufficientMaxDilate {
                given: max_dilate,
                required,
            });
        }
        let k = group.class_count();
        let mut coeff_rows: Vec<Vec<i64>> = vec![Vec::new(); k];
        for c in 0..k {
            let u = group.class_representative(c).clone();
            let mut series = Vec::with_capacity(max_dilate + 1);
            for m in 0..=max_dilate {
                series.push(self.count_points(m as i64, Some(&u))?);
            }
            let mut det = IntPolynomial::new(vec![1, -1]);
            for mu in u.cycle_type() {
                let mut f = vec![0i64; mu + 1];
                f[0] = 1;
                f[mu] = -1;
                det = det.mul(&IntPolynomial::new(f));
            }
            let mut prod = vec![0i128; max_dilate + 1];
            for (i, &ci) in series.iter().enumerate() {
                if ci == 0 {
                    continue;
                }
                for (j, &dj) in det.coeffs().iter().enumerate() {
                    if i + j <= max_dilate {
                        prod[i + j] += ci * dj as i128;
                    }
                }
            }
            for (deg, &v) in prod.iter().enumerate().skip(self.dim + 1) {
                if v != 0 {
                    return Err(Error::TruncationUnstable(deg));
                }
            }
            prod.truncate(self.dim + 1);
            coeff_rows[c] = prod
                .into_iter()
                .map(|v| i64::try_from(v).expect("h* coefficient fits"))
                .collect();
        }
        let coeffs: Vec<ClassFunction> = (0..=self.dim)
            .map(|i| {
                ClassFunction::new(
                    (0..k)
                        .map(|c| Cyclotomic::from_integer(coeff_rows[c][i]))
                        .collect(),
                )
            })
            .collect();
        Ok(Polynomial::new(coeffs))
    }

    /// Default truncation window for the equivariant counter.
    pub fn default_max_dilate(&self) -> usize {
        self.dim + 8
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::demo;

    #[test]
    fn unit_segment_hstar_is_one() {
        let seg = LatticePolytopeHRep::new(
            1,
            vec![
                HalfspaceIneq {
                    normal: vec![1],
                    offset: 1,
                    strict: false,
                },
                HalfspaceIneq {
                    normal: vec![-1],
                    offset: 0,
                    strict: false,
                },
            ],
        )
        .unwrap();
        assert_eq!(seg.hstar(seg.default_max_dilate()).unwrap().coeffs(), &[1]);
    }

    #[test]
    fn unbounded_region_rejected() {
        let r = LatticePolytopeHRep::new(
            2,
            vec![HalfspaceIneq {
                normal: vec![1, 0],
                offset: 1,
                strict: false,
            }],
        );
        assert!(matches!(r, Err(Error::Unbounded(_))));
    }

    #[test]
    fn cross_polytope_box_and_counts() {
        let cp = demo::cross_polytope_3();
        assert_eq!(cp.bounding_box(1).unwrap(), vec![(-1, 1); 3]);
        // |m diamond_3 cap Z^3|: m=0 -> 1, m=1 -> 7 (origin plus 6 unit points)
        assert_eq!(cp.count_points(0, None).unwrap(), 1);
        assert_eq!(cp.count_points(1, None).unwrap(), 7);
        assert_eq!(cp.count_points(2, None).unwrap(), 25);
    }

    #[test]
    fn cross_polytope_classical_hstar() {
        let cp = demo::cross_polytope_3();
        let h = cp.hstar(cp.default_max_dilate()).unwrap();
        assert_eq!(h.coeffs(), &[1, 3, 3, 1]);
    }

    #[test]
    fn preservation_check() {
        let cp = demo::cross_polytope_3();
        for g in demo::s3_coordinates().elements() {
            assert!(cp.preserved_by(g));
        }
    }
}
