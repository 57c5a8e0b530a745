//! Exact arithmetic in cyclotomic fields Q(zeta_n).
//!
//! Values are stored as rational coefficient vectors in the power basis
//! `1, zeta, ..., zeta^(phi(n)-1)`, reduced modulo the n-th cyclotomic
//! polynomial. Mixed orders are combined by lifting both operands to the lcm
//! order, and purely rational values collapse to order 1, so equality across
//! representations is exact.

use num::{BigInt, BigRational, One, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Exact division of integer polynomials, assuming divisibility and a monic
/// divisor. Coefficients ascending.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map(|c| c.is_one()).unwrap_or(false));
    let mut rem: Vec<BigInt> = num.to_vec();
    if rem.len() < den.len() {
        assert!(rem.iter().all(|c| c.is_zero()));
        return vec![BigInt::zero()];
    }
    let qlen = rem.len() - den.len() + 1;
    let mut quot = vec![BigInt::zero(); qlen];
    for k in (0..qlen).rev() {
        let lead = rem[k + den.len() - 1].clone();
        if lead.is_zero() {
            continue;
        }
        quot[k] = lead.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[k + j] -= &lead * dj;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "inexact division");
    quot
}

/// The n-th cyclotomic polynomial, coefficients ascending, memoized.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![-BigInt::one(), BigInt::one()]
    } else {
        // (x^n - 1) / prod of Phi_d over proper divisors d
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = -BigInt::one();
        num[n as usize] = BigInt::one();
        for d in divisors(n) {
            if d == n {
                continue;
            }
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
        num
    };
    let arc = Arc::new(result);
    cache.lock().unwrap().insert(n, arc.clone());
    arc
}

/// An element of Q(zeta_order) in reduced power-basis form.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(v: i64) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![BigRational::from_integer(BigInt::from(v))],
        }
    }

    pub fn from_rational(v: BigRational) -> Self {
        Cyclotomic {
            order: 1,
            coeffs: vec![v],
        }
    }

    /// `zeta_order^exp`.
    pub fn root_of_unity(order: u64, exp: u64) -> Self {
        assert!(order >= 1);
        let e = (exp % order) as usize;
        let mut raw = vec![BigRational::zero(); e + 1];
        raw[e] = BigRational::one();
        Self::reduce(order, raw)
    }

    /// Reduce an arbitrary-degree coefficient vector modulo Phi_order and
    /// collapse to order 1 when the value is rational.
    fn reduce(order: u64, mut raw: Vec<BigRational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let deg = phi.len() - 1; // = euler_phi(order)
        if raw.len() > deg {
            for k in (deg..raw.len()).rev() {
                let lead = raw[k].clone();
                if lead.is_zero() {
                    continue;
                }
                raw[k] = BigRational::zero();
                for (j, pj) in phi.iter().take(deg).enumerate() {
                    let sub = &lead * BigRational::from_integer(pj.clone());
                    raw[k - deg + j] -= sub;
                }
            }
        }
        raw.truncate(deg);
        raw.resize(deg, BigRational::zero());
        let mut c = Cyclotomic {
            order,
            coeffs: raw,
        };
        if c.order > 1 && c.coeffs[1..].iter().all(|v| v.is_zero()) {
            c = Cyclotomic {
                order: 1,
                coeffs: vec![c.coeffs[0].clone()],
            };
        }
        c
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|v| v.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.order == 1 || self.coeffs[1..].iter().all(|v| v.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        let r = self.to_rational()?;
        if r.is_integer() {
            Some(r.to_integer())
        } else {
            None
        }
    }

    /// Re-express in Q(zeta_m) for a multiple m of the current order. The
    /// result keeps order exactly m (no rational collapse), so callers may
    /// combine coefficient vectors of two raised values positionally.
    fn raised(&self, m: u64) -> Cyclotomic {
        if m == self.order {
            return self.clone();
        }
        assert!(m % self.order == 0);
        let step = (m / self.order) as usize;
        let mut raw = vec![BigRational::zero(); self.coeffs.len() * step];
        for (k, v) in self.coeffs.iter().enumerate() {
            if !v.is_zero() {
                raw[k * step] = v.clone();
            }
        }
        let mut c = Self::reduce(m, raw);
        if c.order != m {
            let deg = euler_phi(m) as usize;
            let mut coeffs = vec![BigRational::zero(); deg];
            coeffs[0] = c.coeffs[0].clone();
            c = Cyclotomic { order: m, coeffs };
        }
        c
    }

    fn common_order(&self, other: &Cyclotomic) -> u64 {
        num::integer::lcm(self.order, other.order)
    }

    /// Complex conjugation, `zeta -> zeta^(order-1)`.
    pub fn conjugate(&self) -> Cyclotomic {
        if self.is_rational() {
            return self.clone();
        }
        let n = self.order;
        let mut raw = vec![BigRational::zero(); n as usize];
        for (k, v) in self.coeffs.iter().enumerate() {
            if !v.is_zero() {
                let e = ((n as usize) - k) % n as usize;
                raw[e] += v;
            }
        }
        Self::reduce(n, raw)
    }

    pub fn scale_rational(&self, s: &BigRational) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.iter().map(|v| v * s).collect(),
        }
    }

    pub fn div_integer(&self, d: i64) -> Cyclotomic {
        assert!(d != 0);
        self.scale_rational(&BigRational::new(BigInt::one(), BigInt::from(d)))
    }

    /// Total order on values for deterministic sorting.
    pub fn lex_cmp(&self, other: &Cyclotomic) -> Ordering {
        let m = self.common_order(other);
        let a = self.raised(m);
        let b = other.raised(m);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.lex_cmp(other) == Ordering::Equal
    }
}

impl Eq for Cyclotomic {}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        if self.order == 1 && rhs.order == 1 {
            return Cyclotomic::from_rational(&self.coeffs[0] + &rhs.coeffs[0]);
        }
        let m = self.common_order(&rhs);
        let a = self.raised(m);
        let b = rhs.raised(m);
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(x, y)| x + y)
            .collect();
        Cyclotomic::reduce(m, coeffs)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            order: self.order,
            coeffs: self.coeffs.into_iter().map(|v| -v).collect(),
        }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        if self.order == 1 {
            return rhs.scale_rational(&self.coeffs[0]);
        }
        if rhs.order == 1 {
            return self.scale_rational(&rhs.coeffs[0]);
        }
        let m = self.common_order(&rhs);
        let a = self.raised(m);
        let b = rhs.raised(m);
        let mut raw = vec![BigRational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Cyclotomic::reduce(m, raw)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{}", r);
        }
        let mut parts = Vec::new();
        for (k, v) in self.coeffs.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let term = if k == 0 {
                format!("{v}")
            } else if v.is_one() {
                format!("z{}^{k}", self.order)
            } else {
                format!("{v}*z{}^{k}", self.order)
            };
            parts.push(term);
        }
        write!(f, "{}", parts.join(" + "))
    }
}
