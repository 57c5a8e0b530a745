//! Character table construction for finite permutation groups by the
//! Dixon--Burnside method: the class-sum matrices are simultaneously
//! diagonalized over a prime field F_p with p = 1 (mod exponent) and
//! p > 2 sqrt(|G|), and the mod-p character values are lifted to exact
//! cyclotomics through the eigenvalue-multiplicity Fourier inversion.

use crate::error::Result;
use crate::reptheory::classfn::{CharacterTable, ClassFunction};
use crate::reptheory::cyclotomic::Cyclotomic;
use crate::reptheory::modp::{inv_mod, is_prime, pow_mod, primitive_root, Matrix};
use crate::reptheory::perm::PermGroup;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Smallest prime p = 1 (mod n) with p > lower.
fn find_prime(n: u64, lower: u64) -> u64 {
    let mut p = (lower / n) * n + 1;
    while p <= lower || !is_prime(p) || p % n != 1 {
        p += n;
    }
    p
}

/// Exact character table of `group`, rows sorted with the trivial character
/// first, then by degree, then by lexicographic value vector.
pub fn character_table(group: &PermGroup) -> Result<CharacterTable> {
    let k = group.class_count();
    let class_sizes: Vec<usize> = (0..k).map(|c| group.class_size(c)).collect();
    let inverse_classes: Vec<usize> = (0..k).map(|c| group.inverse_class(c)).collect();
    if k == 1 {
        return Ok(CharacterTable {
            group_order: group.order(),
            class_sizes,
            inverse_classes,
            irreducibles: vec![ClassFunction::trivial(1)],
            degrees: vec![1],
            names: vec!["1".to_string()],
        });
    }

    let order = group.order() as u64;
    let n_exp = group.exponent();
    let lower = 2 * (order as f64).sqrt().ceil() as u64 + 1;
    let p = find_prime(n_exp, lower);

    // class multiplication coefficients a[i][j][l] = #{x in C_i : x^-1 g_l in C_j}
    let mut coeff = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        for &xi in &group.conjugacy_classes()[i].members {
            let x_inv = group.element(xi).inverse();
            for l in 0..k {
                let y = x_inv.compose(group.class_representative(l));
                let j = group.class_of(&y)?;
                coeff[i][j][l] += 1;
            }
        }
    }

    // split the common eigenspaces of the class-sum matrices over F_p
    let mut subspaces = vec![Matrix::identity(k)];
    for i in 1..k {
        if subspaces.iter().all(|v| v.cols == 1) {
            break;
        }
        let mut mi = Matrix::zero(k, k);
        for j in 0..k {
            for l in 0..k {
                mi.set(j, l, coeff[i][j][l] % p);
            }
        }
        let mut next = Vec::new();
        for v in subspaces {
            if v.cols == 1 {
                next.push(v);
                continue;
            }
            // restriction A of M_i to the invariant subspace: M_i V = V A
            let miv = mi.mul(&v, p);
            let d = v.cols;
            let mut a = Matrix::zero(d, d);
            for col in 0..d {
                let b: Vec<u64> = (0..k).map(|r| miv.at(r, col)).collect();
                let x = v.solve(&b, p);
                for r in 0..d {
                    a.set(r, col, x[r]);
                }
            }
            let mut found = 0usize;
            for lambda in 0..p {
                let mut shifted = a.clone();
                for t in 0..d {
                    let val = (shifted.at(t, t) + p - lambda) % p;
                    shifted.set(t, t, val);
                }
                let kernel = shifted.kernel(p);
                if kernel.cols > 0 {
                    next.push(v.mul(&kernel, p));
                    found += kernel.cols;
                    if found == d {
                        break;
                    }
                }
            }
            assert_eq!(found, d, "class-sum matrix not diagonalizable");
        }
        subspaces = next;
    }
    assert!(
        subspaces.iter().all(|v| v.cols == 1) && subspaces.len() == k,
        "eigenspace splitting incomplete"
    );

    // normalized central characters u with u[identity class] = 1
    let mut central: Vec<Vec<u64>> = Vec::with_capacity(k);
    for v in &subspaces {
        let u0 = v.at(0, 0);
        assert!(u0 != 0, "central character vanishes at the identity class");
        let scale = inv_mod(u0, p);
        central.push((0..k).map(|r| v.at(r, 0) * scale % p).collect());
    }

    // degrees from the orthogonality relation |G|/d^2 = sum u_i u_{i*} / h_i
    let g_mod = order % p;
    let mut rows: Vec<(i64, ClassFunction)> = Vec::with_capacity(k);
    let z = pow_mod(primitive_root(p), (p - 1) / n_exp, p);
    let z_inv = inv_mod(z, p);
    let n_inv = inv_mod(n_exp % p, p);

    // power-class tables pc[c][s] = class of rep_c^s
    let mut power_class = vec![vec![0usize; n_exp as usize]; k];
    for c in 0..k {
        let rep = group.class_representative(c);
        let mut pow = crate::reptheory::perm::Permutation::identity(group.degree());
        for s in 0..n_exp as usize {
            power_class[c][s] = group.class_of(&pow)?;
            pow = rep.compose(&pow);
        }
    }

    for u in &central {
        let mut s = 0u64;
        for c in 0..k {
            let h_inv = inv_mod(class_sizes[c] as u64 % p, p);
            s = (s + u[c] * u[inverse_classes[c]] % p * h_inv) % p;
        }
        let d_sq = g_mod * inv_mod(s, p) % p;
        let mut degree = 0u64;
        for cand in 1..p {
            if cand * cand % p == d_sq {
                degree = cand.min(p - cand);
                break;
            }
        }
        assert!(degree > 0, "no square root for degree");

        // mod-p character values x_c = d * u_c / h_c
        let x: Vec<u64> = (0..k)
            .map(|c| degree * u[c] % p * inv_mod(class_sizes[c] as u64 % p, p) % p)
            .collect();

        // lift each value through eigenvalue multiplicities
        let mut values = Vec::with_capacity(k);
        for c in 0..k {
            let mut value = Cyclotomic::zero();
            let mut total = 0u64;
            for t in 0..n_exp {
                let mut acc = 0u64;
                let mut zpow = 1u64; // z^{-st}
                let step = pow_mod(z_inv, t, p);
                for s in 0..n_exp as usize {
                    acc = (acc + x[power_class[c][s]] * zpow) % p;
                    zpow = zpow * step % p;
                }
                let n_t = acc * n_inv % p;
                assert!(n_t <= degree, "lifted multiplicity exceeds the degree");
                total += n_t;
                if n_t > 0 {
                    let term =
                        Cyclotomic::root_of_unity(n_exp, t).scale_rational(&num::BigRational::from_integer((n_t as i64).into()));
                    value = value + term;
                }
            }
            assert_eq!(total, degree, "eigenvalue multiplicities do not sum to the degree");
            values.push(value);
        }
        rows.push((degree as i64, ClassFunction::new(values)));
    }

    // deterministic row order: trivial first, then degree, then lex values
    let trivial = ClassFunction::trivial(k);
    rows.sort_by(|(da, fa), (db, fb)| {
        let ta = *fa == trivial;
        let tb = *fb == trivial;
        match tb.cmp(&ta) {
            Ordering::Equal => match da.cmp(db) {
                Ordering::Equal => fa.lex_cmp(fb),
                ord => ord,
            },
            ord => ord,
        }
    });
    assert!(rows[0].1 == trivial, "trivial character missing");

    let degrees: Vec<i64> = rows.iter().map(|(d, _)| *d).collect();
    let irreducibles: Vec<ClassFunction> = rows.into_iter().map(|(_, f)| f).collect();
    let sum_sq: i64 = degrees.iter().map(|d| d * d).sum();
    assert_eq!(sum_sq as usize, group.order(), "degree squares must sum to |G|");

    let names: Vec<String> = (0..k)
        .map(|i| {
            if i == 0 {
                "1".to_string()
            } else {
                format!("chi{i}")
            }
        })
        .collect();
    let table = CharacterTable {
        group_order: group.order(),
        class_sizes,
        inverse_classes,
        irreducibles,
        degrees,
        names,
    };
    if !table.verify_orthogonality() {
        let rows: Vec<String> = table
            .irreducibles
            .iter()
            .map(|f| {
                f.values()
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        panic!("orthogonality check failed; rows:\n{}", rows.join("\n"));
    }
    Ok(table)
}

/// Memoized variant keyed by the full element list; the tables in play are
/// tiny and recomputation dominates the cost of the calling pipelines.
pub fn character_table_cached(group: &PermGroup) -> Result<Arc<CharacterTable>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<Vec<usize>>, Arc<CharacterTable>>>> = OnceLock::new();
    let key: Vec<Vec<usize>> = group
        .elements()
        .iter()
        .map(|p| p.images().to_vec())
        .collect();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&key) {
        return Ok(hit.clone());
    }
    let table = Arc::new(character_table(group)?);
    cache.lock().unwrap().insert(key, table.clone());
    Ok(table)
}
