//! Symmetric-group characters via the Murnaghan--Nakayama rule, plus
//! character tables for symmetric groups and products of symmetric groups
//! built directly from those values (independent of the Dixon engine).

use crate::error::{Error, Result};
use crate::reptheory::classfn::{CharacterTable, ClassFunction};
use crate::reptheory::perm::PermGroup;
use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

/// All partitions of `d`, parts descending, listed in ascending
/// lexicographic order: for d = 4 this is [1,1,1,1], [2,1,1], [2,2],
/// [3,1], [4].
pub fn partitions(d: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max_part.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if d == 0 {
        out.push(Vec::new());
        return out;
    }
    rec(d, d, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn partition_label(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

/// Beta-set (first-column hook lengths) of a partition: distinct values
/// `lambda_i + (k - 1 - i)` for an implicit padding length `k`.
fn beta_set(lambda: &[usize], k: usize) -> Vec<usize> {
    debug_assert!(k >= lambda.len());
    (0..k)
        .map(|i| lambda.get(i).copied().unwrap_or(0) + (k - 1 - i))
        .collect()
}

fn partition_from_beta(mut beta: Vec<usize>) -> Vec<usize> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let k = beta.len();
    let mut lambda: Vec<usize> = beta
        .into_iter()
        .enumerate()
        .map(|(i, b)| b - (k - 1 - i))
        .collect();
    lambda.retain(|&x| x > 0);
    lambda
}

fn mn_recursive(lambda: &[usize], mu: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0];
    let rest = &mu[1..];
    let k = lambda.len().max(1);
    let beta = beta_set(lambda, k);
    let mut total = 0i64;
    // remove a border strip of length r: pick b in the beta-set with
    // b >= r and b - r not in the beta-set; the height is the number of
    // beta values strictly between b - r and b
    for (pos, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let height = beta
            .iter()
            .filter(|&&x| x > b - r && x < b)
            .count();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        let mut new_beta = beta.clone();
        new_beta[pos] = b - r;
        let new_lambda = partition_from_beta(new_beta);
        total += sign * mn_recursive(&new_lambda, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// The irreducible symmetric-group character value `chi^lambda(mu)`.
pub fn symmetric_character(lambda: &[usize], mu: &[usize]) -> Result<i64> {
    let a: usize = lambda.iter().sum();
    let b: usize = mu.iter().sum();
    if a != b {
        return Err(Error::SizeMismatch(a, b));
    }
    static MEMO: OnceLock<Mutex<HashMap<(Vec<usize>, Vec<usize>), i64>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = memo.lock().unwrap();
    Ok(mn_recursive(lambda, mu, &mut guard))
}

/// Dimension of the Specht module of shape `lambda`.
pub fn specht_dimension(lambda: &[usize]) -> i64 {
    let d: usize = lambda.iter().sum();
    symmetric_character(lambda, &vec![1; d]).expect("same size")
}

/// Character table of a full symmetric group realized on the group's own
/// class order, with rows indexed by partitions in the [`partitions`] order
/// and values from the Murnaghan--Nakayama rule.
pub fn symmetric_character_table(group: &PermGroup) -> Result<CharacterTable> {
    let d = group.degree();
    let expected: usize = (1..=d).product();
    if group.order() != expected {
        return Err(Error::Parse(format!(
            "group of order {} is not the full symmetric group on {d} points",
            group.order()
        )));
    }
    let shapes = partitions(d);
    let k = group.class_count();
    if shapes.len() != k {
        return Err(Error::Parse("class count does not match partitions".into()));
    }
    let class_types: Vec<Vec<usize>> = (0..k)
        .map(|c| group.class_representative(c).cycle_type())
        .collect();
    let mut irreducibles = Vec::with_capacity(k);
    let mut degrees = Vec::with_capacity(k);
    let mut names = Vec::with_capacity(k);
    for shape in &shapes {
        let values: Result<Vec<i64>> = class_types
            .iter()
            .map(|mu| symmetric_character(shape, mu))
            .collect();
        irreducibles.push(ClassFunction::from_integers(&values?));
        degrees.push(specht_dimension(shape));
        names.push(partition_label(shape));
    }
    Ok(CharacterTable {
        group_order: group.order(),
        class_sizes: (0..k).map(|c| group.class_size(c)).collect(),
        inverse_classes: (0..k).map(|c| group.inverse_class(c)).collect(),
        irreducibles,
        degrees,
        names,
    })
}

/// Cycle type of a block-preserving permutation restricted to one block.
pub fn cycle_type_on_block(perm: &crate::reptheory::perm::Permutation, block: &[usize]) -> Vec<usize> {
    let inside: std::collections::HashSet<usize> = block.iter().copied().collect();
    let mut type_: Vec<usize> = perm
        .cycles()
        .into_iter()
        .filter(|c| inside.contains(&c[0]))
        .map(|c| {
            debug_assert!(c.iter().all(|x| inside.contains(x)));
            c.len()
        })
        .collect();
    type_.sort_unstable_by(|a, b| b.cmp(a));
    type_
}

/// Character table of a product of symmetric groups acting block-wise: rows
/// are outer tensor products indexed by partition tuples, with values given
/// by products of Murnaghan--Nakayama values on the per-block cycle types.
///
/// `group` must be exactly the full block-wise product (order = product of
/// block factorials, every element preserving each block).
pub fn product_symmetric_character_table(
    group: &PermGroup,
    blocks: &[Vec<usize>],
) -> Result<CharacterTable> {
    let expected: usize = blocks
        .iter()
        .map(|b| (1..=b.len()).product::<usize>())
        .product();
    if group.order() != expected {
        return Err(Error::Parse(format!(
            "group of order {} is not the full product of block symmetric groups",
            group.order()
        )));
    }
    let k = group.class_count();
    let class_types: Vec<Vec<Vec<usize>>> = (0..k)
        .map(|c| {
            let rep = group.class_representative(c);
            blocks
                .iter()
                .map(|b| cycle_type_on_block(rep, b))
                .collect()
        })
        .collect();
    // all partition tuples
    let per_block: Vec<Vec<Vec<usize>>> = blocks.iter().map(|b| partitions(b.len())).collect();
    let mut tuples: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for opts in &per_block {
        let mut next = Vec::with_capacity(tuples.len() * opts.len());
        for t in &tuples {
            for o in opts {
                let mut t2 = t.clone();
                t2.push(o.clone());
                next.push(t2);
            }
        }
        tuples = next;
    }
    if tuples.len() != k {
        return Err(Error::Parse(
            "class count does not match partition tuples".into(),
        ));
    }
    let mut irreducibles = Vec::with_capacity(k);
    let mut degrees = Vec::with_capacity(k);
    let mut names = Vec::with_capacity(k);
    for tuple in &tuples {
        let mut values = Vec::with_capacity(k);
        for types in &class_types {
            let mut v = 1i64;
            for (shape, mu) in tuple.iter().zip(types.iter()) {
                v *= symmetric_character(shape, mu)?;
            }
            values.push(v);
        }
        irreducibles.push(ClassFunction::from_integers(&values));
        degrees.push(tuple.iter().map(|s| specht_dimension(s)).product());
        names.push(
            tuple
                .iter()
                .map(|s| partition_label(s))
                .collect::<Vec<_>>()
                .join("x"),
        );
    }
    Ok(CharacterTable {
        group_order: group.order(),
        class_sizes: (0..k).map(|c| group.class_size(c)).collect(),
        inverse_classes: (0..k).map(|c| group.inverse_class(c)).collect(),
        irreducibles,
        degrees,
        names,
    })
}
