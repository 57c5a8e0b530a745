//! JSON input formats (posets, groups, polytopes) and report serialization.

use crate::ehrhart::polytope::{HalfspaceIneq, LatticePolytopeHRep};
use crate::error::{Error, Result};
use crate::gamma::EffectivenessReport;
use crate::poset::{analyze, automorphism_group, EdgeLabeling, FinitePoset, LabeledPoset};
use crate::reptheory::classfn::CharacterTable;
use crate::reptheory::perm::{PermGroup, Permutation};

use serde::Deserialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

#[derive(Debug, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    #[serde(default)]
    pub covers: Vec<(String, String)>,
    #[serde(default)]
    pub labels: Option<Vec<LabelEntry>>,
    #[serde(default)]
    pub group: Option<GroupFile>,
}

#[derive(Debug, Deserialize)]
pub struct LabelEntry {
    pub cover: (String, String),
    pub sign: i8,
}

#[derive(Debug, Deserialize)]
pub struct GroupFile {
    pub generators: Vec<BTreeMap<String, String>>,
}

/// Parse a poset file into a labeled poset and the group selected by the
/// file (`None` when the file has no group block).
pub fn parse_poset_file(text: &str) -> Result<(LabeledPoset, Option<PermGroup>)> {
    let file: PosetFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let poset = FinitePoset::new(file.elements, &file.covers)?;
    let labeling = match &file.labels {
        None => EdgeLabeling::all_plus(&poset),
        Some(entries) => {
            let named: Vec<((String, String), i8)> = entries
                .iter()
                .map(|e| (e.cover.clone(), e.sign))
                .collect();
            EdgeLabeling::from_named(&poset, &named)?
        }
    };
    let lp = analyze(poset, labeling)?;
    let group = match &file.group {
        None => None,
        Some(g) => {
            let mut gens = Vec::with_capacity(g.generators.len());
            for mapping in &g.generators {
                let mut images: Vec<usize> = (0..lp.len()).collect();
                for (from, to) in mapping {
                    let a = lp
                        .poset()
                        .element_index(from)
                        .ok_or_else(|| Error::UnknownElement(from.clone()))?;
                    let b = lp
                        .poset()
                        .element_index(to)
                        .ok_or_else(|| Error::UnknownElement(to.clone()))?;
                    images[a] = b;
                }
                gens.push(Permutation::new(images)?);
            }
            Some(PermGroup::from_generators(lp.len(), gens)?)
        }
    };
    Ok((lp, group))
}

/// Group selection for the CLI: the file's group when present, otherwise the
/// full automorphism group of the labeled poset.
pub fn select_group(lp: &LabeledPoset, from_file: Option<PermGroup>) -> PermGroup {
    from_file.unwrap_or_else(|| automorphism_group(lp))
}

#[derive(Debug, Deserialize)]
pub struct PolytopeFile {
    pub dimension: usize,
    pub inequalities: Vec<IneqEntry>,
    #[serde(default)]
    pub group: Option<PolytopeGroupFile>,
}

#[derive(Debug, Deserialize)]
pub struct IneqEntry {
    pub normal: Vec<i64>,
    pub offset: i64,
    #[serde(default)]
    pub strict: bool,
}

#[derive(Debug, Deserialize)]
pub struct PolytopeGroupFile {
    /// Coordinate permutations, 0-based image vectors.
    pub generators: Vec<Vec<usize>>,
}

pub fn parse_polytope_file(text: &str) -> Result<(LatticePolytopeHRep, Option<PermGroup>)> {
    let file: PolytopeFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let inequalities = file
        .inequalities
        .into_iter()
        .map(|e| HalfspaceIneq {
            normal: e.normal,
            offset: e.offset,
            strict: e.strict,
        })
        .collect();
    let poly = LatticePolytopeHRep::new(file.dimension, inequalities)?;
    let group = match file.group {
        None => None,
        Some(g) => {
            let gens: Result<Vec<Permutation>> =
                g.generators.into_iter().map(Permutation::new).collect();
            Some(PermGroup::from_generators(file.dimension, gens?)?)
        }
    };
    Ok((poly, group))
}

fn rational_pair(v: &num::BigRational) -> Value {
    let numer = i64::try_from(v.numer()).expect("coefficient fits 64 bits");
    let denom = i64::try_from(v.denom()).expect("denominator fits 64 bits");
    json!([numer, denom])
}

/// Character data: classes with representatives in cycle notation, degrees,
/// and the irreducible value matrix with cyclotomic values as coefficient
/// vectors over the rationals.
pub fn character_table_json(group: &PermGroup, table: &CharacterTable) -> Value {
    let classes: Vec<Value> = (0..group.class_count())
        .map(|c| {
            json!({
                "representative": group.class_representative(c).cycle_notation(None),
                "size": group.class_size(c),
            })
        })
        .collect();
    let irreducibles: Vec<Value> = table
        .irreducibles
        .iter()
        .map(|f| {
            let values: Vec<Value> = f
                .values()
                .iter()
                .map(|v| {
                    json!({
                        "order": v.order(),
                        "coeffs": v.coeffs().iter().map(rational_pair).collect::<Vec<_>>(),
                    })
                })
                .collect();
            Value::Array(values)
        })
        .collect();
    json!({
        "order": table.group_order,
        "classes": classes,
        "names": table.names,
        "degrees": table.degrees,
        "irreducibles": irreducibles,
    })
}

fn group_summary_json(group: &PermGroup, table: &CharacterTable) -> Value {
    json!({
        "order": group.order(),
        "classes": (0..group.class_count())
            .map(|c| json!({
                "representative": group.class_representative(c).cycle_notation(None),
                "size": group.class_size(c),
            }))
            .collect::<Vec<_>>(),
        "irreducible_names": table.names,
        "degrees": table.degrees,
    })
}

/// `{"group": ..., "coefficients": [[multiplicities]...]}` for a decomposed
/// character polynomial.
pub fn char_polynomial_json(
    group: &PermGroup,
    table: &CharacterTable,
    coefficients: &[crate::reptheory::classfn::VirtualCharacter],
) -> Value {
    json!({
        "group": group_summary_json(group, table),
        "coefficients": coefficients
            .iter()
            .map(|v| v.multiplicities().to_vec())
            .collect::<Vec<_>>(),
    })
}

/// The gamma report schema: gamma rows, effectiveness, the per-orbit ledger,
/// and the cross-verification flag.
pub fn report_json(report: &EffectivenessReport) -> Value {
    json!({
        "degree_s": report.degree_s,
        "gamma": report
            .gamma_saturation
            .multiplicity_rows(),
        "effective": report.all_effective,
        "coefficient_effective": report.coefficient_effective,
        "verified_against_hstar": report.methods_agree,
        "orbits": report
            .orbits
            .iter()
            .map(|o| {
                json!({
                    "blocks": o.blocks,
                    "block_sizes": o.block_sizes,
                    "orbit_size": o.orbit_size,
                    "stabilizer_order": o.stabilizer_order,
                    "shift": o.shift,
                    "contribution": o
                        .gamma
                        .iter()
                        .map(|v| v.multiplicities().to_vec())
                        .collect::<Vec<_>>(),
                })
            })
            .collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_minimal_poset() {
        let text = r#"{"elements": ["a", "b"], "covers": [["a", "b"]]}"#;
        let (lp, group) = parse_poset_file(text).unwrap();
        assert_eq!(lp.len(), 2);
        assert!(group.is_none());
        assert!(lp.labeling().is_all_plus());
    }

    #[test]
    fn parse_labels_and_group() {
        let text = r#"{
            "elements": ["a", "b", "c"],
            "covers": [["a", "c"], ["b", "c"]],
            "labels": [{"cover": ["a", "c"], "sign": -1}],
            "group": {"generators": [{"a": "b", "b": "a"}]}
        }"#;
        let (lp, group) = parse_poset_file(text).unwrap();
        assert_eq!(lp.labeling().signs().iter().filter(|&&s| s == -1).count(), 1);
        let g = group.unwrap();
        assert_eq!(g.order(), 2);
        // the swap does not preserve the labeling here
        assert!(!g.elements().iter().all(|p| lp.is_automorphism(p)));
    }

    #[test]
    fn parse_rejects_unknown_element() {
        let text = r#"{"elements": ["a"], "covers": [["a", "z"]]}"#;
        assert!(matches!(
            parse_poset_file(text),
            Err(Error::UnknownElement(_))
        ));
    }

    #[test]
    fn parse_polytope() {
        let text = r#"{
            "dimension": 1,
            "inequalities": [
                {"normal": [1], "offset": 1},
                {"normal": [-1], "offset": 0}
            ]
        }"#;
        let (poly, group) = parse_polytope_file(text).unwrap();
        assert_eq!(poly.dim(), 1);
        assert!(group.is_none());
    }
}
