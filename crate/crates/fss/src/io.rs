//! The space document format: a human-editable JSON file carrying a
//! signature, a named topology family and named query sets.
//!
//! Grades travel as strings so they stay exact: a decimal string when the
//! reduced denominator divides a power of ten, otherwise "p/q". Keys are
//! kept in `BTreeMap`s, so serialization is canonical (sorted keys) and
//! byte-stable across runs.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::{FuzzySoftSet, FuzzySoftTopology, Grade, Rational, SpaceSignature};

/// Names with fixed meanings inside `topology` and `sets`.
pub const RESERVED_EMPTY: &str = "phi";
pub const RESERVED_AMBIENT: &str = "ambient";

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed document: {0}")]
    Malformed(String),
    #[error("grade {value:?} at {field} is not a rational in [0, 1]")]
    GradeOutOfRange { field: String, value: String },
    #[error("set {set:?} exceeds the ambient set at ({parameter}, {object})")]
    SubsetViolation {
        set: String,
        parameter: String,
        object: String,
    },
    #[error("{field} is missing an entry for {name:?}")]
    MissingEntry { field: String, name: String },
    #[error("{field} has an entry {name:?} outside the signature")]
    UnknownEntry { field: String, name: String },
    #[error("{name:?} is reserved and cannot carry grades in {field}")]
    ReservedName { field: String, name: String },
    #[error("no set named {0:?} in the document")]
    UnknownSet(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Grade map of one set: parameter -> object -> grade string.
pub type GradeMap = BTreeMap<String, BTreeMap<String, String>>;

/// On-disk shape of a space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDocument {
    pub universe: Vec<String>,
    pub parameters: Vec<String>,
    pub ambient: GradeMap,
    /// `phi` and `ambient` entries may be `null`; they always denote
    /// Phi_E and f_E.
    #[serde(default)]
    pub topology: BTreeMap<String, Option<GradeMap>>,
    #[serde(default)]
    pub sets: BTreeMap<String, GradeMap>,
}

/// A document resolved against the algebra layer.
#[derive(Debug)]
pub struct ParsedSpace {
    pub signature: Arc<SpaceSignature>,
    /// Topology members by document name, including the reserved two.
    pub topology_members: BTreeMap<String, FuzzySoftSet>,
    pub sets: BTreeMap<String, FuzzySoftSet>,
}

impl ParsedSpace {
    /// The document's family wrapped as-is; validation is a separate step.
    pub fn printed_topology(&self) -> Result<FuzzySoftTopology, AlgebraError> {
        FuzzySoftTopology::new_unchecked(
            Arc::clone(&self.signature),
            self.topology_members.values().cloned().collect(),
        )
    }

    /// Looks a set name up in `sets`, then `topology`, then the reserved
    /// names.
    pub fn resolve(&self, name: &str) -> Result<FuzzySoftSet, IoError> {
        if let Some(s) = self.sets.get(name) {
            return Ok(s.clone());
        }
        if let Some(s) = self.topology_members.get(name) {
            return Ok(s.clone());
        }
        match name {
            RESERVED_EMPTY => Ok(self.signature.empty_set()),
            RESERVED_AMBIENT => Ok(self.signature.ambient_set()),
            _ => Err(IoError::UnknownSet(name.to_string())),
        }
    }
}

/// Parses a grade string: either "p/q" or a decimal literal.
pub fn grade_from_str(text: &str, field: &str) -> Result<Grade, IoError> {
    let out_of_range = || IoError::GradeOutOfRange {
        field: field.to_string(),
        value: text.to_string(),
    };
    if text.trim().starts_with('-') {
        return Err(out_of_range());
    }
    let value: Rational = if let Some((p, q)) = text.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| out_of_range())?;
        let q: i64 = q.trim().parse().map_err(|_| out_of_range())?;
        if q <= 0 {
            return Err(out_of_range());
        }
        Rational::new(p, q)
    } else if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || frac.len() > 15 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(out_of_range());
        }
        let int: i64 = if int.is_empty() {
            0
        } else {
            int.parse().map_err(|_| out_of_range())?
        };
        let num: i64 = frac.parse().map_err(|_| out_of_range())?;
        let den = 10i64.pow(frac.len() as u32);
        Rational::from_integer(int) + Rational::new(num, den)
    } else {
        let int: i64 = text.trim().parse().map_err(|_| out_of_range())?;
        Rational::from_integer(int)
    };
    if value.is_negative() || value > Rational::one() {
        return Err(out_of_range());
    }
    Ok(Grade::new(value).expect("range checked"))
}

/// Canonical grade string: exact decimal when the reduced denominator is of
/// the form 2^a * 5^b, otherwise the reduced fraction "p/q".
pub fn grade_to_string(grade: &Grade) -> String {
    let value = *grade.value();
    let numer = *value.numer();
    let denom = *value.denom();
    if denom == 1 {
        return numer.to_string();
    }
    let mut twos = 0u32;
    let mut fives = 0u32;
    let mut rest = denom;
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }
    if rest != 1 {
        return format!("{numer}/{denom}");
    }
    let digits = twos.max(fives);
    let scale = 10i64.pow(digits) / denom;
    let scaled = numer * scale;
    let int = scaled / 10i64.pow(digits);
    let frac = scaled % 10i64.pow(digits);
    format!("{int}.{frac:0width$}", width = digits as usize)
}

fn grade_grid_from_map(
    map: &GradeMap,
    field: &str,
    universe: &[String],
    parameters: &[String],
) -> Result<Vec<Grade>, IoError> {
    for name in map.keys() {
        if !parameters.contains(name) {
            return Err(IoError::UnknownEntry {
                field: field.to_string(),
                name: name.clone(),
            });
        }
    }
    let mut grades = Vec::with_capacity(universe.len() * parameters.len());
    for p in parameters {
        let row = map.get(p).ok_or_else(|| IoError::MissingEntry {
            field: field.to_string(),
            name: p.clone(),
        })?;
        for name in row.keys() {
            if !universe.contains(name) {
                return Err(IoError::UnknownEntry {
                    field: format!("{field}.{p}"),
                    name: name.clone(),
                });
            }
        }
        for x in universe {
            let text = row.get(x).ok_or_else(|| IoError::MissingEntry {
                field: format!("{field}.{p}"),
                name: x.clone(),
            })?;
            grades.push(grade_from_str(text, &format!("{field}.{p}.{x}"))?);
        }
    }
    Ok(grades)
}

fn build_set(
    signature: &Arc<SpaceSignature>,
    map: &GradeMap,
    field: &str,
    name: &str,
) -> Result<FuzzySoftSet, IoError> {
    let grades = grade_grid_from_map(
        map,
        &format!("{field}.{name}"),
        signature.universe(),
        signature.parameters(),
    )?;
    FuzzySoftSet::new(Arc::clone(signature), grades).map_err(|e| match e {
        AlgebraError::NotSubsetOfAmbient { parameter, object } => IoError::SubsetViolation {
            set: name.to_string(),
            parameter,
            object,
        },
        other => IoError::Algebra(other),
    })
}

/// Parses document text into its resolved form.
pub fn parse(text: &str) -> Result<(SpaceDocument, ParsedSpace), IoError> {
    let document: SpaceDocument =
        serde_json::from_str(text).map_err(|e| IoError::Malformed(e.to_string()))?;
    let space = resolve_document(&document)?;
    Ok((document, space))
}

/// Resolves an already-deserialized document.
pub fn resolve_document(document: &SpaceDocument) -> Result<ParsedSpace, IoError> {
    let ambient = grade_grid_from_map(
        &document.ambient,
        "ambient",
        &document.universe,
        &document.parameters,
    )?;
    let signature = SpaceSignature::new(
        document.universe.clone(),
        document.parameters.clone(),
        ambient,
    )?;
    let mut topology_members = BTreeMap::new();
    for (name, body) in &document.topology {
        let set = match (name.as_str(), body) {
            (RESERVED_EMPTY, None) => signature.empty_set(),
            (RESERVED_AMBIENT, None) => signature.ambient_set(),
            (RESERVED_EMPTY | RESERVED_AMBIENT, Some(_)) => {
                return Err(IoError::ReservedName {
                    field: "topology".to_string(),
                    name: name.clone(),
                })
            }
            (_, None) => {
                return Err(IoError::MissingEntry {
                    field: format!("topology.{name}"),
                    name: "grades".to_string(),
                })
            }
            (_, Some(map)) => build_set(&signature, map, "topology", name)?,
        };
        topology_members.insert(name.clone(), set);
    }
    let mut sets = BTreeMap::new();
    for (name, map) in &document.sets {
        if name == RESERVED_EMPTY || name == RESERVED_AMBIENT {
            return Err(IoError::ReservedName {
                field: "sets".to_string(),
                name: name.clone(),
            });
        }
        sets.insert(name.clone(), build_set(&signature, map, "sets", name)?);
    }
    Ok(ParsedSpace {
        signature,
        topology_members,
        sets,
    })
}

/// Canonical text: normalized grade strings, sorted keys, trailing newline.
pub fn serialize(document: &SpaceDocument) -> Result<String, IoError> {
    let space = resolve_document(document)?;
    let canonical = document_from_space(
        &space.signature,
        &space.topology_members,
        &space.sets,
    );
    Ok(serde_json::to_string_pretty(&canonical).expect("document serializes") + "\n")
}

/// Grade map of one set, with canonical grade strings.
pub fn set_to_map(set: &FuzzySoftSet) -> GradeMap {
    let signature = set.signature();
    let mut out = GradeMap::new();
    for (pi, p) in signature.parameters().iter().enumerate() {
        let mut row = BTreeMap::new();
        for (xi, x) in signature.universe().iter().enumerate() {
            row.insert(x.clone(), grade_to_string(set.grade(pi, xi)));
        }
        out.insert(p.clone(), row);
    }
    out
}

/// Rebuilds a document from resolved parts. Members equal to Phi_E or f_E
/// fold onto the reserved names.
pub fn document_from_space(
    signature: &Arc<SpaceSignature>,
    topology_members: &BTreeMap<String, FuzzySoftSet>,
    sets: &BTreeMap<String, FuzzySoftSet>,
) -> SpaceDocument {
    let empty = signature.empty_set();
    let ambient = signature.ambient_set();
    let mut topology = BTreeMap::new();
    for (name, set) in topology_members {
        if *set == empty {
            topology.insert(RESERVED_EMPTY.to_string(), None);
        } else if *set == ambient {
            topology.insert(RESERVED_AMBIENT.to_string(), None);
        } else {
            topology.insert(name.clone(), Some(set_to_map(set)));
        }
    }
    SpaceDocument {
        universe: signature.universe().to_vec(),
        parameters: signature.parameters().to_vec(),
        ambient: set_to_map(&ambient),
        topology,
        sets: sets.iter().map(|(n, s)| (n.clone(), set_to_map(s))).collect(),
    }
}

/// Names a topology's members m01, m02, ... in canonical order, with the
/// reserved names for Phi_E and f_E.
pub fn document_from_topology(topology: &FuzzySoftTopology) -> SpaceDocument {
    let signature = topology.signature();
    let empty = signature.empty_set();
    let ambient = signature.ambient_set();
    let mut members = BTreeMap::new();
    let mut counter = 0usize;
    for set in topology.opens() {
        if *set == empty || *set == ambient {
            continue;
        }
        counter += 1;
        members.insert(format!("m{counter:02}"), set.clone());
    }
    members.insert(RESERVED_EMPTY.to_string(), empty);
    members.insert(RESERVED_AMBIENT.to_string(), ambient);
    document_from_space(signature, &members, &BTreeMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = r#"{
        "universe": ["a"],
        "parameters": ["e"],
        "ambient": {"e": {"a": "1"}},
        "topology": {"phi": null, "ambient": null}
    }"#;

    #[test]
    fn minimal_document_parses_and_validates() {
        let (_, space) = parse(MINIMAL).unwrap();
        assert_eq!(space.topology_members.len(), 2);
        let report = crate::topology::validate(
            &space.topology_members.values().cloned().collect::<Vec<_>>(),
            &space.signature,
        )
        .unwrap();
        assert!(report.passed);
    }

    #[test]
    fn round_trip_is_canonical() {
        let (document, _) = parse(MINIMAL).unwrap();
        let text = serialize(&document).unwrap();
        let (document2, _) = parse(&text).unwrap();
        assert_eq!(serialize(&document2).unwrap(), text);
    }

    #[test]
    fn grade_strings_round_trip() {
        for (text, canonical) in [
            ("0.2", "0.2"),
            ("0.25", "0.25"),
            ("2/10", "0.2"),
            ("1/3", "1/3"),
            ("0", "0"),
            ("1", "1"),
            ("0.5", "0.5"),
            ("7/8", "0.875"),
            ("3/6", "0.5"),
        ] {
            let g = grade_from_str(text, "t").unwrap();
            assert_eq!(grade_to_string(&g), canonical, "input {text:?}");
        }
    }

    #[test]
    fn out_of_range_grade_is_rejected() {
        assert!(matches!(
            grade_from_str("1.2", "t"),
            Err(IoError::GradeOutOfRange { .. })
        ));
        assert!(grade_from_str("-0.1", "t").is_err());
        assert!(grade_from_str("5/4", "t").is_err());
        let bad = MINIMAL.replace("\"1\"", "\"1.2\"");
        assert!(matches!(
            parse(&bad),
            Err(IoError::GradeOutOfRange { .. })
        ));
    }

    #[test]
    fn set_above_ambient_is_rejected_with_location() {
        let text = r#"{
            "universe": ["a"],
            "parameters": ["e"],
            "ambient": {"e": {"a": "0.5"}},
            "topology": {"phi": null, "ambient": null},
            "sets": {"g": {"e": {"a": "0.6"}}}
        }"#;
        match parse(text) {
            Err(IoError::SubsetViolation { set, parameter, object }) => {
                assert_eq!((set.as_str(), parameter.as_str(), object.as_str()), ("g", "e", "a"));
            }
            other => panic!("expected subset violation, got {other:?}"),
        }
    }

    #[test]
    fn reserved_names_cannot_be_redefined() {
        let text = r#"{
            "universe": ["a"],
            "parameters": ["e"],
            "ambient": {"e": {"a": "1"}},
            "sets": {"phi": {"e": {"a": "0"}}}
        }"#;
        assert!(matches!(parse(text), Err(IoError::ReservedName { .. })));
    }

    #[test]
    fn resolve_finds_reserved_and_named_sets() {
        let (_, space) = parse(MINIMAL).unwrap();
        assert_eq!(space.resolve("phi").unwrap(), space.signature.empty_set());
        assert_eq!(
            space.resolve("ambient").unwrap(),
            space.signature.ambient_set()
        );
        assert!(matches!(space.resolve("nope"), Err(IoError::UnknownSet(_))));
    }
}
