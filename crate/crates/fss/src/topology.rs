//! Finite fuzzy soft topologies: axiom validation, interior and closure.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, FuzzySoftSet, GradeScalar, SpaceSignature};

#[derive(Debug, Error)]
pub enum TopologyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("family is not a fuzzy soft topology ({0} violation(s))")]
    Invalid(usize),
}

/// Which axiom a candidate family broke.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    ContainsEmpty,
    ContainsAmbient,
    BinaryIntersection,
    BinaryUnion,
}

impl Axiom {
    pub fn id(self) -> &'static str {
        match self {
            Axiom::ContainsEmpty => "i-empty",
            Axiom::ContainsAmbient => "i-ambient",
            Axiom::BinaryIntersection => "ii-intersection",
            Axiom::BinaryUnion => "iii-union",
        }
    }
}

/// One axiom failure: the witnesses it was checked on and, for the closure
/// axioms, the computed set missing from the family.
#[derive(Debug, Clone)]
pub struct Violation<T> {
    pub axiom: Axiom,
    pub witnesses: Vec<FuzzySoftSet<T>>,
    pub computed: Option<FuzzySoftSet<T>>,
}

#[derive(Debug, Clone)]
pub struct ValidationReport<T> {
    pub passed: bool,
    pub violations: Vec<Violation<T>>,
}

/// Checks the three topology axioms on an explicit candidate family.
///
/// Every candidate member must already be a subset of the ambient set; that
/// is a structural error, reported before any axiom is looked at. Pairs are
/// scanned in the family's canonical (sorted) order, so the report is
/// deterministic.
pub fn validate<T: GradeScalar>(
    candidate: &[FuzzySoftSet<T>],
    signature: &Arc<SpaceSignature<T>>,
) -> Result<ValidationReport<T>, AlgebraError> {
    let members = canonical_members(candidate, signature)?;
    let empty = signature.empty_set();
    let ambient = signature.ambient_set();
    let mut violations = Vec::new();
    if !members.contains(&empty) {
        violations.push(Violation {
            axiom: Axiom::ContainsEmpty,
            witnesses: vec![],
            computed: Some(empty.clone()),
        });
    }
    if !members.contains(&ambient) {
        violations.push(Violation {
            axiom: Axiom::ContainsAmbient,
            witnesses: vec![],
            computed: Some(ambient.clone()),
        });
    }
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            let meet = members[i].intersect(&members[j])?;
            if !members.contains(&meet) {
                violations.push(Violation {
                    axiom: Axiom::BinaryIntersection,
                    witnesses: vec![members[i].clone(), members[j].clone()],
                    computed: Some(meet),
                });
            }
            let join = members[i].union(&members[j])?;
            if !members.contains(&join) {
                violations.push(Violation {
                    axiom: Axiom::BinaryUnion,
                    witnesses: vec![members[i].clone(), members[j].clone()],
                    computed: Some(join),
                });
            }
        }
    }
    Ok(ValidationReport {
        passed: violations.is_empty(),
        violations,
    })
}

/// Sorts, dedups and ambient-checks a member family. Member identity is by
/// value; the sort gives every topology a canonical member order.
fn canonical_members<T: GradeScalar>(
    candidate: &[FuzzySoftSet<T>],
    signature: &Arc<SpaceSignature<T>>,
) -> Result<Vec<FuzzySoftSet<T>>, AlgebraError> {
    let ambient = signature.ambient_set();
    for m in candidate {
        if !m.le(&ambient)? {
            let bad = m
                .grades()
                .iter()
                .zip(ambient.grades())
                .position(|(g, a)| g > a)
                .expect("le returned false");
            let (p, x) = signature.cell_names(bad);
            return Err(AlgebraError::NotSubsetOfAmbient {
                parameter: p.to_string(),
                object: x.to_string(),
            });
        }
    }
    let mut members = candidate.to_vec();
    members.sort();
    members.dedup();
    Ok(members)
}

/// An explicit finite fuzzy soft topology. Construction validates the
/// axioms; members are kept sorted and duplicate-free.
#[derive(Debug, Clone)]
pub struct FuzzySoftTopology<T> {
    signature: Arc<SpaceSignature<T>>,
    opens: Vec<FuzzySoftSet<T>>,
}

impl<T: GradeScalar> PartialEq for FuzzySoftTopology<T> {
    fn eq(&self, other: &Self) -> bool {
        self.signature == other.signature && self.opens == other.opens
    }
}

impl<T: GradeScalar> Eq for FuzzySoftTopology<T> {}

impl<T: GradeScalar> FuzzySoftTopology<T> {
    pub fn new(
        signature: Arc<SpaceSignature<T>>,
        opens: Vec<FuzzySoftSet<T>>,
    ) -> Result<Self, TopologyError> {
        let report = validate(&opens, &signature)?;
        if !report.passed {
            return Err(TopologyError::Invalid(report.violations.len()));
        }
        Ok(FuzzySoftTopology {
            opens: canonical_members(&opens, &signature)?,
            signature,
        })
    }

    /// Wraps an explicit family without checking the axioms. Interior,
    /// closure and membership queries still work cell-by-cell; this is how
    /// a printed family that fails validation is examined as-is.
    pub fn new_unchecked(
        signature: Arc<SpaceSignature<T>>,
        opens: Vec<FuzzySoftSet<T>>,
    ) -> Result<Self, AlgebraError> {
        Ok(FuzzySoftTopology {
            opens: canonical_members(&opens, &signature)?,
            signature,
        })
    }

    /// The indiscrete topology {Phi_E, f_E}.
    pub fn indiscrete(signature: Arc<SpaceSignature<T>>) -> Self {
        generate_from_subbasis(&[], &signature).expect("indiscrete generation")
    }

    pub fn signature(&self) -> &Arc<SpaceSignature<T>> {
        &self.signature
    }

    /// Members in canonical order.
    pub fn opens(&self) -> &[FuzzySoftSet<T>] {
        &self.opens
    }

    pub fn is_open(&self, g: &FuzzySoftSet<T>) -> Result<bool, AlgebraError> {
        g.le(&self.signature.ambient_set())?;
        Ok(self.opens.contains(g))
    }

    /// Complements of all opens, deduplicated, in canonical order.
    pub fn closed_family(&self) -> Vec<FuzzySoftSet<T>> {
        let mut closed: Vec<_> = self.opens.iter().map(FuzzySoftSet::complement).collect();
        closed.sort();
        closed.dedup();
        closed
    }

    pub fn is_closed(&self, g: &FuzzySoftSet<T>) -> Result<bool, AlgebraError> {
        g.le(&self.signature.ambient_set())?;
        Ok(self.closed_family().contains(g))
    }

    /// Largest open subset: the union of all opens below `g`.
    pub fn interior(&self, g: &FuzzySoftSet<T>) -> Result<FuzzySoftSet<T>, AlgebraError> {
        let mut acc = self.signature.empty_set();
        for h in &self.opens {
            if h.le(g)? {
                acc = acc.union(h)?;
            }
        }
        Ok(acc)
    }

    /// Smallest closed superset: the intersection of all closeds above `g`.
    pub fn closure(&self, g: &FuzzySoftSet<T>) -> Result<FuzzySoftSet<T>, AlgebraError> {
        let mut acc = self.signature.ambient_set();
        for k in self.closed_family() {
            if g.le(&k)? {
                acc = acc.intersect(&k)?;
            }
        }
        Ok(acc)
    }
}

/// Closes a family under binary meet and join to a fixpoint, after adding
/// Phi_E and f_E. The result is the smallest topology containing the family.
pub fn generate_from_subbasis<T: GradeScalar>(
    family: &[FuzzySoftSet<T>],
    signature: &Arc<SpaceSignature<T>>,
) -> Result<FuzzySoftTopology<T>, AlgebraError> {
    let mut members = family.to_vec();
    members.push(signature.empty_set());
    members.push(signature.ambient_set());
    members.sort();
    members.dedup();
    // Each round combines every pair; repeat until nothing new appears.
    loop {
        let mut fresh = Vec::new();
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                for s in [
                    members[i].intersect(&members[j])?,
                    members[i].union(&members[j])?,
                ] {
                    if members.binary_search(&s).is_err() && !fresh.contains(&s) {
                        fresh.push(s);
                    }
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        members.extend(fresh);
        members.sort();
        members.dedup();
    }
    Ok(FuzzySoftTopology {
        signature: Arc::clone(signature),
        opens: members,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::tests::{example_signature, set};
    use crate::{FuzzySoftSet, FuzzySoftTopology, SpaceSignature};

    /// The 11-member family printed for the worked example, in print order.
    pub(crate) fn example_family(
        sig: &Arc<crate::SpaceSignature>,
    ) -> Vec<FuzzySoftSet> {
        vec![
            sig.empty_set(),
            sig.ambient_set(),
            set(sig, &[2, 4, 1, 0, 0, 0, 0, 0, 0]),
            set(sig, &[1, 5, 5, 7, 0, 7, 6, 1, 1]),
            set(sig, &[2, 6, 4, 1, 1, 9, 5, 5, 1]),
            set(sig, &[0, 8, 5, 8, 0, 1, 4, 3, 0]),
            set(sig, &[2, 8, 5, 8, 1, 9, 5, 3, 1]),
            set(sig, &[1, 8, 5, 8, 0, 7, 6, 3, 1]),
            set(sig, &[2, 5, 5, 7, 0, 7, 6, 1, 1]),
            set(sig, &[2, 8, 5, 8, 0, 1, 4, 3, 0]),
            set(sig, &[2, 6, 5, 7, 1, 9, 6, 5, 1]),
        ]
    }

    /// The printed family wrapped as-is (it fails the closure axioms).
    pub(crate) fn example_printed() -> FuzzySoftTopology {
        let sig = example_signature();
        FuzzySoftTopology::new_unchecked(Arc::clone(&sig), example_family(&sig)).unwrap()
    }

    /// The printed family closed into an actual topology (46 members).
    pub(crate) fn example_topology() -> FuzzySoftTopology {
        let sig = example_signature();
        generate_from_subbasis(&example_family(&sig), &sig).unwrap()
    }

    #[test]
    fn indiscrete_family_validates() {
        let sig = example_signature();
        let report = validate(&[sig.empty_set(), sig.ambient_set()], &sig).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn discrete_crisp_topology_validates() {
        let sig = SpaceSignature::new(
            vec!["a".into(), "b".into()],
            vec!["e".into()],
            vec![crate::Grade::one(), crate::Grade::one()],
        )
        .unwrap();
        let all: Vec<FuzzySoftSet> = (0..4u64)
            .map(|mask| {
                FuzzySoftSet::new(
                    Arc::clone(&sig),
                    (0..2)
                        .map(|i| crate::Grade::from_ratio((mask >> i) & 1, 1).unwrap())
                        .collect(),
                )
                .unwrap()
            })
            .collect();
        assert!(validate(&all, &sig).unwrap().passed);
    }

    #[test]
    fn printed_example_family_fails_both_closure_axioms() {
        let sig = example_signature();
        let report = validate(&example_family(&sig), &sig).unwrap();
        assert!(!report.passed);
        // T4 meet T5 is missing: e1 (0.1,0.5,0.4), e2 (0.1,0,0.7), e3 (0.5,0.1,0.1)
        let t4 = set(&sig, &[1, 5, 5, 7, 0, 7, 6, 1, 1]);
        let t5 = set(&sig, &[2, 6, 4, 1, 1, 9, 5, 5, 1]);
        let expected = set(&sig, &[1, 5, 4, 1, 0, 7, 5, 1, 1]);
        assert!(report.violations.iter().any(|v| {
            v.axiom == Axiom::BinaryIntersection
                && v.witnesses.contains(&t4)
                && v.witnesses.contains(&t5)
                && v.computed.as_ref() == Some(&expected)
        }));
        assert!(report
            .violations
            .iter()
            .any(|v| v.axiom == Axiom::BinaryUnion));
    }

    #[test]
    fn member_exceeding_ambient_is_a_structural_error() {
        let sig = example_signature();
        let mut sig2_grades = Vec::new();
        for _ in 0..9 {
            sig2_grades.push(crate::Grade::one());
        }
        let full = SpaceSignature::new(
            vec!["h1".into(), "h2".into(), "h3".into()],
            vec!["e1".into(), "e2".into(), "e3".into()],
            sig2_grades,
        )
        .unwrap();
        let too_big = full.ambient_set();
        assert!(validate(&[too_big], &sig).is_err());
    }

    #[test]
    fn closed_family_of_example_contains_t3_complement() {
        let sig = example_signature();
        let topo = example_topology();
        let t3c = set(&sig, &[0, 4, 4, 8, 1, 10, 7, 5, 2]);
        assert!(topo.is_closed(&t3c).unwrap());
        assert!(topo.is_open(&sig.empty_set()).unwrap());
        assert!(topo.is_closed(&sig.ambient_set()).unwrap());
    }

    #[test]
    fn interior_of_example_sets() {
        let sig = example_signature();
        let topo = example_topology();
        assert_eq!(topo.interior(&sig.ambient_set()).unwrap(), sig.ambient_set());
        assert_eq!(topo.interior(&sig.empty_set()).unwrap(), sig.empty_set());
    }

    #[test]
    fn interior_of_g_e_under_printed_family_is_empty() {
        // No printed open other than Phi_E sits below g_E.
        let sig = example_signature();
        let printed = example_printed();
        let g_e = set(&sig, &[1, 4, 5, 1, 0, 7, 5, 1, 1]);
        assert_eq!(printed.interior(&g_e).unwrap(), sig.empty_set());
        // The repaired topology adds opens below g_E, so its interior grows.
        let g_e_int = example_topology().interior(&g_e).unwrap();
        assert_eq!(g_e_int, set(&sig, &[1, 4, 1, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn closure_of_t3_under_printed_family_is_ambient() {
        // Only f_E among the 11 printed complements dominates T3.
        let sig = example_signature();
        let printed = example_printed();
        let t3 = set(&sig, &[2, 4, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(printed.closure(&t3).unwrap(), sig.ambient_set());
        let topo = example_topology();
        assert_eq!(topo.closure(&sig.empty_set()).unwrap(), sig.empty_set());
        assert_eq!(topo.closure(&sig.ambient_set()).unwrap(), sig.ambient_set());
    }

    #[test]
    fn subbasis_closure_of_example_has_46_members() {
        let topo = example_topology();
        assert_eq!(topo.opens().len(), 46);
        let sig = topo.signature().clone();
        assert!(validate(topo.opens(), &sig).unwrap().passed);
        for m in example_family(&sig) {
            assert!(topo.is_open(&m).unwrap());
        }
    }

    #[test]
    fn generation_is_a_fixpoint_on_valid_topologies() {
        let sig = example_signature();
        let indiscrete = generate_from_subbasis(&[], &sig).unwrap();
        assert_eq!(indiscrete.opens().len(), 2);
        let again = generate_from_subbasis(indiscrete.opens(), &sig).unwrap();
        assert_eq!(again, indiscrete);
        let topo = example_topology();
        let again = generate_from_subbasis(topo.opens(), &sig).unwrap();
        assert_eq!(again, topo);
    }
}
