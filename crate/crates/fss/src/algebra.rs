//! Exact value types and lattice operations for fuzzy soft sets over a
//! finite universe and parameter set.
//!
//! A fuzzy soft set is stored zero-extended to the full parameter set, so
//! union, intersection, complement and comparison are total. Grades are kept
//! in a row-major grid (parameters x universe) and every operation is pure.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

/// Scalar admissible as a membership grade. The lattice layer only needs an
/// ordered semiring slice of it: comparison for min/max, subtraction for the
/// relative complement, and exact construction from a small ratio.
pub trait GradeScalar:
    Clone + Ord + fmt::Debug + Zero + One + Sub<Output = Self> + Add<Output = Self>
{
    /// Exact value of `num/den` (approximate types round).
    fn from_ratio(num: u64, den: u64) -> Self;
}

impl GradeScalar for num_rational::Rational64 {
    fn from_ratio(num: u64, den: u64) -> Self {
        num_rational::Rational64::new(num as i64, den as i64)
    }
}

impl GradeScalar for num_rational::BigRational {
    fn from_ratio(num: u64, den: u64) -> Self {
        num_rational::BigRational::new(num.into(), den.into())
    }
}

impl GradeScalar for ordered_float::OrderedFloat<f64> {
    fn from_ratio(num: u64, den: u64) -> Self {
        ordered_float::OrderedFloat(num as f64 / den as f64)
    }
}

impl GradeScalar for ordered_float::OrderedFloat<f32> {
    fn from_ratio(num: u64, den: u64) -> Self {
        ordered_float::OrderedFloat(num as f32 / den as f32)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("membership grade {0} outside [0, 1]")]
    GradeOutOfRange(String),
    #[error("signature mismatch: operands disagree on {dimension}")]
    SignatureMismatch { dimension: &'static str },
    #[error("set exceeds the ambient set at ({parameter}, {object})")]
    NotSubsetOfAmbient { parameter: String, object: String },
    #[error("{family} must be nonempty")]
    EmptyFamily { family: &'static str },
    #[error("duplicate {kind} name {name:?}")]
    DuplicateName { kind: &'static str, name: String },
    #[error("a fuzzy soft point needs at least one strictly positive grade")]
    ZeroPoint,
    #[error("unknown parameter {0:?}")]
    UnknownParameter(String),
}

/// A membership degree: a scalar pinned to `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade<T>(T);

impl<T: GradeScalar> Grade<T> {
    pub fn new(value: T) -> Result<Self, AlgebraError> {
        if value < T::zero() || value > T::one() {
            return Err(AlgebraError::GradeOutOfRange(format!("{value:?}")));
        }
        Ok(Grade(value))
    }

    pub fn zero() -> Self {
        Grade(T::zero())
    }

    pub fn one() -> Self {
        Grade(T::one())
    }

    /// `num/den`, which must land in `[0, 1]`.
    pub fn from_ratio(num: u64, den: u64) -> Result<Self, AlgebraError> {
        Grade::new(T::from_ratio(num, den))
    }

    pub fn value(&self) -> &T {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0 == T::zero()
    }

    pub fn max(self, other: Self) -> Self {
        if self.0 >= other.0 {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self.0 <= other.0 {
            self
        } else {
            other
        }
    }

    /// `self - other`; caller guarantees `other <= self`.
    fn minus(&self, other: &Self) -> Self {
        Grade(self.0.clone() - other.0.clone())
    }
}

/// The frame every set lives in: object names, parameter names, and the
/// ambient grades bounding all subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceSignature<T> {
    universe: Vec<String>,
    parameters: Vec<String>,
    ambient: Vec<Grade<T>>,
}

impl<T: GradeScalar> SpaceSignature<T> {
    /// `ambient` is row-major: one row of `universe.len()` grades per parameter.
    pub fn new(
        universe: Vec<String>,
        parameters: Vec<String>,
        ambient: Vec<Grade<T>>,
    ) -> Result<Arc<Self>, AlgebraError> {
        if universe.is_empty() {
            return Err(AlgebraError::EmptyFamily { family: "universe" });
        }
        if parameters.is_empty() {
            return Err(AlgebraError::EmptyFamily {
                family: "parameter set",
            });
        }
        check_distinct(&universe, "object")?;
        check_distinct(&parameters, "parameter")?;
        assert_eq!(
            ambient.len(),
            universe.len() * parameters.len(),
            "ambient grid size"
        );
        Ok(Arc::new(SpaceSignature {
            universe,
            parameters,
            ambient,
        }))
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn cell_count(&self) -> usize {
        self.universe.len() * self.parameters.len()
    }

    fn cell(&self, parameter: usize, object: usize) -> usize {
        parameter * self.universe.len() + object
    }

    pub fn ambient_grade(&self, parameter: usize, object: usize) -> &Grade<T> {
        &self.ambient[self.cell(parameter, object)]
    }

    /// Names of the cell at a flat index, for error reporting.
    pub fn cell_names(&self, cell: usize) -> (&str, &str) {
        let n = self.universe.len();
        (&self.parameters[cell / n], &self.universe[cell % n])
    }

    pub fn parameter_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.parameters
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| AlgebraError::UnknownParameter(name.to_string()))
    }

    /// The ambient set f_E viewed as a subset of itself.
    pub fn ambient_set(self: &Arc<Self>) -> FuzzySoftSet<T> {
        FuzzySoftSet {
            signature: Arc::clone(self),
            grades: self.ambient.clone(),
        }
    }

    /// The all-zero set Phi_E.
    pub fn empty_set(self: &Arc<Self>) -> FuzzySoftSet<T> {
        FuzzySoftSet {
            signature: Arc::clone(self),
            grades: vec![Grade::zero(); self.cell_count()],
        }
    }
}

fn check_distinct(names: &[String], kind: &'static str) -> Result<(), AlgebraError> {
    for (i, name) in names.iter().enumerate() {
        if names[..i].contains(name) {
            return Err(AlgebraError::DuplicateName {
                kind,
                name: name.clone(),
            });
        }
    }
    Ok(())
}

/// A fuzzy soft set: a total grade grid over its signature's cells.
#[derive(Debug, Clone)]
pub struct FuzzySoftSet<T> {
    signature: Arc<SpaceSignature<T>>,
    grades: Vec<Grade<T>>,
}

impl<T: GradeScalar> PartialEq for FuzzySoftSet<T> {
    fn eq(&self, other: &Self) -> bool {
        self.same_signature(other) && self.grades == other.grades
    }
}

impl<T: GradeScalar> Eq for FuzzySoftSet<T> {}

impl<T: GradeScalar> PartialOrd for FuzzySoftSet<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on the grade grid; a canonical total order used for
/// deterministic member ordering, not the subset order.
impl<T: GradeScalar> Ord for FuzzySoftSet<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grades.cmp(&other.grades)
    }
}

impl<T: GradeScalar> FuzzySoftSet<T> {
    /// Builds a set from a row-major grade grid, checked against the ambient.
    pub fn new(
        signature: Arc<SpaceSignature<T>>,
        grades: Vec<Grade<T>>,
    ) -> Result<Self, AlgebraError> {
        assert_eq!(grades.len(), signature.cell_count(), "grade grid size");
        for (cell, g) in grades.iter().enumerate() {
            if g > &signature.ambient[cell] {
                let (p, x) = signature.cell_names(cell);
                return Err(AlgebraError::NotSubsetOfAmbient {
                    parameter: p.to_string(),
                    object: x.to_string(),
                });
            }
        }
        Ok(FuzzySoftSet { signature, grades })
    }

    pub fn signature(&self) -> &Arc<SpaceSignature<T>> {
        &self.signature
    }

    pub fn grades(&self) -> &[Grade<T>] {
        &self.grades
    }

    pub fn grade(&self, parameter: usize, object: usize) -> &Grade<T> {
        &self.grades[self.signature.cell(parameter, object)]
    }

    fn same_signature(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.signature, &other.signature) || self.signature == other.signature
    }

    fn check_signature(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.same_signature(other) {
            return Ok(());
        }
        let dimension = if self.signature.universe != other.signature.universe {
            "universe"
        } else if self.signature.parameters != other.signature.parameters {
            "parameters"
        } else {
            "ambient"
        };
        Err(AlgebraError::SignatureMismatch { dimension })
    }

    pub fn is_empty(&self) -> bool {
        self.grades.iter().all(Grade::is_zero)
    }

    /// The subset relation: pointwise `<=` on every cell.
    pub fn le(&self, other: &Self) -> Result<bool, AlgebraError> {
        self.check_signature(other)?;
        Ok(self
            .grades
            .iter()
            .zip(&other.grades)
            .all(|(a, b)| a <= b))
    }

    /// Pointwise maximum.
    pub fn union(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_signature(other)?;
        Ok(FuzzySoftSet {
            signature: Arc::clone(&self.signature),
            grades: self
                .grades
                .iter()
                .zip(&other.grades)
                .map(|(a, b)| a.clone().max(b.clone()))
                .collect(),
        })
    }

    /// Pointwise minimum.
    pub fn intersect(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_signature(other)?;
        Ok(FuzzySoftSet {
            signature: Arc::clone(&self.signature),
            grades: self
                .grades
                .iter()
                .zip(&other.grades)
                .map(|(a, b)| a.clone().min(b.clone()))
                .collect(),
        })
    }

    pub fn union_all<'a, I>(sets: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = &'a Self>,
        T: 'a,
    {
        Self::fold_all(sets, Self::union)
    }

    pub fn intersect_all<'a, I>(sets: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = &'a Self>,
        T: 'a,
    {
        Self::fold_all(sets, Self::intersect)
    }

    fn fold_all<'a, I, F>(sets: I, op: F) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = &'a Self>,
        F: Fn(&Self, &Self) -> Result<Self, AlgebraError>,
        T: 'a,
    {
        let mut iter = sets.into_iter();
        let first = iter.next().ok_or(AlgebraError::EmptyFamily {
            family: "set family",
        })?;
        iter.try_fold(first.clone(), |acc, s| op(&acc, s))
    }

    /// Relative complement: ambient grade minus own grade, cell-wise.
    pub fn complement(&self) -> Self {
        // `new` already enforced grades <= ambient.
        FuzzySoftSet {
            signature: Arc::clone(&self.signature),
            grades: self
                .grades
                .iter()
                .zip(&self.signature.ambient)
                .map(|(g, a)| a.minus(g))
                .collect(),
        }
    }

    /// Parameters with a nonzero slice, i.e. the stored carrier.
    pub fn support(&self) -> Vec<usize> {
        let n = self.signature.universe.len();
        (0..self.signature.parameters.len())
            .filter(|&p| self.grades[p * n..(p + 1) * n].iter().any(|g| !g.is_zero()))
            .collect()
    }

    /// Splits the set into one fuzzy soft point per supported parameter.
    /// Their union reassembles the set; Phi_E decomposes into nothing.
    pub fn decompose_points(&self) -> Vec<FuzzySoftPoint<T>> {
        let n = self.signature.universe.len();
        self.support()
            .into_iter()
            .map(|p| FuzzySoftPoint {
                signature: Arc::clone(&self.signature),
                parameter: p,
                membership: self.grades[p * n..(p + 1) * n].to_vec(),
            })
            .collect()
    }
}

/// A fuzzy soft set supported on a single parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzySoftPoint<T> {
    signature: Arc<SpaceSignature<T>>,
    parameter: usize,
    membership: Vec<Grade<T>>,
}

impl<T: GradeScalar> FuzzySoftPoint<T> {
    pub fn new(
        signature: Arc<SpaceSignature<T>>,
        parameter: &str,
        membership: Vec<Grade<T>>,
    ) -> Result<Self, AlgebraError> {
        let parameter = signature.parameter_index(parameter)?;
        assert_eq!(membership.len(), signature.universe.len(), "membership size");
        if membership.iter().all(Grade::is_zero) {
            return Err(AlgebraError::ZeroPoint);
        }
        Ok(FuzzySoftPoint {
            signature,
            parameter,
            membership,
        })
    }

    pub fn parameter(&self) -> &str {
        &self.signature.parameters[self.parameter]
    }

    pub fn membership(&self) -> &[Grade<T>] {
        &self.membership
    }

    /// Zero-extension to a full fuzzy soft set.
    pub fn to_set(&self) -> FuzzySoftSet<T> {
        let n = self.signature.universe.len();
        let mut grades = vec![Grade::zero(); self.signature.cell_count()];
        grades[self.parameter * n..(self.parameter + 1) * n].clone_from_slice(&self.membership);
        FuzzySoftSet {
            signature: Arc::clone(&self.signature),
            grades,
        }
    }

    /// Point membership: the point's grades sit below `h` at its parameter.
    pub fn is_in(&self, h: &FuzzySoftSet<T>) -> Result<bool, AlgebraError> {
        self.to_set().check_signature(h)?;
        let n = self.signature.universe.len();
        Ok(self
            .membership
            .iter()
            .zip(&h.grades[self.parameter * n..(self.parameter + 1) * n])
            .all(|(a, b)| a <= b))
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::{FuzzySoftSet, Grade, SpaceSignature};

    fn tenths(vals: &[u64]) -> Vec<Grade> {
        vals.iter().map(|&v| Grade::from_ratio(v, 10).unwrap()).collect()
    }

    /// The 3x3 signature of the worked example space.
    pub(crate) fn example_signature() -> std::sync::Arc<SpaceSignature> {
        SpaceSignature::new(
            vec!["h1".into(), "h2".into(), "h3".into()],
            vec!["e1".into(), "e2".into(), "e3".into()],
            tenths(&[2, 8, 5, 8, 1, 10, 7, 5, 2]),
        )
        .unwrap()
    }

    pub(crate) fn set(sig: &std::sync::Arc<SpaceSignature>, vals: &[u64]) -> FuzzySoftSet {
        FuzzySoftSet::new(std::sync::Arc::clone(sig), tenths(vals)).unwrap()
    }

    #[test]
    fn grade_rejects_out_of_range() {
        assert!(Grade::from_ratio(12, 10).is_err());
        assert!(Grade::from_ratio(10, 10).is_ok());
    }

    #[test]
    fn subset_relation_on_example_sets() {
        let sig = example_signature();
        let ambient = sig.ambient_set();
        let t3 = set(&sig, &[2, 4, 1, 0, 0, 0, 0, 0, 0]);
        assert!(sig.empty_set().le(&t3).unwrap());
        // 0.8 > 0.4 at (e1, h2)
        assert!(!ambient.le(&t3).unwrap());
        assert!(t3.le(&ambient).unwrap());
    }

    #[test]
    fn union_and_intersection_match_hand_computation() {
        let sig = example_signature();
        let t4 = set(&sig, &[1, 5, 5, 7, 0, 7, 6, 1, 1]);
        let t5 = set(&sig, &[2, 6, 4, 1, 1, 9, 5, 5, 1]);
        assert_eq!(t4.union(&t5).unwrap(), set(&sig, &[2, 6, 5, 7, 1, 9, 6, 5, 1]));
        assert_eq!(
            t4.intersect(&t5).unwrap(),
            set(&sig, &[1, 5, 4, 1, 0, 7, 5, 1, 1])
        );
        let g = set(&sig, &[1, 4, 5, 1, 0, 7, 5, 1, 1]);
        assert_eq!(g.intersect(&sig.ambient_set()).unwrap(), g);
    }

    #[test]
    fn complement_of_example_sets() {
        let sig = example_signature();
        assert_eq!(sig.empty_set().complement(), sig.ambient_set());
        assert_eq!(sig.ambient_set().complement(), sig.empty_set());
        let t3 = set(&sig, &[2, 4, 1, 0, 0, 0, 0, 0, 0]);
        assert_eq!(
            t3.complement(),
            set(&sig, &[0, 4, 4, 8, 1, 10, 7, 5, 2])
        );
    }

    #[test]
    fn subset_violation_names_first_offending_pair() {
        let sig = example_signature();
        let err = FuzzySoftSet::new(std::sync::Arc::clone(&sig), tenths(&[3, 0, 0, 0, 0, 0, 0, 0, 0]))
            .unwrap_err();
        assert_eq!(
            err,
            AlgebraError::NotSubsetOfAmbient {
                parameter: "e1".into(),
                object: "h1".into()
            }
        );
    }

    #[test]
    fn point_membership() {
        let sig = example_signature();
        let t3 = set(&sig, &[2, 4, 1, 0, 0, 0, 0, 0, 0]);
        let p = FuzzySoftPoint::new(std::sync::Arc::clone(&sig), "e1", tenths(&[2, 4, 1])).unwrap();
        assert!(p.is_in(&t3).unwrap());
        assert!(p.is_in(&sig.ambient_set()).unwrap());
        let q = FuzzySoftPoint::new(std::sync::Arc::clone(&sig), "e1", tenths(&[2, 5, 1])).unwrap();
        assert!(!q.is_in(&t3).unwrap());
    }

    #[test]
    fn point_decomposition_reassembles() {
        let sig = example_signature();
        assert!(sig.empty_set().decompose_points().is_empty());
        let t3 = set(&sig, &[2, 4, 1, 0, 0, 0, 0, 0, 0]);
        let pts = t3.decompose_points();
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].parameter(), "e1");
        let ambient = sig.ambient_set();
        let pts = ambient.decompose_points();
        assert_eq!(pts.len(), 3);
        let rebuilt =
            FuzzySoftSet::union_all(pts.iter().map(|p| p.to_set()).collect::<Vec<_>>().iter())
                .unwrap();
        assert_eq!(rebuilt, ambient);
    }

    #[test]
    fn signature_mismatch_names_dimension() {
        let sig = example_signature();
        let other = SpaceSignature::new(
            vec!["h1".into(), "h2".into()],
            vec!["e1".into()],
            tenths(&[10, 10]),
        )
        .unwrap();
        let err = sig.ambient_set().le(&other.ambient_set()).unwrap_err();
        assert_eq!(err, AlgebraError::SignatureMismatch { dimension: "universe" });
    }

    #[test]
    fn empty_family_is_rejected() {
        let sets: Vec<FuzzySoftSet> = vec![];
        assert!(FuzzySoftSet::union_all(sets.iter()).is_err());
    }
}
