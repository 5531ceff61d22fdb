//! Semiopen and semiclosed classification, semi-interior and semi-closure,
//! and executable checks for the theorems relating them.
//!
//! Everything is classified twice: once from the witness definition (an open
//! h with h <= g <= cl(h), dually for semiclosed) and once from the operator
//! characterization (g <= cl(int(g)), resp. int(cl(g)) <= g). The two routes
//! must agree on every input; keeping both executable is what lets the test
//! layer cross-check them.

use thiserror::Error;

use crate::algebra::{AlgebraError, FuzzySoftSet, GradeScalar};
use crate::topology::FuzzySoftTopology;

#[derive(Debug, Error)]
pub enum SemiError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("sandwich precondition failed: {inclusion}")]
    Contract { inclusion: String },
}

/// Witness route for semiopen: scans opens in canonical order for an open h
/// with h <= g <= cl(h); returns the first witness found.
pub fn is_semiopen_def<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<(bool, Option<FuzzySoftSet<T>>), AlgebraError> {
    for h in topology.opens() {
        if h.le(g)? && g.le(&topology.closure(h)?)? {
            return Ok((true, Some(h.clone())));
        }
    }
    Ok((false, None))
}

/// Witness route for semiclosed: a closed k with int(k) <= g <= k.
pub fn is_semiclosed_def<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<(bool, Option<FuzzySoftSet<T>>), AlgebraError> {
    for k in topology.closed_family() {
        if topology.interior(&k)?.le(g)? && g.le(&k)? {
            return Ok((true, Some(k)));
        }
    }
    Ok((false, None))
}

/// Operator route: g <= cl(int(g)).
pub fn is_semiopen_char<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<bool, AlgebraError> {
    g.le(&topology.closure(&topology.interior(g)?)?)
}

/// Operator route: int(cl(g)) <= g.
pub fn is_semiclosed_char<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<bool, AlgebraError> {
    topology.interior(&topology.closure(g)?)?.le(g)
}

/// Semi-interior: g meet cl(int(g)), the largest semiopen subset of g.
pub fn fssint<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<FuzzySoftSet<T>, AlgebraError> {
    g.intersect(&topology.closure(&topology.interior(g)?)?)
}

/// Semi-closure: g join int(cl(g)), the smallest semiclosed superset of g.
pub fn fsscl<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<FuzzySoftSet<T>, AlgebraError> {
    g.union(&topology.interior(&topology.closure(g)?)?)
}

/// Both-route verdicts for one set, with witnesses and open/closed flags.
#[derive(Debug, Clone)]
pub struct ClassificationReport<T> {
    pub subject: FuzzySoftSet<T>,
    pub semiopen_def: bool,
    pub semiopen_witness: Option<FuzzySoftSet<T>>,
    pub semiopen_char: bool,
    pub semiclosed_def: bool,
    pub semiclosed_witness: Option<FuzzySoftSet<T>>,
    pub semiclosed_char: bool,
    pub open: bool,
    pub closed: bool,
}

pub fn classify<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<ClassificationReport<T>, AlgebraError> {
    let (semiopen_def, semiopen_witness) = is_semiopen_def(topology, g)?;
    let (semiclosed_def, semiclosed_witness) = is_semiclosed_def(topology, g)?;
    Ok(ClassificationReport {
        subject: g.clone(),
        semiopen_def,
        semiopen_witness,
        semiopen_char: is_semiopen_char(topology, g)?,
        semiclosed_def,
        semiclosed_witness,
        semiclosed_char: is_semiclosed_char(topology, g)?,
        open: topology.is_open(g)?,
        closed: topology.is_closed(g)?,
    })
}

impl<T> ClassificationReport<T> {
    /// Both routes agree for both classifications.
    pub fn routes_agree(&self) -> bool {
        self.semiopen_def == self.semiopen_char && self.semiclosed_def == self.semiclosed_char
    }
}

/// The four statements of the semiclosed equivalence theorem, evaluated
/// independently: (1) g semiclosed by witness, (2) int(cl(g)) <= g,
/// (3) cl(int(g^c)) >= g^c, (4) g^c semiopen by witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub semiclosed_def: bool,
    pub interior_closure_below: bool,
    pub closure_interior_complement_above: bool,
    pub complement_semiopen_def: bool,
}

impl EquivalenceReport {
    pub fn all_agree(&self) -> bool {
        let v = self.semiclosed_def;
        self.interior_closure_below == v
            && self.closure_interior_complement_above == v
            && self.complement_semiopen_def == v
    }
}

pub fn equivalence_report<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<EquivalenceReport, AlgebraError> {
    let gc = g.complement();
    Ok(EquivalenceReport {
        semiclosed_def: is_semiclosed_def(topology, g)?.0,
        interior_closure_below: is_semiclosed_char(topology, g)?,
        closure_interior_complement_above: gc
            .le(&topology.closure(&topology.interior(&gc)?)?)?,
        complement_semiopen_def: is_semiopen_def(topology, &gc)?.0,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SandwichMode {
    Semiopen,
    Semiclosed,
}

/// Sandwich theorems: with g semiopen and g <= k <= cl(g), k is semiopen;
/// with g semiclosed and int(g) <= k <= g, k is semiclosed. Precondition
/// violations are contract errors naming the failed inclusion.
pub fn sandwich_check<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
    k: &FuzzySoftSet<T>,
    mode: SandwichMode,
) -> Result<bool, SemiError> {
    match mode {
        SandwichMode::Semiopen => {
            if !is_semiopen_char(topology, g)? {
                return Err(SemiError::Contract {
                    inclusion: "g is not semiopen".into(),
                });
            }
            if !g.le(k)? {
                return Err(SemiError::Contract {
                    inclusion: "g <= k".into(),
                });
            }
            if !k.le(&topology.closure(g)?)? {
                return Err(SemiError::Contract {
                    inclusion: "k <= cl(g)".into(),
                });
            }
            Ok(is_semiopen_char(topology, k)?)
        }
        SandwichMode::Semiclosed => {
            if !is_semiclosed_char(topology, g)? {
                return Err(SemiError::Contract {
                    inclusion: "g is not semiclosed".into(),
                });
            }
            if !topology.interior(g)?.le(k)? {
                return Err(SemiError::Contract {
                    inclusion: "int(g) <= k".into(),
                });
            }
            if !k.le(g)? {
                return Err(SemiError::Contract {
                    inclusion: "k <= g".into(),
                });
            }
            Ok(is_semiclosed_char(topology, k)?)
        }
    }
}

/// Point characterization: g is semiopen iff every point of g sits inside
/// some semiopen subset of g. The forward direction takes h = g itself; the
/// reverse direction re-verifies that the found subsets union back to g and
/// that the union is semiopen.
pub fn point_characterization_check<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<bool, AlgebraError> {
    let semiopen = is_semiopen_char(topology, g)?;
    let points = g.decompose_points();
    if points.is_empty() {
        // Phi_E: no points, the right-hand side holds vacuously, and Phi_E
        // is semiopen, so the biconditional must come out true.
        return Ok(semiopen);
    }
    let mut found = Vec::with_capacity(points.len());
    'points: for p in &points {
        // Candidate pool: g itself, its semi-interior, then opens below g.
        let mut candidates = vec![g.clone(), fssint(topology, g)?];
        for h in topology.opens() {
            if h.le(g)? {
                candidates.push(h.clone());
            }
        }
        for h in candidates {
            if is_semiopen_char(topology, &h)? && p.is_in(&h)? && h.le(g)? {
                found.push(h);
                continue 'points;
            }
        }
        // Some point admits no semiopen subset around it.
        return Ok(!semiopen);
    }
    let union = FuzzySoftSet::union_all(found.iter())?;
    let reassembles = union == *g && is_semiopen_char(topology, &union)?;
    Ok(semiopen == reassembles)
}

/// One item of the fourteen-part semi-closure/semi-interior theorem.
#[derive(Debug, Clone)]
pub struct PropertyVerdict<T> {
    pub item: usize,
    pub name: &'static str,
    /// False when the item's hypothesis (g <= k) does not hold.
    pub applicable: bool,
    pub holds: bool,
    /// The two computed sides, kept on failure.
    pub sides: Option<(FuzzySoftSet<T>, FuzzySoftSet<T>)>,
}

impl<T> PropertyVerdict<T> {
    fn pass(item: usize, name: &'static str, holds: bool) -> Self {
        PropertyVerdict {
            item,
            name,
            applicable: true,
            holds,
            sides: None,
        }
    }
}

/// Evaluates all fourteen fsscl/fssint identities on the pair (g, k).
/// The monotonicity items (v)-(vi) are vacuous unless g <= k; the printed
/// inclusion items (xi)-(xii) are checked non-strictly.
pub fn property_suite<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
    k: &FuzzySoftSet<T>,
) -> Result<Vec<PropertyVerdict<T>>, AlgebraError> {
    let sig = topology.signature().clone();
    let empty = sig.empty_set();
    let ambient = sig.ambient_set();
    let cl_g = fsscl(topology, g)?;
    let cl_k = fsscl(topology, k)?;
    let int_g = fssint(topology, g)?;
    let int_k = fssint(topology, k)?;
    let monotone = g.le(k)?;

    let mut out = Vec::with_capacity(14);
    let eq_item = |item, name, lhs: FuzzySoftSet<T>, rhs: FuzzySoftSet<T>| {
        let holds = lhs == rhs;
        PropertyVerdict {
            item,
            name,
            applicable: true,
            holds,
            sides: if holds { None } else { Some((lhs, rhs)) },
        }
    };
    let le_item = |item, name, applicable: bool, lhs: FuzzySoftSet<T>, rhs: FuzzySoftSet<T>| {
        let holds = !applicable || lhs.le(&rhs).expect("shared signature");
        PropertyVerdict {
            item,
            name,
            applicable,
            holds,
            sides: if holds { None } else { Some((lhs, rhs)) },
        }
    };

    // (i)-(ii): fixpoint characterizations.
    out.push(PropertyVerdict::pass(
        1,
        "semiclosed iff fsscl fixpoint",
        is_semiclosed_char(topology, g)? == (cl_g == *g),
    ));
    out.push(PropertyVerdict::pass(
        2,
        "semiopen iff fssint fixpoint",
        is_semiopen_char(topology, g)? == (int_g == *g),
    ));
    // (iii)-(iv): complement duality.
    out.push(eq_item(
        3,
        "complement of fsscl is fssint of complement",
        cl_g.complement(),
        fssint(topology, &g.complement())?,
    ));
    out.push(eq_item(
        4,
        "complement of fssint is fsscl of complement",
        int_g.complement(),
        fsscl(topology, &g.complement())?,
    ));
    // (v)-(vi): monotonicity, conditional on g <= k.
    out.push(le_item(
        5,
        "fssint monotone",
        monotone,
        int_g.clone(),
        int_k.clone(),
    ));
    out.push(le_item(6, "fsscl monotone", monotone, cl_g.clone(), cl_k.clone()));
    // (vii)-(viii): endpoint values.
    out.push(PropertyVerdict::pass(
        7,
        "fsscl fixes the endpoints",
        fsscl(topology, &empty)? == empty && fsscl(topology, &ambient)? == ambient,
    ));
    out.push(PropertyVerdict::pass(
        8,
        "fssint fixes the endpoints",
        fssint(topology, &empty)? == empty && fssint(topology, &ambient)? == ambient,
    ));
    // (ix)-(x): distribution over join/meet. Only these inclusions hold;
    // the reverse directions fail because a join of semiclosed sets
    // (dually a meet of semiopen sets) need not be semiclosed (semiopen).
    // The `semiclosed-join` search property hunts the witnesses.
    out.push(le_item(
        9,
        "join of fsscls below fsscl of join",
        true,
        cl_g.union(&cl_k)?,
        fsscl(topology, &g.union(k)?)?,
    ));
    out.push(le_item(
        10,
        "fssint of meet below meet of fssints",
        true,
        fssint(topology, &g.intersect(k)?)?,
        int_g.intersect(&int_k)?,
    ));
    // (xi)-(xii): one-sided inclusions.
    out.push(le_item(
        11,
        "fsscl of meet below meet of fsscls",
        true,
        fsscl(topology, &g.intersect(k)?)?,
        cl_g.intersect(&cl_k)?,
    ));
    out.push(le_item(
        12,
        "join of fssints below fssint of join",
        true,
        int_g.union(&int_k)?,
        fssint(topology, &g.union(k)?)?,
    ));
    // (xiii)-(xiv): idempotence.
    out.push(eq_item(13, "fsscl idempotent", fsscl(topology, &cl_g)?, cl_g.clone()));
    out.push(eq_item(14, "fssint idempotent", fssint(topology, &int_g)?, int_g.clone()));
    Ok(out)
}

/// Image claims for the operators: interior/fssint of a semiopen set stay
/// semiopen, closure/fsscl of a semiclosed set stay semiclosed, the closure
/// of every open is semiopen and the interior of every closed is semiclosed.
#[derive(Debug, Clone)]
pub struct OperatorImageReport {
    pub subject_semiopen: bool,
    pub subject_semiclosed: bool,
    pub interior_semiopen: Option<bool>,
    pub fssint_semiopen: Option<bool>,
    pub closure_semiclosed: Option<bool>,
    pub fsscl_semiclosed: Option<bool>,
    pub closures_of_opens_semiopen: bool,
    pub interiors_of_closeds_semiclosed: bool,
}

impl OperatorImageReport {
    pub fn all_hold(&self) -> bool {
        [
            self.interior_semiopen,
            self.fssint_semiopen,
            self.closure_semiclosed,
            self.fsscl_semiclosed,
        ]
        .into_iter()
        .flatten()
        .all(|b| b)
            && self.closures_of_opens_semiopen
            && self.interiors_of_closeds_semiclosed
    }
}

pub fn operator_image_check<T: GradeScalar>(
    topology: &FuzzySoftTopology<T>,
    g: &FuzzySoftSet<T>,
) -> Result<OperatorImageReport, AlgebraError> {
    let subject_semiopen = is_semiopen_char(topology, g)?;
    let subject_semiclosed = is_semiclosed_char(topology, g)?;
    let (interior_semiopen, fssint_semiopen) = if subject_semiopen {
        (
            Some(is_semiopen_char(topology, &topology.interior(g)?)?),
            Some(is_semiopen_char(topology, &fssint(topology, g)?)?),
        )
    } else {
        (None, None)
    };
    let (closure_semiclosed, fsscl_semiclosed) = if subject_semiclosed {
        (
            Some(is_semiclosed_char(topology, &topology.closure(g)?)?),
            Some(is_semiclosed_char(topology, &fsscl(topology, g)?)?),
        )
    } else {
        (None, None)
    };
    let mut closures_of_opens_semiopen = true;
    for h in topology.opens() {
        closures_of_opens_semiopen &= is_semiopen_char(topology, &topology.closure(h)?)?;
    }
    let mut interiors_of_closeds_semiclosed = true;
    for c in topology.closed_family() {
        interiors_of_closeds_semiclosed &=
            is_semiclosed_char(topology, &topology.interior(&c)?)?;
    }
    Ok(OperatorImageReport {
        subject_semiopen,
        subject_semiclosed,
        interior_semiopen,
        fssint_semiopen,
        closure_semiclosed,
        fsscl_semiclosed,
        closures_of_opens_semiopen,
        interiors_of_closeds_semiclosed,
    })
}
