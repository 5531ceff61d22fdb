//! Finite fuzzy soft topological spaces with exact membership grades.
//!
//! The algebra and topology layers are generic over the grade scalar via
//! [`algebra::GradeScalar`]; the canonical instantiation uses exact 64-bit
//! rationals so that every lattice identity and topological equation can be
//! tested as an equality rather than an approximation. Concrete aliases for
//! that instantiation live at the crate root.

pub mod algebra;
pub mod explorer;
pub mod io;
pub mod semi;
pub mod topology;

/// Canonical exact scalar: reduced 64-bit rationals.
pub type Rational = num_rational::Rational64;

pub type Grade = algebra::Grade<Rational>;
pub type SpaceSignature = algebra::SpaceSignature<Rational>;
pub type FuzzySoftSet = algebra::FuzzySoftSet<Rational>;
pub type FuzzySoftPoint = algebra::FuzzySoftPoint<Rational>;
pub type FuzzySoftTopology = topology::FuzzySoftTopology<Rational>;
pub type ValidationReport = topology::ValidationReport<Rational>;
pub type ClassificationReport = semi::ClassificationReport<Rational>;

/// Approximate scalars, for callers that trade exactness for speed.
pub type GradeF64 = algebra::Grade<ordered_float::OrderedFloat<f64>>;
pub type GradeF32 = algebra::Grade<ordered_float::OrderedFloat<f32>>;
