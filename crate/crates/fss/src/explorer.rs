//! Random space generation, exhaustive grid enumeration, theorem fuzzing
//! and counterexample search.
//!
//! Everything here is a pure function of its seed and arguments. The
//! generator is SplitMix64 (Steele, Lea & Flood's mixer, the same stream as
//! Java's `SplitRandom`), chosen because it is five lines to reimplement in
//! any language; test vectors are pinned in this module's tests.

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, Grade};
use crate::semi::{
    self, classify, equivalence_report, point_characterization_check, property_suite,
    sandwich_check, SandwichMode,
};
use crate::topology::generate_from_subbasis;
use crate::{FuzzySoftSet, FuzzySoftTopology, Rational, SpaceSignature};

#[derive(Debug, Error)]
pub enum ExplorerError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("enumeration would visit {count} subsets, above the cap of {cap}; use a coarser grid")]
    CapExceeded { count: u128, cap: u64 },
    #[error("ambient grade at ({parameter}, {object}) is not a multiple of 1/{denominator}")]
    OffGrid {
        parameter: String,
        object: String,
        denominator: u32,
    },
    #[error("unknown search property {0:?}")]
    UnknownProperty(String),
    #[error("{0} must be at least 1")]
    ZeroSize(&'static str),
}

/// SplitMix64. One `u64` of state; every output is a bijective mix of it.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish draw in `0..bound` by modulo reduction. The slight bias
    /// is irrelevant here; what matters is that the reduction is trivial to
    /// reproduce in another language.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        self.next_u64() % bound
    }
}

/// The grade grid {0, 1/d, ..., 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridSpec {
    pub denominator: u32,
}

impl GridSpec {
    pub fn new(denominator: u32) -> Result<Self, ExplorerError> {
        if denominator == 0 {
            return Err(ExplorerError::ZeroSize("grid denominator"));
        }
        Ok(GridSpec { denominator })
    }

    fn grade(&self, numerator: u64) -> Grade<Rational> {
        Grade::from_ratio(numerator, self.denominator as u64).expect("grid grade in range")
    }

    /// Numerator of a grade on this grid, or None when off-grid.
    fn numerator(&self, g: &Grade<Rational>) -> Option<u64> {
        let scaled = *g.value() * Rational::from_integer(self.denominator as i64);
        scaled.is_integer().then(|| *scaled.numer() as u64)
    }
}

/// Default ceiling on exhaustive subset enumeration.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Deterministically generates a signature plus a validated topology over
/// it. Ambient grades are drawn from the grid; the topology is the subbasis
/// closure of `subbasis_size` random subsets of the ambient.
pub fn gen_space(
    seed: u64,
    universe_size: usize,
    parameter_count: usize,
    grid: GridSpec,
    subbasis_size: usize,
) -> Result<(Arc<SpaceSignature>, FuzzySoftTopology), ExplorerError> {
    if universe_size == 0 {
        return Err(ExplorerError::ZeroSize("universe size"));
    }
    if parameter_count == 0 {
        return Err(ExplorerError::ZeroSize("parameter count"));
    }
    let mut rng = SplitMix64::new(seed);
    let universe: Vec<String> = (1..=universe_size).map(|i| format!("x{i}")).collect();
    let parameters: Vec<String> = (1..=parameter_count).map(|i| format!("e{i}")).collect();
    let d = grid.denominator as u64;
    let ambient: Vec<Grade<Rational>> = (0..universe_size * parameter_count)
        .map(|_| grid.grade(rng.next_below(d + 1)))
        .collect();
    let signature = SpaceSignature::new(universe, parameters, ambient)?;
    let mut subbasis = Vec::with_capacity(subbasis_size);
    for _ in 0..subbasis_size {
        subbasis.push(random_subset(&mut rng, &signature, grid));
    }
    let topology = generate_from_subbasis(&subbasis, &signature)?;
    Ok((signature, topology))
}

/// A random grid-valued subset of the ambient.
pub fn random_subset(
    rng: &mut SplitMix64,
    signature: &Arc<SpaceSignature>,
    grid: GridSpec,
) -> FuzzySoftSet {
    let n = signature.universe().len();
    let grades = (0..signature.cell_count())
        .map(|cell| {
            let max = grid
                .numerator(signature.ambient_grade(cell / n, cell % n))
                .expect("ambient on grid");
            grid.grade(rng.next_below(max + 1))
        })
        .collect();
    FuzzySoftSet::new(Arc::clone(signature), grades).expect("grades below ambient")
}

/// Exhaustive stream of every grid-valued subset of the ambient, in
/// lexicographic cell order (cell 0 is the most significant digit).
#[derive(Debug)]
pub struct SubsetEnumeration {
    signature: Arc<SpaceSignature>,
    grid: GridSpec,
    maxes: Vec<u64>,
    state: Option<Vec<u64>>,
}

impl SubsetEnumeration {
    /// Total number of subsets the stream will yield.
    pub fn total_count(&self) -> u128 {
        self.maxes.iter().map(|&m| m as u128 + 1).product()
    }
}

impl Iterator for SubsetEnumeration {
    type Item = FuzzySoftSet;

    fn next(&mut self) -> Option<FuzzySoftSet> {
        let digits = self.state.as_ref()?;
        let set = FuzzySoftSet::new(
            Arc::clone(&self.signature),
            digits.iter().map(|&n| self.grid.grade(n)).collect(),
        )
        .expect("enumerated grades below ambient");
        // Odometer increment, last cell fastest.
        let mut digits = self.state.take()?;
        for i in (0..digits.len()).rev() {
            if digits[i] < self.maxes[i] {
                digits[i] += 1;
                self.state = Some(digits);
                return Some(set);
            }
            digits[i] = 0;
        }
        Some(set)
    }
}

/// Counts the subsets `enumerate_subsets` would yield, without a cap check.
pub fn subset_count(
    signature: &Arc<SpaceSignature>,
    grid: GridSpec,
) -> Result<u128, ExplorerError> {
    Ok(cell_maxes(signature, grid)?
        .iter()
        .map(|&m| m as u128 + 1)
        .product())
}

fn cell_maxes(
    signature: &Arc<SpaceSignature>,
    grid: GridSpec,
) -> Result<Vec<u64>, ExplorerError> {
    (0..signature.cell_count())
        .map(|cell| {
            let n = signature.universe().len();
            let g = signature.ambient_grade(cell / n, cell % n);
            grid.numerator(g).ok_or_else(|| {
                let (p, x) = signature.cell_names(cell);
                ExplorerError::OffGrid {
                    parameter: p.to_string(),
                    object: x.to_string(),
                    denominator: grid.denominator,
                }
            })
        })
        .collect()
}

pub fn enumerate_subsets(
    signature: &Arc<SpaceSignature>,
    grid: GridSpec,
    cap: u64,
) -> Result<SubsetEnumeration, ExplorerError> {
    let maxes = cell_maxes(signature, grid)?;
    let count: u128 = maxes.iter().map(|&m| m as u128 + 1).product();
    if count > cap as u128 {
        return Err(ExplorerError::CapExceeded { count, cap });
    }
    Ok(SubsetEnumeration {
        signature: Arc::clone(signature),
        grid,
        maxes,
        state: Some(vec![0; signature.cell_count()]),
    })
}

/// Semi-closure read off its definition: the meet of every enumerated
/// semiclosed superset of `g`. Independent of the closed formula in `semi`.
pub fn semiclosure_oracle(
    topology: &FuzzySoftTopology,
    g: &FuzzySoftSet,
    grid: GridSpec,
    cap: u64,
) -> Result<FuzzySoftSet, ExplorerError> {
    let signature = topology.signature().clone();
    let mut acc = signature.ambient_set();
    for s in enumerate_subsets(&signature, grid, cap)? {
        if g.le(&s)? && semi::is_semiclosed_char(topology, &s)? {
            acc = acc.intersect(&s)?;
        }
    }
    Ok(acc)
}

/// Semi-interior read off its definition: the join of every enumerated
/// semiopen subset of `g`.
pub fn semiinterior_oracle(
    topology: &FuzzySoftTopology,
    g: &FuzzySoftSet,
    grid: GridSpec,
    cap: u64,
) -> Result<FuzzySoftSet, ExplorerError> {
    let signature = topology.signature().clone();
    let mut acc = signature.empty_set();
    for s in enumerate_subsets(&signature, grid, cap)? {
        if s.le(g)? && semi::is_semiopen_char(topology, &s)? {
            acc = acc.union(&s)?;
        }
    }
    Ok(acc)
}

/// Non-theorems worth hunting witnesses for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchProperty {
    /// Two semiopen sets whose meet is not semiopen.
    SemiopenMeet,
    /// A semiopen set and an open set whose meet is not semiopen.
    SemiopenMeetOpen,
    /// Two semiclosed sets whose join is not semiclosed.
    SemiclosedJoin,
    /// A semiopen set that is not open.
    SemiopenNotOpen,
}

impl SearchProperty {
    pub fn id(self) -> &'static str {
        match self {
            SearchProperty::SemiopenMeet => "semiopen-meet",
            SearchProperty::SemiopenMeetOpen => "semiopen-meet-open",
            SearchProperty::SemiclosedJoin => "semiclosed-join",
            SearchProperty::SemiopenNotOpen => "semiopen-not-open",
        }
    }

    pub fn parse(s: &str) -> Result<Self, ExplorerError> {
        match s {
            "semiopen-meet" => Ok(SearchProperty::SemiopenMeet),
            "semiopen-meet-open" => Ok(SearchProperty::SemiopenMeetOpen),
            "semiclosed-join" => Ok(SearchProperty::SemiclosedJoin),
            "semiopen-not-open" => Ok(SearchProperty::SemiopenNotOpen),
            other => Err(ExplorerError::UnknownProperty(other.to_string())),
        }
    }
}

/// Full classification transcript for one set of a witness; this is what a
/// reader re-checks by hand.
#[derive(Debug, Clone)]
pub struct Transcript {
    pub role: String,
    pub set: FuzzySoftSet,
    pub interior: FuzzySoftSet,
    pub closure: FuzzySoftSet,
    pub semiopen_def: bool,
    pub semiopen_char: bool,
    pub semiclosed_def: bool,
    pub semiclosed_char: bool,
    pub open: bool,
    pub closed: bool,
}

fn transcript(
    topology: &FuzzySoftTopology,
    role: &str,
    set: &FuzzySoftSet,
) -> Result<Transcript, AlgebraError> {
    let report = classify(topology, set)?;
    Ok(Transcript {
        role: role.to_string(),
        set: set.clone(),
        interior: topology.interior(set)?,
        closure: topology.closure(set)?,
        semiopen_def: report.semiopen_def,
        semiopen_char: report.semiopen_char,
        semiclosed_def: report.semiclosed_def,
        semiclosed_char: report.semiclosed_char,
        open: report.open,
        closed: report.closed,
    })
}

#[derive(Debug, Clone)]
pub struct Witness {
    pub space_seed: u64,
    pub signature: Arc<SpaceSignature>,
    pub topology: FuzzySoftTopology,
    pub transcripts: Vec<Transcript>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchStatus {
    Found,
    Exhausted,
    BudgetSpent,
}

#[derive(Debug)]
pub struct SearchOutcome {
    pub property: SearchProperty,
    pub status: SearchStatus,
    pub spaces_sampled: u64,
    pub witness: Option<Witness>,
}

/// Knobs for `search_counterexample`. Defaults match the crisp 3-object
/// single-parameter hunting ground.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub universe_size: usize,
    pub parameter_count: usize,
    pub grid: GridSpec,
    pub max_subbasis: usize,
    pub enumeration_cap: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            universe_size: 3,
            parameter_count: 1,
            grid: GridSpec { denominator: 1 },
            max_subbasis: 3,
            enumeration_cap: DEFAULT_ENUMERATION_CAP,
        }
    }
}

/// Samples spaces from the seed and hunts for a witness of the property's
/// failure; a found witness is shrunk grade-by-grade and re-verified under
/// both classification routes before being reported.
pub fn search_counterexample(
    property: SearchProperty,
    budget: u64,
    seed: u64,
    config: SearchConfig,
) -> Result<SearchOutcome, ExplorerError> {
    let mut rng = SplitMix64::new(seed);
    let mut all_enumerated = true;
    for sampled in 0..budget {
        let space_seed = rng.next_u64();
        let subbasis_size = rng.next_below(config.max_subbasis as u64 + 1) as usize;
        let (signature, topology) = gen_space(
            space_seed,
            config.universe_size,
            config.parameter_count,
            config.grid,
            subbasis_size,
        )?;
        let subsets: Vec<FuzzySoftSet> =
            match enumerate_subsets(&signature, config.grid, config.enumeration_cap) {
                Ok(stream) => stream.collect(),
                Err(ExplorerError::CapExceeded { .. }) => {
                    all_enumerated = false;
                    continue;
                }
                Err(e) => return Err(e),
            };
        if let Some(witness) =
            hunt_in_space(property, &topology, &subsets, space_seed, config.grid)?
        {
            return Ok(SearchOutcome {
                property,
                status: SearchStatus::Found,
                spaces_sampled: sampled + 1,
                witness: Some(witness),
            });
        }
    }
    Ok(SearchOutcome {
        property,
        status: if all_enumerated {
            SearchStatus::Exhausted
        } else {
            SearchStatus::BudgetSpent
        },
        spaces_sampled: budget,
        witness: None,
    })
}

/// Does the (possibly shrunk) candidate pair still exhibit the failure?
fn pair_violates(
    property: SearchProperty,
    topology: &FuzzySoftTopology,
    g: &FuzzySoftSet,
    k: &FuzzySoftSet,
) -> Result<bool, AlgebraError> {
    match property {
        SearchProperty::SemiopenMeet => Ok(semi::is_semiopen_char(topology, g)?
            && semi::is_semiopen_char(topology, k)?
            && !semi::is_semiopen_char(topology, &g.intersect(k)?)?),
        SearchProperty::SemiopenMeetOpen => Ok(semi::is_semiopen_char(topology, g)?
            && topology.is_open(k)?
            && !semi::is_semiopen_char(topology, &g.intersect(k)?)?),
        SearchProperty::SemiclosedJoin => Ok(semi::is_semiclosed_char(topology, g)?
            && semi::is_semiclosed_char(topology, k)?
            && !semi::is_semiclosed_char(topology, &g.union(k)?)?),
        SearchProperty::SemiopenNotOpen => {
            Ok(semi::is_semiopen_char(topology, g)? && !topology.is_open(g)?)
        }
    }
}

fn hunt_in_space(
    property: SearchProperty,
    topology: &FuzzySoftTopology,
    subsets: &[FuzzySoftSet],
    space_seed: u64,
    grid: GridSpec,
) -> Result<Option<Witness>, ExplorerError> {
    let pairs_needed = !matches!(property, SearchProperty::SemiopenNotOpen);
    for g in subsets {
        if pairs_needed {
            for k in subsets {
                if pair_violates(property, topology, g, k)? {
                    return Ok(Some(build_witness(
                        property, topology, g, k, space_seed, grid,
                    )?));
                }
            }
        } else if pair_violates(property, topology, g, g)? {
            return Ok(Some(build_witness(
                property, topology, g, g, space_seed, grid,
            )?));
        }
    }
    Ok(None)
}

fn build_witness(
    property: SearchProperty,
    topology: &FuzzySoftTopology,
    g: &FuzzySoftSet,
    k: &FuzzySoftSet,
    space_seed: u64,
    grid: GridSpec,
) -> Result<Witness, ExplorerError> {
    let (g, k) = shrink_pair(property, topology, g.clone(), k.clone(), grid)?;
    assert!(pair_violates(property, topology, &g, &k)?);
    let mut transcripts = Vec::new();
    match property {
        SearchProperty::SemiopenNotOpen => {
            transcripts.push(transcript(topology, "g", &g)?);
        }
        SearchProperty::SemiclosedJoin => {
            transcripts.push(transcript(topology, "g", &g)?);
            transcripts.push(transcript(topology, "k", &k)?);
            transcripts.push(transcript(topology, "join", &g.union(&k)?)?);
        }
        _ => {
            transcripts.push(transcript(topology, "g", &g)?);
            transcripts.push(transcript(topology, "k", &k)?);
            transcripts.push(transcript(topology, "meet", &g.intersect(&k)?)?);
        }
    }
    Ok(Witness {
        space_seed,
        signature: topology.signature().clone(),
        topology: topology.clone(),
        transcripts,
    })
}

/// Greedy shrink: lower each grade one grid step at a time, keeping every
/// step on which the violation persists, until no cell can move.
fn shrink_pair(
    property: SearchProperty,
    topology: &FuzzySoftTopology,
    mut g: FuzzySoftSet,
    mut k: FuzzySoftSet,
    grid: GridSpec,
) -> Result<(FuzzySoftSet, FuzzySoftSet), ExplorerError> {
    let signature = topology.signature().clone();
    loop {
        let mut moved = false;
        for which in 0..2 {
            for cell in 0..signature.cell_count() {
                let current = if which == 0 { g.clone() } else { k.clone() };
                let n = grid
                    .numerator(&current.grades()[cell])
                    .expect("witness on grid");
                if n == 0 {
                    continue;
                }
                let mut grades = current.grades().to_vec();
                grades[cell] = grid.grade(n - 1);
                let candidate = FuzzySoftSet::new(Arc::clone(&signature), grades)?;
                let (cg, ck) = if which == 0 {
                    (candidate.clone(), k.clone())
                } else {
                    (g.clone(), candidate.clone())
                };
                if pair_violates(property, topology, &cg, &ck)? {
                    g = cg;
                    k = ck;
                    moved = true;
                }
            }
        }
        if !moved {
            return Ok((g, k));
        }
    }
}

/// Bounds for `fuzz_theorems` space sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FuzzConfig {
    pub seed: u64,
    pub samples: u64,
    pub max_universe: usize,
    pub max_parameters: usize,
    pub max_denominator: u32,
    pub max_subbasis: usize,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            seed: 0,
            samples: 1000,
            max_universe: 3,
            max_parameters: 2,
            max_denominator: 4,
            max_subbasis: 3,
        }
    }
}

/// One broken assertion with everything needed to replay it.
#[derive(Debug, Clone)]
pub struct FuzzFailure {
    pub sample: u64,
    pub space_seed: u64,
    pub check: String,
    pub signature: Arc<SpaceSignature>,
    pub topology: FuzzySoftTopology,
    pub sets: Vec<(String, FuzzySoftSet)>,
}

#[derive(Debug)]
pub struct FuzzReport {
    pub config: FuzzConfig,
    pub checks: BTreeMap<String, u64>,
    pub failures: Vec<FuzzFailure>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Drives every theorem check over randomly generated spaces and subsets.
pub fn fuzz_theorems(config: FuzzConfig) -> Result<FuzzReport, ExplorerError> {
    let mut rng = SplitMix64::new(config.seed);
    let mut checks: BTreeMap<String, u64> = BTreeMap::new();
    let mut failures: Vec<FuzzFailure> = Vec::new();
    for sample in 0..config.samples {
        let space_seed = rng.next_u64();
        let universe_size = rng.next_below(config.max_universe as u64) as usize + 1;
        let parameter_count = rng.next_below(config.max_parameters as u64) as usize + 1;
        let denominator = rng.next_below(config.max_denominator as u64) as u32 + 1;
        let subbasis_size = rng.next_below(config.max_subbasis as u64 + 1) as usize;
        let grid = GridSpec { denominator };
        let (signature, topology) =
            gen_space(space_seed, universe_size, parameter_count, grid, subbasis_size)?;
        let g = random_subset(&mut rng, &signature, grid);
        let k = random_subset(&mut rng, &signature, grid);

        let mut record = |check: &str, ok: bool, sets: &[(&str, &FuzzySoftSet)]| {
            *checks.entry(check.to_string()).or_insert(0) += 1;
            if !ok {
                failures.push(FuzzFailure {
                    sample,
                    space_seed,
                    check: check.to_string(),
                    signature: Arc::clone(&signature),
                    topology: topology.clone(),
                    sets: sets
                        .iter()
                        .map(|(n, s)| (n.to_string(), (*s).clone()))
                        .collect(),
                });
            }
        };

        for (name, s) in [("g", &g), ("k", &k)] {
            let report = classify(&topology, s)?;
            record("route-agreement", report.routes_agree(), &[(name, s)]);
            let eq = equivalence_report(&topology, s)?;
            record("equivalence-four-way", eq.all_agree(), &[(name, s)]);
            record(
                "point-characterization",
                point_characterization_check(&topology, s)?,
                &[(name, s)],
            );
            let image = semi::operator_image_check(&topology, s)?;
            record("operator-image", image.all_hold(), &[(name, s)]);
        }

        // Union of semiopen sets stays semiopen, meet of semiclosed stays
        // semiclosed; sampled over the semiopen/semiclosed sets in reach.
        let mut semiopen_sets: Vec<FuzzySoftSet> = topology.opens().to_vec();
        for s in [&g, &k] {
            if semi::is_semiopen_char(&topology, s)? {
                semiopen_sets.push(s.clone());
            }
            semiopen_sets.push(semi::fssint(&topology, s)?);
        }
        let union = FuzzySoftSet::union_all(semiopen_sets.iter())?;
        record(
            "semiopen-union-stability",
            semi::is_semiopen_char(&topology, &union)?,
            &[("union", &union)],
        );
        let mut semiclosed_sets: Vec<FuzzySoftSet> = topology.closed_family();
        for s in [&g, &k] {
            if semi::is_semiclosed_char(&topology, s)? {
                semiclosed_sets.push(s.clone());
            }
            semiclosed_sets.push(semi::fsscl(&topology, s)?);
        }
        let meet = FuzzySoftSet::intersect_all(semiclosed_sets.iter())?;
        record(
            "semiclosed-intersection-stability",
            semi::is_semiclosed_char(&topology, &meet)?,
            &[("meet", &meet)],
        );

        // Sandwich theorems, with the middle set synthesized to satisfy the
        // preconditions: s <= mid <= cl(s), resp. int(m) <= mid <= m.
        let s = semi::fssint(&topology, &g)?;
        let mid = s.union(&k.intersect(&topology.closure(&s)?)?)?;
        let ok = sandwich_check(&topology, &s, &mid, SandwichMode::Semiopen)
            .map_err(|e| match e {
                semi::SemiError::Algebra(a) => ExplorerError::Algebra(a),
                semi::SemiError::Contract { inclusion } => {
                    panic!("synthesized sandwich violated its own precondition: {inclusion}")
                }
            })?;
        record("sandwich-semiopen", ok, &[("base", &s), ("mid", &mid)]);
        let m = semi::fsscl(&topology, &g)?;
        let mid = m.intersect(&topology.interior(&m)?.union(&k)?)?;
        let ok = sandwich_check(&topology, &m, &mid, SandwichMode::Semiclosed)
            .map_err(|e| match e {
                semi::SemiError::Algebra(a) => ExplorerError::Algebra(a),
                semi::SemiError::Contract { inclusion } => {
                    panic!("synthesized sandwich violated its own precondition: {inclusion}")
                }
            })?;
        record("sandwich-semiclosed", ok, &[("base", &m), ("mid", &mid)]);

        for verdict in property_suite(&topology, &g, &k)? {
            record(
                &format!("property-{:02}-{}", verdict.item, verdict.name.replace(' ', "-")),
                verdict.holds,
                &[("g", &g), ("k", &k)],
            );
        }
    }
    Ok(FuzzReport {
        config,
        checks,
        failures,
    })
}
