//! Executable forms of the level-cut criterion, the characteristic-function
//! criterion, and the lemma relating `χ_A` to interior ideals.
//!
//! Each check evaluates both sides of a biconditional independently and
//! reports whether they agree. Disagreement is a refutation: it carries the
//! witness of whichever side failed.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::automorphisms::is_characteristic_interior_ideal;
use crate::error::{Error, Result};
use crate::fuzzy::{
    self, characteristic_function, image_levels, is_fuzzy_characteristic_interior_ideal,
    is_fuzzy_interior_ideal, t_cut, FuzzySubset, Grade,
};
use crate::generator::{self, Ceiling};
use crate::ideals::{is_interior_ideal, CrispSubset};
use crate::structures::{ElementId, GammaId, PoGammaSemigroup};
use crate::verdict::{Verdict, Witness};

/// Outcome of evaluating both sides of a biconditional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub forward: bool,
    pub backward: bool,
    /// Present exactly when the sides disagree: the failing side's witness.
    pub witness: Option<Witness>,
}

impl EquivalenceReport {
    fn from_sides(forward: Verdict, backward: Verdict) -> Self {
        let witness = match (&forward, &backward) {
            (Verdict::Fail(w), Verdict::Pass) | (Verdict::Pass, Verdict::Fail(w)) => {
                Some(w.clone())
            }
            _ => None,
        };
        EquivalenceReport {
            forward: forward.passed(),
            backward: backward.passed(),
            witness,
        }
    }

    pub fn consistent(&self) -> bool {
        self.forward == self.backward
    }
}

/// Cut levels that cover every distinct non-empty cut: 0 (the whole
/// carrier) and each grade `μ` actually takes.
pub fn criterion_levels(mu: &FuzzySubset) -> Vec<Grade> {
    let mut levels = vec![Grade::ZERO];
    levels.extend(image_levels(mu).into_iter().filter(|g| !g.is_zero()));
    levels
}

/// Forward: `μ` is a fuzzy characteristic interior ideal. Backward: every
/// non-empty cut `μ_t` is a characteristic interior ideal, checked at
/// [`criterion_levels`].
pub fn check_level_criterion(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Result<EquivalenceReport> {
    let forward = is_fuzzy_characteristic_interior_ideal(s, mu)?;
    let mut backward = Verdict::Pass;
    for level in criterion_levels(mu) {
        let cut = t_cut(mu, level);
        if cut.is_empty() {
            continue;
        }
        if let Verdict::Fail(inner) = is_characteristic_interior_ideal(s, &cut)? {
            backward = Verdict::Fail(Witness::AtCut {
                level,
                inner: Box::new(inner),
            });
            break;
        }
    }
    Ok(EquivalenceReport::from_sides(forward, backward))
}

/// Forward: `A` is a characteristic interior ideal. Backward: `χ_A` is a
/// fuzzy characteristic interior ideal.
pub fn check_char_function_criterion(
    s: &PoGammaSemigroup,
    a: &CrispSubset,
) -> Result<EquivalenceReport> {
    let forward = is_characteristic_interior_ideal(s, a)?;
    let backward = is_fuzzy_characteristic_interior_ideal(s, &characteristic_function(a)?)?;
    Ok(EquivalenceReport::from_sides(forward, backward))
}

/// Forward: `A` is an interior ideal. Backward: `χ_A` is a fuzzy interior
/// ideal.
pub fn check_lemma_char_function_interior(
    s: &PoGammaSemigroup,
    a: &CrispSubset,
) -> Result<EquivalenceReport> {
    let forward = is_interior_ideal(s, a)?;
    let backward = is_fuzzy_interior_ideal(s, &characteristic_function(a)?)?;
    Ok(EquivalenceReport::from_sides(forward, backward))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MidpointViolation {
    /// `μ(x γ y) < min{μ(x), μ(y)}`.
    Subsemigroup {
        x: ElementId,
        gamma: GammaId,
        y: ElementId,
    },
    /// `μ(x α a β y) < μ(a)`.
    Interior {
        x: ElementId,
        alpha: GammaId,
        a: ElementId,
        beta: GammaId,
        y: ElementId,
    },
}

/// A cut level strictly between the two sides of a violated fuzzy
/// inequality, together with the cut it produces. The cut then contains
/// the inputs of the offending product but not the product itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MidpointWitness {
    pub violation: MidpointViolation,
    /// Grade of the product (the smaller side).
    pub lower: Grade,
    /// `min{μ(x), μ(y)}` or `μ(a)` (the larger side).
    pub upper: Grade,
    pub t0: Grade,
    pub cut_at_t0: CrispSubset,
}

impl MidpointWitness {
    /// Re-checks the sandwich `lower < t0 < upper` and that the cut
    /// violates the matching crisp closure condition.
    pub fn holds(&self, s: &PoGammaSemigroup) -> bool {
        if !(self.lower < self.t0 && self.t0 < self.upper) {
            return false;
        }
        let cut = &self.cut_at_t0;
        match self.violation {
            MidpointViolation::Subsemigroup { x, gamma, y } => {
                cut.contains(x.0) && cut.contains(y.0) && !cut.contains(s.op(x.0, gamma.0, y.0))
            }
            MidpointViolation::Interior {
                x,
                alpha,
                a,
                beta,
                y,
            } => {
                let p = s.op(s.op(x.0, alpha.0, a.0), beta.0, y.0);
                cut.contains(a.0) && !cut.contains(p)
            }
        }
    }
}

impl fmt::Display for MidpointWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.violation {
            MidpointViolation::Subsemigroup { x, gamma, y } => write!(
                f,
                "subsemigroup violation at ({x}, {gamma}, {y}): mu({x} {gamma} {y}) = {} < {} = min(mu({x}), mu({y}))",
                self.lower, self.upper
            )?,
            MidpointViolation::Interior {
                x,
                alpha,
                a,
                beta,
                y,
            } => write!(
                f,
                "interior violation at ({x}, {alpha}, {a}, {beta}, {y}): mu({x} {alpha} {a} {beta} {y}) = {} < {} = mu({a})",
                self.lower, self.upper
            )?,
        }
        write!(f, "; t0 = {}, cut at t0 = {}", self.t0, self.cut_at_t0)
    }
}

/// Builds the midpoint witness for the first violated clause of a fuzzy
/// interior ideal: the subsemigroup inequality first, then the interior
/// inequality. Returns `None` when both hold.
///
/// # Panics
///
/// If the constructed cut does not violate the crisp condition, which would
/// mean the cut or comparison code is wrong.
pub fn extract_midpoint_witness(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Option<MidpointWitness> {
    if mu.n() != s.n() {
        return None;
    }
    let (violation, lower, upper) = match fuzzy::subsemigroup_violation(s, mu) {
        Some(Witness::FuzzySubsemigroup {
            x,
            gamma,
            y,
            product_grade,
            min_grade,
        }) => (
            MidpointViolation::Subsemigroup { x, gamma, y },
            product_grade,
            min_grade,
        ),
        _ => match fuzzy::interior_violation(s, mu) {
            Some(Witness::FuzzyInterior {
                x,
                alpha,
                a,
                beta,
                y,
                product_grade,
                grade,
            }) => (
                MidpointViolation::Interior {
                    x,
                    alpha,
                    a,
                    beta,
                    y,
                },
                product_grade,
                grade,
            ),
            _ => return None,
        },
    };
    let t0 = Grade::midpoint(lower, upper);
    let w = MidpointWitness {
        violation,
        lower,
        upper,
        t0,
        cut_at_t0: t_cut(mu, t0),
    };
    assert!(w.holds(s), "midpoint cut does not separate: {w}");
    Some(w)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Fuzzy characteristic interior ideal ⟺ all non-empty cuts are
    /// characteristic interior ideals.
    LevelCriterion,
    /// Characteristic interior ideal ⟺ `χ_A` is a fuzzy one.
    CharFunction,
    /// Interior ideal ⟺ `χ_A` is a fuzzy interior ideal.
    Lemma,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theorem::LevelCriterion => "level-criterion",
            Theorem::CharFunction => "char-function-criterion",
            Theorem::Lemma => "char-function-lemma",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Subject {
    Fuzzy(FuzzySubset),
    Crisp(CrispSubset),
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Fuzzy(mu) => write!(f, "mu = {mu}"),
            Subject::Crisp(a) => write!(f, "A = {a}"),
        }
    }
}

/// An inconsistent equivalence report found by a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refutation {
    /// Position of the structure in the corpus.
    pub structure_index: usize,
    pub structure: PoGammaSemigroup,
    pub theorem: Theorem,
    pub subject: Subject,
    pub report: EquivalenceReport,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub structures: u64,
    pub level_checks: u64,
    /// Level-criterion subjects for which a midpoint witness was built.
    pub midpoint_witnesses: u64,
    pub char_function_checks: u64,
    pub lemma_checks: u64,
    pub refutations: Vec<Refutation>,
}

impl SweepSummary {
    pub fn checks(&self) -> u64 {
        self.level_checks + self.char_function_checks + self.lemma_checks
    }

    fn merge(&mut self, other: SweepSummary) {
        self.structures += other.structures;
        self.level_checks += other.level_checks;
        self.midpoint_witnesses += other.midpoint_witnesses;
        self.char_function_checks += other.char_function_checks;
        self.lemma_checks += other.lemma_checks;
        self.refutations.extend(other.refutations);
    }
}

/// How fuzzy subsets are chosen per structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzySelection {
    /// Every non-zero assignment over the grade set.
    Exhaustive,
    /// `per_structure` draws from ChaCha8 seeded with `seed`, on stream
    /// number equal to the structure's corpus index.
    Sampled { per_structure: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub theorems: Vec<Theorem>,
    pub fuzzy: FuzzySelection,
    /// Worker threads; 0 uses the global rayon pool.
    pub workers: usize,
    pub ceiling: Ceiling,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            theorems: vec![
                Theorem::LevelCriterion,
                Theorem::CharFunction,
                Theorem::Lemma,
            ],
            fuzzy: FuzzySelection::Exhaustive,
            workers: 0,
            ceiling: Ceiling::default(),
        }
    }
}

/// Runs every check on every structure with exhaustive fuzzy subsets.
pub fn sweep(
    corpus: impl IntoIterator<Item = PoGammaSemigroup>,
    grade_set: &[Grade],
) -> Result<SweepSummary> {
    sweep_with(corpus, grade_set, &SweepConfig::default())
}

/// Structures are checked in parallel and merged in corpus order, so the
/// summary does not depend on the worker count.
pub fn sweep_with(
    corpus: impl IntoIterator<Item = PoGammaSemigroup>,
    grade_set: &[Grade],
    config: &SweepConfig,
) -> Result<SweepSummary> {
    let grade_set = generator::normalize_grade_set(grade_set)?;
    let items: Vec<(usize, PoGammaSemigroup)> = corpus.into_iter().enumerate().collect();
    let run = || {
        items
            .par_iter()
            .map(|(i, s)| sweep_structure(*i, s, &grade_set, config))
            .collect::<Vec<_>>()
    };
    let parts = if config.workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| Error::WorkerPool(e.to_string()))?
            .install(run)
    };
    let mut summary = SweepSummary::default();
    for part in parts {
        summary.merge(part?);
    }
    Ok(summary)
}

fn sweep_structure(
    index: usize,
    s: &PoGammaSemigroup,
    grade_set: &[Grade],
    config: &SweepConfig,
) -> Result<SweepSummary> {
    let mut out = SweepSummary {
        structures: 1,
        ..SweepSummary::default()
    };
    let refute = |out: &mut SweepSummary, theorem, subject, report: EquivalenceReport| {
        if !report.consistent() {
            out.refutations.push(Refutation {
                structure_index: index,
                structure: s.clone(),
                theorem,
                subject,
                report,
            });
        }
    };

    if config.theorems.contains(&Theorem::LevelCriterion) {
        let subjects: Vec<FuzzySubset> = match config.fuzzy {
            FuzzySelection::Exhaustive => {
                generator::enumerate_fuzzy_subsets_with(s.n(), grade_set, &config.ceiling)?
                    .collect()
            }
            FuzzySelection::Sampled {
                per_structure,
                seed,
            } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(index as u64);
                (0..per_structure)
                    .map(|_| generator::sample_fuzzy_subset_from(&mut rng, s.n(), grade_set))
                    .collect::<Result<_>>()?
            }
        };
        for mu in subjects {
            let report = check_level_criterion(s, &mu)?;
            out.level_checks += 1;
            if extract_midpoint_witness(s, &mu).is_some() {
                out.midpoint_witnesses += 1;
            }
            refute(
                &mut out,
                Theorem::LevelCriterion,
                Subject::Fuzzy(mu),
                report,
            );
        }
    }

    let crisp_theorems: Vec<Theorem> = config
        .theorems
        .iter()
        .copied()
        .filter(|t| *t != Theorem::LevelCriterion)
        .collect();
    if !crisp_theorems.is_empty() {
        for a in CrispSubset::all_nonempty(s.n()) {
            for &theorem in &crisp_theorems {
                let report = if theorem == Theorem::CharFunction {
                    out.char_function_checks += 1;
                    check_char_function_criterion(s, &a)?
                } else {
                    out.lemma_checks += 1;
                    check_lemma_char_function_interior(s, &a)?
                };
                refute(&mut out, theorem, Subject::Crisp(a), report);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::GammaSemigroup;

    fn g(s: &str) -> Grade {
        s.parse().unwrap()
    }

    fn mu(grades: &[&str]) -> FuzzySubset {
        FuzzySubset::new(grades.iter().map(|s| g(s)).collect()).unwrap()
    }

    fn left_zero() -> PoGammaSemigroup {
        PoGammaSemigroup::discrete(GammaSemigroup::from_fn(2, 1, |a, _, _| a).unwrap())
    }

    fn constant_zero() -> PoGammaSemigroup {
        PoGammaSemigroup::discrete(GammaSemigroup::from_fn(2, 1, |_, _, _| 0).unwrap())
    }

    fn set(n: usize, xs: &[usize]) -> CrispSubset {
        CrispSubset::from_elements(n, xs.iter().copied()).unwrap()
    }

    #[test]
    fn level_criterion_examples() {
        let r =
            check_level_criterion(&constant_zero(), &FuzzySubset::constant(2, g("1/2"))).unwrap();
        assert!(r.forward && r.backward && r.consistent() && r.witness.is_none());

        let r = check_level_criterion(&left_zero(), &mu(&["1", "0"])).unwrap();
        assert!(!r.forward && !r.backward && r.consistent());

        let r = check_level_criterion(&constant_zero(), &mu(&["1", "1/2"])).unwrap();
        assert!(r.forward && r.backward && r.consistent());

        assert_eq!(
            check_level_criterion(&left_zero(), &mu(&["0", "0"])),
            Err(Error::ZeroFuzzySubset)
        );
    }

    #[test]
    fn inconsistent_report_carries_the_failing_side() {
        let w = Witness::Reflexivity { a: ElementId(0) };
        let r = EquivalenceReport::from_sides(Verdict::Pass, Verdict::Fail(w.clone()));
        assert!(!r.consistent());
        assert_eq!(r.witness, Some(w));
    }

    #[test]
    fn midpoint_examples() {
        assert_eq!(
            extract_midpoint_witness(&constant_zero(), &mu(&["1", "1/2"])),
            None
        );

        let w = extract_midpoint_witness(&constant_zero(), &mu(&["1/4", "1"])).unwrap();
        assert_eq!(
            w.violation,
            MidpointViolation::Subsemigroup {
                x: ElementId(1),
                gamma: GammaId(0),
                y: ElementId(1)
            }
        );
        assert_eq!(w.t0, g("5/8"));
        assert_eq!(w.cut_at_t0, set(2, &[1]));

        let w = extract_midpoint_witness(&left_zero(), &mu(&["1", "0"])).unwrap();
        assert_eq!(
            w.violation,
            MidpointViolation::Interior {
                x: ElementId(1),
                alpha: GammaId(0),
                a: ElementId(0),
                beta: GammaId(0),
                y: ElementId(0)
            }
        );
        assert_eq!(w.t0, g("1/2"));
        assert_eq!(w.cut_at_t0, set(2, &[0]));
        assert!(w.holds(&left_zero()));
    }

    #[test]
    fn char_function_examples() {
        for s in [left_zero(), constant_zero()] {
            let r = check_char_function_criterion(&s, &CrispSubset::full(2)).unwrap();
            assert!(r.forward && r.backward);
            let r = check_lemma_char_function_interior(&s, &CrispSubset::full(2)).unwrap();
            assert!(r.forward && r.backward);
        }
        let r = check_char_function_criterion(&constant_zero(), &set(2, &[0])).unwrap();
        assert!(r.forward && r.backward);
        let r = check_char_function_criterion(&left_zero(), &set(2, &[0])).unwrap();
        assert!(!r.forward && !r.backward && r.consistent());
        let r = check_lemma_char_function_interior(&left_zero(), &set(2, &[0])).unwrap();
        assert!(!r.forward && !r.backward);
        let r = check_lemma_char_function_interior(&constant_zero(), &set(2, &[0])).unwrap();
        assert!(r.forward && r.backward);
        assert_eq!(
            check_char_function_criterion(&left_zero(), &CrispSubset::empty(2)),
            Err(Error::EmptySubset)
        );
    }

    #[test]
    fn sweep_edge_cases() {
        let grades = [Grade::ZERO, g("1/2"), Grade::ONE];
        let empty = sweep(Vec::new(), &grades).unwrap();
        assert_eq!(empty.checks(), 0);
        assert!(empty.refutations.is_empty());

        let one = PoGammaSemigroup::discrete(GammaSemigroup::new(1, 1, vec![0]).unwrap());
        let s = sweep(vec![one], &grades).unwrap();
        assert!(s.checks() > 0);
        assert_eq!(
            (s.level_checks, s.char_function_checks, s.lemma_checks),
            (2, 1, 1)
        );
        assert!(s.refutations.is_empty());

        assert!(sweep(Vec::new(), &[g("1/2"), Grade::ONE]).is_err());
    }
}
