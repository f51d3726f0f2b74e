//! Fuzzy subsets with exact rational grades.
//!
//! Grades are rationals in `[0, 1]` compared exactly; the cut and midpoint
//! arguments in [`crate::theorems`] depend on strict comparisons never
//! collapsing.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::automorphisms::Automorphism;
use crate::error::{Error, Result};
use crate::ideals::CrispSubset;
use crate::structures::{ElementId, GammaId, PoGammaSemigroup, MAX_ELEMENTS};
use crate::verdict::{Verdict, Witness};

/// Largest numerator or denominator accepted from input. Midpoints of two
/// such grades still fit the internal 128-bit representation.
pub const MAX_GRADE_TERM: u64 = u32::MAX as u64;

/// A membership grade `p/q` in `[0, 1]`, always in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<u128>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    pub fn new(p: u64, q: u64) -> Result<Self> {
        if q == 0 || p > q || q > MAX_GRADE_TERM {
            return Err(Error::InvalidGrade(format!("{p}/{q}")));
        }
        Ok(Grade(Ratio::new(p as u128, q as u128)))
    }

    pub fn numer(&self) -> u128 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u128 {
        *self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.numer() == 0
    }

    /// `(a + b) / 2`, which lies strictly between `a` and `b` when they differ.
    pub fn midpoint(a: Grade, b: Grade) -> Grade {
        Grade((a.0 + b.0) / Ratio::from_integer(2))
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl FromStr for Grade {
    type Err = Error;

    /// Accepts `p/q` or a bare integer (`0` or `1`).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidGrade(s.to_string());
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
        if !digits(p) || !digits(q) {
            return Err(bad());
        }
        let p: u64 = p.parse().map_err(|_| bad())?;
        let q: u64 = q.parse().map_err(|_| bad())?;
        Grade::new(p, q).map_err(|_| bad())
    }
}

/// A fuzzy subset `μ: S → [0, 1]`, one grade per element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzySubset {
    grades: Vec<Grade>,
}

impl FuzzySubset {
    pub fn new(grades: Vec<Grade>) -> Result<Self> {
        if grades.is_empty() {
            return Err(Error::EmptyCarrier);
        }
        if grades.len() > MAX_ELEMENTS {
            return Err(Error::CarrierTooLarge {
                n: grades.len(),
                max: MAX_ELEMENTS,
            });
        }
        Ok(FuzzySubset { grades })
    }

    pub fn constant(n: usize, c: Grade) -> Self {
        FuzzySubset { grades: vec![c; n] }
    }

    pub fn n(&self) -> usize {
        self.grades.len()
    }

    #[inline]
    pub fn grade(&self, x: usize) -> Grade {
        self.grades[x]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    /// True when some grade is positive.
    pub fn is_nonempty(&self) -> bool {
        self.grades.iter().any(|g| !g.is_zero())
    }
}

impl fmt::Display for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.grades.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// `μ_t = {x : μ(x) >= t}`.
pub fn t_cut(mu: &FuzzySubset, t: Grade) -> CrispSubset {
    let mut out = CrispSubset::empty(mu.n());
    for (x, g) in mu.grades.iter().enumerate() {
        if *g >= t {
            out.insert(x);
        }
    }
    out
}

/// Distinct grades of `μ`, ascending.
pub fn image_levels(mu: &FuzzySubset) -> Vec<Grade> {
    let mut levels = mu.grades.clone();
    levels.sort_unstable();
    levels.dedup();
    levels
}

pub(crate) fn check_fuzzy(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Result<()> {
    if mu.n() != s.n() {
        return Err(Error::CarrierMismatch {
            expected: s.n(),
            got: mu.n(),
        });
    }
    if !mu.is_nonempty() {
        return Err(Error::ZeroFuzzySubset);
    }
    Ok(())
}

/// First `(x, γ, y)` with `μ(x γ y) < min{μ(x), μ(y)}`.
pub(crate) fn subsemigroup_violation(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Option<Witness> {
    let n = s.n();
    for x in 0..n {
        for g in 0..s.m() {
            for y in 0..n {
                let product_grade = mu.grade(s.op(x, g, y));
                let min_grade = mu.grade(x).min(mu.grade(y));
                if product_grade < min_grade {
                    return Some(Witness::FuzzySubsemigroup {
                        x: ElementId(x),
                        gamma: GammaId(g),
                        y: ElementId(y),
                        product_grade,
                        min_grade,
                    });
                }
            }
        }
    }
    None
}

/// First `(x, α, a, β, y)` with `μ(x α a β y) < μ(a)`.
pub(crate) fn interior_violation(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Option<Witness> {
    let n = s.n();
    let m = s.m();
    for x in 0..n {
        for alpha in 0..m {
            for a in 0..n {
                let xa = s.op(x, alpha, a);
                let grade = mu.grade(a);
                for beta in 0..m {
                    for y in 0..n {
                        let product_grade = mu.grade(s.op(xa, beta, y));
                        if product_grade < grade {
                            return Some(Witness::FuzzyInterior {
                                x: ElementId(x),
                                alpha: GammaId(alpha),
                                a: ElementId(a),
                                beta: GammaId(beta),
                                y: ElementId(y),
                                product_grade,
                                grade,
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

fn antitone_violation(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Option<Witness> {
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            if s.le(x, y) && mu.grade(x) < mu.grade(y) {
                return Some(Witness::FuzzyAntitone {
                    x: ElementId(x),
                    y: ElementId(y),
                    grade_x: mu.grade(x),
                    grade_y: mu.grade(y),
                });
            }
        }
    }
    None
}

fn invariance_violation(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Option<Witness> {
    for f in s.automorphisms() {
        for x in 0..s.n() {
            let moved = mu.grade(f.apply(x));
            let original = mu.grade(x);
            if moved != original {
                return Some(Witness::FuzzyNotInvariant {
                    automorphism: f.perm().to_vec(),
                    x: ElementId(x),
                    moved,
                    original,
                });
            }
        }
    }
    None
}

/// `μ(x γ y) >= min{μ(x), μ(y)}` for all `x, y, γ`.
pub fn is_fuzzy_subsemigroup(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Result<Verdict> {
    check_fuzzy(s, mu)?;
    Ok(Verdict::from_first(subsemigroup_violation(s, mu)))
}

/// Fuzzy subsemigroup, then `μ(x α a β y) >= μ(a)`, then `x <= y ⟹ μ(x) >= μ(y)`.
pub fn is_fuzzy_interior_ideal(s: &PoGammaSemigroup, mu: &FuzzySubset) -> Result<Verdict> {
    check_fuzzy(s, mu)?;
    Ok(Verdict::from_first(
        subsemigroup_violation(s, mu)
            .or_else(|| interior_violation(s, mu))
            .or_else(|| antitone_violation(s, mu)),
    ))
}

/// Fuzzy interior ideal with `μ ∘ f = μ` for every automorphism `f`.
pub fn is_fuzzy_characteristic_interior_ideal(
    s: &PoGammaSemigroup,
    mu: &FuzzySubset,
) -> Result<Verdict> {
    match is_fuzzy_interior_ideal(s, mu)? {
        Verdict::Pass => Ok(Verdict::from_first(invariance_violation(s, mu))),
        fail => Ok(fail),
    }
}

/// `χ_A`: grade 1 on `A`, 0 elsewhere.
pub fn characteristic_function(a: &CrispSubset) -> Result<FuzzySubset> {
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(FuzzySubset {
        grades: (0..a.n())
            .map(|x| {
                if a.contains(x) {
                    Grade::ONE
                } else {
                    Grade::ZERO
                }
            })
            .collect(),
    })
}

/// `ν(x) = μ(f(x))`.
pub fn compose_with_automorphism(mu: &FuzzySubset, f: &Automorphism) -> FuzzySubset {
    FuzzySubset {
        grades: (0..mu.n()).map(|x| mu.grade(f.apply(x))).collect(),
    }
}
