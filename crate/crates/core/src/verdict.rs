//! Pass/fail results with concrete counterexamples.
//!
//! Every predicate in the crate scans its quantifiers in a fixed order and
//! reports the first violation it meets, so identical inputs always produce
//! identical witnesses.

use std::fmt;

use crate::fuzzy::Grade;
use crate::structures::{ElementId, GammaId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    pub(crate) fn from_first(w: Option<Witness>) -> Self {
        w.map_or(Verdict::Pass, Verdict::Fail)
    }
}

/// Which side of a compatibility implication failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    /// `a <= b` but not `a γ c <= b γ c`.
    Left,
    /// `a <= b` but not `c γ a <= c γ b`.
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A concrete counterexample to one clause of one definition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `(a α b) β c != a α (b β c)`.
    Associativity {
        a: ElementId,
        alpha: GammaId,
        b: ElementId,
        beta: GammaId,
        c: ElementId,
        left: ElementId,
        right: ElementId,
    },
    Reflexivity {
        a: ElementId,
    },
    Antisymmetry {
        a: ElementId,
        b: ElementId,
    },
    Transitivity {
        a: ElementId,
        b: ElementId,
        c: ElementId,
    },
    Compatibility {
        a: ElementId,
        b: ElementId,
        c: ElementId,
        gamma: GammaId,
        side: Side,
    },
    /// `x γ y` left the subset.
    SubsemigroupClosure {
        x: ElementId,
        gamma: GammaId,
        y: ElementId,
        product: ElementId,
    },
    /// `x α e β y` left the subset although `e` is a member.
    InteriorClosure {
        x: ElementId,
        alpha: GammaId,
        e: ElementId,
        beta: GammaId,
        y: ElementId,
        product: ElementId,
    },
    /// `member` is in the subset, `below <= member`, and `below` is not.
    DownwardClosure {
        member: ElementId,
        below: ElementId,
    },
    /// `f(x γ y) != f(x) γ f(y)`.
    AutomorphismProduct {
        x: ElementId,
        gamma: GammaId,
        y: ElementId,
    },
    /// `x <= y` and `f(x) <= f(y)` disagree.
    AutomorphismOrder {
        x: ElementId,
        y: ElementId,
        related: bool,
    },
    /// The automorphism moves `element` out of (or into) the subset.
    NotFixed {
        automorphism: Vec<usize>,
        element: ElementId,
    },
    /// `μ(x γ y) < min{μ(x), μ(y)}`.
    FuzzySubsemigroup {
        x: ElementId,
        gamma: GammaId,
        y: ElementId,
        product_grade: Grade,
        min_grade: Grade,
    },
    /// `μ(x α a β y) < μ(a)`.
    FuzzyInterior {
        x: ElementId,
        alpha: GammaId,
        a: ElementId,
        beta: GammaId,
        y: ElementId,
        product_grade: Grade,
        grade: Grade,
    },
    /// `x <= y` but `μ(x) < μ(y)`.
    FuzzyAntitone {
        x: ElementId,
        y: ElementId,
        grade_x: Grade,
        grade_y: Grade,
    },
    /// `μ(f(x)) != μ(x)`.
    FuzzyNotInvariant {
        automorphism: Vec<usize>,
        x: ElementId,
        moved: Grade,
        original: Grade,
    },
    /// A crisp failure of the cut `μ_t`.
    AtCut {
        level: Grade,
        inner: Box<Witness>,
    },
}

impl Witness {
    /// Short name of the violated clause, used in reports.
    pub fn clause(&self) -> &'static str {
        match self {
            Witness::Associativity { .. } => "associativity",
            Witness::Reflexivity { .. } => "reflexivity",
            Witness::Antisymmetry { .. } => "antisymmetry",
            Witness::Transitivity { .. } => "transitivity",
            Witness::Compatibility { .. } => "compatibility",
            Witness::SubsemigroupClosure { .. } => "subsemigroup",
            Witness::InteriorClosure { .. } => "interior",
            Witness::DownwardClosure { .. } => "downward-closure",
            Witness::AutomorphismProduct { .. } => "operation-preserving",
            Witness::AutomorphismOrder { .. } => "order-isomorphic",
            Witness::NotFixed { .. } => "automorphism-invariance",
            Witness::FuzzySubsemigroup { .. } => "fuzzy-subsemigroup",
            Witness::FuzzyInterior { .. } => "fuzzy-interior",
            Witness::FuzzyAntitone { .. } => "fuzzy-antitone",
            Witness::FuzzyNotInvariant { .. } => "fuzzy-automorphism-invariance",
            Witness::AtCut { .. } => "cut",
        }
    }
}

pub(crate) struct PermDisplay<'a>(pub &'a [usize]);

impl fmt::Display for PermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Associativity {
                a,
                alpha,
                b,
                beta,
                c,
                left,
                right,
            } => write!(
                f,
                "associativity: ({a} {alpha} {b}) {beta} {c} = {left} but {a} {alpha} ({b} {beta} {c}) = {right}"
            ),
            Witness::Reflexivity { a } => write!(f, "reflexivity: {a} <= {a} is missing"),
            Witness::Antisymmetry { a, b } => {
                write!(f, "antisymmetry: {a} <= {b} and {b} <= {a} with {a} != {b}")
            }
            Witness::Transitivity { a, b, c } => {
                write!(f, "transitivity: {a} <= {b} and {b} <= {c} but not {a} <= {c}")
            }
            Witness::Compatibility {
                a,
                b,
                c,
                gamma,
                side,
            } => match side {
                Side::Left => write!(
                    f,
                    "compatibility (left): {a} <= {b} but not {a} {gamma} {c} <= {b} {gamma} {c}"
                ),
                Side::Right => write!(
                    f,
                    "compatibility (right): {a} <= {b} but not {c} {gamma} {a} <= {c} {gamma} {b}"
                ),
            },
            Witness::SubsemigroupClosure {
                x,
                gamma,
                y,
                product,
            } => write!(
                f,
                "subsemigroup: {x} {gamma} {y} = {product} is not in the subset"
            ),
            Witness::InteriorClosure {
                x,
                alpha,
                e,
                beta,
                y,
                product,
            } => write!(
                f,
                "interior: {x} {alpha} {e} {beta} {y} = {product} is not in the subset"
            ),
            Witness::DownwardClosure { member, below } => write!(
                f,
                "downward-closure: {below} <= {member} and {member} is in the subset but {below} is not"
            ),
            Witness::AutomorphismProduct { x, gamma, y } => write!(
                f,
                "operation-preserving: f({x} {gamma} {y}) != f({x}) {gamma} f({y})"
            ),
            Witness::AutomorphismOrder { x, y, related } => {
                if *related {
                    write!(f, "order-isomorphic: {x} <= {y} but not f({x}) <= f({y})")
                } else {
                    write!(f, "order-isomorphic: f({x}) <= f({y}) but not {x} <= {y}")
                }
            }
            Witness::NotFixed {
                automorphism,
                element,
            } => write!(
                f,
                "automorphism-invariance: f = {} maps {element} to {} across the subset boundary",
                PermDisplay(automorphism),
                automorphism[element.index()]
            ),
            Witness::FuzzySubsemigroup {
                x,
                gamma,
                y,
                product_grade,
                min_grade,
            } => write!(
                f,
                "fuzzy-subsemigroup: mu({x} {gamma} {y}) = {product_grade} < min(mu({x}), mu({y})) = {min_grade}"
            ),
            Witness::FuzzyInterior {
                x,
                alpha,
                a,
                beta,
                y,
                product_grade,
                grade,
            } => write!(
                f,
                "fuzzy-interior: mu({x} {alpha} {a} {beta} {y}) = {product_grade} < mu({a}) = {grade}"
            ),
            Witness::FuzzyAntitone {
                x,
                y,
                grade_x,
                grade_y,
            } => write!(
                f,
                "fuzzy-antitone: {x} <= {y} but mu({x}) = {grade_x} < mu({y}) = {grade_y}"
            ),
            Witness::FuzzyNotInvariant {
                automorphism,
                x,
                moved,
                original,
            } => write!(
                f,
                "fuzzy-automorphism-invariance: f = {}, mu(f({x})) = {moved} but mu({x}) = {original}",
                PermDisplay(automorphism)
            ),
            Witness::AtCut { level, inner } => write!(f, "cut at {level}: {inner}"),
        }
    }
}
