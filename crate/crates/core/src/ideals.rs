//! Crisp subsets, subsemigroups and interior ideals.

use std::fmt;

use crate::error::{Error, Result};
use crate::structures::{ElementId, GammaId, PoGammaSemigroup, MAX_ELEMENTS};
use crate::verdict::{Verdict, Witness};

/// A subset of a fixed carrier `[0, n)`, stored as a bitmask. Subsets order
/// by mask value, which is the canonical enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrispSubset {
    n: usize,
    bits: u64,
}

fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl CrispSubset {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        CrispSubset { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        CrispSubset {
            n,
            bits: full_mask(n),
        }
    }

    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        if n > MAX_ELEMENTS {
            return Err(Error::CarrierTooLarge {
                n,
                max: MAX_ELEMENTS,
            });
        }
        if bits & !full_mask(n) != 0 {
            return Err(Error::ElementOutOfRange {
                id: 63 - (bits & !full_mask(n)).leading_zeros() as usize,
                n,
            });
        }
        Ok(CrispSubset { n, bits })
    }

    pub fn from_elements(n: usize, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::from_bits(n, 0)?;
        for id in elements {
            if id >= n {
                return Err(Error::ElementOutOfRange { id, n });
            }
            s.bits |= 1 << id;
        }
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        x < self.n && self.bits >> x & 1 == 1
    }

    pub(crate) fn insert(&mut self, x: usize) {
        self.bits |= 1 << x;
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_mask(self.n)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_subset_of(&self, other: &CrispSubset) -> bool {
        self.bits & !other.bits == 0
    }

    /// Members in ascending order.
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&x| self.contains(x))
    }

    /// Every non-empty subset of `[0, n)` in ascending mask order.
    pub fn all_nonempty(n: usize) -> impl Iterator<Item = CrispSubset> {
        assert!(n < 64, "subset enumeration needs n < 64");
        (1..=full_mask(n)).map(move |bits| CrispSubset { n, bits })
    }
}

impl fmt::Display for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn check_subset(s: &PoGammaSemigroup, a: &CrispSubset) -> Result<()> {
    if a.n() != s.n() {
        return Err(Error::CarrierMismatch {
            expected: s.n(),
            got: a.n(),
        });
    }
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(())
}

fn subsemigroup_violation(s: &PoGammaSemigroup, a: &CrispSubset) -> Option<Witness> {
    for x in a.elements() {
        for g in 0..s.m() {
            for y in a.elements() {
                let p = s.op(x, g, y);
                if !a.contains(p) {
                    return Some(Witness::SubsemigroupClosure {
                        x: ElementId(x),
                        gamma: GammaId(g),
                        y: ElementId(y),
                        product: ElementId(p),
                    });
                }
            }
        }
    }
    None
}

/// Scans `(x, α, e, β, y)` lexicographically with `e` ranging over `a`.
fn interior_violation(s: &PoGammaSemigroup, a: &CrispSubset) -> Option<Witness> {
    let n = s.n();
    let m = s.m();
    for x in 0..n {
        for alpha in 0..m {
            for e in a.elements() {
                let xe = s.op(x, alpha, e);
                for beta in 0..m {
                    for y in 0..n {
                        let p = s.op(xe, beta, y);
                        if !a.contains(p) {
                            return Some(Witness::InteriorClosure {
                                x: ElementId(x),
                                alpha: GammaId(alpha),
                                e: ElementId(e),
                                beta: GammaId(beta),
                                y: ElementId(y),
                                product: ElementId(p),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

fn downward_violation(s: &PoGammaSemigroup, a: &CrispSubset) -> Option<Witness> {
    for member in a.elements() {
        for below in 0..s.n() {
            if s.le(below, member) && !a.contains(below) {
                return Some(Witness::DownwardClosure {
                    member: ElementId(member),
                    below: ElementId(below),
                });
            }
        }
    }
    None
}

/// `AΓA ⊆ A` for a non-empty `A`.
pub fn is_subsemigroup(s: &PoGammaSemigroup, a: &CrispSubset) -> Result<Verdict> {
    check_subset(s, a)?;
    Ok(Verdict::from_first(subsemigroup_violation(s, a)))
}

/// Subsemigroup, then `SΓAΓS ⊆ A`, then downward closure under `<=`.
pub fn is_interior_ideal(s: &PoGammaSemigroup, a: &CrispSubset) -> Result<Verdict> {
    check_subset(s, a)?;
    Ok(Verdict::from_first(
        subsemigroup_violation(s, a)
            .or_else(|| interior_violation(s, a))
            .or_else(|| downward_violation(s, a)),
    ))
}

/// `{b : b <= a for some a in A}`.
pub fn downward_closure(s: &PoGammaSemigroup, a: &CrispSubset) -> CrispSubset {
    let mut out = *a;
    for member in a.elements() {
        for below in 0..s.n() {
            if s.le(below, member) {
                out.insert(below);
            }
        }
    }
    out
}

/// All interior ideals in ascending mask order. `S` itself is always last.
pub fn enumerate_interior_ideals(s: &PoGammaSemigroup) -> Vec<CrispSubset> {
    CrispSubset::all_nonempty(s.n())
        .filter(|a| {
            is_interior_ideal(s, a)
                .expect("enumerated subsets are non-empty and sized to the carrier")
                .passed()
        })
        .collect()
}
