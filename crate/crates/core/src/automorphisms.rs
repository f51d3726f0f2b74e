//! Automorphisms of a Po-Γ-semigroup.
//!
//! An automorphism is a bijection `f` of the carrier with
//! `f(x γ y) = f(x) γ f(y)` for every sort and `x <= y ⟺ f(x) <= f(y)`.
//! Sorts are never permuted.

use std::fmt;

use crate::error::{Error, Result};
use crate::ideals::{self, CrispSubset};
use crate::structures::{ElementId, GammaId, PoGammaSemigroup};
use crate::verdict::{PermDisplay, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Automorphism {
    perm: Vec<usize>,
}

impl Automorphism {
    pub fn identity(n: usize) -> Self {
        Automorphism {
            perm: (0..n).collect(),
        }
    }

    /// Checks `perm` against `s` before wrapping it.
    pub fn new(s: &PoGammaSemigroup, perm: Vec<usize>) -> Result<Self> {
        match is_automorphism(s, &perm)? {
            Verdict::Pass => Ok(Automorphism { perm }),
            Verdict::Fail(w) => Err(Error::Invalid(w)),
        }
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.perm[x]
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: other.perm.iter().map(|&x| self.perm[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut perm = vec![0; self.perm.len()];
        for (x, &fx) in self.perm.iter().enumerate() {
            perm[fx] = x;
        }
        Automorphism { perm }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }
}

impl fmt::Display for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PermDisplay(&self.perm).fmt(f)
    }
}

fn check_bijection(n: usize, perm: &[usize]) -> Result<()> {
    let err = Error::NotBijection { len: perm.len(), n };
    if perm.len() != n {
        return Err(err);
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || seen[p] {
            return Err(err);
        }
        seen[p] = true;
    }
    Ok(())
}

/// Checks operation preservation over `(x, γ, y)`, then order isomorphism
/// over `(x, y)`. A non-bijective array is an input error.
pub fn is_automorphism(s: &PoGammaSemigroup, perm: &[usize]) -> Result<Verdict> {
    check_bijection(s.n(), perm)?;
    let n = s.n();
    for x in 0..n {
        for g in 0..s.m() {
            for y in 0..n {
                if perm[s.op(x, g, y)] != s.op(perm[x], g, perm[y]) {
                    return Ok(Verdict::Fail(Witness::AutomorphismProduct {
                        x: ElementId(x),
                        gamma: GammaId(g),
                        y: ElementId(y),
                    }));
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let related = s.le(x, y);
            if related != s.le(perm[x], perm[y]) {
                return Ok(Verdict::Fail(Witness::AutomorphismOrder {
                    x: ElementId(x),
                    y: ElementId(y),
                    related,
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Depth-first search over partial permutations, assigning images to
/// `0, 1, ..` in increasing order. A branch is cut as soon as an assigned
/// pair disagrees on order or an assigned product disagrees. Leaves come
/// out in lexicographic order, the same order as filtering all `n!`
/// permutations.
pub(crate) fn search_automorphisms(s: &PoGammaSemigroup) -> Vec<Automorphism> {
    let n = s.n();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let mut out = Vec::new();
    extend(s, 0, &mut perm, &mut used, &mut out);
    out
}

fn consistent(s: &PoGammaSemigroup, k: usize, perm: &[usize]) -> bool {
    let fk = perm[k];
    for (i, &fi) in perm.iter().enumerate().take(k + 1) {
        if s.le(i, k) != s.le(fi, fk) || s.le(k, i) != s.le(fk, fi) {
            return false;
        }
    }
    for x in 0..=k {
        for y in 0..=k {
            if x != k && y != k {
                // Pairs below k were checked at earlier depths unless their
                // product is k itself.
                for g in 0..s.m() {
                    let z = s.op(x, g, y);
                    if z == k && perm[z] != s.op(perm[x], g, perm[y]) {
                        return false;
                    }
                }
                continue;
            }
            for g in 0..s.m() {
                let z = s.op(x, g, y);
                if z <= k && perm[z] != s.op(perm[x], g, perm[y]) {
                    return false;
                }
            }
        }
    }
    true
}

fn extend(
    s: &PoGammaSemigroup,
    k: usize,
    perm: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Automorphism>,
) {
    let n = s.n();
    if k == n {
        out.push(Automorphism { perm: perm.clone() });
        return;
    }
    for v in 0..n {
        if used[v] {
            continue;
        }
        perm[k] = v;
        if consistent(s, k, perm) {
            used[v] = true;
            extend(s, k + 1, perm, used, out);
            used[v] = false;
        }
    }
    perm[k] = usize::MAX;
}

/// Aut(S) in lexicographic order of permutation arrays.
pub fn enumerate_automorphisms(s: &PoGammaSemigroup) -> Vec<Automorphism> {
    s.automorphisms().to_vec()
}

/// `f(A) = {f(a) : a ∈ A}`.
pub fn apply_to_subset(f: &Automorphism, a: &CrispSubset) -> CrispSubset {
    let mut out = CrispSubset::empty(a.n());
    for x in a.elements() {
        out.insert(f.apply(x));
    }
    out
}

/// First `(f, x)` in (Aut order, ascending `x`) with `x ∈ A ⟺ f(x) ∉ A`.
pub(crate) fn invariance_violation(s: &PoGammaSemigroup, a: &CrispSubset) -> Option<Witness> {
    for f in s.automorphisms() {
        for x in 0..s.n() {
            if a.contains(x) != a.contains(f.apply(x)) {
                return Some(Witness::NotFixed {
                    automorphism: f.perm.clone(),
                    element: ElementId(x),
                });
            }
        }
    }
    None
}

/// An interior ideal with `f(A) = A` for every automorphism `f`.
pub fn is_characteristic_interior_ideal(s: &PoGammaSemigroup, a: &CrispSubset) -> Result<Verdict> {
    match ideals::is_interior_ideal(s, a)? {
        Verdict::Pass => Ok(Verdict::from_first(invariance_violation(s, a))),
        fail => Ok(fail),
    }
}
