//! Finite Γ-semigroups and partially ordered Γ-semigroups.
//!
//! A Γ-semigroup is a carrier `S = {0, .., n-1}` with one binary operation
//! per sort in `Γ = {0, .., m-1}`, stored as a dense `n × m × n` table and
//! jointly associative: `(a α b) β c = a α (b β c)` for all elements and
//! sorts. A Po-Γ-semigroup adds a partial order compatible with every
//! operation on both sides.
//!
//! Constructors validate; downstream modules only ever see validated
//! structures.

use std::fmt;
use std::sync::OnceLock;

use crate::automorphisms::{self, Automorphism};
use crate::error::{Error, Result};
use crate::verdict::{Side, Verdict, Witness};

/// Largest carrier supported. Subsets are stored as 64-bit masks.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GammaId(pub usize);

impl GammaId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for GammaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

#[inline]
pub(crate) fn cell(n: usize, m: usize, a: usize, g: usize, b: usize) -> usize {
    (a * m + g) * n + b
}

fn check_table_shape(n: usize, m: usize, table: &[usize]) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if m == 0 {
        return Err(Error::EmptySorts);
    }
    if n > MAX_ELEMENTS {
        return Err(Error::CarrierTooLarge {
            n,
            max: MAX_ELEMENTS,
        });
    }
    let expected = n * m * n;
    if table.len() != expected {
        return Err(Error::TableDimension {
            expected,
            got: table.len(),
        });
    }
    for a in 0..n {
        for g in 0..m {
            for b in 0..n {
                let value = table[cell(n, m, a, g, b)];
                if value >= n {
                    return Err(Error::TableEntryOutOfRange { a, g, b, value, n });
                }
            }
        }
    }
    Ok(())
}

/// First associativity violation in `(a, α, b, β, c)` lexicographic order.
fn first_associativity_violation(n: usize, m: usize, table: &[usize]) -> Option<Witness> {
    let t = |a: usize, g: usize, b: usize| table[cell(n, m, a, g, b)];
    for a in 0..n {
        for alpha in 0..m {
            for b in 0..n {
                let ab = t(a, alpha, b);
                for beta in 0..m {
                    for c in 0..n {
                        let left = t(ab, beta, c);
                        let right = t(a, alpha, t(b, beta, c));
                        if left != right {
                            return Some(Witness::Associativity {
                                a: ElementId(a),
                                alpha: GammaId(alpha),
                                b: ElementId(b),
                                beta: GammaId(beta),
                                c: ElementId(c),
                                left: ElementId(left),
                                right: ElementId(right),
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Checks the table for shape and range (input errors), then for
/// associativity over all `n³·m²` instantiations.
pub fn validate_gamma_semigroup(n: usize, m: usize, table: &[usize]) -> Result<Verdict> {
    check_table_shape(n, m, table)?;
    Ok(Verdict::from_first(first_associativity_violation(
        n, m, table,
    )))
}

/// A validated finite Γ-semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaSemigroup {
    n: usize,
    m: usize,
    table: Vec<usize>,
}

impl GammaSemigroup {
    /// `table[(a * m + g) * n + b]` is the product `a g b`.
    pub fn new(n: usize, m: usize, table: Vec<usize>) -> Result<Self> {
        match validate_gamma_semigroup(n, m, &table)? {
            Verdict::Pass => Ok(GammaSemigroup { n, m, table }),
            Verdict::Fail(w) => Err(Error::Invalid(w)),
        }
    }

    pub fn from_fn(n: usize, m: usize, f: impl Fn(usize, usize, usize) -> usize) -> Result<Self> {
        let mut table = Vec::with_capacity(n * m * n);
        for a in 0..n {
            for g in 0..m {
                for b in 0..n {
                    table.push(f(a, g, b));
                }
            }
        }
        Self::new(n, m, table)
    }

    /// Skips validation. Callers must have established associativity.
    pub(crate) fn new_unchecked(n: usize, m: usize, table: Vec<usize>) -> Self {
        debug_assert!(first_associativity_violation(n, m, &table).is_none());
        GammaSemigroup { n, m, table }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    #[inline]
    pub(crate) fn op(&self, a: usize, g: usize, b: usize) -> usize {
        self.table[cell(self.n, self.m, a, g, b)]
    }

    pub fn product(&self, a: ElementId, g: GammaId, b: ElementId) -> Result<ElementId> {
        self.check_element(a)?;
        self.check_gamma(g)?;
        self.check_element(b)?;
        Ok(ElementId(self.op(a.0, g.0, b.0)))
    }

    pub(crate) fn check_element(&self, a: ElementId) -> Result<()> {
        if a.0 < self.n {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { id: a.0, n: self.n })
        }
    }

    pub(crate) fn check_gamma(&self, g: GammaId) -> Result<()> {
        if g.0 < self.m {
            Ok(())
        } else {
            Err(Error::GammaOutOfRange { id: g.0, m: self.m })
        }
    }
}

/// A partial order stored as a full `n × n` boolean matrix;
/// `le(a, b)` means `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialOrder {
    n: usize,
    rel: Vec<bool>,
}

/// Checks reflexivity, then antisymmetry, then transitivity.
pub fn validate_partial_order(n: usize, rel: &[bool]) -> Result<Verdict> {
    if rel.len() != n * n {
        return Err(Error::RelationDimension {
            expected: n * n,
            got: rel.len(),
        });
    }
    let le = |a: usize, b: usize| rel[a * n + b];
    for a in 0..n {
        if !le(a, a) {
            return Ok(Verdict::Fail(Witness::Reflexivity { a: ElementId(a) }));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && le(a, b) && le(b, a) {
                return Ok(Verdict::Fail(Witness::Antisymmetry {
                    a: ElementId(a),
                    b: ElementId(b),
                }));
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !le(a, b) {
                continue;
            }
            for c in 0..n {
                if le(b, c) && !le(a, c) {
                    return Ok(Verdict::Fail(Witness::Transitivity {
                        a: ElementId(a),
                        b: ElementId(b),
                        c: ElementId(c),
                    }));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

impl PartialOrder {
    pub fn new(n: usize, rel: Vec<bool>) -> Result<Self> {
        match validate_partial_order(n, &rel)? {
            Verdict::Pass => Ok(PartialOrder { n, rel }),
            Verdict::Fail(w) => Err(Error::Invalid(w)),
        }
    }

    /// The order `a <= b` iff `a = b`.
    pub fn discrete(n: usize) -> Self {
        let mut rel = vec![false; n * n];
        for a in 0..n {
            rel[a * n + a] = true;
        }
        PartialOrder { n, rel }
    }

    /// Builds the order from its strict pairs `(a, b)` meaning `a < b`.
    /// Reflexive pairs are added; no closure is taken.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut rel = Self::discrete(n).rel;
        for &(a, b) in pairs {
            for id in [a, b] {
                if id >= n {
                    return Err(Error::ElementOutOfRange { id, n });
                }
            }
            rel[a * n + b] = true;
        }
        Self::new(n, rel)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.rel[a * self.n + b]
    }

    pub fn relation(&self) -> &[bool] {
        &self.rel
    }

    pub fn is_discrete(&self) -> bool {
        self.strict_pairs().next().is_none()
    }

    /// Pairs `a < b` in row-major order.
    pub fn strict_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n)
            .flat_map(move |a| (0..n).map(move |b| (a, b)))
            .filter(move |&(a, b)| a != b && self.le(a, b))
    }
}

/// Checks `a <= b ⟹ aγc <= bγc` (left) and `cγa <= cγb` (right), scanning
/// `(a, b, c, γ)` and testing the left side before the right.
pub fn validate_compatibility(sgp: &GammaSemigroup, ord: &PartialOrder) -> Result<Verdict> {
    if ord.n() != sgp.n() {
        return Err(Error::CarrierMismatch {
            expected: sgp.n(),
            got: ord.n(),
        });
    }
    let n = sgp.n();
    for a in 0..n {
        for b in 0..n {
            if !ord.le(a, b) {
                continue;
            }
            for c in 0..n {
                for g in 0..sgp.m() {
                    let side = if !ord.le(sgp.op(a, g, c), sgp.op(b, g, c)) {
                        Side::Left
                    } else if !ord.le(sgp.op(c, g, a), sgp.op(c, g, b)) {
                        Side::Right
                    } else {
                        continue;
                    };
                    return Ok(Verdict::Fail(Witness::Compatibility {
                        a: ElementId(a),
                        b: ElementId(b),
                        c: ElementId(c),
                        gamma: GammaId(g),
                        side,
                    }));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// A validated Po-Γ-semigroup. Its automorphism group is computed on first
/// use and cached.
#[derive(Debug, Clone)]
pub struct PoGammaSemigroup {
    sgp: GammaSemigroup,
    ord: PartialOrder,
    auts: OnceLock<Vec<Automorphism>>,
}

impl PartialEq for PoGammaSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.sgp == other.sgp && self.ord == other.ord
    }
}

impl Eq for PoGammaSemigroup {}

impl PoGammaSemigroup {
    pub fn new(sgp: GammaSemigroup, ord: PartialOrder) -> Result<Self> {
        match validate_compatibility(&sgp, &ord)? {
            Verdict::Pass => Ok(Self::new_unchecked(sgp, ord)),
            Verdict::Fail(w) => Err(Error::Invalid(w)),
        }
    }

    /// The structure with the discrete order, which is always compatible.
    pub fn discrete(sgp: GammaSemigroup) -> Self {
        let ord = PartialOrder::discrete(sgp.n());
        Self::new_unchecked(sgp, ord)
    }

    pub(crate) fn new_unchecked(sgp: GammaSemigroup, ord: PartialOrder) -> Self {
        PoGammaSemigroup {
            sgp,
            ord,
            auts: OnceLock::new(),
        }
    }

    pub fn semigroup(&self) -> &GammaSemigroup {
        &self.sgp
    }

    pub fn order(&self) -> &PartialOrder {
        &self.ord
    }

    pub fn n(&self) -> usize {
        self.sgp.n
    }

    pub fn m(&self) -> usize {
        self.sgp.m
    }

    #[inline]
    pub(crate) fn op(&self, a: usize, g: usize, b: usize) -> usize {
        self.sgp.op(a, g, b)
    }

    #[inline]
    pub(crate) fn le(&self, a: usize, b: usize) -> bool {
        self.ord.le(a, b)
    }

    pub fn product(&self, a: ElementId, g: GammaId, b: ElementId) -> Result<ElementId> {
        self.sgp.product(a, g, b)
    }

    /// All automorphisms in lexicographic order of their permutation arrays.
    pub fn automorphisms(&self) -> &[Automorphism] {
        self.auts
            .get_or_init(|| automorphisms::search_automorphisms(self))
    }
}

/// Looks up `a g b`, rejecting out-of-range ids.
pub fn product(s: &PoGammaSemigroup, a: ElementId, g: GammaId, b: ElementId) -> Result<ElementId> {
    s.product(a, g, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left_zero() -> GammaSemigroup {
        GammaSemigroup::from_fn(2, 1, |a, _, _| a).unwrap()
    }

    fn constant_zero() -> GammaSemigroup {
        GammaSemigroup::from_fn(2, 1, |_, _, _| 0).unwrap()
    }

    #[test]
    fn product_lookup() {
        let lz = PoGammaSemigroup::discrete(left_zero());
        assert_eq!(
            product(&lz, ElementId(0), GammaId(0), ElementId(1)).unwrap(),
            ElementId(0)
        );
        let one = PoGammaSemigroup::discrete(GammaSemigroup::new(1, 1, vec![0]).unwrap());
        assert_eq!(
            one.product(ElementId(0), GammaId(0), ElementId(0)).unwrap(),
            ElementId(0)
        );
        let cz = PoGammaSemigroup::discrete(constant_zero());
        assert_eq!(
            cz.product(ElementId(1), GammaId(0), ElementId(1)).unwrap(),
            ElementId(0)
        );
    }

    #[test]
    fn product_rejects_out_of_range() {
        let lz = PoGammaSemigroup::discrete(left_zero());
        assert_eq!(
            lz.product(ElementId(2), GammaId(0), ElementId(0)),
            Err(Error::ElementOutOfRange { id: 2, n: 2 })
        );
        assert_eq!(
            lz.product(ElementId(0), GammaId(1), ElementId(0)),
            Err(Error::GammaOutOfRange { id: 1, m: 1 })
        );
    }

    #[test]
    fn associativity_failure_has_witness() {
        // 0·0 = 1, everything else 0: (0·0)·0 = 1·0 = 0, 0·(0·0) = 0·1 = 0,
        // so the first violation sits further along.
        let table = vec![1, 0, 0, 0];
        let v = validate_gamma_semigroup(2, 1, &table).unwrap();
        let w = v.witness().expect("table is not associative");
        match w {
            Witness::Associativity {
                a,
                b,
                c,
                left,
                right,
                ..
            } => {
                assert_eq!((a.0, b.0, c.0), (0, 0, 1));
                assert_eq!((left.0, right.0), (0, 1));
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn malformed_tables_are_input_errors() {
        assert_eq!(
            validate_gamma_semigroup(2, 1, &[0, 0, 0]),
            Err(Error::TableDimension {
                expected: 4,
                got: 3
            })
        );
        assert!(matches!(
            validate_gamma_semigroup(2, 1, &[0, 0, 2, 0]),
            Err(Error::TableEntryOutOfRange { value: 2, .. })
        ));
        assert_eq!(
            validate_gamma_semigroup(0, 1, &[]),
            Err(Error::EmptyCarrier)
        );
    }

    #[test]
    fn singleton_passes_for_any_sort_count() {
        for m in 1..4 {
            assert!(validate_gamma_semigroup(1, m, &vec![0; m])
                .unwrap()
                .passed());
        }
    }

    #[test]
    fn partial_order_axioms() {
        assert!(
            validate_partial_order(3, PartialOrder::discrete(3).relation())
                .unwrap()
                .passed()
        );
        let full = vec![true; 4];
        assert_eq!(
            validate_partial_order(2, &full).unwrap(),
            Verdict::Fail(Witness::Antisymmetry {
                a: ElementId(0),
                b: ElementId(1)
            })
        );
        assert!(validate_partial_order(2, &[true, true, false, true])
            .unwrap()
            .passed());
        assert_eq!(
            validate_partial_order(2, &[false, false, false, true]).unwrap(),
            Verdict::Fail(Witness::Reflexivity { a: ElementId(0) })
        );
        // 0 < 1 < 2 without 0 < 2
        let mut rel = PartialOrder::discrete(3).relation().to_vec();
        rel[1] = true;
        rel[5] = true;
        assert_eq!(
            validate_partial_order(3, &rel).unwrap(),
            Verdict::Fail(Witness::Transitivity {
                a: ElementId(0),
                b: ElementId(1),
                c: ElementId(2)
            })
        );
        assert!(validate_partial_order(2, &[true]).is_err());
    }

    #[test]
    fn compatibility_examples() {
        let chain = PartialOrder::from_pairs(2, &[(0, 1)]).unwrap();
        assert!(
            validate_compatibility(&left_zero(), &PartialOrder::discrete(2))
                .unwrap()
                .passed()
        );
        assert!(validate_compatibility(&left_zero(), &chain)
            .unwrap()
            .passed());
        assert!(validate_compatibility(&constant_zero(), &chain)
            .unwrap()
            .passed());
    }

    #[test]
    fn incompatible_order_is_rejected() {
        // Z2 under xor is associative, but 0 <= 1 gives 0 ^ 1 = 1 against
        // 1 ^ 1 = 0 on the left.
        let xor = GammaSemigroup::from_fn(2, 1, |a, _, b| a ^ b).unwrap();
        let chain = PartialOrder::from_pairs(2, &[(0, 1)]).unwrap();
        assert_eq!(
            validate_compatibility(&xor, &chain).unwrap(),
            Verdict::Fail(Witness::Compatibility {
                a: ElementId(0),
                b: ElementId(1),
                c: ElementId(1),
                gamma: GammaId(0),
                side: Side::Left,
            })
        );
        assert!(matches!(
            PoGammaSemigroup::new(xor, chain),
            Err(Error::Invalid(Witness::Compatibility { .. }))
        ));
    }

    #[test]
    fn constructors_refuse_invalid_input() {
        assert!(matches!(
            GammaSemigroup::new(2, 1, vec![1, 0, 0, 0]),
            Err(Error::Invalid(Witness::Associativity { .. }))
        ));
        assert!(matches!(
            PartialOrder::new(2, vec![true; 4]),
            Err(Error::Invalid(Witness::Antisymmetry { .. }))
        ));
    }
}
