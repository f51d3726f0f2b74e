//! Enumeration and sampling of small Po-Γ-semigroups and fuzzy subsets.
//!
//! Structures are labeled (no isomorphism rejection) and every sequence is
//! deterministic. Full enumeration grows like `n^(n·n·m)`, so each entry
//! point checks a [`Ceiling`] first.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fuzzy::{FuzzySubset, Grade};
use crate::structures::{cell, GammaSemigroup, PartialOrder, PoGammaSemigroup};

/// Environment variable overriding the enumeration ceiling, as `N,M`
/// (elements, sorts).
pub const CEILING_ENV: &str = "POGS_CEILING";

/// Limits on full enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ceiling {
    pub max_elements: usize,
    pub max_sorts: usize,
    /// Largest number of fuzzy subsets a single enumeration may produce.
    pub max_fuzzy_subsets: u64,
}

impl Default for Ceiling {
    fn default() -> Self {
        Ceiling {
            max_elements: 4,
            max_sorts: 2,
            max_fuzzy_subsets: 1 << 20,
        }
    }
}

impl Ceiling {
    pub fn unbounded() -> Self {
        Ceiling {
            max_elements: usize::MAX,
            max_sorts: usize::MAX,
            max_fuzzy_subsets: u64::MAX,
        }
    }

    /// The default ceiling, with elements and sorts taken from
    /// `POGS_CEILING` when it is set.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CEILING_ENV) {
            Ok(v) => Self::parse(&v),
            Err(_) => Ok(Self::default()),
        }
    }

    pub fn parse(spec: &str) -> Result<Self> {
        let bad = || Error::CeilingExceeded {
            what: "ceiling specification",
            detail: format!("cannot parse {spec:?}, expected N,M"),
        };
        let (n, m) = spec.split_once(',').ok_or_else(bad)?;
        Ok(Ceiling {
            max_elements: n.trim().parse().map_err(|_| bad())?,
            max_sorts: m.trim().parse().map_err(|_| bad())?,
            ..Self::default()
        })
    }

    pub fn check_structures(&self, n: usize, m: usize) -> Result<()> {
        if n > self.max_elements || m > self.max_sorts {
            return Err(Error::CeilingExceeded {
                what: "structure enumeration",
                detail: format!(
                    "n = {n}, m = {m} against at most {} elements and {} sorts",
                    self.max_elements, self.max_sorts
                ),
            });
        }
        Ok(())
    }

    fn check_orders(&self, n: usize) -> Result<()> {
        if n > self.max_elements {
            return Err(Error::CeilingExceeded {
                what: "order enumeration",
                detail: format!("n = {n} against at most {} elements", self.max_elements),
            });
        }
        Ok(())
    }

    fn check_fuzzy(&self, n: usize, k: usize) -> Result<()> {
        let count = (k as u64).checked_pow(n as u32);
        match count {
            Some(c) if c <= self.max_fuzzy_subsets => Ok(()),
            _ => Err(Error::CeilingExceeded {
                what: "fuzzy subset enumeration",
                detail: format!(
                    "{k}^{n} assignments against at most {}",
                    self.max_fuzzy_subsets
                ),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderMode {
    DiscreteOnly,
    AllCompatible,
}

/// Sorts and deduplicates a grade set, requiring it to contain 0 and 1.
pub fn normalize_grade_set(grades: &[Grade]) -> Result<Vec<Grade>> {
    let mut out = grades.to_vec();
    out.sort_unstable();
    out.dedup();
    if out.first() != Some(&Grade::ZERO) {
        return Err(Error::GradeSetMissing("0"));
    }
    if out.last() != Some(&Grade::ONE) {
        return Err(Error::GradeSetMissing("1"));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorConfig {
    pub max_n: usize,
    pub max_m: usize,
    pub orders: OrderMode,
    pub grade_set: Vec<Grade>,
    pub seed: u64,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 {
            return Err(Error::EmptyCarrier);
        }
        if self.max_m == 0 {
            return Err(Error::EmptySorts);
        }
        normalize_grade_set(&self.grade_set)?;
        Ok(())
    }

    /// Every structure with `1 <= n <= max_n`, `1 <= m <= max_m`, in
    /// `(n, m, table, order)` order.
    pub fn corpus(&self, ceiling: &Ceiling) -> Result<impl Iterator<Item = PoGammaSemigroup>> {
        self.validate()?;
        ceiling.check_structures(self.max_n, self.max_m)?;
        let orders = self.orders;
        let (max_n, max_m) = (self.max_n, self.max_m);
        Ok((1..=max_n)
            .flat_map(move |n| (1..=max_m).map(move |m| (n, m)))
            .flat_map(move |(n, m)| AssociativeTables::new(n, m))
            .flat_map(move |sgp| structures_over(sgp, orders)))
    }
}

fn structures_over(sgp: GammaSemigroup, orders: OrderMode) -> Vec<PoGammaSemigroup> {
    match orders {
        OrderMode::DiscreteOnly => vec![PoGammaSemigroup::discrete(sgp)],
        OrderMode::AllCompatible => compatible_orders(&sgp)
            .map(|ord| PoGammaSemigroup::new_unchecked(sgp.clone(), ord))
            .collect(),
    }
}

/// Every associative table over `n` elements and `m` sorts, in
/// lexicographic table order.
pub fn enumerate_gamma_semigroups(
    n: usize,
    m: usize,
) -> Result<impl Iterator<Item = GammaSemigroup>> {
    enumerate_gamma_semigroups_with(n, m, &Ceiling::from_env()?)
}

pub fn enumerate_gamma_semigroups_with(
    n: usize,
    m: usize,
    ceiling: &Ceiling,
) -> Result<impl Iterator<Item = GammaSemigroup>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if m == 0 {
        return Err(Error::EmptySorts);
    }
    ceiling.check_structures(n, m)?;
    Ok(AssociativeTables::new(n, m))
}

const UNSET: usize = usize::MAX;

/// Backtracking over table cells in `(a, g, b)` order with values tried in
/// ascending order. A partial table is abandoned as soon as a fully
/// defined associativity instance fails, so complete tables come out in
/// lexicographic order.
struct AssociativeTables {
    n: usize,
    m: usize,
    table: Vec<usize>,
    pos: usize,
    started: bool,
    done: bool,
}

impl AssociativeTables {
    fn new(n: usize, m: usize) -> Self {
        AssociativeTables {
            n,
            m,
            table: vec![UNSET; n * m * n],
            pos: 0,
            started: false,
            done: false,
        }
    }

    fn get(&self, a: usize, g: usize, b: usize) -> usize {
        self.table[cell(self.n, self.m, a, g, b)]
    }

    /// Every associativity instance whose four lookups are all assigned.
    fn consistent(&self) -> bool {
        let (n, m) = (self.n, self.m);
        for a in 0..n {
            for alpha in 0..m {
                for b in 0..n {
                    let ab = self.get(a, alpha, b);
                    if ab == UNSET {
                        continue;
                    }
                    for beta in 0..m {
                        for c in 0..n {
                            let bc = self.get(b, beta, c);
                            if bc == UNSET {
                                continue;
                            }
                            let left = self.get(ab, beta, c);
                            let right = self.get(a, alpha, bc);
                            if left != UNSET && right != UNSET && left != right {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

impl Iterator for AssociativeTables {
    type Item = GammaSemigroup;

    fn next(&mut self) -> Option<GammaSemigroup> {
        if self.done {
            return None;
        }
        let last = self.table.len() - 1;
        if self.started {
            self.table[self.pos] += 1;
        } else {
            self.started = true;
            self.table[0] = 0;
        }
        loop {
            if self.table[self.pos] >= self.n {
                self.table[self.pos] = UNSET;
                if self.pos == 0 {
                    self.done = true;
                    return None;
                }
                self.pos -= 1;
                self.table[self.pos] += 1;
                continue;
            }
            if !self.consistent() {
                self.table[self.pos] += 1;
                continue;
            }
            if self.pos == last {
                return Some(GammaSemigroup::new_unchecked(
                    self.n,
                    self.m,
                    self.table.clone(),
                ));
            }
            self.pos += 1;
            self.table[self.pos] = 0;
        }
    }
}

/// Every partial order on `[0, n)` compatible with `sgp`, the discrete
/// order first. Orders are indexed by the bitmask of their strict pairs in
/// row-major order and yielded in ascending mask order.
pub fn enumerate_compatible_orders(
    sgp: &GammaSemigroup,
) -> Result<impl Iterator<Item = PartialOrder> + '_> {
    Ceiling::from_env()?.check_orders(sgp.n())?;
    Ok(compatible_orders(sgp))
}

pub fn enumerate_compatible_orders_with<'a>(
    sgp: &'a GammaSemigroup,
    ceiling: &Ceiling,
) -> Result<impl Iterator<Item = PartialOrder> + 'a> {
    ceiling.check_orders(sgp.n())?;
    Ok(compatible_orders(sgp))
}

fn compatible_orders(sgp: &GammaSemigroup) -> impl Iterator<Item = PartialOrder> + '_ {
    let n = sgp.n();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b)
        .collect();
    let total: u64 = 1 << pairs.len();
    (0..total).filter_map(move |mask| {
        let mut rel = vec![false; n * n];
        for a in 0..n {
            rel[a * n + a] = true;
        }
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                rel[a * n + b] = true;
            }
        }
        let ord = PartialOrder::new(n, rel).ok()?;
        crate::structures::validate_compatibility(sgp, &ord)
            .ok()?
            .passed()
            .then_some(ord)
    })
}

/// All `|grade_set|^n` assignments except the all-zero one, in
/// lexicographic order with element 0 most significant. The grade set is
/// sorted and deduplicated first.
pub fn enumerate_fuzzy_subsets(
    n: usize,
    grade_set: &[Grade],
) -> Result<impl Iterator<Item = FuzzySubset>> {
    enumerate_fuzzy_subsets_with(n, grade_set, &Ceiling::from_env()?)
}

pub fn enumerate_fuzzy_subsets_with(
    n: usize,
    grade_set: &[Grade],
    ceiling: &Ceiling,
) -> Result<impl Iterator<Item = FuzzySubset>> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    let mut grades = grade_set.to_vec();
    grades.sort_unstable();
    grades.dedup();
    if grades.is_empty() {
        return Err(Error::GradeSetMissing("at least one grade"));
    }
    ceiling.check_fuzzy(n, grades.len())?;
    let k = grades.len();
    let mut digits = vec![0usize; n];
    let mut exhausted = false;
    Ok(std::iter::from_fn(move || loop {
        if exhausted {
            return None;
        }
        let mu = FuzzySubset::new(digits.iter().map(|&d| grades[d]).collect())
            .expect("n is within the carrier limit");
        // odometer, last position fastest
        let mut i = n;
        loop {
            if i == 0 {
                exhausted = true;
                break;
            }
            i -= 1;
            digits[i] += 1;
            if digits[i] < k {
                break;
            }
            digits[i] = 0;
        }
        if mu.is_nonempty() {
            return Some(mu);
        }
    }))
}

/// A fuzzy subset drawn uniformly from `grade_set^n` minus the all-zero
/// assignment. Draws come from ChaCha8 seeded with `seed`; an all-zero
/// draw is discarded and the same stream continues.
pub fn sample_fuzzy_subset(n: usize, grade_set: &[Grade], seed: u64) -> Result<FuzzySubset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_fuzzy_subset_from(&mut rng, n, grade_set)
}

pub fn sample_fuzzy_subset_from<R: Rng>(
    rng: &mut R,
    n: usize,
    grade_set: &[Grade],
) -> Result<FuzzySubset> {
    if n == 0 {
        return Err(Error::EmptyCarrier);
    }
    if grade_set.iter().all(Grade::is_zero) {
        return Err(Error::GradeSetMissing("a positive grade"));
    }
    loop {
        let grades: Vec<Grade> = (0..n)
            .map(|_| grade_set[rng.gen_range(0..grade_set.len())])
            .collect();
        let mu = FuzzySubset::new(grades)?;
        if mu.is_nonempty() {
            return Ok(mu);
        }
    }
}
