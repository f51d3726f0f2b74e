//! Naive reference implementations. They share no code with the library's
//! predicates: they work on raw tables and explicit sets, and compare
//! grades by cross-multiplying numerators and denominators.

#![allow(dead_code)]

use std::collections::BTreeSet;

use pogamma::generator::{Ceiling, GeneratorConfig, OrderMode};
use pogamma::{FuzzySubset, Grade, PoGammaSemigroup};

/// Plain view of a structure: `mul[a][g][b]` and `le[a][b]`.
pub struct Raw {
    pub n: usize,
    pub m: usize,
    pub mul: Vec<Vec<Vec<usize>>>,
    pub le: Vec<Vec<bool>>,
}

impl Raw {
    pub fn of(s: &PoGammaSemigroup) -> Raw {
        let (n, m) = (s.n(), s.m());
        let t = s.semigroup().table();
        let r = s.order().relation();
        Raw {
            n,
            m,
            mul: (0..n)
                .map(|a| {
                    (0..m)
                        .map(|g| (0..n).map(|b| t[a * m * n + g * n + b]).collect())
                        .collect()
                })
                .collect(),
            le: (0..n)
                .map(|a| (0..n).map(|b| r[a * n + b]).collect())
                .collect(),
        }
    }
}

pub fn associative_naive(n: usize, m: usize, table: &[usize]) -> bool {
    let at = |a: usize, g: usize, b: usize| table[a * m * n + g * n + b];
    (0..n).all(|a| {
        (0..n).all(|b| {
            (0..n).all(|c| {
                (0..m).all(|x| (0..m).all(|y| at(at(a, x, b), y, c) == at(a, x, at(b, y, c))))
            })
        })
    })
}

/// Every table over `n`, `m` (as a base-`n` odometer), filtered by
/// `associative_naive`.
pub fn brute_force_associative(n: usize, m: usize) -> Vec<Vec<usize>> {
    let cells = n * m * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut table = vec![0; cells];
        let mut c = code;
        for i in (0..cells).rev() {
            table[i] = c % n;
            c /= n;
        }
        if associative_naive(n, m, &table) {
            out.push(table);
        }
    }
    out
}

pub fn subsemigroup_naive(r: &Raw, a: &BTreeSet<usize>) -> bool {
    let mut products = BTreeSet::new();
    for &x in a {
        for &y in a {
            for g in 0..r.m {
                products.insert(r.mul[x][g][y]);
            }
        }
    }
    products.is_subset(a)
}

pub fn interior_ideal_naive(r: &Raw, a: &BTreeSet<usize>) -> bool {
    let mut sas = BTreeSet::new();
    for x in 0..r.n {
        for y in 0..r.n {
            for &e in a {
                for al in 0..r.m {
                    for be in 0..r.m {
                        sas.insert(r.mul[r.mul[x][al][e]][be][y]);
                    }
                }
            }
        }
    }
    let below: BTreeSet<usize> = (0..r.n)
        .filter(|&b| a.iter().any(|&x| r.le[b][x]))
        .collect();
    !a.is_empty() && subsemigroup_naive(r, a) && sas.is_subset(a) && below.is_subset(a)
}

/// `p/q >= r/s`.
pub fn ge(x: Grade, y: Grade) -> bool {
    x.numer() * y.denom() >= y.numer() * x.denom()
}

/// For each product `z`, the grades its defining inequalities demand:
/// `min{μ(x), μ(y)}` for `z = xγy` and `μ(a)` for `z = xαaβy`.
fn demands(r: &Raw, mu: &[Grade]) -> Vec<Vec<Grade>> {
    let min = |a: Grade, b: Grade| if ge(a, b) { b } else { a };
    let mut demands: Vec<Vec<Grade>> = vec![Vec::new(); r.n];
    for x in 0..r.n {
        for y in 0..r.n {
            for g in 0..r.m {
                demands[r.mul[x][g][y]].push(min(mu[x], mu[y]));
            }
            for a in 0..r.n {
                for al in 0..r.m {
                    for be in 0..r.m {
                        demands[r.mul[r.mul[x][al][a]][be][y]].push(mu[a]);
                    }
                }
            }
        }
    }
    demands
}

/// Both product inequalities, ignoring the order.
pub fn fuzzy_products_naive(r: &Raw, mu: &[Grade]) -> bool {
    demands(r, mu)
        .iter()
        .enumerate()
        .all(|(z, ds)| ds.iter().all(|&d| ge(mu[z], d)))
}

pub fn fuzzy_subsemigroup_naive(r: &Raw, mu: &[Grade]) -> bool {
    (0..r.n).all(|x| {
        (0..r.n).all(|y| {
            (0..r.m).all(|g| ge(mu[r.mul[x][g][y]], mu[x]) || ge(mu[r.mul[x][g][y]], mu[y]))
        })
    })
}

pub fn fuzzy_interior_naive(r: &Raw, mu: &[Grade]) -> bool {
    let antitone = (0..r.n).all(|x| (0..r.n).all(|y| !r.le[x][y] || ge(mu[x], mu[y])));
    fuzzy_products_naive(r, mu) && antitone
}

/// Transport the whole table and order along `f` and compare.
pub fn automorphism_naive(r: &Raw, f: &[usize]) -> bool {
    let mut image = vec![vec![vec![usize::MAX; r.n]; r.m]; r.n];
    let mut le = vec![vec![false; r.n]; r.n];
    for a in 0..r.n {
        for b in 0..r.n {
            for g in 0..r.m {
                image[f[a]][g][f[b]] = f[r.mul[a][g][b]];
            }
            le[f[a]][f[b]] = r.le[a][b];
        }
    }
    image == r.mul && le == r.le
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 0..n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

pub fn subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (1u32..1 << n)
        .map(|bits| (0..n).filter(|&i| bits >> i & 1 == 1).collect())
        .collect()
}

/// Membership of `x` in `μ_t`, by cross-multiplication.
pub fn in_cut(mu: &FuzzySubset, x: usize, t: Grade) -> bool {
    ge(mu.grade(x), t)
}

pub fn grades(spec: &str) -> Vec<Grade> {
    spec.split(',').map(|g| g.parse().unwrap()).collect()
}

/// All structures with `n <= max_n`, `m <= max_m` and every compatible order.
pub fn corpus(max_n: usize, max_m: usize) -> Vec<PoGammaSemigroup> {
    GeneratorConfig {
        max_n,
        max_m,
        orders: OrderMode::AllCompatible,
        grade_set: grades("0,1"),
        seed: 0,
    }
    .corpus(&Ceiling::default())
    .unwrap()
    .collect()
}
