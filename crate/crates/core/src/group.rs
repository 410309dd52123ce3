//! Finite groups as explicit multiplication tables.
//!
//! Every family is generated from normal forms (`x^i y^j`, or `x^a y^b z^c`
//! for the Heisenberg groups) with a family-specific rewriting rule for the
//! product of two normal forms.

use std::collections::HashMap;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::family::{CentralBase, FamilySpec};

pub const DEFAULT_ORDER_CAP: u64 = 4096;

/// Order cap from `CCC_ORDER_CAP`, falling back to [`DEFAULT_ORDER_CAP`].
pub fn order_cap() -> u64 {
    std::env::var("CCC_ORDER_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ORDER_CAP)
}

#[derive(Debug, Clone)]
pub struct GroupTable {
    order: usize,
    mult: Vec<u32>,
    inv: Vec<u32>,
    identity: usize,
    labels: Vec<String>,
    label_index: HashMap<String, usize>,
    generators: Vec<(String, usize)>,
    spec: FamilySpec,
}

impl GroupTable {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// `g a g^-1`.
    #[inline]
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    /// Generator names and their element indices.
    pub fn generators(&self) -> &[(String, usize)] {
        &self.generators
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity;
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut cur = a;
        while cur != self.identity {
            cur = self.mul(cur, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.commute(a, b)))
    }

    /// Index of the element with exactly this normal-form label.
    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.label_index.get(label).copied()
    }

    /// Evaluates a word in the generators, e.g. `x^3 y`, `y x^-1`, `e`.
    ///
    /// Factors are separated by whitespace or `*`; any product is accepted,
    /// not only normal forms.
    pub fn parse_word(&self, word: &str) -> Result<usize> {
        let mut acc = self.identity;
        for token in word
            .split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty())
        {
            if token == "e" || token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, exp)) => {
                    let exp = exp
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
                    (name, exp)
                }
                None => (token, 1),
            };
            let gen = self
                .generators
                .iter()
                .find(|(g, _)| g == name)
                .map(|(_, idx)| *idx)
                .ok_or_else(|| Error::Parse(format!("unknown generator `{name}` in `{word}`")))?;
            acc = self.mul(acc, self.pow(gen, exp));
        }
        Ok(acc)
    }

    /// Checks associativity (on every triple, or on a strided sample of
    /// triples when `exhaustive` is false) plus identity and inverse laws.
    pub fn check_axioms(&self, exhaustive: bool) -> bool {
        let n = self.order;
        let e = self.identity;
        for a in 0..n {
            if self.mul(a, e) != a || self.mul(e, a) != a {
                return false;
            }
            if self.mul(a, self.inv(a)) != e || self.mul(self.inv(a), a) != e {
                return false;
            }
        }
        if exhaustive {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.mul(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                            return false;
                        }
                    }
                }
            }
        } else {
            // Deterministic LCG walk over triples.
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            let mut next = || {
                state = state
                    .wrapping_mul(6_364_136_223_846_793_005)
                    .wrapping_add(1_442_695_040_888_963_407);
                (state >> 33) as usize % n
            };
            for _ in 0..200_000 {
                let (a, b, c) = (next(), next(), next());
                if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                    return false;
                }
            }
        }
        true
    }
}

/// A group given by normal forms and a product rule on them.
trait Presentation {
    type Elem: Copy + Eq + Hash;

    fn elements(&self) -> Vec<Self::Elem>;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn identity(&self) -> Self::Elem;
    /// Exponent vector of a normal form, one entry per generator.
    fn exponents(&self, a: Self::Elem) -> Vec<u32>;
    fn generator_names(&self) -> Vec<String>;
    fn generators(&self) -> Vec<Self::Elem>;
}

fn format_label(names: &[String], exps: &[u32]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(exps)
        .filter(|(_, &e)| e != 0)
        .map(|(g, &e)| {
            if e == 1 {
                g.clone()
            } else {
                format!("{g}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "e".to_string()
    } else {
        parts.join(" ")
    }
}

fn tabulate<P: Presentation>(p: &P, spec: FamilySpec) -> GroupTable {
    let elems = p.elements();
    let order = elems.len();
    let index: HashMap<P::Elem, usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut mult = vec![0u32; order * order];
    for (i, &a) in elems.iter().enumerate() {
        for (j, &b) in elems.iter().enumerate() {
            mult[i * order + j] = index[&p.mul(a, b)] as u32;
        }
    }
    let identity = index[&p.identity()];
    let mut inv = vec![0u32; order];
    for a in 0..order {
        let b = (0..order)
            .find(|&b| mult[a * order + b] as usize == identity)
            .expect("every element of a finite group has an inverse");
        inv[a] = b as u32;
    }
    let names = p.generator_names();
    let labels: Vec<String> = elems
        .iter()
        .map(|&e| format_label(&names, &p.exponents(e)))
        .collect();
    let label_index = labels
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let generators = names
        .into_iter()
        .zip(p.generators())
        .map(|(name, g)| (name, index[&g]))
        .collect();
    GroupTable {
        order,
        mult,
        inv,
        identity,
        labels,
        label_index,
        generators,
        spec,
    }
}

#[inline]
fn md(a: i64, m: u32) -> u32 {
    a.rem_euclid(i64::from(m)) as u32
}

type Pair = (u32, u32);

/// Normal forms `x^i y^j` with `i < x_range`, `j < y_range`.
fn pairs(x_range: u32, y_range: u32) -> Vec<Pair> {
    (0..x_range)
        .flat_map(|i| (0..y_range).map(move |j| (i, j)))
        .collect()
}

/// Two-generator families with normal forms `x^i y^j`.
trait PairRule {
    /// Exclusive bounds on the `x` and `y` exponents of a normal form.
    fn ranges(&self) -> (u32, u32);
    fn mul_pair(&self, a: Pair, b: Pair) -> Pair;
}

impl<T: PairRule> Presentation for T {
    type Elem = Pair;

    fn elements(&self) -> Vec<Pair> {
        let (xr, yr) = self.ranges();
        pairs(xr, yr)
    }

    fn mul(&self, a: Pair, b: Pair) -> Pair {
        self.mul_pair(a, b)
    }

    fn identity(&self) -> Pair {
        (0, 0)
    }

    fn exponents(&self, a: Pair) -> Vec<u32> {
        vec![a.0, a.1]
    }

    fn generator_names(&self) -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    fn generators(&self) -> Vec<Pair> {
        vec![(1, 0), (0, 1)]
    }
}

/// `x^n = y^2 = 1, y x y^-1 = x^-1`.
struct Dihedral {
    n: u32,
}

impl PairRule for Dihedral {
    fn ranges(&self) -> (u32, u32) {
        (self.n, 2)
    }

    fn mul_pair(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        let sign = if b == 0 { 1 } else { -1 };
        (md(i64::from(a) + sign * i64::from(c), self.n), (b + d) % 2)
    }
}

/// `x^2n = 1, y^2 = x^n, y^-1 x y = x^-1`.
struct Dicyclic {
    n: u32,
}

impl PairRule for Dicyclic {
    fn ranges(&self) -> (u32, u32) {
        (2 * self.n, 2)
    }

    fn mul_pair(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        let sign = if b == 0 { 1 } else { -1 };
        let mut i = i64::from(a) + sign * i64::from(c);
        let mut j = b + d;
        if j == 2 {
            i += i64::from(self.n);
            j = 0;
        }
        (md(i, 2 * self.n), j)
    }
}

/// `x^4n = y^2 = 1, y x y = x^(2n-1)`.
struct Semidihedral {
    n: u32,
}

impl PairRule for Semidihedral {
    fn ranges(&self) -> (u32, u32) {
        (4 * self.n, 2)
    }

    fn mul_pair(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        let modulus = 4 * self.n;
        let twist = if b == 0 {
            i64::from(c)
        } else {
            i64::from(c) * i64::from(2 * self.n - 1)
        };
        (md(i64::from(a) + twist, modulus), (b + d) % 2)
    }
}

/// `x^2n = y^m = 1, x^-1 y x = y^-1`; `U_6n` is the case `m = 3`.
struct Unm {
    n: u32,
    m: u32,
}

impl PairRule for Unm {
    fn ranges(&self) -> (u32, u32) {
        (2 * self.n, self.m)
    }

    fn mul_pair(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        // y^b x^c = x^c y^((-1)^c b)
        let yb = if c % 2 == 0 {
            i64::from(b)
        } else {
            -i64::from(b)
        };
        ((a + c) % (2 * self.n), md(yb + i64::from(d), self.m))
    }
}

/// `x^2n = y^4 = 1, y x = x^-1 y^-1, y^-1 x = x^-1 y`.
struct V8n {
    n: u32,
}

impl PairRule for V8n {
    fn ranges(&self) -> (u32, u32) {
        (2 * self.n, 4)
    }

    fn mul_pair(&self, (a, b): Pair, (c, d): Pair) -> Pair {
        // y^2 is central; for odd b, y^b x^c = x^-c y^(b + 2c).
        let modulus = 2 * self.n;
        if b % 2 == 0 {
            ((a + c) % modulus, (b + d) % 4)
        } else {
            (
                md(i64::from(a) - i64::from(c), modulus),
                (b + 2 * c + d) % 4,
            )
        }
    }
}

/// Triples `x^a y^b z^c` with `z` central and `y x = x y z`.
struct Heisenberg {
    p: u32,
}

impl Presentation for Heisenberg {
    type Elem = (u32, u32, u32);

    fn elements(&self) -> Vec<Self::Elem> {
        let p = self.p;
        (0..p)
            .flat_map(|a| (0..p).flat_map(move |b| (0..p).map(move |c| (a, b, c))))
            .collect()
    }

    fn mul(&self, (a, b, c): Self::Elem, (a2, b2, c2): Self::Elem) -> Self::Elem {
        let p = u64::from(self.p);
        let cross = (u64::from(b) * u64::from(a2)) % p;
        (
            (a + a2) % self.p,
            (b + b2) % self.p,
            ((u64::from(c) + u64::from(c2) + cross) % p) as u32,
        )
    }

    fn identity(&self) -> Self::Elem {
        (0, 0, 0)
    }

    fn exponents(&self, (a, b, c): Self::Elem) -> Vec<u32> {
        vec![a, b, c]
    }

    fn generator_names(&self) -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    fn generators(&self) -> Vec<Self::Elem> {
        vec![(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    }
}

/// `base x Z_m`, the cyclic factor generated by `w`.
struct DirectCyclic<P> {
    base: P,
    m: u32,
}

impl<P: Presentation> Presentation for DirectCyclic<P> {
    type Elem = (P::Elem, u32);

    fn elements(&self) -> Vec<Self::Elem> {
        self.base
            .elements()
            .into_iter()
            .flat_map(|g| (0..self.m).map(move |k| (g, k)))
            .collect()
    }

    fn mul(&self, (g, k): Self::Elem, (h, l): Self::Elem) -> Self::Elem {
        (self.base.mul(g, h), (k + l) % self.m)
    }

    fn identity(&self) -> Self::Elem {
        (self.base.identity(), 0)
    }

    fn exponents(&self, (g, k): Self::Elem) -> Vec<u32> {
        let mut e = self.base.exponents(g);
        e.push(k);
        e
    }

    fn generator_names(&self) -> Vec<String> {
        let mut names = self.base.generator_names();
        names.push("w".into());
        names
    }

    fn generators(&self) -> Vec<Self::Elem> {
        let mut gens: Vec<_> = self.base.generators().into_iter().map(|g| (g, 0)).collect();
        gens.push((self.base.identity(), 1 % self.m));
        gens
    }
}

pub fn build_group(spec: FamilySpec) -> Result<GroupTable> {
    build_group_with_cap(spec, order_cap())
}

pub fn build_group_with_cap(spec: FamilySpec, cap: u64) -> Result<GroupTable> {
    spec.validate()?;
    let order = spec.order();
    if order > cap {
        return Err(Error::OrderCapExceeded { order, cap });
    }
    let table = match spec {
        FamilySpec::Dihedral { n } => tabulate(&Dihedral { n }, spec),
        FamilySpec::Dicyclic { n } => tabulate(&Dicyclic { n }, spec),
        FamilySpec::Semidihedral { n } => tabulate(&Semidihedral { n }, spec),
        FamilySpec::U6n { n } => tabulate(&Unm { n, m: 3 }, spec),
        FamilySpec::Unm { n, m } => tabulate(&Unm { n, m }, spec),
        FamilySpec::V8n { n } => tabulate(&V8n { n }, spec),
        FamilySpec::Heisenberg { p } => tabulate(&Heisenberg { p }, spec),
        FamilySpec::CentralExt { base, m } => match base {
            CentralBase::D8 => tabulate(
                &DirectCyclic {
                    base: Dihedral { n: 4 },
                    m,
                },
                spec,
            ),
            CentralBase::Q8 => tabulate(
                &DirectCyclic {
                    base: Dicyclic { n: 2 },
                    m,
                },
                spec,
            ),
            CentralBase::Heisenberg(p) => tabulate(
                &DirectCyclic {
                    base: Heisenberg { p },
                    m,
                },
                spec,
            ),
        },
    };
    debug_assert_eq!(table.order() as u64, order);
    Ok(table)
}
