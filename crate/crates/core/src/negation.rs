//! Generalized negations on finite bounded posets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::report::AxiomReport;

/// A finite poset with a least element. Meets and joins are partial: they
/// exist exactly where the infimum or supremum does.
#[derive(Clone, PartialEq, Eq)]
pub struct BoundedPoset {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    bottom: usize,
    top: Option<usize>,
    meet: Vec<Vec<Option<usize>>>,
    join: Vec<Vec<Option<usize>>>,
}

impl fmt::Debug for BoundedPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BoundedPoset{{{}}}", self.describe())
    }
}

impl BoundedPoset {
    /// Builds the poset from a full `leq` matrix.
    pub fn new(names: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = names.len();
        if n == 0 || leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(Error::Model("order matrix must be square and nonempty".into()));
        }
        let uniq: BTreeSet<&String> = names.iter().collect();
        if uniq.len() != n {
            return Err(Error::Model("element names must be distinct".into()));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(Error::Model(format!("order is not reflexive at {}", names[i])));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(Error::Model(format!("order is not antisymmetric at {},{}", names[i], names[j])));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(Error::Model(format!(
                            "order is not transitive at {},{},{}",
                            names[i], names[j], names[k]
                        )));
                    }
                }
            }
        }
        let bottom = (0..n)
            .find(|&b| (0..n).all(|x| leq[b][x]))
            .ok_or_else(|| Error::Model("poset has no least element".into()))?;
        let top = (0..n).find(|&t| (0..n).all(|x| leq[x][t]));
        let bound = |i: usize, j: usize, lower: bool| -> Option<usize> {
            let below = |a: usize, b: usize| if lower { leq[a][b] } else { leq[b][a] };
            let cands: Vec<usize> = (0..n).filter(|&z| below(z, i) && below(z, j)).collect();
            cands.iter().copied().find(|&z| cands.iter().all(|&w| below(w, z)))
        };
        let meet = (0..n).map(|i| (0..n).map(|j| bound(i, j, true)).collect()).collect();
        let join = (0..n).map(|i| (0..n).map(|j| bound(i, j, false)).collect()).collect();
        Ok(Self {
            names,
            leq,
            bottom,
            top,
            meet,
            join,
        })
    }

    /// Builds the poset from covering or generating pairs `a ≤ b`.
    pub fn from_pairs<S: AsRef<str>>(names: Vec<String>, pairs: &[(S, S)]) -> Result<Self> {
        let n = names.len();
        let idx = |s: &str| {
            names
                .iter()
                .position(|x| x == s)
                .ok_or_else(|| Error::UnknownElement(s.to_string()))
        };
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            leq[idx(a.as_ref())?][idx(b.as_ref())?] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if leq[i][k] && leq[k][j] {
                        leq[i][j] = true;
                    }
                }
            }
        }
        Self::new(names, leq)
    }

    /// The chain `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> Self {
        let names = (0..n).map(|i| i.to_string()).collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i <= j).collect()).collect();
        Self::new(names, leq).expect("chain")
    }

    /// The Boolean lattice on `k` atoms; element `i` is the bitmask `i`.
    pub fn boolean(k: u32) -> Self {
        let n = 1usize << k;
        let names = (0..n)
            .map(|i| match (i, n - 1) {
                (0, _) => "0".to_string(),
                (i, t) if i == t => "1".to_string(),
                (i, _) => (0..k)
                    .filter(|b| i >> b & 1 == 1)
                    .map(|b| char::from(b'a' + b as u8))
                    .collect(),
            })
            .collect();
        let leq = (0..n).map(|i| (0..n).map(|j| i & !j == 0).collect()).collect();
        Self::new(names, leq).expect("boolean lattice")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|x| x == name)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> Option<usize> {
        self.top
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join[a][b]
    }

    pub fn is_lattice(&self) -> bool {
        self.meet.iter().chain(&self.join).all(|r| r.iter().all(Option::is_some))
    }

    /// `None` unless the poset is a lattice.
    pub fn is_distributive(&self) -> Option<bool> {
        if !self.is_lattice() {
            return None;
        }
        let n = self.len();
        let (m, j) = (|a, b| self.meet(a, b).unwrap(), |a, b| self.join(a, b).unwrap());
        Some((0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(a, j(b, c)) == j(m(a, b), m(a, c))))))
    }

    /// Strict covering pairs, as a compact description.
    pub fn describe(&self) -> String {
        let n = self.len();
        let covers: Vec<String> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .filter(|&(a, b)| {
                a != b && self.leq[a][b] && !(0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b])
            })
            .map(|(a, b)| format!("{}<{}", self.names[a], self.names[b]))
            .collect();
        format!("elements {} covers {}", self.names.join(","), covers.join(" "))
    }
}

/// A partial unary map; `None` marks points outside the domain.
pub type UnaryOp = Vec<Option<usize>>;

pub fn total(f: &[usize]) -> UnaryOp {
    f.iter().map(|&x| Some(x)).collect()
}

/// `(m, n)`: the first repetition `f^m = f^n` with `m < n`, taking the
/// least `n` and the unique `m` that goes with it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Index {
    pub m: usize,
    pub n: usize,
}

impl Index {
    pub fn period(&self) -> usize {
        self.n
    }

    pub fn pace(&self) -> usize {
        self.n - self.m
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NegationProfile {
    pub report: AxiomReport<Vec<usize>>,
    pub index: Option<Index>,
}

impl NegationProfile {
    pub fn holds(&self, name: &str) -> bool {
        self.report.get(name).map(|c| c.holds()).unwrap_or(false)
    }
}

/// The iterated maps `f^0, f^1, …` until the first repetition.
pub fn index_of(f: &UnaryOp) -> Index {
    let n = f.len();
    let mut powers: Vec<UnaryOp> = vec![(0..n).map(Some).collect()];
    loop {
        let next: UnaryOp = powers.last().unwrap().iter().map(|x| x.and_then(|x| f[x])).collect();
        if let Some(m) = powers.iter().position(|p| *p == next) {
            return Index { m, n: powers.len() };
        }
        powers.push(next);
    }
}

fn apply(f: &UnaryOp, x: usize) -> Option<usize> {
    f.get(x).copied().flatten()
}

/// Decides N1–N6 and N9 by exhaustive substitution. `≗` holds whenever a
/// side is undefined; N9's two sides are read strictly, an undefined
/// meet or image making its side false.
pub fn check_negation(p: &BoundedPoset, f: &UnaryOp) -> Result<NegationProfile> {
    let n = p.len();
    if f.len() != n || f.iter().flatten().any(|&y| y >= n) {
        return Err(Error::CarrierMismatch("operation does not match the poset".into()));
    }
    let bot = p.bottom();
    let f1 = |x: usize| apply(f, x);
    let f2 = |x: usize| f1(x).and_then(f1);
    let le = |a: Option<usize>, b: Option<usize>| matches!((a, b), (Some(a), Some(b)) if p.leq(a, b));
    let weak_eq = |a: Option<usize>, b: Option<usize>| a.is_none() || b.is_none() || a == b;
    let pairs = || (0..n).flat_map(|x| (0..n).map(move |y| (x, y)));

    let mut r = AxiomReport::new();
    r.push(
        "N1",
        (0..n)
            .find(|&x| !weak_eq(f1(x).and_then(|fx| p.meet(x, fx)), Some(bot)))
            .map(|x| vec![x]),
    );
    r.push(
        "N2",
        pairs()
            .find(|&(x, y)| p.leq(x, y) && f1(x).is_some() && f1(y).is_some() && !le(f1(y), f1(x)))
            .map(|(x, y)| vec![x, y]),
    );
    r.push(
        "N3",
        (0..n).find(|&x| f2(x).is_some() && !le(Some(x), f2(x))).map(|x| vec![x]),
    );
    r.push(
        "N4",
        pairs()
            .find(|&(x, y)| le(Some(x), f1(y)) && f1(x).is_some() && !le(Some(y), f1(x)))
            .map(|(x, y)| vec![x, y]),
    );
    let index = index_of(f);
    r.push("N5", None);
    r.push(
        "N6",
        pairs()
            .find(|&(x, y)| {
                let lhs = p.join(x, y).and_then(f1);
                let rhs = match (f1(x), f1(y)) {
                    (Some(a), Some(b)) => p.meet(a, b),
                    _ => None,
                };
                !weak_eq(lhs, rhs)
            })
            .map(|(x, y)| vec![x, y]),
    );
    r.push(
        "N9",
        pairs()
            .find(|&(x, y)| (p.meet(x, y) == Some(bot)) != le(Some(y), f1(x)))
            .map(|(x, y)| vec![x, y]),
    );
    Ok(NegationProfile {
        report: r,
        index: Some(index),
    })
}

/// Checks the three interior laws, naming the first that fails.
pub fn check_interior(p: &BoundedPoset, i: &[usize]) -> Result<()> {
    let n = p.len();
    if i.len() != n || i.iter().any(|&y| y >= n) {
        return Err(Error::CarrierMismatch("interior map does not match the poset".into()));
    }
    if let Some(x) = (0..n).find(|&x| !p.leq(i[x], x)) {
        return Err(Error::PreconditionViolated(format!("interior is not deflationary at {}", p.names[x])));
    }
    for a in 0..n {
        for b in 0..n {
            if p.leq(a, b) && !p.leq(i[a], i[b]) {
                return Err(Error::PreconditionViolated(format!(
                    "interior is not monotone at {},{}",
                    p.names[a], p.names[b]
                )));
            }
        }
    }
    if let Some(x) = (0..n).find(|&x| i[i[x]] != i[x]) {
        return Err(Error::PreconditionViolated(format!("interior is not idempotent at {}", p.names[x])));
    }
    Ok(())
}

fn is_regular(p: &BoundedPoset, f: &[usize]) -> Result<bool> {
    let prof = check_negation(p, &total(f))?;
    Ok(prof.holds("N1") && prof.holds("N2") && prof.holds("N3"))
}

/// `g = i∘f` together with whether `g⁴ = g²` holds pointwise.
pub fn interior_compose(p: &BoundedPoset, f: &[usize], i: &[usize]) -> Result<(Vec<usize>, bool)> {
    if f.len() != p.len() || f.iter().any(|&y| y >= p.len()) {
        return Err(Error::CarrierMismatch("operation does not match the poset".into()));
    }
    if !is_regular(p, f)? {
        let prof = check_negation(p, &total(f))?;
        let failed: Vec<&str> = ["N1", "N2", "N3"].into_iter().filter(|k| !prof.holds(k)).collect();
        return Err(Error::PreconditionViolated(format!("f is not regular: {} fails", failed.join(", "))));
    }
    check_interior(p, i)?;
    let g: Vec<usize> = f.iter().map(|&y| i[y]).collect();
    let g2: Vec<usize> = g.iter().map(|&y| g[y]).collect();
    let g4: Vec<usize> = g2.iter().map(|&y| g2[y]).collect();
    Ok((g, g4 == g2))
}

/// All distributive lattices with at most `max_size` elements, up to
/// isomorphism. Elements are labelled so that `0` is the bottom, the last
/// index the top, and `a ≤ b` implies `a ≤ b` as integers.
pub fn distributive_lattices(max_size: usize) -> Vec<BoundedPoset> {
    let mut out = Vec::new();
    for n in 1..=max_size {
        if n == 1 {
            out.push(BoundedPoset::chain(1));
            continue;
        }
        let mid: Vec<usize> = (1..n - 1).collect();
        let slots: Vec<(usize, usize)> = mid
            .iter()
            .flat_map(|&a| mid.iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect();
        let mut seen = BTreeSet::new();
        for mask in 0u64..(1u64 << slots.len()) {
            let mut leq = vec![vec![false; n]; n];
            for (a, row) in leq.iter_mut().enumerate() {
                row[a] = true;
                row[n - 1] = true;
            }
            leq[0].fill(true);
            for (bit, &(a, b)) in slots.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    leq[a][b] = true;
                }
            }
            let closed = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(leq[a][b] && leq[b][c]) || leq[a][c])));
            if !closed {
                continue;
            }
            let key = canonical_key(&leq);
            if !seen.insert(key) {
                continue;
            }
            let names = (0..n).map(|i| i.to_string()).collect();
            let p = BoundedPoset::new(names, leq).expect("valid order");
            if p.is_distributive() == Some(true) {
                out.push(p);
            }
        }
    }
    out
}

/// Smallest order matrix encoding over permutations of the middle elements.
fn canonical_key(leq: &[Vec<bool>]) -> Vec<bool> {
    let n = leq.len();
    let mut perm: Vec<usize> = (1..n.saturating_sub(1)).collect();
    let encode = |perm: &[usize]| -> Vec<bool> {
        let map = |x: usize| if x == 0 || x == n - 1 { x } else { perm[x - 1] };
        let mut inv = vec![0; n];
        for x in 0..n {
            inv[map(x)] = x;
        }
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| leq[inv[a]][inv[b]]).collect()
    };
    let mut best = encode(&perm);
    while next_permutation(&mut perm) {
        let e = encode(&perm);
        if e < best {
            best = e;
        }
    }
    best
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Every map `{0..n} → {0..n}` in lexicographic order.
fn all_maps(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = n.pow(n as u32);
    (0..total).map(move |mut code| {
        let mut f = vec![0; n];
        for slot in f.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        f
    })
}

/// Every interior operator on the poset.
pub fn interior_operators(p: &BoundedPoset) -> Vec<Vec<usize>> {
    all_maps(p.len()).filter(|i| check_interior(p, i).is_ok()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// N1 and N2 rule out an index `(0, n)` with `n > 2`.
    NoIndexZeroN,
    /// N1, N2, N3 force `f(⊥) = ⊤` and `f(⊤) = ⊥`.
    N123BottomTop,
    /// Some operation satisfies N1, N2, N3 but not N9.
    N123NotN9Witness,
    /// N9 implies N1, N2 and N3.
    N9ImpliesN123,
    /// `g = i∘f` satisfies `g⁴ = g²` for regular `f` and interior `i`.
    InteriorComposition,
}

impl Claim {
    pub const ALL: [Claim; 5] = [
        Claim::NoIndexZeroN,
        Claim::N123BottomTop,
        Claim::N123NotN9Witness,
        Claim::N9ImpliesN123,
        Claim::InteriorComposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::NoIndexZeroN => "no-index-0-n",
            Claim::N123BottomTop => "n123-bottom-top",
            Claim::N123NotN9Witness => "n123-not-n9-witness",
            Claim::N9ImpliesN123 => "n9-implies-n123",
            Claim::InteriorComposition => "interior-composition",
        }
    }

    /// True for the one claim that asks for an example rather than a counterexample.
    pub fn is_existential(self) -> bool {
        self == Claim::N123NotN9Witness
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Model(format!("unknown claim `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub lattice: BoundedPoset,
    pub f: Vec<usize>,
    pub interior: Option<Vec<usize>>,
}

impl fmt::Display for Witness {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.lattice.names();
        let map = |m: &[usize]| -> String {
            m.iter()
                .enumerate()
                .map(|(x, y)| format!("{}->{}", names[x], names[*y]))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(out, "{}; f: {}", self.lattice.describe(), map(&self.f))?;
        if let Some(i) = &self.interior {
            write!(out, "; i: {}", map(i))?;
        }
        Ok(())
    }
}

/// Largest lattice size the harness accepts.
pub const MAX_FALSIFY_SIZE: usize = 7;

/// Exhaustive search over distributive lattices up to `size_cap` and all
/// unary maps. For universal claims the result is a counterexample; for the
/// existential claim it is an example. `None` means none exists.
pub fn falsify_theorem(claim: Claim, size_cap: usize) -> Result<Option<Witness>> {
    if size_cap > MAX_FALSIFY_SIZE {
        let cands = (size_cap as u128).pow(size_cap as u32);
        return Err(Error::SearchTooLarge {
            candidates: cands,
            cap: (MAX_FALSIFY_SIZE as u128).pow(MAX_FALSIFY_SIZE as u32),
        });
    }
    for lat in distributive_lattices(size_cap) {
        let n = lat.len();
        let top = lat.top().expect("lattice has a top");
        let bot = lat.bottom();
        let interiors = if claim == Claim::InteriorComposition {
            interior_operators(&lat)
        } else {
            Vec::new()
        };
        for f in all_maps(n) {
            let prof = check_negation(&lat, &total(&f))?;
            let n123 = prof.holds("N1") && prof.holds("N2") && prof.holds("N3");
            let hit = |interior: Option<Vec<usize>>| Witness {
                lattice: lat.clone(),
                f: f.clone(),
                interior,
            };
            match claim {
                Claim::NoIndexZeroN => {
                    let idx = prof.index.expect("finite carrier");
                    if prof.holds("N1") && prof.holds("N2") && idx.m == 0 && idx.n > 2 {
                        return Ok(Some(hit(None)));
                    }
                }
                Claim::N123BottomTop => {
                    if n123 && (f[bot] != top || f[top] != bot) {
                        return Ok(Some(hit(None)));
                    }
                }
                Claim::N123NotN9Witness => {
                    if n123 && !prof.holds("N9") {
                        return Ok(Some(hit(None)));
                    }
                }
                Claim::N9ImpliesN123 => {
                    if prof.holds("N9") && !n123 {
                        return Ok(Some(hit(None)));
                    }
                }
                Claim::InteriorComposition => {
                    if n123 {
                        for i in &interiors {
                            let (_, ok) = interior_compose(&lat, &f, i)?;
                            if !ok {
                                return Ok(Some(hit(Some(i.clone()))));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Commutativity, anti-reflexivity and aggregation of a binary predicate
/// over a finite carrier, each with its first violation.
pub fn check_dialectical_predicate<T: Clone>(
    carrier: &[T],
    rel: impl Fn(&T, &T) -> bool,
    aggregate: impl Fn(&T, &T) -> T,
) -> AxiomReport<Vec<T>> {
    let mut r = AxiomReport::new();
    let pair = || carrier.iter().flat_map(|a| carrier.iter().map(move |b| (a, b)));
    r.push(
        "commutativity",
        pair().find(|(a, b)| rel(a, b) != rel(b, a)).map(|(a, b)| vec![a.clone(), b.clone()]),
    );
    r.push(
        "anti-reflexivity",
        carrier.iter().find(|a| rel(a, a)).map(|a| vec![a.clone()]),
    );
    let mut agg = None;
    'outer: for (a, b) in pair() {
        if !rel(a, b) {
            continue;
        }
        for c in carrier {
            if !rel(&aggregate(a, c), &aggregate(b, c)) {
                agg = Some(vec![a.clone(), b.clone(), c.clone()]);
                break 'outer;
            }
        }
    }
    r.push("aggregation", agg);
    r
}
