//! Finite approximation spaces.
//!
//! A [`Subset`] is a characteristic vector over a [`Universe`] of at most
//! [`MAX_ATOMS`] atoms; bit `i` is atom `i`. The canonical subset order used
//! by every enumeration in the crate is binary counting on that vector.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard width of the characteristic vector.
pub const MAX_ATOMS: usize = 32;

/// Default limit on universe size for anything that enumerates `℘(S)`.
pub const DEFAULT_ATOM_CAP: usize = 16;

const RESERVED: [&str; 5] = ["0", "S", "L", "D", "neg"];

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Subset {
    bits: u32,
    len: u8,
}

impl Subset {
    pub fn from_bits(bits: u32, len: usize) -> Self {
        assert!(len <= MAX_ATOMS, "universe wider than {MAX_ATOMS} atoms");
        Self {
            bits: bits & mask(len),
            len: len as u8,
        }
    }

    pub fn empty(len: usize) -> Self {
        Self::from_bits(0, len)
    }

    pub fn full(len: usize) -> Self {
        Self::from_bits(u32::MAX, len)
    }

    pub fn bits(self) -> u32 {
        self.bits
    }

    /// Size of the universe this subset lives in.
    pub fn universe_len(self) -> usize {
        self.len as usize
    }

    pub fn count(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    pub fn is_full(self) -> bool {
        self.bits == mask(self.len as usize)
    }

    pub fn contains(self, atom: usize) -> bool {
        atom < self.len as usize && self.bits & (1 << atom) != 0
    }

    pub fn with(self, atom: usize) -> Self {
        Self::from_bits(self.bits | (1 << atom), self.len as usize)
    }

    pub fn union(self, other: Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            bits: self.bits | other.bits,
            len: self.len,
        }
    }

    pub fn intersection(self, other: Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            bits: self.bits & other.bits,
            len: self.len,
        }
    }

    pub fn difference(self, other: Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        Self {
            bits: self.bits & !other.bits,
            len: self.len,
        }
    }

    pub fn complement(self) -> Self {
        Self {
            bits: !self.bits & mask(self.len as usize),
            len: self.len,
        }
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.bits & other.bits == 0
    }

    pub fn atoms(self) -> impl Iterator<Item = usize> {
        let bits = self.bits;
        (0..self.len as usize).filter(move |i| bits & (1 << i) != 0)
    }

    /// All subsets of `self`, in canonical order.
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let top = self.bits;
        let len = self.len as usize;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == top {
                None
            } else {
                Some((cur.wrapping_sub(top)) & top)
            };
            Some(Subset::from_bits(cur, len))
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.atoms().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

fn mask(len: usize) -> u32 {
    if len >= 32 {
        u32::MAX
    } else {
        (1u32 << len) - 1
    }
}

/// An ordered list of distinct atom names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Universe {
    atoms: Vec<String>,
    index: HashMap<String, usize>,
    cap: usize,
}

impl Universe {
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(atoms, DEFAULT_ATOM_CAP)
    }

    /// Like [`Universe::new`] but with a custom enumeration cap (at most
    /// [`MAX_ATOMS`]).
    pub fn with_cap<I, S>(atoms: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        if atoms.is_empty() {
            return Err(Error::InvalidUniverse("universe must be nonempty".into()));
        }
        let cap = cap.min(MAX_ATOMS);
        if atoms.len() > cap {
            return Err(Error::InvalidUniverse(format!(
                "{} atoms exceeds the cap of {cap}",
                atoms.len()
            )));
        }
        let mut index = HashMap::new();
        for (i, a) in atoms.iter().enumerate() {
            if a.is_empty() || !a.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(Error::InvalidUniverse(format!("bad atom name `{a}`")));
            }
            if RESERVED.contains(&a.as_str()) {
                return Err(Error::InvalidUniverse(format!("`{a}` is a reserved name")));
            }
            if index.insert(a.clone(), i).is_some() {
                return Err(Error::InvalidUniverse(format!("duplicate atom `{a}`")));
            }
        }
        Ok(Self { atoms, index, cap })
    }

    /// Single-character atoms, e.g. `Universe::from_chars("abcefq")`.
    pub fn from_chars(s: &str) -> Result<Self> {
        Self::new(s.chars().map(String::from))
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.index.get(atom).copied()
    }

    pub fn empty(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn singleton(&self, atom: usize) -> Subset {
        Subset::from_bits(1 << atom, self.len())
    }

    pub fn check(&self, x: Subset) -> Result<()> {
        if x.universe_len() == self.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch {
                expected: self.len(),
                found: x.universe_len(),
            })
        }
    }

    pub fn subset_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset> {
        let mut x = self.empty();
        for n in names {
            let i = self
                .index_of(n.as_ref())
                .ok_or_else(|| Error::UnknownAtom(n.as_ref().to_string()))?;
            x = x.with(i);
        }
        Ok(x)
    }

    /// Parses the concatenated-atom notation: `"abc"`, `"0"` for the empty
    /// set and `"S"` for the whole universe. Multi-character atom names are
    /// matched greedily, longest name first.
    pub fn parse(&self, s: &str) -> Result<Subset> {
        let s = s.trim();
        match s {
            "0" | "∅" | "" => return Ok(self.empty()),
            "S" => return Ok(self.full()),
            _ => {}
        }
        let mut x = self.empty();
        let mut rest = s;
        while !rest.is_empty() {
            let matched = self
                .atoms
                .iter()
                .enumerate()
                .filter(|(_, a)| rest.starts_with(a.as_str()))
                .max_by_key(|(_, a)| a.len());
            match matched {
                Some((i, a)) => {
                    x = x.with(i);
                    rest = &rest[a.len()..];
                }
                None => {
                    let bad: String = rest.chars().take(1).collect();
                    return Err(Error::UnknownAtom(bad));
                }
            }
        }
        Ok(x)
    }

    /// Concatenated atom names; `0` for the empty set, `S` for the universe.
    pub fn render(&self, x: Subset) -> String {
        if x.is_empty() {
            "0".into()
        } else if x.is_full() {
            "S".into()
        } else {
            x.atoms().map(|i| self.atoms[i].as_str()).collect()
        }
    }

    /// Every subset of the universe in canonical order (`∅` first).
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        self.full().subsets()
    }

    pub(crate) fn ensure_enumerable(&self) -> Result<()> {
        if self.len() > self.cap {
            Err(Error::CarrierTooLarge {
                size: self.len(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }
}

/// `(x, x^l, x^u)`
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ApproxTriple {
    pub x: Subset,
    pub lower: Subset,
    pub upper: Subset,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Definiteness {
    pub lower_definite: bool,
    pub upper_definite: bool,
    pub definite: bool,
}

/// A rough-equality class, stored as its pair of definite bounds. Members
/// are enumerated on demand through the owning space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RoughClass {
    lower: Subset,
    upper: Subset,
}

/// The bounds-pair view of a rough class used by the quotient algebra.
pub type DefinitePair = RoughClass;

impl RoughClass {
    /// Validates that `(lower, upper)` is realized by at least one subset.
    pub fn new(space: &ApproximationSpace, lower: Subset, upper: Subset) -> Result<Self> {
        space.universe.check(lower)?;
        space.universe.check(upper)?;
        if !space.is_definite(lower) || !space.is_definite(upper) {
            return Err(Error::InvalidClass("bounds must be definite".into()));
        }
        if !lower.is_subset(upper) {
            return Err(Error::InvalidClass("lower bound not inside upper".into()));
        }
        let boundary = upper.difference(lower);
        if let Some(b) = space.blocks.iter().find(|b| b.count() == 1 && b.is_subset(boundary)) {
            return Err(Error::InvalidClass(format!(
                "boundary contains the singleton block {}",
                space.universe.render(*b)
            )));
        }
        Ok(Self { lower, upper })
    }

    /// Builds a class without validation; callers guarantee realizability.
    pub(crate) fn from_bounds_unchecked(lower: Subset, upper: Subset) -> Self {
        Self { lower, upper }
    }

    pub fn lower(&self) -> Subset {
        self.lower
    }

    pub fn upper(&self) -> Subset {
        self.upper
    }

    pub fn boundary(&self) -> Subset {
        self.upper.difference(self.lower)
    }

    /// The basic rough order: componentwise inclusion of the bounds.
    pub fn leq(&self, other: &Self) -> bool {
        self.lower.is_subset(other.lower) && self.upper.is_subset(other.upper)
    }

    /// All members in canonical order.
    pub fn members(&self, space: &ApproximationSpace) -> Vec<Subset> {
        self.boundary()
            .subsets()
            .map(|b| self.lower.union(b))
            .filter(|x| space.l(*x) == self.lower && space.u(*x) == self.upper)
            .collect()
    }

    pub fn member_count(&self, space: &ApproximationSpace) -> u64 {
        space
            .blocks
            .iter()
            .filter(|b| b.is_subset(self.boundary()))
            .map(|b| (1u64 << b.count()) - 2)
            .product()
    }

    pub fn contains(&self, space: &ApproximationSpace, x: Subset) -> bool {
        space.l(x) == self.lower && space.u(x) == self.upper
    }

    /// Smallest member in canonical order.
    pub fn representative(&self, space: &ApproximationSpace) -> Subset {
        let mut x = self.lower;
        for b in space.blocks.iter().filter(|b| b.is_subset(self.boundary())) {
            let lowest = b.bits() & b.bits().wrapping_neg();
            x = x.union(Subset::from_bits(lowest, x.universe_len()));
        }
        x
    }
}

impl fmt::Debug for RoughClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?},{:?}]", self.lower, self.upper)
    }
}

/// A universe together with a partition into blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    universe: Universe,
    blocks: Vec<Subset>,
    block_of: Vec<usize>,
}

impl ApproximationSpace {
    pub fn from_partition(universe: Universe, blocks: Vec<Subset>) -> Result<Self> {
        let mut seen = universe.empty();
        for b in &blocks {
            universe.check(*b)?;
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            if !seen.is_disjoint(*b) {
                return Err(Error::InvalidPartition(format!(
                    "block {} overlaps another block",
                    universe.render(*b)
                )));
            }
            seen = seen.union(*b);
        }
        if !seen.is_full() {
            let missing = universe.render(seen.complement());
            return Err(Error::InvalidPartition(format!("atoms {missing} are not covered")));
        }
        let mut blocks = blocks;
        blocks.sort();
        let mut block_of = vec![0; universe.len()];
        for (k, b) in blocks.iter().enumerate() {
            for i in b.atoms() {
                block_of[i] = k;
            }
        }
        Ok(Self {
            universe,
            blocks,
            block_of,
        })
    }

    /// The least equivalence containing the given pairs.
    pub fn from_pairs<S: AsRef<str>>(universe: Universe, pairs: &[(S, S)]) -> Result<Self> {
        let n = universe.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        for (a, b) in pairs {
            let ia = universe
                .index_of(a.as_ref())
                .ok_or_else(|| Error::UnknownAtom(a.as_ref().into()))?;
            let ib = universe
                .index_of(b.as_ref())
                .ok_or_else(|| Error::UnknownAtom(b.as_ref().into()))?;
            let (ra, rb) = (find(&mut parent, ia), find(&mut parent, ib));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut root_block = HashMap::new();
        for i in 0..n {
            let r = find(&mut parent, i);
            let k = *root_block.entry(r).or_insert_with(|| {
                blocks.push(universe.empty());
                blocks.len() - 1
            });
            blocks[k] = blocks[k].with(i);
        }
        Self::from_partition(universe, blocks)
    }

    pub fn discrete(universe: Universe) -> Self {
        let blocks = (0..universe.len()).map(|i| universe.singleton(i)).collect();
        Self::from_partition(universe, blocks).expect("singletons partition")
    }

    pub fn indiscrete(universe: Universe) -> Self {
        let full = universe.full();
        Self::from_partition(universe, vec![full]).expect("single block partition")
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    /// Blocks in canonical order.
    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block_of(&self, atom: usize) -> Subset {
        self.blocks[self.block_of[atom]]
    }

    pub fn render(&self, x: Subset) -> String {
        self.universe.render(x)
    }

    pub fn parse(&self, s: &str) -> Result<Subset> {
        self.universe.parse(s)
    }

    pub(crate) fn l(&self, x: Subset) -> Subset {
        let mut r = 0;
        for b in &self.blocks {
            if b.bits() & !x.bits() == 0 {
                r |= b.bits();
            }
        }
        Subset::from_bits(r, self.universe.len())
    }

    pub(crate) fn u(&self, x: Subset) -> Subset {
        let mut r = 0;
        for b in &self.blocks {
            if b.bits() & x.bits() != 0 {
                r |= b.bits();
            }
        }
        Subset::from_bits(r, self.universe.len())
    }

    /// Union of the blocks contained in `x`.
    pub fn lower(&self, x: Subset) -> Result<Subset> {
        self.universe.check(x)?;
        Ok(self.l(x))
    }

    /// Union of the blocks meeting `x`.
    pub fn upper(&self, x: Subset) -> Result<Subset> {
        self.universe.check(x)?;
        Ok(self.u(x))
    }

    pub fn is_definite(&self, x: Subset) -> bool {
        self.l(x) == x && self.u(x) == x
    }

    /// One triple per nonempty subset, in canonical order.
    pub fn triples(&self) -> Result<Vec<ApproxTriple>> {
        self.universe.ensure_enumerable()?;
        Ok(self
            .universe
            .subsets()
            .skip(1)
            .map(|x| ApproxTriple {
                x,
                lower: self.l(x),
                upper: self.u(x),
            })
            .collect())
    }

    pub fn rough_eq(&self, a: Subset, b: Subset) -> Result<bool> {
        self.universe.check(a)?;
        self.universe.check(b)?;
        Ok(self.l(a) == self.l(b) && self.u(a) == self.u(b))
    }

    pub fn class_of(&self, x: Subset) -> RoughClass {
        RoughClass::from_bounds_unchecked(self.l(x), self.u(x))
    }

    pub fn empty_class(&self) -> RoughClass {
        self.class_of(self.universe.empty())
    }

    pub fn full_class(&self) -> RoughClass {
        self.class_of(self.universe.full())
    }

    /// All rough classes ordered by `(lower, upper)`. Each block is either
    /// outside, inside, or (if it has two or more atoms) on the boundary.
    pub fn rough_classes(&self, include_empty: bool) -> Vec<RoughClass> {
        let n = self.universe.len();
        let mut classes = vec![RoughClass::from_bounds_unchecked(Subset::empty(n), Subset::empty(n))];
        for b in &self.blocks {
            let mut next = Vec::with_capacity(classes.len() * 3);
            for c in &classes {
                next.push(*c);
                next.push(RoughClass::from_bounds_unchecked(c.lower.union(*b), c.upper.union(*b)));
                if b.count() >= 2 {
                    next.push(RoughClass::from_bounds_unchecked(c.lower, c.upper.union(*b)));
                }
            }
            classes = next;
        }
        classes.sort();
        if !include_empty {
            classes.retain(|c| !c.upper.is_empty());
        }
        classes
    }

    pub fn definiteness(&self, x: Subset) -> Result<Definiteness> {
        self.universe.check(x)?;
        let lower_definite = self.l(x) == x;
        let upper_definite = self.u(x) == x;
        Ok(Definiteness {
            lower_definite,
            upper_definite,
            definite: lower_definite && upper_definite,
        })
    }

    /// The quotient `℘(S)|≈` under the basic rough order, `[∅]` included.
    pub fn quotient_order(&self) -> RoughOrderPoset {
        let elements = self.rough_classes(true);
        RoughOrderPoset::new(elements, self.empty_class(), self.full_class())
    }
}

#[derive(Debug, Clone)]
pub struct RoughOrderPoset {
    elements: Vec<RoughClass>,
    bottom: usize,
    top: usize,
}

impl RoughOrderPoset {
    fn new(elements: Vec<RoughClass>, bottom: RoughClass, top: RoughClass) -> Self {
        let bottom = elements.iter().position(|c| *c == bottom).expect("bottom present");
        let top = elements.iter().position(|c| *c == top).expect("top present");
        Self {
            elements,
            bottom,
            top,
        }
    }

    pub fn elements(&self) -> &[RoughClass] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.elements[i].leq(&self.elements[j])
    }

    pub fn bottom(&self) -> &RoughClass {
        &self.elements[self.bottom]
    }

    pub fn top(&self) -> &RoughClass {
        &self.elements[self.top]
    }

    pub fn maximal_antichains(&self, limit: usize) -> Vec<Vec<RoughClass>> {
        maximal_antichains(self.len(), |i, j| self.leq(i, j), limit)
            .into_iter()
            .map(|a| a.into_iter().map(|i| self.elements[i]).collect())
            .collect()
    }
}

/// Maximal antichains of the order `leq` on `0..n`, as index lists.
///
/// These are the maximal cliques of the incomparability graph, found by
/// Bron–Kerbosch with pivoting. Vertices are tried in increasing order so
/// the output is deterministic. At most `limit` antichains are returned.
pub fn maximal_antichains(n: usize, leq: impl Fn(usize, usize) -> bool, limit: usize) -> Vec<Vec<usize>> {
    let incomparable: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| i != j && !leq(i, j) && !leq(j, i)).collect())
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    bron_kerbosch(&incomparable, &mut current, (0..n).collect(), Vec::new(), &mut out, limit);
    out
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    current: &mut Vec<usize>,
    candidates: Vec<usize>,
    excluded: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if out.len() >= limit {
        return;
    }
    if candidates.is_empty() {
        if excluded.is_empty() {
            let mut found = current.clone();
            found.sort_unstable();
            out.push(found);
        }
        return;
    }
    let pivot = candidates
        .iter()
        .chain(excluded.iter())
        .copied()
        .max_by_key(|&p| (candidates.iter().filter(|&&c| adj[p][c]).count(), std::cmp::Reverse(p)))
        .expect("nonempty");
    let mut candidates = candidates;
    let mut excluded = excluded;
    let branch: Vec<usize> = candidates.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    for v in branch {
        current.push(v);
        let next_c = candidates.iter().copied().filter(|&w| adj[v][w]).collect();
        let next_x = excluded.iter().copied().filter(|&w| adj[v][w]).collect();
        bron_kerbosch(adj, current, next_c, next_x, out, limit);
        current.pop();
        candidates.retain(|&w| w != v);
        excluded.push(v);
        if out.len() >= limit {
            return;
        }
    }
}
