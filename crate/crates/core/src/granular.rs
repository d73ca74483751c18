//! Granular operator spaces given by explicit operator tables.
//!
//! Lower and upper operators are arbitrary maps `℘(S) → ℘(S)`; the axiom
//! checkers decide which of the usual operator laws they satisfy, and the
//! admissibility check decides whether a granulation can account for them.

use std::collections::BTreeSet;

use crate::approx::{ApproximationSpace, Subset, Universe};
use crate::error::{Error, Result};
use crate::parthood::{self, ParthoodKind};
use crate::report::{AxiomCheck, AxiomReport};

/// Upper bound on the number of families the granulation search will try.
pub const SEARCH_CAP: u128 = 10_000_000;

/// A total map on `℘(S)`, indexed by the subset's bit pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorTable {
    len: usize,
    image: Vec<Subset>,
}

impl OperatorTable {
    pub fn from_fn(universe: &Universe, f: impl Fn(Subset) -> Subset) -> Result<Self> {
        universe.ensure_enumerable()?;
        let image: Vec<Subset> = universe.subsets().map(&f).collect();
        for y in &image {
            universe.check(*y)?;
        }
        Ok(Self {
            len: universe.len(),
            image,
        })
    }

    pub fn identity(universe: &Universe) -> Result<Self> {
        Self::from_fn(universe, |x| x)
    }

    pub fn lower_of(space: &ApproximationSpace) -> Result<Self> {
        Self::from_fn(space.universe(), |x| space.lower(x).expect("same universe"))
    }

    pub fn upper_of(space: &ApproximationSpace) -> Result<Self> {
        Self::from_fn(space.universe(), |x| space.upper(x).expect("same universe"))
    }

    pub fn apply(&self, x: Subset) -> Subset {
        debug_assert_eq!(x.universe_len(), self.len);
        self.image[x.bits() as usize]
    }

    pub fn set(&mut self, x: Subset, y: Subset) {
        self.image[x.bits() as usize] = y;
    }

    pub fn universe_len(&self) -> usize {
        self.len
    }

    /// `(x, f(x))` for every subset, in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        self.image
            .iter()
            .enumerate()
            .map(move |(i, y)| (Subset::from_bits(i as u32, self.len), *y))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OperatorKind {
    #[default]
    Lower,
    Upper,
}

/// The parthood used by the admissibility conditions. Set inclusion gives
/// granular operator spaces; a catalog kind gives the general variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GranuleParthood {
    #[default]
    Inclusion,
    Catalog(ParthoodKind),
}

#[derive(Debug, Clone)]
pub struct GranularModel {
    pub universe: Universe,
    pub granules: Vec<Subset>,
    pub lower: OperatorTable,
    pub upper: OperatorTable,
    pub parthood: GranuleParthood,
    /// Read `a^u ⊂ a^uu` strictly. Off by default: no classical space
    /// satisfies the strict form.
    pub strict_upper: bool,
}

impl GranularModel {
    pub fn new(
        universe: Universe,
        granules: Vec<Subset>,
        lower: OperatorTable,
        upper: OperatorTable,
    ) -> Result<Self> {
        if granules.is_empty() {
            return Err(Error::Model("granulation must be nonempty".into()));
        }
        for g in &granules {
            universe.check(*g)?;
            if g.is_empty() {
                return Err(Error::Model("granules must be nonempty".into()));
            }
        }
        for t in [&lower, &upper] {
            if t.universe_len() != universe.len() {
                return Err(Error::UniverseMismatch {
                    expected: universe.len(),
                    found: t.universe_len(),
                });
            }
        }
        Ok(Self {
            universe,
            granules,
            lower,
            upper,
            parthood: GranuleParthood::Inclusion,
            strict_upper: false,
        })
    }

    /// Blocks as granules, classical approximations as operators.
    pub fn from_space(space: &ApproximationSpace) -> Result<Self> {
        Self::new(
            space.universe().clone(),
            space.blocks().to_vec(),
            OperatorTable::lower_of(space)?,
            OperatorTable::upper_of(space)?,
        )
    }

    pub fn with_parthood(mut self, parthood: GranuleParthood) -> Self {
        self.parthood = parthood;
        self
    }
}

/// The axioms of a granular operator space on `model`'s tables.
pub fn check_gos_axioms(model: &GranularModel) -> AxiomReport<Vec<Subset>> {
    let (l, u) = (&model.lower, &model.upper);
    let all: Vec<Subset> = model.universe.subsets().collect();
    let mut r = AxiomReport::new();
    r.push("lower-contained", first(&all, |a| !l.apply(a).is_subset(a)));
    r.push("lower-idempotent", first(&all, |a| l.apply(l.apply(a)) != l.apply(a)));
    r.push("upper-contains", first(&all, |a| !a.is_subset(u.apply(a))));
    let upper_growth = if model.strict_upper {
        first(&all, |a| !u.apply(a).is_proper_subset(u.apply(u.apply(a))))
    } else {
        first(&all, |a| !u.apply(a).is_subset(u.apply(u.apply(a))))
    };
    r.push("upper-upper-growth", upper_growth);
    r.push("lower-monotone", monotonicity_witness(&model.universe, l));
    r.push("upper-monotone", monotonicity_witness(&model.universe, u));
    let empty = model.universe.empty();
    let full = model.universe.full();
    r.push("empty-lower", (!l.apply(empty).is_empty()).then(|| vec![empty]));
    r.push("empty-upper", (!u.apply(empty).is_empty()).then(|| vec![empty]));
    r.push("full-lower", (!l.apply(full).is_subset(full)).then(|| vec![full]));
    r.push("full-upper", (!u.apply(full).is_subset(full)).then(|| vec![full]));
    r
}

/// The standalone laws of a lower or an upper approximation operator.
pub fn check_operator_axioms(
    universe: &Universe,
    table: &OperatorTable,
    kind: OperatorKind,
) -> AxiomReport<Vec<Subset>> {
    let all: Vec<Subset> = universe.subsets().collect();
    let mut r = AxiomReport::new();
    match kind {
        OperatorKind::Lower => {
            r.push("non-increasing", first(&all, |x| x.is_proper_subset(table.apply(x))));
            r.push(
                "idempotence",
                first(&all, |x| table.apply(table.apply(x)) != table.apply(x)),
            );
            r.push("monotonicity", monotonicity_witness(universe, table));
        }
        OperatorKind::Upper => {
            r.push("increasing", first(&all, |x| !x.is_subset(table.apply(x))));
            r.push("monotonicity", monotonicity_witness(universe, table));
        }
    }
    r
}

fn first(all: &[Subset], bad: impl Fn(Subset) -> bool) -> Option<Vec<Subset>> {
    all.iter().find(|a| bad(**a)).map(|a| vec![*a])
}

/// Monotonicity on a finite powerset reduces to single-atom extensions:
/// `f(a) ⊆ f(a ∪ {x})` for every `a` and `x ∉ a`.
fn monotonicity_witness(universe: &Universe, t: &OperatorTable) -> Option<Vec<Subset>> {
    for a in universe.subsets() {
        for x in (0..universe.len()).filter(|x| !a.contains(*x)) {
            let b = a.with(x);
            if !t.apply(a).is_subset(t.apply(b)) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Admissibility {
    pub wra: AxiomCheck<Vec<Subset>>,
    pub ls: AxiomCheck<Vec<Subset>>,
    pub fu: AxiomCheck<Vec<Subset>>,
}

impl Admissibility {
    pub fn all_hold(&self) -> bool {
        self.wra.holds() && self.ls.holds() && self.fu.holds()
    }
}

pub fn check_admissibility(model: &GranularModel) -> Admissibility {
    admissibility(
        &model.universe,
        &model.granules,
        &model.lower,
        &model.upper,
        model.parthood,
    )
}

fn admissibility(
    universe: &Universe,
    granules: &[Subset],
    lower: &OperatorTable,
    upper: &OperatorTable,
    parthood: GranuleParthood,
) -> Admissibility {
    let part = |a: Subset, b: Subset| -> bool {
        match parthood {
            GranuleParthood::Inclusion => a.is_subset(b),
            GranuleParthood::Catalog(kind) => parthood::holds_on_sets(
                kind,
                |x| lower.apply(x),
                |x| upper.apply(x),
                granules,
                a,
                b,
            )
            .unwrap_or(false),
        }
    };
    let proper = |a: Subset, b: Subset| part(a, b) && !part(b, a);

    let atoms = field_atoms(universe, granules);
    let in_field = |x: Subset| atoms.iter().all(|p| p.is_subset(x) || p.is_disjoint(x));
    let wra = universe.subsets().find_map(|a| {
        let (al, au) = (lower.apply(a), upper.apply(a));
        if !in_field(al) {
            Some(vec![a, al])
        } else if !in_field(au) {
            Some(vec![a, au])
        } else {
            None
        }
    });

    let ls = granules.iter().find_map(|&g| {
        universe
            .subsets()
            .find(|&a| part(g, a) && !part(g, lower.apply(a)))
            .map(|a| vec![g, a])
    });

    let definite: Vec<Subset> = universe
        .subsets()
        .filter(|&z| lower.apply(z) == z && upper.apply(z) == z)
        .collect();
    let mut fu = None;
    'pairs: for (i, &x) in granules.iter().enumerate() {
        for &y in &granules[i + 1..] {
            if x == y {
                continue;
            }
            if !definite.iter().any(|&z| proper(x, z) && proper(y, z)) {
                fu = Some(vec![x, y]);
                break 'pairs;
            }
        }
    }

    Admissibility {
        wra: AxiomCheck::from_search("WRA", wra),
        ls: AxiomCheck::from_search("LS", ls),
        fu: AxiomCheck::from_search("FU", fu),
    }
}

/// Atoms of the Boolean field of sets generated by `granules`: the
/// nonempty cells of the common refinement of every `{g, g^c}`.
pub fn field_atoms(universe: &Universe, granules: &[Subset]) -> Vec<Subset> {
    let mut cells = vec![universe.full()];
    for &g in granules {
        cells = cells
            .into_iter()
            .flat_map(|c| [c.intersection(g), c.difference(g)])
            .filter(|c| !c.is_empty())
            .collect();
    }
    cells.sort();
    cells
}

/// Is `x` a member of the field of sets generated by `granules`?
pub fn in_generated_field(universe: &Universe, granules: &[Subset], x: Subset) -> bool {
    field_atoms(universe, granules)
        .iter()
        .all(|p| p.is_subset(x) || p.is_disjoint(x))
}

/// Every value of a term over `{∪, ∩, ^c, 1, ∅}` applied to granules with
/// nesting depth at most `max_depth`. Stops early at a fixed point.
pub fn term_values(universe: &Universe, granules: &[Subset], max_depth: usize) -> BTreeSet<Subset> {
    let mut values: BTreeSet<Subset> = granules.iter().copied().collect();
    values.insert(universe.empty());
    values.insert(universe.full());
    for _ in 0..max_depth {
        let current: Vec<Subset> = values.iter().copied().collect();
        let mut next = values.clone();
        for (i, &a) in current.iter().enumerate() {
            next.insert(a.complement());
            for &b in &current[i..] {
                next.insert(a.union(b));
                next.insert(a.intersection(b));
            }
        }
        if next.len() == values.len() {
            break;
        }
        values = next;
    }
    values
}

/// Brute-force inverse problem: every family of at most `max_granules`
/// nonempty subsets that is admissible for the given tables. Families are
/// produced by size, then lexicographically in canonical subset order.
pub fn search_admissible_granulations(
    universe: &Universe,
    lower: &OperatorTable,
    upper: &OperatorTable,
    max_granules: usize,
    parthood: GranuleParthood,
) -> Result<Vec<Vec<Subset>>> {
    if max_granules == 0 {
        return Err(Error::PreconditionViolated("max_granules must be at least 1".into()));
    }
    universe.ensure_enumerable()?;
    let pool: Vec<Subset> = universe.subsets().skip(1).collect();
    let candidates: u128 = (1..=max_granules).map(|k| binomial(pool.len() as u128, k as u128)).sum();
    if candidates > SEARCH_CAP {
        return Err(Error::SearchTooLarge {
            candidates,
            cap: SEARCH_CAP,
        });
    }
    let mut found = Vec::new();
    for k in 1..=max_granules.min(pool.len()) {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let family: Vec<Subset> = idx.iter().map(|&i| pool[i]).collect();
            if admissibility(universe, &family, lower, upper, parthood).all_hold() {
                found.push(family);
            }
            if !next_combination(&mut idx, pool.len()) {
                break;
            }
        }
    }
    Ok(found)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> ApproximationSpace {
        let u = Universe::from_chars("abcefq").unwrap();
        ApproximationSpace::from_pairs(u, &[("a", "b"), ("b", "c"), ("e", "f")]).unwrap()
    }

    fn set(sp: &ApproximationSpace, s: &str) -> Subset {
        sp.parse(s).unwrap()
    }

    #[test]
    fn from_space_uses_blocks() {
        let sp = example();
        let m = GranularModel::from_space(&sp).unwrap();
        assert_eq!(m.granules, vec![set(&sp, "abc"), set(&sp, "ef"), set(&sp, "q")]);
        assert_eq!(m.lower.apply(set(&sp, "aq")), set(&sp, "q"));

        let single = ApproximationSpace::indiscrete(Universe::from_chars("xyz").unwrap());
        let m = GranularModel::from_space(&single).unwrap();
        assert_eq!(m.granules, vec![single.universe().full()]);
    }

    #[test]
    fn classical_model_satisfies_gos_axioms() {
        let m = GranularModel::from_space(&example()).unwrap();
        assert!(check_gos_axioms(&m).all_hold());
    }

    #[test]
    fn strict_upper_growth_fails_classically() {
        let mut m = GranularModel::from_space(&example()).unwrap();
        m.strict_upper = true;
        let r = check_gos_axioms(&m);
        assert!(!r.get("upper-upper-growth").unwrap().holds());
    }

    #[test]
    fn broken_lower_is_not_monotone() {
        let sp = example();
        let u = sp.universe();
        let full = u.full();
        let lower = OperatorTable::from_fn(u, |x| if x == full { u.empty() } else { x }).unwrap();
        let m = GranularModel::new(u.clone(), sp.blocks().to_vec(), lower.clone(), OperatorTable::upper_of(&sp).unwrap()).unwrap();
        let r = check_gos_axioms(&m);
        let check = r.get("lower-monotone").unwrap();
        let w = check.witness.clone().expect("witness");
        assert!(w[0].is_subset(w[1]) && !lower.apply(w[0]).is_subset(lower.apply(w[1])));
    }

    #[test]
    fn constant_bottom_passes_lower_axioms() {
        let sp = example();
        let u = sp.universe();
        let bottom = OperatorTable::from_fn(u, |_| u.empty()).unwrap();
        assert!(check_operator_axioms(u, &bottom, OperatorKind::Lower).all_hold());
        let m = GranularModel::new(u.clone(), sp.blocks().to_vec(), bottom, OperatorTable::upper_of(&sp).unwrap()).unwrap();
        let r = check_gos_axioms(&m);
        for name in ["lower-contained", "lower-idempotent", "lower-monotone", "empty-lower", "full-lower"] {
            assert!(r.get(name).unwrap().holds(), "{name}");
        }
    }

    #[test]
    fn operator_axioms() {
        let sp = example();
        let u = sp.universe();
        assert!(check_operator_axioms(u, &OperatorTable::lower_of(&sp).unwrap(), OperatorKind::Lower).all_hold());
        let grow = OperatorTable::from_fn(u, |x| x.with(0)).unwrap();
        let r = check_operator_axioms(u, &grow, OperatorKind::Lower);
        assert_eq!(r.get("non-increasing").unwrap().witness, Some(vec![u.empty()]));
        assert!(check_operator_axioms(u, &OperatorTable::identity(u).unwrap(), OperatorKind::Upper).all_hold());
    }

    #[test]
    fn admissibility_examples() {
        let sp = example();
        let m = GranularModel::from_space(&sp).unwrap();
        assert!(check_admissibility(&m).all_hold());

        let mut bad = m.clone();
        bad.granules = vec![set(&sp, "ab")];
        let a = check_admissibility(&bad);
        assert!(!a.wra.holds());

        let discrete = ApproximationSpace::discrete(Universe::from_chars("abc").unwrap());
        assert!(check_admissibility(&GranularModel::from_space(&discrete).unwrap()).all_hold());
    }

    #[test]
    fn field_membership_matches_term_search() {
        let sp = example();
        let u = sp.universe();
        let fams = [
            vec![set(&sp, "abc"), set(&sp, "ef"), set(&sp, "q")],
            vec![set(&sp, "ab")],
            vec![set(&sp, "abe"), set(&sp, "bfq")],
        ];
        for g in fams {
            let terms = term_values(u, &g, 8);
            for x in u.subsets() {
                assert_eq!(in_generated_field(u, &g, x), terms.contains(&x));
            }
        }
    }

    #[test]
    fn search_recovers_the_partition() {
        let sp = example();
        let u = sp.universe();
        let (l, up) = (OperatorTable::lower_of(&sp).unwrap(), OperatorTable::upper_of(&sp).unwrap());
        let found = search_admissible_granulations(u, &l, &up, 3, GranuleParthood::Inclusion).unwrap();
        let target = vec![set(&sp, "abc"), set(&sp, "ef"), set(&sp, "q")];
        assert!(found.contains(&target));
    }

    #[test]
    fn search_on_non_monotone_tables_is_empty() {
        let sp = example();
        let u = sp.universe();
        let full = u.full();
        let l = OperatorTable::from_fn(u, |x| if x == full { u.empty() } else { x }).unwrap();
        let found = search_admissible_granulations(u, &l, &OperatorTable::upper_of(&sp).unwrap(), 2, GranuleParthood::Inclusion).unwrap();
        assert!(found.is_empty());
    }

    #[test]
    fn search_on_a_single_atom() {
        let u = Universe::from_chars("x").unwrap();
        let id = OperatorTable::identity(&u).unwrap();
        let found = search_admissible_granulations(&u, &id, &id, 1, GranuleParthood::Inclusion).unwrap();
        assert_eq!(found, vec![vec![u.full()]]);
    }

    #[test]
    fn search_cap_is_enforced() {
        let u = Universe::from_chars("abcdefgh").unwrap();
        let id = OperatorTable::identity(&u).unwrap();
        let err = search_admissible_granulations(&u, &id, &id, 4, GranuleParthood::Inclusion).unwrap_err();
        assert!(matches!(err, Error::SearchTooLarge { .. }));
        assert!(search_admissible_granulations(&u, &id, &id, 0, GranuleParthood::Inclusion).is_err());
    }
}
