//! The quotient pre-rough algebra on rough classes and axiom checkers for
//! arbitrary finite candidate structures.

use serde::{Deserialize, Serialize};

use crate::approx::{ApproximationSpace, RoughClass};
use crate::report::AxiomReport;

/// `℘(S)|≈` with the operations induced on bound pairs.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    space: ApproximationSpace,
    elements: Vec<RoughClass>,
}

impl QuotientAlgebra {
    pub fn new(space: &ApproximationSpace) -> Self {
        Self {
            space: space.clone(),
            elements: space.rough_classes(true),
        }
    }

    pub fn space(&self) -> &ApproximationSpace {
        &self.space
    }

    pub fn elements(&self) -> &[RoughClass] {
        &self.elements
    }

    pub fn index_of(&self, c: &RoughClass) -> Option<usize> {
        self.elements.binary_search(c).ok()
    }

    pub fn zero(&self) -> RoughClass {
        self.space.empty_class()
    }

    pub fn one(&self) -> RoughClass {
        self.space.full_class()
    }

    pub fn meet(&self, a: &RoughClass, b: &RoughClass) -> RoughClass {
        self.checked(a.lower().intersection(b.lower()), a.upper().intersection(b.upper()))
    }

    pub fn join(&self, a: &RoughClass, b: &RoughClass) -> RoughClass {
        self.checked(a.lower().union(b.lower()), a.upper().union(b.upper()))
    }

    /// `¬(l, u) = (u^c, l^c)`
    pub fn neg(&self, a: &RoughClass) -> RoughClass {
        self.checked(a.upper().complement(), a.lower().complement())
    }

    /// `L(l, u) = (l, l)`
    pub fn l(&self, a: &RoughClass) -> RoughClass {
        self.checked(a.lower(), a.lower())
    }

    /// `⋄ = ¬L¬`
    pub fn diamond(&self, a: &RoughClass) -> RoughClass {
        self.neg(&self.l(&self.neg(a)))
    }

    /// `(¬La ⊔ Lb) ⊓ (L¬a ⊔ ¬L¬b)`
    pub fn implies(&self, a: &RoughClass, b: &RoughClass) -> RoughClass {
        let left = self.join(&self.neg(&self.l(a)), &self.l(b));
        let right = self.join(&self.l(&self.neg(a)), &self.neg(&self.l(&self.neg(b))));
        self.meet(&left, &right)
    }

    pub fn leq(&self, a: &RoughClass, b: &RoughClass) -> bool {
        self.meet(a, b) == *a
    }

    fn checked(&self, lower: crate::approx::Subset, upper: crate::approx::Subset) -> RoughClass {
        debug_assert!(
            RoughClass::new(&self.space, lower, upper).is_ok(),
            "quotient operation left the carrier"
        );
        RoughClass::from_bounds_unchecked(lower, upper)
    }

    /// The same algebra as explicit operation tables over class indices.
    pub fn to_candidate(&self) -> FiniteAlgebraCandidate {
        let n = self.elements.len();
        let idx = |c: RoughClass| self.index_of(&c).expect("closed under operations");
        let el = &self.elements;
        let table2 = |f: &dyn Fn(&RoughClass, &RoughClass) -> RoughClass| -> Vec<Vec<usize>> {
            (0..n).map(|i| (0..n).map(|j| idx(f(&el[i], &el[j]))).collect()).collect()
        };
        FiniteAlgebraCandidate {
            names: el
                .iter()
                .map(|c| format!("({},{})", self.space.render(c.lower()), self.space.render(c.upper())))
                .collect(),
            meet: table2(&|a, b| self.meet(a, b)),
            join: Some(table2(&|a, b| self.join(a, b))),
            neg: el.iter().map(|c| idx(self.neg(c))).collect(),
            l: el.iter().map(|c| idx(self.l(c))).collect(),
            implies: Some(table2(&|a, b| self.implies(a, b))),
            zero: idx(self.zero()),
            one: idx(self.one()),
        }
    }
}

/// A finite structure given by tables over `0..n`, to be tested against
/// the pre-rough axioms. `join` is derived as `¬(¬a ⊓ ¬b)` when absent;
/// `implies` is only compared against its defining formula when present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteAlgebraCandidate {
    pub names: Vec<String>,
    pub meet: Vec<Vec<usize>>,
    #[serde(default)]
    pub join: Option<Vec<Vec<usize>>>,
    pub neg: Vec<usize>,
    pub l: Vec<usize>,
    #[serde(default)]
    pub implies: Option<Vec<Vec<usize>>>,
    pub zero: usize,
    pub one: usize,
}

impl FiniteAlgebraCandidate {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Tables must be total on the carrier with values inside it.
    pub fn validate(&self) -> Result<(), String> {
        let n = self.len();
        let ok_row = |r: &Vec<usize>| r.len() == n && r.iter().all(|v| *v < n);
        let ok_table = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(ok_row);
        if n == 0 {
            return Err("empty carrier".into());
        }
        if !ok_table(&self.meet) {
            return Err("meet table is not total".into());
        }
        if let Some(j) = &self.join {
            if !ok_table(j) {
                return Err("join table is not total".into());
            }
        }
        if let Some(i) = &self.implies {
            if !ok_table(i) {
                return Err("implication table is not total".into());
            }
        }
        if !ok_row(&self.neg) || !ok_row(&self.l) {
            return Err("unary table is not total".into());
        }
        if self.zero >= n || self.one >= n {
            return Err("constant outside the carrier".into());
        }
        Ok(())
    }

    /// Two-element Boolean algebra with `L` the identity.
    pub fn boolean2() -> Self {
        Self {
            names: vec!["0".into(), "1".into()],
            meet: vec![vec![0, 0], vec![0, 1]],
            join: Some(vec![vec![0, 1], vec![1, 1]]),
            neg: vec![1, 0],
            l: vec![0, 1],
            implies: None,
            zero: 0,
            one: 1,
        }
    }
}

struct Ops<'a> {
    c: &'a FiniteAlgebraCandidate,
    join: Vec<Vec<usize>>,
}

impl<'a> Ops<'a> {
    fn new(c: &'a FiniteAlgebraCandidate, use_table_join: bool) -> Self {
        let n = c.len();
        let join = match (&c.join, use_table_join) {
            (Some(j), true) => j.clone(),
            _ => (0..n)
                .map(|a| (0..n).map(|b| c.neg[c.meet[c.neg[a]][c.neg[b]]]).collect())
                .collect(),
        };
        Self { c, join }
    }
    fn m(&self, a: usize, b: usize) -> usize {
        self.c.meet[a][b]
    }
    fn j(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }
    fn n(&self, a: usize) -> usize {
        self.c.neg[a]
    }
    fn l(&self, a: usize) -> usize {
        self.c.l[a]
    }
    fn leq(&self, a: usize, b: usize) -> bool {
        self.m(a, b) == a
    }
    fn implies(&self, a: usize, b: usize) -> usize {
        let left = self.j(self.n(self.l(a)), self.l(b));
        let right = self.j(self.l(self.n(a)), self.n(self.l(self.n(b))));
        self.m(left, right)
    }
}

fn find1(n: usize, bad: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    (0..n).find(|&a| bad(a)).map(|a| vec![a])
}

fn find2(n: usize, bad: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for b in 0..n {
            if bad(a, b) {
                return Some(vec![a, b]);
            }
        }
    }
    None
}

fn find3(n: usize, bad: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if bad(a, b, c) {
                    return Some(vec![a, b, c]);
                }
            }
        }
    }
    None
}

/// Bounded distributive lattice laws plus an involutive De Morgan negation.
fn de_morgan_base(o: &Ops, r: &mut AxiomReport<Vec<usize>>) {
    let n = o.c.len();
    let (zero, one) = (o.c.zero, o.c.one);
    r.push("meet-commutative", find2(n, |a, b| o.m(a, b) != o.m(b, a)));
    r.push("meet-associative", find3(n, |a, b, c| o.m(a, o.m(b, c)) != o.m(o.m(a, b), c)));
    r.push("meet-idempotent", find1(n, |a| o.m(a, a) != a));
    r.push("join-commutative", find2(n, |a, b| o.j(a, b) != o.j(b, a)));
    r.push("join-associative", find3(n, |a, b, c| o.j(a, o.j(b, c)) != o.j(o.j(a, b), c)));
    r.push("join-idempotent", find1(n, |a| o.j(a, a) != a));
    r.push("absorption", find2(n, |a, b| o.m(a, o.j(a, b)) != a || o.j(a, o.m(a, b)) != a));
    r.push(
        "distributive",
        find3(n, |a, b, c| o.m(a, o.j(b, c)) != o.j(o.m(a, b), o.m(a, c))),
    );
    r.push("bounds", find1(n, |a| o.m(zero, a) != zero || o.m(one, a) != a));
    r.push("double-negation", find1(n, |a| o.n(o.n(a)) != a));
    r.push("de-morgan", find2(n, |a, b| o.n(o.m(a, b)) != o.j(o.n(a), o.n(b))));
}

/// Every identity of a pre-rough algebra, the quasi-equation, and the
/// definition of `⇒` when an implication table is supplied.
pub fn check_pre_rough(cand: &FiniteAlgebraCandidate) -> AxiomReport<Vec<usize>> {
    let o = Ops::new(cand, true);
    let n = cand.len();
    let one = cand.one;
    let mut r = AxiomReport::new();
    de_morgan_base(&o, &mut r);
    r.push("L-deflationary", find1(n, |a| o.m(o.l(a), a) != o.l(a)));
    r.push("L-join", find2(n, |a, b| o.l(o.j(a, b)) != o.j(o.l(a), o.l(b))));
    r.push("negL-negL", find1(n, |a| o.n(o.l(o.n(o.l(a)))) != o.l(a)));
    r.push("L-idempotent", find1(n, |a| o.l(o.l(a)) != o.l(a)));
    r.push("L-one", (o.l(one) != one).then(|| vec![one]));
    r.push("L-meet", find2(n, |a, b| o.l(o.m(a, b)) != o.m(o.l(a), o.l(b))));
    r.push("L-excluded-middle", find1(n, |a| o.j(o.n(o.l(a)), o.l(a)) != one));
    r.push(
        "quasi-equation",
        find2(n, |a, b| {
            o.m(o.l(a), o.l(b)) == o.l(a)
                && o.n(o.l(o.n(o.m(a, b)))) == o.n(o.l(o.n(a)))
                && o.m(a, b) != a
        }),
    );
    if let Some(imp) = &cand.implies {
        r.push("implication", find2(n, |a, b| imp[a][b] != o.implies(a, b)));
    }
    r
}

/// The essential axiomatization: a quasi-Boolean algebra on `⊓, ¬, 0, 1`
/// (join derived) satisfying E1–E6.
pub fn check_essential_pre_rough(cand: &FiniteAlgebraCandidate) -> AxiomReport<Vec<usize>> {
    let o = Ops::new(cand, false);
    let n = cand.len();
    let (zero, one) = (cand.zero, cand.one);
    let mut r = AxiomReport::new();
    de_morgan_base(&o, &mut r);
    r.push("E1", (o.l(one) != one).then(|| vec![one]));
    r.push("E2", find1(n, |a| o.m(o.l(a), a) != o.l(a)));
    r.push("E3", find2(n, |a, b| o.l(o.m(a, b)) != o.m(o.l(a), o.l(b))));
    r.push("E4", find1(n, |a| o.n(o.l(o.n(o.l(a)))) != o.l(a)));
    r.push("E5", find1(n, |a| o.m(o.n(o.l(a)), o.l(a)) != zero));
    r.push(
        "E6",
        find2(n, |a, b| {
            o.leq(o.n(o.l(o.n(a))), o.n(o.l(o.n(b)))) && o.leq(o.l(a), o.l(b)) && !o.leq(a, b)
        }),
    );
    r
}

/// On a finite carrier complete distributivity reduces to distributivity of
/// the (automatically complete) lattice, so this flags a rough algebra.
pub fn is_rough_algebra(cand: &FiniteAlgebraCandidate) -> bool {
    let r = check_pre_rough(cand);
    r.all_hold()
}
