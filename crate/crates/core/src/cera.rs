//! The mixed carrier `℘(S) ∪ ℘(S)|≈` with its cross-type operations.

use std::fmt;

use crate::approx::{ApproximationSpace, RoughClass, Subset};
use crate::error::{Error, Result};
use crate::prerough::QuotientAlgebra;
use crate::report::AxiomReport;

/// A type-1 element is a plain subset, a type-2 element a rough class.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MixedElement {
    Set(Subset),
    Class(RoughClass),
}

impl MixedElement {
    pub fn is_set(&self) -> bool {
        matches!(self, MixedElement::Set(_))
    }

    pub fn is_class(&self) -> bool {
        matches!(self, MixedElement::Class(_))
    }

    /// 1 for sets, 2 for classes.
    pub fn type_index(&self) -> u8 {
        if self.is_set() {
            1
        } else {
            2
        }
    }
}

impl fmt::Debug for MixedElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MixedElement::Set(x) => write!(f, "Set({x:?})"),
            MixedElement::Class(c) => write!(f, "Class{c:?}"),
        }
    }
}

/// How mixed cases reach the members of a class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MemberRoute {
    /// `⋃members = upper bound`, `⋂members = lower bound`.
    #[default]
    Bounds,
    /// Fold over the enumerated members.
    Enumerate,
}

#[derive(Debug, Clone)]
pub struct CeraModel {
    q: QuotientAlgebra,
    soft: bool,
    route: MemberRoute,
}

impl CeraModel {
    pub fn new(space: &ApproximationSpace) -> Self {
        Self {
            q: QuotientAlgebra::new(space),
            soft: false,
            route: MemberRoute::Bounds,
        }
    }

    /// The soft variant, with `∘` taking the place of `⊙`.
    pub fn soft(space: &ApproximationSpace) -> Self {
        Self {
            soft: true,
            ..Self::new(space)
        }
    }

    pub fn with_route(mut self, route: MemberRoute) -> Self {
        self.route = route;
        self
    }

    pub fn is_soft(&self) -> bool {
        self.soft
    }

    pub fn space(&self) -> &ApproximationSpace {
        self.q.space()
    }

    pub fn quotient(&self) -> &QuotientAlgebra {
        &self.q
    }

    pub fn bot(&self) -> MixedElement {
        MixedElement::Set(self.space().universe().empty())
    }

    pub fn top(&self) -> MixedElement {
        MixedElement::Set(self.space().universe().full())
    }

    pub fn zero(&self) -> MixedElement {
        MixedElement::Class(self.q.zero())
    }

    pub fn one(&self) -> MixedElement {
        MixedElement::Class(self.q.one())
    }

    pub fn set(&self, x: Subset) -> MixedElement {
        MixedElement::Set(x)
    }

    /// `[x]`
    pub fn class_of(&self, x: Subset) -> MixedElement {
        MixedElement::Class(self.space().class_of(x))
    }

    /// Every element: all subsets, then all classes including `[∅]`.
    pub fn carrier(&self) -> Vec<MixedElement> {
        let mut out: Vec<MixedElement> = self.space().universe().subsets().map(MixedElement::Set).collect();
        out.extend(self.q.elements().iter().copied().map(MixedElement::Class));
        out
    }

    /// Checks that an element belongs to this model.
    pub fn validate(&self, m: &MixedElement) -> Result<()> {
        match m {
            MixedElement::Set(x) => self.space().universe().check(*x),
            MixedElement::Class(c) => RoughClass::new(self.space(), c.lower(), c.upper()).map(|_| ()),
        }
    }

    /// Sets print as atom strings, classes as `[member]` with their smallest member.
    pub fn render(&self, m: &MixedElement) -> String {
        match m {
            MixedElement::Set(x) => self.space().render(*x),
            MixedElement::Class(c) => format!("[{}]", self.space().render(c.representative(self.space()))),
        }
    }

    /// Class rendering with explicit bounds.
    pub fn render_long(&self, m: &MixedElement) -> String {
        match m {
            MixedElement::Set(_) => self.render(m),
            MixedElement::Class(c) => format!(
                "{} bounds=({},{})",
                self.render(m),
                self.space().render(c.lower()),
                self.space().render(c.upper())
            ),
        }
    }

    fn union_members(&self, c: &RoughClass) -> Subset {
        match self.route {
            MemberRoute::Bounds => c.upper(),
            MemberRoute::Enumerate => c
                .members(self.space())
                .into_iter()
                .fold(self.space().universe().empty(), Subset::union),
        }
    }

    fn inter_members(&self, c: &RoughClass) -> Subset {
        match self.route {
            MemberRoute::Bounds => c.lower(),
            MemberRoute::Enumerate => c
                .members(self.space())
                .into_iter()
                .fold(self.space().universe().full(), Subset::intersection),
        }
    }

    /// `⋃_{z∈c} f(z)` for the implication cases.
    fn union_over(&self, c: &RoughClass, f: impl Fn(Subset) -> Subset) -> Subset {
        c.members(self.space())
            .into_iter()
            .fold(self.space().universe().empty(), |acc, z| acc.union(f(z)))
    }

    fn bracket(&self, x: Subset) -> MixedElement {
        self.class_of(x)
    }

    /// `𝔏`
    pub fn frak_l(&self, x: &MixedElement) -> MixedElement {
        match x {
            MixedElement::Set(s) => MixedElement::Set(self.space().l(*s)),
            MixedElement::Class(c) => MixedElement::Class(self.q.l(c)),
        }
    }

    /// `♦`
    pub fn blacklozenge(&self, x: &MixedElement) -> MixedElement {
        match x {
            MixedElement::Set(s) => MixedElement::Set(self.space().u(*s)),
            MixedElement::Class(c) => MixedElement::Class(self.q.diamond(c)),
        }
    }

    /// `∼`, total on the carrier.
    pub fn sim_neg(&self, x: &MixedElement) -> MixedElement {
        match x {
            MixedElement::Set(s) => MixedElement::Set(s.complement()),
            MixedElement::Class(c) => MixedElement::Class(self.q.neg(c)),
        }
    }

    /// `¬`, defined on classes only.
    pub fn partial_neg(&self, x: &MixedElement) -> Result<MixedElement> {
        match x {
            MixedElement::Set(s) => Err(Error::UndefinedOnType1 {
                op: "neg",
                span: self.space().render(*s),
            }),
            MixedElement::Class(c) => Ok(MixedElement::Class(self.q.neg(c))),
        }
    }

    /// `⊕`
    pub fn oplus(&self, x: &MixedElement, y: &MixedElement) -> MixedElement {
        use MixedElement::*;
        match (x, y) {
            (Set(a), Set(b)) => Set(a.union(*b)),
            (Set(a), Class(c)) => self.bracket(a.union(self.union_members(c))),
            (Class(c), Set(b)) => self.bracket(self.union_members(c).union(*b)),
            (Class(c), Class(d)) => Class(self.q.join(c, d)),
        }
    }

    /// The strict commonality `⊙` (mixed cases intersect with `⋂members`).
    pub fn odot_strict(&self, x: &MixedElement, y: &MixedElement) -> MixedElement {
        use MixedElement::*;
        match (x, y) {
            (Set(a), Set(b)) => Set(a.intersection(*b)),
            (Set(a), Class(c)) => self.bracket(a.intersection(self.inter_members(c))),
            (Class(c), Set(b)) => self.bracket(self.inter_members(c).intersection(*b)),
            (Class(c), Class(d)) => Class(self.q.meet(c, d)),
        }
    }

    /// `∘` (mixed cases intersect with `⋃members`).
    pub fn circ(&self, x: &MixedElement, y: &MixedElement) -> MixedElement {
        use MixedElement::*;
        match (x, y) {
            (Set(a), Class(c)) => self.bracket(a.intersection(self.union_members(c))),
            (Class(c), Set(b)) => self.bracket(self.union_members(c).intersection(*b)),
            _ => self.odot_strict(x, y),
        }
    }

    /// The model's commonality: `⊙`, or `∘` in a soft model.
    pub fn odot(&self, x: &MixedElement, y: &MixedElement) -> MixedElement {
        if self.soft {
            self.circ(x, y)
        } else {
            self.odot_strict(x, y)
        }
    }

    fn implication(&self, x: &MixedElement, y: &MixedElement, bracket_sets: bool) -> MixedElement {
        use MixedElement::*;
        match (x, y) {
            (Set(a), Set(b)) => {
                let r = a.union(b.complement());
                if bracket_sets {
                    self.bracket(r)
                } else {
                    Set(r)
                }
            }
            (Set(a), Class(c)) => self.bracket(match self.route {
                MemberRoute::Bounds => a.union(c.lower().complement()),
                MemberRoute::Enumerate => self.union_over(c, |z| a.union(z.complement())),
            }),
            (Class(c), Set(b)) => self.bracket(match self.route {
                MemberRoute::Bounds => c.upper().union(b.complement()),
                MemberRoute::Enumerate => self.union_over(c, |z| z.union(b.complement())),
            }),
            (Class(c), Class(d)) => Class(self.q.implies(c, d)),
        }
    }

    /// `⇝`
    pub fn rightsquig(&self, x: &MixedElement, y: &MixedElement) -> MixedElement {
        self.implication(x, y, false)
    }

    /// `↠`, which differs from `⇝` only by bracketing the set-set case.
    pub fn two_head(&self, x: &MixedElement, y: &MixedElement) -> MixedElement {
        self.implication(x, y, true)
    }
}

type Witness = Vec<MixedElement>;

fn scan1(carrier: &[MixedElement], bad: impl Fn(&MixedElement) -> bool) -> Option<Witness> {
    carrier.iter().find(|x| bad(x)).map(|x| vec![*x])
}

fn scan2(
    xs: &[MixedElement],
    ys: &[MixedElement],
    bad: impl Fn(&MixedElement, &MixedElement) -> bool,
) -> Option<Witness> {
    for x in xs {
        for y in ys {
            if bad(x, y) {
                return Some(vec![*x, *y]);
            }
        }
    }
    None
}

fn scan3(xs: &[MixedElement], bad: impl Fn(&MixedElement, &MixedElement, &MixedElement) -> bool) -> Option<Witness> {
    for x in xs {
        for y in xs {
            for z in xs {
                if bad(x, y, z) {
                    return Some(vec![*x, *y, *z]);
                }
            }
        }
    }
    None
}

/// Every identity and quasi-identity of the CERA theorem, decided over the
/// whole carrier. The guarded ones range over the stated types only.
pub fn check_cera_identities(m: &CeraModel) -> AxiomReport<Witness> {
    let all = m.carrier();
    let sets: Vec<MixedElement> = all.iter().copied().filter(MixedElement::is_set).collect();
    let classes: Vec<MixedElement> = all.iter().copied().filter(MixedElement::is_class).collect();
    let (top, bot, zero, one) = (m.top(), m.bot(), m.zero(), m.one());
    let plus = |a: &MixedElement, b: &MixedElement| m.oplus(a, b);
    let dot = |a: &MixedElement, b: &MixedElement| m.odot(a, b);
    let mut r = AxiomReport::new();

    r.push("type-1", scan1(&all, |x| (m.rightsquig(x, x) == top) != x.is_set()));
    r.push("type-2", scan1(&all, |x| m.partial_neg(x).is_ok() != x.is_class()));

    r.push("ov-1 double-sim", scan1(&all, |x| m.sim_neg(&m.sim_neg(x)) != *x));
    r.push("ov-1 LL", scan1(&all, |x| m.frak_l(&m.frak_l(x)) != m.frak_l(x)));
    r.push("ov-1 DL", scan1(&all, |x| m.blacklozenge(&m.frak_l(x)) != m.frak_l(x)));

    r.push("ov-2 Lx+x", scan1(&all, |x| plus(&m.frak_l(x), x) != *x));
    r.push("ov-2 Lx.x", scan1(&all, |x| dot(&m.frak_l(x), x) != m.frak_l(x)));
    r.push("ov-2 Dx+x", scan1(&all, |x| plus(&m.blacklozenge(x), x) != m.blacklozenge(x)));
    r.push("ov-2 Dx.x", scan1(&all, |x| dot(&m.blacklozenge(x), x) != *x));

    r.push("ov-3 LD", scan1(&all, |x| m.frak_l(&m.blacklozenge(x)) != m.blacklozenge(x)));
    r.push("ov-3 x+x", scan1(&all, |x| plus(x, x) != *x));
    r.push("ov-3 x.x", scan1(&all, |x| dot(x, x) != *x));

    r.push("qov-1 set", scan1(&sets, |x| plus(&m.sim_neg(x), x) != top));
    r.push(
        "qov-1 class",
        scan1(&classes, |x| plus(&m.sim_neg(&m.frak_l(x)), &m.frak_l(x)) != one),
    );
    r.push("qov-2 bot", (m.sim_neg(&bot) != top).then(|| vec![bot]));
    r.push("qov-2 zero", (m.sim_neg(&zero) != one).then(|| vec![zero]));

    r.push("u1 plus", scan2(&all, &all, |x, y| plus(x, &plus(x, &plus(x, y))) != plus(x, &plus(x, y))));
    r.push("u1 dot", scan2(&all, &all, |x, y| dot(x, &dot(x, &dot(x, y))) != dot(x, &dot(x, y))));
    r.push("u2 plus", scan2(&all, &all, |x, y| plus(x, y) != plus(y, x)));
    r.push("u2 dot", scan2(&all, &all, |x, y| dot(x, y) != dot(y, x)));

    for (tag, xs) in [(1, &sets), (2, &classes)] {
        let name = |base: &'static [&'static str; 2]| base[tag - 1];
        r.push(
            name(&["ter(11)", "ter(21)"]),
            scan3(xs, |x, y, z| plus(x, &plus(y, z)) != plus(&plus(x, y), z)),
        );
        r.push(
            name(&["ter(12)", "ter(22)"]),
            scan3(xs, |x, y, z| plus(x, &dot(y, z)) != dot(&plus(x, y), &plus(x, z))),
        );
        r.push(
            name(&["ter(13)", "ter(23)"]),
            scan3(xs, |x, y, z| dot(x, &dot(y, z)) != dot(&dot(x, y), z)),
        );
        r.push(
            name(&["bi(1)", "bi(2)"]),
            scan2(xs, xs, |x, y| {
                plus(x, &dot(x, y)) != *x || m.sim_neg(&dot(x, y)) != plus(&m.sim_neg(x), &m.sim_neg(y))
            }),
        );
    }

    r.push(
        "bm",
        scan2(&sets, &classes, |x, y| plus(x, y) == *y && plus(&m.blacklozenge(x), y) != *y),
    );
    r.push(
        "hra1",
        scan1(&sets, |x| !dot(&one, x).is_class() || !plus(x, &zero).is_class()),
    );
    r
}
