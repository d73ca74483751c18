//! The parthood catalog and order-theoretic analysis of each relation.

use std::fmt;
use std::str::FromStr;

use crate::approx::{ApproximationSpace, Subset};
use crate::cera::{CeraModel, MixedElement};
use crate::crad::{CradModel, DialecticalPair};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParthoodKind {
    VeryCautious,
    Cautious,
    Lateral,
    Possibilist,
    UltraCautious,
    LateralPlus,
    Bilateral,
    LateralPlusPlus,
    GSimple,
    RoughlyConsistent,
    Additive,
    Common,
    NaturalCrad,
}

/// The carrier a parthood is defined on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Carrier {
    Sets,
    Mixed,
    Pairs,
}

impl ParthoodKind {
    pub const ALL: [ParthoodKind; 13] = [
        ParthoodKind::VeryCautious,
        ParthoodKind::Cautious,
        ParthoodKind::Lateral,
        ParthoodKind::Possibilist,
        ParthoodKind::UltraCautious,
        ParthoodKind::LateralPlus,
        ParthoodKind::Bilateral,
        ParthoodKind::LateralPlusPlus,
        ParthoodKind::GSimple,
        ParthoodKind::RoughlyConsistent,
        ParthoodKind::Additive,
        ParthoodKind::Common,
        ParthoodKind::NaturalCrad,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParthoodKind::VeryCautious => "very-cautious",
            ParthoodKind::Cautious => "cautious",
            ParthoodKind::Lateral => "lateral",
            ParthoodKind::Possibilist => "possibilist",
            ParthoodKind::UltraCautious => "ultra-cautious",
            ParthoodKind::LateralPlus => "lateral-plus",
            ParthoodKind::Bilateral => "bilateral",
            ParthoodKind::LateralPlusPlus => "lateral-plus-plus",
            ParthoodKind::GSimple => "g-simple",
            ParthoodKind::RoughlyConsistent => "roughly-consistent",
            ParthoodKind::Additive => "additive",
            ParthoodKind::Common => "common",
            ParthoodKind::NaturalCrad => "natural",
        }
    }

    pub fn carrier(self) -> Carrier {
        match self {
            ParthoodKind::RoughlyConsistent | ParthoodKind::Additive | ParthoodKind::Common => Carrier::Mixed,
            ParthoodKind::NaturalCrad => Carrier::Pairs,
            _ => Carrier::Sets,
        }
    }
}

impl fmt::Display for ParthoodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParthoodKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace(['_', ' '], "-");
        ParthoodKind::ALL
            .into_iter()
            .find(|k| k.name() == key || format!("{k:?}").to_ascii_lowercase() == key.replace('-', ""))
            .ok_or_else(|| Error::Model(format!("unknown parthood kind `{s}`")))
    }
}

/// Evaluates a set-carrier kind with arbitrary operators. Returns `None` for
/// kinds that live on another carrier.
pub fn holds_on_sets(
    kind: ParthoodKind,
    lower: impl Fn(Subset) -> Subset,
    upper: impl Fn(Subset) -> Subset,
    granules: &[Subset],
    a: Subset,
    b: Subset,
) -> Option<bool> {
    let (al, au, bl, bu) = (lower(a), upper(a), lower(b), upper(b));
    let (abd, bbd) = (au.difference(al), bu.difference(bl));
    Some(match kind {
        ParthoodKind::VeryCautious => al.is_subset(bl),
        ParthoodKind::Cautious => al.is_subset(bu),
        ParthoodKind::Lateral => al.is_subset(bbd),
        ParthoodKind::Possibilist => au.is_subset(bu),
        ParthoodKind::UltraCautious => au.is_subset(bl),
        ParthoodKind::LateralPlus => au.is_subset(bbd),
        ParthoodKind::Bilateral => abd.is_subset(bbd),
        ParthoodKind::LateralPlusPlus => abd.is_subset(bl),
        ParthoodKind::GSimple => granules.iter().all(|g| !g.is_subset(a) || g.is_subset(b)),
        _ => return None,
    })
}

/// An argument to a parthood on any of the three carriers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Term {
    Set(Subset),
    Mixed(MixedElement),
    Pair(DialecticalPair),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub reflexive: bool,
    pub transitive: bool,
    pub antisymmetric: bool,
    pub reflexive_witness: Option<Term>,
    pub transitive_witness: Option<[Term; 3]>,
    pub antisymmetric_witness: Option<[Term; 2]>,
}

/// Default bound on carrier size for matrices and analyses.
pub const CARRIER_CAP: usize = 4096;

/// The example space (or any space) with its granules and derived models.
#[derive(Debug, Clone)]
pub struct ParthoodModel {
    space: ApproximationSpace,
    granules: Vec<Subset>,
    crad: CradModel,
}

impl ParthoodModel {
    /// Granules default to the blocks of the space.
    pub fn new(space: &ApproximationSpace) -> Self {
        Self::with_granules(space, space.blocks().to_vec())
    }

    pub fn with_granules(space: &ApproximationSpace, granules: Vec<Subset>) -> Self {
        Self {
            space: space.clone(),
            granules,
            crad: CradModel::new(CeraModel::new(space)),
        }
    }

    pub fn space(&self) -> &ApproximationSpace {
        &self.space
    }

    pub fn cera(&self) -> &CeraModel {
        self.crad.cera()
    }

    pub fn crad(&self) -> &CradModel {
        &self.crad
    }

    /// Literal evaluation of the defining condition.
    pub fn holds(&self, kind: ParthoodKind, a: &Term, b: &Term) -> Result<bool> {
        let sp = &self.space;
        match (kind.carrier(), a, b) {
            (Carrier::Sets, Term::Set(x), Term::Set(y)) => {
                sp.universe().check(*x)?;
                sp.universe().check(*y)?;
                Ok(holds_on_sets(kind, |s| sp.l(s), |s| sp.u(s), &self.granules, *x, *y).expect("set kind"))
            }
            (Carrier::Mixed, Term::Mixed(x), Term::Mixed(y)) => {
                let c = self.cera();
                c.validate(x)?;
                c.validate(y)?;
                Ok(match kind {
                    ParthoodKind::RoughlyConsistent => self.class_of(x).leq(&self.class_of(y)),
                    ParthoodKind::Additive => c.oplus(x, y) == *y,
                    _ => c.odot(x, y) == *x,
                })
            }
            (Carrier::Mixed, Term::Set(x), Term::Set(y)) => {
                self.holds(kind, &Term::Mixed(MixedElement::Set(*x)), &Term::Mixed(MixedElement::Set(*y)))
            }
            (Carrier::Pairs, Term::Pair(p), Term::Pair(q)) => {
                if !self.crad.contains(p) || !self.crad.contains(q) {
                    return Err(Error::CarrierMismatch("argument is not in K".into()));
                }
                Ok(self.crad.natural_parthood(p, q))
            }
            _ => Err(Error::CarrierMismatch(format!("{kind} is not defined on these arguments"))),
        }
    }

    fn class_of(&self, m: &MixedElement) -> crate::approx::RoughClass {
        match m {
            MixedElement::Set(x) => self.space.class_of(*x),
            MixedElement::Class(c) => *c,
        }
    }

    /// The elements of a kind's carrier in a fixed order.
    pub fn carrier(&self, kind: ParthoodKind, cap: usize) -> Result<Vec<Term>> {
        self.space.universe().ensure_enumerable()?;
        let out: Vec<Term> = match kind.carrier() {
            Carrier::Sets => self.space.universe().subsets().map(Term::Set).collect(),
            Carrier::Mixed => self.cera().carrier().into_iter().map(Term::Mixed).collect(),
            Carrier::Pairs => self.crad.k().into_iter().map(Term::Pair).collect(),
        };
        if out.len() > cap {
            return Err(Error::CarrierTooLarge { size: out.len(), cap });
        }
        Ok(out)
    }

    pub fn relation_matrix(&self, kind: ParthoodKind, cap: usize) -> Result<(Vec<Term>, Vec<Vec<bool>>)> {
        let elems = self.carrier(kind, cap)?;
        let m = elems
            .iter()
            .map(|a| elems.iter().map(|b| self.holds(kind, a, b)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok((elems, m))
    }

    pub fn analyze(&self, kind: ParthoodKind, cap: usize) -> Result<RelationReport> {
        let (e, m) = self.relation_matrix(kind, cap)?;
        let n = e.len();
        let refl = (0..n).find(|&i| !m[i][i]);
        let anti = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && m[i][j] && m[j][i]);
        let mut trans = None;
        'outer: for i in 0..n {
            for j in 0..n {
                if !m[i][j] {
                    continue;
                }
                for k in 0..n {
                    if m[j][k] && !m[i][k] {
                        trans = Some([e[i], e[j], e[k]]);
                        break 'outer;
                    }
                }
            }
        }
        Ok(RelationReport {
            reflexive: refl.is_none(),
            transitive: trans.is_none(),
            antisymmetric: anti.is_none(),
            reflexive_witness: refl.map(|i| e[i]),
            transitive_witness: trans,
            antisymmetric_witness: anti.map(|(i, j)| [e[i], e[j]]),
        })
    }

    pub fn render(&self, t: &Term) -> String {
        match t {
            Term::Set(x) => self.space.render(*x),
            Term::Mixed(m) => self.cera().render(m),
            Term::Pair(p) => self.crad.render(p),
        }
    }

    /// Reads an argument for the given kind: subsets, `[x]` classes, or pairs.
    pub fn parse_term(&self, kind: ParthoodKind, s: &str) -> Result<Term> {
        let s = s.trim();
        match kind.carrier() {
            Carrier::Sets => Ok(Term::Set(self.space.parse(s)?)),
            Carrier::Mixed => {
                if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
                    Ok(Term::Mixed(self.cera().class_of(self.space.parse(body.trim())?)))
                } else {
                    Ok(Term::Mixed(MixedElement::Set(self.space.parse(s)?)))
                }
            }
            Carrier::Pairs => Ok(Term::Pair(self.crad.parse_pair(s)?)),
        }
    }
}
