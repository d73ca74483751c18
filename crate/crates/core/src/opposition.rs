//! Figures of opposition, reference truth tables, combination profiles,
//! the hexagon of a rough tri-partition and truth-grade walks.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::approx::{ApproximationSpace, Subset};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Figure {
    Contradiction,
    Contrariety,
    SubContrariety,
    SubAlternation,
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Figure::Contradiction => "Contradiction",
            Figure::Contrariety => "Contrariety",
            Figure::SubContrariety => "Sub-Contrariety",
            Figure::SubAlternation => "Sub-alternation",
        })
    }
}

/// The figure determined by whether two sentences can be true together
/// and whether they can be false together.
pub fn classify_from_questions(tt_possible: bool, ff_possible: bool) -> Figure {
    match (tt_possible, ff_possible) {
        (true, true) => Figure::SubAlternation,
        (true, false) => Figure::SubContrariety,
        (false, true) => Figure::Contrariety,
        (false, false) => Figure::Contradiction,
    }
}

/// Which of the rows TT, TF, FT, FF occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RowProfile {
    pub tt: bool,
    pub tf: bool,
    pub ft: bool,
    pub ff: bool,
}

impl RowProfile {
    pub fn rows(&self) -> [(&'static str, bool); 4] {
        [("TT", self.tt), ("TF", self.tf), ("FT", self.ft), ("FF", self.ff)]
    }
}

impl fmt::Display for RowProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self
            .rows()
            .iter()
            .map(|(k, v)| format!("{k}:{}", if *v { "T" } else { "NP" }))
            .collect();
        f.write_str(&cells.join(" "))
    }
}

/// A Belnap-style truth pair: `t` says the sentence is true, `f` that it is false.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruthPair {
    pub t: bool,
    pub f: bool,
}

impl TruthPair {
    pub fn classical(v: bool) -> Self {
        Self { t: v, f: !v }
    }

    pub fn is_classical(&self) -> bool {
        self.t != self.f
    }
}

/// Dialectical annotations: sentences marked as expressing dialectical
/// opposition, and ordered sentence pairs marked as dialectically opposed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Annotations {
    #[serde(default)]
    pub beta: Vec<String>,
    #[serde(default)]
    pub beth: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CaseSpace {
    pub worlds: Vec<String>,
    pub sentences: Vec<String>,
    /// `valuation[w][s]`
    pub valuation: Vec<Vec<TruthPair>>,
    #[serde(default)]
    pub annotations: Option<Annotations>,
}

impl CaseSpace {
    pub fn new(worlds: Vec<String>, sentences: Vec<String>, valuation: Vec<Vec<TruthPair>>) -> Result<Self> {
        let cs = Self {
            worlds,
            sentences,
            valuation,
            annotations: None,
        };
        cs.validate()?;
        Ok(cs)
    }

    pub fn with_annotations(mut self, a: Annotations) -> Self {
        self.annotations = Some(a);
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.worlds.is_empty() {
            return Err(Error::Model("case space needs at least one world".into()));
        }
        if self.valuation.len() != self.worlds.len() || self.valuation.iter().any(|r| r.len() != self.sentences.len()) {
            return Err(Error::Model("every sentence must be valued in every world".into()));
        }
        if let Some(a) = &self.annotations {
            for s in a.beta.iter().chain(a.beth.iter().flat_map(|(x, y)| [x, y])) {
                self.sentence(s)?;
            }
        }
        Ok(())
    }

    pub fn sentence(&self, name: &str) -> Result<usize> {
        self.sentences
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownSentence(name.to_string()))
    }

    /// Membership sentences `x ∈ N` over worlds = atoms of the space.
    pub fn membership(space: &ApproximationSpace, nodes: &[(String, Subset)]) -> Self {
        let atoms = space.universe().atoms().to_vec();
        let valuation = (0..atoms.len())
            .map(|w| nodes.iter().map(|(_, s)| TruthPair::classical(s.contains(w))).collect())
            .collect();
        Self {
            worlds: atoms,
            sentences: nodes.iter().map(|(n, _)| n.clone()).collect(),
            valuation,
            annotations: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValuationMode {
    /// Every pair must be `(1,0)` or `(0,1)`.
    Classical,
    /// Any pair, read through its `t` component.
    Belnap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    pub figure: Figure,
    pub rows: RowProfile,
}

pub fn classify_pair(cs: &CaseSpace, a: &str, b: &str, mode: ValuationMode) -> Result<PairClassification> {
    let (ia, ib) = (cs.sentence(a)?, cs.sentence(b)?);
    if mode == ValuationMode::Classical {
        for (w, row) in cs.valuation.iter().enumerate() {
            for i in [ia, ib] {
                if !row[i].is_classical() {
                    return Err(Error::NonClassicalValuation {
                        sentence: cs.sentences[i].clone(),
                        world: cs.worlds[w].clone(),
                    });
                }
            }
        }
    }
    let seen = |x: bool, y: bool| cs.valuation.iter().any(|r| r[ia].t == x && r[ib].t == y);
    let rows = RowProfile {
        tt: seen(true, true),
        tf: seen(true, false),
        ft: seen(false, true),
        ff: seen(false, false),
    };
    Ok(PairClassification {
        figure: classify_from_questions(rows.tt, rows.ff),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Hexagon {
    pub nodes: Vec<(String, Subset)>,
    /// One entry per unordered pair of nodes, in node order.
    pub pairs: Vec<(usize, usize, PairClassification)>,
    pub warning: Option<String>,
}

impl Hexagon {
    pub fn figure(&self, a: &str, b: &str) -> Option<Figure> {
        let ia = self.nodes.iter().position(|(n, _)| n == a)?;
        let ib = self.nodes.iter().position(|(n, _)| n == b)?;
        self.pairs
            .iter()
            .find(|(i, j, _)| (*i, *j) == (ia.min(ib), ia.max(ib)))
            .map(|(_, _, c)| c.figure)
    }
}

/// The tri-partition of `X` into lower region, boundary and exterior, with
/// the three derived nodes, and the figure between every pair.
pub fn hexagon(space: &ApproximationSpace, x: Subset) -> Result<Hexagon> {
    let (l, u) = (space.lower(x)?, space.upper(x)?);
    let b = u.difference(l);
    let e = u.complement();
    let nodes = vec![
        ("L".to_string(), l),
        ("E".to_string(), e),
        ("B".to_string(), b),
        ("U".to_string(), u),
        ("Lc".to_string(), l.complement()),
        ("LE".to_string(), l.union(e)),
    ];
    let empty: Vec<&str> = nodes[..3].iter().filter(|(_, s)| s.is_empty()).map(|(n, _)| n.as_str()).collect();
    let warning = (!empty.is_empty()).then(|| format!("degenerate partition: {} empty", empty.join(", ")));
    let cs = CaseSpace::membership(space, &nodes);
    let mut pairs = Vec::new();
    for i in 0..nodes.len() {
        for j in i + 1..nodes.len() {
            pairs.push((i, j, classify_pair(&cs, &nodes[i].0, &nodes[j].0, ValuationMode::Classical)?));
        }
    }
    Ok(Hexagon { nodes, pairs, warning })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Entry {
    T,
    F,
    NP,
    IN,
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableKind {
    /// All four rows.
    Full,
    /// Only the TT and FF rows.
    Simultaneity,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReferenceTable {
    pub number: u8,
    pub left: &'static str,
    pub right: &'static str,
    pub kind: TableKind,
    pub caption: &'static str,
    /// `None` where the caption itself is tentative.
    pub figure: Option<Figure>,
    /// `(left value, right value, entry)`
    pub rows: Vec<(bool, bool, Entry)>,
}

impl ReferenceTable {
    pub fn entry(&self, left: bool, right: bool) -> Option<Entry> {
        self.rows.iter().find(|(a, b, _)| (*a, *b) == (left, right)).map(|r| r.2)
    }
}

fn full(number: u8, left: &'static str, right: &'static str, caption: &'static str, figure: Option<Figure>, e: [Entry; 4]) -> ReferenceTable {
    ReferenceTable {
        number,
        left,
        right,
        kind: TableKind::Full,
        caption,
        figure,
        rows: vec![(true, true, e[0]), (true, false, e[1]), (false, true, e[2]), (false, false, e[3])],
    }
}

fn sim(number: u8, left: &'static str, right: &'static str, caption: &'static str, figure: Figure, e: [Entry; 2]) -> ReferenceTable {
    ReferenceTable {
        number,
        left,
        right,
        kind: TableKind::Simultaneity,
        caption,
        figure: Some(figure),
        rows: vec![(true, true, e[0]), (false, false, e[1])],
    }
}

/// The twelve tables for apparent and certain parthood predicates.
pub fn reference_tables() -> Vec<ReferenceTable> {
    use Entry::*;
    use Figure::*;
    vec![
        full(7, "AP", "APN", "Contradiction?", None, [IN, T, T, IN]),
        full(8, "AP", "AP0", "Contradiction?", None, [IN, T, T, IN]),
        full(9, "CP", "CPN", "Contradiction", Some(Contradiction), [NP, T, T, NP]),
        full(10, "CP", "CP0", "Contrariety", Some(Contrariety), [NP, T, T, T]),
        full(11, "CPN", "CP0", "Contradiction", Some(Contradiction), [NP, T, T, NP]),
        full(12, "CI", "CP", "Sub-alternation", Some(SubAlternation), [T, NP, T, T]),
        sim(13, "AP", "APN", "Contradiction", Contradiction, [NP, NP]),
        sim(14, "AP", "AP0", "Sub-Contrariety", SubContrariety, [T, NP]),
        sim(15, "CP", "CPN", "Contradiction", Contradiction, [NP, NP]),
        sim(16, "CP", "CP0", "Contradiction", Contradiction, [NP, NP]),
        sim(17, "CPN", "CP0", "Contradiction", Contradiction, [NP, NP]),
        sim(18, "CI", "CP", "Sub-alternation", SubAlternation, [T, T]),
    ]
}

pub fn reference_table(number: u8) -> Option<ReferenceTable> {
    reference_tables().into_iter().find(|t| t.number == number)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JointConsistency {
    pub satisfiable: bool,
    pub predicates: Vec<String>,
    /// Assignments allowed by every NP (and F) cell.
    pub worlds: Vec<BTreeMap<String, bool>>,
    /// A `T` row that no allowed world realizes, as `(table, left, right)`.
    pub unrealized: Option<(u8, bool, bool)>,
}

/// Searches the two-valued assignments to the predicates named by the
/// tables. NP and F cells forbid their row, T cells demand some allowed
/// assignment realizing it, IN cells constrain nothing.
pub fn joint_consistency(tables: &[ReferenceTable]) -> JointConsistency {
    let preds: Vec<String> = tables
        .iter()
        .flat_map(|t| [t.left, t.right])
        .map(String::from)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let pos = |p: &str| preds.iter().position(|x| x == p).expect("collected");
    let mut worlds = Vec::new();
    for code in 0u32..(1 << preds.len()) {
        let v = |p: &str| code >> pos(p) & 1 == 1;
        let ok = tables.iter().all(|t| {
            t.rows
                .iter()
                .all(|(a, b, e)| !(matches!(e, Entry::NP | Entry::F) && v(t.left) == *a && v(t.right) == *b))
        });
        if ok {
            worlds.push(code);
        }
    }
    let unrealized = tables.iter().find_map(|t| {
        t.rows
            .iter()
            .filter(|(_, _, e)| *e == Entry::T)
            .find(|(a, b, _)| {
                !worlds
                    .iter()
                    .any(|&w| (w >> pos(t.left) & 1 == 1) == *a && (w >> pos(t.right) & 1 == 1) == *b)
            })
            .map(|(a, b, _)| (t.number, *a, *b))
    });
    let satisfiable = (tables.is_empty() || !worlds.is_empty()) && unrealized.is_none();
    JointConsistency {
        satisfiable,
        worlds: worlds
            .into_iter()
            .map(|w| preds.iter().enumerate().map(|(i, p)| (p.clone(), w >> i & 1 == 1)).collect())
            .collect(),
        predicates: preds,
        unrealized,
    }
}

/// Labels a sentence can carry in one world.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    T,
    F,
    Beth,
    Delta,
    Beta,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::T => "T",
            Label::F => "F",
            Label::Beth => "ℶ",
            Label::Delta => "δ",
            Label::Beta => "β",
        })
    }
}

/// The twelve columns of potential combinations.
pub const COMBINATION_COLUMNS: [(Label, Label); 12] = [
    (Label::T, Label::T),
    (Label::F, Label::F),
    (Label::Beth, Label::Beth),
    (Label::Delta, Label::Delta),
    (Label::Delta, Label::Beth),
    (Label::Beta, Label::Beta),
    (Label::Beta, Label::Beth),
    (Label::Beta, Label::T),
    (Label::Beta, Label::F),
    (Label::Delta, Label::T),
    (Label::Delta, Label::F),
    (Label::Delta, Label::Beta),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CombinationProfile {
    /// Realized columns in column order.
    pub columns: Vec<(Label, Label)>,
    /// Every realized pair over the plain labels `T`, `F`.
    pub basic: Vec<(Label, Label)>,
}

/// Which label combinations some world realizes. `T`/`F` follow the `t`/`f`
/// components, `δ` marks the pair `(1,1)`, `β` and `ℶ` are read from the
/// annotations and attach only where the sentence is true.
pub fn combination_profile(cs: &CaseSpace, a: &str, b: &str) -> Result<CombinationProfile> {
    let ann = cs
        .annotations
        .as_ref()
        .ok_or_else(|| Error::MissingAnnotation("the case space carries no dialectical annotations".into()))?;
    let (ia, ib) = (cs.sentence(a)?, cs.sentence(b)?);
    let opposed = ann.beth.iter().any(|(x, y)| (x == a && y == b) || (x == b && y == a));
    let labels = |row: &[TruthPair], i: usize, name: &str| -> BTreeSet<Label> {
        let v = row[i];
        let mut s = BTreeSet::new();
        if v.t {
            s.insert(Label::T);
        }
        if v.f {
            s.insert(Label::F);
        }
        if v.t && v.f {
            s.insert(Label::Delta);
        }
        if v.t && ann.beta.iter().any(|x| x == name) {
            s.insert(Label::Beta);
        }
        if v.t && opposed {
            s.insert(Label::Beth);
        }
        s
    };
    let mut realized = BTreeSet::new();
    for row in &cs.valuation {
        let (la, lb) = (labels(row, ia, a), labels(row, ib, b));
        for x in &la {
            for y in &lb {
                realized.insert((*x, *y));
            }
        }
    }
    Ok(CombinationProfile {
        columns: COMBINATION_COLUMNS.iter().copied().filter(|c| realized.contains(c)).collect(),
        basic: realized
            .iter()
            .copied()
            .filter(|(x, y)| matches!(x, Label::T | Label::F) && matches!(y, Label::T | Label::F))
            .collect(),
    })
}

/// Grades of the weak and strong truth graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum TruthGrade {
    /// `T*`
    TopStrong,
    /// `T_*`
    Strong,
    T,
    /// `T^⊖`
    WeakTrue,
    /// `T_⊖`
    WeakerTrue,
    /// `F^⊖`
    WeakFalse,
    /// `F_⊖`
    WeakerFalse,
    F,
}

impl TruthGrade {
    pub const ALL: [TruthGrade; 8] = [
        TruthGrade::TopStrong,
        TruthGrade::Strong,
        TruthGrade::T,
        TruthGrade::WeakTrue,
        TruthGrade::WeakerTrue,
        TruthGrade::WeakFalse,
        TruthGrade::WeakerFalse,
        TruthGrade::F,
    ];

    /// The directed edges of the graph.
    pub fn edges() -> [(TruthGrade, TruthGrade); 8] {
        use TruthGrade::*;
        [
            (TopStrong, Strong),
            (Strong, T),
            (T, WeakFalse),
            (WeakFalse, WeakerFalse),
            (WeakerFalse, F),
            (T, WeakTrue),
            (WeakTrue, WeakerTrue),
            (WeakerTrue, F),
        ]
    }

    pub fn symbol(self) -> &'static str {
        match self {
            TruthGrade::TopStrong => "T*",
            TruthGrade::Strong => "T_*",
            TruthGrade::T => "T",
            TruthGrade::WeakTrue => "T^-",
            TruthGrade::WeakerTrue => "T_-",
            TruthGrade::WeakFalse => "F^-",
            TruthGrade::WeakerFalse => "F_-",
            TruthGrade::F => "F",
        }
    }
}

impl fmt::Display for TruthGrade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for TruthGrade {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace('⊖', "-");
        TruthGrade::ALL
            .into_iter()
            .find(|g| g.symbol() == norm)
            .ok_or_else(|| Error::Model(format!("unknown truth grade `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evidence {
    Support,
    Oppose,
}

impl FromStr for Evidence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "support" | "+" => Ok(Evidence::Support),
            "oppose" | "-" => Ok(Evidence::Oppose),
            _ => Err(Error::Model(format!("unknown evidence `{s}`"))),
        }
    }
}

/// Which side of the graph a step takes where the graph forks: at `T`
/// when opposed, at `F` when supported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BranchPolicy {
    /// Through `F^⊖`, `F_⊖`.
    #[default]
    Falsity,
    /// Through `T^⊖`, `T_⊖`.
    Truth,
}

/// Support moves one step against the edges, opposition one step along
/// them; the ends saturate.
pub fn tsr_step(grade: TruthGrade, evidence: Evidence, policy: BranchPolicy) -> TruthGrade {
    use TruthGrade::*;
    match (evidence, grade) {
        (Evidence::Oppose, T) => match policy {
            BranchPolicy::Falsity => WeakFalse,
            BranchPolicy::Truth => WeakTrue,
        },
        (Evidence::Support, F) => match policy {
            BranchPolicy::Falsity => WeakerFalse,
            BranchPolicy::Truth => WeakerTrue,
        },
        (Evidence::Oppose, g) => TruthGrade::edges().iter().find(|(a, _)| *a == g).map(|e| e.1).unwrap_or(g),
        (Evidence::Support, g) => TruthGrade::edges().iter().find(|(_, b)| *b == g).map(|e| e.0).unwrap_or(g),
    }
}

/// Every grade visited, starting with `start`.
pub fn tsr_walk(start: TruthGrade, evidence: &[Evidence], policy: BranchPolicy) -> Vec<TruthGrade> {
    let mut out = vec![start];
    for e in evidence {
        let next = tsr_step(*out.last().unwrap(), *e, policy);
        out.push(next);
    }
    out
}
