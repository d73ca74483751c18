//! Primitive counting of indiscernibles and the square of discernibility.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::opposition::{classify_pair, CaseSpace, PairClassification, TruthPair, ValuationMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum ClosureMode {
    /// Reflexive, symmetric and transitive.
    #[default]
    Equivalence,
    ReflexiveTransitive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndiscernibilityRelation {
    elements: Vec<String>,
    mode: ClosureMode,
    related: Vec<Vec<bool>>,
}

impl IndiscernibilityRelation {
    /// Closes the generating pairs over `elements` according to `mode`.
    pub fn close(elements: &[String], pairs: &[(String, String)], mode: ClosureMode) -> Result<Self> {
        let n = elements.len();
        let pos = |x: &str| {
            elements
                .iter()
                .position(|e| e == x)
                .ok_or_else(|| Error::UnknownElement(x.to_string()))
        };
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b) in pairs {
            let (i, j) = (pos(a)?, pos(b)?);
            r[i][j] = true;
            if mode == ClosureMode::Equivalence {
                r[j][i] = true;
            }
        }
        for k in 0..n {
            let via = r[k].clone();
            for row in r.iter_mut() {
                if row[k] {
                    for (cell, &kj) in row.iter_mut().zip(&via) {
                        *cell |= kj;
                    }
                }
            }
        }
        Ok(Self {
            elements: elements.to_vec(),
            mode,
            related: r,
        })
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn mode(&self) -> ClosureMode {
        self.mode
    }

    pub fn index_of(&self, x: &str) -> Result<usize> {
        self.elements
            .iter()
            .position(|e| e == x)
            .ok_or_else(|| Error::UnknownElement(x.to_string()))
    }

    pub fn related(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.related[self.index_of(a)?][self.index_of(b)?])
    }

    pub fn related_idx(&self, i: usize, j: usize) -> bool {
        self.related[i][j]
    }
}

/// `r_j`: the `r`-th count within block `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct CountTag {
    pub value: u32,
    pub block: u32,
}

impl CountTag {
    pub fn subscript(&self) -> String {
        const DIGITS: [char; 10] = ['₀', '₁', '₂', '₃', '₄', '₅', '₆', '₇', '₈', '₉'];
        let sub: String = self.block.to_string().chars().map(|c| DIGITS[c as usize - '0' as usize]).collect();
        format!("{}{sub}", self.value)
    }
}

impl fmt::Display for CountTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.value, self.block)
    }
}

/// The first element gets `1_1`. An element related to the one before it
/// opens the next block at `1`; otherwise the count goes up by one.
pub fn ipc(sequence: &[String], rel: &IndiscernibilityRelation) -> Result<Vec<CountTag>> {
    let idx = sequence.iter().map(|x| rel.index_of(x)).collect::<Result<Vec<_>>>()?;
    let mut out: Vec<CountTag> = Vec::with_capacity(idx.len());
    for (k, &i) in idx.iter().enumerate() {
        let tag = match out.last() {
            None => CountTag { value: 1, block: 1 },
            Some(prev) if rel.related_idx(idx[k - 1], i) => CountTag {
                value: 1,
                block: prev.block + 1,
            },
            Some(prev) => CountTag {
                value: prev.value + 1,
                block: prev.block,
            },
        };
        out.push(tag);
    }
    Ok(out)
}

/// Parses `a-b,b-c` into pairs.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|p| {
            let (a, b) = p.split_once('-').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("expected `x-y`, found `{p}`"),
            })?;
            Ok((a.trim().to_string(), b.trim().to_string()))
        })
        .collect()
}

pub const SQUARE_PREDICATES: [&str; 4] = ["IS", "IS.NOT", "IND", "DIS"];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiscernibilitySquare {
    pub elements: Vec<String>,
    /// `values[p][i][j]` for predicate `SQUARE_PREDICATES[p]`.
    pub values: Vec<Vec<Vec<bool>>>,
    pub figures: Vec<(&'static str, &'static str, PairClassification)>,
}

impl DiscernibilitySquare {
    pub fn figure(&self, a: &str, b: &str) -> Option<PairClassification> {
        self.figures
            .iter()
            .find(|(x, y, _)| (*x == a && *y == b) || (*x == b && *y == a))
            .map(|f| f.2)
    }
}

/// The four predicates over ordered pairs, with the figure between each two
/// of them taken over all ordered pairs as worlds.
pub fn discernibility_square(rel: &IndiscernibilityRelation) -> DiscernibilitySquare {
    let n = rel.elements.len();
    let grid = |f: &dyn Fn(usize, usize) -> bool| -> Vec<Vec<bool>> {
        (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect()
    };
    let values = vec![
        grid(&|i, j| i == j),
        grid(&|i, j| i != j),
        grid(&|i, j| rel.related[i][j]),
        grid(&|i, j| !rel.related[i][j]),
    ];
    let mut worlds = Vec::new();
    let mut valuation = Vec::new();
    for i in 0..n {
        for j in 0..n {
            worlds.push(format!("({},{})", rel.elements[i], rel.elements[j]));
            valuation.push(values.iter().map(|v| TruthPair::classical(v[i][j])).collect());
        }
    }
    let mut figures = Vec::new();
    if n > 0 {
        let cs = CaseSpace::new(worlds, SQUARE_PREDICATES.iter().map(|s| s.to_string()).collect(), valuation)
            .expect("well formed");
        for (a, &x) in SQUARE_PREDICATES.iter().enumerate() {
            for &y in &SQUARE_PREDICATES[a + 1..] {
                let c = classify_pair(&cs, x, y, ValuationMode::Classical).expect("classical");
                figures.push((x, y, c));
            }
        }
    }
    DiscernibilitySquare {
        elements: rel.elements.clone(),
        values,
        figures,
    }
}
