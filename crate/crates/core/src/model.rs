//! JSON model files.
//!
//! ```json
//! {
//!   "universe": ["a", "b", "c", "e", "f", "q"],
//!   "partition": ["abc", "ef", ["q"]]
//! }
//! ```
//!
//! Subsets are written either as concatenated atoms (`"abc"`, `"0"`, `"S"`)
//! or as atom arrays.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::approx::{ApproximationSpace, Subset, Universe};
use crate::error::{Error, Result};
use crate::granular::{GranularModel, OperatorTable};
use crate::negation::{BoundedPoset, UnaryOp};
use crate::opposition::CaseSpace;
use crate::prerough::FiniteAlgebraCandidate;
use crate::propsys::PropertySystem;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubsetSpec {
    Text(String),
    Atoms(Vec<String>),
}

impl SubsetSpec {
    pub fn resolve(&self, u: &Universe) -> Result<Subset> {
        match self {
            SubsetSpec::Text(s) => u.parse(s),
            SubsetSpec::Atoms(a) => u.subset_of(a),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PropertySystemSpec {
    pub objects: Vec<String>,
    pub properties: Vec<String>,
    /// `(object, property)`
    pub pairs: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetSpec {
    pub elements: Vec<String>,
    /// Generating `x ≤ y` pairs; reflexive-transitive closure is taken.
    #[serde(default)]
    pub leq: Vec<(String, String)>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub universe: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub partition: Option<Vec<SubsetSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation_pairs: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub granules: Option<Vec<SubsetSpec>>,
    /// Total tables, subset to subset.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower: Option<BTreeMap<String, SubsetSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub upper: Option<BTreeMap<String, SubsetSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub property_system: Option<PropertySystemSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case_spaces: Option<BTreeMap<String, CaseSpace>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<FiniteAlgebraCandidate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poset: Option<PosetSpec>,
    /// Element names; `null` leaves the value undefined.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub negation: Option<Vec<Option<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub interior: Option<Vec<String>>,
}

impl ModelFile {
    pub fn from_json(text: &str) -> Result<Self> {
        let m: ModelFile = serde_json::from_str(text).map_err(|e| Error::Model(e.to_string()))?;
        m.universe()?;
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("model serializes")
    }

    pub fn universe(&self) -> Result<Universe> {
        Universe::new(self.universe.iter())
    }

    pub fn space(&self) -> Result<ApproximationSpace> {
        let u = self.universe()?;
        match (&self.partition, &self.relation_pairs) {
            (Some(p), None) => {
                let blocks = p.iter().map(|b| b.resolve(&u)).collect::<Result<Vec<_>>>()?;
                ApproximationSpace::from_partition(u, blocks)
            }
            (None, Some(r)) => ApproximationSpace::from_pairs(u, r),
            _ => Err(Error::Model("give exactly one of `partition` and `relation_pairs`".into())),
        }
    }

    fn table(&self, u: &Universe, t: &BTreeMap<String, SubsetSpec>, name: &str) -> Result<OperatorTable> {
        let mut values = BTreeMap::new();
        for (k, v) in t {
            values.insert(u.parse(k)?, v.resolve(u)?);
        }
        if values.len() != 1usize << u.len() {
            return Err(Error::Model(format!(
                "`{name}` table has {} entries, needs {}",
                values.len(),
                1usize << u.len()
            )));
        }
        OperatorTable::from_fn(u, |x| values[&x])
    }

    /// Explicit tables and granules where given, the space's own otherwise.
    pub fn granular(&self) -> Result<GranularModel> {
        let u = self.universe()?;
        let has_space = self.partition.is_some() || self.relation_pairs.is_some();
        let space = if has_space { Some(self.space()?) } else { None };
        let need = |what: &str| Error::Model(format!("no `{what}` and no partition to derive it from"));
        let lower = match (&self.lower, &space) {
            (Some(t), _) => self.table(&u, t, "lower")?,
            (None, Some(s)) => OperatorTable::lower_of(s)?,
            (None, None) => return Err(need("lower")),
        };
        let upper = match (&self.upper, &space) {
            (Some(t), _) => self.table(&u, t, "upper")?,
            (None, Some(s)) => OperatorTable::upper_of(s)?,
            (None, None) => return Err(need("upper")),
        };
        let granules = match (&self.granules, &space) {
            (Some(g), _) => g.iter().map(|x| x.resolve(&u)).collect::<Result<Vec<_>>>()?,
            (None, Some(s)) => s.blocks().to_vec(),
            (None, None) => return Err(need("granules")),
        };
        GranularModel::new(u, granules, lower, upper)
    }

    pub fn property_system(&self) -> Result<PropertySystem> {
        let p = self
            .property_system
            .as_ref()
            .ok_or_else(|| Error::Model("model has no `property_system`".into()))?;
        PropertySystem::new(Universe::new(p.objects.iter())?, Universe::new(p.properties.iter())?, &p.pairs)
    }

    pub fn case_space(&self, name: &str) -> Result<CaseSpace> {
        let cs = self
            .case_spaces
            .as_ref()
            .and_then(|m| m.get(name))
            .ok_or_else(|| Error::Model(format!("model has no case space `{name}`")))?;
        cs.validate()?;
        Ok(cs.clone())
    }

    pub fn algebra(&self) -> Result<FiniteAlgebraCandidate> {
        let a = self.algebra.clone().ok_or_else(|| Error::Model("model has no `algebra`".into()))?;
        a.validate().map_err(Error::Model)?;
        Ok(a)
    }

    pub fn poset(&self) -> Result<BoundedPoset> {
        let p = self.poset.as_ref().ok_or_else(|| Error::Model("model has no `poset`".into()))?;
        BoundedPoset::from_pairs(p.elements.clone(), &p.leq)
    }

    fn element(p: &BoundedPoset, name: &str) -> Result<usize> {
        p.index_of(name).ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn negation(&self, p: &BoundedPoset) -> Result<UnaryOp> {
        let f = self.negation.as_ref().ok_or_else(|| Error::Model("model has no `negation`".into()))?;
        if f.len() != p.len() {
            return Err(Error::Model(format!("`negation` needs {} values", p.len())));
        }
        f.iter().map(|v| v.as_deref().map(|n| Self::element(p, n)).transpose()).collect()
    }

    pub fn interior(&self, p: &BoundedPoset) -> Result<Option<Vec<usize>>> {
        let Some(i) = &self.interior else { return Ok(None) };
        if i.len() != p.len() {
            return Err(Error::Model(format!("`interior` needs {} values", p.len())));
        }
        i.iter().map(|n| Self::element(p, n)).collect::<Result<Vec<_>>>().map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_or_pairs() {
        let m = ModelFile::from_json(r#"{"universe":["a","b","c","e","f","q"],"partition":["abc",["e","f"],"q"]}"#).unwrap();
        let sp = m.space().unwrap();
        assert_eq!(sp.blocks().len(), 3);
        let m2 = ModelFile::from_json(r#"{"universe":["a","b","c","e","f","q"],"relation_pairs":[["a","b"],["b","c"],["e","f"]]}"#).unwrap();
        assert_eq!(m2.space().unwrap().blocks(), sp.blocks());
        let both = ModelFile {
            partition: m.partition.clone(),
            ..m2.clone()
        };
        assert!(matches!(both.space(), Err(Error::Model(_))));
        assert!(ModelFile::from_json(r#"{"universe":["a"],"bogus":1}"#).is_err());
        assert!(m.granular().is_ok());
    }

    #[test]
    fn tables_must_be_total() {
        let mut m = ModelFile::from_json(r#"{"universe":["a","b"],"granules":["a","b"]}"#).unwrap();
        m.lower = Some([("0".to_string(), SubsetSpec::Text("0".into()))].into_iter().collect());
        m.upper = m.lower.clone();
        assert!(matches!(m.granular(), Err(Error::Model(_))));
    }

    #[test]
    fn poset_and_negation() {
        let m = ModelFile::from_json(
            r#"{"universe":["x"],"partition":["x"],
                "poset":{"elements":["0","m","1"],"leq":[["0","m"],["m","1"]]},
                "negation":["1",null,"0"]}"#,
        )
        .unwrap();
        let p = m.poset().unwrap();
        assert_eq!(m.negation(&p).unwrap(), vec![Some(2), None, Some(0)]);
        assert_eq!(m.interior(&p).unwrap(), None);
    }
}
