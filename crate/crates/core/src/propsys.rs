//! Property systems `⟨U, P, R⟩` and their four basic constructors.

use crate::approx::{Subset, Universe};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertySystem {
    objects: Universe,
    properties: Universe,
    /// `manifests[g]` is the set of properties object `g` has.
    manifests: Vec<Subset>,
}

impl PropertySystem {
    pub fn new<S: AsRef<str>>(objects: Universe, properties: Universe, pairs: &[(S, S)]) -> Result<Self> {
        let mut manifests = vec![properties.empty(); objects.len()];
        for (g, h) in pairs {
            let gi = objects
                .index_of(g.as_ref())
                .ok_or_else(|| Error::UnknownAtom(g.as_ref().into()))?;
            let hi = properties
                .index_of(h.as_ref())
                .ok_or_else(|| Error::UnknownAtom(h.as_ref().into()))?;
            manifests[gi] = manifests[gi].with(hi);
        }
        Ok(Self {
            objects,
            properties,
            manifests,
        })
    }

    /// Builds the system from one property set per object.
    pub fn from_rows(objects: Universe, properties: Universe, rows: Vec<Subset>) -> Result<Self> {
        if rows.len() != objects.len() {
            return Err(Error::Model("one row per object required".into()));
        }
        for r in &rows {
            properties.check(*r)?;
        }
        Ok(Self {
            objects,
            properties,
            manifests: rows,
        })
    }

    pub fn objects(&self) -> &Universe {
        &self.objects
    }

    pub fn properties(&self) -> &Universe {
        &self.properties
    }

    pub fn manifests(&self, object: usize, property: usize) -> bool {
        self.manifests[object].contains(property)
    }

    /// `⟨i⟩A`: properties manifested by some object of `A`.
    pub fn i_diamond(&self, a: Subset) -> Result<Subset> {
        self.objects.check(a)?;
        Ok(a.atoms()
            .fold(self.properties.empty(), |acc, g| acc.union(self.manifests[g])))
    }

    /// `⟨e⟩B`: objects manifesting some property of `B`.
    pub fn e_diamond(&self, b: Subset) -> Result<Subset> {
        self.properties.check(b)?;
        Ok(self.objects_where(|row| !row.is_disjoint(b)))
    }

    /// `[i]A`: properties every one of whose objects lies in `A`.
    pub fn i_box(&self, a: Subset) -> Result<Subset> {
        self.objects.check(a)?;
        let outside = a
            .complement()
            .atoms()
            .fold(self.properties.empty(), |acc, g| acc.union(self.manifests[g]));
        Ok(outside.complement())
    }

    /// `[e]B`: objects all of whose properties lie in `B`.
    pub fn e_box(&self, b: Subset) -> Result<Subset> {
        self.properties.check(b)?;
        Ok(self.objects_where(|row| row.is_subset(b)))
    }

    fn objects_where(&self, keep: impl Fn(Subset) -> bool) -> Subset {
        self.manifests
            .iter()
            .enumerate()
            .filter(|(_, row)| keep(**row))
            .fold(self.objects.empty(), |acc, (g, _)| acc.with(g))
    }
}
