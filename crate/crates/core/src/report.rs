//! Pass/fail records shared by every axiom and identity checker.

use std::fmt;

/// Outcome of one named axiom. A witness is recorded only when the axiom
/// fails, and it is always the first violation found in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomCheck<W> {
    pub name: &'static str,
    pub witness: Option<W>,
}

impl<W> AxiomCheck<W> {
    pub fn pass(name: &'static str) -> Self {
        Self { name, witness: None }
    }

    pub fn fail(name: &'static str, witness: W) -> Self {
        Self {
            name,
            witness: Some(witness),
        }
    }

    pub fn from_search(name: &'static str, witness: Option<W>) -> Self {
        Self { name, witness }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport<W> {
    pub checks: Vec<AxiomCheck<W>>,
}

impl<W> Default for AxiomReport<W> {
    fn default() -> Self {
        Self { checks: Vec::new() }
    }
}

impl<W> AxiomReport<W> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, name: &'static str, witness: Option<W>) {
        self.checks.push(AxiomCheck::from_search(name, witness));
    }

    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(AxiomCheck::holds)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck<W>> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck<W>> {
        self.checks.iter().filter(|c| !c.holds())
    }

    /// Renders one `name,status,witness` line per axiom.
    pub fn to_csv(&self, render: impl Fn(&W) -> String) -> String {
        let mut out = String::from("axiom,status,witness\n");
        for c in &self.checks {
            let w = c.witness.as_ref().map(&render).unwrap_or_default();
            out.push_str(&format!(
                "{},{},\"{}\"\n",
                c.name,
                if c.holds() { "pass" } else { "fail" },
                w.replace('"', "'")
            ));
        }
        out
    }
}

impl<W: fmt::Debug> fmt::Display for AxiomReport<W> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "{:<28} pass", c.name)?,
                Some(w) => writeln!(f, "{:<28} FAIL  witness {:?}", c.name, w)?,
            }
        }
        Ok(())
    }
}
