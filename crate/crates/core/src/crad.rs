//! Dialectical pairs linking a subset with its rough class, and their
//! partial operations.

use crate::approx::{RoughClass, Subset};
use crate::cera::{CeraModel, MixedElement};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DialecticalPair {
    pub first: MixedElement,
    pub second: MixedElement,
}

impl DialecticalPair {
    pub fn new(first: MixedElement, second: MixedElement) -> Self {
        Self { first, second }
    }
}

#[derive(Debug, Clone)]
pub struct CradModel {
    cera: CeraModel,
}

impl CradModel {
    pub fn new(cera: CeraModel) -> Self {
        Self { cera }
    }

    pub fn cera(&self) -> &CeraModel {
        &self.cera
    }

    /// `(x, 0 ⊕ x)`
    pub fn forward(&self, x: Subset) -> DialecticalPair {
        let s = MixedElement::Set(x);
        DialecticalPair::new(s, self.cera.oplus(&self.cera.zero(), &s))
    }

    /// `(x ⊕ 0, x)`
    pub fn backward(&self, x: Subset) -> DialecticalPair {
        let s = MixedElement::Set(x);
        DialecticalPair::new(self.cera.oplus(&s, &self.cera.zero()), s)
    }

    /// The carrier `K`, forward pairs first, each half in canonical subset order.
    pub fn k(&self) -> Vec<DialecticalPair> {
        let u = self.cera.space().universe();
        let mut out: Vec<DialecticalPair> = u.subsets().map(|x| self.forward(x)).collect();
        out.extend(u.subsets().map(|x| self.backward(x)));
        out.sort();
        out.dedup();
        out
    }

    pub fn contains(&self, p: &DialecticalPair) -> bool {
        match (p.first, p.second) {
            (MixedElement::Set(x), MixedElement::Class(_)) => self.forward(x) == *p,
            (MixedElement::Class(_), MixedElement::Set(x)) => self.backward(x) == *p,
            _ => false,
        }
    }

    pub fn constants(&self) -> [DialecticalPair; 4] {
        let c = &self.cera;
        [
            DialecticalPair::new(c.top(), c.one()),
            DialecticalPair::new(c.one(), c.top()),
            DialecticalPair::new(c.zero(), c.bot()),
            DialecticalPair::new(c.bot(), c.zero()),
        ]
    }

    fn require_k(&self, p: &DialecticalPair) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::PreconditionViolated(format!("{} is not in K", self.render(p))))
        }
    }

    fn in_k_or(&self, op: &'static str, p: DialecticalPair) -> Result<DialecticalPair> {
        if self.contains(&p) {
            Ok(p)
        } else {
            Err(Error::Undefined {
                op,
                reason: format!("{} is not in K", self.render(&p)),
            })
        }
    }

    fn combine(
        &self,
        op: &'static str,
        sym: &str,
        p: &DialecticalPair,
        q: &DialecticalPair,
        f: impl Fn(&MixedElement, &MixedElement) -> MixedElement,
    ) -> Result<DialecticalPair> {
        self.require_k(p)?;
        self.require_k(q)?;
        let (a, b, c, e) = (&p.first, &p.second, &q.first, &q.second);
        let zero = self.cera.zero();
        let r = |m: &MixedElement| self.render_operand(m);
        if a.type_index() == c.type_index() {
            return self.in_k_or(op, DialecticalPair::new(f(a, c), f(b, e)));
        }
        // For a set first component the pair is (a, b) against (c, e);
        // the mirror case swaps the roles of the two arguments' second slots.
        let (lhs_first, lhs_second, side_arg, side_self) = if a.is_set() {
            (f(a, c), f(e, a), (e, a), (a, c))
        } else {
            (f(a, e), f(c, b), (c, b), (a, e))
        };
        let folded = f(&lhs_second, &zero);
        if folded != lhs_first {
            return Err(Error::Undefined {
                op,
                reason: format!(
                    "{}{sym}0 ≠ {}{sym}{}",
                    r(&f(side_arg.0, side_arg.1)),
                    r(side_self.0),
                    r(side_self.1)
                ),
            });
        }
        self.in_k_or(op, DialecticalPair::new(lhs_first, lhs_second))
    }

    /// `+`
    pub fn plus(&self, p: &DialecticalPair, q: &DialecticalPair) -> Result<DialecticalPair> {
        self.combine("+", "⊕", p, q, |x, y| self.cera.oplus(x, y))
    }

    /// `·`. Besides the literal side condition the result must lie in `K`.
    pub fn times(&self, p: &DialecticalPair, q: &DialecticalPair) -> Result<DialecticalPair> {
        self.combine("·", "⊙", p, q, |x, y| self.cera.odot(x, y))
    }

    /// `𝔏*`
    pub fn lstar(&self, p: &DialecticalPair) -> Result<DialecticalPair> {
        self.require_k(p)?;
        self.in_k_or("L*", DialecticalPair::new(self.cera.frak_l(&p.first), self.cera.frak_l(&p.second)))
    }

    /// Componentwise `∼`.
    pub fn sim_star(&self, p: &DialecticalPair) -> Result<DialecticalPair> {
        self.require_k(p)?;
        self.in_k_or("~*", DialecticalPair::new(self.cera.sim_neg(&p.first), self.cera.sim_neg(&p.second)))
    }

    fn component_class(&self, m: &MixedElement) -> RoughClass {
        match m {
            MixedElement::Set(x) => self.cera.space().class_of(*x),
            MixedElement::Class(c) => *c,
        }
    }

    /// `𝐏_ℵ`: both component classes are ordered.
    pub fn natural_parthood(&self, p: &DialecticalPair, q: &DialecticalPair) -> bool {
        self.component_class(&p.first).leq(&self.component_class(&q.first))
            && self.component_class(&p.second).leq(&self.component_class(&q.second))
    }

    pub fn render(&self, p: &DialecticalPair) -> String {
        format!("({},{})", self.cera.render(&p.first), self.cera.render(&p.second))
    }

    /// Small classes print as member lists, larger ones as `[member]`.
    fn render_operand(&self, m: &MixedElement) -> String {
        match m {
            MixedElement::Class(c) if c.member_count(self.cera.space()) <= 8 => {
                let sp = self.cera.space();
                let names: Vec<String> = c.members(sp).into_iter().map(|x| sp.render(x)).collect();
                format!("{{{}}}", names.join(","))
            }
            _ => self.cera.render(m),
        }
    }

    /// Reads `(x,[y])`, `([y],x)` or any two comma-separated set/class terms.
    pub fn parse_pair(&self, text: &str) -> Result<DialecticalPair> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "pair must be written as (first,second)".into(),
            })?;
        let mut depth = 0i32;
        let split = inner
            .char_indices()
            .find(|(_, ch)| {
                match ch {
                    '[' | '{' => depth += 1,
                    ']' | '}' => depth -= 1,
                    _ => {}
                }
                *ch == ',' && depth == 0
            })
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Parse {
                pos: 1,
                msg: "missing comma between pair components".into(),
            })?;
        let first = self.parse_component(&inner[..split])?;
        let second = self.parse_component(&inner[split + 1..])?;
        let pair = DialecticalPair::new(first, second);
        self.require_k(&pair)?;
        Ok(pair)
    }

    fn parse_component(&self, s: &str) -> Result<MixedElement> {
        let s = s.trim();
        let sp = self.cera.space();
        if let Some(body) = s.strip_prefix('[').and_then(|b| b.strip_suffix(']')) {
            return Ok(MixedElement::Class(sp.class_of(sp.parse(body.trim())?)));
        }
        // `{eq,fq}` names a class by its member list.
        if let Some(body) = s.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
            let members = body
                .split(',')
                .map(|m| sp.parse(m.trim()))
                .collect::<Result<Vec<_>>>()?;
            let first = *members.first().ok_or(Error::InvalidClass("empty member list".into()))?;
            let class = sp.class_of(first);
            let mut listed = members.clone();
            listed.sort();
            listed.dedup();
            if listed != class.members(sp) {
                return Err(Error::InvalidClass(format!("{s} is not a rough class")));
            }
            return Ok(MixedElement::Class(class));
        }
        Ok(MixedElement::Set(sp.parse(s)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::{ApproximationSpace, Universe};

    fn model() -> CradModel {
        let u = Universe::from_chars("abcefq").unwrap();
        let sp = ApproximationSpace::from_pairs(u, &[("a", "b"), ("b", "c"), ("e", "f")]).unwrap();
        CradModel::new(CeraModel::new(&sp))
    }

    fn p(m: &CradModel, s: &str) -> DialecticalPair {
        m.parse_pair(s).unwrap()
    }

    #[test]
    fn k_membership() {
        let m = model();
        assert_eq!(m.k().len(), 128);
        assert!(m.contains(&p(&m, "(a,{a,b,c,ab,ac,bc})")));
        assert!(m.contains(&p(&m, "({eq,fq},fq)")));
        assert!(m.contains(&p(&m, "(fq,{eq,fq})")));
        let abc = p(&m, "(abc,[abc])");
        assert_eq!(m.cera().space().class_of(m.cera().space().parse("abc").unwrap()).member_count(m.cera().space()), 1);
        assert!(m.contains(&abc));
        for c in m.constants() {
            assert!(m.contains(&c));
        }
        assert!(m.parse_pair("(a,[b])").is_ok());
        assert!(m.parse_pair("(a,[q])").is_err());
    }

    #[test]
    fn plus_walkthrough() {
        let m = model();
        let a = p(&m, "(a,[a])");
        let err = m.plus(&a, &p(&m, "({eq,fq},fq)")).unwrap_err();
        assert_eq!(
            err.to_string(),
            Error::Undefined {
                op: "+",
                reason: "afq⊕0 ≠ a⊕{eq,fq}".into()
            }
            .to_string()
        );
        assert_eq!(m.plus(&a, &p(&m, "(b,[b])")).unwrap(), p(&m, "(ab,[ab])"));
        assert!(m.plus(&a, &p(&m, "(bc,[bc])")).is_err());
    }

    #[test]
    fn times_examples() {
        let m = model();
        let abc = p(&m, "(abc,[abc])");
        assert_eq!(m.times(&abc, &abc).unwrap(), abc);
        let q = p(&m, "(q,[q])");
        assert_eq!(m.times(&q, &q).unwrap(), q);
        assert!(m.times(&p(&m, "(a,[a])"), &p(&m, "(b,[b])")).is_err());
    }

    #[test]
    fn unary_examples() {
        let m = model();
        let abc = p(&m, "(abc,[abc])");
        assert_eq!(m.lstar(&abc).unwrap(), abc);
        assert_eq!(m.lstar(&p(&m, "(a,[a])")).unwrap(), p(&m, "(0,[0])"));
        let [top_one, _, _, bot_zero] = m.constants();
        assert_eq!(m.sim_star(&bot_zero).unwrap(), top_one);
    }

    #[test]
    fn natural_parthood_examples() {
        let m = model();
        let a = p(&m, "(a,[a])");
        assert!(m.natural_parthood(&a, &p(&m, "(ab,[ab])")));
        assert!(m.natural_parthood(&a, &a));
        assert!(!m.natural_parthood(&p(&m, "(q,[q])"), &a));
    }

    #[test]
    fn defined_results_stay_in_k() {
        let m = model();
        let k = m.k();
        for x in &k {
            for y in &k {
                for r in [m.plus(x, y), m.times(x, y)].into_iter().flatten() {
                    assert!(m.contains(&r));
                }
            }
        }
    }
}
