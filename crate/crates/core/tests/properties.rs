mod common;

use proptest::prelude::*;
use roughdial::cera::MemberRoute;
use roughdial::counting::{ipc, ClosureMode, IndiscernibilityRelation};
use roughdial::crad::CradModel;
use roughdial::expr::{eval, parse, BinOp, Expr, UnOp};
use roughdial::granular::{check_admissibility, in_generated_field, term_values, GranularModel};
use roughdial::negation::{check_negation, distributive_lattices, index_of, UnaryOp};
use roughdial::opposition::{
    classify_from_questions, hexagon, tsr_walk, BranchPolicy, Evidence, Figure, TruthGrade,
};
use roughdial::parthood::{ParthoodKind, ParthoodModel, Term};
use roughdial::prerough::QuotientAlgebra;
use roughdial::propsys::PropertySystem;
use roughdial::{ApproximationSpace, CeraModel, MixedElement, Subset, Universe};

fn space_from(n: usize, labels: &[usize]) -> ApproximationSpace {
    let names: String = (b'a'..).take(n).map(char::from).collect();
    let u = Universe::from_chars(&names).unwrap();
    let mut blocks: Vec<Subset> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for (i, l) in labels.iter().take(n).enumerate() {
        match seen.iter().position(|s| s == l) {
            Some(k) => blocks[k] = blocks[k].with(i),
            None => {
                seen.push(*l);
                blocks.push(u.singleton(i));
            }
        }
    }
    ApproximationSpace::from_partition(u, blocks).unwrap()
}

fn arb_space(max: usize) -> impl Strategy<Value = ApproximationSpace> {
    (1..=max).prop_flat_map(|n| prop::collection::vec(0..n, n).prop_map(move |l| space_from(n, &l)))
}

fn arb_space_with_sets(max: usize) -> impl Strategy<Value = (ApproximationSpace, u32, u32)> {
    (arb_space(max), any::<u32>(), any::<u32>())
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        prop::sample::select(vec!["a", "b", "ab", "cd", "abcd", "S", "0"]).prop_map(Expr::set),
        prop::sample::select(vec!["a", "bc", "0", "S", "d"]).prop_map(Expr::class),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (prop::sample::select(vec![UnOp::L, UnOp::D, UnOp::Sim, UnOp::Neg]), inner.clone())
                .prop_map(|(o, e)| Expr::unary(o, e)),
            (
                prop::sample::select(vec![BinOp::Oplus, BinOp::Odot, BinOp::Circ, BinOp::Rightsquig, BinOp::TwoHead]),
                inner.clone(),
                inner
            )
                .prop_map(|(o, a, b)| Expr::binary(o, a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn approximation_laws((sp, x, y) in arb_space_with_sets(6)) {
        let n = sp.universe().len();
        let (x, y) = (Subset::from_bits(x, n), Subset::from_bits(y, n));
        let (l, u) = (sp.lower(x).unwrap(), sp.upper(x).unwrap());
        prop_assert!(l.is_subset(x) && x.is_subset(u));
        prop_assert_eq!(sp.lower(l).unwrap(), l);
        prop_assert_eq!(sp.upper(u).unwrap(), u);
        prop_assert_eq!(u, sp.lower(x.complement()).unwrap().complement());
        let xy = x.intersection(y);
        prop_assert!(sp.lower(xy).unwrap().is_subset(l) && sp.upper(xy).unwrap().is_subset(u));
    }

    #[test]
    fn classes_partition_the_nonempty_subsets(sp in arb_space(5)) {
        let classes = sp.rough_classes(false);
        let mut seen = 0usize;
        for c in &classes {
            for m in c.members(&sp) {
                prop_assert!(!m.is_empty());
                prop_assert_eq!((sp.lower(m).unwrap(), sp.upper(m).unwrap()), (c.lower(), c.upper()));
                seen += 1;
            }
            // a singleton block never lies in the boundary
            for b in sp.blocks().iter().filter(|b| b.count() == 1) {
                prop_assert!(!b.is_subset(c.boundary()));
            }
        }
        prop_assert_eq!(seen, (1usize << sp.universe().len()) - 1);
    }

    #[test]
    fn quotient_order_agrees_and_is_closed(sp in arb_space(5)) {
        let q = QuotientAlgebra::new(&sp);
        for a in q.elements() {
            prop_assert!(q.index_of(&q.neg(a)).is_some());
            prop_assert!(q.index_of(&q.l(a)).is_some());
            prop_assert!(q.index_of(&q.diamond(a)).is_some());
            for b in q.elements() {
                prop_assert_eq!(q.meet(a, b) == *a, a.lower().is_subset(b.lower()) && a.upper().is_subset(b.upper()));
                prop_assert_eq!(q.leq(a, b), a.leq(b));
                prop_assert!(q.index_of(&q.join(a, b)).is_some());
                prop_assert!(q.index_of(&q.implies(a, b)).is_some());
            }
        }
    }

    #[test]
    fn classical_spaces_are_admissible(sp in arb_space(6)) {
        prop_assert!(check_admissibility(&GranularModel::from_space(&sp).unwrap()).all_hold());
    }

    #[test]
    fn field_membership_matches_term_search(n in 1usize..=4, gs in prop::collection::vec(any::<u32>(), 1..=3)) {
        let names: String = (b'a'..).take(n).map(char::from).collect();
        let u = Universe::from_chars(&names).unwrap();
        let granules: Vec<Subset> = gs.iter().map(|g| Subset::from_bits(*g, n)).collect();
        let terms = term_values(&u, &granules, 16);
        for x in u.subsets() {
            prop_assert_eq!(in_generated_field(&u, &granules, x), terms.contains(&x));
        }
    }

    #[test]
    fn property_system_laws(nu in 1usize..=4, np in 1usize..=4, rows in prop::collection::vec(any::<u32>(), 4), a in any::<u32>(), b in any::<u32>()) {
        let u = Universe::from_chars(&"abcd"[..nu]).unwrap();
        let p = Universe::from_chars(&"pqrs"[..np]).unwrap();
        let ps = PropertySystem::from_rows(u, p, rows[..nu].iter().map(|r| Subset::from_bits(*r, np)).collect()).unwrap();
        let (a, b) = (Subset::from_bits(a, nu), Subset::from_bits(b, np));
        prop_assert_eq!(ps.e_diamond(b).unwrap().is_subset(a), b.is_subset(ps.i_box(a).unwrap()));
        prop_assert_eq!(ps.i_box(a).unwrap(), ps.i_diamond(a.complement()).unwrap().complement());
        prop_assert_eq!(ps.e_box(b).unwrap(), ps.e_diamond(b.complement()).unwrap().complement());
        let a2 = a.union(Subset::from_bits(1, nu));
        prop_assert!(ps.i_diamond(a).unwrap().is_subset(ps.i_diamond(a2).unwrap()));
        prop_assert!(ps.i_box(a).unwrap().is_subset(ps.i_box(a2).unwrap()));
    }

    #[test]
    fn cera_routes_agree_and_stay_in_the_model(sp in arb_space(4)) {
        let (b, e) = (CeraModel::new(&sp), CeraModel::new(&sp).with_route(MemberRoute::Enumerate));
        let carrier = b.carrier();
        for x in &carrier {
            prop_assert!(b.validate(&b.sim_neg(x)).is_ok());
            for y in &carrier {
                prop_assert_eq!(b.oplus(x, y), e.oplus(x, y));
                prop_assert_eq!(b.odot(x, y), e.odot(x, y));
                prop_assert_eq!(b.circ(x, y), e.circ(x, y));
                prop_assert_eq!(b.rightsquig(x, y), e.rightsquig(x, y));
                prop_assert!(b.validate(&b.oplus(x, y)).is_ok());
                prop_assert!(b.validate(&b.two_head(x, y)).is_ok());
            }
        }
    }

    #[test]
    fn crad_results_stay_in_k(sp in arb_space(4)) {
        let m = CradModel::new(CeraModel::new(&sp));
        let k = m.k();
        for x in &k {
            for r in [m.lstar(x), m.sim_star(x)].into_iter().flatten() {
                prop_assert!(m.contains(&r));
            }
            for y in &k {
                for r in [m.plus(x, y), m.times(x, y)].into_iter().flatten() {
                    prop_assert!(m.contains(&r));
                }
            }
        }
    }

    #[test]
    fn parthood_catalog_laws((sp, x, y) in arb_space_with_sets(6)) {
        let n = sp.universe().len();
        let (a, b) = (Subset::from_bits(x, n), Subset::from_bits(y, n));
        let pm = ParthoodModel::new(&sp);
        let h = |k, s, t| pm.holds(k, &Term::Set(s), &Term::Set(t)).unwrap();
        prop_assert_eq!(
            h(ParthoodKind::RoughlyConsistent, a, b),
            h(ParthoodKind::VeryCautious, a, b) && h(ParthoodKind::Possibilist, a, b)
        );
        prop_assert_eq!(h(ParthoodKind::Additive, a, b), a.is_subset(b));
        prop_assert_eq!(h(ParthoodKind::Common, a, b), a.is_subset(b));
        for k in [ParthoodKind::VeryCautious, ParthoodKind::Possibilist, ParthoodKind::GSimple] {
            prop_assert!(h(k, a, a));
        }
    }

    #[test]
    fn expressions_round_trip_and_never_panic(e in arb_expr()) {
        let text = e.to_string();
        prop_assert_eq!(parse(&text).unwrap(), e.clone());
        let sp = space_from(4, &[0, 0, 1, 2]);
        let m = CeraModel::new(&sp);
        let first = eval(&m, &e);
        prop_assert_eq!(first.is_ok(), e.infer().is_ok());
        prop_assert_eq!(first, eval(&m, &e));
        if let Ok(MixedElement::Class(c)) = eval(&m, &e) {
            prop_assert!(m.validate(&MixedElement::Class(c)).is_ok());
        }
    }

    #[test]
    fn ipc_structure(n in 1usize..8, pairs in prop::collection::vec((0usize..8, 0usize..8), 0..8), seq in prop::collection::vec(0usize..8, 0..20), eq in any::<bool>()) {
        let elems: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let pairs: Vec<(String, String)> = pairs.iter().map(|(a, b)| (elems[a % n].clone(), elems[b % n].clone())).collect();
        let mode = if eq { ClosureMode::Equivalence } else { ClosureMode::ReflexiveTransitive };
        let rel = IndiscernibilityRelation::close(&elems, &pairs, mode).unwrap();
        let seq: Vec<String> = seq.iter().map(|i| elems[i % n].clone()).collect();
        let tags = ipc(&seq, &rel).unwrap();
        prop_assert_eq!(tags.len(), seq.len());
        prop_assert_eq!(&tags, &ipc(&seq, &rel).unwrap());
        for w in tags.windows(2) {
            prop_assert!(w[1].block >= w[0].block);
            if w[1].block == w[0].block {
                prop_assert_eq!(w[1].value, w[0].value + 1);
            } else {
                prop_assert_eq!((w[1].value, w[1].block), (1, w[0].block + 1));
            }
        }
    }

    #[test]
    fn constant_evidence_settles_within_seven_steps(start in 0usize..8, support in any::<bool>(), truth in any::<bool>()) {
        let ev = if support { Evidence::Support } else { Evidence::Oppose };
        let policy = if truth { BranchPolicy::Truth } else { BranchPolicy::Falsity };
        let walk = tsr_walk(TruthGrade::ALL[start], &[ev; 8], policy);
        prop_assert_eq!(walk[7], walk[8]);
    }

    #[test]
    fn hexagon_figures(sp in arb_space(6), x in any::<u32>()) {
        let x = Subset::from_bits(x, sp.universe().len());
        let h = hexagon(&sp, x).unwrap();
        if h.warning.is_none() {
            for (a, b) in [("L", "B"), ("B", "E"), ("L", "E")] {
                prop_assert_eq!(h.figure(a, b), Some(Figure::Contrariety));
            }
            prop_assert_eq!(h.figure("U", "Lc"), Some(Figure::SubContrariety));
            prop_assert_eq!(h.figure("L", "U"), Some(Figure::SubAlternation));
        }
    }
}

#[test]
fn table_five_is_a_bijection() {
    let mut figs: Vec<Figure> = [(true, true), (true, false), (false, true), (false, false)]
        .iter()
        .map(|&(a, b)| classify_from_questions(a, b))
        .collect();
    figs.sort();
    figs.dedup();
    assert_eq!(figs.len(), 4);
}

/// Every unary map (partial ones included) on small distributive lattices.
#[test]
fn negation_index_and_weak_equality() {
    for lat in distributive_lattices(4) {
        let n = lat.len();
        let mut f: UnaryOp = vec![None; n];
        let total_maps = (n + 1).pow(n as u32);
        for code in 0..total_maps {
            let mut c = code;
            for v in f.iter_mut() {
                *v = if c % (n + 1) == n { None } else { Some(c % (n + 1)) };
                c /= n + 1;
            }
            let idx = index_of(&f);
            let pow = |k: usize, x: usize| (0..k).try_fold(x, |acc, _| f[acc]);
            for x in 0..n {
                assert_eq!(pow(idx.m, x), pow(idx.m + idx.pace(), x));
            }
            for nn in 1..idx.n {
                for m in 0..nn {
                    assert!((0..n).any(|x| pow(m, x) != pow(nn, x)));
                }
            }
            let prof = check_negation(&lat, &f).unwrap();
            if prof.holds("N9") {
                assert!(prof.holds("N1") && prof.holds("N2") && prof.holds("N3"));
            }
            // N1 holds whenever f(x) is undefined everywhere.
            if f.iter().all(Option::is_none) {
                assert!(prof.holds("N1"));
            }
        }
    }
}
