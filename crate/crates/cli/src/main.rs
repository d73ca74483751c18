use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use roughdial::cera::check_cera_identities;
use roughdial::counting::{discernibility_square, ipc, parse_pairs, ClosureMode, CountTag, IndiscernibilityRelation};
use roughdial::crad::CradModel;
use roughdial::expr::{check_atoms, eval, parse};
use roughdial::granular::{check_admissibility, check_gos_axioms, search_admissible_granulations, GranuleParthood};
use roughdial::negation::{check_negation, falsify_theorem, interior_compose, Claim, MAX_FALSIFY_SIZE};
use roughdial::opposition::{
    classify_pair, combination_profile, hexagon, joint_consistency, reference_table, reference_tables, tsr_walk,
    BranchPolicy, Evidence, TruthGrade, ValuationMode,
};
use roughdial::parthood::{ParthoodKind, ParthoodModel, CARRIER_CAP};
use roughdial::prerough::{check_essential_pre_rough, check_pre_rough, QuotientAlgebra};
use roughdial::{ApproximationSpace, AxiomReport, CeraModel, Error, ModelFile, Subset, Universe};

const EXAMPLE: &str = include_str!("../example.json");

#[derive(Parser)]
#[command(name = "roughdial", version, about = "Rough-set and dialectical-algebra workbench")]
struct Cli {
    /// JSON model file; the built-in example space when omitted.
    #[arg(long, global = true)]
    model: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for the randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Search bound: lattice size, carrier size or number of granules, per command.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the approximation space.
    Space {
        #[arg(value_enum)]
        what: SpaceView,
    },
    /// Evaluate a mixed-domain expression, e.g. "bc (+) [bf]".
    Eval {
        expr: String,
        /// Use the soft commonality for `(.)`.
        #[arg(long)]
        soft: bool,
    },
    /// Run an axiom or identity suite.
    Check {
        #[arg(value_enum)]
        suite: Suite,
        /// Also run on this many seeded random spaces with up to six atoms.
        #[arg(long, default_value_t = 0)]
        random: usize,
    },
    /// `parthood <kind> <a> <b>` or `parthood analyze <kind>`.
    Parthood {
        #[arg(num_args = 2..=3, required = true)]
        args: Vec<String>,
    },
    /// Partial operations on dialectical pairs.
    Crad {
        #[arg(value_enum)]
        op: CradOp,
        left: String,
        right: String,
    },
    /// Negations on a finite bounded poset.
    Negation {
        #[command(subcommand)]
        cmd: NegationCmd,
    },
    /// Figures of opposition, reference tables and truth grades.
    Opposition {
        #[command(subcommand)]
        cmd: OppositionCmd,
    },
    /// Counting indiscernibles.
    Count {
        #[command(subcommand)]
        cmd: CountCmd,
    },
    /// Granulation search.
    Granulation {
        #[command(subcommand)]
        cmd: GranulationCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceView {
    Show,
    Triples,
    Classes,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Gos,
    Admissible,
    Cera,
    Prerough,
    Essential,
}

#[derive(Clone, Copy, ValueEnum)]
enum CradOp {
    Plus,
    Times,
    Pnat,
}

#[derive(Subcommand)]
enum NegationCmd {
    /// Check the model's `negation` (and `interior`) on its `poset`.
    Check,
    /// Search small distributive lattices for a counterexample.
    Falsify {
        /// One claim by name; all of them when omitted.
        #[arg(long)]
        claim: Option<String>,
    },
}

#[derive(Subcommand)]
enum OppositionCmd {
    /// Figure between two sentences of a case space in the model.
    Classify {
        #[arg(long)]
        case: String,
        a: String,
        b: String,
        /// Accept non-classical valuations, reading the truth component.
        #[arg(long)]
        belnap: bool,
        /// Also list the realized label combinations.
        #[arg(long)]
        profile: bool,
    },
    /// The hexagon of a subset's lower region, boundary and exterior.
    Hexagon { x: String },
    /// The reference tables, or the joint consistency of some of them.
    Tables {
        /// Comma-separated table numbers to test together.
        #[arg(long)]
        joint: Option<String>,
    },
    /// Walk the truth-grade graph.
    Tsr {
        #[arg(long, default_value = "T")]
        start: String,
        /// Comma-separated `support`/`oppose` (or `+`/`-`).
        #[arg(long, allow_hyphen_values = true)]
        evidence: String,
        #[arg(long, value_enum, default_value_t = Branch::Falsity)]
        branch: Branch,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Branch {
    Falsity,
    Truth,
}

#[derive(Subcommand)]
enum CountCmd {
    /// Primitive counting of a sequence.
    Ipc {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value = "")]
        pairs: String,
        #[arg(long, value_enum, default_value_t = Closure::Eq)]
        closure: Closure,
    },
    /// Figures between IS, IS.NOT, IND and DIS.
    Square {
        #[arg(long)]
        elements: String,
        #[arg(long, default_value = "")]
        pairs: String,
        #[arg(long, value_enum, default_value_t = Closure::Eq)]
        closure: Closure,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Closure {
    Eq,
    Rt,
}

impl From<Closure> for ClosureMode {
    fn from(c: Closure) -> Self {
        match c {
            Closure::Eq => ClosureMode::Equivalence,
            Closure::Rt => ClosureMode::ReflexiveTransitive,
        }
    }
}

#[derive(Subcommand)]
enum GranulationCmd {
    /// Every granulation (up to `--cap` granules, default 3) admissible for the model's operators.
    Search,
}

/// A command's result: a table for csv/json and a text rendering.
struct Out {
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    text: String,
    /// False when a check found a violation.
    ok: bool,
}

impl Out {
    fn table(header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Self {
        let text = rows.iter().map(|r| r.join("  ")).collect::<Vec<_>>().join("\n");
        Self {
            header,
            rows,
            text,
            ok: true,
        }
    }

    fn with_text(mut self, text: String) -> Self {
        self.text = text;
        self
    }

    fn render(&self, f: Format) -> String {
        match f {
            Format::Text => self.text.clone(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf8").trim_end().to_string()
            }
            Format::Json => {
                let rows: Vec<serde_json::Value> = self
                    .rows
                    .iter()
                    .map(|r| {
                        let obj: serde_json::Map<String, serde_json::Value> = self
                            .header
                            .iter()
                            .zip(r)
                            .map(|(h, v)| (h.to_string(), serde_json::Value::String(v.clone())))
                            .collect();
                        serde_json::Value::Object(obj)
                    })
                    .collect();
                serde_json::to_string_pretty(&rows).expect("json")
            }
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Undefined { .. }
        | Error::UndefinedOnType1 { .. }
        | Error::NonClassicalValuation { .. }
        | Error::PreconditionViolated(_) => 1,
        Error::Parse { .. } | Error::UnknownAtom(_) => 2,
        Error::CarrierTooLarge { .. } | Error::SearchTooLarge { .. } => 4,
        _ => 3,
    }
}

fn load(path: &Option<PathBuf>) -> Result<ModelFile, Error> {
    match path {
        None => ModelFile::from_json(EXAMPLE),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| Error::Model(format!("{}: {e}", p.display())))?;
            ModelFile::from_json(&text)
        }
    }
}

fn report_out<W>(title: &str, r: &AxiomReport<W>, render: impl Fn(&W) -> String) -> Out {
    let rows: Vec<Vec<String>> = r
        .checks
        .iter()
        .map(|c| {
            vec![
                title.to_string(),
                c.name.to_string(),
                if c.holds() { "pass" } else { "fail" }.to_string(),
                c.witness.as_ref().map(&render).unwrap_or_default(),
            ]
        })
        .collect();
    let text = rows
        .iter()
        .map(|r| {
            if r[3].is_empty() {
                format!("{:<10} {:<24} {}", r[0], r[1], r[2])
            } else {
                format!("{:<10} {:<24} {}  witness {}", r[0], r[1], r[2], r[3])
            }
        })
        .collect::<Vec<_>>()
        .join("\n");
    let mut out = Out::table(vec!["model", "axiom", "status", "witness"], rows).with_text(text);
    out.ok = r.all_hold();
    out
}

fn join(mut a: Out, b: Out) -> Out {
    a.rows.extend(b.rows);
    a.text = format!("{}\n{}", a.text, b.text);
    a.ok &= b.ok;
    a
}

fn subsets(sp: &ApproximationSpace, xs: &[Subset]) -> String {
    xs.iter().map(|x| sp.render(*x)).collect::<Vec<_>>().join(" ")
}

fn random_space(rng: &mut ChaCha8Rng) -> ApproximationSpace {
    let n = rng.gen_range(1..=6);
    let names: String = (b'a'..).take(n).map(char::from).collect();
    let u = Universe::from_chars(&names).expect("small universe");
    let k = rng.gen_range(1..=n);
    let labels: Vec<usize> = (0..n).map(|i| if i < k { i } else { rng.gen_range(0..k) }).collect();
    let blocks = (0..k).map(|b| (0..n).filter(|&i| labels[i] == b).fold(u.empty(), |s, i| s.with(i))).collect();
    ApproximationSpace::from_partition(u, blocks).expect("valid partition")
}

fn run_check(model: &ModelFile, suite: Suite, random: usize, seed: u64) -> Result<Out, Error> {
    let mut spaces: Vec<(String, Option<ApproximationSpace>)> = Vec::new();
    let has_space = model.partition.is_some() || model.relation_pairs.is_some();
    spaces.push(("model".into(), if has_space { Some(model.space()?) } else { None }));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..random {
        spaces.push((format!("random{i}"), Some(random_space(&mut rng))));
    }
    let mut acc: Option<Out> = None;
    for (name, sp) in &spaces {
        let out = match suite {
            Suite::Gos | Suite::Admissible => {
                let gm = if name == "model" {
                    model.granular()?
                } else {
                    roughdial::granular::GranularModel::from_space(sp.as_ref().expect("random space"))?
                };
                let u = gm.universe.clone();
                let render = |w: &Vec<Subset>| w.iter().map(|x| u.render(*x)).collect::<Vec<_>>().join(" ");
                if suite == Suite::Gos {
                    report_out(name, &check_gos_axioms(&gm), render)
                } else {
                    let a = check_admissibility(&gm);
                    let mut r = AxiomReport::new();
                    for c in [a.wra, a.ls, a.fu] {
                        r.push(c.name, c.witness);
                    }
                    report_out(name, &r, render)
                }
            }
            Suite::Cera => {
                let sp = sp.as_ref().ok_or_else(|| Error::Model("no partition in model".into()))?;
                let m = CeraModel::new(sp);
                let render = |w: &Vec<roughdial::MixedElement>| w.iter().map(|e| m.render(e)).collect::<Vec<_>>().join(" ");
                let normal = report_out(name, &check_cera_identities(&m), render);
                let soft = CeraModel::soft(sp);
                let render = |w: &Vec<roughdial::MixedElement>| w.iter().map(|e| soft.render(e)).collect::<Vec<_>>().join(" ");
                join(normal, report_out(&format!("{name}-soft"), &check_cera_identities(&soft), render))
            }
            Suite::Prerough | Suite::Essential => {
                let cand = match (name.as_str(), &model.algebra, sp) {
                    ("model", Some(_), _) => model.algebra()?,
                    (_, _, Some(sp)) => QuotientAlgebra::new(sp).to_candidate(),
                    _ => return Err(Error::Model("model has neither `algebra` nor a partition".into())),
                };
                let render = |w: &Vec<usize>| w.iter().map(|i| cand.names[*i].clone()).collect::<Vec<_>>().join(" ");
                let r = if suite == Suite::Prerough {
                    check_pre_rough(&cand)
                } else {
                    check_essential_pre_rough(&cand)
                };
                report_out(name, &r, render)
            }
        };
        acc = Some(match acc {
            None => out,
            Some(a) => join(a, out),
        });
    }
    Ok(acc.expect("at least the model"))
}

fn run(cli: &Cli) -> Result<Out, Error> {
    let model = load(&cli.model)?;
    match &cli.command {
        Command::Space { what } => {
            let sp = model.space()?;
            Ok(match what {
                SpaceView::Show => {
                    let rows = sp.blocks().iter().enumerate().map(|(i, b)| vec![i.to_string(), sp.render(*b)]).collect();
                    let text = format!(
                        "universe {}\nblocks {}",
                        sp.universe().atoms().join(" "),
                        subsets(&sp, sp.blocks())
                    );
                    Out::table(vec!["block", "members"], rows).with_text(text)
                }
                SpaceView::Triples => {
                    let rows = sp
                        .triples()?
                        .into_iter()
                        .map(|t| vec![sp.render(t.x), sp.render(t.lower), sp.render(t.upper)])
                        .collect::<Vec<_>>();
                    let text = rows.iter().map(|r| format!("({})", r.join(", "))).collect::<Vec<_>>().join("\n");
                    Out::table(vec!["x", "lower", "upper"], rows).with_text(text)
                }
                SpaceView::Classes => {
                    let rows = sp
                        .rough_classes(false)
                        .iter()
                        .map(|c| vec![sp.render(c.lower()), sp.render(c.upper()), subsets(&sp, &c.members(&sp))])
                        .collect::<Vec<_>>();
                    let text = rows
                        .iter()
                        .map(|r| format!("({},{})  {{{}}}", r[0], r[1], r[2].replace(' ', ",")))
                        .collect::<Vec<_>>()
                        .join("\n");
                    Out::table(vec!["lower", "upper", "members"], rows).with_text(text)
                }
            })
        }
        Command::Eval { expr, soft } => {
            let sp = model.space()?;
            let m = if *soft { CeraModel::soft(&sp) } else { CeraModel::new(&sp) };
            let e = parse(expr)?;
            check_atoms(&e, sp.universe())?;
            let v = eval(&m, &e)?;
            let (kind, lower, upper) = match v {
                roughdial::MixedElement::Set(_) => ("set", String::new(), String::new()),
                roughdial::MixedElement::Class(c) => ("class", sp.render(c.lower()), sp.render(c.upper())),
            };
            Ok(Out::table(
                vec!["expr", "value", "type", "lower", "upper"],
                vec![vec![e.to_string(), m.render(&v), kind.into(), lower, upper]],
            )
            .with_text(m.render_long(&v)))
        }
        Command::Check { suite, random } => run_check(&model, *suite, *random, cli.seed),
        Command::Parthood { args } => {
            let sp = model.space()?;
            let pm = match &model.granules {
                Some(g) => ParthoodModel::with_granules(
                    &sp,
                    g.iter().map(|x| x.resolve(sp.universe())).collect::<Result<Vec<_>, _>>()?,
                ),
                None => ParthoodModel::new(&sp),
            };
            if args[0] == "analyze" {
                let kind: ParthoodKind = args[1].parse()?;
                let r = pm.analyze(kind, cli.cap.unwrap_or(CARRIER_CAP))?;
                let w1 = r.reflexive_witness.map(|t| pm.render(&t)).unwrap_or_default();
                let w2 = r.transitive_witness.map(|t| t.iter().map(|x| pm.render(x)).collect::<Vec<_>>().join(" ")).unwrap_or_default();
                let w3 = r.antisymmetric_witness.map(|t| t.iter().map(|x| pm.render(x)).collect::<Vec<_>>().join(" ")).unwrap_or_default();
                let rows = vec![
                    vec![kind.to_string(), "reflexive".into(), r.reflexive.to_string(), w1],
                    vec![kind.to_string(), "transitive".into(), r.transitive.to_string(), w2],
                    vec![kind.to_string(), "antisymmetric".into(), r.antisymmetric.to_string(), w3],
                ];
                let text = rows
                    .iter()
                    .map(|r| if r[3].is_empty() { format!("{:<14} {}", r[1], r[2]) } else { format!("{:<14} {}  witness {}", r[1], r[2], r[3]) })
                    .collect::<Vec<_>>()
                    .join("\n");
                Ok(Out::table(vec!["kind", "property", "holds", "witness"], rows).with_text(text))
            } else {
                if args.len() != 3 {
                    return Err(Error::Parse { pos: 0, msg: "expected `parthood <kind> <a> <b>`".into() });
                }
                let kind: ParthoodKind = args[0].parse()?;
                let a = pm.parse_term(kind, &args[1])?;
                let b = pm.parse_term(kind, &args[2])?;
                let h = pm.holds(kind, &a, &b)?;
                Ok(Out::table(
                    vec!["kind", "a", "b", "holds"],
                    vec![vec![kind.to_string(), pm.render(&a), pm.render(&b), h.to_string()]],
                )
                .with_text(h.to_string()))
            }
        }
        Command::Crad { op, left, right } => {
            let m = CradModel::new(CeraModel::new(&model.space()?));
            let (p, q) = (m.parse_pair(left)?, m.parse_pair(right)?);
            let value = match op {
                CradOp::Plus => m.render(&m.plus(&p, &q)?),
                CradOp::Times => m.render(&m.times(&p, &q)?),
                CradOp::Pnat => m.natural_parthood(&p, &q).to_string(),
            };
            Ok(Out::table(vec!["left", "right", "value"], vec![vec![m.render(&p), m.render(&q), value.clone()]]).with_text(value))
        }
        Command::Negation { cmd } => match cmd {
            NegationCmd::Check => {
                let p = model.poset()?;
                let f = model.negation(&p)?;
                let prof = check_negation(&p, &f)?;
                let names = p.names().to_vec();
                let mut out = report_out("negation", &prof.report, |w: &Vec<usize>| {
                    w.iter().map(|i| names[*i].clone()).collect::<Vec<_>>().join(" ")
                });
                out.ok = true;
                if let Some(idx) = prof.index {
                    out.rows.push(vec!["negation".into(), "index".into(), format!("({},{})", idx.m, idx.n), String::new()]);
                    out.text.push_str(&format!("\nindex ({},{}) period {} pace {}", idx.m, idx.n, idx.period(), idx.pace()));
                }
                if let Some(i) = model.interior(&p)? {
                    let f: Vec<usize> = f
                        .iter()
                        .map(|v| v.ok_or_else(|| Error::PreconditionViolated("composition needs a total f".into())))
                        .collect::<Result<_, _>>()?;
                    let (g, ok) = interior_compose(&p, &f, &i)?;
                    let g: Vec<String> = g.iter().map(|y| names[*y].clone()).collect();
                    out.rows.push(vec!["negation".into(), "g4=g2".into(), ok.to_string(), g.join(" ")]);
                    out.text.push_str(&format!("\ng = i.f = [{}]  g^4 = g^2: {ok}", g.join(" ")));
                }
                Ok(out)
            }
            NegationCmd::Falsify { claim } => {
                let cap = cli.cap.unwrap_or(5);
                if cap > MAX_FALSIFY_SIZE {
                    return falsify_theorem(Claim::NoIndexZeroN, cap).map(|_| unreachable!());
                }
                let claims: Vec<Claim> = match claim {
                    Some(c) => vec![c.parse()?],
                    None => Claim::ALL.to_vec(),
                };
                let mut rows = Vec::new();
                let mut ok = true;
                for c in claims {
                    let w = falsify_theorem(c, cap)?;
                    let verdict = match (c.is_existential(), &w) {
                        (true, Some(_)) => "witness found",
                        (true, None) => "no witness",
                        (false, Some(_)) => "counterexample",
                        (false, None) => "no counterexample",
                    };
                    ok &= c.is_existential() == w.is_some();
                    rows.push(vec![c.name().to_string(), cap.to_string(), verdict.to_string(), w.map(|w| w.to_string()).unwrap_or_default()]);
                }
                let text = rows
                    .iter()
                    .map(|r| if r[3].is_empty() { format!("{:<22} {}", r[0], r[2]) } else { format!("{:<22} {}: {}", r[0], r[2], r[3]) })
                    .collect::<Vec<_>>()
                    .join("\n");
                let mut out = Out::table(vec!["claim", "cap", "verdict", "witness"], rows).with_text(text);
                out.ok = ok;
                Ok(out)
            }
        },
        Command::Opposition { cmd } => match cmd {
            OppositionCmd::Classify { case, a, b, belnap, profile } => {
                let cs = model.case_space(case)?;
                let mode = if *belnap { ValuationMode::Belnap } else { ValuationMode::Classical };
                let c = classify_pair(&cs, a, b, mode)?;
                let mut rows = vec![vec![a.clone(), b.clone(), c.figure.to_string(), c.rows.to_string()]];
                let mut text = format!("{}  ({})", c.figure, c.rows);
                if *profile {
                    let p = combination_profile(&cs, a, b)?;
                    let cols: Vec<String> = p.columns.iter().map(|(x, y)| format!("{x}/{y}")).collect();
                    let basic: Vec<String> = p.basic.iter().map(|(x, y)| format!("{x}/{y}")).collect();
                    text.push_str(&format!("\ncombinations: {}\nplain: {}", cols.join(" "), basic.join(" ")));
                    rows.push(vec![a.clone(), b.clone(), "combinations".into(), cols.join(" ")]);
                }
                Ok(Out::table(vec!["a", "b", "figure", "rows"], rows).with_text(text))
            }
            OppositionCmd::Hexagon { x } => {
                let sp = model.space()?;
                let h = hexagon(&sp, sp.parse(x)?)?;
                let mut text: Vec<String> =
                    h.nodes.iter().map(|(n, s)| format!("{n:<3} {}", sp.render(*s))).collect();
                let rows: Vec<Vec<String>> = h
                    .pairs
                    .iter()
                    .map(|(i, j, c)| vec![h.nodes[*i].0.clone(), h.nodes[*j].0.clone(), c.figure.to_string(), c.rows.to_string()])
                    .collect();
                text.extend(rows.iter().map(|r| format!("{}/{}: {}", r[0], r[1], r[2])));
                if let Some(w) = &h.warning {
                    text.push(format!("warning: {w}"));
                }
                Ok(Out::table(vec!["a", "b", "figure", "rows"], rows).with_text(text.join("\n")))
            }
            OppositionCmd::Tables { joint: None } => {
                let mut rows = Vec::new();
                for t in reference_tables() {
                    for (l, r, e) in &t.rows {
                        let v = |b: bool| if b { "T" } else { "F" };
                        rows.push(vec![t.number.to_string(), format!("{}/{}", t.left, t.right), t.caption.to_string(), format!("{}{}", v(*l), v(*r)), e.to_string()]);
                    }
                }
                let text = reference_tables()
                    .iter()
                    .map(|t| {
                        let cells: Vec<String> = t
                            .rows
                            .iter()
                            .map(|(l, r, e)| format!("{}{}:{e}", if *l { "T" } else { "F" }, if *r { "T" } else { "F" }))
                            .collect();
                        format!("{:>2} {:<8} {:<16} {}", t.number, format!("{}/{}", t.left, t.right), t.caption, cells.join(" "))
                    })
                    .collect::<Vec<_>>()
                    .join("\n");
                Ok(Out::table(vec!["table", "pair", "caption", "row", "entry"], rows).with_text(text))
            }
            OppositionCmd::Tables { joint: Some(list) } => {
                let tables = list
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| {
                        let n: u8 = s.trim().parse().map_err(|_| Error::Parse { pos: 0, msg: format!("bad table number `{s}`") })?;
                        reference_table(n).ok_or_else(|| Error::Model(format!("no table {n}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let j = joint_consistency(&tables);
                let worlds: Vec<String> = j
                    .worlds
                    .iter()
                    .map(|w| w.iter().map(|(k, v)| format!("{k}={}", if *v { 1 } else { 0 })).collect::<Vec<_>>().join(" "))
                    .collect();
                let mut text = if j.satisfiable { "satisfiable" } else { "unsatisfiable" }.to_string();
                for w in &worlds {
                    text.push_str(&format!("\n  {w}"));
                }
                if let Some((t, l, r)) = j.unrealized {
                    text.push_str(&format!("\nrow {}{} of table {t} is not realized", if l { "T" } else { "F" }, if r { "T" } else { "F" }));
                }
                Ok(Out::table(vec!["tables", "satisfiable", "worlds"], vec![vec![list.clone(), j.satisfiable.to_string(), worlds.join("; ")]]).with_text(text))
            }
            OppositionCmd::Tsr { start, evidence, branch } => {
                let start: TruthGrade = start.parse()?;
                let ev = evidence.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect::<Result<Vec<Evidence>, _>>()?;
                let policy = match branch {
                    Branch::Falsity => BranchPolicy::Falsity,
                    Branch::Truth => BranchPolicy::Truth,
                };
                let walk = tsr_walk(start, &ev, policy);
                let rows = walk.iter().enumerate().map(|(i, g)| vec![i.to_string(), g.to_string()]).collect();
                let text = walk.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" -> ");
                Ok(Out::table(vec!["step", "grade"], rows).with_text(text))
            }
        },
        Command::Count { cmd } => match cmd {
            CountCmd::Ipc { seq, pairs, closure } => {
                let seq: Vec<String> = seq.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                let pairs = parse_pairs(pairs)?;
                let mut elems: Vec<String> = seq.iter().chain(pairs.iter().flat_map(|(a, b)| [a, b])).cloned().collect();
                elems.sort();
                elems.dedup();
                let rel = IndiscernibilityRelation::close(&elems, &pairs, (*closure).into())?;
                let tags = ipc(&seq, &rel)?;
                let rows = seq.iter().zip(&tags).map(|(x, t)| vec![x.clone(), t.value.to_string(), t.block.to_string(), t.to_string()]).collect();
                let text = tags.iter().map(CountTag::to_string).collect::<Vec<_>>().join(" ");
                Ok(Out::table(vec!["element", "value", "block", "tag"], rows).with_text(text))
            }
            CountCmd::Square { elements, pairs, closure } => {
                let elems: Vec<String> = elements.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
                let rel = IndiscernibilityRelation::close(&elems, &parse_pairs(pairs)?, (*closure).into())?;
                let sq = discernibility_square(&rel);
                let rows: Vec<Vec<String>> = sq
                    .figures
                    .iter()
                    .map(|(a, b, c)| vec![a.to_string(), b.to_string(), c.figure.to_string(), c.rows.to_string()])
                    .collect();
                let text = rows.iter().map(|r| format!("{:<6} {:<6} {}", r[0], r[1], r[2])).collect::<Vec<_>>().join("\n");
                Ok(Out::table(vec!["a", "b", "figure", "rows"], rows).with_text(text))
            }
        },
        Command::Granulation { cmd: GranulationCmd::Search } => {
            let gm = model.granular()?;
            let found = search_admissible_granulations(&gm.universe, &gm.lower, &gm.upper, cli.cap.unwrap_or(3), GranuleParthood::Inclusion)?;
            let u = &gm.universe;
            let rows: Vec<Vec<String>> = found
                .iter()
                .map(|f| vec![f.len().to_string(), f.iter().map(|g| u.render(*g)).collect::<Vec<_>>().join(" ")])
                .collect();
            let text = if rows.is_empty() {
                "no admissible granulation".to_string()
            } else {
                rows.iter().map(|r| format!("{{{}}}", r[1].replace(' ', ", "))).collect::<Vec<_>>().join("\n")
            };
            Ok(Out::table(vec!["size", "granules"], rows).with_text(text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            // A closed pipe (`| head`) is not an error.
            let _ = writeln!(std::io::stdout(), "{}", out.render(cli.format));
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
