//! Command-line front end: batch computations and verification reports over
//! the graph and quasishuffle carriers.
//!
//! Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 resource guard.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dbialg::carrier::check_axioms;
use dbialg::engine::{antipode_takeuchi, antipode_via_delta, eulerian, internal_counit_form};
use dbialg::graph::GraphBasis;
use dbialg::linear::{Elem, Lin, Tensor2};
use dbialg::morphisms::{
    chromatic_dc, hypothesis3_witness, phi_inf, to_qsym, unique_phi,
};
use dbialg::oracles::packed_valid_expansion;
use dbialg::orient::gz_verify;
use dbialg::word::Word;
use dbialg::{Carrier, GraphAlgebra, Scalar, WordAlgebra};

const DEFAULT_GRADE_CAP: usize = 6;
/// Canonicalization cost grows factorially; beyond this many vertices the
/// guard trips unless `--allow-slow` is passed.
const GRAPH_HARD_GUARD: usize = 9;

const EXIT_USAGE: i32 = 1;
const EXIT_VERIFY: i32 = 2;
const EXIT_GUARD: i32 = 3;

#[derive(Parser)]
#[command(name = "dbialg", version, about = "Double-bialgebra computations on graphs and words")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Carrier: `graph`, `qsym`, or `semigroup:<cap>` (saturating letters)
    #[arg(long, global = true, default_value = "graph")]
    carrier: String,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Grade cap for inputs and axiom enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_GRADE_CAP)]
    max_grade: usize,

    /// Append an independent verification block (never changes primary output)
    #[arg(long, global = true)]
    verify: bool,

    /// Lift the 9-vertex canonicalization guard (slow)
    #[arg(long, global = true)]
    allow_slow: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    #[value(name = "Delta")]
    Outer,
    #[value(name = "delta")]
    Inner,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial of a graph
    Chromatic { input: String },
    /// Outer (Delta) or internal (delta) coproduct of a graph or word
    Coproduct {
        #[arg(value_enum)]
        which: Which,
        input: String,
    },
    /// Antipode of a graph or word
    Antipode { input: String },
    /// Eulerian idempotent applied to a graph or word
    Eulerian { input: String },
    /// Infinitesimal character φ_chr of a graph
    Phi { input: String },
    /// Acyclic-orientation report for a graph
    Orientations { input: String },
    /// Image of a graph in QSym (monomial-basis composition sum)
    QsymMorphism { input: String },
    /// Check all double-bialgebra axioms on the selected carrier
    Axioms,
    /// Witness that no homogeneous morphism to QSym exists
    Hypothesis3,
}

enum CarrierChoice {
    Graph,
    Words(WordAlgebra),
}

fn parse_carrier(text: &str) -> Result<CarrierChoice, String> {
    if text == "graph" {
        return Ok(CarrierChoice::Graph);
    }
    if text == "qsym" {
        return Ok(CarrierChoice::Words(WordAlgebra::qsym(3)));
    }
    if let Some(cap) = text.strip_prefix("semigroup:") {
        let cap: u32 = cap
            .parse()
            .map_err(|_| format!("bad semigroup cap in carrier `{}`", text))?;
        if cap == 0 {
            return Err("semigroup cap must be positive".into());
        }
        return Ok(CarrierChoice::Words(WordAlgebra::capped(cap)));
    }
    Err(format!(
        "unknown carrier `{}` (expected graph | qsym | semigroup:<cap>)",
        text
    ))
}

fn fail(code: i32, msg: &str) -> ! {
    eprintln!("error: {}", msg);
    std::process::exit(code);
}

fn parse_graph(cli: &Cli, input: &str) -> GraphBasis {
    let n = input
        .split(';')
        .next()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .unwrap_or(0);
    if n > cli.max_grade {
        fail(
            EXIT_GUARD,
            &format!("graph has {} vertices, over the cap {}; raise --max-grade", n, cli.max_grade),
        );
    }
    if n > GRAPH_HARD_GUARD && !cli.allow_slow {
        fail(
            EXIT_GUARD,
            &format!(
                "graph has {} vertices, over the canonicalization guard {}; pass --allow-slow",
                n, GRAPH_HARD_GUARD
            ),
        );
    }
    match GraphBasis::parse(input) {
        Ok(g) => g,
        Err(e) => fail(EXIT_USAGE, &format!("bad graph `{}`: {}", input, e)),
    }
}

fn parse_word(cli: &Cli, w: &WordAlgebra, input: &str) -> Word {
    let word = match Word::parse(input) {
        Ok(w) => w,
        Err(e) => fail(EXIT_USAGE, &format!("bad word `{}`: {}", input, e)),
    };
    if word.len() > cli.max_grade {
        fail(
            EXIT_GUARD,
            &format!(
                "word has length {}, over the cap {}; raise --max-grade",
                word.len(),
                cli.max_grade
            ),
        );
    }
    for &letter in word.letters() {
        if !w.semigroup.admits(letter) {
            fail(EXIT_USAGE, &format!("letter {} not admitted by the carrier", letter));
        }
    }
    word
}

fn scalar_json(s: &Scalar) -> Value {
    Value::String(s.render())
}

fn elem_json<B: Ord + Clone>(x: &Elem<B>, render: impl Fn(&B) -> String) -> Value {
    Value::Array(
        x.iter()
            .map(|(b, c)| json!({ "basis": render(b), "coeff": c.render() }))
            .collect(),
    )
}

fn tensor_json<B: Ord + Clone>(t: &Tensor2<B>, render: impl Fn(&B) -> String) -> Value {
    Value::Array(
        t.iter()
            .map(|((l, r), c)| json!({ "left": render(l), "right": render(r), "coeff": c.render() }))
            .collect(),
    )
}

fn elem_text<B: Ord + Clone>(x: &Elem<B>, render: impl Fn(&B) -> String) -> String {
    if x.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (b, c) in x.iter() {
        let (sign, mag) = if c.is_negative() { ("-", c.abs()) } else { ("+", c.clone()) };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {} ", sign));
        }
        if mag.is_one() {
            out.push_str(&format!("[{}]", render(b)));
        } else {
            out.push_str(&format!("{}·[{}]", mag.render(), render(b)));
        }
    }
    out
}

fn tensor_text<B: Ord + Clone>(t: &Tensor2<B>, render: impl Fn(&B) -> String) -> String {
    if t.is_zero() {
        return "0".into();
    }
    t.iter()
        .map(|((l, r), c)| format!("{}·[{}] ⊗ [{}]", c.render(), render(l), render(r)))
        .collect::<Vec<_>>()
        .join("\n")
}

fn emit(cli: &Cli, text: String, jsonv: Value) {
    match cli.format {
        Format::Text => println!("{}", text),
        Format::Json => println!("{}", serde_json::to_string_pretty(&jsonv).unwrap()),
    }
}

fn main() {
    let cli = Cli::parse();
    let carrier = match parse_carrier(&cli.carrier) {
        Ok(c) => c,
        Err(e) => fail(EXIT_USAGE, &e),
    };

    match &cli.command {
        Command::Chromatic { input } => {
            let g = parse_graph(&cli, input);
            let poly = unique_phi(GraphAlgebra, &Lin::basis(g.clone()));
            let mut jsonv = json!({
                "schema": 1,
                "command": "chromatic",
                "graph": g.render(),
                "poly": poly.to_string(),
                "coeffs": poly.to_json(),
            });
            let mut text = poly.to_string();
            if cli.verify {
                let dc = chromatic_dc(&g);
                let packed = packed_valid_expansion(&g);
                let ok = dc == poly && packed == poly;
                text.push_str(&format!(
                    "\nverify: deletion-contraction {}, packed-coloring expansion {}",
                    if dc == poly { "agrees" } else { "DISAGREES" },
                    if packed == poly { "agrees" } else { "DISAGREES" },
                ));
                jsonv["verify"] = json!({ "deletion_contraction": dc == poly, "packed": packed == poly });
                if !ok {
                    emit(&cli, text, jsonv);
                    std::process::exit(EXIT_VERIFY);
                }
            }
            emit(&cli, text, jsonv);
        }
        Command::Coproduct { which, input } => match carrier {
            CarrierChoice::Graph => {
                let g = parse_graph(&cli, input);
                let c = GraphAlgebra;
                let t = match which {
                    Which::Outer => c.coproduct(&g),
                    Which::Inner => c.internal_coproduct(&g),
                };
                let jsonv = json!({
                    "schema": 1,
                    "command": "coproduct",
                    "which": if matches!(which, Which::Outer) { "Delta" } else { "delta" },
                    "input": g.render(),
                    "terms": tensor_json(&t, GraphBasis::render),
                });
                emit(&cli, tensor_text(&t, GraphBasis::render), jsonv);
            }
            CarrierChoice::Words(w) => {
                let word = parse_word(&cli, &w, input);
                let t = match which {
                    Which::Outer => w.coproduct(&word),
                    Which::Inner => w.internal_coproduct(&word),
                };
                let jsonv = json!({
                    "schema": 1,
                    "command": "coproduct",
                    "which": if matches!(which, Which::Outer) { "Delta" } else { "delta" },
                    "input": word.render(),
                    "terms": tensor_json(&t, Word::render),
                });
                emit(&cli, tensor_text(&t, Word::render), jsonv);
            }
        },
        Command::Antipode { input } => match carrier {
            CarrierChoice::Graph => run_antipode(&cli, GraphAlgebra, parse_graph(&cli, input), GraphBasis::render),
            CarrierChoice::Words(w) => {
                let word = parse_word(&cli, &w, input);
                run_antipode(&cli, w, word, Word::render)
            }
        },
        Command::Eulerian { input } => match carrier {
            CarrierChoice::Graph => {
                let g = parse_graph(&cli, input);
                let x = eulerian(GraphAlgebra).eval(&g);
                let jsonv = json!({
                    "schema": 1, "command": "eulerian", "input": g.render(),
                    "terms": elem_json(&x, GraphBasis::render),
                });
                emit(&cli, elem_text(&x, GraphBasis::render), jsonv);
            }
            CarrierChoice::Words(w) => {
                let word = parse_word(&cli, &w, input);
                let x = eulerian(w).eval(&word);
                let jsonv = json!({
                    "schema": 1, "command": "eulerian", "input": word.render(),
                    "terms": elem_json(&x, Word::render),
                });
                emit(&cli, elem_text(&x, Word::render), jsonv);
            }
        },
        Command::Phi { input } => {
            let g = parse_graph(&cli, input);
            let value = phi_inf(GraphAlgebra, &Lin::basis(g.clone()));
            let mut jsonv = json!({
                "schema": 1, "command": "phi", "graph": g.render(),
                "value": scalar_json(&value),
            });
            let mut text = value.render();
            if cli.verify {
                let report = gz_verify(&g);
                text.push_str(&format!(
                    "\nverify: single-source count {} with sign {} {}",
                    report.phi_tilde,
                    report.sign,
                    if report.ok { "agrees" } else { "DISAGREES" },
                ));
                let ok = report.ok;
                jsonv["verify"] = serde_json::to_value(&report).unwrap();
                if !ok {
                    emit(&cli, text, jsonv);
                    std::process::exit(EXIT_VERIFY);
                }
            }
            emit(&cli, text, jsonv);
        }
        Command::Orientations { input } => {
            let g = parse_graph(&cli, input);
            let report = gz_verify(&g);
            let mut jsonv = serde_json::to_value(&report).unwrap();
            jsonv["schema"] = json!(1);
            jsonv["command"] = json!("orientations");
            let text = format!(
                "graph: {}\nphi_chr: {}\nphi_tilde: {}\nsign: {}\nok: {}",
                report.graph, report.phi_chr, report.phi_tilde, report.sign, report.ok
            );
            emit(&cli, text, jsonv);
            if !report.ok {
                std::process::exit(EXIT_VERIFY);
            }
        }
        Command::QsymMorphism { input } => {
            let g = parse_graph(&cli, input);
            let c = GraphAlgebra;
            let x = to_qsym(c, &internal_counit_form(c), &Lin::basis(g.clone()));
            let jsonv = json!({
                "schema": 1, "command": "qsym-morphism", "graph": g.render(),
                "terms": elem_json(&x, Word::render),
            });
            let text = if x.is_zero() {
                "0".to_string()
            } else {
                x.iter()
                    .map(|(w, c)| {
                        if c.is_one() {
                            w.render()
                        } else {
                            format!("{}·{}", c.render(), w.render())
                        }
                    })
                    .collect::<Vec<_>>()
                    .join(" + ")
            };
            emit(&cli, text, jsonv);
        }
        Command::Axioms => {
            if matches!(carrier, CarrierChoice::Graph) && cli.max_grade > GRAPH_HARD_GUARD && !cli.allow_slow {
                fail(
                    EXIT_GUARD,
                    &format!("grade cap {} over the guard {}; pass --allow-slow", cli.max_grade, GRAPH_HARD_GUARD),
                );
            }
            let reports = match carrier {
                CarrierChoice::Graph => check_axioms(&GraphAlgebra, cli.max_grade),
                CarrierChoice::Words(w) => check_axioms(&w, cli.max_grade),
            };
            let ok = reports.iter().all(|r| r.holds);
            let text = reports
                .iter()
                .map(|r| format!("{}: {}", r.name, if r.holds { "PASS" } else { "FAIL" }))
                .collect::<Vec<_>>()
                .join("\n");
            let jsonv = json!({
                "schema": 1, "command": "axioms", "carrier": cli.carrier,
                "max_grade": cli.max_grade,
                "axioms": reports.iter().map(|r| json!({ "name": r.name, "holds": r.holds })).collect::<Vec<_>>(),
                "ok": ok,
            });
            emit(&cli, text, jsonv);
            if !ok {
                std::process::exit(EXIT_VERIFY);
            }
        }
        Command::Hypothesis3 => {
            let w = hypothesis3_witness();
            let text = format!(
                "delta_qsym∘Phi(K2):\n{}\n(Phi⊗Phi)∘delta(K2):\n{}\ndifference:\n{}\nhomogeneous morphism exists: false",
                tensor_text(&w.via_qsym, Word::render),
                tensor_text(&w.via_graphs, Word::render),
                tensor_text(&w.difference, Word::render),
            );
            let jsonv = json!({
                "schema": 1, "command": "hypothesis3",
                "via_qsym": tensor_json(&w.via_qsym, Word::render),
                "via_graphs": tensor_json(&w.via_graphs, Word::render),
                "difference": tensor_json(&w.difference, Word::render),
                "homogeneous_morphism_exists": false,
            });
            emit(&cli, text, jsonv);
        }
    }
}

fn run_antipode<C, F>(cli: &Cli, c: C, b: C::Basis, render: F)
where
    C: Carrier + Copy + 'static,
    F: Fn(&C::Basis) -> String,
{
    let x = antipode_takeuchi(c).eval(&b);
    let mut jsonv = json!({
        "schema": 1, "command": "antipode",
        "terms": elem_json(&x, &render),
    });
    let mut text = elem_text(&x, &render);
    if cli.verify {
        let via_theta = antipode_via_delta(c).eval(&b);
        let ok = via_theta == x;
        text.push_str(&format!(
            "\nverify: internal-coproduct route {}",
            if ok { "agrees" } else { "DISAGREES" },
        ));
        jsonv["verify"] = json!({ "theta_route": ok });
        if !ok {
            emit(cli, text, jsonv);
            std::process::exit(EXIT_VERIFY);
        }
    }
    emit(cli, text, jsonv);
}
