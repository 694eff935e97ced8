//! The `sgcm` command line.
//!
//! [`run`] takes the whole argument vector (program name first) and returns
//! the exit status with the document to print: 0 for any completed
//! computation, negative verdicts included, 1 for domain errors and 2 for
//! input that does not parse.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::lazard::{adjoin_closure, build_direct_system, extend_mixed_traced, resolve, FinSeq, IndependentFamily, SupportPattern};
use crate::monomial::{betti_table, cd, pd, radical, Monomial, MonomialIdeal, Ring};
use crate::plane::{
    bounding_halflines, classify, classify_agreement, model_regular_pair, normalize_map, param_pair_reject, ModelSemigroup,
    ModelTag, ModelType, QuasiRationalCone, DEFAULT_BOX_RADIUS, DEFAULT_POWER_BOUND,
};
use crate::regularity::{is_parameter_sequence_poly, oracle_regular, pd_criterion, MonomialSequence};
use crate::semigroup::{group_rank, is_full, is_normal, is_positive, membership, AffineSemigroup, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    #[value(name = "json-like", alias = "json")]
    JsonLike,
}

#[derive(Debug, Parser)]
#[command(name = "sgcm", version, about = "Normal semigroups, monomial ideals, regular sequences and plane cones")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "text")]
    output: OutputMode,
    /// Overrides search boxes and power bounds.
    #[arg(long, global = true)]
    bound: Option<i64>,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Debug, clap::Args)]
struct IdealArgs {
    /// Comma separated variable names; inferred from the input when absent.
    #[arg(long)]
    vars: Option<String>,
    #[arg(long)]
    ideal: String,
}

#[derive(Debug, clap::Args)]
struct SeqArgs {
    #[arg(long)]
    vars: Option<String>,
    #[arg(long)]
    seq: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LazardMode {
    Resolve,
    Extend,
    Adjoin,
}

#[derive(Debug, Subcommand)]
enum Verb {
    /// Total Betti numbers of A/I and its projective dimension.
    Betti(IdealArgs),
    Pd(IdealArgs),
    /// Cohomological dimension, read off the radical.
    Cd(IdealArgs),
    /// Colon oracle, pd criterion and pairwise coprimality for a sequence.
    Regseq(SeqArgs),
    /// Height test for parameter sequences in the polynomial ring.
    Paramseq(SeqArgs),
    /// Model semigroup of a plane cone such as "y >= 0 & x > 0".
    Classify {
        #[arg(long)]
        cone: String,
    },
    /// The map sending two independent generators to t*e1 and t*e2.
    Normalize {
        /// Points such as "(1,0),(1,2)".
        #[arg(long)]
        gens: String,
    },
    /// Radical certificate showing X^f, X^g is not a parameter sequence.
    RejectPair {
        #[arg(long)]
        model: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
    },
    /// Families of finite-type sequences covering the inputs.
    LazardResolve {
        /// Sequences "(a,b|t)" separated by ';'.
        #[arg(long)]
        betas: String,
        #[arg(long)]
        alpha: Option<String>,
        /// "l" for {i > l}, or "l:e1,e2" with exceptions.
        #[arg(long, default_value = "0")]
        support: String,
        #[arg(long, value_enum, default_value = "extend")]
        mode: LazardMode,
    },
    /// Stages and transition matrices for a stream of sequences.
    DirectSystem {
        #[arg(long)]
        points: String,
        #[arg(long, default_value = "0")]
        support: String,
        #[arg(long)]
        depth: Option<usize>,
    },
    /// Positivity, normality and membership for a finitely generated semigroup.
    SemigroupCheck {
        #[arg(long)]
        gens: String,
        /// A larger semigroup to test fullness against.
        #[arg(long)]
        sup: Option<String>,
        #[arg(long)]
        point: Option<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Parse { argument: String, position: usize, message: String },
    Domain { name: String, detail: String, message: String },
}

fn parse_err(argument: &str, position: usize, message: impl Into<String>) -> CliError {
    CliError::Parse { argument: argument.to_string(), position, message: message.into() }
}

const WRAPPERS: [&str; 6] = ["Monomial", "Semigroup", "Exact", "Lazard", "Regularity", "Plane"];

fn domain<E: Debug + Display>(e: E) -> CliError {
    let detail = format!("{e:?}");
    let mut inner = detail.as_str();
    while let Some(rest) = WRAPPERS.iter().find_map(|w| inner.strip_prefix(w).and_then(|r| r.strip_prefix('('))) {
        inner = rest.strip_suffix(')').unwrap_or(rest);
    }
    let name = inner.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("").to_string();
    CliError::Domain { name, detail: inner.to_string(), message: e.to_string() }
}

/// Items of a separated list with their byte offsets.
fn items(text: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices().chain(std::iter::once((text.len(), sep))) {
        if c == sep {
            let raw = &text[start..i];
            let lead = raw.len() - raw.trim_start().len();
            if !raw.trim().is_empty() {
                out.push((start + lead, raw.trim()));
            }
            start = i + c.len_utf8();
        }
    }
    out
}

fn strip_parens(text: &str) -> (usize, &str) {
    let t = text.trim_end();
    let lead = t.len() - t.trim_start().len();
    let t = t.trim_start();
    match t.strip_prefix('(').and_then(|s| s.strip_suffix(')')) {
        Some(inner) => (lead + 1, inner),
        None => (lead, t),
    }
}

/// Inference failures point at the offending item of `argument`.
fn ring_for(vars: &Option<String>, argument: &str, list: &[(usize, &str)]) -> Result<Ring, CliError> {
    match vars {
        Some(v) => Ring::new(items(v, ',').into_iter().map(|(_, s)| s.to_string()).collect())
            .map_err(|e| parse_err("--vars", 0, e.to_string())),
        None => {
            for &(pos, s) in list {
                Ring::infer([s]).map_err(|e| parse_err(argument, pos, e.to_string()))?;
            }
            Ring::infer(list.iter().map(|(_, s)| *s)).map_err(|e| parse_err(argument, 0, e.to_string()))
        }
    }
}

fn monomials(argument: &str, vars: &Option<String>, text: &str) -> Result<(Ring, Vec<Monomial>), CliError> {
    let (off, body) = strip_parens(text);
    let list = items(body, ',');
    if list.is_empty() {
        return Err(parse_err(argument, off, "empty list"));
    }
    let shifted: Vec<(usize, &str)> = list.iter().map(|&(pos, s)| (off + pos, s)).collect();
    let ring = ring_for(vars, argument, &shifted)?;
    let ms = list
        .iter()
        .map(|&(pos, s)| ring.parse_monomial(s).map_err(|e| parse_err(argument, off + pos, e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((ring, ms))
}

fn ideal(args: &IdealArgs) -> Result<(Ring, MonomialIdeal), CliError> {
    let (ring, ms) = monomials("--ideal", &args.vars, &args.ideal)?;
    let i = MonomialIdeal::new(ring.nvars(), ms).map_err(domain)?;
    Ok((ring, i))
}

fn int_tuple(argument: &str, offset: usize, text: &str) -> Result<Vec<i64>, CliError> {
    items(text, ',')
        .into_iter()
        .map(|(pos, s)| s.parse::<i64>().map_err(|_| parse_err(argument, offset + pos, format!("expected an integer, found {s:?}"))))
        .collect()
}

/// "(1,0),(1,2)" or a single bare "1,2".
fn int_tuples(argument: &str, text: &str) -> Result<Vec<Vec<i64>>, CliError> {
    if !text.contains('(') {
        return Ok(vec![int_tuple(argument, 0, text)?]);
    }
    let mut out = Vec::new();
    let mut rest = 0;
    while let Some(open) = text[rest..].find('(').map(|i| rest + i) {
        if let Some(bad) = text[rest..open].find(|c: char| !(c.is_whitespace() || c == ',' || c == ';')) {
            return Err(parse_err(argument, rest + bad, "expected '('"));
        }
        let close = text[open..].find(')').map(|i| open + i).ok_or_else(|| parse_err(argument, open, "unclosed '('"))?;
        out.push(int_tuple(argument, open + 1, &text[open + 1..close])?);
        rest = close + 1;
    }
    if let Some(bad) = text[rest..].find(|c: char| !(c.is_whitespace() || c == ',' || c == ';')) {
        return Err(parse_err(argument, rest + bad, "unexpected trailing input"));
    }
    Ok(out)
}

fn point2(argument: &str, text: &str) -> Result<[i64; 2], CliError> {
    let t = text.trim().trim_start_matches("X^");
    let (off, body) = strip_parens(t);
    match int_tuple(argument, off, body)?.as_slice() {
        [a, b] => Ok([*a, *b]),
        v => Err(parse_err(argument, 0, format!("expected an exponent pair, found {} entries", v.len()))),
    }
}

fn finseqs(argument: &str, text: &str) -> Result<Vec<FinSeq>, CliError> {
    items(text, ';')
        .into_iter()
        .map(|(pos, s)| FinSeq::from_str(s).map_err(|e| parse_err(argument, pos, e.to_string())))
        .collect()
}

fn support(text: &str) -> Result<SupportPattern, CliError> {
    let (head, tail) = text.split_once(':').unwrap_or((text, ""));
    let threshold = head.trim().parse::<usize>().map_err(|_| parse_err("--support", 0, "expected a threshold"))?;
    let offset = head.len() + 1;
    let exceptions = items(tail, ',')
        .into_iter()
        .map(|(pos, s)| s.parse::<usize>().map_err(|_| parse_err("--support", offset + pos, "expected an index")))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SupportPattern::new(threshold, exceptions))
}

fn verdict_json(v: &Verdict) -> Value {
    json!({ "value": v.value, "witness": v.witness, "bounded": v.bounded })
}

fn family_json(f: &IndependentFamily) -> Value {
    json!({
        "members": f.members().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        "support": f.support(),
    })
}

fn model_json(m: &ModelType) -> Value {
    json!({ "tag": m.tag.to_string(), "map": m.map, "scale": m.scale })
}

/// A computed result: the machine-readable document and its text rendering.
struct Report {
    doc: Value,
    text: String,
}

fn dispatch(cli: &Cli) -> Result<Report, CliError> {
    let bound = cli.bound;
    match &cli.verb {
        Verb::Betti(args) => {
            let (ring, i) = ideal(args)?;
            let t = betti_table(&i).map_err(domain)?;
            Ok(Report {
                doc: json!({ "ideal": ring.format_ideal(&i), "vars": ring.names(), "betti": t.total, "pd": t.pd }),
                text: format!("{}\n{}", ring.format_ideal(&i), t),
            })
        }
        Verb::Pd(args) => {
            let (ring, i) = ideal(args)?;
            let p = pd(&i).map_err(domain)?;
            Ok(Report {
                doc: json!({ "ideal": ring.format_ideal(&i), "vars": ring.names(), "pd": p }),
                text: format!("pd {p}"),
            })
        }
        Verb::Cd(args) => {
            let (ring, i) = ideal(args)?;
            let c = cd(&i).map_err(domain)?;
            let p = pd(&i).map_err(domain)?;
            let r = ring.format_ideal(&radical(&i));
            Ok(Report {
                doc: json!({ "ideal": ring.format_ideal(&i), "vars": ring.names(), "radical": r, "cd": c, "pd": p }),
                text: format!("radical {r}\ncd {c}\npd {p}"),
            })
        }
        Verb::Regseq(args) => {
            let (ring, ms) = monomials("--seq", &args.vars, &args.seq)?;
            let s = MonomialSequence::new(ms).map_err(domain)?;
            let r = pd_criterion(&s).map_err(domain)?;
            let witness = r.witness.as_ref().map(|(j, m)| json!({ "index": j, "monomial": ring.format_monomial(m) }));
            let subsets: Vec<Value> = r.subset_pds.iter().map(|(s, p)| json!({ "subset": s, "pd": p })).collect();
            let seq: Vec<String> = s.items().iter().map(|m| ring.format_monomial(m)).collect();
            let mut text = format!(
                "sequence {}\noracle_regular {}\npd_criterion {}\nstar_condition {}\ndiscrepancy {}\n",
                seq.join(", "),
                r.oracle_regular,
                r.pd_criterion,
                r.star_condition,
                r.discrepancy
            );
            if let Some((j, m)) = &r.witness {
                text += &format!("witness {} in colon at position {j}\n", ring.format_monomial(m));
            }
            for (sub, p) in &r.subset_pds {
                text += &format!("pd {sub:?} = {p}\n");
            }
            text += &format!("weak proregularity {}", r.weak_proregularity);
            Ok(Report {
                doc: json!({
                    "sequence": seq,
                    "vars": ring.names(),
                    "oracle_regular": r.oracle_regular,
                    "pd_criterion": r.pd_criterion,
                    "star_condition": r.star_condition,
                    "discrepancy": r.discrepancy,
                    "witness": witness,
                    "subset_pds": subsets,
                    "weak_proregularity": r.weak_proregularity,
                }),
                text,
            })
        }
        Verb::Paramseq(args) => {
            let (ring, ms) = monomials("--seq", &args.vars, &args.seq)?;
            let s = MonomialSequence::new(ms).map_err(domain)?;
            let param = is_parameter_sequence_poly(&s);
            let regular = oracle_regular(&s).ok().map(|r| r.0);
            let seq: Vec<String> = s.items().iter().map(|m| ring.format_monomial(m)).collect();
            Ok(Report {
                doc: json!({ "sequence": seq, "vars": ring.names(), "parameter_sequence": param, "oracle_regular": regular }),
                text: format!(
                    "parameter_sequence {param}\noracle_regular {}",
                    regular.map_or("n/a (unit entry)".to_string(), |r| r.to_string())
                ),
            })
        }
        Verb::Classify { cone } => {
            let c = QuasiRationalCone::parse(cone).map_err(|e| match e {
                crate::plane::PlaneError::Parse { position, message } => parse_err("--cone", position, message),
                other => domain(other),
            })?;
            let m = classify(&c).map_err(domain)?;
            let radius = bound.unwrap_or(DEFAULT_BOX_RADIUS);
            let mut doc = json!({ "cone": c.to_string(), "model": model_json(&m) });
            let mut text = format!("cone {c}\ntag {}\nmap {:?}\nscale {}", m.tag, m.map, m.scale);
            if m.tag != ModelTag::FinitelyGenerated {
                let agree = classify_agreement(&c, &m, radius).map_err(domain)?;
                let halflines = bounding_halflines(&c, radius, radius.max(1)).map_err(domain)?;
                doc["agreement"] = verdict_json(&agree);
                doc["rays"] = json!([halflines.l1, halflines.l2]);
                doc["meet_count"] = json!(halflines.meet_count);
                doc["facts"] = Value::Array(halflines.facts.iter().map(verdict_json).collect());
                text += &format!(
                    "\nagreement on box radius {radius}: {}\nrays {:?} {:?}\nboundary rays met: {}",
                    agree.value, halflines.l1, halflines.l2, halflines.meet_count
                );
            }
            Ok(Report { doc, text })
        }
        Verb::Normalize { gens } => {
            let pts = int_tuples("--gens", gens)?;
            let n = normalize_map(&pts, bound.unwrap_or(10)).map_err(domain)?;
            let checks: Vec<Value> = n.checks.iter().map(verdict_json).collect();
            Ok(Report {
                doc: json!({ "t": n.t, "phi": n.phi, "a": n.a, "b": n.b, "checks": checks }),
                text: format!(
                    "a {:?} b {:?}\nt {}\nphi {:?}\nchecks {} {} {}",
                    n.a, n.b, n.t, n.phi, n.checks[0].value, n.checks[1].value, n.checks[2].value
                ),
            })
        }
        Verb::RejectPair { model, f, g } => {
            let tag = ModelTag::from_str(model).map_err(|e| parse_err("--model", 0, e.to_string()))?;
            let m = ModelSemigroup::new(tag).map_err(domain)?;
            let (f, g) = (point2("--f", f)?, point2("--g", g)?);
            let power = bound.map_or(DEFAULT_POWER_BOUND, |b| b.max(1) as u32);
            let cert = param_pair_reject(&m, f, g, power).map_err(domain)?;
            let (regular, witness) = model_regular_pair(&m, f, g, 2 * f.iter().chain(&g).map(|x| x.abs()).max().unwrap_or(0) + 4)
                .map_err(domain)?;
            Ok(Report {
                doc: json!({
                    "model": tag.to_string(),
                    "f": f,
                    "g": g,
                    "certificate": cert,
                    "verified": cert.verify(&m, f, g),
                    "regular_pair": regular,
                    "zero_divisor_witness": witness,
                }),
                text: format!(
                    "certificate X^{:?} (powers h {}, f {}, g {})\nregular pair {regular}{}",
                    cert.h,
                    cert.h_power,
                    cert.f_power,
                    cert.g_power,
                    witness.map_or(String::new(), |c| format!(", witness {c:?}"))
                ),
            })
        }
        Verb::LazardResolve { betas, alpha, support: sup, mode } => {
            let betas = finseqs("--betas", betas)?;
            let sup = support(sup)?;
            let alpha = alpha.as_deref().map(|a| FinSeq::from_str(a).map_err(|e| parse_err("--alpha", 0, e.to_string()))).transpose()?;
            let (family, route) = match (mode, &alpha) {
                (LazardMode::Adjoin, _) => (adjoin_closure(&betas, &sup).map_err(domain)?, None),
                (_, None) => return Err(parse_err("--alpha", 0, "required in this mode")),
                (LazardMode::Resolve, Some(a)) => (resolve(&betas, a, &sup).map_err(domain)?, None),
                (LazardMode::Extend, Some(a)) => {
                    let (f, r) = extend_mixed_traced(&betas, a, &sup).map_err(domain)?;
                    (f, Some(format!("{r:?}")))
                }
            };
            let mut inputs = betas.clone();
            inputs.extend(alpha);
            let coords: Vec<Value> = inputs
                .iter()
                .map(|v| json!({
                    "input": v.to_string(),
                    "coordinates": family.cone_coordinates(v).map(|c| c.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
                }))
                .collect();
            let mut text: String = family.members().iter().map(|m| format!("{m}\n")).collect();
            if let Some(r) = &route {
                text += &format!("route {r}\n");
            }
            text += &format!("covers inputs {}", family.covers(&inputs));
            Ok(Report { doc: json!({ "family": family_json(&family), "route": route, "inputs": coords }), text })
        }
        Verb::DirectSystem { points, support: sup, depth } => {
            let pts = finseqs("--points", points)?;
            let sup = support(sup)?;
            let ds = build_direct_system(&pts, &sup, depth.unwrap_or(pts.len())).map_err(domain)?;
            let stages: Vec<Value> = ds.families.iter().map(family_json).collect();
            let transitions: Vec<Vec<Vec<String>>> =
                ds.transitions.iter().map(|t| (0..t.rows()).map(|i| t.row(i).iter().map(|x| x.to_string()).collect()).collect()).collect();
            let mut text = String::new();
            for (n, f) in ds.families.iter().enumerate() {
                let ms: Vec<String> = f.members().iter().map(|m| m.to_string()).collect();
                text += &format!("stage {}: {}\n", n + 1, ms.join(" "));
            }
            for (n, t) in transitions.iter().enumerate() {
                text += &format!("transition {} -> {}: {:?}\n", n + 1, n + 2, t);
            }
            Ok(Report { doc: json!({ "stages": stages, "transitions": transitions }), text: text.trim_end().to_string() })
        }
        Verb::SemigroupCheck { gens, sup, point } => {
            let g = int_tuples("--gens", gens)?;
            let dim = g.first().map_or(0, Vec::len);
            let with_bound = |s: AffineSemigroup| match bound {
                Some(b) => s.with_search_bound(b),
                None => s,
            };
            let s = with_bound(AffineSemigroup::new(dim, g).map_err(domain)?);
            let positive = is_positive(&s).map_err(domain)?;
            let normal = is_normal(&s).map_err(domain)?;
            let mut doc = json!({
                "semigroup": s,
                "group_rank": group_rank(&s),
                "positive": verdict_json(&positive),
                "normal": verdict_json(&normal),
            });
            let mut text = format!("group rank {}\npositive {}\nnormal {}", group_rank(&s), positive.value, normal.value);
            if let Some(p) = point {
                let p = int_tuples("--point", p)?.pop().unwrap_or_default();
                let v = membership(&s, &p).map_err(domain)?;
                doc["member"] = verdict_json(&v);
                text += &format!("\nmember {}", v.value);
            }
            if let Some(t) = sup {
                let big = with_bound(AffineSemigroup::new(dim, int_tuples("--sup", t)?).map_err(domain)?);
                let v = is_full(&s, &big).map_err(domain)?;
                doc["full"] = verdict_json(&v);
                text += &format!("\nfull {}", v.value);
                if let Some(w) = &v.witness {
                    text += &format!(" (witness {w:?})");
                }
            }
            Ok(Report { doc, text })
        }
    }
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let json_mode = cli.output == OutputMode::JsonLike;
    match dispatch(&cli) {
        Ok(r) if json_mode => (0, serde_json::to_string_pretty(&r.doc).expect("documents serialize")),
        Ok(r) => (0, r.text),
        Err(CliError::Parse { argument, position, message }) => {
            let doc = json!({ "error": "ParseError", "argument": argument, "position": position, "message": message });
            let text = format!("parse error in {argument} at position {position}: {message}");
            (2, if json_mode { serde_json::to_string_pretty(&doc).expect("documents serialize") } else { text })
        }
        Err(CliError::Domain { name, detail, message }) => {
            let doc = json!({ "error": name, "detail": detail, "message": message });
            let text = format!("error {name}: {message}\n{detail}");
            (1, if json_mode { serde_json::to_string_pretty(&doc).expect("documents serialize") } else { text })
        }
    }
}
