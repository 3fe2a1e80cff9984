//! The `krlab` command line.
//!
//! Exit codes: 0 all checks pass, 1 a check is falsified, 2 input or
//! infrastructure error, 3 request outside the implemented models.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::cartan::{AffineType, Node};
use crate::crystal::Crystal;
use crate::demazure::{demazure_character, demazure_data};
use crate::error::KrError;
use crate::hwpaths::{all_paths, verify_paths};
use crate::kr::{scan_instances, KrCrystal, DEFAULT_CAP};
use crate::report::VerificationReport;
use crate::rmatrix::{pair_input, TwoFold};
use crate::suites;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FALSIFIED: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_OUT_OF_SCOPE: i32 = 3;

pub const CAP_VAR: &str = "KRLAB_NODE_CAP";

#[derive(Debug, Parser)]
#[command(name = "krlab", version, about = "Kirillov-Reshetikhin crystals, Demazure crystals and combinatorial R-matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a KR crystal and print it.
    Generate {
        #[command(flatten)]
        kr: KrArgs,
        /// Graphviz output.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite: wtilde, sigma, demazure, characters, paths, rmatrix, axioms.
    Verify(VerifyArgs),
    /// Apply the combinatorial R-matrix to an element (or print the table).
    Rmatrix {
        /// Affine type, e.g. A2~1 or A4~2.
        ty: String,
        /// `r,s` of the first factor.
        first: String,
        /// `r,s` of the second factor.
        second: String,
        /// Element `b1 * b2`, e.g. "1,2 * 1/2".
        element: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Lowering paths from u to the classical highest weight vectors.
    Paths {
        #[command(flatten)]
        kr: KrArgs,
        /// Execute the paths on the crystal.
        #[arg(long)]
        run: bool,
        #[arg(long)]
        json: bool,
    },
    /// Demazure character of D(c_r omega_r, s) against the weights of B^{r,s}.
    Character {
        #[command(flatten)]
        kr: KrArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct KrArgs {
    /// Affine type, e.g. A2~1, A4~2.
    pub ty: String,
    pub r: usize,
    pub s: usize,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub suite: String,
    /// Optional instance: `TYPE R S`, or `TYPE R1,S1 R2,S2` for rmatrix.
    pub instance: Vec<String>,
    /// Largest rank for wtilde (default 6) and sigma (default 8).
    #[arg(long)]
    pub max_rank: Option<usize>,
    /// Check the R-matrix recipe on this many random elements per product.
    #[arg(long)]
    pub sample: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub json: bool,
}

/// Failure of a command, carrying its exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<KrError> for Failure {
    fn from(e: KrError) -> Self {
        let code = match e {
            KrError::OutOfScope(_) => EXIT_OUT_OF_SCOPE,
            KrError::AssumptionViolated(_) => EXIT_FALSIFIED,
            _ => EXIT_ERROR,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_ERROR, message: e.to_string() }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure { code: EXIT_ERROR, message: e.to_string() }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

fn node_cap() -> std::result::Result<usize, Failure> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| Failure {
            code: EXIT_ERROR,
            message: format!("{CAP_VAR} must be a positive integer, got {v:?}"),
        }),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn parse_kr(ty: &str, r: usize, s: usize) -> std::result::Result<KrCrystal, Failure> {
    let t: AffineType = ty.parse()?;
    Ok(KrCrystal::new(t, r, s)?)
}

fn parse_rs(text: &str) -> std::result::Result<(usize, usize), Failure> {
    let bad = || Failure { code: EXIT_ERROR, message: format!("expected r,s, got {text:?}") };
    let (r, s) = text.split_once(',').ok_or_else(bad)?;
    Ok((r.trim().parse().map_err(|_| bad())?, s.trim().parse().map_err(|_| bad())?))
}

/// Runs the command line `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_PASS };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let res = match cli.command {
        Command::Generate { kr, dot, json } => cmd_generate(&kr, dot, json, out),
        Command::Verify(v) => cmd_verify(&v, out),
        Command::Rmatrix { ty, first, second, element, json } => cmd_rmatrix(&ty, &first, &second, element.as_deref(), json, out),
        Command::Paths { kr, run, json } => cmd_paths(&kr, run, json, out),
        Command::Character { kr, json } => cmd_character(&kr, json, out),
    };
    match res {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "krlab: {}", f.message);
            f.code
        }
    }
}

fn cmd_generate(a: &KrArgs, dot: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let kr = parse_kr(&a.ty, a.r, a.s)?;
    let g = kr.graph(node_cap()?)?;
    if dot {
        out.write_all(g.to_dot().as_bytes())?;
    } else if json {
        serde_json::to_writer_pretty(&mut *out, &g.to_wire().normalized())?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}: {} elements, {} edges", kr.label(), g.len(), g.edges.len())?;
        for b in &g.nodes {
            writeln!(out, "  {}", b.to_input_string())?;
        }
    }
    Ok(EXIT_PASS)
}

fn emit_report(rep: &VerificationReport, json: bool, out: &mut dyn Write) -> CmdResult {
    if json {
        serde_json::to_writer_pretty(&mut *out, rep)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{rep}")?;
    }
    Ok(if rep.all_passed() { EXIT_PASS } else { EXIT_FALSIFIED })
}

fn single_instances(v: &VerifyArgs) -> std::result::Result<Vec<KrCrystal>, Failure> {
    match v.instance.as_slice() {
        [] => scan_instances(3, 3, 3, 2)
            .into_iter()
            .map(|(t, r, s)| Ok(KrCrystal::new(t, r, s)?))
            .collect(),
        [ty, r, s] => {
            let bad = |x: &str| Failure { code: EXIT_ERROR, message: format!("expected a number, got {x:?}") };
            let r = r.parse().map_err(|_| bad(r))?;
            let s = s.parse().map_err(|_| bad(s))?;
            Ok(vec![parse_kr(ty, r, s)?])
        }
        other => Err(Failure { code: EXIT_ERROR, message: format!("expected TYPE R S, got {other:?}") }),
    }
}

fn cmd_verify(v: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let cap = node_cap()?;
    let mut rep = VerificationReport::new(&v.suite);
    match v.suite.as_str() {
        "wtilde" => rep.merge(suites::verify_wtilde(v.max_rank.unwrap_or(6))?),
        "sigma" => rep.merge(suites::verify_sigma(v.max_rank.unwrap_or(8))?),
        "demazure" => {
            for kr in single_instances(v)? {
                rep.merge(suites::verify_demazure(&kr, cap)?);
            }
            if v.instance.is_empty() {
                for (n, s) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
                    for r in 1..=n {
                        rep.merge(suites::verify_y_rows(n, r, s)?);
                    }
                }
            }
        }
        "characters" => {
            for kr in single_instances(v)? {
                rep.merge(suites::verify_characters(&kr, cap)?);
            }
        }
        "paths" => {
            for kr in single_instances(v)? {
                rep.merge(verify_paths(&kr, cap)?);
            }
        }
        "axioms" => {
            for kr in single_instances(v)? {
                rep.merge(suites::verify_axioms(&kr, cap)?);
            }
        }
        "rmatrix" => {
            let sample = v.sample.map(|n| (n, v.seed));
            let pairs = match v.instance.as_slice() {
                [] => {
                    let mut p = suites::rmatrix_instances(2, 2, 0, 0);
                    p.extend(suites::rmatrix_instances(0, 0, 2, 1));
                    p
                }
                [ty, a, b] => vec![(ty.parse::<AffineType>()?, parse_rs(a)?, parse_rs(b)?)],
                other => {
                    return Err(Failure { code: EXIT_ERROR, message: format!("expected TYPE R1,S1 R2,S2, got {other:?}") });
                }
            };
            for (t, (r1, s1), (r2, s2)) in pairs {
                let b1 = KrCrystal::new(t, r1, s1)?;
                let b2 = KrCrystal::new(t, r2, s2)?;
                rep.merge(suites::verify_rmatrix(&b1, &b2, cap, sample)?);
            }
        }
        other => {
            return Err(Failure {
                code: EXIT_ERROR,
                message: format!("unknown suite {other:?}; expected one of {}", suites::SUITES.join(", ")),
            });
        }
    }
    emit_report(&rep.finish(), v.json, out)
}

#[derive(Serialize)]
struct RImage {
    input: String,
    image: String,
    lowering: bool,
    /// Operators applied to the input, in order.
    word: Vec<Node>,
    /// Operators applied to the anchor, in order.
    anchor_word: Vec<Node>,
}

fn cmd_rmatrix(ty: &str, first: &str, second: &str, element: Option<&str>, json: bool, out: &mut dyn Write) -> CmdResult {
    let t: AffineType = ty.parse()?;
    let (r1, s1) = parse_rs(first)?;
    let (r2, s2) = parse_rs(second)?;
    let two = TwoFold::new(KrCrystal::new(t, r1, s1)?, KrCrystal::new(t, r2, s2)?, node_cap()?)?;
    let elems = match element {
        Some(text) => vec![two.parse(text)?],
        None => two.elements(),
    };
    let mut images = Vec::new();
    for b in &elems {
        let (image, pi, pj) = two.combinatorial_r(b)?;
        images.push(RImage {
            input: pair_input(b),
            image: pair_input(&image),
            lowering: pi.lowering,
            word: pi.word,
            anchor_word: pj.word,
        });
    }
    if json {
        serde_json::to_writer_pretty(&mut *out, &images)?;
        writeln!(out)?;
        return Ok(EXIT_PASS);
    }
    let op = |lowering: bool| if lowering { "f" } else { "e" };
    for im in &images {
        writeln!(out, "R({}) = {}", im.input, im.image)?;
        if element.is_some() {
            let show = |w: &[Node]| {
                if w.is_empty() {
                    "1".to_string()
                } else {
                    w.iter().rev().map(|i| format!("{}{i}", op(im.lowering))).collect::<Vec<_>>().join(" ")
                }
            };
            writeln!(out, "  to u1 ⊗ u2: {}", show(&im.word))?;
            writeln!(out, "  anchor to u1 ⊗ u2: {}", show(&im.anchor_word))?;
        }
    }
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct PathLine {
    lambda: Vec<usize>,
    monomial: String,
    word: Vec<(Node, usize)>,
}

fn cmd_paths(a: &KrArgs, run: bool, json: bool, out: &mut dyn Write) -> CmdResult {
    let t: AffineType = a.ty.parse()?;
    if run {
        let kr = KrCrystal::new(t, a.r, a.s)?;
        return emit_report(&verify_paths(&kr, node_cap()?)?, json, out);
    }
    let lines: Vec<PathLine> = all_paths(t, a.r, a.s)?
        .into_iter()
        .map(|(lambda, m)| PathLine { lambda, monomial: m.to_string(), word: m.flat() })
        .collect();
    if json {
        serde_json::to_writer_pretty(&mut *out, &lines)?;
        writeln!(out)?;
    } else {
        for l in &lines {
            writeln!(out, "{:?}: {}", l.lambda, l.monomial)?;
        }
    }
    Ok(EXIT_PASS)
}

#[derive(Serialize)]
struct CharacterOut {
    instance: String,
    word: Vec<Node>,
    top: String,
    dimension: i64,
    character: crate::demazure::CharacterPolynomial,
    classical: Vec<(String, i64)>,
    matches_crystal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    difference: Option<String>,
}

fn cmd_character(a: &KrArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let kr = parse_kr(&a.ty, a.r, a.s)?;
    let d = kr.cartan();
    let data = demazure_data(&kr)?;
    let chi = demazure_character(d, &data.word(), &data.top);
    let cmp = crate::demazure::compare_characters(&kr, node_cap()?)?;
    let res = CharacterOut {
        instance: kr.label(),
        word: data.word(),
        top: data.top.to_string(),
        dimension: chi.dimension(),
        classical: chi.classical(d).into_iter().map(|(w, m)| (w.to_string(), m)).collect(),
        character: chi,
        matches_crystal: cmp.is_ok(),
        difference: cmp.err(),
    };
    if json {
        serde_json::to_writer_pretty(&mut *out, &res)?;
        writeln!(out)?;
    } else {
        writeln!(out, "{}: D = D_{:?} on {}", res.instance, res.word, res.top)?;
        writeln!(out, "dimension {}, {} affine terms", res.dimension, res.character.num_terms())?;
        for (w, m) in &res.classical {
            writeln!(out, "  {m} x {w}")?;
        }
        match &res.difference {
            None => writeln!(out, "classical projection matches the weights of the crystal")?,
            Some(diff) => writeln!(out, "MISMATCH: {diff}")?,
        }
    }
    Ok(if res.matches_crystal { EXIT_PASS } else { EXIT_FALSIFIED })
}
