//! Command-line front end. `run` produces the report text and exit status;
//! the binary only prints it.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bases::{
    build_basis, enumerate_monomial_identities, verify_basis, BasisKind, BasisOptions,
};
use crate::error::{Error, Result};
use crate::freealg::{
    format_monomial, format_polynomial, parse_monomial, parse_polynomial, GradedPolynomial,
};
use crate::genericmodel::{central_witness, identity_witness, Witness};
use crate::grading::{ElementaryGrading, GradingStructure};
use crate::rewrite::congruent_mod_j1;
use crate::suites::{run_suite, SuiteReport, DEFAULT_SEED, SUITES};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "matgrade",
    version,
    about = "Graded identities and central polynomials of M_n"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Enumeration {
    MonomialIdentities,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether every polynomial is a graded identity.
    CheckIdentity {
        #[arg(long)]
        grading: String,
        #[arg(long = "poly", required = true)]
        polys: Vec<String>,
    },
    /// Decide whether every polynomial is graded central.
    CheckCentral {
        #[arg(long)]
        grading: String,
        #[arg(long = "poly", required = true)]
        polys: Vec<String>,
    },
    /// Find a rewriting proof that two monomials are congruent.
    Congruence {
        #[arg(long)]
        grading: String,
        /// Exactly two monomials: the start and the target.
        #[arg(long = "poly", num_args = 1, required = true)]
        polys: Vec<String>,
    },
    /// List multilinear monomial identities up to a degree.
    Enumerate {
        #[arg(long)]
        grading: String,
        #[arg(long)]
        max_degree: usize,
        #[arg(long, value_enum, default_value_t = Enumeration::MonomialIdentities)]
        what: Enumeration,
    },
    /// Print the generator families of a basis, optionally verifying them.
    Basis {
        #[arg(long)]
        grading: String,
        #[arg(long, default_value = "identities")]
        kind: String,
        #[arg(long, default_value_t = BasisOptions::default().cutoff)]
        cutoff: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Run a verification suite, or `all` of them.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckIdentity { .. } => "check-identity",
            Command::CheckCentral { .. } => "check-central",
            Command::Congruence { .. } => "congruence",
            Command::Enumerate { .. } => "enumerate",
            Command::Basis { .. } => "basis",
            Command::Verify { .. } => "verify",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

impl Outcome {
    fn new(ok: bool, report: String) -> Self {
        Outcome {
            code: if ok { EXIT_TRUE } else { EXIT_FALSE },
            report,
        }
    }
}

fn polys(text: &[String], structure: &GradingStructure) -> Result<Vec<GradedPolynomial>> {
    text.iter()
        .map(|t| parse_polynomial(t, structure).map_err(Error::from))
        .collect()
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Verified => String::new(),
        Witness::NonzeroEntry { position, entry } => {
            format!("entry ({}, {}) = {entry}", position[0], position[1])
        }
        Witness::Offdiag { position, entry } => {
            format!(
                "off-diagonal entry ({}, {}) = {entry}",
                position[0], position[1]
            )
        }
        Witness::DiagMismatch {
            position,
            entry,
            reference,
        } => format!(
            "diagonal entry ({}, {}) = {entry} differs from (1, 1) = {reference}",
            position[0], position[1]
        ),
    }
}

fn check(grading: &str, texts: &[String], format: Format, central: bool) -> Result<Outcome> {
    let g = ElementaryGrading::from_spec(grading)?;
    let fs = polys(texts, g.structure())?;
    let (yes, no) = if central {
        ("central", "not central")
    } else {
        ("identity", "not an identity")
    };
    let mut all = true;
    let mut lines = Vec::new();
    let mut results = Vec::new();
    for (text, f) in texts.iter().zip(&fs) {
        let w = if central {
            central_witness(f, &g)?
        } else {
            identity_witness(f, &g)
        };
        let ok = w.is_verified();
        all &= ok;
        let verdict = if ok { yes } else { no };
        if fs.len() == 1 {
            lines.push(verdict.to_string());
        } else {
            lines.push(format!("{text}: {verdict}"));
        }
        if !ok {
            lines.push(format!("  {}", witness_text(&w)));
        }
        results.push(json!({
            "poly": format_polynomial(f, g.structure()),
            "verdict": ok,
            "witness": w,
        }));
    }
    let report = match format {
        Format::Text => lines.join("\n"),
        Format::Json => pretty(&json!({
            "grading": g.descriptor(),
            "check": if central { "central" } else { "identity" },
            "verdict": all,
            "results": results,
        })),
    };
    Ok(Outcome::new(all, report))
}

fn congruence(grading: &str, texts: &[String], format: Format) -> Result<Outcome> {
    if texts.len() != 2 {
        return Err(Error::Precondition(format!(
            "congruence takes exactly two --poly monomials, got {}",
            texts.len()
        )));
    }
    let g = ElementaryGrading::from_spec(grading)?;
    let m = parse_monomial(&texts[0], g.structure())?;
    let n = parse_monomial(&texts[1], g.structure())?;
    let proof = congruent_mod_j1(&m, &n, &g)?;
    let report = match (&proof, format) {
        (Some(p), Format::Json) => {
            pretty(&json!({"congruent": true, "proof": p.to_json(g.structure())}))
        }
        (None, Format::Json) => pretty(&json!({"congruent": false})),
        (Some(p), Format::Text) => {
            let mut lines = vec![format!("congruent in {} steps", p.steps.len())];
            lines.push(format!("  {}", format_monomial(&p.start, g.structure())));
            let mut cur = p.start.clone();
            for step in &p.steps {
                cur = crate::rewrite::apply_rule(&cur, step.rule, &step.window, &g)?
                    .expect("replayed proofs do not vanish");
                let window: Vec<String> = step.window.iter().map(|k| k.to_string()).collect();
                lines.push(format!(
                    "  {} [{}] -> {}",
                    step.rule,
                    window.join(","),
                    format_monomial(&cur, g.structure())
                ));
            }
            lines.join("\n")
        }
        (None, Format::Text) => "not congruent: the generic images share no nonzero entry".into(),
    };
    Ok(Outcome::new(proof.is_some(), report))
}

fn enumerate(grading: &str, max_degree: usize, format: Format) -> Result<Outcome> {
    let g = ElementaryGrading::from_spec(grading)?;
    let found: Vec<String> = enumerate_monomial_identities(&g, max_degree)?
        .iter()
        .map(|m| format_monomial(m, g.structure()))
        .collect();
    let report = match format {
        Format::Json => pretty(&json!(found)),
        Format::Text if found.is_empty() => {
            format!("no multilinear monomial identities up to degree {max_degree}")
        }
        Format::Text => found.join("\n"),
    };
    Ok(Outcome::new(true, report))
}

fn basis(
    grading: &str,
    kind: &str,
    cutoff: usize,
    verify: bool,
    format: Format,
) -> Result<Outcome> {
    let g = ElementaryGrading::from_spec(grading)?;
    let kind: BasisKind = kind.parse()?;
    let b = build_basis(&g, kind, &BasisOptions { cutoff })?;
    if verify {
        let r = verify_basis(&b, &g)?;
        let report = match format {
            Format::Json => pretty(&serde_json::to_value(&r).expect("serializable")),
            Format::Text => {
                let mut lines = Vec::new();
                for f in &r.families {
                    lines.push(format!("{} {}/{} verified", f.id, f.verified, f.instances));
                    for x in &f.failures {
                        lines.push(format!("  FAIL {}: {}", x.instance, x.reason));
                    }
                }
                if r.truncated {
                    lines.push(format!("family (4) truncated at length {cutoff}"));
                }
                lines.join("\n")
            }
        };
        return Ok(Outcome::new(r.all_verified(), report));
    }
    let report = match format {
        Format::Json => pretty(&json!({
            "grading": b.grading,
            "kind": b.kind,
            "truncated": b.truncated,
            "families": b.families.iter().map(|f| json!({
                "id": f.id,
                "instances": f.instances.iter().map(|i| json!({
                    "poly": format_polynomial(&i.poly, g.structure()),
                    "expect": i.expect,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })),
        Format::Text => {
            let mut lines = Vec::new();
            for f in &b.families {
                lines.push(format!("{} ({} instances)", f.id, f.instances.len()));
                for i in &f.instances {
                    lines.push(format!("  {}", format_polynomial(&i.poly, g.structure())));
                }
            }
            if b.truncated {
                lines.push(format!("family (4) truncated at length {cutoff}"));
            }
            lines.join("\n")
        }
    };
    Ok(Outcome::new(true, report))
}

fn suite_text(r: &SuiteReport) -> String {
    let mut lines = vec![format!(
        "{} (seed {}): {}",
        r.suite,
        r.seed,
        if r.passed { "PASS" } else { "FAIL" }
    )];
    for i in &r.items {
        let mark = if i.passed { "pass" } else { "FAIL" };
        lines.push(format!("  {mark} {}: {}", i.id, i.detail));
    }
    lines.join("\n")
}

fn verify(suite: &str, seed: u64, format: Format) -> Result<Outcome> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else {
        vec![suite]
    };
    let reports = names
        .iter()
        .map(|s| run_suite(s, seed))
        .collect::<Result<Vec<_>>>()?;
    let ok = reports.iter().all(|r| r.passed);
    let report = match format {
        Format::Json if reports.len() == 1 => {
            pretty(&serde_json::to_value(&reports[0]).expect("serializable"))
        }
        Format::Json => pretty(&json!({"passed": ok, "suites": reports})),
        Format::Text => reports
            .iter()
            .map(suite_text)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Ok(Outcome::new(ok, report))
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    let f = cli.format;
    match &cli.command {
        Command::CheckIdentity { grading, polys } => check(grading, polys, f, false),
        Command::CheckCentral { grading, polys } => check(grading, polys, f, true),
        Command::Congruence { grading, polys } => congruence(grading, polys, f),
        Command::Enumerate {
            grading,
            max_degree,
            what: Enumeration::MonomialIdentities,
        } => enumerate(grading, *max_degree, f),
        Command::Basis {
            grading,
            kind,
            cutoff,
            verify: v,
        } => basis(grading, kind, *cutoff, *v, f),
        Command::Verify { suite, seed } => verify(suite, *seed, f),
    }
}
