//! Command-line interface: one subcommand per pipeline stage, plain-text
//! output by default and `--json` for machine consumption.
//!
//! Exit codes: `0` on success, `1` for domain errors (violated
//! preconditions, named in the message), `2` for I/O and parse errors
//! (parse messages carry line numbers).
//!
//! The enumeration cap used by `basic` resolves as: `--cap` flag, then the
//! `ARTIN_ACTDIM_CAP` environment variable, then the built-in default.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::bounds::{bound_report, ReportOptions};
use crate::complex::SimplicialComplex;
use crate::coxeter::{component_types, group_order, CoxeterMatrix, DEFAULT_ENUM_CAP};
use crate::embed::{embed, EmbedError, DEFAULT_EMBED_BUDGET};
use crate::fungroup::{
    edge_path_presentation, generation_certificate, normal_generation_certificate,
    tietze_simplify, triviality_certificate, Certificate3, DEFAULT_TIETZE_BUDGET,
};
use crate::gluing::{build_ledger, verify_ledger};
use crate::homology::{all_homology, h1_rank, homology_mod_p};
use crate::nerve::{build_nerve, spherical_faces, type_label};
use crate::posets::{basic_construction, dual_cone, verify_basic_construction};

/// Name of the environment variable overriding the enumeration cap.
pub const CAP_ENV_VAR: &str = "ARTIN_ACTDIM_CAP";

#[derive(Parser)]
#[command(
    name = "actdim",
    version,
    about = "Action-dimension toolkit for Artin groups",
    max_term_width = 80
)]
pub struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Classify a Coxeter matrix into irreducible factors.
    Classify { coxmat: PathBuf },
    /// Build the nerve of an Artin group with its spherical labels.
    Nerve { coxmat: PathBuf },
    /// Integral (or mod-p) homology of a complex.
    Homology {
        complex: PathBuf,
        /// Compute Betti numbers over F_p instead of integral groups.
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<u64>,
    },
    /// Edge-path presentation of the fundamental group, with certificates.
    Pi1 { complex: PathBuf },
    /// Certified action-dimension bound report for an Artin group.
    Bounds {
        coxmat: PathBuf,
        /// Assert the K(pi,1) condition when it cannot be verified.
        #[arg(long)]
        assert_kpi1: bool,
        /// Enable the heuristic product rule in the lower bound.
        #[arg(long)]
        product_rule: bool,
    },
    /// Octahedralization (vertex doubling) of a complex.
    Octa { complex: PathBuf },
    /// Barycentric subdivision of a complex.
    Subdivide { complex: PathBuf },
    /// Dual cone of a simplex, given by its dot-joined vertex names.
    Dualcone { complex: PathBuf, simplex: String },
    /// Basic construction U(W, Y) for a finite-type Coxeter matrix.
    Basic {
        coxmat: PathBuf,
        /// Refuse to enumerate groups larger than this.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Embed a complex into a contractible complex of the same dimension.
    Embed {
        complex: PathBuf,
        /// Maximum number of attachment passes.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Gluing ledger of a complex, with independent verification.
    Gluing { complex: PathBuf },
}

enum CliError {
    /// Unreadable input: exit code 2.
    Io(String),
    /// Malformed input: exit code 2, message carries a line number.
    Parse(String),
    /// Violated precondition: exit code 1, message names it.
    Domain(String),
}

/// Entry point used by the binary.
pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) | Err(CliError::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn read_coxmat(path: &Path) -> Result<CoxeterMatrix, CliError> {
    let text = read_text(path)?;
    CoxeterMatrix::parse(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    let text = read_text(path)?;
    SimplicialComplex::parse(&text)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

/// The enumeration cap: `--cap` flag, then `ARTIN_ACTDIM_CAP`, then the
/// library default.
fn enumeration_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var(CAP_ENV_VAR) {
        Ok(raw) => raw.parse::<usize>().map_err(|_| {
            CliError::Parse(format!(
                "{CAP_ENV_VAR}: expected a nonnegative integer, got {raw:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_ENUM_CAP),
    }
}

fn complex_json(k: &SimplicialComplex) -> Value {
    json!({
        "vertices": k.vertex_names(),
        "facets": k
            .facets()
            .iter()
            .map(|f| k.simplex_names(f))
            .collect::<Vec<_>>(),
    })
}

fn certificate_json(c: &Certificate3) -> Value {
    json!({ "status": c.status.to_string(), "witness": c.witness })
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    match &cli.command {
        Command::Classify { coxmat } => {
            let m = read_coxmat(coxmat)?;
            let comps = component_types(&m);
            let types: Vec<_> = comps.iter().map(|(_, t)| *t).collect();
            let order = group_order(&m);
            if cli.json {
                Ok(render_json(&json!({
                    "components": comps.iter().map(|(gens, t)| json!({
                        "generators": gens.iter().map(|g| g + 1).collect::<Vec<_>>(),
                        "type": t.to_string(),
                    })).collect::<Vec<_>>(),
                    "type": type_label(&types),
                    "finite": order.is_some(),
                    "order": order.as_ref().map(|o| o.to_string()),
                })))
            } else {
                let mut out = String::new();
                for (gens, t) in &comps {
                    let shown: Vec<String> =
                        gens.iter().map(|g| (g + 1).to_string()).collect();
                    writeln!(out, "component [{}]: {t}", shown.join(", ")).unwrap();
                }
                writeln!(out, "type: {}", type_label(&types)).unwrap();
                writeln!(out, "finite: {}", order.is_some()).unwrap();
                match order {
                    Some(o) => writeln!(out, "order: {o}").unwrap(),
                    None => writeln!(out, "order: infinite").unwrap(),
                }
                Ok(out)
            }
        }

        Command::Nerve { coxmat } => {
            let m = read_coxmat(coxmat)?;
            let nerve = build_nerve(&m);
            let faces = spherical_faces(&nerve);
            if cli.json {
                Ok(render_json(&json!({
                    "complex": complex_json(&nerve.complex),
                    "faces": faces.iter().map(|f| json!({
                        "simplex": nerve.complex.simplex_label(&f.simplex),
                        "types": f.types.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                        "label": type_label(&f.types),
                        "irreducible": f.irreducible,
                    })).collect::<Vec<_>>(),
                })))
            } else {
                let mut out = nerve.complex.to_text();
                out.push('\n');
                out.push_str("faces:\n");
                for f in &faces {
                    writeln!(
                        out,
                        "{} {} {}",
                        nerve.complex.simplex_label(&f.simplex),
                        type_label(&f.types),
                        if f.irreducible { "irreducible" } else { "reducible" }
                    )
                    .unwrap();
                }
                Ok(out)
            }
        }

        Command::Homology { complex, modulus } => {
            let k = read_complex(complex)?;
            match modulus {
                Some(p) => {
                    let dim = k
                        .dimension()
                        .map_err(|_| CliError::Domain("the complex is empty".into()))?;
                    let mut dims = Vec::new();
                    for deg in 0..=dim {
                        dims.push(homology_mod_p(&k, deg, *p).map_err(domain)?);
                    }
                    if cli.json {
                        Ok(render_json(&json!({ "p": p, "betti": dims })))
                    } else {
                        let mut out = String::new();
                        for (deg, b) in dims.iter().enumerate() {
                            writeln!(out, "H_{deg}(F_{p}) rank: {b}").unwrap();
                        }
                        Ok(out)
                    }
                }
                None => {
                    let groups = all_homology(&k).map_err(domain)?;
                    if cli.json {
                        Ok(render_json(&json!({
                            "euler": k.euler_characteristic(),
                            "groups": groups.iter().enumerate().map(|(deg, g)| json!({
                                "degree": deg,
                                "betti": g.betti,
                                "torsion": g.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
                                "description": g.to_string(),
                            })).collect::<Vec<_>>(),
                        })))
                    } else {
                        let mut out = String::new();
                        for (deg, g) in groups.iter().enumerate() {
                            writeln!(out, "H_{deg} = {g}").unwrap();
                        }
                        writeln!(out, "euler characteristic: {}", k.euler_characteristic())
                            .unwrap();
                        Ok(out)
                    }
                }
            }
        }

        Command::Pi1 { complex } => {
            let k = read_complex(complex)?;
            let p = edge_path_presentation(&k, 0).map_err(domain)?;
            let q = tietze_simplify(&p, DEFAULT_TIETZE_BUDGET);
            let generation = generation_certificate(&k).map_err(domain)?;
            let normal = normal_generation_certificate(&k).map_err(domain)?;
            let triviality = triviality_certificate(&k).map_err(domain)?;
            if cli.json {
                Ok(render_json(&json!({
                    "presentation": p.to_string(),
                    "simplified": q.to_string(),
                    "generators": q.generators.len(),
                    "generators_before": p.generators.len(),
                    "h1_rank": h1_rank(&k),
                    "generation": certificate_json(&generation),
                    "normal_generation": certificate_json(&normal),
                    "triviality": certificate_json(&triviality),
                })))
            } else {
                let mut out = String::new();
                writeln!(out, "presentation: {p}").unwrap();
                writeln!(out, "simplified: {q}").unwrap();
                writeln!(
                    out,
                    "generators: {} (from {})",
                    q.generators.len(),
                    p.generators.len()
                )
                .unwrap();
                writeln!(out, "h1 rank: {}", h1_rank(&k)).unwrap();
                writeln!(out, "generation: {} ({})", generation.status, generation.witness)
                    .unwrap();
                writeln!(
                    out,
                    "normal generation: {} ({})",
                    normal.status, normal.witness
                )
                .unwrap();
                writeln!(
                    out,
                    "triviality: {} ({})",
                    triviality.status, triviality.witness
                )
                .unwrap();
                Ok(out)
            }
        }

        Command::Bounds { coxmat, assert_kpi1, product_rule } => {
            let m = read_coxmat(coxmat)?;
            let report = bound_report(
                &m,
                &ReportOptions { assert_kpi1: *assert_kpi1, product_rule: *product_rule },
            );
            if cli.json {
                Ok(render_json(&report.to_json()))
            } else {
                Ok(report.to_text())
            }
        }

        Command::Octa { complex } => {
            let k = read_complex(complex)?;
            let o = k.octahedralize().map_err(domain)?;
            if cli.json {
                Ok(render_json(&complex_json(&o)))
            } else {
                Ok(o.to_text())
            }
        }

        Command::Subdivide { complex } => {
            let k = read_complex(complex)?;
            let b = k.barycentric_subdivision().map_err(domain)?;
            if cli.json {
                Ok(render_json(&complex_json(&b)))
            } else {
                Ok(b.to_text())
            }
        }

        Command::Dualcone { complex, simplex } => {
            let k = read_complex(complex)?;
            let names: Vec<&str> = simplex.split('.').collect();
            let s = k.simplex_from_names(&names).map_err(domain)?;
            let dc = dual_cone(&k, &s).map_err(domain)?;
            if cli.json {
                Ok(render_json(&complex_json(&dc)))
            } else {
                Ok(dc.to_text())
            }
        }

        Command::Basic { coxmat, cap } => {
            let m = read_coxmat(coxmat)?;
            let cap = enumeration_cap(*cap)?;
            let u = basic_construction(&m, cap).map_err(domain)?;
            let report = verify_basic_construction(&u);
            let action: serde_json::Map<String, Value> = (0..m.rank())
                .map(|i| {
                    let images = u.generator_action(i);
                    let table: serde_json::Map<String, Value> = (0..u
                        .complex
                        .vertex_count())
                        .map(|v| {
                            (
                                u.complex.name(v as u32).to_owned(),
                                Value::String(
                                    u.complex.name(images[v]).to_owned(),
                                ),
                            )
                        })
                        .collect();
                    ((i + 1).to_string(), Value::Object(table))
                })
                .collect();
            if cli.json {
                Ok(render_json(&json!({
                    "complex": complex_json(&u.complex),
                    "order": u.group.elements.len(),
                    "strata": u.strata().len(),
                    "action": Value::Object(action),
                    "report": {
                        "lines": report.lines(),
                        "all_pass": report.all_pass(),
                    },
                })))
            } else {
                let mut out = u.complex.to_text();
                out.push('\n');
                writeln!(
                    out,
                    "action: {}",
                    serde_json::to_string(&Value::Object(action)).expect("serializes")
                )
                .unwrap();
                out.push('\n');
                for line in report.lines() {
                    out.push_str(&line);
                    out.push('\n');
                }
                Ok(out)
            }
        }

        Command::Embed { complex, budget } => {
            let k = read_complex(complex)?;
            let budget = budget.unwrap_or(DEFAULT_EMBED_BUDGET);
            let r = embed(&k, budget).map_err(|e| match &e {
                EmbedError::NotApplicable(_) => domain(e),
                EmbedError::BudgetExhausted { trace, .. } => CliError::Domain(format!(
                    "{e}; trace:\n{}",
                    trace.join("\n")
                )),
            })?;
            if cli.json {
                Ok(render_json(&json!({
                    "complex": complex_json(&r.complex),
                    "certified": r.certified(),
                    "homology_vanishes": r.homology_vanishes,
                    "pi1": certificate_json(&r.pi1_triviality),
                    "trace": r.trace,
                })))
            } else {
                let mut out = String::new();
                writeln!(
                    out,
                    "certified: {}",
                    if r.certified() { "yes" } else { "no" }
                )
                .unwrap();
                out.push_str(&r.complex.to_text());
                out.push('\n');
                writeln!(out, "pi1: {} ({})", r.pi1_triviality.status, r.pi1_triviality.witness)
                    .unwrap();
                if r.trace.is_empty() {
                    writeln!(out, "trace: (no attachments needed)").unwrap();
                } else {
                    writeln!(out, "trace:").unwrap();
                    for t in &r.trace {
                        writeln!(out, "  {t}").unwrap();
                    }
                }
                Ok(out)
            }
        }

        Command::Gluing { complex } => {
            let k = read_complex(complex)?;
            if k.is_empty() {
                return Err(CliError::Domain("the complex is empty".into()));
            }
            let g = build_ledger(&k, None);
            let report = verify_ledger(&k, &g);
            if cli.json {
                Ok(render_json(&json!({
                    "ledger": g.to_json(),
                    "verification": {
                        "all_pass": report.all_pass(),
                        "failures": report.failures,
                    },
                })))
            } else {
                let mut out = g.to_text();
                writeln!(
                    out,
                    "verification: {}",
                    if report.all_pass() { "pass" } else { "FAIL" }
                )
                .unwrap();
                for f in &report.failures {
                    writeln!(out, "  {f}").unwrap();
                }
                Ok(out)
            }
        }
    }
}
