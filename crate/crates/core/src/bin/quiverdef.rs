use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use quiverdef::atlas::{atlas, completeness_sweep, MAX_SWEEP_DIM};
use quiverdef::deform::{classify_all, classify_dihedral, DeformationReport, Verdict};
use quiverdef::harness::{
    algebra_file, algebra_text, module_file, parse_d_range, run_suite, sweep_parameter, to_json, Suite,
};
use quiverdef::quiver::{build_algebra, Family, Kind};
use quiverdef::rep::{
    end_dim, ext1, omega, radical_series, render_layers, set_default_seed, stable_end_dim, string_module_str,
    QuiverRep,
};
use quiverdef::witt_rings::{precision_from_env, witt_summary};
use quiverdef::{Error, Result};

#[derive(Parser)]
#[command(name = "quiverdef", version, about = "Bound quiver algebras, bricks and mod-2 deformation rings over F2")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dimensions, Cartan matrix and radical series of the projectives.
    Algebra {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "full")]
        kind: Kind,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exit 1 if any check fails.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value = "2..3")]
        d_range: String,
        /// Results file (JSON).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build a string or hybrid module from a word and report one datum.
    Module {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "full")]
        kind: Kind,
        #[arg(long)]
        word: String,
        #[arg(long)]
        json: bool,
        #[command(subcommand)]
        what: ModuleQuery,
    },
    /// Minimal polynomial p_(d+1), its mod-2 reduction and the S' isomorphism check.
    Witt {
        #[arg(long)]
        d: u32,
        /// Bits of 2-adic precision; defaults to $QUIVERDEF_PRECISION or 2d+4.
        #[arg(long)]
        precision: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// The fifteen bricks of a family.
    Atlas {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        d: u32,
        /// Also enumerate all representations of total dimension <= N over F2.
        #[arg(long)]
        sweep: Option<usize>,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Mod-2 deformation verdict for every brick.
    Deformation {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        d: u32,
        /// Use the dihedral quotient (family III, d >= 4).
        #[arg(long)]
        quotient: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Subcommand, Clone, Copy)]
enum ModuleQuery {
    Show,
    Radser,
    End,
    StableEnd,
    ExtSelf,
    Omega,
}

fn emit(text: String, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn json_or<T: Serialize>(json: bool, kind: &str, data: T, text: impl FnOnce(&T) -> String) -> Result<String> {
    if json {
        Ok(to_json(kind, &data)? + "\n")
    } else {
        Ok(text(&data))
    }
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::Mod2Trivial => "k".into(),
        Verdict::Mod2Jet { r } => format!("k[t]/(t^{r})"),
        Verdict::Recorded => "k (recorded)".into(),
    }
}

fn deformation_table(reports: &[DeformationReport]) -> String {
    let mut s = format!("{:<20} {:>4}  {:<16} {:<22} case\n", "brick", "Ext1", "R/2R", "ring");
    for r in reports {
        s.push_str(&format!(
            "{:<20} {:>4}  {:<16} {:<22} {}\n",
            r.descriptor,
            r.ext_self_dim,
            verdict_text(&r.verdict),
            r.expected_ring,
            r.case
        ));
    }
    s
}

fn show_text(m: &QuiverRep, word: &str) -> String {
    let f = module_file(m, Some(word));
    let id = m.algebra().id();
    let mut s = format!(
        "{word} over family {}, d = {}, {}\ndims {:?}\nlayers {}\n",
        id.family,
        id.d,
        id.kind,
        f.dims,
        render_layers(&radical_series(m)).join(" / ")
    );
    for (name, rows) in &f.arrows {
        s.push_str(&format!("{name:<7} [{}]\n", rows.join(" ")));
    }
    s
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Algebra { family, d, kind, json, text: _, out } => {
            let alg = build_algebra(family, d, kind)?;
            let body = if json {
                // the file itself carries the schema version, so it reloads as is
                serde_json::to_string_pretty(&algebra_file(&alg))? + "\n"
            } else {
                algebra_text(&alg)
            };
            emit(body, out.as_ref())?;
        }
        Cmd::Verify { suite, d_range, out, seed } => {
            if let Some(s) = seed {
                set_default_seed(s);
            }
            let range = parse_d_range(&d_range)?;
            let results = run_suite(suite, range)?;
            let failed = results.iter().filter(|r| !r.passed()).count();
            for r in &results {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                println!("{tag}  {:<44} {:>7} ms  {}", r.check_id, r.elapsed_ms, r.detail);
                if !r.passed() {
                    println!("      claim: {}", r.claim);
                }
            }
            println!("{} checks, {} failed", results.len(), failed);
            if let Some(p) = out {
                std::fs::write(p, to_json("verify", &results)? + "\n")?;
            }
            return Ok(if failed == 0 { 0 } else { 1 });
        }
        Cmd::Module { family, d, kind, word, json, what } => {
            let alg = build_algebra(family, d, kind)?;
            let m = string_module_str(&alg, &word)?;
            let body = match what {
                ModuleQuery::Show if json => serde_json::to_string_pretty(&module_file(&m, Some(&word)))? + "\n",
                ModuleQuery::Show => show_text(&m, &word),
                ModuleQuery::Radser => json_or(json, "radical-series", radical_series(&m), |l| render_layers(l).join(" / ") + "\n")?,
                ModuleQuery::End => json_or(json, "end", end_dim(&m)?, |n| format!("{n}\n"))?,
                ModuleQuery::StableEnd => json_or(json, "stable-end", stable_end_dim(&m)?, |n| format!("{n}\n"))?,
                ModuleQuery::ExtSelf => json_or(json, "ext-self", ext1(&m, &m)?, |n| format!("{n}\n"))?,
                ModuleQuery::Omega => json_or(json, "omega", module_file(&omega(&m), None), |f| {
                    format!("dims {:?}\n{}\n", f.dims, render_layers(&radical_series(&omega(&m))).join(" / "))
                })?,
            };
            emit(body, None)?;
        }
        Cmd::Witt { d, precision, json } => {
            let m = match precision {
                Some(m) => m,
                None => precision_from_env(d)?,
            };
            let s = witt_summary(d, m)?;
            let passes = s.s_prime_iso;
            let body = json_or(json, "witt", s, |s| {
                format!(
                    "d = {}, precision 2^{}\np_{}(t) = {}\nmod 2: {}\nS' rank {}\nS' isomorphism witness: {} (det valuation {})\n",
                    s.d,
                    s.precision,
                    s.d + 1,
                    s.p_display,
                    s.mod2,
                    s.s_prime_rank,
                    if s.s_prime_iso { "pass" } else { "fail" },
                    s.determinant_valuation
                )
            })?;
            emit(body, None)?;
            if !passes {
                return Ok(1);
            }
        }
        Cmd::Atlas { family, d, sweep, json, out } => {
            let entries = atlas(family, d)?;
            let summaries: Vec<_> = entries.iter().map(|e| e.summary()).collect();
            let report = match sweep {
                Some(n) if n > MAX_SWEEP_DIM => {
                    return Err(Error::Unsupported(format!("sweep limited to total dimension {MAX_SWEEP_DIM}")))
                }
                Some(n) => Some(completeness_sweep(family, d, n)?),
                None => None,
            };
            let problems: usize = entries.iter().map(|e| e.problems().len()).sum();
            let complete = report.as_ref().is_none_or(|r| r.is_complete());
            let body = if json {
                to_json("atlas", serde_json::json!({ "entries": summaries, "sweep": report }))? + "\n"
            } else {
                let mut s = format!("{:<22} {:<10} {:<18} End  stEnd  inflation\n", "brick", "dims", "layers");
                for e in &entries {
                    s.push_str(&format!(
                        "{:<22} {:<10} {:<18} {:>3}  {:>5}  {}\n",
                        e.label(),
                        format!("{:?}", e.dims()),
                        render_layers(&e.radical_layers).join(" / "),
                        e.end_dim_bar,
                        e.stable_end_dim_full,
                        if e.matches_full_string { "ok" } else { "MISMATCH" }
                    ));
                }
                if let Some(r) = &report {
                    s.push_str(&format!(
                        "\nsweep to total dim {}: {} reps, {} bricks, {} classes, missing {:?}, extra {}\n",
                        r.max_total_dim,
                        r.reps_enumerated,
                        r.brick_reps,
                        r.brick_classes.len(),
                        r.missing,
                        r.extra.len()
                    ));
                } else if d == sweep_parameter(family) {
                    s.push_str("\n(pass --sweep 6 for the completeness sweep)\n");
                }
                s
            };
            emit(body, out.as_ref())?;
            return Ok(if problems == 0 && complete { 0 } else { 1 });
        }
        Cmd::Deformation { family, d, quotient, json, out, seed } => {
            if let Some(s) = seed {
                set_default_seed(s);
            }
            let reports = if quotient {
                if family != Family::III {
                    return Err(Error::Unsupported("the quotient deformation table exists only for family III".into()));
                }
                classify_dihedral(d)?
            } else {
                classify_all(family, d)?
            };
            let body = json_or(json, "deformation", &reports, |r| deformation_table(r))?;
            emit(body, out.as_ref())?;
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
