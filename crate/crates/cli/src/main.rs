use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use signed_spectra::atlas::{enumerate_switching_classes, generate, scan, FamilySpec, ScanFilters, ScanOptions};
use signed_spectra::invariants::{
    balanced_cliques, frustration_index, motzkin_straus_value, odd_girth, triangle_counts, FRUSTRATION_CAP,
};
use signed_spectra::spectra::{adjacency_spectrum, laplacian_spectrum};
use signed_spectra::{parse_sgr, to_sgr, Family, SignedGraph, TheoremId, Verdict};

/// Signed graph spectra, invariants and bound checks.
#[derive(Parser)]
#[command(name = "sgs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of a graph read from an .sgr file.
    Analyze {
        /// Input file, or `-` for standard input.
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Seed for the random restarts of the quadratic-form search.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 32)]
        restarts: usize,
    },
    /// Print adjacency and Laplacian eigenvalues.
    Spectrum {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Write a named graph as .sgr to standard output.
    Gen {
        family: Family,
        params: Vec<usize>,
    },
    /// Check a statement on every switching class up to `--nmax` vertices.
    Verify {
        theorem: TheoremId,
        #[arg(long)]
        nmax: usize,
        #[command(flatten)]
        filters: FilterArgs,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Allow `--nmax 7` (long-running).
        #[arg(long)]
        allow_n7: bool,
        /// Report progress on standard error.
        #[arg(long)]
        progress: bool,
    },
    /// List one representative per switching class on the input's underlying graph.
    Classes {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct FilterArgs {
    #[arg(long)]
    connected_only: bool,
    #[arg(long)]
    unbalanced_only: bool,
    #[arg(long)]
    nonbipartite_only: bool,
}

/// Fixed 12 significant digits; values within 5e-13 of zero print as `0`.
fn num(x: f64) -> String {
    if x.abs() < 5e-13 {
        return "0".into();
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-4..12).contains(&magnitude) {
        return format!("{x:.11e}");
    }
    let decimals = (11 - magnitude) as usize;
    format!("{x:.decimals$}")
}

fn read_graph(path: &Path) -> Result<SignedGraph> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_sgr(&text).with_context(|| format!("parsing {}", path.display()))
}

#[derive(Serialize)]
struct Analysis {
    n: usize,
    m: usize,
    positive_edges: usize,
    negative_edges: usize,
    balanced: bool,
    frustration: Option<usize>,
    omega_b: usize,
    balanced_triangles: usize,
    unbalanced_triangles: usize,
    odd_girth: Option<usize>,
    lambda_1: f64,
    lambda_n: f64,
    spectral_radius: f64,
    mu_1: f64,
    motzkin_straus: f64,
}

fn analyze(g: &SignedGraph, seed: u64, restarts: usize) -> Result<Analysis> {
    let a = adjacency_spectrum(g)?;
    let l = laplacian_spectrum(g)?;
    let (t_pos, t_neg) = triangle_counts(g);
    let frustration = if g.order() <= FRUSTRATION_CAP {
        Some(frustration_index(g)?.0)
    } else {
        None
    };
    Ok(Analysis {
        n: g.order(),
        m: g.size(),
        positive_edges: g.size() - g.negative_edge_count(),
        negative_edges: g.negative_edge_count(),
        balanced: g.is_balanced().balanced,
        frustration,
        omega_b: balanced_cliques(g).omega_b,
        balanced_triangles: t_pos,
        unbalanced_triangles: t_neg,
        odd_girth: odd_girth(g),
        lambda_1: a.largest(),
        lambda_n: a.smallest(),
        spectral_radius: a.largest().max(a.smallest().abs()),
        mu_1: l.largest(),
        motzkin_straus: motzkin_straus_value(g, restarts, seed)?.0,
    })
}

fn print_analysis(out: &mut impl Write, r: &Analysis) -> io::Result<()> {
    let opt = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
    writeln!(out, "n                {}", r.n)?;
    writeln!(out, "m                {}", r.m)?;
    writeln!(out, "positive edges   {}", r.positive_edges)?;
    writeln!(out, "negative edges   {}", r.negative_edges)?;
    writeln!(out, "balanced         {}", if r.balanced { "yes" } else { "no" })?;
    writeln!(out, "frustration      {}", opt(r.frustration))?;
    writeln!(out, "omega_b          {}", r.omega_b)?;
    writeln!(out, "triangles +/-    {}/{}", r.balanced_triangles, r.unbalanced_triangles)?;
    writeln!(out, "odd girth        {}", opt(r.odd_girth))?;
    writeln!(out, "lambda_1         {}", num(r.lambda_1))?;
    writeln!(out, "lambda_n         {}", num(r.lambda_n))?;
    writeln!(out, "spectral radius  {}", num(r.spectral_radius))?;
    writeln!(out, "mu_1             {}", num(r.mu_1))?;
    writeln!(out, "max x^T A x      {}", num(r.motzkin_straus))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Analyze {
            file,
            json,
            seed,
            restarts,
        } => {
            let report = analyze(&read_graph(&file)?, seed, restarts)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&report)?)?;
            } else {
                print_analysis(&mut out, &report)?;
            }
        }
        Command::Spectrum { file, json } => {
            let g = read_graph(&file)?;
            let a = adjacency_spectrum(&g)?.values;
            let l = laplacian_spectrum(&g)?.values;
            if json {
                let v = serde_json::json!({ "adjacency": a, "laplacian": l });
                writeln!(out, "{v}")?;
            } else {
                let line = |xs: &[f64]| xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ");
                writeln!(out, "adjacency {}", line(&a))?;
                writeln!(out, "laplacian {}", line(&l))?;
            }
        }
        Command::Gen { family, params } => {
            let g = generate(&FamilySpec::new(family, params))?;
            write!(out, "{}", to_sgr(&g))?;
        }
        Command::Verify {
            theorem,
            nmax,
            filters,
            jobs,
            allow_n7,
            progress,
        } => {
            let options = ScanOptions {
                filters: ScanFilters {
                    connected_only: filters.connected_only,
                    unbalanced_only: filters.unbalanced_only,
                    nonbipartite_only: filters.nonbipartite_only,
                },
                jobs,
                allow_n7,
            };
            let report = |done: usize, total: usize| eprintln!("{done}/{total} underlying graphs");
            let result = scan(theorem, nmax, &options, progress.then_some(&report as _))?;
            write!(out, "{}", result.to_json_lines())?;
            out.flush()?;
            if result.summary.count(Verdict::Violation) > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Classes { file, json } => {
            let g = read_graph(&file)?;
            let reps = enumerate_switching_classes(&g)?;
            let own = g.canonical_form().0;
            let index = reps.iter().position(|r| *r == own);
            if json {
                let sgr: Vec<String> = reps.iter().map(to_sgr).collect();
                let v = serde_json::json!({ "count": reps.len(), "input_class": index, "representatives": sgr });
                writeln!(out, "{v}")?;
            } else {
                writeln!(out, "classes {}", reps.len())?;
                if let Some(i) = index {
                    writeln!(out, "input class {i}")?;
                }
                for (i, r) in reps.iter().enumerate() {
                    writeln!(out, "# class {i}")?;
                    write!(out, "{}", to_sgr(r))?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
