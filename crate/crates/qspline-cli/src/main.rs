//! `qspline` — evaluate quaternionic B-splines, emit the sample-figure
//! datasets, cross-check the Gamma routes and run the verification suites.
//!
//! Exit codes: 0 success; 1 failed verification or internal consistency
//! check; 2 invalid arguments or orders; 3 I/O failure.

mod output;
mod parse;

use clap::{Parser, Subcommand, ValueEnum};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use output::{
    biquat_row, manifest_path, quat_row, write_csv, write_svg, ConfigInfo, GridSpec, RunManifest,
};
use parse::{format_order, g15, parse_order};
use qspline::fourier::bspline_hat_grid;
use qspline::gamma::{gamma_gauss_limit, gamma_quadrature, gamma_quat};
use qspline::time_domain::{bspline_time_grid, EvalConfig};
use qspline::verify::{run_suite, CheckResult, Profile, SUITES};
use qspline::{Quaternion, SplineOrder};

#[derive(Parser)]
#[command(
    name = "qspline",
    version,
    about = "Quaternionic B-spline evaluation and verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Domain {
    Time,
    Fourier,
}

#[derive(Clone, Copy, ValueEnum)]
enum TolProfile {
    Fast,
    Strict,
}

#[derive(Clone, Copy, ValueEnum)]
enum GammaMethodArg {
    Complexified,
    Quadrature,
    GaussLimit,
}

#[derive(Subcommand)]
enum Command {
    /// Sample B_q on a uniform grid and write CSV (+ JSON manifest).
    Eval {
        /// Order literal, e.g. "3+0.2e1-0.3e2+0.4e3" or "2" or "3+1/5e1"
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum)]
        domain: Domain,
        /// start:step:count
        #[arg(long)]
        grid: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Emit the figure datasets (family of orders on t in [0, 6]).
    Figures {
        #[arg(long)]
        out_dir: PathBuf,
        /// Also write one SVG line plot per dataset.
        #[arg(long)]
        svg: bool,
    },
    /// Run a property suite and print a pass/fail table.
    Verify {
        /// algebra | gamma | fourier | time | gaussian | all
        #[arg(long)]
        suite: String,
        #[arg(long, value_enum, default_value = "fast")]
        tol_profile: TolProfile,
    },
    /// Print Γ(q) with 15 significant digits per component.
    Gamma {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long, value_enum, default_value = "complexified")]
        method: GammaMethodArg,
        /// Evaluate all three methods and report the max pairwise deviation.
        #[arg(long)]
        cross_check: bool,
        /// n for the Gauss-limit product.
        #[arg(long, default_value_t = 30_000_000)]
        gauss_n: usize,
    },
}

enum CliError {
    Usage(String),
    Io(String),
    Check(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) | CliError::Check(m) => m,
        }
    }
}

fn usage_err(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

fn io_err(path: &std::path::Path, e: std::io::Error) -> CliError {
    CliError::Io(format!("{}: {e}", path.display()))
}

fn init_threads() {
    if let Ok(s) = std::env::var("QSPLINE_THREADS") {
        if let Ok(n) = s.trim().parse::<usize>() {
            if n > 0 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
        }
    }
}

fn main() -> ExitCode {
    init_threads();
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval {
            q,
            domain,
            grid,
            out,
        } => cmd_eval(&q, domain, &grid, &out),
        Command::Figures { out_dir, svg } => cmd_figures(&out_dir, svg),
        Command::Verify { suite, tol_profile } => cmd_verify(&suite, tol_profile),
        Command::Gamma {
            q,
            method,
            cross_check,
            gauss_n,
        } => cmd_gamma(&q, method, cross_check, gauss_n),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

// ── eval ─────────────────────────────────────────────────────────────

const CSV_HEADER: [&str; 6] = ["t_or_xi", "scalar", "v1", "v2", "v3", "modulus"];

fn cmd_eval(q_str: &str, domain: Domain, grid_str: &str, out: &Path) -> Result<(), CliError> {
    let started = Instant::now();
    let q = parse_order(q_str).map_err(usage_err)?;
    let grid = GridSpec::parse(grid_str).map_err(usage_err)?;
    let config = EvalConfig::default();

    let rows = match domain {
        Domain::Time => {
            let order = SplineOrder::time_domain(q).map_err(usage_err)?;
            let field =
                bspline_time_grid(&order, grid.start, grid.step, grid.count).map_err(usage_err)?;
            field
                .samples
                .iter()
                .enumerate()
                .map(|(i, s)| quat_row(field.grid_point(i), s))
                .collect::<Vec<_>>()
        }
        Domain::Fourier => {
            let order = SplineOrder::l2(q).map_err(usage_err)?;
            let field =
                bspline_hat_grid(&order, grid.start, grid.step, grid.count).map_err(usage_err)?;
            field
                .samples
                .iter()
                .enumerate()
                .map(|(i, s)| biquat_row(field.grid_point(i), s))
                .collect()
        }
    };

    write_csv(out, &CSV_HEADER, &rows).map_err(|e| io_err(out, e))?;
    let manifest = RunManifest {
        command: std::env::args().collect::<Vec<_>>().join(" "),
        orders: vec![format_order(&q)],
        grid: Some(grid),
        config: ConfigInfo::from(config),
        outputs: vec![out.display().to_string()],
        timing_seconds: started.elapsed().as_secs_f64(),
    };
    let mpath = manifest_path(out);
    manifest.write(&mpath).map_err(|e| io_err(&mpath, e))?;
    Ok(())
}

// ── figures ──────────────────────────────────────────────────────────

fn cmd_figures(out_dir: &PathBuf, svg: bool) -> Result<(), CliError> {
    let started = Instant::now();
    std::fs::create_dir_all(out_dir).map_err(|e| io_err(out_dir, e))?;
    let data = qspline::figures::compute_figure_data().map_err(usage_err)?;

    // homogeneity forces each order's vector samples onto one line through
    // the origin; reject the run if that fails
    for field in data.family.iter().chain(data.contrast.iter()) {
        let resid = qspline::figures::planarity_residual(field);
        if resid >= 1e-9 {
            return Err(CliError::Check(format!(
                "vector-phase planarity violated: residual {resid} for order {}",
                format_order(&field.order)
            )));
        }
    }

    let t_col: Vec<f64> = (0..qspline::figures::FIGURE_N)
        .map(|i| qspline::figures::FIGURE_T0 + qspline::figures::FIGURE_DT * i as f64)
        .collect();
    let m_headers = ["m0", "m1", "m2", "m3", "m4"];
    let mut outputs: Vec<PathBuf> = Vec::new();

    // per-sample scalar extractors for the family figures
    let figures: [(&str, fn(&Quaternion) -> f64); 5] = [
        ("fig1_modulus", |s| s.norm()),
        ("fig1_scalar", |s| s.a),
        ("fig2_v1", |s| s.v1),
        ("fig2_v2", |s| s.v2),
        ("fig2_v3", |s| s.v3),
    ];
    for (name, extract) in figures {
        let mut header = vec!["t"];
        header.extend(m_headers);
        let rows: Vec<Vec<String>> = t_col
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                let mut row = vec![g15(t)];
                for field in &data.family {
                    row.push(g15(extract(&field.samples[i])));
                }
                row
            })
            .collect();
        let path = out_dir.join(format!("{name}.csv"));
        write_csv(&path, &header, &rows).map_err(|e| io_err(&path, e))?;
        if svg {
            let series: Vec<(String, Vec<(f64, f64)>)> = data
                .family
                .iter()
                .enumerate()
                .map(|(m, field)| {
                    (
                        format!("m{m}"),
                        t_col
                            .iter()
                            .enumerate()
                            .map(|(i, &t)| (t, extract(&field.samples[i])))
                            .collect(),
                    )
                })
                .collect();
            let spath = out_dir.join(format!("{name}.svg"));
            write_svg(&spath, &series).map_err(|e| io_err(&spath, e))?;
            outputs.push(spath);
        }
        outputs.push(path);
    }

    // phase plots: scalar vs v1 and v1 vs v2 for the family
    type Extract = fn(&Quaternion) -> f64;
    let phase_plots: [(&str, Extract, Extract); 2] = [
        ("fig3_scalar_v1", |s| s.a, |s| s.v1),
        ("fig3_v1_v2", |s| s.v1, |s| s.v2),
    ];
    for (name, fx, fy) in phase_plots {
        let mut header = vec!["t".to_string()];
        for m in 0..5 {
            header.push(format!("x_m{m}"));
            header.push(format!("y_m{m}"));
        }
        let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
        let rows: Vec<Vec<String>> = t_col
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                let mut row = vec![g15(t)];
                for field in &data.family {
                    row.push(g15(fx(&field.samples[i])));
                    row.push(g15(fy(&field.samples[i])));
                }
                row
            })
            .collect();
        let path = out_dir.join(format!("{name}.csv"));
        write_csv(&path, &header_refs, &rows).map_err(|e| io_err(&path, e))?;
        if svg {
            let series: Vec<(String, Vec<(f64, f64)>)> = data
                .family
                .iter()
                .enumerate()
                .map(|(m, field)| {
                    (
                        format!("m{m}"),
                        field.samples.iter().map(|s| (fx(s), fy(s))).collect(),
                    )
                })
                .collect();
            let spath = out_dir.join(format!("{name}.svg"));
            write_svg(&spath, &series).map_err(|e| io_err(&spath, e))?;
            outputs.push(spath);
        }
        outputs.push(path);
    }

    // contrast orders: v1 vs v2
    {
        let header = ["t", "v1_q1", "v2_q1", "v1_q2", "v2_q2"];
        let rows: Vec<Vec<String>> = t_col
            .iter()
            .enumerate()
            .map(|(i, &t)| {
                vec![
                    g15(t),
                    g15(data.contrast[0].samples[i].v1),
                    g15(data.contrast[0].samples[i].v2),
                    g15(data.contrast[1].samples[i].v1),
                    g15(data.contrast[1].samples[i].v2),
                ]
            })
            .collect();
        let path = out_dir.join("fig4_v1_v2.csv");
        write_csv(&path, &header, &rows).map_err(|e| io_err(&path, e))?;
        if svg {
            let series: Vec<(String, Vec<(f64, f64)>)> = data
                .contrast
                .iter()
                .enumerate()
                .map(|(k, field)| {
                    (
                        format!("q{}", k + 1),
                        field.samples.iter().map(|s| (s.v1, s.v2)).collect(),
                    )
                })
                .collect();
            let spath = out_dir.join("fig4_v1_v2.svg");
            write_svg(&spath, &series).map_err(|e| io_err(&spath, e))?;
            outputs.push(spath);
        }
        outputs.push(path);
    }

    let mut orders: Vec<String> = qspline::figures::family_orders()
        .iter()
        .map(format_order)
        .collect();
    orders.extend(qspline::figures::contrast_orders().iter().map(format_order));
    let manifest = RunManifest {
        command: std::env::args().collect::<Vec<_>>().join(" "),
        orders,
        grid: Some(GridSpec {
            start: qspline::figures::FIGURE_T0,
            step: qspline::figures::FIGURE_DT,
            count: qspline::figures::FIGURE_N,
        }),
        config: ConfigInfo::from(EvalConfig::default()),
        outputs: outputs.iter().map(|p| p.display().to_string()).collect(),
        timing_seconds: started.elapsed().as_secs_f64(),
    };
    let mpath = out_dir.join("figures.manifest.json");
    manifest.write(&mpath).map_err(|e| io_err(&mpath, e))?;
    Ok(())
}

// ── verify ───────────────────────────────────────────────────────────

fn print_results(suite: &str, results: &[CheckResult]) -> bool {
    let mut ok = true;
    for r in results {
        let status = if r.passed { "pass" } else { "FAIL" };
        let tol = if r.tolerance.is_nan() {
            "-".to_string()
        } else {
            format!("{:.3e}", r.tolerance)
        };
        println!(
            "  [{status}] {:<55} measured {: >12.5e}  tol {}",
            r.name, r.measured, tol
        );
        if let Some(note) = &r.note {
            println!("         note: {note}");
        }
        ok &= r.passed;
    }
    if ok {
        println!("suite {suite}: all checks passed");
    } else {
        println!("suite {suite}: FAILURES present");
    }
    ok
}

fn cmd_verify(suite: &str, profile: TolProfile) -> Result<(), CliError> {
    let profile = match profile {
        TolProfile::Fast => Profile::Fast,
        TolProfile::Strict => Profile::Strict,
    };
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(CliError::Usage(format!(
            "unknown suite '{suite}' (expected one of {} or all)",
            SUITES.join(", ")
        )));
    };
    let mut all_ok = true;
    for name in names {
        println!("suite {name}:");
        let started = Instant::now();
        let results = run_suite(name, profile).expect("suite name validated");
        all_ok &= print_results(name, &results);
        println!("  ({:.2} s)", started.elapsed().as_secs_f64());
    }
    if all_ok {
        Ok(())
    } else {
        Err(CliError::Check("one or more property checks failed".into()))
    }
}

// ── gamma ────────────────────────────────────────────────────────────

fn cmd_gamma(
    q_str: &str,
    method: GammaMethodArg,
    cross_check: bool,
    gauss_n: usize,
) -> Result<(), CliError> {
    let q = parse_order(q_str).map_err(usage_err)?;
    if cross_check {
        let c = gamma_quat(q).map_err(usage_err)?.value;
        let quad = gamma_quadrature(q).map_err(usage_err)?.value;
        let gauss = gamma_gauss_limit(q, gauss_n).map_err(usage_err)?.value;
        println!("complexified : {}", format_order(&c));
        println!("quadrature   : {}", format_order(&quad));
        println!("gauss-limit  : {} (n = {gauss_n})", format_order(&gauss));
        let scale = c.norm().max(quad.norm()).max(gauss.norm());
        let dev = (c - quad)
            .norm()
            .max((c - gauss).norm())
            .max((quad - gauss).norm())
            / scale;
        println!("max pairwise deviation (relative): {}", g15(dev));
        return Ok(());
    }
    let value = match method {
        GammaMethodArg::Complexified => gamma_quat(q).map_err(usage_err)?.value,
        GammaMethodArg::Quadrature => gamma_quadrature(q).map_err(usage_err)?.value,
        GammaMethodArg::GaussLimit => gamma_gauss_limit(q, gauss_n).map_err(usage_err)?.value,
    };
    println!("{}", format_order(&value));
    Ok(())
}
