//! Thin command-line front end over the `twistlocus` library.
//!
//! Exit codes: `0` success, `1` verification or computation failure,
//! `2` invalid usage or parameters, `3` the request is outside the case a
//! computation is set up for (the error message names the mirror knot to
//! use instead).

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use twistlocus::checks::{default_knot_grid, verify_knot, CheckResult, Tolerances};
use twistlocus::report::{
    atomic_write, boundary_slope_document, interval_document, locus_document, locus_svg, to_json,
    trace_csv, trace_document, CheckDoc, KnotTag, VerifyDocument,
};
use twistlocus::riley::{alexander_poly, riley_eval, riley_poly, BranchCase};
use twistlocus::slopes::{
    boundary_slope_seifert, conjectural_boundary_slope, even_cf, orderable_interval, standard_cf,
    two_bridge_fraction,
};
use twistlocus::tracer::{locus_points, locus_symmetries, natural_case, trace_branch, Window};
use twistlocus::{Error, KnotParams};

#[derive(Parser)]
#[command(
    name = "twistlocus",
    version,
    about = "Riley polynomials, real representation branches, extension loci, and \
             left-orderable surgery slopes of double twist knots J(2m+1, 2n)",
    after_help = "Exit codes: 0 success, 1 verification/computation failure, \
                  2 invalid usage, 3 out-of-case (message names the mirror knot)."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct KnotArgs {
    /// Twist parameter m (m = 0 and m = -1 are degenerate and rejected)
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
    /// Twist parameter n (n = 0 is the unknot and rejected)
    #[arg(long, allow_hyphen_values = true)]
    n: i64,
}

impl KnotArgs {
    fn parse(&self) -> twistlocus::Result<KnotParams> {
        KnotParams::new(self.m, self.n)
    }
}

fn parse_branch(s: &str) -> Result<BranchCase, String> {
    match s {
        "elliptic" => Ok(BranchCase::Elliptic),
        "hyperbolic" => Ok(BranchCase::Hyperbolic),
        other => Err(format!("unknown branch `{other}` (use elliptic or hyperbolic)")),
    }
}

fn parse_window(s: &str) -> Result<Window, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("bad window component `{p}`: {e}")))
        .collect::<Result<_, _>>()?;
    if parts.len() != 4 {
        return Err("window must be x_min,x_max,y_min,y_max".into());
    }
    if !(parts[0] < parts[1] && parts[2] < parts[3]) {
        return Err("window must satisfy x_min < x_max and y_min < y_max".into());
    }
    Ok(Window { x_min: parts[0], x_max: parts[1], y_min: parts[2], y_max: parts[3] })
}

/// `name=value` tolerance override.
fn parse_tol(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s
        .split_once('=')
        .ok_or_else(|| format!("tolerance override `{s}` must be name=value"))?;
    let v: f64 = value.parse().map_err(|e| format!("bad tolerance value `{value}`: {e}"))?;
    if !(v > 0.0) {
        return Err(format!("tolerance `{name}` must be positive, got {v}"));
    }
    Ok((name.to_string(), v))
}

const TOL_HELP: &str = "Tolerance override name=value; repeatable. Defaults: \
matrix_identity=1e-10, residual=1e-9, relator=1e-6, longitude=1e-8, anchor=1e-4, \
tail_normalization=1e-4, elliptic_limit=5e-3, winding_residual=0.2, asymptote=5e-3";

#[derive(Subcommand)]
enum Cmd {
    /// Print the branch polynomial of the representation variety
    Riley {
        #[command(flatten)]
        knot: KnotArgs,
        /// Print the exact expanded coefficient form
        #[arg(long)]
        expand: bool,
        /// Evaluate at a point: --eval S T
        #[arg(long, num_args = 2, value_names = ["S", "T"], allow_hyphen_values = true)]
        eval: Option<Vec<f64>>,
    },
    /// Trace a real branch and emit CSV (stdout or --out)
    Trace {
        #[command(flatten)]
        knot: KnotArgs,
        /// Branch to trace; defaults to the natural one for the twist signs
        #[arg(long, value_parser = parse_branch)]
        branch: Option<BranchCase>,
        /// Minimum number of samples (adaptive refinement may add more)
        #[arg(long, default_value_t = 512)]
        samples: usize,
        /// Write CSV here (atomically) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write a JSON document of the trace
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Extension-locus point cloud with symmetry images, as SVG/JSON
    Locus {
        #[command(flatten)]
        knot: KnotArgs,
        /// Branch to trace; defaults to the natural one for the twist signs
        #[arg(long, value_parser = parse_branch)]
        branch: Option<BranchCase>,
        /// Minimum number of samples along the branch
        #[arg(long, default_value_t = 256)]
        samples: usize,
        /// Plot window x_min,x_max,y_min,y_max
        #[arg(long, value_parser = parse_window, default_value = "-0.5,2.5,-3.5,3.5", allow_hyphen_values = true)]
        window: Window,
        /// Write an SVG plot here (atomically)
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Write the point cloud as JSON here (atomically)
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Certified interval of left-orderable surgery slopes
    Interval {
        #[command(flatten)]
        knot: KnotArgs,
        /// Emit JSON on stdout instead of text
        #[arg(long)]
        json: bool,
    },
    /// Boundary slopes from continued-fraction expansions (m <= -2, n >= 1)
    BoundarySlope {
        #[command(flatten)]
        knot: KnotArgs,
        /// Emit JSON on stdout instead of text
        #[arg(long)]
        json: bool,
    },
    /// Re-derive every closed form against an independent oracle
    Verify {
        /// Knot parameter m; requires --n (default: the six-knot seed grid)
        #[arg(long, requires = "n", allow_hyphen_values = true)]
        m: Option<i64>,
        /// Knot parameter n; requires --m
        #[arg(long, requires = "m", allow_hyphen_values = true)]
        n: Option<i64>,
        /// Verify the canonical six-knot grid (the default when no knot is given)
        #[arg(long, conflicts_with_all = ["m", "n"])]
        seed_grid: bool,
        /// Minimum number of samples for the trace-based checks
        #[arg(long, default_value_t = 128)]
        samples: usize,
        #[arg(long = "tol", value_parser = parse_tol, value_name = "NAME=VALUE", help = TOL_HELP)]
        tol: Vec<(String, f64)>,
        /// Write the verification report as JSON here (atomically)
        #[arg(long)]
        json: Option<PathBuf>,
        /// Flip the named check to a failure; inert outside debug builds
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::OutOfCase(_) => 3,
        Error::InvalidKnot(_) | Error::OutOfRange(_) => 2,
        _ => 1,
    }
}

fn write_file(path: &PathBuf, bytes: &[u8]) -> Result<(), u8> {
    atomic_write(path, bytes).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        1u8
    })
}

fn default_tolerance_map() -> BTreeMap<String, f64> {
    Tolerances::default().as_map().clone()
}

fn run() -> Result<(), u8> {
    let cli = Cli::parse();
    let fail = |e: Error| -> u8 {
        eprintln!("error: {e}");
        exit_code_for(&e)
    };

    match cli.cmd {
        Cmd::Riley { knot, expand, eval } => {
            let k = knot.parse().map_err(fail)?;
            let phi = riley_poly(k);
            println!("knot: {k}");
            println!("degree in T: {}", phi.degree_t());
            println!("alexander: {}", alexander_poly(k));
            if expand {
                println!("phi(s, T) = {phi}");
            }
            if let Some(pt) = eval {
                let v = riley_eval(k, pt[0], pt[1]);
                println!("phi({}, {}) = {v:.16e}", pt[0], pt[1]);
            }
            Ok(())
        }
        Cmd::Trace { knot, branch, samples, out, json } => {
            let k = knot.parse().map_err(fail)?;
            let case = match branch {
                Some(c) => c,
                None => natural_case(k).map_err(fail)?,
            };
            let br = trace_branch(k, case, samples).map_err(fail)?;
            for w in &br.warnings {
                eprintln!("warning: {w}");
            }
            let csv = trace_csv(&br).map_err(fail)?;
            match &out {
                Some(path) => {
                    write_file(path, csv.as_bytes())?;
                    eprintln!("wrote {} samples to {}", br.samples.len(), path.display());
                }
                None => print!("{csv}"),
            }
            if let Some(path) = &json {
                let doc = trace_document(&br, default_tolerance_map()).map_err(fail)?;
                write_file(path, to_json(&doc).as_bytes())?;
            }
            Ok(())
        }
        Cmd::Locus { knot, branch, samples, window, svg, json } => {
            let k = knot.parse().map_err(fail)?;
            let case = match branch {
                Some(c) => c,
                None => natural_case(k).map_err(fail)?,
            };
            let br = trace_branch(k, case, samples).map_err(fail)?;
            for w in &br.warnings {
                eprintln!("warning: {w}");
            }
            let base = locus_points(&br);
            let arcs = locus_symmetries(&base, &window);
            println!(
                "{k}: {} symmetry images of the {}-sample arc intersect the window",
                arcs.len(),
                base.len()
            );
            if let Some(path) = &svg {
                write_file(path, locus_svg(&arcs, &window).as_bytes())?;
                eprintln!("wrote SVG to {}", path.display());
            }
            if let Some(path) = &json {
                let doc = locus_document(k, case, &window, &arcs);
                write_file(path, to_json(&doc).as_bytes())?;
            }
            Ok(())
        }
        Cmd::Interval { knot, json } => {
            let k = knot.parse().map_err(fail)?;
            let iv = orderable_interval(k);
            if json {
                print!("{}", to_json(&interval_document(k, &iv)));
            } else {
                println!("{k}: left-orderable surgery slopes {iv} ({})", iv.provenance);
            }
            Ok(())
        }
        Cmd::BoundarySlope { knot, json } => {
            // This subcommand only exists inside the worked parameter range
            // (m <= -2, n >= 1), so an out-of-range pair is a parameter
            // error (exit 2), not a numerical failure.
            let fail = |e: Error| -> u8 {
                eprintln!("error: {e}");
                match e {
                    Error::OutOfCase(_) => 2,
                    _ => exit_code_for(&e),
                }
            };
            let k = knot.parse().map_err(fail)?;
            let seifert = boundary_slope_seifert(k).map_err(fail)?;
            let conj = conjectural_boundary_slope(k).map_err(fail)?;
            let frac = two_bridge_fraction(k);
            let std_cf = standard_cf(k).map_err(fail)?;
            let even = even_cf(k).map_err(fail)?;
            if json {
                let doc = boundary_slope_document(k, frac, &std_cf, &even, seifert, conj);
                print!("{}", to_json(&doc));
            } else {
                println!("{k}: two-bridge fraction {frac}");
                println!("  standard expansion {std_cf}, even expansion {even}");
                println!("  seifert boundary slope {} ({})", seifert.slope, seifert.provenance);
                println!("  second slope {} ({})", conj.slope, conj.provenance);
            }
            Ok(())
        }
        Cmd::Verify { m, n, seed_grid: _, samples, tol, json, inject_fault } => {
            let mut tols = Tolerances::default();
            for (name, v) in &tol {
                tols.set(name, *v);
            }
            let inject = inject_fault;

            let knots: Vec<KnotParams> = match (m, n) {
                (Some(m), Some(n)) => vec![KnotParams::new(m, n).map_err(fail)?],
                _ => default_knot_grid().to_vec(),
            };

            // One thread per knot; results collected in input order.
            let results: Vec<(KnotParams, Vec<CheckResult>)> = std::thread::scope(|scope| {
                let handles: Vec<_> = knots
                    .iter()
                    .map(|&kk| {
                        let tols = &tols;
                        let inject = inject.as_deref();
                        scope.spawn(move || (kk, verify_knot(kk, tols, samples, inject)))
                    })
                    .collect();
                handles.into_iter().map(|h| h.join().expect("verify thread panicked")).collect()
            });

            let mut all_passed = true;
            let mut docs: Vec<CheckDoc> = Vec::new();
            for (kk, checks) in &results {
                for c in checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    println!("{status} {kk} {} — {}", c.name, c.detail);
                    all_passed &= c.passed;
                    docs.push(CheckDoc {
                        knot: kk.to_string(),
                        name: c.name.to_string(),
                        passed: c.passed,
                        detail: c.detail.clone(),
                        tolerance: c.tolerance,
                    });
                }
            }
            let total: usize = results.iter().map(|(_, c)| c.len()).sum();
            let failed = docs.iter().filter(|c| !c.passed).count();
            println!(
                "{}: {total} checks over {} knots, {failed} failed",
                if all_passed { "OK" } else { "FAILED" },
                results.len()
            );
            if let Some(path) = &json {
                let doc = VerifyDocument {
                    knots: results.iter().map(|(kk, _)| KnotTag::from(*kk)).collect(),
                    all_passed,
                    checks: docs,
                    tolerances: tols.as_map().clone(),
                };
                write_file(path, to_json(&doc).as_bytes())?;
            }
            if all_passed {
                Ok(())
            } else {
                Err(1)
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => ExitCode::from(code),
    }
}
