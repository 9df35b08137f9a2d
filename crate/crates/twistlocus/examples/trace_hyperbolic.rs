//! Tracing the hyperbolic branch: for `m <= -2, n >= 1` the real solution
//! family keeps `t` real above 1 on `r < s < 0`, where `r` is the largest
//! root of `f_m`. Toward `s = r` the trace coordinate blows up and the
//! longitude holonomy obeys `B t^(2n) -> 1`, which pins the asymptote of
//! the locus arc at slope `4n`. This example traces J(-3, 4) and measures
//! both limits.
//!
//! Run with `cargo run --example trace_hyperbolic`.

use twistlocus::tracer::{estimate_asymptotes, natural_case, slope_fn, trace_branch};
use twistlocus::KnotParams;

fn main() -> twistlocus::Result<()> {
    let k = KnotParams::new(-2, 2)?;
    let branch = trace_branch(k, natural_case(k)?, 256)?;

    println!(
        "{k}: {} samples over r = {:.6} < s < 0, seeded at T = {:.9}",
        branch.samples.len(),
        branch.s_singular,
        branch.seed_u
    );

    println!("\n     s            T            t            B t^4        slope");
    for p in branch.samples.iter().step_by(51) {
        let t = p.t.re;
        println!(
            "  {:>+12.9}  {:>11.4e}  {:>11.4e}  {:>11.9}  {:>9.6}",
            p.s,
            p.cap_t,
            t,
            p.b.re * t.powi(4),
            slope_fn(p)?
        );
    }

    // The s -> 0 end: holonomy trivializes.
    let near = branch.samples.last().unwrap();
    println!("\nat the s -> 0 end: B = 1 + {:.3e}", (near.b.re - 1.0).abs());

    // The singular end: normalized holonomy and the asymptote fit.
    let far = &branch.samples[0];
    println!(
        "at the singular end: B t^(2n) = 1 + {:.3e}",
        (far.b.re * far.t.re.powi(4) - 1.0).abs()
    );
    let est = &estimate_asymptotes(&branch)?[0];
    println!(
        "asymptote fit over the outer tail: slope {:.9} (4n = {}), max deviation {:.2e}",
        est.slope,
        4 * k.n,
        est.fit_residual
    );
    Ok(())
}
