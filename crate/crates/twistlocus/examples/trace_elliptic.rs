//! Tracing the elliptic branch: for `m >= 1, n >= 1` the real solution
//! family keeps `t` on the unit circle, runs from the reducible locus at
//! `s = 0` to the parabolic point at `s = s_0`, and its longitude holonomy
//! phase unwinds to an odd multiple `(2d - 1) pi` determined by the winding
//! integer `d`. This example traces J(5, 4), prints a few samples, and
//! reports the endpoint data that the locus pictures are built from.
//!
//! Run with `cargo run --example trace_elliptic`.

use twistlocus::tracer::{extrapolate_elliptic_limit, natural_case, trace_branch};
use twistlocus::KnotParams;

fn main() -> twistlocus::Result<()> {
    let k = KnotParams::new(2, 2)?;
    let branch = trace_branch(k, natural_case(k)?, 256)?;

    println!(
        "{k}: {} samples over 0 < s < s_0 = {:.9}, seeded at T = {:.9}",
        branch.samples.len(),
        branch.s_singular,
        branch.seed_u
    );
    for warning in &branch.warnings {
        println!("  warning: {warning}");
    }

    println!("\n     s          T          theta      arg B (unwrapped)");
    for p in branch.samples.iter().step_by(51) {
        println!(
            "  {:>9.6}  {:>9.6}  {:>9.6}  {:>9.6}",
            p.s, p.cap_t, p.phase_t, p.phase_b
        );
    }

    let w = branch.winding.expect("elliptic traces certify a winding integer");
    println!("\nwinding integer d = {}", w.d);
    println!("unwrapped arg B limit = {:.9} = (2d - 1) pi + {:.2e}", w.phase_limit, w.residual);
    println!(
        "locus endpoint: (x, y) -> (0, {:.6}) -- the height is 2d - 1",
        w.phase_limit / std::f64::consts::PI
    );

    let re = extrapolate_elliptic_limit(&branch, |p| p.b.re)?;
    let im = extrapolate_elliptic_limit(&branch, |p| p.b.im)?;
    println!("holonomy entry limit at s_0: B -> {re:.9} + {im:.2e} i  (a parabolic -1)");
    Ok(())
}
