//! The extension locus picture: the traced branch maps to an arc in the
//! `(x, y)` translation plane, and the full locus is its orbit under the
//! symmetries `(x, y) -> (x + k, y)` and `(x, y) -> (-x + k, -y)`. Arcs
//! crossing a line of slope `r` through lattice points certify left-orderable
//! `r`-surgery, so the picture *is* the theorem's evidence. This example
//! renders both canonical pictures to standalone SVG files.
//!
//! Run with `cargo run --example extension_locus_svg`.

use twistlocus::report::locus_svg;
use twistlocus::tracer::{locus_points, locus_symmetries, natural_case, trace_branch, Window};
use twistlocus::KnotParams;

fn main() -> twistlocus::Result<()> {
    let out_dir = std::env::temp_dir();

    // J(5, 4): elliptic, arcs from (x_0, 0) up to (0, 3).
    let window = Window { x_min: -0.5, x_max: 2.5, y_min: -3.5, y_max: 3.5 };
    render(KnotParams::new(2, 2)?, &window, &out_dir.join("locus_j5_4.svg"))?;

    // J(-3, 4): hyperbolic, arcs running off along slope-8 asymptotes.
    let window = Window { x_min: -0.5, x_max: 3.5, y_min: -14.0, y_max: 2.0 };
    render(KnotParams::new(-2, 2)?, &window, &out_dir.join("locus_j3m_4.svg"))?;
    Ok(())
}

fn render(k: KnotParams, window: &Window, path: &std::path::Path) -> twistlocus::Result<()> {
    let branch = trace_branch(k, natural_case(k)?, 256)?;
    let base = locus_points(&branch);
    let arcs = locus_symmetries(&base, window);
    println!(
        "{k}: base arc of {} points, {} symmetry images meet the window",
        base.len(),
        arcs.len()
    );
    for arc in &arcs {
        let (k_shift, sign) = arc[0].component;
        println!("  image (x, y) -> ({}x + {k_shift}, {}y)", sign_str(sign), sign_str(sign));
    }
    let svg = locus_svg(&arcs, window);
    std::fs::write(path, svg.as_bytes()).expect("write svg file");
    println!("  wrote {}", path.display());
    Ok(())
}

fn sign_str(sign: i64) -> &'static str {
    if sign >= 0 {
        "+"
    } else {
        "-"
    }
}
