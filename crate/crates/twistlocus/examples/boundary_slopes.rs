//! Boundary slopes from continued fractions. For `m <= -2, n >= 1` the
//! two-bridge fraction of the knot has two distinguished expansions: the
//! all-negative standard one and the even one whose sign counts give the
//! Seifert-surface boundary slope `-4n`. The second slope `-(4m + 4)` is a
//! conjectured reading of the same expansion data and is tagged as such.
//!
//! Run with `cargo run --example boundary_slopes`.

use twistlocus::slopes::{
    boundary_slope_seifert, conjectural_boundary_slope, even_cf, standard_cf,
    two_bridge_fraction,
};
use twistlocus::KnotParams;

fn main() -> twistlocus::Result<()> {
    for (m, n) in [(-2i64, 1i64), (-2, 2), (-3, 2), (-2, 3)] {
        let k = KnotParams::new(m, n)?;
        let frac = two_bridge_fraction(k);
        let std_cf = standard_cf(k)?;
        let even = even_cf(k)?;
        let seifert = boundary_slope_seifert(k)?;
        let second = conjectural_boundary_slope(k)?;

        println!("{k}: fraction {frac}");
        println!("  standard expansion {std_cf}: value {}, sign counts {:?}", std_cf.value(), std_cf.counts());
        println!("  even expansion     {even}: value {}, sign counts {:?}", even.value(), even.counts());
        println!(
            "  Seifert slope 2[(p - q) - (p0 - q0)] = {} ({})",
            seifert.slope, seifert.provenance
        );
        println!("  second slope -(4m + 4) = {} ({})", second.slope, second.provenance);
        println!();
    }

    // Out-of-range parameters are refused, not guessed.
    let err = boundary_slope_seifert(KnotParams::new(2, 2)?).unwrap_err();
    println!("J(5, 4) is outside the worked case: {err}");
    Ok(())
}
