//! The left-orderable surgery windows. Each parameter quadrant has a
//! closed-form interval of slopes whose Dehn fillings carry left-orderable
//! fundamental groups, and the table is antisymmetric under taking mirrors.
//! This example prints the four quadrant windows, demonstrates the mirror
//! rule, and shows the two-bridge fraction normalization each knot carries.
//!
//! Run with `cargo run --example surgery_intervals`.

use twistlocus::slopes::{orderable_interval, two_bridge_fraction};
use twistlocus::KnotParams;

fn main() -> twistlocus::Result<()> {
    println!("quadrant windows:");
    for (m, n) in [(2i64, 2i64), (-2, 2), (2, -2), (-2, -2)] {
        let k = KnotParams::new(m, n)?;
        let w = orderable_interval(k);
        println!(
            "  m {}, n {}:  {k:9}  window {w}  ({})",
            if m > 0 { ">= 1" } else { "<= -2" },
            if n > 0 { ">= 1" } else { "<= -1" },
            w.provenance
        );
    }

    println!("\nmirror antisymmetry: the mirror's window is the negated, reversed window");
    for (m, n) in [(1i64, 2i64), (-3, 1), (2, -1)] {
        let k = KnotParams::new(m, n)?;
        let mk = k.mirror();
        let (w, mw) = (orderable_interval(k), orderable_interval(mk));
        assert_eq!(mw, w.mirrored());
        println!("  {k:9} {w:12}  <->  {mk:9} {mw}");
    }

    println!("\nslope 0 is always in the window closure of m <= -2, n >= 1 knots:");
    for n in 1..=4i64 {
        let k = KnotParams::new(-2, n)?;
        let w = orderable_interval(k);
        println!("  {k:9} window {w}: contains 0? {}, contains 4n? {}", w.contains(0.0), w.contains(4.0 * n as f64));
    }

    println!("\ntwo-bridge normalizations:");
    for (m, n) in [(1i64, 1i64), (2, 2), (-2, 2), (-3, 2)] {
        let k = KnotParams::new(m, n)?;
        println!("  {k:9} corresponds to the two-bridge fraction {}", two_bridge_fraction(k));
    }
    Ok(())
}
