//! The defining polynomial of the nonabelian representation variety. For
//! the parameter pair `(m, n)` it is a polynomial in `s` and the trace
//! coordinate `T = t + 1/t`, of degree `|n|` in `T`. This example expands it
//! for a few small knots, evaluates it both through the expanded
//! coefficients and the raw recurrence, finds the parabolic parameter `s_0`,
//! and checks the `s = 0` section against the Alexander polynomial.
//!
//! Run with `cargo run --example riley_polynomial`.

use twistlocus::riley::{
    alexander_poly, alexander_roots, branch_s0, find_s0, riley_eval, riley_poly,
};
use twistlocus::KnotParams;

fn main() -> twistlocus::Result<()> {
    for (m, n) in [(1i64, 1i64), (2, 2), (-2, 2)] {
        let k = KnotParams::new(m, n)?;
        let phi = riley_poly(k);
        println!("{k}:  phi(s, T) = {phi}");
        println!("      degree in T: {}", phi.degree_t());
    }

    // Expanded coefficients and the recurrence evaluator agree.
    let k = KnotParams::new(1, 1)?;
    let phi = riley_poly(k);
    let (s, cap_t) = (0.1, 1.5);
    println!(
        "\nphi(0.1, 1.5) on J(3, 2): expanded {:.12}, recurrence {:.12}",
        phi.eval(s, cap_t),
        riley_eval(k, s, cap_t)
    );

    // The parabolic parameter: smallest positive root of the T = 2 section
    // that belongs to the branch itself. On J(3, 2) the section has a single
    // sheet, so both notions coincide; on J(5, 4) they differ.
    let s0 = branch_s0(k)?;
    println!("\nJ(3, 2): s_0 = {s0:.12} (section root {:.12})", find_s0(k)?);
    let k54 = KnotParams::new(2, 2)?;
    println!(
        "J(5, 4): s_0 = {:.12} while the smallest section root {:.12} lies on a \
         different sheet",
        branch_s0(k54)?,
        find_s0(k54)?
    );

    // At s = 0 the variety degenerates onto the Alexander roots: the section
    // phi(0, u) vanishes exactly where the Alexander polynomial does.
    println!("\nAlexander consistency at the reducible locus:");
    for (m, n) in [(1i64, 1i64), (-2i64, 2i64)] {
        let k = KnotParams::new(m, n)?;
        println!("  {k}: Delta(a) = {}", alexander_poly(k));
        let roots = alexander_roots(k)?;
        for &theta in &roots.unit_angles {
            let u = 2.0 * theta.cos();
            println!(
                "    unit root pair at angle {theta:.6}: phi(0, {u:.6}) = {:.3e}",
                riley_eval(k, 0.0, u)
            );
        }
        for &a in &roots.positive_real {
            let u = a + 1.0 / a;
            println!(
                "    real root a = {a:.6}: phi(0, {u:.6}) = {:.3e}",
                riley_eval(k, 0.0, u)
            );
        }
    }
    Ok(())
}
