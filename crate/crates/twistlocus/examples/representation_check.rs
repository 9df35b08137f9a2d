//! From a point on the variety to an honest group representation. This
//! example takes one traced sample of the hyperbolic branch of J(-3, 4),
//! rebuilds the two generator matrices, and certifies the representation
//! three independent ways: the group relation holds, the closed-form twist
//! matrix matches the letter-by-letter product, and the closed-form
//! longitude holonomy matches the full longitude word product.
//!
//! Run with `cargo run --example representation_check`.

use twistlocus::rep::{
    holonomy_b, longitude_matrix_oracle, longitude_word, rel_max_diff, relator_residual,
    rho_generators, twist_word, w_matrix_closed, word_matrix,
};
use twistlocus::tracer::{natural_case, trace_branch};
use twistlocus::KnotParams;

fn main() -> twistlocus::Result<()> {
    let k = KnotParams::new(-2, 2)?;
    let branch = trace_branch(k, natural_case(k)?, 128)?;
    let p = &branch.samples[branch.samples.len() / 2];
    println!("{k}: midpoint sample s = {:.9}, T = {:.9}, t = {:.9}", p.s, p.cap_t, p.t.re);

    let (x, y) = rho_generators(p.s.into(), p.t)?;
    println!("\ngenerator images (det = 1 each):");
    println!("  rho(x) = [{:.6} {:.6}; {:.6} {:.6}], det {:.3e}", x.a, x.b, x.c, x.d, x.det());
    println!("  rho(y) = [{:.6} {:.6}; {:.6} {:.6}], det {:.3e}", y.a, y.b, y.c, y.d, y.det());

    // 1. The group relation w^n x = y w^n.
    let residual = relator_residual(k.m, k.n, p.s.into(), p.t)?;
    println!("\nrelation residual |rho(w^n x) - rho(y w^n)| = {residual:.3e}");
    assert!(residual < 1e-8);

    // 2. Closed-form twist matrix vs. brute-force letter product.
    let closed = w_matrix_closed(k.m, p.s.into(), p.t)?;
    let brute = word_matrix(&twist_word(k.m), p.s.into(), p.t)?;
    println!(
        "closed twist matrix vs letter product: relative deviation {:.3e}",
        rel_max_diff(&closed, &brute)
    );

    // 3. Longitude holonomy: closed form vs. the 4n + n(4|m| + 2)-letter
    //    longitude word evaluated matrix by matrix.
    let word = longitude_word(k.m, k.n);
    let oracle = longitude_matrix_oracle(k.m, k.n, p.s.into(), p.t)?;
    let b = holonomy_b(k.m, k.n, p.s.into(), p.t)?;
    println!(
        "longitude word of {} letters: diagonal entry {:.9e}, closed form {:.9e}",
        word.len(),
        oracle.a.re,
        b.re
    );
    // The other diagonal entry is 1/B ~ t^{4n}, so judge the off-diagonal
    // leakage against the largest entry of the product, not in absolute terms.
    println!(
        "off-diagonal leakage of the longitude image: {:.3e} (relative to largest entry)",
        oracle.b.norm() / oracle.max_abs()
    );
    Ok(())
}
