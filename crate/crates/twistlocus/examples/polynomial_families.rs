//! The two Chebyshev-like polynomial families behind everything else:
//! `f_m` and `g_m` share the recurrence `p_{m+2} = (s+2) p_{m+1} - p_m` and
//! differ only in their seeds. This example prints the first few members,
//! verifies the three exact identities that tie the families together, shows
//! the binomial closed forms, and locates the root clusters that bound the
//! real branches.
//!
//! Run with `cargo run --example polynomial_families`.

use twistlocus::poly::{
    f_poly, f_poly_closed, f_roots, g_poly, g_poly_closed, g_roots_closed, tau_poly,
    IntPolynomial,
};

fn main() -> twistlocus::Result<()> {
    println!("family members (recurrence p_(m+2) = (s+2) p_(m+1) - p_m):");
    for m in 0..=4 {
        println!("  f_{m}(s) = {}", f_poly(m));
    }
    for m in 0..=4 {
        println!("  g_{m}(s) = {}", g_poly(m));
    }
    println!("  tau_3(c) = {}  (trace recurrence in the variable c)", tau_poly(3));

    println!("\nnegative indices fold back:");
    println!("  f_-3(s) = {}  (equals f_2)", f_poly(-3));
    println!("  g_-3(s) = {}  (equals -g_1)", g_poly(-3));

    println!("\nexact identities over the index range -10..=10:");
    let s = IntPolynomial::from_i64(&[0, 1], "s");
    let one = IntPolynomial::constant(1, "s");
    for m in -10..=10 {
        assert_eq!(f_poly(m) + g_poly(m - 1), g_poly(m));
        assert_eq!(f_poly(m) + s.clone() * g_poly(m), f_poly(m + 1));
        assert_eq!(
            f_poly(m) * f_poly(m),
            s.clone() * g_poly(m) * g_poly(m - 1) + one.clone()
        );
    }
    println!("  f_m + g_(m-1) = g_m                 ok");
    println!("  f_m + s g_m   = f_(m+1)             ok");
    println!("  f_m^2         = s g_m g_(m-1) + 1   ok");

    println!("\nbinomial closed forms match the recurrences for m in 0..=8:");
    for m in 0..=8u64 {
        assert_eq!(f_poly(m as i64), f_poly_closed(m));
        assert_eq!(g_poly(m as i64), g_poly_closed(m));
    }
    println!("  coefficient of s^i in f_m is C(m+i, m-i); in g_m, C(m+1+i, m-i)   ok");

    println!("\nroot clusters (all real, inside (-4, 0)):");
    let fr = f_roots(2)?;
    println!("  roots of f_2: {:?}", fr.roots);
    let gr = g_roots_closed(3)?;
    println!("  roots of g_3: {:?}", gr.roots);
    println!(
        "  largest root of f_2 = {:.6} opens the hyperbolic domain of J(-5, 2n)",
        fr.largest()
    );
    Ok(())
}
