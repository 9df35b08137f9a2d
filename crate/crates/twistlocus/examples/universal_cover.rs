//! The universal cover of SU(1,1) in `(gamma, omega)` coordinates: `gamma`
//! lives in the open unit disc and `omega` lifts the rotation angle to the
//! whole real line, so the center of the cover is generated by
//! `(0, pi)`. The group law is exact in these coordinates; this example
//! exercises it and checks that projecting back to 2x2 matrices is a
//! homomorphism.
//!
//! Run with `cargo run --example universal_cover`.

use num_complex::Complex64;
use twistlocus::rep::{cover_mul, su11_matrix, CoverElement};

fn main() {
    let id = CoverElement::identity();
    let g = CoverElement::new(Complex64::new(0.3, 0.2), 0.7);
    let h = CoverElement::new(Complex64::new(-0.1, 0.4), -1.2);

    println!("identity law: id * g = ({:.6}, {:.6})", cover_mul(&id, &g).gamma, cover_mul(&id, &g).omega);

    // omega adds on the rotation subgroup: the lift remembers full turns.
    let half = CoverElement::new(Complex64::new(0.0, 0.0), std::f64::consts::PI);
    let full = cover_mul(&half, &half);
    println!(
        "central element: (0, pi)^2 = (0, {:.6}) -- a full turn, not the identity",
        full.omega
    );

    // Associativity, numerically.
    let ab_c = cover_mul(&cover_mul(&g, &h), &half);
    let a_bc = cover_mul(&g, &cover_mul(&h, &half));
    println!(
        "associativity drift: gamma {:.3e}, omega {:.3e}",
        (ab_c.gamma - a_bc.gamma).norm(),
        (ab_c.omega - a_bc.omega).abs()
    );

    // The projection is a homomorphism: matrix of the product equals the
    // product of the matrices.
    let lhs = su11_matrix(&cover_mul(&g, &h));
    let rhs = su11_matrix(&g) * su11_matrix(&h);
    println!("projection homomorphism drift: {:.3e}", lhs.max_norm_diff(&rhs));
    println!("projected matrix determinant: {:.12}", su11_matrix(&g).det().re);
}
