//! Two-by-two representations of the double twist knot group and the
//! universal cover of SU(1,1).
//!
//! The group of `J(2m+1, 2n)` is `< x, y | w^n x = y w^n >` with twist word
//! `w = (x y^-1)^m x y (x^-1 y)^m`. The generator images live in
//! SL(2) over the parameters `(s, t)`:
//!
//! ```text
//! rho(x) = [ sqrt(t)  1/sqrt(t) ]     rho(y) = [  sqrt(t)   0         ]
//!          [ 0        1/sqrt(t) ]              [ -s*sqrt(t) 1/sqrt(t) ]
//! ```
//!
//! Everything here comes in two independent flavors: letter-by-letter word
//! products (the oracle) and closed forms in the `f_m`, `g_m` polynomial
//! families (the thing being verified). The conjugated picture `rho_s`
//! diagonalizes `rho(x)`, giving the longitude holonomy entry `B` used by the
//! extension-locus coordinates, and [`CoverElement`] implements the standard
//! `(gamma, omega)` parameterization of the universal cover of SU(1,1).

use num_complex::Complex64;

use crate::poly::{f_poly, g_poly, tau_value};
use crate::riley::riley_eval_complex_raw;
use crate::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Row-major 2x2 complex matrix `[a b; c d]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub a: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub d: Complex64,
}

impl Mat2 {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Mat2::new(ONE, 0.0.into(), 0.0.into(), ONE)
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Inverse by adjugate over the determinant.
    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.norm() == 0.0 {
            return Err(Error::DivisionByZero("singular 2x2 matrix".into()));
        }
        Ok(Mat2::new(self.d / det, -self.b / det, -self.c / det, self.a / det))
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.a
            .norm()
            .max(self.b.norm())
            .max(self.c.norm())
            .max(self.d.norm())
    }

    /// Entrywise max-norm of the difference.
    pub fn max_norm_diff(&self, other: &Mat2) -> f64 {
        (self.a - other.a)
            .norm()
            .max((self.b - other.b).norm())
            .max((self.c - other.c).norm())
            .max((self.d - other.d).norm())
    }
}

impl std::ops::Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, r: Mat2) -> Mat2 {
        Mat2::new(
            self.a * r.a + self.b * r.c,
            self.a * r.b + self.b * r.d,
            self.c * r.a + self.d * r.c,
            self.c * r.b + self.d * r.d,
        )
    }
}

/// Relative entrywise distance, scaled by the larger operand (floored at 1).
pub fn rel_max_diff(a: &Mat2, b: &Mat2) -> f64 {
    a.max_norm_diff(b) / a.max_abs().max(b.max_abs()).max(1.0)
}

/// Free-group letters on the two knot group generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Letter {
    X,
    XInv,
    Y,
    YInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::XInv,
            Letter::XInv => Letter::X,
            Letter::Y => Letter::YInv,
            Letter::YInv => Letter::Y,
        }
    }
}

/// Reverse the word and invert each letter.
pub fn word_inverse(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|l| l.inverse()).collect()
}

/// `word^k`, with negative `k` through the inverse word.
pub fn word_pow(word: &[Letter], k: i64) -> Vec<Letter> {
    let base = if k >= 0 { word.to_vec() } else { word_inverse(word) };
    let reps = k.unsigned_abs() as usize;
    let mut out = Vec::with_capacity(base.len() * reps);
    for _ in 0..reps {
        out.extend_from_slice(&base);
    }
    out
}

/// The twist word `w = (x y^-1)^m x y (x^-1 y)^m` as letters; negative `m`
/// inverts the bracketed pairs.
pub fn twist_word(m: i64) -> Vec<Letter> {
    let mut w = word_pow(&[Letter::X, Letter::YInv], m);
    w.push(Letter::X);
    w.push(Letter::Y);
    w.extend(word_pow(&[Letter::XInv, Letter::Y], m));
    w
}

/// `w_*`: the twist word with its letters in reverse order (letters kept,
/// not inverted).
pub fn twist_word_star(m: i64) -> Vec<Letter> {
    let mut w = twist_word(m);
    w.reverse();
    w
}

/// The preferred longitude `w_*^n w^n x^{-4n}` as letters.
pub fn longitude_word(m: i64, n: i64) -> Vec<Letter> {
    let mut l = word_pow(&twist_word_star(m), n);
    l.extend(word_pow(&twist_word(m), n));
    l.extend(word_pow(&[Letter::X], -4 * n));
    l
}

/// Generator images `(rho(x), rho(y))` at `(s, t)`, principal `sqrt(t)`.
pub fn rho_generators(s: Complex64, t: Complex64) -> Result<(Mat2, Mat2)> {
    if t.norm() == 0.0 {
        return Err(Error::DegenerateParameter("rho needs t != 0".into()));
    }
    let rt = t.sqrt();
    let rx = Mat2::new(rt, ONE / rt, 0.0.into(), ONE / rt);
    let ry = Mat2::new(rt, 0.0.into(), -s * rt, ONE / rt);
    Ok((rx, ry))
}

/// Letter-by-letter product of generator images along `word`. This is the
/// oracle every closed form is tested against.
pub fn word_matrix(word: &[Letter], s: Complex64, t: Complex64) -> Result<Mat2> {
    let (rx, ry) = rho_generators(s, t)?;
    let rx_inv = rx.inverse()?;
    let ry_inv = ry.inverse()?;
    let mut acc = Mat2::identity();
    for l in word {
        let m = match l {
            Letter::X => rx,
            Letter::XInv => rx_inv,
            Letter::Y => ry,
            Letter::YInv => ry_inv,
        };
        acc = acc * m;
    }
    Ok(acc)
}

/// Closed form for `W = rho(w)` in terms of `f_m`, `g_m`, `g_{m-1}`:
///
/// ```text
/// W = [ t f^2 - s g^2            f g / t - f g'      ]
///     [ s t f g' - s f g         f^2 / t - s g'^2    ]
/// ```
///
/// with `f = f_m(s)`, `g = g_m(s)`, `g' = g_{m-1}(s)` evaluated from the
/// polynomial module. Valid for every integer `m` through the negative-index
/// conventions.
pub fn w_matrix_closed(m: i64, s: Complex64, t: Complex64) -> Result<Mat2> {
    if t.norm() == 0.0 {
        return Err(Error::DegenerateParameter("w closed form needs t != 0".into()));
    }
    let f = f_poly(m).eval_c64(s);
    let g = g_poly(m).eval_c64(s);
    let g1 = g_poly(m - 1).eval_c64(s);
    Ok(Mat2::new(
        t * f * f - s * g * g,
        f * g / t - f * g1,
        s * t * f * g1 - s * f * g,
        f * f / t - s * g1 * g1,
    ))
}

/// `W^n` for `n >= 1` through the trace power formula
/// `W^n = [w11 T_n - T_{n-1}, w12 T_n; w21 T_n, T_{n+1} - w11 T_n]`
/// where `T_k = tau_k(tr W)`.
pub fn w_power(n: i64, w: &Mat2) -> Result<Mat2> {
    if n < 1 {
        return Err(Error::OutOfRange(format!("w_power wants n >= 1, got {n}")));
    }
    let tau = w.trace();
    let tn = tau_value(n, tau);
    let tn_prev = tau_value(n - 1, tau);
    let tn_next = tau_value(n + 1, tau);
    Ok(Mat2::new(w.a * tn - tn_prev, w.b * tn, w.c * tn, tn_next - w.a * tn))
}

/// `sigma = s d / (d - s)` with `d = (sqrt(t) - 1/sqrt(t))^2`; the
/// off-diagonal twist factor relating `rho_s(w_*)` powers to `rho_s(w)`
/// powers.
pub fn sigma(s: Complex64, t: Complex64) -> Result<Complex64> {
    if t.norm() == 0.0 {
        return Err(Error::DegenerateParameter("sigma needs t != 0".into()));
    }
    let rt = t.sqrt();
    let d = (rt - ONE / rt) * (rt - ONE / rt);
    let den = d - s;
    if den.norm() == 0.0 {
        return Err(Error::DivisionByZero("sigma pole: (sqrt(t)-1/sqrt(t))^2 = s".into()));
    }
    Ok(s * d / den)
}

/// The conjugation that diagonalizes `rho(x)`:
/// `Q = [t-1, 1; 0, sqrt(t)-1/sqrt(t)]`.
pub fn q_matrix(t: Complex64) -> Result<Mat2> {
    if (t - ONE).norm() == 0.0 {
        return Err(Error::PoleAtParameter("Q degenerates at t = 1".into()));
    }
    let rt = t.sqrt();
    Ok(Mat2::new(t - ONE, ONE, 0.0.into(), rt - ONE / rt))
}

/// `U = rho_s(w) = Q W Q^{-1}` from the four closed-form entry formulas
/// (not by numeric conjugation — that is the oracle it is tested against):
///
/// ```text
/// u11 = w11 + w21/(t-1)
/// u12 = sqrt(t) (w12 - w11/(t-1)) + sqrt(t)/(t-1) (w22 - w21/(t-1))
/// u21 = w21 / sqrt(t)
/// u22 = w22 - w21/(t-1)
/// ```
pub fn u_matrix(m: i64, s: Complex64, t: Complex64) -> Result<Mat2> {
    if (t - ONE).norm() == 0.0 {
        return Err(Error::PoleAtParameter("u_matrix has a pole at t = 1".into()));
    }
    let w = w_matrix_closed(m, s, t)?;
    let rt = t.sqrt();
    let e = t - ONE;
    Ok(Mat2::new(
        w.a + w.c / e,
        rt * (w.b - w.a / e) + rt / e * (w.d - w.c / e),
        w.c / rt,
        w.d - w.c / e,
    ))
}

/// `rho_s` image of a single letter: `Q rho(letter) Q^{-1}`.
fn rho_s_letter_images(s: Complex64, t: Complex64) -> Result<[Mat2; 4]> {
    let q = q_matrix(t)?;
    let q_inv = q.inverse()?;
    let (rx, ry) = rho_generators(s, t)?;
    let conj = |m: Mat2| q * m * q_inv;
    let rx_s = conj(rx);
    let ry_s = conj(ry);
    Ok([rx_s, rx_s.inverse()?, ry_s, ry_s.inverse()?])
}

/// Letter-by-letter product of `rho_s`-images along `word`.
pub fn rho_s_word(word: &[Letter], s: Complex64, t: Complex64) -> Result<Mat2> {
    let images = rho_s_letter_images(s, t)?;
    let mut acc = Mat2::identity();
    for l in word {
        let m = match l {
            Letter::X => images[0],
            Letter::XInv => images[1],
            Letter::Y => images[2],
            Letter::YInv => images[3],
        };
        acc = acc * m;
    }
    Ok(acc)
}

/// Closed form for the `(1,1)` entry of the diagonalized longitude image:
///
/// ```text
/// B = (g_m - t g_{m-1}) / (g_{m-1} - t g_m) * t^{-2n}
/// ```
///
/// No pole at `t = 1`: there the quotient is exactly `-1` (numerator and
/// denominator are negatives of each other), matching the removable
/// singularity of the underlying formula.
pub fn holonomy_b(m: i64, n: i64, s: Complex64, t: Complex64) -> Result<Complex64> {
    if t.norm() == 0.0 {
        return Err(Error::DegenerateParameter("holonomy needs t != 0".into()));
    }
    let g = g_poly(m).eval_c64(s);
    let g1 = g_poly(m - 1).eval_c64(s);
    let num = g - t * g1;
    let den = g1 - t * g;
    if den.norm() == 0.0 {
        return Err(Error::DivisionByZero("holonomy denominator g_{m-1} - t g_m = 0".into()));
    }
    let exp = i32::try_from(-2 * n).map_err(|_| Error::OutOfRange("n too large".into()))?;
    Ok(num / den * t.powi(exp))
}

/// Direct product of `rho_s`-images along the longitude word
/// `w_*^n w^n x^{-4n}`. Refuses points that do not satisfy the defining
/// polynomial to residual `1e-8`, and `t = 1` where the conjugation
/// degenerates. On the variety the result is diagonal with `(1,1)` entry
/// equal to [`holonomy_b`].
pub fn longitude_matrix_oracle(
    m: i64,
    n: i64,
    s: Complex64,
    t: Complex64,
) -> Result<Mat2> {
    if (t - ONE).norm() == 0.0 {
        return Err(Error::PoleAtParameter("longitude oracle has a pole at t = 1".into()));
    }
    let big_t = t + ONE / t;
    let residual = riley_eval_complex_raw(m, n, s, big_t).norm();
    if !(residual < 1e-8) {
        return Err(Error::NotOnVariety(format!(
            "defining polynomial residual {residual:.3e} at (s, t) = ({s}, {t})"
        )));
    }
    rho_s_word(&longitude_word(m, n), s, t)
}

/// Entrywise max-norm of `rho(w^n x) - rho(y w^n)`, both sides computed as
/// letter-by-letter products. Vanishes exactly on the representation variety.
pub fn relator_residual(m: i64, n: i64, s: Complex64, t: Complex64) -> Result<f64> {
    let wn = word_pow(&twist_word(m), n);
    let mut left = wn.clone();
    left.push(Letter::X);
    let mut right = vec![Letter::Y];
    right.extend(wn);
    let lhs = word_matrix(&left, s, t)?;
    let rhs = word_matrix(&right, s, t)?;
    Ok(lhs.max_norm_diff(&rhs))
}

/// Element of the universal cover of SU(1,1) in the `(gamma, omega)`
/// parameterization: an SU(1,1) matrix `[alpha, beta; conj(beta),
/// conj(alpha)]` has `gamma = -conj(beta)/alpha` with `|gamma| < 1`, and
/// `omega` lifts `arg(alpha)` to the real line.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoverElement {
    pub gamma: Complex64,
    pub omega: f64,
}

impl CoverElement {
    pub fn new(gamma: Complex64, omega: f64) -> Self {
        debug_assert!(gamma.norm() < 1.0, "cover element needs |gamma| < 1");
        CoverElement { gamma, omega }
    }

    pub fn identity() -> Self {
        CoverElement { gamma: 0.0.into(), omega: 0.0 }
    }
}

/// Group law of the universal cover:
///
/// ```text
/// (g, w)(g', w') = ( (g + g' e^{-2iw}) / (1 + conj(g) g' e^{-2iw}),
///                    w + w' + arg(1 + conj(g) g' e^{-2iw}) )
/// ```
///
/// The log factor `1 + conj(g) g' e^{-2iw}` has modulus-product `|g g'| < 1`,
/// hence strictly positive real part, so the principal argument is the
/// correct branch unconditionally.
pub fn cover_mul(g: &CoverElement, h: &CoverElement) -> CoverElement {
    let phase = Complex64::from_polar(1.0, -2.0 * g.omega);
    let correction = ONE + g.gamma.conj() * h.gamma * phase;
    CoverElement {
        gamma: (g.gamma + h.gamma * phase) / correction,
        omega: g.omega + h.omega + correction.arg(),
    }
}

/// Projection to SU(1,1): `alpha = e^{i omega} / sqrt(1 - |gamma|^2)`,
/// `beta = -conj(gamma) conj(alpha)`. The global phase convention is fixed
/// once here; [`cover_mul`] is an exact homomorphism for it.
pub fn su11_matrix(g: &CoverElement) -> Mat2 {
    let alpha = Complex64::from_polar(1.0, g.omega) / (1.0 - g.gamma.norm_sqr()).sqrt();
    let beta = -g.gamma.conj() * alpha.conj();
    Mat2::new(alpha, beta, beta.conj(), alpha.conj())
}
