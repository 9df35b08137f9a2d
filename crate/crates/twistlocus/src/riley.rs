//! The defining polynomial of the nonabelian representation variety of a
//! double twist knot, its exact expansion, branch brackets, and the Alexander
//! polynomial used to seed branch tracing.
//!
//! For `J(2m+1, 2n)` the variety of representations with meridian eigenvalue
//! `sqrt(t)` is cut out, in the coordinates `s` and `T = t + 1/t`, by
//!
//! ```text
//! phi(s, T) = (tau_{n+1} - tau_n)(c) + (T - s - 2) f_m g_{m-1} tau_n(c),
//! c = (T - s - 2) f_m^2 + 2,
//! ```
//!
//! where `tau_k` are the trace power polynomials and `f_m`, `g_m` the twist
//! region families. The module builds `phi` twice: once as an exactly
//! expanded integer polynomial in `T` (coefficients in `s`), and once as a
//! scalar recurrence evaluator; the two paths are checked against each other
//! on integer grids in the tests.
//!
//! ```
//! use twistlocus::KnotParams;
//! use twistlocus::riley::{riley_eval, riley_poly};
//!
//! let k = KnotParams::new(1, 1).unwrap(); // the (2,1) double twist knot 5_2
//! assert_eq!(riley_poly(k).to_string(), "(-3 - 8*s - 5*s^2 - s^3) + (2 + 3*s + s^2)*T");
//! assert!((riley_eval(k, 0.1, 1.5) - (-0.386)).abs() < 1e-12);
//! ```

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use crate::poly::{f_poly, f_roots, f_value, g_poly, g_value, tau_value, IntPolynomial, Scalar};
use crate::{Error, Result};

/// Twist parameters `(m, n)` of the double twist knot `J(2m+1, 2n)`.
///
/// `m = 0` and `m = -1` give `2m+1 = ±1`, i.e. an unknotted twist region
/// (torus-knot degeneration), and `n = 0` gives the unknot, so all three are
/// rejected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KnotParams {
    pub m: i64,
    pub n: i64,
}

impl KnotParams {
    pub fn new(m: i64, n: i64) -> Result<Self> {
        if m == 0 || m == -1 {
            return Err(Error::InvalidKnot(format!(
                "m = {m} gives a trivial twist region (2m+1 = {})",
                2 * m + 1
            )));
        }
        if n == 0 {
            return Err(Error::InvalidKnot("n = 0 gives the unknot".into()));
        }
        Ok(KnotParams { m, n })
    }

    /// Parameters of the mirror image: `J(2m+1, 2n)` mirrors to the knot with
    /// `(m, n) -> (-m-1, -n)`. An involution on valid parameters.
    pub fn mirror(self) -> KnotParams {
        KnotParams { m: -self.m - 1, n: -self.n }
    }
}

impl fmt::Display for KnotParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "J({}, {})", 2 * self.m + 1, 2 * self.n)
    }
}

/// Polynomial in `T` with coefficients that are integer polynomials in `s`.
/// Index `j` holds the coefficient of `T^j`.
#[derive(Clone, Debug, PartialEq)]
struct BiPoly {
    c: Vec<IntPolynomial>,
}

impl BiPoly {
    fn constant(p: IntPolynomial) -> Self {
        let mut out = BiPoly { c: vec![p] };
        out.normalize();
        out
    }

    fn one() -> Self {
        BiPoly::constant(IntPolynomial::constant(1, "s"))
    }

    fn normalize(&mut self) {
        while self.c.last().is_some_and(|p| p.is_zero()) {
            self.c.pop();
        }
    }

    fn add(&self, o: &BiPoly) -> BiPoly {
        let len = self.c.len().max(o.c.len());
        let zero = IntPolynomial::zero("s");
        let mut c = Vec::with_capacity(len);
        for j in 0..len {
            let a = self.c.get(j).unwrap_or(&zero);
            let b = o.c.get(j).unwrap_or(&zero);
            c.push(a.clone() + b.clone());
        }
        let mut out = BiPoly { c };
        out.normalize();
        out
    }

    fn neg(&self) -> BiPoly {
        BiPoly { c: self.c.iter().map(|p| -p.clone()).collect() }
    }

    fn sub(&self, o: &BiPoly) -> BiPoly {
        self.add(&o.neg())
    }

    fn mul(&self, o: &BiPoly) -> BiPoly {
        if self.c.is_empty() || o.c.is_empty() {
            return BiPoly { c: vec![] };
        }
        let zero = IntPolynomial::zero("s");
        let mut c = vec![zero; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].clone() + (a * b);
            }
        }
        let mut out = BiPoly { c };
        out.normalize();
        out
    }

    fn scale(&self, p: &IntPolynomial) -> BiPoly {
        let mut out = BiPoly { c: self.c.iter().map(|q| q * p).collect() };
        out.normalize();
        out
    }
}

/// `tau_k` evaluated at a bivariate argument, by the recurrence in both
/// directions (`tau_{-k} = -tau_k`).
fn bi_tau(k: i64, arg: &BiPoly) -> BiPoly {
    if k < 0 {
        return bi_tau(-k, arg).neg();
    }
    let mut prev = BiPoly { c: vec![] }; // tau_0 = 0
    let mut cur = BiPoly::one(); // tau_1 = 1
    if k == 0 {
        return prev;
    }
    for _ in 1..k {
        let next = arg.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// The defining polynomial of the representation variety, exactly expanded:
/// integer-coefficient polynomials in `s` indexed by the power of
/// `T = t + 1/t`. Degree in `T` is `|n|`.
#[derive(Clone, Debug, PartialEq)]
pub struct RileyPolynomial {
    coeffs: Vec<IntPolynomial>,
}

impl RileyPolynomial {
    /// Coefficient of `T^j` (zero polynomial beyond the degree).
    pub fn coeff_t(&self, j: usize) -> IntPolynomial {
        self.coeffs.get(j).cloned().unwrap_or_else(|| IntPolynomial::zero("s"))
    }

    pub fn degree_t(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[IntPolynomial] {
        &self.coeffs
    }

    /// Horner evaluation in `T` of the expanded coefficients.
    pub fn eval(&self, s: f64, cap_t: f64) -> f64 {
        let mut acc = 0.0;
        for p in self.coeffs.iter().rev() {
            acc = acc * cap_t + p.eval_f64(s);
        }
        acc
    }

    /// Derivative with respect to `T`, evaluated by Horner.
    pub fn eval_dt(&self, s: f64, cap_t: f64) -> f64 {
        let mut acc = 0.0;
        for (j, p) in self.coeffs.iter().enumerate().skip(1).rev() {
            acc = acc * cap_t + j as f64 * p.eval_f64(s);
        }
        acc
    }

    /// Exact evaluation at an integer point `(s, T)`.
    pub fn eval_bigint(&self, s: &BigInt, cap_t: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for p in self.coeffs.iter().rev() {
            acc = acc * cap_t + p.eval_bigint(s);
        }
        acc
    }
}

impl fmt::Display for RileyPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (j, p) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({p})")?;
            match j {
                0 => {}
                1 => write!(f, "*T")?,
                _ => write!(f, "*T^{j}")?,
            }
        }
        Ok(())
    }
}

/// Exact expansion of the defining polynomial for `J(2m+1, 2n)`.
pub fn riley_poly(k: KnotParams) -> RileyPolynomial {
    // u = T - s - 2 as a bivariate polynomial.
    let u = BiPoly {
        c: vec![
            IntPolynomial::from_i64(&[-2, -1], "s"),
            IntPolynomial::constant(1, "s"),
        ],
    };
    let f = f_poly(k.m);
    let g1 = g_poly(k.m - 1);
    // c = u f^2 + 2
    let two = BiPoly::constant(IntPolynomial::constant(2, "s"));
    let c = u.scale(&(&f * &f)).add(&two);
    let tau_n = bi_tau(k.n, &c);
    let tau_n1 = bi_tau(k.n + 1, &c);
    let head = tau_n1.sub(&tau_n);
    let tail = u.scale(&(&f * &g1)).mul(&tau_n);
    let phi = head.add(&tail);
    RileyPolynomial { coeffs: phi.c }
}

/// Scalar-recurrence evaluation of the defining polynomial — the path that
/// never builds the expanded coefficients, used as the independent check and
/// by the tracer's residual tests.
fn riley_eval_generic<T: Scalar>(m: i64, n: i64, s: T, cap_t: T) -> T {
    let two = T::from_f64(2.0);
    let f = f_value(m, s);
    let g1 = g_value(m - 1, s);
    let u = cap_t - s - two;
    let c = u * f * f + two;
    let tn = tau_value(n, c);
    let tn1 = tau_value(n + 1, c);
    (tn1 - tn) + u * f * g1 * tn
}

/// Evaluate the defining polynomial at real `(s, T)` by scalar recurrences.
pub fn riley_eval(k: KnotParams, s: f64, cap_t: f64) -> f64 {
    riley_eval_generic(k.m, k.n, s, cap_t)
}

/// Complex version of [`riley_eval`].
pub fn riley_eval_complex(k: KnotParams, s: Complex64, cap_t: Complex64) -> Complex64 {
    riley_eval_generic(k.m, k.n, s, cap_t)
}

/// Raw-parameter complex evaluation for modules that work below the
/// [`KnotParams`] validation layer.
pub(crate) fn riley_eval_complex_raw(
    m: i64,
    n: i64,
    s: Complex64,
    cap_t: Complex64,
) -> Complex64 {
    riley_eval_generic(m, n, s, cap_t)
}

/// Smallest positive root of the section `phi(s, T = 2)`. Scans `(0, 64]`
/// in steps of `1e-3`, then bisects the first sign change to full precision.
///
/// For `n = 1` this is where the real branch reaches `t = 1`; for `n >= 2`
/// the section carries one root per sheet of the variety and the smallest
/// may belong to a sheet other than the seeded branch — use [`branch_s0`]
/// for the branch's own endpoint.
pub fn find_s0(k: KnotParams) -> Result<f64> {
    let h = |s: f64| riley_eval(k, s, 2.0);
    let step = 1e-3;
    let mut prev_s = 0.0;
    let mut prev_v = h(0.0);
    let mut i = 1u64;
    loop {
        let s = i as f64 * step;
        if s > 64.0 {
            return Err(Error::NoRootFound(format!(
                "no root of the T = 2 section in (0, 64] for {k}"
            )));
        }
        let v = h(s);
        if v == 0.0 {
            return Ok(s);
        }
        if v.signum() != prev_v.signum() {
            let (mut lo, mut hi) = (prev_s, s);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                let vm = h(mid);
                if vm == 0.0 {
                    return Ok(mid);
                }
                if vm.signum() == prev_v.signum() {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            return Ok(0.5 * (lo + hi));
        }
        prev_s = s;
        prev_v = v;
        i += 1;
    }
}

/// Parameter where the *seeded* elliptic branch reaches `t = 1`, found by
/// continuation: the branch root `T(s)` is followed from `s -> 0` (where the
/// certified bracket isolates the seeded sheet) and the first crossing of
/// `T = 2` is bisected. For `n = 1` this agrees with [`find_s0`]; for
/// `n >= 2` the `T = 2` section has one root per sheet and the smallest
/// positive one may belong to a different sheet, so the section roots alone
/// cannot identify the branch endpoint.
///
/// Results are cached per parameter pair — tracing queries this for every
/// sample.
pub fn branch_s0(k: KnotParams) -> Result<f64> {
    use std::collections::HashMap;
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<HashMap<(i64, i64), f64>>> = OnceLock::new();
    if k.m < 1 || k.n < 1 {
        return Err(Error::OutOfCase(format!(
            "the t = 1 branch endpoint exists in the elliptic case only, got {k}"
        )));
    }
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&s0) = cache.lock().unwrap().get(&(k.m, k.n)) {
        return Ok(s0);
    }

    // Follow the bracketed root of the seeded sheet by plain bisection,
    // nearest to the previous sample when a bracket holds several roots.
    let solve = |s: f64, reference: Option<f64>| -> Result<f64> {
        let (lo, hi, _) = bracket_unchecked(k, s)?;
        bisect_nearest(k, s, lo, hi, reference)
    };
    let step = 1e-3;
    let mut prev_s = step;
    let mut prev_t = solve(prev_s, None)?;
    if prev_t >= 2.0 {
        return Err(Error::BracketFailure(format!(
            "seeded sheet of {k} already past T = 2 at s = {prev_s}"
        )));
    }
    let mut i = 2u64;
    loop {
        let s = i as f64 * step;
        if s > 64.0 {
            return Err(Error::NoRootFound(format!(
                "seeded sheet of {k} never reaches T = 2 in (0, 64]"
            )));
        }
        let t = solve(s, Some(prev_t))?;
        if t >= 2.0 {
            let (mut s_lo, mut s_hi) = (prev_s, s);
            let (mut t_lo, mut t_hi) = (prev_t, t);
            for _ in 0..80 {
                let mid = 0.5 * (s_lo + s_hi);
                let frac = (mid - s_lo) / (s_hi - s_lo);
                let t_mid = solve(mid, Some(t_lo + frac * (t_hi - t_lo)))?;
                if t_mid >= 2.0 {
                    s_hi = mid;
                    t_hi = t_mid;
                } else {
                    s_lo = mid;
                    t_lo = t_mid;
                }
            }
            let s0 = 0.5 * (s_lo + s_hi);
            cache.lock().unwrap().insert((k.m, k.n), s0);
            return Ok(s0);
        }
        prev_s = s;
        prev_t = t;
        i += 1;
    }
}

/// Bisection for a root of `phi(s, .)` inside a certified bracket, taking
/// the sign-change cell nearest `reference` when a 32-cell cut shows more
/// than one.
fn bisect_nearest(k: KnotParams, s: f64, lo: f64, hi: f64, reference: Option<f64>) -> Result<f64> {
    const CELLS: usize = 32;
    let mut best: Option<(f64, f64)> = None;
    let mut prev_x = lo;
    let mut prev_v = riley_eval(k, s, lo);
    for i in 1..=CELLS {
        let x = lo + (hi - lo) * i as f64 / CELLS as f64;
        let v = riley_eval(k, s, x);
        if prev_v == 0.0 {
            return Ok(prev_x);
        }
        if v == 0.0 || v.signum() != prev_v.signum() {
            let cell = (prev_x, x);
            best = Some(match (best, reference) {
                (None, _) => cell,
                (Some(b), None) => b,
                (Some(b), Some(r)) => {
                    if (0.5 * (cell.0 + cell.1) - r).abs() < (0.5 * (b.0 + b.1) - r).abs() {
                        cell
                    } else {
                        b
                    }
                }
            });
        }
        prev_x = x;
        prev_v = v;
    }
    let (mut a, mut b) = best.unwrap_or((lo, hi));
    let mut va = riley_eval(k, s, a);
    for _ in 0..100 {
        let mid = 0.5 * (a + b);
        let vm = riley_eval(k, s, mid);
        if vm == 0.0 {
            return Ok(mid);
        }
        if vm.signum() == va.signum() {
            a = mid;
            va = vm;
        } else {
            b = mid;
        }
        if b - a < 1e-14 * b.abs().max(1.0) {
            break;
        }
    }
    Ok(0.5 * (a + b))
}

/// Which real branch a parameter point lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchCase {
    /// `m >= 1`, `n >= 1`: `t` on the unit circle, `T = 2 cos(arg t) < 2`.
    Elliptic,
    /// `m <= -2`, `n >= 1`: `t` real `> 1`, `T > 2`.
    Hyperbolic,
}

impl fmt::Display for BranchCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchCase::Elliptic => write!(f, "elliptic"),
            BranchCase::Hyperbolic => write!(f, "hyperbolic"),
        }
    }
}

/// A certified sign-change interval for `T` on the real branch over a fixed
/// `s`: the defining polynomial has opposite signs at `cap_t_lo` and
/// `cap_t_hi`.
#[derive(Clone, Copy, Debug)]
pub struct BranchBracket {
    pub s: f64,
    pub cap_t_lo: f64,
    pub cap_t_hi: f64,
    pub case: BranchCase,
}

/// Bracket the real branch in `T` over the parameter `s`.
///
/// Elliptic case (`m >= 1`, `n >= 1`), domain `0 < s < s_0` with `s_0` the
/// branch's own `t = 1` crossing from [`branch_s0`]:
/// for `n > 1`, `T` lies in `[s + 2 - C2/f^2, s + 2 - C1/f^2]` with
/// `C1 = 2 - 2cos(pi/(2n+1))`, `C2 = 2 - 2cos(3pi/(2n+1))`; for `n = 1` the
/// branch is exactly `T = s + 2 - 1/(f g)` and a 10% relative window around
/// it is used.
///
/// Hyperbolic case (`m <= -2`, `n >= 1`), domain `r < s < 0` with `r` the
/// largest root of `f_m`: `T` lies in `[s + 2 + C3/f, s + 2 + C4/f]` with
/// `C3 = 1/(2 n |m|)` and `C4 = max(1, 2/(sqrt(1/(-r)) - 1) + 1)`. At
/// `m = -2` the generic `C4` degenerates (`r = -1`); there `C4 = 1` is a
/// tight bound that the branch attains exactly when `n = 1`, so a slightly
/// widened `1.05` keeps the endpoint strictly past the root.
///
/// The sign change is always certified numerically before returning: the
/// offsets are widened once by 5% if the raw endpoints straddle nothing
/// (bounds in the source inequalities can be attained), and a bracket that
/// still fails certification is an error, never a guess.
pub fn branch_bracket(k: KnotParams, s: f64) -> Result<BranchBracket> {
    if k.n < 0 {
        return Err(Error::OutOfCase(format!(
            "branch brackets need n >= 1; trace the mirror {} instead",
            k.mirror()
        )));
    }
    if k.m >= 1 {
        let s0 = branch_s0(k)?;
        if !(s > 0.0 && s < s0) {
            return Err(Error::OutOfRange(format!(
                "elliptic branch domain is (0, {s0:.6}); got s = {s}"
            )));
        }
    }
    let (lo, hi, case) = bracket_unchecked(k, s)?;
    Ok(BranchBracket { s, cap_t_lo: lo, cap_t_hi: hi, case })
}

/// Certified bracket without the elliptic upper-domain gate. [`branch_s0`]
/// locates that gate's endpoint by following the root, which requires
/// evaluating brackets at parameters not yet known to lie inside the domain;
/// the certification itself (sign-change endpoints) holds on both sides of
/// the `t = 1` crossing.
fn bracket_unchecked(k: KnotParams, s: f64) -> Result<(f64, f64, BranchCase)> {
    // Offsets from T = s + 2: negative on the elliptic side, positive on the
    // hyperbolic side.
    let (off_lo, off_hi, case) = if k.m >= 1 {
        if s <= 0.0 {
            return Err(Error::OutOfRange(format!(
                "elliptic brackets need s > 0; got s = {s}"
            )));
        }
        let f = f_value(k.m, s);
        if k.n == 1 {
            let q = 1.0 / (f * g_value(k.m, s));
            (-1.1 * q, -0.9 * q, BranchCase::Elliptic)
        } else {
            let c1 = 2.0 - 2.0 * (std::f64::consts::PI / (2 * k.n + 1) as f64).cos();
            let c2 = 2.0 - 2.0 * (3.0 * std::f64::consts::PI / (2 * k.n + 1) as f64).cos();
            (-c2 / (f * f), -c1 / (f * f), BranchCase::Elliptic)
        }
    } else {
        let r = f_roots(-k.m - 1)?.largest();
        if !(s > r && s < 0.0) {
            return Err(Error::OutOfRange(format!(
                "hyperbolic branch domain is ({r:.6}, 0); got s = {s}"
            )));
        }
        let f = f_value(k.m, s);
        let c3 = 1.0 / (2.0 * k.n as f64 * (-k.m) as f64);
        let c4 = if k.m == -2 {
            1.05
        } else {
            (2.0 / ((1.0 / -r).sqrt() - 1.0) + 1.0).max(1.0)
        };
        (c3 / f, c4 / f, BranchCase::Hyperbolic)
    };
    for widen in [1.0, 1.05] {
        // Widen outward: the endpoint nearer to s + 2 moves toward it, the
        // far endpoint moves away.
        let (lo, hi) = match case {
            BranchCase::Elliptic => (s + 2.0 + widen * off_lo, s + 2.0 + off_hi / widen),
            BranchCase::Hyperbolic => (s + 2.0 + off_lo / widen, s + 2.0 + widen * off_hi),
        };
        let v_lo = riley_eval(k, s, lo);
        let v_hi = riley_eval(k, s, hi);
        if v_lo * v_hi <= 0.0 && (v_lo != 0.0 || v_hi != 0.0) {
            return Ok((lo, hi, case));
        }
    }
    let lo = s + 2.0 + off_lo;
    let hi = s + 2.0 + off_hi;
    Err(Error::BracketFailure(format!(
        "no certified sign change for {k} at s = {s}: phi({lo:.6}) = {:.3e}, \
         phi({hi:.6}) = {:.3e}",
        riley_eval(k, s, lo),
        riley_eval(k, s, hi),
    )))
}

/// Symmetric Laurent polynomial `c_0 + sum_{i>=1} c_i (a^i + a^-i)`,
/// normalized so the top coefficient is positive.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSymmetric {
    half: Vec<BigInt>,
}

impl LaurentSymmetric {
    fn new(mut half: Vec<BigInt>) -> Self {
        while half.last().is_some_and(|c| c.is_zero()) {
            half.pop();
        }
        if half.last().is_some_and(|c| c.is_negative()) {
            for c in &mut half {
                *c = -std::mem::take(c);
            }
        }
        LaurentSymmetric { half }
    }

    /// Coefficient of `a^i` (equivalently of `a^-i`).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.half.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Span `d`: the polynomial runs from `a^-d` to `a^d`.
    pub fn span(&self) -> usize {
        self.half.len().saturating_sub(1)
    }

    /// Evaluate at a real `a != 0`.
    pub fn eval_f64(&self, a: f64) -> f64 {
        let mut acc = f64_of(&self.coeff(0));
        for i in 1..self.half.len() {
            acc += f64_of(&self.half[i]) * (a.powi(i as i32) + a.powi(-(i as i32)));
        }
        acc
    }

    /// Rewrite in the trace variable `u = a + 1/a` using
    /// `a^i + a^-i = p_i(u)`, `p_0 = 2`, `p_1 = u`, `p_{i+1} = u p_i - p_{i-1}`.
    pub fn to_u_poly(&self) -> IntPolynomial {
        let mut p_prev = IntPolynomial::constant(2, "u");
        let mut p_cur = IntPolynomial::from_i64(&[0, 1], "u");
        let u = p_cur.clone();
        let mut acc = IntPolynomial::new(vec![self.coeff(0)], "u");
        for i in 1..self.half.len() {
            let p_i = if i == 1 { p_cur.clone() } else { &u * &p_cur - p_prev.clone() };
            if i > 1 {
                p_prev = std::mem::replace(&mut p_cur, p_i.clone());
            }
            acc = acc + p_i.scale(&self.half[i]);
        }
        acc
    }
}

impl fmt::Display for LaurentSymmetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.half.is_empty() {
            return write!(f, "0");
        }
        let d = self.span() as i64;
        let mut first = true;
        for i in (-d..=d).rev() {
            let c = self.coeff(i.unsigned_abs() as usize);
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            if i != 0 {
                if show_coeff {
                    write!(f, "*")?;
                }
                match i {
                    1 => write!(f, "a")?,
                    -1 => write!(f, "a^-1")?,
                    _ => write!(f, "a^{i}")?,
                }
            }
        }
        Ok(())
    }
}

fn f64_of(b: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    b.to_f64().unwrap_or(f64::NAN)
}

/// Alexander polynomial of the `(2, q)` torus knot, `q >= 1` odd:
/// `(a^q + 1) / ((a + 1) a^{(q-1)/2})`, i.e. alternating signs from
/// `a^{(q-1)/2}` down to its reciprocal.
fn torus_alexander(q: i64) -> LaurentSymmetric {
    assert!(q >= 1 && q % 2 == 1, "torus factor needs odd q >= 1");
    let d = ((q - 1) / 2) as usize;
    let half: Vec<BigInt> = (0..=d)
        .map(|i| if (d - i) % 2 == 0 { BigInt::one() } else { -BigInt::one() })
        .collect();
    LaurentSymmetric::new(half)
}

/// Alexander polynomial of `J(2m+1, 2n)` as the twist-family combination of
/// two torus knot polynomials:
///
/// ```text
/// Delta = (m+1) Delta_{T(2, 2n+1)} - m Delta_{T(2, 2n-1)}
/// ```
///
/// For `n <= -1` the mirror parameters are used (the Alexander polynomial is
/// mirror-invariant).
pub fn alexander_poly(k: KnotParams) -> LaurentSymmetric {
    let k = if k.n < 0 { k.mirror() } else { k };
    let plus = torus_alexander(2 * k.n + 1);
    let minus = torus_alexander(2 * k.n - 1);
    let span = plus.span().max(minus.span());
    let half: Vec<BigInt> = (0..=span)
        .map(|i| BigInt::from(k.m + 1) * plus.coeff(i) - BigInt::from(k.m) * minus.coeff(i))
        .collect();
    LaurentSymmetric::new(half)
}

/// Classified roots of the Alexander polynomial. Roots come in `a <-> 1/a`
/// pairs; each pair is reported once through its trace `u = a + 1/a`:
/// unit-circle pairs as the angle `theta = arccos(u/2)`, real pairs by the
/// representative with `|a| > 1`.
#[derive(Clone, Debug)]
pub struct AlexanderRoots {
    /// Angles in `(0, pi)` of unit-circle root pairs, ascending.
    pub unit_angles: Vec<f64>,
    /// Real roots `a > 1` (one per reciprocal pair), descending.
    pub positive_real: Vec<f64>,
    /// Real roots `a < -1` (one per reciprocal pair), if any.
    pub negative_real: Vec<f64>,
}

/// All real roots of an integer polynomial inside `[-bound, bound]`, by sign
/// scan and bisection, with deflation (largest magnitude first) to recover
/// roots the scan cannot see; every root is polished on the original
/// polynomial.
fn real_poly_roots(p: &IntPolynomial) -> Vec<f64> {
    let deg = p.degree();
    if deg == 0 {
        return vec![];
    }
    let coeffs: Vec<f64> = (0..=deg).map(|i| f64_of(&p.coeff(i))).collect();
    let lead = coeffs[deg].abs();
    let bound = 1.0 + coeffs[..deg].iter().map(|c| c.abs()).fold(0.0, f64::max) / lead;

    let eval = |cs: &[f64], x: f64| cs.iter().rev().fold(0.0, |acc, c| acc * x + c);
    let bisect_roots = |cs: &[f64]| -> Vec<f64> {
        let cells = 4096 * cs.len();
        let mut found = Vec::new();
        let mut prev_x = -bound;
        let mut prev_v = eval(cs, prev_x);
        for i in 1..=cells {
            let x = -bound + 2.0 * bound * i as f64 / cells as f64;
            let v = eval(cs, x);
            if prev_v == 0.0 {
                found.push(prev_x);
            } else if v != 0.0 && v.signum() != prev_v.signum() {
                let (mut lo, mut hi) = (prev_x, x);
                let (mut vlo, _) = (prev_v, v);
                for _ in 0..100 {
                    let mid = 0.5 * (lo + hi);
                    let vm = eval(cs, mid);
                    if vm == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if vm.signum() == vlo.signum() {
                        lo = mid;
                        vlo = vm;
                    } else {
                        hi = mid;
                    }
                }
                found.push(0.5 * (lo + hi));
            }
            prev_x = x;
            prev_v = v;
        }
        found
    };

    let mut roots = bisect_roots(&coeffs);
    // Deflate what was found (largest magnitude first, for stability) and
    // rescan the quotient: even-multiplicity roots produce no sign change on
    // the original polynomial but do on the deflated one.
    let mut work = coeffs.clone();
    let mut order: Vec<f64> = roots.clone();
    order.sort_by(|a, b| b.abs().partial_cmp(&a.abs()).unwrap());
    for r in order {
        work = deflate(&work, r);
    }
    for extra in bisect_roots(&work) {
        // Polish on the original polynomial by Newton; accept only genuine
        // near-roots.
        let mut x = extra;
        for _ in 0..60 {
            let v = eval(&coeffs, x);
            let dcoeffs: Vec<f64> =
                coeffs.iter().enumerate().skip(1).map(|(i, c)| i as f64 * c).collect();
            let dv = eval(&dcoeffs, x);
            if dv == 0.0 {
                break;
            }
            let step = v / dv;
            x -= step;
            if step.abs() < 1e-14 * x.abs().max(1.0) {
                break;
            }
        }
        let scale: f64 = coeffs.iter().map(|c| c.abs()).sum::<f64>() * bound.powi(deg as i32);
        if eval(&coeffs, x).abs() <= 1e-9 * scale.max(1.0)
            && !roots.iter().any(|r| (r - x).abs() < 1e-7 * x.abs().max(1.0))
        {
            roots.push(x);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

/// Synthetic division of `cs` by `(x - r)`, dropping the remainder.
fn deflate(cs: &[f64], r: f64) -> Vec<f64> {
    if cs.len() <= 1 {
        return vec![];
    }
    let mut out = vec![0.0; cs.len() - 1];
    let mut carry = 0.0;
    for i in (0..cs.len() - 1).rev() {
        carry = cs[i + 1] + carry * r;
        out[i] = carry;
    }
    out
}

/// Roots of the Alexander polynomial of `k`, classified by type.
///
/// The real branch cases require specific root types to exist — a unit-circle
/// pair for `m >= 1`, a positive real pair for `m <= -2` (taking `n >= 1`
/// after mirroring) — and their absence is a [`Error::ClassificationMismatch`].
pub fn alexander_roots(k: KnotParams) -> Result<AlexanderRoots> {
    let kp = if k.n < 0 { k.mirror() } else { k };
    let d_u = alexander_poly(kp).to_u_poly();
    let mut unit_angles = Vec::new();
    let mut positive_real = Vec::new();
    let mut negative_real = Vec::new();
    for u in real_poly_roots(&d_u) {
        if u.abs() < 2.0 {
            unit_angles.push((u / 2.0).acos());
        } else if u >= 2.0 {
            positive_real.push((u + (u * u - 4.0).max(0.0).sqrt()) / 2.0);
        } else {
            negative_real.push((u - (u * u - 4.0).max(0.0).sqrt()) / 2.0);
        }
    }
    unit_angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    positive_real.sort_by(|a, b| b.partial_cmp(a).unwrap());
    if kp.m >= 1 && unit_angles.is_empty() {
        return Err(Error::ClassificationMismatch(format!(
            "{kp} should have a unit-circle Alexander root pair, found none"
        )));
    }
    if kp.m <= -2 && positive_real.is_empty() {
        return Err(Error::ClassificationMismatch(format!(
            "{kp} should have a positive real Alexander root pair, found none"
        )));
    }
    Ok(AlexanderRoots { unit_angles, positive_real, negative_real })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn k(m: i64, n: i64) -> KnotParams {
        KnotParams::new(m, n).unwrap()
    }

    fn valid_m(range: std::ops::RangeInclusive<i64>) -> impl Iterator<Item = i64> {
        range.filter(|&m| m != 0 && m != -1)
    }

    #[test]
    fn params_reject_degenerate_twists() {
        assert!(matches!(KnotParams::new(0, 1), Err(Error::InvalidKnot(_))));
        assert!(matches!(KnotParams::new(-1, 2), Err(Error::InvalidKnot(_))));
        assert!(matches!(KnotParams::new(1, 0), Err(Error::InvalidKnot(_))));
        assert!(KnotParams::new(-2, 2).is_ok());
    }

    #[test]
    fn mirror_is_an_involution() {
        for m in valid_m(-5..=5) {
            for n in [-3, -1, 1, 2] {
                let p = k(m, n);
                assert_eq!(p.mirror().mirror(), p);
                assert!(KnotParams::new(p.mirror().m, p.mirror().n).is_ok());
            }
        }
        assert_eq!(k(1, 1).mirror(), k(-2, -1));
    }

    #[test]
    fn display_names_the_knot() {
        assert_eq!(k(1, 1).to_string(), "J(3, 2)");
        assert_eq!(k(-2, 2).to_string(), "J(-3, 4)");
    }

    #[test]
    fn smallest_case_expands_exactly() {
        // (T - s - 2)(s + 1)(s + 2) + 1 for m = n = 1.
        let p = riley_poly(k(1, 1));
        assert_eq!(p.degree_t(), 1);
        assert_eq!(p.coeff_t(0), IntPolynomial::from_i64(&[-3, -8, -5, -1], "s"));
        assert_eq!(p.coeff_t(1), IntPolynomial::from_i64(&[2, 3, 1], "s"));
        assert_eq!(
            p.to_string(),
            "(-3 - 8*s - 5*s^2 - s^3) + (2 + 3*s + s^2)*T"
        );
    }

    #[test]
    fn degree_in_t_is_abs_n() {
        for m in valid_m(-3..=3) {
            for n in [-3, -2, -1, 1, 2, 3, 4] {
                assert_eq!(
                    riley_poly(k(m, n)).degree_t() as i64,
                    n.abs(),
                    "(m, n) = ({m}, {n})"
                );
            }
        }
    }

    #[test]
    fn recurrence_eval_spot_value() {
        let v = riley_eval(k(1, 1), 0.1, 1.5);
        assert!((v - (-0.386)).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn expanded_and_recurrence_paths_agree_exactly_on_integer_grids() {
        // BigInt recurrence for the scalar path, fully independent of the
        // bivariate expansion machinery.
        fn val_f(m: i64, s: &BigInt) -> BigInt {
            val_rec(m, s, BigInt::one(), s + BigInt::one())
        }
        fn val_g(m: i64, s: &BigInt) -> BigInt {
            val_rec(m, s, BigInt::one(), s + BigInt::from(2))
        }
        fn val_rec(m: i64, s: &BigInt, v0: BigInt, v1: BigInt) -> BigInt {
            let a = s + BigInt::from(2);
            if m >= 0 {
                let (mut p, mut c) = (v0, v1);
                for _ in 0..m {
                    let nx = &a * &c - &p;
                    p = std::mem::replace(&mut c, nx);
                }
                p
            } else {
                let (mut c, mut nx) = (v0, v1);
                for _ in 0..-m {
                    let p = &a * &c - &nx;
                    nx = std::mem::replace(&mut c, p);
                }
                c
            }
        }
        fn val_tau(n: i64, x: &BigInt) -> BigInt {
            if n < 0 {
                return -val_tau(-n, x);
            }
            let (mut p, mut c) = (BigInt::zero(), BigInt::one());
            for _ in 0..n {
                let nx = x * &c - &p;
                p = std::mem::replace(&mut c, nx);
            }
            p
        }

        for m in valid_m(-4..=4) {
            for n in [-3, -2, -1, 1, 2, 3, 4] {
                let p = riley_poly(k(m, n));
                for si in -3..=3i64 {
                    for ti in -3..=3i64 {
                        let s = BigInt::from(si);
                        let t = BigInt::from(ti);
                        let f = val_f(m, &s);
                        let g1 = val_g(m - 1, &s);
                        let u = &t - &s - BigInt::from(2);
                        let c = &u * &f * &f + BigInt::from(2);
                        let phi = val_tau(n + 1, &c) - val_tau(n, &c) + u * f * g1 * val_tau(n, &c);
                        assert_eq!(
                            p.eval_bigint(&s, &t),
                            phi,
                            "(m, n, s, T) = ({m}, {n}, {si}, {ti})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn complex_eval_matches_real_eval_on_real_inputs() {
        let kk = k(-2, 2);
        let real = riley_eval(kk, -0.3, 2.7);
        let cplx = riley_eval_complex(kk, Complex64::new(-0.3, 0.0), Complex64::new(2.7, 0.0));
        assert!((cplx.re - real).abs() < 1e-12 && cplx.im == 0.0);
    }

    #[test]
    fn branch_endpoint_parameter_for_smallest_case() {
        // For m = n = 1 the T = 2 section is 1 - s(s+1)(s+2), whose positive
        // root solves s^3 + 3s^2 + 2s - 1 = 0.
        let s0 = find_s0(k(1, 1)).unwrap();
        let cubic = |x: f64| x * x * x + 3.0 * x * x + 2.0 * x - 1.0;
        assert!(cubic(s0).abs() < 1e-10);
        assert!((s0 - 0.3247).abs() < 1e-4);
    }

    #[test]
    fn section_root_exists_across_elliptic_cases() {
        for m in 1..=4 {
            for n in 1..=4 {
                let s0 = find_s0(k(m, n)).unwrap();
                assert!(s0 > 0.0 && s0 < 2.0, "(m, n) = ({m}, {n}): s0 = {s0}");
                assert!(riley_eval(k(m, n), s0, 2.0).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn seeded_branch_endpoint_sits_on_its_own_sheet() {
        // n = 1: one sheet, so the section root and the branch endpoint agree.
        let kk = k(1, 1);
        let a = find_s0(kk).unwrap();
        let b = branch_s0(kk).unwrap();
        assert!((a - b).abs() < 1e-9, "single sheet: {a} vs {b}");

        for (m, n) in [(2i64, 2i64), (1, 2), (1, 3), (3, 2)] {
            let kk = k(m, n);
            let s0 = branch_s0(kk).unwrap();
            // The endpoint is a root of the T = 2 section...
            assert!(
                riley_eval(kk, s0, 2.0).abs() < 1e-8,
                "({m}, {n}): phi(s0, 2) = {}",
                riley_eval(kk, s0, 2.0)
            );
            // ...whose trace coordinate 2 - s f^2 lands inside the seeded
            // angular window, i.e. s f^2 strictly between
            // 2 - 2cos(pi/(2n+1)) and 2 - 2cos(3pi/(2n+1)).
            let f = f_value(m, s0);
            let c1 = 2.0 - 2.0 * (PI / (2 * n + 1) as f64).cos();
            let c2 = 2.0 - 2.0 * (3.0 * PI / (2 * n + 1) as f64).cos();
            let q = s0 * f * f;
            assert!(q > c1 && q < c2, "({m}, {n}): s0 f^2 = {q} not in ({c1}, {c2})");
        }

        // For (2, 2) the smallest section root fails that window test: it
        // belongs to a different sheet, strictly below the branch endpoint.
        let kk = k(2, 2);
        let first = find_s0(kk).unwrap();
        let own = branch_s0(kk).unwrap();
        assert!(first < own, "section root {first} should precede endpoint {own}");
        let f = f_value(2, first);
        let c1 = 2.0 - 2.0 * (PI / 5.0).cos();
        assert!(first * f * f < c1);
    }

    #[test]
    fn elliptic_bracket_certifies_across_domain() {
        for (m, n) in [(1, 1), (2, 2), (1, 2), (3, 3), (2, 1)] {
            let kk = k(m, n);
            let s0 = branch_s0(kk).unwrap();
            for frac in [0.05, 0.3, 0.6, 0.9, 0.99] {
                let s = frac * s0;
                let b = branch_bracket(kk, s).unwrap();
                assert_eq!(b.case, BranchCase::Elliptic);
                assert!(b.cap_t_lo < b.cap_t_hi);
                assert!(b.cap_t_hi < s + 2.0, "upper end must sit below s + 2");
            }
        }
    }

    #[test]
    fn hyperbolic_bracket_certifies_across_domain() {
        for (m, n) in [(-2, 1), (-2, 2), (-3, 2), (-2, 3), (-4, 1)] {
            let kk = k(m, n);
            let r = f_roots(-m - 1).unwrap().largest();
            for frac in [0.02, 0.3, 0.7, 0.95] {
                let s = r * (1.0 - frac); // between r and 0
                let b = branch_bracket(kk, s).unwrap();
                assert_eq!(b.case, BranchCase::Hyperbolic);
                // The conservative lower endpoint may dip below T = 2, but
                // the upper one must clear it: the bracketed root has t > 1.
                assert!(b.cap_t_hi > 2.0, "hyperbolic root lives above 2, hi = {}", b.cap_t_hi);
                assert!(b.cap_t_lo < b.cap_t_hi);
            }
        }
    }

    #[test]
    fn bracket_rejects_out_of_domain_and_negative_n() {
        assert!(matches!(branch_bracket(k(1, 1), 0.5), Err(Error::OutOfRange(_))));
        assert!(matches!(branch_bracket(k(1, 1), -0.1), Err(Error::OutOfRange(_))));
        assert!(matches!(branch_bracket(k(-2, 2), -1.5), Err(Error::OutOfRange(_))));
        assert!(matches!(branch_bracket(k(-2, 2), 0.1), Err(Error::OutOfRange(_))));
        assert!(matches!(branch_bracket(k(1, -2), 0.1), Err(Error::OutOfCase(_))));
    }

    #[test]
    fn alexander_small_cases() {
        assert_eq!(alexander_poly(k(1, 1)).to_string(), "2*a - 3 + 2*a^-1");
        assert_eq!(
            alexander_poly(k(-2, 2)).to_string(),
            "a^2 - 3*a + 3 - 3*a^-1 + a^-2"
        );
        assert_eq!(
            alexander_poly(k(2, 2)).to_string(),
            "3*a^2 - 5*a + 5 - 5*a^-1 + 3*a^-2"
        );
    }

    #[test]
    fn alexander_is_mirror_invariant() {
        for m in valid_m(-4..=4) {
            for n in [-3, -2, -1, 1, 2, 3] {
                let p = k(m, n);
                assert_eq!(alexander_poly(p), alexander_poly(p.mirror()), "{p}");
            }
        }
    }

    #[test]
    fn alexander_at_one_is_a_unit() {
        for m in valid_m(-5..=5) {
            for n in 1..=5 {
                let v = alexander_poly(k(m, n)).eval_f64(1.0);
                assert!((v.abs() - 1.0).abs() < 1e-9, "(m, n) = ({m}, {n}): {v}");
            }
        }
    }

    #[test]
    fn doubled_constant_term_variant_breaks_determinant() {
        // A tempting mis-assembly of the torus combination counts the center
        // coefficient twice. It fails the Alexander unit test at a = 1; the
        // correct combination passes (previous test).
        let good = alexander_poly(k(1, 1));
        let bad = LaurentSymmetric::new(vec![
            BigInt::from(2) * good.coeff(0),
            good.coeff(1),
        ]);
        assert_eq!(bad.to_string(), "2*a - 6 + 2*a^-1");
        assert!((bad.eval_f64(1.0).abs() - 1.0).abs() > 0.5);
    }

    #[test]
    fn determinant_is_odd() {
        for m in valid_m(-4..=4) {
            for n in 1..=4 {
                let det = alexander_poly(k(m, n)).eval_f64(-1.0).abs().round() as i64;
                assert!(det % 2 == 1 && det >= 1, "(m, n) = ({m}, {n}): det = {det}");
            }
        }
    }

    #[test]
    fn trace_variable_rewrites_small_cases() {
        assert_eq!(
            alexander_poly(k(-2, 2)).to_u_poly(),
            IntPolynomial::from_i64(&[1, -3, 1], "u")
        );
        assert_eq!(
            alexander_poly(k(2, 2)).to_u_poly(),
            IntPolynomial::from_i64(&[-1, -5, 3], "u")
        );
        assert_eq!(
            alexander_poly(k(-3, 2)).to_u_poly(),
            IntPolynomial::from_i64(&[1, -5, 2], "u")
        );
    }

    #[test]
    fn trace_rewrite_agrees_with_direct_evaluation() {
        for m in valid_m(-4..=4) {
            for n in 1..=4 {
                let delta = alexander_poly(k(m, n));
                let d_u = delta.to_u_poly();
                for a in [0.3, 1.7, -2.2, 0.9] {
                    let direct = delta.eval_f64(a);
                    let via_u = d_u.eval_f64(a + 1.0 / a);
                    assert!(
                        (direct - via_u).abs() < 1e-9 * direct.abs().max(1.0),
                        "(m, n, a) = ({m}, {n}, {a})"
                    );
                }
            }
        }
    }

    #[test]
    fn root_classification_golden_ratio_case() {
        // J(-3, 4): u^2 - 3u + 1 with roots (3 ± sqrt 5)/2; one unit pair,
        // one positive real pair.
        let roots = alexander_roots(k(-2, 2)).unwrap();
        assert_eq!(roots.unit_angles.len(), 1);
        assert_eq!(roots.positive_real.len(), 1);
        assert!(roots.negative_real.is_empty());
        let u_unit = (3.0 - 5.0_f64.sqrt()) / 2.0;
        assert!((roots.unit_angles[0] - (u_unit / 2.0).acos()).abs() < 1e-9);
        let u_real = (3.0 + 5.0_f64.sqrt()) / 2.0;
        let a = (u_real + (u_real * u_real - 4.0).sqrt()) / 2.0;
        assert!((roots.positive_real[0] - a).abs() < 1e-9);
        assert!((roots.positive_real[0] - 2.15372).abs() < 1e-5);
    }

    #[test]
    fn root_classification_two_unit_pairs() {
        // J(5, 4): 3u^2 - 5u - 1 has both roots in (-2, 2) — two unit pairs,
        // no real pairs.
        let roots = alexander_roots(k(2, 2)).unwrap();
        assert_eq!(roots.unit_angles.len(), 2);
        assert!(roots.positive_real.is_empty());
        let u = (5.0 - 37.0_f64.sqrt()) / 6.0; // ≈ -0.18046
        assert!(roots.unit_angles.iter().any(|&t| (t - (u / 2.0).acos()).abs() < 1e-9));
    }

    #[test]
    fn unique_unit_root_for_single_full_twist() {
        // n = 1, m >= 1: D(u) = (m+1) u - (2m+1).
        for m in 1..=5 {
            let roots = alexander_roots(k(m, 1)).unwrap();
            assert_eq!(roots.unit_angles.len(), 1);
            let u = (2 * m + 1) as f64 / (m + 1) as f64;
            assert!((roots.unit_angles[0] - (u / 2.0).acos()).abs() < 1e-9);
        }
    }

    #[test]
    fn root_classification_exists_for_required_cases() {
        for m in valid_m(-4..=4) {
            for n in [-3, -2, -1, 1, 2, 3] {
                let roots = alexander_roots(k(m, n)).unwrap();
                let kp = if n < 0 { k(m, n).mirror() } else { k(m, n) };
                if kp.m >= 1 {
                    assert!(!roots.unit_angles.is_empty(), "(m, n) = ({m}, {n})");
                } else {
                    assert!(!roots.positive_real.is_empty(), "(m, n) = ({m}, {n})");
                }
            }
        }
    }

    #[test]
    fn root_count_never_exceeds_trace_degree() {
        for m in valid_m(-4..=4) {
            for n in 1..=4 {
                let d_u = alexander_poly(k(m, n)).to_u_poly();
                let roots = alexander_roots(k(m, n)).unwrap();
                let total =
                    roots.unit_angles.len() + roots.positive_real.len() + roots.negative_real.len();
                assert!(total <= d_u.degree(), "(m, n) = ({m}, {n})");
            }
        }
    }
}
