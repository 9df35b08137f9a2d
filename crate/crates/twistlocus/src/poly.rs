//! Exact integer polynomials and the two recurrence families `f_m`, `g_m`
//! (variable `s`) plus the power family `tau_k` (variable `tau`).
//!
//! Both `f` and `g` satisfy `p_{m+2} = (s+2)p_{m+1} - p_m` with seeds
//! `f_0 = 1, f_1 = s+1` and `g_0 = 1, g_1 = s+2`; negative indices follow the
//! conventions `f_{-m} = f_{m-1}`, `g_{-1} = 0`, `g_{-m} = -g_{m-2}`. The
//! `tau` family is `tau_0 = 0, tau_1 = 1, tau_{k+2} = tau*tau_{k+1} - tau_k`,
//! extended by `tau_{-k} = -tau_k`.
//!
//! ```
//! use twistlocus::poly::{f_poly, g_poly};
//! let lhs = f_poly(3).clone() + g_poly(2);
//! assert_eq!(lhs, g_poly(3)); // f_m + g_{m-1} = g_m, exactly over ZZ
//! ```
//!
//! Root sets: `g_m(2cos(x) - 2)` is the degree-`m` Chebyshev polynomial of
//! the second kind in `cos(x)`, so its roots have a closed form; the roots of
//! `f_m` are found by bisection on the sign-change brackets that the
//! interleaved roots of `g_{m-1}` and `g_m` provide. All sign decisions and
//! residuals use exact big-rational evaluation, never rounded arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Dense univariate polynomial over ZZ, coefficients lowest degree first.
/// The zero polynomial is the empty list; the top coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
    var: &'static str,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>, var: &'static str) -> Self {
        let mut p = IntPolynomial { coeffs, var };
        p.normalize();
        p
    }

    pub fn zero(var: &'static str) -> Self {
        IntPolynomial { coeffs: Vec::new(), var }
    }

    pub fn constant(c: i64, var: &'static str) -> Self {
        IntPolynomial::new(vec![BigInt::from(c)], var)
    }

    /// Convenience constructor from small coefficients, lowest degree first.
    pub fn from_i64(coeffs: &[i64], var: &'static str) -> Self {
        IntPolynomial::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), var)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    /// Coefficient of degree `i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return IntPolynomial::zero(self.var);
        }
        IntPolynomial::new(self.coeffs.iter().map(|a| a * c).collect(), self.var)
    }

    /// Horner evaluation in f64. Fine away from heavy cancellation; sign
    /// decisions near roots go through [`IntPolynomial::eval_exact`] instead.
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    pub fn eval_c64(&self, x: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
        }
        acc
    }

    pub fn eval_bigint(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a finite f64 (every finite f64 is rational).
    pub fn eval_exact(&self, x: f64) -> BigRational {
        let xr = BigRational::from_float(x).expect("finite argument");
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &xr + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the exact value at `x`: -1, 0, or 1.
    pub fn sign_at(&self, x: f64) -> i32 {
        let v = self.eval_exact(x);
        if v.is_zero() {
            0
        } else if v.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return IntPolynomial::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPolynomial::new(coeffs, self.var)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (i, c) in short.into_iter().enumerate() {
            long[i] += c;
        }
        IntPolynomial::new(long, self.var)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        self + (-rhs)
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            var: self.var,
        }
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero(self.var);
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out, self.var)
    }
}

impl<'a> Mul<&'a IntPolynomial> for &'a IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.clone() * rhs.clone()
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers with sign-aware separators, e.g. `-3 - 8*s + s^2`;
    /// zero terms are skipped, unit coefficients elided, and the zero
    /// polynomial prints `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.magnitude();
            if first {
                if c.sign() == Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if show_mag {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.var)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `f_m(s)`: `f_0 = 1`, `f_1 = s+1`, `f_{m+2} = (s+2) f_{m+1} - f_m`;
/// negative indices by `f_{-m} = f_{m-1}`.
pub fn f_poly(m: i64) -> IntPolynomial {
    if m < 0 {
        return f_poly(-m - 1);
    }
    let step = IntPolynomial::from_i64(&[2, 1], "s");
    let mut prev = IntPolynomial::constant(1, "s"); // f_0
    if m == 0 {
        return prev;
    }
    let mut cur = IntPolynomial::from_i64(&[1, 1], "s"); // f_1
    for _ in 1..m {
        let next = step.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `g_m(s)`: `g_0 = 1`, `g_1 = s+2`, same recurrence as `f`; negative
/// indices by `g_{-1} = 0` and `g_{-m} = -g_{m-2}` for `m >= 2`.
pub fn g_poly(m: i64) -> IntPolynomial {
    if m == -1 {
        return IntPolynomial::zero("s");
    }
    if m < -1 {
        return -g_poly(-m - 2);
    }
    let step = IntPolynomial::from_i64(&[2, 1], "s");
    let mut prev = IntPolynomial::constant(1, "s"); // g_0
    if m == 0 {
        return prev;
    }
    let mut cur = step.clone(); // g_1 = s + 2
    for _ in 1..m {
        let next = step.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `tau_k(tau)`: `tau_0 = 0`, `tau_1 = 1`, `tau_{k+2} = tau*tau_{k+1} - tau_k`,
/// extended to negative indices by `tau_{-k} = -tau_k`.
pub fn tau_poly(k: i64) -> IntPolynomial {
    if k < 0 {
        return -tau_poly(-k);
    }
    let step = IntPolynomial::from_i64(&[0, 1], "tau");
    let mut prev = IntPolynomial::zero("tau"); // tau_0
    if k == 0 {
        return prev;
    }
    let mut cur = IntPolynomial::constant(1, "tau"); // tau_1
    for _ in 1..k {
        let next = step.clone() * cur.clone() - prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Closed form `f_m = sum_i C(m+i, m-i) s^i` for `m >= 0`. Independent of the
/// recurrence; used as its oracle.
pub fn f_poly_closed(m: u64) -> IntPolynomial {
    let coeffs = (0..=m).map(|i| binomial(m + i, m - i)).collect();
    IntPolynomial::new(coeffs, "s")
}

/// Closed form `g_m = sum_i C(m+1+i, m-i) s^i` for `m >= 0`.
pub fn g_poly_closed(m: u64) -> IntPolynomial {
    let coeffs = (0..=m).map(|i| binomial(m + 1 + i, m - i)).collect();
    IntPolynomial::new(coeffs, "s")
}

/// A set of certified real roots, ascending, with the largest exact residual
/// `|p(root)|` observed across them.
#[derive(Clone, Debug)]
pub struct RootList {
    pub roots: Vec<f64>,
    pub residual_bound: f64,
}

impl RootList {
    pub fn largest(&self) -> f64 {
        *self.roots.last().expect("nonempty root list")
    }
}

/// All `m` roots of `g_m` in closed form: `2cos(k*pi/(m+1)) - 2`, `k = 1..m`,
/// returned ascending. Requires `m >= 1`.
pub fn g_roots_closed(m: i64) -> Result<RootList> {
    if m < 1 {
        return Err(Error::OutOfRange(format!("g_roots_closed wants m >= 1, got {m}")));
    }
    let p = g_poly(m);
    let mut roots = Vec::with_capacity(m as usize);
    for k in (1..=m).rev() {
        roots.push(2.0 * (k as f64 * std::f64::consts::PI / (m as f64 + 1.0)).cos() - 2.0);
    }
    let residual_bound = roots
        .iter()
        .map(|&r| p.eval_exact(r).abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0_f64, f64::max);
    Ok(RootList { roots, residual_bound })
}

/// Trigonometric closed form for the roots of `f_m`, `m >= 1`:
/// `2cos((2k+1)pi/(2m+1)) - 2`, `k = 0..m-1`, ascending. Follows from
/// `f_m = g_m - g_{m-1}` and the Chebyshev closed form for `g`; kept as an
/// independent oracle for [`f_roots`].
pub fn f_roots_closed(m: i64) -> Result<RootList> {
    if m < 1 {
        return Err(Error::OutOfRange(format!("f_roots_closed wants m >= 1, got {m}")));
    }
    let p = f_poly(m);
    let mut roots = Vec::with_capacity(m as usize);
    for k in (0..m).rev() {
        let theta = (2 * k + 1) as f64 * std::f64::consts::PI / (2 * m + 1) as f64;
        roots.push(2.0 * theta.cos() - 2.0);
    }
    let residual_bound = roots
        .iter()
        .map(|&r| p.eval_exact(r).abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0_f64, f64::max);
    Ok(RootList { roots, residual_bound })
}

/// All `m` roots of `f_m` for `m >= 1`, ascending, by bisection on the
/// sign-change brackets formed by the smallest root of `g_m`, the roots of
/// `g_{m-1}`, and `0`. Bisection runs to width 1e-13 with exact-sign
/// evaluation, then takes one guarded Newton step; the recorded residual
/// bound is the exact `max |f_m(root)|`.
pub fn f_roots(m: i64) -> Result<RootList> {
    if m < 1 {
        return Err(Error::OutOfRange(format!("f_roots wants m >= 1, got {m}")));
    }
    let p = f_poly(m);
    let dp = p.derivative();

    // Bracket endpoints: below every root of f_m sits the smallest root of
    // g_m; between consecutive roots the roots of g_{m-1} alternate the sign
    // of f_m = g_m - g_{m-1}; above everything f_m(0) = 1 > 0.
    let mut pts = vec![g_roots_closed(m)?.roots[0]];
    if m >= 2 {
        pts.extend(g_roots_closed(m - 1)?.roots);
    }
    pts.push(0.0);

    let mut roots = Vec::with_capacity(m as usize);
    let mut residual_bound = 0.0_f64;
    for pair in pts.windows(2) {
        let (mut lo, mut hi) = (pair[0], pair[1]);
        let (mut slo, shi) = (p.sign_at(lo), p.sign_at(hi));
        if slo == 0 {
            roots.push(lo);
            continue;
        }
        if slo == shi {
            return Err(Error::BracketFailure(format!(
                "no sign change of f_{m} on [{lo}, {hi}] (signs {slo}/{shi})"
            )));
        }
        while hi - lo > 1e-13 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break; // f64 resolution reached
            }
            let smid = p.sign_at(mid);
            if smid == 0 {
                lo = mid;
                hi = mid;
                break;
            }
            if smid == slo {
                lo = mid;
                slo = smid;
            } else {
                hi = mid;
            }
        }
        let mut root = 0.5 * (lo + hi);
        let mut fval = p.eval_exact(root).abs();
        // One guarded Newton polish: accept only if it stays in the bracket
        // and strictly reduces the exact residual.
        let d = dp.eval_f64(root);
        if d != 0.0 {
            let cand = root - p.eval_exact(root).to_f64().unwrap_or(0.0) / d;
            if cand > pair[0] && cand < pair[1] {
                let fcand = p.eval_exact(cand).abs();
                if fcand < fval {
                    root = cand;
                    fval = fcand;
                }
            }
        }
        residual_bound = residual_bound.max(fval.to_f64().unwrap_or(f64::INFINITY));
        roots.push(root);
    }
    Ok(RootList { roots, residual_bound })
}

/// Scalar kinds the value-level recurrences run over.
pub trait Scalar:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self>
{
    fn from_f64(x: f64) -> Self;
}

impl Scalar for f64 {
    fn from_f64(x: f64) -> Self {
        x
    }
}

impl Scalar for Complex64 {
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
}

fn neg_value<T: Scalar>(v: T) -> T {
    T::from_f64(0.0) - v
}

/// `f_m(s)` by running the recurrence on values (no polynomial expansion).
pub fn f_value<T: Scalar>(m: i64, s: T) -> T {
    if m < 0 {
        return f_value(-m - 1, s);
    }
    let step = s + T::from_f64(2.0);
    let mut prev = T::from_f64(1.0);
    if m == 0 {
        return prev;
    }
    let mut cur = s + T::from_f64(1.0);
    for _ in 1..m {
        let next = step * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `g_m(s)` by running the recurrence on values.
pub fn g_value<T: Scalar>(m: i64, s: T) -> T {
    if m == -1 {
        return T::from_f64(0.0);
    }
    if m < -1 {
        return neg_value(g_value(-m - 2, s));
    }
    let step = s + T::from_f64(2.0);
    let mut prev = T::from_f64(1.0);
    if m == 0 {
        return prev;
    }
    let mut cur = step;
    for _ in 1..m {
        let next = step * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `tau_k(tau)` by running the recurrence on values; `tau_{-k} = -tau_k`.
pub fn tau_value<T: Scalar>(k: i64, tau: T) -> T {
    if k < 0 {
        return neg_value(tau_value(-k, tau));
    }
    let mut prev = T::from_f64(0.0);
    if k == 0 {
        return prev;
    }
    let mut cur = T::from_f64(1.0);
    for _ in 1..k {
        let next = tau * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}
