//! Numerical continuation of the real representation branch and the
//! extension-locus point cloud it projects to.
//!
//! For `m >= 1` (elliptic case) the branch lives over `s` in `(0, s_0)` with
//! `t` on the unit circle; for `m <= -2` (hyperbolic case) it lives over
//! `(r, 0)` with `t` real and greater than 1, where `r` is the largest root
//! of `f_m`. Tracing starts at the `s -> 0` end, whose limit is pinned by a
//! root of the Alexander polynomial, and continues toward the singular end
//! (`t -> 1` elliptic, `t -> infinity` hyperbolic) by certified bracketing
//! plus Newton refinement at every sample.
//!
//! The locus coordinates are `(arg t / 2pi, arg B / pi)` on the elliptic
//! side and `(ln t / 2, ln B)` on the hyperbolic side, with `arg B`
//! unwrapped along the branch from its anchor `B -> 1` at `s -> 0`.

use num_complex::Complex64;

use crate::rep::holonomy_b;
use crate::riley::{
    alexander_roots, branch_bracket, branch_s0, riley_eval, BranchCase, KnotParams,
};
use crate::poly::f_roots;
use crate::{Error, Result};

use std::f64::consts::PI;

/// One traced point of the real branch.
#[derive(Clone, Copy, Debug)]
pub struct BranchSample {
    /// Parameter of the branch.
    pub s: f64,
    /// Trace coordinate `T = t + 1/t`.
    pub cap_t: f64,
    /// Meridian eigenvalue squared: `e^{i theta}` (elliptic) or a real
    /// number `> 1` (hyperbolic).
    pub t: Complex64,
    /// Longitude holonomy entry.
    pub b: Complex64,
    /// Locus abscissa: `theta / 2pi` or `ln(t) / 2`.
    pub x: f64,
    /// Locus ordinate: `arg(B) / pi` (unwrapped) or `ln B`.
    pub y: f64,
    /// `theta = arg t` (elliptic) or `ln t` (hyperbolic).
    pub phase_t: f64,
    /// Unwrapped `arg B` (elliptic) or `ln B` (hyperbolic).
    pub phase_b: f64,
}

/// Winding data of an elliptic branch: the unwrapped `arg B` tends to
/// `(2d - 1) pi` at the singular end.
#[derive(Clone, Copy, Debug)]
pub struct Winding {
    pub d: i64,
    /// Distance of the extrapolated phase limit from `(2d - 1) pi`.
    pub residual: f64,
    /// The extrapolated limit of the unwrapped `arg B`.
    pub phase_limit: f64,
}

/// A fully traced real branch, samples in ascending `s`.
#[derive(Clone, Debug)]
pub struct Branch {
    pub params: KnotParams,
    pub case: BranchCase,
    pub samples: Vec<BranchSample>,
    /// Parameter of the singular end: `s_0` (elliptic) or `r` (hyperbolic).
    pub s_singular: f64,
    /// Alexander-root prediction of `T` at the `s -> 0` end.
    pub seed_u: f64,
    /// Winding integer (elliptic branches only).
    pub winding: Option<Winding>,
    /// Non-fatal irregularities observed while tracing.
    pub warnings: Vec<String>,
}

/// The natural branch case of a parameter pair: elliptic for `m >= 1`,
/// hyperbolic for `m <= -2` (with `n >= 1` in both).
pub fn natural_case(k: KnotParams) -> Result<BranchCase> {
    if k.n < 0 {
        return Err(Error::OutOfCase(format!(
            "real branch tracing needs n >= 1; trace the mirror {} instead",
            k.mirror()
        )));
    }
    Ok(if k.m >= 1 { BranchCase::Elliptic } else { BranchCase::Hyperbolic })
}

/// Solve the branch equation in `T` over a certified bracket.
///
/// The bracket is first cut into 32 cells to count sign changes; with more
/// than one candidate root the cell nearest `reference` wins and a warning
/// is recorded. Inside the chosen cell, Illinois-damped regula falsi runs on
/// the recurrence evaluator. Everything stays derivative-free on purpose:
/// at the hyperbolic tail (`f -> 0`, `T ~ 1/f`) the expanded coefficient
/// form of the polynomial — values and derivatives alike — cancels
/// catastrophically, while the recurrence form stays conditioned, so sign
/// tests against it are the only trustworthy signal there.
fn solve_in_bracket(
    k: KnotParams,
    s: f64,
    lo: f64,
    hi: f64,
    reference: f64,
    warnings: &mut Vec<String>,
) -> Result<f64> {
    const CELLS: usize = 32;
    let mut candidates: Vec<(f64, f64)> = Vec::new();
    let mut prev_x = lo;
    let mut prev_v = riley_eval(k, s, lo);
    for i in 1..=CELLS {
        let x = lo + (hi - lo) * i as f64 / CELLS as f64;
        let v = riley_eval(k, s, x);
        if prev_v == 0.0 {
            candidates.push((prev_x, prev_x));
        } else if v != 0.0 && v.signum() != prev_v.signum() {
            candidates.push((prev_x, x));
        }
        prev_x = x;
        prev_v = v;
    }
    if riley_eval(k, s, hi) == 0.0 {
        candidates.push((hi, hi));
    }
    let (mut a, mut b) = match candidates.len() {
        0 => (lo, hi), // interior sign structure invisible at this cut; use the certified ends
        1 => candidates[0],
        _ => {
            warnings.push(format!(
                "{} candidate roots in bracket at s = {s:.9}; continuing with the one \
                 nearest the previous sample",
                candidates.len()
            ));
            *candidates
                .iter()
                .min_by(|p, q| {
                    let dp = (0.5 * (p.0 + p.1) - reference).abs();
                    let dq = (0.5 * (q.0 + q.1) - reference).abs();
                    dp.partial_cmp(&dq).unwrap()
                })
                .unwrap()
        }
    };
    if a == b {
        return Ok(a);
    }
    let mut va = riley_eval(k, s, a);
    let mut vb = riley_eval(k, s, b);
    if va == 0.0 {
        return Ok(a);
    }
    if vb == 0.0 {
        return Ok(b);
    }
    if va.signum() == vb.signum() {
        return Err(Error::ContinuationStall(format!(
            "sign change lost inside bracket [{a:.9}, {b:.9}] at s = {s:.9}"
        )));
    }
    let mut side = 0i8;
    for _ in 0..200 {
        // Run the interval down to a few ulps: at the far hyperbolic tail the
        // root sits at T ~ 1e5..1e6 and downstream matrix residuals inherit
        // the absolute root error, so a merely-relative 1e-13 stop is not
        // enough there.
        if b - a < 4.0 * f64::EPSILON * b.abs().max(1.0) {
            break;
        }
        let mut x = (a * vb - b * va) / (vb - va);
        if !(x > a && x < b) {
            x = 0.5 * (a + b);
        }
        let v = riley_eval(k, s, x);
        if v == 0.0 {
            return Ok(x);
        }
        if v.signum() == va.signum() {
            a = x;
            va = v;
            if side == -1 {
                vb *= 0.5;
            }
            side = -1;
        } else {
            b = x;
            vb = v;
            if side == 1 {
                va *= 0.5;
            }
            side = 1;
        }
    }
    Ok(0.5 * (a + b))
}

/// Raw traced point before phases are assigned.
#[derive(Clone, Copy)]
struct RawPoint {
    s: f64,
    cap_t: f64,
}

fn recover_t(case: BranchCase, cap_t: f64) -> Complex64 {
    match case {
        BranchCase::Elliptic => {
            let theta = (cap_t / 2.0).clamp(-1.0, 1.0).acos();
            Complex64::from_polar(1.0, theta)
        }
        BranchCase::Hyperbolic => {
            let t = (cap_t + (cap_t * cap_t - 4.0).max(0.0).sqrt()) / 2.0;
            Complex64::new(t, 0.0)
        }
    }
}

/// Phase increment between two consecutive raw samples; must stay below
/// `pi/4` for the unwrap to be trustworthy.
fn pair_phase_delta(case: BranchCase, b0: Complex64, b1: Complex64) -> Result<f64> {
    match case {
        BranchCase::Elliptic => {
            let mut d = b1.arg() - b0.arg();
            while d > PI {
                d -= 2.0 * PI;
            }
            while d <= -PI {
                d += 2.0 * PI;
            }
            Ok(d)
        }
        BranchCase::Hyperbolic => {
            if b0.re <= 0.0 || b1.re <= 0.0 {
                return Err(Error::UnwrapViolation(
                    "hyperbolic holonomy entry crossed zero".into(),
                ));
            }
            Ok(b1.re.ln() - b0.re.ln())
        }
    }
}

/// Trace the real branch of `k` with (at least) `samples` points.
///
/// `samples` must be 64 or more. The base grid is cosine-graded over the
/// elliptic domain (relative standoff `1e-6` at both open ends) and
/// geometrically graded from the singular end over the hyperbolic domain
/// (standoff `1e-5` there, `1e-6` at the `s -> 0` end: the trace coordinate
/// blows up like `1/f` at the singular end, and a deeper tip would push the
/// absolute rounding error of downstream matrix products above `1e-8`);
/// midpoints are inserted adaptively wherever a phase step would reach
/// `pi/4`, so the sample count can exceed the request when the base grid is
/// too coarse (it does not for 512-point traces of the canonical cases).
pub fn trace_branch(k: KnotParams, case: BranchCase, samples: usize) -> Result<Branch> {
    if samples < 64 {
        return Err(Error::OutOfRange(format!(
            "need at least 64 samples for a trustworthy unwrap, got {samples}"
        )));
    }
    let natural = natural_case(k)?;
    if case != natural {
        return Err(Error::OutOfCase(format!(
            "the real branch of {k} is {natural}, not {case}"
        )));
    }

    // Grid in trace order: from the s -> 0 end toward the singular end.
    let (grid, s_singular, domain_len) = match case {
        BranchCase::Elliptic => {
            let s0 = branch_s0(k)?;
            let delta = 1e-6 * s0;
            let (a, b) = (delta, s0 - delta);
            let grid: Vec<f64> = (0..samples)
                .map(|i| {
                    let frac = (1.0 - (PI * i as f64 / (samples - 1) as f64).cos()) / 2.0;
                    a + (b - a) * frac
                })
                .collect();
            (grid, s0, s0)
        }
        BranchCase::Hyperbolic => {
            let r = f_roots(-k.m - 1)?.largest();
            let delta_r = 1e-5 * r.abs();
            let delta_0 = 1e-6 * r.abs();
            let ratio =
                ((r.abs() - delta_0) / delta_r).powf(1.0 / (samples - 1) as f64);
            // i = samples-1 is s = -delta_0 (near 0); i = 0 is s = r + delta_r.
            let grid: Vec<f64> =
                (0..samples).rev().map(|i| r + delta_r * ratio.powi(i as i32)).collect();
            (grid, r, r.abs())
        }
    };

    // Seed from the Alexander polynomial.
    let roots = alexander_roots(k)?;
    let candidates: Vec<f64> = match case {
        BranchCase::Elliptic if k.n == 1 => {
            roots.unit_angles.iter().map(|&th| 2.0 * th.cos()).collect()
        }
        BranchCase::Elliptic => {
            let window = (PI / (2 * k.n + 1) as f64, 3.0 * PI / (2 * k.n + 1) as f64);
            roots
                .unit_angles
                .iter()
                .filter(|&&th| th > window.0 && th < window.1)
                .map(|&th| 2.0 * th.cos())
                .collect()
        }
        BranchCase::Hyperbolic => {
            roots.positive_real.iter().map(|&xi| xi + 1.0 / xi).collect()
        }
    };
    if candidates.is_empty() {
        return Err(Error::SeedFailure(format!(
            "no Alexander root of the required type seeds the {case:?} branch of {k}"
        )));
    }

    let mut warnings = Vec::new();

    let first = branch_bracket(k, grid[0])?;
    let t1 = solve_in_bracket(
        k,
        grid[0],
        first.cap_t_lo,
        first.cap_t_hi,
        candidates[0],
        &mut warnings,
    )?;
    let seed_u = candidates
        .iter()
        .copied()
        .min_by(|a, b| (a - t1).abs().partial_cmp(&(b - t1).abs()).unwrap())
        .unwrap();
    if (t1 - seed_u).abs() > 1e-3 * seed_u.abs().max(1.0) {
        return Err(Error::SeedFailure(format!(
            "first branch sample T = {t1:.9} does not match any Alexander seed \
             (nearest {seed_u:.9}) for {k}"
        )));
    }

    // Initial pass in trace order.
    let mut raw: Vec<RawPoint> = Vec::with_capacity(samples);
    raw.push(RawPoint { s: grid[0], cap_t: t1 });
    for &s in &grid[1..] {
        let br = branch_bracket(k, s)?;
        let reference = raw.last().unwrap().cap_t;
        let t = solve_in_bracket(k, s, br.cap_t_lo, br.cap_t_hi, reference, &mut warnings)?;
        raw.push(RawPoint { s, cap_t: t });
    }

    // Adaptive refinement: insert midpoints until every phase step is
    // below pi/4.
    let b_of = |p: &RawPoint| holonomy_b(k.m, k.n, p.s.into(), recover_t(case, p.cap_t));
    let min_ds = 1e-9 * domain_len;
    let mut i = 0;
    let mut inserted = 0usize;
    while i + 1 < raw.len() {
        let b0 = b_of(&raw[i])?;
        let b1 = b_of(&raw[i + 1])?;
        let delta = pair_phase_delta(case, b0, b1)?;
        if delta.abs() < PI / 4.0 {
            i += 1;
            continue;
        }
        if (raw[i + 1].s - raw[i].s).abs() < min_ds {
            return Err(Error::UnwrapViolation(format!(
                "phase step {delta:.3} at s = {:.9} cannot be refined below ds = {min_ds:.3e}",
                raw[i].s
            )));
        }
        inserted += 1;
        if inserted > 100_000 {
            return Err(Error::UnwrapViolation(
                "adaptive refinement exceeded 100000 insertions".into(),
            ));
        }
        let s_mid = 0.5 * (raw[i].s + raw[i + 1].s);
        let br = branch_bracket(k, s_mid)?;
        let reference = 0.5 * (raw[i].cap_t + raw[i + 1].cap_t);
        let t_mid =
            solve_in_bracket(k, s_mid, br.cap_t_lo, br.cap_t_hi, reference, &mut warnings)?;
        raw.insert(i + 1, RawPoint { s: s_mid, cap_t: t_mid });
    }

    // Phases, anchored at the s -> 0 end where B -> 1.
    let mut out: Vec<BranchSample> = Vec::with_capacity(raw.len());
    let mut prev_b: Option<Complex64> = None;
    let mut phase_b = 0.0;
    for p in &raw {
        let t = recover_t(case, p.cap_t);
        let b = b_of(p)?;
        phase_b = match prev_b {
            None => match case {
                BranchCase::Elliptic => b.arg(),
                BranchCase::Hyperbolic => b.re.ln(),
            },
            Some(b0) => phase_b + pair_phase_delta(case, b0, b)?,
        };
        prev_b = Some(b);
        let phase_t = match case {
            BranchCase::Elliptic => t.arg(),
            BranchCase::Hyperbolic => t.re.ln(),
        };
        let (x, y) = match case {
            BranchCase::Elliptic => (phase_t / (2.0 * PI), phase_b / PI),
            BranchCase::Hyperbolic => (phase_t / 2.0, phase_b),
        };
        out.push(BranchSample { s: p.s, cap_t: p.cap_t, t, b, x, y, phase_t, phase_b });
    }

    // Store ascending in s (hyperbolic traces run downward).
    if case == BranchCase::Hyperbolic {
        out.reverse();
    }

    let mut branch = Branch {
        params: k,
        case,
        samples: out,
        s_singular,
        seed_u,
        winding: None,
        warnings,
    };
    if case == BranchCase::Elliptic {
        match winding_integer(&branch) {
            Ok(w) => branch.winding = Some(w),
            Err(e) => branch.warnings.push(format!("winding not certified: {e}")),
        }
    }
    Ok(branch)
}

/// Linear extrapolation of a sample functional to the elliptic singular end
/// `theta -> 0`, using the two samples nearest `s_0`.
pub fn extrapolate_elliptic_limit(
    branch: &Branch,
    f: impl Fn(&BranchSample) -> f64,
) -> Result<f64> {
    if branch.case != BranchCase::Elliptic {
        return Err(Error::OutOfCase("theta -> 0 extrapolation is elliptic-only".into()));
    }
    let n = branch.samples.len();
    if n < 2 {
        return Err(Error::InsufficientTail("need at least two samples".into()));
    }
    let (a, b) = (&branch.samples[n - 2], &branch.samples[n - 1]);
    let (ta, tb) = (a.phase_t, b.phase_t);
    if (ta - tb).abs() == 0.0 {
        return Err(Error::InsufficientTail("degenerate theta spacing at the tail".into()));
    }
    Ok(f(b) - tb * (f(a) - f(b)) / (ta - tb))
}

/// Winding integer of an elliptic branch: the extrapolated limit of the
/// unwrapped `arg B` must sit within `0.2` of an odd multiple `(2d - 1) pi`
/// with `d >= 1`.
pub fn winding_integer(branch: &Branch) -> Result<Winding> {
    let phase_limit = extrapolate_elliptic_limit(branch, |p| p.phase_b)?;
    let d = (phase_limit / (2.0 * PI) + 0.5).round() as i64;
    let residual = (phase_limit - (2 * d - 1) as f64 * PI).abs();
    if residual > 0.2 || d < 1 {
        return Err(Error::NotConverged(format!(
            "unwrapped phase limit {phase_limit:.6} is not near an odd multiple of pi \
             (d = {d}, residual {residual:.3})"
        )));
    }
    Ok(Winding { d, residual, phase_limit })
}

/// A point of the extension locus, tagged by the symmetry component it
/// belongs to: `(k, sign)` maps a base point `(x, y)` to
/// `(sign * x + k, sign * y)`.
#[derive(Clone, Copy, Debug)]
pub struct LocusPoint {
    pub x: f64,
    pub y: f64,
    pub component: (i64, i64),
}

/// The base locus arc of a traced branch.
pub fn locus_points(branch: &Branch) -> Vec<LocusPoint> {
    branch
        .samples
        .iter()
        .map(|p| LocusPoint { x: p.x, y: p.y, component: (0, 1) })
        .collect()
}

/// Dehn-surgery slope at a sample: `-2 phase_B / phase_t`.
pub fn slope_fn(sample: &BranchSample) -> Result<f64> {
    if sample.phase_t == 0.0 {
        return Err(Error::DivisionByZero("slope at phase_t = 0".into()));
    }
    Ok(-2.0 * sample.phase_b / sample.phase_t)
}

/// Axis-aligned viewing window of the locus plane.
#[derive(Clone, Copy, Debug)]
pub struct Window {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Window {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        x >= self.x_min && x <= self.x_max && y >= self.y_min && y <= self.y_max
    }
}

/// All images of the base arc under the locus symmetry group
/// `(x, y) -> (x + k, y)` and `(x, y) -> (-x + k, -y)`, `k` integer, that
/// put at least one point inside `window`. The base arc itself is the
/// `(0, 1)` image (when visible).
pub fn locus_symmetries(points: &[LocusPoint], window: &Window) -> Vec<Vec<LocusPoint>> {
    if points.is_empty() {
        return vec![];
    }
    let mut out = Vec::new();
    for sign in [1i64, -1] {
        let xs: Vec<f64> = points.iter().map(|p| sign as f64 * p.x).collect();
        let (arc_min, arc_max) =
            xs.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &x| {
                (lo.min(x), hi.max(x))
            });
        let k_lo = (window.x_min - arc_max).floor() as i64 - 1;
        let k_hi = (window.x_max - arc_min).ceil() as i64 + 1;
        for k in k_lo..=k_hi {
            let image: Vec<LocusPoint> = points
                .iter()
                .map(|p| LocusPoint {
                    x: sign as f64 * p.x + k as f64,
                    y: sign as f64 * p.y,
                    component: (k, sign),
                })
                .collect();
            if image.iter().any(|p| window.contains(p.x, p.y)) {
                out.push(image);
            }
        }
    }
    out
}

/// Least-squares estimate of the locus asymptote at the singular end of a
/// hyperbolic branch (elliptic branches have none — their locus arcs end at
/// finite points).
#[derive(Clone, Copy, Debug)]
pub struct AsymptoteEstimate {
    /// Limiting Dehn-surgery slope, `-dy/dx` of the fitted line.
    pub slope: f64,
    /// Maximum absolute deviation of the tail from the fitted line.
    pub fit_residual: f64,
    /// Abscissa of the farthest tail sample used in the fit.
    pub x_far: f64,
}

/// Fit the outer 10% of samples (nearest the singular end) of a hyperbolic
/// branch with a line in the locus plane. Needs at least 8 tail samples.
pub fn estimate_asymptotes(branch: &Branch) -> Result<Vec<AsymptoteEstimate>> {
    if branch.case == BranchCase::Elliptic {
        return Ok(vec![]);
    }
    let n = branch.samples.len();
    let tail = n / 10;
    if tail < 8 {
        return Err(Error::InsufficientTail(format!(
            "asymptote fit wants at least 8 tail samples, the outer 10% of {n} gives {tail}"
        )));
    }
    // Ascending s puts the singular end (s -> r) first.
    let pts: Vec<(f64, f64)> = branch.samples[..tail].iter().map(|p| (p.x, p.y)).collect();
    let len = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    let det = len * sxx - sx * sx;
    if det == 0.0 {
        return Err(Error::InsufficientTail("degenerate abscissas in tail fit".into()));
    }
    let b = (len * sxy - sx * sy) / det;
    let a = (sy - b * sx) / len;
    let fit_residual = pts
        .iter()
        .map(|p| (p.1 - (a + b * p.0)).abs())
        .fold(0.0, f64::max);
    let x_far = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
    Ok(vec![AsymptoteEstimate { slope: -b, fit_residual, x_far }])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: i64, n: i64) -> KnotParams {
        KnotParams::new(m, n).unwrap()
    }

    /// Backward error of the solved root, measured relative to `T`: how far
    /// (in relative terms) `T` would have to move to make the branch
    /// equation vanish exactly. The value comes from the recurrence
    /// evaluator — the expanded coefficient form cancels catastrophically at
    /// the hyperbolic tail, where `f -> 0` and `T ~ 1/f` — while the
    /// expanded derivative only sets the scale, so its tail noise is
    /// harmless.
    fn residual_at(kk: KnotParams, p: &BranchSample) -> f64 {
        let v = riley_eval(kk, p.s, p.cap_t).abs();
        let phi = crate::riley::riley_poly(kk);
        let scale = (phi.eval_dt(p.s, p.cap_t) * p.cap_t).abs().max(1.0);
        v / scale
    }

    #[test]
    fn validates_sample_count_and_case() {
        assert!(matches!(
            trace_branch(k(1, 1), BranchCase::Elliptic, 10),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            trace_branch(k(1, 1), BranchCase::Hyperbolic, 64),
            Err(Error::OutOfCase(_))
        ));
        assert!(matches!(
            trace_branch(k(1, -2), BranchCase::Elliptic, 64),
            Err(Error::OutOfCase(_))
        ));
        assert_eq!(natural_case(k(-2, 2)).unwrap(), BranchCase::Hyperbolic);
    }

    #[test]
    fn elliptic_trace_stays_on_variety_and_unit_circle() {
        let br = trace_branch(k(1, 1), BranchCase::Elliptic, 64).unwrap();
        assert_eq!(br.samples.len(), 64);
        for p in &br.samples {
            assert!(residual_at(k(1, 1), p) < 1e-10, "residual at s = {}", p.s);
            assert!((p.t.norm() - 1.0).abs() < 1e-12);
            assert!((p.b.norm() - 1.0).abs() < 1e-9, "|B| = {} at s = {}", p.b.norm(), p.s);
        }
        // Seed matches the unique unit Alexander root u = 3/2.
        assert!((br.seed_u - 1.5).abs() < 1e-9);
        assert!((br.samples[0].cap_t - 1.5).abs() < 1e-3);
        // Anchor: B -> 1 at s -> 0.
        assert!(br.samples[0].phase_b.abs() < 1e-3);
    }

    #[test]
    fn elliptic_winding_of_smallest_case_is_one() {
        let br = trace_branch(k(1, 1), BranchCase::Elliptic, 128).unwrap();
        let w = br.winding.expect("elliptic branches carry a winding");
        assert_eq!(w.d, 1);
        assert!(w.residual < 0.05, "residual {}", w.residual);
        // Locus arc ends near (0, 1): theta -> 0, arg B -> pi.
        let last = br.samples.last().unwrap();
        assert!(last.x < 1e-2);
        assert!((last.y - 1.0).abs() < 0.05);
    }

    #[test]
    fn elliptic_winding_is_two_when_seed_sits_past_the_first_sheet() {
        let br = trace_branch(k(2, 2), BranchCase::Elliptic, 256).unwrap();
        let w = br.winding.unwrap();
        assert_eq!(w.d, 2, "phase limit {}", w.phase_limit);
        let last = br.samples.last().unwrap();
        assert!(last.x < 1e-2);
        assert!((last.y - 3.0).abs() < 0.05, "endpoint y = {}", last.y);
    }

    #[test]
    fn hyperbolic_trace_hits_both_asymptotic_regimes() {
        let kk = k(-2, 2);
        let br = trace_branch(kk, BranchCase::Hyperbolic, 512).unwrap();
        assert_eq!(br.samples.len(), 512, "512-point grid must not need refinement");
        for p in &br.samples {
            assert!(residual_at(kk, p) < 1e-9);
            assert!(p.t.im == 0.0 && p.t.re > 1.0);
            assert!(p.b.im == 0.0 && p.b.re > 0.0);
        }
        // Ascending s: first sample is the singular (t -> infinity) end.
        let far = &br.samples[0];
        let near = br.samples.last().unwrap();
        let t2n = far.t.re.powi(4);
        assert!((far.b.re * t2n - 1.0).abs() < 1e-4, "B t^4 = {}", far.b.re * t2n);
        assert!((near.b.re - 1.0).abs() < 1e-4, "B = {}", near.b.re);
        // Slope runs from ~0 at the seed end toward 4n = 8 at the far end.
        assert!(slope_fn(near).unwrap().abs() < 1e-3);
        assert!((slope_fn(far).unwrap() - 8.0).abs() < 1e-3);
        // Seed is the golden-ratio-square trace.
        assert!((br.seed_u - (3.0 + 5.0_f64.sqrt()) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn coarse_hyperbolic_grid_refines_until_phases_are_tame() {
        // n = 3 makes the total ln B span ~6 ln(T_tip): 64 geometric base
        // points leave phase steps well past pi/4, forcing insertions.
        let br = trace_branch(k(-2, 3), BranchCase::Hyperbolic, 64).unwrap();
        assert!(br.samples.len() > 64, "coarse grid must trigger refinement");
        for w in br.samples.windows(2) {
            assert!((w[1].phase_b - w[0].phase_b).abs() < PI / 4.0 + 1e-12);
        }
    }

    #[test]
    fn elliptic_phase_steps_are_tame() {
        let br = trace_branch(k(2, 2), BranchCase::Elliptic, 256).unwrap();
        for w in br.samples.windows(2) {
            assert!((w[1].phase_b - w[0].phase_b).abs() < PI / 4.0 + 1e-12);
        }
    }

    #[test]
    fn asymptote_fit_recovers_the_far_slope() {
        let br = trace_branch(k(-2, 2), BranchCase::Hyperbolic, 512).unwrap();
        let asym = estimate_asymptotes(&br).unwrap();
        assert_eq!(asym.len(), 1);
        assert!((asym[0].slope - 8.0).abs() < 1e-3, "slope {}", asym[0].slope);
        assert!(asym[0].fit_residual < 0.05 * asym[0].slope.abs());
        let elliptic = trace_branch(k(1, 1), BranchCase::Elliptic, 64).unwrap();
        assert!(estimate_asymptotes(&elliptic).unwrap().is_empty());
    }

    #[test]
    fn asymptote_fit_needs_a_tail() {
        let br = trace_branch(k(-2, 2), BranchCase::Hyperbolic, 64).unwrap();
        if br.samples.len() < 80 {
            assert!(matches!(estimate_asymptotes(&br), Err(Error::InsufficientTail(_))));
        }
    }

    #[test]
    fn slope_rejects_zero_phase() {
        let p = BranchSample {
            s: 0.0,
            cap_t: 2.0,
            t: Complex64::new(1.0, 0.0),
            b: Complex64::new(1.0, 0.0),
            x: 0.0,
            y: 0.0,
            phase_t: 0.0,
            phase_b: 0.0,
        };
        assert!(matches!(slope_fn(&p), Err(Error::DivisionByZero(_))));
    }

    #[test]
    fn symmetry_images_tile_the_window() {
        let base: Vec<LocusPoint> = vec![
            LocusPoint { x: 0.1, y: 1.0, component: (0, 1) },
            LocusPoint { x: 0.2, y: 2.0, component: (0, 1) },
        ];
        let w = Window { x_min: -2.0, x_max: 2.0, y_min: -5.0, y_max: 5.0 };
        let images = locus_symmetries(&base, &w);
        // Translates x + k with x in [0.1, 0.2] meet [-2, 2] for k in
        // {-2..1}; the flipped copies -x + k for k in {-1..2}.
        assert_eq!(images.len(), 8);
        assert!(images.iter().any(|img| img[0].component == (0, 1)));
        assert!(images.iter().any(|img| img[0].component == (0, -1)));
        for img in &images {
            assert!(img.iter().any(|p| w.contains(p.x, p.y)));
        }
        // A window above y = 0 excludes every flipped copy (their y < 0).
        let upper = Window { x_min: -2.0, x_max: 2.0, y_min: 0.5, y_max: 5.0 };
        assert_eq!(locus_symmetries(&base, &upper).len(), 4);
    }

    #[test]
    fn base_arc_points_carry_identity_component() {
        let br = trace_branch(k(1, 1), BranchCase::Elliptic, 64).unwrap();
        let pts = locus_points(&br);
        assert_eq!(pts.len(), br.samples.len());
        assert!(pts.iter().all(|p| p.component == (0, 1)));
    }

    #[test]
    fn traced_t_matches_bracket_case_across_knots() {
        for (m, n) in [(1, 2), (3, 1), (-3, 2), (-2, 3)] {
            let kk = k(m, n);
            let case = natural_case(kk).unwrap();
            let br = trace_branch(kk, case, 96).unwrap();
            assert!(br.samples.len() >= 96);
            for p in &br.samples {
                match case {
                    BranchCase::Elliptic => assert!((p.t.norm() - 1.0).abs() < 1e-12),
                    BranchCase::Hyperbolic => assert!(p.t.im == 0.0 && p.t.re > 1.0),
                }
                assert!(
                    residual_at(kk, p) < 1e-9,
                    "(m, n) = ({m}, {n}), s = {}: backward error {}",
                    p.s,
                    residual_at(kk, p)
                );
            }
        }
    }
}
