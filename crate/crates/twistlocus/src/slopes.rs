//! Left-orderable surgery windows, two-bridge continued fractions, and
//! boundary slopes for double twist knots.
//!
//! The sign pattern of the twist parameters `(m, n)` splits the family into
//! four cases, and each case carries a certified window of surgery slopes
//! whose filled manifolds have left-orderable fundamental group. The window
//! endpoints are boundary slopes: the finite nonzero ones come from the
//! Seifert surface via the even continued fraction of the two-bridge
//! fraction, which this module expands and resolves independently of the
//! branch tracer.
//!
//! ```
//! use twistlocus::KnotParams;
//! use twistlocus::slopes::{boundary_slope_seifert, orderable_interval};
//!
//! let k = KnotParams::new(-2, 2).unwrap();
//! assert_eq!(orderable_interval(k).to_string(), "[0, 8)");
//! assert_eq!(boundary_slope_seifert(k).unwrap().slope, -8);
//! ```

use std::fmt;

use num_rational::Ratio;

use crate::riley::KnotParams;
use crate::{Error, Result};

/// How a numeric claim was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Established by proof; holds exactly.
    Theorem,
    /// Measured from a traced branch; holds to the stated tolerance.
    Observed,
    /// Expected from the observed pattern but not proved.
    Conjectural,
}

impl fmt::Display for Provenance {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Theorem => write!(w, "theorem"),
            Provenance::Observed => write!(w, "observed"),
            Provenance::Conjectural => write!(w, "conjectural"),
        }
    }
}

/// An interval of surgery slopes, with independent closure flags at each
/// end. Unbounded ends use `f64::INFINITY` / `f64::NEG_INFINITY` and are
/// always open.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlopeInterval {
    pub low: f64,
    pub high: f64,
    pub low_closed: bool,
    pub high_closed: bool,
    pub provenance: Provenance,
}

impl SlopeInterval {
    /// Whether `slope` lies inside the interval, honoring closure flags.
    pub fn contains(&self, slope: f64) -> bool {
        let above = if self.low_closed { slope >= self.low } else { slope > self.low };
        let below = if self.high_closed { slope <= self.high } else { slope < self.high };
        above && below
    }

    /// The interval of the mirror knot: slopes negate, so the interval
    /// reverses, each endpoint keeping its own closure flag.
    pub fn mirrored(&self) -> SlopeInterval {
        // Avoid -0.0: it compares equal to 0.0 but displays as "-0".
        let neg = |x: f64| if x == 0.0 { 0.0 } else { -x };
        SlopeInterval {
            low: neg(self.high),
            high: neg(self.low),
            low_closed: self.high_closed,
            high_closed: self.low_closed,
            provenance: self.provenance,
        }
    }
}

impl fmt::Display for SlopeInterval {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = |x: f64, neg: bool| {
            if x.is_infinite() {
                if neg { "-inf".to_string() } else { "inf".to_string() }
            } else {
                format!("{x}")
            }
        };
        write!(
            w,
            "{}{}, {}{}",
            if self.low_closed { '[' } else { '(' },
            open(self.low, true),
            open(self.high, false),
            if self.high_closed { ']' } else { ')' },
        )
    }
}

/// Certified window of left-orderable surgery slopes for `J(2m+1, 2n)`,
/// by twist-sign case:
///
/// * `m <= -2`, `n >= 1`: `[0, 4n)`
/// * `m >= 1`, `n <= -1`: `(4n, 0]`
/// * `m >= 1`, `n >= 1`: `(-inf, 1)`
/// * `m <= -2`, `n <= -1`: `(-1, inf)`
///
/// Mirroring `(m, n) -> (-m-1, -n)` negates slopes, and the table is
/// antisymmetric under it, case by case.
pub fn orderable_interval(k: KnotParams) -> SlopeInterval {
    let (low, high, low_closed, high_closed) = match (k.m >= 1, k.n >= 1) {
        (false, true) => (0.0, (4 * k.n) as f64, true, false),
        (true, false) => ((4 * k.n) as f64, 0.0, false, true),
        (true, true) => (f64::NEG_INFINITY, 1.0, false, false),
        (false, false) => (-1.0, f64::INFINITY, false, false),
    };
    SlopeInterval { low, high, low_closed, high_closed, provenance: Provenance::Theorem }
}

/// The two-bridge fraction of `J(2m+1, 2n)`:
/// `2n / (2n(2m+1) + 1)`, e.g. `-4/11` for `(m, n) = (-2, 2)`.
/// Mirroring negates it.
pub fn two_bridge_fraction(k: KnotParams) -> Ratio<i64> {
    Ratio::new(2 * k.n, 2 * k.n * (2 * k.m + 1) + 1)
}

/// Entry convention of a stored continued fraction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CfConvention {
    /// The two-entry expansion in the twist parameters themselves.
    Standard,
    /// The expansion with every entry even, which reads off the Seifert
    /// surface.
    Even,
}

/// A continued fraction `[x_1, x_2, ...]` expanding a two-bridge fraction as
/// `1/(a_1 + 1/(a_2 + ...))` with `a_i = x_i` for odd `i` and `a_i = -x_i`
/// for even `i` (the alternating-sign reading used for two-bridge surface
/// counts).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub entries: Vec<i64>,
    pub convention: CfConvention,
}

impl ContinuedFraction {
    /// `(positive, negative)` entry counts. No entry is zero in either
    /// convention produced here.
    pub fn counts(&self) -> (usize, usize) {
        let pos = self.entries.iter().filter(|&&x| x > 0).count();
        (pos, self.entries.len() - pos)
    }

    /// Resolve the fraction back to a rational number.
    pub fn value(&self) -> Ratio<i64> {
        let mut acc = Ratio::new(0, 1);
        for (i, &x) in self.entries.iter().enumerate().rev() {
            let a = if i % 2 == 0 { x } else { -x };
            acc = Ratio::from_integer(a) + acc;
            acc = Ratio::new(1, 1) / acc;
        }
        acc
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, w: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(w, "[")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(w, ", ")?;
            }
            write!(w, "{x}")?;
        }
        write!(w, "]")
    }
}

fn require_hyperbolic_window(k: KnotParams, what: &str) -> Result<()> {
    if k.m <= -2 && k.n >= 1 {
        Ok(())
    } else {
        Err(Error::OutOfCase(format!(
            "{what} is set up for m <= -2, n >= 1; got {k}"
        )))
    }
}

/// Two-entry expansion `[2m+1, -2n]` of the two-bridge fraction, for the
/// case `m <= -2`, `n >= 1`.
pub fn standard_cf(k: KnotParams) -> Result<ContinuedFraction> {
    require_hyperbolic_window(k, "the standard expansion")?;
    Ok(ContinuedFraction {
        entries: vec![2 * k.m + 1, -2 * k.n],
        convention: CfConvention::Standard,
    })
}

/// All-even expansion `[2m+2, 2, 2, ..., 2]` (with `2n - 1` twos) of the
/// same fraction, for the case `m <= -2`, `n >= 1`. Its sign pattern reads
/// off the Seifert surface.
pub fn even_cf(k: KnotParams) -> Result<ContinuedFraction> {
    require_hyperbolic_window(k, "the even expansion")?;
    let mut entries = vec![2 * k.m + 2];
    entries.extend(std::iter::repeat(2).take((2 * k.n - 1) as usize));
    Ok(ContinuedFraction { entries, convention: CfConvention::Even })
}

/// A boundary slope together with how it is known.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundarySlope {
    pub slope: i64,
    pub provenance: Provenance,
}

/// Boundary slope of the Seifert surface for `m <= -2`, `n >= 1`, computed
/// from sign counts of the two expansions of the two-bridge fraction:
/// `2[(p - q) - (p0 - q0)]` with `(p, q)` the counts of [`standard_cf`] and
/// `(p0, q0)` those of [`even_cf`]. Equals `-4n`.
pub fn boundary_slope_seifert(k: KnotParams) -> Result<BoundarySlope> {
    let (p, q) = standard_cf(k)?.counts();
    let (p0, q0) = even_cf(k)?.counts();
    let slope = 2 * ((p as i64 - q as i64) - (p0 as i64 - q0 as i64));
    Ok(BoundarySlope { slope, provenance: Provenance::Theorem })
}

/// The other asymptotic boundary slope suggested by traced branches in the
/// case `m <= -2`, `n >= 1`: `-(4m + 4)`. The pattern matches every traced
/// example but is not proved, so it is tagged conjectural and is never fed
/// back into certified computations.
pub fn conjectural_boundary_slope(k: KnotParams) -> Result<BoundarySlope> {
    require_hyperbolic_window(k, "the conjectural second slope")?;
    Ok(BoundarySlope { slope: -(4 * k.m + 4), provenance: Provenance::Conjectural })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(m: i64, n: i64) -> KnotParams {
        KnotParams::new(m, n).unwrap()
    }

    #[test]
    fn window_by_twist_sign_case() {
        assert_eq!(orderable_interval(k(-2, 2)).to_string(), "[0, 8)");
        assert_eq!(orderable_interval(k(-3, 1)).to_string(), "[0, 4)");
        assert_eq!(orderable_interval(k(1, -1)).to_string(), "(-4, 0]");
        assert_eq!(orderable_interval(k(2, -3)).to_string(), "(-12, 0]");
        assert_eq!(orderable_interval(k(1, 1)).to_string(), "(-inf, 1)");
        assert_eq!(orderable_interval(k(-2, -1)).to_string(), "(-1, inf)");
        for iv in [orderable_interval(k(-2, 2)), orderable_interval(k(3, 2))] {
            assert_eq!(iv.provenance, Provenance::Theorem);
        }
    }

    #[test]
    fn window_closure_flags_honored_by_contains() {
        let iv = orderable_interval(k(-2, 2)); // [0, 8)
        assert!(iv.contains(0.0));
        assert!(iv.contains(7.999));
        assert!(!iv.contains(8.0));
        assert!(!iv.contains(-0.001));
        let iv = orderable_interval(k(1, -1)); // (-4, 0]
        assert!(iv.contains(0.0));
        assert!(!iv.contains(-4.0));
        let iv = orderable_interval(k(1, 1)); // (-inf, 1)
        assert!(iv.contains(-1e18));
        assert!(!iv.contains(1.0));
    }

    #[test]
    fn window_is_antisymmetric_under_mirroring() {
        for m in [-4i64, -3, -2, 1, 2, 3] {
            for n in [-3i64, -2, -1, 1, 2, 3] {
                let kk = k(m, n);
                let direct = orderable_interval(kk.mirror());
                let reflected = orderable_interval(kk).mirrored();
                assert_eq!(direct, reflected, "(m, n) = ({m}, {n})");
            }
        }
    }

    #[test]
    fn fraction_of_smallest_hyperbolic_case() {
        assert_eq!(two_bridge_fraction(k(-2, 2)), Ratio::new(-4, 11));
        assert_eq!(two_bridge_fraction(k(1, 1)), Ratio::new(2, 7));
        for m in [-3i64, -2, 1, 2] {
            for n in [-2i64, -1, 1, 2] {
                let kk = k(m, n);
                assert_eq!(
                    two_bridge_fraction(kk.mirror()),
                    -two_bridge_fraction(kk),
                    "(m, n) = ({m}, {n})"
                );
            }
        }
    }

    #[test]
    fn both_expansions_resolve_to_the_fraction() {
        for (m, n) in [(-2i64, 2i64), (-3, 1), (-2, 3), (-4, 2), (-5, 4)] {
            let kk = k(m, n);
            let std = standard_cf(kk).unwrap();
            let even = even_cf(kk).unwrap();
            let frac = two_bridge_fraction(kk);
            assert_eq!(std.value(), frac, "standard at ({m}, {n})");
            assert_eq!(even.value(), frac, "even at ({m}, {n})");
        }
    }

    #[test]
    fn expansion_shapes_and_counts() {
        let kk = k(-2, 2);
        let std = standard_cf(kk).unwrap();
        assert_eq!(std.entries, vec![-3, -4]);
        assert_eq!(std.counts(), (0, 2));
        assert_eq!(std.to_string(), "[-3, -4]");
        let even = even_cf(kk).unwrap();
        assert_eq!(even.entries, vec![-2, 2, 2, 2]);
        assert_eq!(even.counts(), (3, 1));
        assert!(even.entries.iter().all(|x| x % 2 == 0));
        assert_eq!(even.entries.len() as i64, 2 * kk.n);
    }

    #[test]
    fn seifert_boundary_slope_is_minus_4n() {
        for m in [-2i64, -3, -4] {
            for n in [1i64, 2, 3] {
                let b = boundary_slope_seifert(k(m, n)).unwrap();
                assert_eq!(b.slope, -4 * n, "(m, n) = ({m}, {n})");
                assert_eq!(b.provenance, Provenance::Theorem);
            }
        }
    }

    #[test]
    fn conjectural_slope_matches_traced_pattern() {
        let b = conjectural_boundary_slope(k(-2, 2)).unwrap();
        assert_eq!(b.slope, 4);
        assert_eq!(b.provenance, Provenance::Conjectural);
        assert_eq!(conjectural_boundary_slope(k(-3, 1)).unwrap().slope, 8);
    }

    #[test]
    fn expansions_refuse_other_cases() {
        for bad in [k(1, 1), k(2, -1), k(-2, -2)] {
            assert!(matches!(standard_cf(bad), Err(Error::OutOfCase(_))));
            assert!(matches!(even_cf(bad), Err(Error::OutOfCase(_))));
            assert!(matches!(boundary_slope_seifert(bad), Err(Error::OutOfCase(_))));
            assert!(matches!(conjectural_boundary_slope(bad), Err(Error::OutOfCase(_))));
        }
    }

    #[test]
    fn seifert_slope_is_a_window_endpoint_after_mirroring() {
        // The window for m <= -2, n >= 1 is [0, 4n); the mirror knot's
        // window ends at -4n, the Seifert boundary slope of the original.
        for (m, n) in [(-2i64, 2i64), (-3, 2), (-2, 1)] {
            let kk = k(m, n);
            let b = boundary_slope_seifert(kk).unwrap();
            let mirrored = orderable_interval(kk).mirrored();
            assert_eq!(mirrored.low, b.slope as f64);
        }
    }
}
