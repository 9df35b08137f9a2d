//! Toolkit for the SL(2,R)-flavored representation theory of double twist knots.
//!
//! A double twist knot `J(2m+1, 2n)` is encoded by the integer pair `(m, n)`
//! (with `m` not in `{0, -1}` and `n != 0`; those degenerate to torus knots).
//! The crate computes, exactly where possible and with certified numerics
//! otherwise:
//!
//! * the recurrence polynomial families `f_m`, `g_m`, `tau_k` over ZZ and
//!   their root sets ([`poly`]);
//! * parabolic-style 2x2 representations of the knot group, closed forms for
//!   the twist-word image and its powers, the diagonalized longitude holonomy,
//!   and the universal cover of SU(1,1) ([`rep`]);
//! * the exact bivariate Riley polynomial, branch brackets for its real root
//!   curves, and the Alexander polynomial with classified roots ([`riley`]);
//! * numerically continued real branches with unwrapped holonomy phases,
//!   extension-locus point clouds, slopes, winding integers, and asymptote
//!   fits ([`tracer`]);
//! * left-orderable Dehn-surgery slope intervals and two-bridge boundary-slope
//!   bookkeeping via continued fractions ([`slopes`]);
//! * CSV/JSON/SVG emission and the verification check suites backing the
//!   `twistlocus` binary ([`report`], [`checks`]).
//!
//! Every closed form is paired with an independent oracle (letter-by-letter
//! word products, exact big-integer evaluation, brute-force recurrences) and
//! the test suite holds the two paths against each other.
//!
//! Run `cargo run --example` with one of the bundled examples for a guided
//! tour, or use the thin CLI:
//!
//! ```text
//! twistlocus riley --m 1 --n 1 --expand
//! twistlocus trace --m -2 --n 2 --branch hyperbolic --samples 512 --out t.csv
//! twistlocus interval --m -2 --n 2
//! ```

mod error;
pub mod checks;
pub mod poly;
pub mod rep;
pub mod report;
pub mod riley;
pub mod slopes;
pub mod tracer;

pub use error::{Error, Result};
pub use riley::KnotParams;
