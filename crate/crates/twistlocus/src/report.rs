//! Deterministic emission of traced data: CSV tables, JSON documents, and
//! SVG plots, plus crash-safe file writes.
//!
//! Every format is reproducible byte for byte: floats are printed with a
//! fixed scheme, JSON maps are ordered, and nothing embeds a timestamp or a
//! random identifier. JSON documents carry the numeric tolerances their
//! values were computed under, so a consumer can re-check claims instead of
//! trusting them.
//!
//! ```
//! use twistlocus::report::trace_csv;
//! use twistlocus::tracer::{natural_case, trace_branch};
//! use twistlocus::KnotParams;
//!
//! let k = KnotParams::new(1, 1).unwrap();
//! let branch = trace_branch(k, natural_case(k).unwrap(), 64).unwrap();
//! let csv = trace_csv(&branch).unwrap();
//! assert!(csv.starts_with("s,T,re_t,im_t,re_B,im_B,x,y,slope\n"));
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::riley::{BranchCase, KnotParams};
use crate::slopes::{BoundarySlope, ContinuedFraction, SlopeInterval};
use crate::tracer::{slope_fn, Branch, LocusPoint, Window};
use crate::Result;

/// Write `bytes` to `path` atomically: the data lands in a sibling
/// temporary file first and is renamed over the target, so a crash can
/// never leave a half-written file at `path`.
pub fn atomic_write(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let name = path
        .file_name()
        .ok_or_else(|| io::Error::new(io::ErrorKind::InvalidInput, "path has no file name"))?
        .to_string_lossy()
        .into_owned();
    let tmp = path.with_file_name(format!(".{name}.tmp-{}", std::process::id()));
    std::fs::write(&tmp, bytes)?;
    match std::fs::rename(&tmp, path) {
        Ok(()) => Ok(()),
        Err(e) => {
            let _ = std::fs::remove_file(&tmp);
            Err(e)
        }
    }
}

/// One CSV/JSON row of a traced branch.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct TraceRecord {
    pub s: f64,
    #[serde(rename = "T")]
    pub cap_t: f64,
    pub re_t: f64,
    pub im_t: f64,
    #[serde(rename = "re_B")]
    pub re_b: f64,
    #[serde(rename = "im_B")]
    pub im_b: f64,
    pub x: f64,
    pub y: f64,
    pub slope: f64,
}

/// Flatten a traced branch into rows.
pub fn trace_records(branch: &Branch) -> Result<Vec<TraceRecord>> {
    branch
        .samples
        .iter()
        .map(|p| {
            Ok(TraceRecord {
                s: p.s,
                cap_t: p.cap_t,
                re_t: p.t.re,
                im_t: p.t.im,
                re_b: p.b.re,
                im_b: p.b.im,
                x: p.x,
                y: p.y,
                slope: slope_fn(p)?,
            })
        })
        .collect()
}

/// Render a traced branch as CSV: a fixed header, one row per sample, every
/// number in full-precision scientific notation, LF line endings.
pub fn trace_csv(branch: &Branch) -> Result<String> {
    let mut out = String::from("s,T,re_t,im_t,re_B,im_B,x,y,slope\n");
    for r in trace_records(branch)? {
        writeln!(
            out,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            r.s, r.cap_t, r.re_t, r.im_t, r.re_b, r.im_b, r.x, r.y, r.slope
        )
        .expect("writing to a String cannot fail");
    }
    Ok(out)
}

/// Identifying header shared by all JSON documents.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct KnotTag {
    pub m: i64,
    pub n: i64,
    pub name: String,
}

impl From<KnotParams> for KnotTag {
    fn from(k: KnotParams) -> Self {
        KnotTag { m: k.m, n: k.n, name: k.to_string() }
    }
}

fn case_name(case: BranchCase) -> &'static str {
    match case {
        BranchCase::Elliptic => "elliptic",
        BranchCase::Hyperbolic => "hyperbolic",
    }
}

/// Winding data as serialized.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct WindingDoc {
    pub d: i64,
    pub residual: f64,
    pub phase_limit: f64,
}

/// JSON document for a traced branch.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct TraceDocument {
    pub knot: KnotTag,
    pub case: String,
    pub s_singular: f64,
    pub seed_u: f64,
    pub winding: Option<WindingDoc>,
    pub warnings: Vec<String>,
    pub tolerances: BTreeMap<String, f64>,
    pub records: Vec<TraceRecord>,
}

/// Build the JSON document for a traced branch. `tolerances` should list
/// every tolerance the trace and its checks ran under.
pub fn trace_document(
    branch: &Branch,
    tolerances: BTreeMap<String, f64>,
) -> Result<TraceDocument> {
    Ok(TraceDocument {
        knot: branch.params.into(),
        case: case_name(branch.case).to_string(),
        s_singular: branch.s_singular,
        seed_u: branch.seed_u,
        winding: branch.winding.as_ref().map(|w| WindingDoc {
            d: w.d,
            residual: w.residual,
            phase_limit: w.phase_limit,
        }),
        warnings: branch.warnings.clone(),
        tolerances,
        records: trace_records(branch)?,
    })
}

/// One endpoint of a slope interval: `value: None` encodes an unbounded
/// (hence open) end, since JSON has no infinities.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct IntervalEnd {
    pub value: Option<f64>,
    pub closed: bool,
}

/// JSON document for a left-orderable surgery window.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct IntervalDocument {
    pub knot: KnotTag,
    pub low: IntervalEnd,
    pub high: IntervalEnd,
    pub provenance: String,
    pub display: String,
}

/// Build the JSON document for a surgery window.
pub fn interval_document(k: KnotParams, iv: &SlopeInterval) -> IntervalDocument {
    let end = |v: f64, closed: bool| IntervalEnd {
        value: if v.is_finite() { Some(v) } else { None },
        closed,
    };
    IntervalDocument {
        knot: k.into(),
        low: end(iv.low, iv.low_closed),
        high: end(iv.high, iv.high_closed),
        provenance: iv.provenance.to_string(),
        display: iv.to_string(),
    }
}

/// One boundary slope with provenance, as serialized.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SlopeDoc {
    pub slope: i64,
    pub provenance: String,
}

impl From<BoundarySlope> for SlopeDoc {
    fn from(b: BoundarySlope) -> Self {
        SlopeDoc { slope: b.slope, provenance: b.provenance.to_string() }
    }
}

/// JSON document for the boundary-slope bookkeeping of one knot.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BoundarySlopeDocument {
    pub knot: KnotTag,
    pub fraction: String,
    pub standard_cf: Vec<i64>,
    pub even_cf: Vec<i64>,
    pub seifert: SlopeDoc,
    pub conjectural: SlopeDoc,
}

/// Build the boundary-slope document from its pieces.
pub fn boundary_slope_document(
    k: KnotParams,
    fraction: num_rational::Ratio<i64>,
    standard: &ContinuedFraction,
    even: &ContinuedFraction,
    seifert: BoundarySlope,
    conjectural: BoundarySlope,
) -> BoundarySlopeDocument {
    BoundarySlopeDocument {
        knot: k.into(),
        fraction: fraction.to_string(),
        standard_cf: standard.entries.clone(),
        even_cf: even.entries.clone(),
        seifert: seifert.into(),
        conjectural: conjectural.into(),
    }
}

/// Result of one named verification check, attributed to a knot.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckDoc {
    pub knot: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub tolerance: Option<f64>,
}

/// JSON document for a verification run.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct VerifyDocument {
    pub knots: Vec<KnotTag>,
    pub all_passed: bool,
    pub checks: Vec<CheckDoc>,
    pub tolerances: BTreeMap<String, f64>,
}

/// The plotting window, as serialized.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq)]
pub struct WindowDoc {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl From<&Window> for WindowDoc {
    fn from(w: &Window) -> Self {
        WindowDoc { x_min: w.x_min, x_max: w.x_max, y_min: w.y_min, y_max: w.y_max }
    }
}

/// One symmetry image of the traced arc inside the window.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LocusArcDoc {
    /// `(translation, sign)` tag of the symmetry that produced this arc.
    pub component: (i64, i64),
    pub points: Vec<[f64; 2]>,
}

/// JSON document for an extension-locus point cloud.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct LocusDocument {
    pub knot: KnotTag,
    pub case: String,
    pub window: WindowDoc,
    pub arcs: Vec<LocusArcDoc>,
}

/// Build the JSON document for a locus plot from its symmetry images.
pub fn locus_document(
    k: KnotParams,
    case: BranchCase,
    window: &Window,
    arcs: &[Vec<LocusPoint>],
) -> LocusDocument {
    LocusDocument {
        knot: k.into(),
        case: case_name(case).to_string(),
        window: window.into(),
        arcs: arcs
            .iter()
            .filter(|a| !a.is_empty())
            .map(|a| LocusArcDoc {
                component: a[0].component,
                points: a.iter().map(|p| [p.x, p.y]).collect(),
            })
            .collect(),
    }
}

/// Serialize any document to pretty JSON with a trailing newline. The
/// output is deterministic: struct fields keep declaration order and maps
/// are sorted.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("document serialization cannot fail");
    s.push('\n');
    s
}

/// Extension-locus plot: arcs of locus points inside a window, one SVG
/// `<polyline>` per arc, plus axes and integer tick marks. Deterministic —
/// same input, same bytes.
pub fn locus_svg(arcs: &[Vec<LocusPoint>], window: &Window) -> String {
    const W: f64 = 840.0;
    const H: f64 = 620.0;
    const PAD: f64 = 40.0;
    let span_x = window.x_max - window.x_min;
    let span_y = window.y_max - window.y_min;
    let sx = |x: f64| PAD + (x - window.x_min) / span_x * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y - window.y_min) / span_y * (H - 2.0 * PAD);

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\" \
         font-family=\"sans-serif\" font-size=\"11\">"
    );
    let _ = writeln!(out, "<rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>");

    // Frame.
    let _ = writeln!(
        out,
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
        PAD,
        H - PAD,
        W - PAD,
        H - PAD
    );
    let _ = writeln!(
        out,
        "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
        PAD,
        PAD,
        PAD,
        H - PAD
    );
    // Interior zero axes when visible.
    if window.x_min < 0.0 && window.x_max > 0.0 {
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#bbbbbb\"/>",
            sx(0.0),
            PAD,
            sx(0.0),
            H - PAD
        );
    }
    if window.y_min < 0.0 && window.y_max > 0.0 {
        let _ = writeln!(
            out,
            "<line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"#bbbbbb\"/>",
            PAD,
            sy(0.0),
            W - PAD,
            sy(0.0)
        );
    }

    // Integer ticks, thinned so at most ~16 fit per axis.
    let stride = |span: f64| (span / 16.0).ceil().max(1.0) as i64;
    let (dx, dy) = (stride(span_x), stride(span_y));
    let mut tick = window.x_min.ceil() as i64;
    while tick as f64 <= window.x_max {
        if tick % dx == 0 {
            let px = sx(tick as f64);
            let _ = writeln!(
                out,
                "<line x1=\"{px:.2}\" y1=\"{:.2}\" x2=\"{px:.2}\" y2=\"{:.2}\" stroke=\"black\"/>",
                H - PAD,
                H - PAD + 5.0
            );
            let _ = writeln!(
                out,
                "<text x=\"{px:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{tick}</text>",
                H - PAD + 17.0
            );
        }
        tick += 1;
    }
    let mut tick = window.y_min.ceil() as i64;
    while tick as f64 <= window.y_max {
        if tick % dy == 0 {
            let py = sy(tick as f64);
            let _ = writeln!(
                out,
                "<line x1=\"{:.2}\" y1=\"{py:.2}\" x2=\"{:.2}\" y2=\"{py:.2}\" stroke=\"black\"/>",
                PAD - 5.0,
                PAD
            );
            let _ = writeln!(
                out,
                "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{tick}</text>",
                PAD - 8.0,
                py + 4.0
            );
        }
        tick += 1;
    }

    // One polyline per arc; translated copies keep the base color, flipped
    // copies get their own.
    for arc in arcs {
        if arc.is_empty() {
            continue;
        }
        let color = if arc[0].component.1 >= 0 { "#1f6fb4" } else { "#c23b22" };
        let mut pts = String::new();
        for p in arc {
            let _ = write!(pts, "{:.3},{:.3} ", sx(p.x), sy(p.y));
        }
        let _ = writeln!(
            out,
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.2\" points=\"{}\"/>",
            pts.trim_end()
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slopes::{
        boundary_slope_seifert, conjectural_boundary_slope, even_cf, orderable_interval,
        standard_cf, two_bridge_fraction,
    };
    use crate::tracer::{locus_points, locus_symmetries, trace_branch};

    fn k(m: i64, n: i64) -> KnotParams {
        KnotParams::new(m, n).unwrap()
    }

    fn small_branch() -> Branch {
        trace_branch(k(1, 1), BranchCase::Elliptic, 64).unwrap()
    }

    #[test]
    fn csv_has_header_one_row_per_sample_and_lf_endings() {
        let br = small_branch();
        let csv = trace_csv(&br).unwrap();
        assert!(!csv.contains('\r'));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "s,T,re_t,im_t,re_B,im_B,x,y,slope");
        assert_eq!(lines.len(), br.samples.len() + 1);
        for line in &lines[1..] {
            assert_eq!(line.split(',').count(), 9);
            for field in line.split(',') {
                field.parse::<f64>().expect("every field parses as f64");
            }
        }
    }

    #[test]
    fn csv_is_deterministic() {
        let a = trace_csv(&small_branch()).unwrap();
        let b = trace_csv(&small_branch()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn trace_document_round_trips_bit_exactly() {
        let br = small_branch();
        let mut tol = BTreeMap::new();
        tol.insert("residual".to_string(), 1e-9);
        tol.insert("phase_step".to_string(), std::f64::consts::FRAC_PI_4);
        let doc = trace_document(&br, tol).unwrap();
        let text = to_json(&doc);
        let back: TraceDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(to_json(&back), text);
    }

    #[test]
    fn interval_document_encodes_unbounded_ends_as_null() {
        let kk = k(1, 1);
        let doc = interval_document(kk, &orderable_interval(kk));
        assert_eq!(doc.low.value, None);
        assert_eq!(doc.high.value, Some(1.0));
        let text = to_json(&doc);
        assert!(text.contains("\"value\": null"));
        let back: IntervalDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back, doc);
    }

    #[test]
    fn boundary_document_carries_both_slopes_and_expansions() {
        let kk = k(-2, 2);
        let doc = boundary_slope_document(
            kk,
            two_bridge_fraction(kk),
            &standard_cf(kk).unwrap(),
            &even_cf(kk).unwrap(),
            boundary_slope_seifert(kk).unwrap(),
            conjectural_boundary_slope(kk).unwrap(),
        );
        assert_eq!(doc.fraction, "-4/11");
        assert_eq!(doc.standard_cf, vec![-3, -4]);
        assert_eq!(doc.even_cf, vec![-2, 2, 2, 2]);
        assert_eq!(doc.seifert.slope, -8);
        assert_eq!(doc.seifert.provenance, "theorem");
        assert_eq!(doc.conjectural.slope, 4);
        assert_eq!(doc.conjectural.provenance, "conjectural");
    }

    #[test]
    fn svg_has_one_polyline_per_nonempty_arc_and_no_timestamp() {
        let br = small_branch();
        let window = Window { x_min: -1.0, x_max: 2.0, y_min: -2.0, y_max: 2.0 };
        let arcs = locus_symmetries(&locus_points(&br), &window);
        let svg = locus_svg(&arcs, &window);
        let polylines = svg.matches("<polyline").count();
        assert_eq!(polylines, arcs.iter().filter(|a| !a.is_empty()).count());
        assert!(svg.starts_with("<svg "));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert!(svg.contains("<text"));
        assert!(svg.contains("<line"));
        // Determinism.
        assert_eq!(svg, locus_svg(&arcs, &window));
    }

    #[test]
    fn svg_curves_are_polylines_only() {
        let br = small_branch();
        let window = Window { x_min: -1.0, x_max: 2.0, y_min: -2.0, y_max: 2.0 };
        let arcs = locus_symmetries(&locus_points(&br), &window);
        let svg = locus_svg(&arcs, &window);
        assert!(!svg.contains("<path"));
        assert!(!svg.contains("<circle"));
    }

    #[test]
    fn atomic_write_replaces_and_leaves_no_droppings() {
        let dir = tempfile::tempdir().unwrap();
        let target = dir.path().join("out.csv");
        atomic_write(&target, b"first\n").unwrap();
        atomic_write(&target, b"second\n").unwrap();
        assert_eq!(std::fs::read(&target).unwrap(), b"second\n");
        let names: Vec<_> = std::fs::read_dir(dir.path())
            .unwrap()
            .map(|e| e.unwrap().file_name().into_string().unwrap())
            .collect();
        assert_eq!(names, vec!["out.csv".to_string()]);
    }
}
