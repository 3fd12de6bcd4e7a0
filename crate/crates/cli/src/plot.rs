//! Deterministic SVG rendering of a chamber scan.

use std::fmt::Write as _;

use stabsys::walls::{ChamberScan, Verdict};
use stabsys::Rational;

const WIDTH: i64 = 640;
const LEFT: i64 = 40;
const AXIS_LEN: i64 = 560;
const AXIS_Y: i64 = 80;

/// Position of `x` along `[lo, hi]` as a fraction of the axis.
pub fn axis_fraction(lo: &Rational, hi: &Rational, x: &Rational) -> Rational {
    (x - lo) / (hi - lo)
}

fn px(lo: &Rational, hi: &Rational, x: &Rational) -> String {
    let v = axis_fraction(lo, hi, x) * AXIS_LEN + LEFT;
    format!("{:.2}", v.to_f64())
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Renders the scan; returns the SVG text and notes about omitted walls.
pub fn plot_chambers(scan: &ChamberScan) -> (String, Vec<String>) {
    let (lo, hi) = (&scan.gamma_min, &scan.gamma_max);
    let mut notes = Vec::new();
    let mut ticks = Vec::new();
    for w in &scan.walls {
        match &w.gamma0 {
            Some(g) if g > lo && g < hi => ticks.push(g.clone()),
            Some(g) => notes.push(format!("wall at gamma0 = {g} lies outside ({lo}, {hi}); tick omitted")),
            None => notes.push(format!("wall for {} has no gamma0; tick omitted", w.pair.0)),
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="120" viewBox="0 0 {WIDTH} 120">"#
    );
    let mut meta = format!(
        "target {} alpha {} beta {} range ({lo}, {hi}) bound {}",
        scan.target, scan.alpha, scan.beta, scan.bound
    );
    for n in &notes {
        meta.push_str("; ");
        meta.push_str(n);
    }
    let _ = writeln!(svg, "  <metadata>{}</metadata>", escape(&meta));

    if scan.chambers.is_empty() {
        let _ = writeln!(
            svg,
            r##"  <rect class="chamber" x="{LEFT}.00" y="30" width="{AXIS_LEN}.00" height="50" fill="#e6e6e6"/>"##
        );
    }
    for ch in &scan.chambers {
        let x0 = px(lo, hi, &ch.lo);
        let width = format!("{:.2}", ((&ch.hi - &ch.lo) / (hi - lo) * AXIS_LEN).to_f64());
        let (class, fill) = match ch.verdict {
            Verdict::StableWithinBox => ("stable", "#cfe8cf"),
            Verdict::Unstable => ("unstable", "#f2c4c4"),
        };
        let _ = writeln!(
            svg,
            r#"  <rect class="chamber {class}" x="{x0}" y="30" width="{width}" height="50" fill="{fill}"/>"#
        );
    }
    let _ = writeln!(
        svg,
        r##"  <line class="axis" x1="{LEFT}" y1="{AXIS_Y}" x2="{}" y2="{AXIS_Y}" stroke="#000"/>"##,
        LEFT + AXIS_LEN
    );
    for (x, label) in [(LEFT, lo.to_string()), (LEFT + AXIS_LEN, hi.to_string())] {
        let _ = writeln!(
            svg,
            r#"  <text class="bound" x="{x}" y="112" text-anchor="middle" font-size="11">{}</text>"#,
            escape(&label)
        );
    }
    for g in &ticks {
        let x = px(lo, hi, g);
        let _ = writeln!(
            svg,
            r##"  <line class="wall" x1="{x}" y1="24" x2="{x}" y2="86" stroke="#333" stroke-width="2"/>"##
        );
        let _ = writeln!(
            svg,
            r#"  <text class="wall-label" x="{x}" y="18" text-anchor="middle" font-size="11">{}</text>"#,
            escape(&g.to_string())
        );
    }
    svg.push_str("</svg>\n");
    (svg, notes)
}
