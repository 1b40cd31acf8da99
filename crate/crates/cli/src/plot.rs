//! SVG figure of the wall curves `s = w/α² − 1/6` in the (α, s) quadrant.

use std::fmt::Write as _;

use walllab_core::{wall_curve_samples, ChernCharacter, Rational, WallFamily};

use crate::decimal::sig6;
use crate::CliError;

pub const WIDTH: f64 = 640.0;
pub const HEIGHT: f64 = 480.0;
pub const LEFT: f64 = 60.0;
pub const TOP: f64 = 20.0;
pub const PLOT_W: f64 = 420.0;
pub const PLOT_H: f64 = 410.0;

const COLORS: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Ratio between consecutive α² samples; the α-grid is geometric with ratio 19/20.
fn grid_ratio() -> Rational {
    Rational::new(361, 400)
}

#[derive(Clone, Debug)]
pub struct PlotOptions {
    pub alpha_max: Option<Rational>,
    pub s_max: Rational,
}

impl Default for PlotOptions {
    fn default() -> Self {
        PlotOptions { alpha_max: None, s_max: Rational::from_integer(3) }
    }
}

/// Maps plot coordinates to SVG pixels.
#[derive(Clone, Copy, Debug)]
pub struct Frame {
    pub alpha_max: f64,
    pub s_max: f64,
}

impl Frame {
    pub fn x(&self, alpha: f64) -> f64 {
        LEFT + alpha / self.alpha_max * PLOT_W
    }

    pub fn y(&self, s: f64) -> f64 {
        TOP + PLOT_H * (1.0 - s / self.s_max)
    }

    /// Pixel position of an exact `(α², s)` anchor.
    pub fn pixel(&self, alpha_sq: &Rational, s: &Rational) -> (f64, f64) {
        (self.x(alpha_sq.to_f64().sqrt()), self.y(s.to_f64()))
    }
}

/// Exact points `(α², s)` on the curve of wall constant `w`, from the wall
/// endpoint `(6w, 0)` inwards until `s` reaches `s_max`, keeping `α² ≤ alpha_max_sq`.
pub fn curve_anchors(w: &Rational, s_max: &Rational, alpha_max_sq: &Rational) -> Result<Vec<(Rational, Rational)>, CliError> {
    let sixth = Rational::new(1, 6);
    let a0 = w * 6;
    let top = w / (s_max + &sixth);
    let ratio = grid_ratio();
    let mut grid = Vec::new();
    let mut a = &a0 * &ratio;
    while a > top {
        grid.push(a.clone());
        a *= &ratio;
    }
    grid.push(top);
    let mut out = vec![(a0, Rational::zero())];
    for p in wall_curve_samples(w, &grid)? {
        out.push((p.alpha_sq, p.s));
    }
    out.retain(|(a, _)| a <= alpha_max_sq);
    Ok(out)
}

fn fmt_px(x: f64) -> String {
    format!("{x:.3}")
}

pub fn render_svg(v: &ChernCharacter, families: &[WallFamily], has_degenerate: bool, opts: &PlotOptions) -> Result<String, CliError> {
    if !opts.s_max.is_positive() {
        return Err(CliError::Usage(format!("--s-max must be positive, got {}", opts.s_max)));
    }
    let alpha_max = match &opts.alpha_max {
        Some(a) if a.is_positive() => a.to_f64(),
        Some(a) => return Err(CliError::Usage(format!("--alpha-max must be positive, got {a}"))),
        None => {
            let outer = families.iter().map(|f| f.alpha0_sq().to_f64().sqrt()).fold(0.0, f64::max);
            (1.25 * outer).max(2.0)
        }
    };
    let alpha_max_sq = match &opts.alpha_max {
        Some(a) => a * a,
        None => {
            // Round the float bound up to an exact square that contains every endpoint.
            let bound = Rational::from_integer((alpha_max * alpha_max).ceil() as i64 + 1);
            families.iter().map(|f| f.alpha0_sq()).fold(bound, Rational::max)
        }
    };
    let frame = Frame { alpha_max, s_max: opts.s_max.to_f64() };

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<title>λ-walls for v = {v}</title>"#);
    let _ = writeln!(svg, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);

    // Axes with five ticks each.
    let (x0, y0) = (frame.x(0.0), frame.y(0.0));
    let (x1, y1) = (frame.x(alpha_max), frame.y(frame.s_max));
    let _ = writeln!(svg, r#"<g class="axes" stroke="black" stroke-width="1">"#);
    let _ = writeln!(svg, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, fmt_px(x0), fmt_px(y0), fmt_px(x1), fmt_px(y0));
    let _ = writeln!(svg, r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#, fmt_px(x0), fmt_px(y0), fmt_px(x0), fmt_px(y1));
    for i in 1..=5 {
        let t = i as f64 / 5.0;
        let (xt, yt) = (frame.x(alpha_max * t), frame.y(frame.s_max * t));
        let _ = writeln!(svg, r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, fmt_px(xt), fmt_px(y0), fmt_px(y0 + 5.0));
        let _ = writeln!(svg, r#"<line x1="{0}" y1="{1}" x2="{2}" y2="{1}"/>"#, fmt_px(x0 - 5.0), fmt_px(yt), fmt_px(x0));
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, r#"<g class="tick-labels" fill="black">"#);
    for i in 0..=5 {
        let t = i as f64 / 5.0;
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" text-anchor="middle">{}</text>"#,
            fmt_px(frame.x(alpha_max * t)),
            fmt_px(y0 + 18.0),
            sig6(alpha_max * t).trim_end_matches('0').trim_end_matches('.')
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" text-anchor="end">{}</text>"#,
            fmt_px(x0 - 8.0),
            fmt_px(frame.y(frame.s_max * t) + 4.0),
            sig6(frame.s_max * t).trim_end_matches('0').trim_end_matches('.')
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle">α</text>"#, fmt_px((x0 + x1) / 2.0), fmt_px(y0 + 38.0));
    let _ = writeln!(svg, r#"<text x="{}" y="{}" text-anchor="middle">s</text>"#, fmt_px(x0 - 40.0), fmt_px((y0 + y1) / 2.0));

    let _ = writeln!(svg, r#"<g class="walls" fill="none" stroke-width="1.5">"#);
    for (i, f) in families.iter().enumerate() {
        let anchors = curve_anchors(&f.wall_constant, &opts.s_max, &alpha_max_sq)?;
        // Entirely outside a user-chosen frame; the legend still lists it.
        if anchors.len() < 2 {
            continue;
        }
        let data: Vec<String> = anchors.iter().map(|(a, s)| format!("{a},{s}")).collect();
        let points: Vec<String> = anchors
            .iter()
            .map(|(a, s)| {
                let (x, y) = frame.pixel(a, s);
                format!("{},{}", fmt_px(x), fmt_px(y))
            })
            .collect();
        let _ = writeln!(
            svg,
            r#"<polyline class="wall" stroke="{}" data-wall-constant="{}" data-alpha0-sq="{}" data-anchors="{}" points="{}"/>"#,
            COLORS[i % COLORS.len()],
            f.wall_constant,
            f.alpha0_sq(),
            data.join(" "),
            points.join(" ")
        );
    }
    let _ = writeln!(svg, "</g>");

    let lx = LEFT + PLOT_W + 20.0;
    let _ = writeln!(svg, r#"<g class="legend">"#);
    for (i, f) in families.iter().enumerate() {
        let ly = TOP + 10.0 + 20.0 * i as f64;
        let _ = writeln!(
            svg,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{1}" stroke="{}" stroke-width="1.5"/>"#,
            fmt_px(lx),
            fmt_px(ly),
            fmt_px(lx + 20.0),
            COLORS[i % COLORS.len()]
        );
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}">w = {}, α₀² = {}</text>"#,
            fmt_px(lx + 26.0),
            fmt_px(ly + 4.0),
            f.wall_constant,
            f.alpha0_sq()
        );
    }
    if families.is_empty() {
        let note = if has_degenerate { "no walls (only ch1 = 0 candidates, no curve)" } else { "no walls" };
        let _ = writeln!(svg, r#"<text class="note" x="{}" y="{}">{note}</text>"#, fmt_px(lx), fmt_px(TOP + 14.0));
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, "</svg>");
    Ok(svg)
}
