//! Self-contained SVG emitter: one polyline in a fixed 800×600 viewbox
//! with axis ticks at decade-friendly positions (1, 2, or 5 times a power
//! of ten). No external renderer or fonts beyond generic monospace.

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const LEFT: f64 = 80.0;
const RIGHT: f64 = 25.0;
const TOP: f64 = 45.0;
const BOTTOM: f64 = 55.0;

/// Render points as a single polyline with axes and tick labels.
pub fn polyline_chart(points: &[(f64, f64)], title: &str, x_label: &str, y_label: &str) -> String {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .copied()
        .filter(|(x, y)| x.is_finite() && y.is_finite())
        .collect();

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         font-family=\"monospace\" font-size=\"12\">\n"
    ));
    out.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n"
    ));
    out.push_str(&format!(
        "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
        WIDTH / 2.0,
        escape(title)
    ));

    if pts.is_empty() {
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">no data</text>\n</svg>\n",
            WIDTH / 2.0,
            HEIGHT / 2.0
        ));
        return out;
    }

    let (x0, x1) = padded_range(pts.iter().map(|p| p.0));
    let (y0, y1) = padded_range(pts.iter().map(|p| p.1));
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * plot_w;
    let sy = |y: f64| HEIGHT - BOTTOM - (y - y0) / (y1 - y0) * plot_h;

    // axes
    out.push_str(&format!(
        "<line x1=\"{LEFT}\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\" stroke=\"black\"/>\n",
        HEIGHT - BOTTOM,
        WIDTH - RIGHT
    ));
    out.push_str(&format!(
        "<line x1=\"{LEFT}\" y1=\"{TOP}\" x2=\"{LEFT}\" y2=\"{}\" stroke=\"black\"/>\n",
        HEIGHT - BOTTOM
    ));

    for t in ticks(x0, x1) {
        let x = sx(t);
        out.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{0}\" x2=\"{x:.2}\" y2=\"{1}\" stroke=\"black\"/>\n",
            HEIGHT - BOTTOM,
            HEIGHT - BOTTOM + 6.0
        ));
        out.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
            HEIGHT - BOTTOM + 20.0,
            fmt_tick(t, x1 - x0)
        ));
    }
    for t in ticks(y0, y1) {
        let y = sy(t);
        out.push_str(&format!(
            "<line x1=\"{0}\" y1=\"{y:.2}\" x2=\"{LEFT}\" y2=\"{y:.2}\" stroke=\"black\"/>\n",
            LEFT - 6.0
        ));
        out.push_str(&format!(
            "<text x=\"{}\" y=\"{y:.2}\" text-anchor=\"end\" dy=\"4\">{}</text>\n",
            LEFT - 10.0,
            fmt_tick(t, y1 - y0)
        ));
    }

    out.push_str(&format!(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
        LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
        escape(x_label)
    ));
    out.push_str(&format!(
        "<text x=\"{LEFT}\" y=\"{}\" text-anchor=\"start\">{}</text>\n",
        TOP - 8.0,
        escape(y_label)
    ));

    let coords: Vec<String> = pts
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
        .collect();
    out.push_str(&format!(
        "<polyline points=\"{}\" fill=\"none\" stroke=\"#0b63a5\" stroke-width=\"1.5\" \
         stroke-linejoin=\"round\"/>\n",
        coords.join(" ")
    ));
    out.push_str("</svg>\n");
    out
}

fn padded_range(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if hi <= lo {
        // single point (or all points equal): synthesize a visible span
        let pad = lo.abs().max(1.0) * 1e-3 + 0.5;
        return (lo - pad, hi + pad);
    }
    let pad = (hi - lo) * 0.04;
    (lo - pad, hi + pad)
}

/// Tick positions at multiples of 1, 2, or 5 times a power of ten, chosen
/// to land roughly six ticks across the span.
fn ticks(lo: f64, hi: f64) -> Vec<f64> {
    let step = nice_step(hi - lo);
    let mut t = (lo / step).ceil() * step;
    let mut out = Vec::new();
    while t <= hi + step * 1e-9 {
        // snap near-zero ticks produced by rounding
        out.push(if t.abs() < step * 1e-9 { 0.0 } else { t });
        t += step;
    }
    out
}

fn nice_step(span: f64) -> f64 {
    let raw = span / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    let norm = raw / mag;
    let factor = if norm < 1.5 {
        1.0
    } else if norm < 3.5 {
        2.0
    } else if norm < 7.5 {
        5.0
    } else {
        10.0
    };
    factor * mag
}

fn fmt_tick(v: f64, span: f64) -> String {
    let step = nice_step(span);
    let decimals = (-step.log10().floor()).max(0.0) as usize;
    if !(1e-4..1e5).contains(&step) {
        format!("{v:.1e}")
    } else {
        format!("{v:.decimals$}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
