//! Polyline rendering of a sampled density.

use std::fmt::Write;

use wmfock_core::DensityCurve;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 40.0;

pub fn render(curve: &DensityCurve) -> String {
    let xs = curve.samples.iter().map(|s| s.x);
    let x_min = xs.clone().fold(f64::INFINITY, f64::min);
    let x_max = xs.fold(f64::NEG_INFINITY, f64::max);
    let g_max = curve.samples.iter().map(|s| s.g).fold(0.0, f64::max);
    let span = if x_max > x_min { x_max - x_min } else { 1.0 };
    let top = if g_max > 0.0 { g_max * 1.05 } else { 1.0 };
    let px = |x: f64| MARGIN + (x - x_min) / span * (WIDTH - 2.0 * MARGIN);
    let py = |g: f64| HEIGHT - MARGIN - g / top * (HEIGHT - 2.0 * MARGIN);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let (x0, y0) = (px(x_min), py(0.0));
    writeln!(out, r#"<line x1="{x0:.2}" y1="{y0:.2}" x2="{:.2}" y2="{y0:.2}" stroke="black"/>"#, px(x_max)).unwrap();
    if x_min < 0.0 && x_max > 0.0 {
        writeln!(
            out,
            r#"<line x1="{0:.2}" y1="{y0:.2}" x2="{0:.2}" y2="{MARGIN:.2}" stroke="gray" stroke-dasharray="4 4"/>"#,
            px(0.0)
        )
        .unwrap();
    }
    let points: Vec<String> = curve.samples.iter().map(|s| format!("{:.2},{:.2}", px(s.x), py(s.g))).collect();
    writeln!(out, r#"<polyline fill="none" stroke="steelblue" stroke-width="2" points="{}"/>"#, points.join(" "))
        .unwrap();
    let label_y = HEIGHT - MARGIN / 3.0;
    writeln!(out, r#"<text x="{x0:.2}" y="{label_y:.2}" font-size="12">{x_min}</text>"#).unwrap();
    writeln!(out, r#"<text x="{:.2}" y="{label_y:.2}" font-size="12" text-anchor="end">{x_max}</text>"#, px(x_max))
        .unwrap();
    writeln!(out, r#"<text x="{x0:.2}" y="{:.2}" font-size="12">max g = {g_max:.5}</text>"#, MARGIN / 2.0).unwrap();
    writeln!(
        out,
        r#"<text x="{:.2}" y="{:.2}" font-size="14" text-anchor="end">m = {}</text>"#,
        WIDTH - MARGIN,
        MARGIN / 2.0,
        curve.m
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
