//! Self-contained SVG emitters for report figures: histograms, grouped
//! bars and 2-D scatter plots. No external plotting dependency.

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 420.0;
const MARGIN: f64 = 50.0;

const PALETTE: [&str; 10] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac",
];

fn header(title: &str) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n\
         <rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>\n\
         <text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">{}</text>\n",
        WIDTH / 2.0,
        escape(title)
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn axes(x_label: &str, y_label: &str) -> String {
    let x0 = MARGIN;
    let y0 = HEIGHT - MARGIN;
    let x1 = WIDTH - MARGIN;
    let y1 = MARGIN;
    format!(
        "<line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x1}\" y2=\"{y0}\" stroke=\"black\"/>\n\
         <line x1=\"{x0}\" y1=\"{y0}\" x2=\"{x0}\" y2=\"{y1}\" stroke=\"black\"/>\n\
         <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">{}</text>\n\
         <text x=\"16\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 {})\">{}</text>\n",
        (x0 + x1) / 2.0,
        HEIGHT - 12.0,
        escape(x_label),
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0,
        escape(y_label)
    )
}

/// Bar chart of a normalized histogram over [lo, hi].
pub fn histogram_svg(values: &[f64], lo: f64, hi: f64, title: &str, x_label: &str) -> String {
    let mut out = header(title);
    out.push_str(&axes(x_label, "frequency"));
    let n = values.len().max(1);
    let max = values.iter().cloned().fold(0.0f64, f64::max).max(1e-12);
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let bar_w = plot_w / n as f64;
    for (i, &v) in values.iter().enumerate() {
        let h = v / max * plot_h;
        let x = MARGIN + i as f64 * bar_w;
        let y = HEIGHT - MARGIN - h;
        out.push_str(&format!(
            "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{:.2}\" height=\"{h:.2}\" fill=\"{}\" stroke=\"white\" stroke-width=\"0.5\"/>\n",
            bar_w,
            PALETTE[0]
        ));
    }
    for (frac, label) in [(0.0, lo), (0.5, (lo + hi) / 2.0), (1.0, hi)] {
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">{label:.2}</text>\n",
            MARGIN + frac * plot_w,
            HEIGHT - MARGIN + 16.0
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Grouped bar chart: one group per label, one bar per series, with
/// optional error whiskers.
pub fn grouped_bars_svg(
    group_labels: &[String],
    series_labels: &[String],
    values: &[Vec<f64>],  // values[series][group]
    errors: Option<&[Vec<f64>]>,
    title: &str,
) -> String {
    let mut out = header(title);
    out.push_str(&axes("", "accuracy"));
    let groups = group_labels.len().max(1);
    let series = series_labels.len().max(1);
    let max = values
        .iter()
        .flatten()
        .cloned()
        .fold(0.0f64, f64::max)
        .max(1e-12)
        * 1.15;
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    let group_w = plot_w / groups as f64;
    let bar_w = group_w * 0.8 / series as f64;
    for (s, row) in values.iter().enumerate() {
        for (g, &v) in row.iter().enumerate() {
            let h = v / max * plot_h;
            let x = MARGIN + g as f64 * group_w + group_w * 0.1 + s as f64 * bar_w;
            let y = HEIGHT - MARGIN - h;
            out.push_str(&format!(
                "<rect x=\"{x:.2}\" y=\"{y:.2}\" width=\"{bar_w:.2}\" height=\"{h:.2}\" fill=\"{}\"/>\n",
                PALETTE[s % PALETTE.len()]
            ));
            if let Some(errs) = errors {
                let e = errs[s][g] / max * plot_h;
                let cx = x + bar_w / 2.0;
                out.push_str(&format!(
                    "<line x1=\"{cx:.2}\" y1=\"{:.2}\" x2=\"{cx:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
                    (y - e).max(MARGIN),
                    (y + e).min(HEIGHT - MARGIN)
                ));
            }
        }
    }
    for (g, label) in group_labels.iter().enumerate() {
        out.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{}\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            MARGIN + (g as f64 + 0.5) * group_w,
            HEIGHT - MARGIN + 16.0,
            escape(label)
        ));
    }
    for (s, label) in series_labels.iter().enumerate() {
        let y = MARGIN + 14.0 * s as f64;
        out.push_str(&format!(
            "<rect x=\"{}\" y=\"{:.2}\" width=\"10\" height=\"10\" fill=\"{}\"/>\n\
             <text x=\"{}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            WIDTH - MARGIN - 150.0,
            y,
            PALETTE[s % PALETTE.len()],
            WIDTH - MARGIN - 136.0,
            y + 9.0,
            escape(label)
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// Scatter plot of 2-D points colored by class label.
pub fn scatter_svg(points: &[[f64; 2]], labels: &[String], title: &str) -> String {
    let mut out = header(title);
    out.push_str(&axes("PC1", "PC2"));
    let (mut min_x, mut max_x) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut min_y, mut max_y) = (f64::INFINITY, f64::NEG_INFINITY);
    for p in points {
        min_x = min_x.min(p[0]);
        max_x = max_x.max(p[0]);
        min_y = min_y.min(p[1]);
        max_y = max_y.max(p[1]);
    }
    let span_x = (max_x - min_x).max(1e-12);
    let span_y = (max_y - min_y).max(1e-12);
    let mut classes: Vec<&String> = labels.iter().collect();
    classes.sort();
    classes.dedup();
    let plot_w = WIDTH - 2.0 * MARGIN;
    let plot_h = HEIGHT - 2.0 * MARGIN;
    for (p, label) in points.iter().zip(labels) {
        let color = classes
            .iter()
            .position(|c| *c == label)
            .map(|i| PALETTE[i % PALETTE.len()])
            .unwrap_or("#000000");
        let x = MARGIN + (p[0] - min_x) / span_x * plot_w;
        let y = HEIGHT - MARGIN - (p[1] - min_y) / span_y * plot_h;
        out.push_str(&format!(
            "<circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"4\" fill=\"{color}\" fill-opacity=\"0.8\"/>\n"
        ));
    }
    for (i, class) in classes.iter().enumerate() {
        let y = MARGIN + 14.0 * i as f64;
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{:.2}\" r=\"4\" fill=\"{}\"/>\n\
             <text x=\"{}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"11\">{}</text>\n",
            WIDTH - MARGIN - 120.0,
            y + 5.0,
            PALETTE[i % PALETTE.len()],
            WIDTH - MARGIN - 110.0,
            y + 9.0,
            escape(class)
        ));
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn emitters_produce_valid_looking_svg() {
        let h = histogram_svg(&[0.1, 0.5, 0.4], 0.0, 1.0, "hist", "value");
        assert!(h.starts_with("<svg") && h.trim_end().ends_with("</svg>"));
        let g = grouped_bars_svg(
            &["none".into(), "partial".into()],
            &["llna".into(), "baseline".into()],
            &[vec![0.7, 0.76], vec![0.5, 0.49]],
            None,
            "comparison",
        );
        assert!(g.contains("<rect"));
        let s = scatter_svg(
            &[[0.0, 0.0], [1.0, 1.0]],
            &["a".into(), "b".into()],
            "pca",
        );
        assert!(s.contains("<circle"));
    }
}
