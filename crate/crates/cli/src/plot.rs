//! Fixed-size SVG scatter plots of root dumps.

use std::fmt::Write as _;
use std::io::{Read, Write};
use std::str::FromStr;

use crate::rootcsv::{read_root_csv, RootRow};
use crate::{CliError, CliResult};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 20.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 50.0;

/// The plotted region `[xmin, xmax] x [ymin, ymax]` of the complex plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Window {
    pub xmin: f64,
    pub xmax: f64,
    pub ymin: f64,
    pub ymax: f64,
}

impl Window {
    pub fn contains(&self, x: f64, y: f64) -> bool {
        (self.xmin..=self.xmax).contains(&x) && (self.ymin..=self.ymax).contains(&y)
    }

    /// Bounding box of the rows padded by 5%, or `[-1,1]^2` for no rows.
    pub fn fit(rows: &[RootRow]) -> Window {
        if rows.is_empty() {
            return Window { xmin: -1.0, xmax: 1.0, ymin: -1.0, ymax: 1.0 };
        }
        let (mut w, mut first) = (Window { xmin: 0.0, xmax: 0.0, ymin: 0.0, ymax: 0.0 }, true);
        for r in rows {
            let (x, y) = (r.root.re, r.root.im);
            if first {
                w = Window { xmin: x, xmax: x, ymin: y, ymax: y };
                first = false;
            }
            w.xmin = w.xmin.min(x);
            w.xmax = w.xmax.max(x);
            w.ymin = w.ymin.min(y);
            w.ymax = w.ymax.max(y);
        }
        let pad = |lo: f64, hi: f64| {
            let p = ((hi - lo) * 0.05).max(1e-3);
            (lo - p, hi + p)
        };
        let (xmin, xmax) = pad(w.xmin, w.xmax);
        let (ymin, ymax) = pad(w.ymin, w.ymax);
        Window { xmin, xmax, ymin, ymax }
    }

    fn px(&self, x: f64) -> f64 {
        LEFT + (x - self.xmin) / (self.xmax - self.xmin) * (WIDTH - LEFT - RIGHT)
    }

    fn py(&self, y: f64) -> f64 {
        HEIGHT - BOTTOM - (y - self.ymin) / (self.ymax - self.ymin) * (HEIGHT - TOP - BOTTOM)
    }
}

impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let v: Vec<f64> = s
            .split(',')
            .map(|x| x.trim().parse::<f64>().map_err(|e| format!("{x:?}: {e}")))
            .collect::<Result<_, _>>()?;
        let [xmin, xmax, ymin, ymax] = v[..] else {
            return Err("expected xmin,xmax,ymin,ymax".into());
        };
        if !(xmin < xmax && ymin < ymax) {
            return Err(format!("window {s} is empty"));
        }
        Ok(Window { xmin, xmax, ymin, ymax })
    }
}

/// Renders one circle per row inside the window, plus a frame, the axes where
/// they cross the window, and corner labels. Returns the SVG and marker count.
pub fn render_svg(rows: &[RootRow], window: &Window) -> (String, usize) {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" style="fill:white"/>"#);
    let (x0, x1, y0, y1) = (window.px(window.xmin), window.px(window.xmax), window.py(window.ymax), window.py(window.ymin));
    let _ = writeln!(
        s,
        r#"<rect x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{:.2}" style="fill:none;stroke:black;stroke-width:1"/>"#,
        x1 - x0,
        y1 - y0
    );
    let axis = "stroke:gray;stroke-width:0.5;stroke-dasharray:4 3";
    if window.contains(0.0, window.ymin) {
        let x = window.px(0.0);
        let _ = writeln!(s, r#"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{y1:.2}" style="{axis}"/>"#);
    }
    if window.contains(window.xmin, 0.0) {
        let y = window.py(0.0);
        let _ = writeln!(s, r#"<line x1="{x0:.2}" y1="{y:.2}" x2="{x1:.2}" y2="{y:.2}" style="{axis}"/>"#);
    }
    let text = "font-family:sans-serif;font-size:12px";
    let label = |s: &mut String, x: f64, y: f64, anchor: &str, body: String| {
        let _ = writeln!(s, r#"<text x="{x:.2}" y="{y:.2}" style="{text};text-anchor:{anchor}">{body}</text>"#);
    };
    label(&mut s, x0, y1 + 18.0, "start", format!("{}", window.xmin));
    label(&mut s, x1, y1 + 18.0, "end", format!("{}", window.xmax));
    label(&mut s, x0 - 6.0, y1, "end", format!("{}", window.ymin));
    label(&mut s, x0 - 6.0, y0 + 12.0, "end", format!("{}", window.ymax));
    label(&mut s, (x0 + x1) / 2.0, HEIGHT - 12.0, "middle", "Re".into());
    label(&mut s, 18.0, (y0 + y1) / 2.0, "middle", "Im".into());
    let mut markers = 0;
    for r in rows {
        let (x, y) = (r.root.re, r.root.im);
        if window.contains(x, y) {
            markers += 1;
            let _ = writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="2" style="fill:steelblue"/>"#,
                window.px(x),
                window.py(y)
            );
        }
    }
    s.push_str("</svg>\n");
    (s, markers)
}

/// Reads a root dump and writes its scatter plot; returns the marker count.
pub fn cmd_plot<R: Read, W: Write>(input: R, window: Option<Window>, mut out: W) -> CliResult<usize> {
    let rows = read_root_csv(input)?;
    let window = window.unwrap_or_else(|| Window::fit(&rows));
    let (svg, markers) = render_svg(&rows, &window);
    out.write_all(svg.as_bytes()).map_err(CliError::from)?;
    Ok(markers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use necklace::Complex64;

    fn row(re: f64, im: f64) -> RootRow {
        RootRow {
            family: "necklace".into(),
            t: 2,
            root: Complex64::new(re, im),
            u: None,
            v: None,
            residual: None,
        }
    }

    #[test]
    fn window_parsing() {
        let w: Window = "-1.1,0.1,-1.6,1.6".parse().unwrap();
        assert_eq!(w, Window { xmin: -1.1, xmax: 0.1, ymin: -1.6, ymax: 1.6 });
        assert!("1,0,0,1".parse::<Window>().is_err());
        assert!("1,2,3".parse::<Window>().is_err());
    }

    #[test]
    fn counts_markers_in_window() {
        let rows = vec![row(-0.5, 0.8), row(-0.5, -0.8), row(3.0, 0.0)];
        let w: Window = "-1,0,-1,1".parse().unwrap();
        let (svg, n) = render_svg(&rows, &w);
        assert_eq!(n, 2);
        assert_eq!(svg.matches("<circle").count(), 2);
        assert!(svg.starts_with("<svg") && svg.ends_with("</svg>\n"));
        assert!(svg.contains(r#"width="800" height="600""#));
    }

    #[test]
    fn empty_window_has_axes_only() {
        let (svg, n) = render_svg(&[], &"-10,2,-2,2".parse().unwrap());
        assert_eq!(n, 0);
        assert!(!svg.contains("<circle"));
        assert_eq!(svg.matches("<line").count(), 2);
    }

    #[test]
    fn output_is_deterministic() {
        let rows = vec![row(-0.25, 0.5), row(-0.75, -0.125)];
        let w = Window::fit(&rows);
        assert_eq!(render_svg(&rows, &w), render_svg(&rows, &w));
    }
}
