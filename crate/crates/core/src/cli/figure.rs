//! Figure definitions and rendering. The CSV is the canonical output; the
//! SVG is a scatter rendering of the same points.

use std::fmt::Write as _;

use thiserror::Error;

use super::config::Units;
use super::output::{format_sig, render_csv};
use super::sweep::{sweep, Point};
use crate::states::{Family, FamilySpec, StateError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FigureError {
    #[error("unknown figure id {0} (expected 1-5)")]
    UnknownId(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FigureSpec {
    pub id: u32,
    pub title: &'static str,
    pub series: Vec<(Family, usize)>,
    pub t_range: Vec<u32>,
}

impl FigureSpec {
    /// Figure `id` over `t = 0..=t_max`.
    pub fn new(id: u32, t_max: u32) -> Result<Self, FigureError> {
        use Family::*;
        let (title, series) = match id {
            1 => ("N = 2: Laughlin ψ_m and hierarchical φ_m", vec![(Laughlin, 2), (HierarchicalPhi, 2)]),
            2 => ("N = 3: Laughlin ψ'_m and hierarchical φ'_m", vec![(Laughlin, 3), (HierarchicalPhi, 3)]),
            3 => ("Laughlin states, N = 2 and N = 3", vec![(Laughlin, 2), (Laughlin, 3)]),
            4 => ("Hierarchical φ states, N = 2 and N = 3", vec![(HierarchicalPhi, 2), (HierarchicalPhi, 3)]),
            5 => ("N = 4: χ_m from K = (1 1; 1 −(m−1))", vec![(Chi, 4)]),
            other => return Err(FigureError::UnknownId(other)),
        };
        Ok(FigureSpec { id, title, series, t_range: (0..=t_max).collect() })
    }

    pub fn points(&self) -> Vec<FamilySpec> {
        self.series
            .iter()
            .flat_map(|&(family, n)| self.t_range.iter().map(move |&t| FamilySpec::new(family, n, 2 * t + 1)))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FigureData {
    pub spec: FigureSpec,
    pub points: Vec<Point>,
}

impl FigureData {
    pub fn compute(spec: FigureSpec, jobs: usize, max_electrons: usize) -> Self {
        let points = sweep(&spec.points(), jobs, max_electrons);
        FigureData { spec, points }
    }

    pub fn csv(&self) -> String {
        render_csv(&self.points, Units::Bits)
    }

    pub fn json(&self) -> String {
        super::output::render_json(&self.points)
    }

    /// Points of one curve that exist, as `(t, S_f in bits)`.
    fn curve(&self, family: Family, n: usize) -> Vec<(u32, f64)> {
        self.points
            .iter()
            .filter(|p| p.spec.family == family && p.spec.n == n)
            .filter_map(|p| p.result.as_ref().ok().map(|r| (p.spec.t(), r.measure_bits)))
            .collect()
    }

    /// `m` values of one curve whose wavefunction vanishes.
    fn absent(&self, family: Family, n: usize) -> Vec<u32> {
        self.points
            .iter()
            .filter(|p| p.spec.family == family && p.spec.n == n)
            .filter(|p| matches!(p.result, Err(StateError::ZeroWavefunction { .. })))
            .map(|p| p.spec.m)
            .collect()
    }

    pub fn svg(&self) -> String {
        render_svg(self)
    }
}

const WIDTH: f64 = 680.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 72.0;
const RIGHT: f64 = 190.0;
const TOP: f64 = 48.0;
const BOTTOM: f64 = 64.0;
const COLORS: [&str; 2] = ["#1f4e9c", "#c0392b"];

fn series_label(family: Family, n: usize) -> String {
    let name = match family {
        Family::Laughlin => "Laughlin ψ",
        Family::HierarchicalPhi => "hierarchical φ",
        Family::Chi => "χ",
    };
    format!("{name}, N = {n}")
}

/// Tick step from {1, 2, 5}·10^k giving at most about six ticks.
fn tick_step(span: f64) -> f64 {
    let raw = span / 6.0;
    let mag = 10f64.powf(raw.log10().floor());
    [1.0, 2.0, 5.0, 10.0].into_iter().map(|f| f * mag).find(|s| *s >= raw).unwrap_or(10.0 * mag)
}

fn marker(kind: usize, x: f64, y: f64, color: &str) -> String {
    if kind == 0 {
        format!(
            r#"<rect x="{:.2}" y="{:.2}" width="9" height="9" fill="none" stroke="{color}" stroke-width="1.6"/>"#,
            x - 4.5,
            y - 4.5
        )
    } else {
        format!(
            r#"<path d="M{:.2},{:.2} L{:.2},{:.2} M{:.2},{:.2} L{:.2},{:.2}" stroke="{color}" stroke-width="1.8"/>"#,
            x - 5.0, y - 5.0, x + 5.0, y + 5.0, x - 5.0, y + 5.0, x + 5.0, y - 5.0
        )
    }
}

fn render_svg(fig: &FigureData) -> String {
    let t_min = fig.spec.t_range.first().copied().unwrap_or(0) as f64;
    let t_max = fig.spec.t_range.last().copied().unwrap_or(0) as f64;
    let curves: Vec<_> = fig.spec.series.iter().map(|&(f, n)| ((f, n), fig.curve(f, n))).collect();
    let y_data_max = curves
        .iter()
        .flat_map(|(_, c)| c.iter().map(|&(_, y)| y))
        .fold(0.0f64, f64::max);
    let y_step = tick_step(y_data_max.max(1e-9));
    let y_max = ((y_data_max / y_step).floor() + 1.0) * y_step;

    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let sx = |t: f64| LEFT + (t - t_min + 0.5) / (t_max - t_min + 1.0) * plot_w;
    let sy = |y: f64| TOP + plot_h - y / y_max * plot_h;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="Helvetica, Arial, sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="14" font-weight="bold">Fig. {}: {}</text>"#,
        LEFT + plot_w / 2.0,
        fig.spec.id,
        fig.spec.title
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black" stroke-width="1"/>"#
    );

    for &t in &fig.spec.t_range {
        let x = sx(t as f64);
        let _ = writeln!(
            s,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{t}</text>"#,
            TOP + plot_h,
            TOP + plot_h + 5.0,
            TOP + plot_h + 19.0
        );
    }
    let ticks = (y_max / y_step).round() as usize;
    for k in 0..=ticks {
        let v = k as f64 * y_step;
        let y = sy(v);
        let label = format_sig(v, 3).trim_end_matches('0').trim_end_matches('.').to_string();
        let label = if label.is_empty() { "0".to_string() } else { label };
        let _ = writeln!(
            s,
            r##"<line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="black"/><line x1="{LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#dddddd"/><text x="{:.2}" y="{:.2}" text-anchor="end">{label}</text>"##,
            LEFT - 5.0,
            LEFT + plot_w,
            LEFT - 8.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">t = (m − 1)/2</text>"#,
        LEFT + plot_w / 2.0,
        HEIGHT - 18.0
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">S_f (units of ln 2 bits)</text>"#,
        TOP + plot_h / 2.0,
        TOP + plot_h / 2.0
    );

    let legend_x = LEFT + plot_w + 18.0;
    let mut legend_y = TOP + 12.0;
    for (k, ((family, n), curve)) in curves.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let _ = writeln!(s, r#"<g class="series" data-family="{family}" data-n="{n}">"#);
        for &(t, y) in curve {
            let _ = writeln!(s, "{}", marker(k, sx(t as f64), sy(y), color));
        }
        let _ = writeln!(s, "</g>");
        let _ = writeln!(
            s,
            r#"{}<text x="{:.2}" y="{:.2}">{}</text>"#,
            marker(k, legend_x + 5.0, legend_y, color),
            legend_x + 16.0,
            legend_y + 4.0,
            series_label(*family, *n)
        );
        legend_y += 20.0;
        let absent = fig.absent(*family, *n);
        if !absent.is_empty() {
            let ms: Vec<String> = absent.iter().map(u32::to_string).collect();
            let _ = writeln!(
                s,
                r#"<text x="{legend_x:.2}" y="{:.2}" font-size="11">no point at m = {}:</text><text x="{legend_x:.2}" y="{:.2}" font-size="11">wavefunction vanishes (m &gt; 2N+1)</text>"#,
                legend_y + 4.0,
                ms.join(", "),
                legend_y + 18.0
            );
            legend_y += 36.0;
        }
    }
    s.push_str("</svg>\n");
    s
}
