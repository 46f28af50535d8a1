//! CSV, SVG and manifest writers. CSV is UTF-8 with a header row, LF line
//! endings and 15-significant-digit numbers; SVG output is a single polyline
//! per series and is not part of any golden comparison.

use serde::Serialize;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::parse::g15;

/// Grid specification `start:step:count`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GridSpec {
    pub start: f64,
    pub step: f64,
    pub count: usize,
}

impl GridSpec {
    pub fn parse(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("grid '{s}' is not start:step:count"));
        }
        let start: f64 = parts[0]
            .parse()
            .map_err(|_| format!("bad grid start '{}'", parts[0]))?;
        let step: f64 = parts[1]
            .parse()
            .map_err(|_| format!("bad grid step '{}'", parts[1]))?;
        let count: usize = parts[2]
            .parse()
            .map_err(|_| format!("bad grid count '{}'", parts[2]))?;
        if step <= 0.0 || count == 0 {
            return Err(format!("grid '{s}' needs a positive step and count"));
        }
        Ok(Self { start, step, count })
    }
}

/// Serializable mirror of the evaluation configuration.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConfigInfo {
    pub series_tol: f64,
    pub quad_points: usize,
    pub freq_cutoff: f64,
    pub lattice_k: usize,
}

impl From<qspline::time_domain::EvalConfig> for ConfigInfo {
    fn from(c: qspline::time_domain::EvalConfig) -> Self {
        Self {
            series_tol: c.series_tol,
            quad_points: c.quad_points,
            freq_cutoff: c.freq_cutoff,
            lattice_k: c.lattice_k,
        }
    }
}

/// Sidecar manifest written alongside every output set.
#[derive(Debug, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub orders: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub grid: Option<GridSpec>,
    pub config: ConfigInfo,
    pub outputs: Vec<String>,
    pub timing_seconds: f64,
}

impl RunManifest {
    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let json = serde_json::to_string_pretty(self).expect("manifest serializes");
        let mut f = std::fs::File::create(path)?;
        f.write_all(json.as_bytes())?;
        f.write_all(b"\n")
    }
}

/// Write one CSV table; `rows` supplies already-formatted cells.
pub fn write_csv(path: &Path, header: &[&str], rows: &[Vec<String>]) -> std::io::Result<()> {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    std::fs::write(path, out)
}

/// Minimal line plot: one polyline per (x, y) series.
pub fn write_svg(path: &Path, series: &[(String, Vec<(f64, f64)>)]) -> std::io::Result<()> {
    const W: f64 = 640.0;
    const H: f64 = 420.0;
    const PAD: f64 = 40.0;
    const COLORS: [&str; 7] = [
        "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf",
    ];

    let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for (_, pts) in series {
        for &(x, y) in pts {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
    }
    if !(x0.is_finite() && y0.is_finite()) || x1 <= x0 {
        x0 = 0.0;
        x1 = 1.0;
    }
    if y1 <= y0 {
        y1 = y0 + 1.0;
    }
    let sx = |x: f64| PAD + (x - x0) / (x1 - x0) * (W - 2.0 * PAD);
    let sy = |y: f64| H - PAD - (y - y0) / (y1 - y0) * (H - 2.0 * PAD);

    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" viewBox=\"0 0 {W} {H}\">\n"
    );
    svg.push_str(&format!(
        "  <rect width=\"{W}\" height=\"{H}\" fill=\"white\"/>\n"
    ));
    for (i, (label, pts)) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let points: Vec<String> = pts
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        svg.push_str(&format!(
            "  <polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"1.2\" points=\"{}\"><title>{label}</title></polyline>\n",
            points.join(" ")
        ));
    }
    svg.push_str("</svg>\n");
    std::fs::write(path, svg)
}

/// Path of the manifest sidecar for an output file or directory.
pub fn manifest_path(out: &Path) -> PathBuf {
    if out.is_dir() {
        out.join("figures.manifest.json")
    } else {
        let mut name = out.file_name().unwrap_or_default().to_os_string();
        name.push(".manifest.json");
        out.with_file_name(name)
    }
}

/// Format a real-quaternion sample row.
pub fn quat_row(x: f64, q: &qspline::Quaternion) -> Vec<String> {
    vec![
        g15(x),
        g15(q.a),
        g15(q.v1),
        g15(q.v2),
        g15(q.v3),
        g15(q.norm()),
    ]
}

/// Format a biquaternion sample row: real parts of the components plus the
/// full modulus.
pub fn biquat_row(x: f64, b: &qspline::Biquaternion) -> Vec<String> {
    vec![
        g15(x),
        g15(b.c0.re),
        g15(b.c1.re),
        g15(b.c2.re),
        g15(b.c3.re),
        g15(b.norm()),
    ]
}
