//! Lattice-path rendering: a unit-grid drawing of one monotone path, as
//! either a standalone SVG document or an ASCII grid.
//!
//! Both formats share the same geometry: origin at the bottom-left, one
//! grid cell per unit step, the path drawn as a single chain of unit moves,
//! and optional dashed vertical guides. No text labels are emitted, so the
//! output stays byte-stable.

use std::fmt::Write as _;

use pucks::lattice::LatticeSequence;
use pucks::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderFormat {
    Svg,
    Ascii,
}

/// Role of a vertical guide line, used only to pick its styling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MarkerRole {
    /// The distinguished statistics column; blue in SVG, `:` in ASCII.
    Eta,
    /// The rightmost-ascent column; red in SVG, `!` in ASCII.
    Gamma,
}

#[derive(Clone, Copy, Debug)]
pub struct Marker {
    pub x: usize,
    pub role: MarkerRole,
}

pub struct RenderSpec {
    pub sequence: LatticeSequence,
    pub markers: Vec<Marker>,
    pub format: RenderFormat,
    /// Pixel size of one grid cell in SVG output.
    pub cell: u32,
}

impl RenderSpec {
    /// Checks that every marker sits within `[0, width]`.
    pub fn validate(&self) -> Result<()> {
        let width = self.sequence.width();
        for marker in &self.markers {
            if marker.x > width {
                return Err(Error::Precondition(format!(
                    "marker position {} is outside [0, {width}]",
                    marker.x
                )));
            }
        }
        Ok(())
    }

    pub fn render(&self) -> Result<String> {
        self.validate()?;
        Ok(match self.format {
            RenderFormat::Svg => render_svg(self),
            RenderFormat::Ascii => render_ascii(self),
        })
    }
}

/// Vertices of the path, deduplicated: from (0, 0), climb to the height of
/// each horizontal step, take it, then climb to the final height.
fn path_vertices(sequence: &LatticeSequence) -> Vec<(usize, i64)> {
    let entries = sequence.entries();
    let width = sequence.width();
    let mut vertices = vec![(0usize, 0i64)];
    for x in 1..=width {
        push_vertex(&mut vertices, (x - 1, entries[x]));
        push_vertex(&mut vertices, (x, entries[x]));
    }
    push_vertex(&mut vertices, (width, sequence.height()));
    vertices
}

fn push_vertex(vertices: &mut Vec<(usize, i64)>, v: (usize, i64)) {
    if vertices.last() != Some(&v) {
        vertices.push(v);
    }
}

fn render_svg(spec: &RenderSpec) -> String {
    let width = spec.sequence.width() as u32;
    let height = spec.sequence.height() as u32;
    let cell = spec.cell;
    let margin = cell;
    let view_w = width * cell + 2 * margin;
    let view_h = height * cell + 2 * margin;
    let px = |x: u32| margin + x * cell;
    let py = |y: u32| margin + (height - y) * cell;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{view_w}" height="{view_h}" viewBox="0 0 {view_w} {view_h}">"#
    );
    for x in 0..=width {
        let _ = writeln!(
            svg,
            r##"  <line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="#cccccc" stroke-width="1"/>"##,
            px(x),
            py(height),
            py(0)
        );
    }
    for y in 0..=height {
        let _ = writeln!(
            svg,
            r##"  <line x1="{0}" y1="{2}" x2="{1}" y2="{2}" stroke="#cccccc" stroke-width="1"/>"##,
            px(0),
            px(width),
            py(y)
        );
    }
    for marker in &spec.markers {
        let color = match marker.role {
            MarkerRole::Eta => "#4477cc",
            MarkerRole::Gamma => "#cc4444",
        };
        let _ = writeln!(
            svg,
            r#"  <line x1="{0}" y1="{1}" x2="{0}" y2="{2}" stroke="{color}" stroke-width="2" stroke-dasharray="6,4"/>"#,
            px(marker.x as u32),
            py(height),
            py(0)
        );
    }
    let points: Vec<String> = path_vertices(&spec.sequence)
        .into_iter()
        .map(|(x, y)| format!("{},{}", px(x as u32), py(y as u32)))
        .collect();
    let _ = writeln!(
        svg,
        r##"  <polyline points="{}" fill="none" stroke="#000000" stroke-width="3"/>"##,
        points.join(" ")
    );
    svg.push_str("</svg>\n");
    svg
}

fn render_ascii(spec: &RenderSpec) -> String {
    let width = spec.sequence.width();
    let height = spec.sequence.height() as usize;
    let rows = 2 * height + 1;
    let cols = 2 * width + 1;
    let mut canvas = vec![vec![' '; cols]; rows];

    // Grid points on even/even coordinates; row 0 is the top of the grid.
    for y in 0..=height {
        for x in 0..=width {
            canvas[2 * (height - y)][2 * x] = '.';
        }
    }
    for marker in &spec.markers {
        let ch = match marker.role {
            MarkerRole::Eta => ':',
            MarkerRole::Gamma => '!',
        };
        for row in canvas.iter_mut() {
            row[2 * marker.x] = ch;
        }
    }
    let vertices = path_vertices(&spec.sequence);
    for pair in vertices.windows(2) {
        let (x0, y0) = pair[0];
        let (x1, y1) = pair[1];
        if y0 == y1 {
            let row = 2 * (height - y0 as usize);
            canvas[row][2 * x0] = '*';
            canvas[row][2 * x0 + 1] = '-';
            canvas[row][2 * x1] = '*';
        } else {
            let col = 2 * x0;
            for y in y0 as usize..y1 as usize {
                canvas[2 * (height - y)][col] = '*';
                canvas[2 * (height - y) - 1][col] = '|';
                canvas[2 * (height - y - 1)][col] = '*';
            }
        }
    }

    let mut out = String::new();
    for row in canvas {
        let line: String = row.into_iter().collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
