//! Text and SVG renderings of a Newton diagram.

use std::collections::HashSet;
use std::fmt::Write as _;

use irreducible_core::{DiagramVertex, NewtonDiagram, Segment};

/// Grids larger than this are replaced by the segment listing alone.
const MAX_GRID_COLUMNS: usize = 120;
const MAX_GRID_ROWS: u64 = 60;

pub fn segment_line(s: &Segment) -> String {
    let interior = s.interior_lattice_points();
    let mut line = format!(
        "segment {} -> {}: slope {}, {} lattice points, {}",
        s.start,
        s.end,
        s.slope,
        s.lattice_points,
        if s.simple { "simple" } else { "not simple" }
    );
    if !interior.is_empty() {
        let pts: Vec<String> = interior.iter().map(ToString::to_string).collect();
        let _ = write!(line, ", contains {}", pts.join(" "));
    }
    line
}

/// ASCII plot with the index on the horizontal axis and the valuation on the
/// vertical one. `O` hull vertex, `o` vertex above the hull, `*` vertex lying
/// inside a hull segment, `+` other lattice point on the hull, `.` empty.
pub fn ascii(d: &NewtonDiagram) -> String {
    let mut out = String::new();
    let n = d.degree();
    let top = d.vertices.iter().map(|v| v.val).max().unwrap_or(0);
    let hull: HashSet<DiagramVertex> = d.hull_vertices().into_iter().collect();
    let on_segment: HashSet<DiagramVertex> =
        d.segments.iter().flat_map(Segment::interior_lattice_points).collect();
    let vertices: HashSet<DiagramVertex> = d.vertices.iter().copied().collect();

    if n < MAX_GRID_COLUMNS && top < MAX_GRID_ROWS {
        let cell = n.to_string().len() + 1;
        let label = top.to_string().len();
        for y in (0..=top).rev() {
            let _ = write!(out, "{y:>label$} |");
            for x in 0..=n {
                let v = DiagramVertex::new(x, y);
                let mark = if hull.contains(&v) {
                    'O'
                } else if vertices.contains(&v) && on_segment.contains(&v) {
                    '*'
                } else if vertices.contains(&v) {
                    'o'
                } else if on_segment.contains(&v) {
                    '+'
                } else {
                    '.'
                };
                let _ = write!(out, "{mark:>cell$}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{:>label$} +{}", "", "-".repeat(cell * (n + 1)));
        let _ = write!(out, "{:>label$}  ", "");
        for x in 0..=n {
            let _ = write!(out, "{x:>cell$}");
        }
        out.push('\n');
    } else {
        out.push_str("(grid omitted: diagram too large)\n");
    }
    for s in &d.segments {
        out.push_str(&segment_line(s));
        out.push('\n');
    }
    out
}

pub fn svg(d: &NewtonDiagram) -> String {
    const SCALE: f64 = 40.0;
    const MARGIN: f64 = 30.0;
    let n = d.degree() as f64;
    let top = d.vertices.iter().map(|v| v.val).max().unwrap_or(0) as f64;
    let width = n * SCALE + 2.0 * MARGIN;
    let height = top * SCALE + 2.0 * MARGIN;
    let px = |v: &DiagramVertex| (MARGIN + v.index as f64 * SCALE, MARGIN + (top - v.val as f64) * SCALE);

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"  <title>Newton diagram at p = {}</title>"#, d.prime);
    let (x0, y0) = (MARGIN, MARGIN + top * SCALE);
    let _ = writeln!(
        out,
        r##"  <path d="M {x0} {y0} H {} M {x0} {y0} V {MARGIN}" stroke="#999" fill="none"/>"##,
        x0 + n * SCALE
    );
    let points: Vec<String> = d
        .hull_vertices()
        .iter()
        .map(|v| {
            let (x, y) = px(v);
            format!("{x},{y}")
        })
        .collect();
    let _ = writeln!(
        out,
        r##"  <polyline points="{}" stroke="#1f4e9c" stroke-width="2" fill="none"/>"##,
        points.join(" ")
    );
    for s in &d.segments {
        for v in s.interior_lattice_points() {
            let (x, y) = px(&v);
            let _ = writeln!(
                out,
                r##"  <rect x="{}" y="{}" width="8" height="8" fill="#c0392b"><title>lattice point {v}</title></rect>"##,
                x - 4.0,
                y - 4.0
            );
        }
    }
    for v in &d.vertices {
        let (x, y) = px(v);
        let _ = writeln!(out, r##"  <circle cx="{x}" cy="{y}" r="4" fill="#222"><title>{v}</title></circle>"##);
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use irreducible_core::{build_diagram, IntegerPolynomial};

    #[test]
    fn x4_plus_12_at_two() {
        let d = build_diagram(&IntegerPolynomial::from_i64s(&[12, 0, 0, 0, 1]), 2).unwrap();
        let text = ascii(&d);
        let expected = "\
2 | O . . . .
1 | . . + . .
0 | . . . . O
  +----------
    0 1 2 3 4
segment (0,2) -> (4,0): slope -1/2, 3 lattice points, not simple, contains (2,1)
";
        assert_eq!(text, expected);
        let s = svg(&d);
        assert!(s.starts_with("<svg"));
        assert!(s.contains("lattice point (2,1)"));
        assert_eq!(s.matches("<circle").count(), 2);
    }

    #[test]
    fn collinear_vertex_marked() {
        let d = build_diagram(&IntegerPolynomial::from_i64s(&[4, 2, 1]), 2).unwrap();
        assert!(ascii(&d).contains("1 | . * ."));
    }
}
