//! Newton diagrams of integer polynomials with respect to a prime.
//!
//! Each nonzero coefficient `a_i` contributes the vertex `(i, v_p(a_i))`. The
//! diagram is the lower convex hull of those vertices, walked from the initial
//! vertex `(0, v_p(a_0))` to the terminal vertex `(n, v_p(a_n))`: from the current
//! hull vertex, the next one is the vertex with the smallest slope, taking the
//! largest index on ties. Collinear interior vertices therefore sit strictly
//! inside a segment and are never endpoints.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::error::Error;
use crate::poly::{check_prime, valuation, IntegerPolynomial};
use crate::Result;

/// Point `(i, v_p(a_i))` of the diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DiagramVertex {
    pub index: usize,
    pub val: u64,
}

impl DiagramVertex {
    pub fn new(index: usize, val: u64) -> Self {
        DiagramVertex { index, val }
    }
}

impl fmt::Display for DiagramVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.index, self.val)
    }
}

/// One edge of the hull chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub start: DiagramVertex,
    pub end: DiagramVertex,
    /// `(end.val - start.val) / (end.index - start.index)`, reduced.
    pub slope: Ratio<i64>,
    /// Integer points on the closed segment, endpoints included.
    pub lattice_points: u64,
    pub simple: bool,
}

impl Segment {
    pub fn new(start: DiagramVertex, end: DiagramVertex) -> Self {
        assert!(start.index < end.index, "segment must run left to right");
        let di = (end.index - start.index) as i64;
        let dv = end.val as i64 - start.val as i64;
        let g = di.gcd(&dv.abs()) as u64;
        Segment {
            start,
            end,
            slope: Ratio::new(dv, di),
            lattice_points: g + 1,
            simple: g == 1,
        }
    }

    pub fn width(&self) -> usize {
        self.end.index - self.start.index
    }

    /// Integer points strictly between the endpoints, left to right.
    pub fn interior_lattice_points(&self) -> Vec<DiagramVertex> {
        let steps = self.lattice_points - 1;
        let di = (self.end.index - self.start.index) as u64 / steps;
        let dv = (self.end.val as i64 - self.start.val as i64) / steps as i64;
        (1..steps)
            .map(|t| {
                DiagramVertex::new(
                    self.start.index + (t * di) as usize,
                    (self.start.val as i64 + t as i64 * dv) as u64,
                )
            })
            .collect()
    }

    /// Sign of the vertex's position relative to the supporting line:
    /// `Less` below, `Equal` on, `Greater` above.
    pub fn side_of(&self, v: DiagramVertex) -> Ordering {
        side_of_line(self.start, self.end, v)
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.start, self.end)
    }
}

/// Where `v` lies relative to the line through `a` and `b` (`a.index < b.index`).
pub(crate) fn side_of_line(a: DiagramVertex, b: DiagramVertex, v: DiagramVertex) -> Ordering {
    // v.val vs a.val + (v.index - a.index) * (b.val - a.val) / (b.index - a.index),
    // scaled by the positive width.
    let width = (b.index - a.index) as i128;
    let lhs = (v.val as i128 - a.val as i128) * width;
    let rhs = (v.index as i128 - a.index as i128) * (b.val as i128 - a.val as i128);
    lhs.cmp(&rhs)
}

/// Is `s` free of interior lattice points.
pub fn is_simple(s: &Segment) -> bool {
    let di = (s.end.index - s.start.index) as u64;
    let dv = s.end.val.abs_diff(s.start.val);
    di.gcd(&dv) == 1
}

/// The Newton diagram of a polynomial with respect to `prime`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonDiagram {
    pub prime: u64,
    /// Every vertex, ascending by index.
    pub vertices: Vec<DiagramVertex>,
    /// Hull chain from the initial to the terminal vertex.
    pub segments: Vec<Segment>,
}

impl NewtonDiagram {
    pub fn degree(&self) -> usize {
        self.vertices.last().map_or(0, |v| v.index)
    }

    pub fn is_single_simple_segment(&self) -> bool {
        matches!(self.segments.as_slice(), [s] if s.simple)
    }

    /// Segment endpoints, in chain order.
    pub fn hull_vertices(&self) -> Vec<DiagramVertex> {
        let mut out: Vec<_> = self.segments.iter().map(|s| s.start).collect();
        out.extend(self.segments.last().map(|s| s.end));
        out
    }
}

/// One vertex `(i, v_p(a_i))` per nonzero coefficient.
pub fn build_vertices(f: &IntegerPolynomial, p: u64) -> Result<Vec<DiagramVertex>> {
    check_prime(p)?;
    f.positive_degree()?;
    if f.constant_term() == Default::default() {
        return Err(Error::ZeroConstantTerm);
    }
    let mut out = Vec::new();
    for (i, a) in f.coeffs().iter().enumerate() {
        if let Some(val) = valuation(a, p)?.finite() {
            out.push(DiagramVertex::new(i, val));
        }
    }
    Ok(out)
}

/// Lower hull chain of `vertices`, which must be strictly ascending by index.
/// Fewer than two vertices give an empty chain.
pub fn lower_hull(vertices: &[DiagramVertex]) -> Vec<Segment> {
    debug_assert!(vertices.windows(2).all(|w| w[0].index < w[1].index));
    let mut segments = Vec::new();
    let mut cur = 0;
    while cur + 1 < vertices.len() {
        let from = vertices[cur];
        let mut next = cur + 1;
        for j in cur + 2..vertices.len() {
            // Slope to j is no larger than slope to `next` iff j is on or below that line.
            if side_of_line(from, vertices[next], vertices[j]) != Ordering::Greater {
                next = j;
            }
        }
        segments.push(Segment::new(from, vertices[next]));
        cur = next;
    }
    debug_assert!(is_lower_hull(vertices, &segments));
    segments
}

/// Structural check of a hull chain: it spans the first to the last vertex,
/// consecutive segments share endpoints, slopes strictly increase and no vertex
/// lies below any supporting line.
pub fn is_lower_hull(vertices: &[DiagramVertex], segments: &[Segment]) -> bool {
    let (Some(first), Some(last)) = (vertices.first(), vertices.last()) else {
        return segments.is_empty();
    };
    let (Some(s0), Some(sl)) = (segments.first(), segments.last()) else {
        return vertices.len() < 2;
    };
    s0.start == *first
        && sl.end == *last
        && segments.windows(2).all(|w| w[0].end == w[1].start && w[0].slope < w[1].slope)
        && segments
            .iter()
            .all(|s| vertices.iter().all(|&v| s.side_of(v) != Ordering::Less))
}

pub fn build_diagram(f: &IntegerPolynomial, p: u64) -> Result<NewtonDiagram> {
    let vertices = build_vertices(f, p)?;
    let segments = lower_hull(&vertices);
    Ok(NewtonDiagram { prime: p, vertices, segments })
}
