//! Check reports: what `check` prints, in text or JSON.

use std::fmt::Write as _;

use irreducible_core::newton::NewtonDiagram;
use irreducible_core::{CriterionVerdict, IntegerPolynomial, VerificationOutcome};
use serde::{Deserialize, Serialize};

/// Stable JSON view of a [`CriterionVerdict`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub verdict: String,
    pub criterion: Option<String>,
    pub prime: Option<u64>,
    pub k: Option<u32>,
    pub shift: i64,
    pub half_degree: Option<usize>,
    pub reason: Option<String>,
}

impl From<&CriterionVerdict> for VerdictJson {
    fn from(v: &CriterionVerdict) -> Self {
        VerdictJson {
            verdict: v.kind.name().to_owned(),
            criterion: v.criterion.map(|c| c.name().to_owned()),
            prime: v.witness_prime,
            k: v.k,
            shift: v.shift,
            half_degree: v.half_degree,
            reason: v.reason.as_ref().map(ToString::to_string),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentJson {
    pub start: (usize, u64),
    pub end: (usize, u64),
    pub slope: String,
    pub lattice_points: u64,
    pub simple: bool,
    pub interior: Vec<(usize, u64)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub prime: u64,
    pub vertices: Vec<(usize, u64)>,
    pub segments: Vec<SegmentJson>,
}

impl From<&NewtonDiagram> for DiagramJson {
    fn from(d: &NewtonDiagram) -> Self {
        DiagramJson {
            prime: d.prime,
            vertices: d.vertices.iter().map(|v| (v.index, v.val)).collect(),
            segments: d
                .segments
                .iter()
                .map(|s| SegmentJson {
                    start: (s.start.index, s.start.val),
                    end: (s.end.index, s.end.val),
                    slope: s.slope.to_string(),
                    lattice_points: s.lattice_points,
                    simple: s.simple,
                    interior: s.interior_lattice_points().iter().map(|v| (v.index, v.val)).collect(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleJson {
    pub outcome: String,
    pub detail: Option<String>,
}

impl From<&VerificationOutcome> for OracleJson {
    fn from(o: &VerificationOutcome) -> Self {
        let detail = match o {
            VerificationOutcome::Consistent => None,
            VerificationOutcome::Contradiction(d) | VerificationOutcome::OracleInapplicable(d) => {
                Some(d.clone())
            }
        };
        OracleJson { outcome: o.name().to_owned(), detail }
    }
}

/// Everything `check` reports about one input.
#[derive(Debug, Clone)]
pub struct CheckOutput {
    pub source: String,
    /// Polynomial the criteria ran on (after `--strip-x`).
    pub polynomial: IntegerPolynomial,
    pub stripped_x: usize,
    pub mode: &'static str,
    pub verdict: CriterionVerdict,
    pub attempts: Vec<CriterionVerdict>,
    pub diagram: Option<NewtonDiagram>,
    pub oracle: Option<VerificationOutcome>,
    pub prime_search_incomplete: Vec<i64>,
    pub elapsed_ms: f64,
}

impl CheckOutput {
    /// `3` when verification contradicted the verdict, else `0`.
    pub fn exit_code(&self) -> i32 {
        match &self.oracle {
            Some(o) if o.is_contradiction() => crate::EXIT_CONTRADICTION,
            _ => crate::EXIT_OK,
        }
    }

    pub fn to_json(&self) -> ReportJson {
        ReportJson {
            input: self.source.clone(),
            coefficients: self.polynomial.coeffs().iter().map(ToString::to_string).collect(),
            stripped_x: self.stripped_x,
            mode: self.mode.to_owned(),
            verdict: VerdictJson::from(&self.verdict),
            attempts: self.attempts.iter().map(VerdictJson::from).collect(),
            diagram: self.diagram.as_ref().map(DiagramJson::from),
            oracle: self.oracle.as_ref().map(OracleJson::from),
            prime_search_incomplete: self.prime_search_incomplete.clone(),
            timing_ms: self.elapsed_ms,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "input: {}", self.source.trim());
        let _ = writeln!(out, "polynomial: {}", self.polynomial);
        if self.stripped_x > 0 {
            let _ = writeln!(out, "stripped: x^{}", self.stripped_x);
        }
        let _ = writeln!(out, "mode: {}", self.mode);
        let _ = writeln!(out, "attempts:");
        for a in &self.attempts {
            let _ = writeln!(out, "  {a}");
        }
        if let Some(d) = &self.diagram {
            let _ = writeln!(out, "diagram at p = {}:", d.prime);
            for s in &d.segments {
                let _ = writeln!(out, "  {}", crate::render::segment_line(s));
            }
        }
        if !self.prime_search_incomplete.is_empty() {
            let _ = writeln!(
                out,
                "note: candidate prime search incomplete for shifts {:?}",
                self.prime_search_incomplete
            );
        }
        let _ = writeln!(out, "verdict: {}", self.verdict);
        if let Some(o) = &self.oracle {
            let _ = writeln!(out, "oracle: {o}");
        }
        let _ = writeln!(out, "time: {:.3} ms", self.elapsed_ms);
        out
    }
}

/// Single JSON document printed by `check --json`. `verdict` fields are
/// flattened to the top level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub input: String,
    pub coefficients: Vec<String>,
    pub stripped_x: usize,
    pub mode: String,
    #[serde(flatten)]
    pub verdict: VerdictJson,
    pub attempts: Vec<VerdictJson>,
    pub diagram: Option<DiagramJson>,
    pub oracle: Option<OracleJson>,
    pub prime_search_incomplete: Vec<i64>,
    pub timing_ms: f64,
}
