//! JSON-lines regression corpus.
//!
//! Each non-blank line not starting with `#` is an object
//! `{"poly": "...", "expect": {"verdict": "...", "criterion": "...", "prime": p}, "note": "..."}`.
//! `criterion` and `prime` are optional. Every entry runs through the automatic
//! search with default settings.

use std::io::Write;

use irreducible_core::{auto_check, verify_verdict, AutoConfig, OracleLimits, VerificationOutcome};
use serde::Deserialize;

use crate::parse::parse_polynomial;
use crate::{CorpusArgs, Failure, EXIT_CONTRADICTION, EXIT_CORPUS_MISMATCH, EXIT_OK};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectation {
    pub verdict: String,
    #[serde(default)]
    pub criterion: Option<String>,
    #[serde(default)]
    pub prime: Option<u64>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub poly: String,
    pub expect: Expectation,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct CorpusSummary {
    pub passed: usize,
    pub mismatched: usize,
    pub contradictions: usize,
}

impl CorpusSummary {
    pub fn exit_code(&self) -> i32 {
        if self.contradictions > 0 {
            EXIT_CONTRADICTION
        } else if self.mismatched > 0 {
            EXIT_CORPUS_MISMATCH
        } else {
            EXIT_OK
        }
    }
}

/// Runs one entry, returning `None` on success or a failure description, and
/// whether the oracle contradicted the verdict.
fn run_entry(entry: &CorpusEntry, verify: bool) -> (Option<String>, bool) {
    let f = match parse_polynomial(&entry.poly) {
        Ok(f) => f,
        Err(e) => return (Some(e.to_string()), false),
    };
    let report = match auto_check(&f, &AutoConfig::default()) {
        Ok(r) => r,
        Err(e) => return (Some(e.to_string()), false),
    };
    let v = &report.verdict;
    let mut problems = Vec::new();
    if v.kind.name() != entry.expect.verdict {
        problems.push(format!("verdict {} (expected {})", v.kind.name(), entry.expect.verdict));
    }
    if let Some(c) = &entry.expect.criterion {
        let got = v.criterion.map_or("none", |c| c.name());
        if got != c {
            problems.push(format!("criterion {got} (expected {c})"));
        }
    }
    if let Some(p) = entry.expect.prime {
        if v.witness_prime != Some(p) {
            problems.push(format!("prime {:?} (expected {p})", v.witness_prime));
        }
    }
    let mut contradiction = false;
    if verify {
        if let VerificationOutcome::Contradiction(d) = verify_verdict(&f, v, &OracleLimits::default()) {
            problems.push(format!("oracle contradiction: {d}"));
            contradiction = true;
        }
    }
    let outcome = (!problems.is_empty()).then(|| format!("{}: got {}", problems.join("; "), v));
    (outcome, contradiction)
}

/// Runs every entry of `text`, writing one line per entry to `out`.
pub fn run_text(text: &str, verify: bool, out: &mut dyn Write) -> CorpusSummary {
    let mut summary = CorpusSummary::default();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (failure, contradiction, label) = match serde_json::from_str::<CorpusEntry>(line) {
            Ok(entry) => {
                let (failure, contradiction) = run_entry(&entry, verify);
                (failure, contradiction, entry.poly)
            }
            Err(e) => (Some(format!("bad corpus line: {e}")), false, line.to_owned()),
        };
        match failure {
            None => {
                summary.passed += 1;
                let _ = writeln!(out, "ok   line {}: {label}", lineno + 1);
            }
            Some(why) => {
                if contradiction {
                    summary.contradictions += 1;
                } else {
                    summary.mismatched += 1;
                }
                let _ = writeln!(out, "FAIL line {}: {label}: {why}", lineno + 1);
            }
        }
    }
    let _ = writeln!(
        out,
        "{} passed, {} mismatched, {} contradictions",
        summary.passed, summary.mismatched, summary.contradictions
    );
    summary
}

pub(crate) fn run_corpus(a: &CorpusArgs, out: &mut dyn Write) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(&a.file)
        .map_err(|e| Failure::usage(format!("cannot read {}: {e}", a.file.display())))?;
    Ok(run_text(&text, a.verify, out).exit_code())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mixed_corpus() {
        let text = r#"
# comment
{"poly": "x^4 + 12", "expect": {"verdict": "irreducible", "criterion": "eisenstein", "prime": 3}}
{"poly": "x^2 - 1", "expect": {"verdict": "irreducible"}, "note": "wrong on purpose"}
not json
"#;
        let mut out = Vec::new();
        let s = run_text(text, true, &mut out);
        let out = String::from_utf8(out).unwrap();
        assert_eq!(s, CorpusSummary { passed: 1, mismatched: 2, contradictions: 0 });
        assert_eq!(s.exit_code(), EXIT_CORPUS_MISMATCH);
        assert!(out.contains("ok   line 3: x^4 + 12"));
        assert!(out.contains("FAIL line 4"));
        assert!(out.contains("FAIL line 5: not json: bad corpus line"));
    }
}
