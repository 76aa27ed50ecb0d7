//! Per-axiom check reports and the exhaustive basis-tuple engine behind them.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::linalg::{is_zero_vector, Vector};
use crate::scalar::Scalar;

/// Outcome of one identity over every basis tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult<S> {
    pub axiom: String,
    pub pass: bool,
    /// Lexicographically first failing tuple, 1-based.
    pub witness: Option<Vec<usize>>,
    /// Residual (lhs − rhs) at the witness.
    pub residual: Option<Vector<S>>,
    pub violations: usize,
}

impl<S: Scalar> AxiomResult<S> {
    pub fn passed(axiom: impl Into<String>) -> Self {
        AxiomResult {
            axiom: axiom.into(),
            pass: true,
            witness: None,
            residual: None,
            violations: 0,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "axiom": self.axiom,
            "pass": self.pass,
            "witness": self.witness,
            "violations": self.violations,
            "residual": self
                .residual
                .as_ref()
                .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>()),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport<S> {
    pub subject: String,
    pub results: Vec<AxiomResult<S>>,
}

impl<S: Scalar> CheckReport<S> {
    pub fn new(subject: impl Into<String>) -> Self {
        CheckReport {
            subject: subject.into(),
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, r: AxiomResult<S>) {
        self.results.push(r);
    }

    pub fn extend(&mut self, other: CheckReport<S>) {
        self.results.extend(other.results);
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn get(&self, axiom: &str) -> Option<&AxiomResult<S>> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn first_failure(&self) -> Option<&AxiomResult<S>> {
        self.results.iter().find(|r| !r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult<S>> {
        self.results.iter().filter(|r| !r.pass)
    }

    pub fn total_violations(&self) -> usize {
        self.results.iter().map(|r| r.violations).sum()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "subject": self.subject,
            "pass": self.passed(),
            "axioms": self.results.iter().map(AxiomResult::to_json).collect::<Vec<_>>(),
        })
    }

    /// One line per axiom, for terminals.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: {}\n", self.subject, if self.passed() { "PASS" } else { "FAIL" });
        for r in &self.results {
            match &r.witness {
                None => out.push_str(&format!("  {:<12} pass\n", r.axiom)),
                Some(w) => {
                    let w: Vec<String> = w.iter().map(ToString::to_string).collect();
                    let res: Vec<String> = r
                        .residual
                        .as_ref()
                        .map(|v| v.iter().map(ToString::to_string).collect())
                        .unwrap_or_default();
                    out.push_str(&format!(
                        "  {:<12} FAIL  violations={} witness=({}) residual=[{}]\n",
                        r.axiom,
                        r.violations,
                        w.join(","),
                        res.join(" ")
                    ));
                }
            }
        }
        out
    }
}

fn next_tuple(t: &mut [usize], dims: &[usize]) -> bool {
    for pos in (0..t.len()).rev() {
        t[pos] += 1;
        if t[pos] < dims[pos] {
            return true;
        }
        t[pos] = 0;
    }
    false
}

/// Evaluates `residual` on every index tuple in `dims` (0-based) and records
/// the lexicographically first nonzero one. Parallel over the first index;
/// the result does not depend on scheduling.
pub fn check_indexed<S, F>(axiom: &str, dims: &[usize], residual: F) -> AxiomResult<S>
where
    S: Scalar,
    F: Fn(&[usize]) -> Vector<S> + Sync,
{
    if dims.is_empty() || dims.contains(&0) {
        return AxiomResult::passed(axiom);
    }
    let rest = &dims[1..];
    type Partial<S> = (usize, Option<(Vec<usize>, Vector<S>)>);
    let per_first: Vec<Partial<S>> = (0..dims[0])
        .into_par_iter()
        .map(|i| {
            let mut count = 0;
            let mut first = None;
            let mut tail = vec![0; rest.len()];
            let mut t = Vec::with_capacity(dims.len());
            loop {
                t.clear();
                t.push(i);
                t.extend_from_slice(&tail);
                let r = residual(&t);
                if !is_zero_vector(&r) {
                    count += 1;
                    if first.is_none() {
                        first = Some((t.clone(), r));
                    }
                }
                if !next_tuple(&mut tail, rest) {
                    break;
                }
            }
            (count, first)
        })
        .collect();
    let violations = per_first.iter().map(|p| p.0).sum();
    let first = per_first.into_iter().find_map(|p| p.1);
    match first {
        None => AxiomResult::passed(axiom),
        Some((w, r)) => AxiomResult {
            axiom: axiom.to_string(),
            pass: false,
            witness: Some(w.into_iter().map(|i| i + 1).collect()),
            residual: Some(r),
            violations,
        },
    }
}

/// Like [`check_indexed`] but only over tuples accepted by `filter`.
pub fn check_indexed_filtered<S, P, F>(axiom: &str, dims: &[usize], filter: P, residual: F) -> AxiomResult<S>
where
    S: Scalar,
    P: Fn(&[usize]) -> bool + Sync,
    F: Fn(&[usize]) -> Vector<S> + Sync,
{
    check_indexed(axiom, dims, |t| if filter(t) { residual(t) } else { Vec::new() })
}
