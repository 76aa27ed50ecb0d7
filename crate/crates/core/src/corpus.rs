//! Low-dimensional classification tables as data, and a deterministic
//! verification report over them.
//!
//! Entries are transcribed as printed. Unlisted products and map images are
//! zero. Dimension-4 structure maps do not all commute; those entries are
//! built with [`Dialgebra::new_unchecked`] so the `commute` failure shows up
//! in the report instead of at construction.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::cohomology::{cohomology_dims, BiHomModule};
use crate::derivation::derivation_dim;
use crate::dialgebra::{check_axioms, check_multiplicative, is_regular, Dialgebra};
use crate::error::{Error, Result};
use crate::format::write_dialgebra;
use crate::linalg::{Matrix, Tensor3};
use crate::scalar::{qi, Scalar, Q};

/// Report layout version.
pub const REPORT_SCHEMA: u32 = 1;

/// `(i, j, value)` with `value` a linear combination such as `a*e1`,
/// `e1+e4`, `-2a*e4`.
type Row = (usize, usize, &'static str);
/// `(j, value)`: image of `e_j`.
type Image = (usize, &'static str);

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub id: &'static str,
    pub dim: usize,
    pub params: &'static [&'static str],
    left: &'static [Row],
    right: &'static [Row],
    alpha: &'static [Image],
    beta: &'static [Image],
    /// Transcription remarks, empty when the table reads cleanly.
    pub notes: &'static [&'static str],
}

const fn entry(
    id: &'static str,
    dim: usize,
    params: &'static [&'static str],
    left: &'static [Row],
    right: &'static [Row],
    alpha: &'static [Image],
    beta: &'static [Image],
) -> CorpusEntry {
    CorpusEntry {
        id,
        dim,
        params,
        left,
        right,
        alpha,
        beta,
        notes: &[],
    }
}

const fn noted(e: CorpusEntry, notes: &'static [&'static str]) -> CorpusEntry {
    CorpusEntry { notes, ..e }
}

const D2_MAPS: &[Image] = &[(2, "e1")];
const D3_ALPHA: &[Image] = &[(2, "e1")];
const D3_BETA: &[Image] = &[(2, "e1"), (3, "b*e3")];
const SHIFT: &[Image] = &[(2, "e1"), (3, "e2"), (4, "e3")];
const UNIPOTENT: &[Image] = &[(1, "e1"), (2, "e1+e2"), (3, "e2+e3"), (4, "e3+e4")];
const D4_9_ALPHA: &[Image] = &[(2, "e1"), (3, "e2"), (4, "e4")];
const D4_9_BETA: &[Image] = &[(3, "e3"), (4, "e4")];

static ENTRIES: [CorpusEntry; 26] = [
    entry("dim1/trivial", 1, &[], &[], &[], &[], &[]),
    entry(
        "dim2/Alg1",
        2,
        &["a", "b", "c", "d", "f"],
        &[(1, 2, "a*e1"), (2, 1, "b*e1")],
        &[(1, 2, "c*e1"), (2, 1, "d*e1"), (2, 2, "f*e1")],
        D2_MAPS,
        D2_MAPS,
    ),
    entry(
        "dim2/Alg2",
        2,
        &["a"],
        &[(1, 2, "a*e1"), (2, 1, "a*e1"), (2, 2, "e1")],
        &[(1, 2, "e1"), (2, 1, "e1")],
        D2_MAPS,
        D2_MAPS,
    ),
    entry(
        "dim2/Alg3",
        2,
        &["a", "b", "c", "d"],
        &[(1, 2, "a*e1")],
        &[(1, 2, "b*e1"), (2, 1, "c*e1"), (2, 2, "d*e1")],
        D2_MAPS,
        D2_MAPS,
    ),
    entry(
        "dim2/Alg4",
        2,
        &["a", "b", "c", "d"],
        &[(1, 2, "e1"), (2, 1, "e1"), (2, 2, "a*e1")],
        &[(1, 2, "b*e1"), (2, 1, "c*e1"), (2, 2, "d*e1")],
        D2_MAPS,
        D2_MAPS,
    ),
    entry(
        "dim3/Alg1",
        3,
        &["a", "b", "c", "d", "f"],
        &[(1, 2, "e1"), (2, 1, "e1"), (2, 2, "a*e1"), (2, 3, "b*e1"), (3, 2, "c*e1")],
        &[(2, 1, "e1"), (2, 2, "d*e1"), (3, 2, "f*e1")],
        D3_ALPHA,
        D3_BETA,
    ),
    entry(
        "dim3/Alg2",
        3,
        &["b"],
        &[(1, 2, "e1"), (2, 1, "e1"), (2, 2, "e1"), (2, 3, "e1"), (3, 2, "e1")],
        &[(1, 2, "e1"), (2, 1, "e1"), (2, 2, "e1"), (3, 2, "e1")],
        D3_ALPHA,
        D3_BETA,
    ),
    noted(
        entry(
            "dim3/Alg3",
            3,
            &["b"],
            &[(1, 2, "e1"), (2, 1, "e1"), (2, 2, "e1"), (2, 3, "e1"), (3, 2, "e1")],
            &[(1, 2, "e1"), (2, 2, "e1"), (2, 3, "e1"), (3, 2, "e1")],
            D3_ALPHA,
            D3_BETA,
        ),
        &["e2⊣e1 is printed with a truncated index (\"e_\"); read as e1"],
    ),
    entry(
        "dim3/Alg4",
        3,
        &["b"],
        &[(1, 2, "e1"), (2, 1, "e1"), (2, 2, "e1"), (2, 3, "e1")],
        &[(1, 2, "e1"), (2, 1, "e1"), (2, 2, "e1"), (2, 3, "e1"), (3, 2, "e1")],
        D3_ALPHA,
        D3_BETA,
    ),
    entry(
        "dim3/Alg5",
        3,
        &["b"],
        &[(1, 2, "e1"), (2, 1, "e1"), (2, 2, "e1"), (2, 3, "e1")],
        &[(1, 2, "e1"), (2, 1, "e1"), (2, 3, "e1"), (3, 2, "e1")],
        D3_ALPHA,
        D3_BETA,
    ),
    entry(
        "dim4/Alg1",
        4,
        &["b", "c", "d"],
        &[(2, 1, "e4"), (2, 3, "e4"), (3, 1, "e4"), (3, 2, "e4"), (4, 4, "e4")],
        &[(1, 2, "e4"), (2, 2, "c*e4"), (3, 3, "e4"), (3, 4, "d*e3")],
        &[(2, "b*e2")],
        SHIFT,
    ),
    entry(
        "dim4/Alg2",
        4,
        &["a", "b", "c", "d", "f"],
        &[(1, 2, "e4"), (1, 4, "e4"), (2, 1, "a*e4"), (2, 3, "b*e4"), (3, 1, "-c*e4"), (3, 2, "e4")],
        &[(1, 2, "e4"), (2, 2, "d*e4"), (3, 3, "f*e4"), (3, 4, "e4"), (4, 4, "e4")],
        &[(2, "e2")],
        SHIFT,
    ),
    entry(
        "dim4/Alg3",
        4,
        &["b", "c", "d"],
        &[(1, 4, "e4"), (2, 1, "e4"), (2, 2, "e4"), (2, 3, "b*e4"), (3, 1, "c*e4"), (3, 2, "e4")],
        &[(1, 2, "e4"), (2, 2, "e4"), (3, 2, "c*e4"), (3, 3, "d*e4"), (4, 4, "e4")],
        &[(2, "e2"), (3, "e3")],
        SHIFT,
    ),
    entry(
        "dim4/Alg4",
        4,
        &["a", "c"],
        &[(1, 4, "e4"), (2, 2, "a*e4"), (2, 3, "e4"), (3, 1, "e4"), (3, 2, "c*e4"), (3, 3, "e4")],
        &[(1, 2, "e4"), (2, 2, "e4"), (3, 3, "e4"), (4, 4, "e4")],
        &[(2, "e2"), (3, "e3")],
        SHIFT,
    ),
    noted(
        entry(
            "dim4/Alg5",
            4,
            &[],
            &[(1, 4, "e4"), (2, 2, "e4"), (2, 3, "e4"), (3, 4, "e4"), (3, 2, "e4"), (3, 3, "e4")],
            &[(1, 3, "e4"), (2, 2, "e4"), (3, 3, "e4")],
            &[(2, "e2"), (4, "e4")],
            SHIFT,
        ),
        &["e3⊣e4=e4 is listed twice; transcribed once"],
    ),
    entry(
        "dim4/Alg6",
        4,
        &[],
        &[(2, 2, "e4"), (2, 3, "e4"), (3, 2, "e4"), (3, 3, "e4"), (3, 4, "e4")],
        &[(1, 3, "e4"), (1, 4, "e4"), (2, 2, "e4"), (3, 1, "e4"), (3, 3, "e4")],
        &[(2, "e2"), (4, "e4")],
        SHIFT,
    ),
    entry(
        "dim4/Alg7",
        4,
        &["f", "g", "h", "k"],
        &[(1, 2, "e4"), (1, 4, "e4"), (2, 2, "e4"), (2, 4, "f*e4"), (3, 3, "-g*e4")],
        &[(1, 4, "e4"), (2, 2, "e4"), (2, 3, "e4"), (3, 1, "e4"), (3, 2, "-h*e4"), (3, 3, "k*e4")],
        &[(3, "e3"), (4, "e4")],
        SHIFT,
    ),
    entry(
        "dim4/Alg8",
        4,
        &[],
        &[(1, 3, "e4"), (1, 4, "e4"), (2, 2, "e4"), (2, 4, "e4"), (3, 3, "e4")],
        &[(1, 3, "e4"), (3, 1, "e4"), (3, 2, "e4"), (3, 3, "e4")],
        &[(3, "e3"), (4, "e4")],
        SHIFT,
    ),
    entry(
        "dim4/Alg9",
        4,
        &[],
        &[(2, 2, "e1+e4"), (2, 3, "e1+e4"), (3, 2, "e1+e4"), (4, 2, "e1+e4")],
        &[(1, 2, "-e1+e4"), (2, 2, "e1"), (3, 3, "e1+e4"), (4, 2, "e1+e4")],
        D4_9_ALPHA,
        D4_9_BETA,
    ),
    entry(
        "dim4/Alg10",
        4,
        &[],
        &[(1, 2, "e4"), (2, 2, "e1+e4"), (2, 3, "e4"), (3, 2, "e1"), (3, 3, "e4"), (4, 2, "e4")],
        &[(1, 2, "e4"), (2, 2, "e1"), (3, 3, "e1+e4"), (4, 2, "e1+e4")],
        D4_9_ALPHA,
        D4_9_BETA,
    ),
    entry(
        "dim4/Alg11",
        4,
        &["f", "g", "h", "k"],
        &[(2, 2, "f*e1+g*e4"), (2, 3, "e4"), (3, 2, "e1+e4"), (3, 3, "e4"), (4, 2, "e4")],
        &[(1, 2, "e4"), (2, 2, "h*e1-k*e4"), (3, 3, "e1+e4"), (4, 2, "e1+e4")],
        D4_9_ALPHA,
        D4_9_BETA,
    ),
    entry(
        "dim4/Alg12",
        4,
        &["a", "b"],
        &[(1, 4, "e4"), (2, 2, "e4"), (2, 3, "a*e4"), (2, 4, "e4"), (3, 3, "e4")],
        &[(1, 2, "e4"), (2, 2, "e4"), (2, 3, "-b*e4"), (3, 2, "e4")],
        &[(3, "e3"), (4, "e4")],
        UNIPOTENT,
    ),
    entry(
        "dim4/Alg13",
        4,
        &[],
        &[(1, 2, "e4"), (1, 3, "e4"), (2, 1, "e4"), (2, 2, "e4"), (2, 3, "e4"), (3, 1, "e4")],
        &[(1, 2, "e4"), (2, 2, "e4"), (2, 3, "e4"), (3, 3, "e4")],
        &[(2, "e2"), (3, "e3")],
        UNIPOTENT,
    ),
    entry(
        "dim4/Alg14",
        4,
        &["a", "b", "c"],
        &[
            (1, 1, "e4"),
            (1, 3, "-c*e4"),
            (2, 2, "e4"),
            (2, 3, "e4"),
            (3, 1, "e4"),
            (3, 2, "e4"),
            (3, 3, "-2a*e4"),
        ],
        &[(1, 2, "e4"), (2, 2, "e4"), (2, 3, "e4"), (3, 2, "e4"), (3, 3, "b*e4")],
        &[(1, "e1"), (2, "e2")],
        UNIPOTENT,
    ),
    entry(
        "dim4/Alg15",
        4,
        &["a", "b", "c", "d", "f", "g"],
        &[(1, 1, "-e4"), (1, 2, "a*e4"), (2, 3, "b*e4"), (3, 1, "c*e4"), (3, 2, "d*e4"), (3, 3, "e4")],
        &[
            (1, 2, "f*e4"),
            (1, 4, "e4"),
            (2, 2, "e4"),
            (2, 3, "e4"),
            (3, 2, "g*e4"),
            (3, 3, "e4"),
            (3, 4, "e4"),
        ],
        &[(2, "e2")],
        UNIPOTENT,
    ),
    entry(
        "dim4/Alg16",
        4,
        &["a", "b", "c", "d"],
        &[(1, 2, "e4"), (2, 1, "e4"), (2, 2, "e4"), (2, 3, "a*e4"), (2, 4, "e4"), (3, 2, "e4")],
        &[(1, 2, "b*e4"), (2, 2, "c*e4"), (3, 2, "d*e4"), (3, 3, "e4"), (3, 4, "e4")],
        &[(1, "a*e1")],
        UNIPOTENT,
    ),
];

pub fn corpus_list() -> &'static [CorpusEntry] {
    &ENTRIES
}

pub fn corpus_entry(id: &str) -> Result<&'static CorpusEntry> {
    ENTRIES
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

/// Built-in parameter assignments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    /// Every parameter 1.
    Default,
    /// Every parameter 2.
    Twos,
    /// 1, 2, 3, … in the entry's parameter order.
    Mixed,
}

impl Profile {
    pub const ALL: [Profile; 3] = [Profile::Default, Profile::Twos, Profile::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Profile::Default => "default",
            Profile::Twos => "twos",
            Profile::Mixed => "mixed",
        }
    }

    pub fn parse(s: &str) -> Result<Profile> {
        Profile::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown profile `{s}` (default, twos, mixed)")))
    }

    pub fn values(self, e: &CorpusEntry) -> BTreeMap<String, Q> {
        e.params
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let v = match self {
                    Profile::Default => 1,
                    Profile::Twos => 2,
                    Profile::Mixed => i as i64 + 1,
                };
                (p.to_string(), qi(v))
            })
            .collect()
    }
}

/// Parses `[-][digits][param][*]e<k>` terms joined by `+`/`-`.
fn combination(expr: &str, dim: usize, params: &BTreeMap<String, Q>) -> Result<Vec<Q>> {
    let mut out = vec![qi(0); dim];
    let mut rest = expr;
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ => (false, rest),
        };
        let end = body[1..].find(['+', '-']).map(|i| i + 1).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let epos = term.rfind('e').expect("term names a basis vector");
        let k: usize = term[epos + 1..].parse().expect("basis index");
        let coef = term[..epos].trim_end_matches('*');
        let digits: String = coef.chars().take_while(char::is_ascii_digit).collect();
        let name = &coef[digits.len()..];
        let mut c = if digits.is_empty() { qi(1) } else { qi(digits.parse().expect("digits")) };
        if !name.is_empty() {
            let v = params.get(name).ok_or_else(|| Error::MissingParameter(name.to_string()))?;
            c *= v.clone();
        }
        if neg {
            c = -c;
        }
        out[k - 1] += c;
    }
    Ok(out)
}

impl CorpusEntry {
    /// Builds with explicit parameter values; all named parameters are
    /// required, extra keys are ignored.
    pub fn build(&self, params: &BTreeMap<String, Q>) -> Result<Dialgebra<Q>> {
        for p in self.params {
            if !params.contains_key(*p) {
                return Err(Error::MissingParameter(p.to_string()));
            }
        }
        let n = self.dim;
        let tensor = |rows: &[Row]| -> Result<Tensor3<Q>> {
            let mut t = Tensor3::square(n);
            for &(i, j, expr) in rows {
                t.set_row(i - 1, j - 1, combination(expr, n, params)?);
            }
            Ok(t)
        };
        let map = |imgs: &[Image]| -> Result<Matrix<Q>> {
            let mut cols = vec![vec![qi(0); n]; n];
            for &(j, expr) in imgs {
                cols[j - 1] = combination(expr, n, params)?;
            }
            Ok(Matrix::from_columns(n, &cols))
        };
        Dialgebra::new_unchecked(
            self.id,
            tensor(self.left)?,
            tensor(self.right)?,
            map(self.alpha)?,
            map(self.beta)?,
        )
    }

    pub fn build_profile(&self, profile: Profile) -> Result<Dialgebra<Q>> {
        self.build(&profile.values(self))
    }
}

pub fn corpus_build(id: &str, params: &BTreeMap<String, Q>) -> Result<Dialgebra<Q>> {
    corpus_entry(id)?.build(params)
}

/// Entry in the dialgebra text format.
pub fn corpus_export(id: &str, profile: Profile) -> Result<String> {
    Ok(write_dialgebra(&corpus_entry(id)?.build_profile(profile)?))
}

fn entry_report(e: &CorpusEntry, profile: Profile) -> Result<Value> {
    let values = profile.values(e);
    let d = e.build(&values)?;
    let axioms = check_axioms(&d);
    let mult = check_multiplicative(&d);
    let (z, b, h) = cohomology_dims(&d, &BiHomModule::trivial(1));
    let der = derivation_dim(&d, 0, 0)?;
    let params: BTreeMap<String, String> = values.iter().map(|(k, v)| (k.clone(), v.to_string())).collect();
    Ok(json!({
        "id": e.id,
        "dim": e.dim,
        "params": params,
        "notes": e.notes,
        "axioms": axioms.to_json(),
        "table_discrepancy": !axioms.passed(),
        "multiplicative": mult.to_json(),
        "regular": is_regular(&d),
        "alpha_equals_beta": d.alpha() == d.beta(),
        "derivations_00": der,
        "cohomology_trivial_1": {"z2": z, "b2": b, "h2": h},
    }))
}

/// Full report, entries in table order. Byte-identical across runs.
pub fn corpus_verify(profile: Profile) -> Result<Value> {
    let entries = ENTRIES
        .iter()
        .map(|e| entry_report(e, profile))
        .collect::<Result<Vec<_>>>()?;
    let dim2_same_maps = ENTRIES
        .iter()
        .filter(|e| e.dim == 2)
        .map(|e| e.build_profile(profile).map(|d| d.alpha() == d.beta()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|x| x);
    let discrepancies: Vec<&str> = entries
        .iter()
        .filter(|v| v["table_discrepancy"] == json!(true))
        .map(|v| v["id"].as_str().unwrap_or_default())
        .collect();
    Ok(json!({
        "schema_version": REPORT_SCHEMA,
        "profile": profile.name(),
        "entries": entries,
        "dim2_alpha_equals_beta": dim2_same_maps,
        "table_discrepancies": discrepancies,
    }))
}

/// Same entry over a finite field, for searches.
pub fn corpus_build_in<S: Scalar>(id: &str, profile: Profile) -> Result<Dialgebra<S>> {
    crate::format::to_field(&corpus_entry(id)?.build_profile(profile)?)
}
