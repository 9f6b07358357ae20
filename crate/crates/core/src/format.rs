//! The JSON dialect shared by open-book files, record files and reports.
//!
//! Open book:
//!
//! ```json
//! {
//!   "page": { "genus": 0, "boundary": 5 },
//!   "curves": [ { "name": "r", "h1_class": [0, 1, -1, 1], "rotation": 0 } ],
//!   "word": [ { "curve": "r", "sign": -1 } ],
//!   "intersection_form": {
//!     "provenance": "preset",
//!     "basis": [[1, -1, 0, 0, 1]],
//!     "matrix": [[1]]
//!   }
//! }
//! ```
//!
//! `h1_class`, `rotation` and `intersection_form` are optional. `sign` is
//! `1` for a right-handed twist and `-1` for a left-handed one. The basis of
//! the form lists 2-chains in 2-handle coordinates (one entry per letter of
//! the word). Rational entries may be JSON integers or `"p/q"` strings.
//!
//! Record:
//!
//! ```json
//! {
//!   "label": "example",
//!   "sg": 0, "bn": [4, 9], "sn": [-1, null],
//!   "d3": "1/2", "overtwisted": true, "h1_trivial": true,
//!   "tags": ["Hyperbolic"],
//!   "assumptions": [ { "fact": "supported_by", "genus": 0, "boundary": 9, "reason": "..." } ]
//! }
//! ```
//!
//! Intervals are an integer or a `[lo, hi]` pair with `null` for an
//! infinite end; an absent interval means nothing is known.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::invariants::{Assumption, Interval, InvariantRecord, Tag};
use crate::lefschetz::{CycleBasis, D3Report, FormProvenance, FormSource, IntersectionForm};
use crate::linalg::{Matrix, Rat};
use crate::surface::{CurveOnPage, Handedness, OpenBookDesc, PageSurface, TwistLetter, TwistWord};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid field `{field}`: {message}")]
    Invalid { field: String, message: String },
}

fn invalid(field: impl Into<String>, message: impl ToString) -> FormatError {
    FormatError::Invalid {
        field: field.into(),
        message: message.to_string(),
    }
}

/// Lowest-terms `p/q`, or `p` for integers.
pub fn format_rational(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => BigInt::from_str(s).ok().map(Rat::from_integer),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum RatJson {
    Int(i64),
    Text(String),
}

impl RatJson {
    fn to_rat(&self, field: &str) -> Result<Rat, FormatError> {
        match self {
            RatJson::Int(v) => Ok(Rat::from_integer(BigInt::from(*v))),
            RatJson::Text(s) => parse_rational(s).ok_or_else(|| invalid(field, format!("`{s}` is not a rational"))),
        }
    }

    fn from_rat(r: &Rat) -> Self {
        RatJson::Text(format_rational(r))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PageJson {
    genus: u32,
    boundary: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CurveJson {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h1_class: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<i64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LetterJson {
    curve: String,
    sign: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormJson {
    #[serde(default = "default_provenance")]
    provenance: String,
    basis: Vec<Vec<i64>>,
    matrix: Vec<Vec<RatJson>>,
}

fn default_provenance() -> String {
    "user".into()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpenBookJson {
    page: PageJson,
    #[serde(default)]
    curves: Vec<CurveJson>,
    #[serde(default)]
    word: Vec<LetterJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    intersection_form: Option<FormJson>,
}

/// An open book as read from a file, with its optional embedded form.
#[derive(Debug, Clone)]
pub struct OpenBookFile {
    pub book: OpenBookDesc,
    pub form: Option<(IntersectionForm, CycleBasis)>,
}

impl OpenBookFile {
    pub fn form_source(&self) -> Option<FormSource> {
        self.form.as_ref().map(|(form, basis)| FormSource::Form {
            form: form.clone(),
            basis: basis.clone(),
        })
    }
}

fn form_from_json(f: &FormJson, dim: usize) -> Result<(IntersectionForm, CycleBasis), FormatError> {
    let provenance = match f.provenance.as_str() {
        "preset" => FormProvenance::Preset,
        "user" => FormProvenance::UserSupplied,
        other => return Err(invalid("intersection_form.provenance", format!("unknown provenance `{other}`"))),
    };
    let n = f.matrix.len();
    let mut rows = Vec::with_capacity(n);
    for (i, row) in f.matrix.iter().enumerate() {
        if row.len() != n {
            return Err(invalid(format!("intersection_form.matrix[{i}]"), "matrix must be square"));
        }
        rows.push(
            row.iter()
                .enumerate()
                .map(|(j, v)| v.to_rat(&format!("intersection_form.matrix[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    if f.basis.len() != n {
        return Err(invalid(
            "intersection_form.basis",
            format!("{} basis vectors for a {n}x{n} form", f.basis.len()),
        ));
    }
    let form = IntersectionForm::new(Matrix::from_rows(rows, n), provenance)
        .map_err(|e| invalid("intersection_form.matrix", e))?;
    let basis = CycleBasis::from_i64(&f.basis, dim).map_err(|e| invalid("intersection_form.basis", e))?;
    Ok((form, basis))
}

fn form_to_json(form: &IntersectionForm, basis: &CycleBasis) -> FormJson {
    FormJson {
        provenance: form.provenance().to_string(),
        basis: basis
            .vectors()
            .iter()
            .map(|v| v.iter().map(|x| i64::try_from(x).expect("basis entries fit in i64")).collect())
            .collect(),
        matrix: form.matrix().to_rows().iter().map(|r| r.iter().map(RatJson::from_rat).collect()).collect(),
    }
}

pub fn parse_open_book(text: &str) -> Result<OpenBookFile, FormatError> {
    let doc: OpenBookJson = serde_json::from_str(text)?;
    let page = PageSurface::new(doc.page.genus, doc.page.boundary).map_err(|e| invalid("page.boundary", e))?;
    let curves = doc
        .curves
        .into_iter()
        .map(|c| CurveOnPage {
            name: c.name,
            h1_class: c.h1_class,
            rotation: c.rotation,
        })
        .collect();
    let mut letters = Vec::with_capacity(doc.word.len());
    for (i, l) in doc.word.into_iter().enumerate() {
        let handedness = match l.sign {
            1 => Handedness::Right,
            -1 => Handedness::Left,
            s => return Err(invalid(format!("word[{i}].sign"), format!("sign must be 1 or -1, got {s}"))),
        };
        letters.push(TwistLetter {
            curve: l.curve,
            handedness,
        });
    }
    let book = OpenBookDesc::new(page, curves, TwistWord::from_letters(letters)).map_err(|e| invalid("curves", e))?;
    let form = doc
        .intersection_form
        .as_ref()
        .map(|f| form_from_json(f, book.word().len()))
        .transpose()?;
    Ok(OpenBookFile { book, form })
}

/// A standalone form file: `{ "provenance"?, "basis", "matrix" }`.
pub fn parse_form(text: &str, dim: usize) -> Result<(IntersectionForm, CycleBasis), FormatError> {
    let doc: FormJson = serde_json::from_str(text)?;
    form_from_json(&doc, dim)
}

pub fn open_book_to_json(book: &OpenBookDesc, form: Option<(&IntersectionForm, &CycleBasis)>) -> String {
    let doc = OpenBookJson {
        page: PageJson {
            genus: book.page().genus(),
            boundary: book.page().boundary_count(),
        },
        curves: book
            .curves()
            .map(|c| CurveJson {
                name: c.name.clone(),
                h1_class: c.h1_class.clone(),
                rotation: c.rotation,
            })
            .collect(),
        word: book
            .word()
            .letters()
            .iter()
            .map(|l| LetterJson {
                curve: l.curve.clone(),
                sign: l.handedness.sign(),
            })
            .collect(),
        intersection_form: form.map(|(f, b)| form_to_json(f, b)),
    };
    serde_json::to_string_pretty(&doc).expect("open book serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum IntervalJson {
    Point(i64),
    Range([Option<i64>; 2]),
}

fn interval_from_json(j: Option<&IntervalJson>, floor: i64, field: &str) -> Result<Interval, FormatError> {
    match j {
        None => Ok(Interval::at_least(floor)),
        Some(IntervalJson::Point(v)) => Ok(Interval::point(*v)),
        Some(IntervalJson::Range([lo, hi])) => Interval::new(*lo, *hi).map_err(|e| invalid(field, e)),
    }
}

fn interval_to_json(iv: &Interval) -> IntervalJson {
    match iv.value() {
        Some(v) => IntervalJson::Point(v),
        None => IntervalJson::Range([iv.lo(), iv.hi()]),
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RecordJson {
    #[serde(default)]
    label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sg: Option<IntervalJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bn: Option<IntervalJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    sn: Option<IntervalJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    d3: Option<RatJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    overtwisted: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h1_trivial: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    tags: Vec<Tag>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    assumptions: Vec<Assumption>,
}

pub fn parse_record(text: &str) -> Result<InvariantRecord, FormatError> {
    let doc: RecordJson = serde_json::from_str(text)?;
    let mut rec = InvariantRecord::unknown(doc.label);
    rec.sg = interval_from_json(doc.sg.as_ref(), 0, "sg")?;
    rec.bn = interval_from_json(doc.bn.as_ref(), 1, "bn")?;
    rec.sn = interval_from_json(doc.sn.as_ref(), -1, "sn")?;
    rec.d3 = doc.d3.map(|d| d.to_rat("d3")).transpose()?;
    rec.overtwisted = doc.overtwisted;
    rec.h1_trivial = doc.h1_trivial;
    rec.tags = doc.tags.into_iter().collect::<BTreeSet<_>>();
    for (i, a) in doc.assumptions.into_iter().enumerate() {
        rec.assume(a.fact, a.reason).map_err(|e| invalid(format!("assumptions[{i}]"), e))?;
    }
    Ok(rec)
}

pub fn record_to_json(rec: &InvariantRecord) -> String {
    // Witness pages from assumptions are re-derived on load, so only the
    // assumption list is written.
    let doc = RecordJson {
        label: rec.label.clone(),
        sg: Some(interval_to_json(&rec.sg)),
        bn: Some(interval_to_json(&rec.bn)),
        sn: Some(interval_to_json(&rec.sn)),
        d3: rec.d3.as_ref().map(RatJson::from_rat),
        overtwisted: rec.overtwisted,
        h1_trivial: rec.h1_trivial,
        tags: rec.tags.iter().copied().collect(),
        assumptions: rec.assumptions.clone(),
    };
    serde_json::to_string_pretty(&doc).expect("record serializes")
}

#[derive(Debug, Serialize)]
struct D3ReportJson<'a> {
    chi_x: i64,
    sigma_x: i64,
    q: i64,
    c_squared: String,
    d3: String,
    form_provenance: &'a str,
}

pub fn d3_report_to_json(report: &D3Report) -> String {
    let doc = D3ReportJson {
        chi_x: report.chi_x,
        sigma_x: report.sigma_x,
        q: report.q,
        c_squared: format_rational(&report.c_squared),
        d3: format_rational(&report.d3),
        form_provenance: &report.provenance,
    };
    serde_json::to_string_pretty(&doc).expect("report serializes")
}
