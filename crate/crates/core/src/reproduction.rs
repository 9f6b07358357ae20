//! End-to-end checks of the published values: the two d3 computations, the
//! connected-sum identity, the bounds table and stabilization invariance.

use crate::constructions::{
    boundary_connect_sum, make_phi_nm, positive_stabilize, preset_fig8_planar, preset_pprime,
    ConstructionError, Fig8Planar,
};
use crate::format::format_rational;
use crate::invariants::{
    connect_sum_d3, overtwisted_same, table1, Comparison, InvariantRecord, TwistRegime,
};
use crate::lefschetz::{d3, D3Report, FormSource, LefschetzError};
use crate::linalg::{rat, Rat};
use crate::monodromy::{torus_nielsen_thurston, TorusClass};
use crate::surface::OpenBookDesc;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckItem {
    fn compare<T: PartialEq + std::fmt::Display>(name: String, expected: T, got: T) -> Self {
        let passed = expected == got;
        let detail = if passed {
            format!("{got}")
        } else {
            format!("expected {expected}, got {got}")
        };
        CheckItem { name, passed, detail }
    }

    fn failed(name: String, err: impl std::fmt::Display) -> Self {
        CheckItem {
            name,
            passed: false,
            detail: format!("error: {err}"),
        }
    }

    pub fn line(&self) -> String {
        format!("{} {}: {}", if self.passed { "PASS" } else { "FAIL" }, self.name, self.detail)
    }
}

/// Source of the planar figure-eight open books, replaceable for fault
/// injection.
pub type Fig8Builder<'a> = &'a dyn Fn(i64) -> Result<Fig8Planar, ConstructionError>;

/// Twist parameters exercised by the d3 checks.
pub const LEMMA5_RANGE: std::ops::RangeInclusive<i64> = -10..=0;
pub const LEMMA4_RANGE: std::ops::RangeInclusive<i64> = -10..=-1;

pub fn fig8_d3(p: &Fig8Planar) -> Result<D3Report, LefschetzError> {
    d3(
        &p.book,
        &FormSource::Form {
            form: p.form.clone(),
            basis: p.basis.clone(),
        },
    )
}

pub fn phi_d3(m: i64) -> Result<D3Report, LefschetzError> {
    let book = make_phi_nm(&[1], m, true).expect("n = (1) is admissible");
    d3(&book, &FormSource::SigmaOverride(8 * m.abs()))
}

fn report_summary(r: &D3Report) -> String {
    format!(
        "chi={} sigma={} q={} c2={} d3={}",
        r.chi_x,
        r.sigma_x,
        r.q,
        format_rational(&r.c_squared),
        format_rational(&r.d3)
    )
}

fn lemma5_item(m: i64, fig8: Fig8Builder) -> CheckItem {
    let name = format!("fig8-planar d3 m={m}");
    let a = m.abs();
    let expected = D3Report {
        chi_x: 1 + a,
        sigma_x: a,
        q: 2 + a,
        c_squared: rat(a, 1),
        d3: rat(3, 2),
        provenance: String::new(),
    };
    match fig8(m).map_err(|e| e.to_string()).and_then(|p| fig8_d3(&p).map_err(|e| e.to_string())) {
        Ok(mut got) => {
            got.provenance.clear();
            CheckItem::compare(name, report_summary(&expected), report_summary(&got))
        }
        Err(e) => CheckItem::failed(name, e),
    }
}

fn lemma4_item(m: i64) -> CheckItem {
    let name = format!("phi_(1),m d3 m={m}");
    let a = m.abs();
    let expected = format!("chi={} sigma={} q={} c2=0 d3=1/2", 12 * a + 1, 8 * a, 12 * a + 1);
    match phi_d3(m) {
        Ok(r) => CheckItem::compare(name, expected, report_summary(&r)),
        Err(e) => CheckItem::failed(name, e),
    }
}

fn overtwisted_record(label: String, d3: Rat) -> InvariantRecord {
    let mut r = InvariantRecord::unknown(label);
    r.overtwisted = Some(true);
    r.h1_trivial = Some(true);
    r.d3 = Some(d3);
    r
}

fn connect_sum_item(m: i64, fig8: Fig8Builder) -> CheckItem {
    let name = format!("nine-binding connected sum m={m}");
    let run = || -> Result<String, String> {
        let p = fig8(m).map_err(|e| e.to_string())?;
        let xi_m = fig8_d3(&p).map_err(|e| e.to_string())?.d3;
        let (pprime, xi_prime) = preset_pprime();
        let sum_page = boundary_connect_sum(&p.book, &pprime).page();
        let target = phi_d3(m).map_err(|e| e.to_string())?.d3;
        let summed = connect_sum_d3(&xi_m, &xi_prime);
        let verdict = overtwisted_same(
            &overtwisted_record("phi".into(), target.clone()),
            &overtwisted_record("sum".into(), summed.clone()),
        );
        Ok(format!(
            "binding={} d3(sum)={} d3(phi)={} {}",
            sum_page.boundary_count(),
            format_rational(&summed),
            format_rational(&target),
            verdict
        ))
    };
    match run() {
        Ok(got) => CheckItem::compare(name, format!("binding=9 d3(sum)=1/2 d3(phi)=1/2 {}", Comparison::Same), got),
        Err(e) => CheckItem::failed(name, e),
    }
}

/// Expected rows, as printed by [`crate::invariants::table1_text`].
pub const TABLE1_EXPECTED: [(TwistRegime, &str, &str, &str); 4] = [
    (TwistRegime::Positive, "1", "1", "1"),
    (TwistRegime::Zero, "0", "1", "-1"),
    (TwistRegime::MinusOne, "0", "[3,9]", "1"),
    (TwistRegime::LessThanMinusOne, "0", "[4,9]", "1"),
];

fn table_items() -> Vec<CheckItem> {
    TABLE1_EXPECTED
        .iter()
        .map(|&(regime, sg, bn, sn)| {
            let r = table1(regime);
            CheckItem::compare(
                format!("table row {}", regime.label()),
                format!("sg={sg} bn={bn} sn={sn}"),
                format!("sg={} bn={} sn={}", r.sg, r.bn, r.sn),
            )
        })
        .collect()
}

fn stabilization_item(name: &str, book: &OpenBookDesc, source: FormSource) -> CheckItem {
    let stabilized = positive_stabilize(book);
    let padded = match &source {
        FormSource::Form { form, basis } => FormSource::Form {
            form: form.clone(),
            basis: basis.padded(1),
        },
        other => other.clone(),
    };
    let name = format!("stabilization invariance {name}");
    match (d3(book, &source), d3(&stabilized, &padded)) {
        (Ok(before), Ok(after)) => {
            CheckItem::compare(name, format_rational(&before.d3), format_rational(&after.d3))
        }
        (Err(e), _) | (_, Err(e)) => CheckItem::failed(name, e),
    }
}

fn classification_item() -> CheckItem {
    let book = make_phi_nm(&[1], 0, true).expect("n = (1) is admissible");
    match torus_nielsen_thurston(&book) {
        Ok(c) => CheckItem::compare("phi_(1),0 classification".into(), TorusClass::PseudoAnosov, c),
        Err(e) => CheckItem::failed("phi_(1),0 classification".into(), e),
    }
}

pub fn paper_check() -> Vec<CheckItem> {
    paper_check_with(&preset_fig8_planar)
}

pub fn paper_check_with(fig8: Fig8Builder) -> Vec<CheckItem> {
    let mut items = Vec::new();
    for m in LEMMA4_RANGE.rev() {
        items.push(lemma4_item(m));
    }
    for m in LEMMA5_RANGE.rev() {
        items.push(lemma5_item(m, fig8));
    }
    for m in LEMMA4_RANGE.rev() {
        items.push(connect_sum_item(m, fig8));
    }
    items.extend(table_items());
    items.push(stabilization_item("disk", &OpenBookDesc::disk(), FormSource::SigmaOverride(0)));
    match fig8(-1) {
        Ok(p) => items.push(stabilization_item(
            "fig8-planar m=-1",
            &p.book,
            FormSource::Form {
                form: p.form.clone(),
                basis: p.basis.clone(),
            },
        )),
        Err(e) => items.push(CheckItem::failed("stabilization invariance fig8-planar m=-1".into(), e)),
    }
    items.push(stabilization_item(
        "phi_(1),-1",
        &make_phi_nm(&[1], -1, true).expect("n = (1) is admissible"),
        FormSource::SigmaOverride(8),
    ));
    items.push(classification_item());
    items
}
