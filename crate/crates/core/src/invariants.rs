//! Interval bounds on support genus, binding number and support norm.
//!
//! A record collects what is known about one contact structure: integer
//! intervals for `sg`, `bn`, `sn`, an optional d3, a few manifold tags, and
//! witness open books. [`refine`] closes the record under
//!
//! ```text
//! min(2sg + bn − 2, 2sg + 1) ≤ sn ≤ 2sg + bn − 2,     sn ≥ −1,
//! ```
//!
//! plus the equality case for `bn ≤ 3` and the characterization of `sn = −1`
//! as the tight 3-sphere. Facts imported from outside the calculator are
//! entered through [`InvariantRecord::assume`] and kept on the record.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{rat, Rat};
use crate::surface::PageSurface;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("contradiction: rule `{rule}` empties {field}")]
    Contradiction { rule: &'static str, field: &'static str },
    #[error("contradiction: rule `{rule}`: {detail}")]
    Inconsistent { rule: &'static str, detail: String },
    #[error("interval [{lo},{hi}] is empty")]
    EmptyInterval { lo: i64, hi: i64 },
    #[error("{0} is unbounded")]
    Unbounded(&'static str),
}

impl InvariantError {
    pub fn rule(&self) -> Option<&'static str> {
        match self {
            InvariantError::Contradiction { rule, .. } | InvariantError::Inconsistent { rule, .. } => {
                Some(rule)
            }
            _ => None,
        }
    }
}

/// Closed integer interval; `None` endpoints are infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Option<i64>,
    hi: Option<i64>,
}

impl Interval {
    pub fn new(lo: Option<i64>, hi: Option<i64>) -> Result<Self, InvariantError> {
        if let (Some(l), Some(h)) = (lo, hi) {
            if l > h {
                return Err(InvariantError::EmptyInterval { lo: l, hi: h });
            }
        }
        Ok(Interval { lo, hi })
    }

    pub fn closed(lo: i64, hi: i64) -> Result<Self, InvariantError> {
        Self::new(Some(lo), Some(hi))
    }

    pub fn point(v: i64) -> Self {
        Interval {
            lo: Some(v),
            hi: Some(v),
        }
    }

    pub fn at_least(v: i64) -> Self {
        Interval { lo: Some(v), hi: None }
    }

    pub fn unbounded() -> Self {
        Interval { lo: None, hi: None }
    }

    pub fn lo(&self) -> Option<i64> {
        self.lo
    }

    pub fn hi(&self) -> Option<i64> {
        self.hi
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn value(&self) -> Option<i64> {
        match (self.lo, self.hi) {
            (Some(l), Some(h)) if l == h => Some(l),
            _ => None,
        }
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo.is_none_or(|l| l <= v) && self.hi.is_none_or(|h| v <= h)
    }

    /// `self ⊆ other`.
    pub fn within(&self, other: &Interval) -> bool {
        let lo_ok = match (other.lo, self.lo) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(o), Some(s)) => s >= o,
        };
        let hi_ok = match (other.hi, self.hi) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some(o), Some(s)) => s <= o,
        };
        lo_ok && hi_ok
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.value() {
            return write!(f, "{v}");
        }
        let lo = self.lo.map_or("-inf".to_string(), |v| v.to_string());
        let hi = self.hi.map_or("inf".to_string(), |v| v.to_string());
        write!(f, "[{lo},{hi}]")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Tag {
    LensSpace,
    SmallSFS,
    Hyperbolic,
    TightS3,
    NotLensSpace,
}

/// A fact taken from outside the calculator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    /// The structure is supported by an open book with this page.
    SupportedBy { genus: u32, boundary: u32 },
    SupportGenusAtLeast { genus: u32 },
    /// Supported by some planar open book.
    PlanarSupport,
    Overtwisted,
    H1Trivial,
    TightS3,
    Hyperbolic,
    NotLensSpace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption {
    #[serde(flatten)]
    pub fact: Fact,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantRecord {
    pub label: String,
    pub sg: Interval,
    pub bn: Interval,
    pub sn: Interval,
    pub d3: Option<Rat>,
    pub overtwisted: Option<bool>,
    pub h1_trivial: Option<bool>,
    pub tags: BTreeSet<Tag>,
    pub supported_by: Vec<PageSurface>,
    pub assumptions: Vec<Assumption>,
}

impl InvariantRecord {
    /// Nothing known beyond the trivial floors.
    pub fn unknown(label: impl Into<String>) -> Self {
        InvariantRecord {
            label: label.into(),
            sg: Interval::at_least(0),
            bn: Interval::at_least(1),
            sn: Interval::at_least(-1),
            d3: None,
            overtwisted: None,
            h1_trivial: None,
            tags: BTreeSet::new(),
            supported_by: Vec::new(),
            assumptions: Vec::new(),
        }
    }

    pub fn with_bounds(sg: Interval, bn: Interval, sn: Interval) -> Self {
        InvariantRecord {
            sg,
            bn,
            sn,
            ..Self::unknown("")
        }
    }

    /// Records `fact` and applies its direct consequence.
    pub fn assume(&mut self, fact: Fact, reason: impl Into<String>) -> Result<(), InvariantError> {
        match &fact {
            Fact::SupportedBy { genus, boundary } => {
                let page = PageSurface::new(*genus, *boundary).map_err(|e| InvariantError::Inconsistent {
                    rule: "witness",
                    detail: e.to_string(),
                })?;
                if !self.supported_by.contains(&page) {
                    self.supported_by.push(page);
                }
            }
            Fact::SupportGenusAtLeast { genus } => {
                raise_lo(&mut self.sg, i64::from(*genus), "assumption", "sg")?;
            }
            Fact::PlanarSupport => {
                lower_hi(&mut self.sg, 0, "assumption", "sg")?;
            }
            Fact::Overtwisted => set_flag(&mut self.overtwisted, true, "overtwisted")?,
            Fact::H1Trivial => set_flag(&mut self.h1_trivial, true, "h1_trivial")?,
            Fact::TightS3 => {
                self.tags.insert(Tag::TightS3);
            }
            Fact::Hyperbolic => {
                self.tags.insert(Tag::Hyperbolic);
            }
            Fact::NotLensSpace => {
                self.tags.insert(Tag::NotLensSpace);
            }
        }
        self.assumptions.push(Assumption {
            fact,
            reason: reason.into(),
        });
        Ok(())
    }
}

fn set_flag(slot: &mut Option<bool>, value: bool, name: &'static str) -> Result<(), InvariantError> {
    match slot {
        Some(v) if *v != value => Err(InvariantError::Inconsistent {
            rule: "assumption",
            detail: format!("{name} already recorded as {v}"),
        }),
        _ => {
            *slot = Some(value);
            Ok(())
        }
    }
}

fn raise_lo(iv: &mut Interval, v: i64, rule: &'static str, field: &'static str) -> Result<bool, InvariantError> {
    if iv.lo.is_some_and(|l| l >= v) {
        return Ok(false);
    }
    if iv.hi.is_some_and(|h| h < v) {
        return Err(InvariantError::Contradiction { rule, field });
    }
    iv.lo = Some(v);
    Ok(true)
}

fn lower_hi(iv: &mut Interval, v: i64, rule: &'static str, field: &'static str) -> Result<bool, InvariantError> {
    if iv.hi.is_some_and(|h| h <= v) {
        return Ok(false);
    }
    if iv.lo.is_some_and(|l| l > v) {
        return Err(InvariantError::Contradiction { rule, field });
    }
    iv.hi = Some(v);
    Ok(true)
}

/// Rules that fired during a refinement, in firing order, without repeats.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleTrace(Vec<&'static str>);

impl RuleTrace {
    fn note(&mut self, rule: &'static str, changed: bool) {
        if changed && !self.0.contains(&rule) {
            self.0.push(rule);
        }
    }

    pub fn rules(&self) -> &[&'static str] {
        &self.0
    }
}

pub fn refine(rec: &InvariantRecord) -> Result<InvariantRecord, InvariantError> {
    refine_traced(rec).map(|(r, _)| r)
}

pub fn refine_traced(rec: &InvariantRecord) -> Result<(InvariantRecord, RuleTrace), InvariantError> {
    let mut r = rec.clone();
    let mut trace = RuleTrace::default();
    loop {
        let mut changed = false;
        for (name, rule) in RULES {
            let c = rule(&mut r)?;
            trace.note(name, c);
            changed |= c;
        }
        if !changed {
            return Ok((r, trace));
        }
    }
}

type Rule = fn(&mut InvariantRecord) -> Result<bool, InvariantError>;

const RULES: [(&str, Rule); 6] = [
    ("floor", rule_floor),
    ("tight-s3", rule_tight_s3),
    ("witness", rule_witness),
    ("upper-bound", rule_upper),
    ("lower-bound", rule_lower),
    ("low-binding", rule_low_binding),
];

fn rule_floor(r: &mut InvariantRecord) -> Result<bool, InvariantError> {
    let mut c = raise_lo(&mut r.sg, 0, "floor", "sg")?;
    c |= raise_lo(&mut r.bn, 1, "floor", "bn")?;
    c |= raise_lo(&mut r.sn, -1, "floor", "sn")?;
    Ok(c)
}

/// `sn = −1` exactly for the tight 3-sphere, whose only minimal open book
/// is the disk.
fn rule_tight_s3(r: &mut InvariantRecord) -> Result<bool, InvariantError> {
    const RULE: &str = "tight-s3";
    let mut c = false;
    if r.overtwisted == Some(true) {
        if r.tags.contains(&Tag::TightS3) {
            return Err(InvariantError::Inconsistent {
                rule: RULE,
                detail: "tight 3-sphere recorded as overtwisted".into(),
            });
        }
        c |= raise_lo(&mut r.sn, 0, RULE, "sn")?;
    }
    if r.sn.hi.is_some_and(|h| h <= -1) {
        c |= r.tags.insert(Tag::TightS3);
    }
    if r.tags.contains(&Tag::TightS3) {
        for bad in [Tag::Hyperbolic, Tag::NotLensSpace] {
            if r.tags.contains(&bad) {
                return Err(InvariantError::Inconsistent {
                    rule: RULE,
                    detail: format!("tight 3-sphere tagged {bad:?}"),
                });
            }
        }
        c |= raise_lo(&mut r.sg, 0, RULE, "sg")? | lower_hi(&mut r.sg, 0, RULE, "sg")?;
        c |= raise_lo(&mut r.bn, 1, RULE, "bn")? | lower_hi(&mut r.bn, 1, RULE, "bn")?;
        c |= raise_lo(&mut r.sn, -1, RULE, "sn")? | lower_hi(&mut r.sn, -1, RULE, "sn")?;
    }
    Ok(c)
}

/// A supporting open book with page `(g, b)` bounds `sg ≤ g` and
/// `sn ≤ 2g + b − 2`; once `sg = g` it also bounds `bn ≤ b`.
fn rule_witness(r: &mut InvariantRecord) -> Result<bool, InvariantError> {
    const RULE: &str = "witness";
    let mut c = false;
    for page in r.supported_by.clone() {
        let g = i64::from(page.genus());
        c |= lower_hi(&mut r.sg, g, RULE, "sg")?;
        c |= lower_hi(&mut r.sn, page.page_norm(), RULE, "sn")?;
        if r.sg.lo.is_some_and(|l| l >= g) {
            c |= lower_hi(&mut r.bn, i64::from(page.boundary_count()), RULE, "bn")?;
        }
    }
    Ok(c)
}

/// `sn ≤ 2sg + bn − 2`, propagated to each of the three intervals.
fn rule_upper(r: &mut InvariantRecord) -> Result<bool, InvariantError> {
    const RULE: &str = "upper-bound";
    let mut c = false;
    if let (Some(sg), Some(bn)) = (r.sg.hi, r.bn.hi) {
        c |= lower_hi(&mut r.sn, 2 * sg + bn - 2, RULE, "sn")?;
    }
    if let (Some(sn), Some(sg)) = (r.sn.lo, r.sg.hi) {
        c |= raise_lo(&mut r.bn, sn - 2 * sg + 2, RULE, "bn")?;
    }
    if let (Some(sn), Some(bn)) = (r.sn.lo, r.bn.hi) {
        c |= raise_lo(&mut r.sg, div_ceil(sn - bn + 2, 2), RULE, "sg")?;
    }
    Ok(c)
}

/// `sn ≥ min(2sg + bn − 2, 2sg + 1)`, propagated to each interval.
fn rule_lower(r: &mut InvariantRecord) -> Result<bool, InvariantError> {
    const RULE: &str = "lower-bound";
    let mut c = false;
    if let (Some(sg), Some(bn)) = (r.sg.lo, r.bn.lo) {
        c |= raise_lo(&mut r.sn, (2 * sg + bn - 2).min(2 * sg + 1), RULE, "sn")?;
    }
    if let (Some(sn), Some(bn)) = (r.sn.hi, r.bn.lo) {
        c |= lower_hi(&mut r.sg, (sn - (bn - 2).min(1)).div_euclid(2), RULE, "sg")?;
    }
    if let (Some(sn), Some(sg)) = (r.sn.hi, r.sg.lo) {
        // Every admissible genus has 2sg + 1 > sn, so the first term of the
        // minimum must do the work.
        if 2 * sg + 1 > sn {
            c |= lower_hi(&mut r.bn, sn - 2 * sg + 2, RULE, "bn")?;
        }
    }
    Ok(c)
}

/// For `bn ≤ 3` the two bounds meet: `sn = 2sg + bn − 2`.
fn rule_low_binding(r: &mut InvariantRecord) -> Result<bool, InvariantError> {
    const RULE: &str = "low-binding";
    if !r.bn.hi.is_some_and(|h| h <= 3) {
        return Ok(false);
    }
    let mut c = false;
    if let (Some(sg), Some(bn)) = (r.sg.lo, r.bn.lo) {
        c |= raise_lo(&mut r.sn, 2 * sg + bn - 2, RULE, "sn")?;
    }
    if let (Some(sn), Some(bn)) = (r.sn.hi, r.bn.lo) {
        c |= lower_hi(&mut r.sg, (sn - bn + 2).div_euclid(2), RULE, "sg")?;
    }
    if let (Some(sn), Some(sg)) = (r.sn.hi, r.sg.lo) {
        c |= lower_hi(&mut r.bn, sn - 2 * sg + 2, RULE, "bn")?;
    }
    if let (Some(sn), Some(sg)) = (r.sn.lo, r.sg.hi) {
        c |= raise_lo(&mut r.bn, sn - 2 * sg + 2, RULE, "bn")?;
    }
    Ok(c)
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Manifold-type consequences for structures with planar support.
///
/// With `sg = 0`: binding number at most two forces a lens space, three a
/// small Seifert fibered space. Conversely a non-lens-space manifold has
/// `bn ≥ 3` and `sn ≥ 1` (an annulus page gives a lens space, a disk page
/// gives `S^3`), and a hyperbolic one has `bn ≥ 4`. Records without
/// `sg = 0` are refined but otherwise left as they are.
pub fn planar_low_bn_tags(rec: &InvariantRecord) -> Result<InvariantRecord, InvariantError> {
    const RULE: &str = "planar-binding";
    let mut r = refine(rec)?;
    if r.sg.value() != Some(0) {
        return Ok(r);
    }
    if r.tags.contains(&Tag::Hyperbolic) {
        r.tags.insert(Tag::NotLensSpace);
    }
    if r.bn.hi.is_some_and(|h| h <= 2) {
        r.tags.insert(Tag::LensSpace);
    }
    if r.bn.hi == Some(3) {
        r.tags.insert(Tag::SmallSFS);
    }
    let conflict = |a: Tag, b: Tag| r.tags.contains(&a) && r.tags.contains(&b);
    for (a, b) in [
        (Tag::Hyperbolic, Tag::LensSpace),
        (Tag::Hyperbolic, Tag::SmallSFS),
        (Tag::NotLensSpace, Tag::LensSpace),
    ] {
        if conflict(a, b) {
            return Err(InvariantError::Inconsistent {
                rule: RULE,
                detail: format!("tagged both {a:?} and {b:?}"),
            });
        }
    }
    if r.tags.contains(&Tag::NotLensSpace) {
        raise_lo(&mut r.bn, 3, RULE, "bn")?;
        raise_lo(&mut r.sn, 1, RULE, "sn")?;
    }
    if r.tags.contains(&Tag::Hyperbolic) {
        raise_lo(&mut r.bn, 4, RULE, "bn")?;
    }
    refine(&r)
}

/// `d3(ξ # ξ') = d3(ξ) + d3(ξ') + 1/2`.
pub fn connect_sum_d3(left: &Rat, right: &Rat) -> Rat {
    left + right + rat(1, 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Same,
    Different,
    Undecidable,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Comparison::Same => "same",
            Comparison::Different => "different",
            Comparison::Undecidable => "undecidable",
        })
    }
}

/// Isotopy test for two overtwisted structures on the same manifold with
/// `H_1 = 0`, where the plane-field homotopy class is determined by d3.
pub fn overtwisted_same(a: &InvariantRecord, b: &InvariantRecord) -> Comparison {
    let ready = |r: &InvariantRecord| r.overtwisted == Some(true) && r.h1_trivial == Some(true);
    if !ready(a) || !ready(b) {
        return Comparison::Undecidable;
    }
    match (&a.d3, &b.d3) {
        (Some(x), Some(y)) if x == y => Comparison::Same,
        (Some(_), Some(_)) => Comparison::Different,
        _ => Comparison::Undecidable,
    }
}

/// `2sg + bn − 2 − sn` in interval arithmetic, intersected with `[0, ∞)`
/// since the upper bound of the page-norm inequality makes it non-negative.
pub fn gap(rec: &InvariantRecord) -> Result<Interval, InvariantError> {
    let bounds = |iv: &Interval, name| match (iv.lo, iv.hi) {
        (Some(l), Some(h)) => Ok((l, h)),
        _ => Err(InvariantError::Unbounded(name)),
    };
    let (sg_lo, sg_hi) = bounds(&rec.sg, "sg")?;
    let (bn_lo, bn_hi) = bounds(&rec.bn, "bn")?;
    let (sn_lo, sn_hi) = bounds(&rec.sn, "sn")?;
    let hi = 2 * sg_hi + bn_hi - 2 - sn_lo;
    if hi < 0 {
        return Err(InvariantError::Contradiction {
            rule: "upper-bound",
            field: "sn",
        });
    }
    Interval::closed((2 * sg_lo + bn_lo - 2 - sn_hi).max(0), hi)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwistRegime {
    Positive,
    Zero,
    MinusOne,
    LessThanMinusOne,
}

impl TwistRegime {
    pub const ALL: [TwistRegime; 4] = [
        TwistRegime::Positive,
        TwistRegime::Zero,
        TwistRegime::MinusOne,
        TwistRegime::LessThanMinusOne,
    ];

    pub fn label(self) -> &'static str {
        match self {
            TwistRegime::Positive => "m>0",
            TwistRegime::Zero => "m=0",
            TwistRegime::MinusOne => "m=-1",
            TwistRegime::LessThanMinusOne => "m<-1",
        }
    }

    pub fn of(m: i64) -> Self {
        match m {
            m if m > 0 => TwistRegime::Positive,
            0 => TwistRegime::Zero,
            -1 => TwistRegime::MinusOne,
            _ => TwistRegime::LessThanMinusOne,
        }
    }
}

/// What is known about `ξ_{(1),m}` in each regime of `m`, derived from the
/// declared facts listed on the returned record.
pub fn table1(regime: TwistRegime) -> InvariantRecord {
    let mut r = InvariantRecord::unknown(format!("xi_(1),m {}", regime.label()));
    let mut assume = |fact, reason: &str| r.assume(fact, reason).expect("table facts are consistent");
    assume(
        Fact::SupportedBy { genus: 1, boundary: 1 },
        "defining open book (Sigma, phi_(1),m) on the one-holed torus",
    );
    match regime {
        TwistRegime::Positive => {
            assume(Fact::SupportGenusAtLeast { genus: 1 }, "support genus is one for m > 0");
        }
        TwistRegime::Zero => {
            assume(Fact::TightS3, "xi_(1),0 is the standard tight contact structure on S^3");
        }
        TwistRegime::MinusOne | TwistRegime::LessThanMinusOne => {
            assume(Fact::Overtwisted, "(Sigma, phi_(1),m) is not right-veering for m <= 0");
            assume(Fact::PlanarSupport, "overtwisted contact structures have planar supporting open books");
            assume(Fact::H1Trivial, "M_(1),m is an integral homology sphere");
            assume(
                Fact::SupportedBy { genus: 0, boundary: 9 },
                "planar open book (P #_b P', D_r^m phi D_b^-1 D_a^-1 psi) supports xi_(1),m",
            );
            if regime == TwistRegime::MinusOne {
                assume(Fact::NotLensSpace, "M_(1),-1 is the Brieskorn sphere Sigma(2,3,7)");
            } else {
                assume(
                    Fact::Hyperbolic,
                    "M_(1),m is hyperbolic for m outside the exceptional set {-1,0,1}",
                );
            }
        }
    }
    planar_low_bn_tags(&r).expect("table facts are consistent")
}

/// The rows of [`table1`] laid out as a text table.
pub fn table1_text() -> String {
    let mut out = String::from("regime | sg | bn    | sn\n");
    for regime in TwistRegime::ALL {
        let r = table1(regime);
        out.push_str(&format!(
            "{:<6} | {:<2} | {:<5} | {}\n",
            regime.label(),
            r.sg.to_string(),
            r.bn.to_string(),
            r.sn
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: i64, hi: i64) -> Interval {
        Interval::closed(lo, hi).unwrap()
    }

    fn rec(sg: Interval, bn: Interval, sn: Interval) -> InvariantRecord {
        InvariantRecord::with_bounds(sg, bn, sn)
    }

    #[test]
    fn interval_display_and_validation() {
        assert_eq!(Interval::point(3).to_string(), "3");
        assert_eq!(iv(4, 9).to_string(), "[4,9]");
        assert_eq!(Interval::at_least(-1).to_string(), "[-1,inf]");
        assert_eq!(Interval::closed(2, 1), Err(InvariantError::EmptyInterval { lo: 2, hi: 1 }));
        assert!(iv(1, 2).within(&iv(0, 5)));
        assert!(!Interval::at_least(1).within(&iv(0, 5)));
    }

    #[test]
    fn refine_examples() {
        let r = refine(&rec(Interval::point(0), iv(4, 9), Interval::at_least(-1))).unwrap();
        assert_eq!(r.sn, iv(1, 7));

        let r = refine(&rec(Interval::point(1), Interval::point(1), Interval::at_least(-1))).unwrap();
        assert_eq!(r.sn, Interval::point(1));

        let mut tight = rec(Interval::point(0), Interval::point(1), Interval::at_least(-1));
        tight.tags.insert(Tag::TightS3);
        let r = refine(&tight).unwrap();
        assert_eq!(r.sn, Interval::point(-1));
    }

    #[test]
    fn sn_minus_one_means_tight_sphere() {
        let r = refine(&rec(Interval::at_least(0), Interval::at_least(1), Interval::point(-1))).unwrap();
        assert!(r.tags.contains(&Tag::TightS3));
        assert_eq!((r.sg, r.bn), (Interval::point(0), Interval::point(1)));

        let mut ot = InvariantRecord::unknown("ot");
        ot.assume(Fact::Overtwisted, "given").unwrap();
        let r = refine(&ot).unwrap();
        assert_eq!(r.sn.lo(), Some(0));
        ot.tags.insert(Tag::TightS3);
        assert_eq!(refine(&ot).unwrap_err().rule(), Some("tight-s3"));
    }

    #[test]
    fn inconsistent_record_is_a_contradiction() {
        let err = refine(&rec(Interval::point(0), Interval::point(2), Interval::point(5))).unwrap_err();
        assert!(matches!(err, InvariantError::Contradiction { .. }));
    }

    #[test]
    fn upper_bound_propagates_backwards() {
        // sn ≥ 5 with sg ≤ 1 forces bn ≥ 5 − 2 + 2 = 5.
        let r = refine(&rec(iv(0, 1), Interval::at_least(1), Interval::at_least(5))).unwrap();
        assert_eq!(r.bn.lo(), Some(5));
        // sn ≥ 5 with bn ≤ 2 forces sg ≥ 3.
        let r = refine(&rec(Interval::at_least(0), iv(1, 2), Interval::at_least(5))).unwrap();
        assert_eq!(r.sg.lo(), Some(3));
    }

    #[test]
    fn lower_bound_propagates_backwards() {
        // sn ≤ 2 caps sg at 1 (min term is at least 2sg − 1).
        let r = refine(&rec(Interval::at_least(0), Interval::at_least(1), iv(-1, 2))).unwrap();
        assert_eq!(r.sg.hi(), Some(1));
        // sg ≥ 1 and sn ≤ 2: 2sg + 1 = 3 > 2, so bn ≤ 2 − 2 + 2 = 2.
        let r = refine(&rec(Interval::at_least(1), Interval::at_least(1), iv(-1, 2))).unwrap();
        assert_eq!(r.bn.hi(), Some(2));
    }

    #[test]
    fn witness_bounds() {
        let mut r = InvariantRecord::unknown("w");
        r.assume(Fact::SupportedBy { genus: 0, boundary: 9 }, "given").unwrap();
        let out = refine(&r).unwrap();
        assert_eq!(out.sg, Interval::point(0));
        assert_eq!(out.bn.hi(), Some(9));
        assert_eq!(out.sn.hi(), Some(7));
    }

    #[test]
    fn planar_tags() {
        let r = planar_low_bn_tags(&rec(Interval::point(0), Interval::point(2), Interval::at_least(-1))).unwrap();
        assert!(r.tags.contains(&Tag::LensSpace));
        assert_eq!(r.sn, Interval::point(0));

        let r = planar_low_bn_tags(&rec(Interval::point(0), Interval::point(3), Interval::at_least(-1))).unwrap();
        assert!(r.tags.contains(&Tag::SmallSFS));

        let mut h = rec(Interval::point(0), Interval::at_least(1), Interval::at_least(-1));
        h.tags.insert(Tag::Hyperbolic);
        let r = planar_low_bn_tags(&h).unwrap();
        assert_eq!(r.bn.lo(), Some(4));
        assert_eq!(r.sn.lo(), Some(1));

        h.bn = iv(1, 3);
        assert!(planar_low_bn_tags(&h).is_err());

        let not_planar = rec(Interval::point(1), Interval::point(1), Interval::at_least(-1));
        let r = planar_low_bn_tags(&not_planar).unwrap();
        assert!(r.tags.is_empty());
    }

    #[test]
    fn connect_sum_examples() {
        assert_eq!(connect_sum_d3(&rat(3, 2), &rat(-3, 2)), rat(1, 2));
        assert_eq!(connect_sum_d3(&rat(-1, 2), &rat(-1, 2)), rat(-1, 2));
        assert_eq!(connect_sum_d3(&rat(0, 1), &rat(0, 1)), rat(1, 2));
    }

    #[test]
    fn overtwisted_comparisons() {
        let make = |d3: Rat, h1: bool| {
            let mut r = InvariantRecord::unknown("x");
            r.overtwisted = Some(true);
            r.h1_trivial = Some(h1);
            r.d3 = Some(d3);
            r
        };
        assert_eq!(overtwisted_same(&make(rat(1, 2), true), &make(rat(1, 2), true)), Comparison::Same);
        assert_eq!(
            overtwisted_same(&make(rat(1, 2), true), &make(rat(3, 2), true)),
            Comparison::Different
        );
        assert_eq!(
            overtwisted_same(&make(rat(1, 2), false), &make(rat(1, 2), false)),
            Comparison::Undecidable
        );
        let mut missing = make(rat(1, 2), true);
        missing.d3 = None;
        assert_eq!(overtwisted_same(&missing, &make(rat(1, 2), true)), Comparison::Undecidable);
    }

    #[test]
    fn gap_examples() {
        let r = rec(Interval::point(0), Interval::point(2), Interval::point(-1));
        assert_eq!(gap(&r).unwrap(), Interval::point(1));
        assert_eq!(gap(&InvariantRecord::unknown("u")), Err(InvariantError::Unbounded("sg")));
        // Independent interval ends would allow 4 − 2 − 7 = −5.
        let wide = rec(Interval::point(0), iv(4, 9), iv(1, 7));
        assert_eq!(gap(&wide).unwrap(), iv(0, 6));
        let impossible = rec(Interval::point(0), Interval::point(2), Interval::point(3));
        assert!(gap(&impossible).is_err());
    }

    #[test]
    fn table_rows() {
        let pos = table1(TwistRegime::Positive);
        assert_eq!((pos.sg, pos.bn, pos.sn), (Interval::point(1), Interval::point(1), Interval::point(1)));
        assert_eq!(gap(&pos).unwrap(), Interval::point(0));

        let zero = table1(TwistRegime::Zero);
        assert_eq!((zero.sg, zero.bn, zero.sn), (Interval::point(0), Interval::point(1), Interval::point(-1)));

        let m1 = table1(TwistRegime::MinusOne);
        assert_eq!((m1.sg, m1.bn, m1.sn), (Interval::point(0), iv(3, 9), Interval::point(1)));

        let lt = table1(TwistRegime::LessThanMinusOne);
        assert_eq!((lt.sg, lt.bn, lt.sn), (Interval::point(0), iv(4, 9), Interval::point(1)));
        assert_eq!(gap(&lt).unwrap(), iv(1, 6));
        assert!(!lt.assumptions.is_empty());
    }

    #[test]
    fn regime_of_m() {
        assert_eq!(TwistRegime::of(5), TwistRegime::Positive);
        assert_eq!(TwistRegime::of(0), TwistRegime::Zero);
        assert_eq!(TwistRegime::of(-1), TwistRegime::MinusOne);
        assert_eq!(TwistRegime::of(-7), TwistRegime::LessThanMinusOne);
    }
}
