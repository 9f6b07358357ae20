//! Builders for the open books studied here and the structural operations
//! on them.
//!
//! Words are read left to right; `D_δ^m · D_x D_y^{-1}` is stored as the
//! δ-letters followed by `x`, then `y`. None of χ(X), q, the kernel of d2,
//! σ or c² depend on this order.

use thiserror::Error;

use crate::lefschetz::{CycleBasis, FormProvenance, IntersectionForm};
use crate::linalg::{rat, Rat};
use crate::surface::{CurveOnPage, OpenBookDesc, PageSurface, TwistLetter, TwistWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("the tuple n must contain a nonzero entry")]
    ZeroTuple,
    #[error("m must be non-positive, got {0}")]
    PositiveTwist(i64),
}

/// The one-holed torus open book `(Σ, φ_{n,m})` with
/// `φ_{n,m} = D_δ^m · D_x D_y^{-n_1} ⋯ D_x D_y^{-n_k}`.
///
/// With `expand_delta`, the boundary twist is replaced by `(D_x D_y)^{6m}`;
/// for `m < 0` that is `(D_y^{-1} D_x^{-1})^{6|m|}`. Otherwise δ is kept as
/// a literal, null-homologous curve.
pub fn make_phi_nm(n: &[u32], m: i64, expand_delta: bool) -> Result<OpenBookDesc, ConstructionError> {
    if n.iter().all(|&v| v == 0) {
        return Err(ConstructionError::ZeroTuple);
    }
    let mut curves = vec![
        CurveOnPage::new("x", vec![1, 0], Some(0)),
        CurveOnPage::new("y", vec![0, 1], Some(0)),
    ];
    let mut word = TwistWord::new();
    if expand_delta {
        let reps = 6 * m.unsigned_abs();
        let mut chain = TwistWord::from_letters(vec![TwistLetter::right("x"), TwistLetter::right("y")]);
        if m < 0 {
            chain = chain.inverse();
        }
        for _ in 0..reps {
            word.extend(&chain);
        }
    } else if m != 0 {
        curves.push(CurveOnPage::new("delta", vec![0, 0], Some(0)));
        word.push_power("delta", m);
    }
    for &ni in n {
        word.push(TwistLetter::right("x"));
        word.push_power("y", -i64::from(ni));
    }
    Ok(OpenBookDesc::new(PageSurface::new(1, 1).expect("torus page"), curves, word)
        .expect("φ_{n,m} curves are well formed"))
}

/// The planar open book `(P, D_r^m · φ)` of `-1/m` surgery on the figure
/// eight knot, with its intersection form on the cycles `h_i`.
#[derive(Debug, Clone)]
pub struct Fig8Planar {
    pub book: OpenBookDesc,
    pub form: IntersectionForm,
    pub basis: CycleBasis,
}

/// Names of the 1-handles of the planar page, in H1 coordinate order.
pub const FIG8_ONE_HANDLES: [&str; 4] = ["X", "Y", "Z", "W"];

/// Page `P` has five boundary components; H1 coordinates are the 1-handles
/// `(X, Y, Z, W)`. The word is `|m|` left twists on `r` followed by
/// `D_{γ1} D_{γ2}^{-1} D_{γ3} D_{γ4}^{-1}`. Each `h_i` is
/// `S_{r_i} + S_{γ4} − S_{γ1}` in 2-handle coordinates and the form on
/// them is the identity.
pub fn preset_fig8_planar(m: i64) -> Result<Fig8Planar, ConstructionError> {
    if m > 0 {
        return Err(ConstructionError::PositiveTwist(m));
    }
    let copies = m.unsigned_abs() as usize;
    let curves = vec![
        CurveOnPage::new("gamma1", vec![0, 1, 0, 0], Some(0)),
        CurveOnPage::new("gamma2", vec![1, -1, 0, 0], Some(-1)),
        CurveOnPage::new("gamma3", vec![0, 1, -1, 0], Some(-1)),
        CurveOnPage::new("gamma4", vec![0, 0, 1, -1], Some(-1)),
        CurveOnPage::new("r", vec![0, 1, -1, 1], Some(0)),
    ];
    let mut word = TwistWord::new();
    word.push_power("r", m);
    word.push(TwistLetter::right("gamma1"));
    word.push(TwistLetter::left("gamma2"));
    word.push(TwistLetter::right("gamma3"));
    word.push(TwistLetter::left("gamma4"));
    let book = OpenBookDesc::new(PageSurface::new(0, 5).expect("planar page"), curves, word)
        .expect("figure eight preset is well formed");

    let k = copies + 4;
    let (g1, g4) = (copies, copies + 3);
    let vectors: Vec<Vec<i64>> = (0..copies)
        .map(|i| {
            let mut v = vec![0; k];
            v[i] = 1;
            v[g4] = 1;
            v[g1] = -1;
            v
        })
        .collect();
    Ok(Fig8Planar {
        book,
        form: IntersectionForm::identity(copies, FormProvenance::Preset),
        basis: CycleBasis::from_i64(&vectors, k).expect("h_i have one entry per 2-handle"),
    })
}

/// The planar open book `(P', D_b^{-1} D_a^{-1} · ψ)` of the overtwisted
/// structure on `S^3` with d3 = −3/2, where ψ is four right-handed twists
/// on unlabeled curves. Homology classes and rotation numbers are not
/// recorded, so only the declared d3 is available.
pub fn preset_pprime() -> (OpenBookDesc, Rat) {
    let mut curves = vec![CurveOnPage::unclassed("a"), CurveOnPage::unclassed("b")];
    let mut word = TwistWord::from_letters(vec![TwistLetter::left("b"), TwistLetter::left("a")]);
    for i in 1..=4 {
        let name = format!("c{i}");
        curves.push(CurveOnPage::unclassed(name.clone()));
        word.push(TwistLetter::right(name));
    }
    let book = OpenBookDesc::new(PageSurface::new(0, 5).expect("planar page"), curves, word)
        .expect("P' preset is well formed");
    (book, rat(-3, 2))
}

fn renamed(curve: &CurveOnPage, prefix: &str, pad_left: usize, pad_right: usize) -> CurveOnPage {
    CurveOnPage {
        name: format!("{prefix}{}", curve.name),
        h1_class: curve.h1_class.as_ref().map(|c| {
            let mut v = vec![0; pad_left];
            v.extend_from_slice(c);
            v.extend(std::iter::repeat_n(0, pad_right));
            v
        }),
        rotation: curve.rotation,
    }
}

/// Boundary connected sum of pages with the concatenated monodromy
/// `word_a · word_b`. Curves are renamed `left/…` and `right/…`.
pub fn boundary_connect_sum(a: &OpenBookDesc, b: &OpenBookDesc) -> OpenBookDesc {
    let (pa, pb) = (a.page(), b.page());
    let page = PageSurface::new(pa.genus() + pb.genus(), pa.boundary_count() + pb.boundary_count() - 1)
        .expect("boundary count stays positive");
    let (na, nb) = (a.h1_rank(), b.h1_rank());
    let curves = a
        .curves()
        .map(|c| renamed(c, "left/", 0, nb))
        .chain(b.curves().map(|c| renamed(c, "right/", na, 0)))
        .collect();
    let letters = a
        .word()
        .letters()
        .iter()
        .map(|l| TwistLetter {
            curve: format!("left/{}", l.curve),
            handedness: l.handedness,
        })
        .chain(b.word().letters().iter().map(|l| TwistLetter {
            curve: format!("right/{}", l.curve),
            handedness: l.handedness,
        }))
        .collect();
    OpenBookDesc::new(page, curves, TwistWord::from_letters(letters))
        .expect("connect sum of valid open books is valid")
}

/// Plumbs a positive Hopf band onto the page: one more boundary component,
/// a new core curve with class `e_{N+1}` and rotation 0, and a right-handed
/// twist on it appended to the word.
pub fn positive_stabilize(book: &OpenBookDesc) -> OpenBookDesc {
    let page = book.page();
    let new_page =
        PageSurface::new(page.genus(), page.boundary_count() + 1).expect("boundary count stays positive");
    let n = book.h1_rank();
    let name = (1..)
        .map(|i| format!("stab{i}"))
        .find(|candidate| book.curve(candidate).is_none())
        .expect("unbounded name supply");
    let mut curves: Vec<CurveOnPage> = book.curves().map(|c| renamed(c, "", 0, 1)).collect();
    let mut class = vec![0; n + 1];
    class[n] = 1;
    curves.push(CurveOnPage::new(name.clone(), class, Some(0)));
    let mut word = book.word().clone();
    word.push(TwistLetter::right(name));
    OpenBookDesc::new(new_page, curves, word).expect("stabilization of a valid open book is valid")
}
