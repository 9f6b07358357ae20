//! Pages, curves on pages, twist words, and abstract open books.
//!
//! A page is recorded only by its topological type `(genus, boundary)`.
//! Curves are recorded by their class in `H_1(page)` with respect to an
//! implicit positional basis of rank `2g + b - 1`; no embedded geometry is
//! kept. A monodromy is a word of signed Dehn twists, read left to right.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("a page must have at least one boundary component")]
    NoBoundary,
    #[error("curve `{name}` has an H1 class of length {got}, page rank is {expected}")]
    ClassLength {
        name: String,
        expected: usize,
        got: usize,
    },
    #[error("duplicate curve name `{0}`")]
    DuplicateCurve(String),
    #[error("twist word refers to unknown curve `{0}`")]
    UnknownCurve(String),
}

/// Compact oriented surface with nonempty boundary, `Σ_{g,b}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PageSurface {
    genus: u32,
    boundary_count: u32,
}

impl PageSurface {
    pub fn new(genus: u32, boundary_count: u32) -> Result<Self, SurfaceError> {
        if boundary_count == 0 {
            return Err(SurfaceError::NoBoundary);
        }
        Ok(PageSurface {
            genus,
            boundary_count,
        })
    }

    pub fn disk() -> Self {
        PageSurface {
            genus: 0,
            boundary_count: 1,
        }
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn boundary_count(&self) -> u32 {
        self.boundary_count
    }

    /// `χ(Σ) = 2 - 2g - b`.
    pub fn euler_char(&self) -> i64 {
        2 - 2 * i64::from(self.genus) - i64::from(self.boundary_count)
    }

    /// `-χ(Σ) = 2g + b - 2`, the quantity minimized by the support norm.
    pub fn page_norm(&self) -> i64 {
        -self.euler_char()
    }

    /// Rank of `H_1(Σ)`, which is also the number of 1-handles of the
    /// associated Lefschetz fibration.
    pub fn h1_rank(&self) -> usize {
        (2 * self.genus + self.boundary_count - 1) as usize
    }
}

impl fmt::Display for PageSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.genus, self.boundary_count)
    }
}

pub fn euler_char(page: PageSurface) -> i64 {
    page.euler_char()
}

pub fn page_norm(page: PageSurface) -> i64 {
    page.page_norm()
}

pub fn h1_rank(page: PageSurface) -> usize {
    page.h1_rank()
}

/// A named simple closed curve on a page.
///
/// `h1_class` may be absent for curves whose homology is not recorded; such
/// curves can appear in a word but cannot feed the handle complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveOnPage {
    pub name: String,
    pub h1_class: Option<Vec<i64>>,
    pub rotation: Option<i64>,
}

impl CurveOnPage {
    pub fn new(name: impl Into<String>, h1_class: Vec<i64>, rotation: Option<i64>) -> Self {
        CurveOnPage {
            name: name.into(),
            h1_class: Some(h1_class),
            rotation,
        }
    }

    pub fn unclassed(name: impl Into<String>) -> Self {
        CurveOnPage {
            name: name.into(),
            h1_class: None,
            rotation: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    /// Positive Dehn twist `D_c`.
    Right,
    /// Negative Dehn twist `D_c^{-1}`.
    Left,
}

impl Handedness {
    /// `+1` for a right-handed twist, `-1` for a left-handed one.
    pub fn sign(self) -> i64 {
        match self {
            Handedness::Right => 1,
            Handedness::Left => -1,
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistLetter {
    pub curve: String,
    pub handedness: Handedness,
}

impl TwistLetter {
    pub fn right(curve: impl Into<String>) -> Self {
        TwistLetter {
            curve: curve.into(),
            handedness: Handedness::Right,
        }
    }

    pub fn left(curve: impl Into<String>) -> Self {
        TwistLetter {
            curve: curve.into(),
            handedness: Handedness::Left,
        }
    }
}

/// An ordered factorization into Dehn twists. Powers are always expanded,
/// so `D_y^{-2}` is stored as two `Left` letters on `y`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TwistWord {
    letters: Vec<TwistLetter>,
}

impl TwistWord {
    pub fn new() -> Self {
        TwistWord::default()
    }

    pub fn from_letters(letters: Vec<TwistLetter>) -> Self {
        TwistWord { letters }
    }

    /// Appends `D_curve^exponent`, expanded into `|exponent|` letters.
    pub fn push_power(&mut self, curve: &str, exponent: i64) {
        let handedness = if exponent >= 0 {
            Handedness::Right
        } else {
            Handedness::Left
        };
        for _ in 0..exponent.unsigned_abs() {
            self.letters.push(TwistLetter {
                curve: curve.to_string(),
                handedness,
            });
        }
    }

    pub fn push(&mut self, letter: TwistLetter) {
        self.letters.push(letter);
    }

    pub fn extend(&mut self, other: &TwistWord) {
        self.letters.extend(other.letters.iter().cloned());
    }

    pub fn concat(&self, other: &TwistWord) -> TwistWord {
        let mut out = self.clone();
        out.extend(other);
        out
    }

    /// The word of the inverse mapping class: reversed, with every letter flipped.
    pub fn inverse(&self) -> TwistWord {
        TwistWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| TwistLetter {
                    curve: l.curve.clone(),
                    handedness: l.handedness.inverse(),
                })
                .collect(),
        }
    }

    pub fn letters(&self) -> &[TwistLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

/// An abstract open book `(Σ, φ)` together with the homological data of
/// the curves its monodromy twists along.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenBookDesc {
    page: PageSurface,
    curves: BTreeMap<String, CurveOnPage>,
    word: TwistWord,
}

impl OpenBookDesc {
    pub fn new(
        page: PageSurface,
        curves: Vec<CurveOnPage>,
        word: TwistWord,
    ) -> Result<Self, SurfaceError> {
        let rank = page.h1_rank();
        let mut table = BTreeMap::new();
        for curve in curves {
            if let Some(class) = &curve.h1_class {
                if class.len() != rank {
                    return Err(SurfaceError::ClassLength {
                        name: curve.name.clone(),
                        expected: rank,
                        got: class.len(),
                    });
                }
            }
            if table.contains_key(&curve.name) {
                return Err(SurfaceError::DuplicateCurve(curve.name));
            }
            table.insert(curve.name.clone(), curve);
        }
        if let Some(bad) = word.letters().iter().find(|l| !table.contains_key(&l.curve)) {
            return Err(SurfaceError::UnknownCurve(bad.curve.clone()));
        }
        Ok(OpenBookDesc {
            page,
            curves: table,
            word,
        })
    }

    /// The trivial open book of `S^3`: a disk page and identity monodromy.
    pub fn disk() -> Self {
        OpenBookDesc {
            page: PageSurface::disk(),
            curves: BTreeMap::new(),
            word: TwistWord::new(),
        }
    }

    pub fn page(&self) -> PageSurface {
        self.page
    }

    pub fn word(&self) -> &TwistWord {
        &self.word
    }

    pub fn curve(&self, name: &str) -> Option<&CurveOnPage> {
        self.curves.get(name)
    }

    /// Curves in name order.
    pub fn curves(&self) -> impl Iterator<Item = &CurveOnPage> {
        self.curves.values()
    }

    pub fn h1_rank(&self) -> usize {
        self.page.h1_rank()
    }
}
