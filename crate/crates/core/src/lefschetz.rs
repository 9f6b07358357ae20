//! Handle chain complex of the achiral Lefschetz fibration bounded by a
//! contact open book, and the d3 invariant of the supported plane field.
//!
//! The 4-manifold `X` has one 0-handle, one 1-handle per generator of
//! `H_1(page)` and one 2-handle per twist letter. The cellular boundary
//! `d2` sends the core of each 2-handle to the class of its attaching curve,
//! so `H_2(X) = ker d2`. With `c` the functional given by rotation numbers,
//!
//! ```text
//! d3 = (c² − 2χ(X) − 3σ(X)) / 4 + q
//! ```
//!
//! where `q` counts left-handed twists and `c²` is taken through a rational
//! inverse of the intersection form (the torsion case).

use num_traits::Zero;
use thiserror::Error;

use crate::linalg::{self, int, Int, Matrix, Rat};
use crate::monodromy::count_left_twists;
use crate::surface::{Handedness, OpenBookDesc};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LefschetzError {
    #[error("twist word letter {index} uses curve `{curve}`, which has no H1 class")]
    MissingClass { index: usize, curve: String },
    #[error("curve `{0}` needs a rotation number")]
    MissingRotation(String),
    #[error("c is not in the image of the intersection form: c1 is not torsion")]
    NonTorsionObstruction,
    #[error("sigma override requires c to vanish on H2, but c = {0}")]
    SigmaOverrideUnsound(String),
    #[error("cycle bases do not span the same rational subspace")]
    BasisMismatch,
    #[error("{0}")]
    Dimension(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoHandle {
    pub curve: String,
    /// `+1` for a right-handed twist, `-1` for a left-handed one.
    pub sign: i64,
    pub h1_class: Vec<i64>,
    pub rotation: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandleComplex {
    one_handle_count: usize,
    two_handles: Vec<TwoHandle>,
    left_twists: usize,
}

impl HandleComplex {
    pub fn one_handle_count(&self) -> usize {
        self.one_handle_count
    }

    pub fn two_handles(&self) -> &[TwoHandle] {
        &self.two_handles
    }

    pub fn two_handle_count(&self) -> usize {
        self.two_handles.len()
    }

    pub fn left_twists(&self) -> usize {
        self.left_twists
    }

    /// `N × k` boundary matrix whose `i`-th column is the class of the
    /// `i`-th attaching curve. Handedness does not enter.
    pub fn d2_matrix(&self) -> Matrix<Int> {
        let columns: Vec<Vec<Int>> = self
            .two_handles
            .iter()
            .map(|h| h.h1_class.iter().map(|&v| int(v)).collect())
            .collect();
        Matrix::from_columns(&columns, self.one_handle_count)
    }
}

pub fn build_complex(book: &OpenBookDesc) -> Result<HandleComplex, LefschetzError> {
    let mut two_handles = Vec::with_capacity(book.word().len());
    for (index, letter) in book.word().letters().iter().enumerate() {
        let curve = book.curve(&letter.curve);
        let class = curve.and_then(|c| c.h1_class.clone()).ok_or_else(|| {
            LefschetzError::MissingClass {
                index,
                curve: letter.curve.clone(),
            }
        })?;
        two_handles.push(TwoHandle {
            curve: letter.curve.clone(),
            sign: letter.handedness.sign(),
            h1_class: class,
            rotation: curve.and_then(|c| c.rotation),
        });
    }
    Ok(HandleComplex {
        one_handle_count: book.h1_rank(),
        left_twists: two_handles.iter().filter(|h| h.sign == Handedness::Left.sign()).count(),
        two_handles,
    })
}

/// `χ(X) = 1 − N + k`.
pub fn euler_x(cx: &HandleComplex) -> i64 {
    1 - cx.one_handle_count as i64 + cx.two_handle_count() as i64
}

/// A list of 2-chains, each a vector over the 2-handles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleBasis {
    vectors: Vec<Vec<Int>>,
    dim: usize,
}

impl CycleBasis {
    /// `dim` is the number of 2-handles, i.e. the length of every vector.
    pub fn new(vectors: Vec<Vec<Int>>, dim: usize) -> Result<Self, LefschetzError> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != dim) {
            return Err(LefschetzError::Dimension(format!(
                "cycle vector has length {}, expected {dim}",
                bad.len()
            )));
        }
        Ok(CycleBasis { vectors, dim })
    }

    pub fn from_i64(vectors: &[Vec<i64>], dim: usize) -> Result<Self, LefschetzError> {
        Self::new(
            vectors.iter().map(|v| v.iter().map(|&x| int(x)).collect()).collect(),
            dim,
        )
    }

    pub fn vectors(&self) -> &[Vec<Int>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Appends `extra` zero coordinates, for 2-handles added after the
    /// existing ones.
    pub fn padded(&self, extra: usize) -> CycleBasis {
        CycleBasis {
            vectors: self
                .vectors
                .iter()
                .map(|v| {
                    let mut v = v.clone();
                    v.extend(std::iter::repeat_n(Int::zero(), extra));
                    v
                })
                .collect(),
            dim: self.dim + extra,
        }
    }

    /// `k × r` matrix whose columns are the basis vectors.
    fn as_columns(&self) -> Matrix<Rat> {
        let cols: Vec<Vec<Rat>> = self
            .vectors
            .iter()
            .map(|v| v.iter().map(|x| Rat::from_integer(x.clone())).collect())
            .collect();
        Matrix::from_columns(&cols, self.dim)
    }
}

/// Saturated lattice basis of `ker d2 = H_2(X; Z)`.
pub fn kernel_d2(cx: &HandleComplex) -> CycleBasis {
    CycleBasis {
        vectors: linalg::integer_kernel(&cx.d2_matrix()),
        dim: cx.two_handle_count(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormProvenance {
    Preset,
    UserSupplied,
}

impl std::fmt::Display for FormProvenance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FormProvenance::Preset => "preset",
            FormProvenance::UserSupplied => "user",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectionForm {
    matrix: Matrix<Rat>,
    provenance: FormProvenance,
}

impl IntersectionForm {
    pub fn new(matrix: Matrix<Rat>, provenance: FormProvenance) -> Result<Self, LefschetzError> {
        if !matrix.is_symmetric() {
            return Err(LefschetzError::Dimension(
                "intersection form must be a symmetric square matrix".into(),
            ));
        }
        Ok(IntersectionForm { matrix, provenance })
    }

    pub fn identity(n: usize, provenance: FormProvenance) -> Self {
        IntersectionForm {
            matrix: Matrix::identity(n),
            provenance,
        }
    }

    pub fn matrix(&self) -> &Matrix<Rat> {
        &self.matrix
    }

    pub fn provenance(&self) -> FormProvenance {
        self.provenance
    }

    pub fn size(&self) -> usize {
        self.matrix.rows()
    }
}

/// Re-expresses a form given on `from` in the basis `to`: with
/// `to_j = Σ_i T_ij from_i`, the result is `Tᵀ Q T`.
pub fn change_basis(
    form: &IntersectionForm,
    from: &CycleBasis,
    to: &CycleBasis,
) -> Result<IntersectionForm, LefschetzError> {
    if form.size() != from.len() {
        return Err(LefschetzError::Dimension(format!(
            "form is {0}x{0} but its basis has {1} vectors",
            form.size(),
            from.len()
        )));
    }
    if from.dim() != to.dim() || from.len() != to.len() {
        return Err(LefschetzError::BasisMismatch);
    }
    let f = from.as_columns();
    if linalg::rank(&f) != from.len() {
        return Err(LefschetzError::BasisMismatch);
    }
    let mut t = Matrix::<Rat>::zeros(from.len(), to.len());
    for (j, v) in to.vectors().iter().enumerate() {
        let rhs: Vec<Rat> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
        let coeffs = linalg::solve(&f, &rhs).ok_or(LefschetzError::BasisMismatch)?;
        for (i, c) in coeffs.into_iter().enumerate() {
            t[(i, j)] = c;
        }
    }
    if linalg::rank(&t) != to.len() {
        return Err(LefschetzError::BasisMismatch);
    }
    Ok(IntersectionForm {
        matrix: t.transpose().mul(&form.matrix).mul(&t),
        provenance: form.provenance,
    })
}

pub fn signature(form: &IntersectionForm) -> i64 {
    linalg::signature(&form.matrix)
}

/// Values `⟨c, b_j⟩ = Σ_i rot(curve_i) · (b_j)_i` on each basis vector.
pub fn c_functional(cx: &HandleComplex, basis: &CycleBasis) -> Result<Vec<Rat>, LefschetzError> {
    if basis.dim() != cx.two_handle_count() {
        return Err(LefschetzError::Dimension(format!(
            "cycle basis has {} coordinates, complex has {} 2-handles",
            basis.dim(),
            cx.two_handle_count()
        )));
    }
    basis
        .vectors()
        .iter()
        .map(|v| {
            let mut acc = Int::zero();
            for (coeff, handle) in v.iter().zip(cx.two_handles()) {
                if coeff.is_zero() {
                    continue;
                }
                let rot = handle
                    .rotation
                    .ok_or_else(|| LefschetzError::MissingRotation(handle.curve.clone()))?;
                acc += coeff * int(rot);
            }
            Ok(Rat::from_integer(acc))
        })
        .collect()
}

/// `vᵀ w` for any rational `w` with `Q w = v`.
pub fn c_squared(form: &IntersectionForm, v: &[Rat]) -> Result<Rat, LefschetzError> {
    if v.len() != form.size() {
        return Err(LefschetzError::Dimension(format!(
            "functional has {} entries, form is {}x{}",
            v.len(),
            form.size(),
            form.size()
        )));
    }
    let w = linalg::solve(&form.matrix, v).ok_or(LefschetzError::NonTorsionObstruction)?;
    Ok(v.iter().zip(&w).fold(Rat::zero(), |acc, (a, b)| acc + a * b))
}

/// Where σ(X) and the intersection form come from.
#[derive(Debug, Clone)]
pub enum FormSource {
    /// A form together with the cycle basis it is written in. The basis must
    /// span `ker d2` over the rationals.
    Form {
        form: IntersectionForm,
        basis: CycleBasis,
    },
    /// An externally known signature; only valid when `c` vanishes on `H_2`.
    SigmaOverride(i64),
}

impl FormSource {
    pub fn provenance_label(&self) -> String {
        match self {
            FormSource::Form { form, .. } => form.provenance.to_string(),
            FormSource::SigmaOverride(s) => format!("sigma={s}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct D3Report {
    pub chi_x: i64,
    pub sigma_x: i64,
    pub q: i64,
    pub c_squared: Rat,
    pub d3: Rat,
    pub provenance: String,
}

impl D3Report {
    /// Recomputes `(c² − 2χ − 3σ)/4 + q` from the stored parts.
    pub fn formula_value(&self) -> Rat {
        d3_formula(&self.c_squared, self.chi_x, self.sigma_x, self.q)
    }
}

pub fn d3_formula(c_squared: &Rat, chi_x: i64, sigma_x: i64, q: i64) -> Rat {
    (c_squared - linalg::rat_int(2 * chi_x) - linalg::rat_int(3 * sigma_x)) / linalg::rat_int(4)
        + linalg::rat_int(q)
}

pub fn d3(book: &OpenBookDesc, source: &FormSource) -> Result<D3Report, LefschetzError> {
    let cx = build_complex(book)?;
    let kernel = kernel_d2(&cx);
    let chi_x = euler_x(&cx);
    let q = count_left_twists(book.word()) as i64;
    let c = c_functional(&cx, &kernel)?;
    let (sigma_x, c_sq) = match source {
        FormSource::Form { form, basis } => {
            if basis.dim() != cx.two_handle_count() {
                return Err(LefschetzError::BasisMismatch);
            }
            let d2 = linalg::to_rational(&cx.d2_matrix());
            for v in basis.vectors() {
                let image = d2.mul_vec(&v.iter().map(|x| Rat::from_integer(x.clone())).collect::<Vec<_>>());
                if image.iter().any(|x| !x.is_zero()) {
                    return Err(LefschetzError::BasisMismatch);
                }
            }
            let on_kernel = change_basis(form, basis, &kernel)?;
            (signature(&on_kernel), c_squared(&on_kernel, &c)?)
        }
        FormSource::SigmaOverride(sigma) => {
            if c.iter().any(|x| !x.is_zero()) {
                let shown: Vec<String> = c.iter().map(|x| x.to_string()).collect();
                return Err(LefschetzError::SigmaOverrideUnsound(format!("({})", shown.join(","))));
            }
            (*sigma, Rat::zero())
        }
    };
    Ok(D3Report {
        chi_x,
        sigma_x,
        q,
        d3: d3_formula(&c_sq, chi_x, sigma_x, q),
        c_squared: c_sq,
        provenance: source.provenance_label(),
    })
}
