//! Twist-word algebra and the induced action on first homology.
//!
//! Sign convention: a right-handed twist acts on `H_1` by the transvection
//! `D_c(a) = a + ⟨a,c⟩ c`, a left-handed twist by its inverse. The action of
//! a word is the matrix product of its letters in word order, so
//! `action(w1 ++ w2) = action(w1) · action(w2)`.

use thiserror::Error;

use crate::linalg::{int, Int, Matrix};
use crate::surface::{Handedness, OpenBookDesc, TwistWord};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonodromyError {
    #[error("pairing must be a skew-symmetric {expected}x{expected} matrix")]
    BadPairing { expected: usize },
    #[error("curve `{0}` has no H1 class")]
    MissingClass(String),
    #[error("torus classification needs a (1,1) page, got {0}")]
    WrongPage(String),
}

pub fn count_left_twists(word: &TwistWord) -> usize {
    word.letters()
        .iter()
        .filter(|l| l.handedness == Handedness::Left)
        .count()
}

/// Automorphism of `H_1(page)` induced by a monodromy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H1Action {
    matrix: Matrix<Int>,
    pairing: Matrix<Int>,
}

impl H1Action {
    pub fn matrix(&self) -> &Matrix<Int> {
        &self.matrix
    }

    pub fn pairing(&self) -> &Matrix<Int> {
        &self.pairing
    }

    pub fn trace(&self) -> Int {
        self.matrix.trace()
    }

    /// `Mᵀ P M == P`.
    pub fn preserves_pairing(&self) -> bool {
        self.matrix
            .transpose()
            .mul(&self.pairing)
            .mul(&self.matrix)
            == self.pairing
    }
}

fn is_skew(p: &Matrix<Int>) -> bool {
    p.rows() == p.cols()
        && (0..p.rows()).all(|i| (0..=i).all(|j| p[(i, j)] == -p[(j, i)].clone()))
}

/// The standard symplectic pairing on `H_1(Σ_{1,1})`, `⟨x,y⟩ = 1`.
pub fn torus_pairing() -> Matrix<Int> {
    crate::linalg::int_matrix(&[&[0, 1], &[-1, 0]])
}

/// Transvection matrix `I + sign · c cᵀ Pᵀ`, acting on column vectors.
fn transvection(class: &[Int], pairing: &Matrix<Int>, sign: i64) -> Matrix<Int> {
    let n = class.len();
    // ⟨a,c⟩ = aᵀ P c, so the row functional is (P c)ᵀ.
    let pc = pairing.mul_vec(class);
    let mut t = Matrix::<Int>::identity(n);
    let s = int(sign);
    for i in 0..n {
        for j in 0..n {
            t[(i, j)] += &s * &class[i] * &pc[j];
        }
    }
    t
}

pub fn h1_action(book: &OpenBookDesc, pairing: &Matrix<Int>) -> Result<H1Action, MonodromyError> {
    let n = book.h1_rank();
    if pairing.rows() != n || !is_skew(pairing) {
        return Err(MonodromyError::BadPairing { expected: n });
    }
    let mut matrix = Matrix::<Int>::identity(n);
    for letter in book.word().letters() {
        let class = book
            .curve(&letter.curve)
            .and_then(|c| c.h1_class.as_ref())
            .ok_or_else(|| MonodromyError::MissingClass(letter.curve.clone()))?;
        let class: Vec<Int> = class.iter().map(|&v| int(v)).collect();
        matrix = matrix.mul(&transvection(&class, pairing, letter.handedness.sign()));
    }
    Ok(H1Action {
        matrix,
        pairing: pairing.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TorusClass {
    Periodic,
    Reducible,
    PseudoAnosov,
}

impl std::fmt::Display for TorusClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TorusClass::Periodic => "periodic",
            TorusClass::Reducible => "reducible",
            TorusClass::PseudoAnosov => "pseudo-Anosov",
        })
    }
}

/// Nielsen–Thurston type of a monodromy of the one-holed torus, read off
/// from the trace of its `SL(2,Z)` image.
pub fn torus_nielsen_thurston(book: &OpenBookDesc) -> Result<TorusClass, MonodromyError> {
    let page = book.page();
    if page.genus() != 1 || page.boundary_count() != 1 {
        return Err(MonodromyError::WrongPage(page.to_string()));
    }
    let action = h1_action(book, &torus_pairing())?;
    Ok(classify_sl2(action.matrix()))
}

pub fn classify_sl2(m: &Matrix<Int>) -> TorusClass {
    let trace = m.trace();
    let abs = if trace < int(0) { -trace } else { trace };
    if abs < int(2) {
        TorusClass::Periodic
    } else if abs > int(2) {
        TorusClass::PseudoAnosov
    } else if m.is_identity() || m.map(|v| -v.clone()).is_identity() {
        TorusClass::Periodic
    } else {
        TorusClass::Reducible
    }
}
