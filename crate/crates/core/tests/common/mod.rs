//! Reference computations used to cross-check the library. Everything here is
//! written directly against `BigRational` and shares no code with
//! `openbook::linalg`.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn q_big(v: &BigInt) -> Q {
    Q::from_integer(v.clone())
}

pub fn rows_q(rows: &[Vec<i64>]) -> Vec<Vec<Q>> {
    rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
}

/// Plain Gauss-Jordan elimination; returns the reduced matrix and its pivot
/// columns.
pub fn gauss_jordan(mut a: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    (a, pivots)
}

pub fn rank_q(a: &[Vec<Q>]) -> usize {
    gauss_jordan(a.to_vec()).1.len()
}

/// Basis of the rational null space of `a` (`rows × cols`), one vector per
/// free column.
pub fn nullspace(a: &[Vec<Q>], cols: usize) -> Vec<Vec<Q>> {
    let (red, pivots) = gauss_jordan(a.to_vec());
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); cols];
            v[free] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -red[row][free].clone();
            }
            v
        })
        .collect()
}

pub fn mat_vec(a: &[Vec<Q>], v: &[Q]) -> Vec<Q> {
    a.iter()
        .map(|row| row.iter().zip(v).fold(Q::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

pub fn det(mut a: Vec<Vec<Q>>) -> Q {
    let n = a.len();
    let mut d = Q::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Q::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let delta = &f * &a[c][j];
                a[i][j] -= delta;
            }
        }
    }
    d
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// gcd of the maximal minors of the matrix whose rows are `vectors`. A set
/// of independent integer vectors spans a saturated lattice exactly when
/// this is one.
pub fn maximal_minor_gcd(vectors: &[Vec<BigInt>]) -> BigInt {
    let k = vectors.len();
    let n = vectors.first().map_or(0, Vec::len);
    let mut g = BigInt::zero();
    for cols in combinations(n, k) {
        let minor: Vec<Vec<Q>> = vectors
            .iter()
            .map(|v| cols.iter().map(|&c| q_big(&v[c])).collect())
            .collect();
        let d = det(minor);
        assert!(d.is_integer());
        g = g.gcd(&d.to_integer());
    }
    g
}

/// Coefficients `x` with `Σ x_i vectors_i = target`, if any.
pub fn coordinates(vectors: &[Vec<BigInt>], target: &[Q]) -> Option<Vec<Q>> {
    let n = target.len();
    let k = vectors.len();
    let aug: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = vectors.iter().map(|v| q_big(&v[i])).collect();
            row.push(target[i].clone());
            row
        })
        .collect();
    let (red, pivots) = gauss_jordan(aug);
    if pivots.contains(&k) {
        return None;
    }
    let mut x = vec![Q::zero(); k];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = red[row][k].clone();
    }
    Some(x)
}

// ---- polynomials over Q, coefficient vectors from low to high degree ----

pub type Poly = Vec<Q>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn degree(p: &Poly) -> usize {
    p.len().saturating_sub(1)
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| a.get(i).cloned().unwrap_or_else(Q::zero) - b.get(i).cloned().unwrap_or_else(Q::zero))
            .collect(),
    )
}

fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let b = trim(b.clone());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.clone());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![Q::zero(); r.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while !r.is_empty() && r.len() >= b.len() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() / &lead;
        for (i, c) in b.iter().enumerate() {
            let delta = &f * c;
            r[i + shift] -= delta;
        }
        quot[shift] = f;
        r = trim(r);
    }
    (trim(quot), r)
}

fn monic(p: Poly) -> Poly {
    let p = trim(p);
    match p.last().cloned() {
        Some(lead) => p.into_iter().map(|c| c / &lead).collect(),
        None => p,
    }
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = div_rem(&a, &b).1;
        a = b;
        b = r;
    }
    monic(a)
}

/// `det(λI − A)` by the Faddeev-LeVerrier recursion.
pub fn char_poly(a: &[Vec<Q>]) -> Poly {
    let n = a.len();
    let mut coeffs = vec![Q::zero(); n + 1];
    coeffs[n] = Q::one();
    let mut m: Vec<Vec<Q>> = vec![vec![Q::zero(); n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Q::zero(), |acc, l| acc + &a[i][l] * &m[l][j]))
                    .collect()
            })
            .collect();
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += coeffs[n - k + 1].clone();
        }
        m = next;
        let trace = (0..n).fold(Q::zero(), |acc, i| {
            acc + (0..n).fold(Q::zero(), |s, l| s + &a[i][l] * &m[l][i])
        });
        coeffs[n - k] = -trace / q(k as i64);
    }
    coeffs
}

/// Yun's square-free decomposition: pairs `(factor, multiplicity)`.
fn square_free(f: &Poly) -> Vec<(Poly, usize)> {
    let f = monic(f.clone());
    if degree(&f) == 0 {
        return Vec::new();
    }
    let df = derivative(&f);
    let a0 = gcd(&f, &df);
    let mut b = div_rem(&f, &a0).0;
    let c = div_rem(&df, &a0).0;
    let mut d = sub(&c, &derivative(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while degree(&b) > 0 {
        let a = gcd(&b, &d);
        let nb = div_rem(&b, &a).0;
        let nc = div_rem(&d, &a).0;
        d = sub(&nc, &derivative(&nb));
        b = nb;
        if degree(&a) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

fn sign_changes(signs: impl IntoIterator<Item = i8>) -> usize {
    let nonzero: Vec<i8> = signs.into_iter().filter(|&s| s != 0).collect();
    nonzero.windows(2).filter(|w| w[0] != w[1]).count()
}

fn sign_of(x: &Q) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Distinct (positive, negative) real roots of a square-free `p` with
/// `p(0) ≠ 0`, by Sturm's theorem.
fn sturm_counts(p: &Poly) -> (usize, usize) {
    let mut chain = vec![p.clone(), derivative(p)];
    while !chain.last().unwrap().is_empty() {
        let n = chain.len();
        let r = div_rem(&chain[n - 2], &chain[n - 1]).1;
        chain.push(r.into_iter().map(|c| -c).collect());
    }
    chain.pop();
    let at_zero = sign_changes(chain.iter().map(|s| sign_of(&s[0])));
    let at_pos_inf = sign_changes(chain.iter().map(|s| sign_of(s.last().unwrap())));
    let at_neg_inf = sign_changes(chain.iter().map(|s| {
        let lead = sign_of(s.last().unwrap());
        if degree(s) % 2 == 1 {
            -lead
        } else {
            lead
        }
    }));
    (at_zero - at_pos_inf, at_neg_inf - at_zero)
}

/// Signature of a symmetric matrix, counting eigenvalue signs with
/// multiplicity through Sturm sequences of the square-free factors of the
/// characteristic polynomial.
pub fn sturm_signature(a: &[Vec<i64>]) -> i64 {
    let mut p = char_poly(&rows_q(a));
    while p.len() > 1 && p[0].is_zero() {
        p.remove(0);
    }
    square_free(&p)
        .iter()
        .map(|(factor, mult)| {
            let (pos, neg) = sturm_counts(factor);
            (pos as i64 - neg as i64) * *mult as i64
        })
        .sum()
}

/// Signature from Descartes' rule of signs, exact here because the
/// characteristic polynomial of a symmetric matrix has only real roots.
pub fn descartes_signature(a: &[Vec<i64>]) -> i64 {
    let p = char_poly(&rows_q(a));
    let pos = sign_changes(p.iter().map(sign_of));
    let neg = sign_changes(p.iter().enumerate().map(|(i, c)| {
        let s = sign_of(c);
        if i % 2 == 1 {
            -s
        } else {
            s
        }
    }));
    pos as i64 - neg as i64
}

// ---- bounds ----

/// Whether a fully known triple satisfies the two-sided page-norm bound,
/// the `sn ≥ −1` floor (equality only for the disk) and equality on the
/// right when `bn ≤ 3`.
pub fn admissible_triple(sg: i64, bn: i64, sn: i64) -> bool {
    let upper = 2 * sg + bn - 2;
    let lower = upper.min(2 * sg + 1);
    let in_range = lower <= sn && sn <= upper;
    let floor = sn >= -1 && (sn != -1 || (sg, bn) == (0, 1));
    let low_binding = bn > 3 || sn == upper;
    in_range && floor && low_binding
}

// ---- monodromy on the one-holed torus ----

/// Action of a word of `(curve, sign)` letters with curve classes given
/// explicitly, computed by pushing each basis vector through the letters
/// from the last to the first and applying `a ↦ a + s⟨a,c⟩c`.
pub fn torus_action(letters: &[([i64; 2], i64)]) -> [[i64; 2]; 2] {
    let pair = |a: [i64; 2], b: [i64; 2]| a[0] * b[1] - a[1] * b[0];
    let image = |mut v: [i64; 2]| {
        for &(c, s) in letters.iter().rev() {
            let k = s * pair(v, c);
            v = [v[0] + k * c[0], v[1] + k * c[1]];
        }
        v
    };
    let e1 = image([1, 0]);
    let e2 = image([0, 1]);
    [[e1[0], e2[0]], [e1[1], e2[1]]]
}
