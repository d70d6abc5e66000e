//! Square matrices over an exact ring and two determinant algorithms.
//!
//! `det_cofactor` expands along rows with memoization over column subsets and
//! works over any commutative ring; it is the default up to size 12.
//! `det_bareiss` is one-step fraction-free elimination and needs exact
//! division, which Laurent polynomials provide. Both must agree; the property
//! suite checks that on random polynomial matrices.

use std::fmt;

use super::coeff::Coefficient;
use super::laurent::LaurentPoly;
use super::series::TruncatedSeries;
use super::RingError;

pub trait RingElem: Clone + PartialEq + fmt::Debug {
    fn r_is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn r_add(&self, rhs: &Self) -> Self;
    fn r_sub(&self, rhs: &Self) -> Self;
    fn r_mul(&self, rhs: &Self) -> Self;
    fn r_neg(&self) -> Self;
}

pub trait ExactDiv: RingElem {
    fn r_exact_div(&self, den: &Self) -> Result<Self, RingError>;
}

impl RingElem for Coefficient {
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        Coefficient::zero()
    }
    fn one_like(&self) -> Self {
        Coefficient::one()
    }
    fn r_add(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn r_sub(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn r_mul(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn r_neg(&self) -> Self {
        self.neg()
    }
}

impl ExactDiv for Coefficient {
    fn r_exact_div(&self, den: &Self) -> Result<Self, RingError> {
        self.exact_div(den)
    }
}

impl RingElem for LaurentPoly {
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.vars())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.vars())
    }
    fn r_add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("shape")
    }
    fn r_sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("shape")
    }
    fn r_mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("shape")
    }
    fn r_neg(&self) -> Self {
        self.neg_ref()
    }
}

impl ExactDiv for LaurentPoly {
    fn r_exact_div(&self, den: &Self) -> Result<Self, RingError> {
        self.exact_div(den)
    }
}

impl RingElem for TruncatedSeries {
    fn r_is_zero(&self) -> bool {
        self.is_zero()
    }
    fn zero_like(&self) -> Self {
        TruncatedSeries::zero(self.coeff_vars(), self.vars(), self.cap())
    }
    fn one_like(&self) -> Self {
        TruncatedSeries::one(self.coeff_vars(), self.vars(), self.cap())
    }
    fn r_add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("shape")
    }
    fn r_sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("shape")
    }
    fn r_mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("shape")
    }
    fn r_neg(&self) -> Self {
        self.neg_ref()
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct SquareMatrix<R> {
    n: usize,
    entries: Vec<R>,
}

impl<R: RingElem> SquareMatrix<R> {
    /// Build from rows; rejects non-square input.
    pub fn new(rows: Vec<Vec<R>>) -> Result<Self, RingError> {
        let n = rows.len();
        if n == 0 {
            return Err(RingError::NonSquare {
                detail: "empty matrix".into(),
            });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(RingError::NonSquare {
                    detail: format!("row length {} in {}x{} matrix", row.len(), n, n),
                });
            }
            entries.extend(row);
        }
        Ok(SquareMatrix { n, entries })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.n + j]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.n {
            self.entries.swap(a * self.n + j, b * self.n + j);
        }
    }
}

/// Cofactor expansion down the rows, memoized over column subsets.
pub fn det_cofactor<R: RingElem>(m: &SquareMatrix<R>) -> R {
    let n = m.size();
    assert!(n <= 20, "cofactor determinant limited to small matrices");
    let one = m.at(0, 0).one_like();
    // minor[mask]: determinant of the submatrix on the first popcount(mask)
    // rows and the column set `mask`.
    let mut minors: Vec<Option<R>> = vec![None; 1 << n];
    minors[0] = Some(one);
    for mask in 1usize..(1 << n) {
        let k = (mask as u32).count_ones() as usize;
        // expand along row k-1; the sign alternates over the columns present
        // in the mask, starting at the row parity
        let mut acc: Option<R> = None;
        let mut sign_neg = (k - 1) % 2 == 1;
        for j in 0..n {
            if mask & (1 << j) == 0 {
                continue;
            }
            let entry = m.at(k - 1, j);
            if !entry.r_is_zero() {
                let sub = minors[mask ^ (1 << j)]
                    .as_ref()
                    .expect("filled in order")
                    .clone();
                let mut term = sub.r_mul(entry);
                if sign_neg {
                    term = term.r_neg();
                }
                acc = Some(match acc {
                    None => term,
                    Some(a) => a.r_add(&term),
                });
            }
            sign_neg = !sign_neg;
        }
        minors[mask] = Some(acc.unwrap_or_else(|| m.at(0, 0).zero_like()));
    }
    minors[(1 << n) - 1].take().unwrap()
}

/// One-step fraction-free (Bareiss) elimination.
pub fn det_bareiss<R: ExactDiv>(m: &SquareMatrix<R>) -> R {
    let n = m.size();
    let mut w = m.clone();
    let one = w.at(0, 0).one_like();
    let zero = w.at(0, 0).zero_like();
    let mut sign_neg = false;
    let mut prev_pivot = one;
    for k in 0..n - 1 {
        if w.at(k, k).r_is_zero() {
            let swap = (k + 1..n).find(|&r| !w.at(r, k).r_is_zero());
            match swap {
                Some(r) => {
                    w.swap_rows(k, r);
                    sign_neg = !sign_neg;
                }
                None => return zero,
            }
        }
        let pivot = w.at(k, k).clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = w
                    .at(i, j)
                    .r_mul(&pivot)
                    .r_sub(&w.at(i, k).r_mul(w.at(k, j)));
                let v = t
                    .r_exact_div(&prev_pivot)
                    .expect("fraction-free elimination divides exactly");
                w.entries[i * n + j] = v;
            }
            w.entries[i * n + k] = zero.clone();
        }
        prev_pivot = pivot;
    }
    let d = w.at(n - 1, n - 1).clone();
    if sign_neg {
        d.r_neg()
    } else {
        d
    }
}

/// Default algorithm choice: cofactor memoization for small sizes,
/// fraction-free elimination above.
pub fn det_auto<R: ExactDiv>(m: &SquareMatrix<R>) -> R {
    if m.size() <= 12 {
        det_cofactor(m)
    } else {
        det_bareiss(m)
    }
}
