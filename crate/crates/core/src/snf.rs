//! Smith normal form of integer matrices.
//!
//! Elimination runs on checked `i64` arithmetic first; if any intermediate value
//! overflows, the whole reduction is redone over arbitrary-precision integers.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::complex::SparseMatrix;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[i64]>::to_vec).collect()
    }
}

impl From<&SparseMatrix> for IntMatrix {
    fn from(m: &SparseMatrix) -> Self {
        let mut out = IntMatrix::zeros(m.nrows(), m.ncols());
        for (r, c, v) in m.entries() {
            out.set(r, c, v);
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    /// `d_1 | d_2 | ... | d_r`, all positive.
    pub invariant_factors: Vec<BigUint>,
    pub rows: usize,
    pub cols: usize,
    /// Whether checked `i64` arithmetic overflowed and the reduction was redone with big integers.
    pub escalated: bool,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    /// The invariant factors as machine integers, if they all fit.
    pub fn factors_u64(&self) -> Option<Vec<u64>> {
        self.invariant_factors
            .iter()
            .map(ToPrimitive::to_u64)
            .collect()
    }
}

/// Computes the invariant factors of `m` exactly.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let rows: Vec<Vec<i64>> = m.to_rows();
    let (diag, escalated) = match reduce(rows.clone(), m.rows, m.cols) {
        Some(diag) => (diag.into_iter().map(BigInt::from).collect(), false),
        None => {
            let big = rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect();
            let diag = reduce::<BigInt>(big, m.rows, m.cols)
                .expect("arbitrary-precision reduction cannot overflow");
            (diag, true)
        }
    };
    SnfResult {
        invariant_factors: diag
            .into_iter()
            .map(|d: BigInt| d.magnitude().clone())
            .collect(),
        rows: m.rows,
        cols: m.cols,
        escalated,
    }
}

/// Arithmetic needed by the elimination; every operation reports overflow as `None`.
trait Scalar: Clone {
    fn is_zero(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn div_floor_checked(&self, d: &Self) -> Option<Self>;
    /// `self - q * b`
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self>;
    fn add_checked(&self, b: &Self) -> Option<Self>;
    fn is_multiple_of(&self, d: &Self) -> bool;
    fn abs_checked(&self) -> Option<Self>;
}

impl Scalar for i64 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn div_floor_checked(&self, d: &Self) -> Option<Self> {
        if *self == i64::MIN && *d == -1 {
            return None;
        }
        Some(Integer::div_floor(self, d))
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*b)?)
    }
    fn add_checked(&self, b: &Self) -> Option<Self> {
        self.checked_add(*b)
    }
    fn is_multiple_of(&self, d: &Self) -> bool {
        self.checked_rem(*d).is_none_or(|r| r == 0)
    }
    fn abs_checked(&self) -> Option<Self> {
        self.checked_abs()
    }
}

impl Scalar for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn div_floor_checked(&self, d: &Self) -> Option<Self> {
        Some(Integer::div_floor(self, d))
    }
    fn sub_mul(&self, q: &Self, b: &Self) -> Option<Self> {
        Some(self - q * b)
    }
    fn add_checked(&self, b: &Self) -> Option<Self> {
        Some(self + b)
    }
    fn is_multiple_of(&self, d: &Self) -> bool {
        Integer::is_multiple_of(self, d)
    }
    fn abs_checked(&self) -> Option<Self> {
        Some(Signed::abs(self))
    }
}

fn min_abs_nonzero<T: Scalar>(
    a: &[Vec<T>],
    cells: impl Iterator<Item = (usize, usize)>,
) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, j) in cells {
        if a[i][j].is_zero() {
            continue;
        }
        if best.is_none_or(|(bi, bj)| a[i][j].cmp_abs(&a[bi][bj]) == Ordering::Less) {
            best = Some((i, j));
        }
    }
    best
}

fn swap_cols<T>(a: &mut [Vec<T>], x: usize, y: usize) {
    if x != y {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
    }
}

/// Diagonalizes `a` in place and returns the nonzero diagonal (absolute values).
/// Returns `None` on arithmetic overflow.
#[allow(clippy::needless_range_loop)]
fn reduce<T: Scalar>(mut a: Vec<Vec<T>>, rows: usize, cols: usize) -> Option<Vec<T>> {
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let window = (t..rows).flat_map(|i| (t..cols).map(move |j| (i, j)));
        let Some((pi, pj)) = min_abs_nonzero(&a, window) else {
            break;
        };
        a.swap(t, pi);
        swap_cols(&mut a, t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor_checked(&a[t][t])?;
                for j in t..cols {
                    a[i][j] = a[i][j].sub_mul(&q, &a[t][j])?;
                }
                dirty |= !a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor_checked(&a[t][t])?;
                for i in t..rows {
                    a[i][j] = a[i][j].sub_mul(&q, &a[i][t])?;
                }
                dirty |= !a[t][j].is_zero();
            }
            if dirty {
                let cross = (t..rows)
                    .map(|i| (i, t))
                    .chain((t + 1..cols).map(|j| (t, j)));
                let (pi, pj) = min_abs_nonzero(&a, cross).expect("pivot is nonzero");
                a.swap(t, pi);
                swap_cols(&mut a, t, pj);
                continue;
            }
            // pivot must divide the remaining block
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
            match offender {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] = a[t][j].add_checked(&a[i][j])?;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs_checked()?);
    }
    Some(diag)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(rows: &[Vec<i64>]) -> Vec<u64> {
        smith_normal_form(&IntMatrix::from_rows(rows))
            .factors_u64()
            .unwrap()
    }

    #[test]
    fn small_examples() {
        assert_eq!(factors(&[vec![2]]), [2]);
        assert_eq!(factors(&[vec![2, -2]]), [2]);
        assert!(factors(&[vec![0, 0], vec![0, 0]]).is_empty());
        assert_eq!(factors(&[vec![2, 4], vec![6, 8]]), [2, 4]);
        assert_eq!(factors(&[vec![2, 0], vec![0, 3]]), [1, 6]);
        assert_eq!(factors(&[vec![-2, 2], vec![2, -2]]), [2]);
    }

    #[test]
    fn empty_shapes() {
        let r = smith_normal_form(&IntMatrix::zeros(0, 3));
        assert_eq!((r.rank(), r.rows, r.cols), (0, 0, 3));
        let r = smith_normal_form(&IntMatrix::zeros(4, 0));
        assert_eq!(r.rank(), 0);
    }

    #[test]
    fn escalates_on_overflow() {
        let big = i64::MAX / 2 + 1;
        let m = IntMatrix::from_rows(&[vec![big, big - 1], vec![big - 1, big - 2]]);
        let r = smith_normal_form(&m);
        // det = big(big-2) - (big-1)^2 = -1
        assert_eq!(r.factors_u64().unwrap(), [1, 1]);

        let m = IntMatrix::from_rows(&[vec![i64::MIN]]);
        let r = smith_normal_form(&m);
        assert!(r.escalated);
        assert_eq!(r.invariant_factors, [BigUint::from(1u64 << 63)]);
    }
}
