//! The Schubert (co)chain complex of `Gr_k(n)` with its closed-form differential.
//!
//! For a cell `S` and a position `r`, the cochain differential sends `S` to
//! `S_r` (raise `s_r` by one) with coefficient `(-1)^{d_r(S)} * 2` when
//! `s_{r+1} - s_r > 1` and `k - s_r` is odd, and `0` otherwise. The homological
//! differential is its transpose.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{check_nk, partial_dim_raw, subsets, SchubertSet};
use crate::error::{invalid, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `∂` lowers degree.
    Homological,
    /// `δ` raises degree.
    Cohomological,
}

/// One term `value * target` of `δ(source)`, where `target = source_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCoefficient {
    pub source: SchubertSet,
    pub r: usize,
    pub target: SchubertSet,
    pub value: i64,
}

fn sign(exponent: usize) -> i64 {
    if exponent.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The two link-component signs `(σ([Θ⁰]), σ([Θ^π]))` for an elementary cover `S < T`.
pub fn sigma_signs(s: &SchubertSet, t: &SchubertSet) -> Result<(i64, i64)> {
    let not_cover = || Error::InvalidCover {
        lower: s.to_string(),
        upper: t.to_string(),
    };
    if s.n() != t.n() || s.k() != t.k() {
        return Err(not_cover());
    }
    let diffs: Vec<usize> = (0..s.k())
        .filter(|&idx| s.elements()[idx] != t.elements()[idx])
        .collect();
    let r = match diffs[..] {
        [idx] if t.elements()[idx] == s.elements()[idx] + 1 => idx + 1,
        _ => return Err(not_cover()),
    };
    let k = s.k();
    let tail = partial_dim_raw(s.elements(), r + 1);
    let zero = sign(1 + k + r + tail);
    let pi = sign(partial_dim_raw(s.elements(), r));
    Ok((zero, pi))
}

/// Coefficient of `S_r` in `δ(S)`: one of `-2`, `0`, `+2`.
pub fn diff_coefficient(s: &SchubertSet, r: usize) -> Result<i64> {
    if r == 0 || r > s.k() {
        return Err(invalid(format!("r = {r} outside [1, {}]", s.k())));
    }
    Ok(coefficient_raw(s.n(), s.elements(), r))
}

pub(crate) fn coefficient_raw(n: usize, elems: &[u8], r: usize) -> i64 {
    let k = elems.len();
    let s_r = elems[r - 1] as usize;
    let next = if r == k { n + 1 } else { elems[r] as usize };
    if next - s_r > 1 && (k + s_r) % 2 == 1 {
        2 * sign(partial_dim_raw(elems, r))
    } else {
        0
    }
}

/// All nonzero terms of `δ(S)`, ordered by `r`.
pub fn boundary(s: &SchubertSet) -> Vec<CoverCoefficient> {
    (1..=s.k())
        .filter_map(|r| {
            let value = coefficient_raw(s.n(), s.elements(), r);
            if value == 0 {
                return None;
            }
            Some(CoverCoefficient {
                source: s.clone(),
                r,
                target: s.raised(r)?,
                value,
            })
        })
        .collect()
}

/// Column-major sparse integer matrix; `columns[c]` lists `(row, value)` pairs sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            columns: vec![Vec::new(); ncols],
        }
    }

    pub fn from_columns(nrows: usize, mut columns: Vec<Vec<(usize, i64)>>) -> Self {
        for col in &mut columns {
            col.retain(|&(_, v)| v != 0);
            col.sort_unstable_by_key(|&(r, _)| r);
            debug_assert!(col.iter().all(|&(r, _)| r < nrows));
        }
        SparseMatrix { nrows, columns }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, i64)] {
        &self.columns[c]
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.columns[col]
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, v)| v)
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Iterates `(row, col, value)` over stored entries, column by column.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&(r, v)| (r, c, v)))
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols = vec![Vec::new(); self.nrows];
        for (r, c, v) in self.entries() {
            cols[r].push((c, v));
        }
        SparseMatrix {
            nrows: self.ncols(),
            columns: cols,
        }
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols() != rhs.nrows {
            return Err(invalid(format!(
                "shape mismatch: {}x{} * {}x{}",
                self.nrows,
                self.ncols(),
                rhs.nrows,
                rhs.ncols()
            )));
        }
        let columns = rhs
            .columns
            .iter()
            .map(|rcol| {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for &(mid, b) in rcol {
                    for &(row, a) in &self.columns[mid] {
                        *acc.entry(row).or_default() += a * b;
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(SparseMatrix::from_columns(self.nrows, columns))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.iter().all(|&(_, v)| v == 0))
    }

    /// Row-major dense copy.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols()]; self.nrows];
        for (r, c, v) in self.entries() {
            out[r][c] = v;
        }
        out
    }
}

/// The cellular complex of `Gr_k(n)`: one basis per degree and the differential
/// between each pair of consecutive degrees.
#[derive(Clone, Debug)]
pub struct GradedComplex {
    n: usize,
    k: usize,
    direction: Direction,
    bases: Vec<Vec<SchubertSet>>,
    /// `maps[i]` connects degrees `i` and `i + 1`: rows index degree `i + 1` cells for
    /// cohomological complexes and degree `i` cells for homological ones.
    maps: Vec<SparseMatrix>,
}

impl GradedComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    /// `k(n - k)`.
    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, degree: usize) -> &[SchubertSet] {
        self.bases.get(degree).map_or(&[], Vec::as_slice)
    }

    pub fn bases(&self) -> &[Vec<SchubertSet>] {
        &self.bases
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    /// The differential between degrees `i` and `i + 1`, in this complex's direction.
    pub fn differential(&self, i: usize) -> &SparseMatrix {
        &self.maps[i]
    }

    pub fn differentials(&self) -> &[SparseMatrix] {
        &self.maps
    }

    /// Matrix leaving degree `m`, if any.
    pub fn outgoing(&self, m: usize) -> Option<&SparseMatrix> {
        match self.direction {
            Direction::Cohomological => self.maps.get(m),
            Direction::Homological => m.checked_sub(1).map(|i| &self.maps[i]),
        }
    }

    /// Matrix arriving at degree `m`, if any.
    pub fn incoming(&self, m: usize) -> Option<&SparseMatrix> {
        match self.direction {
            Direction::Cohomological => m.checked_sub(1).map(|i| &self.maps[i]),
            Direction::Homological => self.maps.get(m),
        }
    }

    /// The same complex with every differential transposed.
    pub fn dual(&self) -> GradedComplex {
        GradedComplex {
            n: self.n,
            k: self.k,
            direction: match self.direction {
                Direction::Homological => Direction::Cohomological,
                Direction::Cohomological => Direction::Homological,
            },
            bases: self.bases.clone(),
            maps: self.maps.iter().map(SparseMatrix::transpose).collect(),
        }
    }

    /// Checks that consecutive differentials compose to zero.
    pub fn check_square_zero(&self) -> Result<()> {
        for i in 1..self.maps.len() {
            let composite = match self.direction {
                Direction::Cohomological => self.maps[i].mul(&self.maps[i - 1])?,
                Direction::Homological => self.maps[i - 1].mul(&self.maps[i])?,
            };
            if !composite.is_zero() {
                return Err(Error::InvalidComplex { degree: i });
            }
        }
        Ok(())
    }

    /// Builds a complex from raw parts, checking shapes (not `δ² = 0`).
    pub fn from_parts(
        n: usize,
        k: usize,
        direction: Direction,
        bases: Vec<Vec<SchubertSet>>,
        maps: Vec<SparseMatrix>,
    ) -> Result<GradedComplex> {
        if bases.is_empty() || maps.len() + 1 != bases.len() {
            return Err(invalid(
                "need one differential between each pair of degrees",
            ));
        }
        for (i, m) in maps.iter().enumerate() {
            let (src, dst) = (bases[i].len(), bases[i + 1].len());
            let (rows, cols) = match direction {
                Direction::Cohomological => (dst, src),
                Direction::Homological => (src, dst),
            };
            if m.nrows() != rows || m.ncols() != cols {
                return Err(invalid(format!("differential {i} has the wrong shape")));
            }
        }
        Ok(GradedComplex {
            n,
            k,
            direction,
            bases,
            maps,
        })
    }
}

/// Assembles the Schubert complex of `Gr_k(n)` in the requested direction.
pub fn build_complex(n: usize, k: usize, direction: Direction) -> Result<GradedComplex> {
    check_nk(n, k)?;
    let top = k * (n - k);
    let mut bases = vec![Vec::new(); top + 1];
    for s in subsets(n, k)? {
        let d = s.dim();
        bases[d].push(s);
    }
    let positions: Vec<HashMap<u64, usize>> = bases
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, s)| (s.bits(), i)).collect())
        .collect();

    let mut maps = Vec::with_capacity(top);
    for deg in 0..top {
        let columns = bases[deg]
            .iter()
            .map(|s| {
                boundary(s)
                    .into_iter()
                    .map(|c| (positions[deg + 1][&c.target.bits()], c.value))
                    .collect()
            })
            .collect();
        let delta = SparseMatrix::from_columns(bases[deg + 1].len(), columns);
        maps.push(match direction {
            Direction::Cohomological => delta,
            Direction::Homological => delta.transpose(),
        });
    }
    Ok(GradedComplex {
        n,
        k,
        direction,
        bases,
        maps,
    })
}

/// `Σ_m (-1)^m · #cells(m)`.
pub fn euler_characteristic(c: &GradedComplex) -> i64 {
    c.bases
        .iter()
        .enumerate()
        .map(|(m, b)| sign(m) * b.len() as i64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> SchubertSet {
        SchubertSet::new(n, e).unwrap()
    }

    #[test]
    fn sigma_sign_examples() {
        let s = sigma_signs(&set(6, &[1, 2, 4]), &set(6, &[1, 3, 4])).unwrap();
        assert_eq!(s, (-1, -1));
        let s = sigma_signs(&set(6, &[1, 2, 5]), &set(6, &[1, 3, 5])).unwrap();
        assert_eq!(s, (1, 1));
        let (a, b) = sigma_signs(&set(6, &[1, 3, 5]), &set(6, &[1, 4, 5])).unwrap();
        assert_eq!(a + b, 0);
    }

    #[test]
    fn sigma_signs_reject_non_covers() {
        let s = set(6, &[1, 2, 4]);
        for t in [set(6, &[1, 3, 5]), set(6, &[1, 2, 4]), set(6, &[1, 2, 3])] {
            assert!(matches!(
                sigma_signs(&s, &t),
                Err(Error::InvalidCover { .. })
            ));
        }
        assert!(sigma_signs(&s, &set(7, &[1, 3, 4])).is_err());
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(diff_coefficient(&set(6, &[1, 2, 4]), 2).unwrap(), -2);
        assert_eq!(diff_coefficient(&set(6, &[1, 3, 4]), 3).unwrap(), -2);
        assert_eq!(diff_coefficient(&set(6, &[2, 4, 6]), 1).unwrap(), 2);
        assert_eq!(diff_coefficient(&set(6, &[1, 2, 3]), 3).unwrap(), 0);
        // s_{r+1} - s_r = 1 blocks the cover
        assert_eq!(diff_coefficient(&set(6, &[1, 2, 3]), 1).unwrap(), 0);
        assert!(diff_coefficient(&set(6, &[1, 2, 3]), 0).is_err());
        assert!(diff_coefficient(&set(6, &[1, 2, 3]), 4).is_err());
    }

    #[test]
    fn boundary_examples() {
        let terms = boundary(&set(6, &[1, 2, 4]));
        let got: Vec<_> = terms
            .iter()
            .map(|c| (c.r, c.target.label(), c.value))
            .collect();
        assert_eq!(got, [(2, "134".into(), -2), (3, "125".into(), -2)]);

        let terms = boundary(&set(3, &[2]));
        assert_eq!(terms.len(), 1);
        assert_eq!(
            (terms[0].r, terms[0].target.label(), terms[0].value),
            (1, "3".into(), -2)
        );

        for (n, k) in [(4, 2), (6, 2), (6, 4), (8, 4), (10, 2)] {
            assert!(boundary(&SchubertSet::bottom(n, k).unwrap()).is_empty());
        }
    }

    #[test]
    fn small_complexes() {
        let c = build_complex(2, 1, Direction::Homological).unwrap();
        assert_eq!(c.cell_counts(), [1, 1]);
        assert!(c.differential(0).is_zero());

        let c = build_complex(6, 3, Direction::Cohomological).unwrap();
        assert_eq!(c.cell_counts(), [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]);
        c.check_square_zero().unwrap();

        for n in 1..5 {
            let c = build_complex(n, n, Direction::Homological).unwrap();
            assert_eq!(c.cell_counts(), [1]);
            assert!(c.differentials().is_empty());
            let c = build_complex(n, 0, Direction::Cohomological).unwrap();
            assert_eq!(c.cell_counts(), [1]);
        }
        assert!(matches!(
            build_complex(65, 2, Direction::Homological),
            Err(Error::UnsupportedSize { .. })
        ));
    }

    #[test]
    fn directions_are_transposes() {
        let h = build_complex(7, 3, Direction::Homological).unwrap();
        let c = build_complex(7, 3, Direction::Cohomological).unwrap();
        for (a, b) in h.differentials().iter().zip(c.differentials()) {
            assert_eq!(&a.transpose(), b);
        }
        assert_eq!(h.dual().differentials(), c.differentials());
    }

    #[test]
    fn euler_examples() {
        let chi =
            |n, k| euler_characteristic(&build_complex(n, k, Direction::Homological).unwrap());
        assert_eq!(chi(2, 1), 0);
        assert_eq!(chi(3, 1), 1);
        assert_eq!(chi(4, 2), 2);
    }

    #[test]
    fn nonsquare_zero_is_detected() {
        let bases = vec![vec![set(3, &[1])], vec![set(3, &[2])], vec![set(3, &[3])]];
        let one = SparseMatrix::from_columns(1, vec![vec![(0, 2)]]);
        let c = GradedComplex::from_parts(
            3,
            1,
            Direction::Cohomological,
            bases,
            vec![one.clone(), one],
        )
        .unwrap();
        assert_eq!(
            c.check_square_zero(),
            Err(Error::InvalidComplex { degree: 1 })
        );
    }
}
