//! Schubert cell indices: the poset of `k`-subsets of `{1..n}`, cell dimensions,
//! cell counts, and the `In`/`Out` classification that drives the closed formula.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::error::{invalid, Error, Result};

/// Largest ambient dimension supported by the bitset encoding.
pub const MAX_N: usize = 64;

pub(crate) type Elems = SmallVec<[u8; 16]>;

/// A set of positions drawn from `{1..k}`, stored as a bitmask (position `i` is bit `i - 1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u64);

impl IndexSet {
    pub const fn empty() -> Self {
        IndexSet(0)
    }

    pub fn from_bits(bits: u64) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=64).contains(&i) && self.0 >> (i - 1) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!((1..=64).contains(&i));
        self.0 |= 1 << (i - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn intersection(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 & other.0)
    }

    pub fn union(self, other: IndexSet) -> IndexSet {
        IndexSet(self.0 | other.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i + 1)
        })
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = IndexSet::empty();
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// A `k`-element subset `{s_1 < ... < s_k}` of `{1..n}`, indexing one Schubert cell of `Gr_k(n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SchubertSet {
    n: u8,
    bits: u64,
    elems: Elems,
}

impl SchubertSet {
    /// Builds a set from its elements, which must be strictly increasing and lie in `[1, n]`.
    pub fn new(n: usize, elements: &[usize]) -> Result<Self> {
        check_n(n)?;
        if elements.len() > n {
            return Err(invalid(format!(
                "{} elements exceed n = {n}",
                elements.len()
            )));
        }
        let mut prev = 0;
        for &e in elements {
            if e <= prev || e > n {
                return Err(invalid(format!(
                    "elements {elements:?} are not strictly increasing within [1, {n}]"
                )));
            }
            prev = e;
        }
        Ok(Self::from_elems(
            n,
            elements.iter().map(|&e| e as u8).collect(),
        ))
    }

    pub(crate) fn from_elems(n: usize, elems: Elems) -> Self {
        let bits = elems.iter().fold(0u64, |b, &e| b | 1 << (e - 1));
        SchubertSet {
            n: n as u8,
            bits,
            elems,
        }
    }

    /// The minimal cell `{1, ..., k}`.
    pub fn bottom(n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        Ok(Self::from_elems(n, (1..=k as u8).collect()))
    }

    /// The top cell `{n-k+1, ..., n}`.
    pub fn top(n: usize, k: usize) -> Result<Self> {
        check_nk(n, k)?;
        Ok(Self::from_elems(n, ((n - k + 1) as u8..=n as u8).collect()))
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn k(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[u8] {
        &self.elems
    }

    /// Bitmask with bit `e - 1` set for each element `e`.
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// `s_i` for `1 <= i <= k`, with the sentinels `s_0 = 0` and `s_{k+1} = n + 1`.
    pub fn entry(&self, i: usize) -> usize {
        entry(self.n(), &self.elems, i)
    }

    pub fn dim(&self) -> usize {
        dim_raw(&self.elems)
    }

    /// Hyphen-joined elements, e.g. `1-2-4`.
    pub fn id(&self) -> String {
        let parts: Vec<String> = self.elems.iter().map(|e| e.to_string()).collect();
        parts.join("-")
    }

    /// Concatenated digits (`124`) when `n <= 9`, otherwise the hyphenated id.
    pub fn label(&self) -> String {
        if self.n <= 9 {
            self.elems.iter().map(|e| e.to_string()).collect()
        } else {
            self.id()
        }
    }

    /// `S_r`: the set with `s_r` replaced by `s_r + 1`, if that is still a valid subset.
    pub fn raised(&self, r: usize) -> Option<SchubertSet> {
        if r == 0 || r > self.k() || self.entry(r + 1) - self.entry(r) <= 1 {
            return None;
        }
        let mut elems = self.elems.clone();
        elems[r - 1] += 1;
        Some(SchubertSet::from_elems(self.n(), elems))
    }

    /// The set with `s_r` replaced by `s_r - 1`, if that is still a valid subset.
    pub fn lowered(&self, r: usize) -> Option<SchubertSet> {
        if r == 0 || r > self.k() || self.entry(r) - self.entry(r - 1) <= 1 {
            return None;
        }
        let mut elems = self.elems.clone();
        elems[r - 1] -= 1;
        Some(SchubertSet::from_elems(self.n(), elems))
    }
}

impl Ord for SchubertSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.k(), &self.elems[..]).cmp(&(other.n, other.k(), &other.elems[..]))
    }
}

impl PartialOrd for SchubertSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SchubertSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SchubertSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}⊂[{}]", self.n)
    }
}

/// One element `(i, j)` of the index set `Z_S`.
///
/// Ordered by `i` ascending, then by `j` descending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ZIndexPair {
    pub i: usize,
    pub j: usize,
}

impl Ord for ZIndexPair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.i.cmp(&other.i).then(other.j.cmp(&self.j))
    }
}

impl PartialOrd for ZIndexPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CellKind {
    /// `In(S)` and `Out(S)` both empty: contributes a copy of `R`.
    Free,
    /// `min(In ∪ Out)` lies in `Out`: contributes `ker(R --2--> R)`.
    KernelSide,
    /// `min(In ∪ Out)` lies in `In`: contributes `coker(R --2--> R)`.
    CokernelSide,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CellClassification {
    pub in_set: IndexSet,
    pub out_set: IndexSet,
    pub kind: CellKind,
}

impl CellClassification {
    fn from_sets(in_set: IndexSet, out_set: IndexSet) -> Self {
        let kind = match in_set.union(out_set).min() {
            None => CellKind::Free,
            Some(m) if out_set.contains(m) => CellKind::KernelSide,
            Some(_) => CellKind::CokernelSide,
        };
        CellClassification {
            in_set,
            out_set,
            kind,
        }
    }
}

/// Iterator over the `k`-subsets of `{1..n}` in lexicographic order.
pub struct Subsets {
    n: usize,
    current: Option<Elems>,
}

impl Iterator for Subsets {
    type Item = SchubertSet;

    fn next(&mut self) -> Option<SchubertSet> {
        let cur = self.current.take()?;
        let out = SchubertSet::from_elems(self.n, cur.clone());
        self.current = next_combination(self.n, cur);
        Some(out)
    }
}

fn next_combination(n: usize, mut c: Elems) -> Option<Elems> {
    let k = c.len();
    // rightmost position that can still move right
    let pos = (0..k).rev().find(|&i| (c[i] as usize) < n - k + i + 1)?;
    c[pos] += 1;
    for j in pos + 1..k {
        c[j] = c[j - 1] + 1;
    }
    Some(c)
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(invalid("n must be positive"));
    }
    if n > MAX_N {
        return Err(Error::UnsupportedSize { n, max: MAX_N });
    }
    Ok(())
}

pub(crate) fn check_nk(n: usize, k: usize) -> Result<()> {
    check_n(n)?;
    if k > n {
        return Err(invalid(format!("k = {k} must satisfy 0 <= k <= n = {n}")));
    }
    Ok(())
}

fn check_same_shape(s: &SchubertSet, t: &SchubertSet) -> Result<()> {
    if s.n != t.n || s.k() != t.k() {
        return Err(invalid(format!(
            "sets {s:?} and {t:?} live in different posets"
        )));
    }
    Ok(())
}

/// Lazily walks all `k`-subsets of `{1..n}` in the canonical (lexicographic) order.
pub fn subsets(n: usize, k: usize) -> Result<Subsets> {
    check_nk(n, k)?;
    Ok(Subsets {
        n,
        current: Some((1..=k as u8).collect()),
    })
}

/// All `C(n, k)` subsets, in the canonical basis order used by every matrix in the crate.
pub fn enumerate_subsets(n: usize, k: usize) -> Result<Vec<SchubertSet>> {
    Ok(subsets(n, k)?.collect())
}

/// The Bruhat-type order: `S <= T` iff `s_i <= t_i` for every `i`.
pub fn leq(s: &SchubertSet, t: &SchubertSet) -> Result<bool> {
    check_same_shape(s, t)?;
    Ok(s.elems.iter().zip(&t.elems).all(|(a, b)| a <= b))
}

/// Cell dimension `d(S) = Σ (s_i - i)`.
pub fn dim(s: &SchubertSet) -> usize {
    s.dim()
}

/// `d_r(S) = Σ_{max(r,1) <= i <= k} (s_i - i)`; `d_0` coincides with `d_1`.
pub fn partial_dim(s: &SchubertSet, r: usize) -> Result<usize> {
    if r > s.k() {
        return Err(invalid(format!("r = {r} outside [0, {}]", s.k())));
    }
    Ok(partial_dim_raw(&s.elems, r))
}

/// The pairs `(i, j)` with `i <= j < s_i`, in the `Z_S` total order.
pub fn z_index_set(s: &SchubertSet) -> Vec<ZIndexPair> {
    let mut out = Vec::with_capacity(s.dim());
    for (idx, &e) in s.elems.iter().enumerate() {
        let i = idx + 1;
        out.extend((i..e as usize).rev().map(|j| ZIndexPair { i, j }));
    }
    out
}

/// Coefficients of the Gaussian binomial `[n choose k]_q`: entry `m` counts the
/// partitions of `m` into at most `k` parts, each at most `n - k`.
pub fn cell_counts(n: usize, k: usize) -> Result<Vec<u64>> {
    check_nk(n, k)?;
    // rows[j] holds [i choose j]_q for the current i
    let mut rows: Vec<Vec<u64>> = vec![vec![1]];
    for i in 1..=n {
        let top = i.min(k);
        let mut next = Vec::with_capacity(top + 1);
        for j in 0..=top {
            let mut poly = vec![0u64; j * (i - j) + 1];
            if j > 0 {
                for (m, c) in rows[j - 1].iter().enumerate() {
                    poly[m] += c;
                }
            }
            if j < i && j < rows.len() {
                for (m, c) in rows[j].iter().enumerate() {
                    poly[m + j] += c;
                }
            }
            next.push(poly);
        }
        rows = next;
    }
    Ok(rows.swap_remove(k))
}

/// Number of Schubert cells of dimension `m` in `Gr_k(n)`.
pub fn cell_count(n: usize, k: usize, m: usize) -> Result<u64> {
    let counts = cell_counts(n, k)?;
    counts
        .get(m)
        .copied()
        .ok_or_else(|| invalid(format!("degree {m} outside [0, {}]", k * (n - k))))
}

/// Computes `In(S)`, `Out(S)` and the resulting [`CellKind`].
pub fn classify(s: &SchubertSet) -> CellClassification {
    let (in_set, out_set) = in_out_raw(s.n(), &s.elems);
    CellClassification::from_sets(in_set, out_set)
}

/// `S <= T` in the admissible subposet: `T` is obtained from `S` by raising exactly
/// the positions of `Out(S) ∩ In(T)` by one.
pub fn admissible_leq(s: &SchubertSet, t: &SchubertSet) -> Result<bool> {
    check_same_shape(s, t)?;
    let (_, out_s) = in_out_raw(s.n(), &s.elems);
    let (in_t, _) = in_out_raw(t.n(), &t.elems);
    let moved = out_s.intersection(in_t);
    Ok(s.elems
        .iter()
        .zip(&t.elems)
        .enumerate()
        .all(|(idx, (&a, &b))| {
            if moved.contains(idx + 1) {
                a + 1 == b
            } else {
                a == b
            }
        }))
}

pub(crate) fn entry(n: usize, elems: &[u8], i: usize) -> usize {
    match i {
        0 => 0,
        i if i == elems.len() + 1 => n + 1,
        i => elems[i - 1] as usize,
    }
}

pub(crate) fn dim_raw(elems: &[u8]) -> usize {
    elems
        .iter()
        .enumerate()
        .map(|(idx, &e)| e as usize - idx - 1)
        .sum()
}

pub(crate) fn partial_dim_raw(elems: &[u8], r: usize) -> usize {
    let from = r.max(1);
    elems
        .iter()
        .enumerate()
        .skip(from - 1)
        .map(|(idx, &e)| e as usize - idx - 1)
        .sum()
}

pub(crate) fn in_out_raw(n: usize, elems: &[u8]) -> (IndexSet, IndexSet) {
    let k = elems.len();
    let mut in_set = IndexSet::empty();
    let mut out_set = IndexSet::empty();
    for i in 1..=k {
        let s = elems[i - 1] as usize;
        if s % 2 == k % 2 {
            if entry(n, elems, i - 1) + 1 < s {
                in_set.insert(i);
            }
        } else if s + 1 < entry(n, elems, i + 1) {
            out_set.insert(i);
        }
    }
    (in_set, out_set)
}

pub(crate) fn kind_raw(n: usize, elems: &[u8]) -> CellKind {
    let (i, o) = in_out_raw(n, elems);
    CellClassification::from_sets(i, o).kind
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, e: &[usize]) -> SchubertSet {
        SchubertSet::new(n, e).unwrap()
    }

    fn ids(v: &[SchubertSet]) -> Vec<String> {
        v.iter().map(|s| s.label()).collect()
    }

    #[test]
    fn enumerates_lexicographically() {
        assert_eq!(ids(&enumerate_subsets(2, 1).unwrap()), ["1", "2"]);
        assert_eq!(
            ids(&enumerate_subsets(4, 2).unwrap()),
            ["12", "13", "14", "23", "24", "34"]
        );
        assert_eq!(enumerate_subsets(5, 0).unwrap().len(), 1);
        assert_eq!(enumerate_subsets(5, 5).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_rejects_bad_arguments() {
        assert!(matches!(subsets(3, 4), Err(Error::InvalidArgument(_))));
        assert!(matches!(subsets(0, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(subsets(65, 1), Err(Error::UnsupportedSize { .. })));
    }

    #[test]
    fn construction_validates() {
        assert!(SchubertSet::new(4, &[2, 2]).is_err());
        assert!(SchubertSet::new(4, &[3, 2]).is_err());
        assert!(SchubertSet::new(4, &[0, 2]).is_err());
        assert!(SchubertSet::new(4, &[1, 5]).is_err());
        assert!(SchubertSet::new(64, &[1, 64]).is_ok());
    }

    #[test]
    fn order_examples() {
        assert!(leq(&set(4, &[1, 3]), &set(4, &[2, 4])).unwrap());
        assert!(!leq(&set(4, &[1, 4]), &set(4, &[2, 3])).unwrap());
        assert!(!leq(&set(4, &[2, 3]), &set(4, &[1, 4])).unwrap());
        let s = set(6, &[1, 3, 5]);
        assert!(leq(&s, &s).unwrap());
        assert!(leq(&set(4, &[1, 3]), &set(5, &[2, 4])).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim(&set(6, &[1, 2, 3])), 0);
        assert_eq!(dim(&set(6, &[1, 3, 4])), 2);
        assert_eq!(dim(&SchubertSet::top(7, 3).unwrap()), 12);
        assert_eq!(partial_dim(&set(6, &[1, 2, 4]), 2).unwrap(), 1);
        assert_eq!(partial_dim(&set(6, &[2, 4, 6]), 1).unwrap(), 6);
        assert_eq!(partial_dim(&set(6, &[1, 2, 4]), 3).unwrap(), 1);
        assert_eq!(partial_dim(&set(6, &[2, 4, 6]), 0).unwrap(), 6);
        assert!(partial_dim(&set(6, &[2, 4, 6]), 4).is_err());
    }

    #[test]
    fn z_index_examples() {
        assert!(z_index_set(&set(5, &[1, 2, 3])).is_empty());
        assert_eq!(z_index_set(&set(3, &[2])), [ZIndexPair { i: 1, j: 1 }]);
        assert_eq!(
            z_index_set(&set(3, &[3])),
            [ZIndexPair { i: 1, j: 2 }, ZIndexPair { i: 1, j: 1 }]
        );
        let z = z_index_set(&set(7, &[2, 5, 7]));
        assert!(z.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn counts() {
        assert_eq!(cell_count(4, 2, 2).unwrap(), 2);
        assert_eq!(cell_count(9, 4, 0).unwrap(), 1);
        assert_eq!(cell_count(6, 3, 9).unwrap(), 1);
        assert_eq!(cell_counts(6, 3).unwrap(), [1, 1, 2, 3, 3, 3, 3, 2, 1, 1]);
        assert!(cell_count(6, 3, 10).is_err());
        assert_eq!(cell_counts(5, 0).unwrap(), [1]);
        assert_eq!(cell_counts(5, 5).unwrap(), [1]);
    }

    #[test]
    fn classification_examples() {
        let c = classify(&set(3, &[1]));
        assert_eq!(
            (c.in_set, c.out_set, c.kind),
            (IndexSet::empty(), IndexSet::empty(), CellKind::Free)
        );

        let c = classify(&set(3, &[3]));
        assert_eq!(c.in_set.iter().collect::<Vec<_>>(), [1]);
        assert!(c.out_set.is_empty());
        assert_eq!(c.kind, CellKind::CokernelSide);

        let c = classify(&set(6, &[1, 3, 6]));
        assert_eq!(c.in_set.iter().collect::<Vec<_>>(), [2]);
        assert!(c.out_set.is_empty());
        assert_eq!(c.kind, CellKind::CokernelSide);

        let c = classify(&set(3, &[2]));
        assert_eq!(c.out_set.iter().collect::<Vec<_>>(), [1]);
        assert_eq!(c.kind, CellKind::KernelSide);
    }

    #[test]
    fn admissible_examples() {
        let s = set(6, &[1, 2, 4]);
        assert!(admissible_leq(&s, &s).unwrap());
        assert!(admissible_leq(&s, &set(6, &[1, 3, 4])).unwrap());
        assert!(!admissible_leq(&set(6, &[1, 3, 5]), &set(6, &[1, 4, 5])).unwrap());
        assert!(admissible_leq(&s, &set(6, &[1, 3, 5])).unwrap());
    }

    #[test]
    fn raise_and_lower() {
        let s = set(6, &[1, 2, 4]);
        assert_eq!(s.raised(1), None);
        assert_eq!(s.raised(2), Some(set(6, &[1, 3, 4])));
        assert_eq!(s.raised(3), Some(set(6, &[1, 2, 5])));
        assert_eq!(set(6, &[1, 2, 6]).raised(3), None);
        assert_eq!(s.lowered(3), Some(set(6, &[1, 2, 3])));
        assert_eq!(s.lowered(1), None);
    }

    #[test]
    fn ids_and_labels() {
        let s = set(6, &[1, 2, 4]);
        assert_eq!(s.id(), "1-2-4");
        assert_eq!(s.label(), "124");
        assert_eq!(s.to_string(), "{1,2,4}");
        assert_eq!(set(12, &[1, 10]).label(), "1-10");
    }
}
