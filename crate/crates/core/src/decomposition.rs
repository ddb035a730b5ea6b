//! Splitting the Schubert complex into tensor powers of `Cone(Z --2--> Z)`.
//!
//! Every cell `T` belongs to exactly one summand, indexed by the cell `S^T`
//! obtained by raising the positions of `Out(T)`. The summand of a representative
//! `S` (with `Out(S)` empty) is its admissible down-set, a cube on the subsets of
//! `In(S)`. The change-of-basis isomorphisms are never materialized; the
//! decomposition is checked through basis-independent invariants instead.

use std::collections::HashMap;

use num_integer::binomial;
use serde::Serialize;

use crate::combinatorics::{admissible_leq, classify, in_out_raw, subsets, IndexSet, SchubertSet};
use crate::complex::{Direction, GradedComplex};
use crate::error::{invalid, Error, Result};
use crate::module::GradedModule;
use crate::oracle::{invariant_factors, module_from_factors};
use crate::ring::{CoefficientRing, CyclicPiece};

/// One direct summand `Cone(Z --2--> Z)^{⊗ In(S)}` shifted to start in degree `shift`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSummand {
    pub representative: SchubertSet,
    pub in_set: IndexSet,
    /// `d(S) - card(In(S))`, the lowest degree among the member cells.
    pub shift: usize,
    /// The admissible down-set of the representative, `2^{card(In(S))}` cells.
    pub member_cells: Vec<SchubertSet>,
}

impl ConeSummand {
    pub fn in_size(&self) -> usize {
        self.in_set.len()
    }

    pub fn is_free(&self) -> bool {
        self.in_set.is_empty()
    }
}

/// `S^T`: raise every position of `Out(T)` by one.
pub fn out_representative(t: &SchubertSet) -> SchubertSet {
    let (_, out) = in_out_raw(t.n(), t.elements());
    let mut elems: smallvec::SmallVec<[u8; 16]> = t.elements().into();
    for i in out.iter() {
        elems[i - 1] += 1;
    }
    SchubertSet::from_elems(t.n(), elems)
}

/// All `T` with `T ≤_adm S`, ordered by degree and then lexicographically.
pub fn admissible_down_set(s: &SchubertSet) -> Result<Vec<SchubertSet>> {
    let c = classify(s);
    if !c.out_set.is_empty() {
        return Err(invalid(format!("{s} has nonempty Out-set {:?}", c.out_set)));
    }
    let positions: Vec<usize> = c.in_set.iter().collect();
    let mut out: Vec<SchubertSet> = (0u64..1 << positions.len())
        .map(|mask| {
            let mut elems: smallvec::SmallVec<[u8; 16]> = s.elements().into();
            for (b, &i) in positions.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    elems[i - 1] -= 1;
                }
            }
            SchubertSet::from_elems(s.n(), elems)
        })
        .collect();
    out.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// One summand per cell with empty `Out`-set, in canonical order.
pub fn cone_decomposition(n: usize, k: usize) -> Result<Vec<ConeSummand>> {
    subsets(n, k)?
        .filter(|s| in_out_raw(n, s.elements()).1.is_empty())
        .map(|s| {
            let in_set = classify(&s).in_set;
            Ok(ConeSummand {
                shift: s.dim() - in_set.len(),
                member_cells: admissible_down_set(&s)?,
                in_set,
                representative: s,
            })
        })
        .collect()
}

/// `Cone^{⊗r} ≅ ⊕_a Cone[a]^{C(r-1, a)}`: the pairs `(a, C(r-1, a))` for `0 <= a < r`.
pub fn cone_power_multiplicities(r: usize) -> Result<Vec<(usize, u64)>> {
    if r == 0 {
        return Err(invalid("cone power must be at least 1"));
    }
    Ok((0..r)
        .map(|a| (a, binomial(r as u64 - 1, a as u64)))
        .collect())
}

/// Homology predicted by the cone model: each elementary `R --2--> R` piece
/// contributes a kernel at its source and a cokernel at its target.
pub fn cone_model_module(
    summands: &[ConeSummand],
    top_degree: usize,
    direction: Direction,
    ring: CoefficientRing,
) -> Result<GradedModule> {
    let mut out = GradedModule::zero(ring, top_degree);
    for s in summands {
        if s.is_free() {
            out.add_piece(s.representative.dim(), CyclicPiece::Free, 1);
            continue;
        }
        for (a, mult) in cone_power_multiplicities(s.in_size())? {
            let low = s.shift + a;
            let (ker_at, coker_at) = match direction {
                Direction::Cohomological => (low, low + 1),
                Direction::Homological => (low + 1, low),
            };
            out.add_piece(ker_at, ring.kernel_of(2), mult);
            out.add_piece(coker_at, ring.cokernel_of(2), mult);
        }
    }
    out.normalize();
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: usize,
    pub k: usize,
    pub summands: usize,
    pub free_summands: usize,
    pub cone_summands: usize,
    pub largest_cone_power: usize,
    /// Cells per degree, as reassembled from the summands.
    pub generator_tally: Vec<usize>,
    pub rings_checked: Vec<String>,
}

fn mismatch(a: &SchubertSet, b: &SchubertSet, reason: impl Into<String>) -> Error {
    Error::DecompositionMismatch {
        lower: a.to_string(),
        upper: b.to_string(),
        reason: reason.into(),
    }
}

/// Checks the cone decomposition of `Gr_k(n)` against a built complex `c`.
///
/// Verifies that the summands partition the basis, that no nonzero entry of the
/// differential crosses summands, that each summand has the arrow structure of a
/// cube, that graded generator counts agree, and that the homology of the cone
/// model equals the oracle homology of `c` over every ring of
/// [`CoefficientRing::standard_set`].
pub fn verify_decomposition(c: &GradedComplex) -> Result<DecompositionReport> {
    let summands = cone_decomposition(c.n(), c.k())?;
    let top = c.top_degree();

    // partition
    let mut owner: HashMap<u64, usize> = HashMap::new();
    let mut tally = vec![0usize; top + 1];
    for (idx, s) in summands.iter().enumerate() {
        if s.member_cells.len() != 1 << s.in_size() {
            return Err(mismatch(
                &s.representative,
                &s.representative,
                "summand is not a cube",
            ));
        }
        for t in &s.member_cells {
            if owner.insert(t.bits(), idx).is_some() {
                return Err(mismatch(t, &s.representative, "cell lies in two summands"));
            }
            if out_representative(t) != s.representative || !admissible_leq(t, &s.representative)? {
                return Err(mismatch(
                    t,
                    &s.representative,
                    "member does not reach its representative",
                ));
            }
            tally[t.dim()] += 1;
        }
    }
    for basis in c.bases() {
        for t in basis {
            if !owner.contains_key(&t.bits()) {
                return Err(mismatch(t, t, "cell is not covered by any summand"));
            }
        }
    }
    if tally != c.cell_counts() {
        return Err(Error::Mismatch(format!(
            "summand generator tally {tally:?} differs from cell counts {:?}",
            c.cell_counts()
        )));
    }

    // cone-model generator counts, degree by degree
    let mut model_tally = vec![0usize; top + 1];
    for s in &summands {
        if s.is_free() {
            model_tally[s.representative.dim()] += 1;
            continue;
        }
        for (a, mult) in cone_power_multiplicities(s.in_size())? {
            model_tally[s.shift + a] += mult as usize;
            model_tally[s.shift + a + 1] += mult as usize;
        }
    }
    if model_tally != tally {
        return Err(Error::Mismatch(format!(
            "cone model generator counts {model_tally:?} differ from {tally:?}"
        )));
    }

    // no crossing entries; cube arrow structure inside each summand
    let mut outgoing: HashMap<u64, usize> = HashMap::new();
    let mut incoming: HashMap<u64, usize> = HashMap::new();
    for (i, d) in c.differentials().iter().enumerate() {
        let (row_deg, col_deg) = match c.direction() {
            Direction::Cohomological => (i + 1, i),
            Direction::Homological => (i, i + 1),
        };
        for (r, col, v) in d.entries() {
            let a = &c.basis(row_deg)[r];
            let b = &c.basis(col_deg)[col];
            if v.abs() != 2 {
                return Err(mismatch(b, a, format!("coefficient {v} is not ±2")));
            }
            if owner[&a.bits()] != owner[&b.bits()] {
                return Err(mismatch(b, a, "nonzero entry crosses two summands"));
            }
            let (lower, upper) = if row_deg < col_deg { (a, b) } else { (b, a) };
            *outgoing.entry(lower.bits()).or_default() += 1;
            *incoming.entry(upper.bits()).or_default() += 1;
        }
    }
    for s in &summands {
        for t in &s.member_cells {
            let out_size = classify(t).out_set.len();
            let got_out = outgoing.get(&t.bits()).copied().unwrap_or(0);
            let got_in = incoming.get(&t.bits()).copied().unwrap_or(0);
            if got_out != out_size || got_in != s.in_size() - out_size {
                return Err(mismatch(
                    t,
                    &s.representative,
                    format!("cell has {got_in} incoming / {got_out} outgoing arrows"),
                ));
            }
        }
    }

    // homology of the cone model vs the oracle
    let factors = invariant_factors(c)?;
    let rings = CoefficientRing::standard_set();
    for ring in rings {
        let model = cone_model_module(&summands, top, c.direction(), ring)?;
        let oracle = module_from_factors(c, &factors, ring);
        if let Some(&m) = model.differing_degrees(&oracle).first() {
            let rep = &c
                .basis(m)
                .first()
                .cloned()
                .unwrap_or_else(|| summands[0].representative.clone());
            return Err(mismatch(
                rep,
                rep,
                format!("over {ring}, cone model and oracle disagree in degree {m}"),
            ));
        }
    }

    let free_summands = summands.iter().filter(|s| s.is_free()).count();
    Ok(DecompositionReport {
        n: c.n(),
        k: c.k(),
        summands: summands.len(),
        free_summands,
        cone_summands: summands.len() - free_summands,
        largest_cone_power: summands.iter().map(ConeSummand::in_size).max().unwrap_or(0),
        generator_tally: tally,
        rings_checked: rings.iter().map(ToString::to_string).collect(),
    })
}
