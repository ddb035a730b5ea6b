//! Cohomology of `Gr_k(n)` read off from cell classifications alone.
//!
//! Each cell `S` contributes one cyclic module `V_S` in degree `d(S)`:
//! `R` for free cells, `ker(R --2--> R)` for kernel-side cells and
//! `coker(R --2--> R)` for cokernel-side cells. No matrices are built, so this
//! scales to every `Gr_k(n)` whose cells can be enumerated.

use crate::combinatorics::{
    cell_counts, check_nk, classify, dim_raw, kind_raw, subsets, CellKind, SchubertSet,
};
use crate::error::Result;
use crate::module::GradedModule;
use crate::ring::{CoefficientRing, CyclicPiece};

/// The summand a single cell contributes, before a ring is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VModule {
    Ring,
    KernelOfTwo,
    CokernelOfTwo,
}

impl VModule {
    pub fn over(self, ring: CoefficientRing) -> CyclicPiece {
        match self {
            VModule::Ring => CyclicPiece::Free,
            VModule::KernelOfTwo => ring.kernel_of(2),
            VModule::CokernelOfTwo => ring.cokernel_of(2),
        }
    }
}

impl From<CellKind> for VModule {
    fn from(kind: CellKind) -> Self {
        match kind {
            CellKind::Free => VModule::Ring,
            CellKind::KernelSide => VModule::KernelOfTwo,
            CellKind::CokernelSide => VModule::CokernelOfTwo,
        }
    }
}

/// `V_S` evaluated over `ring`.
pub fn v_module(s: &SchubertSet, ring: CoefficientRing) -> CyclicPiece {
    VModule::from(classify(s).kind).over(ring)
}

/// Per-degree tallies of free, kernel-side and cokernel-side cells.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KindCounts {
    pub free: Vec<u64>,
    pub kernel_side: Vec<u64>,
    pub cokernel_side: Vec<u64>,
}

/// Single pass over all cells of `Gr_k(n)`.
pub fn kind_counts(n: usize, k: usize) -> Result<KindCounts> {
    check_nk(n, k)?;
    let len = k * (n - k) + 1;
    let mut counts = KindCounts {
        free: vec![0; len],
        kernel_side: vec![0; len],
        cokernel_side: vec![0; len],
    };
    for s in subsets(n, k)? {
        let d = dim_raw(s.elements());
        let slot = match kind_raw(n, s.elements()) {
            CellKind::Free => &mut counts.free,
            CellKind::KernelSide => &mut counts.kernel_side,
            CellKind::CokernelSide => &mut counts.cokernel_side,
        };
        slot[d] += 1;
    }
    Ok(counts)
}

/// `H^*(Gr_k(n); R)` from the closed formula, with `V_S` placed in degree `d(S)`.
pub fn cohomology_closed(n: usize, k: usize, ring: CoefficientRing) -> Result<GradedModule> {
    let counts = kind_counts(n, k)?;
    let mut out = GradedModule::zero(ring, k * (n - k));
    for m in 0..=out.top_degree() {
        out.add_piece(m, VModule::Ring.over(ring), counts.free[m]);
        out.add_piece(m, VModule::KernelOfTwo.over(ring), counts.kernel_side[m]);
        out.add_piece(
            m,
            VModule::CokernelOfTwo.over(ring),
            counts.cokernel_side[m],
        );
    }
    out.normalize();
    Ok(out)
}

/// Per-degree dimensions of `H^*(Gr_k(n); Z/2)`: every cell survives.
pub fn poincare_mod2(n: usize, k: usize) -> Result<Vec<u64>> {
    cell_counts(n, k)
}
