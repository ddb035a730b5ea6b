//! Brute-force (co)homology of a [`GradedComplex`] via Smith normal form.
//!
//! Every differential is diagonalized over `Z`. Since the row and column
//! operations are invertible over any ring, a free complex splits into
//! elementary pieces `R --d--> R` (one per invariant factor `d`) plus free
//! summands, and the homology over any supported ring follows from the
//! invariant factors alone.

use crate::combinatorics::cell_counts;
use crate::complex::{build_complex, Direction, GradedComplex};
use crate::error::{Error, Result};
use crate::module::GradedModule;
use crate::ring::{CoefficientRing, CyclicPiece};
use crate::snf::{smith_normal_form, IntMatrix};

/// Largest per-degree basis the oracle accepts.
pub const ORACLE_MAX_DEGREE_SIZE: usize = 20_000;

/// `H^*(Gr_k(n); R)` by brute force. Refuses oversized instances before building anything.
pub fn cohomology_oracle(n: usize, k: usize, ring: CoefficientRing) -> Result<GradedModule> {
    let largest = cell_counts(n, k)?.into_iter().max().unwrap_or(0);
    check_scale(n, k, largest as usize)?;
    homology_with_coefficients(&build_complex(n, k, Direction::Cohomological)?, ring)
}

fn check_scale(n: usize, k: usize, largest: usize) -> Result<()> {
    if largest > ORACLE_MAX_DEGREE_SIZE {
        return Err(Error::Resource(format!(
            "Gr_{k}({n}) has {largest} cells in one degree; the oracle is limited to {ORACLE_MAX_DEGREE_SIZE}"
        )));
    }
    Ok(())
}

/// Integral (co)homology of `c`, in the complex's own direction.
pub fn homology_integral(c: &GradedComplex) -> Result<GradedModule> {
    homology_with_coefficients(c, CoefficientRing::Integers)
}

/// (Co)homology of `c ⊗ R`.
pub fn homology_with_coefficients(
    c: &GradedComplex,
    ring: CoefficientRing,
) -> Result<GradedModule> {
    let factors = invariant_factors(c)?;
    Ok(module_from_factors(c, &factors, ring))
}

/// Invariant factors of every differential of `c`, after the scale and `δ² = 0` checks.
pub fn invariant_factors(c: &GradedComplex) -> Result<Vec<Vec<u64>>> {
    let largest = c.cell_counts().into_iter().max().unwrap_or(0);
    check_scale(c.n(), c.k(), largest)?;
    c.check_square_zero()?;
    c.differentials()
        .iter()
        .map(|d| {
            smith_normal_form(&IntMatrix::from(d))
                .factors_u64()
                .ok_or_else(|| Error::Resource("invariant factor exceeds 64 bits".into()))
        })
        .collect()
}

/// Assembles the graded module from the invariant factors of each differential.
pub fn module_from_factors(
    c: &GradedComplex,
    factors: &[Vec<u64>],
    ring: CoefficientRing,
) -> GradedModule {
    let mut out = GradedModule::zero(ring, c.top_degree());
    for (m, basis) in c.bases().iter().enumerate() {
        // maps[i] joins degrees i and i + 1; which one arrives at m depends on direction
        let (incoming, outgoing) = match c.direction() {
            Direction::Cohomological => (m.checked_sub(1), (m < c.top_degree()).then_some(m)),
            Direction::Homological => ((m < c.top_degree()).then_some(m), m.checked_sub(1)),
        };
        let inc: &[u64] = incoming.map_or(&[], |i| &factors[i]);
        let out_f: &[u64] = outgoing.map_or(&[], |i| &factors[i]);

        let free = basis.len() - inc.len() - out_f.len();
        out.add_piece(m, CyclicPiece::Free, free as u64);
        for &d in inc {
            out.add_piece(m, ring.cokernel_of(d), 1);
        }
        for &d in out_f {
            out.add_piece(m, ring.kernel_of(d), 1);
        }
    }
    out.normalize();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::SparseMatrix;
    use crate::SchubertSet;

    fn summary(m: &GradedModule) -> Vec<(u64, Vec<u64>)> {
        m.groups
            .iter()
            .map(|g| (g.free_rank, g.torsion.clone()))
            .collect()
    }

    #[test]
    fn circle() {
        let c = build_complex(2, 1, Direction::Homological).unwrap();
        let h = homology_integral(&c).unwrap();
        assert_eq!(summary(&h), [(1, vec![]), (1, vec![])]);
    }

    #[test]
    fn projective_plane() {
        let c = build_complex(3, 1, Direction::Cohomological).unwrap();
        let h = homology_integral(&c).unwrap();
        assert_eq!(summary(&h), [(1, vec![]), (0, vec![]), (0, vec![2])]);

        let h = homology_with_coefficients(&c, CoefficientRing::IntegersMod(2)).unwrap();
        assert_eq!(h.free_ranks(), [1, 1, 1]);
        assert!(h.is_torsion_free());

        let h = homology_with_coefficients(&c, CoefficientRing::Rationals).unwrap();
        assert_eq!(h.free_ranks(), [1, 0, 0]);
    }

    #[test]
    fn gr_2_4() {
        // δ¹ = (-2, -2)ᵀ and δ² = (2, -2) by hand; δ⁰ = δ³ = 0
        let c = build_complex(4, 2, Direction::Cohomological).unwrap();
        assert_eq!(c.differential(1).to_dense(), [vec![-2], vec![-2]]);
        assert_eq!(c.differential(2).to_dense(), [vec![2, -2]]);

        let h = homology_integral(&c).unwrap();
        assert_eq!(
            summary(&h),
            [
                (1, vec![]),
                (0, vec![]),
                (0, vec![2]),
                (0, vec![2]),
                (1, vec![])
            ]
        );
        let h = homology_with_coefficients(&c, CoefficientRing::IntegersMod(4)).unwrap();
        assert_eq!(
            summary(&h),
            [
                (1, vec![]),
                (0, vec![2]),
                (0, vec![2, 2]),
                (0, vec![2]),
                (1, vec![])
            ]
        );
    }

    #[test]
    fn zero_differentials_are_free() {
        let c = build_complex(5, 2, Direction::Homological).unwrap();
        let h = homology_with_coefficients(&c, CoefficientRing::IntegersMod(2)).unwrap();
        assert_eq!(
            h.free_ranks(),
            c.cell_counts()
                .iter()
                .map(|&x| x as u64)
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn rejects_invalid_complex() {
        let s = |e: usize| SchubertSet::new(3, &[e]).unwrap();
        let bases = vec![vec![s(1)], vec![s(2)], vec![s(3)]];
        let one = SparseMatrix::from_columns(1, vec![vec![(0, 1)]]);
        let c = GradedComplex::from_parts(
            3,
            1,
            Direction::Cohomological,
            bases,
            vec![one.clone(), one],
        )
        .unwrap();
        assert!(matches!(
            homology_integral(&c),
            Err(Error::InvalidComplex { .. })
        ));
    }

    #[test]
    fn oracle_entry_point_checks_scale_first() {
        let h = cohomology_oracle(3, 1, CoefficientRing::Integers).unwrap();
        assert_eq!(summary(&h), [(1, vec![]), (0, vec![]), (0, vec![2])]);
        // returns before building 2.7M cells
        assert!(matches!(
            cohomology_oracle(24, 12, CoefficientRing::Integers),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn refuses_oversized_complexes() {
        let cell = SchubertSet::new(3, &[1]).unwrap();
        let bases = vec![vec![cell; ORACLE_MAX_DEGREE_SIZE + 1]];
        let c = GradedComplex::from_parts(3, 1, Direction::Homological, bases, vec![]).unwrap();
        assert!(matches!(homology_integral(&c), Err(Error::Resource(_))));
    }
}
