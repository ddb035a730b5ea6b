//! The full consistency suite for a single `Gr_k(n)` or a range of them.

use serde::Serialize;

use crate::closed_form::cohomology_closed;
use crate::combinatorics::{cell_counts, check_nk, MAX_N};
use crate::complex::{build_complex, diff_coefficient, sigma_signs, Direction};
use crate::decomposition::verify_decomposition;
use crate::error::{invalid, Error, Result};
use crate::oracle::{invariant_factors, module_from_factors};
use crate::ring::CoefficientRing;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub n: usize,
    pub k: usize,
    pub cells: usize,
    pub covers_checked: usize,
    pub summands: usize,
    pub rings_checked: usize,
}

/// Runs every check on `Gr_k(n)`, stopping at the first counterexample.
///
/// Checks `δ² = 0`, that the simplified coefficient equals the sum of the two
/// link signs on every cover, that degree sizes match the partition counts,
/// the cone decomposition, and closed formula against oracle over every ring
/// in [`CoefficientRing::standard_set`].
pub fn verify_instance(n: usize, k: usize) -> Result<InstanceReport> {
    check_nk(n, k)?;
    let c = build_complex(n, k, Direction::Cohomological)?;
    c.check_square_zero()?;

    let mut covers = 0;
    for s in c.bases().iter().flatten() {
        for r in 1..=k {
            let Some(t) = s.raised(r) else { continue };
            let (zero, pi) = sigma_signs(s, &t)?;
            let coefficient = diff_coefficient(s, r)?;
            if zero + pi != coefficient {
                return Err(Error::Mismatch(format!(
                    "{s} -> {t}: simplified coefficient {coefficient} but link signs sum to {}",
                    zero + pi
                )));
            }
            covers += 1;
        }
    }

    let expected: Vec<usize> = cell_counts(n, k)?.into_iter().map(|c| c as usize).collect();
    if c.cell_counts() != expected {
        return Err(Error::Mismatch(format!(
            "Gr_{k}({n}) degree sizes {:?} differ from partition counts {expected:?}",
            c.cell_counts()
        )));
    }

    let report = verify_decomposition(&c)?;

    let factors = invariant_factors(&c)?;
    let rings = CoefficientRing::standard_set();
    for ring in rings {
        let oracle = module_from_factors(&c, &factors, ring);
        let closed = cohomology_closed(n, k, ring)?;
        if let Some(&m) = closed.differing_degrees(&oracle).first() {
            return Err(Error::Mismatch(format!(
                "Gr_{k}({n}) over {ring}, degree {m}: closed formula {:?} vs oracle {:?}",
                closed.groups[m], oracle.groups[m]
            )));
        }
    }

    Ok(InstanceReport {
        n,
        k,
        cells: c.cell_counts().iter().sum(),
        covers_checked: covers,
        summands: report.summands,
        rings_checked: rings.len(),
    })
}

/// [`verify_instance`] for all `1 <= k <= n <= max_n`, reporting each success to `progress`.
pub fn verify_range(
    max_n: usize,
    mut progress: impl FnMut(&InstanceReport),
) -> Result<Vec<InstanceReport>> {
    if max_n > MAX_N {
        return Err(Error::UnsupportedSize {
            n: max_n,
            max: MAX_N,
        });
    }
    if max_n == 0 {
        return Err(invalid("max-n must be at least 1"));
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            let r = verify_instance(n, k)?;
            progress(&r);
            out.push(r);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_range_passes() {
        let mut seen = 0;
        let all = verify_range(5, |_| seen += 1).unwrap();
        assert_eq!(all.len(), 15);
        assert_eq!(seen, 15);
    }

    #[test]
    fn size_limits() {
        assert!(matches!(
            verify_range(65, |_| {}),
            Err(Error::UnsupportedSize { .. })
        ));
        assert!(verify_range(0, |_| {}).is_err());
    }
}
