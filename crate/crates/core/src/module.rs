//! Finitely generated graded modules, one cyclic decomposition per degree.

use serde::{Deserialize, Serialize};

use crate::ring::{CoefficientRing, CyclicPiece};

/// `R^free_rank ⊕ (⊕ R/t for t in torsion)` in a single degree.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeGroup {
    pub degree: usize,
    pub free_rank: u64,
    /// Orders of the proper cyclic summands, ascending.
    pub torsion: Vec<u64>,
}

impl DegreeGroup {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Number of torsion summands of order `order`.
    pub fn torsion_count(&self, order: u64) -> usize {
        self.torsion.iter().filter(|&&t| t == order).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedModule {
    pub ring: CoefficientRing,
    /// One entry per degree `0..=top`, in order.
    pub groups: Vec<DegreeGroup>,
}

impl GradedModule {
    pub fn zero(ring: CoefficientRing, top_degree: usize) -> Self {
        GradedModule {
            ring,
            groups: (0..=top_degree)
                .map(|degree| DegreeGroup {
                    degree,
                    ..Default::default()
                })
                .collect(),
        }
    }

    pub fn top_degree(&self) -> usize {
        self.groups.len().saturating_sub(1)
    }

    pub fn group(&self, degree: usize) -> Option<&DegreeGroup> {
        self.groups.get(degree)
    }

    pub fn add_piece(&mut self, degree: usize, piece: CyclicPiece, multiplicity: u64) {
        let g = &mut self.groups[degree];
        match piece {
            CyclicPiece::Zero => {}
            CyclicPiece::Free => g.free_rank += multiplicity,
            CyclicPiece::Torsion(t) => g
                .torsion
                .extend(std::iter::repeat_n(t, multiplicity as usize)),
        }
    }

    /// Restores the ascending order of every torsion list.
    pub fn normalize(&mut self) {
        for g in &mut self.groups {
            g.torsion.sort_unstable();
        }
    }

    pub fn free_ranks(&self) -> Vec<u64> {
        self.groups.iter().map(|g| g.free_rank).collect()
    }

    pub fn total_free_rank(&self) -> u64 {
        self.groups.iter().map(|g| g.free_rank).sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }

    /// Degrees at which `self` and `other` differ.
    pub fn differing_degrees(&self, other: &GradedModule) -> Vec<usize> {
        let top = self.groups.len().max(other.groups.len());
        let empty = DegreeGroup::default();
        (0..top)
            .filter(|&m| {
                let a = self.groups.get(m).unwrap_or(&empty);
                let b = other.groups.get(m).unwrap_or(&empty);
                (a.free_rank, &a.torsion) != (b.free_rank, &b.torsion)
            })
            .collect()
    }
}

/// Human-readable form of one group, e.g. `Z^3 + (Z/2)^33`.
pub fn describe_group(ring: CoefficientRing, g: &DegreeGroup) -> String {
    let mut parts = Vec::new();
    if g.free_rank == 1 {
        parts.push(ring.to_string());
    } else if g.free_rank > 1 {
        parts.push(format!("{ring}^{}", g.free_rank));
    }
    let mut i = 0;
    while i < g.torsion.len() {
        let t = g.torsion[i];
        let run = g.torsion[i..].iter().take_while(|&&x| x == t).count();
        parts.push(if run == 1 {
            format!("Z/{t}")
        } else {
            format!("(Z/{t})^{run}")
        });
        i += run;
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}
