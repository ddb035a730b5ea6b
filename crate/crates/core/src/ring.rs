//! Coefficient rings and the cyclic modules `ker`/`coker` of multiplication maps on them.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error};

/// The coefficient rings supported throughout the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum CoefficientRing {
    Integers,
    Rationals,
    /// `Z/m` with `m >= 2`.
    IntegersMod(u64),
}

/// A cyclic module over a [`CoefficientRing`], normalized so that a copy of the
/// ring itself is `Free` and the zero module is `Zero`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CyclicPiece {
    Zero,
    Free,
    /// A proper cyclic quotient `Z/d` (or `Z/d` as a `Z/m`-module with `d | m`, `1 < d < m`).
    Torsion(u64),
}

impl CoefficientRing {
    pub fn integers_mod(m: u64) -> Result<Self, Error> {
        if m < 2 {
            return Err(invalid(format!("modulus must be at least 2, got {m}")));
        }
        Ok(CoefficientRing::IntegersMod(m))
    }

    /// The ring check every closed-vs-oracle comparison runs over.
    pub fn standard_set() -> [CoefficientRing; 5] {
        use CoefficientRing::*;
        [
            Integers,
            Rationals,
            IntegersMod(2),
            IntegersMod(3),
            IntegersMod(4),
        ]
    }

    pub fn is_field(self) -> bool {
        match self {
            CoefficientRing::Integers => false,
            CoefficientRing::Rationals => true,
            CoefficientRing::IntegersMod(m) => is_prime(m),
        }
    }

    /// `coker(R --d--> R)` for `d >= 1`.
    pub fn cokernel_of(self, d: u64) -> CyclicPiece {
        debug_assert!(d >= 1);
        match self {
            CoefficientRing::Integers => {
                if d == 1 {
                    CyclicPiece::Zero
                } else {
                    CyclicPiece::Torsion(d)
                }
            }
            CoefficientRing::Rationals => CyclicPiece::Zero,
            CoefficientRing::IntegersMod(m) => Self::mod_piece(m, d),
        }
    }

    /// `ker(R --d--> R)` for `d >= 1`.
    pub fn kernel_of(self, d: u64) -> CyclicPiece {
        debug_assert!(d >= 1);
        match self {
            CoefficientRing::Integers | CoefficientRing::Rationals => CyclicPiece::Zero,
            CoefficientRing::IntegersMod(m) => Self::mod_piece(m, d),
        }
    }

    // both ker and coker of d on Z/m are cyclic of order gcd(d, m)
    fn mod_piece(m: u64, d: u64) -> CyclicPiece {
        match d.gcd(&m) {
            1 => CyclicPiece::Zero,
            g if g == m => CyclicPiece::Free,
            g => CyclicPiece::Torsion(g),
        }
    }
}

fn is_prime(m: u64) -> bool {
    m >= 2
        && (2..)
            .take_while(|p| p * p <= m)
            .all(|p| !m.is_multiple_of(p))
}

impl fmt::Display for CoefficientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientRing::Integers => f.write_str("Z"),
            CoefficientRing::Rationals => f.write_str("Q"),
            CoefficientRing::IntegersMod(m) => write!(f, "Z/{m}"),
        }
    }
}

impl FromStr for CoefficientRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "Z" => Ok(CoefficientRing::Integers),
            "Q" => Ok(CoefficientRing::Rationals),
            other => {
                let m = other
                    .strip_prefix("Z/")
                    .and_then(|m| m.parse::<u64>().ok())
                    .ok_or_else(|| {
                        invalid(format!(
                            "unknown coefficient ring {other:?}; use Z, Q or Z/<m>"
                        ))
                    })?;
                CoefficientRing::integers_mod(m)
            }
        }
    }
}

impl TryFrom<String> for CoefficientRing {
    type Error = Error;

    fn try_from(s: String) -> Result<Self, Error> {
        s.parse()
    }
}

impl From<CoefficientRing> for String {
    fn from(r: CoefficientRing) -> String {
        r.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use CoefficientRing::*;
    use CyclicPiece::*;

    #[test]
    fn parses_and_prints() {
        for s in ["Z", "Q", "Z/2", "Z/4", "Z/97"] {
            assert_eq!(s.parse::<CoefficientRing>().unwrap().to_string(), s);
        }
        for bad in ["Z/1", "Z/0", "Z/", "R", "Z/x", "z"] {
            assert!(bad.parse::<CoefficientRing>().is_err(), "{bad}");
        }
    }

    #[test]
    fn multiplication_by_two() {
        assert_eq!(
            (Integers.kernel_of(2), Integers.cokernel_of(2)),
            (Zero, Torsion(2))
        );
        assert_eq!(
            (Rationals.kernel_of(2), Rationals.cokernel_of(2)),
            (Zero, Zero)
        );
        assert_eq!(
            (IntegersMod(2).kernel_of(2), IntegersMod(2).cokernel_of(2)),
            (Free, Free)
        );
        assert_eq!(
            (IntegersMod(3).kernel_of(2), IntegersMod(3).cokernel_of(2)),
            (Zero, Zero)
        );
        assert_eq!(
            (IntegersMod(4).kernel_of(2), IntegersMod(4).cokernel_of(2)),
            (Torsion(2), Torsion(2))
        );
        assert_eq!(IntegersMod(12).cokernel_of(8), Torsion(4));
        assert_eq!(Integers.cokernel_of(1), Zero);
    }

    #[test]
    fn fields() {
        assert!(Rationals.is_field());
        assert!(IntegersMod(7).is_field());
        assert!(!IntegersMod(4).is_field());
        assert!(!Integers.is_field());
    }
}
