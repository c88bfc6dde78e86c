use serde::Serialize;

use super::weights::CodeType;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceBound {
    pub value: usize,
    /// For Type I at `n ≡ 0 (mod 24)` the usual statement of the case split overlaps; the
    /// first case is taken and the result flagged.
    pub ambiguous: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Extremal,
    OptimalClaimed,
    BestKnown,
}

/// Upper bound on the minimum distance of a binary self-dual code of length `n`.
///
/// Type II: `4⌊n/24⌋ + 4`. Type I: `4⌊n/24⌋ + 2` if `n ≡ 0`, else `+4` if
/// `n ≢ 22`, else `+6` (mod 24), taking the first matching case.
pub fn distance_bound(n: usize, ty: CodeType) -> DistanceBound {
    let base = 4 * (n / 24);
    match ty {
        CodeType::TypeII => DistanceBound { value: base + 4, ambiguous: false },
        CodeType::TypeI => {
            let r = n % 24;
            if r == 0 {
                DistanceBound { value: base + 2, ambiguous: true }
            } else if r != 22 {
                DistanceBound { value: base + 4, ambiguous: false }
            } else {
                DistanceBound { value: base + 6, ambiguous: false }
            }
        }
    }
}

/// `Extremal` iff `d` meets [`distance_bound`]. Otherwise `OptimalClaimed`
/// when the caller has an external optimality claim, else `BestKnown`.
pub fn classify_status(n: usize, d: usize, ty: CodeType, optimal_claim: bool) -> Status {
    if d == distance_bound(n, ty).value {
        Status::Extremal
    } else if optimal_claim {
        Status::OptimalClaimed
    } else {
        Status::BestKnown
    }
}
