//! Published weight-enumerator families of singly-even self-dual codes at
//! lengths 56, 58, 64, 80 and 92, and recovery of their parameters from
//! measured low-weight counts.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::weights::WeightDistribution;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "W56,1")]
    W56_1,
    #[serde(rename = "W56,2")]
    W56_2,
    #[serde(rename = "W58,1")]
    W58_1,
    #[serde(rename = "W58,2")]
    W58_2,
    #[serde(rename = "W64,1")]
    W64_1,
    #[serde(rename = "W64,2")]
    W64_2,
    W80,
    #[serde(rename = "W92,1")]
    W92_1,
    #[serde(rename = "W92,2")]
    W92_2,
    #[serde(rename = "W92,3")]
    W92_3,
}

/// `A_w = constant + a·α + b·β`.
#[derive(Clone, Copy, Debug)]
struct Term {
    weight: usize,
    constant: i64,
    a: i64,
    b: i64,
}

const fn term(weight: usize, constant: i64, a: i64, b: i64) -> Term {
    Term { weight, constant, a, b }
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::W56_1,
        Family::W56_2,
        Family::W58_1,
        Family::W58_2,
        Family::W64_1,
        Family::W64_2,
        Family::W80,
        Family::W92_1,
        Family::W92_2,
        Family::W92_3,
    ];

    pub fn length(self) -> usize {
        match self {
            Family::W56_1 | Family::W56_2 => 56,
            Family::W58_1 | Family::W58_2 => 58,
            Family::W64_1 | Family::W64_2 => 64,
            Family::W80 => 80,
            Family::W92_1 | Family::W92_2 | Family::W92_3 => 92,
        }
    }

    pub fn for_length(n: usize) -> impl Iterator<Item = Family> {
        Family::ALL.into_iter().filter(move |f| f.length() == n)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::W56_1 => "W56,1",
            Family::W56_2 => "W56,2",
            Family::W58_1 => "W58,1",
            Family::W58_2 => "W58,2",
            Family::W64_1 => "W64,1",
            Family::W64_2 => "W64,2",
            Family::W80 => "W80",
            Family::W92_1 => "W92,1",
            Family::W92_2 => "W92,2",
            Family::W92_3 => "W92,3",
        }
    }

    fn terms(self) -> &'static [Term] {
        const W56_1: [Term; 2] = [term(10, 308, 4, 0), term(12, 4246, -8, 0)];
        const W56_2: [Term; 2] = [term(10, 308, 4, 0), term(12, 3990, -8, 0)];
        const W58_1: [Term; 2] = [term(10, 55, 0, 0), term(12, 5188, 0, 0)];
        const W58_2: [Term; 2] = [term(10, 319, -2, -24), term(12, 3132, 2, 152)];
        const W64_1: [Term; 2] = [term(12, 1312, 16, 0), term(14, 22016, -64, 0)];
        const W64_2: [Term; 2] = [term(12, 1312, 16, 0), term(14, 23040, -64, 0)];
        const W80: [Term; 2] = [term(14, 3200, 4, 0), term(16, 47645, -8, 256)];
        const W92_1: [Term; 3] = [term(16, 4692, 4, 0), term(18, 174800, -8, 256), term(20, 2425488, -52, -2048)];
        const W92_2: [Term; 3] = [term(16, 4692, 4, 0), term(18, 174800, -8, 256), term(20, 2441872, -52, -2048)];
        const W92_3: [Term; 3] = [term(16, 4692, 4, 0), term(18, 121296, -8, 0), term(20, 3213968, -52, 0)];
        match self {
            Family::W56_1 => &W56_1,
            Family::W56_2 => &W56_2,
            Family::W58_1 => &W58_1,
            Family::W58_2 => &W58_2,
            Family::W64_1 => &W64_1,
            Family::W64_2 => &W64_2,
            Family::W80 => &W80,
            Family::W92_1 => &W92_1,
            Family::W92_2 => &W92_2,
            Family::W92_3 => &W92_3,
        }
    }

    pub fn has_alpha(self) -> bool {
        self.terms().iter().any(|t| t.a != 0)
    }

    pub fn has_beta(self) -> bool {
        self.terms().iter().any(|t| t.b != 0)
    }

    /// Weight of the first listed coefficient, i.e. the minimum distance.
    pub fn min_weight(self) -> usize {
        self.terms()[0].weight
    }

    /// Weights the family formulas cover.
    pub fn weights(self) -> Vec<usize> {
        self.terms().iter().map(|t| t.weight).collect()
    }

    /// Evaluate the listed coefficients at `(α, β)`.
    pub fn coefficients(self, alpha: i64, beta: i64) -> Vec<(usize, i64)> {
        self.terms().iter().map(|t| (t.weight, t.constant + t.a * alpha + t.b * beta)).collect()
    }

    /// Parameter ranges given with the formulas, where there are any.
    fn in_range(self, alpha: Option<i64>, beta: Option<i64>) -> bool {
        match self {
            Family::W58_2 => {
                let beta_ok = beta.is_none_or(|b| (0..=11).contains(&b));
                let alpha_ok = match (alpha, beta) {
                    (Some(a), Some(b)) => (0..=159 - 12 * b).contains(&a),
                    (Some(a), None) => (0..=159).contains(&a),
                    _ => true,
                };
                beta_ok && alpha_ok
            }
            Family::W64_1 => alpha.is_none_or(|a| (14..=284).contains(&a)),
            Family::W64_2 => alpha.is_none_or(|a| (0..=277).contains(&a)),
            _ => true,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>().to_ascii_uppercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name().chars().filter(|c| c.is_ascii_alphanumeric()).collect::<String>() == key)
            .ok_or_else(|| Error::Parse(format!("unknown weight-enumerator family {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyParams {
    pub family: Family,
    pub alpha: Option<i64>,
    pub beta: Option<i64>,
}

impl FamilyParams {
    pub fn length(&self) -> usize {
        self.family.length()
    }
}

/// `W58,2 alpha=118 beta=1`, leaving out undetermined parameters.
impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family)?;
        if let Some(a) = self.alpha {
            write!(f, " alpha={a}")?;
        }
        if let Some(b) = self.beta {
            write!(f, " beta={b}")?;
        }
        Ok(())
    }
}

/// The first family consistent with the measured counts, and any others
/// that the available counts cannot rule out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFit {
    pub params: FamilyParams,
    pub alternatives: Vec<FamilyParams>,
}

impl FamilyFit {
    pub fn candidates(&self) -> impl Iterator<Item = &FamilyParams> {
        std::iter::once(&self.params).chain(&self.alternatives)
    }

    /// Whether some consistent reading agrees with `expected` on every
    /// parameter it determines.
    pub fn admits(&self, expected: &FamilyParams) -> bool {
        self.candidates().any(|c| {
            c.family == expected.family && c.alpha == expected.alpha && (c.beta.is_none() || c.beta == expected.beta)
        })
    }
}

fn exact_div(num: i64, den: i64) -> Option<i64> {
    (den != 0 && num % den == 0).then(|| num / den)
}

/// Solve the family's linear formulas against the known counts.
fn fit(family: Family, dist: &WeightDistribution) -> Option<FamilyParams> {
    let known: Vec<(Term, i64)> =
        family.terms().iter().filter_map(|t| dist.count(t.weight).map(|c| (*t, c as i64))).collect();
    if known.is_empty() || known[0].0.weight != family.min_weight() {
        return None;
    }
    // no nonzero words below the family's minimum weight
    if (1..family.min_weight()).any(|w| dist.count(w).is_some_and(|c| c > 0)) {
        return None;
    }
    let mut alpha = None;
    let mut beta = None;
    if family.has_alpha() {
        if let Some((t, c)) = known.iter().find(|(t, _)| t.a != 0 && t.b == 0) {
            alpha = Some(exact_div(c - t.constant, t.a)?);
        }
    }
    if family.has_beta() {
        match alpha {
            Some(a) => {
                if let Some((t, c)) = known.iter().find(|(t, _)| t.b != 0) {
                    beta = Some(exact_div(c - t.constant - t.a * a, t.b)?);
                }
            }
            None => {
                // both unknowns appear together: Cramer's rule on two equations
                let eqs: Vec<&(Term, i64)> = known.iter().filter(|(t, _)| t.a != 0 || t.b != 0).collect();
                if eqs.len() >= 2 {
                    let (t1, c1) = eqs[0];
                    let (t2, c2) = eqs[1];
                    let (r1, r2) = (c1 - t1.constant, c2 - t2.constant);
                    let det = t1.a * t2.b - t1.b * t2.a;
                    alpha = Some(exact_div(r1 * t2.b - t1.b * r2, det)?);
                    beta = Some(exact_div(t1.a * r2 - r1 * t2.a, det)?);
                }
            }
        }
    }
    if family.has_alpha() && alpha.is_none() {
        return None;
    }
    // every equation whose unknowns are determined must hold
    for (t, c) in &known {
        let needs_alpha = t.a != 0;
        let needs_beta = t.b != 0;
        if (needs_alpha && alpha.is_none()) || (needs_beta && beta.is_none()) {
            continue;
        }
        let value = t.constant + t.a * alpha.unwrap_or(0) + t.b * beta.unwrap_or(0);
        if value != *c {
            return None;
        }
    }
    family.in_range(alpha, beta).then_some(FamilyParams { family, alpha, beta })
}

/// Recover `(family, α, β)` from the known counts of a length-`n` code.
pub fn extract_family_params(n: usize, dist: &WeightDistribution) -> Result<FamilyFit> {
    let mut fits = Family::for_length(n).filter_map(|f| fit(f, dist));
    let params = fits.next().ok_or_else(|| {
        let shown: Vec<String> = dist.nonzero().map(|(w, c)| format!("A{w}={c}")).collect();
        Error::OutsideFamilies(format!("n={n}, counts {}", shown.join(" ")))
    })?;
    Ok(FamilyFit { params, alternatives: fits.collect() })
}
