//! Inequalities constraining relatively minimal Lefschetz fibrations with
//! fiber genus `h >= 2` over a base of genus `g >= 1`.
//!
//! The chain runs: `K^2 >= 0` gives `b2+ >= 1 + s/5`; the Euler
//! characteristic and the signature estimate `sigma <= 2h(2g-2) + n - s`
//! bound the genus of the canonical surface from above through
//! adjunction; Kneser's inequality for its projection of degree `2h - 2`
//! to the base bounds it from below. The two meet exactly at
//! `s <= 6(3h-1)(g-1) + 5n`.

use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::fibration::{signature_upper_closed, FibrationCounts, FibrationData};

fn require_hypotheses(g: i64, h: i64) -> Result<()> {
    if h < 2 {
        return Err(Error::HypothesisViolation(format!("fiber genus h = {h}, need h >= 2")));
    }
    if g < 1 {
        return Err(Error::HypothesisViolation(format!("base genus g = {g}, need g >= 1")));
    }
    Ok(())
}

fn require_nonnegative(name: &str, v: i64) -> Result<()> {
    if v < 0 {
        return Err(Error::InvalidParameter(format!("{name} = {v} must be non-negative")));
    }
    Ok(())
}

/// Largest number of separating singular fibers: `6(3h-1)(g-1) + 5n`.
pub fn separating_bound(g: i64, h: i64, n: i64) -> Result<i64> {
    require_hypotheses(g, h)?;
    require_nonnegative("n", n)?;
    Ok(6 * (3 * h - 1) * (g - 1) + 5 * n)
}

/// Variant for monodromy in the Torelli group: `6(h-1)(g-1) + 5n`.
pub fn torelli_separating_bound(g: i64, h: i64, n: i64) -> Result<i64> {
    require_hypotheses(g, h)?;
    require_nonnegative("n", n)?;
    Ok(6 * (h - 1) * (g - 1) + 5 * n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BettiBounds {
    /// `b1 >= 2g`.
    pub b1_lower: i64,
    /// `b2- >= s + 1`.
    pub b2_minus_lower: i64,
    /// `b2+ >= 1 + s/5`.
    pub b2_plus_lower: Ratio<i64>,
    /// Set when `s = 0`: the lower bounds then only reflect the fiber class.
    pub vacuous: bool,
}

pub fn b2_bounds(s: i64, g: i64) -> BettiBounds {
    BettiBounds {
        b1_lower: 2 * g,
        b2_minus_lower: s + 1,
        b2_plus_lower: Ratio::from_integer(1) + Ratio::new(s, 5),
        vacuous: s == 0,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CanonicalChain {
    pub euler_characteristic: i64,
    pub signature_upper: i64,
    /// `2 chi + 3 sigma_upper`, an upper bound on `K^2`.
    pub k2_upper: i64,
    /// Upper bound on `g(Sigma) - 1`: `2(10h-4)(g-1) + 5n - s`.
    pub genus_sigma_upper: i64,
    /// `K . F = 2h - 2`.
    pub degree: i64,
    /// Kneser lower bound on `g(Sigma) - 1`: `2(h-1)(g-1)`.
    pub kneser_lower: i64,
}

impl CanonicalChain {
    pub fn is_consistent(&self) -> bool {
        self.kneser_lower <= self.genus_sigma_upper
    }
}

pub fn canonical_chain(g: i64, h: i64, s: i64, n: i64) -> Result<CanonicalChain> {
    require_hypotheses(g, h)?;
    require_nonnegative("s", s)?;
    require_nonnegative("n", n)?;
    let counts = FibrationCounts::new(g, h, s, n);
    let chi = counts.euler_characteristic();
    let sigma = signature_upper_closed(&counts)?;
    let k2_upper = 2 * chi + 3 * sigma;
    let genus_sigma_upper = 2 * (10 * h - 4) * (g - 1) + 5 * n - s;
    debug_assert_eq!(k2_upper, genus_sigma_upper);
    let degree = 2 * h - 2;
    Ok(CanonicalChain {
        euler_characteristic: chi,
        signature_upper: sigma,
        k2_upper,
        genus_sigma_upper,
        degree,
        kneser_lower: degree.abs() * (g - 1),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Consistent,
    NoSuchFibration,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Consistent => "Consistent",
            Verdict::NoSuchFibration => "NoSuchFibration",
        })
    }
}

/// One checked inequality `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub name: &'static str,
    pub relation: String,
    pub lhs: i64,
    pub rhs: i64,
    pub satisfied: bool,
}

impl BoundEntry {
    fn new(name: &'static str, lhs_name: &str, lhs: i64, rhs_name: &str, rhs: i64) -> Self {
        Self { name, relation: format!("{lhs_name} <= {rhs_name}"), lhs, rhs, satisfied: lhs <= rhs }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub counts: FibrationCounts,
    pub torelli: bool,
    pub betti: BettiBounds,
    pub chain: CanonicalChain,
    /// In derivation order: canonical-surface chain, main bound, Torelli bound.
    pub entries: Vec<BoundEntry>,
    pub verdict: Verdict,
}

impl BoundReport {
    pub fn failing(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| !e.satisfied)
    }
}

pub fn check(counts: &FibrationCounts, torelli: bool) -> Result<BoundReport> {
    let FibrationCounts { base_genus: g, fiber_genus: h, separating: s, nonseparating: n } = *counts;
    let chain = canonical_chain(g, h, s, n)?;
    let mut entries = vec![
        BoundEntry::new("kneser", "2(h-1)(g-1)", chain.kneser_lower, "g(Sigma)-1 upper", chain.genus_sigma_upper),
        BoundEntry::new("separating", "s", s, "6(3h-1)(g-1)+5n", separating_bound(g, h, n)?),
    ];
    if torelli {
        entries.push(BoundEntry::new(
            "torelli_separating",
            "s",
            s,
            "6(h-1)(g-1)+5n",
            torelli_separating_bound(g, h, n)?,
        ));
    }
    let verdict = if entries.iter().all(|e| e.satisfied) { Verdict::Consistent } else { Verdict::NoSuchFibration };
    Ok(BoundReport { counts: *counts, torelli, betti: b2_bounds(s, g), chain, entries, verdict })
}

pub fn check_data(data: &FibrationData, torelli: bool) -> Result<BoundReport> {
    check(&data.counts(), torelli)
}
