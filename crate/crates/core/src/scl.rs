//! Lower bounds on commutator length and stable commutator length of
//! separating Dehn twists.
//!
//! A product of `s` separating twists in the mapping class group of a
//! genus-`h` surface has scl at least `s / (6(3h-1))`. Any positive value
//! certifies, via Bavard duality, that `H^2_b -> H^2` fails to be injective
//! for the group in question; this module only reports the numbers.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SclFlavor {
    /// Full mapping class group, element a product of `s` separating twists.
    Full,
    /// Hyperelliptic mapping class group, element `t_a^ord` with `ord` the
    /// order of its abelianization.
    Hyperelliptic,
    /// Torelli group, element `t_a^2`, bound inherited from the full group.
    Torelli,
    /// Torelli group, element `t_a^2`, bound from the Torelli-specific
    /// separating-fiber inequality.
    TorelliRefined,
}

impl SclFlavor {
    pub fn name(&self) -> &'static str {
        match self {
            SclFlavor::Full => "full",
            SclFlavor::Hyperelliptic => "hyperelliptic",
            SclFlavor::Torelli => "torelli",
            SclFlavor::TorelliRefined => "torelli-refined",
        }
    }
}

impl fmt::Display for SclFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SclFlavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "full" => Ok(SclFlavor::Full),
            "hyperelliptic" => Ok(SclFlavor::Hyperelliptic),
            "torelli" => Ok(SclFlavor::Torelli),
            "torelli-refined" | "torellirefined" => Ok(SclFlavor::TorelliRefined),
            other => Err(Error::InvalidParameter(format!("unknown scl flavor `{other}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SclQuery {
    pub genus: i64,
    pub flavor: SclFlavor,
    /// Number of separating twist factors; only meaningful for [`SclFlavor::Full`].
    pub factors: Option<i64>,
    /// Side genus of the separating curve. Recorded, never used.
    pub side_genus: Option<i64>,
    /// Marked points and boundary components of the surface. Recorded
    /// only: the bounds are those of the closed surface.
    pub marked_points: u32,
    pub boundary_components: u32,
}

impl SclQuery {
    pub fn new(genus: i64, flavor: SclFlavor) -> Self {
        Self { genus, flavor, factors: None, side_genus: None, marked_points: 0, boundary_components: 0 }
    }

    pub fn full(genus: i64, factors: i64) -> Self {
        Self { factors: Some(factors), ..Self::new(genus, SclFlavor::Full) }
    }

    /// Exponent of `t_a` in the element the bound is about (for `Full`,
    /// the number of separating factors).
    pub fn twist_power(&self) -> Result<i64> {
        require_genus(self.genus)?;
        match self.flavor {
            SclFlavor::Full => {
                let s = self.factors.unwrap_or(1);
                if s < 1 {
                    return Err(Error::InvalidParameter(format!("factor count {s} must be at least 1")));
                }
                Ok(s)
            }
            SclFlavor::Hyperelliptic => abelianization_order_hyperelliptic(self.genus),
            SclFlavor::Torelli | SclFlavor::TorelliRefined => {
                require_torelli_genus(self.genus)?;
                Ok(2)
            }
        }
    }
}

fn require_genus(h: i64) -> Result<()> {
    if h < 2 {
        return Err(Error::HypothesisViolation(format!("genus h = {h}, need h >= 2")));
    }
    Ok(())
}

fn require_torelli_genus(h: i64) -> Result<()> {
    if h < 3 {
        return Err(Error::HypothesisViolation(format!(
            "Torelli commutator-subgroup description needs h >= 3, got h = {h}"
        )));
    }
    Ok(())
}

/// `6(3h - 1)`: the number of separating fibers one extra genus of base buys.
fn full_denominator(h: i64) -> i64 {
    6 * (3 * h - 1)
}

/// Least `N` with `N >= 1 + k / (6(3h-1))`: no fewer commutators can
/// express `t_a^k`.
pub fn commutator_count_lower(h: i64, k: i64) -> Result<i64> {
    require_genus(h)?;
    if k < 1 {
        return Err(Error::HypothesisViolation(format!("power k = {k}, need k >= 1")));
    }
    Ok((Ratio::from_integer(1) + Ratio::new(k, full_denominator(h))).ceil().to_integer())
}

/// Order of the (finite cyclic) abelianization of the hyperelliptic
/// mapping class group: `4(2h+1)` for odd `h`, `2(2h+1)` for even `h`.
pub fn abelianization_order_hyperelliptic(h: i64) -> Result<i64> {
    require_genus(h)?;
    Ok(if h % 2 == 1 { 4 * (2 * h + 1) } else { 2 * (2 * h + 1) })
}

pub fn scl_lower(query: &SclQuery) -> Result<Ratio<i64>> {
    let h = query.genus;
    let power = query.twist_power()?;
    Ok(match query.flavor {
        SclFlavor::Full | SclFlavor::Hyperelliptic | SclFlavor::Torelli => Ratio::new(power, full_denominator(h)),
        SclFlavor::TorelliRefined => Ratio::new(power, 6 * (h - 1)),
    })
}
