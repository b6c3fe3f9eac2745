//! Sectors of the `mu_d` action `x_j -> zeta^(i q_j) x_j` on affine space.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{check_weights, WeightedPolynomial};

/// Fixed-locus data of `g = zeta^i` for `zeta = exp(2 pi i / d)`.
///
/// `i` runs over `1..=d`, with `i = d` the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sector {
    pub g_index: u32,
    pub order: u32,
    /// Variables fixed by `g`: those with `i * q_j = 0 mod d`.
    pub fixed_vars: Vec<usize>,
    /// Rank of the conormal bundle of the fixed locus.
    pub rk_w: usize,
    /// Character of `det W_g`: minus the total weight of the moved variables.
    pub character: i64,
}

impl Sector {
    pub fn is_identity(&self) -> bool {
        self.g_index == self.order
    }
}

pub fn sectors(weights: &[u32], d: u32) -> Result<Vec<Sector>> {
    check_weights(weights)?;
    if weights.is_empty() {
        return Err(Error::InvalidWeights {
            weights: vec![],
            reason: "at least one variable is required".into(),
        });
    }
    let g = weights.iter().fold(0u32, |acc, &q| acc.gcd(&q));
    if g != 1 {
        return Err(Error::InvalidWeights {
            weights: weights.to_vec(),
            reason: format!("weights must be coprime (gcd is {g})"),
        });
    }
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree must be at least 2, got {d}")));
    }
    Ok((1..=d)
        .map(|i| {
            let fixed_vars: Vec<usize> = (0..weights.len())
                .filter(|&j| (i as u64 * weights[j] as u64).is_multiple_of(d as u64))
                .collect();
            let character = -(0..weights.len())
                .filter(|j| !fixed_vars.contains(j))
                .map(|j| weights[j] as i64)
                .sum::<i64>();
            Sector {
                g_index: i,
                order: d,
                rk_w: weights.len() - fixed_vars.len(),
                fixed_vars,
                character,
            }
        })
        .collect())
}

/// A sector together with the restriction of the potential to its fixed locus.
#[derive(Clone, Debug, PartialEq)]
pub struct SectorData {
    pub sector: Sector,
    /// `omega` with moved variables set to zero, written in the fixed
    /// variables renumbered `x0, x1, ...` in increasing order.
    pub omega_g: WeightedPolynomial,
}

/// `omega` restricted to the fixed locus of `sector`.
pub fn restrict(omega: &WeightedPolynomial, sector: &Sector) -> WeightedPolynomial {
    omega.restrict_to(&sector.fixed_vars)
}

pub fn sector_data(omega: &WeightedPolynomial) -> Result<Vec<SectorData>> {
    let d = u32::try_from(omega.degree())
        .map_err(|_| Error::InvalidArgument("degree too large".into()))?;
    Ok(sectors(omega.weights(), d)?
        .into_iter()
        .map(|sector| SectorData {
            omega_g: restrict(omega, &sector),
            sector,
        })
        .collect())
}
