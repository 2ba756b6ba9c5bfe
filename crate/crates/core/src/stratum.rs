//! Stratification of the index set H_{p,q} = { n in Z_{>=0}^r : |n| = p+q }.
//!
//! For q >= (p+1)r every n in H has at least one coordinate exceeding p. The
//! set splits by how many coordinates are large, which subset of coordinates
//! stays small (<= p), and whether those small coordinates together overflow
//! p. Coefficient-ideal evaluation only ever depends on the small
//! coordinates, which is what makes the stratified evaluator fast.

use crate::error::Error;

/// Where a multi-index sits in the stratification, for a fixed bound p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stratum {
    /// Number of coordinates with n_i > p; at least 1 in the valid region.
    pub large_count: usize,
    /// Sorted positions of the coordinates with n_i <= p.
    pub small_coords: Vec<usize>,
    /// True iff the small coordinates sum to more than p.
    pub overflow: bool,
}

/// Classifies `index` relative to the bound `p`. Fails when no coordinate
/// exceeds p, which signals that (p, q) violates q >= (p+1)r.
pub fn classify(index: &[u64], p: u64) -> Result<Stratum, Error> {
    let small_coords: Vec<usize> = index
        .iter()
        .enumerate()
        .filter(|(_, &n)| n <= p)
        .map(|(i, _)| i)
        .collect();
    let large_count = index.len() - small_coords.len();
    if large_count == 0 {
        return Err(Error::NoLargeCoordinate { p });
    }
    let small_sum: u64 = small_coords.iter().map(|&i| index[i]).sum();
    Ok(Stratum {
        large_count,
        small_coords,
        overflow: small_sum > p,
    })
}

/// Predicate over strata; `None` fields match anything.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StratumFilter {
    pub large_count: Option<usize>,
    pub small_coords: Option<Vec<usize>>,
    pub overflow: Option<bool>,
}

impl StratumFilter {
    pub fn by_large_count(k: usize) -> Self {
        Self {
            large_count: Some(k),
            ..Self::default()
        }
    }

    pub fn cell(k: usize, small_coords: Vec<usize>, overflow: bool) -> Self {
        Self {
            large_count: Some(k),
            small_coords: Some(small_coords),
            overflow: Some(overflow),
        }
    }

    pub fn matches(&self, stratum: &Stratum) -> bool {
        self.large_count.is_none_or(|k| stratum.large_count == k)
            && self
                .small_coords
                .as_ref()
                .is_none_or(|a| stratum.small_coords == *a)
            && self.overflow.is_none_or(|o| stratum.overflow == o)
    }
}
