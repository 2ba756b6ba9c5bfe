//! Multiplicity extraction from eventually-polynomial integer functions.
//!
//! For a polynomial of total degree a + b, the iterated forward difference
//! of orders (a, b) equals a! b! times the coefficient of p^a q^b, and every
//! other monomial of degree at most a + b is annihilated. All extractors
//! therefore reduce to evaluating a mixed forward difference at a base point
//! and advancing the base until two consecutive bases agree. Agreement at
//! consecutive bases is a stabilization heuristic, not a polynomiality
//! proof; the bases are recorded so results can be audited, and the
//! downstream shape checks (monotone sequence, vanishing tail) catch
//! coincidental agreement.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::enumerate::{binomial, box_points, compositions};
use crate::error::Error;
use crate::family::IdealFamily;
use crate::ideal::MonomialIdeal;
use crate::lambda::{lambda, EvalPolicy, LambdaTable};

/// Iterated forward difference of `f` with the given per-variable orders,
/// evaluated at `base`:
///
/// ```text
/// sum over 0 <= t <= orders of (-1)^{|orders - t|} prod binom(o_j, t_j) f(base + t)
/// ```
pub fn forward_difference<F>(orders: &[u64], base: &[u64], mut f: F) -> Result<BigInt, Error>
where
    F: FnMut(&[u64]) -> Result<BigInt, Error>,
{
    assert_eq!(orders.len(), base.len(), "stencil shape disagrees");
    let mut acc = BigInt::zero();
    let mut point = vec![0u64; base.len()];
    for t in box_points(orders) {
        for (slot, (b, ti)) in point.iter_mut().zip(base.iter().zip(&t)) {
            *slot = b + ti;
        }
        let mut weight = BigInt::from(1);
        let mut dropped = 0u64;
        for (&o, &ti) in orders.iter().zip(&t) {
            weight *= binomial(o as i128, ti as i128);
            dropped += o - ti;
        }
        let value = f(&point)?;
        if dropped.is_multiple_of(2) {
            acc += weight * value;
        } else {
            acc -= weight * value;
        }
    }
    Ok(acc)
}

/// A value that two consecutive base points agreed on, with the evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stabilized {
    pub value: BigInt,
    /// The two consecutive bases that produced the value.
    pub bases: (u64, u64),
    /// Every (base, value) pair evaluated along the way.
    pub trail: Vec<(u64, BigInt)>,
}

/// Advances a base point until two consecutive evaluations agree, up to
/// `budget` advances past `start`. Exhausting the budget is an error that
/// carries the full trail.
pub fn stabilized_extract<F>(start: u64, budget: u64, mut eval: F) -> Result<Stabilized, Error>
where
    F: FnMut(u64) -> Result<BigInt, Error>,
{
    let mut trail = Vec::new();
    let mut prev = eval(start)?;
    trail.push((start, prev.clone()));
    for step in 1..=budget {
        let base = start + step;
        let cur = eval(base)?;
        trail.push((base, cur.clone()));
        if cur == prev {
            return Ok(Stabilized {
                value: cur,
                bases: (base - 1, base),
                trail,
            });
        }
        prev = cur;
    }
    Err(Error::BudgetExhausted {
        attempts: budget,
        trail: trail.iter().map(|(b, v)| (*b, v.to_string())).collect(),
    })
}

/// Knobs shared by the extractors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtractOptions {
    /// Maximum base-point advances before giving up.
    pub budget: u64,
    /// Evaluator selection for two-variable stencils.
    pub policy: EvalPolicy,
}

impl Default for ExtractOptions {
    fn default() -> Self {
        Self {
            budget: 8,
            policy: EvalPolicy::Auto,
        }
    }
}

/// Hilbert-Samuel multiplicity e(I): the stabilized d-th difference of
/// p -> colength(I^p), starting from base 1.
pub fn hs_multiplicity(ideal: &MonomialIdeal) -> Result<Stabilized, Error> {
    hs_multiplicity_with(ideal, ExtractOptions::default().budget)
}

pub fn hs_multiplicity_with(ideal: &MonomialIdeal, budget: u64) -> Result<Stabilized, Error> {
    let orders = [ideal.dim() as u64];
    let mut cache: BTreeMap<u64, BigInt> = BTreeMap::new();
    let mut length_at = |p: u64| -> Result<BigInt, Error> {
        if let Some(v) = cache.get(&p) {
            return Ok(v.clone());
        }
        let v = ideal.power(p).colength_box()?;
        cache.insert(p, v.clone());
        Ok(v)
    };
    stabilized_extract(1, budget, |base| {
        forward_difference(&orders, &[base], |pt| length_at(pt[0]))
    })
}

/// Buchsbaum-Rim multiplicity e(C): the stabilized (d + r - 1)-st difference
/// of the one-variable function.
pub fn br_multiplicity(family: &IdealFamily) -> Result<Stabilized, Error> {
    br_multiplicity_with(family, ExtractOptions::default().budget)
}

pub fn br_multiplicity_with(family: &IdealFamily, budget: u64) -> Result<Stabilized, Error> {
    let orders = [(family.dim() + family.count() - 1) as u64];
    let mut cache: BTreeMap<u64, BigInt> = BTreeMap::new();
    let mut lambda_at = |p: u64| -> Result<BigInt, Error> {
        if let Some(v) = cache.get(&p) {
            return Ok(v.clone());
        }
        let v = lambda(family, p)?;
        cache.insert(p, v.clone());
        Ok(v)
    };
    stabilized_extract(1, budget, |base| {
        forward_difference(&orders, &[base], |pt| lambda_at(pt[0]))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedEntry {
    /// The type (i_1, ..., i_r), summing to d.
    pub index: Vec<u64>,
    pub value: BigInt,
    pub bases: (u64, u64),
}

/// The mixed multiplicities of a family: one entry per multi-index of total
/// degree d, normalized so that the degree-d part of n -> colength(I^n) is
/// sum of e_i / (i_1! ... i_r!) n^i. Each entry is then exactly the order-i
/// mixed difference at a large base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MixedMultiplicityTable {
    pub entries: Vec<MixedEntry>,
}

impl MixedMultiplicityTable {
    pub fn total(&self) -> BigInt {
        self.entries.iter().map(|e| e.value.clone()).sum()
    }

    pub fn get(&self, index: &[u64]) -> Option<&BigInt> {
        self.entries
            .iter()
            .find(|e| e.index == index)
            .map(|e| &e.value)
    }
}

pub fn mixed_multiplicities(family: &IdealFamily) -> Result<MixedMultiplicityTable, Error> {
    mixed_multiplicities_with(family, ExtractOptions::default().budget)
}

pub fn mixed_multiplicities_with(
    family: &IdealFamily,
    budget: u64,
) -> Result<MixedMultiplicityTable, Error> {
    let d = family.dim() as u64;
    let r = family.count();
    let mut cache: BTreeMap<Vec<u64>, BigInt> = BTreeMap::new();
    let mut length_at = |n: &[u64]| -> Result<BigInt, Error> {
        if let Some(v) = cache.get(n) {
            return Ok(v.clone());
        }
        let v = family.power_product(n).colength_box()?;
        cache.insert(n.to_vec(), v.clone());
        Ok(v)
    };
    let mut entries = Vec::new();
    for index in compositions(d, r) {
        let stab = stabilized_extract(1, budget, |base| {
            forward_difference(&index, &vec![base; r], &mut length_at)
        })?;
        entries.push(MixedEntry {
            index,
            value: stab.value,
            bases: stab.bases,
        });
    }
    Ok(MixedMultiplicityTable { entries })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceEntry {
    pub j: usize,
    pub value: BigInt,
    /// The two consecutive p-bases that agreed (the q-base is derived from
    /// the p-base so the whole stencil stays inside the valid region).
    pub bases: (u64, u64),
}

/// The multiplicity sequence e^0, ..., e^{d+r-1} with its extraction
/// evidence. Construction enforces the shape every valid sequence has:
/// non-increasing, zero from position r on, positive at position r - 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    dim: usize,
    count: usize,
    entries: Vec<SequenceEntry>,
}

impl MultiplicityReport {
    pub fn from_entries(
        dim: usize,
        count: usize,
        entries: Vec<SequenceEntry>,
    ) -> Result<Self, Error> {
        let expected = dim + count;
        if entries.len() != expected {
            return Err(Error::SequenceShape {
                reason: format!("expected {expected} entries, got {}", entries.len()),
            });
        }
        for w in entries.windows(2) {
            if w[1].value > w[0].value {
                return Err(Error::SequenceShape {
                    reason: format!(
                        "not non-increasing: e^{} = {} < e^{} = {}",
                        w[0].j, w[0].value, w[1].j, w[1].value
                    ),
                });
            }
        }
        for e in &entries {
            if e.value.is_negative() {
                return Err(Error::SequenceShape {
                    reason: format!("e^{} = {} is negative", e.j, e.value),
                });
            }
            if e.j >= count && !e.value.is_zero() {
                return Err(Error::SequenceShape {
                    reason: format!("e^{} = {} should vanish for j >= r = {count}", e.j, e.value),
                });
            }
        }
        if entries[count - 1].value.is_zero() {
            return Err(Error::SequenceShape {
                reason: format!("e^{} vanishes but must be positive", count - 1),
            });
        }
        Ok(Self {
            dim,
            count,
            entries,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn entries(&self) -> &[SequenceEntry] {
        &self.entries
    }

    pub fn value(&self, j: usize) -> &BigInt {
        &self.entries[j].value
    }

    pub fn values(&self) -> Vec<BigInt> {
        self.entries.iter().map(|e| e.value.clone()).collect()
    }
}

/// The full multiplicity sequence from the two-variable function: entry j is
/// the stabilized mixed difference of orders (d+r-1-j, j).
pub fn br_multiplicity_sequence(family: &IdealFamily) -> Result<MultiplicityReport, Error> {
    br_multiplicity_sequence_with(family, &ExtractOptions::default())
}

pub fn br_multiplicity_sequence_with(
    family: &IdealFamily,
    opts: &ExtractOptions,
) -> Result<MultiplicityReport, Error> {
    let d = family.dim();
    let r = family.count();
    let total_degree = (d + r - 1) as u64;
    let mut table = LambdaTable::new(family, opts.policy);
    let mut entries = Vec::new();
    for j in 0..=total_degree {
        let orders = [total_degree - j, j];
        let stab = stabilized_extract(1, opts.budget, |p_base| {
            // Choose the q-base so every stencil point (p_base + s, q_base + t)
            // with s <= orders[0] satisfies q >= (p+1)r.
            let q_base = r as u64 * (p_base + orders[0] + 1) + r as u64;
            forward_difference(&orders, &[p_base, q_base], |pt| table.value(pt[0], pt[1]))
        })?;
        entries.push(SequenceEntry {
            j: j as usize,
            value: stab.value,
            bases: stab.bases,
        });
    }
    MultiplicityReport::from_entries(d, r, entries)
}
