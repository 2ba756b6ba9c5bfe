//! The Buchsbaum-Rim function of a family and its two-variable refinement.
//!
//! `lambda(F, p)` is the length of the degree-p piece of the cokernel of the
//! symmetric-algebra map, here a sum of colengths of power products over all
//! multi-indices with |n| = p. `lambda_pq_*` evaluate the two-variable
//! function: the sum of colengths of coefficient ideals over |n| = p + q.
//!
//! The brute evaluator enumerates every multi-index. The stratified
//! evaluator, valid for q >= (p+1)r, groups multi-indices into fibers over
//! their small coordinates: the coefficient ideal is constant on a fiber and
//! the fiber size is an explicit binomial, so the work drops from the size
//! of H_{p,q} to roughly (p+1)^(r-1) colength computations. Both are exact;
//! their agreement is one of the central correctness checks of this crate.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::coeff_ideal::{coeff_ideal_brute, coeff_ideal_closed, coeff_ideal_reduced};
use crate::enumerate::{binomial, box_points, combinations, compositions};
use crate::error::Error;
use crate::family::IdealFamily;
use crate::stratum::{classify, Stratum, StratumFilter};

/// True iff (p, q) satisfies the region condition q >= (p+1)r.
pub fn in_region(p: u64, q: u64, r: usize) -> bool {
    q as u128 >= (p as u128 + 1) * r as u128
}

fn region_guard(p: u64, q: u64, r: usize) -> Result<(), Error> {
    if in_region(p, q, r) {
        Ok(())
    } else {
        Err(Error::RegionViolated {
            p,
            q,
            bound: (p as u128 + 1) * r as u128,
        })
    }
}

/// The one-variable Buchsbaum-Rim function: sum of colengths of I^n over
/// |n| = p.
pub fn lambda(family: &IdealFamily, p: u64) -> Result<BigInt, Error> {
    let terms: Vec<Vec<u64>> = compositions(p, family.count()).collect();
    let partials = terms
        .par_iter()
        .map(|n| family.power_product(n).colength_box())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(partials.into_iter().sum())
}

/// Two-variable function by full enumeration of H_{p,q}. Exact for every
/// (p, q); the reference the stratified evaluator is measured against.
pub fn lambda_pq_brute(family: &IdealFamily, p: u64, q: u64) -> Result<BigInt, Error> {
    let r = family.count();
    let total = p + q;
    let partials = (0..=total)
        .into_par_iter()
        .map(|first| -> Result<BigInt, Error> {
            let mut acc = BigInt::zero();
            for rest in compositions(total - first, r - 1) {
                let mut index = Vec::with_capacity(r);
                index.push(first);
                index.extend(rest);
                acc += coeff_ideal_brute(family, p, &index)?.colength_box()?;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(partials.into_iter().sum())
}

/// Size of the fiber of large-coordinate completions: the number of
/// (n_1, ..., n_k) with every n_i > p and sum p + q - m. Exact for every
/// m >= 0 under the zero-binomial convention.
fn completion_count(p: u64, q: u64, k: usize, m: u64) -> BigInt {
    binomial(
        q as i128 - (k as i128 - 1) * p as i128 - 1 - m as i128,
        k as i128 - 1,
    )
}

/// Fiber count of the stratification, the quantity behind the stratified
/// evaluator: #{ (n_1, ..., n_k) : all n_i > p, sum = p + q - m }.
///
/// Validates the documented parameter range (k >= 1, m <= p and the region
/// condition with k in place of r, which the ambient condition implies).
pub fn count_fiber(p: u64, q: u64, k: usize, m: u64) -> Result<BigInt, Error> {
    if k < 1 {
        return Err(Error::FiberParams {
            reason: "k must be at least 1".into(),
        });
    }
    if m > p {
        return Err(Error::FiberParams {
            reason: format!("m = {m} exceeds p = {p}"),
        });
    }
    region_guard(p, q, k)?;
    Ok(completion_count(p, q, k, m))
}

/// Stratified evaluation of the two-variable function, requiring
/// q >= (p+1)r. Walks cells (k, A) and small-coordinate assignments; each
/// fiber contributes its completion count times one colength, computed by
/// the closed form off the overflow region and the reduced enumeration on
/// it.
pub fn lambda_pq_fast(family: &IdealFamily, p: u64, q: u64) -> Result<BigInt, Error> {
    let r = family.count();
    region_guard(p, q, r)?;
    let mut fibers: Vec<(usize, Vec<usize>, Vec<u64>)> = Vec::new();
    for k in 1..=r {
        for small in combinations(r, r - k) {
            for assign in box_points(&vec![p; r - k]) {
                fibers.push((k, small.clone(), assign));
            }
        }
    }
    let partials = fibers
        .par_iter()
        .map(|(k, small, assign)| -> Result<BigInt, Error> {
            let m: u64 = assign.iter().sum();
            let count = completion_count(p, q, *k, m);
            if count.is_zero() {
                return Ok(BigInt::zero());
            }
            let stratum = Stratum {
                large_count: *k,
                small_coords: small.clone(),
                overflow: m > p,
            };
            // Coefficient ideals only read the small coordinates, so any
            // representative with large entries > p stands for the fiber.
            let mut rep = vec![p + 1; r];
            for (&coord, &value) in small.iter().zip(assign) {
                rep[coord] = value;
            }
            let ideal = if stratum.overflow {
                coeff_ideal_reduced(family, p, &rep, &stratum)
            } else {
                coeff_ideal_closed(family, p, &rep, &stratum)
                    .expect("cell does not overflow by construction")
            };
            Ok(count * ideal.colength_box()?)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(partials.into_iter().sum())
}

/// Partial two-variable sum restricted to multi-indices whose stratum
/// matches `filter`, by full enumeration. Requires the region condition so
/// classification is total.
pub fn lambda_pq_region(
    family: &IdealFamily,
    p: u64,
    q: u64,
    filter: &StratumFilter,
) -> Result<BigInt, Error> {
    let r = family.count();
    region_guard(p, q, r)?;
    let total = p + q;
    let partials = (0..=total)
        .into_par_iter()
        .map(|first| -> Result<BigInt, Error> {
            let mut acc = BigInt::zero();
            for rest in compositions(total - first, r - 1) {
                let mut index = Vec::with_capacity(r);
                index.push(first);
                index.extend(rest);
                let stratum = classify(&index, p)?;
                if filter.matches(&stratum) {
                    acc += coeff_ideal_brute(family, p, &index)?.colength_box()?;
                }
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(partials.into_iter().sum())
}

/// Which algorithm produced a cached value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalMethod {
    Brute,
    Stratified,
}

/// Evaluator selection for cached lookups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalPolicy {
    /// Stratified inside the valid region, brute force below it.
    Auto,
    /// Brute force everywhere (cross-validation runs).
    BruteForce,
}

/// Memo table of two-variable values for one family, tagged with the method
/// that produced each entry. Recomputing an entry with the other method must
/// reproduce the stored value; `crosscheck` asserts exactly that.
pub struct LambdaTable<'a> {
    family: &'a IdealFamily,
    policy: EvalPolicy,
    entries: BTreeMap<(u64, u64), (BigInt, EvalMethod)>,
}

impl<'a> LambdaTable<'a> {
    pub fn new(family: &'a IdealFamily, policy: EvalPolicy) -> Self {
        Self {
            family,
            policy,
            entries: BTreeMap::new(),
        }
    }

    pub fn family(&self) -> &IdealFamily {
        self.family
    }

    pub fn value(&mut self, p: u64, q: u64) -> Result<BigInt, Error> {
        if let Some((v, _)) = self.entries.get(&(p, q)) {
            return Ok(v.clone());
        }
        let stratified = self.policy == EvalPolicy::Auto && in_region(p, q, self.family.count());
        let (v, method) = if stratified {
            (lambda_pq_fast(self.family, p, q)?, EvalMethod::Stratified)
        } else {
            (lambda_pq_brute(self.family, p, q)?, EvalMethod::Brute)
        };
        self.entries.insert((p, q), (v.clone(), method));
        Ok(v)
    }

    /// Recomputes (p, q) with the method the table did not use and asserts
    /// agreement. Only meaningful inside the valid region.
    pub fn crosscheck(&mut self, p: u64, q: u64) -> Result<(), Error> {
        let cached = self.value(p, q)?;
        let (_, method) = self.entries.get(&(p, q)).expect("just inserted");
        let other = match method {
            EvalMethod::Brute => lambda_pq_fast(self.family, p, q)?,
            EvalMethod::Stratified => lambda_pq_brute(self.family, p, q)?,
        };
        assert_eq!(
            cached, other,
            "evaluator mismatch at (p, q) = ({p}, {q}) for {}",
            self.family
        );
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(u64, u64), &(BigInt, EvalMethod))> {
        self.entries.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::monomial::Monomial;

    fn ideal(dim: usize, gens: &[&[u64]]) -> MonomialIdeal {
        MonomialIdeal::new(dim, gens.iter().map(|g| Monomial::new(g.to_vec())).collect())
            .unwrap()
    }

    fn family(ideals: Vec<MonomialIdeal>) -> IdealFamily {
        IdealFamily::new(ideals).unwrap()
    }

    fn max_ideal_2d() -> MonomialIdeal {
        ideal(2, &[&[1, 0], &[0, 1]])
    }

    #[test]
    fn lambda_values() {
        // d=2, (m, m), p=2: three indices, each colength 3.
        let f = family(vec![max_ideal_2d(), max_ideal_2d()]);
        assert_eq!(lambda(&f, 2).unwrap(), BigInt::from(9));
        assert_eq!(lambda(&f, 0).unwrap(), BigInt::zero());

        // d=1, ((x), (x)): lambda(p) = p(p+1).
        let g = family(vec![ideal(1, &[&[1]]), ideal(1, &[&[1]])]);
        for p in 0..6u64 {
            assert_eq!(lambda(&g, p).unwrap(), BigInt::from(p * (p + 1)));
        }
    }

    #[test]
    fn brute_values() {
        // r=1: independent of q, equal to the colength of I^p.
        let f = family(vec![ideal(2, &[&[2, 0], &[0, 1]])]);
        for q in 0..4u64 {
            assert_eq!(lambda_pq_brute(&f, 2, q).unwrap(), BigInt::from(6));
        }

        // d=1, ((x), (x)): (p+q+1) p everywhere.
        let g = family(vec![ideal(1, &[&[1]]), ideal(1, &[&[1]])]);
        assert_eq!(lambda_pq_brute(&g, 1, 4).unwrap(), BigInt::from(6));
        for p in 0..4u64 {
            for q in 0..6u64 {
                assert_eq!(
                    lambda_pq_brute(&g, p, q).unwrap(),
                    BigInt::from((p + q + 1) * p),
                    "p={p} q={q}"
                );
            }
        }

        // frozen value: the cross pair at (1, 4).
        let h = family(vec![
            ideal(2, &[&[2, 0], &[0, 1]]),
            ideal(2, &[&[1, 0], &[0, 2]]),
        ]);
        assert_eq!(lambda_pq_brute(&h, 1, 4).unwrap(), BigInt::from(8));
    }

    #[test]
    fn q_zero_recovers_lambda() {
        let f = family(vec![
            ideal(2, &[&[2, 0], &[0, 1]]),
            ideal(2, &[&[1, 0], &[0, 2]]),
        ]);
        for p in 0..5u64 {
            assert_eq!(
                lambda_pq_brute(&f, p, 0).unwrap(),
                lambda(&f, p).unwrap(),
                "p={p}"
            );
        }
    }

    #[test]
    fn fast_agrees_with_brute() {
        let families = [
            family(vec![ideal(2, &[&[2, 0], &[0, 1]])]),
            family(vec![ideal(1, &[&[1]]), ideal(1, &[&[1]])]),
            family(vec![
                ideal(2, &[&[2, 0], &[0, 1]]),
                ideal(2, &[&[1, 0], &[0, 2]]),
            ]),
            family(vec![max_ideal_2d(), max_ideal_2d(), max_ideal_2d()]),
        ];
        for f in &families {
            let r = f.count();
            for p in 0..=2u64 {
                let q0 = (p + 1) * r as u64;
                for q in q0..q0 + 4 {
                    assert_eq!(
                        lambda_pq_fast(f, p, q).unwrap(),
                        lambda_pq_brute(f, p, q).unwrap(),
                        "family {f}, p={p} q={q}"
                    );
                }
            }
        }
    }

    #[test]
    fn fast_needs_the_region() {
        let f = family(vec![ideal(1, &[&[1]]), ideal(1, &[&[1]])]);
        assert!(matches!(
            lambda_pq_fast(&f, 2, 5),
            Err(Error::RegionViolated { bound: 6, .. })
        ));
    }

    #[test]
    fn region_sums_partition() {
        let f = family(vec![
            ideal(2, &[&[2, 0], &[0, 1]]),
            ideal(2, &[&[1, 0], &[0, 2]]),
        ]);
        let (p, q) = (1u64, 5u64);
        let total = lambda_pq_brute(&f, p, q).unwrap();
        let by_k: BigInt = (1..=2usize)
            .map(|k| lambda_pq_region(&f, p, q, &StratumFilter::by_large_count(k)).unwrap())
            .sum();
        assert_eq!(total, by_k);

        // top stratum equals the closed form
        let top = lambda_pq_region(&f, p, q, &StratumFilter::by_large_count(2)).unwrap();
        let expect = binomial(q as i128 - p as i128 - 1, 1)
            * f.sum_all().power(p).colength_box().unwrap();
        assert_eq!(top, expect);
    }

    #[test]
    fn cells_partition_within_a_stratum() {
        let m = ideal(2, &[&[1, 0], &[0, 1]]);
        let f = family(vec![ideal(2, &[&[2, 0], &[0, 1]]), m.clone(), m]);
        let (p, q) = (1u64, 7u64);
        for k in 1..=3usize {
            let whole = lambda_pq_region(&f, p, q, &StratumFilter::by_large_count(k)).unwrap();
            let mut by_cell = BigInt::zero();
            for small in combinations(3, 3 - k) {
                for overflow in [false, true] {
                    by_cell += lambda_pq_region(
                        &f,
                        p,
                        q,
                        &StratumFilter::cell(k, small.clone(), overflow),
                    )
                    .unwrap();
                }
            }
            assert_eq!(whole, by_cell, "k={k}");
        }
    }

    #[test]
    fn count_fiber_values() {
        assert_eq!(count_fiber(1, 4, 2, 0).unwrap(), BigInt::from(2)); // {(2,3),(3,2)}
        assert_eq!(count_fiber(1, 4, 2, 1).unwrap(), BigInt::from(1)); // {(2,2)}
        assert_eq!(count_fiber(2, 9, 1, 1).unwrap(), BigInt::from(1));
        assert!(matches!(
            count_fiber(1, 4, 0, 0),
            Err(Error::FiberParams { .. })
        ));
        assert!(matches!(
            count_fiber(1, 4, 2, 2),
            Err(Error::FiberParams { .. })
        ));
        assert!(matches!(
            count_fiber(2, 3, 2, 0),
            Err(Error::RegionViolated { .. })
        ));
    }

    #[test]
    fn count_fiber_matches_enumeration() {
        for k in 1..=3usize {
            for p in 0..=2u64 {
                for q in (p + 1) * k as u64..=12 {
                    for m in 0..=p {
                        let direct = compositions(p + q - m, k)
                            .filter(|n| n.iter().all(|&v| v > p))
                            .count();
                        assert_eq!(
                            count_fiber(p, q, k, m).unwrap(),
                            BigInt::from(direct),
                            "k={k} p={p} q={q} m={m}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn table_caches_and_crosschecks() {
        let f = family(vec![
            ideal(2, &[&[2, 0], &[0, 1]]),
            ideal(2, &[&[1, 0], &[0, 2]]),
        ]);
        let mut table = LambdaTable::new(&f, EvalPolicy::Auto);
        let v1 = table.value(1, 4).unwrap();
        assert_eq!(v1, BigInt::from(8));
        let v2 = table.value(1, 4).unwrap();
        assert_eq!(v1, v2);
        assert_eq!(table.entries().count(), 1);
        table.crosscheck(1, 4).unwrap();
        // below the region Auto falls back to brute force
        table.value(1, 1).unwrap();
        assert_eq!(
            table.entries().find(|(k, _)| **k == (1, 1)).unwrap().1 .1,
            EvalMethod::Brute
        );
    }
}
