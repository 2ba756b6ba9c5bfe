//! Coefficient ideals of the graded pieces M^p S_q.
//!
//! For a family (I_1, ..., I_r), a degree p and a multi-index n with
//! |n| = p + q, the coefficient of t^n in M^p S_q is the ideal generated by
//! all products I^i with |i| = p and i <= n. Three routes compute it:
//!
//! * [`coeff_ideal_brute`] enumerates the defining index set directly and is
//!   the oracle the other two are tested against;
//! * [`coeff_ideal_closed`] uses the closed-form factorization valid on
//!   cells whose small coordinates sum to at most p;
//! * [`coeff_ideal_reduced`] enumerates only over the small coordinates and
//!   is valid on every cell with at least one large coordinate.

use crate::error::Error;
use crate::family::IdealFamily;
use crate::ideal::MonomialIdeal;
use crate::stratum::Stratum;
use crate::enumerate::{box_points, compositions};

/// Direct enumeration of sum over { i : |i| = p, 0 <= i <= n } of I^i.
pub fn coeff_ideal_brute(
    family: &IdealFamily,
    p: u64,
    index: &[u64],
) -> Result<MonomialIdeal, Error> {
    assert_eq!(index.len(), family.count(), "multi-index length disagrees");
    let total: u64 = index.iter().sum();
    if total < p {
        return Err(Error::EmptyIndexSet { total, p });
    }
    let mut acc: Option<MonomialIdeal> = None;
    for i in compositions(p, family.count()) {
        if i.iter().zip(index).all(|(a, b)| a <= b) {
            let term = family.power_product(&i);
            acc = Some(match acc {
                None => term,
                Some(sum) => sum.sum(&term),
            });
        }
    }
    Ok(acc.expect("|n| >= p guarantees an admissible index"))
}

fn large_sum(family: &IdealFamily, stratum: &Stratum) -> MonomialIdeal {
    let mut acc: Option<MonomialIdeal> = None;
    for i in 0..family.count() {
        if !stratum.small_coords.contains(&i) {
            acc = Some(match acc {
                None => family.ideal(i).clone(),
                Some(sum) => sum.sum(family.ideal(i)),
            });
        }
    }
    acc.expect("stratum has at least one large coordinate")
}

/// Closed form on a non-overflowing cell: with B the large coordinates,
/// A the small ones and m = sum of the small entries,
///
/// ```text
/// J(n) = (sum_B I_i)^(p - m) * prod_{j in A} (sum_B I_i + I_j)^(n_j).
/// ```
///
/// Only the small entries of `index` are read, so callers may pass any
/// representative of the fiber.
pub fn coeff_ideal_closed(
    family: &IdealFamily,
    p: u64,
    index: &[u64],
    stratum: &Stratum,
) -> Result<MonomialIdeal, Error> {
    if stratum.overflow {
        return Err(Error::OverflowCell);
    }
    let base = large_sum(family, stratum);
    let small_total: u64 = stratum.small_coords.iter().map(|&j| index[j]).sum();
    let mut acc = base.power(p - small_total);
    for &j in &stratum.small_coords {
        if index[j] > 0 {
            acc = acc.product(&base.sum(family.ideal(j)).power(index[j]));
        }
    }
    Ok(acc)
}

/// Reduced enumeration, valid on every cell (overflowing or not): the sum
/// over small-coordinate indices i_A with i_A <= n_A and |i_A| <= p of
/// (sum_B I_i)^(p - |i_A|) * prod_{j in A} I_j^{i_j}.
///
/// Like the closed form, this reads only the small entries of `index`.
pub fn coeff_ideal_reduced(
    family: &IdealFamily,
    p: u64,
    index: &[u64],
    stratum: &Stratum,
) -> MonomialIdeal {
    let base = large_sum(family, stratum);
    let bounds: Vec<u64> = stratum.small_coords.iter().map(|&j| index[j]).collect();
    let mut acc: Option<MonomialIdeal> = None;
    for small_index in box_points(&bounds) {
        let used: u64 = small_index.iter().sum();
        if used > p {
            continue;
        }
        let mut term = base.power(p - used);
        for (&j, &e) in stratum.small_coords.iter().zip(&small_index) {
            if e > 0 {
                term = term.product(&family.ideal(j).power(e));
            }
        }
        acc = Some(match acc {
            None => term,
            Some(sum) => sum.sum(&term),
        });
    }
    acc.expect("the zero small-index is always admissible")
}
