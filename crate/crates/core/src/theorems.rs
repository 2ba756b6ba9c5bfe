//! Machine verification of the identities and bounds satisfied by
//! Buchsbaum-Rim multiplicities of monomial-ideal families, as exact integer
//! statements over a built-in corpus.
//!
//! Every check produces a [`VerificationReport`] with the compared values as
//! witnesses. Equalities must hold exactly; the two inequality checks
//! (cell-sum bound, overflow-cell bound) are finite-sample consequences of
//! asymptotic bounds and are verified at every sampled point.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::coeff_ideal::{coeff_ideal_brute, coeff_ideal_closed, coeff_ideal_reduced};
use crate::enumerate::{binomial, box_points, combinations, compositions};
use crate::error::Error;
use crate::family::IdealFamily;
use crate::ideal::MonomialIdeal;
use crate::lambda::{
    count_fiber, in_region, lambda, lambda_pq_brute, lambda_pq_fast, lambda_pq_region, EvalPolicy,
};
use crate::monomial::Monomial;
use crate::multiplicity::{
    br_multiplicity_sequence_with, br_multiplicity_with, hs_multiplicity_with,
    mixed_multiplicities_with, ExtractOptions,
};
use crate::stratum::{classify, Stratum, StratumFilter};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The check's hypothesis does not apply to this family.
    Inapplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "FAIL"),
            Verdict::Inapplicable => write!(f, "inapplicable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub check: &'static str,
    pub subject: String,
    pub verdict: Verdict,
    /// Witness lines: compared values, parameter ranges, sample counts.
    pub details: Vec<String>,
}

impl VerificationReport {
    fn new(check: &'static str, subject: impl Into<String>) -> Self {
        Self {
            check,
            subject: subject.into(),
            verdict: Verdict::Pass,
            details: Vec::new(),
        }
    }

    fn note(&mut self, line: impl Into<String>) {
        self.details.push(line.into());
    }

    fn fail(&mut self, line: impl Into<String>) {
        self.verdict = Verdict::Fail;
        self.details.push(line.into());
    }

    fn inapplicable(mut self, line: impl Into<String>) -> Self {
        self.verdict = Verdict::Inapplicable;
        self.details.push(line.into());
        self
    }
}

/// All check identifiers, in the order `run_corpus` executes them.
pub const CHECK_IDS: &[&str] = &[
    "fiber-count",
    "overflow-bound",
    "structural",
    "oracle-equivalence",
    "closed-form",
    "reduced-form",
    "cell-sum",
    "top-stratum",
    "power-containment",
    "last-multiplicity",
    "multiplicity-sum",
    "nested-chain",
];

#[derive(Debug, Clone)]
pub struct CheckConfig {
    /// Largest p exercised by the (p, q) samplers.
    pub p_max: u64,
    /// Largest q exercised by the full-grid checks.
    pub q_max: u64,
    /// Minimum number of multi-indices sampled per family by the
    /// coefficient-ideal identity checks.
    pub min_samples: usize,
    /// Stabilization budget for every multiplicity extraction.
    pub budget: u64,
    pub policy: EvalPolicy,
    /// Ranges for the fiber-count check.
    pub fiber_k_max: usize,
    pub fiber_p_max: u64,
    pub fiber_q_max: u64,
    /// Empty means all of [`CHECK_IDS`].
    pub checks: Vec<String>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            p_max: 3,
            q_max: 18,
            min_samples: 200,
            budget: 8,
            policy: EvalPolicy::Auto,
            fiber_k_max: 3,
            fiber_p_max: 3,
            fiber_q_max: 20,
            checks: Vec::new(),
        }
    }
}

impl CheckConfig {
    fn options(&self) -> ExtractOptions {
        ExtractOptions {
            budget: self.budget,
            policy: self.policy,
        }
    }

    fn wants(&self, id: &str) -> bool {
        self.checks.is_empty() || self.checks.iter().any(|c| c == id)
    }

    /// Deterministic (p, q) samples inside the valid region of a family
    /// with r ideals.
    fn sample_pairs(&self, r: usize) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for p in 0..=self.p_max {
            let base = (p + 1) * r as u64;
            let mut qs = vec![base, base + 1, base + 2, base + 5];
            if self.q_max > base {
                qs.push(self.q_max);
            }
            qs.sort_unstable();
            qs.dedup();
            for q in qs {
                out.push((p, q));
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct NamedFamily {
    pub name: String,
    pub family: IdealFamily,
}

fn ideal(dim: usize, gens: &[&[u64]]) -> MonomialIdeal {
    MonomialIdeal::new(dim, gens.iter().map(|g| Monomial::new(g.to_vec())).collect())
        .expect("corpus generators are well-formed")
}

fn named(name: &str, ideals: Vec<MonomialIdeal>) -> NamedFamily {
    NamedFamily {
        name: name.to_string(),
        family: IdealFamily::new(ideals).expect("corpus families are valid"),
    }
}

/// The default corpus: thirteen families spanning d in 1..=3 and r in 1..=3,
/// with powers of the maximal ideal, staircase ideals, non-nested pairs and
/// nested chains.
pub fn builtin_corpus() -> Vec<NamedFamily> {
    let m2 = ideal(2, &[&[1, 0], &[0, 1]]);
    let m3 = ideal(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let cross_a = ideal(2, &[&[2, 0], &[0, 1]]);
    let cross_b = ideal(2, &[&[1, 0], &[0, 2]]);
    vec![
        named("d1-single", vec![ideal(1, &[&[3]])]),
        named("d1-pair-equal", vec![ideal(1, &[&[1]]), ideal(1, &[&[1]])]),
        named("d1-pair-nested", vec![ideal(1, &[&[2]]), ideal(1, &[&[1]])]),
        named(
            "d1-triple-nested",
            vec![ideal(1, &[&[3]]), ideal(1, &[&[2]]), ideal(1, &[&[1]])],
        ),
        named("d2-staircase", vec![ideal(2, &[&[2, 0], &[1, 1], &[0, 3]])]),
        named("d2-max-pair", vec![m2.clone(), m2.clone()]),
        named("d2-max-square", vec![m2.clone(), m2.power(2)]),
        named("d2-cross-pair", vec![cross_a.clone(), cross_b.clone()]),
        named("d2-nested-pair", vec![m2.power(2), m2.clone()]),
        named("d2-triple", vec![cross_a, cross_b, m2.clone()]),
        named("d2-max-triple", vec![m2.clone(), m2.clone(), m2]),
        // the ideal sum here is (x^2, y^2), so the last positive
        // multiplicity is 4 rather than 1
        named(
            "d2-staircase-triple",
            vec![
                ideal(2, &[&[4, 0], &[2, 1], &[0, 3]]),
                ideal(2, &[&[3, 0], &[1, 2], &[0, 4]]),
                ideal(2, &[&[2, 0], &[0, 2]]),
            ],
        ),
        named(
            "d3-nested-pair",
            vec![ideal(3, &[&[2, 0, 0], &[0, 1, 0], &[0, 0, 1]]), m3],
        ),
    ]
}

/// e^{r-1} extracted from the two-variable function equals the
/// Hilbert-Samuel multiplicity of I_1 + ... + I_r.
pub fn check_last_multiplicity(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("last-multiplicity", name);
    let r = family.count();
    let seq = br_multiplicity_sequence_with(family, &cfg.options())?;
    let sum_ideal = family.sum_all();
    let hs = hs_multiplicity_with(&sum_ideal, cfg.budget)?;
    let left = seq.value(r - 1);
    report.note(format!(
        "e^{} = {} (p-bases {:?})",
        r - 1,
        left,
        seq.entries()[r - 1].bases
    ));
    report.note(format!("e({sum_ideal}) = {} (bases {:?})", hs.value, hs.bases));
    if *left != hs.value {
        report.fail(format!("mismatch: {left} != {}", hs.value));
    }
    Ok(report)
}

/// The Buchsbaum-Rim multiplicity equals the sum of all mixed
/// multiplicities of total degree d.
pub fn check_multiplicity_sum(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("multiplicity-sum", name);
    let e = br_multiplicity_with(family, cfg.budget)?;
    let mixed = mixed_multiplicities_with(family, cfg.budget)?;
    for entry in &mixed.entries {
        report.note(format!("e_{:?} = {}", entry.index, entry.value));
    }
    let total = mixed.total();
    report.note(format!("sum = {total}, e(C) = {}", e.value));
    if total != e.value {
        report.fail(format!("mismatch: {} != {total}", e.value));
    }
    Ok(report)
}

/// On a nested chain I_1 <= ... <= I_r, the j-th multiplicity equals the
/// Buchsbaum-Rim multiplicity of the tail family (I_{j+1}, ..., I_r).
pub fn check_nested_chain(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("nested-chain", name);
    let r = family.count();
    if r < 2 {
        return Ok(report.inapplicable("needs at least two ideals"));
    }
    if !family.is_nested() {
        return Ok(report.inapplicable("family is not a nested chain"));
    }
    if family
        .ideals()
        .windows(2)
        .any(|w| w[0] == w[1])
    {
        // Inclusions are treated as non-strict; flag chains where some are
        // equalities so readers can see the boundary case exercised.
        report.note("chain contains equal adjacent ideals (non-strict inclusions)".to_string());
    }
    let seq = br_multiplicity_sequence_with(family, &cfg.options())?;
    for j in 1..r {
        let tail = family.tail(j)?;
        let tail_mult = br_multiplicity_with(&tail, cfg.budget)?;
        report.note(format!(
            "e^{j} = {} vs e(tail {}) = {}",
            seq.value(j),
            tail,
            tail_mult.value
        ));
        if *seq.value(j) != tail_mult.value {
            report.fail(format!("mismatch at j = {j}"));
        }
    }
    Ok(report)
}

/// Deterministic sample of multi-indices: whole slices H_{p,q} for growing
/// q until at least `min_samples` points have been visited.
fn sampled_indices(r: usize, cfg: &CheckConfig) -> Vec<(u64, u64, Vec<u64>)> {
    let mut out = Vec::new();
    for extra in 0..64u64 {
        for p in 0..=cfg.p_max {
            let q = (p + 1) * r as u64 + extra;
            for n in compositions(p + q, r) {
                out.push((p, q, n));
            }
        }
        if out.len() >= cfg.min_samples {
            break;
        }
    }
    out
}

/// Closed-form and reduced coefficient ideals agree with brute force on
/// sampled multi-indices. Two reports: one per identity.
pub fn check_coeff_ideal_identities(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<Vec<VerificationReport>, Error> {
    let mut closed_report = VerificationReport::new("closed-form", name);
    let mut reduced_report = VerificationReport::new("reduced-form", name);
    let samples = sampled_indices(family.count(), cfg);
    let mut closed_checked = 0usize;
    let mut reduced_checked = 0usize;
    for (p, q, n) in &samples {
        let stratum = classify(n, *p)?;
        let brute = coeff_ideal_brute(family, *p, n)?;
        let reduced = coeff_ideal_reduced(family, *p, n, &stratum);
        reduced_checked += 1;
        if reduced != brute {
            reduced_report.fail(format!(
                "p={p} q={q} n={n:?}: reduced {reduced} != brute {brute}"
            ));
        }
        if !stratum.overflow {
            let closed = coeff_ideal_closed(family, *p, n, &stratum)?;
            closed_checked += 1;
            if closed != brute {
                closed_report.fail(format!(
                    "p={p} q={q} n={n:?}: closed {closed} != brute {brute}"
                ));
            }
        }
    }
    closed_report.note(format!("{closed_checked} indices compared"));
    reduced_report.note(format!("{reduced_checked} indices compared"));
    Ok(vec![closed_report, reduced_report])
}

/// The canonical non-overflow cell with k large coordinates: its partial sum
/// equals the explicit fiber-weighted double sum, and is bounded by
/// binom(q-(k-1)p-1, k-1) times the one-variable function of the collapsed
/// family.
pub fn check_cell_sum(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("cell-sum", name);
    let r = family.count();
    let mut pairs_checked = 0usize;
    for (p, q) in cfg.sample_pairs(r) {
        let total = lambda_pq_brute(family, p, q)?;
        let mut by_cells = BigInt::zero();
        for k in 1..=r {
            let canonical: Vec<usize> = (k..r).collect();
            let cell = lambda_pq_region(
                family,
                p,
                q,
                &StratumFilter::cell(k, canonical.clone(), false),
            )?;

            // explicit double sum over the small coordinates
            let stratum = Stratum {
                large_count: k,
                small_coords: canonical.clone(),
                overflow: false,
            };
            let mut double_sum = BigInt::zero();
            for assign in box_points(&vec![p; r - k]) {
                let m: u64 = assign.iter().sum();
                if m > p {
                    continue;
                }
                let mut rep = vec![p + 1; r];
                for (&coord, &value) in canonical.iter().zip(&assign) {
                    rep[coord] = value;
                }
                let a = coeff_ideal_closed(family, p, &rep, &stratum)?;
                double_sum += count_fiber(p, q, k, m)? * a.colength_box()?;
            }
            if cell != double_sum {
                report.fail(format!(
                    "p={p} q={q} k={k}: cell sum {cell} != double sum {double_sum}"
                ));
            }

            // inequality against the collapsed family
            let base: MonomialIdeal = {
                let mut acc = family.ideal(0).clone();
                for i in 1..k {
                    acc = acc.sum(family.ideal(i));
                }
                acc
            };
            let mut collapsed = vec![base.clone()];
            for &j in &canonical {
                collapsed.push(base.sum(family.ideal(j)));
            }
            let collapsed = IdealFamily::new_allowing_non_primary(collapsed)?;
            let bound = binomial(
                q as i128 - (k as i128 - 1) * p as i128 - 1,
                k as i128 - 1,
            ) * lambda(&collapsed, p)?;
            if cell > bound {
                report.fail(format!(
                    "p={p} q={q} k={k}: cell sum {cell} exceeds bound {bound}"
                ));
            }

            // accumulate the full stratum for the partition identity
            by_cells += lambda_pq_region(family, p, q, &StratumFilter::by_large_count(k))?;
        }
        if by_cells != total {
            report.fail(format!(
                "p={p} q={q}: strata sum {by_cells} != total {total}"
            ));
        }
        pairs_checked += 1;
    }
    report.note(format!(
        "{pairs_checked} (p, q) pairs: double-sum equality, bound, and partition"
    ));
    Ok(report)
}

/// The all-coordinates-large stratum carries exactly
/// binom(q-(r-1)p-1, r-1) * colength((I_1 + ... + I_r)^p).
pub fn check_top_stratum(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("top-stratum", name);
    let r = family.count();
    let sum_ideal = family.sum_all();
    let mut pairs_checked = 0usize;
    for (p, q) in cfg.sample_pairs(r) {
        let left = lambda_pq_region(family, p, q, &StratumFilter::by_large_count(r))?;
        let right = binomial(
            q as i128 - (r as i128 - 1) * p as i128 - 1,
            r as i128 - 1,
        ) * sum_ideal.power(p).colength_box()?;
        if left != right {
            report.fail(format!("p={p} q={q}: {left} != {right}"));
        }
        pairs_checked += 1;
    }
    report.note(format!("{pairs_checked} (p, q) pairs"));
    Ok(report)
}

/// On every overflow cell, the p-th power of the product of the small-side
/// ideals is contained in the coefficient ideal (so its colength bounds the
/// cell's colengths).
pub fn check_power_containment(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("power-containment", name);
    let r = family.count();
    let mut cells_checked = 0usize;
    for (p, q) in cfg.sample_pairs(r) {
        for k in 1..=r {
            let small_size = r - k;
            if small_size < 2 {
                continue; // a single small coordinate cannot overflow p
            }
            for small in combinations(r, small_size) {
                let mut bottom = MonomialIdeal::unit(family.dim());
                for &j in &small {
                    bottom = bottom.product(family.ideal(j));
                }
                let bottom_power = bottom.power(p);
                let stratum = Stratum {
                    large_count: k,
                    small_coords: small.clone(),
                    overflow: true,
                };
                for assign in box_points(&vec![p; small_size]) {
                    let m: u64 = assign.iter().sum();
                    if m <= p {
                        continue;
                    }
                    let mut rep = vec![p + 1; r];
                    for (&coord, &value) in small.iter().zip(&assign) {
                        rep[coord] = value;
                    }
                    let j_ideal = coeff_ideal_reduced(family, p, &rep, &stratum);
                    cells_checked += 1;
                    if !j_ideal.contains_ideal(&bottom_power) {
                        report.fail(format!(
                            "p={p} q={q} small={small:?} n_A={assign:?}: {bottom_power}^ not inside {j_ideal}"
                        ));
                    }
                }
            }
        }
    }
    if cells_checked == 0 {
        return Ok(report.inapplicable("no overflow cells in the sampled range"));
    }
    report.note(format!("{cells_checked} overflow fibers checked"));
    Ok(report)
}

/// The number of overflow multi-indices in the canonical cell is bounded by
/// binom(q-(k-1)p-1, k-1) * (binom(s+sp-1, s) - binom(s+p-1, s)), s = r-k.
pub fn check_overflow_bound(r: usize, cfg: &CheckConfig) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("overflow-bound", format!("r = {r}"));
    let mut points = 0usize;
    for (p, q) in cfg.sample_pairs(r) {
        for k in 1..r {
            let s = (r - k) as i128;
            let canonical: Vec<usize> = (k..r).collect();
            let direct = compositions(p + q, r)
                .filter(|n| {
                    let stratum = classify(n, p).expect("region guarantees classification");
                    stratum.large_count == k
                        && stratum.small_coords == canonical
                        && stratum.overflow
                })
                .count();
            let bound = binomial(q as i128 - (k as i128 - 1) * p as i128 - 1, k as i128 - 1)
                * (binomial(s + s * p as i128 - 1, s) - binomial(s + p as i128 - 1, s));
            if BigInt::from(direct) > bound {
                report.fail(format!(
                    "p={p} q={q} k={k}: {direct} overflow indices exceed bound {bound}"
                ));
            }
            points += 1;
        }
    }
    if points == 0 {
        return Ok(report.inapplicable("needs r >= 2"));
    }
    report.note(format!("{points} sampled (p, q, k) points"));
    Ok(report)
}

/// The fiber-count binomial agrees with direct enumeration across the
/// configured parameter box.
pub fn check_fiber_count(cfg: &CheckConfig) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new(
        "fiber-count",
        format!(
            "k <= {}, p <= {}, q <= {}",
            cfg.fiber_k_max, cfg.fiber_p_max, cfg.fiber_q_max
        ),
    );
    let mut points = 0usize;
    for k in 1..=cfg.fiber_k_max {
        for p in 0..=cfg.fiber_p_max {
            for q in 0..=cfg.fiber_q_max {
                if !in_region(p, q, k) {
                    continue;
                }
                for m in 0..=p {
                    let direct = compositions(p + q - m, k)
                        .filter(|n| n.iter().all(|&v| v > p))
                        .count();
                    let formula = count_fiber(p, q, k, m)?;
                    if formula != BigInt::from(direct) {
                        report.fail(format!(
                            "k={k} p={p} q={q} m={m}: formula {formula} != enumeration {direct}"
                        ));
                    }
                    points += 1;
                }
            }
        }
    }
    report.note(format!("{points} parameter points"));
    Ok(report)
}

/// The stratified evaluator reproduces brute force on the whole grid
/// p <= p_max, (p+1)r <= q <= q_max.
pub fn check_oracle_equivalence(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("oracle-equivalence", name);
    let r = family.count();
    let mut grid = Vec::new();
    for p in 0..=cfg.p_max {
        for q in (p + 1) * r as u64..=cfg.q_max {
            grid.push((p, q));
        }
    }
    let outcomes = grid
        .par_iter()
        .map(|&(p, q)| -> Result<Option<String>, Error> {
            let brute = lambda_pq_brute(family, p, q)?;
            let fast = lambda_pq_fast(family, p, q)?;
            if brute != fast {
                Ok(Some(format!("p={p} q={q}: fast {fast} != brute {brute}")))
            } else {
                Ok(None)
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    for mismatch in outcomes.into_iter().flatten() {
        report.fail(mismatch);
    }
    report.note(format!("{} (p, q) pairs", grid.len()));
    Ok(report)
}

/// Structural invariants: the two colength algorithms agree, the
/// two-variable function restricts to the one-variable function at q = 0,
/// and the extracted sequence has the required shape with its head matching
/// the one-variable pipeline.
pub fn check_structural(
    name: &str,
    family: &IdealFamily,
    cfg: &CheckConfig,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("structural", name);
    let mut ideals: Vec<MonomialIdeal> = family.ideals().to_vec();
    ideals.push(family.sum_all());
    for ideal in &ideals {
        let by_box = ideal.colength_box()?;
        match ideal.colength_incl_excl() {
            Ok(by_ie) => {
                if by_box != by_ie {
                    report.fail(format!(
                        "{ideal}: box colength {by_box} != inclusion-exclusion {by_ie}"
                    ));
                }
            }
            Err(Error::TooManyGenerators { .. }) => {
                report.note(format!("{ideal}: inclusion-exclusion skipped (generator cap)"));
            }
            Err(e) => return Err(e),
        }
    }
    for p in 0..=cfg.p_max + 1 {
        let lam = lambda(family, p)?;
        let lam_pq = lambda_pq_brute(family, p, 0)?;
        if lam != lam_pq {
            report.fail(format!("p={p}: Lambda(p, 0) = {lam_pq} != lambda(p) = {lam}"));
        }
    }
    // Sequence shape is enforced by construction; failure surfaces as Err.
    let seq = br_multiplicity_sequence_with(family, &cfg.options())?;
    let e0 = br_multiplicity_with(family, cfg.budget)?;
    if seq.value(0) != &e0.value {
        report.fail(format!(
            "sequence head {} != one-variable multiplicity {}",
            seq.value(0),
            e0.value
        ));
    }
    report.note(format!(
        "sequence {:?} (shape verified)",
        seq.values().iter().map(|v| v.to_string()).collect::<Vec<_>>()
    ));
    Ok(report)
}

/// Runs every configured check over the corpus. Computation failures (budget
/// exhaustion, invalid families) abort with `Err`; theorem violations are
/// reported as failed verdicts.
pub fn run_corpus(
    corpus: &[NamedFamily],
    cfg: &CheckConfig,
) -> Result<Vec<VerificationReport>, Error> {
    let mut reports = Vec::new();
    if cfg.wants("fiber-count") {
        reports.push(check_fiber_count(cfg)?);
    }
    if cfg.wants("overflow-bound") {
        let mut counts: Vec<usize> = corpus
            .iter()
            .map(|nf| nf.family.count())
            .filter(|&r| r >= 2)
            .collect();
        counts.sort_unstable();
        counts.dedup();
        for r in counts {
            reports.push(check_overflow_bound(r, cfg)?);
        }
    }
    let per_family = corpus
        .par_iter()
        .map(|nf| -> Result<Vec<VerificationReport>, Error> {
            let mut out = Vec::new();
            let (name, family) = (nf.name.as_str(), &nf.family);
            if cfg.wants("structural") {
                out.push(check_structural(name, family, cfg)?);
            }
            if cfg.wants("oracle-equivalence") {
                out.push(check_oracle_equivalence(name, family, cfg)?);
            }
            if cfg.wants("closed-form") || cfg.wants("reduced-form") {
                let both = check_coeff_ideal_identities(name, family, cfg)?;
                out.extend(
                    both.into_iter()
                        .filter(|r| cfg.wants(r.check)),
                );
            }
            if cfg.wants("cell-sum") {
                out.push(check_cell_sum(name, family, cfg)?);
            }
            if cfg.wants("top-stratum") {
                out.push(check_top_stratum(name, family, cfg)?);
            }
            if cfg.wants("power-containment") {
                out.push(check_power_containment(name, family, cfg)?);
            }
            if cfg.wants("last-multiplicity") {
                out.push(check_last_multiplicity(name, family, cfg)?);
            }
            if cfg.wants("multiplicity-sum") {
                out.push(check_multiplicity_sum(name, family, cfg)?);
            }
            if cfg.wants("nested-chain") {
                out.push(check_nested_chain(name, family, cfg)?);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>, _>>()?;
    reports.extend(per_family.into_iter().flatten());
    Ok(reports)
}

/// Number of failed reports.
pub fn failures(reports: &[VerificationReport]) -> usize {
    reports
        .iter()
        .filter(|r| r.verdict == Verdict::Fail)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick_cfg() -> CheckConfig {
        CheckConfig {
            p_max: 2,
            q_max: 10,
            min_samples: 40,
            fiber_k_max: 2,
            fiber_p_max: 2,
            fiber_q_max: 10,
            ..CheckConfig::default()
        }
    }

    fn family_by_name(name: &str) -> IdealFamily {
        builtin_corpus()
            .into_iter()
            .find(|nf| nf.name == name)
            .expect("corpus family")
            .family
    }

    #[test]
    fn corpus_is_well_formed() {
        let corpus = builtin_corpus();
        assert_eq!(corpus.len(), 13);
        let mut dims = std::collections::BTreeSet::new();
        let mut counts = std::collections::BTreeSet::new();
        for nf in &corpus {
            dims.insert(nf.family.dim());
            counts.insert(nf.family.count());
        }
        assert_eq!(dims.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert_eq!(counts.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn last_multiplicity_on_witness_pair() {
        let f = family_by_name("d2-cross-pair");
        let report = check_last_multiplicity("d2-cross-pair", &f, &quick_cfg()).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.details);
        assert!(report.details[0].contains("e^1 = 1"));
    }

    #[test]
    fn multiplicity_sum_on_known_tables() {
        let cfg = quick_cfg();
        for (name, expect) in [("d2-max-pair", "3"), ("d2-max-square", "7")] {
            let f = family_by_name(name);
            let report = check_multiplicity_sum(name, &f, &cfg).unwrap();
            assert_eq!(report.verdict, Verdict::Pass, "{name}: {:?}", report.details);
            assert!(
                report.details.iter().any(|l| l.contains(&format!("e(C) = {expect}"))),
                "{name}: {:?}",
                report.details
            );
        }
    }

    #[test]
    fn nested_chain_detects_applicability() {
        let cfg = quick_cfg();
        let nested = family_by_name("d2-nested-pair");
        let report = check_nested_chain("d2-nested-pair", &nested, &cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.details);

        let cross = family_by_name("d2-cross-pair");
        let report = check_nested_chain("d2-cross-pair", &cross, &cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Inapplicable);

        // families with equal members pass and carry the boundary-case note
        let equal = family_by_name("d1-pair-equal");
        let report = check_nested_chain("d1-pair-equal", &equal, &cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.details);
        assert!(report.details[0].contains("equal adjacent"));
    }

    #[test]
    fn coeff_ideal_identities_sample_enough() {
        let cfg = quick_cfg();
        let f = family_by_name("d2-cross-pair");
        let reports = check_coeff_ideal_identities("d2-cross-pair", &f, &cfg).unwrap();
        assert_eq!(reports.len(), 2);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Pass, "{}: {:?}", r.check, r.details);
        }
        let count: usize = reports[1].details[0]
            .split_whitespace()
            .next()
            .unwrap()
            .parse()
            .unwrap();
        assert!(count >= cfg.min_samples);
    }

    #[test]
    fn cell_sum_and_top_stratum_pass() {
        let cfg = quick_cfg();
        for name in ["d2-cross-pair", "d1-pair-nested", "d2-max-triple"] {
            let f = family_by_name(name);
            let r1 = check_cell_sum(name, &f, &cfg).unwrap();
            assert_eq!(r1.verdict, Verdict::Pass, "{name}: {:?}", r1.details);
            let r2 = check_top_stratum(name, &f, &cfg).unwrap();
            assert_eq!(r2.verdict, Verdict::Pass, "{name}: {:?}", r2.details);
        }
    }

    #[test]
    fn power_containment_applies_to_triples() {
        let cfg = quick_cfg();
        let f = family_by_name("d2-triple");
        let report = check_power_containment("d2-triple", &f, &cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.details);

        let pair = family_by_name("d2-cross-pair");
        let report = check_power_containment("d2-cross-pair", &pair, &cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Inapplicable);
    }

    #[test]
    fn overflow_bound_and_fiber_count() {
        let cfg = quick_cfg();
        for r in 2..=3 {
            let report = check_overflow_bound(r, &cfg).unwrap();
            assert_eq!(report.verdict, Verdict::Pass, "r={r}: {:?}", report.details);
        }
        let report = check_fiber_count(&cfg).unwrap();
        assert_eq!(report.verdict, Verdict::Pass, "{:?}", report.details);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = CheckConfig {
            checks: vec!["top-stratum".into(), "fiber-count".into()],
            p_max: 1,
            q_max: 8,
            fiber_k_max: 2,
            fiber_p_max: 2,
            fiber_q_max: 8,
            ..CheckConfig::default()
        };
        let corpus: Vec<NamedFamily> = builtin_corpus().into_iter().take(4).collect();
        let a = run_corpus(&corpus, &cfg).unwrap();
        let b = run_corpus(&corpus, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn run_corpus_quick_subset() {
        // a fast smoke pass over two light checks on the whole corpus
        let cfg = CheckConfig {
            checks: vec!["structural".into(), "top-stratum".into()],
            p_max: 1,
            q_max: 8,
            ..quick_cfg()
        };
        let corpus = builtin_corpus();
        let reports = run_corpus(&corpus, &cfg).unwrap();
        assert_eq!(failures(&reports), 0, "{reports:#?}");
        assert_eq!(reports.len(), 2 * corpus.len());
    }
}
