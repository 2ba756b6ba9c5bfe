//! m-primary monomial ideals with canonical minimal generating sets.
//!
//! An ideal is stored as its unique minimal generating set: a divisibility
//! antichain, sorted lexicographically by exponent vector. Equal ideals
//! therefore have identical representations and `==` is ideal equality.
//!
//! The colength (number of standard monomials) is computed by two independent
//! algorithms: a scan of the bounding box cut out by the pure-power
//! generators, and inclusion-exclusion over generator subsets using lcm
//! cones. The second exists purely as a correctness oracle for the first.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::monomial::Monomial;

/// Largest generator count accepted by [`MonomialIdeal::colength_incl_excl`];
/// the algorithm walks all 2^g generator subsets.
pub const INCL_EXCL_GENERATOR_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, reducing to the minimal
    /// generating set (drop every generator divisible by another, sort
    /// lexicographically, remove duplicates).
    pub fn new(dim: usize, gens: Vec<Monomial>) -> Result<Self, Error> {
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
        }
        let mut gens = gens;
        gens.sort();
        gens.dedup();
        let minimal: Vec<Monomial> = gens
            .iter()
            .filter(|g| !gens.iter().any(|h| h != *g && h.divides(g)))
            .cloned()
            .collect();
        Ok(Self { dim, gens: minimal })
    }

    /// The unit ideal (1), generated by the constant monomial.
    pub fn unit(dim: usize) -> Self {
        Self {
            dim,
            gens: vec![Monomial::one(dim)],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    /// Monomial membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        assert_eq!(self.dim, m.dim(), "monomial dimension disagrees with ideal");
        self.gens.iter().any(|g| g.divides(m))
    }

    fn contains_exps(&self, exps: &[u64]) -> bool {
        self.gens
            .iter()
            .any(|g| g.exponents().iter().zip(exps).all(|(a, b)| a <= b))
    }

    /// Ideal containment: `other` is a subideal of `self`.
    pub fn contains_ideal(&self, other: &Self) -> bool {
        assert_eq!(self.dim, other.dim, "ideal dimensions disagree");
        other.gens.iter().all(|g| self.contains(g))
    }

    /// True iff every variable has a pure power among the generators,
    /// equivalently iff the colength is finite.
    pub fn is_m_primary(&self) -> bool {
        (0..self.dim).all(|axis| self.gens.iter().any(|g| g.is_pure_power_of(axis)))
    }

    /// Per-axis pure-power degrees: the box [0, N_1) x ... x [0, N_d)
    /// contains every standard monomial.
    fn box_bounds(&self) -> Result<Vec<u64>, Error> {
        (0..self.dim)
            .map(|axis| {
                self.gens
                    .iter()
                    .filter(|g| g.is_pure_power_of(axis))
                    .map(|g| g.exponents()[axis])
                    .min()
                    .ok_or(Error::NotMPrimary { axis })
            })
            .collect()
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "ideal dimensions disagree");
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Self::new(self.dim, gens).expect("sum of non-empty generator sets")
    }

    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "ideal dimensions disagree");
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b));
            }
        }
        Self::new(self.dim, gens).expect("product of non-empty generator sets")
    }

    /// a-fold product by repeated squaring, minimalizing after every product.
    /// The zeroth power is the unit ideal.
    pub fn power(&self, a: u64) -> Self {
        let mut result = Self::unit(self.dim);
        let mut base = self.clone();
        let mut a = a;
        while a > 0 {
            if a & 1 == 1 {
                result = result.product(&base);
            }
            a >>= 1;
            if a > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Number of standard monomials, counted by scanning the bounding box.
    pub fn colength_box(&self) -> Result<BigInt, Error> {
        let bounds = self.box_bounds()?;
        if bounds.contains(&0) {
            // A zero bound means a pure power of degree zero: the unit ideal.
            return Ok(BigInt::zero());
        }
        let mut count: u128 = 0;
        let mut point = vec![0u64; self.dim];
        loop {
            if !self.contains_exps(&point) {
                count += 1;
            }
            // Odometer over the box, last coordinate fastest.
            let Some(j) = (0..self.dim).rev().find(|&j| point[j] + 1 < bounds[j]) else {
                break;
            };
            point[j] += 1;
            for slot in point[j + 1..].iter_mut() {
                *slot = 0;
            }
        }
        Ok(BigInt::from(count))
    }

    /// Independent colength: box size minus the points covered by the
    /// generator cones, via inclusion-exclusion over non-empty generator
    /// subsets (the intersection of two cones is the cone of the lcm).
    pub fn colength_incl_excl(&self) -> Result<BigInt, Error> {
        let g = self.gens.len();
        if g > INCL_EXCL_GENERATOR_LIMIT {
            return Err(Error::TooManyGenerators {
                count: g,
                limit: INCL_EXCL_GENERATOR_LIMIT,
            });
        }
        let bounds = self.box_bounds()?;
        let box_total: BigInt = bounds.iter().map(|&n| BigInt::from(n)).product();
        let mut covered = BigInt::zero();
        for mask in 1u32..(1u32 << g) {
            let mut lcm = vec![0u64; self.dim];
            for (i, gen) in self.gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    for (slot, &e) in lcm.iter_mut().zip(gen.exponents()) {
                        *slot = (*slot).max(e);
                    }
                }
            }
            let cone: BigInt = lcm
                .iter()
                .zip(&bounds)
                .map(|(&l, &n)| BigInt::from(n.saturating_sub(l)))
                .product();
            if mask.count_ones() % 2 == 1 {
                covered += cone;
            } else {
                covered -= cone;
            }
        }
        Ok(box_total - covered)
    }
}

impl std::fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
