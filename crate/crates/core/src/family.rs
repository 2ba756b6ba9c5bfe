use crate::error::Error;
use crate::ideal::MonomialIdeal;

/// An ordered family (I_1, ..., I_r) of monomial ideals in the same ambient
/// dimension: the data of the module R/I_1 (+) ... (+) R/I_r.
///
/// Members must be proper (not the unit ideal) and, unless constructed with
/// [`IdealFamily::new_allowing_non_primary`], m-primary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFamily {
    dim: usize,
    ideals: Vec<MonomialIdeal>,
}

impl IdealFamily {
    pub fn new(ideals: Vec<MonomialIdeal>) -> Result<Self, Error> {
        let family = Self::new_allowing_non_primary(ideals)?;
        for ideal in &family.ideals {
            if !ideal.is_m_primary() {
                let axis = (0..family.dim)
                    .find(|&axis| {
                        !ideal.gens().iter().any(|g| g.is_pure_power_of(axis))
                    })
                    .unwrap_or(0);
                return Err(Error::NotMPrimary { axis });
            }
        }
        Ok(family)
    }

    /// Skips only the m-primary validation; length computations on such a
    /// family can fail later with [`Error::NotMPrimary`].
    pub fn new_allowing_non_primary(ideals: Vec<MonomialIdeal>) -> Result<Self, Error> {
        let Some(first) = ideals.first() else {
            return Err(Error::EmptyFamily);
        };
        let dim = first.dim();
        for ideal in &ideals {
            if ideal.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: ideal.dim(),
                });
            }
        }
        if let Some(position) = ideals.iter().position(|i| i.is_unit()) {
            return Err(Error::UnitIdealMember { position });
        }
        Ok(Self { dim, ideals })
    }

    /// Ambient dimension d.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of ideals r.
    pub fn count(&self) -> usize {
        self.ideals.len()
    }

    pub fn ideals(&self) -> &[MonomialIdeal] {
        &self.ideals
    }

    pub fn ideal(&self, k: usize) -> &MonomialIdeal {
        &self.ideals[k]
    }

    /// The product I_1^{i_1} ... I_r^{i_r}.
    pub fn power_product(&self, index: &[u64]) -> MonomialIdeal {
        assert_eq!(
            index.len(),
            self.count(),
            "multi-index length disagrees with family size"
        );
        let mut acc = MonomialIdeal::unit(self.dim);
        for (ideal, &e) in self.ideals.iter().zip(index) {
            if e > 0 {
                acc = acc.product(&ideal.power(e));
            }
        }
        acc
    }

    /// The ideal sum I_1 + ... + I_r.
    pub fn sum_all(&self) -> MonomialIdeal {
        let mut acc = self.ideals[0].clone();
        for ideal in &self.ideals[1..] {
            acc = acc.sum(ideal);
        }
        acc
    }

    /// The subfamily (I_{start+1}, ..., I_r), zero-based.
    pub fn tail(&self, start: usize) -> Result<Self, Error> {
        Self::new_allowing_non_primary(self.ideals[start..].to_vec())
    }

    /// True iff I_1 <= I_2 <= ... <= I_r as ideals.
    pub fn is_nested(&self) -> bool {
        self.ideals
            .windows(2)
            .all(|w| w[1].contains_ideal(&w[0]))
    }
}

impl std::fmt::Display for IdealFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, ideal) in self.ideals.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{ideal}")?;
        }
        Ok(())
    }
}
