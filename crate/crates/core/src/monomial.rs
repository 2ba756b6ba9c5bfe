use std::fmt;

/// A monomial x1^{a1} ... xd^{ad}, stored as its exponent vector.
///
/// The derived `Ord` is lexicographic on the exponent vector, which is the
/// canonical generator order used throughout the crate.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u64>,
}

impl Monomial {
    pub fn new(exps: Vec<u64>) -> Self {
        Self { exps }
    }

    /// The constant monomial 1 in `dim` variables.
    pub fn one(dim: usize) -> Self {
        Self { exps: vec![0; dim] }
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// True iff every exponent except possibly `axis` is zero.
    pub fn is_pure_power_of(&self, axis: usize) -> bool {
        self.exps.iter().enumerate().all(|(i, &e)| i == axis || e == 0)
    }

    /// Componentwise comparison: self | other.
    pub fn divides(&self, other: &Self) -> bool {
        assert_eq!(self.dim(), other.dim(), "monomial dimensions disagree");
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "monomial dimensions disagree");
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim(), "monomial dimensions disagree");
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }
}

fn var_name(i: usize, dim: usize) -> String {
    if dim <= 3 {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", var_name(i, self.dim()))?;
            } else {
                write!(f, "{}^{}", var_name(i, self.dim()), e)?;
            }
        }
        Ok(())
    }
}
