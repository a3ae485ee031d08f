//! Exponent vectors: points of the lattice of monomials.
//!
//! An `ExponentVector` of length `d` encodes a monomial in `d` variables.
//! The canonical ordering everywhere in the crate is graded-lexicographic,
//! which makes generator lists and polynomial term order reproducible.

use std::cmp::Ordering;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector {
    entries: Vec<u32>,
}

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        Self { entries }
    }

    /// The constant monomial in `dim` variables.
    pub fn zeros(dim: usize) -> Self {
        Self {
            entries: vec![0; dim],
        }
    }

    /// The single variable `x_index`.
    pub fn axis(dim: usize, index: usize) -> Self {
        assert!(index < dim, "axis index out of range");
        let mut entries = vec![0; dim];
        entries[index] = 1;
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Total degree |α|.
    pub fn degree(&self) -> u64 {
        self.entries.iter().map(|&e| u64::from(e)).sum()
    }

    /// Componentwise ≤, i.e. the monomial divides `other`.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.entries
            .iter()
            .zip(&other.entries)
            .all(|(a, b)| a <= b)
    }

    /// Exponent sum, the product of the monomials.
    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Exact difference; `None` when `other` does not divide `self`.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if !other.divides(self) {
            return None;
        }
        Some(Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Componentwise truncated difference, used by the colon operation.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// Componentwise maximum, the lcm of the monomials.
    pub fn join(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Self {
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    /// The n-th power of the monomial.
    pub fn scale(&self, n: u32) -> Self {
        Self {
            entries: self.entries.iter().map(|&e| e * n).collect(),
        }
    }
}

/// Graded-lexicographic order: first by total degree, ties broken
/// lexicographically on the entries. Distinct vectors never tie.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.degree().cmp(&other.degree()))
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(entries: Vec<u32>) -> Self {
        Self::new(entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    #[test]
    fn divisibility_and_arithmetic() {
        let a = ev(&[2, 1]);
        let b = ev(&[1, 2]);
        assert!(!a.divides(&b));
        assert!(ev(&[1, 1]).divides(&a));
        assert_eq!(a.add(&b), ev(&[3, 3]));
        assert_eq!(a.join(&b), ev(&[2, 2]));
        assert_eq!(a.checked_sub(&ev(&[1, 0])), Some(ev(&[1, 1])));
        assert_eq!(a.checked_sub(&b), None);
        assert_eq!(a.saturating_sub(&b), ev(&[1, 0]));
        assert_eq!(a.scale(3), ev(&[6, 3]));
        assert_eq!(a.degree(), 3);
    }

    #[test]
    fn graded_lex_order() {
        // degree first, then lex
        assert!(ev(&[0, 3]) > ev(&[2, 0]));
        assert!(ev(&[2, 1]) > ev(&[1, 2]));
        assert!(ev(&[0, 0]) < ev(&[1, 0]));
    }
}
