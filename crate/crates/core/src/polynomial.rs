//! Polynomials with exact rational coefficients.
//!
//! A polynomial is a finite map from exponent vectors to nonzero rationals;
//! the zero polynomial is the empty map. Terms are kept in a `BTreeMap`
//! keyed by the graded-lex order, so iteration and printing are
//! deterministic.

use crate::error::Error;
use crate::monomial::ExponentVector;
use crate::Result;
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<ExponentVector, BigRational>,
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Single term `coeff * x^alpha`; a zero coefficient gives the zero
    /// polynomial.
    pub fn monomial(dim: usize, alpha: ExponentVector, coeff: BigRational) -> Result<Self> {
        if alpha.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: alpha.dim(),
            });
        }
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(alpha, coeff);
        }
        Ok(Self { dim, terms })
    }

    /// Build from (exponent, coefficient) pairs, summing duplicates and
    /// dropping anything that cancels to zero.
    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (ExponentVector, BigRational)>,
    ) -> Result<Self> {
        let mut map: BTreeMap<ExponentVector, BigRational> = BTreeMap::new();
        for (alpha, coeff) in terms {
            if alpha.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: alpha.dim(),
                });
            }
            let entry = map.entry(alpha).or_insert_with(BigRational::zero);
            *entry += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Self { dim, terms: map })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The support of the polynomial in graded-lex order.
    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, alpha: &ExponentVector) -> Option<&BigRational> {
        self.terms.get(alpha)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Self::from_terms(
            self.dim,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(a, c)| (a.clone(), c.clone())),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Self::from_terms(
            self.dim,
            self.terms.iter().flat_map(|(a, ca)| {
                other
                    .terms
                    .iter()
                    .map(move |(b, cb)| (a.add(b), ca * cb))
            }),
        )
    }

    /// The n-th power by repeated multiplication.
    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Polynomial::monomial(
            self.dim,
            ExponentVector::zeros(self.dim),
            BigRational::from_integer(1.into()),
        )
        .expect("unit polynomial");
        for _ in 0..n {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest graded-lex term first
        for (i, (alpha, coeff)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}*x^{alpha}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cancellation_drops_terms() {
        let f = Polynomial::from_terms(2, [(ev(&[1, 0]), rat(2)), (ev(&[1, 0]), rat(-2))]).unwrap();
        assert!(f.is_zero());
    }

    #[test]
    fn product_of_monomials() {
        let f = Polynomial::monomial(2, ev(&[2, 1]), rat(3)).unwrap();
        let g = Polynomial::monomial(2, ev(&[0, 2]), BigRational::one() / rat(2)).unwrap();
        let fg = f.mul(&g).unwrap();
        assert_eq!(fg.num_terms(), 1);
        assert_eq!(
            fg.coefficient(&ev(&[2, 3])),
            Some(&(rat(3) / rat(2)))
        );
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let f = Polynomial::monomial(2, ev(&[1, 0]), rat(1)).unwrap();
        let g = Polynomial::monomial(3, ev(&[1, 0, 0]), rat(1)).unwrap();
        assert!(matches!(
            f.mul(&g),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn power() {
        let f = Polynomial::from_terms(2, [(ev(&[1, 0]), rat(1)), (ev(&[0, 1]), rat(1))]).unwrap();
        let sq = f.pow(2);
        assert_eq!(sq.coefficient(&ev(&[1, 1])), Some(&rat(2)));
        assert_eq!(sq.num_terms(), 3);
    }
}
