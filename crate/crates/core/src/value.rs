//! Order and valuation values extended with infinity.
//!
//! The zero element of the ring has every order and valuation equal to
//! infinity, which is greater than every finite value and absorbs addition.

use num_rational::BigRational;
use std::cmp::Ordering;
use std::fmt;

/// A value that is either finite or the distinguished infinity of the
/// zero element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Value<T> {
    Finite(T),
    Infinity,
}

/// Integer-valued adic orders.
pub type OrderValue = Value<u64>;

/// Rational-valued quantities such as reduced orders and valuations.
pub type RationalValue = Value<BigRational>;

impl<T> Value<T> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, Value::Infinity)
    }

    pub fn as_finite(&self) -> Option<&T> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Infinity => None,
        }
    }

    pub fn into_finite(self) -> Option<T> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Infinity => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Value<U> {
        match self {
            Value::Finite(v) => Value::Finite(f(v)),
            Value::Infinity => Value::Infinity,
        }
    }
}

impl<T: Ord> PartialOrd for Value<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Ord> Ord for Value<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Infinity, Value::Infinity) => Ordering::Equal,
            (Value::Infinity, Value::Finite(_)) => Ordering::Greater,
            (Value::Finite(_), Value::Infinity) => Ordering::Less,
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
        }
    }
}

impl<T: fmt::Display> fmt::Display for Value<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => v.fmt(f),
            Value::Infinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_dominates() {
        assert!(Value::Infinity > Value::Finite(u64::MAX));
        assert!(Value::Finite(3u64) < Value::Finite(4u64));
        assert_eq!(Value::<u64>::Infinity, Value::Infinity);
    }

    #[test]
    fn display() {
        assert_eq!(Value::Finite(5u64).to_string(), "5");
        assert_eq!(Value::<u64>::Infinity.to_string(), "inf");
    }
}
