use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_rational::Ratio;

/// Exact rational numbers used for every function value.
pub type Rational = Ratio<i64>;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// An element of Q ∪ {+∞}. `Infinite` absorbs under addition and compares
/// greater than every finite value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Value {
    Finite(Rational),
    Infinite,
}

impl Value {
    pub fn is_finite(&self) -> bool {
        matches!(self, Value::Finite(_))
    }

    pub fn finite(self) -> Option<Rational> {
        match self {
            Value::Finite(v) => Some(v),
            Value::Infinite => None,
        }
    }

    pub fn zero() -> Self {
        Value::Finite(int(0))
    }
}

impl From<Rational> for Value {
    fn from(v: Rational) -> Self {
        Value::Finite(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Finite(int(v))
    }
}

impl From<Option<Rational>> for Value {
    fn from(v: Option<Rational>) -> Self {
        v.map_or(Value::Infinite, Value::Finite)
    }
}

impl Add for Value {
    type Output = Value;
    fn add(self, rhs: Value) -> Value {
        match (self, rhs) {
            (Value::Finite(a), Value::Finite(b)) => Value::Finite(a + b),
            _ => Value::Infinite,
        }
    }
}

impl Ord for Value {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Value::Finite(a), Value::Finite(b)) => a.cmp(b),
            (Value::Finite(_), Value::Infinite) => Ordering::Less,
            (Value::Infinite, Value::Finite(_)) => Ordering::Greater,
            (Value::Infinite, Value::Infinite) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Finite(v) => write!(f, "{v}"),
            Value::Infinite => write!(f, "inf"),
        }
    }
}

/// `lhs >= rhs` under the axiom convention: +∞ on the left satisfies any
/// inequality, +∞ on the right is only matched by +∞ on the left.
pub fn holds_ge(lhs: Value, rhs: Value) -> bool {
    lhs >= rhs
}
