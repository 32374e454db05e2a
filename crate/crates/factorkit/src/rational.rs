//! Exact rational values with a distinguished `+inf`.
//!
//! Every parameter this crate computes is a ratio of two small vertex
//! counts, so `i64` components never get anywhere near overflow; the
//! comparison path still widens to `i128` so the type is safe for any
//! inputs a caller can construct. There is no floating point anywhere.

use std::cmp::Ordering;
use std::fmt;

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// An exact rational in lowest terms with positive denominator, or `+inf`.
///
/// `PositiveInfinity` compares greater than every finite value. It is the
/// conventional value of the toughness-style parameters on complete graphs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Rational {
    Finite { num: i64, den: i64 },
    PositiveInfinity,
}

impl Rational {
    pub const INFINITY: Rational = Rational::PositiveInfinity;

    /// Builds `num/den` reduced to lowest terms with a positive denominator.
    ///
    /// Panics if `den == 0`; callers always divide by a component count or a
    /// set cardinality that they have already checked to be nonzero.
    pub fn new(num: i64, den: i64) -> Rational {
        assert!(den != 0, "rational with zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den);
        if g == 0 {
            return Rational::Finite { num: 0, den: 1 };
        }
        Rational::Finite {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(n: i64) -> Rational {
        Rational::Finite { num: n, den: 1 }
    }

    pub fn zero() -> Rational {
        Rational::integer(0)
    }

    /// Ratio of two nonnegative counts, the only way parameter values arise.
    pub fn ratio(num: usize, den: usize) -> Rational {
        Rational::new(num as i64, den as i64)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Rational::Finite { .. })
    }

    /// `(numerator, denominator)` in lowest terms, `None` for `+inf`.
    pub fn as_parts(&self) -> Option<(i64, i64)> {
        match *self {
            Rational::Finite { num, den } => Some((num, den)),
            Rational::PositiveInfinity => None,
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Rational::PositiveInfinity, Rational::PositiveInfinity) => Ordering::Equal,
            (Rational::PositiveInfinity, Rational::Finite { .. }) => Ordering::Greater,
            (Rational::Finite { .. }, Rational::PositiveInfinity) => Ordering::Less,
            (
                Rational::Finite { num: a, den: b },
                Rational::Finite { num: c, den: d },
            ) => (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128)),
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Rational::Finite { num, den: 1 } => write!(f, "{num}"),
            Rational::Finite { num, den } => write!(f, "{num}/{den}"),
            Rational::PositiveInfinity => write!(f, "inf"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        assert_eq!(Rational::new(4, 6), Rational::new(2, 3));
        assert_eq!(Rational::new(-4, -6), Rational::new(2, 3));
        assert_eq!(Rational::new(4, -6), Rational::new(-2, 3));
        assert_eq!(Rational::new(0, -5), Rational::zero());
        assert_eq!(Rational::new(7, 1), Rational::integer(7));
    }

    #[test]
    fn exact_comparison() {
        assert!(Rational::new(1, 3) < Rational::new(1, 2));
        assert!(Rational::new(2, 3) < Rational::new(3, 4));
        assert_eq!(Rational::new(2, 4), Rational::new(1, 2));
        assert!(Rational::new(-1, 2) < Rational::zero());
        // values that would collide under f64 rounding stay distinct
        let a = Rational::new(1_000_000_000_000_000_000, 3);
        let b = Rational::new(2_000_000_000_000_000_001, 6);
        assert!(a < b);
    }

    #[test]
    fn infinity_is_top() {
        assert!(Rational::INFINITY > Rational::integer(i64::MAX));
        assert_eq!(Rational::INFINITY, Rational::INFINITY);
        assert!(Rational::new(11, 3) < Rational::INFINITY);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Rational::new(4, 3).to_string(), "4/3");
        assert_eq!(Rational::new(7, 2).to_string(), "7/2");
        assert_eq!(Rational::integer(5).to_string(), "5");
        assert_eq!(Rational::zero().to_string(), "0");
        assert_eq!(Rational::INFINITY.to_string(), "inf");
        assert_eq!(Rational::new(-3, 9).to_string(), "-1/3");
    }

    #[test]
    #[should_panic(expected = "zero denominator")]
    fn zero_denominator_panics() {
        let _ = Rational::new(1, 0);
    }
}
