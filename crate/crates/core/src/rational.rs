//! Exact rational values for fractional parameters.

pub use num_rational::Ratio;

/// Exact fraction in lowest terms.
pub type Rational = Ratio<i64>;

pub fn rational(num: i64, den: i64) -> Rational {
    Ratio::new(num, den)
}

pub fn integer(v: i64) -> Rational {
    Ratio::from_integer(v)
}
