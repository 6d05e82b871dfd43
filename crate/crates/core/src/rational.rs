//! Exact rationals over big integers, and their float renderings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

pub type Rational = BigRational;

pub fn int(v: impl Into<BigInt>) -> Rational {
    Rational::from_integer(v.into())
}

pub fn frac(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn pow(q: u32, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(q), e)
}

pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `r / q^(n/2)` as a float; turns a scaled trace into trace units.
pub fn trace_units(r: &Rational, q: u32, n: usize) -> f64 {
    let v = to_f64(&(r / int(pow(q, n / 2))));
    if n.is_multiple_of(2) {
        v
    } else {
        v / libm::sqrt(f64::from(q))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn units() {
        assert_eq!(trace_units(&frac(-9, 1), 3, 2), -3.0);
        assert!((trace_units(&int(3), 3, 1) - 3f64.sqrt()).abs() < 1e-12);
        assert_eq!(to_f64(&frac(1, 4)), 0.25);
    }
}
