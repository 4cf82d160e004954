use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> BigRational {
    BigRational::from_integer(big(v))
}

pub fn rat_of(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// Binomial coefficient C(n, k) as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * big((n - i) as i64) / big((i + 1) as i64);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= big(i as i64);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(6, 0), big(1));
        assert_eq!(binomial(4, 7), big(0));
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), big(1));
        assert_eq!(factorial(6), big(720));
    }
}
