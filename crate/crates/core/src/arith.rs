//! Exact integer helpers: factorials, falling and rising powers, and `p`-adic
//! valuations of big rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `a^{k falling} = a (a-1) ... (a-k+1)` for `k >= 0`. For negative `k` this
/// is `1 / (a-k)^{(-k) falling}`, and `None` when that denominator is zero.
pub fn falling(a: &BigInt, k: i64) -> Option<BigRational> {
    if k >= 0 {
        let v = (0..k).fold(BigInt::one(), |acc, i| acc * (a - i));
        return Some(BigRational::from_integer(v));
    }
    let den = falling(&(a - k), -k)?;
    (!den.is_zero()).then(|| den.recip())
}

/// `a^{k rising} = a (a+1) ... (a+k-1)`.
pub fn rising(a: &BigInt, k: u64) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, i| acc * (a + i))
}

/// `x^{k rising} / k!`, always an integer.
pub fn rising_over_factorial(a: &BigInt, k: u64) -> BigInt {
    let (q, r) = rising(a, k).div_rem(&factorial(k));
    debug_assert!(r.is_zero());
    q
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation_int(x: &BigInt, p: u32) -> u64 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut n = x.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return v;
        }
        n = q;
        v += 1;
    }
}

/// `p`-adic valuation of a rational; `None` for zero (infinite valuation).
pub fn valuation(x: &BigRational, p: u32) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    Some(valuation_int(x.numer(), p) as i64 - valuation_int(x.denom(), p) as i64)
}

/// `binomial(n, k)` reduced mod a prime `p`, by Lucas' theorem.
pub fn binomial_mod(mut n: u64, mut k: u64, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    while k > 0 || n > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        acc = acc * small_binomial(nd, kd, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binomial(n: u64, k: u64, p: u64) -> u64 {
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num = num * ((n - i) % p) % p;
        den = den * ((i + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    acc
}

/// Exact binomial coefficient as a big integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}
