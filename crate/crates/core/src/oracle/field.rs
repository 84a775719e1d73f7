//! Arithmetic in `F_p` for primes below `2^32`.

use strength_reduce::StrengthReducedU64;

use crate::error::{Error, Result};

pub const MERSENNE_31: u64 = (1 << 31) - 1;

/// Reduction of values below `2^64` modulo the field characteristic.
pub(crate) trait Reduce: Copy {
    fn reduce(self, x: u64) -> u64;
}

#[derive(Clone, Copy)]
pub(crate) struct Mersenne31;

impl Reduce for Mersenne31 {
    #[inline(always)]
    fn reduce(self, x: u64) -> u64 {
        let r = (x & MERSENNE_31) + (x >> 31);
        let r = (r & MERSENNE_31) + (r >> 31);
        if r >= MERSENNE_31 {
            r - MERSENNE_31
        } else {
            r
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) struct Generic(pub StrengthReducedU64);

impl Reduce for Generic {
    #[inline(always)]
    fn reduce(self, x: u64) -> u64 {
        x % self.0
    }
}

/// A prime field `F_p` with `p < 2^32`, so that `a*b + c` never overflows
/// `u64` for reduced operands.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n.is_multiple_of(f) {
            return false;
        }
        f += 1;
    }
    true
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 32 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element by Fermat.
    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mersenne_reduction_agrees_with_remainder() {
        let xs = [
            0u64,
            1,
            MERSENNE_31 - 1,
            MERSENNE_31,
            MERSENNE_31 + 1,
            u64::MAX,
            1 << 62,
            12345678901234567,
        ];
        for x in xs {
            assert_eq!(Mersenne31.reduce(x), x % MERSENNE_31, "{x}");
        }
        let p = MERSENNE_31;
        let worst = (p - 1) * (p - 1) + (p - 1);
        assert_eq!(Mersenne31.reduce(worst), worst % p);
    }

    #[test]
    fn primality_and_inverses() {
        assert!(PrimeField::new(MERSENNE_31).is_ok());
        assert!(PrimeField::new(4294967291).is_ok());
        assert_eq!(PrimeField::new(15), Err(Error::NotPrime(15)));
        assert!(PrimeField::new(1 << 32).is_err());
        let f = PrimeField::new(101).unwrap();
        for a in 1..101 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }
}
