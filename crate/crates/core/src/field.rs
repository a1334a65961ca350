//! Arithmetic in the prime field `F_p`.

use crate::error::{Error, Result};

/// Largest modulus accepted. Residues stay below `2^31` so a product of two
/// residues fits in a `u64` with room for a few lazy additions.
pub const MAX_MODULUS: u32 = (1 << 31) - 1;

/// The prime field `F_p` for a machine-word prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
    // Lemire fastmod constant: ceil(2^64 / p).
    magic: u64,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if p > MAX_MODULUS {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self {
            p,
            magic: (u64::MAX / p as u64).wrapping_add(1),
        })
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Reduce a `u32` into `[0, p)`.
    #[inline]
    pub fn reduce(&self, a: u32) -> u32 {
        let low = self.magic.wrapping_mul(a as u64);
        ((low as u128 * self.p as u128) >> 64) as u32
    }

    #[inline]
    pub fn reduce_u64(&self, a: u64) -> u32 {
        if a <= u32::MAX as u64 {
            self.reduce(a as u32)
        } else {
            (a % self.p as u64) as u32
        }
    }

    #[inline]
    pub fn reduce_i64(&self, a: i64) -> u32 {
        let r = a.rem_euclid(self.p as i64);
        r as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.reduce_u64(a as u64 * b as u64)
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// How many products of two residues can be summed in a `u64` before it
    /// must be reduced.
    #[inline]
    pub fn lazy_budget(&self) -> usize {
        let sq = (self.p as u64 - 1) * (self.p as u64 - 1);
        u64::MAX
            .checked_div(sq)
            .map_or(usize::MAX, |b| b.min(usize::MAX as u64) as usize)
    }
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let n = n as u64;
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
