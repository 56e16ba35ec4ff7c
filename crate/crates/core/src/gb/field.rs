use serde::Serialize;

use crate::error::{Error, Result};

/// The prime field `GF(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct FieldSpec {
    characteristic: u32,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// Characteristics up to `2^31` keep every product inside `u64`.
    pub fn new(p: u64) -> Result<Self> {
        if p >= 1 << 31 {
            return Err(Error::InvalidParameter(format!(
                "characteristic {p} is too large"
            )));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec {
            characteristic: p as u32,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    /// Whether `1/2` exists, i.e. `p != 2`.
    pub fn has_half(&self) -> bool {
        self.characteristic != 2
    }

    pub fn reduce(&self, c: i64) -> u32 {
        c.rem_euclid(self.characteristic as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.characteristic as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        let p = self.characteristic as u64;
        ((a as u64 + p - b as u64) % p) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        self.sub(0, a)
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.characteristic as u64) as u32
    }

    pub fn pow(&self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.characteristic;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Inverse of a nonzero element.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.characteristic), "inverse of zero");
        self.pow(a, self.characteristic as u64 - 2)
    }
}
