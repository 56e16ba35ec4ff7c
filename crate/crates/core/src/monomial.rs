use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// A monomial as a vector of nonnegative exponents.
///
/// The ordering is the canonical generator order: total degree first, then
/// lexicographic with the first variable largest (`x^2 < x*y < y^2`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u32]>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial {
            exps: exps.into_boxed_slice(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial::new(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial::new(e)
    }

    pub fn pure_power(nvars: usize, i: usize, a: u32) -> Self {
        let mut e = vec![0; nvars];
        e[i] = a;
        Monomial::new(e)
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn support_size(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Monomial::new(exps))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    /// `self / gcd(self, other)`, i.e. exponentwise `max(a - b, 0)`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }

    /// Exact quotient; `None` unless `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.divides(self) {
            Some(self.colon(other))
        } else {
            None
        }
    }

    pub fn with_exp(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.to_vec();
        exps[i] = e;
        Monomial::new(exps)
    }

    pub fn times_var(&self, i: usize) -> Result<Monomial> {
        let mut exps = self.exps.to_vec();
        exps[i] = exps[i].checked_add(1).ok_or(Error::Overflow)?;
        Ok(Monomial::new(exps))
    }

    /// Keep only the coordinates in `vars` (sets every other variable to 1).
    pub fn restrict(&self, vars: &[usize]) -> Monomial {
        Monomial::new(vars.iter().map(|&i| self.exps[i]).collect())
    }

    /// Embed into a ring of `total` variables starting at `offset`.
    pub fn pad(&self, offset: usize, total: usize) -> Monomial {
        let mut exps = vec![0; total];
        exps[offset..offset + self.nvars()].copy_from_slice(&self.exps);
        Monomial::new(exps)
    }

    /// Render in the ideal-file syntax, e.g. `x^2*y`; the unit monomial is `1`.
    pub fn display<'a>(&'a self, ring: &'a Ring) -> MonomialDisplay<'a> {
        MonomialDisplay { m: self, ring }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps)
    }
}

pub struct MonomialDisplay<'a> {
    m: &'a Monomial,
    ring: &'a Ring,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "{}", self.ring.var(i))?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![m(&[0, 2]), m(&[1, 1]), m(&[2, 0]), m(&[1, 0])];
        v.sort();
        assert_eq!(v, vec![m(&[1, 0]), m(&[2, 0]), m(&[1, 1]), m(&[0, 2])]);
    }

    #[test]
    fn colon_and_div() {
        assert_eq!(m(&[2, 1]).colon(&m(&[1, 0])), m(&[1, 1]));
        assert_eq!(m(&[2, 1]).colon(&m(&[3, 3])), m(&[0, 0]));
        assert_eq!(m(&[2, 1]).div(&m(&[0, 2])), None);
    }

    #[test]
    fn overflow_is_detected() {
        assert_eq!(m(&[u32::MAX]).mul(&m(&[1])), Err(Error::Overflow));
    }

    #[test]
    fn display() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        assert_eq!(m(&[2, 1, 0]).display(&r).to_string(), "x^2*y");
        assert_eq!(m(&[0, 0, 0]).display(&r).to_string(), "1");
    }
}
