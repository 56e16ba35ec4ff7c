use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::gb::field::FieldSpec;
use crate::monomial::Monomial;
use crate::ring::Ring;

/// Graded reverse lexicographic comparison.
pub fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.exps().iter().zip(b.exps()).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

/// A monomial ordered by grevlex, for use as a map key.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct Grevlex(pub Monomial);

impl Ord for Grevlex {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(&self.0, &other.0)
    }
}

impl PartialOrd for Grevlex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse polynomial over a prime field, terms sorted by decreasing grevlex.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    field: FieldSpec,
    terms: Vec<(Monomial, u32)>,
}

impl Polynomial {
    pub fn new(ring: Ring, field: FieldSpec, terms: Vec<(Monomial, i64)>) -> Result<Self> {
        let mut acc: BTreeMap<Grevlex, u32> = BTreeMap::new();
        for (m, c) in terms {
            if m.nvars() != ring.nvars() {
                return Err(Error::RingMismatch(format!(
                    "term with {} exponents in {ring}",
                    m.nvars()
                )));
            }
            let e = acc.entry(Grevlex(m)).or_insert(0);
            *e = field.add(*e, field.reduce(c));
        }
        Ok(Self::from_map(ring, field, acc))
    }

    pub(crate) fn from_map(ring: Ring, field: FieldSpec, map: BTreeMap<Grevlex, u32>) -> Self {
        let terms = map
            .into_iter()
            .rev()
            .filter(|(_, c)| *c != 0)
            .map(|(m, c)| (m.0, c))
            .collect();
        Polynomial { ring, field, terms }
    }

    pub(crate) fn to_map(&self) -> BTreeMap<Grevlex, u32> {
        self.terms
            .iter()
            .map(|(m, c)| (Grevlex(m.clone()), *c))
            .collect()
    }

    pub fn zero(ring: Ring, field: FieldSpec) -> Self {
        Polynomial {
            ring,
            field,
            terms: Vec::new(),
        }
    }

    pub fn term(ring: Ring, field: FieldSpec, m: Monomial, c: i64) -> Result<Self> {
        Self::new(ring, field, vec![(m, c)])
    }

    pub fn var(ring: Ring, field: FieldSpec, i: usize) -> Self {
        let n = ring.nvars();
        Polynomial {
            ring,
            field,
            terms: vec![(Monomial::var(n, i), 1)],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, u32)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// Largest total degree of a term; 0 for the zero polynomial.
    pub fn degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let d = self.degree();
        self.terms.iter().all(|(m, _)| m.degree() == d)
    }

    pub(crate) fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        self.ring.check_same(&other.ring)?;
        if self.field != other.field {
            return Err(Error::Domain(format!(
                "field mismatch: GF({}) vs GF({})",
                self.field.characteristic(),
                other.field.characteristic()
            )));
        }
        Ok(())
    }

    fn combine(&self, other: &Polynomial, sign: bool) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut acc = self.to_map();
        for (m, c) in &other.terms {
            let e = acc.entry(Grevlex(m.clone())).or_insert(0);
            *e = if sign {
                self.field.add(*e, *c)
            } else {
                self.field.sub(*e, *c)
            };
        }
        Ok(Self::from_map(self.ring.clone(), self.field, acc))
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.combine(other, true)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.combine(other, false)
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = c % self.field.characteristic();
        let terms = if c == 0 {
            Vec::new()
        } else {
            self.terms
                .iter()
                .map(|(m, a)| (m.clone(), self.field.mul(*a, c)))
                .collect()
        };
        Polynomial {
            ring: self.ring.clone(),
            field: self.field,
            terms,
        }
    }

    /// `c * m * self`; multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Result<Polynomial> {
        let c = c % self.field.characteristic();
        if c == 0 {
            return Ok(Polynomial::zero(self.ring.clone(), self.field));
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| Ok((t.mul(m)?, self.field.mul(*a, c))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            field: self.field,
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut acc: BTreeMap<Grevlex, u32> = BTreeMap::new();
        for (m, a) in &self.terms {
            for (t, b) in &other.terms {
                let e = acc.entry(Grevlex(m.mul(t)?)).or_insert(0);
                *e = self.field.add(*e, self.field.mul(*a, *b));
            }
        }
        Ok(Self::from_map(self.ring.clone(), self.field, acc))
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.field.inv(c)),
        }
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Polynomial {
        let mut acc: BTreeMap<Grevlex, u32> = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exps()[i];
            if e == 0 {
                continue;
            }
            let coeff = self.field.mul(*c, self.field.reduce(e as i64));
            if coeff != 0 {
                acc.insert(Grevlex(m.with_exp(i, e - 1)), coeff);
            }
        }
        Self::from_map(self.ring.clone(), self.field, acc)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            match (*c, m.is_one()) {
                (1, false) => write!(f, "{}", m.display(&self.ring))?,
                (_, true) => write!(f, "{c}")?,
                _ => write!(f, "{c}*{}", m.display(&self.ring))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over GF({})", self.field.characteristic())
    }
}
