use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{Ring, Side};

/// Largest number of degree-`d` monomials `hilbert_count` will enumerate.
pub const HILBERT_ENUMERATION_LIMIT: u64 = 10_000_000;

/// A monomial ideal stored by its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal is generated by the unit
/// monomial. Two ideals are equal exactly when their generator lists are.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

/// Sort canonically, drop duplicates and every generator divisible by another.
pub(crate) fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        // anything dividing g has degree <= deg g and so was seen earlier
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

pub fn minimalize(ring: &Ring, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
    MonomialIdeal::new(ring.clone(), gens)
}

impl MonomialIdeal {
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.nvars() != ring.nvars()) {
            return Err(Error::RingMismatch(format!(
                "monomial with {} exponents in {ring}",
                g.nvars()
            )));
        }
        Ok(Self::from_trusted(ring, gens))
    }

    pub(crate) fn from_trusted(ring: Ring, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            ring,
            gens: minimal_generators(gens),
        }
    }

    pub fn from_exponents(ring: Ring, gens: &[Vec<u32>]) -> Result<Self> {
        Self::new(
            ring,
            gens.iter().map(|e| Monomial::new(e.clone())).collect(),
        )
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: Ring) -> Self {
        let n = ring.nvars();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The prime `(x_i : i in support)`.
    pub fn prime(ring: Ring, support: &[usize]) -> Self {
        let n = ring.nvars();
        Self::from_trusted(ring, support.iter().map(|&i| Monomial::var(n, i)).collect())
    }

    /// `(x_1, ..., x_n)^d`, the ideal of all monomials of degree `d`.
    pub fn maximal_power(ring: Ring, d: u32) -> Self {
        let n = ring.nvars();
        let gens = monomials_of_degree(n, d as u64).collect();
        Self::from_trusted(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub(crate) fn require_proper_nonzero(&self, op: &str) -> Result<()> {
        if self.is_zero() {
            Err(Error::Domain(format!(
                "{op} is undefined for the zero ideal"
            )))
        } else if self.is_unit() {
            Err(Error::Domain(format!(
                "{op} is undefined for the unit ideal"
            )))
        } else {
            Ok(())
        }
    }

    /// Largest exponent of each variable among the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.ring.nvars()];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exps()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn max_generator_degree(&self) -> u64 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.ring.nvars() {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!(
                "monomial with {} exponents in {}",
                m.nvars(),
                self.ring
            )))
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`, decided on generators.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn add(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let gens = self.gens.iter().chain(other.gens.iter()).cloned().collect();
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    pub fn add_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        let mut gens = self.gens.clone();
        gens.push(m.clone());
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    pub fn multiply(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h)?);
            }
        }
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    /// `self^n`, minimalizing after every multiplication; `power(0)` is the unit ideal.
    pub fn power(&self, n: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.ring.clone());
        for _ in 0..n {
            acc = acc.multiply(self)?;
        }
        Ok(acc)
    }

    /// `[self^0, self^1, ..., self^n]`.
    pub fn powers_up_to(&self, n: u32) -> Result<Vec<MonomialIdeal>> {
        let mut out = Vec::with_capacity(n as usize + 1);
        out.push(MonomialIdeal::unit(self.ring.clone()));
        for k in 1..=n as usize {
            let next = out[k - 1].multiply(self)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(Self::from_trusted(self.ring.clone(), gens))
    }

    /// `self : m`, generated by `g / gcd(g, m)`.
    pub fn colon(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        Ok(self.colon_unchecked(m))
    }

    pub(crate) fn colon_unchecked(&self, m: &Monomial) -> MonomialIdeal {
        Self::from_trusted(
            self.ring.clone(),
            self.gens.iter().map(|g| g.colon(m)).collect(),
        )
    }

    /// `self : other`, the intersection of `self : h` over generators `h` of `other`.
    ///
    /// Rejects the zero ideal as divisor.
    pub fn colon_ideal(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        if other.is_zero() {
            return Err(Error::Domain("colon by the zero ideal".into()));
        }
        let mut acc: Option<MonomialIdeal> = None;
        for h in &other.gens {
            let c = self.colon_unchecked(h);
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
            if acc.as_ref().is_some_and(|a| a == self) {
                // the intersection only shrinks and always contains self
                break;
            }
        }
        Ok(acc.expect("nonzero divisor has generators"))
    }

    /// Colon by the ideal generated by all variables.
    pub fn colon_maximal(&self) -> Result<MonomialIdeal> {
        self.colon_ideal(&MonomialIdeal::maximal_power(self.ring.clone(), 1))
    }

    /// Pad generators with zeros into the `side` block of `into`.
    pub fn lift(&self, into: &Ring, side: Side) -> Result<MonomialIdeal> {
        let offset = into.block_offset(&self.ring, side)?;
        let total = into.nvars();
        Ok(MonomialIdeal {
            ring: into.clone(),
            gens: self.gens.iter().map(|g| g.pad(offset, total)).collect(),
        })
    }

    /// Set every variable outside `vars` to 1; the result lives on the sub-list `vars`.
    pub(crate) fn localize_gens(&self, vars: &[usize]) -> Vec<Monomial> {
        minimal_generators(self.gens.iter().map(|g| g.restrict(vars)).collect())
    }

    pub fn display(&self) -> String {
        self.to_string()
    }
}

/// `I + J` in the joined ring `A ⊗ B`.
pub fn sum_disjoint(left: &MonomialIdeal, right: &MonomialIdeal) -> Result<MonomialIdeal> {
    let joined = left.ring().join(right.ring())?;
    left.lift(&joined, Side::Left)?
        .add(&right.lift(&joined, Side::Right)?)
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    let k = k.min(n.saturating_sub(k));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// Number of monomials of degree `d` in `nvars` variables.
pub fn count_monomials_of_degree(nvars: usize, d: u64) -> Option<u64> {
    if nvars == 0 {
        return Some(if d == 0 { 1 } else { 0 });
    }
    binomial(d + nvars as u64 - 1, nvars as u64 - 1)
}

/// All exponent vectors of total degree `d`, in lexicographic order (first variable largest first).
pub fn monomials_of_degree(nvars: usize, d: u64) -> impl Iterator<Item = Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left as u32;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u32;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    if nvars > 0 {
        rec(0, d, &mut cur, &mut out);
    } else if d == 0 {
        out.push(Monomial::new(Vec::new()));
    }
    out.into_iter()
}

/// Number of degree-`d` monomials in `upper` but not in `lower`.
///
/// Requires `lower ⊆ upper`. Enumerates directly and refuses when there are
/// more than [`HILBERT_ENUMERATION_LIMIT`] monomials of degree `d`.
pub fn hilbert_count(upper: &MonomialIdeal, lower: &MonomialIdeal, d: u64) -> Result<u64> {
    if !lower.is_subset_of(upper)? {
        return Err(Error::Containment(format!(
            "{lower} is not contained in {upper}"
        )));
    }
    let nvars = upper.ring().nvars();
    let total = count_monomials_of_degree(nvars, d).unwrap_or(u64::MAX);
    if total > HILBERT_ENUMERATION_LIMIT {
        return Err(Error::size(
            "degree-d monomial count",
            total,
            HILBERT_ENUMERATION_LIMIT,
        ));
    }
    Ok(monomials_of_degree(nvars, d)
        .filter(|m| upper.contains_unchecked(m) && !lower.contains_unchecked(m))
        .count() as u64)
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g.display(&self.ring))?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}

impl Serialize for MonomialIdeal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|g| g.display(&self.ring).to_string())
            .collect();
        let mut s = serializer.serialize_struct("MonomialIdeal", 2)?;
        s.serialize_field("ring", self.ring.vars())?;
        s.serialize_field("gens", &gens)?;
        s.end()
    }
}
