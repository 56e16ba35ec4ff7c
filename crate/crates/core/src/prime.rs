use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::Result;
use crate::ideal::MonomialIdeal;
use crate::ring::{Ring, Side};

/// The monomial prime `(x_i : i in support)`; an empty support is `(0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PrimeSupport {
    ring: Ring,
    support: Vec<usize>,
}

/// A canonically sorted, duplicate-free set of monomial primes.
pub type AssSet = BTreeSet<PrimeSupport>;

impl PrimeSupport {
    pub fn new(ring: Ring, mut support: Vec<usize>) -> Self {
        support.sort_unstable();
        support.dedup();
        debug_assert!(support.iter().all(|&i| i < ring.nvars()));
        PrimeSupport { ring, support }
    }

    pub fn from_names<S: AsRef<str>>(ring: &Ring, names: &[S]) -> Option<Self> {
        let support = names
            .iter()
            .map(|n| ring.index_of(n.as_ref()))
            .collect::<Option<Vec<_>>>()?;
        Some(Self::new(ring.clone(), support))
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn names(&self) -> Vec<String> {
        self.support
            .iter()
            .map(|&i| self.ring.var(i).to_string())
            .collect()
    }

    pub fn is_subset_of(&self, other: &PrimeSupport) -> bool {
        self.support
            .iter()
            .all(|i| other.support.binary_search(i).is_ok())
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::prime(self.ring.clone(), &self.support)
    }

    /// Re-index into the `side` block of the joined ring `into`.
    pub fn lift(&self, into: &Ring, side: Side) -> Result<PrimeSupport> {
        let offset = into.block_offset(&self.ring, side)?;
        Ok(PrimeSupport {
            ring: into.clone(),
            support: self.support.iter().map(|i| i + offset).collect(),
        })
    }

    /// `p + q` for primes on disjoint blocks of `joined`; already prime, so no `Min` step.
    pub fn disjoint_sum(p: &PrimeSupport, q: &PrimeSupport, joined: &Ring) -> Result<PrimeSupport> {
        let mut support = p.lift(joined, Side::Left)?.support;
        support.extend(q.lift(joined, Side::Right)?.support);
        Ok(PrimeSupport::new(joined.clone(), support))
    }
}

/// Orders by size first, then by sorted indices, so minimal primes tend to come first.
impl Ord for PrimeSupport {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring
            .cmp(&other.ring)
            .then_with(|| self.support.len().cmp(&other.support.len()))
            .then_with(|| self.support.cmp(&other.support))
    }
}

impl PartialOrd for PrimeSupport {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.support.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "({})", self.names().join(","))
    }
}

impl fmt::Debug for PrimeSupport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the array of variable names in ring order.
impl Serialize for PrimeSupport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.support.len()))?;
        for &i in &self.support {
            seq.serialize_element(self.ring.var(i))?;
        }
        seq.end()
    }
}

/// All pairwise disjoint sums `p + q` with `p` from `left` and `q` from `right`.
pub fn product_set(left: &AssSet, right: &AssSet, joined: &Ring) -> Result<AssSet> {
    let mut out = AssSet::new();
    for p in left {
        for q in right {
            out.insert(PrimeSupport::disjoint_sum(p, q, joined)?);
        }
    }
    Ok(out)
}

/// The inclusion-minimal members of a set of primes.
pub fn minimal_primes(set: &AssSet) -> AssSet {
    set.iter()
        .filter(|p| !set.iter().any(|q| q != *p && q.is_subset_of(p)))
        .cloned()
        .collect()
}

pub fn format_set(set: &AssSet) -> String {
    let parts: Vec<String> = set.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disjoint_sum_concatenates_blocks() {
        let a = Ring::new(&["a", "b", "c"]).unwrap();
        let b = Ring::new(&["y"]).unwrap();
        let r = a.join(&b).unwrap();
        let p = PrimeSupport::new(a.clone(), vec![1, 0]);
        let q = PrimeSupport::new(b.clone(), vec![0]);
        let s = PrimeSupport::disjoint_sum(&p, &q, &r).unwrap();
        assert_eq!(s.names(), vec!["a", "b", "y"]);
    }

    #[test]
    fn sets_sort_by_size_then_indices() {
        let r = Ring::new(&["x", "y", "z"]).unwrap();
        let set: AssSet = [vec![0, 1, 2], vec![2], vec![0, 1]]
            .into_iter()
            .map(|s| PrimeSupport::new(r.clone(), s))
            .collect();
        assert_eq!(format_set(&set), "{(z), (x,y), (x,y,z)}");
        assert_eq!(format_set(&minimal_primes(&set)), "{(z), (x,y)}");
    }
}
