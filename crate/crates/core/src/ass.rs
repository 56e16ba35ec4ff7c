//! Associated primes of monomial quotients.
//!
//! Two independent routes are provided: supports of an irredundant
//! irreducible decomposition (`A/I` only), and a per-support socle witness
//! search after localizing (works for any `U/V` with `V ⊆ U`).

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{minimal_generators, MonomialIdeal};
use crate::monomial::Monomial;
use crate::prime::{AssSet, PrimeSupport};
use crate::ring::Ring;

/// Above this many variables, candidate supports are restricted to unions of
/// generator supports instead of all nonempty subsets.
pub const FULL_SUBSET_ENUMERATION_MAX_VARS: usize = 20;

/// Largest witness box (after restricting to corner coordinates) searched per support.
pub const WITNESS_BOX_LIMIT: u64 = 4_000_000;

/// An irreducible monomial ideal `(x_i^{a_i} : i in keys)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IrreducibleComponent {
    ring: Ring,
    pure_powers: BTreeMap<usize, u32>,
}

impl IrreducibleComponent {
    pub fn new(ring: Ring, pure_powers: BTreeMap<usize, u32>) -> Result<Self> {
        if pure_powers
            .iter()
            .any(|(&i, &a)| i >= ring.nvars() || a == 0)
        {
            return Err(Error::Domain(
                "component exponents must be positive and in range".into(),
            ));
        }
        Ok(IrreducibleComponent { ring, pure_powers })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn pure_powers(&self) -> &BTreeMap<usize, u32> {
        &self.pure_powers
    }

    pub fn support(&self) -> PrimeSupport {
        PrimeSupport::new(
            self.ring.clone(),
            self.pure_powers.keys().copied().collect(),
        )
    }

    pub fn to_ideal(&self) -> MonomialIdeal {
        let n = self.ring.nvars();
        let gens = if self.pure_powers.is_empty() {
            vec![Monomial::one(n)]
        } else {
            self.pure_powers
                .iter()
                .map(|(&i, &a)| Monomial::pure_power(n, i, a))
                .collect()
        };
        MonomialIdeal::from_trusted(self.ring.clone(), gens)
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &IrreducibleComponent) -> bool {
        self.pure_powers
            .iter()
            .all(|(i, a)| other.pure_powers.get(i).is_some_and(|b| b <= a))
    }
}

impl Serialize for IrreducibleComponent {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        self.to_ideal().serialize(serializer)
    }
}

/// Insert `m` into a minimal canonical generator list, dropping what it divides.
fn insert_minimal(gens: &[Monomial], m: Monomial) -> Vec<Monomial> {
    if gens.iter().any(|g| g.divides(&m)) {
        return gens.to_vec();
    }
    let mut out: Vec<Monomial> = gens.iter().filter(|g| !m.divides(g)).cloned().collect();
    let pos = out.binary_search(&m).unwrap_or_else(|p| p);
    out.insert(pos, m);
    out
}

/// Generator with the largest support (first in canonical order on ties),
/// split at its largest variable power (lowest index on ties).
fn pivot(gens: &[Monomial]) -> Option<(usize, u32, &Monomial)> {
    let mut best: Option<&Monomial> = None;
    for g in gens {
        let s = g.support_size();
        if s >= 2 && best.is_none_or(|b| s > b.support_size()) {
            best = Some(g);
        }
    }
    let g = best?;
    let (i, &a) = g
        .exps()
        .iter()
        .enumerate()
        .fold((0, &0), |acc, (i, e)| if e > acc.1 { (i, e) } else { acc });
    Some((i, a, g))
}

/// Irredundant irreducible decomposition, adding one generator at a time.
///
/// With `I = C_1 ∩ ... ∩ C_k` irredundant and a new generator `g`, each
/// component that misses `g` is replaced by `C + (x_i^{g_i})` for `i` in the
/// support of `g`; components that contain another are then dropped. Kept
/// components are never redundant, so only the new ones are screened.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<IrreducibleComponent>> {
    ideal.require_proper_nonzero("irreducible decomposition")?;
    let ring = ideal.ring();
    let n = ring.nvars();
    let gens = ideal.gens();

    // a component is a vector of pure-power exponents, 0 meaning absent
    let contains_mono = |c: &[u32], g: &[u32]| c.iter().zip(g).any(|(&a, &b)| a > 0 && a <= b);
    let subset = |small: &[u32], big: &[u32]| {
        // small ⊆ big
        small
            .iter()
            .zip(big)
            .all(|(&s, &b)| s == 0 || (b > 0 && b <= s))
    };

    let first = gens[0].exps();
    let mut comps: Vec<Vec<u32>> = (0..n)
        .filter(|&i| first[i] > 0)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = first[i];
            c
        })
        .collect();

    for g in &gens[1..] {
        let g = g.exps();
        let (kept, missing): (Vec<Vec<u32>>, Vec<Vec<u32>>) =
            comps.into_iter().partition(|c| contains_mono(c, g));
        let mut fresh: Vec<Vec<u32>> = Vec::new();
        for c in &missing {
            for i in 0..n {
                if g[i] > 0 {
                    let mut d = c.clone();
                    d[i] = g[i];
                    fresh.push(d);
                }
            }
        }
        fresh.sort_unstable();
        fresh.dedup();
        let mut next = kept;
        let base = next.len();
        for (k, d) in fresh.iter().enumerate() {
            let redundant = next[..base].iter().any(|e| subset(e, d))
                || fresh
                    .iter()
                    .enumerate()
                    .any(|(l, e)| l != k && subset(e, d));
            if !redundant {
                next.push(d.clone());
            }
        }
        comps = next;
    }

    let mut out: Vec<IrreducibleComponent> = comps
        .into_iter()
        .map(|c| IrreducibleComponent {
            ring: ring.clone(),
            pure_powers: c
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(i, &a)| (i, a))
                .collect(),
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Irredundant irreducible decomposition by binary splitting.
///
/// A mixed generator `g = u*v` with coprime `u = x_i^a` and `v = g/u` gives
/// `I = (I + (u)) ∩ (I + (v))`; leaves are ideals of pure powers. The pivot
/// is the generator with the largest support, split at its largest variable
/// power. Redundant leaves are removed afterwards, which suffices because
/// irreducible monomial ideals are meet-irreducible in the distributive
/// lattice of monomial ideals. The recursion tree is exponential in the
/// worst case, so this is meant for small ideals and cross-checks.
pub fn irreducible_decomposition_splitting(
    ideal: &MonomialIdeal,
) -> Result<Vec<IrreducibleComponent>> {
    ideal.require_proper_nonzero("irreducible decomposition")?;
    let ring = ideal.ring();
    let n = ring.nvars();

    let mut seen: HashSet<Vec<Monomial>> = HashSet::new();
    let mut leaves: BTreeSet<IrreducibleComponent> = BTreeSet::new();
    let mut stack = vec![ideal.gens().to_vec()];
    while let Some(gens) = stack.pop() {
        if seen.contains(&gens) {
            continue;
        }
        match pivot(&gens) {
            None => {
                let powers = gens
                    .iter()
                    .map(|g| {
                        let i = g.support()[0];
                        (i, g.exps()[i])
                    })
                    .collect();
                leaves.insert(IrreducibleComponent {
                    ring: ring.clone(),
                    pure_powers: powers,
                });
            }
            Some((i, a, g)) => {
                let u = Monomial::pure_power(n, i, a);
                let v = g.with_exp(i, 0);
                let left = insert_minimal(&gens, u);
                let right = insert_minimal(&gens, v);
                stack.push(right);
                stack.push(left);
            }
        }
        seen.insert(gens);
    }

    let leaves: Vec<IrreducibleComponent> = leaves.into_iter().collect();
    let kept = leaves
        .iter()
        .filter(|c| !leaves.iter().any(|d| d != *c && d.is_subset_of(c)))
        .cloned()
        .collect();
    Ok(kept)
}

/// `Ass(A/I)` as the supports of the irreducible components.
pub fn ass_ring_quotient(ideal: &MonomialIdeal) -> Result<AssSet> {
    Ok(irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::support)
        .collect())
}

fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    (1u64..(1u64 << n))
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Closure under union of the supports of the generators.
fn generator_support_unions(ideal: &MonomialIdeal) -> Vec<Vec<usize>> {
    let mut sets: BTreeSet<Vec<usize>> = ideal
        .gens()
        .iter()
        .map(Monomial::support)
        .filter(|s| !s.is_empty())
        .collect();
    loop {
        let current: Vec<Vec<usize>> = sets.iter().cloned().collect();
        let mut grew = false;
        for a in &current {
            for b in &current {
                let mut u: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
                u.sort_unstable();
                u.dedup();
                grew |= sets.insert(u);
            }
        }
        if !grew {
            return sets.into_iter().collect();
        }
    }
}

fn divides_any(gens: &[Monomial], m: &Monomial) -> bool {
    gens.iter().any(|g| g.divides(m))
}

/// Search for `m` with `m ∈ U`, `m ∉ V` and `m*x_k ∈ V` for every variable.
///
/// Both ideals are already localized to the support. A witness satisfies
/// `exp_k(m) = exp_k(g) - 1` for some generator `g` of `V`, so only those
/// corner values of the box `exp_k < D_k` are tried.
fn has_socle_witness(upper: &[Monomial], lower: &[Monomial], k: usize) -> Result<bool> {
    if lower.iter().any(Monomial::is_one) {
        return Ok(false);
    }
    let mut values: Vec<Vec<u32>> = Vec::with_capacity(k);
    for var in 0..k {
        let mut vs: Vec<u32> = lower
            .iter()
            .filter(|g| g.exps()[var] > 0)
            .map(|g| g.exps()[var] - 1)
            .collect();
        vs.sort_unstable();
        vs.dedup();
        if vs.is_empty() {
            return Ok(false);
        }
        values.push(vs);
    }
    let size = values
        .iter()
        .try_fold(1u64, |acc, v| acc.checked_mul(v.len() as u64))
        .unwrap_or(u64::MAX);
    if size > WITNESS_BOX_LIMIT {
        return Err(Error::size("witness box", size, WITNESS_BOX_LIMIT));
    }

    let mut candidates = Vec::with_capacity(size as usize);
    let mut idx = vec![0usize; k];
    loop {
        candidates.push(Monomial::new((0..k).map(|v| values[v][idx[v]]).collect()));
        let mut pos = 0;
        loop {
            if pos == k {
                break;
            }
            idx[pos] += 1;
            if idx[pos] < values[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
        if pos == k {
            break;
        }
    }
    // graded lexicographic scan; only existence matters
    candidates.sort_unstable();

    for m in &candidates {
        if divides_any(lower, m) || !divides_any(upper, m) {
            continue;
        }
        let socle = (0..k).all(|var| {
            let bumped = m
                .times_var(var)
                .expect("corner exponents are bounded by generator exponents");
            divides_any(lower, &bumped)
        });
        if socle {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `Ass(U/V)` by localizing at every candidate support and searching for a
/// socle witness.
pub fn ass_module(upper: &MonomialIdeal, lower: &MonomialIdeal) -> Result<AssSet> {
    upper.ring().check_same(lower.ring())?;
    if !lower.is_subset_of(upper)? {
        return Err(Error::Containment(format!(
            "{lower} is not contained in {upper}"
        )));
    }
    if lower == upper {
        return Ok(AssSet::new());
    }
    if lower.is_zero() {
        return Err(Error::Domain(
            "associated primes over the zero ideal are not monomial-localizable".into(),
        ));
    }
    let ring = upper.ring();
    let candidates = if ring.nvars() <= FULL_SUBSET_ENUMERATION_MAX_VARS {
        nonempty_subsets(ring.nvars())
    } else {
        generator_support_unions(lower)
    };
    let mut out = AssSet::new();
    for support in candidates {
        let u = upper.localize_gens(&support);
        let v = lower.localize_gens(&support);
        if has_socle_witness(&u, &v, support.len())? {
            out.insert(PrimeSupport::new(ring.clone(), support));
        }
    }
    Ok(out)
}

/// `Ass(A/I^i)` for `i = 1..=n`, via the decomposition route.
pub fn ass_of_powers(ideal: &MonomialIdeal, n: u32) -> Result<Vec<AssSet>> {
    ideal.require_proper_nonzero("associated primes of powers")?;
    let powers = ideal.powers_up_to(n)?;
    powers[1..].iter().map(ass_ring_quotient).collect()
}

/// `Ass(I^{i-1}/I^i)` for `i = 1..=n`, via the witness route.
pub fn ass_consecutive_quotients(ideal: &MonomialIdeal, n: u32) -> Result<Vec<AssSet>> {
    ideal.require_proper_nonzero("associated primes of powers")?;
    let powers = ideal.powers_up_to(n)?;
    powers
        .windows(2)
        .map(|w| ass_module(&w[0], &w[1]))
        .collect()
}

/// Associated primes of `A/I^n` and `I^{n-1}/I^n` for `n = 1..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssProfile {
    pub ideal: MonomialIdeal,
    pub max_n: u32,
    pub ass_ring_quotients: Vec<AssSet>,
    pub ass_consecutive: Vec<AssSet>,
    /// Least `m` from which both families are constant up to `max_n`; absent
    /// when only the last power is "constant".
    pub astab_window: Option<u32>,
    /// Always true: stabilization is only observed inside the window.
    pub windowed: bool,
}

impl AssProfile {
    /// `Ass(A/I^n)` (1-based).
    pub fn ring_quotient(&self, n: u32) -> &AssSet {
        &self.ass_ring_quotients[n as usize - 1]
    }

    pub fn consecutive(&self, n: u32) -> &AssSet {
        &self.ass_consecutive[n as usize - 1]
    }

    /// Union of `Ass(A/I^n)` over the window.
    pub fn ass_star(&self) -> AssSet {
        self.ass_ring_quotients.iter().flatten().cloned().collect()
    }

    /// `Ass(A/I^max_n)`, the stable set when `astab_window` is present.
    pub fn ass_infinity(&self) -> &AssSet {
        self.ass_ring_quotients.last().expect("max_n >= 1")
    }
}

fn constant_tail_start(a: &[AssSet], b: &[AssSet]) -> usize {
    let len = a.len();
    let mut m = len;
    while m > 1 && a[m - 2] == a[len - 1] && b[m - 2] == b[len - 1] {
        m -= 1;
    }
    m
}

pub fn ass_profile(ideal: &MonomialIdeal, max_n: u32) -> Result<AssProfile> {
    ideal.require_proper_nonzero("ass profile")?;
    if max_n == 0 {
        return Err(Error::InvalidParameter("max_n must be at least 1".into()));
    }
    let powers = ideal.powers_up_to(max_n)?;
    let ring_quotients = powers[1..]
        .iter()
        .map(ass_ring_quotient)
        .collect::<Result<Vec<_>>>()?;
    let consecutive = powers
        .windows(2)
        .map(|w| ass_module(&w[0], &w[1]))
        .collect::<Result<Vec<_>>>()?;
    let m = constant_tail_start(&ring_quotients, &consecutive);
    let astab_window = if m < max_n as usize {
        Some(m as u32)
    } else {
        None
    };
    Ok(AssProfile {
        ideal: ideal.clone(),
        max_n,
        ass_ring_quotients: ring_quotients,
        ass_consecutive: consecutive,
        astab_window,
        windowed: true,
    })
}

/// Whether the prefix unions of both families agree for every `n <= max_n`.
pub fn union_ass_check(profile: &AssProfile) -> bool {
    let mut left = AssSet::new();
    let mut right = AssSet::new();
    for (a, b) in profile
        .ass_ring_quotients
        .iter()
        .zip(&profile.ass_consecutive)
    {
        left.extend(a.iter().cloned());
        right.extend(b.iter().cloned());
        if left != right {
            return false;
        }
    }
    true
}

/// Whether an intersection of components equals `ideal` and no component can be dropped.
pub fn is_irredundant_decomposition(
    ideal: &MonomialIdeal,
    comps: &[IrreducibleComponent],
) -> Result<bool> {
    let intersect_all = |skip: Option<usize>| -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(ideal.ring().clone());
        for (k, c) in comps.iter().enumerate() {
            if Some(k) != skip {
                acc = acc.intersect(&c.to_ideal())?;
            }
        }
        Ok(acc)
    };
    if intersect_all(None)? != *ideal {
        return Ok(false);
    }
    for k in 0..comps.len() {
        if intersect_all(Some(k))? == *ideal {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Localize an ideal onto the variables `support`, returning generators on that sub-list.
pub fn localize(ideal: &MonomialIdeal, support: &[usize]) -> Vec<Monomial> {
    minimal_generators(ideal.gens().iter().map(|g| g.restrict(support)).collect())
}
