//! Persistence of associated primes across powers, strong persistence and
//! the Ratliff–Rush closure.
//!
//! Every verdict here is "up to max_n": nothing is claimed about larger powers.

use serde::Serialize;

use crate::ass::ass_of_powers;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::prime::{AssSet, PrimeSupport};
use crate::sums::direct_ass_sum;

/// Default iteration cap for the Ratliff–Rush chain.
pub const DEFAULT_RATLIFF_RUSH_CAP: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PersistenceFailure {
    pub n: u32,
    /// A prime of `A/I^n` missing from `A/I^{n+1}` (the first in canonical order).
    pub witness: PrimeSupport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PersistenceReport {
    pub ideal: MonomialIdeal,
    pub max_n: u32,
    /// `Ass(A/I^n)` for `n = 1..=max_n`.
    pub ass_sets: Vec<AssSet>,
    /// `Ass(A/I^n) ⊆ Ass(A/I^{n+1})` for `n = 1..max_n`.
    pub inclusions: Vec<bool>,
    pub first_failure: Option<PersistenceFailure>,
    pub windowed: bool,
}

impl PersistenceReport {
    pub fn persistent(&self) -> bool {
        self.first_failure.is_none()
    }
}

fn check_window(max_n: u32) -> Result<()> {
    if max_n == 0 {
        Err(Error::InvalidParameter("max_n must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn inclusion_verdicts(sets: &[AssSet]) -> (Vec<bool>, Option<PersistenceFailure>) {
    let mut first_failure = None;
    let inclusions = sets
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            let missing = w[0].difference(&w[1]).next();
            if let (Some(p), None) = (missing, &first_failure) {
                first_failure = Some(PersistenceFailure {
                    n: k as u32 + 1,
                    witness: p.clone(),
                });
            }
            missing.is_none()
        })
        .collect();
    (inclusions, first_failure)
}

fn report_from_sets(ideal: MonomialIdeal, max_n: u32, ass_sets: Vec<AssSet>) -> PersistenceReport {
    let (inclusions, first_failure) = inclusion_verdicts(&ass_sets);
    PersistenceReport {
        ideal,
        max_n,
        ass_sets,
        inclusions,
        first_failure,
        windowed: true,
    }
}

pub fn persistence_check(ideal: &MonomialIdeal, max_n: u32) -> Result<PersistenceReport> {
    ideal.require_proper_nonzero("persistence check")?;
    check_window(max_n)?;
    let sets = ass_of_powers(ideal, max_n)?;
    Ok(report_from_sets(ideal.clone(), max_n, sets))
}

/// `target : base^k`, computed as `k` successive colons by `base`.
pub fn colon_by_power(
    target: &MonomialIdeal,
    base: &MonomialIdeal,
    k: u32,
) -> Result<MonomialIdeal> {
    let mut acc = target.clone();
    for _ in 0..k {
        acc = acc.colon_ideal(base)?;
    }
    Ok(acc)
}

/// Whether `I^{n+1} : I = I^n`, for `n = 1..=max_n`.
pub fn strong_persistence_check(ideal: &MonomialIdeal, max_n: u32) -> Result<Vec<bool>> {
    ideal.require_proper_nonzero("strong persistence check")?;
    check_window(max_n)?;
    let powers = ideal.powers_up_to(max_n + 1)?;
    (1..=max_n as usize)
        .map(|n| Ok(powers[n + 1].colon_ideal(ideal)? == powers[n]))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RatliffRushReport {
    pub closure: MonomialIdeal,
    pub stabilized_at: u32,
    pub cap_hit: bool,
    /// `C_i ⊆ C_{i+1}` held for every computed step.
    pub chain_ascending: bool,
}

/// Iterates `C_i = I^{i+1} : I^i` until two consecutive terms agree or `i` reaches `cap`.
pub fn ratliff_rush(ideal: &MonomialIdeal, cap: u32) -> Result<RatliffRushReport> {
    ideal.require_proper_nonzero("Ratliff-Rush closure")?;
    if cap == 0 {
        return Err(Error::InvalidParameter("cap must be at least 1".into()));
    }
    // C_i = (I^i : I^{i-1}) : I ... computed as colon of I^{i+1} by I, i times
    let mut power = ideal.power(2)?;
    let mut current = power.colon_ideal(ideal)?;
    let mut chain_ascending = true;
    for i in 1..cap {
        power = power.multiply(ideal)?;
        let next = colon_by_power(&power, ideal, i + 1)?;
        chain_ascending &= current.is_subset_of(&next)?;
        if next == current {
            return Ok(RatliffRushReport {
                closure: current,
                stabilized_at: i,
                cap_hit: false,
                chain_ascending,
            });
        }
        current = next;
    }
    Ok(RatliffRushReport {
        closure: current,
        stabilized_at: cap,
        cap_hit: true,
        chain_ascending,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaEquivalenceReport {
    pub max_n: u32,
    /// `I^{n+1} : I = I^n`.
    pub colon_condition: Vec<bool>,
    /// `(I^{n+1} : I) ∩ I^{n-1} = I^n`.
    pub intersection_condition: Vec<bool>,
    /// `I^n` equals its windowed Ratliff–Rush closure.
    pub ratliff_rush_condition: Vec<bool>,
    pub agree: bool,
    pub persistent: bool,
    /// The colon condition on the window implies persistence on the window.
    pub implication_holds: bool,
    /// The depth of the associated graded ring is not computed.
    pub depth_condition: Option<bool>,
    pub windowed: bool,
}

impl LemmaEquivalenceReport {
    pub fn strongly_persistent(&self) -> bool {
        self.colon_condition.iter().all(|&b| b)
    }
}

/// Evaluates the three computable equivalent conditions for `n = 1..=max_n`.
///
/// The Ratliff–Rush closures of the powers use the chain with cap `max_n`.
pub fn lemma_equivalences_check(
    ideal: &MonomialIdeal,
    max_n: u32,
) -> Result<LemmaEquivalenceReport> {
    ideal.require_proper_nonzero("equivalence check")?;
    check_window(max_n)?;
    let powers = ideal.powers_up_to(max_n + 1)?;
    let mut colon_condition = Vec::new();
    let mut intersection_condition = Vec::new();
    let mut ratliff_rush_condition = Vec::new();
    for n in 1..=max_n as usize {
        let c = powers[n + 1].colon_ideal(ideal)?;
        colon_condition.push(c == powers[n]);
        intersection_condition.push(c.intersect(&powers[n - 1])? == powers[n]);
        let rr = ratliff_rush(&powers[n], max_n)?;
        ratliff_rush_condition.push(rr.closure == powers[n]);
    }
    let all = |v: &[bool]| v.iter().all(|&b| b);
    let (a, b, c) = (
        all(&colon_condition),
        all(&intersection_condition),
        all(&ratliff_rush_condition),
    );
    let persistence = persistence_check(ideal, max_n)?;
    Ok(LemmaEquivalenceReport {
        max_n,
        agree: a == b && b == c,
        persistent: persistence.persistent(),
        implication_holds: !a || persistence.persistent(),
        colon_condition,
        intersection_condition,
        ratliff_rush_condition,
        depth_condition: None,
        windowed: true,
    })
}

/// Whether `I^n : m ⊆ I^{n-1}` for `n = 2..=max_n`, `m` the ideal of all variables.
pub fn socle_colon_check(ideal: &MonomialIdeal, max_n: u32) -> Result<Vec<bool>> {
    ideal.require_proper_nonzero("socle colon check")?;
    check_window(max_n)?;
    let powers = ideal.powers_up_to(max_n)?;
    (2..=max_n as usize)
        .map(|n| powers[n].colon_maximal()?.is_subset_of(&powers[n - 1]))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TransferStatus {
    /// The left ideal is not persistent on the window, so nothing is asserted.
    HypothesisNotMet,
    Passed,
    /// The sum failed persistence although the hypothesis held: an implementation bug.
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferReport {
    pub max_n: u32,
    pub left: PersistenceReport,
    pub sum: Option<PersistenceReport>,
    pub status: TransferStatus,
    pub windowed: bool,
}

/// If the left ideal is persistent up to `max_n`, checks that `I + J` is too.
pub fn persistence_transfer_check(
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    max_n: u32,
) -> Result<TransferReport> {
    right.require_proper_nonzero("persistence transfer (right ideal)")?;
    let joined = left.ring().join(right.ring())?;
    let left_report = persistence_check(left, max_n)?;
    if !left_report.persistent() {
        return Ok(TransferReport {
            max_n,
            left: left_report,
            sum: None,
            status: TransferStatus::HypothesisNotMet,
            windowed: true,
        });
    }
    let sets = (1..=max_n)
        .map(|n| direct_ass_sum(left, right, n))
        .collect::<Result<Vec<_>>>()?;
    let q = crate::ideal::sum_disjoint(left, right)?;
    debug_assert!(q.ring().same(&joined));
    let sum = report_from_sets(q, max_n, sets);
    let status = if sum.persistent() {
        TransferStatus::Passed
    } else {
        TransferStatus::Violation
    };
    Ok(TransferReport {
        max_n,
        left: left_report,
        sum: Some(sum),
        status,
        windowed: true,
    })
}
