//! Associated primes of powers of `I + J` for ideals in disjoint variables.

use serde::Serialize;

use crate::ass::{ass_consecutive_quotients, ass_of_powers, ass_profile, ass_ring_quotient};
use crate::error::{Error, Result};
use crate::ideal::{hilbert_count, sum_disjoint, MonomialIdeal};
use crate::prime::{product_set, AssSet};
use crate::ring::Ring;

/// `direct_ass_sum` refuses joined rings with more variables than this.
pub const DIRECT_MAX_VARS: usize = 12;
/// `direct_ass_sum` refuses sums whose generators exceed this degree.
pub const DIRECT_MAX_GEN_DEGREE: u64 = 12;

fn check_inputs(left: &MonomialIdeal, right: &MonomialIdeal, n: u32) -> Result<Ring> {
    left.require_proper_nonzero("sum formula (left ideal)")?;
    right.require_proper_nonzero("sum formula (right ideal)")?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    left.ring().join(right.ring())
}

/// Per-side associated-prime data for powers `1..=n`.
struct SideData {
    /// `Ass(A/I^i)` at index `i - 1`.
    ring_quotients: Vec<AssSet>,
    /// `Ass(I^{i-1}/I^i)` at index `i - 1`.
    consecutive: Vec<AssSet>,
}

impl SideData {
    fn new(ideal: &MonomialIdeal, n: u32) -> Result<Self> {
        Ok(SideData {
            ring_quotients: ass_of_powers(ideal, n)?,
            consecutive: ass_consecutive_quotients(ideal, n)?,
        })
    }
}

/// `⋃_{i=1..n} { p + q : p ∈ Ass(A/I^i), q ∈ Ass(B/J^{n-i+1}) }`.
pub fn formula_ass_sum(left: &MonomialIdeal, right: &MonomialIdeal, n: u32) -> Result<AssSet> {
    let joined = check_inputs(left, right, n)?;
    let a = ass_of_powers(left, n)?;
    let b = ass_of_powers(right, n)?;
    formula_from(&a, &b, n, &joined)
}

fn formula_from(a: &[AssSet], b: &[AssSet], n: u32, joined: &Ring) -> Result<AssSet> {
    let mut out = AssSet::new();
    for i in 1..=n as usize {
        out.extend(product_set(&a[i - 1], &b[n as usize - i], joined)?);
    }
    Ok(out)
}

/// The lower and upper bounds for `Ass(R/(I+J)^n)`, valid for arbitrary ideals.
///
/// Lower: pairs from `Ass(I^{i-1}/I^i)` and `Ass(J^{n-i}/J^{n-i+1})`.
/// Upper: pairs from `Ass(A/I^i)` and `Ass(J^{n-i}/J^{n-i+1})`.
pub fn bounds_ass_sum(
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    n: u32,
) -> Result<(AssSet, AssSet)> {
    let joined = check_inputs(left, right, n)?;
    let a = SideData::new(left, n)?;
    let b = SideData::new(right, n)?;
    bounds_from(&a, &b, n, &joined)
}

fn bounds_from(a: &SideData, b: &SideData, n: u32, joined: &Ring) -> Result<(AssSet, AssSet)> {
    let mut lower = AssSet::new();
    let mut upper = AssSet::new();
    for i in 1..=n as usize {
        let q = &b.consecutive[n as usize - i];
        lower.extend(product_set(&a.consecutive[i - 1], q, joined)?);
        upper.extend(product_set(&a.ring_quotients[i - 1], q, joined)?);
    }
    Ok((lower, upper))
}

/// Ground truth: decompose `(I+J)^n` in the joined ring.
pub fn direct_ass_sum(left: &MonomialIdeal, right: &MonomialIdeal, n: u32) -> Result<AssSet> {
    let joined = check_inputs(left, right, n)?;
    if joined.nvars() > DIRECT_MAX_VARS {
        return Err(Error::size(
            "joined variable count",
            joined.nvars() as u64,
            DIRECT_MAX_VARS as u64,
        ));
    }
    let q = sum_disjoint(left, right)?;
    let deg = q.max_generator_degree();
    if deg > DIRECT_MAX_GEN_DEGREE {
        return Err(Error::size(
            "generator degree of I+J",
            deg,
            DIRECT_MAX_GEN_DEGREE,
        ));
    }
    ass_ring_quotient(&q.power(n)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumAssReport {
    pub n: u32,
    pub lower_bound: AssSet,
    pub upper_bound: AssSet,
    pub formula_value: AssSet,
    pub direct_value: AssSet,
    #[serde(rename = "match")]
    pub matches: bool,
    /// `lower ⊆ direct ⊆ upper`.
    pub sandwich: bool,
}

impl SumAssReport {
    pub fn passed(&self) -> bool {
        self.matches && self.sandwich
    }
}

pub fn verify_sum_formula(
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    n: u32,
) -> Result<SumAssReport> {
    let joined = check_inputs(left, right, n)?;
    let a = SideData::new(left, n)?;
    let b = SideData::new(right, n)?;
    let formula_value = formula_from(&a.ring_quotients, &b.ring_quotients, n, &joined)?;
    let (lower_bound, upper_bound) = bounds_from(&a, &b, n, &joined)?;
    let direct_value = direct_ass_sum(left, right, n)?;
    let sandwich = lower_bound.is_subset(&direct_value) && direct_value.is_subset(&upper_bound);
    Ok(SumAssReport {
        n,
        matches: formula_value == direct_value,
        sandwich,
        lower_bound,
        upper_bound,
        formula_value,
        direct_value,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeCount {
    pub degree: u64,
    pub sum_side: u64,
    pub tensor_side: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionReport {
    pub n: u32,
    pub dmax: u64,
    pub counts: Vec<DegreeCount>,
    pub holds: bool,
}

/// Degreewise check of `Q^{n-1}/Q^n ≅ ⊕_i I^{i-1}/I^i ⊗ J^{n-i}/J^{n-i+1}` for `Q = I + J`.
pub fn verify_decomposition(
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    n: u32,
    dmax: u64,
) -> Result<DecompositionReport> {
    left.ring().join(right.ring())?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be at least 1".into()));
    }
    let q = sum_disjoint(left, right)?;
    let q_prev = q.power(n - 1)?;
    let q_n = q_prev.multiply(&q)?;
    let i_pows = left.powers_up_to(n)?;
    let j_pows = right.powers_up_to(n)?;

    // per-degree tables of h(I^{i-1}/I^i) and h(J^{k-1}/J^k)
    let table = |pows: &[MonomialIdeal]| -> Result<Vec<Vec<u64>>> {
        (1..pows.len())
            .map(|k| {
                (0..=dmax)
                    .map(|d| hilbert_count(&pows[k - 1], &pows[k], d))
                    .collect()
            })
            .collect()
    };
    let ti = table(&i_pows)?;
    let tj = table(&j_pows)?;

    let mut counts = Vec::with_capacity(dmax as usize + 1);
    for d in 0..=dmax {
        let sum_side = hilbert_count(&q_prev, &q_n, d)?;
        let mut tensor_side = 0u64;
        for i in 1..=n as usize {
            let a = &ti[i - 1];
            let b = &tj[n as usize - i];
            for da in 0..=d as usize {
                tensor_side += a[da] * b[d as usize - da];
            }
        }
        counts.push(DegreeCount {
            degree: d,
            sum_side,
            tensor_side,
        });
    }
    let holds = counts.iter().all(|c| c.sum_side == c.tensor_side);
    Ok(DecompositionReport {
        n,
        dmax,
        counts,
        holds,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AsymptoticStatus {
    /// Direct computation agrees with the asymptotic set on the whole checked range.
    Verified,
    /// The window is too short to observe stabilization of one side or to reach the threshold.
    Inconclusive,
    /// Some checked power disagrees.
    Violation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AsymptoticReport {
    pub window: u32,
    pub astab_i: Option<u32>,
    pub astab_j: Option<u32>,
    pub threshold: Option<u32>,
    pub asymptotic_set: AssSet,
    /// Inclusive range of powers checked against the direct computation.
    pub verified_range: Option<(u32, u32)>,
    pub direct_values: Vec<AssSet>,
    pub status: AsymptoticStatus,
    pub windowed: bool,
}

/// Windowed stabilization index and asymptotic primes of `I + J`.
///
/// The asymptotic set is `(Ass*(I) × Ass∞(J)) ∪ (Ass∞(I) × Ass*(J))`, with
/// `Ass*` the union over the window and `Ass∞` the last power's set.
pub fn asymptotic_ass_sum(
    left: &MonomialIdeal,
    right: &MonomialIdeal,
    window: u32,
) -> Result<AsymptoticReport> {
    let joined = check_inputs(left, right, window)?;
    let pi = ass_profile(left, window)?;
    let pj = ass_profile(right, window)?;
    let mut asymptotic_set = product_set(&pi.ass_star(), pj.ass_infinity(), &joined)?;
    asymptotic_set.extend(product_set(pi.ass_infinity(), &pj.ass_star(), &joined)?);

    let mut report = AsymptoticReport {
        window,
        astab_i: pi.astab_window,
        astab_j: pj.astab_window,
        threshold: None,
        asymptotic_set,
        verified_range: None,
        direct_values: Vec::new(),
        status: AsymptoticStatus::Inconclusive,
        windowed: true,
    };
    let (Some(ai), Some(aj)) = (pi.astab_window, pj.astab_window) else {
        return Ok(report);
    };
    let threshold = ai + aj - 1;
    report.threshold = Some(threshold);
    if threshold > window {
        return Ok(report);
    }
    report.verified_range = Some((threshold, window));
    report.status = AsymptoticStatus::Verified;
    for n in threshold..=window {
        let direct = direct_ass_sum(left, right, n)?;
        if direct != report.asymptotic_set {
            report.status = AsymptoticStatus::Violation;
        }
        report.direct_values.push(direct);
    }
    Ok(report)
}
