//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use assprime::ass::{ass_module, irreducible_decomposition};
use assprime::corpus::{Corpus, CorpusParams};
use assprime::gb::named_example;
use assprime::persistence::{
    lemma_equivalences_check, persistence_check, persistence_transfer_check, ratliff_rush,
    socle_colon_check, TransferStatus,
};
use assprime::sums::{
    asymptotic_ass_sum, verify_decomposition, verify_sum_formula, AsymptoticStatus,
};
use assprime::{ass_ring_quotient, AssSet, MonomialIdeal, PrimeSupport, Ring, Side};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn failure_ideal() -> MonomialIdeal {
    let r = Ring::new(&["a", "b", "c"]).unwrap();
    MonomialIdeal::from_exponents(
        r,
        &[
            vec![4, 0, 0],
            vec![3, 1, 0],
            vec![1, 3, 0],
            vec![0, 4, 0],
            vec![2, 2, 1],
        ],
    )
    .unwrap()
}

fn primes(ring: &Ring, sets: &[&[&str]]) -> AssSet {
    sets.iter()
        .map(|s| PrimeSupport::from_names(ring, s).unwrap())
        .collect()
}

fn criterion_1() -> Outcome {
    let i = failure_ideal();
    let r = i.ring().clone();
    let mut ok = ass_ring_quotient(&i).unwrap() == primes(&r, &[&["a", "b"], &["a", "b", "c"]]);
    let ab = MonomialIdeal::from_exponents(r.clone(), &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
    for n in 2..=5 {
        let p = i.power(n).unwrap();
        ok &= ass_ring_quotient(&p).unwrap() == primes(&r, &[&["a", "b"]]);
        ok &= p == ab.power(4 * n).unwrap();
    }
    outcome(ok, "Ass(A/I), Ass(A/I^n) and I^n = (a,b)^(4n) for n = 2..5")
}

fn criterion_2() -> Outcome {
    let pairs = Corpus::pairs(2, CorpusParams::new(3, 4, 4).unwrap(), 200);
    let mut bad = 0;
    for (i, j) in &pairs {
        for n in 1..=4 {
            let r = verify_sum_formula(i, j, n).unwrap();
            if !(r.matches && r.sandwich) {
                bad += 1;
            }
        }
    }
    outcome(
        bad == 0,
        format!("{} pairs x n = 1..4, {bad} mismatches", pairs.len()),
    )
}

/// Brute force: `p_S ∈ Ass(A/I)` iff some monomial `m ∉ I` in the exponent box has `I : m = p_S`.
fn full_box_ass(ideal: &MonomialIdeal) -> AssSet {
    let gens: Vec<Vec<u32>> = ideal.gens().iter().map(|g| g.exps().to_vec()).collect();
    let n = ideal.ring().nvars();
    let bounds = ideal.max_exponents();
    let mut out = AssSet::new();
    let mut m = vec![0u32; n];
    loop {
        let in_ideal = gens.iter().any(|g| g.iter().zip(&m).all(|(a, b)| a <= b));
        if !in_ideal {
            let colon: Vec<Vec<u32>> = gens
                .iter()
                .map(|g| {
                    g.iter()
                        .zip(&m)
                        .map(|(a, b)| a.saturating_sub(*b))
                        .collect()
                })
                .collect();
            let minimal: Vec<&Vec<u32>> = colon
                .iter()
                .filter(|c| {
                    !colon
                        .iter()
                        .any(|d| d != *c && d.iter().zip(c.iter()).all(|(x, y)| x <= y))
                })
                .collect();
            if minimal.iter().all(|c| c.iter().sum::<u32>() == 1) {
                let support: BTreeSet<usize> = minimal
                    .iter()
                    .map(|c| c.iter().position(|&e| e == 1).unwrap())
                    .collect();
                out.insert(PrimeSupport::new(
                    ideal.ring().clone(),
                    support.into_iter().collect(),
                ));
            }
        }
        let mut k = 0;
        while k < n && m[k] == bounds[k] {
            m[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        m[k] += 1;
    }
    out
}

fn criterion_3() -> Outcome {
    let ideals = Corpus::ideals(3, CorpusParams::new(4, 5, 5).unwrap(), 500);
    let mut bad = 0;
    for i in &ideals {
        let decomposition: AssSet = irreducible_decomposition(i)
            .unwrap()
            .iter()
            .map(|c| c.support())
            .collect();
        let witness = ass_module(&MonomialIdeal::unit(i.ring().clone()), i).unwrap();
        let brute = full_box_ass(i);
        if decomposition != witness || witness != brute {
            bad += 1;
        }
    }
    outcome(
        bad == 0,
        format!(
            "{} ideals, {bad} mismatches among three routes",
            ideals.len()
        ),
    )
}

fn criterion_4() -> Outcome {
    let pairs = Corpus::pairs(4, CorpusParams::new(3, 4, 4).unwrap(), 50);
    let mut bad = 0;
    for (i, j) in &pairs {
        for n in 1..=3 {
            bad += usize::from(!verify_decomposition(i, j, n, 10).unwrap().holds);
        }
        let joined = i.ring().join(j.ring()).unwrap();
        let li = i.lift(&joined, Side::Left).unwrap();
        let lj = j.lift(&joined, Side::Right).unwrap();
        bad += usize::from(li.intersect(&lj).unwrap() != li.multiply(&lj).unwrap());
    }
    outcome(
        bad == 0,
        format!(
            "{} pairs, n <= 3, degrees <= 10, {bad} failures",
            pairs.len()
        ),
    )
}

fn corpus_ideals() -> Vec<MonomialIdeal> {
    Corpus::ideals(5, CorpusParams::new(3, 4, 4).unwrap(), 200)
}

fn criterion_5() -> Outcome {
    let ideals = corpus_ideals();
    let mut bad = 0;
    for i in &ideals {
        let p = i.powers_up_to(4).unwrap();
        for n in 1..=4 {
            bad += usize::from(
                ass_ring_quotient(&p[n]).unwrap() != ass_module(&p[n - 1], &p[n]).unwrap(),
            );
        }
    }
    outcome(
        bad == 0,
        format!("{} ideals, n <= 4, {bad} violations", ideals.len()),
    )
}

fn criterion_6() -> Outcome {
    let ideals = corpus_ideals();
    let mut bad = 0;
    let mut strong = 0;
    for i in ideals.iter().take(100) {
        let r = lemma_equivalences_check(i, 4).unwrap();
        bad += usize::from(!(r.agree && r.implication_holds));
        if r.strongly_persistent() {
            strong += 1;
            bad += usize::from(!persistence_check(i, 4).unwrap().persistent());
        }
    }
    // random corpora are almost always strongly persistent; add ideals with gaps
    let xy = Ring::new(&["x", "y"]).unwrap();
    let mut gapped = vec![failure_ideal()];
    for a in 4..=7 {
        let g = vec![vec![a, 0], vec![a - 1, 1], vec![1, a - 1], vec![0, a]];
        gapped.push(MonomialIdeal::from_exponents(xy.clone(), &g).unwrap());
    }
    let mut gapped_failures = 0;
    for i in &gapped {
        let r = lemma_equivalences_check(i, 4).unwrap();
        bad += usize::from(!(r.agree && r.implication_holds));
        gapped_failures += usize::from(!r.strongly_persistent());
    }
    let s5 = lemma_equivalences_check(&failure_ideal(), 4).unwrap();
    let failure_fails = !s5.colon_condition[0];

    // Ratliff-Rush closure of (x^4,x^3y,xy^3,y^4) from the colon chain computed here
    let r = Ring::new(&["x", "y"]).unwrap();
    let q =
        MonomialIdeal::from_exponents(r.clone(), &[vec![4, 0], vec![3, 1], vec![1, 3], vec![0, 4]])
            .unwrap();
    let m4 = MonomialIdeal::maximal_power(r, 4);
    let c1 = q.power(2).unwrap().colon_ideal(&q).unwrap();
    let c2 = q
        .power(3)
        .unwrap()
        .colon_ideal(&q.power(2).unwrap())
        .unwrap();
    let oracle_ok = m4.is_subset_of(&c1).unwrap() && c1 == c2 && c1 == m4;
    let closure_ok = ratliff_rush(&q, 10).unwrap().closure == m4;
    outcome(
        bad == 0 && failure_fails && oracle_ok && closure_ok && gapped_failures == gapped.len(),
        format!(
            "100 corpus ideals ({strong} strongly persistent) and {} gapped ideals ({gapped_failures} not strongly persistent), {bad} disagreements; first example fails colon at n=1: {failure_fails}; closure (x,y)^4: {}",
            gapped.len(),
            oracle_ok && closure_ok
        ),
    )
}

fn criterion_7() -> Outcome {
    let ideals = corpus_ideals();
    let bad = ideals
        .iter()
        .filter(|i| !socle_colon_check(i, 4).unwrap().iter().all(|&b| b))
        .count();
    outcome(
        bad == 0,
        format!("{} ideals, n = 2..4, {bad} violations", ideals.len()),
    )
}

fn named(name: &str) -> (bool, assprime::gb::NamedExampleReport) {
    let r = named_example(name, None, None).unwrap();
    (r.all_pass, r)
}

fn criterion_8() -> Outcome {
    let (ok, r) = named("gorenstein-char2");
    let ok = ok && r.generator_count == Some(36) && r.characteristic == 2 && r.dmax == 5;
    outcome(
        ok,
        format!(
            "GF(2), degree-2 generators {:?}, {} verdicts",
            r.generator_count,
            r.verdicts.len()
        ),
    )
}

fn criterion_9() -> Outcome {
    let (ok, r) = named("gr-depth-zero");
    outcome(
        ok && r.char_proxy && r.characteristic == 32003,
        format!(
            "{} verdicts over GF({})",
            r.verdicts.len(),
            r.characteristic
        ),
    )
}

fn criterion_10() -> Outcome {
    let (ok, r) = named("derivative-remark");
    outcome(
        ok && r.verdicts.len() == 4 && r.char_proxy,
        format!(
            "{} verdicts over GF({})",
            r.verdicts.len(),
            r.characteristic
        ),
    )
}

fn criterion_11() -> Outcome {
    let pairs = Corpus::pairs(11, CorpusParams::new(3, 4, 4).unwrap(), 50);
    let (mut verified, mut inconclusive, mut violations) = (0, 0, 0);
    for (i, j) in &pairs {
        match asymptotic_ass_sum(i, j, 6).unwrap().status {
            AsymptoticStatus::Verified => verified += 1,
            AsymptoticStatus::Inconclusive => inconclusive += 1,
            AsymptoticStatus::Violation => violations += 1,
        }
    }
    outcome(
        violations == 0,
        format!("{} pairs, window 6: {verified} verified, {inconclusive} inconclusive, {violations} violations", pairs.len()),
    )
}

fn criterion_12() -> Outcome {
    let pairs = Corpus::pairs(12, CorpusParams::new(3, 4, 4).unwrap(), 100);
    let (mut checked, mut bad) = (0, 0);
    for (i, j) in &pairs {
        match persistence_transfer_check(i, j, 4).unwrap().status {
            TransferStatus::Passed => checked += 1,
            TransferStatus::Violation => {
                checked += 1;
                bad += 1
            }
            TransferStatus::HypothesisNotMet => {}
        }
    }
    outcome(
        bad == 0,
        format!(
            "{} pairs, {checked} with persistent left ideal, {bad} violations",
            pairs.len()
        ),
    )
}

type Criterion = (u32, &'static str, fn() -> Outcome, Option<Duration>);

fn main() {
    let criteria: [Criterion; 12] = [
        (
            1,
            "persistence counterexample regression",
            criterion_1,
            Some(Duration::from_secs(5)),
        ),
        (
            2,
            "monomial sum formula vs direct",
            criterion_2,
            Some(Duration::from_secs(300)),
        ),
        (
            3,
            "three Ass routes agree",
            criterion_3,
            Some(Duration::from_secs(300)),
        ),
        (
            4,
            "degreewise decomposition and I∩J = IJ",
            criterion_4,
            Some(Duration::from_secs(120)),
        ),
        (5, "Ass(A/I^n) = Ass(I^(n-1)/I^n)", criterion_5, None),
        (
            6,
            "colon, intersection and Ratliff-Rush conditions",
            criterion_6,
            None,
        ),
        (7, "I^n : m ⊆ I^(n-1)", criterion_7, None),
        (8, "Gorenstein example over GF(2)", criterion_8, None),
        (
            9,
            "graded-depth-zero memberships",
            criterion_9,
            Some(Duration::from_secs(120)),
        ),
        (
            10,
            "derivative ideal memberships",
            criterion_10,
            Some(Duration::from_secs(60)),
        ),
        (11, "asymptotic primes of sums", criterion_11, None),
        (12, "persistence transfer to sums", criterion_12, None),
    ];
    let mut failures = 0;
    for (k, name, run, budget) in criteria {
        let start = Instant::now();
        let o = run();
        let elapsed = start.elapsed();
        let in_time = budget.is_none_or(|b| elapsed <= b);
        let passed = o.passed && in_time;
        failures += usize::from(!passed);
        let budget_note = match (budget, in_time) {
            (Some(b), false) => format!(", over budget of {} s", b.as_secs()),
            _ => String::new(),
        };
        println!(
            "criterion {k:>2} {}: {name}: {} ({:.2} s{budget_note})",
            if passed { "PASS" } else { "FAIL" },
            o.detail,
            elapsed.as_secs_f64()
        );
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
