use assprime::ass::{ass_module, ass_of_powers, irreducible_decomposition_splitting};
use assprime::corpus::{Corpus, CorpusParams};
use assprime::sums::{
    asymptotic_ass_sum, verify_decomposition, verify_sum_formula, AsymptoticStatus,
};
use assprime::{AssSet, MonomialIdeal};
use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::commands::Outcome;
use crate::error::CliError;
use crate::report::Caveats;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FuzzMode {
    /// Closed-form Ass((I+J)^n) against direct computation, n = 1..max-n.
    SumVerify,
    /// Decomposition route against witness route and the splitting decomposition.
    AssRoutes,
    /// Degreewise decomposition of (I+J)^(n-1)/(I+J)^n up to degree 10.
    Decomposition,
    /// Asymptotic formula with window max-n.
    Asymptotic,
}

#[derive(Debug, Clone, Args)]
pub struct FuzzArgs {
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub count: usize,
    #[arg(long, default_value_t = 3)]
    pub max_vars: usize,
    #[arg(long, default_value_t = 4)]
    pub max_gens: usize,
    #[arg(long, default_value_t = 4)]
    pub max_deg: u32,
    #[arg(long, default_value_t = 4)]
    pub max_n: u32,
    #[arg(long, value_enum, default_value_t = FuzzMode::SumVerify)]
    pub mode: FuzzMode,
    /// Worker threads; 0 uses one per core.
    #[arg(long, env = "ASSPRIME_JOBS", default_value_t = 0)]
    pub jobs: usize,
}

enum Verdict {
    Pass,
    Fail(Value),
    Error(String),
}

fn check_pair(
    mode: FuzzMode,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    max_n: u32,
) -> assprime::Result<Option<Value>> {
    match mode {
        FuzzMode::SumVerify => {
            for n in 1..=max_n {
                let r = verify_sum_formula(i, j, n)?;
                if !r.passed() {
                    return Ok(Some(serde_json::to_value(r).expect("serializable")));
                }
            }
        }
        FuzzMode::Decomposition => {
            for n in 1..=max_n {
                let r = verify_decomposition(i, j, n, 10)?;
                if !r.holds {
                    return Ok(Some(serde_json::to_value(r).expect("serializable")));
                }
            }
        }
        FuzzMode::Asymptotic => {
            let r = asymptotic_ass_sum(i, j, max_n)?;
            if r.status == AsymptoticStatus::Violation {
                return Ok(Some(serde_json::to_value(r).expect("serializable")));
            }
        }
        FuzzMode::AssRoutes => unreachable!("single-ideal mode"),
    }
    Ok(None)
}

fn check_ideal(i: &MonomialIdeal, max_n: u32) -> assprime::Result<Option<Value>> {
    let decomposition = ass_of_powers(i, max_n)?;
    let powers = i.powers_up_to(max_n)?;
    let unit = &powers[0];
    for (k, expected) in decomposition.iter().enumerate() {
        let power = &powers[k + 1];
        let witness = ass_module(unit, power)?;
        let splitting: AssSet = irreducible_decomposition_splitting(power)?
            .iter()
            .map(|c| c.support())
            .collect();
        if &witness != expected || &splitting != expected {
            return Ok(Some(json!({
                "n": k + 1,
                "decomposition_route": expected,
                "witness_route": witness,
                "splitting_route": splitting,
            })));
        }
    }
    Ok(None)
}

#[derive(Serialize)]
struct FuzzSummary {
    mode: FuzzMode,
    seed: u64,
    count: usize,
    max_vars: usize,
    max_gens: usize,
    max_deg: u32,
    max_n: u32,
    passed: usize,
    failed: usize,
    errors: usize,
    summary: String,
    first_counterexample: Option<Value>,
    first_error: Option<Value>,
}

pub fn run(args: &FuzzArgs) -> Result<Outcome, CliError> {
    let params = CorpusParams::new(args.max_vars, args.max_gens, args.max_deg)?;
    if args.max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    let instances: Vec<(MonomialIdeal, Option<MonomialIdeal>)> = if args.mode == FuzzMode::AssRoutes
    {
        Corpus::ideals(args.seed, params, args.count)
            .into_iter()
            .map(|i| (i, None))
            .collect()
    } else {
        Corpus::pairs(args.seed, params, args.count)
            .into_iter()
            .map(|(i, j)| (i, Some(j)))
            .collect()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    let verdicts: Vec<Verdict> = pool.install(|| {
        instances
            .par_iter()
            .map(|(i, j)| {
                let r = match j {
                    Some(j) => check_pair(args.mode, i, j, args.max_n),
                    None => check_ideal(i, args.max_n),
                };
                match r {
                    Ok(None) => Verdict::Pass,
                    Ok(Some(detail)) => Verdict::Fail(detail),
                    Err(e) => Verdict::Error(e.to_string()),
                }
            })
            .collect()
    });

    let dump = |k: usize, detail: Value| {
        let (i, j) = &instances[k];
        json!({"index": k, "left": i, "right": j, "detail": detail})
    };
    let (mut passed, mut failed, mut errors) = (0, 0, 0);
    let mut first_counterexample = None;
    let mut first_error = None;
    for (k, v) in verdicts.into_iter().enumerate() {
        match v {
            Verdict::Pass => passed += 1,
            Verdict::Fail(detail) => {
                failed += 1;
                first_counterexample.get_or_insert_with(|| dump(k, detail));
            }
            Verdict::Error(msg) => {
                errors += 1;
                first_error.get_or_insert_with(|| dump(k, Value::String(msg)));
            }
        }
    }
    let mut summary = format!("{passed}/{} match", args.count);
    if errors > 0 {
        summary.push_str(&format!(", {errors} errors"));
    }
    let report = FuzzSummary {
        mode: args.mode,
        seed: args.seed,
        count: args.count,
        max_vars: args.max_vars,
        max_gens: args.max_gens,
        max_deg: args.max_deg,
        max_n: args.max_n,
        passed,
        failed,
        errors,
        summary,
        first_counterexample,
        first_error,
    };
    let caveats = Caveats {
        windowed: true,
        char_proxy: false,
    };
    Outcome::new(report, caveats, failed > 0)
}
