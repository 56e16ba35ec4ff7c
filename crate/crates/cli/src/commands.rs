use std::collections::BTreeMap;
use std::path::PathBuf;

use assprime::ass::{ass_module, ass_profile, irreducible_decomposition, union_ass_check};
use assprime::gb::{named_example, NAMED_EXAMPLES};
use assprime::persistence::{
    lemma_equivalences_check, persistence_check, persistence_transfer_check, ratliff_rush,
    socle_colon_check, TransferStatus, DEFAULT_RATLIFF_RUSH_CAP,
};
use assprime::sums::{
    asymptotic_ass_sum, verify_decomposition, verify_sum_formula, AsymptoticStatus,
};
use assprime::{join_rings, parse_ideal_file, IdealFile, MonomialIdeal, Side};
use clap::{Args, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::fuzz::FuzzArgs;
use crate::report::{Caveats, InputDigest};

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Associated primes of A/I^n and I^(n-1)/I^n for n up to N.
    Ass {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(short, long, default_value_t = 4)]
        n: u32,
    },
    /// Associated primes of U/V for monomial ideals V ⊆ U.
    AssModule {
        file: PathBuf,
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
    },
    /// Compare the closed-form Ass((I+J)^n) with direct computation.
    SumVerify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short, long)]
        n: u32,
    },
    /// Windowed stabilization of Ass((I+J)^n) against the asymptotic formula.
    SumAsymptotic {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = 6)]
        window: u32,
    },
    /// Degreewise check of the decomposition of (I+J)^(n-1)/(I+J)^n.
    DecompVerify {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(short, long)]
        n: u32,
        #[arg(long, default_value_t = 10)]
        dmax: u64,
    },
    /// Persistence of Ass(A/I^n), optionally strong persistence and transfer to I+J.
    Persistence {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
        /// Also evaluate the colon, intersection and Ratliff-Rush conditions.
        #[arg(long)]
        strong: bool,
        /// File holding the right-hand ideal J for the transfer check.
        #[arg(long, requires = "right")]
        transfer: Option<PathBuf>,
        #[arg(long, requires = "transfer")]
        right: Option<String>,
    },
    /// Ratliff-Rush closure via the chain I^(i+1) : I^i.
    RatliffRush {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = DEFAULT_RATLIFF_RUSH_CAP)]
        cap: u32,
    },
    /// Check I^n : m ⊆ I^(n-1) for n = 2..N.
    SocleCheck {
        file: PathBuf,
        #[arg(long)]
        ideal: String,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
    /// Run a registered polynomial example with a truncated Gröbner basis.
    GbExample {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(NAMED_EXAMPLES))]
        name: String,
        #[arg(long = "char")]
        characteristic: Option<u64>,
        #[arg(long)]
        dmax: Option<u32>,
    },
    /// Seeded differential testing over a random corpus.
    Fuzz(FuzzArgs),
    /// Re-run a registered case and compare with its recorded expectations.
    Reproduce { case: String },
}

#[derive(Debug, Clone, Args)]
pub struct PairArgs {
    file_a: PathBuf,
    file_b: PathBuf,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

/// Outcome of a command before it is wrapped into a report.
pub struct Outcome {
    pub result: Value,
    pub caveats: Caveats,
    /// A check backed by a theorem failed.
    pub violation: bool,
}

impl Outcome {
    pub fn new(
        result: impl Serialize,
        caveats: Caveats,
        violation: bool,
    ) -> Result<Self, CliError> {
        Ok(Outcome {
            result: serde_json::to_value(result)?,
            caveats,
            violation,
        })
    }
}

const WINDOWED: Caveats = Caveats {
    windowed: true,
    char_proxy: false,
};

/// Source of input files: the file system or in-memory registry data.
pub trait Loader {
    fn read(&mut self, path: &std::path::Path) -> Result<String, CliError>;
}

pub struct FsLoader {
    pub digest: InputDigest,
}

impl Loader for FsLoader {
    fn read(&mut self, path: &std::path::Path) -> Result<String, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
        self.digest.update(text.as_bytes());
        Ok(text)
    }
}

pub struct MapLoader<'a> {
    pub files: &'a BTreeMap<String, String>,
    pub digest: InputDigest,
}

impl Loader for MapLoader<'_> {
    fn read(&mut self, path: &std::path::Path) -> Result<String, CliError> {
        let key = path.to_string_lossy();
        let text = self
            .files
            .get(key.as_ref())
            .ok_or_else(|| CliError::Usage(format!("registry file `{key}` missing")))?;
        self.digest.update(text.as_bytes());
        Ok(text.clone())
    }
}

fn load_file(loader: &mut dyn Loader, path: &std::path::Path) -> Result<IdealFile, CliError> {
    Ok(parse_ideal_file(&loader.read(path)?)?)
}

fn load_ideal(
    loader: &mut dyn Loader,
    path: &std::path::Path,
    name: &str,
) -> Result<MonomialIdeal, CliError> {
    Ok(load_file(loader, path)?.monomial_ideal(name)?)
}

fn load_pair(
    loader: &mut dyn Loader,
    pair: &PairArgs,
) -> Result<(MonomialIdeal, MonomialIdeal), CliError> {
    let left = load_ideal(loader, &pair.file_a, &pair.left)?;
    let right = load_ideal(loader, &pair.file_b, &pair.right)?;
    Ok((left, right))
}

pub fn execute(command: &Command, loader: &mut dyn Loader) -> Result<Outcome, CliError> {
    match command {
        Command::Ass { file, ideal, n } => {
            let ideal = load_ideal(loader, file, ideal)?;
            let profile = ass_profile(&ideal, *n)?;
            let decomposition = irreducible_decomposition(&ideal)?;
            let union_check = union_ass_check(&profile);
            let families_equal = profile.ass_ring_quotients == profile.ass_consecutive;
            Outcome::new(
                json!({
                    "profile": profile,
                    "irreducible_decomposition": decomposition,
                    "union_check": union_check,
                    "families_equal": families_equal,
                }),
                WINDOWED,
                !(union_check && families_equal),
            )
        }
        Command::AssModule { file, upper, lower } => {
            let f = load_file(loader, file)?;
            let u = f.monomial_ideal(upper)?;
            let v = f.monomial_ideal(lower)?;
            let ass = ass_module(&u, &v)?;
            Outcome::new(
                json!({"upper": u, "lower": v, "ass": ass}),
                Caveats::default(),
                false,
            )
        }
        Command::SumVerify { pair, n } => {
            let (i, j) = load_pair(loader, pair)?;
            let report = verify_sum_formula(&i, &j, *n)?;
            let violation = !report.passed();
            Outcome::new(report, Caveats::default(), violation)
        }
        Command::SumAsymptotic { pair, window } => {
            let (i, j) = load_pair(loader, pair)?;
            let report = asymptotic_ass_sum(&i, &j, *window)?;
            let violation = report.status == AsymptoticStatus::Violation;
            Outcome::new(report, WINDOWED, violation)
        }
        Command::DecompVerify { pair, n, dmax } => {
            let (i, j) = load_pair(loader, pair)?;
            let report = verify_decomposition(&i, &j, *n, *dmax)?;
            let joined = join_rings(i.ring(), j.ring())?;
            let li = i.lift(&joined, Side::Left)?;
            let lj = j.lift(&joined, Side::Right)?;
            let intersection_equals_product = li.intersect(&lj)? == li.multiply(&lj)?;
            let violation = !(report.holds && intersection_equals_product);
            Outcome::new(
                json!({
                    "decomposition": report,
                    "intersection_equals_product": intersection_equals_product,
                }),
                Caveats::default(),
                violation,
            )
        }
        Command::Persistence {
            file,
            ideal,
            max_n,
            strong,
            transfer,
            right,
        } => {
            let i = load_ideal(loader, file, ideal)?;
            let report = persistence_check(&i, *max_n)?;
            let mut violation = false;
            let mut out = json!({ "persistence": report });
            if *strong {
                let lemma = lemma_equivalences_check(&i, *max_n)?;
                violation |= !(lemma.agree && lemma.implication_holds);
                out["strong"] = serde_json::to_value(lemma)?;
            }
            if let (Some(path), Some(name)) = (transfer, right) {
                let j = load_ideal(loader, path, name)?;
                let t = persistence_transfer_check(&i, &j, *max_n)?;
                violation |= t.status == TransferStatus::Violation;
                out["transfer"] = serde_json::to_value(t)?;
            }
            Outcome::new(out, WINDOWED, violation)
        }
        Command::RatliffRush { file, ideal, cap } => {
            let i = load_ideal(loader, file, ideal)?;
            let report = ratliff_rush(&i, *cap)?;
            let violation = !report.chain_ascending;
            let caveats = Caveats {
                windowed: report.cap_hit,
                char_proxy: false,
            };
            Outcome::new(report, caveats, violation)
        }
        Command::SocleCheck { file, ideal, max_n } => {
            let i = load_ideal(loader, file, ideal)?;
            let verdicts = socle_colon_check(&i, *max_n)?;
            let checks: Vec<Value> = verdicts
                .iter()
                .enumerate()
                .map(|(k, holds)| json!({"n": k + 2, "holds": holds}))
                .collect();
            let all_hold = verdicts.iter().all(|&b| b);
            Outcome::new(
                json!({"checks": checks, "all_hold": all_hold}),
                WINDOWED,
                !all_hold,
            )
        }
        Command::GbExample {
            name,
            characteristic,
            dmax,
        } => {
            let report = named_example(name, *characteristic, *dmax)?;
            // Expectations are stated for the default characteristic only.
            let violation = characteristic.is_none() && !report.all_pass;
            let caveats = Caveats {
                windowed: false,
                char_proxy: report.char_proxy,
            };
            Outcome::new(report, caveats, violation)
        }
        Command::Fuzz(args) => crate::fuzz::run(args),
        Command::Reproduce { case } => crate::registry::reproduce(case),
    }
}
