//! Command-line front end. Records are written to stdout as compact JSON, one
//! per line (or CSV for `table --format csv`); diagnostics go to stderr.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 degenerate
//! mathematical input, 3 cross-check disagreement.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::fp_linalg::{primes_up_to, PrimeModulus};
use crate::graded_algebra::{wlp_bruteforce, Witness, WlpVerdict};
use crate::syzygy_gap::{delta_star_han, gap_oracle, GapCertificate, HanCertificate};
use crate::wlp_criterion::{
    char2_wlp_degrees, decide_wlp_criterion, exceptional_primes_with_witnesses, CriterionWitness,
};
use crate::wlp_via_han;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Largest `d` accepted by commands that run the brute-force rank check.
pub const BRUTEFORCE_MAX_D: u64 = 60;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DEGENERATE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "wlp", version, about = "Weak Lefschetz property of K[X,Y,Z]/(X^d,Y^d,Z^d) in characteristic p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DecideMethod {
    Criterion,
    Bruteforce,
    Han,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GapMethod {
    Oracle,
    Han,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide WLP for one (d, p)
    Decide {
        #[arg(long = "d")]
        d: u64,
        #[arg(long = "p")]
        p: u64,
        #[arg(long, value_enum, default_value = "criterion")]
        method: DecideMethod,
    },
    /// Syzygy gap of (x^d1, y^d2, (x+y)^d3)
    Gap {
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
        #[arg(long)]
        d3: u64,
        #[arg(long = "p")]
        p: u64,
        #[arg(long, value_enum, default_value = "both")]
        method: GapMethod,
    },
    /// Exceptional primes for d, with witnesses
    Primes {
        #[arg(long = "d")]
        d: u64,
    },
    /// Criterion verdicts for every d <= d-max and prime p <= p-max
    Table {
        #[arg(long = "d-max")]
        d_max: u64,
        #[arg(long = "p-max")]
        p_max: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Degrees floor((2^t + 1)/3), t <= t-max, where WLP holds in characteristic 2
    WlpDegrees {
        #[arg(long = "t-max")]
        t_max: u32,
    },
    /// Cross-check all deciders on a grid
    Verify {
        #[arg(long = "d-max")]
        d_max: u64,
        #[arg(long = "p-max")]
        p_max: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, u64>,
    pub result: Payload,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HanVerdict {
    pub holds: bool,
    pub certificate: HanCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeWitness {
    pub p: u64,
    pub witness: CriterionWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub d: u64,
    pub p: u64,
    pub criterion: bool,
    pub bruteforce: bool,
    pub han: bool,
    pub oracle: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Payload {
    Decide {
        holds: bool,
        criterion: Option<WlpVerdict>,
        bruteforce: Option<WlpVerdict>,
        han: Option<HanVerdict>,
        consistent: bool,
    },
    Gap {
        oracle: Option<GapCertificate>,
        degenerate: bool,
        han: Option<HanCertificate>,
        agree: Option<bool>,
    },
    Primes {
        primes: Vec<u64>,
        witnesses: Vec<PrimeWitness>,
    },
    Table {
        d: u64,
        p: u64,
        verdict: WlpVerdict,
    },
    WlpDegrees {
        degrees: Vec<u64>,
    },
    Verify {
        pass: bool,
        cells: u64,
        degenerate_oracle_cells: u64,
        counterexample: Option<Counterexample>,
    },
}

impl OutputRecord {
    fn new(command: &str, inputs: &[(&str, u64)], result: Payload) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: inputs.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
            result,
            version: VERSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records always serialize")
    }
}

/// What a command produced: the lines for stdout and the exit code.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn records(records: &[OutputRecord], code: i32) -> Self {
        let mut stdout = String::new();
        for r in records {
            stdout.push_str(&r.to_json());
            stdout.push('\n');
        }
        Outcome { stdout, stderr: String::new(), code }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE }
    }
}

fn usage_error(e: Error) -> Outcome {
    Outcome::usage(e)
}

fn prime(p: u64) -> Result<PrimeModulus, Outcome> {
    PrimeModulus::new(p).map_err(usage_error)
}

fn positive(name: &str, v: u64) -> Result<u64, Outcome> {
    if v == 0 {
        Err(Outcome::usage(format!("--{name} must be at least 1")))
    } else {
        Ok(v)
    }
}

fn bruteforce_bound(d: u64) -> Result<(), Outcome> {
    if d > BRUTEFORCE_MAX_D {
        Err(Outcome::usage(format!("brute force is limited to d <= {BRUTEFORCE_MAX_D}")))
    } else {
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome { stdout: String::new(), stderr: text, code }
            } else {
                Outcome { stdout: text, stderr: String::new(), code }
            }
        }
    }
}

pub fn execute(command: &Command) -> Outcome {
    let result = match *command {
        Command::Decide { d, p, method } => cmd_decide(d, p, method),
        Command::Gap { d1, d2, d3, p, method } => cmd_gap(d1, d2, d3, p, method),
        Command::Primes { d } => cmd_primes(d),
        Command::Table { d_max, p_max, format } => cmd_table(d_max, p_max, format),
        Command::WlpDegrees { t_max } => cmd_wlp_degrees(t_max),
        Command::Verify { d_max, p_max } => cmd_verify(d_max, p_max),
    };
    result.unwrap_or_else(|outcome| outcome)
}

pub fn cmd_decide(d: u64, p: u64, method: DecideMethod) -> Result<Outcome, Outcome> {
    let d = positive("d", d)?;
    let modulus = prime(p)?;
    let use_criterion = matches!(method, DecideMethod::Criterion | DecideMethod::All);
    let use_bruteforce = matches!(method, DecideMethod::Bruteforce | DecideMethod::All);
    let use_han = matches!(method, DecideMethod::Han | DecideMethod::All);
    if use_bruteforce {
        bruteforce_bound(d)?;
    }

    let criterion = use_criterion.then(|| decide_wlp_criterion(d, modulus)).transpose().map_err(usage_error)?;
    let bruteforce = use_bruteforce.then(|| wlp_bruteforce(d, modulus)).transpose().map_err(usage_error)?;
    let han = use_han
        .then(|| wlp_via_han(d, modulus))
        .transpose()
        .map_err(usage_error)?
        .map(|(v, certificate)| HanVerdict { holds: v.holds, certificate });

    let verdicts: Vec<bool> =
        [criterion.as_ref().map(|v| v.holds), bruteforce.as_ref().map(|v| v.holds), han.as_ref().map(|v| v.holds)]
            .into_iter()
            .flatten()
            .collect();
    let holds = verdicts[0];
    let consistent = verdicts.iter().all(|&v| v == holds);
    let record = OutputRecord::new(
        "decide",
        &[("d", d), ("p", p)],
        Payload::Decide { holds, criterion, bruteforce, han, consistent },
    );
    Ok(Outcome::records(&[record], if consistent { EXIT_OK } else { EXIT_DISAGREEMENT }))
}

pub fn cmd_gap(d1: u64, d2: u64, d3: u64, p: u64, method: GapMethod) -> Result<Outcome, Outcome> {
    for (name, v) in [("d1", d1), ("d2", d2), ("d3", d3)] {
        positive(name, v)?;
    }
    let modulus = prime(p)?;
    let han = match method {
        GapMethod::Han | GapMethod::Both => Some(delta_star_han(d1, d2, d3, modulus).map_err(usage_error)?),
        GapMethod::Oracle => None,
    };
    let (oracle, degenerate) = match method {
        GapMethod::Oracle | GapMethod::Both => match gap_oracle(d1, d2, d3, modulus) {
            Ok(c) => (Some(c), false),
            Err(Error::Degenerate { .. }) => (None, true),
            Err(e) => return Err(usage_error(e)),
        },
        GapMethod::Han => (None, false),
    };
    let agree = match (&oracle, &han) {
        (Some(o), Some(h)) => Some(o.delta == h.delta_star),
        _ => None,
    };
    let record = OutputRecord::new(
        "gap",
        &[("d1", d1), ("d2", d2), ("d3", d3), ("p", p)],
        Payload::Gap { oracle, degenerate, han, agree },
    );
    let code = if degenerate {
        EXIT_DEGENERATE
    } else if agree == Some(false) {
        EXIT_DISAGREEMENT
    } else {
        EXIT_OK
    };
    let mut outcome = Outcome::records(&[record], code);
    if degenerate {
        outcome.stderr = format!("{}\n", Error::Degenerate { d1, d2, d3, p });
    }
    Ok(outcome)
}

pub fn cmd_primes(d: u64) -> Result<Outcome, Outcome> {
    let d = positive("d", d)?;
    let found = exceptional_primes_with_witnesses(d).map_err(usage_error)?;
    let record = OutputRecord::new(
        "primes",
        &[("d", d)],
        Payload::Primes {
            primes: found.iter().map(|&(p, _)| p).collect(),
            witnesses: found.into_iter().map(|(p, witness)| PrimeWitness { p, witness }).collect(),
        },
    );
    Ok(Outcome::records(&[record], EXIT_OK))
}

fn grid_primes(p_max: u64) -> Result<Vec<u64>, Outcome> {
    let p_max = positive("p-max", p_max)?;
    if p_max >= PrimeModulus::MAX_EXCLUSIVE {
        return Err(Outcome::usage(format!("--p-max must be below {}", PrimeModulus::MAX_EXCLUSIVE)));
    }
    Ok(primes_up_to(p_max))
}

pub fn cmd_table(d_max: u64, p_max: u64, format: Format) -> Result<Outcome, Outcome> {
    let d_max = positive("d-max", d_max)?;
    let primes = grid_primes(p_max)?;
    let mut rows = Vec::new();
    for d in 1..=d_max {
        for &p in &primes {
            let verdict = decide_wlp_criterion(d, PrimeModulus::new(p).map_err(usage_error)?).map_err(usage_error)?;
            rows.push((d, p, verdict));
        }
    }
    match format {
        Format::Json => {
            let records: Vec<OutputRecord> = rows
                .into_iter()
                .map(|(d, p, verdict)| {
                    OutputRecord::new("table", &[("d", d), ("p", p)], Payload::Table { d, p, verdict })
                })
                .collect();
            Ok(Outcome::records(&records, EXIT_OK))
        }
        Format::Csv => Ok(Outcome { stdout: table_csv(&rows), stderr: String::new(), code: EXIT_OK }),
    }
}

fn table_csv(rows: &[(u64, u64, WlpVerdict)]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["d", "p", "wlp", "witness_n", "witness_k"]).expect("in-memory write");
    for (d, p, verdict) in rows {
        let (n, k) = match verdict.witness {
            Witness::Criterion(w) => (w.n.to_string(), w.k.to_string()),
            _ => (String::new(), String::new()),
        };
        writer.write_record([d.to_string(), p.to_string(), verdict.holds.to_string(), n, k]).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

pub fn cmd_wlp_degrees(t_max: u32) -> Result<Outcome, Outcome> {
    let degrees = char2_wlp_degrees(t_max).map_err(|_| Outcome::usage("--t-max must be in 1..=62"))?;
    let record = OutputRecord::new("wlp-degrees", &[("t_max", u64::from(t_max))], Payload::WlpDegrees { degrees });
    Ok(Outcome::records(&[record], EXIT_OK))
}

/// Result of comparing every decider on one `(d, p)` cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellCheck {
    pub criterion: bool,
    pub bruteforce: bool,
    pub han: bool,
    /// `None` when the diagonal triple is degenerate in characteristic `p`.
    pub oracle: Option<bool>,
}

impl CellCheck {
    pub fn agrees(&self) -> bool {
        self.criterion == self.bruteforce
            && self.criterion == self.han
            && self.oracle.is_none_or(|o| o == self.criterion)
    }
}

pub fn check_cell(d: u64, p: PrimeModulus) -> crate::Result<CellCheck> {
    let oracle = match gap_oracle(d, d, d, p) {
        Ok(c) => Some(c.delta <= 1),
        Err(Error::Degenerate { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(CellCheck {
        criterion: decide_wlp_criterion(d, p)?.holds,
        bruteforce: wlp_bruteforce(d, p)?.holds,
        han: wlp_via_han(d, p)?.0.holds,
        oracle,
    })
}

pub fn cmd_verify(d_max: u64, p_max: u64) -> Result<Outcome, Outcome> {
    let d_max = positive("d-max", d_max)?;
    bruteforce_bound(d_max)?;
    let primes = grid_primes(p_max)?;
    let started = Instant::now();
    let mut cells = 0;
    let mut degenerate_oracle_cells = 0;
    let mut counterexample = None;
    'grid: for d in 1..=d_max {
        for &p in &primes {
            let check = check_cell(d, PrimeModulus::new(p).map_err(usage_error)?).map_err(usage_error)?;
            cells += 1;
            if check.oracle.is_none() {
                degenerate_oracle_cells += 1;
            }
            if !check.agrees() {
                counterexample = Some(Counterexample {
                    d,
                    p,
                    criterion: check.criterion,
                    bruteforce: check.bruteforce,
                    han: check.han,
                    oracle: check.oracle,
                });
                break 'grid;
            }
        }
    }
    let pass = counterexample.is_none();
    let record = OutputRecord::new(
        "verify",
        &[("d_max", d_max), ("p_max", p_max)],
        Payload::Verify { pass, cells, degenerate_oracle_cells, counterexample },
    );
    let mut outcome = Outcome::records(&[record], if pass { EXIT_OK } else { EXIT_DISAGREEMENT });
    outcome.stderr = format!("verified {cells} cells in {:.3}s\n", started.elapsed().as_secs_f64());
    Ok(outcome)
}

/// Writes an outcome to the given streams and returns its exit code.
pub fn emit(outcome: &Outcome, stdout: &mut impl Write, stderr: &mut impl Write) -> i32 {
    let _ = stdout.write_all(outcome.stdout.as_bytes());
    let _ = stderr.write_all(outcome.stderr.as_bytes());
    outcome.code
}
