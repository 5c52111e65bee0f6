//! Command-line front end.
//!
//! Exit codes: 0 when an inverse is found, a candidate verifies or a battery
//! is clean; 2 for a valid negative answer; 1 for any error.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::dynamic::{
    with_ring, Codec, DecompositionFile, ElementFile, InputsEcho, ResultFile, RingVisitor, Status,
};
use crate::error::{Error, Result};
use crate::ginverse::{self as g, Arity, Inputs, InverseKind};
use crate::oracle::{run_batteries, BatteryOptions, Corpus, Theorem, DEFAULT_BUDGET};
use crate::ring::{FieldTag, RingDescriptor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_NEGATIVE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "bccore", version, about = "Left dual (b,c)-core inverses in exact *-rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute an inverse and write a result file.
    Compute(ComputeArgs),
    /// Check a candidate against the defining equations of a kind.
    Verify(VerifyArgs),
    /// Run theorem batteries over a finite ring or a random matrix corpus.
    Battery(BatteryArgs),
    /// Split va into a core part and a nilpotent part.
    Decompose(DecomposeArgs),
}

#[derive(Debug, Args)]
pub struct Operands {
    /// Element file for a.
    #[arg(long)]
    pub a: PathBuf,
    /// Element file for b (defaults to a).
    #[arg(long)]
    pub b: Option<PathBuf>,
    /// Element file for c (defaults to a).
    #[arg(long)]
    pub c: Option<PathBuf>,
    /// Element file for v.
    #[arg(long)]
    pub v: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ComputeArgs {
    #[arg(long)]
    pub kind: InverseKind,
    #[command(flatten)]
    pub operands: Operands,
    /// Largest index tried for the pseudo core inverse.
    #[arg(long)]
    pub kmax: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long)]
    pub kind: InverseKind,
    #[command(flatten)]
    pub operands: Operands,
    /// Element file (or result file) holding the candidate.
    #[arg(long)]
    pub candidate: PathBuf,
    /// Index for the pseudo core inverse.
    #[arg(long)]
    pub k: Option<u32>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BatteryArgs {
    /// Theorem tag, or `all`.
    #[arg(long, default_value = "all")]
    pub theorem: String,
    /// Finite ring to sweep, e.g. `Zn:6` or `MatZp:2x2:p2`.
    #[arg(long, conflicts_with = "field")]
    pub ring: Option<RingDescriptor>,
    /// Random tuples to draw instead of an exhaustive sweep.
    #[arg(long, requires = "ring")]
    pub samples: Option<u64>,
    /// Field of a random matrix corpus: `Q`, `QI` or `GF<p>`.
    #[arg(long)]
    pub field: Option<String>,
    /// Matrix dimensions, `lo..hi` or `n`.
    #[arg(long, default_value = "1..4")]
    pub dims: String,
    #[arg(long, default_value_t = 500)]
    pub count: usize,
    /// Bound on the absolute value of random entries.
    #[arg(long, default_value_t = 3)]
    pub bound: i64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub workers: Option<usize>,
    /// Largest tuples × ring order allowed for finite corpora.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub a: PathBuf,
    #[arg(long)]
    pub v: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout(), &mut std::io::stderr())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            return EXIT_ERROR;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

pub fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Compute(args) => compute(&args, out),
        Command::Verify(args) => verify(&args, out),
        Command::Battery(args) => battery(&args, out),
        Command::Decompose(args) => decompose(&args, out),
    }
}

fn emit(value: &impl Serialize, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Element files of one command, all naming the same ring.
struct Loaded {
    ring: RingDescriptor,
    a: ElementFile,
    b: Option<ElementFile>,
    c: Option<ElementFile>,
    v: Option<ElementFile>,
    candidate: Option<ElementFile>,
}

impl Loaded {
    fn read(ops: &Operands, candidate: Option<&Path>) -> Result<Self> {
        let opt = |p: &Option<PathBuf>| p.as_deref().map(ElementFile::read).transpose();
        let a = ElementFile::read(&ops.a)?;
        let loaded = Loaded {
            ring: a.ring.clone(),
            b: opt(&ops.b)?,
            c: opt(&ops.c)?,
            v: opt(&ops.v)?,
            candidate: candidate.map(ElementFile::read).transpose()?,
            a,
        };
        let others = [&loaded.b, &loaded.c, &loaded.v, &loaded.candidate];
        for f in others.into_iter().flatten() {
            if f.ring != loaded.ring {
                return Err(Error::DescriptorMismatch(loaded.ring.to_string(), f.ring.to_string()));
            }
        }
        loaded.ring.validate()?;
        Ok(loaded)
    }

    /// Inputs for `kind`; b and c fall back to a.
    fn inputs<R: Codec>(
        &self,
        r: &R,
        kind: InverseKind,
        k: Option<u32>,
    ) -> Result<(Inputs<R::Elem>, InputsEcho)> {
        let a = self.a.element(r)?;
        let or_a = |f: &Option<ElementFile>| f.as_ref().map_or(Ok(a.clone()), |f| f.element(r));
        let mut echo = InputsEcho { a: Some(r.encode(&a)), ..InputsEcho::default() };
        let inputs = match kind.arity() {
            Arity::A => Inputs::A(a),
            Arity::Abc => {
                let (b, c) = (or_a(&self.b)?, or_a(&self.c)?);
                echo.b = Some(r.encode(&b));
                echo.c = Some(r.encode(&c));
                Inputs::Abc(a, b, c)
            }
            Arity::Av => {
                let v = self
                    .v
                    .as_ref()
                    .ok_or_else(|| Error::MissingInput("v", kind.name().into()))?
                    .element(r)?;
                echo.v = Some(r.encode(&v));
                Inputs::Av(a, v)
            }
            Arity::Ak => {
                let k = k.ok_or_else(|| Error::MissingInput("k", kind.name().into()))?;
                Inputs::Ak(a, k)
            }
        };
        Ok((inputs, echo))
    }
}

struct ComputeJob<'a> {
    kind: InverseKind,
    files: &'a Loaded,
    k_max: Option<u32>,
}

impl RingVisitor for ComputeJob<'_> {
    type Output = Result<ResultFile>;

    fn visit<R: Codec>(self, r: &R) -> Result<ResultFile> {
        let kind = self.kind;
        let k_max = self.k_max.unwrap_or_else(|| g::default_k_max(&r.descriptor()));
        let (inputs, mut echo) = self.files.inputs(r, kind, Some(k_max))?;
        let (found, check_inputs) = match &inputs {
            Inputs::Ak(a, _) => {
                echo.k_max = Some(k_max);
                match g::left_dual_pseudo_core(r, a, k_max) {
                    Some(res) => (Some((res.x, Some(res.k))), Inputs::Ak(a.clone(), res.k)),
                    None => (None, inputs.clone()),
                }
            }
            _ => (g::compute(r, kind, &inputs)?.map(|x| (x, None)), inputs.clone()),
        };
        let mut res = ResultFile {
            status: Status::NotInvertible,
            kind,
            ring: r.descriptor(),
            inputs: echo,
            witness: None,
            index: None,
            verify: None,
        };
        if let Some((x, index)) = found {
            let report = g::verify(r, kind, &check_inputs, &x)?;
            res.status = Status::Found;
            res.witness = Some(r.encode(&x));
            res.index = index;
            res.verify = Some(report.map(|x| r.encode(&x)));
        }
        res.check()?;
        Ok(res)
    }
}

fn compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<i32> {
    if args.kind.is_verify_only() {
        return Err(Error::NoComputePath(args.kind.name().into()));
    }
    let files = Loaded::read(&args.operands, None)?;
    let res =
        with_ring(&files.ring.clone(), ComputeJob { kind: args.kind, files: &files, k_max: args.kmax })??;
    emit(&res, args.out.as_deref(), out)?;
    Ok(match res.status {
        Status::Found => EXIT_OK,
        Status::NotInvertible => EXIT_NEGATIVE,
    })
}

struct VerifyJob<'a> {
    kind: InverseKind,
    files: &'a Loaded,
    k: Option<u32>,
}

impl RingVisitor for VerifyJob<'_> {
    type Output = Result<g::WitnessReport<crate::dynamic::Payload>>;

    fn visit<R: Codec>(self, r: &R) -> Self::Output {
        let (inputs, _) = self.files.inputs(r, self.kind, self.k)?;
        let x = self.files.candidate.as_ref().expect("candidate loaded").element(r)?;
        Ok(g::verify(r, self.kind, &inputs, &x)?.map(|x| r.encode(&x)))
    }
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let files = Loaded::read(&args.operands, Some(&args.candidate))?;
    let report = with_ring(&files.ring.clone(), VerifyJob { kind: args.kind, files: &files, k: args.k })??;
    emit(&report, None, out)?;
    if let Some(p) = &args.out {
        emit(&report, Some(p), out)?;
    }
    Ok(if report.overall { EXIT_OK } else { EXIT_NEGATIVE })
}

struct DecomposeJob<'a> {
    files: &'a Loaded,
}

impl RingVisitor for DecomposeJob<'_> {
    type Output = Result<DecompositionFile>;

    fn visit<R: Codec>(self, r: &R) -> Result<DecompositionFile> {
        let (inputs, echo) = self.files.inputs(r, InverseKind::LeftDualVCore, None)?;
        let Inputs::Av(a, v) = inputs else { unreachable!("v-core inputs are (a, v)") };
        let d = g::nilpotent_decomposition(r, &a, &v);
        Ok(match d {
            Some(d) => DecompositionFile {
                status: Status::Found,
                ring: r.descriptor(),
                inputs: echo,
                x: Some(r.encode(&d.x)),
                a1: Some(r.encode(&d.a1)),
                a2: Some(r.encode(&d.a2)),
                verdicts: d.verdicts,
            },
            None => DecompositionFile {
                status: Status::NotInvertible,
                ring: r.descriptor(),
                inputs: echo,
                x: None,
                a1: None,
                a2: None,
                verdicts: Vec::new(),
            },
        })
    }
}

fn decompose(args: &DecomposeArgs, out: &mut dyn Write) -> Result<i32> {
    let ops = Operands { a: args.a.clone(), b: None, c: None, v: Some(args.v.clone()) };
    let files = Loaded::read(&ops, None)?;
    let res = with_ring(&files.ring.clone(), DecomposeJob { files: &files })??;
    emit(&res, args.out.as_deref(), out)?;
    Ok(match res.status {
        Status::Found if res.verdicts.iter().all(|v| v.holds) => EXIT_OK,
        Status::Found => return Err(Error::Inconsistent("decomposition identities fail".into())),
        Status::NotInvertible => EXIT_NEGATIVE,
    })
}

pub fn parse_dims(s: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Parse(format!("invalid dimension range `{s}`"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (
            lo.trim().parse().map_err(|_| bad())?,
            hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?,
        ),
        None => {
            let n = s.trim().parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

pub fn parse_field(s: &str) -> Result<FieldTag> {
    match s {
        "Q" => Ok(FieldTag::Rationals),
        "QI" => Ok(FieldTag::GaussianRationals),
        _ => {
            let p = s.strip_prefix("GF").and_then(|p| p.parse().ok());
            match p {
                Some(p) if crate::scalar::is_prime(p) => Ok(FieldTag::Prime(p)),
                _ => Err(Error::Parse(format!("unknown field `{s}`, expected Q, QI or GF<p>"))),
            }
        }
    }
}

fn battery(args: &BatteryArgs, out: &mut dyn Write) -> Result<i32> {
    let theorems: Vec<Theorem> = match args.theorem.as_str() {
        "all" => Theorem::ALL.to_vec(),
        t => vec![t.parse()?],
    };
    let corpus = match (&args.ring, &args.field) {
        (Some(ring), None) if ring.is_finite() => {
            Corpus::Finite { ring: ring.clone(), samples: args.samples }
        }
        (Some(ring), None) => {
            return Err(Error::InvalidDescriptor(format!("{ring}: use --field for matrix corpora")))
        }
        (None, Some(field)) => Corpus::Matrix {
            field: parse_field(field)?,
            dims: parse_dims(&args.dims)?,
            bound: args.bound,
            count: args.count,
        },
        _ => return Err(Error::MissingInput("ring", "battery".into())),
    };
    let opts = BatteryOptions { seed: args.seed, workers: args.workers, budget: args.budget };
    let reports = run_batteries(&theorems, &corpus, &opts)?;
    let clean = reports.iter().all(|r| r.clean());
    match reports.as_slice() {
        [one] if args.theorem != "all" => emit(one, args.out.as_deref(), out)?,
        all => emit(&all, args.out.as_deref(), out)?,
    }
    if args.out.is_some() {
        for r in &reports {
            writeln!(out, "{:<22} {}/{} {}", r.theorem, r.agreements, r.tuples, r.corpus)?;
        }
    }
    Ok(if clean { EXIT_OK } else { EXIT_NEGATIVE })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_with(std::iter::once("bccore").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(&[]).0, EXIT_ERROR);
        assert_eq!(run_args(&["compute", "--kind", "nonsense", "--a", "x"]).0, EXIT_ERROR);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn dims_and_fields() {
        assert_eq!(parse_dims("1..4").unwrap(), 1..=4);
        assert_eq!(parse_dims("1..=4").unwrap(), 1..=4);
        assert_eq!(parse_dims("3").unwrap(), 3..=3);
        assert!(parse_dims("0..2").is_err());
        assert!(parse_dims("4..1").is_err());
        assert_eq!(parse_field("GF7").unwrap(), FieldTag::Prime(7));
        assert!(parse_field("GF8").is_err());
    }

    #[test]
    fn battery_budget_exit() {
        let (code, _, err) = run_args(&["battery", "--theorem", "all", "--ring", "Zn:100"]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("corpus too large"), "{err}");
        let (code, _, err) = run_args(&["battery", "--theorem", "nope", "--ring", "Zn:6"]);
        assert_eq!(code, EXIT_ERROR, "{err}");
    }

    #[test]
    fn compute_and_verify_through_files() {
        let dir = tempfile::tempdir().unwrap();
        let write = |name: &str, body: &str| {
            let p = dir.path().join(name);
            fs::write(&p, body).unwrap();
            p.to_str().unwrap().to_string()
        };
        let z6 = |x: u32| format!(r#"{{"ring":{{"kind":"zn","modulus":6}},"payload":{x}}}"#);
        let a = write("a.json", &z6(1));
        let b = write("b.json", &z6(2));
        let res = dir.path().join("res.json");
        let res_s = res.to_str().unwrap();
        let (code, _, err) = run_args(&[
            "compute",
            "--kind",
            "left-dual-bc-core",
            "--a",
            &a,
            "--b",
            &b,
            "--c",
            &b,
            "--out",
            res_s,
        ]);
        assert_eq!(code, EXIT_OK, "{err}");
        let parsed: ResultFile = serde_json::from_str(&fs::read_to_string(&res).unwrap()).unwrap();
        assert_eq!(parsed.witness, Some(crate::dynamic::Payload::Index(2)));
        let (code, out, _) = run_args(&[
            "verify",
            "--kind",
            "left-dual-bc-core",
            "--a",
            &a,
            "--b",
            &b,
            "--c",
            &b,
            "--candidate",
            res_s,
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        let k = write("k.json", &z6(3));
        let (code, _, _) = run_args(&["compute", "--kind", "left-dual-pseudo-core", "--a", &k]);
        assert_eq!(code, EXIT_OK);
        let (code, _, err) = run_args(&["compute", "--kind", "left-dual-v-core", "--a", &k]);
        assert_eq!(code, EXIT_ERROR);
        assert!(err.contains("missing input `v`"), "{err}");
        let (code, _, _) = run_args(&["compute", "--kind", "bc-core", "--a", &k]);
        assert_eq!(code, EXIT_ERROR);
    }
}
