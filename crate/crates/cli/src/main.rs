//! Command-line front end: build resolutions, run verification suites, compute characters
//! and Ext tables. Output is deterministic JSON on stdout or in `--out`.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use klr::lie::{KostantPartition, Root};
use klr::linalg::Ring;
use klr::modules::{Character, StandardModule};
use klr::resolution::{build_p_pi, build_p_power, build_q, Params, ProjComplex};
use klr::verify::{
    check_d_squared, check_homogeneity, ext_compute, homology_dims, lemma_suite, verify_resolution, Report,
    DEFAULT_CUTOFF,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "klr", version, about = "Type A KLR algebras: projective resolutions, verification, Ext")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the resolution of Delta(alpha^m) or Delta(pi) and print it as JSON.
    Resolve {
        #[command(flatten)]
        target: Target,
        /// Build the complex Q instead of P (root powers only).
        #[arg(long)]
        q: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Run verification suites; exit 1 if any check fails.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Internal-degree cutoff for the homology check.
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: i32,
        #[command(flatten)]
        ring: RingArgs,
        /// Largest nil-Hecke rank in the identity suite.
        #[arg(long, default_value_t = 4)]
        max_d: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Graded character of the standard module up to the cutoff.
    Char {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: i32,
        #[command(flatten)]
        out: Output,
    },
    /// Ext^n(Delta(pi), Delta(sigma)) up to the cutoff.
    Ext {
        /// Source Kostant partition, e.g. "[[1,2],1]".
        #[arg(long)]
        pi: String,
        /// Target Kostant partition of the same weight.
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value_t = DEFAULT_CUTOFF)]
        cutoff: i32,
        #[command(flatten)]
        ring: RingArgs,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Target {
    /// First vertex of the root [a, b+1].
    #[arg(long, allow_negative_numbers = true)]
    a: Option<i32>,
    /// The root is [a, b+1]; b = a-1 gives the simple root alpha_a.
    #[arg(long, allow_negative_numbers = true)]
    b: Option<i32>,
    /// Power m of the root.
    #[arg(long)]
    m: Option<usize>,
    /// Kostant partition as a list of [[lo,hi], mult] in decreasing convex order.
    #[arg(long, conflicts_with_all = ["a", "b", "m"])]
    pi: Option<String>,
}

#[derive(Args)]
struct RingArgs {
    /// Coefficient ring: Z, Q, or Fp (with --p), also accepted as F2, F3, ...
    #[arg(long)]
    ring: Option<String>,
    /// Characteristic for --ring Fp.
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Args)]
struct Output {
    /// Write JSON here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Resolution identities, identity suite and homology.
    All,
    /// d^2 = 0, homogeneity, chain maps and splitting.
    Resolution,
    /// The identity suite.
    Lemmas,
    /// Exactness and H_0.
    Homology,
}

/// Usage or configuration problems exit with 2, verification failures with 1.
enum Failure {
    Usage(anyhow::Error),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<klr::Error> for Failure {
    fn from(e: klr::Error) -> Self {
        Failure::Usage(e.into())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Resolve { target, q, out } => {
            let c = match (target.resolve()?, q) {
                (Resolved::Power(p), false) => build_p_power(p)?,
                (Resolved::Power(p), true) => build_q(p)?,
                (Resolved::Partition(pi), false) => build_p_pi(&pi)?,
                (Resolved::Partition(_), true) => return Err(anyhow!("--q needs --a, --b and --m").into()),
            };
            let mut v = c.to_json();
            v["length"] = json!(c.top_level());
            emit(&v, &out)
        }
        Command::Verify { target, suite, cutoff, ring, max_d, out } => {
            let ring = ring.resolve(Ring::Q)?;
            if ring == Ring::Z {
                return Err(anyhow!("homology is computed over a field; use Q or Fp").into());
            }
            if cutoff < 0 {
                return Err(anyhow!("cutoff must be nonnegative").into());
            }
            let needs_target = suite != Suite::Lemmas;
            let target = match target.resolve_opt()? {
                Some(t) => Some(t),
                None if needs_target => return Err(anyhow!("give --a, --b, --m or --pi").into()),
                None => None,
            };
            let mut reports = Vec::new();
            if let Some(t) = &target {
                if matches!(suite, Suite::All | Suite::Resolution) {
                    reports.extend(resolution_reports(t)?);
                }
                if matches!(suite, Suite::All | Suite::Homology) {
                    reports.push(homology_report(t, cutoff, ring)?);
                }
            }
            if matches!(suite, Suite::All | Suite::Lemmas) {
                reports.extend(lemma_suite(max_d)?);
            }
            let pass = reports.iter().all(Report::passed);
            emit(&json!({"status": if pass { "pass" } else { "fail" }, "reports": reports}), &out)?;
            for r in reports.iter().filter(|r| !r.passed()) {
                eprintln!("FAIL {}: {}", r.check, r.witnesses.first().map_or("", String::as_str));
            }
            if pass {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Char { target, cutoff, out } => {
            if cutoff < 0 {
                return Err(anyhow!("cutoff must be nonnegative").into());
            }
            let ch = Character::of_standard(&target.resolve()?.module(), cutoff);
            emit(&ch.to_json(), &out)
        }
        Command::Ext { pi, sigma, cutoff, ring, out } => {
            if cutoff < 0 {
                return Err(anyhow!("cutoff must be nonnegative").into());
            }
            let ring = ring.resolve(Ring::Z)?;
            let pi = parse_partition(&pi).context("--pi")?;
            let sigma = parse_partition(&sigma).context("--sigma")?;
            let r = ext_compute(&pi, &sigma, cutoff, ring)?;
            emit(&serde_json::to_value(&r).context("serializing the Ext table")?, &out)
        }
    }
}

enum Resolved {
    Power(Params),
    Partition(KostantPartition),
}

impl Resolved {
    fn module(&self) -> StandardModule {
        match self {
            Resolved::Power(p) => StandardModule::delta_power(p.root(), p.m),
            Resolved::Partition(pi) => StandardModule::delta_pi(pi),
        }
    }

    fn complex(&self) -> klr::Result<ProjComplex> {
        match self {
            Resolved::Power(p) => build_p_power(*p),
            Resolved::Partition(pi) => build_p_pi(pi),
        }
    }

    fn params(&self) -> Value {
        match self {
            Resolved::Power(p) => json!({"a": p.a, "b": p.b, "m": p.m}),
            Resolved::Partition(pi) => json!({"pi": pi}),
        }
    }
}

impl Target {
    fn resolve_opt(&self) -> anyhow::Result<Option<Resolved>> {
        if let Some(pi) = &self.pi {
            return Ok(Some(Resolved::Partition(parse_partition(pi).context("--pi")?)));
        }
        match (self.a, self.b, self.m) {
            (None, None, None) => Ok(None),
            (Some(a), Some(b), Some(m)) => {
                if m == 0 {
                    bail!("--m must be positive");
                }
                Ok(Some(Resolved::Power(Params::new(a, b, m)?)))
            }
            _ => bail!("--a, --b and --m must be given together"),
        }
    }

    fn resolve(&self) -> anyhow::Result<Resolved> {
        self.resolve_opt()?.ok_or_else(|| anyhow!("give --a, --b, --m or --pi"))
    }
}

impl RingArgs {
    fn resolve(&self, default: Ring) -> anyhow::Result<Ring> {
        let Some(tag) = &self.ring else {
            if self.p.is_some() {
                bail!("--p needs --ring Fp");
            }
            return Ok(default);
        };
        let tag = tag.trim();
        let ring = match tag.to_ascii_uppercase().as_str() {
            "Z" => Ring::Z,
            "Q" => Ring::Q,
            "FP" | "F" => Ring::fp(self.p.ok_or_else(|| anyhow!("--ring Fp needs --p"))?)?,
            t => {
                let digits = t.strip_prefix("FP").or_else(|| t.strip_prefix('F')).unwrap_or("");
                let p: u64 = digits.parse().map_err(|_| anyhow!("unknown ring {tag:?}; use Z, Q or Fp"))?;
                if self.p.is_some_and(|q| q != p) {
                    bail!("--ring {tag} conflicts with --p");
                }
                Ring::fp(p)?
            }
        };
        if self.p.is_some() && !matches!(ring, Ring::Fp(_)) {
            bail!("--p only applies to --ring Fp");
        }
        Ok(ring)
    }
}

/// Accepts `[[lo,hi],m],...` with or without the outer brackets.
fn parse_partition(s: &str) -> anyhow::Result<KostantPartition> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let t = if t.starts_with("[[[") || t == "[]" { t } else { format!("[{t}]") };
    let parts: Vec<((i32, i32), usize)> =
        serde_json::from_str(&t).map_err(|e| anyhow!("cannot parse {s:?} as [[lo,hi],mult],...: {e}"))?;
    let parts = parts.into_iter().map(|((lo, hi), m)| Ok((Root::new(lo, hi)?, m))).collect::<klr::Result<Vec<_>>>()?;
    if parts.is_empty() {
        bail!("empty Kostant partition");
    }
    Ok(KostantPartition::new(parts)?)
}

fn resolution_reports(t: &Resolved) -> klr::Result<Vec<Report>> {
    match t {
        Resolved::Power(p) => verify_resolution(*p),
        Resolved::Partition(_) => {
            let c = t.complex()?;
            Ok(vec![
                Report::new("homogeneity", t.params(), check_homogeneity(&c)),
                Report::new("d_squared", t.params(), check_d_squared(&c)?),
            ])
        }
    }
}

/// Higher homology vanishes, and `H_0` and the Euler characteristic match the standard module.
fn homology_report(t: &Resolved, cutoff: i32, ring: Ring) -> klr::Result<Report> {
    let c = t.complex()?;
    let want = Character::of_standard(&t.module(), cutoff);
    let h = homology_dims(&c, cutoff, ring)?;
    let mut w: Vec<String> = h
        .higher_homology()
        .into_iter()
        .map(|(word, deg, n, dim)| format!("H_{n} at word {word:?} degree {deg} has dimension {dim}"))
        .collect();
    for (label, ch) in [("H_0", h.h0()), ("Euler characteristic", h.euler())] {
        w.extend(
            ch.differences(&want)
                .into_iter()
                .map(|(word, deg, got, exp)| format!("{label} at word {word:?} degree {deg}: {got}, expected {exp}")),
        );
    }
    let mut params = t.params();
    params["cutoff"] = json!(cutoff);
    params["ring"] = json!(ring.to_string());
    Ok(Report::new("homology", params, w))
}

fn emit(v: &Value, out: &Output) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(v).context("serializing output")? + "\n";
    match &out.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}
