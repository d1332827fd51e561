use std::io::Write;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use clap::Parser;
use globfactor::config::{TraceSink, DEFAULT_SEED};
use globfactor::integer::prime_power;
use globfactor::ring::FiniteField;
use globfactor::{
    factor_bivariate, factor_rational, BoundMode, Config, Error, FqBiPoly, GaloisField, IntPoly, PartStats,
    PolyRing,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

use crate::expr::ParseError;
use crate::text::{format_fq_poly, format_fqt, format_int_poly, format_rational, parse_fq_poly, parse_fqt, parse_q};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Rationals,
    FqT,
}

impl FromStr for RingKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "q" => Ok(RingKind::Rationals),
            "fq(t)" | "fqt" => Ok(RingKind::FqT),
            _ => Err(format!("unknown ring {s:?} (expected Q or Fq(t))")),
        }
    }
}

/// Factor a univariate polynomial over Q or a polynomial in x over Fq(t).
#[derive(Parser, Debug)]
#[command(name = "factor", version)]
pub struct Args {
    /// Polynomial to factor, e.g. "x^4 - 10*x^2 + 1".
    pub poly: String,
    /// Q or Fq(t).
    #[arg(long, default_value = "Q")]
    pub ring: RingKind,
    /// Field order for Fq(t), a prime power.
    #[arg(long)]
    pub q: Option<u64>,
    /// Defining polynomial of F_q over F_p, in the variable z.
    #[arg(long)]
    pub modulus: Option<String>,
    /// auto, knapsack, all-coeffs or zassenhaus.
    #[arg(long, default_value = "auto")]
    pub strategy: String,
    /// LLL parameter, a rational greater than 4/3.
    #[arg(long, default_value = "2")]
    pub gamma: String,
    /// Prime to use as the place over Q.
    #[arg(long)]
    pub prime: Option<u64>,
    /// Irreducible polynomial in t to use as the place over Fq(t).
    #[arg(long)]
    pub place: Option<String>,
    /// newton, total or tdeg.
    #[arg(long, default_value = "newton")]
    pub bound_mode: String,
    /// Seed for the randomized steps (falls back to FACTOR_SEED).
    #[arg(long)]
    pub seed: Option<u64>,
    /// Print the result as JSON.
    #[arg(long)]
    pub json: bool,
    /// Print per-round diagnostics to stderr.
    #[arg(long)]
    pub trace: bool,
    /// Report null instead of elapsed milliseconds, for reproducible output.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Input(e.to_string())
        }
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn parse_gamma(s: &str) -> Result<BigRational, Failure> {
    let bad = || Failure::Input(format!("invalid gamma {s:?}"));
    let g = match s.split_once('/') {
        Some((a, b)) => {
            let (a, b): (BigInt, BigInt) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == BigInt::from(0) {
                return Err(bad());
            }
            BigRational::new(a, b)
        }
        None => BigRational::from_integer(s.trim().parse().map_err(|_| bad())?),
    };
    Ok(g)
}

fn field_of(args: &Args) -> Result<GaloisField, Failure> {
    let q = args.q.ok_or_else(|| Failure::Input("--q is required for ring Fq(t)".into()))?;
    let (p, w) = prime_power(q).ok_or_else(|| Failure::Input(format!("{q} is not a prime power")))?;
    let modulus = match &args.modulus {
        None => None,
        Some(text) => {
            let fp = GaloisField::prime(p)?;
            let m = parse_fq_poly(text, &fp, 'z')?;
            Some(m.coeffs().iter().map(|c| fp.to_prime_coords(c)[0]).collect())
        }
    };
    Ok(GaloisField::new(p, w as usize, modulus)?)
}

fn stats_json(s: &PartStats) -> Value {
    json!({
        "degree": s.degree,
        "multiplicity": s.multiplicity,
        "place": s.place,
        "r": s.r,
        "s": s.s,
        "ell_final": s.ell_final,
        "sigma": s.sigma,
        "strategy": s.strategy,
        "escalations": s.escalations,
    })
}

fn summary_json(stats: &[PartStats], s_total: usize, ms: Option<u128>) -> Value {
    let main = stats.iter().max_by_key(|s| (s.degree, s.r)).cloned().unwrap_or_default();
    json!({
        "place": main.place,
        "r": main.r,
        "s": s_total,
        "ell_final": main.ell_final,
        "sigma": main.sigma,
        "strategy": main.strategy,
        "milliseconds": ms,
        "parts": stats.iter().map(stats_json).collect::<Vec<_>>(),
    })
}

struct Report {
    ring: String,
    unit: String,
    factors: Vec<(String, Value, usize)>,
    stats: Vec<PartStats>,
}

fn run_q(args: &Args, config: &Config) -> Result<Report, Failure> {
    if args.place.is_some() || args.modulus.is_some() || args.q.is_some() {
        return Err(Failure::Input("--q, --modulus and --place only apply to ring Fq(t)".into()));
    }
    let f = parse_q(&args.poly)?;
    let fac = factor_rational(&f, config)?;
    let coeffs = |g: &IntPoly| Value::from(g.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>());
    Ok(Report {
        ring: "Q".into(),
        unit: format_rational(&fac.unit),
        factors: fac.factors.iter().map(|(g, m)| (format_int_poly(g), coeffs(g), *m)).collect(),
        stats: fac.stats,
    })
}

fn run_fqt(args: &Args, config: &mut Config) -> Result<Report, Failure> {
    if args.prime.is_some() {
        return Err(Failure::Input("--prime only applies to ring Q".into()));
    }
    let k = field_of(args)?;
    if let Some(text) = &args.place {
        let v = parse_fq_poly(text, &k, 't')?;
        if v.deg() == 0 {
            return Err(Failure::Input("place must be a nonconstant polynomial in t".into()));
        }
        config.place = Some(PolyRing::new(k.clone()).monic(&v));
    }
    let f = parse_fqt(&args.poly, &k)?;
    let fac = factor_bivariate(&k, &f, config)?;
    let coeffs = |g: &FqBiPoly| {
        Value::from(
            g.coeffs()
                .iter()
                .map(|c| Value::from(c.coeffs().iter().map(|e| k.index(*e)).collect::<Vec<_>>()))
                .collect::<Vec<_>>(),
        )
    };
    Ok(Report {
        ring: format!("F{}(t)", k.q()),
        unit: format_fq_poly(&k, &fac.unit, 't'),
        factors: fac.factors.iter().map(|(g, m)| (format_fqt(&k, g), coeffs(g), *m)).collect(),
        stats: fac.stats,
    })
}

fn execute(args: &Args, env_seed: Option<&str>, trace: Option<TraceSink>, out: &mut dyn Write) -> Result<(), Failure> {
    let seed = match (args.seed, env_seed) {
        (Some(s), _) => s,
        (None, Some(s)) => s.trim().parse().map_err(|_| Failure::Input(format!("invalid FACTOR_SEED {s:?}")))?,
        (None, None) => DEFAULT_SEED,
    };
    let mut config = Config {
        strategy: args.strategy.parse()?,
        gamma: parse_gamma(&args.gamma)?,
        prime: args.prime,
        bound_mode: args.bound_mode.parse::<BoundMode>()?,
        seed,
        trace,
        ..Config::default()
    };
    if config.gamma <= BigRational::new(BigInt::from(4), BigInt::from(3)) {
        return Err(Failure::Input("gamma must exceed 4/3".into()));
    }
    let start = Instant::now();
    let report = match args.ring {
        RingKind::Rationals => run_q(args, &config)?,
        RingKind::FqT => run_fqt(args, &mut config)?,
    };
    let ms = (!args.no_timing).then(|| start.elapsed().as_millis());
    let io = |e: std::io::Error| Failure::Internal(format!("write failed: {e}"));
    if args.json {
        let doc = json!({
            "ring": report.ring,
            "unit": report.unit,
            "factors": report
                .factors
                .iter()
                .map(|(poly, coeffs, m)| json!({"poly": poly, "coeffs": coeffs, "multiplicity": m}))
                .collect::<Vec<_>>(),
            "stats": summary_json(&report.stats, report.factors.len(), ms),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable")).map_err(io)?;
    } else {
        writeln!(out, "unit: {}", report.unit).map_err(io)?;
        for (poly, _, m) in &report.factors {
            writeln!(out, "{poly} (multiplicity {m})").map_err(io)?;
        }
    }
    Ok(())
}

/// Runs the command line. Returns the process exit code.
pub fn run<I, T>(argv: I, env_seed: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let trace: Option<TraceSink> = args.trace.then(|| Arc::new(|line: &str| eprintln!("trace: {line}")) as TraceSink);
    match execute(&args, env_seed, trace, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}
