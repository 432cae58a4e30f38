//! Thin command-line frontend: every subcommand is a direct call into the
//! library with CSV/JSON formatting on top.
//!
//! Exit codes: 0 success, 2 usage/parse/domain errors, 3 failed internal
//! integrity checks, 4 resource-guard refusals.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand};

use ffbias::cache::{Cache, ExperimentRecord};
use ffbias::context::ModulusContext;
use ffbias::density::{self, DensityReport, DensitySource};
use ffbias::error::{Error, Result};
use ffbias::field::FieldSpec;
use ffbias::scan;
use ffbias::series::{write_bias_csv, SeriesKind};
use ffbias::text;

#[derive(Parser)]
#[command(
    name = "ffbias",
    version,
    about = "Sign bias of quadratic-twisted Liouville and Möbius sums over F_q[T]"
)]
struct Cli {
    /// Skip cache lookups and writes.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FieldArgs {
    /// Field size q: an odd prime, or an odd prime power together with
    /// --ext-modulus.
    #[arg(long)]
    q: u32,
    /// Monic irreducible polynomial over F_p defining F_q when q = p^k,
    /// k >= 2 (e.g. "T^2+1" for F_9 over F_3).
    #[arg(long)]
    ext_modulus: Option<String>,
}

#[derive(Args)]
struct ModulusArgs {
    #[command(flatten)]
    field: FieldArgs,
    /// Modulus polynomial in T, e.g. "T^3+T+4" or "(T^2+1)*(T^3+2T+1)".
    #[arg(long)]
    m: String,
}

fn parse_kind(s: &str) -> std::result::Result<SeriesKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Print the twisted L-polynomial, inverse-zero angles, RH residual,
    /// angle-rationality verdict, and central value.
    Lfunc {
        #[command(flatten)]
        modulus: ModulusArgs,
    },
    /// Emit the bias series as CSV: n, b(n), B(n), and both signs.
    Bias {
        #[command(flatten)]
        modulus: ModulusArgs,
        /// Series weight: "lambda" (Liouville) or "mu" (Möbius).
        #[arg(long, value_parser = parse_kind)]
        kind: SeriesKind,
        /// Expansion horizon: rows n = 1..=N.
        #[arg(long, short = 'n', default_value_t = 30)]
        n: usize,
        /// Print only the single term b(FAST), computed by the linear
        /// recurrence with matrix powering instead of full expansion.
        #[arg(long)]
        fast: Option<usize>,
    },
    /// Print density reports as JSON (one noncumulative, one cumulative).
    Density {
        #[command(flatten)]
        modulus: ModulusArgs,
        /// Series weight: "lambda" (Liouville) or "mu" (Möbius).
        #[arg(long, value_parser = parse_kind)]
        kind: SeriesKind,
        /// Count signs empirically up to this horizon instead of computing
        /// the limiting densities.
        #[arg(long, conflicts_with = "model")]
        empirical: Option<usize>,
        /// Compute the limiting densities from the oscillatory model or the
        /// exact periodic pattern (the default when --empirical is absent).
        #[arg(long)]
        model: bool,
    },
    /// Recompute the two reference density tables as CSV.
    ReproduceTables,
    /// Scan every squarefree monic modulus of one degree; one CSV row per
    /// modulus with L-coefficients, angles, central value, and densities.
    Scan {
        #[command(flatten)]
        field: FieldArgs,
        /// Modulus degree to scan.
        #[arg(long)]
        degree: usize,
        /// Sort rows by ascending central value L(q^{-1/2}) instead of by
        /// modulus text, making the central-value/bias relation visible.
        #[arg(long)]
        relate_central_value: bool,
    },
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}

fn run(cli: Cli) -> Result<()> {
    let cache = Cache::resolve(cli.no_cache);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Lfunc { modulus } => cmd_lfunc(&mut out, &cache, &modulus),
        Command::Bias {
            modulus,
            kind,
            n,
            fast,
        } => cmd_bias(&mut out, &modulus, kind, n, fast),
        Command::Density {
            modulus,
            kind,
            empirical,
            model: _,
        } => cmd_density(&mut out, &cache, &modulus, kind, empirical),
        Command::ReproduceTables => {
            let rows = scan::reproduce_tables()?;
            scan::write_tables_csv(&mut out, &rows)
        }
        Command::Scan {
            field,
            degree,
            relate_central_value,
        } => {
            let spec = field_spec(&field)?;
            let rows = scan::scan_squarefree(&spec, degree, relate_central_value)?;
            scan::write_scan_csv(&mut out, &rows)
        }
    }
}

fn smallest_prime_factor(n: u32) -> Option<u32> {
    if n < 2 {
        return None;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return Some(d);
        }
        d += 1;
    }
    Some(n)
}

fn field_spec(args: &FieldArgs) -> Result<FieldSpec> {
    match &args.ext_modulus {
        None => FieldSpec::prime(args.q).map_err(|e| {
            if args.q % 2 == 1 && smallest_prime_factor(args.q).is_some_and(|p| p < args.q) {
                Error::parse(format!(
                    "{} is not prime; pass --ext-modulus to define the extension field F_{}",
                    args.q, args.q
                ))
            } else {
                e
            }
        }),
        Some(text) => {
            let p = smallest_prime_factor(args.q)
                .ok_or_else(|| Error::parse("--q must be at least 3"))?;
            let base = FieldSpec::prime(p)?;
            let poly = text::parse_poly(&base, text)?;
            let codes: Vec<u32> = poly.coeffs().iter().map(|c| c.code()).collect();
            let spec = FieldSpec::extension(p, &codes)?;
            if spec.q() != args.q {
                return Err(Error::parse(format!(
                    "--ext-modulus defines F_{} but --q is {}",
                    spec.q(),
                    args.q
                )));
            }
            Ok(spec)
        }
    }
}

/// Renders ascending decimal-string coefficients as a polynomial in `u`,
/// e.g. `["1","3","5"]` → `1 + 3u + 5u^2`.
fn u_poly_text(coeffs: &[String]) -> String {
    let mut out = String::new();
    for (i, c) in coeffs.iter().enumerate() {
        if c == "0" {
            continue;
        }
        let (negative, magnitude) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let unit = magnitude == "1";
        if i == 0 {
            out.push_str(magnitude);
        } else {
            if !unit {
                out.push_str(magnitude);
            }
            out.push('u');
            if i > 1 {
                out.push_str(&format!("^{i}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn cmd_lfunc<W: Write>(w: &mut W, cache: &Cache, args: &ModulusArgs) -> Result<()> {
    let spec = field_spec(&args.field)?;
    let poly = text::parse_poly(&spec, &args.m)?;
    let canonical = text::format_poly(&poly);
    let record = match cache.load(spec.q(), &canonical)? {
        Some(r) => r,
        None => {
            let ctx = ModulusContext::new(&spec, &poly)?;
            let r = ExperimentRecord::from_context(&ctx);
            cache.store(&r)?;
            r
        }
    };
    writeln!(w, "q = {}, m = {}", record.q, record.modulus)?;
    writeln!(w, "L(u, chi_m) = {}", u_poly_text(&record.l_coeffs))?;
    if record.angles.is_empty() {
        writeln!(w, "inverse-zero angles: none (degree {})", record.l_coeffs.len() - 1)?;
    } else {
        let list: Vec<String> = record.angles.iter().map(|t| format!("{t:.12}")).collect();
        writeln!(w, "inverse-zero angles theta_j: {}", list.join(", "))?;
    }
    writeln!(w, "rh residual = {:.3e}", record.rh_residual)?;
    writeln!(w, "angle verdict: {}", record.gsh_verdict)?;
    writeln!(w, "central value L(q^(-1/2)) = {:.12}", record.central_value)?;
    Ok(())
}

fn cmd_bias<W: Write>(
    w: &mut W,
    args: &ModulusArgs,
    kind: SeriesKind,
    n: usize,
    fast: Option<usize>,
) -> Result<()> {
    let spec = field_spec(&args.field)?;
    let poly = text::parse_poly(&spec, &args.m)?;
    let ctx = ModulusContext::new(&spec, &poly)?;
    match fast {
        Some(index) => {
            let recurrence = ctx.recurrence(kind)?;
            writeln!(w, "n,b")?;
            writeln!(w, "{index},{}", recurrence.nth(index))?;
            Ok(())
        }
        None => {
            let series = ctx.series(kind, n)?;
            write_bias_csv(w, &series)
        }
    }
}

fn cmd_density<W: Write>(
    w: &mut W,
    cache: &Cache,
    args: &ModulusArgs,
    kind: SeriesKind,
    empirical: Option<usize>,
) -> Result<()> {
    let spec = field_spec(&args.field)?;
    let poly = text::parse_poly(&spec, &args.m)?;
    let canonical = text::format_poly(&poly);
    let cached = cache.load(spec.q(), &canonical)?;

    // A cached report satisfies the request when weight and cumulative flag
    // match and it came from the requested mode: any limiting source for
    // --model, or an empirical count with exactly the requested horizon
    // (recovered through its 1/sqrt(horizon) error bound).
    let matches_request = |d: &DensityReport, cumulative: bool| {
        d.kind == kind
            && d.cumulative == cumulative
            && match empirical {
                Some(h) => {
                    d.source == DensitySource::Empirical
                        && d.error_bound == (h as f64).sqrt().recip()
                }
                None => d.source != DensitySource::Empirical,
            }
    };
    let from_cache = cached.as_ref().and_then(|r| {
        let nc = r.density_reports.iter().find(|d| matches_request(d, false))?;
        let cum = r.density_reports.iter().find(|d| matches_request(d, true))?;
        Some(vec![nc.clone(), cum.clone()])
    });

    let reports = match from_cache {
        Some(reports) => reports,
        None => {
            let ctx = ModulusContext::new(&spec, &poly)?;
            let compute = |cumulative: bool| match empirical {
                Some(h) => density::empirical_density(&ctx, kind, cumulative, h),
                None => match kind {
                    SeriesKind::Liouville => density::density_lambda(&ctx, cumulative),
                    SeriesKind::Mobius => density::density_mu(&ctx, cumulative),
                },
            };
            let reports = vec![compute(false)?, compute(true)?];
            let mut record =
                cached.unwrap_or_else(|| ExperimentRecord::from_context(&ctx));
            record.merge_reports(&reports);
            cache.store(&record)?;
            reports
        }
    };
    let value = serde_json::to_value(&reports)?;
    writeln!(w, "{}", serde_json::to_string_pretty(&value)?)?;
    Ok(())
}
