//! Whole-degree modulus scans and reproduction of the reference density
//! tables.
//!
//! A scan walks every squarefree monic modulus of a given degree, computes
//! the L-polynomial, angles, central value, and the four positive-sign
//! densities (λ/μ × plain/cumulative), and emits one CSV row per modulus.
//! Rows are ordered by canonical modulus text; with the central-value option
//! they are ordered by `𝓛(q^{-1/2})` instead, which makes the
//! small-central-value ⇒ small-bias trend directly visible in the output.

use std::io::Write;

use rayon::prelude::*;

use crate::context::ModulusContext;
use crate::density::{density_lambda, density_mu, empirical_density, DensityReport};
use crate::error::{Error, Result};
use crate::factor::factor;
use crate::field::FieldSpec;
use crate::lfunc::GshVerdict;
use crate::poly::enumerate_monic;
use crate::series::SeriesKind;

/// One scanned modulus.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    /// Canonical modulus text.
    pub modulus: String,
    /// Degree of the modulus.
    pub degree: usize,
    /// L-polynomial coefficients, ascending, as decimal strings.
    pub l_coeffs: Vec<String>,
    /// Inverse-zero angles, ascending.
    pub angles: Vec<f64>,
    /// Angle-independence verdict.
    pub gsh: GshVerdict,
    /// Central value `𝓛(q^{-1/2})`.
    pub central_value: f64,
    /// Positive-sign density of the λ series.
    pub delta_plus_lambda_nc: f64,
    /// Positive-sign density of the cumulative λ sums.
    pub delta_plus_lambda_cum: f64,
    /// Positive-sign density of the μ series.
    pub delta_plus_mu_nc: f64,
    /// Positive-sign density of the cumulative μ sums.
    pub delta_plus_mu_cum: f64,
}

/// Density with a guard-tolerant fallback: if the exact periodic route
/// refuses because the period bound is too large, fall back to a long
/// empirical count instead of failing the whole scan.
fn density_or_empirical(
    ctx: &ModulusContext,
    kind: SeriesKind,
    cumulative: bool,
) -> Result<DensityReport> {
    let routed = match kind {
        SeriesKind::Liouville => density_lambda(ctx, cumulative),
        SeriesKind::Mobius => density_mu(ctx, cumulative),
    };
    match routed {
        Err(Error::Guard(_)) => {
            empirical_density(ctx, kind, cumulative, 2 * ctx.modulus_degree() + 1200)
        }
        other => other,
    }
}

fn scan_one(spec: &FieldSpec, f: &crate::poly::Poly) -> Result<Option<ScanRow>> {
    let factorization = factor(spec, f)?;
    if factorization.factors().iter().any(|(_, e)| *e != 1) {
        return Ok(None);
    }
    let ctx = ModulusContext::new(spec, f)?;
    Ok(Some(ScanRow {
        modulus: ctx.modulus_text(),
        degree: ctx.modulus_degree(),
        l_coeffs: ctx.l().to_record().coeffs,
        angles: ctx.zeros().angles.clone(),
        gsh: ctx.zeros().gsh.summary,
        central_value: ctx.central_value().value,
        delta_plus_lambda_nc: density_or_empirical(&ctx, SeriesKind::Liouville, false)?
            .delta_plus,
        delta_plus_lambda_cum: density_or_empirical(&ctx, SeriesKind::Liouville, true)?
            .delta_plus,
        delta_plus_mu_nc: density_or_empirical(&ctx, SeriesKind::Mobius, false)?.delta_plus,
        delta_plus_mu_cum: density_or_empirical(&ctx, SeriesKind::Mobius, true)?.delta_plus,
    }))
}

/// Scans all squarefree monic moduli of the given degree in parallel.
///
/// Rows come back ordered by canonical modulus text, or by ascending central
/// value (ties broken by text) when `sort_by_central_value` is set.
pub fn scan_squarefree(
    spec: &FieldSpec,
    degree: usize,
    sort_by_central_value: bool,
) -> Result<Vec<ScanRow>> {
    if degree == 0 {
        return Err(Error::domain("scan requires a positive modulus degree"));
    }
    let polys: Vec<crate::poly::Poly> = enumerate_monic(spec, degree)?.collect();
    let scanned: Vec<Option<ScanRow>> = polys
        .par_iter()
        .map(|f| scan_one(spec, f))
        .collect::<Result<_>>()?;
    let mut rows: Vec<ScanRow> = scanned.into_iter().flatten().collect();
    if sort_by_central_value {
        rows.sort_by(|a, b| {
            a.central_value
                .total_cmp(&b.central_value)
                .then_with(|| a.modulus.cmp(&b.modulus))
        });
    } else {
        rows.sort_by(|a, b| a.modulus.cmp(&b.modulus));
    }
    Ok(rows)
}

/// Writes scan rows as CSV (`,` separators, `\n` line endings, header row).
/// List-valued fields are `;`-joined inside their cell.
pub fn write_scan_csv<W: Write>(mut w: W, rows: &[ScanRow]) -> Result<()> {
    writeln!(
        w,
        "modulus,degree,l_coeffs,angles,gsh,central_value,delta_plus_lambda_nc,\
         delta_plus_lambda_cum,delta_plus_mu_nc,delta_plus_mu_cum"
    )?;
    for r in rows {
        let angles: Vec<String> = r.angles.iter().map(|t| format!("{t:.12}")).collect();
        writeln!(
            w,
            "{},{},{},{},{},{:.6},{:.6},{:.6},{:.6},{:.6}",
            r.modulus,
            r.degree,
            r.l_coeffs.join(";"),
            angles.join(";"),
            r.gsh,
            r.central_value,
            r.delta_plus_lambda_nc,
            r.delta_plus_lambda_cum,
            r.delta_plus_mu_nc,
            r.delta_plus_mu_cum,
        )?;
    }
    Ok(())
}

/// One cell row of the reference density tables: empirical positive-sign
/// densities at one horizon for both weights, plain and cumulative.
#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    /// Which table (1 or 2).
    pub table: u32,
    /// Canonical modulus text.
    pub modulus: String,
    /// Field size.
    pub q: u32,
    /// Counting horizon `n ≤ horizon`.
    pub horizon: usize,
    /// Positive-sign density of the λ series.
    pub lambda_nc: f64,
    /// Positive-sign density of the cumulative λ sums.
    pub lambda_cum: f64,
    /// Positive-sign density of the μ series.
    pub mu_nc: f64,
    /// Positive-sign density of the cumulative μ sums.
    pub mu_cum: f64,
}

const TABLE_HORIZONS: [usize; 4] = [10, 100, 1000, 10_000];

/// Recomputes both reference tables: empirical sign densities of the q = 5
/// cubic modulus (table 1) and the q = 3 degree-five modulus (table 2) at
/// horizons 10, 100, 1000, 10000.  Each series is expanded once to the full
/// horizon via its exact recurrence and the four checkpoints are prefix
/// counts of the same sign sequence.
pub fn reproduce_tables() -> Result<Vec<TableRow>> {
    let jobs: Vec<(u32, u32, &str, SeriesKind)> = [(1u32, 5u32, "T^3+T+4"), (2, 3, "(T^2+1)*(T^3+2T+1)")]
        .iter()
        .flat_map(|&(table, q, m)| {
            [SeriesKind::Liouville, SeriesKind::Mobius]
                .iter()
                .map(move |&kind| (table, q, m, kind))
                .collect::<Vec<_>>()
        })
        .collect();
    let horizon = *TABLE_HORIZONS.last().unwrap();
    // One computed table column set: (table, kind, canonical modulus, q,
    // per-horizon (noncumulative, cumulative) densities).
    type Computed = (u32, SeriesKind, String, u32, Vec<(f64, f64)>);
    let computed: Vec<Computed> = jobs
        .par_iter()
        .map(|&(table, q, m, kind)| {
            let spec = FieldSpec::prime(q)?;
            let ctx = ModulusContext::parse(&spec, m)?;
            let series = ctx.series(kind, horizon)?;
            let signs = series.signs(1);
            let cum_signs = series.cumulative_signs(1);
            let share = |s: &[i8], h: usize| {
                s[..h].iter().filter(|&&v| v > 0).count() as f64 / h as f64
            };
            let cells = TABLE_HORIZONS
                .iter()
                .map(|&h| (share(&signs, h), share(&cum_signs, h)))
                .collect();
            Ok((table, kind, ctx.modulus_text(), q, cells))
        })
        .collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for &(table, _, _, _, _) in computed.iter().filter(|j| j.1 == SeriesKind::Liouville) {
        let lambda = computed
            .iter()
            .find(|j| j.0 == table && j.1 == SeriesKind::Liouville)
            .expect("lambda job present");
        let mu = computed
            .iter()
            .find(|j| j.0 == table && j.1 == SeriesKind::Mobius)
            .expect("mu job present");
        for (i, &h) in TABLE_HORIZONS.iter().enumerate() {
            rows.push(TableRow {
                table,
                modulus: lambda.2.clone(),
                q: lambda.3,
                horizon: h,
                lambda_nc: lambda.4[i].0,
                lambda_cum: lambda.4[i].1,
                mu_nc: mu.4[i].0,
                mu_cum: mu.4[i].1,
            });
        }
    }
    rows.sort_by_key(|r| (r.table, r.horizon));
    Ok(rows)
}

/// Writes table rows as CSV with densities rounded to four decimals.
pub fn write_tables_csv<W: Write>(mut w: W, rows: &[TableRow]) -> Result<()> {
    writeln!(
        w,
        "table,modulus,q,horizon,lambda_nc,lambda_cum,mu_nc,mu_cum"
    )?;
    for r in rows {
        writeln!(
            w,
            "{},{},{},{},{:.4},{:.4},{:.4},{:.4}",
            r.table, r.modulus, r.q, r.horizon, r.lambda_nc, r.lambda_cum, r.mu_nc, r.mu_cum
        )?;
    }
    Ok(())
}
