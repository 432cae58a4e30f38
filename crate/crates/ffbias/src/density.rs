//! Sign densities of bias series: exact periodic patterns, closed forms,
//! quadrature, and quasi-Monte Carlo.
//!
//! For a series `b(n) = q^{n/2}(α_parity + Σ β_j sin(nθ_j + ω_j)) + C` with
//! independent (irrational) angles, the sign of `b(n)` equidistributes like
//! the sign of `c_parity + Σ β_j sin(2πx_j)` over the torus, so the limiting
//! density of positive signs is
//!
//! ```text
//! δ₊ = 1/2 + ν/2,     ν = F(c₊) − F(−c₋)
//! ```
//!
//! where `F` is the distribution function of `Σ β_j sin(2πx_j)` and
//! `(c₊, c₋)` are the even/odd main-term bounds.  `ν` is computed exactly
//! (arcsin) in one dimension, by quadrature in two, and by a shifted rank-1
//! lattice rule in higher dimension.  When every angle is a rational
//! multiple of `π` the sign sequence is eventually periodic instead and the
//! densities are exact rationals read off one period.

use std::f64::consts::PI;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::context::ModulusContext;
use crate::error::{Error, Result};
use crate::lfunc::{AngleVerdict, GshVerdict};
use crate::series::SeriesKind;
use crate::tolerances::{
    ALPHA_CLOSED_FORM_REL_TOL, EXACT_ZERO_TOL, PERIOD_SEARCH_LIMIT, QMC_KOROBOV_A, QMC_POINTS,
    QMC_SEED, QMC_SHIFTS, QUADRATURE_POINTS,
};

/// The band `lower < Σ β_j sin(2πx_j) < upper` on the torus `T^d`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusRegion {
    /// Upper band bound (`c₊`).
    pub upper: f64,
    /// Lower band bound (`−c₋`).
    pub lower: f64,
    /// Oscillation amplitudes `β_j`, one per torus dimension.
    pub amplitudes: Vec<f64>,
}

/// A signed torus measure `ν = F(upper) − F(lower)` with an error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusMeasure {
    /// The signed measure.
    pub nu: f64,
    /// Estimated absolute error: f64 rounding slack in dimension 1, a
    /// half-resolution comparison in dimension 2, and three standard errors
    /// across the random shifts for the lattice rule.
    pub error_bound: f64,
}

fn asin_clamped(x: f64) -> f64 {
    x.clamp(-1.0, 1.0).asin()
}

/// Computes the signed band measure, dispatching on the dimension: exact
/// arcsin for one amplitude, trapezoid-with-arcsin-section for two, shifted
/// lattice rule for three or more.  Zero dimensions are a caller error (the
/// density routines handle that case with exact sign indicators).
pub fn torus_measure(region: &TorusRegion) -> Result<TorusMeasure> {
    match region.amplitudes.len() {
        0 => Err(Error::domain(
            "torus measure requires at least one oscillating amplitude",
        )),
        1 => {
            let beta = region.amplitudes[0];
            let nu =
                (asin_clamped(region.upper / beta) - asin_clamped(region.lower / beta)) / PI;
            Ok(TorusMeasure {
                nu,
                error_bound: 1e-12,
            })
        }
        2 => {
            let full = band_quadrature(region, QUADRATURE_POINTS);
            let half = band_quadrature(region, QUADRATURE_POINTS / 2);
            Ok(TorusMeasure {
                nu: full,
                error_bound: (full - half).abs() + 1e-10,
            })
        }
        _ => Ok(torus_measure_qmc(region)),
    }
}

/// Periodic trapezoid over the first angle with the exact arcsin section in
/// the second: `F(t) = 1/2 + asin(t/β)/π` conditioned on the first angle.
fn band_quadrature(region: &TorusRegion, n: usize) -> f64 {
    let b1 = region.amplitudes[0];
    let b2 = region.amplitudes[1];
    let mut total = 0.0;
    for i in 0..n {
        let x = 2.0 * PI * (i as f64) / (n as f64);
        let s = b1 * x.sin();
        total += (asin_clamped((region.upper - s) / b2)
            - asin_clamped((region.lower - s) / b2))
            / PI;
    }
    total / n as f64
}

/// Signed band measure by a shifted rank-1 lattice rule, usable in any
/// dimension ≥ 1 (the density dispatcher uses it for dimension ≥ 3; lower
/// dimensions use it only as an independent cross-check).
///
/// The lattice is Korobov-style with generator `(1, a, a², …) mod N` over a
/// prime `N`, averaged over eight independent uniform shifts drawn from a
/// fixed-seed ChaCha8 stream, so results are reproducible run to run.  The
/// error bound is three standard errors of the shift mean.
pub fn torus_measure_qmc(region: &TorusRegion) -> TorusMeasure {
    let d = region.amplitudes.len();
    let n = QMC_POINTS;
    let mut rng = ChaCha8Rng::seed_from_u64(QMC_SEED);
    let shifts: Vec<Vec<f64>> = (0..QMC_SHIFTS)
        .map(|_| (0..d).map(|_| rng.gen::<f64>()).collect())
        .collect();
    let mut gens = Vec::with_capacity(d);
    let mut g = 1u64;
    for _ in 0..d {
        gens.push(g);
        g = ((g as u128 * QMC_KOROBOV_A as u128) % n as u128) as u64;
    }
    let estimates: Vec<f64> = shifts
        .par_iter()
        .map(|shift| {
            let mut count = 0i64;
            let mut acc = vec![0u64; d];
            for _ in 0..n {
                let mut osc = 0.0;
                for j in 0..d {
                    acc[j] += gens[j];
                    if acc[j] >= n {
                        acc[j] -= n;
                    }
                    let x = acc[j] as f64 / n as f64 + shift[j];
                    osc += region.amplitudes[j] * (2.0 * PI * x).sin();
                }
                count += i64::from(osc < region.upper) - i64::from(osc < region.lower);
            }
            count as f64 / n as f64
        })
        .collect();
    let mean = estimates.iter().sum::<f64>() / estimates.len() as f64;
    let var = estimates
        .iter()
        .map(|e| (e - mean) * (e - mean))
        .sum::<f64>()
        / (estimates.len() - 1) as f64;
    TorusMeasure {
        nu: mean,
        error_bound: 3.0 * (var / estimates.len() as f64).sqrt(),
    }
}

/// An eventually periodic sign pattern: the minimal period and the sign
/// counts inside one period window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PeriodicPattern {
    /// Minimal period length.
    pub period: usize,
    /// Number of positive signs per period.
    pub positive: usize,
    /// Number of zero signs per period.
    pub zero: usize,
    /// Number of negative signs per period.
    pub negative: usize,
}

impl PeriodicPattern {
    /// The exact densities `(δ₊, δ₀, δ₋)` as rationals.
    pub fn densities(&self) -> (Ratio<i64>, Ratio<i64>, Ratio<i64>) {
        let p = self.period as i64;
        (
            Ratio::new(self.positive as i64, p),
            Ratio::new(self.zero as i64, p),
            Ratio::new(self.negative as i64, p),
        )
    }
}

/// Finds the minimal period of a sign sequence, requiring at least three
/// full windows of data (`len ≥ 3·P`) and exact periodicity over the whole
/// provided slice (`signs[i] == signs[i+P]` for every valid `i`), so a
/// transient prefix must be stripped by the caller first.
pub fn detect_periodic_pattern(signs: &[i8], max_period: usize) -> Option<PeriodicPattern> {
    for p in 1..=max_period.min(signs.len() / 3) {
        if (0..signs.len() - p).all(|i| signs[i] == signs[i + p]) {
            let window = &signs[..p];
            return Some(PeriodicPattern {
                period: p,
                positive: window.iter().filter(|&&s| s > 0).count(),
                zero: window.iter().filter(|&&s| s == 0).count(),
                negative: window.iter().filter(|&&s| s < 0).count(),
            });
        }
    }
    None
}

/// How a density figure was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DensitySource {
    /// Direct sign counting over a finite horizon.
    Empirical,
    /// Exact arcsin closed form (dimension ≤ 1), or exact indicators.
    ModelClosedForm,
    /// Two-dimensional band quadrature.
    ModelQuadrature,
    /// Shifted rank-1 lattice rule in dimension ≥ 3.
    ModelQmc,
    /// Exact rational counts from an eventually periodic sign pattern.
    PeriodicExact,
    /// The square-root cancellation theorem for the Möbius weight: densities
    /// are (1/2, 0, 1/2) whenever the angles are not all rational.
    TheoremMu,
}

/// A complete density result for one modulus/weight/cumulative combination.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    /// Format version of this record.
    pub schema_version: u32,
    /// Canonical text of the modulus.
    pub modulus: String,
    /// Field size.
    pub q: u32,
    /// Series weight.
    pub kind: SeriesKind,
    /// Whether this is the density of the cumulative sums `B(n)`.
    pub cumulative: bool,
    /// Density of positive signs.
    pub delta_plus: f64,
    /// Density of zero values.
    pub delta_zero: f64,
    /// Density of negative signs.
    pub delta_minus: f64,
    /// How the figures were obtained.
    pub source: DensitySource,
    /// Estimated absolute error on `delta_plus` (0 for exact sources).
    pub error_bound: f64,
    /// Angle-independence verdict carried over from the L-polynomial.
    pub gsh_verdict: GshVerdict,
}

fn report(
    ctx: &ModulusContext,
    kind: SeriesKind,
    cumulative: bool,
    deltas: (f64, f64, f64),
    source: DensitySource,
    error_bound: f64,
) -> DensityReport {
    DensityReport {
        schema_version: crate::SCHEMA_VERSION,
        modulus: ctx.modulus_text(),
        q: ctx.q(),
        kind,
        cumulative,
        delta_plus: deltas.0,
        delta_zero: deltas.1,
        delta_minus: deltas.2,
        source,
        error_bound,
        gsh_verdict: ctx.zeros().gsh.summary,
    }
}

fn rational_angle_count(ctx: &ModulusContext) -> usize {
    ctx.zeros()
        .gsh
        .angle_verdicts
        .iter()
        .filter(|v| matches!(v, AngleVerdict::RationalMultipleOfPi { .. }))
        .count()
}

/// Limiting sign densities of the Liouville bias series.
///
/// Routing: if every angle is a rational multiple of `π` (and there is at
/// least one), the sign pattern is eventually periodic and the densities are
/// exact rationals; if the angles are mixed rational/irrational, neither the
/// periodic nor the equidistribution route is sound, so a long empirical
/// count is returned; otherwise the oscillatory model and the torus measure
/// produce the limiting densities, after cross-checking the model's `α`
/// constants against their closed forms.
pub fn density_lambda(ctx: &ModulusContext, cumulative: bool) -> Result<DensityReport> {
    let m_prime = ctx.zeros().m_prime();
    let rational = rational_angle_count(ctx);
    if m_prime > 0 && rational == m_prime {
        periodic_path(ctx, SeriesKind::Liouville, cumulative)
    } else if rational > 0 {
        empirical_fallback(ctx, SeriesKind::Liouville, cumulative)
    } else {
        lambda_model_path(ctx, cumulative)
    }
}

/// Limiting sign densities of the Möbius bias series.
///
/// Same routing as [`density_lambda`] for rational and mixed angle sets
/// (degree ≤ 2 moduli have no angles at all and are always periodic); in the
/// generic case the Möbius model has no `±q^{-1/2}` poles, pure square-root
/// cancellation gives densities `(1/2, 0, 1/2)`, and the model's main term
/// is checked to vanish.
pub fn density_mu(ctx: &ModulusContext, cumulative: bool) -> Result<DensityReport> {
    let m_prime = ctx.zeros().m_prime();
    let rational = rational_angle_count(ctx);
    if m_prime == 0 || rational == m_prime {
        periodic_path(ctx, SeriesKind::Mobius, cumulative)
    } else if rational > 0 {
        empirical_fallback(ctx, SeriesKind::Mobius, cumulative)
    } else {
        // The mechanism is checked on the non-cumulative model: for even-degree
        // moduli the cumulative generating function has a double pole at u = 1
        // (a linear drift term), but the drift is dominated by the q^{n/2}
        // oscillation, so the densities below hold for both variants.
        let model = ctx.model(SeriesKind::Mobius, false)?;
        if model.alpha_even.abs() > EXACT_ZERO_TOL || model.alpha_odd.abs() > EXACT_ZERO_TOL {
            return Err(Error::integrity(
                "Möbius model has a nonzero main term; square-root cancellation does not apply",
            ));
        }
        Ok(report(
            ctx,
            SeriesKind::Mobius,
            cumulative,
            (0.5, 0.0, 0.5),
            DensitySource::TheoremMu,
            0.0,
        ))
    }
}

fn lambda_model_path(ctx: &ModulusContext, cumulative: bool) -> Result<DensityReport> {
    let constants = ctx.constants();
    let model = ctx.model(SeriesKind::Liouville, cumulative)?;
    let (c_plus, c_minus) = constants.alpha_bounds(cumulative);
    for (label, got, want) in [
        ("alpha_even", model.alpha_even, c_plus),
        ("alpha_odd", model.alpha_odd, c_minus),
    ] {
        if (got - want).abs() > ALPHA_CLOSED_FORM_REL_TOL * (1.0 + want.abs()) {
            return Err(Error::integrity(format!(
                "residue {label} = {got} disagrees with its closed form {want}"
            )));
        }
    }
    if ctx.zeros().m_prime() == 0 {
        let classify = |c: f64| -> i8 {
            if c.abs() <= EXACT_ZERO_TOL {
                0
            } else if c > 0.0 {
                1
            } else {
                -1
            }
        };
        let (sp, sm) = (classify(c_plus), classify(c_minus));
        let frac = |hit: bool| if hit { 0.5 } else { 0.0 };
        let deltas = (
            frac(sp > 0) + frac(sm > 0),
            frac(sp == 0) + frac(sm == 0),
            frac(sp < 0) + frac(sm < 0),
        );
        return Ok(report(
            ctx,
            SeriesKind::Liouville,
            cumulative,
            deltas,
            DensitySource::ModelClosedForm,
            0.0,
        ));
    }
    let region = TorusRegion {
        upper: c_plus,
        lower: -c_minus,
        amplitudes: model.amplitudes(),
    };
    let measure = torus_measure(&region)?;
    let delta_plus = 0.5 + measure.nu / 2.0;
    let delta_minus = 0.5 - measure.nu / 2.0;
    let error_bound = measure.error_bound / 2.0;
    if delta_plus + error_bound < 0.5 - 1e-9 {
        return Err(Error::integrity(
            "Liouville positive-sign density fell below 1/2, contradicting the bias theorem",
        ));
    }
    let source = match region.amplitudes.len() {
        1 => DensitySource::ModelClosedForm,
        2 => DensitySource::ModelQuadrature,
        _ => DensitySource::ModelQmc,
    };
    Ok(report(
        ctx,
        SeriesKind::Liouville,
        cumulative,
        (delta_plus, 0.0, delta_minus),
        source,
        error_bound,
    ))
}

fn periodic_path(
    ctx: &ModulusContext,
    kind: SeriesKind,
    cumulative: bool,
) -> Result<DensityReport> {
    let start = 2 * ctx.modulus_degree();
    let mut lcm: usize = 1;
    for v in &ctx.zeros().gsh.angle_verdicts {
        if let AngleVerdict::RationalMultipleOfPi { denominator, .. } = v {
            lcm = num_integer::lcm(lcm, *denominator as usize);
        }
    }
    let bound = 2 * lcm;
    if bound > PERIOD_SEARCH_LIMIT {
        return Err(Error::guard(format!(
            "periodic-density search bound {bound} exceeds the limit {PERIOD_SEARCH_LIMIT}"
        )));
    }
    let horizon = start + 4 * bound;
    let series = ctx.series(kind, horizon)?;
    let signs = if cumulative {
        series.cumulative_signs(start)
    } else {
        series.signs(start)
    };
    let pattern = detect_periodic_pattern(&signs, bound).ok_or_else(|| {
        Error::integrity(
            "all angles are rational multiples of π but the sign pattern is not periodic \
             within the expected bound",
        )
    })?;
    let (dp, dz, dm) = pattern.densities();
    let to_f64 = |r: Ratio<i64>| *r.numer() as f64 / *r.denom() as f64;
    Ok(report(
        ctx,
        kind,
        cumulative,
        (to_f64(dp), to_f64(dz), to_f64(dm)),
        DensitySource::PeriodicExact,
        0.0,
    ))
}

fn empirical_fallback(
    ctx: &ModulusContext,
    kind: SeriesKind,
    cumulative: bool,
) -> Result<DensityReport> {
    empirical_density(ctx, kind, cumulative, 2 * ctx.modulus_degree() + 1200)
}

/// Sign densities counted directly over `n = 1..=horizon`.
///
/// The error bound is the usual `1/√horizon` heuristic — indicative only,
/// since sign sequences here are deterministic, not i.i.d. samples.
pub fn empirical_density(
    ctx: &ModulusContext,
    kind: SeriesKind,
    cumulative: bool,
    horizon: usize,
) -> Result<DensityReport> {
    if horizon == 0 {
        return Err(Error::domain("empirical density requires a positive horizon"));
    }
    let series = ctx.series(kind, horizon)?;
    let signs = if cumulative {
        series.cumulative_signs(1)
    } else {
        series.signs(1)
    };
    let total = signs.len() as f64;
    let positive = signs.iter().filter(|&&s| s > 0).count() as f64;
    let zero = signs.iter().filter(|&&s| s == 0).count() as f64;
    let negative = signs.iter().filter(|&&s| s < 0).count() as f64;
    Ok(report(
        ctx,
        kind,
        cumulative,
        (positive / total, zero / total, negative / total),
        DensitySource::Empirical,
        1.0 / total.sqrt(),
    ))
}

/// Result of the one-dimensional equidistribution sanity check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KwCheck {
    /// Fraction of `1 ≤ j ≤ samples` with `sin(jθ) > c`.
    pub empirical: f64,
    /// The limit `1/2 − asin(c)/π` predicted by equidistribution of `jθ`
    /// modulo `2π` for irrational `θ/π`.
    pub analytic: f64,
}

/// Counts how often `sin(jθ)` exceeds `c` and compares with the
/// equidistribution limit — the one-dimensional special case of the torus
/// machinery, testable without any modulus.
pub fn kw_density_check(theta: f64, c: f64, samples: usize) -> KwCheck {
    let count = (1..=samples)
        .filter(|&j| (j as f64 * theta).sin() > c)
        .count();
    KwCheck {
        empirical: count as f64 / samples as f64,
        analytic: 0.5 - asin_clamped(c) / PI,
    }
}
