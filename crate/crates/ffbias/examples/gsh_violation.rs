//! When an angle is a rational multiple of π, nothing equidistributes —
//! the signs are eventually periodic and the densities are exact rationals.
//!
//! The modulus `T³+2T+1` over `F₃` has `𝓛 = 1 − 3u + 3u²` with inverse
//! zeros `√3·e^{±iπ/6}`: the angle is π/6, a rational multiple of π, so the
//! generic linear-independence hypothesis fails in the strongest way. The
//! oscillating term `sin(nπ/6 + ω)` cycles through 12 values; the sign
//! pattern of `b(n)` locks onto an exact period and every density is a
//! fraction with denominator dividing 12.
//!
//! Run with: `cargo run --example gsh_violation`

use ffbias::context::ModulusContext;
use ffbias::density::{density_lambda, density_mu, detect_periodic_pattern};
use ffbias::field::FieldSpec;
use ffbias::lfunc::AngleVerdict;
use ffbias::series::SeriesKind;

fn main() -> ffbias::Result<()> {
    let spec = FieldSpec::prime(3)?;
    let ctx = ModulusContext::parse(&spec, "T^3+2T+1")?;

    let zeros = ctx.zeros();
    println!("m = {} over F_3, angles:", ctx.modulus_text());
    for (theta, verdict) in zeros.angles.iter().zip(&zeros.gsh.angle_verdicts) {
        match verdict {
            AngleVerdict::RationalMultipleOfPi {
                numerator,
                denominator,
            } => println!("  θ = {theta:.12} = ({numerator}/{denominator})·π  ← rational"),
            AngleVerdict::PlausiblyIrrational => println!("  θ = {theta:.12} (irrational?)"),
        }
    }
    println!("  summary: {}", zeros.gsh.summary);

    // Show the raw sign pattern and the detected period.
    let series = ctx.series(SeriesKind::Liouville, 54)?;
    let start = 2 * ctx.modulus_degree();
    let signs = series.signs(start);
    let glyphs: String = signs
        .iter()
        .map(|s| match s.cmp(&0) {
            std::cmp::Ordering::Greater => '+',
            std::cmp::Ordering::Equal => '0',
            std::cmp::Ordering::Less => '-',
        })
        .collect();
    println!("λ signs from n = {start}: {glyphs}");
    let pattern = detect_periodic_pattern(&signs, 64).expect("rational angle ⇒ periodic");
    println!(
        "  period {} with {}+, {}0, {}− per window",
        pattern.period, pattern.positive, pattern.zero, pattern.negative
    );

    // The density reports use the exact periodic route automatically.
    let combos: [(&str, SeriesKind, bool); 4] = [
        ("λ noncumulative", SeriesKind::Liouville, false),
        ("λ cumulative  ", SeriesKind::Liouville, true),
        ("μ noncumulative", SeriesKind::Mobius, false),
        ("μ cumulative  ", SeriesKind::Mobius, true),
    ];
    for (label, kind, cumulative) in combos {
        let report = match kind {
            SeriesKind::Liouville => density_lambda(&ctx, cumulative)?,
            SeriesKind::Mobius => density_mu(&ctx, cumulative)?,
        };
        println!(
            "{label}: (δ₊, δ₀, δ₋) = ({:.6}, {:.6}, {:.6})  [{:?}]",
            report.delta_plus, report.delta_zero, report.delta_minus, report.source
        );
    }
    println!("expected exact values: λ-nc (3/4, 0, 1/4), λ-cum (1, 0, 0), μ both (5/12, 1/6, 5/12)");
    Ok(())
}
