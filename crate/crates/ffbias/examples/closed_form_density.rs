//! One conjugate pair of zeros ⇒ arcsin closed-form densities.
//!
//! For `m = T³+T+4` over `F₅` the L-polynomial is `1 + 3u + 5u²` with a
//! single inverse-zero pair `√5·e^{±iθ}`. The bias series obeys
//!
//! ```text
//! b(n) = 5^{n/2} ( α_parity + β sin(nθ + ω) )          (n ≥ valid_from)
//! ```
//!
//! and since `nθ` equidistributes mod 2π (θ/π is irrational), the limiting
//! density of positive signs is an explicit arcsin expression evaluated from
//! the model constants. This example extracts the residues, prints the
//! closed forms, and compares the limit against finite-horizon counts.
//!
//! Run with: `cargo run --example closed_form_density`

use ffbias::context::ModulusContext;
use ffbias::density::{density_lambda, empirical_density};
use ffbias::field::FieldSpec;
use ffbias::series::SeriesKind;

fn main() -> ffbias::Result<()> {
    let spec = FieldSpec::prime(5)?;
    let ctx = ModulusContext::parse(&spec, "T^3+T+4")?;

    let model = ctx.model(SeriesKind::Liouville, false)?;
    let term = &model.terms[0];
    println!("oscillatory model for b^λ(n), q = 5, m = T^3+T+4:");
    println!("  α_even = {:.12}  (= C_m·e_even, closed form 248/275·..)", model.alpha_even);
    println!("  α_odd  = {:.12}", model.alpha_odd);
    println!("  β = {:.12}, θ = {:.12}, ω = {:.12}", term.beta, term.theta, term.omega);
    println!("  valid from n = {}", model.valid_from);

    // The model reproduces the exact series to rounding once n ≥ valid_from.
    let series = ctx.series(SeriesKind::Liouville, 20)?;
    for n in [6usize, 13, 20] {
        let exact: f64 = {
            let s = series.b(n).to_string();
            s.parse().expect("fits in f64 at this size")
        };
        println!("  n = {n:>2}: model {:+.6}, exact {exact:+.6}", model.eval(n));
    }

    let constants = ctx.constants();
    println!("symmetric constants:");
    println!("  C_m = {:.12} (exact 248/275 = {:.12})", constants.c_m, 248.0 / 275.0);
    println!("  e_even = {:.12}, e_odd = {:.12}", constants.e_even, constants.e_odd);

    // Limiting densities: the equidistribution argument turns the sign
    // question into the measure of a band {lower < β sin(2πx) < upper}.
    for cumulative in [false, true] {
        let report = density_lambda(&ctx, cumulative)?;
        let label = if cumulative { "cumulative  " } else { "noncumulative" };
        println!(
            "{label}: δ₊ = {:.12} (source {:?}, error ≤ {:.1e})",
            report.delta_plus, report.source, report.error_bound
        );
    }

    // Finite horizons approach the limit from the side the tables show.
    println!("empirical positive-sign shares (noncumulative):");
    for horizon in [10usize, 100, 1000, 10000] {
        let report = empirical_density(&ctx, SeriesKind::Liouville, false, horizon)?;
        println!("  n ≤ {horizon:>5}: {:.4}", report.delta_plus);
    }
    println!("limit: 0.616822971666...");
    Ok(())
}
