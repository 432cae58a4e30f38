//! Two independent angles ⇒ densities by torus quadrature, checked by a
//! lattice rule.
//!
//! For the degree-5 modulus `(T²+1)(T³+2T+1)` over `F₃` the L-polynomial
//! has two conjugate pairs of inverse zeros whose angles are (numerically)
//! independent over the rationals, so `(nθ₁, nθ₂)` equidistributes on the
//! 2-torus and the limiting sign density is the measure of the band
//!
//! ```text
//! { (x, y) :  −c₋ < β₁ sin 2πx + β₂ sin 2πy < c₊ }
//! ```
//!
//! shifted to `1/2 + ν/2`. One coordinate integrates exactly to an arcsin,
//! the other is handled by a periodic trapezoid rule (which converges
//! super-algebraically for this analytic integrand); a shifted rank-1
//! lattice rule cross-checks the value in a dimension-agnostic way.
//!
//! Run with: `cargo run --example torus_quadrature`

use ffbias::context::ModulusContext;
use ffbias::density::{density_lambda, torus_measure, torus_measure_qmc, TorusRegion};
use ffbias::field::FieldSpec;
use ffbias::series::SeriesKind;

fn main() -> ffbias::Result<()> {
    let spec = FieldSpec::prime(3)?;
    let ctx = ModulusContext::parse(&spec, "(T^2+1)*(T^3+2T+1)")?;

    let model = ctx.model(SeriesKind::Liouville, false)?;
    println!("modulus {} over F_3:", ctx.modulus_text());
    for (j, term) in model.terms.iter().enumerate() {
        println!(
            "  pair {}: θ = {:.12}, β = {:.12}, ω = {:.12}",
            j + 1,
            term.theta,
            term.beta,
            term.omega
        );
    }
    println!("  α_even = {:.12}, α_odd = {:.12}", model.alpha_even, model.alpha_odd);

    for cumulative in [false, true] {
        let label = if cumulative { "cumulative" } else { "noncumulative" };
        let report = density_lambda(&ctx, cumulative)?;
        println!(
            "{label}: δ₊ = {:.12}  (source {:?}, error ≤ {:.1e})",
            report.delta_plus, report.source, report.error_bound
        );

        // Rebuild the torus band by hand and cross-check with the lattice
        // rule (10^7 points × 8 random shifts, fixed seed).
        let m = ctx.model(SeriesKind::Liouville, cumulative)?;
        let (c_plus, c_minus) = ctx.constants().alpha_bounds(cumulative);
        let region = TorusRegion {
            upper: c_plus,
            lower: -c_minus,
            amplitudes: m.amplitudes(),
        };
        let quad = torus_measure(&region)?;
        let qmc = torus_measure_qmc(&region);
        println!(
            "    quadrature ν = {:.12} ± {:.1e};  lattice ν = {:.12} ± {:.1e}",
            quad.nu, quad.error_bound, qmc.nu, qmc.error_bound
        );
        assert!(
            (quad.nu - qmc.nu).abs() <= quad.error_bound + qmc.error_bound,
            "quadrature and lattice rule must agree"
        );
    }
    println!("reference values: 0.584866636792... and 0.739345568420...");
    Ok(())
}
