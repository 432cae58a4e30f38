//! The equidistribution engine behind every density claim, tested bare.
//!
//! All limiting densities in this crate reduce to statements of the form
//! "`{n : sin(nθ) > c}` has natural density `1/2 − asin(c)/π`", valid
//! whenever `θ/π` is irrational (one-dimensional equidistribution of `nθ`
//! modulo 2π, pushed through the arcsine law of the sine map). This example
//! checks that claim numerically for θ = 1 and θ = √2 at various levels
//! `c`, with no polynomial algebra anywhere in sight.
//!
//! Run with: `cargo run --example kronecker_weyl`

use ffbias::density::kw_density_check;

fn main() {
    let samples = 1_000_000;
    for (name, theta) in [("1", 1.0f64), ("sqrt(2)", 2.0f64.sqrt())] {
        println!("θ = {name}, N = {samples}:");
        for c in [-0.9, -0.5, 0.0, 0.5, 0.9] {
            let check = kw_density_check(theta, c, samples);
            println!(
                "  density(sin(nθ) > {c:+.1}) empirical {:.6}  analytic {:.6}  |Δ| = {:.1e}",
                check.empirical,
                check.analytic,
                (check.empirical - check.analytic).abs()
            );
            assert!(
                (check.empirical - check.analytic).abs() < 1e-2,
                "equidistribution check failed at θ = {name}, c = {c}"
            );
        }
    }
    println!("all within 1e-2 of the arcsine law");
}
