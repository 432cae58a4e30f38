//! Everything works over non-prime fields too: `F₉ = F₃[x]/(x²+1)`.
//!
//! The theory needs only "odd prime power q". This example builds `F₉`,
//! checks a cubic modulus, and contrasts its L-polynomial and densities
//! with the same modulus text over `F₃`. The polynomial `T³+2T+1` stays
//! irreducible over `F₉` (9 and 27 share only `F₃`), but the character —
//! and with it the L-polynomial and the angle, which moves from π/6 to
//! π/3 — is genuinely different in the bigger field.
//!
//! Run with: `cargo run --example extension_fields`

use ffbias::context::ModulusContext;
use ffbias::density::density_lambda;
use ffbias::field::FieldSpec;

fn main() -> ffbias::Result<()> {
    // F_9 as F_3[x]/(x^2+1): coefficients of the defining modulus ascending.
    let f9 = FieldSpec::extension(3, &[1, 0, 1])?;
    assert_eq!(f9.q(), 9);
    println!("built F_{} = F_{}[x]/(x^2+1)", f9.q(), f9.p());

    for spec in [FieldSpec::prime(3)?, f9] {
        let ctx = ModulusContext::parse(&spec, "T^3+2T+1")?;
        let coeffs: Vec<String> = ctx.l().coeffs().iter().map(|c| c.to_string()).collect();
        let factor_degrees = ctx.factorization().factor_degrees();
        println!("q = {}:", spec.q());
        println!("  m = {} factors with degrees {factor_degrees:?}", ctx.modulus_text());
        println!("  L-coefficients [{}]", coeffs.join(", "));
        for theta in &ctx.zeros().angles {
            println!(
                "  θ = {:.12} = {:.6}·π  ({})",
                theta,
                theta / std::f64::consts::PI,
                ctx.zeros().gsh.summary
            );
        }
        let report = density_lambda(&ctx, false)?;
        println!(
            "  λ noncumulative densities ({:.6}, {:.6}, {:.6}) via {:?}",
            report.delta_plus, report.delta_zero, report.delta_minus, report.source
        );
    }
    Ok(())
}
