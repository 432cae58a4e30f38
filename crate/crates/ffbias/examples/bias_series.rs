//! The bias series three ways: exact expansion, linear recurrence, and
//! brute force.
//!
//! The weighted sums `b(n) = Σ_{deg f = n} χ_m(f)·λ(f)` have a *rational*
//! generating function `Σ b(n) u^n`, so they can be produced by
//!
//! 1. long division of the generating function (exact big integers),
//! 2. a short linear recurrence with an `O(log n)` matrix-power term lookup,
//! 3. literally enumerating all monic polynomials of each degree.
//!
//! This example runs all three on the reference modulus `T³+T+4` over `F₅`
//! and shows they agree; it ends by emitting the machine-readable CSV.
//!
//! Run with: `cargo run --example bias_series`

use ffbias::context::ModulusContext;
use ffbias::field::FieldSpec;
use ffbias::series::{brute_force, write_bias_csv, SeriesKind};

fn main() -> ffbias::Result<()> {
    let spec = FieldSpec::prime(5)?;
    let ctx = ModulusContext::parse(&spec, "T^3+T+4")?;

    // 1. Rational generating function and its exact expansion.
    let gf = ctx.gf(SeriesKind::Liouville)?;
    let num: Vec<String> = gf.numerator().iter().map(|c| c.to_string()).collect();
    let den: Vec<String> = gf.denominator().iter().map(|c| c.to_string()).collect();
    println!("generating function for b^λ(n), q = 5, m = T^3+T+4:");
    println!("  numerator   [{}]", num.join(", "));
    println!("  denominator [{}]", den.join(", "));

    let horizon = 14;
    let series = ctx.series(SeriesKind::Liouville, horizon)?;
    let terms: Vec<String> = (0..=horizon).map(|n| series.b(n).to_string()).collect();
    println!("  b(0..={horizon}) = [{}]", terms.join(", "));

    // 2. The recurrence extracted from the denominator.  Its coefficients
    // are valid from n₀ = deg(numerator) + 1 on; earlier terms are stored.
    let recurrence = ctx.recurrence(SeriesKind::Liouville)?;
    println!(
        "  recurrence coefficients {:?}, valid from n = {}",
        recurrence.coeffs(),
        recurrence.start()
    );
    let far = 200;
    println!("  b({far}) via matrix powering = {}", recurrence.nth(far));
    let long = ctx.series(SeriesKind::Liouville, far)?;
    assert_eq!(recurrence.nth(far), *long.b(far), "recurrence must match expansion");

    // 3. Brute force: enumerate every monic f with deg f ≤ 8 and sum
    // χ_m(f)·λ(f) and χ_m(f)·μ(f) directly.
    let sums = brute_force(&spec, ctx.modulus(), 8)?;
    println!("  brute force  b(0..=8) = {:?}", sums.lambda);
    for n in 0..=8usize {
        assert_eq!(&sums.lambda[n], series.b(n), "λ mismatch at n = {n}");
    }
    let mu_series = ctx.series(SeriesKind::Mobius, 8)?;
    for n in 0..=8usize {
        assert_eq!(&sums.mu[n], mu_series.b(n), "μ mismatch at n = {n}");
    }
    println!("  expansion, recurrence, and brute force all agree");
    println!();

    // Machine-readable form: n, b(n), cumulative B(n), and both signs.
    println!("CSV (n ≤ 10):");
    let short = ctx.series(SeriesKind::Liouville, 10)?;
    let mut csv = Vec::new();
    write_bias_csv(&mut csv, &short)?;
    print!("{}", String::from_utf8(csv).expect("CSV output is always UTF-8"));
    Ok(())
}
