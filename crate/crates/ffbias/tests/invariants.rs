//! Cross-cutting structural invariants: square-root growth of the bias
//! series, existence boundaries of the oscillatory models, model-vs-series
//! agreement through the public API, extension-field consistency, and the
//! anti-correlation between central values and bias strength.

use num_bigint::BigInt;
use num_traits::{Pow, Signed};

use ffbias::context::ModulusContext;
use ffbias::field::FieldSpec;
use ffbias::lfunc::GshVerdict;
use ffbias::scan::scan_squarefree;
use ffbias::series::{brute_force, SeriesKind};

fn ctx(q: u32, m: &str) -> ModulusContext {
    let spec = FieldSpec::prime(q).expect("reference field");
    ModulusContext::parse(&spec, m).expect("reference modulus")
}

/// `|b(n)| ≤ 10·(M' + 2)·q^{n/2}` for both λ and μ on the reference moduli —
/// the square-root cancellation the models encode, with generous headroom.
#[test]
fn series_growth_respects_square_root_bound() {
    for (q, m) in [(5, "T^3+T+4"), (3, "(T^2+1)*(T^3+2T+1)"), (3, "T^3+2T+1")] {
        let c = ctx(q, m);
        let factor = 10.0 * (c.zeros().m_prime() as f64 + 2.0);
        for kind in [SeriesKind::Liouville, SeriesKind::Mobius] {
            let series = c.series(kind, 40).unwrap();
            for n in 0..=40 {
                let bound = factor * (q as f64).powf(n as f64 / 2.0);
                let b = series.b(n).to_string().parse::<f64>().unwrap();
                assert!(b.abs() <= bound, "{m} {kind:?} n={n}: |{b}| > {bound}");
            }
        }
    }
}

/// The same bound holds far beyond the expanded window, checked in exact
/// integer arithmetic through the recurrence: `|b(200)| ≤ 30·5^100`.
#[test]
fn growth_bound_at_large_index_via_recurrence() {
    let c = ctx(5, "T^3+T+4");
    let recurrence = c.recurrence(SeriesKind::Liouville).unwrap();
    let bound = BigInt::from(30) * BigInt::from(5).pow(100u32);
    assert!(recurrence.nth(200).abs() <= bound);
}

/// The cumulative Möbius model exists exactly when the modulus degree is odd:
/// even degree forces `𝓛(1) = 0` and a double pole at `u = 1`, which the
/// simple-pole model must refuse.  Swept over every squarefree monic modulus
/// of degree ≤ 4 over F_3.
#[test]
fn cumulative_mobius_model_exists_iff_odd_degree() {
    let spec = FieldSpec::prime(3).unwrap();
    for degree in 1..=4 {
        for f in ffbias::poly::enumerate_monic(&spec, degree).unwrap() {
            let factorization = ffbias::factor::factor(&spec, &f).unwrap();
            if !factorization.factors().iter().all(|(_, e)| *e == 1) {
                continue;
            }
            let c = ModulusContext::new(&spec, &f).unwrap();
            let model = c.model(SeriesKind::Mobius, true);
            if degree % 2 == 1 {
                assert!(model.is_ok(), "odd degree {}: {:?}", c.modulus_text(), model.err());
            } else {
                assert!(
                    matches!(model, Err(ffbias::Error::Integrity(_))),
                    "even degree {} must refuse the cumulative Möbius model",
                    c.modulus_text()
                );
            }
        }
    }
}

/// Model predictions track the exact series through the public API: relative
/// to `q^{n/2}`, within the validation tolerance, over a window well past
/// `valid_from`, for both kinds and both cumulative variants.
#[test]
fn models_track_exact_series_beyond_validation_window() {
    for (q, m) in [(5, "T^3+T+4"), (3, "(T^2+1)*(T^3+2T+1)")] {
        let c = ctx(q, m);
        for kind in [SeriesKind::Liouville, SeriesKind::Mobius] {
            for cumulative in [false, true] {
                let model = c.model(kind, cumulative).unwrap();
                let horizon = model.valid_from + 80;
                let series = c.series(kind, horizon).unwrap();
                for n in model.valid_from..=horizon {
                    let exact = if cumulative {
                        series.cumulative(n)
                    } else {
                        series.b(n)
                    };
                    let exact = exact.to_string().parse::<f64>().unwrap();
                    let deviation =
                        (model.eval(n) - exact).abs() / (q as f64).powf(n as f64 / 2.0);
                    assert!(
                        deviation <= 1e-6,
                        "{m} {kind:?} cumulative={cumulative} n={n}: deviation {deviation:.3e}"
                    );
                }
            }
        }
    }
}

/// Series expansion agrees with direct enumeration over an extension field:
/// the same modulus text parses over F_9 and the twisted sums still match.
#[test]
fn extension_field_expansion_matches_brute_force() {
    let spec = FieldSpec::extension(3, &[1, 0, 1]).unwrap();
    let c = ModulusContext::parse(&spec, "T^3+2T+1").unwrap();
    let horizon = 5;
    let sums = brute_force(c.spec(), c.modulus(), horizon).unwrap();
    let lambda = c.series(SeriesKind::Liouville, horizon).unwrap();
    let mu = c.series(SeriesKind::Mobius, horizon).unwrap();
    for n in 0..=horizon {
        assert_eq!(lambda.b(n), &sums.lambda[n], "λ over F_9 at n={n}");
        assert_eq!(mu.b(n), &sums.mu[n], "μ over F_9 at n={n}");
    }
}

fn spearman(pairs: &[(f64, f64)]) -> f64 {
    fn ranks(values: Vec<f64>) -> Vec<f64> {
        let n = values.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let mut out = vec![0.0; n];
        let mut i = 0;
        while i < n {
            let mut j = i;
            while j + 1 < n && values[order[j + 1]] == values[order[i]] {
                j += 1;
            }
            let avg = (i + j) as f64 / 2.0 + 1.0;
            for k in i..=j {
                out[order[k]] = avg;
            }
            i = j + 1;
        }
        out
    }
    let xs = ranks(pairs.iter().map(|p| p.0).collect());
    let ys = ranks(pairs.iter().map(|p| p.1).collect());
    let n = pairs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / n, ys.iter().sum::<f64>() / n);
    let cov: f64 = xs.iter().zip(&ys).map(|(a, b)| (a - mx) * (b - my)).sum();
    let vx: f64 = xs.iter().map(|a| (a - mx) * (a - mx)).sum();
    let vy: f64 = ys.iter().map(|b| (b - my) * (b - my)).sum();
    cov / (vx * vy).sqrt()
}

/// Small central values go with strong bias: over the 100 squarefree cubics
/// of F_5, Spearman rank correlation between `𝓛(q^{-1/2})` and `δ₊^{λ,nc}`
/// is decisively negative, and more so on the 80 generic (plausibly
/// irrational angle) moduli.
#[test]
fn central_value_anticorrelates_with_bias() {
    let spec = FieldSpec::prime(5).unwrap();
    let rows = scan_squarefree(&spec, 3, false).unwrap();
    assert_eq!(rows.len(), 100);

    let all: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.central_value, r.delta_plus_lambda_nc))
        .collect();
    let generic: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.gsh == GshVerdict::PlausiblyIrrational)
        .map(|r| (r.central_value, r.delta_plus_lambda_nc))
        .collect();
    assert_eq!(generic.len(), 80);

    let s_all = spearman(&all);
    let s_generic = spearman(&generic);
    assert!(s_all <= -0.5, "all rows: Spearman {s_all:.3}");
    assert!(s_generic <= -0.7, "generic rows: Spearman {s_generic:.3}");
}
