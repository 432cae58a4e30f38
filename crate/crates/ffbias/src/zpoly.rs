//! Exact polynomial arithmetic over the integers and rationals.
//!
//! The generating-function layer works with power series whose numerators and
//! denominators have integer coefficients that grow exponentially in the
//! degree, so everything here uses [`BigInt`] (and [`BigRational`] for the
//! division steps where intermediate quotients are fractional).
//!
//! Representation: a polynomial is a `Vec<BigInt>` in ascending order of
//! exponent, trimmed so that the zero polynomial is the empty vector and a
//! nonzero polynomial has a nonzero last entry.  Degree is therefore
//! `len() - 1` for nonzero polynomials.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, ascending coefficients, trimmed.
pub(crate) type ZPoly = Vec<BigInt>;

/// Rational polynomial, ascending coefficients, trimmed.
pub(crate) type QPoly = Vec<BigRational>;

/// Removes trailing zero coefficients in place.
pub(crate) fn trim(f: &mut ZPoly) {
    while f.last().map(|c| c.is_zero()).unwrap_or(false) {
        f.pop();
    }
}

fn trim_q(f: &mut QPoly) {
    while f.last().map(|c| c.is_zero()).unwrap_or(false) {
        f.pop();
    }
}

/// Builds a trimmed integer polynomial from machine-word coefficients.
pub(crate) fn from_i64(coeffs: &[i64]) -> ZPoly {
    let mut out: ZPoly = coeffs.iter().map(|&c| BigInt::from(c)).collect();
    trim(&mut out);
    out
}

/// Difference `a - b` of two integer polynomials.
pub(crate) fn sub(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

/// Product of two integer polynomials (schoolbook; degrees stay small here).
pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(&mut out);
    out
}

/// Formal derivative.
pub(crate) fn derivative(f: &[BigInt]) -> ZPoly {
    let mut out: ZPoly = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    trim(&mut out);
    out
}

/// Sum of all coefficients, i.e. the exact value at `u = 1`.
pub(crate) fn sum_coeffs(f: &[BigInt]) -> BigInt {
    f.iter().sum()
}

/// Horner evaluation at a real point.
///
/// Each coefficient is converted to `f64` individually; this is exact as long
/// as coefficients stay below 2^53, which holds for every polynomial this
/// crate evaluates numerically (denominators and L-polynomials of modest
/// degree).
pub(crate) fn eval_f64(f: &[BigInt], x: f64) -> f64 {
    let mut acc = 0.0;
    for c in f.iter().rev() {
        acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
    }
    acc
}

/// Horner evaluation at a complex point (same precision caveat as `eval_f64`).
pub(crate) fn eval_complex(f: &[BigInt], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in f.iter().rev() {
        acc = acc * z + Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
    }
    acc
}

/// Exact division by `1 - u`.
///
/// Returns `g` with `f = (1 - u) * g`, which exists iff the coefficients of
/// `f` sum to zero.  Errors with an integrity report otherwise, since callers
/// invoke this only after establishing that `u = 1` is a root.
pub(crate) fn divide_by_one_minus_u(f: &[BigInt]) -> Result<ZPoly> {
    if f.is_empty() {
        return Ok(Vec::new());
    }
    // f_i = g_i - g_{i-1}  =>  g_i = f_i + g_{i-1}; the final prefix sum must
    // vanish for the division to be exact.
    let mut out = Vec::with_capacity(f.len() - 1);
    let mut acc = BigInt::zero();
    for c in &f[..f.len() - 1] {
        acc += c;
        out.push(acc.clone());
    }
    acc += &f[f.len() - 1];
    if !acc.is_zero() {
        return Err(Error::integrity(
            "division by 1 - u is not exact: coefficients do not sum to zero",
        ));
    }
    trim(&mut out);
    Ok(out)
}

/// Lifts integer coefficients to rationals.
pub(crate) fn to_rational(f: &[BigInt]) -> QPoly {
    f.iter().map(|c| BigRational::from(c.clone())).collect()
}

/// Rational polynomial long division: returns `(quotient, remainder)`.
fn q_divmod(a: &[BigRational], b: &[BigRational]) -> Result<(QPoly, QPoly)> {
    if b.is_empty() {
        return Err(Error::domain("polynomial division by zero"));
    }
    let mut rem: QPoly = a.to_vec();
    trim_q(&mut rem);
    if rem.len() < b.len() {
        return Ok((Vec::new(), rem));
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    let lead = b.last().expect("nonzero divisor").clone();
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().expect("trimmed") / &lead;
        quot[shift] = factor.clone();
        for (i, c) in b.iter().enumerate() {
            let delta = c * &factor;
            rem[shift + i] -= delta;
        }
        // The leading term cancels exactly in rational arithmetic.
        rem.pop();
        trim_q(&mut rem);
        if rem.is_empty() {
            break;
        }
    }
    Ok((quot, rem))
}

/// Monic polynomial gcd over the rationals (Euclidean algorithm).
pub(crate) fn q_gcd(a: &[BigRational], b: &[BigRational]) -> Result<QPoly> {
    let mut x: QPoly = a.to_vec();
    let mut y: QPoly = b.to_vec();
    trim_q(&mut x);
    trim_q(&mut y);
    while !y.is_empty() {
        let (_, r) = q_divmod(&x, &y)?;
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in &mut x {
            *c /= &lead;
        }
    }
    Ok(x)
}

/// Clears denominators and content, returning a primitive integer polynomial
/// whose lowest-order nonzero coefficient is positive.
pub(crate) fn primitive_integer(f: &[BigRational]) -> ZPoly {
    let mut work: QPoly = f.to_vec();
    trim_q(&mut work);
    if work.is_empty() {
        return Vec::new();
    }
    let mut denom_lcm = BigInt::one();
    for c in &work {
        denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
    }
    let mut ints: ZPoly = work
        .iter()
        .map(|c| {
            let scaled = c * BigRational::from(denom_lcm.clone());
            debug_assert!(scaled.is_integer());
            scaled.to_integer()
        })
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = num_integer::gcd(content, c.clone());
    }
    if !content.is_zero() {
        for c in &mut ints {
            *c /= &content;
        }
    }
    let first_nonzero_negative = ints
        .iter()
        .find(|c| !c.is_zero())
        .map(|c| c.is_negative())
        .unwrap_or(false);
    if first_nonzero_negative {
        for c in &mut ints {
            *c = -&*c;
        }
    }
    ints
}

/// Exact test for repeated complex roots: `gcd(f, f')` is nonconstant.
///
/// Runs entirely in rational arithmetic, so the answer does not depend on the
/// accuracy of any numeric root finder — repeated roots sit exactly at the
/// `√ε` conditioning floor where numeric separation tests are unreliable.
pub(crate) fn has_repeated_roots(f: &[BigInt]) -> Result<bool> {
    let g = q_gcd(&to_rational(f), &to_rational(&derivative(f)))?;
    Ok(g.len() > 1)
}

/// All complex roots of an integer polynomial, via a bounded Durand–Kerner
/// iteration followed by a few Newton polishing steps against the exact
/// coefficients.
///
/// Requires a nonzero polynomial of degree at least 1 whose coefficients fit
/// in `f64` exactly (true for every polynomial this crate roots: L-polynomial
/// and generating-function denominators with coefficients well below 2^53).
/// Durand–Kerner is used instead of companion-matrix eigenvalues because QR
/// iterations can cycle without converging on companion matrices whose
/// spectrum is symmetric under negation — which L-polynomials with only
/// even-power terms produce.  The starting points sit on a Cauchy-bound
/// circle with an irrational phase offset so no symmetry of the root set is
/// shared by the initial guess.
pub(crate) fn complex_roots(f: &[BigInt]) -> Result<Vec<Complex64>> {
    let deg = match f.iter().rposition(|c| !c.is_zero()) {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::domain(
                "root finding requires a polynomial of degree at least 1",
            ))
        }
    };
    let coef: Vec<f64> = f[..=deg]
        .iter()
        .map(|c| c.to_f64().unwrap_or(f64::NAN))
        .collect();
    if coef.iter().any(|c| !c.is_finite()) {
        return Err(Error::integrity(
            "polynomial coefficients exceed the f64 range in root finding",
        ));
    }
    let lead = coef[deg];
    let horner = |z: Complex64| coef.iter().rev().fold(Complex64::ZERO, |acc, &c| acc * z + c);

    let radius = 1.0
        + coef[..deg]
            .iter()
            .fold(0.0f64, |m, c| m.max((c / lead).abs()));
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let phase = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.437;
            Complex64::from_polar(radius, phase)
        })
        .collect();
    let tol = 1e-13 * radius;
    let mut converged = false;
    for _ in 0..500 {
        let mut step_max = 0.0f64;
        for i in 0..deg {
            let mut separation = Complex64::new(lead, 0.0);
            for j in 0..deg {
                if j != i {
                    separation *= z[i] - z[j];
                }
            }
            if separation.norm() < 1e-300 {
                continue;
            }
            let step = horner(z[i]) / separation;
            z[i] -= step;
            step_max = step_max.max(step.norm());
        }
        if step_max < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::integrity(
            "root iteration failed to converge; the polynomial may have tightly clustered roots",
        ));
    }

    let deriv = derivative(f);
    for root in &mut z {
        for _ in 0..4 {
            let d = eval_complex(&deriv, *root);
            if d.norm() < 1e-300 {
                break;
            }
            *root -= eval_complex(f, *root) / d;
        }
    }
    Ok(z)
}

/// Exact integer cofactor division: returns `num / den`, erroring if the
/// division leaves a remainder or a fractional coefficient.
pub(crate) fn divide_exact(num: &[BigInt], den: &[BigInt]) -> Result<ZPoly> {
    let (q, r) = q_divmod(&to_rational(num), &to_rational(den))?;
    if !r.is_empty() {
        return Err(Error::integrity(
            "expected exact polynomial division but found a nonzero remainder",
        ));
    }
    let mut out = Vec::with_capacity(q.len());
    for c in &q {
        if !c.is_integer() {
            return Err(Error::integrity(
                "expected integer quotient in exact polynomial division",
            ));
        }
        out.push(c.to_integer());
    }
    trim(&mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_roots_of_negation_symmetric_quartic() {
        // 9u^4 - 3u^2 + 1 has roots 3^{-1/2}·e^{iφ} for φ = ±π/6, ±5π/6: a
        // spectrum symmetric under negation, the class where QR iterations on
        // the companion matrix can cycle forever.  Durand–Kerner must converge
        // and hit all four roots.
        let f = from_i64(&[1, 0, -3, 0, 9]);
        let mut roots = complex_roots(&f).unwrap();
        assert_eq!(roots.len(), 4);
        roots.sort_by(|a, b| a.arg().partial_cmp(&b.arg()).unwrap());
        let r = 3.0f64.sqrt().recip();
        let pi = std::f64::consts::PI;
        for (root, phi) in roots
            .iter()
            .zip([-5.0 * pi / 6.0, -pi / 6.0, pi / 6.0, 5.0 * pi / 6.0])
        {
            let expected = Complex64::from_polar(r, phi);
            assert!((root - expected).norm() < 1e-12, "{root} vs {expected}");
        }
    }

    #[test]
    fn complex_roots_rejects_constants() {
        assert!(complex_roots(&from_i64(&[7])).is_err());
        assert!(complex_roots(&from_i64(&[0])).is_err());
    }

    #[test]
    fn mul_and_divide_exact_roundtrip() {
        let a = from_i64(&[1, 3, 0, -15, -25]);
        let b = from_i64(&[1, 0, 0, -1]);
        let prod = mul(&a, &b);
        assert_eq!(divide_exact(&prod, &b).unwrap(), a);
        assert_eq!(divide_exact(&prod, &a).unwrap(), b);
    }

    #[test]
    fn divide_by_one_minus_u_prefix_sums() {
        // (1 - u)(1 + 2u + 3u^2) = 1 + u + u^2 - 3u^3.
        let f = from_i64(&[1, 1, 1, -3]);
        assert_eq!(divide_by_one_minus_u(&f).unwrap(), from_i64(&[1, 2, 3]));
        let bad = from_i64(&[1, 1]);
        assert!(divide_by_one_minus_u(&bad).is_err());
    }

    #[test]
    fn gcd_finds_shared_factor() {
        // Both polynomials share exactly (1 - u).
        let a = to_rational(&mul(&from_i64(&[1, -1]), &from_i64(&[1, 0, 2])));
        let b = to_rational(&mul(&from_i64(&[1, -1]), &from_i64(&[3, 1])));
        let g = q_gcd(&a, &b).unwrap();
        let prim = primitive_integer(&g);
        assert_eq!(prim, from_i64(&[1, -1]));
    }

    #[test]
    fn gcd_of_coprime_is_constant() {
        let g = q_gcd(
            &to_rational(&from_i64(&[1, 0, 2])),
            &to_rational(&from_i64(&[3, 1])),
        )
        .unwrap();
        assert_eq!(g.len(), 1);
        assert!(g[0].is_one());
    }

    #[test]
    fn primitive_integer_normalizes_sign_and_content() {
        use num_bigint::BigInt;
        let half = BigRational::new(BigInt::from(-3), BigInt::from(2));
        let third = BigRational::new(BigInt::from(-1), BigInt::from(3));
        // -3/2 - (1/3)u  ->  multiply by 6: -9 - 2u  ->  sign-normalize: 9 + 2u.
        assert_eq!(primitive_integer(&[half, third]), from_i64(&[9, 2]));
    }

    #[test]
    fn eval_matches_horner_by_hand() {
        let f = from_i64(&[2, -1, 5]);
        let x = 0.25;
        assert!((eval_f64(&f, x) - (2.0 - 0.25 + 5.0 * 0.0625)).abs() < 1e-15);
        let z = Complex64::new(0.0, 1.0);
        let v = eval_complex(&f, z);
        // 2 - i + 5 i^2 = -3 - i.
        assert!((v - Complex64::new(-3.0, -1.0)).norm() < 1e-15);
    }

    #[test]
    fn derivative_and_sum() {
        let f = from_i64(&[7, 0, -4, 2]);
        assert_eq!(derivative(&f), from_i64(&[0, -8, 6]));
        assert_eq!(sum_coeffs(&f), BigInt::from(5));
    }
}
