//! L-polynomials of quadratic characters, their inverse zeros, and angle
//! diagnostics.
//!
//! For a monic squarefree nonconstant modulus `m` of degree `M`, the Dirichlet
//! series of the character `χ_m` is a polynomial
//!
//! ```text
//! 𝓛(u, χ_m) = Σ_{n ≥ 0} ( Σ_{f monic, deg f = n} χ_m(f) ) u^n
//! ```
//!
//! of degree `M - 1` with constant term 1 and integer coefficients.  Its
//! inverse zeros all have absolute value `√q` (the Riemann hypothesis for
//! function fields) and come in conjugate pairs `√q·e^{±iθ}` with
//! `θ ∈ (0, π)`, plus a forced simple zero at `u = 1` exactly when `M` is
//! even.  The multiset of angles `θ_j` drives everything downstream: the
//! oscillatory model for partial sums, the sign densities, and the
//! equidistribution diagnostics.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::character::QuadraticCharacter;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::{enumerate_monic, Poly};
use crate::text::{format_poly, parse_poly};
use crate::tolerances::{
    BRUTE_FORCE_GUARD, GSH_CF_REL_TOL, GSH_MAX_DENOMINATOR, GSH_RELATION_COEFF_BOUND,
    GSH_RELATION_TOL, POLE_SEPARATION_TOL,
};
use crate::zpoly;

/// The L-polynomial `𝓛(u, χ_m)` of a quadratic character, with exact integer
/// coefficients in ascending order.
#[derive(Debug, Clone, PartialEq)]
pub struct LPolynomial {
    spec: FieldSpec,
    modulus: Poly,
    coeffs: Vec<BigInt>,
}

impl LPolynomial {
    /// Field size `q`.
    pub fn q(&self) -> u32 {
        self.spec.q()
    }

    /// The field the modulus lives over.
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// The modulus `m` of the character.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Degree `M` of the modulus.
    pub fn modulus_degree(&self) -> usize {
        self.modulus.degree().expect("modulus is nonconstant")
    }

    /// Coefficients in ascending order; `coeffs()[0] == 1`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Degree of the L-polynomial (always `M - 1`).
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Horner evaluation at a real point.
    pub fn eval_f64(&self, x: f64) -> f64 {
        zpoly::eval_f64(&self.coeffs, x)
    }

    /// Serializable snapshot with decimal-string coefficients.
    pub fn to_record(&self) -> LPolynomialRecord {
        LPolynomialRecord {
            schema_version: crate::SCHEMA_VERSION,
            q: self.q(),
            modulus: format_poly(&self.modulus),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
    }

    /// Rebuilds an L-polynomial from a stored record, validating that the
    /// record belongs to the given field.
    pub fn from_record(spec: &FieldSpec, record: &LPolynomialRecord) -> Result<LPolynomial> {
        if record.q != spec.q() {
            return Err(Error::domain(format!(
                "record was computed over F_{} but the requested field is F_{}",
                record.q,
                spec.q()
            )));
        }
        let modulus = parse_poly(spec, &record.modulus)?;
        let mut coeffs = Vec::with_capacity(record.coeffs.len());
        for s in &record.coeffs {
            let c: BigInt = s
                .parse()
                .map_err(|_| Error::parse(format!("invalid integer coefficient {s:?}")))?;
            coeffs.push(c);
        }
        if coeffs.first().map(|c| c != &BigInt::from(1)).unwrap_or(true) {
            return Err(Error::integrity(
                "stored L-polynomial does not have constant term 1",
            ));
        }
        Ok(LPolynomial {
            spec: spec.clone(),
            modulus,
            coeffs,
        })
    }
}

/// JSON-friendly form of an [`LPolynomial`]: coefficients as decimal strings
/// so arbitrary-precision integers survive serialization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LPolynomialRecord {
    /// Format version of this record.
    pub schema_version: u32,
    /// Field size.
    pub q: u32,
    /// Canonical text form of the modulus.
    pub modulus: String,
    /// Ascending coefficients as decimal strings.
    pub coeffs: Vec<String>,
}

/// Computes the L-polynomial of `χ_m` by direct enumeration of monic
/// polynomials of each degree below `deg m`.
///
/// Validates the modulus (monic, nonconstant, squarefree) and checks the
/// structural facts the rest of the crate relies on: constant term 1, degree
/// exactly `M - 1`, and coefficient sum zero iff `M` is even.
pub fn l_polynomial(spec: &FieldSpec, modulus: &Poly) -> Result<LPolynomial> {
    let chi = QuadraticCharacter::new(spec, modulus)?;
    let m_deg = chi.modulus_degree();
    let mut total: u128 = 0;
    for n in 0..m_deg {
        total += (spec.q() as u128).pow(n as u32);
    }
    if total > BRUTE_FORCE_GUARD as u128 {
        return Err(Error::guard(format!(
            "computing this L-polynomial would enumerate {total} monic polynomials; \
             the guard limit is {BRUTE_FORCE_GUARD}"
        )));
    }
    let mut sums = vec![0i64; m_deg];
    for (n, slot) in sums.iter_mut().enumerate() {
        for f in enumerate_monic(spec, n)? {
            *slot += chi.eval(&f)? as i64;
        }
    }
    if sums[0] != 1 {
        return Err(Error::integrity(
            "L-polynomial constant term is not 1; character evaluation is inconsistent",
        ));
    }
    let mut coeffs: Vec<BigInt> = sums.iter().map(|&c| BigInt::from(c)).collect();
    zpoly::trim(&mut coeffs);
    if coeffs.len() != m_deg {
        return Err(Error::integrity(format!(
            "L-polynomial has degree {} but degree {} was expected for a modulus of degree {}",
            coeffs.len().saturating_sub(1),
            m_deg - 1,
            m_deg
        )));
    }
    let vanishes_at_one = zpoly::sum_coeffs(&coeffs).is_zero();
    if vanishes_at_one != (m_deg % 2 == 0) {
        return Err(Error::integrity(
            "L-polynomial vanishes at u = 1 iff the modulus degree is even; \
             this instance violates that dichotomy",
        ));
    }
    Ok(LPolynomial {
        spec: spec.clone(),
        modulus: modulus.clone(),
        coeffs,
    })
}

/// Inverse zeros of an L-polynomial, reduced to the data the oscillatory
/// model consumes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InverseZeroData {
    /// Angles `θ_j ∈ (0, π)`, ascending, one per conjugate pair of inverse
    /// zeros `√q·e^{±iθ_j}`.
    pub angles: Vec<f64>,
    /// Whether `u = 1` is a (simple) zero, i.e. whether `deg m` is even.
    pub has_unit_zero: bool,
    /// Largest deviation `| |γ| - √q |` over all non-unit inverse zeros `γ`;
    /// a numerical check of the Riemann hypothesis, not a proof input.
    pub rh_residual: f64,
    /// Rationality/relation diagnostics for the angles.
    pub gsh: GshReport,
}

impl InverseZeroData {
    /// Number of conjugate pairs, written `M'` in the API documentation.
    pub fn m_prime(&self) -> usize {
        self.angles.len()
    }
}

/// Locates the inverse zeros of an L-polynomial.
///
/// The zero at `u = 1` (present iff the modulus degree is even) is removed by
/// exact division; the remaining zeros are found via the eigenvalues of the
/// companion matrix and polished with a few Newton steps against the exact
/// coefficients.  Errors with an integrity report if the zero structure is
/// degenerate: a non-simple zero at `u = 1`, a real inverse zero `±√q`, or a
/// repeated conjugate pair.  Those configurations fall outside the model this
/// crate implements.
pub fn inverse_zeros(l: &LPolynomial) -> Result<InverseZeroData> {
    let sqrt_q = (l.q() as f64).sqrt();
    let mut reduced = l.coeffs().to_vec();
    let mut has_unit_zero = false;
    if zpoly::sum_coeffs(&reduced).is_zero() {
        reduced = zpoly::divide_by_one_minus_u(&reduced)?;
        has_unit_zero = true;
        if zpoly::sum_coeffs(&reduced).is_zero() {
            return Err(Error::integrity(
                "the inverse zero at u = 1 is not simple",
            ));
        }
    }
    let deg = reduced.len() - 1;
    if !deg.is_multiple_of(2) {
        return Err(Error::integrity(
            "odd number of non-unit inverse zeros; a real inverse zero is unsupported",
        ));
    }
    if deg == 0 {
        return Ok(InverseZeroData {
            angles: Vec::new(),
            has_unit_zero,
            rh_residual: 0.0,
            gsh: gsh_diagnostic(&[]),
        });
    }
    if zpoly::has_repeated_roots(&reduced)? {
        return Err(Error::integrity(
            "repeated (or nearly coincident) inverse zeros are unsupported",
        ));
    }
    let mut rh_residual: f64 = 0.0;
    let mut upper: Vec<Complex64> = Vec::new();
    let mut lower = 0usize;
    for u in zpoly::complex_roots(&reduced)? {
        let gamma = u.inv();
        rh_residual = rh_residual.max((gamma.norm() - sqrt_q).abs());
        if gamma.im.abs() <= POLE_SEPARATION_TOL * sqrt_q {
            return Err(Error::integrity(
                "a non-unit inverse zero lies on the real axis; \
                 the oscillatory model requires strictly complex pairs",
            ));
        }
        if gamma.im > 0.0 {
            upper.push(gamma);
        } else {
            lower += 1;
        }
    }
    if upper.len() != deg / 2 || lower != deg / 2 {
        return Err(Error::integrity(
            "inverse zeros do not split into conjugate pairs",
        ));
    }
    let mut angles: Vec<f64> = upper.iter().map(|g| g.arg()).collect();
    angles.sort_by(|a, b| a.partial_cmp(b).expect("angles are finite"));
    for w in angles.windows(2) {
        if w[1] - w[0] < POLE_SEPARATION_TOL {
            return Err(Error::integrity(
                "repeated (or nearly coincident) inverse zeros are unsupported",
            ));
        }
    }
    let gsh = gsh_diagnostic(&angles);
    Ok(InverseZeroData {
        angles,
        has_unit_zero,
        rh_residual,
        gsh,
    })
}

/// Verdict for a single angle `θ`: is `θ/π` rational with small denominator?
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum AngleVerdict {
    /// `θ/π ≈ numerator/denominator` to within the continued-fraction
    /// tolerance, with `denominator` at most the configured bound.
    RationalMultipleOfPi {
        /// Numerator of `θ/π` in lowest terms.
        numerator: i64,
        /// Denominator of `θ/π` in lowest terms.
        denominator: i64,
    },
    /// No small-denominator rational approximation was found.
    PlausiblyIrrational,
}

/// A small integer relation `c_π·π + c_i·θ_i + c_j·θ_j ≈ 0` between two
/// angles, with `gcd(|c_π|, c_i, |c_j|) = 1` and `c_i > 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngleRelation {
    /// Index of the first angle.
    pub i: usize,
    /// Index of the second angle.
    pub j: usize,
    /// Coefficient of `π`.
    pub pi_coeff: i64,
    /// Coefficient of `θ_i` (normalized positive).
    pub coeff_i: i64,
    /// Coefficient of `θ_j` (nonzero).
    pub coeff_j: i64,
    /// Magnitude of the residual `|c_π·π + c_i·θ_i + c_j·θ_j|`.
    pub residual: f64,
}

/// Overall verdict on the independence of the angle set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GshVerdict {
    /// No angle looks like a rational multiple of `π` and no small integer
    /// relation was detected; the generic (linear independence) hypothesis is
    /// consistent with the data.
    PlausiblyIrrational,
    /// At least one angle is (numerically) a rational multiple of `π`.
    RationalMultipleOfPi,
    /// No angle is individually rational, but a small integer relation links
    /// two angles, so independence is in doubt.
    Unresolved,
}

impl std::fmt::Display for GshVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GshVerdict::PlausiblyIrrational => "plausibly-irrational",
            GshVerdict::RationalMultipleOfPi => "rational-multiple-of-pi",
            GshVerdict::Unresolved => "unresolved",
        })
    }
}

/// Angle-independence diagnostics: per-angle rationality plus pairwise
/// integer-relation search.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GshReport {
    /// One verdict per angle, in the same order as the angle list.
    pub angle_verdicts: Vec<AngleVerdict>,
    /// Detected pairwise relations (at most one per pair, smallest
    /// coefficients first).
    pub relations: Vec<AngleRelation>,
    /// Aggregate verdict.
    pub summary: GshVerdict,
}

fn classify_angle(theta: f64) -> AngleVerdict {
    let x = theta / PI;
    // Continued-fraction convergents p/q of x; all convergents are already in
    // lowest terms.  Denominators are capped, so no i64 overflow is possible.
    let (mut p_prev, mut q_prev) = (1i64, 0i64);
    let (mut p_prev2, mut q_prev2) = (0i64, 1i64);
    let mut y = x;
    for _ in 0..64 {
        let a = y.floor();
        if !a.is_finite() || a >= 1e15 {
            break;
        }
        let ai = a as i64;
        let p = ai * p_prev + p_prev2;
        let q = ai * q_prev + q_prev2;
        if q > GSH_MAX_DENOMINATOR {
            break;
        }
        if q > 0 && (x - p as f64 / q as f64).abs() <= GSH_CF_REL_TOL * x.abs() {
            return AngleVerdict::RationalMultipleOfPi {
                numerator: p,
                denominator: q,
            };
        }
        (p_prev2, q_prev2) = (p_prev, q_prev);
        (p_prev, q_prev) = (p, q);
        let frac = y - a;
        if frac < 1e-18 {
            break;
        }
        y = frac.recip();
    }
    AngleVerdict::PlausiblyIrrational
}

fn find_relation(i: usize, j: usize, theta_i: f64, theta_j: f64) -> Option<AngleRelation> {
    let bound = GSH_RELATION_COEFF_BOUND;
    for ci in 1..=bound {
        for cj in -bound..=bound {
            if cj == 0 {
                continue;
            }
            let partial = ci as f64 * theta_i + cj as f64 * theta_j;
            let c_pi = (-partial / PI).round() as i64;
            if c_pi.abs() > bound {
                continue;
            }
            let residual = (c_pi as f64 * PI + partial).abs();
            let scale = 1.0 + (c_pi.abs() + ci + cj.abs()) as f64;
            if residual > GSH_RELATION_TOL * scale {
                continue;
            }
            let g = gcd3(c_pi.unsigned_abs(), ci as u64, cj.unsigned_abs());
            if g != 1 {
                // A non-primitive relation is a multiple of one with smaller
                // coefficients, which this scan finds first.
                continue;
            }
            return Some(AngleRelation {
                i,
                j,
                pi_coeff: c_pi,
                coeff_i: ci,
                coeff_j: cj,
                residual,
            });
        }
    }
    None
}

fn gcd3(a: u64, b: u64, c: u64) -> u64 {
    num_integer::gcd(num_integer::gcd(a, b), c)
}

/// Runs the angle-independence diagnostics on a sorted angle list.
///
/// An empty list yields a vacuous `PlausiblyIrrational` summary.  Pairs in
/// which both angles are individually rational multiples of `π` are skipped
/// in the relation search (they are trivially dependent).
pub fn gsh_diagnostic(angles: &[f64]) -> GshReport {
    let angle_verdicts: Vec<AngleVerdict> = angles.iter().map(|&t| classify_angle(t)).collect();
    let mut relations = Vec::new();
    for i in 0..angles.len() {
        for j in (i + 1)..angles.len() {
            let both_rational = matches!(
                angle_verdicts[i],
                AngleVerdict::RationalMultipleOfPi { .. }
            ) && matches!(
                angle_verdicts[j],
                AngleVerdict::RationalMultipleOfPi { .. }
            );
            if both_rational {
                continue;
            }
            if let Some(rel) = find_relation(i, j, angles[i], angles[j]) {
                relations.push(rel);
            }
        }
    }
    let any_rational = angle_verdicts
        .iter()
        .any(|v| matches!(v, AngleVerdict::RationalMultipleOfPi { .. }));
    let summary = if any_rational {
        GshVerdict::RationalMultipleOfPi
    } else if !relations.is_empty() {
        GshVerdict::Unresolved
    } else {
        GshVerdict::PlausiblyIrrational
    };
    GshReport {
        angle_verdicts,
        relations,
        summary,
    }
}

/// The value `𝓛(q^{-1/2})`, computed two ways as a cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CentralValue {
    /// Direct Horner evaluation of the coefficients at `q^{-1/2}`.
    pub value: f64,
    /// Product over angles `∏_j (2 - 2cos θ_j)`, times `1 - q^{-1/2}` when
    /// `u = 1` is a zero.  Equal to `value` up to rounding.
    pub product_form: f64,
}

/// Evaluates the L-polynomial at the central point `u = q^{-1/2}` both
/// directly and through its factorization over the inverse zeros.
pub fn central_l_value(l: &LPolynomial, zeros: &InverseZeroData) -> CentralValue {
    let sqrt_q = (l.q() as f64).sqrt();
    let value = l.eval_f64(sqrt_q.recip());
    let mut product_form: f64 = zeros.angles.iter().map(|t| 2.0 - 2.0 * t.cos()).product();
    if zeros.has_unit_zero {
        product_form *= 1.0 - sqrt_q.recip();
    }
    CentralValue {
        value,
        product_form,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;
    use num_traits::ToPrimitive;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, FRAC_PI_6};

    fn lp(q: u32, m: &str) -> LPolynomial {
        let spec = FieldSpec::prime(q).unwrap();
        let modulus = parse_poly(&spec, m).unwrap();
        l_polynomial(&spec, &modulus).unwrap()
    }

    fn coeffs_i64(l: &LPolynomial) -> Vec<i64> {
        l.coeffs().iter().map(|c| c.to_i64().unwrap()).collect()
    }

    #[test]
    fn golden_l_polynomials() {
        // Frozen by an independent enumeration oracle.
        assert_eq!(coeffs_i64(&lp(5, "T")), vec![1]);
        assert_eq!(coeffs_i64(&lp(5, "T^2+2")), vec![1, -1]);
        assert_eq!(coeffs_i64(&lp(5, "T^2+T")), vec![1, -1]);
        assert_eq!(coeffs_i64(&lp(5, "T^3+T+4")), vec![1, 3, 5]);
        assert_eq!(coeffs_i64(&lp(3, "T^3+2T+1")), vec![1, -3, 3]);
        assert_eq!(
            coeffs_i64(&lp(3, "(T^2+1)*(T^3+2T+1)")),
            vec![1, 1, 4, 3, 9]
        );
    }

    #[test]
    fn unit_zero_and_angle_counts() {
        let z = inverse_zeros(&lp(5, "T^2+T")).unwrap();
        assert!(z.has_unit_zero);
        assert_eq!(z.m_prime(), 0);

        let z = inverse_zeros(&lp(5, "T")).unwrap();
        assert!(!z.has_unit_zero);
        assert_eq!(z.m_prime(), 0);
        assert_eq!(z.rh_residual, 0.0);

        let z = inverse_zeros(&lp(5, "T^3+T+4")).unwrap();
        assert!(!z.has_unit_zero);
        assert_eq!(z.m_prime(), 1);

        let z = inverse_zeros(&lp(3, "(T^2+1)*(T^3+2T+1)")).unwrap();
        assert!(!z.has_unit_zero);
        assert_eq!(z.m_prime(), 2);
    }

    #[test]
    fn golden_angles() {
        // 1 - 3u + 3u^2 over F_3: inverse zeros (3 ± i√3)/2, angle π/6.
        let z = inverse_zeros(&lp(3, "T^3+2T+1")).unwrap();
        assert!((z.angles[0] - FRAC_PI_6).abs() < 1e-12);

        // 1 + 3u + 5u^2 over F_5: cos θ = -3/(2√5).
        let z = inverse_zeros(&lp(5, "T^3+T+4")).unwrap();
        let expected = (-3.0 / (2.0 * 5.0f64.sqrt())).acos();
        assert!((z.angles[0] - expected).abs() < 1e-12);

        // 1 + u + 4u^2 + 3u^3 + 9u^4 over F_3: cos θ ∈ {1/(2√3), -1/√3}.
        let z = inverse_zeros(&lp(3, "(T^2+1)*(T^3+2T+1)")).unwrap();
        let t1 = (1.0 / (2.0 * 3.0f64.sqrt())).acos();
        let t2 = (-1.0 / 3.0f64.sqrt()).acos();
        assert!((z.angles[0] - t1).abs() < 1e-12);
        assert!((z.angles[1] - t2).abs() < 1e-12);
        assert!(z.angles[0] < z.angles[1]);
    }

    #[test]
    fn rh_residuals_are_tiny() {
        for (q, m) in [
            (5, "T^2+2"),
            (5, "T^3+T+4"),
            (3, "T^3+2T+1"),
            (3, "(T^2+1)*(T^3+2T+1)"),
        ] {
            let z = inverse_zeros(&lp(q, m)).unwrap();
            assert!(
                z.rh_residual < crate::tolerances::RH_RESIDUAL_TOL,
                "residual {} too large for {m} over F_{q}",
                z.rh_residual
            );
        }
    }

    #[test]
    fn gsh_verdicts_for_reference_moduli() {
        let z = inverse_zeros(&lp(3, "T^3+2T+1")).unwrap();
        assert_eq!(z.gsh.summary, GshVerdict::RationalMultipleOfPi);
        assert_eq!(
            z.gsh.angle_verdicts[0],
            AngleVerdict::RationalMultipleOfPi {
                numerator: 1,
                denominator: 6
            }
        );

        let z = inverse_zeros(&lp(5, "T^3+T+4")).unwrap();
        assert_eq!(z.gsh.summary, GshVerdict::PlausiblyIrrational);

        let z = inverse_zeros(&lp(3, "(T^2+1)*(T^3+2T+1)")).unwrap();
        assert_eq!(z.gsh.summary, GshVerdict::PlausiblyIrrational);
        assert!(z.gsh.relations.is_empty());

        // No angles at all: vacuously consistent with independence.
        let z = inverse_zeros(&lp(5, "T")).unwrap();
        assert_eq!(z.gsh.summary, GshVerdict::PlausiblyIrrational);
    }

    #[test]
    fn gsh_synthetic_relation_detected() {
        // θ_2 = 2·θ_1 exactly: the primitive relation 2θ_1 - θ_2 = 0 should
        // surface, with no π term.
        let report = gsh_diagnostic(&[1.0, 2.0]);
        assert_eq!(report.summary, GshVerdict::Unresolved);
        assert_eq!(report.relations.len(), 1);
        let rel = &report.relations[0];
        assert_eq!(
            (rel.pi_coeff, rel.coeff_i, rel.coeff_j),
            (0, 2, -1),
            "unexpected relation {rel:?}"
        );
    }

    #[test]
    fn gsh_rational_pair_skips_relation_search() {
        let report = gsh_diagnostic(&[FRAC_PI_4, FRAC_PI_2]);
        assert_eq!(report.summary, GshVerdict::RationalMultipleOfPi);
        assert!(report.relations.is_empty());
        assert_eq!(
            report.angle_verdicts,
            vec![
                AngleVerdict::RationalMultipleOfPi {
                    numerator: 1,
                    denominator: 4
                },
                AngleVerdict::RationalMultipleOfPi {
                    numerator: 1,
                    denominator: 2
                },
            ]
        );
    }

    #[test]
    fn central_values_match_frozen_constants() {
        // 𝓛(1/√5) = 2 + 3/√5 for the F_5 cubic.
        let l = lp(5, "T^3+T+4");
        let z = inverse_zeros(&l).unwrap();
        let cv = central_l_value(&l, &z);
        assert!((cv.value - 3.341_640_786_499_873_6).abs() < 1e-12);
        assert!((cv.value - cv.product_form).abs() < 1e-12 * cv.value.abs());

        let l = lp(3, "(T^2+1)*(T^3+2T+1)");
        let z = inverse_zeros(&l).unwrap();
        let cv = central_l_value(&l, &z);
        assert!((cv.value - 4.488_033_871_712_586).abs() < 1e-12);
        assert!((cv.value - cv.product_form).abs() < 1e-12 * cv.value.abs());

        // Even modulus degree: the unit-zero factor enters the product form.
        let l = lp(5, "T^2+T");
        let z = inverse_zeros(&l).unwrap();
        let cv = central_l_value(&l, &z);
        assert!((cv.value - (1.0 - 0.2f64.sqrt())).abs() < 1e-12);
        assert!((cv.value - cv.product_form).abs() < 1e-12);
    }

    #[test]
    fn record_roundtrip_and_sorted_keys() {
        let l = lp(3, "(T^2+1)*(T^3+2T+1)");
        let record = l.to_record();
        assert_eq!(record.modulus, "T^5+T^2+2T+1");
        assert_eq!(record.coeffs, vec!["1", "1", "4", "3", "9"]);
        let spec = FieldSpec::prime(3).unwrap();
        let back = LPolynomial::from_record(&spec, &record).unwrap();
        assert_eq!(back, l);

        let json = serde_json::to_string(&serde_json::to_value(&record).unwrap()).unwrap();
        let c = json.find("\"coeffs\"").unwrap();
        let m = json.find("\"modulus\"").unwrap();
        let q = json.find("\"q\"").unwrap();
        let s = json.find("\"schema_version\"").unwrap();
        assert!(c < m && m < q && q < s, "keys not sorted: {json}");

        let wrong = FieldSpec::prime(5).unwrap();
        assert!(LPolynomial::from_record(&wrong, &record).is_err());
    }

    #[test]
    fn invalid_moduli_are_rejected() {
        let spec = FieldSpec::prime(3).unwrap();
        // (T+1)^2 is not squarefree.
        let sq = parse_poly(&spec, "T^2+2T+1").unwrap();
        assert!(l_polynomial(&spec, &sq).is_err());
        // Constants are not admissible moduli.
        let one = parse_poly(&spec, "1").unwrap();
        assert!(l_polynomial(&spec, &one).is_err());
    }

    #[test]
    fn degenerate_zero_structures_are_integrity_errors() {
        let spec = FieldSpec::prime(3).unwrap();
        let modulus = parse_poly(&spec, "T").unwrap();
        let synthetic = |coeffs: &[i64]| LPolynomial {
            spec: spec.clone(),
            modulus: modulus.clone(),
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        };
        // 1 - 3u^2 has real inverse zeros ±√3.
        let err = inverse_zeros(&synthetic(&[1, 0, -3])).unwrap_err();
        assert!(matches!(err, Error::Integrity(_)), "got {err:?}");
        // (1 + 3u^2)^2 has a repeated conjugate pair at angle π/2.
        let err = inverse_zeros(&synthetic(&[1, 0, 6, 0, 9])).unwrap_err();
        assert!(matches!(err, Error::Integrity(_)), "got {err:?}");
    }
}
