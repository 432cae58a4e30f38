//! Oscillatory models for bias series via partial fractions.
//!
//! A reduced rational generating function `N(u)/D(u)` with simple poles has
//! coefficients
//!
//! ```text
//! b(n) = Σ_k A_k · u_k^{-n}          (exactly, for n > deg N − deg D)
//! A_k  = -N(u_k) / (u_k · D'(u_k))
//! ```
//!
//! For the denominators arising here every pole is one of: `±q^{-1/2}`
//! (giving parity-dependent main terms `α_even`, `α_odd`), `u = 1` (giving an
//! additive constant), or a conjugate pair `q^{-1/2}·e^{±iθ_j}` at an
//! inverse-zero angle (giving an oscillation `β_j·sin(nθ_j + ω_j)`).  The
//! assembled model is
//!
//! ```text
//! b(n) = q^{n/2} · ( α_parity(n) + Σ_j β_j·sin(nθ_j + ω_j) ) + C
//! ```
//!
//! The `α` constants also have closed forms as elementary-symmetric
//! expressions in the `cos θ_j` (see [`SymmetricConstants`]); the model
//! builder cross-checks residues against series expansion, and the density
//! layer cross-checks residues against the closed forms.

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lfunc::InverseZeroData;
use crate::series::RationalGF;
use crate::tolerances::{
    MODEL_SERIES_TOL, RECURRENCE_VALIDATION_TERMS, ROOT_MATCH_TOL,
};
use crate::zpoly;

/// One oscillating component `β·sin(nθ + ω)` of a model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OscillatoryTerm {
    /// Angle of the inverse-zero pair driving this term.
    pub theta: f64,
    /// Amplitude `β = 2·|A|` where `A` is the residue at the upper pole.
    pub beta: f64,
    /// Phase `ω = π/2 − arg A`.
    pub omega: f64,
}

/// The full oscillatory model of a bias series (or of its cumulative sums).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OscillatoryModel {
    /// Field size.
    pub q: u32,
    /// Main-term coefficient at even `n` (`A₊ + A₋`).
    pub alpha_even: f64,
    /// Main-term coefficient at odd `n` (`A₊ − A₋`).
    pub alpha_odd: f64,
    /// Additive constant from a pole at `u = 1` (0.0 when absent).
    pub constant: f64,
    /// Oscillating components, sorted by angle.
    pub terms: Vec<OscillatoryTerm>,
    /// Index from which the model reproduces the exact series to rounding
    /// (set to `2·deg m`; the true threshold is never later than this).
    pub valid_from: usize,
}

impl OscillatoryModel {
    /// Model value at index `n`.
    pub fn eval(&self, n: usize) -> f64 {
        (self.q as f64).sqrt().powi(n as i32) * self.normalized_main(n) + self.constant
    }

    /// The normalized main term `α_parity + Σ β_j sin(nθ_j + ω_j)`, i.e.
    /// `(b(n) - C)·q^{-n/2}`.  Its sign is the asymptotic sign of `b(n)`.
    pub fn normalized_main(&self, n: usize) -> f64 {
        let alpha = if n.is_multiple_of(2) {
            self.alpha_even
        } else {
            self.alpha_odd
        };
        let osc: f64 = self
            .terms
            .iter()
            .map(|t| t.beta * (n as f64 * t.theta + t.omega).sin())
            .sum();
        alpha + osc
    }

    /// The amplitudes `β_j` in angle order.
    pub fn amplitudes(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.beta).collect()
    }
}

/// Extracts the oscillatory model of a reduced generating function.
///
/// Every denominator root is located numerically and classified as
/// `±q^{-1/2}`, `u = 1`, or an inverse-zero pair; an unclassifiable or
/// repeated root is an integrity error.  Residues at `u = 1` are computed in
/// exact integer arithmetic (the constant is a ratio of two integers).  The
/// finished model is validated against the exact series expansion over a
/// window past `valid_from`.
pub fn oscillatory_model(
    gf: &RationalGF,
    zeros: &InverseZeroData,
    q: u32,
) -> Result<OscillatoryModel> {
    let sqrt_q = (q as f64).sqrt();
    let m_deg = 2 * zeros.m_prime() + 1 + usize::from(zeros.has_unit_zero);
    let valid_from = 2 * m_deg;
    let den = gf.denominator();
    let num = gf.numerator();

    let mut alpha_plus = 0.0f64;
    let mut alpha_minus = 0.0f64;
    let mut constant = 0.0f64;
    let mut terms: Vec<OscillatoryTerm> = Vec::new();

    if den.len() > 1 {
        // Exact squarefreeness check: repeated poles (a double pole at u = 1
        // for even-degree cumulative Möbius sums, say) break the simple-pole
        // residue calculus, and numeric root separation cannot detect them
        // reliably.
        if zpoly::has_repeated_roots(den)? {
            return Err(Error::integrity(
                "repeated generating-function pole; the simple-pole model does not apply",
            ));
        }
        let roots = zpoly::complex_roots(den)?;
        let den_deriv = zpoly::derivative(den);
        let residue_at = |u: Complex64| -> Complex64 {
            -zpoly::eval_complex(num, u) / (u * zpoly::eval_complex(&den_deriv, u))
        };
        let mut used = vec![false; zeros.angles.len()];
        let mut lower_half = 0usize;
        for root in roots {
            if (root - Complex64::new(1.0, 0.0)).norm() <= ROOT_MATCH_TOL {
                // Exact residue: -N(1)/D'(1), both integers.
                let n1 = zpoly::sum_coeffs(num);
                let d1: num_bigint::BigInt = den_deriv.iter().sum();
                if d1.is_zero() {
                    return Err(Error::integrity("pole at u = 1 is not simple"));
                }
                constant = -n1.to_f64().unwrap_or(f64::NAN) / d1.to_f64().unwrap_or(f64::NAN);
            } else if (root - Complex64::new(sqrt_q.recip(), 0.0)).norm() <= ROOT_MATCH_TOL {
                alpha_plus = residue_at(Complex64::new(sqrt_q.recip(), 0.0)).re;
            } else if (root + Complex64::new(sqrt_q.recip(), 0.0)).norm() <= ROOT_MATCH_TOL {
                alpha_minus = residue_at(Complex64::new(-sqrt_q.recip(), 0.0)).re;
            } else if root.im > 0.0 {
                let mut matched = false;
                for (j, &theta) in zeros.angles.iter().enumerate() {
                    let candidate = Complex64::from_polar(sqrt_q.recip(), theta);
                    if (root - candidate).norm() <= ROOT_MATCH_TOL {
                        if used[j] {
                            return Err(Error::integrity(
                                "two denominator roots matched the same inverse-zero angle",
                            ));
                        }
                        used[j] = true;
                        let a = residue_at(candidate);
                        terms.push(OscillatoryTerm {
                            theta,
                            beta: 2.0 * a.norm(),
                            omega: std::f64::consts::FRAC_PI_2 - a.arg(),
                        });
                        matched = true;
                        break;
                    }
                }
                if !matched {
                    return Err(Error::integrity(format!(
                        "unclassified generating-function pole at {root}"
                    )));
                }
            } else if root.im < 0.0 {
                lower_half += 1;
            } else {
                return Err(Error::integrity(format!(
                    "unclassified real generating-function pole at {root}"
                )));
            }
        }
        if lower_half != terms.len() {
            return Err(Error::integrity(
                "generating-function poles do not form conjugate pairs",
            ));
        }
        terms.sort_by(|a, b| a.theta.partial_cmp(&b.theta).expect("finite angles"));
    }

    let model = OscillatoryModel {
        q,
        alpha_even: alpha_plus + alpha_minus,
        alpha_odd: alpha_plus - alpha_minus,
        constant,
        terms,
        valid_from,
    };

    // Validation window: the model must reproduce the exact expansion, in
    // q^{n/2}-normalized form, from valid_from onward.
    let horizon = valid_from + RECURRENCE_VALIDATION_TERMS;
    let series = gf.expand(horizon + 1);
    for (n, coeff) in series.iter().enumerate().skip(valid_from) {
        let scale = sqrt_q.powi(n as i32);
        let exact = coeff.to_f64().unwrap_or(f64::NAN);
        let predicted = model.eval(n);
        let deviation = (predicted - exact).abs() / scale;
        // A NaN deviation (overflowing coefficients) must also fail.
        if !deviation.is_finite() || deviation > MODEL_SERIES_TOL {
            return Err(Error::integrity(format!(
                "oscillatory model disagrees with the exact series at n = {n}: \
                 model {predicted}, series {exact}"
            )));
        }
    }
    Ok(model)
}

/// Closed-form constants attached to an angle set: the normalization `C_m`
/// and the even/odd elementary-symmetric sums of the cosines.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SymmetricConstants {
    /// Field size.
    pub q: u32,
    /// Whether the modulus degree is even (changes the `α` closed forms).
    pub even_modulus: bool,
    /// `C_m = ∏_i (1 − q^{-M_i}) / (2^{M'} ∏_j sin² θ_j)`.
    pub c_m: f64,
    /// Sum of the even-degree elementary symmetric polynomials in `cos θ_j`.
    pub e_even: f64,
    /// Sum of the odd-degree elementary symmetric polynomials in `cos θ_j`.
    pub e_odd: f64,
    /// The cosines `cos θ_j` themselves, in angle order.
    pub cosines: Vec<f64>,
}

impl SymmetricConstants {
    /// The closed-form band bounds `(c₊, c₋)`, equal to the model's
    /// `(α_even, α_odd)` for the Liouville series.
    ///
    /// With `E = e_even`, `O = e_odd`, `s = √q`:
    ///
    /// * odd modulus degree, non-cumulative: `C_m·(E, O)`
    /// * even degree non-cumulative, and odd degree cumulative:
    ///   `C_m·(qE + sO, sE + qO)/(q−1)`
    /// * even degree cumulative:
    ///   `C_m·((q²+q)E + 2q^{3/2}O, 2q^{3/2}E + (q²+q)O)/(q−1)²`
    pub fn alpha_bounds(&self, cumulative: bool) -> (f64, f64) {
        let q = self.q as f64;
        let s = q.sqrt();
        let e = self.e_even;
        let o = self.e_odd;
        match (self.even_modulus, cumulative) {
            (false, false) => (self.c_m * e, self.c_m * o),
            (true, false) | (false, true) => (
                self.c_m * (q * e + s * o) / (q - 1.0),
                self.c_m * (s * e + q * o) / (q - 1.0),
            ),
            (true, true) => {
                let d = (q - 1.0) * (q - 1.0);
                (
                    self.c_m * ((q * q + q) * e + 2.0 * q * s * o) / d,
                    self.c_m * (2.0 * q * s * e + (q * q + q) * o) / d,
                )
            }
        }
    }
}

/// Computes [`SymmetricConstants`] from the factor degrees of the modulus and
/// its inverse-zero data.
pub fn symmetric_constants(
    q: u32,
    factor_degrees: &[usize],
    zeros: &InverseZeroData,
) -> SymmetricConstants {
    let qf = q as f64;
    let cosines: Vec<f64> = zeros.angles.iter().map(|t| t.cos()).collect();
    let mut product_part = 1.0f64;
    for &d in factor_degrees {
        product_part *= 1.0 - qf.powi(-(d as i32));
    }
    let mut sin_sq = 1.0f64;
    for t in &zeros.angles {
        let s = t.sin();
        sin_sq *= s * s;
    }
    let c_m = product_part / (2.0f64.powi(zeros.m_prime() as i32) * sin_sq);
    // Even/odd elementary-symmetric sums via ∏(1 ± cos θ_j).
    let plus: f64 = cosines.iter().map(|c| 1.0 + c).product();
    let minus: f64 = cosines.iter().map(|c| 1.0 - c).product();
    SymmetricConstants {
        q,
        even_modulus: zeros.has_unit_zero,
        c_m,
        e_even: (plus + minus) / 2.0,
        e_odd: (plus - minus) / 2.0,
        cosines,
    }
}

/// Closed form of the finite sum `Σ_{j=1}^{n} r^j · sin(jθ + ω)` via the
/// complex geometric series (requires `r·e^{iθ} ≠ 1`).
pub fn sin_geometric_sum(r: f64, theta: f64, omega: f64, n: usize) -> f64 {
    let z = Complex64::from_polar(r, theta);
    let geom = z * (Complex64::new(1.0, 0.0) - z.powu(n as u32))
        / (Complex64::new(1.0, 0.0) - z);
    (Complex64::from_polar(1.0, omega) * geom).im
}
