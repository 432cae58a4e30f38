//! Centralized numerical tolerances, guards, and fixed seeds.
//!
//! Every magic number used by the numerical parts of the crate lives here,
//! with a note on where it comes from. Keeping them in one place makes the
//! accuracy contract auditable and keeps unit tests honest (several tests
//! assert relationships between these constants so they cannot drift apart
//! silently).

/// Maximum allowed deviation of an inverse-zero modulus from `sqrt(q)`.
///
/// Inverse zeros are found by companion-matrix eigenvalues followed by Newton
/// polishing; on the integer polynomials handled here that pipeline is
/// accurate to a few ulps (empirically `<1e-12` up to degree 7), so `1e-9`
/// leaves three orders of margin while still catching genuine failures (a
/// zero off the critical circle, or a polished root that drifted).
pub const RH_RESIDUAL_TOL: f64 = 1e-9;

/// Two polished denominator roots closer than this are treated as a repeated
/// pole, which the partial-fraction model does not support (it would need
/// polynomial-in-`n` coefficients). Distinct roots of the integer polynomials
/// in scope are separated by far more than this.
pub const POLE_SEPARATION_TOL: f64 = 1e-8;

/// Relative tolerance when matching a denominator root to a known inverse
/// zero or to one of the special points `±q^{-1/2}`, `1`.
pub const ROOT_MATCH_TOL: f64 = 1e-6;

/// Relative agreement demanded between the residue-extracted model constants
/// and their closed forms (elementary-symmetric expressions in `cos θ_j`).
/// Both sides are f64 computations on exact inputs; `1e-9` relative is
/// comfortable and still meaningful.
pub const MODEL_CONSTANT_REL_TOL: f64 = 1e-9;

/// Absolute tolerance for the model-vs-series agreement window: for
/// `n ≥ valid_from` the oscillatory model reproduces the exact series term
/// up to f64 rounding of quantities of size `q^{n/2}`, so the comparison is
/// made in normalized (`q^{-n/2}`-scaled) form against this bound.
pub const MODEL_SERIES_TOL: f64 = 1e-6;

/// Relative tolerance for declaring `θ/π` rational in the continued-fraction
/// diagnostic.
pub const GSH_CF_REL_TOL: f64 = 1e-10;

/// Largest denominator considered by the continued-fraction diagnostic.
pub const GSH_MAX_DENOMINATOR: i64 = 120;

/// Coefficient bound for the pairwise integer-relation search
/// `c₀·π + c_i·θ_i + c_j·θ_j = 0`.
pub const GSH_RELATION_COEFF_BOUND: i64 = 20;

/// Absolute tolerance for accepting a pairwise integer relation, scaled by
/// `1 + Σ|c|` to stay meaningful for large coefficients.
pub const GSH_RELATION_TOL: f64 = 1e-9;

/// Absolute tolerance used by tests of the finite geometric sine-sum closed
/// form against direct summation.
pub const SIN_SUM_TOL: f64 = 1e-10;

/// Number of outer sample points for the 2-d torus band measure (trapezoid
/// over the first angle, exact arcsin section in the second). The integrand
/// is piecewise smooth and periodic; 4096 points give ~1e-7 absolute error
/// on the regions arising here (the reported `error_bound` is measured by
/// comparison with the half-resolution rule, not assumed).
pub const QUADRATURE_POINTS: usize = 4096;

/// Number of rank-1 lattice points per shift for quasi-Monte Carlo torus
/// measures in dimension ≥ 3. Prime, just above 10^7.
pub const QMC_POINTS: u64 = 10_000_019;

/// Number of independent random shifts of the lattice. The spread of the
/// per-shift estimates yields the reported standard error.
pub const QMC_SHIFTS: usize = 8;

/// Korobov-style generator for the rank-1 lattice: `z = (1, a, a², …) mod N`.
/// `N` is prime so any `0 < a < N` is admissible; shift-averaging makes the
/// estimator unbiased regardless of this choice, which only affects variance.
pub const QMC_KOROBOV_A: u64 = 1_565_813;

/// Fixed seed for the QMC random shifts (reproducible runs).
pub const QMC_SEED: u64 = 0x51ac_5ea5_0c0f_fee5;

/// Fixed seed for Cantor–Zassenhaus splitting inside `factor`, so that
/// factorization is deterministic run-to-run.
pub const FACTOR_SEED: u64 = 0xf2ee_5eed_0000_0001;

/// Upper bound on the number of table entries (monic polynomials) the
/// brute-force machinery will allocate before refusing with a guard error.
pub const BRUTE_FORCE_GUARD: u64 = 100_000_000;

/// Upper bound on `q` for extension fields (`k > 1`), where arithmetic uses
/// precomputed `q×q` tables.
pub const MAX_EXTENSION_Q: u32 = 512;

/// Largest exponent accepted by the polynomial text parser. Well above any
/// legitimate modulus degree; protects against absurd allocations.
pub const MAX_PARSE_EXPONENT: usize = 4096;

/// Length of the self-validation window used when a linear recurrence is
/// extracted from a rational generating function: the recurrence must
/// reproduce this many directly-expanded terms past its starting index.
pub const RECURRENCE_VALIDATION_TERMS: usize = 50;

/// Bounds (`c₊`, `c₋`) smaller than this in absolute value are treated as
/// exactly zero when deciding tie (δ₀) contributions in the dimension-0
/// density path. The relevant bounds are exact rationals times `√q` powers
/// evaluated in f64, so a true zero is zero to rounding.
pub const EXACT_ZERO_TOL: f64 = 1e-12;

/// Relative agreement demanded *in the density routing path* between the
/// residue-extracted `α` constants and their closed forms before the closed
/// forms are used as band bounds. Looser than [`MODEL_CONSTANT_REL_TOL`]
/// (which the identity test suite enforces) so a marginal rounding excursion
/// degrades to an integrity report only when genuinely wrong.
pub const ALPHA_CLOSED_FORM_REL_TOL: f64 = 1e-6;

/// Largest sign-pattern period the exact periodic-density detector will
/// consider. Rational angles `θ = π·a/b` force the period to divide
/// `2·lcm(b_j)`; this cap bounds the series expansion that the detector
/// performs. `5040 = 7!` covers every denominator combination arising in the
/// reference corpus with two orders of margin.
pub const PERIOD_SEARCH_LIMIT: usize = 5040;

#[cfg(test)]
mod tests {
    use super::*;

    /// The tolerance ladder must stay ordered: model constants are checked
    /// more tightly than model-vs-series windows, which are tighter than
    /// density targets; root matching must be far looser than root
    /// separation detection.
    #[test]
    #[allow(clippy::assertions_on_constants)]
    fn tolerance_ordering_is_consistent() {
        assert!(RH_RESIDUAL_TOL < ROOT_MATCH_TOL);
        assert!(POLE_SEPARATION_TOL < ROOT_MATCH_TOL);
        assert!(MODEL_CONSTANT_REL_TOL < MODEL_SERIES_TOL);
        assert!(MODEL_CONSTANT_REL_TOL < ALPHA_CLOSED_FORM_REL_TOL);
        assert!(GSH_CF_REL_TOL < GSH_RELATION_TOL);
        assert!(EXACT_ZERO_TOL < RH_RESIDUAL_TOL);
    }

    #[test]
    #[allow(clippy::assertions_on_constants)]
    fn qmc_points_is_prime() {
        let n = QMC_POINTS;
        let mut d = 2u64;
        while d * d <= n {
            assert!(!n.is_multiple_of(d), "QMC_POINTS has factor {d}");
            d += 1;
        }
        assert!(QMC_KOROBOV_A < QMC_POINTS);
    }
}
