//! Bias series, their rational generating functions, and linear recurrences.
//!
//! For a monic squarefree modulus `m` and the quadratic character `χ_m`, the
//! two series of interest are
//!
//! ```text
//! b^μ(n) = Σ_{f monic, deg f = n} χ_m(f) μ(f)
//! b^λ(n) = Σ_{f monic, deg f = n} χ_m(f) λ(f)
//! ```
//!
//! together with their cumulative sums `B(n) = b(1) + ... + b(n)`.  Both
//! families have *rational* generating functions:
//!
//! ```text
//! Σ b^μ(n) u^n = 1 / 𝓛(u, χ_m)
//! Σ b^λ(n) u^n = ∏_i (1 - u^{2·deg P_i}) / ((1 - q u²) · 𝓛(u, χ_m))
//! ```
//!
//! where the product runs over the distinct irreducible factors `P_i` of `m`.
//! Everything here is exact integer arithmetic; the floating-point model
//! lives in [`crate::model`].

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor::MultiplicativeTable;
use crate::field::FieldSpec;
use crate::lfunc::LPolynomial;
use crate::poly::{enumerate_monic, Poly};
use crate::character::{QuadraticCharacter, ResidueTable};
use crate::text::format_poly;
use crate::tolerances::RECURRENCE_VALIDATION_TERMS;
use crate::zpoly::{self, ZPoly};

/// Which completely multiplicative weight the series carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesKind {
    /// Möbius weight `μ`.
    #[serde(rename = "mu")]
    Mobius,
    /// Liouville weight `λ = (-1)^Ω`.
    #[serde(rename = "lambda")]
    Liouville,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesKind::Mobius => write!(f, "mu"),
            SeriesKind::Liouville => write!(f, "lambda"),
        }
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<SeriesKind> {
        match s {
            "mu" | "mobius" => Ok(SeriesKind::Mobius),
            "lambda" | "liouville" => Ok(SeriesKind::Liouville),
            other => Err(Error::parse(format!(
                "unknown series kind {other:?}; expected \"mu\" or \"lambda\""
            ))),
        }
    }
}

/// A rational generating function `N(u)/D(u)` with integer coefficients,
/// stored fully reduced with `D(0) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalGF {
    numerator: ZPoly,
    denominator: ZPoly,
}

impl RationalGF {
    /// Builds a reduced rational function from integer numerator and
    /// denominator.
    ///
    /// The common factor is removed exactly (rational-arithmetic gcd, then
    /// primitive integer cofactor division), and the result is normalized so
    /// that the denominator has constant term `+1`.  The denominator must not
    /// vanish at `u = 0`.
    pub fn new(numerator: ZPoly, denominator: ZPoly) -> Result<RationalGF> {
        let mut num = numerator;
        let mut den = denominator;
        zpoly::trim(&mut num);
        zpoly::trim(&mut den);
        if den.is_empty() {
            return Err(Error::domain("generating function denominator is zero"));
        }
        if den[0].is_zero() {
            return Err(Error::domain(
                "generating function denominator vanishes at u = 0",
            ));
        }
        if !num.is_empty() {
            let gcd = zpoly::q_gcd(&zpoly::to_rational(&num), &zpoly::to_rational(&den))?;
            let gcd = zpoly::primitive_integer(&gcd);
            if gcd.len() > 1 {
                num = zpoly::divide_exact(&num, &gcd)?;
                den = zpoly::divide_exact(&den, &gcd)?;
            }
        }
        let d0 = &den[0];
        if d0 == &BigInt::from(-1) {
            for c in &mut num {
                *c = -&*c;
            }
            for c in &mut den {
                *c = -&*c;
            }
        } else if d0 != &BigInt::from(1) {
            return Err(Error::integrity(
                "reduced denominator does not have constant term ±1",
            ));
        }
        Ok(RationalGF {
            numerator: num,
            denominator: den,
        })
    }

    /// Reduced numerator, ascending coefficients (empty means zero).
    pub fn numerator(&self) -> &[BigInt] {
        &self.numerator
    }

    /// Reduced denominator, ascending coefficients; `denominator()[0] == 1`.
    pub fn denominator(&self) -> &[BigInt] {
        &self.denominator
    }

    /// First `terms` power-series coefficients, by exact long division.
    pub fn expand(&self, terms: usize) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::with_capacity(terms);
        for n in 0..terms {
            let mut c = self
                .numerator
                .get(n)
                .cloned()
                .unwrap_or_else(BigInt::zero);
            for k in 1..self.denominator.len().min(n + 1) {
                c -= &self.denominator[k] * &out[n - k];
            }
            out.push(c);
        }
        out
    }

    /// The linear recurrence satisfied by the series coefficients from index
    /// `deg N + 1` onward, with a validation pass over a window of terms.
    pub fn recurrence(&self) -> Result<Recurrence> {
        let order = self.denominator.len() - 1;
        let start = self.numerator.len(); // deg N + 1 (or 0 for N = 0)
        let coeffs: Vec<BigInt> = self.denominator[1..].iter().map(|c| -c).collect();
        let window = start + order + RECURRENCE_VALIDATION_TERMS;
        let prefix_full = self.expand(window);
        for n in start.max(order)..window {
            let mut acc = BigInt::zero();
            for (k, c) in coeffs.iter().enumerate() {
                acc += c * &prefix_full[n - 1 - k];
            }
            if n >= start && acc != prefix_full[n] {
                return Err(Error::integrity(format!(
                    "recurrence validation failed at index {n}"
                )));
            }
        }
        Ok(Recurrence {
            coeffs,
            start,
            prefix: prefix_full[..start.max(order)].to_vec(),
        })
    }
}

/// Generating function of the Möbius series: `1 / 𝓛(u, χ_m)`.
pub fn gf_mu(l: &LPolynomial) -> Result<RationalGF> {
    RationalGF::new(vec![BigInt::from(1)], l.coeffs().to_vec())
}

/// Generating function of the Liouville series:
/// `∏_i (1 - u^{2·M_i}) / ((1 - q u²) · 𝓛(u, χ_m))` where the `M_i` are the
/// degrees of the distinct irreducible factors of the modulus.
pub fn gf_lambda(l: &LPolynomial, factor_degrees: &[usize]) -> Result<RationalGF> {
    let mut num: ZPoly = vec![BigInt::from(1)];
    for &d in factor_degrees {
        let mut factor = vec![BigInt::zero(); 2 * d + 1];
        factor[0] = BigInt::from(1);
        factor[2 * d] = BigInt::from(-1);
        num = zpoly::mul(&num, &factor);
    }
    let q = BigInt::from(l.q());
    let one_minus_qu2 = vec![BigInt::from(1), BigInt::zero(), -q];
    let den = zpoly::mul(&one_minus_qu2, l.coeffs());
    RationalGF::new(num, den)
}

/// Generating function of the cumulative sums `B(n) = Σ_{1 ≤ j ≤ n} b(j)`:
/// `(N - D) / (D · (1 - u))`, re-reduced (the `u = 1` factor often cancels).
pub fn cumulative_gf(gf: &RationalGF) -> Result<RationalGF> {
    let num = zpoly::sub(gf.numerator(), gf.denominator());
    let one_minus_u = zpoly::from_i64(&[1, -1]);
    let den = zpoly::mul(gf.denominator(), &one_minus_u);
    RationalGF::new(num, den)
}

/// A validated linear recurrence `b(n) = Σ_{1 ≤ k ≤ L} c_k · b(n-k)` for
/// `n ≥ start`, together with the exact pre-recurrence values.
#[derive(Debug, Clone, PartialEq)]
pub struct Recurrence {
    coeffs: Vec<BigInt>,
    start: usize,
    prefix: Vec<BigInt>,
}

impl Recurrence {
    /// Recurrence coefficients `c_1, ..., c_L` (equal to the negated
    /// denominator coefficients).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// First index at which the bare recurrence is guaranteed to hold.
    pub fn start(&self) -> usize {
        self.start
    }

    /// Exact series values for all indices before the recurrence applies.
    pub fn prefix(&self) -> &[BigInt] {
        &self.prefix
    }

    /// The `n`-th series coefficient, via binary powering of the companion
    /// matrix (cost `O(L³ log n)` big-integer operations).
    pub fn nth(&self, n: usize) -> BigInt {
        if n < self.prefix.len() {
            return self.prefix[n].clone();
        }
        let order = self.coeffs.len();
        if order == 0 {
            // Polynomial generating function: every later term vanishes.
            return BigInt::zero();
        }
        // State s(k) = [b(k), b(k-1), ..., b(k-L+1)]ᵀ, advanced by the
        // companion matrix; start from the end of the exact prefix.
        let s0_index = self.prefix.len() - 1;
        let state: Vec<BigInt> = (0..order)
            .map(|i| {
                s0_index
                    .checked_sub(i)
                    .map(|j| self.prefix[j].clone())
                    .unwrap_or_else(BigInt::zero)
            })
            .collect();
        let mut companion = vec![vec![BigInt::zero(); order]; order];
        companion[0][..order].clone_from_slice(&self.coeffs);
        for r in 1..order {
            companion[r][r - 1] = BigInt::from(1);
        }
        let power = mat_pow(&companion, (n - s0_index) as u64);
        let mut value = BigInt::zero();
        for (c, s) in power[0].iter().zip(&state) {
            value += c * s;
        }
        value
    }
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

fn mat_pow(m: &[Vec<BigInt>], mut e: u64) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let mut result = vec![vec![BigInt::zero(); n]; n];
    for (i, row) in result.iter_mut().enumerate() {
        row[i] = BigInt::from(1);
    }
    let mut base = m.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul(&result, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mat_mul(&base, &base);
        }
    }
    result
}

/// An expanded bias series with its cumulative sums.
#[derive(Debug, Clone, PartialEq)]
pub struct BiasSeries {
    /// Field size.
    pub q: u32,
    /// Canonical text of the modulus.
    pub modulus: String,
    /// Which weight the series carries.
    pub kind: SeriesKind,
    /// Non-cumulative terms `b(0), b(1), ..., b(horizon)`.
    pub b: Vec<BigInt>,
    /// Cumulative sums `B(1), ..., B(horizon)` (`B(n)` excludes `b(0)`).
    pub cum: Vec<BigInt>,
}

impl BiasSeries {
    /// Expands a generating function to the given horizon and forms the
    /// cumulative sums.  Checks `b(0) = 1`, which holds for every admissible
    /// modulus and both weights.
    pub fn from_gf(
        q: u32,
        modulus: &Poly,
        kind: SeriesKind,
        gf: &RationalGF,
        horizon: usize,
    ) -> Result<BiasSeries> {
        let b = gf.expand(horizon + 1);
        if b.first().map(|c| c != &BigInt::from(1)).unwrap_or(true) {
            return Err(Error::integrity("bias series does not start with b(0) = 1"));
        }
        let mut cum = Vec::with_capacity(horizon);
        let mut acc = BigInt::zero();
        for c in &b[1..] {
            acc += c;
            cum.push(acc.clone());
        }
        Ok(BiasSeries {
            q,
            modulus: format_poly(modulus),
            kind,
            b,
            cum,
        })
    }

    /// Largest index available in the expansion.
    pub fn horizon(&self) -> usize {
        self.b.len() - 1
    }

    /// `b(n)` for `0 ≤ n ≤ horizon`.
    pub fn b(&self, n: usize) -> &BigInt {
        &self.b[n]
    }

    /// `B(n) = b(1) + ... + b(n)` for `1 ≤ n ≤ horizon`.
    pub fn cumulative(&self, n: usize) -> &BigInt {
        &self.cum[n - 1]
    }

    /// Signs (-1, 0, +1) of `b(n)` for `n = start..=horizon`.
    pub fn signs(&self, start: usize) -> Vec<i8> {
        self.b[start..].iter().map(sign_of).collect()
    }

    /// Signs of `B(n)` for `n = start..=horizon` (`start ≥ 1`).
    pub fn cumulative_signs(&self, start: usize) -> Vec<i8> {
        self.cum[start - 1..].iter().map(sign_of).collect()
    }
}

/// Sign of a big integer as -1, 0, or +1.
pub fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

/// Both bias series of a modulus computed by direct enumeration: every monic
/// polynomial of degree at most the horizon is factored (via a sieve) and
/// its character value looked up.  Quadratic cost in the number of monic
/// polynomials — this is the ground truth the generating functions are
/// checked against, not a production path.
#[derive(Debug, Clone, PartialEq)]
pub struct BruteForceSums {
    /// `b^μ(n)` for `n = 0..=horizon`.
    pub mu: Vec<BigInt>,
    /// `b^λ(n)` for `n = 0..=horizon`.
    pub lambda: Vec<BigInt>,
}

/// Computes both bias series by brute force up to `horizon`.
///
/// Uses a smallest-prime-factor sieve for `μ`/`λ` and a residue table for
/// `χ_m`, so the per-polynomial cost is a remainder plus two lookups.  The
/// sieve and table constructors enforce the resource guards.
pub fn brute_force(spec: &FieldSpec, modulus: &Poly, horizon: usize) -> Result<BruteForceSums> {
    let table = MultiplicativeTable::new(spec, horizon)?;
    let chi = QuadraticCharacter::new(spec, modulus)?;
    let residues = ResidueTable::new(&chi)?;
    let mut mu = Vec::with_capacity(horizon + 1);
    let mut lambda = Vec::with_capacity(horizon + 1);
    for n in 0..=horizon {
        let mu_block = table.mu_block(n);
        let lambda_block = table.lambda_block(n);
        let mut mu_sum = 0i64;
        let mut lambda_sum = 0i64;
        for (i, f) in enumerate_monic(spec, n)?.enumerate() {
            let x = residues.eval(&f)? as i64;
            mu_sum += x * mu_block[i] as i64;
            lambda_sum += x * lambda_block[i] as i64;
        }
        mu.push(BigInt::from(mu_sum));
        lambda.push(BigInt::from(lambda_sum));
    }
    Ok(BruteForceSums { mu, lambda })
}

/// Writes a bias series as CSV with columns `n,b,B,sign_b,sign_B`, one row
/// per index `n = 1..=horizon`.
pub fn write_bias_csv<W: Write>(w: &mut W, series: &BiasSeries) -> Result<()> {
    writeln!(w, "n,b,B,sign_b,sign_B")?;
    for n in 1..=series.horizon() {
        let b = series.b(n);
        let big_b = series.cumulative(n);
        writeln!(w, "{n},{b},{big_b},{},{}", sign_of(b), sign_of(big_b))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfunc::l_polynomial;
    use crate::text::parse_poly;
    use num_traits::ToPrimitive;

    fn setup(q: u32, m: &str) -> (FieldSpec, Poly, LPolynomial) {
        let spec = FieldSpec::prime(q).unwrap();
        let modulus = parse_poly(&spec, m).unwrap();
        let l = l_polynomial(&spec, &modulus).unwrap();
        (spec, modulus, l)
    }

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|c| c.to_i64().unwrap()).collect()
    }

    fn lambda_gf(spec: &FieldSpec, modulus: &Poly, l: &LPolynomial) -> RationalGF {
        let factorization = crate::factor::factor(spec, modulus).unwrap();
        gf_lambda(l, &factorization.factor_degrees()).unwrap()
    }

    #[test]
    fn liouville_gf_golden_f5_cubic() {
        let (spec, modulus, l) = setup(5, "T^3+T+4");
        let gf = lambda_gf(&spec, &modulus, &l);
        assert_eq!(ints(gf.numerator()), vec![1, 0, 0, 0, 0, 0, -1]);
        assert_eq!(ints(gf.denominator()), vec![1, 3, 0, -15, -25]);
        let b = gf.expand(15);
        assert_eq!(
            ints(&b),
            vec![1, -3, 9, -12, 16, 12, 8, -84, 832, -2076, 5168, -5124, 5032, 10524, 20768]
        );
    }

    #[test]
    fn liouville_gf_golden_degree_five() {
        let (spec, modulus, l) = setup(3, "(T^2+1)*(T^3+2T+1)");
        let gf = lambda_gf(&spec, &modulus, &l);
        assert_eq!(ints(gf.numerator()), vec![1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1]);
        assert_eq!(ints(gf.denominator()), vec![1, 1, 1, 0, -3, -9, -27]);
        let b = gf.expand(15);
        assert_eq!(
            ints(&b),
            vec![1, -1, 0, 1, 1, 4, 12, -40, 40, 48, 12, 36, 36, -648, 2160]
        );
    }

    #[test]
    fn mobius_gf_goldens() {
        let (_, _, l) = setup(5, "T^3+T+4");
        let b = gf_mu(&l).unwrap().expand(13);
        assert_eq!(
            ints(&b),
            vec![1, -3, 4, 3, -29, 72, -71, -147, 796, -1653, 979, 5328, -20879]
        );

        let (_, _, l) = setup(3, "T^3+2T+1");
        let b = gf_mu(&l).unwrap().expand(21);
        assert_eq!(
            ints(&b),
            vec![
                1, 3, 6, 9, 9, 0, -27, -81, -162, -243, -243, 0, 729, 2187, 4374, 6561, 6561,
                0, -19683, -59049, -118098
            ]
        );

        let (_, _, l) = setup(3, "(T^2+1)*(T^3+2T+1)");
        let b = gf_mu(&l).unwrap().expand(13);
        assert_eq!(
            ints(&b),
            vec![1, -1, -3, 4, 2, 0, 7, -49, 3, 172, -100, -156, 13]
        );
    }

    #[test]
    fn liouville_gf_golden_rational_angle_modulus() {
        // Angle π/6: the modulus whose sign pattern is eventually periodic.
        let (spec, modulus, l) = setup(3, "T^3+2T+1");
        let gf = lambda_gf(&spec, &modulus, &l);
        let b = gf.expand(21);
        assert_eq!(
            ints(&b),
            vec![
                1, 3, 9, 18, 36, 54, 80, 78, 72, -18, -36, -54, 648, 2106, 6480, 13122,
                26244, 39366, 58320, 56862, 52488
            ]
        );
    }

    #[test]
    fn split_quadratic_reduces_by_unit_factor() {
        // m = T(T+1) over F_5: the raw numerator (1-u²)² and denominator
        // (1-5u²)(1-u) share exactly one factor of (1-u).
        let (spec, modulus, l) = setup(5, "T^2+T");
        let gf = lambda_gf(&spec, &modulus, &l);
        assert_eq!(ints(gf.numerator()), vec![1, 1, -1, -1]);
        assert_eq!(ints(gf.denominator()), vec![1, 0, -5]);
        let b = gf.expand(9);
        assert_eq!(ints(&b), vec![1, 1, 4, 4, 20, 20, 100, 100, 500]);
    }

    #[test]
    fn irreducible_quadratic_golden() {
        let (spec, modulus, l) = setup(5, "T^2+2");
        let gf = lambda_gf(&spec, &modulus, &l);
        assert_eq!(ints(gf.numerator()), vec![1, 1, 1, 1]);
        assert_eq!(ints(gf.denominator()), vec![1, 0, -5]);
        assert_eq!(ints(&gf.expand(9)), vec![1, 1, 6, 6, 30, 30, 150, 150, 750]);
    }

    #[test]
    fn degree_one_golden() {
        let (spec, modulus, l) = setup(5, "T");
        let gf = lambda_gf(&spec, &modulus, &l);
        assert_eq!(ints(&gf.expand(9)), vec![1, 0, 4, 0, 20, 0, 100, 0, 500]);
        // μ for a degree-1 modulus: 𝓛 = 1, so the series is 1, 0, 0, ...
        let mu = gf_mu(&l).unwrap();
        assert_eq!(ints(&mu.expand(5)), vec![1, 0, 0, 0, 0]);
        let rec = mu.recurrence().unwrap();
        assert_eq!(rec.coeffs().len(), 0);
        assert_eq!(rec.nth(7), BigInt::zero());
        assert_eq!(rec.nth(0), BigInt::from(1));
    }

    #[test]
    fn cumulative_gf_matches_prefix_sums() {
        for (q, m) in [(5, "T^3+T+4"), (3, "(T^2+1)*(T^3+2T+1)"), (5, "T^2+T")] {
            let (spec, modulus, l) = setup(q, m);
            let gf = lambda_gf(&spec, &modulus, &l);
            let cgf = cumulative_gf(&gf).unwrap();
            let b = gf.expand(30);
            let big_b = cgf.expand(30);
            assert!(big_b[0].is_zero());
            let mut acc = BigInt::zero();
            for n in 1..30 {
                acc += &b[n];
                assert_eq!(big_b[n], acc, "cumulative mismatch at {n} for {m}");
            }
        }
    }

    #[test]
    fn cumulative_gf_even_case_keeps_unit_pole() {
        // Even modulus degree: the non-cumulative reduction already removed
        // every unit factor from the denominator, so the cumulative
        // denominator (1 - 5u²)(1 - u) has a simple zero at u = 1 and no
        // further cancellation happens.  The unit pole is what produces the
        // O(1) constant in the cumulative model.
        let (spec, modulus, l) = setup(5, "T^2+T");
        let gf = lambda_gf(&spec, &modulus, &l);
        let cgf = cumulative_gf(&gf).unwrap();
        assert_eq!(ints(cgf.denominator()), vec![1, -1, -5, 5]);
        assert_eq!(ints(&cgf.expand(7)), vec![0, 1, 5, 9, 29, 49, 149]);
    }

    #[test]
    fn recurrence_golden_f5_cubic() {
        let (spec, modulus, l) = setup(5, "T^3+T+4");
        let gf = lambda_gf(&spec, &modulus, &l);
        let rec = gf.recurrence().unwrap();
        assert_eq!(ints(rec.coeffs()), vec![-3, 0, 15, 25]);
        assert_eq!(rec.start(), 7);
        let b = gf.expand(40);
        for n in [0, 3, 7, 12, 25, 39] {
            assert_eq!(rec.nth(n), b[n], "nth({n}) disagrees with expansion");
        }
    }

    #[test]
    fn recurrence_golden_degree_five_starts_late() {
        // The bare recurrence fails at n = 10 (it would give 11, the true
        // value is 12): the numerator has degree 10, so the recurrence is
        // only guaranteed from n = 11 onward and the prefix must cover n=10.
        let (spec, modulus, l) = setup(3, "(T^2+1)*(T^3+2T+1)");
        let gf = lambda_gf(&spec, &modulus, &l);
        let rec = gf.recurrence().unwrap();
        assert_eq!(ints(rec.coeffs()), vec![-1, -1, 0, 3, 9, 27]);
        assert_eq!(rec.start(), 11);
        let b = gf.expand(60);
        assert_eq!(rec.nth(10), BigInt::from(12));
        let mut bare = BigInt::zero();
        for (k, c) in rec.coeffs().iter().enumerate() {
            bare += c * &b[10 - 1 - k];
        }
        assert_eq!(bare, BigInt::from(11), "bare recurrence value at n = 10");
        for n in [11, 12, 20, 59] {
            assert_eq!(rec.nth(n), b[n], "nth({n}) disagrees with expansion");
        }
    }

    #[test]
    fn brute_force_agrees_with_generating_functions() {
        for (q, m, horizon) in [(3, "T^3+2T+1", 8), (5, "T^3+T+4", 6), (3, "T*(T^2+1)", 8)] {
            let (spec, modulus, l) = setup(q, m);
            let sums = brute_force(&spec, &modulus, horizon).unwrap();
            let lam = lambda_gf(&spec, &modulus, &l).expand(horizon + 1);
            let mu = gf_mu(&l).unwrap().expand(horizon + 1);
            assert_eq!(sums.lambda, lam, "λ mismatch for {m} over F_{q}");
            assert_eq!(sums.mu, mu, "μ mismatch for {m} over F_{q}");
        }
    }

    #[test]
    fn bias_series_and_csv_output() {
        let (spec, modulus, l) = setup(5, "T^3+T+4");
        let gf = lambda_gf(&spec, &modulus, &l);
        let series = BiasSeries::from_gf(5, &modulus, SeriesKind::Liouville, &gf, 6).unwrap();
        assert_eq!(series.modulus, "T^3+T+4");
        assert_eq!(series.horizon(), 6);
        assert_eq!(series.b(3).to_i64().unwrap(), -12);
        // B(3) = -3 + 9 - 12 = -6.
        assert_eq!(series.cumulative(3).to_i64().unwrap(), -6);
        assert_eq!(series.signs(1), vec![-1, 1, -1, 1, 1, 1]);
        assert_eq!(series.cumulative_signs(1), vec![-1, 1, -1, 1, 1, 1]);

        let mut out = Vec::new();
        write_bias_csv(&mut out, &series).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,b,B,sign_b,sign_B");
        assert_eq!(lines[1], "1,-3,-3,-1,-1");
        assert_eq!(lines[3], "3,-12,-6,-1,-1");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn series_kind_parsing_and_serde() {
        assert_eq!("mu".parse::<SeriesKind>().unwrap(), SeriesKind::Mobius);
        assert_eq!(
            "liouville".parse::<SeriesKind>().unwrap(),
            SeriesKind::Liouville
        );
        assert!("nu".parse::<SeriesKind>().is_err());
        assert_eq!(
            serde_json::to_string(&SeriesKind::Liouville).unwrap(),
            "\"lambda\""
        );
        let k: SeriesKind = serde_json::from_str("\"mu\"").unwrap();
        assert_eq!(k, SeriesKind::Mobius);
    }

    #[test]
    fn degenerate_denominators_are_rejected() {
        let zero_den = RationalGF::new(zpoly::from_i64(&[1]), zpoly::from_i64(&[]));
        assert!(zero_den.is_err());
        let vanishing = RationalGF::new(zpoly::from_i64(&[1]), zpoly::from_i64(&[0, 1]));
        assert!(vanishing.is_err());
        // A denominator with constant term -1 is normalized, not rejected.
        let gf = RationalGF::new(zpoly::from_i64(&[1]), zpoly::from_i64(&[-1, 2])).unwrap();
        assert_eq!(ints(gf.denominator()), vec![1, -2]);
        assert_eq!(ints(gf.numerator()), vec![-1]);
    }
}
