//! Irreducibility, factorization, and the multiplicative functions μ and λ.
//!
//! * [`is_irreducible`] — Rabin's test (Frobenius powers + gcd conditions).
//! * [`factor`] — complete factorization into monic irreducibles times a
//!   unit. Small degrees (< 6) go by trial division; larger inputs use
//!   squarefree decomposition (characteristic-`p` aware, including `p`-th
//!   roots when `f' = 0`), distinct-degree splitting, and Cantor–Zassenhaus
//!   equal-degree splitting driven by a fixed-seed ChaCha8 stream so results
//!   are identical run-to-run.
//! * [`mobius`] / [`liouville`] — `μ(f)` and `λ(f) = (-1)^{Ω(f)}`.
//! * [`MultiplicativeTable`] — μ and λ for *every* monic polynomial up to a
//!   degree bound, via a smallest-irreducible-factor sieve. This is the
//!   engine behind brute-force bias sums.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::poly::{enumerate_monic, Poly};
use crate::tolerances::{BRUTE_FORCE_GUARD, FACTOR_SEED};

/// A complete factorization `f = unit · Π Pᵢ^{eᵢ}` with the `Pᵢ` monic
/// irreducible, sorted by (degree, coefficient code).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    unit: FieldElement,
    factors: Vec<(Poly, u32)>,
}

impl Factorization {
    /// The unit (leading coefficient of the input).
    pub fn unit(&self) -> FieldElement {
        self.unit
    }

    /// The monic irreducible factors with multiplicities.
    pub fn factors(&self) -> &[(Poly, u32)] {
        &self.factors
    }

    /// Degrees of the distinct irreducible factors (sorted ascending).
    pub fn factor_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .factors
            .iter()
            .map(|(p, _)| p.degree().expect("irreducible factors are nonconstant"))
            .collect();
        d.sort_unstable();
        d
    }

    /// `Ω(f)`: number of irreducible factors counted with multiplicity.
    pub fn big_omega(&self) -> u64 {
        self.factors.iter().map(|&(_, e)| e as u64).sum()
    }

    /// Whether all multiplicities are 1.
    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// Multiply the factorization back out.
    pub fn product(&self, spec: &FieldSpec) -> Poly {
        let mut acc = Poly::from_coeffs(vec![self.unit]);
        for (p, e) in &self.factors {
            for _ in 0..*e {
                acc = spec.poly_mul(&acc, p);
            }
        }
        acc
    }
}

fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin irreducibility test. Constants and zero are not irreducible;
/// non-monic inputs are judged by their monic associate.
pub fn is_irreducible(spec: &FieldSpec, f: &Poly) -> Result<bool> {
    let Some(n) = f.degree() else {
        return Ok(false);
    };
    if n == 0 {
        return Ok(false);
    }
    let f = spec.poly_make_monic(f)?;
    let q = spec.q() as u64;
    let t = Poly::monomial(1);
    let t_mod = spec.poly_rem(&t, &f)?;
    // frob[i] = T^(q^i) mod f, built by iterating the q-th power map
    let mut frob = Vec::with_capacity(n + 1);
    frob.push(t_mod.clone());
    for _ in 0..n {
        let prev = frob.last().unwrap();
        frob.push(spec.poly_mod_pow_u64(prev, q, &f)?);
    }
    if frob[n] != t_mod {
        return Ok(false);
    }
    for l in prime_divisors(n) {
        let diff = spec.poly_sub(&frob[n / l], &t_mod);
        let g = spec.poly_gcd(&diff, &f)?;
        if g.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `p`-th root of `f` when `f(T) = h(T^p)`: coefficient-wise
/// `c ↦ c^{p^{k-1}}` at the indices divisible by `p`.
fn pth_root(spec: &FieldSpec, f: &Poly) -> Result<Poly> {
    let p = spec.p() as usize;
    let mut root_exp = 1u64;
    for _ in 0..spec.k() - 1 {
        root_exp *= spec.p() as u64;
    }
    let deg = f.degree().unwrap_or(0);
    let mut coeffs = Vec::with_capacity(deg / p + 1);
    for i in (0..=deg).step_by(p) {
        coeffs.push(spec.pow(f.coeff(i), root_exp));
    }
    // sanity: the non-multiple-of-p coefficients must vanish
    for i in 0..=deg {
        if i % p != 0 && !f.coeff(i).is_zero() {
            return Err(Error::integrity(
                "pth_root called on a polynomial with f' = 0 but a stray coefficient",
            ));
        }
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Squarefree decomposition of a monic `f`: pairwise-coprime squarefree
/// parts with multiplicities, characteristic-`p` aware.
fn squarefree_split(
    spec: &FieldSpec,
    f: Poly,
    base_mult: u32,
    out: &mut Vec<(Poly, u32)>,
) -> Result<()> {
    if f.degree() == Some(0) {
        return Ok(());
    }
    let fp = spec.poly_derivative(&f);
    if fp.is_zero() {
        let h = pth_root(spec, &f)?;
        return squarefree_split(spec, h, base_mult * spec.p(), out);
    }
    let mut c = spec.poly_gcd(&f, &fp)?;
    let mut w = spec.poly_divmod(&f, &c)?.0;
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = spec.poly_gcd(&w, &c)?;
        let sep = spec.poly_divmod(&w, &y)?.0;
        if sep.degree().is_some_and(|d| d > 0) {
            out.push((sep, base_mult * i));
        }
        c = spec.poly_divmod(&c, &y)?.0;
        w = y;
        i += 1;
    }
    if c.degree() != Some(0) {
        // the remaining part is a p-th power
        let h = pth_root(spec, &c)?;
        squarefree_split(spec, h, base_mult * spec.p(), out)?;
    }
    Ok(())
}

/// Distinct-degree decomposition of a monic squarefree `f`: returns
/// `(d, product of all irreducible factors of degree d)` pairs.
fn distinct_degree(spec: &FieldSpec, f: &Poly) -> Result<Vec<(usize, Poly)>> {
    let q = spec.q() as u64;
    let mut out = Vec::new();
    let mut g = f.clone();
    let t = Poly::monomial(1);
    let mut h = spec.poly_rem(&t, &g)?;
    let mut d = 0usize;
    while g.degree().is_some_and(|dg| dg >= 2 * (d + 1)) {
        d += 1;
        h = spec.poly_mod_pow_u64(&h, q, &g)?;
        let diff = spec.poly_sub(&h, &spec.poly_rem(&t, &g)?);
        let gd = spec.poly_gcd(&diff, &g)?;
        if gd.degree().is_some_and(|x| x > 0) {
            out.push((d, gd.clone()));
            g = spec.poly_divmod(&g, &gd)?.0;
            h = spec.poly_rem(&h, &g)?;
        }
    }
    if g.degree().is_some_and(|x| x > 0) {
        out.push((g.degree().unwrap(), g));
    }
    Ok(out)
}

/// Cantor–Zassenhaus equal-degree splitting: `f` monic squarefree, all of
/// whose irreducible factors have degree `d`.
fn equal_degree(
    spec: &FieldSpec,
    f: &Poly,
    d: usize,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Poly>,
) -> Result<()> {
    let deg = f.degree().expect("nonzero");
    if deg == d {
        out.push(f.clone());
        return Ok(());
    }
    // (q^d - 1) / 2
    let mut e = num_bigint::BigUint::from(spec.q());
    e = e.pow(d as u32);
    e -= 1u32;
    e >>= 1;
    loop {
        let r = Poly::from_coeffs(
            (0..deg)
                .map(|_| {
                    spec.element_from_code(rng.gen_range(0..spec.q()))
                        .expect("in range")
                })
                .collect(),
        );
        if r.degree().is_none() {
            continue;
        }
        // a shared factor with r already splits f
        let g0 = spec.poly_gcd(&r, f)?;
        if g0.degree().is_some_and(|x| x > 0 && x < deg) {
            let rest = spec.poly_divmod(f, &g0)?.0;
            equal_degree(spec, &g0, d, rng, out)?;
            equal_degree(spec, &rest, d, rng, out)?;
            return Ok(());
        }
        let s = spec.poly_mod_pow(&r, &e, f)?;
        let s1 = spec.poly_sub(&s, &Poly::one());
        let g = spec.poly_gcd(&s1, f)?;
        if g.degree().is_some_and(|x| x > 0 && x < deg) {
            let rest = spec.poly_divmod(f, &g)?.0;
            equal_degree(spec, &g, d, rng, out)?;
            equal_degree(spec, &rest, d, rng, out)?;
            return Ok(());
        }
    }
}

/// Factor a nonzero polynomial into monic irreducibles times a unit.
///
/// Deterministic: the randomized splitting stage draws from a ChaCha8 stream
/// seeded with [`FACTOR_SEED`].
pub fn factor(spec: &FieldSpec, f: &Poly) -> Result<Factorization> {
    let Some(deg) = f.degree() else {
        return Err(Error::domain("cannot factor the zero polynomial"));
    };
    let unit = f.leading().unwrap();
    let mut w = spec.poly_make_monic(f)?;
    let mut factors: Vec<(Poly, u32)> = Vec::new();

    if deg == 0 {
        return Ok(Factorization { unit, factors });
    }

    if deg < 6 {
        // Trial division: by the time degree d is reached, w has no factors
        // of smaller degree, so any degree-d divisor is irreducible.
        let mut d = 1usize;
        while w.degree().is_some_and(|x| x >= 2 * d) {
            for g in enumerate_monic(spec, d)? {
                let mut e = 0u32;
                while spec.poly_divides(&g, &w)? {
                    w = spec.poly_divmod(&w, &g)?.0;
                    e += 1;
                }
                if e > 0 {
                    factors.push((g, e));
                }
            }
            d += 1;
        }
        if w.degree().is_some_and(|x| x > 0) {
            factors.push((w, 1));
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(FACTOR_SEED);
        let mut sf_parts = Vec::new();
        squarefree_split(spec, w, 1, &mut sf_parts)?;
        for (part, mult) in sf_parts {
            for (d, prod) in distinct_degree(spec, &part)? {
                let mut irr = Vec::new();
                equal_degree(spec, &prod, d, &mut rng, &mut irr)?;
                for p in irr {
                    factors.push((p, mult));
                }
            }
        }
    }

    factors.sort_by_key(|(p, _)| (p.degree(), spec.poly_code(p)));
    // merge duplicates (can arise from separate squarefree parts only if the
    // decomposition were wrong — keep as a cheap integrity assertion)
    for pair in factors.windows(2) {
        if pair[0].0 == pair[1].0 {
            return Err(Error::integrity("duplicate irreducible in factorization"));
        }
    }
    let result = Factorization { unit, factors };
    debug_assert_eq!(&result.product(spec), f);
    Ok(result)
}

/// Möbius function: `0` if `f` has a repeated factor, else `(-1)^r` where
/// `r` is the number of distinct irreducible factors. `μ(constant) = 1`.
pub fn mobius(spec: &FieldSpec, f: &Poly) -> Result<i8> {
    let fac = factor(spec, f)?;
    if !fac.is_squarefree() {
        return Ok(0);
    }
    Ok(if fac.factors.len() % 2 == 0 { 1 } else { -1 })
}

/// Liouville function `λ(f) = (-1)^{Ω(f)}`. `λ(constant) = 1`.
pub fn liouville(spec: &FieldSpec, f: &Poly) -> Result<i8> {
    let fac = factor(spec, f)?;
    Ok(if fac.big_omega() % 2 == 0 { 1 } else { -1 })
}

/// μ and λ for all monic polynomials of degree ≤ `max_degree`, computed by a
/// smallest-irreducible-factor sieve over the code space.
pub struct MultiplicativeTable {
    spec: FieldSpec,
    max_degree: usize,
    /// `offsets[d]` = first global slot of the degree-`d` block (length `q^d`).
    offsets: Vec<usize>,
    mu: Vec<i8>,
    lambda: Vec<i8>,
}

impl MultiplicativeTable {
    /// Build the table. Refuses (guard error) when the total number of monic
    /// polynomials exceeds [`BRUTE_FORCE_GUARD`].
    pub fn new(spec: &FieldSpec, max_degree: usize) -> Result<MultiplicativeTable> {
        let q = spec.q() as u128;
        let mut offsets = Vec::with_capacity(max_degree + 2);
        let mut total: u128 = 0;
        for d in 0..=max_degree {
            offsets.push(total as usize);
            total += q.pow(d as u32);
            if total > BRUTE_FORCE_GUARD as u128 {
                return Err(Error::guard(format!(
                    "multiplicative table for q = {}, degree ≤ {max_degree} needs {total}+ \
                     entries (limit {BRUTE_FORCE_GUARD})",
                    spec.q()
                )));
            }
        }
        offsets.push(total as usize);
        let total = total as usize;

        const NONE: u32 = u32::MAX;
        let mut spf = vec![NONE; total];

        // walk codes in (degree, index) order; unmarked ⇒ irreducible
        for d in 1..=max_degree {
            let block = offsets[d];
            let count = (q.pow(d as u32)) as usize;
            for j in 0..count {
                let g = block + j;
                if spf[g] != NONE {
                    continue;
                }
                // irreducible: mark P·h for every monic h with deg(P·h) ≤ N
                let p_poly = Self::poly_of(spec, &offsets, g);
                for hd in 0..=(max_degree - d) {
                    for h in enumerate_monic(spec, hd)? {
                        let prod = spec.poly_mul(&p_poly, &h);
                        let idx = Self::slot(spec, &offsets, &prod);
                        if spf[idx] == NONE {
                            spf[idx] = g as u32;
                        }
                    }
                }
            }
        }

        let mut mu = vec![0i8; total];
        let mut lambda = vec![0i8; total];
        mu[offsets[0]] = 1;
        lambda[offsets[0]] = 1;
        for g in offsets[1]..total {
            let p_idx = spf[g] as usize;
            debug_assert_ne!(spf[g], NONE);
            let f_poly = Self::poly_of(spec, &offsets, g);
            let p_poly = Self::poly_of(spec, &offsets, p_idx);
            let (quot, rem) = spec.poly_divmod(&f_poly, &p_poly)?;
            debug_assert!(rem.is_zero());
            let qslot = Self::slot(spec, &offsets, &quot);
            lambda[g] = -lambda[qslot];
            mu[g] = if mu[qslot] == 0 || spec.poly_divides(&p_poly, &quot)? {
                0
            } else {
                -mu[qslot]
            };
        }

        Ok(MultiplicativeTable {
            spec: spec.clone(),
            max_degree,
            offsets,
            mu,
            lambda,
        })
    }

    /// Global slot of a monic polynomial (degree within table range).
    fn slot(spec: &FieldSpec, offsets: &[usize], f: &Poly) -> usize {
        let d = f.degree().expect("monic, nonzero");
        debug_assert!(f.is_monic());
        let base = (spec.q() as u128).pow(d as u32);
        let j = (spec.poly_code(f) - base) as usize;
        offsets[d] + j
    }

    /// Inverse of [`Self::slot`].
    fn poly_of(spec: &FieldSpec, offsets: &[usize], slot: usize) -> Poly {
        let d = match offsets[1..].iter().position(|&o| o > slot) {
            Some(d) => d,
            None => unreachable!("slot within table"),
        };
        let j = (slot - offsets[d]) as u128;
        let base = (spec.q() as u128).pow(d as u32);
        spec.poly_from_code(base + j)
    }

    /// Largest degree covered.
    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn lookup(&self, table: &[i8], f: &Poly) -> Result<i8> {
        if !f.is_monic() {
            return Err(Error::domain("multiplicative table lookups need monic input"));
        }
        if f.degree().unwrap() > self.max_degree {
            return Err(Error::domain(format!(
                "degree {} exceeds table bound {}",
                f.degree().unwrap(),
                self.max_degree
            )));
        }
        Ok(table[Self::slot(&self.spec, &self.offsets, f)])
    }

    /// `μ(f)` for monic `f` within the table range.
    pub fn mu(&self, f: &Poly) -> Result<i8> {
        self.lookup(&self.mu, f)
    }

    /// `λ(f)` for monic `f` within the table range.
    pub fn lambda(&self, f: &Poly) -> Result<i8> {
        self.lookup(&self.lambda, f)
    }

    /// μ over the degree-`d` block in enumeration order.
    pub fn mu_block(&self, d: usize) -> &[i8] {
        &self.mu[self.offsets[d]..self.offsets[d + 1]]
    }

    /// λ over the degree-`d` block in enumeration order.
    pub fn lambda_block(&self, d: usize) -> &[i8] {
        &self.lambda[self.offsets[d]..self.offsets[d + 1]]
    }
}
