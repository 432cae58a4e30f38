//! Polynomials over `F_q` and the ring operations on them.
//!
//! [`Poly`] stores ascending coefficients with no trailing zeros, so the
//! representation of every polynomial (including `0`, the empty vector) is
//! unique and `==`/`Hash` are structural. Degree is `Option<usize>`: `None`
//! for the zero polynomial.
//!
//! All arithmetic goes through the owning [`FieldSpec`] (`spec.poly_mul(
//! &a, &b)` etc.), mirroring how scalar arithmetic works in this crate.
//!
//! Monic polynomials of a fixed degree `d` are enumerated in a fixed order:
//! index `j ∈ [0, q^d)` maps to `T^d + Σ cᵢ Tⁱ` with `cᵢ = (j / qⁱ) mod q`,
//! i.e. the constant coefficient varies fastest. Equivalently, the monic
//! polynomial with index `j` has *code* `q^d + j` under the base-`q`
//! coefficient encoding ([`FieldSpec::poly_code`]).

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A polynomial over `F_q`: ascending coefficients, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<FieldElement>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero() -> Poly {
        Poly { coeffs: vec![] }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Poly {
        Poly {
            coeffs: vec![FieldElement::ONE],
        }
    }

    /// `T^d` (valid in every field).
    pub fn monomial(d: usize) -> Poly {
        let mut coeffs = vec![FieldElement::ZERO; d + 1];
        coeffs[d] = FieldElement::ONE;
        Poly { coeffs }
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last() == Some(&FieldElement::ZERO) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Ascending coefficient slice (empty for zero).
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    /// Coefficient of `T^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(FieldElement::ZERO)
    }

    /// `deg f`, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Leading coefficient, if nonzero.
    pub fn leading(&self) -> Option<FieldElement> {
        self.coeffs.last().copied()
    }

    /// Whether the polynomial is monic (nonzero with leading coefficient 1).
    pub fn is_monic(&self) -> bool {
        self.leading() == Some(FieldElement::ONE)
    }

    /// Whether this is a nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() == 1
    }
}

impl FieldSpec {
    /// Build a polynomial from integer codes, each reduced via
    /// [`FieldSpec::element`]. Ascending order, for tests and constructions.
    pub fn poly_from_codes(&self, codes: &[i64]) -> Poly {
        Poly::from_coeffs(codes.iter().map(|&c| self.element(c)).collect())
    }

    /// `f + g`.
    pub fn poly_add(&self, f: &Poly, g: &Poly) -> Poly {
        let n = f.coeffs.len().max(g.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| self.add(f.coeff(i), g.coeff(i)))
                .collect(),
        )
    }

    /// `-f`.
    pub fn poly_neg(&self, f: &Poly) -> Poly {
        Poly {
            coeffs: f.coeffs.iter().map(|&c| self.neg(c)).collect(),
        }
    }

    /// `f - g`.
    pub fn poly_sub(&self, f: &Poly, g: &Poly) -> Poly {
        let n = f.coeffs.len().max(g.coeffs.len());
        Poly::from_coeffs(
            (0..n)
                .map(|i| self.sub(f.coeff(i), g.coeff(i)))
                .collect(),
        )
    }

    /// `c · f`.
    pub fn poly_scale(&self, c: FieldElement, f: &Poly) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: f.coeffs.iter().map(|&a| self.mul(c, a)).collect(),
        }
    }

    /// `f · g` (schoolbook; degrees in this crate stay small).
    pub fn poly_mul(&self, f: &Poly, g: &Poly) -> Poly {
        if f.is_zero() || g.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldElement::ZERO; f.coeffs.len() + g.coeffs.len() - 1];
        for (i, &a) in f.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in g.coeffs.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division: `f = q·g + r` with `deg r < deg g`.
    pub fn poly_divmod(&self, f: &Poly, g: &Poly) -> Result<(Poly, Poly)> {
        let gdeg = g
            .degree()
            .ok_or_else(|| Error::domain("polynomial division by zero"))?;
        let lead_inv = self.inv(g.leading().unwrap())?;
        let mut r = f.coeffs.clone();
        let mut q = vec![
            FieldElement::ZERO;
            f.coeffs.len().saturating_sub(g.coeffs.len()) + 1
        ];
        while r.len() > gdeg {
            let c = *r.last().unwrap();
            if !c.is_zero() {
                let shift = r.len() - 1 - gdeg;
                let factor = self.mul(c, lead_inv);
                q[shift] = factor;
                for (i, &gc) in g.coeffs.iter().enumerate() {
                    r[i + shift] = self.sub(r[i + shift], self.mul(factor, gc));
                }
            }
            r.pop();
        }
        Ok((Poly::from_coeffs(q), Poly::from_coeffs(r)))
    }

    /// Remainder of `f` modulo `g`.
    pub fn poly_rem(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        Ok(self.poly_divmod(f, g)?.1)
    }

    /// Whether `g` divides `f` (`g ≠ 0`).
    pub fn poly_divides(&self, g: &Poly, f: &Poly) -> Result<bool> {
        Ok(self.poly_rem(f, g)?.is_zero())
    }

    /// Monic associate of a nonzero polynomial.
    pub fn poly_make_monic(&self, f: &Poly) -> Result<Poly> {
        let lead = f
            .leading()
            .ok_or_else(|| Error::domain("zero polynomial has no monic associate"))?;
        if lead == FieldElement::ONE {
            return Ok(f.clone());
        }
        Ok(self.poly_scale(self.inv(lead)?, f))
    }

    /// Monic greatest common divisor (`gcd(0, 0) = 0`).
    pub fn poly_gcd(&self, f: &Poly, g: &Poly) -> Result<Poly> {
        let mut a = f.clone();
        let mut b = g.clone();
        while !b.is_zero() {
            let r = self.poly_rem(&a, &b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            self.poly_make_monic(&a)
        }
    }

    /// Evaluate `f` at a field element (Horner).
    pub fn poly_eval(&self, f: &Poly, x: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for &c in f.coeffs.iter().rev() {
            acc = self.add(self.mul(acc, x), c);
        }
        acc
    }

    /// Formal derivative `f'` (characteristic-`p` rules apply).
    pub fn poly_derivative(&self, f: &Poly) -> Poly {
        Poly::from_coeffs(
            f.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| self.mul(self.element(i as i64), c))
                .collect(),
        )
    }

    /// `base^e mod modulus` with a `u64` exponent.
    pub fn poly_mod_pow_u64(&self, base: &Poly, e: u64, modulus: &Poly) -> Result<Poly> {
        self.poly_mod_pow(base, &BigUint::from(e), modulus)
    }

    /// `base^e mod modulus` by binary exponentiation.
    pub fn poly_mod_pow(&self, base: &Poly, e: &BigUint, modulus: &Poly) -> Result<Poly> {
        if modulus.is_zero() {
            return Err(Error::domain("zero modulus in poly_mod_pow"));
        }
        let mut acc = self.poly_rem(&Poly::one(), modulus)?;
        let mut b = self.poly_rem(base, modulus)?;
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = self.poly_rem(&self.poly_mul(&acc, &b), modulus)?;
            }
            if i + 1 < bits {
                b = self.poly_rem(&self.poly_mul(&b, &b), modulus)?;
            }
        }
        Ok(acc)
    }

    /// Base-`q` coefficient code of `f`: `Σ code(cᵢ)·qⁱ`. Injective on
    /// polynomials of degree `< 40` over small fields (fits `u128` far
    /// beyond anything enumerated here; callers guard sizes).
    pub fn poly_code(&self, f: &Poly) -> u128 {
        let q = self.q() as u128;
        let mut code = 0u128;
        for &c in f.coeffs.iter().rev() {
            code = code * q + c.code() as u128;
        }
        code
    }

    /// Inverse of [`FieldSpec::poly_code`].
    pub fn poly_from_code(&self, mut code: u128) -> Poly {
        let q = self.q() as u128;
        let mut coeffs = Vec::new();
        while code > 0 {
            let digit = (code % q) as u32;
            coeffs.push(
                self.element_from_code(digit)
                    .expect("digit < q by construction"),
            );
            code /= q;
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Iterator over all monic polynomials of a fixed degree, in index order
/// (constant coefficient varies fastest).
pub struct MonicIter {
    spec: FieldSpec,
    base: u128,
    next: u128,
    end: u128,
}

impl Iterator for MonicIter {
    type Item = Poly;

    fn next(&mut self) -> Option<Poly> {
        if self.next >= self.end {
            return None;
        }
        let p = self.spec.poly_from_code(self.base + self.next);
        self.next += 1;
        Some(p)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for MonicIter {}

/// All monic polynomials of the given degree over `spec`'s field, in the
/// crate's canonical enumeration order. Degree 0 yields exactly `1`.
pub fn enumerate_monic(spec: &FieldSpec, degree: usize) -> Result<MonicIter> {
    if degree > 100 {
        return Err(Error::guard(format!(
            "enumerate_monic degree {degree} is far beyond any tractable range"
        )));
    }
    let q = spec.q() as u128;
    let base = q
        .checked_pow(degree as u32)
        .ok_or_else(|| Error::guard("q^degree overflows the enumeration code space"))?;
    Ok(MonicIter {
        spec: spec.clone(),
        base,
        next: 0,
        end: base,
    })
}

/// Number of monic polynomials of the given degree: `q^degree`.
pub fn monic_count(spec: &FieldSpec, degree: usize) -> Result<u64> {
    (spec.q() as u64)
        .checked_pow(degree as u32)
        .ok_or_else(|| Error::guard("q^degree overflows u64"))
}
