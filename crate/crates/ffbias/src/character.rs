//! The quadratic character `χ_m(f) = (f/m)` attached to a monic squarefree
//! modulus `m ∈ F_q[T]`.
//!
//! For `P` irreducible and `f` coprime to `P`, the symbol `(f/P)` is `+1`
//! when `f` is a square modulo `P` and `-1` otherwise (and `0` when
//! `P | f`); for squarefree `m = P₁⋯P_r` the symbol is the product over the
//! `Pᵢ` — a completely multiplicative, `m`-periodic function of `f`.
//!
//! Two independent evaluation routes are provided:
//!
//! * [`QuadraticCharacter::eval`] — fast Euclidean descent using the
//!   function-field reciprocity law for monic `a`, `b` over `F_q` (`q` odd):
//!   `(a/b)(b/a) = (-1)^{((q-1)/2)·deg a·deg b}`, together with the constant
//!   rule `(c/b) = legendre_{F_q}(c)^{deg b}`.
//! * [`QuadraticCharacter::eval_euler`] — the Euler criterion
//!   `f^{(|P|-1)/2} mod P ∈ {±1}` applied to each prime factor of `m`.
//!
//! The reciprocity route is the production path; the Euler route is the
//! oracle that pins the sign conventions (tests compare them exhaustively on
//! small inputs and randomly on larger ones).

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::factor::{factor, Factorization};
use crate::field::FieldSpec;
use crate::poly::Poly;

/// The quadratic character attached to a monic squarefree nonconstant `m`.
#[derive(Clone, Debug)]
pub struct QuadraticCharacter {
    spec: FieldSpec,
    modulus: Poly,
    /// `(q-1)/2` is odd ⇔ `q ≡ 3 (mod 4)`; controls the reciprocity sign.
    half_q_odd: bool,
}

impl QuadraticCharacter {
    /// Validate `m` (monic, nonconstant, squarefree) and build the character.
    pub fn new(spec: &FieldSpec, modulus: &Poly) -> Result<QuadraticCharacter> {
        if !modulus.is_monic() {
            return Err(Error::domain(format!(
                "character modulus must be monic, got {modulus}"
            )));
        }
        if modulus.degree() == Some(0) {
            return Err(Error::domain("character modulus must be nonconstant"));
        }
        // squarefree ⇔ gcd(m, m') = 1; in characteristic p a vanishing
        // derivative (m a p-th power in disguise) also fails this test
        // because then gcd(m, 0) = m.
        let deriv = spec.poly_derivative(modulus);
        let g = spec.poly_gcd(modulus, &deriv)?;
        if g.degree() != Some(0) {
            return Err(Error::domain(format!(
                "character modulus must be squarefree, got {modulus}"
            )));
        }
        Ok(QuadraticCharacter {
            spec: spec.clone(),
            modulus: modulus.clone(),
            half_q_odd: (spec.q() - 1) / 2 % 2 == 1,
        })
    }

    /// The modulus `m`.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// `deg m`.
    pub fn modulus_degree(&self) -> usize {
        self.modulus.degree().expect("nonconstant")
    }

    /// Evaluate `χ_m(f)` by reciprocity descent. Accepts any `f` (zero,
    /// constants, non-monic); completely multiplicative and `m`-periodic.
    pub fn eval(&self, f: &Poly) -> Result<i8> {
        let spec = &self.spec;
        let mut sign = 1i8;
        let mut a = f.clone();
        let mut b = self.modulus.clone();
        // invariant: the answer is sign · (a/b), b monic of degree ≥ 1
        loop {
            a = spec.poly_rem(&a, &b)?;
            let Some(da) = a.degree() else {
                return Ok(0);
            };
            let lead = a.leading().unwrap();
            if lead.code() != 1 {
                // (c·a₁ / b) = legendre(c)^{deg b} · (a₁/b)
                if spec.legendre(lead) == -1 && b.degree().unwrap() % 2 == 1 {
                    sign = -sign;
                }
                a = spec.poly_make_monic(&a)?;
            }
            if da == 0 {
                return Ok(sign);
            }
            // reciprocity flip for two monic polynomials
            if self.half_q_odd && da % 2 == 1 && b.degree().unwrap() % 2 == 1 {
                sign = -sign;
            }
            std::mem::swap(&mut a, &mut b);
        }
    }

    /// Evaluate `χ_m(f)` by the Euler criterion on each prime factor of `m`
    /// (independent oracle; slower).
    pub fn eval_euler(&self, f: &Poly) -> Result<i8> {
        let fac = factor(&self.spec, &self.modulus)?;
        self.eval_euler_with(&fac, f)
    }

    /// Euler-criterion evaluation reusing a precomputed factorization of `m`.
    pub fn eval_euler_with(&self, m_factors: &Factorization, f: &Poly) -> Result<i8> {
        let spec = &self.spec;
        let mut sign = 1i8;
        for (p, e) in m_factors.factors() {
            debug_assert_eq!(*e, 1, "modulus is squarefree");
            if f.is_zero() || spec.poly_rem(f, p)?.is_zero() {
                return Ok(0);
            }
            // f^((q^d - 1)/2) ≡ ±1 (mod P)
            let d = p.degree().unwrap() as u32;
            let mut exp = BigUint::from(spec.q());
            exp = exp.pow(d);
            exp -= 1u32;
            exp >>= 1;
            let r = spec.poly_mod_pow(f, &exp, p)?;
            if r == Poly::one() {
                // square residue: no sign change
            } else if r == Poly::from_coeffs(vec![spec.neg(crate::field::FieldElement::ONE)]) {
                sign = -sign;
            } else {
                return Err(Error::integrity(format!(
                    "euler criterion produced a non-unit residue for f = {f}, P = {p}"
                )));
            }
        }
        Ok(sign)
    }
}

/// One-shot convenience: validate `m` and evaluate `χ_m(f)`.
pub fn chi(spec: &FieldSpec, m: &Poly, f: &Poly) -> Result<i8> {
    QuadraticCharacter::new(spec, m)?.eval(f)
}

/// Precomputed `χ_m` on all residues modulo `m`, for mass enumeration.
/// Lookup costs one Euclidean reduction plus an array index.
pub struct ResidueTable {
    character: QuadraticCharacter,
    values: Vec<i8>,
}

impl ResidueTable {
    /// Tabulate `χ_m` on the `q^{deg m}` residues.
    pub fn new(character: &QuadraticCharacter) -> Result<ResidueTable> {
        let spec = &character.spec;
        let m_deg = character.modulus_degree();
        let count = (spec.q() as u128)
            .checked_pow(m_deg as u32)
            .ok_or_else(|| Error::guard("residue table size overflows"))?;
        if count > crate::tolerances::BRUTE_FORCE_GUARD as u128 {
            return Err(Error::guard(format!(
                "residue table would need {count} entries"
            )));
        }
        let mut values = Vec::with_capacity(count as usize);
        for code in 0..count {
            let r = spec.poly_from_code(code);
            values.push(character.eval(&r)?);
        }
        Ok(ResidueTable {
            character: character.clone(),
            values,
        })
    }

    /// `χ_m(f)` via residue lookup.
    pub fn eval(&self, f: &Poly) -> Result<i8> {
        let spec = &self.character.spec;
        let r = spec.poly_rem(f, &self.character.modulus)?;
        Ok(self.values[spec.poly_code(&r) as usize])
    }
}
