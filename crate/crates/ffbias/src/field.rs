//! Finite fields `F_q` with `q = p^k`, `p` an odd prime.
//!
//! A [`FieldSpec`] owns all arithmetic for one field; [`FieldElement`] is a
//! plain canonical code in `[0, q)`:
//!
//! * for prime fields (`k = 1`) the code is the residue itself;
//! * for extension fields (`k > 1`) the code is the base-`p` digit encoding
//!   of the coefficient vector with respect to the supplied irreducible
//!   extension modulus, i.e. the element `Σ cᵢ xⁱ` has code `Σ cᵢ pⁱ`.
//!
//! Extension arithmetic is table-driven (guarded by
//! [`MAX_EXTENSION_Q`]); prime-field
//! arithmetic is modular. `FieldSpec` is cheaply cloneable (`Arc` inside) so
//! it can be captured by parallel iterators.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::tolerances::MAX_EXTENSION_Q;

/// An element of `F_q`, stored as its canonical code in `[0, q)`.
///
/// Elements carry no reference to their field; all arithmetic goes through
/// the owning [`FieldSpec`]. Mixing elements of different fields is a logic
/// error that the debug assertions in `FieldSpec` catch on the range check.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct FieldElement(u32);

impl FieldElement {
    /// The additive identity (code 0) — valid in every field.
    pub const ZERO: FieldElement = FieldElement(0);
    /// The multiplicative identity (code 1) — valid in every field.
    pub const ONE: FieldElement = FieldElement(1);

    /// The canonical code of this element.
    pub fn code(self) -> u32 {
        self.0
    }

    /// Whether this is the additive identity.
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Precomputed tables for an extension field.
struct ExtTables {
    /// Extension modulus over `F_p`, ascending coefficients, monic, length `k+1`.
    modulus: Vec<u32>,
    /// `add[a*q + b] = a + b`.
    add: Vec<u32>,
    /// `mul[a*q + b] = a * b`.
    mul: Vec<u32>,
    /// `neg[a] = -a`.
    neg: Vec<u32>,
    /// `inv[a] = a⁻¹` (entry 0 unused).
    inv: Vec<u32>,
}

struct FieldInner {
    p: u32,
    k: u32,
    q: u32,
    ext: Option<ExtTables>,
}

/// A finite field `F_q`, `q = p^k` with `p` an odd prime.
#[derive(Clone)]
pub struct FieldSpec {
    inner: Arc<FieldInner>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.p())
            .field("k", &self.k())
            .field("q", &self.q())
            .finish()
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p()
            && self.k() == other.k()
            && self.ext_modulus() == other.ext_modulus()
    }
}
impl Eq for FieldSpec {}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

// ---- minimal F_p[x] helpers used only while building extension tables ----

fn fp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn fp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += (x as u64) * (y as u64) % p as u64;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| (c % p as u64) as u32).collect();
    fp_trim(&mut out);
    out
}

fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    debug_assert!(m.last() == Some(&1), "modulus must be monic");
    let mut r: Vec<u32> = a.to_vec();
    fp_trim(&mut r);
    while r.len() >= m.len() {
        let c = *r.last().unwrap();
        let shift = r.len() - m.len();
        for (i, &mc) in m.iter().enumerate() {
            let idx = i + shift;
            let sub = (c as u64) * (mc as u64) % p as u64;
            r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
        }
        fp_trim(&mut r);
    }
    r
}

/// Irreducibility over `F_p` by trial division; only used on the (small)
/// extension modulus at construction time.
fn fp_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        // all monic polynomials of degree d
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut t = idx;
            for _ in 0..d {
                g.push((t % p as u64) as u32);
                t /= p as u64;
            }
            g.push(1);
            if fp_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

impl FieldSpec {
    /// The prime field `F_p`. `p` must be an odd prime.
    pub fn prime(p: u32) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::domain(format!("{p} is not prime")));
        }
        if p == 2 {
            return Err(Error::domain(
                "characteristic 2 is not supported (quadratic characters need odd q)",
            ));
        }
        Ok(FieldSpec {
            inner: Arc::new(FieldInner {
                p,
                k: 1,
                q: p,
                ext: None,
            }),
        })
    }

    /// The extension field `F_{p^k}` defined by `modulus`, a monic
    /// irreducible polynomial over `F_p` of degree `k ≥ 2`, given by its
    /// ascending coefficients (each in `[0, p)`, length `k + 1`).
    pub fn extension(p: u32, modulus: &[u32]) -> Result<FieldSpec> {
        if !is_prime(p) || p == 2 {
            return Err(Error::domain(format!("{p} is not an odd prime")));
        }
        let mut m = modulus.to_vec();
        fp_trim(&mut m);
        if m.len() < 3 {
            return Err(Error::domain(
                "extension modulus must have degree at least 2",
            ));
        }
        if m.iter().any(|&c| c >= p) {
            return Err(Error::domain(
                "extension modulus coefficients must lie in [0, p)",
            ));
        }
        if *m.last().unwrap() != 1 {
            return Err(Error::domain("extension modulus must be monic"));
        }
        let k = (m.len() - 1) as u32;
        let q = (p as u64).checked_pow(k).filter(|&q| q <= MAX_EXTENSION_Q as u64);
        let q = match q {
            Some(q) => q as u32,
            None => {
                return Err(Error::guard(format!(
                    "extension field size p^k = {p}^{k} exceeds the table guard ({MAX_EXTENSION_Q})"
                )))
            }
        };
        if !fp_irreducible(&m, p) {
            return Err(Error::domain(
                "extension modulus is reducible over F_p",
            ));
        }

        // Build tables. Codes are base-p digit encodings of coefficient vectors.
        let decode = |code: u32| -> Vec<u32> {
            let mut v = Vec::with_capacity(k as usize);
            let mut t = code;
            for _ in 0..k {
                v.push(t % p);
                t /= p;
            }
            fp_trim(&mut v);
            v
        };
        let encode = |poly: &[u32]| -> u32 {
            let mut code = 0u32;
            for &c in poly.iter().rev() {
                code = code * p + c;
            }
            code
        };

        let qs = q as usize;
        let mut add = vec![0u32; qs * qs];
        let mut mul = vec![0u32; qs * qs];
        let mut neg = vec![0u32; qs];
        for a in 0..q {
            let pa = decode(a);
            let mut na: Vec<u32> = pa.iter().map(|&c| (p - c) % p).collect();
            fp_trim(&mut na);
            neg[a as usize] = encode(&na);
            for b in a..q {
                let pb = decode(b);
                let mut s: Vec<u32> = vec![0; pa.len().max(pb.len())];
                for (i, slot) in s.iter_mut().enumerate() {
                    let x = pa.get(i).copied().unwrap_or(0) + pb.get(i).copied().unwrap_or(0);
                    *slot = x % p;
                }
                fp_trim(&mut s);
                let sc = encode(&s);
                add[(a * q + b) as usize] = sc;
                add[(b * q + a) as usize] = sc;
                let prod = fp_rem(&fp_mul(&pa, &pb, p), &m, p);
                let pc = encode(&prod);
                mul[(a * q + b) as usize] = pc;
                mul[(b * q + a) as usize] = pc;
            }
        }
        // Inverses by Fermat: a^(q-2).
        let mut inv = vec![0u32; qs];
        for a in 1..q {
            let mut acc = 1u32;
            let mut base = a;
            let mut e = q - 2;
            while e > 0 {
                if e & 1 == 1 {
                    acc = mul[(acc * q + base) as usize];
                }
                base = mul[(base * q + base) as usize];
                e >>= 1;
            }
            debug_assert_eq!(mul[(a * q + acc) as usize], 1);
            inv[a as usize] = acc;
        }

        Ok(FieldSpec {
            inner: Arc::new(FieldInner {
                p,
                k,
                q,
                ext: Some(ExtTables {
                    modulus: m,
                    add,
                    mul,
                    neg,
                    inv,
                }),
            }),
        })
    }

    /// Characteristic `p`.
    pub fn p(&self) -> u32 {
        self.inner.p
    }

    /// Extension degree `k` (1 for prime fields).
    pub fn k(&self) -> u32 {
        self.inner.k
    }

    /// Field size `q = p^k`.
    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// The extension modulus over `F_p` (ascending coefficients), if `k > 1`.
    pub fn ext_modulus(&self) -> Option<&[u32]> {
        self.inner.ext.as_ref().map(|e| e.modulus.as_slice())
    }

    /// The element with the given canonical code, checked.
    pub fn element_from_code(&self, code: u32) -> Result<FieldElement> {
        if code < self.q() {
            Ok(FieldElement(code))
        } else {
            Err(Error::domain(format!(
                "element code {code} out of range for q = {}",
                self.q()
            )))
        }
    }

    /// The element obtained by reducing an integer code: `n mod q`.
    ///
    /// For prime fields this is the usual residue embedding `Z → F_p`. For
    /// extension fields the reduced value is interpreted as a canonical code
    /// (a base-`p` digit vector), which is a naming convention rather than a
    /// ring homomorphism; strict text parsing therefore refuses out-of-range
    /// coefficients instead of reducing them.
    pub fn element(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.q() as i64) as u32)
    }

    #[inline]
    fn check(&self, a: FieldElement) {
        debug_assert!(a.0 < self.q(), "foreign field element");
    }

    /// `a + b`.
    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        match &self.inner.ext {
            None => FieldElement((a.0 + b.0) % self.inner.p),
            Some(t) => FieldElement(t.add[(a.0 * self.inner.q + b.0) as usize]),
        }
    }

    /// `-a`.
    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.check(a);
        match &self.inner.ext {
            None => FieldElement(if a.0 == 0 { 0 } else { self.inner.p - a.0 }),
            Some(t) => FieldElement(t.neg[a.0 as usize]),
        }
    }

    /// `a - b`.
    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// `a * b`.
    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.check(a);
        self.check(b);
        match &self.inner.ext {
            None => FieldElement(((a.0 as u64) * (b.0 as u64) % self.inner.p as u64) as u32),
            Some(t) => FieldElement(t.mul[(a.0 * self.inner.q + b.0) as usize]),
        }
    }

    /// `a⁻¹`; error on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        self.check(a);
        if a.is_zero() {
            return Err(Error::domain("division by zero in F_q"));
        }
        Ok(match &self.inner.ext {
            None => self.pow(a, (self.inner.p - 2) as u64),
            Some(t) => FieldElement(t.inv[a.0 as usize]),
        })
    }

    /// `a^e` by binary exponentiation (`a⁰ = 1`, including `0⁰ = 1`).
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        self.check(a);
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// The quadratic-residue symbol of `c` in `F_q^×` (Euler criterion):
    /// `0` for `c = 0`, `+1` for nonzero squares, `-1` otherwise.
    pub fn legendre(&self, c: FieldElement) -> i8 {
        if c.is_zero() {
            return 0;
        }
        let r = self.pow(c, ((self.q() - 1) / 2) as u64);
        if r == FieldElement::ONE {
            1
        } else {
            debug_assert_eq!(r, self.neg(FieldElement::ONE));
            -1
        }
    }

    /// Iterator over all field elements in code order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q()).map(FieldElement)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_characteristics() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(4).is_err());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(3).is_ok());
        assert!(FieldSpec::prime(10007).is_ok());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        let a = f5.element(3);
        let b = f5.element(4);
        assert_eq!(f5.add(a, b), f5.element(2));
        assert_eq!(f5.mul(a, b), f5.element(2));
        assert_eq!(f5.sub(a, b), f5.element(4));
        assert_eq!(f5.neg(a), f5.element(2));
        assert_eq!(f5.inv(a).unwrap(), f5.element(2)); // 3*2 = 6 = 1
        assert!(f5.inv(FieldElement::ZERO).is_err());
        assert_eq!(f5.pow(a, 4), FieldElement::ONE); // Fermat
        assert_eq!(f5.element(-1), f5.element(4));
    }

    #[test]
    fn legendre_symbols_in_f5_and_f7() {
        let f5 = FieldSpec::prime(5).unwrap();
        // squares mod 5: 1, 4
        let expect5 = [0i8, 1, -1, -1, 1];
        for (c, &e) in expect5.iter().enumerate() {
            assert_eq!(f5.legendre(f5.element(c as i64)), e, "c = {c}");
        }
        let f7 = FieldSpec::prime(7).unwrap();
        // squares mod 7: 1, 2, 4
        let expect7 = [0i8, 1, 1, -1, 1, -1, -1];
        for (c, &e) in expect7.iter().enumerate() {
            assert_eq!(f7.legendre(f7.element(c as i64)), e, "c = {c}");
        }
    }

    /// F_9 = F_3[x]/(x²+1): x has code 3; (x)·(x) = -1 = 2.
    #[test]
    fn f9_table_arithmetic() {
        let f9 = FieldSpec::extension(3, &[1, 0, 1]).unwrap();
        assert_eq!(f9.q(), 9);
        let x = f9.element_from_code(3).unwrap();
        assert_eq!(f9.mul(x, x), f9.element_from_code(2).unwrap());
        // x * (x+1) = x² + x = x + 2 → code 3 + 2 = 5
        let xp1 = f9.element_from_code(4).unwrap();
        assert_eq!(f9.mul(x, xp1), f9.element_from_code(5).unwrap());
        // group order: every nonzero element to the 8th power is 1
        for c in 1..9 {
            let a = f9.element_from_code(c).unwrap();
            assert_eq!(f9.pow(a, 8), FieldElement::ONE);
            assert_eq!(f9.mul(a, f9.inv(a).unwrap()), FieldElement::ONE);
        }
        // exactly (q-1)/2 nonzero squares
        let squares: i32 = (1..9)
            .map(|c| (f9.legendre(f9.element_from_code(c).unwrap()) == 1) as i32)
            .sum();
        assert_eq!(squares, 4);
    }

    #[test]
    fn f9_rejects_reducible_modulus() {
        // x² + 2 = (x+1)(x+2) over F_3
        assert!(FieldSpec::extension(3, &[2, 0, 1]).is_err());
        // and x² - x = x(x-1)
        assert!(FieldSpec::extension(3, &[0, 2, 1]).is_err());
    }

    #[test]
    fn f25_and_f27_build_and_are_fields() {
        for (p, m) in [(5u32, vec![2, 0, 1]), (3u32, vec![1, 2, 0, 1])] {
            let f = FieldSpec::extension(p, &m).unwrap();
            let q = f.q();
            for c in 1..q {
                let a = f.element_from_code(c).unwrap();
                assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
                assert_eq!(f.pow(a, (q - 1) as u64), FieldElement::ONE);
            }
        }
    }

    #[test]
    fn extension_guard_refuses_large_tables() {
        // 3^7 = 2187 > 512 ⇒ guard, regardless of irreducibility
        let m = [1, 1, 0, 0, 0, 0, 0, 1];
        match FieldSpec::extension(3, &m) {
            Err(Error::Guard(_)) => {}
            other => panic!("expected guard error, got {other:?}"),
        }
    }

    /// Field axioms on a sample of triples (associativity, distributivity).
    #[test]
    fn axioms_sampled() {
        for f in [
            FieldSpec::prime(13).unwrap(),
            FieldSpec::extension(3, &[1, 0, 1]).unwrap(),
        ] {
            let q = f.q();
            let step = (q / 7).max(1);
            for a in (0..q).step_by(step as usize) {
                for b in (0..q).step_by(step as usize) {
                    for c in (0..q).step_by(step as usize) {
                        let (a, b, c) = (
                            FieldElement(a),
                            FieldElement(b),
                            FieldElement(c),
                        );
                        assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }
}
