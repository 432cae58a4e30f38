//! One-stop bundle of everything derived from a single modulus.
//!
//! Constructing a [`ModulusContext`] validates the modulus (monic,
//! squarefree, nonconstant), factors it, computes the L-polynomial by
//! enumeration, and locates the inverse zeros.  All the expensive derived
//! objects — generating functions, oscillatory models, densities — are then
//! available as methods, so callers never juggle the individual pieces or
//! risk pairing a generating function with the wrong angle data.

use crate::error::Result;
use crate::factor::{factor, Factorization};
use crate::field::FieldSpec;
use crate::lfunc::{
    central_l_value, inverse_zeros, l_polynomial, CentralValue, InverseZeroData, LPolynomial,
};
use crate::model::{oscillatory_model, symmetric_constants, OscillatoryModel, SymmetricConstants};
use crate::poly::Poly;
use crate::series::{
    cumulative_gf, gf_lambda, gf_mu, BiasSeries, RationalGF, Recurrence, SeriesKind,
};
use crate::text::{format_poly, parse_poly};

/// A validated modulus together with its factorization, L-polynomial, and
/// inverse-zero data.
#[derive(Debug, Clone)]
pub struct ModulusContext {
    spec: FieldSpec,
    modulus: Poly,
    factorization: Factorization,
    l: LPolynomial,
    zeros: InverseZeroData,
}

impl ModulusContext {
    /// Builds the context for a modulus, validating it along the way.
    pub fn new(spec: &FieldSpec, modulus: &Poly) -> Result<ModulusContext> {
        let l = l_polynomial(spec, modulus)?;
        let factorization = factor(spec, modulus)?;
        let zeros = inverse_zeros(&l)?;
        Ok(ModulusContext {
            spec: spec.clone(),
            modulus: modulus.clone(),
            factorization,
            l,
            zeros,
        })
    }

    /// Parses the modulus from text and builds the context.
    pub fn parse(spec: &FieldSpec, text: &str) -> Result<ModulusContext> {
        Self::new(spec, &parse_poly(spec, text)?)
    }

    /// Field size `q`.
    pub fn q(&self) -> u32 {
        self.spec.q()
    }

    /// The field specification.
    pub fn spec(&self) -> &FieldSpec {
        &self.spec
    }

    /// The modulus polynomial.
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    /// Canonical text form of the modulus.
    pub fn modulus_text(&self) -> String {
        format_poly(&self.modulus)
    }

    /// Degree `M` of the modulus.
    pub fn modulus_degree(&self) -> usize {
        self.l.modulus_degree()
    }

    /// The factorization of the modulus.
    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    /// The L-polynomial of the attached quadratic character.
    pub fn l(&self) -> &LPolynomial {
        &self.l
    }

    /// Inverse-zero angles and diagnostics.
    pub fn zeros(&self) -> &InverseZeroData {
        &self.zeros
    }

    /// The central value `𝓛(q^{-1/2})`, both directly and in product form.
    pub fn central_value(&self) -> CentralValue {
        central_l_value(&self.l, &self.zeros)
    }

    /// Non-cumulative generating function for the given weight.
    pub fn gf(&self, kind: SeriesKind) -> Result<RationalGF> {
        match kind {
            SeriesKind::Mobius => gf_mu(&self.l),
            SeriesKind::Liouville => gf_lambda(&self.l, &self.factorization.factor_degrees()),
        }
    }

    /// Generating function, optionally of the cumulative sums.
    pub fn gf_with(&self, kind: SeriesKind, cumulative: bool) -> Result<RationalGF> {
        let gf = self.gf(kind)?;
        if cumulative {
            cumulative_gf(&gf)
        } else {
            Ok(gf)
        }
    }

    /// Oscillatory model of the series (or of its cumulative sums).
    pub fn model(&self, kind: SeriesKind, cumulative: bool) -> Result<OscillatoryModel> {
        oscillatory_model(&self.gf_with(kind, cumulative)?, &self.zeros, self.q())
    }

    /// Closed-form symmetric constants for this modulus.
    pub fn constants(&self) -> SymmetricConstants {
        symmetric_constants(
            self.q(),
            &self.factorization.factor_degrees(),
            &self.zeros,
        )
    }

    /// Expanded bias series (with cumulative sums) to the given horizon.
    pub fn series(&self, kind: SeriesKind, horizon: usize) -> Result<BiasSeries> {
        BiasSeries::from_gf(self.q(), &self.modulus, kind, &self.gf(kind)?, horizon)
    }

    /// Validated linear recurrence for the series coefficients.
    pub fn recurrence(&self, kind: SeriesKind) -> Result<Recurrence> {
        self.gf(kind)?.recurrence()
    }
}
