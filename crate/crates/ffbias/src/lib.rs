//! Sign bias of twisted Liouville and Möbius sums over `F_q[T]`.
//!
//! For an odd prime power `q`, a monic squarefree `m ∈ F_q[T]`, and the
//! quadratic character `χ_m(f) = (f/m)`, this crate studies the summatory
//! behaviour of `χ_m·λ` and `χ_m·μ` over monic polynomials, where
//! `λ = (-1)^Ω` is the Liouville function and `μ` the Möbius function:
//!
//! ```text
//!   b(n) = Σ_{f monic, deg f = n} χ_m(f)·λ(f)      (noncumulative)
//!   B(n) = Σ_{1 ≤ j ≤ n} b(j)                      (cumulative)
//! ```
//!
//! and likewise with `μ` in place of `λ`. The machinery:
//!
//! * **[`field`] / [`poly`] / [`text`]** — arithmetic in `F_q` and `F_q[T]`,
//!   plus a small polynomial grammar (`"T^3+T+4"`) with canonical formatting.
//! * **[`factor`]** — irreducibility testing, deterministic factorization,
//!   `μ`/`λ`, and a sieve computing both for *all* monic polynomials up to a
//!   degree bound (the brute-force oracle).
//! * **[`character`]** — the quadratic symbol `(f/m)` via function-field
//!   reciprocity, cross-checkable against the Euler criterion.
//! * **[`lfunc`]** — the twisted L-polynomial `𝓛(u, χ_m)` by direct
//!   enumeration, its inverse zeros `√q·e^{±iθ_j}`, Riemann-hypothesis
//!   residuals, and a rationality diagnostic for the angles `θ_j/π`.
//! * **[`series`]** — rational generating functions for `b(n)` and `B(n)`,
//!   exact expansion, extracted linear recurrences with a fast `n`-th term,
//!   and the brute-force cross-check.
//! * **[`model`]** — the oscillatory model
//!   `b(n) ≈ q^{n/2}(α_parity + Σ_j β_j sin(nθ_j + ω_j)) + C`
//!   by partial-fraction residues, with closed-form symmetric constants.
//! * **[`density`]** — logarithmic-free natural sign densities: empirical
//!   counts, exact arcsin closed forms, torus quadrature/QMC, an exact
//!   periodic path when the angles are rational multiples of π, and
//!   equidistribution spot-checks.
//! * **[`scan`] / [`cache`]** — batch scans over all squarefree moduli of a
//!   degree, the two reference tables, and a JSON-lines result cache.
//!
//! The primary interface is the `examples/` directory (one runnable example
//! per capability); a thin `ffbias` binary exposes the same operations as
//! subcommands.
//!
//! | Example (`cargo run --example …`) | Shows |
//! |---|---|
//! | `lfunc_basics` | L-polynomials, inverse-zero angles, central values, and the gap identity for five reference moduli |
//! | `bias_series` | Exact series expansion, generating functions, recurrences with fast jumps to large `n`, brute-force cross-checks, CSV output |
//! | `closed_form_density` | The oscillatory model's residues, arcsin closed-form densities, and empirical convergence for the `F_5` cubic |
//! | `torus_quadrature` | Two-angle densities by torus quadrature, cross-checked against quasi-random lattice sampling |
//! | `gsh_violation` | A modulus with `θ/π` rational: periodic sign patterns and exact rational densities |
//! | `reproduce_tables` | The two reference tables of empirical densities at horizons 10–10⁴ |
//! | `modulus_scan` | All squarefree cubics over `F_5`, ordered by central value, with the bias anti-correlation |
//! | `kronecker_weyl` | Equidistribution spot-check: empirical vs analytic density of `sin(nθ) > c` |
//! | `extension_fields` | The same modulus over `F_3` and `F_9`: how the character and angles change |

#![forbid(unsafe_code)]
#![warn(missing_docs)]

pub mod cache;
pub mod character;
pub mod context;
pub mod density;
pub mod error;
pub mod factor;
pub mod field;
pub mod lfunc;
pub mod model;
pub mod poly;
pub mod scan;
pub mod series;
pub mod text;
pub mod tolerances;
pub(crate) mod zpoly;

pub use context::ModulusContext;
pub use error::{Error, Result};
pub use field::{FieldElement, FieldSpec};
pub use poly::Poly;
pub use series::SeriesKind;

/// Version stamp for emitted JSON records; bump when the schema changes.
pub const SCHEMA_VERSION: u32 = 1;

/// The crate version, used as the cache `tool_version` key.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
