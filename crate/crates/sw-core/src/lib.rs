//! Computational core for the `SW(m)` family of N=1 triplet vertex operator
//! superalgebras: exact fusion-ring and Grothendieck-ring arithmetic in
//! Chebyshev quotient rings, representation data (weights, blocks, socle
//! series, Zhu dimension), the fourth-order Fuchsian operator with exact
//! Frobenius series and connection matrices, and numerical evaluation of
//! two-variable Dotsenko-Fateev integrals with their identity checks.

pub mod dfint;
pub mod exactalg;
pub mod fuchsian;
pub mod fusion;
pub mod repdata;

pub use exactalg::{ChebyshevPoly, LaurentPoly1, LaurentPoly2, Rational};
pub use fusion::{FusionElement, GrothendieckElement, SocleSeries};
pub use repdata::{LabelKind, ModuleLabel, RiemannScheme};
