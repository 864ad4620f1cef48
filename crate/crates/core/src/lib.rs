//! Exact-arithmetic engine for Schubert calculus on Grassmannians and for
//! divisor-class computations on moduli spaces of curves.
//!
//! The crate is organised in layers, each built on the one below:
//!
//! - [`numeric`]: unbounded integers and rationals, factorials, exact
//!   determinants. Everything else reduces to this.
//! - [`combinat`]: partitions, ramification sequences and their bounded
//!   enumerations, and the elementary-symmetric-to-monomial transition.
//! - [`grassmann`]: the cohomology ring of `G(r, d)` in the ramification
//!   sequence convention, Littlewood-Richardson multiplication, and the
//!   closed-form degree formula for products against powers of the cusp
//!   class.
//! - [`brillnoether`]: Chern-number evaluation on `W^r_d(C)` through the
//!   Harris-Tu determinant formula, plus the graded ring of
//!   `C x Pic^d(C)` with its classes eta, gamma, theta.
//! - [`moduli`]: divisor-class coefficient vectors on the moduli spaces of
//!   (pointed) stable curves, slopes, and test-curve pairings.
//! - [`formulas`]: the closed-form slope and class formulas for the named
//!   divisor families, with their specialisation and bound checks.
//!
//! All computation is exact; no floating point enters any value produced
//! here. Decimal renderings exist only for display.

pub mod brillnoether;
pub mod combinat;
pub mod formulas;
pub mod grassmann;
pub mod moduli;
pub mod numeric;

pub use numeric::Rational;
