//! Exact computation of equivariant Chern–Schwartz–MacPherson (CSM) and
//! Segre–Schwartz–MacPherson (SSM) classes of matrix Schubert cells and of
//! the orbits of the `A2` quiver representation `Hom(C^k, C^n)`.
//!
//! Every class is computed by at least two independent routes (localization
//! sums, iterated residues, Schur-function generating series, sieve formulas)
//! and the [`suites`] module cross-checks them. All arithmetic is exact.
//!
//! Module map:
//!
//! * [`ringcore`]: sparse multivariate polynomials over `Q`, truncated series,
//!   exact division by linear forms, symmetrization.
//! * [`schurbasis`]: Schur symbols, straightening, the `rho^{k,n}` substitution
//!   and the iterated-residue operation `S`.
//! * [`cellgeom`]: orbit combinatorics of `GL_k x B_n^-` on `Hom(C^k, C^n)`.
//! * [`weightfn`]: weight functions, CSM/SSM classes of cells, interpolation
//!   axioms, coordinate arrangements, ordinary Schubert cell variants.
//! * [`genfun`]: generating functions and the stable `tssm_lambda` series.
//! * [`a2pp`]: the `A2` quiver orbits and the Parusinski–Pragacz sieve.

pub mod a2pp;
pub mod cellgeom;
pub mod error;
pub mod genfun;
pub mod ringcore;
pub mod schurbasis;
pub mod suites;
pub mod weightfn;

pub use error::{Error, Result};

/// Default truncation degree for infinite series.
pub const DEFAULT_CAP: u32 = 10;
