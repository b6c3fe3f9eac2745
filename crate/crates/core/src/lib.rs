//! Exact computations for weighted-homogeneous isolated hypersurface
//! singularities: graded Jacobian algebras, Koszul complexes, orbifold
//! sectors, the bigraded Hochschild-Serre table of the diagonal matrix
//! factorization, and a Torelli-style equivalence search.

pub mod cli;
pub mod error;
pub mod gradedlin;
pub mod hsalgebra;
pub mod koszul;
pub mod milnor;
pub mod orbifold;
pub mod poly;
pub mod series;
pub mod torelli;

pub use error::{Error, Result};
pub use hsalgebra::{FunctorWord, HsCell, HsTable, LgModel};
pub use milnor::{IsolationCertificate, JacobianAlgebra};
pub use orbifold::{sectors, Sector};
pub use poly::{parse_poly, Monomial, Rational, WeightedPolynomial};
