//! Exact computer algebra for constant braidings, the quantum matrix
//! algebras they generate, and the associated current (Yangian-like)
//! algebras.
//!
//! Everything is computed over the field Q(q) of rational functions in q
//! with exact rational coefficients, so every identity check in the crate
//! is an exact yes/no answer, never a numerical approximation. The main
//! layers:
//!
//! - [`scalars`]: the ground field Q(q), q-integers and q-factorials.
//! - [`tensors`]: dense operators on tensor powers of V, leg placement,
//!   partial traces and R-traces.
//! - [`symmetries`]: validated braidings (flip, super-flip, standard,
//!   two-parameter involutive), skew-inverses, skew-symmetrizers, bi-rank,
//!   u/v tensors and the M/N operators.
//! - [`baxterize`]: current R-matrices with spectral parameters, grid
//!   certification of the parameterized Yang-Baxter equation, unitarity
//!   profiles and normalization.
//! - [`ncalg`]: noncommutative polynomials, the RTT / reflection-equation /
//!   modified reflection-equation presentations, a degree-capped ideal
//!   membership oracle with witnesses, and quantum symmetric polynomials.
//! - [`yangian`]: truncated current algebras of braided and RTT type,
//!   evaluation morphisms, coproduct checks, and the determinant /
//!   Cayley-Hamilton-Newton identity suite.
//! - [`fock`]: the truncated R-symmetric algebra as a Fock space, creation
//!   and annihilation operators, and bosonic representations.
//! - [`report`] and [`cli`]: deterministic machine-readable verification
//!   reports and the command-line driver.

pub mod scalars;
pub mod tensors;
pub mod symmetries;
pub mod baxterize;
pub mod ncalg;
pub mod yangian;
pub mod fock;
pub mod report;
pub mod cli;

pub use baxterize::{CurrentR, Flavor, SpectralSample};
pub use fock::{FockBasis, FockMat, FockOp};
pub use ncalg::{IdealOracle, MatOverAlg, Membership, NCPoly, PresKind, Presentation, Word};
pub use report::{CheckRecord, Report, Status};
pub use scalars::{qfact, qnum, QRat, ScalarError};
pub use symmetries::{BiRank, PairOps, Symmetry, SymmetryError, SymmetryKind, UVTensors};
pub use tensors::{flip, LinOp, OpMat, TensorError};
pub use yangian::{CurrentImage, RttCurrentImage, YangianMode};
