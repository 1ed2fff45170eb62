//! Tree-like tableaux, alternative tableaux and linked partitions, with the
//! bijections between them and exact checks of corner-count identities.

pub mod alternative;
pub mod bijections;
pub mod diagrams;
pub mod linked;
pub mod oracle;
pub mod polynomials;
pub mod serial;
pub mod tableaux;
pub mod verify;

use thiserror::Error;

pub use alternative::{AlternativeTableau, Arrow, TypeBAlternativeTableau};
pub use diagrams::{BorderWord, Cell, FerrersDiagram, Shape, ShiftedDiagram, Step};
pub use linked::{LinkedPartition, SubsetPredicate, TypeBLinkedPartition, VertexClass};
pub use oracle::{OracleBounds, SizeTooLargeForOracle};
pub use polynomials::{BivariatePolynomial, ClosedFormId, Coefficient};
pub use tableaux::TreeLikeTableau;
pub use num_bigint::BigInt;

/// Polynomials with 64-bit coefficients.
pub type Poly = BivariatePolynomial<i64>;
/// Polynomials with 128-bit coefficients.
pub type WidePoly = BivariatePolynomial<i128>;
/// Polynomials with arbitrary-precision coefficients.
pub type BigPoly = BivariatePolynomial<num_bigint::BigInt>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Diagram(#[from] diagrams::DiagramError),
    #[error(transparent)]
    Tableau(#[from] tableaux::TableauError),
    #[error(transparent)]
    Alternative(#[from] alternative::AlternativeError),
    #[error(transparent)]
    Linked(#[from] linked::LinkedError),
    #[error(transparent)]
    Oracle(#[from] SizeTooLargeForOracle),
    #[error(transparent)]
    Bijection(#[from] bijections::BijectionError),
    #[error(transparent)]
    Poly(#[from] polynomials::PolyError),
    #[error(transparent)]
    Verify(#[from] verify::VerifyError),
    #[error(transparent)]
    Serial(#[from] serial::SerialError),
}
