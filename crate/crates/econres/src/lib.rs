//! Exact-arithmetic toolkit for 3-fold terminal cyclic quotient singularities
//! of type 1/r(1,a,r−a).
//!
//! The crate computes, entirely over the rationals:
//!
//! * the toric fan of the economic resolution, built by the recursive tower
//!   of weighted blowups ([`fan`]);
//! * the round-down maps between monomial lattices attached to each blowup
//!   and their finite fibers ([`rounddown`]);
//! * the G-brick attached to every maximal cone, together with border bases,
//!   semigroup generators, dual cones and saturation checks ([`brick`]);
//! * a GIT stability parameter making every such brick stable ([`stability`]);
//! * the corresponding Weyl chamber inside the A_{r−1} root system
//!   ([`chamber`]).
//!
//! No floating point is used anywhere: scalars are arbitrary-precision
//! rationals, lattice data are arbitrary-precision integers.

pub mod arith;
pub mod brick;
pub mod chamber;
pub mod fan;
pub mod group;
pub mod monomial;
pub mod render;
pub mod rounddown;
pub mod stability;
pub mod verify;

pub use arith::{IntVec3, Rational, RatMatrix};
pub use brick::{danilov_bricks, pullback_brick, GBrick, SemigroupGens};
pub use chamber::{AlphaVector, Root, RootSet};
pub use fan::{econ_fan, Cone, EconFan};
pub use group::{Character, GroupType, Side};
pub use monomial::Monomial;
pub use stability::{SymbolicTheta, Theta};
pub use verify::VerifyReport;

/// Error type shared by the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// `1/r(1,a,r−a)` requires `gcd(r,a) = 1` and `1 ≤ a ≤ r−1` (or `(1,0)`).
    #[error("invalid quotient type r={r}, a={a}: {reason}")]
    InvalidType { r: u64, a: u64, reason: &'static str },
    /// Operation requires a nontrivial group.
    #[error("operation undefined for the trivial group")]
    TrivialGroup,
    /// 3×3 matrix inversion on a singular matrix.
    #[error("matrix is singular")]
    SingularMatrix,
    /// Linear system has no solution.
    #[error("linear system is inconsistent")]
    Infeasible,
    /// `primitive_scale` called on the zero vector.
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    /// A transported ray failed the lattice membership check. Indicates an
    /// internal bug, not bad input.
    #[error("transported ray {0} is not a lattice point")]
    IntegralityViolation(String),
    /// Cone is not unimodular, so it has no monomial chart basis.
    #[error("cone is not unimodular")]
    NotUnimodular,
    /// A candidate brick violates one of the four defining axioms.
    #[error("prebrick axiom ({axiom}) violated: {witness}")]
    AxiomViolation { axiom: Axiom, witness: String },
    /// The dual cone of the brick semigroup is not 3-dimensional.
    #[error("dual cone is not full-dimensional")]
    NotFullDimensional,
    /// The dual cone has more than three extremal rays.
    #[error("dual cone is not simplicial ({0} extremal rays)")]
    NotSimplicial(usize),
    /// A pullback produced the wrong number of monomials. Internal bug guard.
    #[error("fiber union has {got} elements, expected {expected}")]
    FiberSizeMismatch { got: usize, expected: usize },
    /// Closed-subset enumeration would exceed the explicit cap.
    #[error("closed-subset enumeration exceeds the cap (r = {0})")]
    TooLarge(u64),
    /// The bounded monoid-membership search overflowed its box.
    #[error("monoid membership search exhausted its bound")]
    SearchExhausted,
    /// Simple-root expansions are linearly dependent. Never expected for a
    /// valid base.
    #[error("simple roots do not form a base")]
    SingularBase,
}

/// The four axioms a weight-indexed monomial set must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    /// The identity monomial belongs to the set.
    ContainsOne,
    /// Exactly one monomial per character weight.
    WeightBijection,
    /// Divisor-closure of the genuine quotients inside the set.
    Sandwich,
    /// Multiply/divide-by-coordinate graph on the set is connected.
    Connected,
}

impl std::fmt::Display for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Axiom::ContainsOne => "i",
            Axiom::WeightBijection => "ii",
            Axiom::Sandwich => "iii",
            Axiom::Connected => "iv",
        };
        f.write_str(s)
    }
}

pub type Result<T> = std::result::Result<T, Error>;
