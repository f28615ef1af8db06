use thiserror::Error;

use crate::exactla::Field;

/// Errors raised anywhere in the library.
///
/// Variants carry enough indices to locate the offending basis element,
/// degree or tuple without re-running the computation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },

    #[error("{modulus} is not a prime below 2^31")]
    InvalidModulus { modulus: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse scalar `{input}`: {reason}")]
    ParseScalar { input: String, reason: String },

    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("not a complex: composition of differentials is nonzero at degree {degree}")]
    NotAComplex { degree: usize },

    #[error("composition of the incoming and outgoing maps is nonzero")]
    NonzeroComposition,

    #[error("structure constant index out of range: {what} = {index} (dim {dim})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        dim: usize,
    },

    #[error("associativity fails: (b{i} b{j}) b{k} != b{i} (b{j} b{k})")]
    NonAssociative { i: usize, j: usize, k: usize },

    #[error("unit law fails on the {side} for basis element b{index}")]
    UnitLaw { side: &'static str, index: usize },

    #[error("subspace is not a two-sided ideal: {side} product with basis element b{generator} leaves it")]
    NotAnIdeal {
        side: &'static str,
        generator: usize,
    },

    #[error("objects belong to different algebras")]
    AlgebraMismatch,

    #[error(
        "homomorphism composition: codomain of the inner map is not the domain of the outer map"
    )]
    DomainMismatch,

    #[error("map is not multiplicative on basis pair (b{i}, b{j})")]
    NotMultiplicative { i: usize, j: usize },

    #[error("map does not send the unit to the unit")]
    NotUnital,

    #[error("ideal J1 is not contained in J2; no induced projection A/J1 -> A/J2")]
    NotContained,

    #[error("bimodule axiom `{law}` fails for basis elements a{a}, a{b}")]
    BimoduleAxiom {
        law: &'static str,
        a: usize,
        b: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("covering needs at least one ideal")]
    EmptyCovering,

    #[error("dimension cap exceeded at degree {degree}: {estimated} > {cap}")]
    DimensionCap {
        degree: usize,
        estimated: usize,
        cap: usize,
    },

    #[error("tuple {tuple:?} is not strictly increasing within 0..{n}")]
    InvalidTuple { tuple: Vec<usize>, n: usize },

    #[error("functor is missing the ring for tuple {tuple:?}")]
    MissingRing { tuple: Vec<usize> },

    #[error("functor is missing the restriction {from:?} -> {to:?}")]
    MissingRestriction { from: Vec<usize>, to: Vec<usize> },

    #[error("restriction {from:?} -> {to:?} does not connect the assigned rings")]
    RestrictionMismatch { from: Vec<usize>, to: Vec<usize> },

    #[error(
        "restriction paths {from:?} -> {to:?} disagree (via {via_first:?} and {via_second:?})"
    )]
    NonCommuting {
        from: Vec<usize>,
        to: Vec<usize>,
        via_first: Vec<usize>,
        via_second: Vec<usize>,
    },

    #[error("naturality square fails for J1 = sum over {smaller:?}, J2 = sum over {larger:?}")]
    Naturality {
        smaller: Vec<usize>,
        larger: Vec<usize>,
    },

    #[error("tensor factor {position} does not lie in summand {summand} (expected length {expected}, got {got})")]
    NotDecomposed {
        position: usize,
        summand: usize,
        expected: usize,
        got: usize,
    },

    #[error("chain map choice does not match the covering at index {index}")]
    ChoiceMismatch { index: usize },

    #[error("cover description: {0}")]
    InvalidCover(String),
}

pub type Result<T> = std::result::Result<T, Error>;
