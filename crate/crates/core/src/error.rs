//! Error type shared by every module of the crate.

use alloc::string::String;
use core::fmt;

/// Errors reported by the exact-algebra kernels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values from different ambient polynomial rings were combined.
    AmbientMismatch { left: usize, right: usize },
    /// A checked exponent operation overflowed the machine-width exponent type.
    ExponentOverflow,
    /// The operation requires a nonzero ideal.
    ZeroIdeal,
    /// The operation requires a proper ideal (not the whole ring).
    UnitIdeal,
    /// The operation is only defined for squarefree monomial ideals.
    NonSquarefree,
    /// The power `s` is below the smallest admissible value for the operation.
    PowerTooSmall { s: u32, min: u32 },
    /// A crown graph or crown closed form was requested below its valid size.
    CrownSize { n: usize, min: usize },
    /// A complete multipartite family needs at least two parts.
    TooFewParts { k: usize },
    /// Multipartite part sizes must be positive.
    EmptyPart,
    /// Stage index `j` outside `1..=k` for a staged multipartite ideal.
    StageIndex { j: usize, k: usize },
    /// A graph vertex label occurred twice.
    DuplicateLabel { label: String },
    /// An edge joins a vertex to itself.
    LoopEdge { label: String },
    /// The same undirected edge was given twice.
    DuplicateEdge { a: String, b: String },
    /// An edge-list line could not be parsed as two labels.
    EdgeListSyntax { line: usize },
    /// An edge referenced a vertex index outside the graph.
    VertexOutOfRange { index: usize, count: usize },
    /// The graph has no edges but the operation needs at least one.
    EdgelessGraph,
    /// A monomial prime must be generated by a nonempty set of variables.
    EmptyPrime,
    /// Hilbert reduction of the zero series (the zero module) is undefined.
    ZeroNumerator,
    /// A series numerator vanishes at t = 1 after all denominator factors
    /// were cancelled; the input was not the series of a graded module.
    UncancelledRootAtOne,
    /// The multidegree support is too large for subset enumeration.
    SupportTooLarge { size: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::AmbientMismatch { left, right } => {
                write!(f, "ambient mismatch: {left} variables vs {right} variables")
            }
            Error::ExponentOverflow => write!(f, "exponent arithmetic overflowed"),
            Error::ZeroIdeal => write!(f, "operation is undefined for the zero ideal"),
            Error::UnitIdeal => write!(f, "operation is undefined for the unit ideal"),
            Error::NonSquarefree => {
                write!(f, "operation requires a squarefree monomial ideal")
            }
            Error::PowerTooSmall { s, min } => {
                write!(f, "power {s} is out of range: requires s >= {min}")
            }
            Error::CrownSize { n, min } => {
                write!(f, "crown size {n} is out of range: requires n >= {min}")
            }
            Error::TooFewParts { k } => {
                write!(f, "multipartite family needs k >= 2 parts, got {k}")
            }
            Error::EmptyPart => write!(f, "multipartite part sizes must be >= 1"),
            Error::StageIndex { j, k } => {
                write!(f, "stage index {j} is out of range 1..={k}")
            }
            Error::DuplicateLabel { label } => write!(f, "duplicate vertex label '{label}'"),
            Error::LoopEdge { label } => write!(f, "loop edge at vertex '{label}'"),
            Error::DuplicateEdge { a, b } => write!(f, "duplicate edge {{{a}, {b}}}"),
            Error::EdgeListSyntax { line } => {
                write!(f, "edge list line {line}: expected two whitespace-separated labels")
            }
            Error::VertexOutOfRange { index, count } => {
                write!(f, "vertex index {index} out of range for {count} vertices")
            }
            Error::EdgelessGraph => write!(f, "graph has no edges"),
            Error::EmptyPrime => write!(f, "monomial prime needs at least one variable"),
            Error::ZeroNumerator => write!(f, "cannot reduce the series of the zero module"),
            Error::UncancelledRootAtOne => {
                write!(f, "numerator vanishes at t = 1 beyond the denominator power")
            }
            Error::SupportTooLarge { size } => {
                write!(f, "multidegree support of size {size} exceeds the enumeration limit")
            }
        }
    }
}

impl core::error::Error for Error {}
