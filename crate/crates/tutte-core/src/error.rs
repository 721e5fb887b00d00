//! Error type shared by every module of the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in graph construction, lattice enumeration,
/// exact linear algebra, or splitting evaluation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A rational string did not parse as `p` or `p/q` with `q != 0`.
    BadRational(String),
    /// `eval` was called without a value for a variable present in the polynomial.
    MissingVariable(&'static str),
    /// Matrix inversion on a rank-deficient matrix.
    Singular,
    /// Symbolic inversion needs the determinant to be a nonzero constant.
    NonConstantDet,
    /// Graph constructor input violated a structural invariant.
    InvalidGraph(String),
    /// The referenced edge is not in the graph.
    NoSuchEdge(String, String),
    /// Contraction of a loop was requested.
    LoopContraction(String),
    /// The partition is not over the graph's terminal list.
    InvalidPartition(String),
    /// Gluing found a non-terminal vertex label present in both parts.
    SharedNonTerminal(String),
    /// The two parts of a gluing do not carry the same terminal list.
    TerminalMismatch,
    /// A terminal label is missing from the graph.
    TerminalMissing(String),
    /// Lattice operation on partitions with different ground sets.
    GroundMismatch,
    /// Ground set exceeds the configured partition-lattice cap.
    GroundTooLarge { size: usize, cap: usize },
    /// Bell/Stirling argument outside the supported range.
    OutOfRange { n: usize, k: usize },
    /// Edge count exceeds the subgraph-enumeration cap.
    TooLarge { edges: usize, cap: usize },
    /// Operation requires a connected graph.
    Disconnected,
    /// The evaluation point violates a region precondition (for example a
    /// disconnected part on the lines `x = 1` or `y = 1`).
    RegionPrecondition(String),
    /// The Brylawski 2-sum formula is undefined on `(x-1)(y-1) = 1`.
    OnSingularHyperbola,
    /// An internal consistency check on a coefficient matrix failed.
    SingularInverse,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadRational(s) => write!(f, "cannot parse rational from {s:?}"),
            Error::MissingVariable(v) => write!(f, "no value assigned to variable {v}"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::NonConstantDet => {
                write!(f, "symbolic inverse requires a nonzero constant determinant")
            }
            Error::InvalidGraph(why) => write!(f, "invalid graph: {why}"),
            Error::NoSuchEdge(u, v) => write!(f, "no edge {u}-{v} in the graph"),
            Error::LoopContraction(v) => write!(f, "cannot contract loop at {v}"),
            Error::InvalidPartition(why) => write!(f, "invalid partition: {why}"),
            Error::SharedNonTerminal(v) => {
                write!(f, "non-terminal vertex {v} appears in both parts")
            }
            Error::TerminalMismatch => write!(f, "parts carry different terminal lists"),
            Error::TerminalMissing(v) => write!(f, "terminal {v} is not a vertex"),
            Error::GroundMismatch => write!(f, "partitions have different ground sets"),
            Error::GroundTooLarge { size, cap } => {
                write!(f, "ground set of size {size} exceeds cap {cap}")
            }
            Error::OutOfRange { n, k } => write!(f, "argument ({n}, {k}) out of range"),
            Error::TooLarge { edges, cap } => {
                write!(f, "{edges} edges exceed the enumeration cap {cap}")
            }
            Error::Disconnected => write!(f, "graph is disconnected"),
            Error::RegionPrecondition(why) => write!(f, "region precondition violated: {why}"),
            Error::OnSingularHyperbola => {
                write!(f, "Brylawski sum is undefined on (x-1)(y-1) = 1")
            }
            Error::SingularInverse => write!(f, "coefficient matrix failed its defining equation"),
        }
    }
}

impl core::error::Error for Error {}
