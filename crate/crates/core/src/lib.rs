//! Exact counting of compositions of integers and of graphs.
//!
//! * [`exactnum`]: big-integer counts, factorials, binomials, Bell and
//!   Stirling numbers, and composition-sum formulas for them.
//! * [`compositions`]: integer compositions with bounded, distinct,
//!   leading-summand-constrained, avoided or required parts.
//! * [`series`]: truncated power series and the rational generating
//!   functions behind the composition counters.
//! * [`graphcomp`]: partitions of a graph's vertices into connected induced
//!   blocks.
//! * [`cli`]: the `compcount` command-line tool.
//!
//! Every counter has a brute-force counterpart, and `compcount verify` runs
//! the cross-checks.
//!
//! ```
//! use compcount::compositions::{count_restricted, PartBounds};
//! use compcount::graphcomp::{build_family, count_compositions_graph, GraphFamily};
//!
//! // Compositions of 4 into 2 positive parts: (1,3), (2,2), (3,1).
//! assert_eq!(count_restricted(4, 2, PartBounds::positive()).to_string(), "3");
//!
//! // The 4-cycle has 2^4 - 4 compositions.
//! let c4 = build_family(GraphFamily::Cycle, 4).unwrap();
//! assert_eq!(count_compositions_graph(&c4).unwrap().to_string(), "12");
//! ```

use thiserror::Error;

pub mod cli;
pub mod compositions;
pub mod exactnum;
pub mod graphcomp;
pub mod series;

pub use exactnum::BigCount;

/// Any error the library or CLI can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Exact(#[from] exactnum::ExactError),
    #[error(transparent)]
    Composition(#[from] compositions::CompositionError),
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Graph(#[from] graphcomp::GraphError),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        use compositions::CompositionError as C;
        use graphcomp::GraphError as G;
        match self {
            Error::Usage(_) | Error::Graph(G::InvalidCap { .. }) => cli::EXIT_USAGE,
            Error::Composition(C::EnumerationLimit { .. })
            | Error::Graph(G::CapExceeded { .. } | G::OracleTooLarge { .. }) => cli::EXIT_RESOURCE,
            _ => cli::EXIT_DOMAIN,
        }
    }
}

// Compile the guide's code listings as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-numbers.md")]
    mod exact_numbers {}
    #[doc = include_str!("../../../book/src/integer-compositions.md")]
    mod integer_compositions {}
    #[doc = include_str!("../../../book/src/generating-functions.md")]
    mod generating_functions {}
    #[doc = include_str!("../../../book/src/graph-compositions.md")]
    mod graph_compositions {}
    #[doc = include_str!("../../../book/src/command-line.md")]
    mod command_line {}
}
