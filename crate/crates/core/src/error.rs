use core::fmt;

use crate::ElementId;

/// Which of the two bound operations failed during lattice validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Meet,
    Join,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundKind::Meet => f.write_str("meet"),
            BoundKind::Join => f.write_str("join"),
        }
    }
}

/// Errors shared by all modules of this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A lattice must have at least one element.
    Empty,
    /// An element index was not below the element count.
    ElementOutOfRange { element: ElementId, count: usize },
    /// The cover relation is not acyclic; the pair lies on a cycle.
    CycleDetected { lower: ElementId, upper: ElementId },
    /// The pair has no unique meet or join under the given order.
    NotALattice {
        kind: BoundKind,
        a: ElementId,
        b: ElementId,
    },
    /// An interval endpoint pair was not ordered.
    NotComparable { lower: ElementId, upper: ElementId },
    /// A configured size or work budget was exceeded.
    Overbudget {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    /// The operation requires a distributive lattice.
    NotDistributive,
    /// The given elements do not form a chain; the pair is incomparable.
    NotAChain { a: ElementId, b: ElementId },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Empty => f.write_str("lattice has no elements"),
            Error::ElementOutOfRange { element, count } => {
                write!(f, "element {element} out of range (count {count})")
            }
            Error::CycleDetected { lower, upper } => {
                write!(f, "cover relation has a cycle through ({lower}, {upper})")
            }
            Error::NotALattice { kind, a, b } => {
                write!(f, "not a lattice: ({a}, {b}) has no unique {kind}")
            }
            Error::NotComparable { lower, upper } => {
                write!(f, "elements {lower} and {upper} are not comparable")
            }
            Error::Overbudget {
                what,
                limit,
                actual,
            } => write!(f, "over budget: {what} is {actual}, limit {limit}"),
            Error::NotDistributive => f.write_str("lattice is not distributive"),
            Error::NotAChain { a, b } => {
                write!(f, "not a chain: elements {a} and {b} are incomparable")
            }
        }
    }
}

impl core::error::Error for Error {}
