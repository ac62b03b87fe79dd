use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in the core library.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Malformed text input; `offset` is a byte offset into it.
    Parse { offset: usize, message: String },
    /// A replacement system that breaks its own rules.
    InvalidSystem(String),
    /// An edge set that is not the leaf set of an expansion.
    InvalidExpansion(String),
    /// Domain, range and map do not describe a graph isomorphism.
    InvalidDiagram(String),
    /// The two diagrams live over different systems.
    SystemMismatch,
    UnknownGenerator(String),
    /// A component path that names no component.
    MalformedPath(String),
    /// An operation that only makes sense for components in a special family.
    NotInFamily(String),
    DuplicateComponents,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { offset, message } => write!(f, "parse error at byte {offset}: {message}"),
            Error::InvalidSystem(m) => write!(f, "invalid replacement system: {m}"),
            Error::InvalidExpansion(m) => write!(f, "invalid expansion: {m}"),
            Error::InvalidDiagram(m) => write!(f, "invalid diagram: {m}"),
            Error::SystemMismatch => write!(f, "diagrams belong to different replacement systems"),
            Error::UnknownGenerator(g) => write!(f, "unknown generator {g:?}"),
            Error::MalformedPath(m) => write!(f, "malformed component path: {m}"),
            Error::NotInFamily(m) => write!(f, "{m}"),
            Error::DuplicateComponents => write!(f, "components must be pairwise distinct"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
