//! The finite / tame / wild trichotomy, with semisimple as a refinement of
//! finite so classifiers can report it without leaving the enum.

use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum RepType {
    Semisimple,
    Finite,
    Tame,
    Wild,
}

impl RepType {
    /// Collapses the semisimple refinement to its trichotomy class.
    pub fn trichotomy(self) -> RepType {
        match self {
            RepType::Semisimple => RepType::Finite,
            other => other,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, RepType::Semisimple | RepType::Finite)
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepType::Semisimple => write!(f, "finite (semisimple)"),
            RepType::Finite => write!(f, "finite"),
            RepType::Tame => write!(f, "tame"),
            RepType::Wild => write!(f, "wild"),
        }
    }
}
