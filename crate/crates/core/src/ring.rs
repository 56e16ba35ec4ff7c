use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Which block of a joined ring an ideal is lifted into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An ordered list of distinct variable names.
///
/// Cloning is cheap; two rings are equal when their variable lists are.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ring {
    vars: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing(
                "a ring needs at least one variable".into(),
            ));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            if v.is_empty() {
                return Err(Error::InvalidRing("empty variable name".into()));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
        }
        Ok(Ring { vars: vars.into() })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self.same(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{self} vs {other}")))
        }
    }

    /// The ring on `vars(self) ++ vars(other)`; the name sets must be disjoint.
    pub fn join(&self, other: &Ring) -> Result<Ring> {
        if let Some(v) = self.vars.iter().find(|v| other.vars.contains(v)) {
            return Err(Error::JoinOverlap(v.clone()));
        }
        let vars: Vec<String> = self.vars.iter().chain(other.vars.iter()).cloned().collect();
        Ok(Ring { vars: vars.into() })
    }

    /// Offset of `block` inside `self` when `self` was built by joining on `side`.
    pub(crate) fn block_offset(&self, block: &Ring, side: Side) -> Result<usize> {
        let k = block.nvars();
        let n = self.nvars();
        let offset = match side {
            Side::Left => 0,
            Side::Right => n.checked_sub(k).ok_or_else(|| {
                Error::RingMismatch(format!("{block} does not fit inside {self}"))
            })?,
        };
        if offset + k > n || self.vars[offset..offset + k] != block.vars[..] {
            return Err(Error::RingMismatch(format!(
                "{block} is not the {} block of {self}",
                match side {
                    Side::Left => "left",
                    Side::Right => "right",
                }
            )));
        }
        Ok(offset)
    }
}

pub fn join_rings(a: &Ring, b: &Ring) -> Result<Ring> {
    a.join(b)
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k[{}]", self.vars.join(","))
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
