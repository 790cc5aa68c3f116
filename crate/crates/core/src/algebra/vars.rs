use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::AlgebraError;

/// Ordered, named variables of a polynomial ring. A variable's index is its
/// position in the sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<I, S>(names: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(AlgebraError::NoVariables);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(AlgebraError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Self { names })
    }

    /// `prefix1, ..., prefix{count}`.
    pub fn indexed(prefix: &str, count: usize) -> Self {
        assert!(count > 0, "variable set must be nonempty");
        Self {
            names: (1..=count).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    /// Concatenation; names must stay distinct.
    pub fn concat(&self, other: &VariableSet) -> Result<Self, AlgebraError> {
        Self::new(self.names.iter().chain(other.names.iter()).cloned())
    }

    /// The trailing variables starting at `from`.
    pub fn suffix(&self, from: usize) -> Result<Self, AlgebraError> {
        Self::new(self.names[from..].iter().cloned())
    }

    pub fn prepend(&self, name: &str) -> Result<Self, AlgebraError> {
        Self::new(core::iter::once(name.to_string()).chain(self.names.iter().cloned()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}
