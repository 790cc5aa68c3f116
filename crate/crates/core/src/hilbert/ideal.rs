use alloc::vec::Vec;

use crate::algebra::{AlgebraError, Monomial, VariableSet};

/// A monomial ideal given by its minimal generators, kept sorted so equal
/// ideals compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: VariableSet,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(vars: VariableSet) -> Self {
        Self {
            vars,
            generators: Vec::new(),
        }
    }

    /// Reduces `gens` to the divisibility antichain generating the same ideal.
    pub fn minimalize(vars: VariableSet, gens: Vec<Monomial>) -> Result<Self, AlgebraError> {
        if let Some(bad) = gens.iter().find(|g| g.nvars() != vars.len()) {
            return Err(AlgebraError::LengthMismatch {
                expected: vars.len(),
                found: bad.nvars(),
            });
        }
        Ok(Self {
            vars,
            generators: minimal_generators(gens),
        })
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

pub(crate) fn minimal_generators(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}
