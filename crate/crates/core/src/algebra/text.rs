//! Textual monomial syntax: `x1^2*y3`, with `1` for the constant monomial,
//! and `lead - trail` for binomials.

use core::fmt;

use alloc::string::{String, ToString};

use super::{AlgebraError, DifferenceBinomial, Monomial, TermOrder, VariableSet};

pub struct MonomialDisplay<'a> {
    monomial: &'a Monomial,
    vars: &'a VariableSet,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomial.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for i in self.monomial.support() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(self.vars.name(i))?;
            let e = self.monomial.exponent(i);
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl Monomial {
    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> MonomialDisplay<'a> {
        debug_assert_eq!(self.nvars(), vars.len());
        MonomialDisplay { monomial: self, vars }
    }
}

pub struct BinomialDisplay<'a> {
    binomial: &'a DifferenceBinomial,
    vars: &'a VariableSet,
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} - {}",
            self.binomial.lead().display(self.vars),
            self.binomial.trail().display(self.vars)
        )
    }
}

impl DifferenceBinomial {
    pub fn display<'a>(&'a self, vars: &'a VariableSet) -> BinomialDisplay<'a> {
        BinomialDisplay { binomial: self, vars }
    }
}

pub fn parse_monomial(text: &str, vars: &VariableSet) -> Result<Monomial, AlgebraError> {
    let text = text.trim();
    let mut exps = alloc::vec![0u32; vars.len()];
    if text == "1" {
        return Ok(Monomial::from_exponents(&exps));
    }
    if text.is_empty() {
        return Err(AlgebraError::Syntax(String::new()));
    }
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let exp: u32 = exp
                    .trim()
                    .parse()
                    .map_err(|_| AlgebraError::Syntax(factor.to_string()))?;
                (name.trim(), exp)
            }
            None => (factor, 1),
        };
        if name.is_empty() {
            return Err(AlgebraError::Syntax(factor.to_string()));
        }
        let index = vars
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        exps[index] = exps[index]
            .checked_add(exp)
            .ok_or_else(|| AlgebraError::Syntax(factor.to_string()))?;
    }
    Ok(Monomial::from_exponents(&exps))
}

/// Parses `a - b`; `Ok(None)` when both sides are the same monomial.
pub fn parse_binomial(
    text: &str,
    vars: &VariableSet,
    order: &TermOrder,
) -> Result<Option<DifferenceBinomial>, AlgebraError> {
    let (a, b) = text
        .split_once(" - ")
        .or_else(|| text.split_once('-'))
        .ok_or_else(|| AlgebraError::Syntax(text.to_string()))?;
    let a = parse_monomial(a, vars)?;
    let b = parse_monomial(b, vars)?;
    Ok(DifferenceBinomial::new(a, b, order))
}
