use alloc::vec::Vec;
use hashbrown::HashMap;

use super::ideal::minimal_generators;
use super::{HilbertError, HilbertSeries, MonomialIdeal, MultiPoly};
use crate::algebra::{Grading, Monomial, MultiDegree};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertOptions {
    /// Maximum number of memoized subideals kept at once.
    pub memo_cap: usize,
    /// Maximum number of recursion nodes; `None` is unbounded.
    pub node_budget: Option<u64>,
}

impl Default for HilbertOptions {
    fn default() -> Self {
        Self {
            memo_cap: 1 << 18,
            node_budget: None,
        }
    }
}

/// Hilbert series of `S / ideal` under `grading`, without a work budget.
pub fn hilbert_numerator(ideal: &MonomialIdeal, grading: &Grading) -> Result<HilbertSeries, HilbertError> {
    hilbert_numerator_with(ideal, grading, &HilbertOptions::default())
}

/// Hilbert series of `S / ideal` under `grading`.
///
/// The numerator over `prod (1 - t^deg x_i)` is computed by the splitting
/// `N(I) = N(I + p) + t^deg(p) N(I : p)` on a pivot `p = x^e`, where `x` is a
/// variable occurring in the most generators. Linear generators factor out,
/// pairwise coprime generators give a product of `(1 - t^deg m)`, and
/// generator sets with disjoint supports are split into independent factors.
pub fn hilbert_numerator_with(
    ideal: &MonomialIdeal,
    grading: &Grading,
    options: &HilbertOptions,
) -> Result<HilbertSeries, HilbertError> {
    if grading.nvars() != ideal.nvars() {
        return Err(HilbertError::GradingMismatch {
            grading: grading.nvars(),
            ideal: ideal.nvars(),
        });
    }
    if let Some(i) = grading.degrees().iter().position(MultiDegree::is_zero) {
        return Err(HilbertError::ZeroDegree(i));
    }
    let mut engine = Engine {
        grading,
        memo: HashMap::new(),
        options,
        nodes: 0,
    };
    let numerator = engine.numerator(ideal.generators().to_vec())?;
    Ok(HilbertSeries::new(
        grading.clone(),
        numerator,
        grading.degrees().to_vec(),
    ))
}

struct Engine<'a> {
    grading: &'a Grading,
    memo: HashMap<Vec<Monomial>, MultiPoly>,
    options: &'a HilbertOptions,
    nodes: u64,
}

impl Engine<'_> {
    fn rank(&self) -> usize {
        self.grading.rank()
    }

    /// `gens` must be minimal and sorted.
    fn numerator(&mut self, gens: Vec<Monomial>) -> Result<MultiPoly, HilbertError> {
        self.nodes += 1;
        if let Some(limit) = self.options.node_budget {
            if self.nodes > limit {
                return Err(HilbertError::Budget(limit));
            }
        }
        if gens.is_empty() {
            return Ok(MultiPoly::one(self.rank()));
        }
        if let Some(p) = self.memo.get(&gens) {
            return Ok(p.clone());
        }
        let result = self.split(&gens)?;
        if self.memo.len() < self.options.memo_cap {
            self.memo.insert(gens, result.clone());
        }
        Ok(result)
    }

    fn split(&mut self, gens: &[Monomial]) -> Result<MultiPoly, HilbertError> {
        if gens.len() == 1 && gens[0].is_one() {
            // The unit ideal: the quotient is zero.
            return Ok(MultiPoly::zero(self.rank()));
        }

        let (linear, rest): (Vec<&Monomial>, Vec<&Monomial>) = gens.iter().partition(|g| g.as_variable().is_some());
        if !linear.is_empty() {
            let mut inner = self.numerator(rest.into_iter().cloned().collect())?;
            for g in linear {
                inner = inner.times_one_minus(&self.grading.degree_unchecked(g));
            }
            return Ok(inner);
        }

        if pairwise_coprime(gens) {
            let mut p = MultiPoly::one(self.rank());
            for g in gens {
                p = p.times_one_minus(&self.grading.degree_unchecked(g));
            }
            return Ok(p);
        }

        let components = support_components(gens);
        if components.len() > 1 {
            let mut p = MultiPoly::one(self.rank());
            for comp in components {
                let part = self.numerator(comp)?;
                p = p.mul(&part);
            }
            return Ok(p);
        }

        let (var, exp) = pivot(gens);
        let nvars = gens[0].nvars();
        let pivot = Monomial::var_pow(nvars, var, exp);

        let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exponent(var) == 0).cloned().collect();
        plus.push(pivot.clone());
        plus.sort();
        let colon = minimal_generators(gens.iter().map(|g| g.colon(&pivot)).collect());

        let mut result = self.numerator(plus)?;
        let shift = MultiDegree::zero(self.rank()).add_scaled(self.grading.var_degree(var), exp);
        let quotient = self.numerator(colon)?;
        result.add_assign(&quotient.shifted(&shift));
        Ok(result)
    }
}

fn pairwise_coprime(gens: &[Monomial]) -> bool {
    let n = gens[0].nvars();
    let mut seen = alloc::vec![false; n];
    for g in gens {
        for i in g.support() {
            if seen[i] {
                return false;
            }
            seen[i] = true;
        }
    }
    true
}

/// Groups generators into classes connected through shared variables.
fn support_components(gens: &[Monomial]) -> Vec<Vec<Monomial>> {
    let n = gens[0].nvars();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        let mut support = g.support();
        if let Some(first) = support.next() {
            for other in support {
                let (a, b) = (find(&mut parent, first), find(&mut parent, other));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut classes: Vec<(usize, Vec<Monomial>)> = Vec::new();
    for g in gens {
        let root = find(&mut parent, g.support().next().expect("constant generator"));
        match classes.iter_mut().find(|(r, _)| *r == root) {
            Some((_, v)) => v.push(g.clone()),
            None => classes.push((root, alloc::vec![g.clone()])),
        }
    }
    // Each class inherits sorted order from `gens`.
    classes.into_iter().map(|(_, v)| v).collect()
}

/// Variable occurring in the most generators (lowest index on ties), raised
/// to its smallest positive exponent among them.
fn pivot(gens: &[Monomial]) -> (usize, u32) {
    let n = gens[0].nvars();
    let mut counts = alloc::vec![0usize; n];
    for g in gens {
        for i in g.support() {
            counts[i] += 1;
        }
    }
    let var = (0..n)
        .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
        .expect("nonempty ring");
    let exp = gens
        .iter()
        .map(|g| g.exponent(var))
        .filter(|&e| e > 0)
        .min()
        .expect("pivot variable occurs");
    (var, exp)
}
