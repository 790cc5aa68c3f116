use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};
use smallvec::SmallVec;

use super::{StepSet, WalkError};
use crate::algebra::{DifferenceBinomial, Monomial};

type Point = SmallVec<[i64; 4]>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleRow {
    pub d: u64,
    pub f: u64,
    pub g: u64,
}

/// `f(d) = |M^d|` and `g(d) = |M^d \ (M^0 ∪ ... ∪ M^{d-1})|` for
/// `d = 0..=dmax`, by iterated sumsets `M^d = M^{d-1} + W` of lattice
/// points. `cap` bounds the number of points held at once.
pub fn oracle(steps: &StepSet, dmax: u64, cap: usize) -> Result<Vec<OracleRow>, WalkError> {
    let origin: Point = SmallVec::from_elem(0, steps.dimension());
    let mut seen: HashSet<Point> = HashSet::new();
    let mut layer: HashSet<Point> = HashSet::new();
    seen.insert(origin.clone());
    layer.insert(origin);
    let mut rows = Vec::with_capacity(dmax as usize + 1);
    rows.push(OracleRow { d: 0, f: 1, g: 1 });

    for d in 1..=dmax {
        let mut next: HashSet<Point> = HashSet::with_capacity(layer.len() * 2);
        for p in &layer {
            for w in steps.steps() {
                let q: Point = p.iter().zip(w).map(|(a, b)| a + b).collect();
                next.insert(q);
            }
            if seen.len() + next.len() > cap {
                return Err(WalkError::OracleCap(cap));
            }
        }
        let mut fresh = 0u64;
        for q in &next {
            if seen.insert(q.clone()) {
                fresh += 1;
            }
        }
        if seen.len() + next.len() > cap {
            return Err(WalkError::OracleCap(cap));
        }
        rows.push(OracleRow {
            d,
            f: next.len() as u64,
            g: fresh,
        });
        layer = next;
    }
    Ok(rows)
}

/// `dim (S/H)_d` for `d = 0..=dmax` when `H` is generated by the homogeneous
/// pure difference binomials `generators` in `nvars` variables: the number
/// of classes of degree-`d` monomials under the moves `m a <-> m b`.
/// Uses neither leading terms nor normal forms.
pub fn homogeneous_quotient_dims(nvars: usize, generators: &[DifferenceBinomial], dmax: u64) -> Vec<u64> {
    (0..=dmax)
        .map(|d| classes_in_degree(nvars, generators, d as u32))
        .collect()
}

fn classes_in_degree(nvars: usize, generators: &[DifferenceBinomial], d: u32) -> u64 {
    let monomials = monomials_of_degree(nvars, d);
    let index: HashMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut parent: Vec<usize> = (0..monomials.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut classes = monomials.len() as u64;
    for (i, m) in monomials.iter().enumerate() {
        for g in generators {
            debug_assert!(g.is_homogeneous());
            for (from, to) in [(g.lead(), g.trail()), (g.trail(), g.lead())] {
                if from.divides(m) {
                    let moved = from.quotient_unchecked(m).mul(to);
                    let j = index[&moved];
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    if a != b {
                        parent[a] = b;
                        classes -= 1;
                    }
                }
            }
        }
    }
    classes
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u32; nvars];
    fn rec(var: usize, left: u32, exps: &mut [u32], out: &mut Vec<Monomial>) {
        if var + 1 == exps.len() {
            exps[var] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[var] = e;
            rec(var + 1, left - e, exps, out);
        }
        exps[var] = 0;
    }
    rec(0, d, &mut exps, &mut out);
    out
}
