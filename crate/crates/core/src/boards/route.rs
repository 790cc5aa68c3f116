use alloc::vec::Vec;
use num_bigint::BigUint;

use super::{BoardError, CountTable, IncompatibilityGraph};
use crate::algebra::{Grading, Monomial, MultiDegree, VariableSet};
use crate::hilbert::{hilbert_numerator_with, HilbertOptions, HilbertSeries, MonomialIdeal};

/// The squarefree ideal in `K[x_1..x_P, y_1..y_T]` generated by every
/// `x_p^2`, every `y_t^2` and `x_p y_t` for each forbidden pair, with `x`
/// in degree `(1, 0)` and `y` in degree `(0, 1)`.
pub fn board_ideal(graph: &IncompatibilityGraph) -> (MonomialIdeal, Grading) {
    let (p, t) = (graph.placements(), graph.targets());
    let vars = VariableSet::indexed("x", p)
        .concat(&VariableSet::indexed("y", t))
        .expect("x and y blocks are disjoint");
    let n = p + t;
    let mut gens: Vec<Monomial> = (0..n).map(|i| Monomial::var_pow(n, i, 2)).collect();
    gens.extend(graph.pairs().map(|(a, b)| {
        let mut e = alloc::vec![0u32; n];
        e[a] = 1;
        e[p + b] = 1;
        Monomial::from_exponents(&e)
    }));
    let ideal = MonomialIdeal::minimalize(vars, gens).expect("generators live in the ring");
    (ideal, Grading::bigraded(p, t))
}

/// Bigraded Hilbert series of the quotient by [`board_ideal`].
pub fn hilbert_route(graph: &IncompatibilityGraph, options: &HilbertOptions) -> Result<HilbertSeries, BoardError> {
    let (ideal, grading) = board_ideal(graph);
    Ok(hilbert_numerator_with(&ideal, &grading, options)?)
}

/// Reads `HF(k, u)` off a bigraded series.
pub fn hf_table_from_series(
    series: &HilbertSeries,
    kmin: usize,
    kmax: usize,
    umax: usize,
) -> Result<CountTable, BoardError> {
    let bound = MultiDegree::from_slice(&[to_u32(kmax), to_u32(umax)]);
    let dense = series.expand(&bound)?;
    let mut table = CountTable::zeros(kmin, kmax, umax);
    for k in kmin..=kmax {
        for u in 0..=umax {
            let v = dense.get(&[to_u32(k), to_u32(u)]);
            let v: BigUint = v
                .to_biguint()
                .ok_or_else(|| BoardError::Unsound(alloc::format!("negative HF({k}, {u})")))?;
            table.set(k, u, v);
        }
    }
    Ok(table)
}

fn to_u32(x: usize) -> u32 {
    u32::try_from(x).expect("degree fits u32")
}
