//! Enumeration through Hilbert functions.
//!
//! Two families of counting problems are reduced to counting monomials:
//!
//! * placements of pieces (or vertices of a bipartite incompatibility graph)
//!   leaving exactly `u` targets unattacked, through the bigraded Hilbert
//!   function of a squarefree monomial quotient ([`boards`]);
//! * lattice points reachable by walks of length `d` over a finite step set,
//!   through Hilbert series of toric ideals and their initial ideals
//!   ([`walks`]).
//!
//! The algebra underneath ([`algebra`], [`groebner`], [`hilbert`]) works on
//! monomials and pure difference binomials only, so no coefficient field is
//! ever represented. Every pipeline result is checked against a brute-force
//! oracle that shares no code with the algebraic route.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! the multi-threaded drivers live in the `monocount` companion crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod boards;
pub mod groebner;
pub mod hilbert;
pub mod walks;

pub use algebra::{DifferenceBinomial, Grading, Monomial, MultiDegree, TermOrder, VariableSet};
pub use groebner::BinomialBasis;
pub use hilbert::{HilbertClosedForm, HilbertSeries, MonomialIdeal};
