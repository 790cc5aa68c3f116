use alloc::vec::Vec;

use super::BoardError;

/// A relation between placement vertices and target vertices: `(p, t)` is
/// forbidden when placing at `p` rules out `t` (a piece on `p` attacks `t`,
/// or `v_p v_t` is an edge). Stored as bit rows per placement and bit
/// columns per target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncompatibilityGraph {
    placements: usize,
    targets: usize,
    row_words: usize,
    col_words: usize,
    rows: Vec<u64>,
    cols: Vec<u64>,
    board_side: Option<usize>,
}

impl IncompatibilityGraph {
    pub fn new<I>(placements: usize, targets: usize, forbidden: I) -> Result<Self, BoardError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if placements == 0 || targets == 0 {
            return Err(BoardError::EmptyGraph);
        }
        let row_words = targets.div_ceil(64);
        let col_words = placements.div_ceil(64);
        let mut g = Self {
            placements,
            targets,
            row_words,
            col_words,
            rows: alloc::vec![0; placements * row_words],
            cols: alloc::vec![0; targets * col_words],
            board_side: None,
        };
        for (p, t) in forbidden {
            if p >= placements || t >= targets {
                return Err(BoardError::VertexOutOfRange {
                    vertex: p.max(t),
                    count: if p >= placements { placements } else { targets },
                });
            }
            g.rows[p * row_words + t / 64] |= 1 << (t % 64);
            g.cols[t * col_words + p / 64] |= 1 << (p % 64);
        }
        Ok(g)
    }

    /// Both sides are the vertex set of an undirected graph; every edge
    /// `{i, j}` forbids `(i, j)` and `(j, i)`.
    pub fn from_undirected_edges(vertices: usize, edges: &[(usize, usize)]) -> Result<Self, BoardError> {
        Self::new(vertices, vertices, edges.iter().flat_map(|&(i, j)| [(i, j), (j, i)]))
    }

    pub(crate) fn with_board_side(mut self, n: usize) -> Self {
        debug_assert_eq!(self.placements, n * n);
        self.board_side = Some(n);
        self
    }

    /// The same relation with every `(v, v)` forbidden as well, so a vertex
    /// used as a placement can never count as a free target.
    pub fn with_diagonal(&self) -> Result<Self, BoardError> {
        if self.placements != self.targets {
            return Err(BoardError::NotSquare);
        }
        let mut g = Self::new(
            self.placements,
            self.targets,
            self.pairs().chain((0..self.placements).map(|v| (v, v))),
        )?;
        g.board_side = self.board_side;
        Ok(g)
    }

    pub fn placements(&self) -> usize {
        self.placements
    }

    pub fn targets(&self) -> usize {
        self.targets
    }

    pub fn board_side(&self) -> Option<usize> {
        self.board_side
    }

    pub fn forbids(&self, p: usize, t: usize) -> bool {
        self.rows[p * self.row_words + t / 64] >> (t % 64) & 1 == 1
    }

    /// Bits of the targets ruled out by `p`.
    pub fn row(&self, p: usize) -> &[u64] {
        &self.rows[p * self.row_words..(p + 1) * self.row_words]
    }

    /// Bits of the placements that rule out `t`.
    pub fn col(&self, t: usize) -> &[u64] {
        &self.cols[t * self.col_words..(t + 1) * self.col_words]
    }

    pub fn row_words(&self) -> usize {
        self.row_words
    }

    pub fn col_words(&self) -> usize {
        self.col_words
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.placements).flat_map(move |p| {
            (0..self.targets)
                .filter(move |&t| self.forbids(p, t))
                .map(move |t| (p, t))
        })
    }

    pub fn forbidden_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Rows and columns describe the same relation.
    pub fn is_consistent(&self) -> bool {
        (0..self.placements).all(|p| {
            (0..self.targets).all(|t| {
                let by_col = self.cols[t * self.col_words + p / 64] >> (p % 64) & 1 == 1;
                by_col == self.forbids(p, t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_and_columns_agree() {
        let g = IncompatibilityGraph::new(3, 70, [(0, 1), (2, 69), (1, 64)]).unwrap();
        assert!(g.is_consistent());
        assert!(g.forbids(2, 69));
        assert!(!g.forbids(69 % 3, 0));
        assert_eq!(g.forbidden_count(), 3);
        assert_eq!(g.row_words(), 2);
        assert_eq!(g.col(69), &[0b100]);
    }

    #[test]
    fn undirected_edges_and_diagonal() {
        let g = IncompatibilityGraph::from_undirected_edges(3, &[(0, 1)]).unwrap();
        assert!(g.forbids(0, 1) && g.forbids(1, 0) && !g.forbids(0, 0));
        let d = g.with_diagonal().unwrap();
        assert_eq!(d.forbidden_count(), 5);
        assert!(d.is_consistent());
        assert!(IncompatibilityGraph::new(2, 3, []).unwrap().with_diagonal().is_err());
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(
            IncompatibilityGraph::new(2, 2, [(0, 2)]),
            Err(BoardError::VertexOutOfRange { .. })
        ));
        assert_eq!(IncompatibilityGraph::new(0, 2, []), Err(BoardError::EmptyGraph));
    }
}
