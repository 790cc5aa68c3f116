use alloc::vec::Vec;

use super::{BoardError, IncompatibilityGraph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Piece {
    Queen,
    Rook,
    Bishop,
    Knight,
    King,
    /// Moves `(dr, dc)`; sliding pieces repeat a move any number of times.
    Custom {
        moves: Vec<(i32, i32)>,
        sliding: bool,
    },
}

impl Piece {
    fn moves(&self) -> (Vec<(i32, i32)>, bool) {
        const ORTH: [(i32, i32); 4] = [(0, 1), (1, 0), (0, -1), (-1, 0)];
        const DIAG: [(i32, i32); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
        const KNIGHT: [(i32, i32); 8] = [(1, 2), (2, 1), (-1, 2), (-2, 1), (1, -2), (2, -1), (-1, -2), (-2, -1)];
        match self {
            Piece::Queen => (ORTH.iter().chain(&DIAG).copied().collect(), true),
            Piece::Rook => (ORTH.to_vec(), true),
            Piece::Bishop => (DIAG.to_vec(), true),
            Piece::Knight => (KNIGHT.to_vec(), false),
            Piece::King => (ORTH.iter().chain(&DIAG).copied().collect(), false),
            Piece::Custom { moves, sliding } => (moves.clone(), *sliding),
        }
    }
}

/// Whether a placed piece's own square may count as unattacked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OwnSquareMode {
    /// Only moves are forbidden pairs: an occupied square is free unless
    /// another piece attacks it.
    #[default]
    PaperLiteral,
    /// Occupied squares are never free.
    ExcludeOccupied,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoardSpec {
    pub n: usize,
    pub piece: Piece,
    pub own_square_mode: OwnSquareMode,
}

impl BoardSpec {
    pub fn new(n: usize, piece: Piece) -> Self {
        Self {
            n,
            piece,
            own_square_mode: OwnSquareMode::PaperLiteral,
        }
    }

    pub fn with_mode(mut self, mode: OwnSquareMode) -> Self {
        self.own_square_mode = mode;
        self
    }

    pub fn square(&self, row: usize, col: usize) -> usize {
        row * self.n + col
    }
}

/// Attack relation on the `n x n` squares, indexed `row * n + col`.
///
/// Attacks are pairwise: a sliding piece reaches every square along its rays
/// regardless of other pieces, because the forbidden pairs only ever relate
/// one placement to one target. Under [`OwnSquareMode::ExcludeOccupied`]
/// each square is also paired with itself.
pub fn attack_graph(spec: &BoardSpec) -> Result<IncompatibilityGraph, BoardError> {
    let n = spec.n;
    if n == 0 {
        return Err(BoardError::EmptyGraph);
    }
    let (moves, sliding) = spec.piece.moves();
    if let Some(&m) = moves.iter().find(|&&m| m == (0, 0)) {
        return Err(BoardError::InvalidMove(m));
    }
    let ni = n as i64;
    let mut pairs = Vec::new();
    for r in 0..ni {
        for c in 0..ni {
            let p = (r * ni + c) as usize;
            for &(dr, dc) in &moves {
                let (mut tr, mut tc) = (r + i64::from(dr), c + i64::from(dc));
                while (0..ni).contains(&tr) && (0..ni).contains(&tc) {
                    pairs.push((p, (tr * ni + tc) as usize));
                    if !sliding {
                        break;
                    }
                    tr += i64::from(dr);
                    tc += i64::from(dc);
                }
            }
        }
    }
    let graph = IncompatibilityGraph::new(n * n, n * n, pairs)?.with_board_side(n);
    match spec.own_square_mode {
        OwnSquareMode::PaperLiteral => Ok(graph),
        OwnSquareMode::ExcludeOccupied => graph.with_diagonal(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn attacked(g: &IncompatibilityGraph, p: usize) -> usize {
        (0..g.targets()).filter(|&t| g.forbids(p, t)).count()
    }

    #[test]
    fn queen_three_center() {
        let spec = BoardSpec::new(3, Piece::Queen);
        let g = attack_graph(&spec).unwrap();
        assert_eq!(attacked(&g, spec.square(1, 1)), 8);
        assert!(!g.forbids(4, 4));
    }

    #[test]
    fn queen_eight_corner() {
        let spec = BoardSpec::new(8, Piece::Queen);
        let g = attack_graph(&spec).unwrap();
        for corner in [0, 7, 56, 63] {
            assert_eq!(attacked(&g, corner), 21);
        }
    }

    #[test]
    fn rook_two() {
        let g = attack_graph(&BoardSpec::new(2, Piece::Rook)).unwrap();
        for p in 0..4 {
            assert_eq!(attacked(&g, p), 2);
        }
    }

    #[test]
    fn knight_and_custom() {
        let g = attack_graph(&BoardSpec::new(3, Piece::Knight)).unwrap();
        assert_eq!(attacked(&g, 4), 0);
        assert_eq!(attacked(&g, 0), 2);
        let bad = BoardSpec::new(
            3,
            Piece::Custom {
                moves: alloc::vec![(0, 0)],
                sliding: false,
            },
        );
        assert_eq!(attack_graph(&bad), Err(BoardError::InvalidMove((0, 0))));
    }

    #[test]
    fn exclude_occupied_adds_diagonal() {
        let spec = BoardSpec::new(3, Piece::Queen).with_mode(OwnSquareMode::ExcludeOccupied);
        let g = attack_graph(&spec).unwrap();
        assert!(g.forbids(4, 4));
        assert_eq!(attacked(&g, 4), 9);
        assert_eq!(g.board_side(), Some(3));
    }
}
