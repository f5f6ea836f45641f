//! Grids of piece labels, the central complement rule, and 4-adjacency
//! connectivity.
//!
//! A column of an `m`-row grid is stored as an integer whose bit `i` is the
//! label of row `i` (row 0 is the top row). A [`Board`] is a sequence of such
//! columns, which keeps the rule `cell(i, j) = 1 - cell(m-1-i, n-1-j)` a
//! per-column identity: column `n-1-j` is the reversed complement of column
//! `j`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported row count.
pub const MAX_ROWS: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoardError {
    #[error("row count {0} outside 1..={MAX_ROWS}")]
    RowCount(usize),
    #[error("column value {bits:#x} does not fit in {m} rows")]
    ColumnOverflow { m: usize, bits: u32 },
    #[error("cell label {0} is not 0 or 1")]
    Label(u8),
    #[error("expected {expected} entries, got {got}")]
    Length { expected: usize, got: usize },
    #[error("rows have different lengths")]
    Ragged,
    #[error("middle column {0} is not its own reversed complement")]
    MiddleNotFixed(Column),
    #[error("columns have mixed row counts")]
    MixedRows,
}

/// One grid column: `m` piece labels, bit `i` holding row `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Column {
    m: u8,
    bits: u16,
}

impl Column {
    pub fn new(m: usize, bits: u32) -> Result<Self, BoardError> {
        if m == 0 || m > MAX_ROWS {
            return Err(BoardError::RowCount(m));
        }
        if bits >> m != 0 {
            return Err(BoardError::ColumnOverflow { m, bits });
        }
        Ok(Column {
            m: m as u8,
            bits: bits as u16,
        })
    }

    /// Builds a column from its labels listed top to bottom.
    pub fn from_labels(labels: &[u8]) -> Result<Self, BoardError> {
        let m = labels.len();
        if m == 0 || m > MAX_ROWS {
            return Err(BoardError::RowCount(m));
        }
        let mut bits = 0u32;
        for (i, &v) in labels.iter().enumerate() {
            match v {
                0 => {}
                1 => bits |= 1 << i,
                other => return Err(BoardError::Label(other)),
            }
        }
        Column::new(m, bits)
    }

    /// Every column of height `m`, in increasing integer order.
    pub fn all(m: usize) -> impl Iterator<Item = Column> {
        assert!((1..=MAX_ROWS).contains(&m), "row count {m} out of range");
        (0u32..(1 << m)).map(move |bits| Column {
            m: m as u8,
            bits: bits as u16,
        })
    }

    pub fn m(self) -> usize {
        self.m as usize
    }

    pub fn bits(self) -> u32 {
        self.bits as u32
    }

    pub fn get(self, row: usize) -> u8 {
        ((self.bits >> row) & 1) as u8
    }

    pub fn labels(self) -> Vec<u8> {
        (0..self.m()).map(|i| self.get(i)).collect()
    }

    pub fn ones(self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn zeros(self) -> usize {
        self.m() - self.ones()
    }

    pub fn complement(self) -> Column {
        Column {
            m: self.m,
            bits: !self.bits & mask(self.m()) as u16,
        }
    }

    /// Reverse top to bottom, then swap labels.
    pub fn revcomp(self) -> Column {
        Column {
            m: self.m,
            bits: revcomp_bits(self.bits(), self.m()) as u16,
        }
    }

    pub fn is_self_revcomp(self) -> bool {
        self.revcomp() == self
    }
}

impl fmt::Debug for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for i in 0..self.m() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.get(i))?;
        }
        f.write_str(")")
    }
}

pub(crate) fn mask(m: usize) -> u32 {
    (1u32 << m) - 1
}

pub(crate) fn revcomp_bits(bits: u32, m: usize) -> u32 {
    let reversed = bits.reverse_bits() >> (32 - m);
    !reversed & mask(m)
}

/// The four board symmetries that preserve the complement rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// Reverse the column order.
    HFlip,
    /// Reverse the row order.
    VFlip,
    Rot180,
    /// Swap the two labels.
    Complement,
}

impl Symmetry {
    pub const ALL: [Symmetry; 4] = [
        Symmetry::HFlip,
        Symmetry::VFlip,
        Symmetry::Rot180,
        Symmetry::Complement,
    ];
}

/// An `m × n` grid of labels in `{0, 1}`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "BoardRepr", try_from = "BoardRepr")]
pub struct Board {
    m: usize,
    n: usize,
    cols: Vec<u16>,
}

impl Board {
    pub fn zeros(m: usize, n: usize) -> Result<Self, BoardError> {
        if m == 0 || m > MAX_ROWS {
            return Err(BoardError::RowCount(m));
        }
        Ok(Board {
            m,
            n,
            cols: vec![0; n],
        })
    }

    pub fn from_columns(m: usize, cols: &[Column]) -> Result<Self, BoardError> {
        if m == 0 || m > MAX_ROWS {
            return Err(BoardError::RowCount(m));
        }
        if cols.iter().any(|c| c.m() != m) {
            return Err(BoardError::MixedRows);
        }
        Ok(Board {
            m,
            n: cols.len(),
            cols: cols.iter().map(|c| c.bits).collect(),
        })
    }

    /// Builds a board from rows listed top to bottom.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self, BoardError> {
        let m = rows.len();
        if m == 0 || m > MAX_ROWS {
            return Err(BoardError::RowCount(m));
        }
        let n = rows[0].as_ref().len();
        let mut cols = vec![0u16; n];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(BoardError::Ragged);
            }
            for (j, &v) in row.iter().enumerate() {
                match v {
                    0 => {}
                    1 => cols[j] |= 1 << i,
                    other => return Err(BoardError::Label(other)),
                }
            }
        }
        Ok(Board { m, n, cols })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        ((self.cols[j] >> i) & 1) as u8
    }

    pub fn column(&self, j: usize) -> Column {
        Column {
            m: self.m as u8,
            bits: self.cols[j],
        }
    }

    pub fn columns(&self) -> impl Iterator<Item = Column> + '_ {
        (0..self.n).map(|j| self.column(j))
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (0..self.m)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Cells in row-major order; this is the sort key for board listings.
    pub fn cells(&self) -> Vec<u8> {
        self.rows().concat()
    }

    pub fn count_ones(&self) -> usize {
        self.cols.iter().map(|c| c.count_ones() as usize).sum()
    }

    pub fn complement(&self) -> Board {
        let full = mask(self.m) as u16;
        Board {
            m: self.m,
            n: self.n,
            cols: self.cols.iter().map(|c| !c & full).collect(),
        }
    }

    pub fn hflip(&self) -> Board {
        let mut cols = self.cols.clone();
        cols.reverse();
        Board {
            m: self.m,
            n: self.n,
            cols,
        }
    }

    pub fn vflip(&self) -> Board {
        let shift = 32 - self.m;
        Board {
            m: self.m,
            n: self.n,
            cols: self
                .cols
                .iter()
                .map(|&c| ((c as u32).reverse_bits() >> shift) as u16)
                .collect(),
        }
    }

    pub fn rot180(&self) -> Board {
        self.hflip().vflip()
    }

    pub fn transform(&self, op: Symmetry) -> Board {
        match op {
            Symmetry::HFlip => self.hflip(),
            Symmetry::VFlip => self.vflip(),
            Symmetry::Rot180 => self.rot180(),
            Symmetry::Complement => self.complement(),
        }
    }

    /// Whether `cell(i, j) = 1 - cell(m-1-i, n-1-j)` holds for every cell.
    pub fn satisfies_rule(&self) -> bool {
        (0..self.n).all(|j| self.column(self.n - 1 - j) == self.column(j).revcomp())
    }

    /// Numbers of 4-adjacent connected components of 0-cells and of 1-cells.
    pub fn component_counts(&self) -> (usize, usize) {
        let mut seen = vec![false; self.m * self.n];
        let mut counts = [0usize; 2];
        let mut stack = Vec::new();
        for j in 0..self.n {
            for i in 0..self.m {
                if seen[j * self.m + i] {
                    continue;
                }
                let label = self.get(i, j);
                counts[label as usize] += 1;
                seen[j * self.m + i] = true;
                stack.push((i, j));
                while let Some((ci, cj)) = stack.pop() {
                    let mut visit = |ni: usize, nj: usize| {
                        let idx = nj * self.m + ni;
                        if !seen[idx] && self.get(ni, nj) == label {
                            seen[idx] = true;
                            stack.push((ni, nj));
                        }
                    };
                    if ci > 0 {
                        visit(ci - 1, cj);
                    }
                    if ci + 1 < self.m {
                        visit(ci + 1, cj);
                    }
                    if cj > 0 {
                        visit(ci, cj - 1);
                    }
                    if cj + 1 < self.n {
                        visit(ci, cj + 1);
                    }
                }
            }
        }
        (counts[0], counts[1])
    }

    /// Complement rule plus exactly one component of each label.
    pub fn is_graham(&self) -> bool {
        self.satisfies_rule() && self.component_counts() == (1, 1)
    }

    /// Graham, bottom row all 0 across the left half (middle column
    /// included), and at least as many 0s as 1s in the first column.
    ///
    /// The two stipulations are only known to pick one representative per
    /// symmetry class when `m == 4`; see [`Board::canonical_check`].
    pub fn is_canonical(&self) -> bool {
        if self.n == 0 || !self.is_graham() {
            return false;
        }
        let bottom = self.m - 1;
        let half = self.n.div_ceil(2);
        (0..half).all(|j| self.get(bottom, j) == 0) && {
            let first = self.column(0);
            first.zeros() >= first.ones()
        }
    }

    pub fn canonical_check(&self) -> CanonicalVerdict {
        CanonicalVerdict {
            canonical: self.is_canonical(),
            validated: self.m == 4,
        }
    }

    /// Columns `0..ceil(n/2)`.
    pub fn left_half(&self) -> Vec<Column> {
        (0..self.n.div_ceil(2)).map(|j| self.column(j)).collect()
    }
}

/// Result of [`Board::canonical_check`]; `validated` is false for row
/// counts where the stipulations have not been shown to be a transversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CanonicalVerdict {
    pub canonical: bool,
    pub validated: bool,
}

/// Extends a left half to the unique full board obeying the complement rule.
pub fn complete_board(left: &[Column], n: usize) -> Result<Board, BoardError> {
    let k = n.div_ceil(2);
    if left.len() != k {
        return Err(BoardError::Length {
            expected: k,
            got: left.len(),
        });
    }
    if n == 0 {
        return Err(BoardError::Length {
            expected: 1,
            got: 0,
        });
    }
    let m = left[0].m();
    if left.iter().any(|c| c.m() != m) {
        return Err(BoardError::MixedRows);
    }
    if n % 2 == 1 {
        let middle = left[k - 1];
        if !middle.is_self_revcomp() {
            return Err(BoardError::MiddleNotFixed(middle));
        }
    }
    let mut cols: Vec<Column> = left.to_vec();
    for j in (0..n / 2).rev() {
        cols.push(left[j].revcomp());
    }
    Board::from_columns(m, &cols)
}

impl PartialOrd for Board {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Board {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.m, self.n)
            .cmp(&(other.m, other.n))
            .then_with(|| self.cells().cmp(&other.cells()))
    }
}

impl fmt::Debug for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Board {}x{} [", self.m, self.n)?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            for v in row {
                write!(f, "{v}")?;
            }
        }
        f.write_str("]")
    }
}

#[derive(Serialize, Deserialize)]
struct BoardRepr {
    m: usize,
    n: usize,
    rows: Vec<Vec<u8>>,
}

impl From<Board> for BoardRepr {
    fn from(b: Board) -> Self {
        BoardRepr {
            m: b.m,
            n: b.n,
            rows: b.rows(),
        }
    }
}

impl TryFrom<BoardRepr> for Board {
    type Error = BoardError;

    fn try_from(r: BoardRepr) -> Result<Self, Self::Error> {
        if r.rows.len() != r.m {
            return Err(BoardError::Length {
                expected: r.m,
                got: r.rows.len(),
            });
        }
        if r.n == 0 {
            return Board::zeros(r.m, 0);
        }
        let b = Board::from_rows(&r.rows)?;
        if b.n != r.n {
            return Err(BoardError::Length {
                expected: r.n,
                got: b.n,
            });
        }
        Ok(b)
    }
}

/// A cut of the grid: a board and its complement describe the same
/// bipartition, represented here by the smaller of the two.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cut {
    canonical_pair: Board,
}

impl Cut {
    pub fn new(board: &Board) -> Self {
        let other = board.complement();
        Cut {
            canonical_pair: if other < *board { other } else { board.clone() },
        }
    }

    pub fn representative(&self) -> &Board {
        &self.canonical_pair
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(labels: &[u8]) -> Column {
        Column::from_labels(labels).unwrap()
    }

    #[test]
    fn revcomp_examples() {
        assert_eq!(col(&[1, 1, 0, 0]).revcomp(), col(&[1, 1, 0, 0]));
        assert_eq!(col(&[0, 0, 0, 0]).revcomp(), col(&[1, 1, 1, 1]));
        assert_eq!(col(&[0, 0, 0, 1]).revcomp(), col(&[0, 1, 1, 1]));
    }

    #[test]
    fn self_revcomp_columns_of_height_four() {
        let fixed: Vec<Column> = Column::all(4).filter(|c| c.is_self_revcomp()).collect();
        assert_eq!(fixed.len(), 4);
        assert!(Column::all(3).all(|c| !c.is_self_revcomp()));
    }

    #[test]
    fn complete_board_examples() {
        let b = complete_board(&[col(&[0, 0, 0, 0])], 2).unwrap();
        assert_eq!(b.column(0), col(&[0, 0, 0, 0]));
        assert_eq!(b.column(1), col(&[1, 1, 1, 1]));

        let b = complete_board(&[col(&[1, 1, 0, 0])], 1).unwrap();
        assert_eq!(b.n(), 1);
        assert_eq!(b.column(0), col(&[1, 1, 0, 0]));

        let left = [col(&[0, 0, 0, 0]), col(&[0, 1, 0, 0]), col(&[0, 1, 0, 0])];
        let b = complete_board(&left, 6).unwrap();
        let want = Board::from_rows(&[
            [0, 0, 0, 1, 1, 1],
            [0, 1, 1, 1, 1, 1],
            [0, 0, 0, 0, 0, 1],
            [0, 0, 0, 1, 1, 1],
        ])
        .unwrap();
        assert_eq!(b, want);
    }

    #[test]
    fn complete_board_errors() {
        assert!(matches!(
            complete_board(&[col(&[0, 0, 0, 0])], 4),
            Err(BoardError::Length {
                expected: 2,
                got: 1
            })
        ));
        assert!(matches!(
            complete_board(&[col(&[0, 0, 0, 0])], 1),
            Err(BoardError::MiddleNotFixed(_))
        ));
    }

    #[test]
    fn component_count_examples() {
        let straight = Board::from_rows(&[[0, 0, 0, 1, 1, 1]; 4]).unwrap();
        assert_eq!(straight.component_counts(), (1, 1));
        let alt = Board::from_rows(&[[0], [1], [0], [1]]).unwrap();
        assert_eq!(alt.component_counts(), (2, 2));
        let alt2 = Board::from_rows(&[[0, 0], [1, 1], [0, 0], [1, 1]]).unwrap();
        assert_eq!(alt2.component_counts(), (2, 2));
    }

    #[test]
    fn split_ones_is_not_graham() {
        let b = Board::from_columns(4, &[col(&[0, 1, 1, 0]), col(&[1, 0, 0, 1])]).unwrap();
        assert!(b.satisfies_rule());
        assert!(!b.is_graham());
    }

    #[test]
    fn canonical_examples() {
        let b = Board::from_columns(4, &[col(&[0, 0, 0, 1]), col(&[0, 1, 1, 1])]).unwrap();
        assert!(b.is_graham());
        assert!(!b.is_canonical());

        let straight = Board::from_rows(&[[0, 0, 0, 1, 1, 1]; 4]).unwrap();
        assert!(straight.is_canonical());
        assert!(straight.complement().is_graham());
        assert!(!straight.complement().is_canonical());
        assert!(straight.canonical_check().validated);

        let tall = Board::from_rows(&[[0, 1], [0, 1], [0, 1]]).unwrap();
        assert_eq!(
            tall.canonical_check(),
            CanonicalVerdict {
                canonical: true,
                validated: false
            }
        );
    }

    #[test]
    fn empty_board_is_not_graham() {
        let b = Board::zeros(4, 0).unwrap();
        assert_eq!(b.component_counts(), (0, 0));
        assert!(!b.is_graham());
        assert!(!b.is_canonical());
    }

    #[test]
    fn json_shape() {
        let b = Board::from_rows(&[[0, 1], [0, 1]]).unwrap();
        let text = serde_json::to_string(&b).unwrap();
        assert_eq!(text, r#"{"m":2,"n":2,"rows":[[0,1],[0,1]]}"#);
        let back: Board = serde_json::from_str(&text).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<Board>(r#"{"m":2,"n":2,"rows":[[0,2],[0,1]]}"#).is_err());
        assert!(serde_json::from_str::<Board>(r#"{"m":3,"n":2,"rows":[[0,1],[0,1]]}"#).is_err());
    }

    #[test]
    fn cut_identifies_complements() {
        let b = Board::from_rows(&[[0, 0, 1, 1]; 2]).unwrap();
        assert_eq!(Cut::new(&b), Cut::new(&b.complement()));
        assert_eq!(Cut::new(&b).representative(), &b);
    }
}
