//! Exhaustive ground truth.
//!
//! Every board obeying the complement rule is determined by its left half,
//! so the sweep visits each left half once, expands it into a 64-bit
//! bitboard, and tests connectivity by repeated dilation. Work is split by
//! the value of the first column; results are merged in a fixed order and
//! board listings are sorted, so output never depends on the worker count.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::board::{complete_board, revcomp_bits, Board, BoardError, Column, Cut, MAX_ROWS};
use crate::reference;

/// Default cap on swept left halves (seven columns of height four).
pub const DEFAULT_BUDGET: u64 = 1 << 28;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("sweep needs {needed} candidates, budget is {budget}")]
    Budget { needed: u128, budget: u64 },
    #[error("{m} x {n} grid does not fit the 64-cell sweep")]
    TooLarge { m: usize, n: usize },
    #[error(transparent)]
    Board(#[from] BoardError),
    #[error("figure check failed: {}", .0.join("; "))]
    Figures(Vec<String>),
    #[error("worker pool: {0}")]
    Pool(String),
}

#[derive(Debug, Clone, Copy)]
pub struct SweepOptions {
    /// Maximum number of left halves to visit.
    pub budget: u64,
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            budget: DEFAULT_BUDGET,
            workers: None,
        }
    }
}

/// The three counting conventions side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    pub m: usize,
    pub n: usize,
    /// Graham matrices passing both stipulations.
    pub canonical: u64,
    /// Unordered cuts: Graham matrices / 2.
    pub cuts: u64,
    /// Cuts up to horizontal reflection.
    pub orbits: u64,
    pub elapsed_ms: u64,
}

/// Number of left halves the sweep must visit for an `m × n` grid.
pub fn candidate_count(m: usize, n: usize) -> u128 {
    if n == 0 {
        return 0;
    }
    let k = n.div_ceil(2);
    if n.is_multiple_of(2) {
        1u128 << (m * k)
    } else if m.is_multiple_of(2) {
        (1u128 << (m * (k - 1))) << (m / 2)
    } else {
        0
    }
}

struct Geometry {
    m: usize,
    n: usize,
    k: usize,
    full: u64,
    not_top: u64,
    not_bottom: u64,
    revcomp: Vec<u64>,
    fixed_middles: Vec<u64>,
}

impl Geometry {
    fn new(m: usize, n: usize) -> Result<Self, OracleError> {
        if m == 0 || m > MAX_ROWS {
            return Err(BoardError::RowCount(m).into());
        }
        if m * n > 64 {
            return Err(OracleError::TooLarge { m, n });
        }
        let cells = m * n;
        let full = if cells == 64 {
            u64::MAX
        } else {
            (1u64 << cells) - 1
        };
        let mut top = 0u64;
        for j in 0..n {
            top |= 1 << (j * m);
        }
        let bottom = top << (m - 1);
        let revcomp: Vec<u64> = (0..1u32 << m).map(|c| revcomp_bits(c, m) as u64).collect();
        let fixed_middles = (0..1u64 << m)
            .filter(|&c| revcomp[c as usize] == c)
            .collect();
        Ok(Geometry {
            m,
            n,
            k: n.div_ceil(2),
            full,
            not_top: full & !top,
            not_bottom: full & !bottom,
            revcomp,
            fixed_middles,
        })
    }

    /// Expands left-half columns into the full bitboard, column `j` at bit
    /// offset `j * m`.
    fn expand(&self, left: &[u64]) -> u64 {
        let mut bits = 0u64;
        for (j, &c) in left.iter().enumerate() {
            bits |= c << (j * self.m);
        }
        for (j, &c) in left.iter().take(self.n / 2).enumerate() {
            bits |= self.revcomp[c as usize] << ((self.n - 1 - j) * self.m);
        }
        bits
    }

    fn connected(&self, set: u64) -> bool {
        if set == 0 {
            return false;
        }
        let mut fill = set & set.wrapping_neg();
        loop {
            let grown = (fill
                | ((fill << 1) & self.not_top)
                | ((fill >> 1) & self.not_bottom)
                | (fill << self.m)
                | (fill >> self.m))
                & set;
            if grown == fill {
                return fill == set;
            }
            fill = grown;
        }
    }

    fn is_graham(&self, bits: u64) -> bool {
        // The 0-cells are the 180° image of the 1-cells, so one test decides
        // both labels.
        let ones = self.connected(bits);
        debug_assert_eq!(ones, self.connected(self.full & !bits));
        ones
    }

    fn is_canonical_left(&self, left: &[u64]) -> bool {
        let bottom = 1u64 << (self.m - 1);
        let first_ones = left[0].count_ones() as usize;
        left.iter().all(|c| c & bottom == 0) && 2 * first_ones <= self.m
    }

    fn column_of(&self, bits: u64, j: usize) -> u64 {
        (bits >> (j * self.m)) & ((1u64 << self.m) - 1)
    }

    fn hflip(&self, bits: u64) -> u64 {
        let mut out = 0u64;
        for j in 0..self.n {
            out |= self.column_of(bits, j) << ((self.n - 1 - j) * self.m);
        }
        out
    }

    fn to_board(&self, left: &[u64]) -> Board {
        let cols: Vec<Column> = left
            .iter()
            .map(|&c| Column::new(self.m, c as u32).expect("column fits"))
            .collect();
        complete_board(&cols, self.n).expect("left half is well formed")
    }

    /// Calls `visit` for each left half whose first column is `first`.
    fn for_each_left<F: FnMut(&[u64])>(&self, first: u64, mut visit: F) {
        let mut left = vec![0u64; self.k];
        left[0] = first;
        if self.k == 1 {
            if self.n.is_multiple_of(2) || self.fixed_middles.contains(&first) {
                visit(&left);
            }
            return;
        }
        let odd = self.n % 2 == 1;
        let free = if odd { self.k - 2 } else { self.k - 1 };
        let per_col = 1u64 << self.m;
        let free_total = per_col.pow(free as u32);
        let middles: &[u64] = if odd { &self.fixed_middles } else { &[0] };
        for rest in 0..free_total {
            let mut r = rest;
            for slot in left.iter_mut().skip(1).take(free) {
                *slot = r % per_col;
                r /= per_col;
            }
            for &mid in middles {
                if odd {
                    left[self.k - 1] = mid;
                }
                visit(&left);
            }
        }
    }

    fn first_columns(&self) -> Vec<u64> {
        if self.n == 0 {
            return Vec::new();
        }
        (0..1u64 << self.m).collect()
    }
}

fn check_budget(m: usize, n: usize, opts: &SweepOptions) -> Result<(), OracleError> {
    let needed = candidate_count(m, n);
    if needed > opts.budget as u128 {
        return Err(OracleError::Budget {
            needed,
            budget: opts.budget,
        });
    }
    Ok(())
}

fn run_pool<T: Send>(
    opts: &SweepOptions,
    job: impl FnOnce() -> T + Send,
) -> Result<T, OracleError> {
    match opts.workers {
        None => Ok(job()),
        Some(w) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| OracleError::Pool(e.to_string()))?;
            Ok(pool.install(job))
        }
    }
}

#[derive(Default, Clone, Copy)]
struct Tally {
    canonical: u64,
    matrices: u64,
    hflip_fixed: u64,
}

impl std::ops::Add for Tally {
    type Output = Tally;
    fn add(self, o: Tally) -> Tally {
        Tally {
            canonical: self.canonical + o.canonical,
            matrices: self.matrices + o.matrices,
            hflip_fixed: self.hflip_fixed + o.hflip_fixed,
        }
    }
}

/// Counts an `m × n` grid under the canonical, cut, and orbit conventions.
pub fn count_report(m: usize, n: usize, opts: &SweepOptions) -> Result<CountReport, OracleError> {
    let started = Instant::now();
    let geo = Geometry::new(m, n)?;
    check_budget(m, n, opts)?;
    let firsts = geo.first_columns();
    let tally = run_pool(opts, || {
        firsts
            .par_iter()
            .map(|&first| {
                let mut t = Tally::default();
                geo.for_each_left(first, |left| {
                    let bits = geo.expand(left);
                    if !geo.is_graham(bits) {
                        return;
                    }
                    t.matrices += 1;
                    if geo.is_canonical_left(left) {
                        t.canonical += 1;
                    }
                    let flipped = geo.hflip(bits);
                    if flipped == bits || flipped == geo.full & !bits {
                        t.hflip_fixed += 1;
                    }
                });
                t
            })
            .reduce(Tally::default, |a, b| a + b)
    })?;
    debug_assert_eq!(tally.matrices % 2, 0);
    debug_assert_eq!(tally.hflip_fixed % 2, 0);
    let cuts = tally.matrices / 2;
    // Burnside over {identity, hflip} acting on cuts.
    let orbits = (cuts + tally.hflip_fixed / 2) / 2;
    Ok(CountReport {
        m,
        n,
        canonical: tally.canonical,
        cuts,
        orbits,
        elapsed_ms: started.elapsed().as_millis() as u64,
    })
}

fn enumerate_where(
    m: usize,
    n: usize,
    opts: &SweepOptions,
    canonical_only: bool,
) -> Result<Vec<Board>, OracleError> {
    let geo = Geometry::new(m, n)?;
    check_budget(m, n, opts)?;
    let firsts = geo.first_columns();
    let chunks: Vec<Vec<Board>> = run_pool(opts, || {
        firsts
            .par_iter()
            .map(|&first| {
                let mut found = Vec::new();
                geo.for_each_left(first, |left| {
                    if canonical_only && !geo.is_canonical_left(left) {
                        return;
                    }
                    if geo.is_graham(geo.expand(left)) {
                        found.push(geo.to_board(left));
                    }
                });
                found.sort();
                found
            })
            .collect()
    })?;
    let mut boards: Vec<Board> = chunks.into_iter().flatten().collect();
    boards.sort();
    Ok(boards)
}

/// All canonical Graham matrices of an `m × n` grid, sorted by their
/// row-major cells. Only `m == 4` is a validated convention.
pub fn enumerate_canonical(
    m: usize,
    n: usize,
    opts: &SweepOptions,
) -> Result<Vec<Board>, OracleError> {
    enumerate_where(m, n, opts, true)
}

/// All Graham matrices of an `m × n` grid (each cut appears twice).
pub fn enumerate_graham(
    m: usize,
    n: usize,
    opts: &SweepOptions,
) -> Result<Vec<Board>, OracleError> {
    enumerate_where(m, n, opts, false)
}

/// The closed form 2^(n+1) - n - 1 for 3 × 2n rectangles next to what the
/// sweep finds. No equality is asserted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DelahayeReport {
    pub n: usize,
    pub formula: u64,
    pub cuts: u64,
    pub orbits: u64,
    pub canonical: u64,
}

pub fn delahaye_formula(n: usize) -> u64 {
    (1u64 << (n + 1)) - n as u64 - 1
}

pub fn delahaye_report(n: usize, opts: &SweepOptions) -> Result<DelahayeReport, OracleError> {
    let r = count_report(3, 2 * n, opts)?;
    Ok(DelahayeReport {
        n,
        formula: delahaye_formula(n),
        cuts: r.cuts,
        orbits: r.orbits,
        canonical: r.canonical,
    })
}

#[derive(Debug, Clone)]
pub struct FigureReport {
    /// The displayed 3 × 6 cuts, each matched to an enumerated Graham matrix.
    pub three_by_six: Vec<Board>,
    /// Enumerated 3 × 6 cuts that are not among the displayed twelve.
    pub three_by_six_missing: Vec<Board>,
    /// The displayed 4 × 6 matrices, each found in the canonical listing.
    pub four_by_six: Vec<Board>,
    /// Size of the canonical 4 × 6 listing.
    pub canonical_4x6: usize,
}

pub fn figures_3x6() -> Vec<Board> {
    reference::FIGURES_3X6
        .iter()
        .map(|rows| Board::from_rows(rows).expect("figure is well formed"))
        .collect()
}

pub fn figures_4x6() -> Vec<Board> {
    reference::FIGURES_4X6
        .iter()
        .map(|rows| Board::from_rows(rows).expect("figure is well formed"))
        .collect()
}

/// Rebuilds the displayed figures from the sweep and checks each one.
pub fn regenerate_figures(opts: &SweepOptions) -> Result<FigureReport, OracleError> {
    let mut problems = Vec::new();

    let three = figures_3x6();
    let graham_3x6 = enumerate_graham(3, 6, opts)?;
    let mut cuts_3x6: Vec<Cut> = graham_3x6.iter().map(Cut::new).collect();
    cuts_3x6.sort();
    cuts_3x6.dedup();
    for (idx, b) in three.iter().enumerate() {
        if !b.is_graham() {
            problems.push(format!(
                "3x6 figure {} is not a Graham matrix: {b:?}",
                idx + 1
            ));
        } else if graham_3x6.binary_search(b).is_err() {
            problems.push(format!("3x6 figure {} missing from sweep: {b:?}", idx + 1));
        }
    }
    let shown: Vec<Cut> = three.iter().map(Cut::new).collect();
    let three_by_six_missing = cuts_3x6
        .iter()
        .filter(|c| !shown.contains(c))
        .map(|c| c.representative().clone())
        .collect();

    let four = figures_4x6();
    let canonical = enumerate_canonical(4, 6, opts)?;
    for (idx, b) in four.iter().enumerate() {
        if canonical.binary_search(b).is_err() {
            problems.push(format!("4x6 figure {} not canonical: {b:?}", idx + 1));
        }
    }

    if !problems.is_empty() {
        return Err(OracleError::Figures(problems));
    }
    Ok(FigureReport {
        three_by_six: three,
        three_by_six_missing,
        four_by_six: four,
        canonical_4x6: canonical.len(),
    })
}
