//! Counting the ways to cut an `m × n` grid into two connected pieces that
//! are images of each other under a half-turn.
//!
//! The pieces are encoded as a 0/1 matrix obeying
//! `cell(i, j) = 1 - cell(m-1-i, n-1-j)` whose 0s and 1s each form a single
//! 4-connected region (a *Graham matrix*). For four rows the crate
//!
//! * builds a column-reading automaton that recognizes canonical Graham
//!   matrices ([`automaton`]),
//! * turns its transfer matrix into an exact rational generating function
//!   ([`series`]),
//! * extracts terms, the linear recurrence, and the dominant-pole asymptotics
//!   ([`asymptotics`]),
//! * and checks all of it against exhaustive enumeration ([`oracle`]).

pub mod asymptotics;
pub mod automaton;
pub mod board;
pub mod dsu;
pub mod formats;
pub mod oracle;
pub mod poly;
pub mod reference;
pub mod roots;
pub mod series;
pub mod verify;

pub use automaton::{build_canonical, build_general, Automaton, Mode, TransferMatrix};
pub use board::{complete_board, Board, Column, Cut, Symmetry};
pub use oracle::{count_report, enumerate_canonical, CountReport, SweepOptions};
pub use series::{resolvent_sum, series_terms, RationalFunction};

/// Generating function of the machine for `mode` and `m` rows.
pub fn generating_function(mode: Mode, m: usize) -> Result<RationalFunction, Error> {
    let a = match mode {
        Mode::Canonical => build_canonical(m)?,
        Mode::General => build_general(m)?,
    };
    Ok(resolvent_sum(&a.transfer_matrix())?)
}

/// Published form of the 4-row generating function.
pub fn reference_gf() -> RationalFunction {
    RationalFunction::new(
        poly::Poly::from_ints(&reference::GF_NUMERATOR),
        poly::Poly::product_of(&reference::GF_DENOMINATOR_FACTORS),
    )
    .expect("nonzero denominator")
}

/// Any error the library can report.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Board(#[from] board::BoardError),
    #[error(transparent)]
    Oracle(#[from] oracle::OracleError),
    #[error(transparent)]
    Automaton(#[from] automaton::AutomatonError),
    #[error(transparent)]
    Series(#[from] series::SeriesError),
    #[error(transparent)]
    Asymptotic(#[from] asymptotics::AsymptoticError),
    #[error(transparent)]
    Format(#[from] formats::FormatError),
}
