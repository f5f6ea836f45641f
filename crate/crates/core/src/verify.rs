//! End-to-end checks of the whole pipeline against published values and
//! the exhaustive oracle. Shared by the acceptance test suite and the
//! `verify` command.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use serde::Serialize;

use crate::asymptotics::{dominant_form, error_profile};
use crate::automaton::{
    acceptance, build_canonical_with_report, build_general, characteristic_polynomial,
    find_permutation, Automaton,
};
use crate::board::{complete_board, Board, Column, Symmetry};
use crate::dsu::UnionFind;
use crate::oracle::{count_report, regenerate_figures, SweepOptions};
use crate::poly::Poly;
use crate::reference;
use crate::series::{resolvent_denominator_lcm, resolvent_sum, series_terms, RationalFunction};

/// Everything the checks compare against. [`Expectations::published`]
/// holds the real targets; tests tamper with a copy to make sure failures
/// are reported.
#[derive(Debug, Clone)]
pub struct Expectations {
    pub terms: Vec<u64>,
    pub gf_numerator: Vec<i64>,
    pub gf_denominator_factors: Vec<Vec<i64>>,
    pub lcm_factors: Vec<Vec<i64>>,
    pub transfer_matrix: Vec<Vec<u8>>,
    pub state_count: usize,
    pub start_columns: Vec<Vec<u8>>,
    pub growth: f64,
    pub growth_tol: f64,
    pub a: f64,
    pub b: f64,
    pub ab_tol: f64,
    /// `(89, 92, 218, 86, 234)` in `(c2 z^2 ± c1 z + c0 ± cm / z) / d`.
    pub amplitude_coeffs: [f64; 5],
    pub amplitude_tol: f64,
    pub max_rel_err_n30: f64,
    /// `(convention, m, n, value)`
    pub small_counts: Vec<(&'static str, usize, usize, u64)>,
    pub oracle_max_n: usize,
    pub general_max_n: usize,
    pub word_len: usize,
    pub canonical_4x6: usize,
}

impl Expectations {
    pub fn published() -> Self {
        Expectations {
            terms: reference::TERMS.to_vec(),
            gf_numerator: reference::GF_NUMERATOR.to_vec(),
            gf_denominator_factors: reference::GF_DENOMINATOR_FACTORS
                .iter()
                .map(|f| f.to_vec())
                .collect(),
            lcm_factors: reference::RESOLVENT_LCM_FACTORS
                .iter()
                .map(|f| f.to_vec())
                .collect(),
            transfer_matrix: reference::TRANSFER_MATRIX
                .iter()
                .map(|r| r.to_vec())
                .collect(),
            state_count: 9,
            start_columns: vec![vec![0, 0, 0, 0], vec![1, 0, 0, 0], vec![1, 1, 0, 0]],
            growth: reference::GROWTH,
            growth_tol: 1e-8,
            a: reference::AMPLITUDE_A,
            b: reference::AMPLITUDE_B,
            ab_tol: 1e-4,
            amplitude_coeffs: [89.0, 92.0, 218.0, 86.0, 234.0],
            amplitude_tol: 1e-6,
            max_rel_err_n30: 0.02,
            small_counts: vec![
                ("cuts", 4, 1, 1),
                ("cuts", 4, 2, 4),
                ("cuts", 4, 3, 9),
                ("orbits", 4, 2, 3),
                ("orbits", 4, 3, 5),
                ("canonical", 4, 2, 3),
                ("canonical", 4, 3, 5),
            ],
            oracle_max_n: 12,
            general_max_n: 10,
            word_len: 6,
            canonical_4x6: 54,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u64,
    pub limit_ms: Option<u64>,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "[{}] {:>2} {:<28} {:>7} ms  {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed_ms,
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str, Option<u64>); 10] = [
    (1, "terms", Some(1_000)),
    (2, "generating-function", Some(5_000)),
    (3, "oracle-agreement", Some(300_000)),
    (4, "machine-structure", Some(10_000)),
    (5, "resolvent-denominators", Some(10_000)),
    (6, "asymptotics", Some(5_000)),
    (7, "cross-convention-counts", Some(1_000)),
    (8, "general-mode-equivalence", Some(60_000)),
    (9, "property-suites", None),
    (10, "figures", Some(1_000)),
];

type Outcome = Result<String, String>;

pub fn run_criterion(id: u8, exp: &Expectations, opts: &SweepOptions) -> CriterionResult {
    let (_, name, limit_ms) = *CRITERIA
        .iter()
        .find(|c| c.0 == id)
        .unwrap_or_else(|| panic!("no criterion {id}"));
    let started = Instant::now();
    let outcome = match id {
        1 => check_terms(exp),
        2 => check_gf(exp),
        3 => check_oracle(exp, opts),
        4 => check_machine(exp),
        5 => check_lcm(exp),
        6 => check_asymptotics(exp),
        7 => check_small_counts(exp, opts),
        8 => check_general(exp, opts),
        9 => check_properties(exp),
        10 => check_figures(exp, opts),
        _ => unreachable!(),
    };
    let elapsed = started.elapsed();
    let in_time = limit_ms.is_none_or(|l| elapsed <= Duration::from_millis(l));
    let (passed, mut detail) = match outcome {
        Ok(d) => (in_time, d),
        Err(d) => (false, d),
    };
    if !in_time {
        detail.push_str(&format!(
            " (over the {} ms limit)",
            limit_ms.unwrap_or_default()
        ));
    }
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed_ms: elapsed.as_millis() as u64,
        limit_ms,
    }
}

pub fn run_all(exp: &Expectations, opts: &SweepOptions) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .map(|&(id, _, _)| run_criterion(id, exp, opts))
        .collect()
}

fn canonical_gf() -> Result<(Automaton, RationalFunction), String> {
    let (a, _) = build_canonical_with_report(4).map_err(|e| e.to_string())?;
    let g = resolvent_sum(&a.transfer_matrix()).map_err(|e| e.to_string())?;
    Ok((a, g))
}

fn check_terms(exp: &Expectations) -> Outcome {
    let (_, g) = canonical_gf()?;
    let got = series_terms(&g, exp.terms.len()).map_err(|e| e.to_string())?;
    let want: Vec<BigInt> = exp.terms.iter().map(|&t| BigInt::from(t)).collect();
    match got.iter().zip(&want).position(|(a, b)| a != b) {
        None if got.len() == want.len() => Ok(format!(
            "c_1..c_{} match, c_{} = {}",
            want.len(),
            want.len(),
            got.last().map(|c| c.to_string()).unwrap_or_default()
        )),
        None => Err(format!("got {} terms, want {}", got.len(), want.len())),
        Some(i) => Err(format!("c_{} = {}, want {}", i + 1, got[i], want[i])),
    }
}

fn expected_gf(exp: &Expectations) -> Result<RationalFunction, String> {
    let factors: Vec<&[i64]> = exp
        .gf_denominator_factors
        .iter()
        .map(|f| f.as_slice())
        .collect();
    RationalFunction::new(
        Poly::from_ints(&exp.gf_numerator),
        Poly::product_of(&factors),
    )
    .map(|g| g.normalize())
    .map_err(|e| e.to_string())
}

fn check_gf(exp: &Expectations) -> Outcome {
    let (_, g) = canonical_gf()?;
    let want = expected_gf(exp)?;
    if g.numerator() == want.numerator() && g.denominator() == want.denominator() {
        Ok(format!("G(x) = {g}"))
    } else {
        Err(format!("G(x) = {g}, want {want}"))
    }
}

fn check_oracle(exp: &Expectations, opts: &SweepOptions) -> Outcome {
    let mut worst = 0;
    for n in 1..=exp.oracle_max_n {
        let r = count_report(4, n, opts).map_err(|e| e.to_string())?;
        let want = exp
            .terms
            .get(n - 1)
            .copied()
            .ok_or("not enough reference terms")?;
        if r.canonical != want {
            return Err(format!("n = {n}: oracle {} vs c_n {want}", r.canonical));
        }
        worst = worst.max(r.elapsed_ms);
    }
    Ok(format!(
        "canonical(4, n) = c_n for n = 1..{} (slowest sweep {worst} ms)",
        exp.oracle_max_n
    ))
}

fn check_machine(exp: &Expectations) -> Outcome {
    let (a, report) = build_canonical_with_report(4).map_err(|e| e.to_string())?;
    let col = |l: &[u8]| Column::from_labels(l).expect("4-row column");
    let mut problems = Vec::new();
    if a.state_count() != exp.state_count {
        problems.push(format!(
            "{} states, want {}",
            a.state_count(),
            exp.state_count
        ));
    }
    let alternating = col(&[1, 0, 1, 0]);
    let shared = a.states.iter().filter(|s| s.column == alternating).count();
    if shared != 2 {
        problems.push(format!("{shared} states on (1,0,1,0), want 2"));
    }
    let lonely = col(&[0, 1, 1, 0]);
    let lonely_states: Vec<usize> = (0..a.state_count())
        .filter(|&i| a.states[i].column == lonely)
        .collect();
    let lonely_accepts = lonely_states
        .iter()
        .any(|&i| a.accepts(i) != (false, false));
    if lonely_accepts {
        problems.push("a (0,1,1,0) state accepts".into());
    }
    let mut starts: Vec<Column> = a.start.iter().map(|&s| a.states[s].column).collect();
    starts.sort();
    let mut want_starts: Vec<Column> = exp.start_columns.iter().map(|c| col(c)).collect();
    want_starts.sort();
    if starts != want_starts {
        problems.push(format!("start columns {starts:?}, want {want_starts:?}"));
    }
    let t = a.transfer_matrix();
    let witness = find_permutation(&t.entries, &exp.transfer_matrix);
    let char_eq =
        characteristic_polynomial(&t.entries) == characteristic_polynomial(&exp.transfer_matrix);
    if witness.is_none() {
        problems.push(format!(
            "no permutation similarity (char-poly equal: {char_eq})"
        ));
    }
    let detail = format!(
        "{} states, {} on (1,0,1,0), (0,1,1,0) states {:?} accept nothing \
         [reachable: {}, trimmed: {}], starts {:?}, witness {:?}, char-poly equal: {char_eq}",
        a.state_count(),
        shared,
        lonely_states,
        !report.unreachable_columns.contains(&lonely),
        report.trimmed.iter().filter(|s| s.column == lonely).count(),
        starts,
        witness
    );
    if problems.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{}; {detail}", problems.join("; ")))
    }
}

fn check_lcm(exp: &Expectations) -> Outcome {
    let (a, _) = canonical_gf()?;
    let got = resolvent_denominator_lcm(&a.transfer_matrix().entries);
    let factors: Vec<&[i64]> = exp.lcm_factors.iter().map(|f| f.as_slice()).collect();
    let want = Poly::product_of(&factors).primitive().0;
    if got == want {
        Ok(format!("lcm = {got}"))
    } else {
        Err(format!("lcm = {got}, want {want}"))
    }
}

fn check_asymptotics(exp: &Expectations) -> Outcome {
    let (_, g) = canonical_gf()?;
    let est = dominant_form(&g).map_err(|e| e.to_string())?;
    let [c2, c1, c0, cm, d] = exp.amplitude_coeffs;
    let z = est.z_value;
    let plus = (c2 * z * z + c1 * z + c0 + cm / z) / d;
    let minus = (c2 * z * z - c1 * z + c0 - cm / z) / d;
    let errors = error_profile(&g, &est, 30).map_err(|e| e.to_string())?;
    let rel30 = errors.last().map(|e| e.1).unwrap_or(f64::INFINITY);
    let mut problems = Vec::new();
    if (est.growth - exp.growth).abs() > exp.growth_tol {
        problems.push(format!("growth {} vs {}", est.growth, exp.growth));
    }
    if (est.a - exp.a).abs() > exp.ab_tol {
        problems.push(format!("A {} vs {}", est.a, exp.a));
    }
    if (est.b - exp.b).abs() > exp.ab_tol {
        problems.push(format!("B {} vs {}", est.b, exp.b));
    }
    if (est.amp_plus - plus).abs() > exp.amplitude_tol
        || (est.amp_minus - minus).abs() > exp.amplitude_tol
    {
        problems.push(format!(
            "amplitudes ({}, {}) vs closed forms ({plus}, {minus})",
            est.amp_plus, est.amp_minus
        ));
    }
    if rel30.is_nan() || rel30 > exp.max_rel_err_n30 {
        problems.push(format!("relative error at n = 30 is {rel30}"));
    }
    let detail = format!(
        "1/z = {:.12}, A = {:.6}, B = {:.6}, amplitudes ({:.9}, {:.9}), rel err(30) = {:.5}",
        est.growth, est.a, est.b, est.amp_plus, est.amp_minus, rel30
    );
    if problems.is_empty() {
        Ok(detail)
    } else {
        Err(format!("{}; {detail}", problems.join("; ")))
    }
}

fn check_small_counts(exp: &Expectations, opts: &SweepOptions) -> Outcome {
    let mut seen = Vec::new();
    for &(conv, m, n, want) in &exp.small_counts {
        let r = count_report(m, n, opts).map_err(|e| e.to_string())?;
        let got = match conv {
            "cuts" => r.cuts,
            "orbits" => r.orbits,
            "canonical" => r.canonical,
            other => return Err(format!("unknown convention {other}")),
        };
        if got != want {
            return Err(format!("{conv}({m},{n}) = {got}, want {want}"));
        }
        seen.push(format!("{conv}({m},{n})={got}"));
    }
    Ok(seen.join(" "))
}

fn check_general(exp: &Expectations, opts: &SweepOptions) -> Outcome {
    let mut detail = Vec::new();
    for m in [4, 3] {
        let a = build_general(m).map_err(|e| e.to_string())?;
        let g = resolvent_sum(&a.transfer_matrix()).map_err(|e| e.to_string())?;
        let terms = series_terms(&g, exp.general_max_n).map_err(|e| e.to_string())?;
        for (i, t) in terms.iter().enumerate() {
            let n = i + 1;
            let cuts = count_report(m, n, opts).map_err(|e| e.to_string())?.cuts;
            if *t != BigInt::from(cuts) {
                return Err(format!("m = {m}, n = {n}: machine {t}, oracle cuts {cuts}"));
            }
        }
        detail.push(format!(
            "m={m}: {} states, cuts match for n <= {}",
            a.state_count(),
            exp.general_max_n
        ));
    }
    Ok(detail.join("; "))
}

fn check_figures(exp: &Expectations, opts: &SweepOptions) -> Outcome {
    let report = regenerate_figures(opts).map_err(|e| e.to_string())?;
    if report.canonical_4x6 != exp.canonical_4x6 {
        return Err(format!(
            "{} canonical 4x6 matrices, want {}",
            report.canonical_4x6, exp.canonical_4x6
        ));
    }
    if !report.three_by_six.iter().all(Board::is_graham) {
        return Err("a 3x6 figure is not a Graham matrix".into());
    }
    Ok(format!(
        "12/12 4x6 figures among {} canonical matrices; 12/12 3x6 figures are Graham; \
         {} enumerated 3x6 cut(s) not displayed",
        report.canonical_4x6,
        report.three_by_six_missing.len()
    ))
}

/// Components per label by union-find over all same-label neighbor pairs;
/// an independent route to [`Board::component_counts`].
pub fn component_counts_union_find(board: &Board) -> (usize, usize) {
    let (m, n) = (board.m(), board.n());
    let mut uf = UnionFind::new(m * n);
    for j in 0..n {
        for i in 0..m {
            let v = board.get(i, j);
            if i + 1 < m && board.get(i + 1, j) == v {
                uf.union(j * m + i, j * m + i + 1);
            }
            if j + 1 < n && board.get(i, j + 1) == v {
                uf.union(j * m + i, (j + 1) * m + i);
            }
        }
    }
    let mut counts = (0, 0);
    for j in 0..n {
        for i in 0..m {
            let k = j * m + i;
            if uf.find(k) == k {
                if board.get(i, j) == 0 {
                    counts.0 += 1;
                } else {
                    counts.1 += 1;
                }
            }
        }
    }
    counts
}

/// Outcome of one exhaustive word sweep.
#[derive(Debug, Default, Clone)]
pub struct WordSweep {
    pub words: u64,
    pub mismatches: Vec<String>,
}

/// Runs every word of length `1..=max_len` through `a` and compares the
/// final state's acceptance with flood-fill checks of the completed boards.
/// Also checks that words ending in the same state get the same verdict.
pub fn word_oracle_sweep(a: &Automaton, max_len: usize) -> WordSweep {
    let canonical = a.mode == crate::automaton::Mode::Canonical;
    let board_ok = |b: &Board| {
        if canonical {
            b.is_canonical()
        } else {
            b.is_graham()
        }
    };
    let mut sweep = WordSweep::default();
    let mut verdicts: HashMap<usize, (bool, bool)> = HashMap::new();
    let mut word: Vec<Column> = Vec::with_capacity(max_len);

    #[allow(clippy::too_many_arguments)]
    fn visit(
        a: &Automaton,
        state: Option<usize>,
        word: &mut Vec<Column>,
        max_len: usize,
        board_ok: &dyn Fn(&Board) -> bool,
        sweep: &mut WordSweep,
        verdicts: &mut HashMap<usize, (bool, bool)>,
    ) {
        let k = word.len();
        let even = board_ok(&complete_board(word, 2 * k).expect("valid left half"));
        let last = word[k - 1];
        let odd = last.is_self_revcomp()
            && board_ok(&complete_board(word, 2 * k - 1).expect("fixed middle"));
        let machine = state.map_or((false, false), |s| a.accepts(s));
        sweep.words += 1;
        if machine != (even, odd) && sweep.mismatches.len() < 10 {
            sweep.mismatches.push(format!(
                "{word:?}: machine {machine:?}, boards {:?}",
                (even, odd)
            ));
        }
        if let Some(s) = state {
            // Acceptance must be a function of the state alone.
            let first = *verdicts.entry(s).or_insert((even, odd));
            if first != (even, odd) && sweep.mismatches.len() < 10 {
                sweep.mismatches.push(format!(
                    "state {s} reached with verdicts {first:?} and {:?}",
                    (even, odd)
                ));
            }
            if acceptance(&a.states[s]) != machine && sweep.mismatches.len() < 10 {
                sweep
                    .mismatches
                    .push(format!("state {s}: stored acceptance differs"));
            }
        }
        if k == max_len {
            return;
        }
        for &c in &a.alphabet {
            let next = state.and_then(|s| a.successor(s, c).expect("alphabet symbol"));
            word.push(c);
            visit(a, next, word, max_len, board_ok, sweep, verdicts);
            word.pop();
        }
    }

    for &c in &a.alphabet {
        let state = a.run(&[c]).expect("alphabet symbol");
        word.push(c);
        visit(
            a,
            state,
            &mut word,
            max_len,
            &board_ok,
            &mut sweep,
            &mut verdicts,
        );
        word.pop();
    }
    sweep
}

/// Board-core identities on one board.
pub fn board_identities(b: &Board) -> Result<(), String> {
    for op in Symmetry::ALL {
        if b.transform(op).transform(op) != *b {
            return Err(format!("{op:?} is not an involution on {b:?}"));
        }
    }
    if b.vflip() != b.hflip().rot180() {
        return Err(format!("vflip != rot180 . hflip on {b:?}"));
    }
    let flood = b.component_counts();
    if flood != component_counts_union_find(b) {
        return Err(format!("flood fill and union-find disagree on {b:?}"));
    }
    let graham = b.satisfies_rule() && flood == (1, 1);
    if graham != b.is_graham() {
        return Err(format!("is_graham inconsistent on {b:?}"));
    }
    if graham {
        if b.complement() != b.rot180() {
            return Err(format!("complement != rot180 on Graham {b:?}"));
        }
        if !(b.m() * b.n()).is_multiple_of(2) {
            return Err(format!("Graham board with odd cell count {b:?}"));
        }
        for op in Symmetry::ALL {
            if !b.transform(op).is_graham() {
                return Err(format!("{op:?} breaks Graham property of {b:?}"));
            }
        }
        if complete_board(&b.left_half(), b.n()).ok().as_ref() != Some(b) {
            return Err(format!("left-half round trip fails on {b:?}"));
        }
    }
    if b.is_canonical() && !graham {
        return Err(format!("canonical but not Graham: {b:?}"));
    }
    Ok(())
}

fn board_from_index(m: usize, n: usize, idx: u64) -> Board {
    let cols: Vec<Column> = (0..n)
        .map(|j| Column::new(m, ((idx >> (j * m)) & ((1 << m) - 1)) as u32).expect("fits"))
        .collect();
    Board::from_columns(m, &cols).expect("uniform columns")
}

/// Summary of the board-core identity sweep.
#[derive(Debug, Default, Clone)]
pub struct BoardSweep {
    pub exhaustive_boards: u64,
    pub rule_boards: u64,
    pub sampled_boards: u64,
    pub failure: Option<String>,
}

/// Every board with `m·n <= exhaustive_cells`, every complement-rule board
/// with `m·n <= rule_cells`, and `samples` strided boards per shape for
/// larger grids up to `rule_cells`.
pub fn board_identity_sweep(
    exhaustive_cells: usize,
    rule_cells: usize,
    samples: u64,
) -> BoardSweep {
    let mut sweep = BoardSweep::default();
    for m in 1..=crate::board::MAX_ROWS {
        for n in 1..=rule_cells / m {
            let cells = m * n;
            let mut check = |b: Board, counter: &mut u64| {
                *counter += 1;
                if sweep.failure.is_none() {
                    if let Err(e) = board_identities(&b) {
                        sweep.failure = Some(e);
                    }
                }
            };
            if cells <= exhaustive_cells {
                let mut count = 0;
                for idx in 0..1u64 << cells {
                    check(board_from_index(m, n, idx), &mut count);
                }
                sweep.exhaustive_boards += count;
            } else {
                // Golden-ratio stride visits indices spread over the space.
                let space = 1u64 << cells;
                let stride = ((space as f64 * 0.618_033_988_75) as u64) | 1;
                let mut count = 0;
                for s in 0..samples {
                    check(
                        board_from_index(m, n, s.wrapping_mul(stride) % space),
                        &mut count,
                    );
                }
                sweep.sampled_boards += count;
            }
            // All left halves of complement-rule boards.
            let k = n.div_ceil(2);
            let fixed: Vec<Column> = Column::all(m).filter(|c| c.is_self_revcomp()).collect();
            if n % 2 == 1 && fixed.is_empty() {
                continue;
            }
            let free = if n % 2 == 1 { k - 1 } else { k };
            let mut count = 0;
            for idx in 0..1u64 << (free * m) {
                let mut left: Vec<Column> = (0..free)
                    .map(|j| {
                        Column::new(m, ((idx >> (j * m)) & ((1 << m) - 1)) as u32).expect("fits")
                    })
                    .collect();
                if n % 2 == 1 {
                    for &mid in &fixed {
                        left.push(mid);
                        check(complete_board(&left, n).expect("valid"), &mut count);
                        left.pop();
                    }
                } else {
                    check(complete_board(&left, n).expect("valid"), &mut count);
                }
            }
            sweep.rule_boards += count;
        }
    }
    sweep
}

fn check_properties(exp: &Expectations) -> Outcome {
    let mut detail = Vec::new();
    let (canonical, _) = build_canonical_with_report(4).map_err(|e| e.to_string())?;
    let mut machines = vec![("canonical m=4", canonical)];
    for m in 1..=4 {
        let label = ["general m=1", "general m=2", "general m=3", "general m=4"][m - 1];
        machines.push((label, build_general(m).map_err(|e| e.to_string())?));
    }
    for (label, a) in &machines {
        let sweep = word_oracle_sweep(a, exp.word_len);
        if !sweep.mismatches.is_empty() {
            return Err(format!("{label}: {}", sweep.mismatches.join("; ")));
        }
        detail.push(format!("{label}: {} words", sweep.words));
    }
    let boards = board_identity_sweep(16, 24, 1 << 12);
    if let Some(f) = boards.failure {
        return Err(f);
    }
    detail.push(format!(
        "boards: {} exhaustive (m*n <= 16), {} complement-rule (m*n <= 24), {} sampled",
        boards.exhaustive_boards, boards.rule_boards, boards.sampled_boards
    ));
    Ok(detail.join("; "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_find_counts_match_flood_fill_on_small_boards() {
        for idx in 0..1u64 << 12 {
            let b = board_from_index(3, 4, idx);
            assert_eq!(b.component_counts(), component_counts_union_find(&b));
        }
    }

    #[test]
    fn tampered_term_fails_criterion_one() {
        let mut exp = Expectations::published();
        exp.terms[29] += 1;
        let r = run_criterion(1, &exp, &SweepOptions::default());
        assert!(!r.passed);
        assert!(r.detail.contains("c_30"), "{}", r.detail);
    }

    #[test]
    fn tampered_gf_fails_criterion_two() {
        let mut exp = Expectations::published();
        exp.gf_numerator[1] = 2;
        let r = run_criterion(2, &exp, &SweepOptions::default());
        assert!(!r.passed);
        assert_eq!(r.name, "generating-function");
    }
}
