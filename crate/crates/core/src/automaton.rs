//! Column-reading finite state machine for Graham matrices.
//!
//! A word is the left half of a board read one column at a time. A state is
//! the last column read together with its connectivity profile: which of the
//! column's cells are already joined through earlier columns. Reading a
//! column either extends the profile or rejects because some component lost
//! contact with the frontier. Whether the left half completes to a Graham
//! matrix is decided from the final state alone, by gluing the profile to
//! its own rotated-complement image across the seam.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::board::{Column, MAX_ROWS};
use crate::dsu::UnionFind;
use crate::poly::Poly;
use crate::series::determinant;

/// Default cap on explored states for the general builder.
pub const DEFAULT_STATE_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("canonical machine is only defined for 4 rows, got {0}")]
    CanonicalRows(usize),
    #[error("general machine supports 1..=5 rows, got {0}")]
    GeneralRows(usize),
    #[error("more than {0} states")]
    StateCap(usize),
    #[error("symbol {0} is not in the alphabet")]
    Symbol(Column),
    #[error("malformed automaton: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Four rows, bottom row of the left half all 0, first column with at
    /// least as many 0s as 1s. Each canonical matrix is read once.
    Canonical,
    /// Every column allowed; each cut is read twice (once per labeling).
    General,
}

/// Component id of each cell of the frontier column, numbered in order of
/// first appearance from the top row. Cells with different labels never
/// share an id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConnectivityProfile {
    labels: Vec<u8>,
}

impl ConnectivityProfile {
    fn from_roots(roots: impl IntoIterator<Item = usize>) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let labels = roots
            .into_iter()
            .map(|r| match seen.iter().position(|&s| s == r) {
                Some(p) => p as u8,
                None => {
                    seen.push(r);
                    (seen.len() - 1) as u8
                }
            })
            .collect();
        ConnectivityProfile { labels }
    }

    /// Profile of a lone column: vertical runs of equal labels.
    pub fn of_column(column: Column) -> Self {
        let m = column.m();
        let mut uf = UnionFind::new(m);
        for i in 1..m {
            if column.get(i) == column.get(i - 1) {
                uf.union(i, i - 1);
            }
        }
        ConnectivityProfile::from_roots((0..m).map(|i| uf.find(i)))
    }

    pub fn ids(&self) -> &[u8] {
        &self.labels
    }

    /// Blocks of rows carrying `label` in `column`, each block one live
    /// component.
    pub fn partition(&self, column: Column, label: u8) -> Vec<Vec<usize>> {
        let mut blocks: BTreeMap<u8, Vec<usize>> = BTreeMap::new();
        for (i, &id) in self.labels.iter().enumerate() {
            if column.get(i) == label {
                blocks.entry(id).or_default().push(i);
            }
        }
        blocks.into_values().collect()
    }

    fn union_into(&self, uf: &mut UnionFind, offset: usize) {
        for i in 0..self.labels.len() {
            for j in 0..i {
                if self.labels[i] == self.labels[j] {
                    uf.union(offset + i, offset + j);
                    break;
                }
            }
        }
    }

    /// The profile of the rotated-complement column: row `i` takes the
    /// component of row `m-1-i`.
    fn mirrored(&self) -> ConnectivityProfile {
        let mut rev = self.labels.clone();
        rev.reverse();
        ConnectivityProfile::from_roots(rev.into_iter().map(usize::from))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    pub column: Column,
    pub profile: ConnectivityProfile,
}

impl State {
    /// State after reading `column` as the first symbol.
    pub fn start(column: Column) -> State {
        State {
            column,
            profile: ConnectivityProfile::of_column(column),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transition {
    Live(State),
    /// A component of the previous column has no cell in the new one.
    Dead,
}

/// Reads `next` after `state`.
pub fn step(state: &State, next: Column) -> Transition {
    let m = state.column.m();
    assert_eq!(next.m(), m, "column height mismatch");
    let mut uf = UnionFind::new(2 * m);
    state.profile.union_into(&mut uf, 0);
    for i in 1..m {
        if next.get(i) == next.get(i - 1) {
            uf.union(m + i, m + i - 1);
        }
    }
    for i in 0..m {
        if state.column.get(i) == next.get(i) {
            uf.union(i, m + i);
        }
    }
    let frontier: Vec<usize> = (m..2 * m).map(|k| uf.find(k)).collect();
    for i in 0..m {
        if !frontier.contains(&uf.find(i)) {
            return Transition::Dead;
        }
    }
    Transition::Live(State {
        column: next,
        profile: ConnectivityProfile::from_roots(frontier),
    })
}

fn single_component_per_label(uf: &mut UnionFind, labels: &[u8]) -> bool {
    let mut roots: [Option<usize>; 2] = [None, None];
    for (k, &label) in labels.iter().enumerate() {
        let r = uf.find(k);
        match roots[label as usize] {
            None => roots[label as usize] = Some(r),
            Some(existing) if existing != r => return false,
            _ => {}
        }
    }
    roots[0].is_some() && roots[1].is_some()
}

/// Whether the word ending in `state` completes to a Graham matrix of width
/// `2k` (`even`) or `2k - 1` with the last column as the middle (`odd`),
/// where `k` is the word length.
pub fn acceptance(state: &State) -> (bool, bool) {
    let m = state.column.m();
    let left = state.column;
    let right = left.revcomp();
    let mirrored = state.profile.mirrored();

    let mut uf = UnionFind::new(2 * m);
    state.profile.union_into(&mut uf, 0);
    mirrored.union_into(&mut uf, m);
    for i in 0..m {
        if left.get(i) == right.get(i) {
            uf.union(i, m + i);
        }
    }
    let labels: Vec<u8> = (0..m)
        .map(|i| left.get(i))
        .chain((0..m).map(|i| right.get(i)))
        .collect();
    let even = single_component_per_label(&mut uf, &labels);

    let odd = left.is_self_revcomp() && {
        let mut uf = UnionFind::new(m);
        state.profile.union_into(&mut uf, 0);
        mirrored.union_into(&mut uf, 0);
        single_component_per_label(&mut uf, &left.labels())
    };
    (even, odd)
}

/// What the builder saw before trimming states that cannot reach
/// acceptance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildReport {
    /// Live states reachable from the start set.
    pub explored: usize,
    /// Reachable live states removed because no accepting state is
    /// reachable from them.
    pub trimmed: Vec<State>,
    /// Alphabet columns that never occur in a reachable live state.
    pub unreachable_columns: Vec<Column>,
    /// Alphabet columns that occur only in trimmed states.
    pub never_accepting_columns: Vec<Column>,
}

/// A trimmed, deterministic column machine. States are sorted by
/// `(column, profile)`; edges by `(from, symbol)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automaton {
    pub m: usize,
    pub mode: Mode,
    /// How many words spell each counted object.
    pub divisor: u32,
    pub alphabet: Vec<Column>,
    pub states: Vec<State>,
    pub start: Vec<usize>,
    pub edges: Vec<(usize, Column, usize)>,
    pub accept_even: Vec<usize>,
    pub accept_odd: Vec<usize>,
}

/// The 4-row machine under the canonical stipulations.
pub fn build_canonical(m: usize) -> Result<Automaton, AutomatonError> {
    build_canonical_with_report(m).map(|(a, _)| a)
}

pub fn build_canonical_with_report(m: usize) -> Result<(Automaton, BuildReport), AutomatonError> {
    if m != 4 {
        return Err(AutomatonError::CanonicalRows(m));
    }
    let bottom = 1u32 << (m - 1);
    let alphabet: Vec<Column> = Column::all(m).filter(|c| c.bits() & bottom == 0).collect();
    let starts: Vec<Column> = alphabet
        .iter()
        .copied()
        .filter(|c| c.zeros() >= c.ones())
        .collect();
    build(m, Mode::Canonical, 1, alphabet, starts, DEFAULT_STATE_CAP)
}

/// The unrestricted machine for `m` rows, counting every cut twice.
pub fn build_general(m: usize) -> Result<Automaton, AutomatonError> {
    build_general_with_report(m, DEFAULT_STATE_CAP).map(|(a, _)| a)
}

pub fn build_general_with_report(
    m: usize,
    state_cap: usize,
) -> Result<(Automaton, BuildReport), AutomatonError> {
    if m == 0 || m > 5 || m > MAX_ROWS {
        return Err(AutomatonError::GeneralRows(m));
    }
    let alphabet: Vec<Column> = Column::all(m).collect();
    let starts = alphabet.clone();
    build(m, Mode::General, 2, alphabet, starts, state_cap)
}

fn build(
    m: usize,
    mode: Mode,
    divisor: u32,
    alphabet: Vec<Column>,
    starts: Vec<Column>,
    state_cap: usize,
) -> Result<(Automaton, BuildReport), AutomatonError> {
    let mut index: HashMap<State, usize> = HashMap::new();
    let mut states: Vec<State> = Vec::new();
    let mut queue = VecDeque::new();
    let mut intern = |s: State,
                      states: &mut Vec<State>,
                      queue: &mut VecDeque<usize>|
     -> Result<usize, AutomatonError> {
        if let Some(&id) = index.get(&s) {
            return Ok(id);
        }
        if states.len() >= state_cap {
            return Err(AutomatonError::StateCap(state_cap));
        }
        let id = states.len();
        index.insert(s.clone(), id);
        states.push(s);
        queue.push_back(id);
        Ok(id)
    };

    let mut start_ids = Vec::new();
    for &c in &starts {
        start_ids.push(intern(State::start(c), &mut states, &mut queue)?);
    }
    let mut raw_edges: Vec<(usize, Column, usize)> = Vec::new();
    while let Some(id) = queue.pop_front() {
        let from = states[id].clone();
        for &c in &alphabet {
            if let Transition::Live(next) = step(&from, c) {
                let to = intern(next, &mut states, &mut queue)?;
                raw_edges.push((id, c, to));
            }
        }
    }

    let accepting: Vec<(bool, bool)> = states.iter().map(acceptance).collect();
    // Backward reachability from accepting states.
    let mut incoming: Vec<Vec<usize>> = vec![Vec::new(); states.len()];
    for &(from, _, to) in &raw_edges {
        incoming[to].push(from);
    }
    let mut useful = vec![false; states.len()];
    let mut stack: Vec<usize> = (0..states.len())
        .filter(|&i| accepting[i].0 || accepting[i].1)
        .collect();
    for &i in &stack {
        useful[i] = true;
    }
    while let Some(i) = stack.pop() {
        for &p in &incoming[i] {
            if !useful[p] {
                useful[p] = true;
                stack.push(p);
            }
        }
    }

    let mut kept: Vec<usize> = (0..states.len()).filter(|&i| useful[i]).collect();
    kept.sort_by(|&a, &b| states[a].cmp(&states[b]));
    let mut remap = vec![usize::MAX; states.len()];
    for (new, &old) in kept.iter().enumerate() {
        remap[old] = new;
    }

    let mut edges: Vec<(usize, Column, usize)> = raw_edges
        .iter()
        .filter(|&&(f, _, t)| useful[f] && useful[t])
        .map(|&(f, c, t)| (remap[f], c, remap[t]))
        .collect();
    edges.sort();
    let mut start: Vec<usize> = start_ids
        .iter()
        .filter(|&&s| useful[s])
        .map(|&s| remap[s])
        .collect();
    start.sort();
    start.dedup();
    let accept_even = kept
        .iter()
        .enumerate()
        .filter(|&(_, &old)| accepting[old].0)
        .map(|(new, _)| new)
        .collect();
    let accept_odd = kept
        .iter()
        .enumerate()
        .filter(|&(_, &old)| accepting[old].1)
        .map(|(new, _)| new)
        .collect();

    let report = BuildReport {
        explored: states.len(),
        trimmed: {
            let mut t: Vec<State> = (0..states.len())
                .filter(|&i| !useful[i])
                .map(|i| states[i].clone())
                .collect();
            t.sort();
            t
        },
        unreachable_columns: alphabet
            .iter()
            .copied()
            .filter(|c| !states.iter().any(|s| s.column == *c))
            .collect(),
        never_accepting_columns: alphabet
            .iter()
            .copied()
            .filter(|c| {
                states.iter().any(|s| s.column == *c)
                    && !kept.iter().any(|&i| states[i].column == *c)
            })
            .collect(),
    };

    let automaton = Automaton {
        m,
        mode,
        divisor,
        alphabet,
        states: kept.into_iter().map(|i| states[i].clone()).collect(),
        start,
        edges,
        accept_even,
        accept_odd,
    };
    Ok((automaton, report))
}

impl Automaton {
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn successor(&self, from: usize, symbol: Column) -> Result<Option<usize>, AutomatonError> {
        if !self.alphabet.contains(&symbol) {
            return Err(AutomatonError::Symbol(symbol));
        }
        let pos = self
            .edges
            .binary_search_by(|&(f, c, _)| (f, c).cmp(&(from, symbol)));
        Ok(pos.ok().map(|p| self.edges[p].2))
    }

    /// Final state of `word`, or `None` if the machine rejects on the way.
    pub fn run(&self, word: &[Column]) -> Result<Option<usize>, AutomatonError> {
        let Some((&first, rest)) = word.split_first() else {
            return Ok(None);
        };
        if !self.alphabet.contains(&first) {
            return Err(AutomatonError::Symbol(first));
        }
        let mut current = self
            .start
            .iter()
            .copied()
            .find(|&s| self.states[s].column == first);
        for &c in rest {
            current = match current {
                Some(s) => self.successor(s, c)?,
                None => {
                    if !self.alphabet.contains(&c) {
                        return Err(AutomatonError::Symbol(c));
                    }
                    None
                }
            };
        }
        Ok(current)
    }

    /// `(even, odd)` acceptance of a state index.
    pub fn accepts(&self, state: usize) -> (bool, bool) {
        (
            self.accept_even.binary_search(&state).is_ok(),
            self.accept_odd.binary_search(&state).is_ok(),
        )
    }

    pub fn transfer_matrix(&self) -> TransferMatrix {
        let n = self.states.len();
        let mut entries = vec![vec![0u8; n]; n];
        for &(f, _, t) in &self.edges {
            entries[f][t] += 1;
        }
        let indicator = |set: &[usize]| {
            let mut v = vec![0u8; n];
            for &i in set {
                v[i] = 1;
            }
            v
        };
        TransferMatrix {
            order: n,
            entries,
            start: indicator(&self.start),
            accept_even: indicator(&self.accept_even),
            accept_odd: indicator(&self.accept_odd),
            divisor: self.divisor,
        }
    }

    /// Merges states with identical futures (Moore refinement). Not applied
    /// by the builders.
    pub fn minimized(&self) -> Automaton {
        let n = self.states.len();
        // Start states are located by their column, so they are never merged.
        let mut initial: BTreeMap<(bool, bool, Option<usize>), usize> = BTreeMap::new();
        let mut class: Vec<usize> = (0..n)
            .map(|i| {
                let (e, o) = self.accepts(i);
                let key = (e, o, self.start.contains(&i).then_some(i));
                let fresh = initial.len();
                *initial.entry(key).or_insert(fresh)
            })
            .collect();
        loop {
            let mut signatures: BTreeMap<(usize, Vec<Option<usize>>), usize> = BTreeMap::new();
            let mut next = vec![0; n];
            for i in 0..n {
                let sig: Vec<Option<usize>> = self
                    .alphabet
                    .iter()
                    .map(|&c| self.successor(i, c).expect("in alphabet").map(|t| class[t]))
                    .collect();
                let key = (class[i], sig);
                let fresh = signatures.len();
                next[i] = *signatures.entry(key).or_insert(fresh);
            }
            let before = class
                .iter()
                .collect::<std::collections::BTreeSet<_>>()
                .len();
            let after = signatures.len();
            class = next;
            if before == after {
                break;
            }
        }
        // Representative: the first state of each class in state order.
        let mut rep_of_class: BTreeMap<usize, usize> = BTreeMap::new();
        for (i, &c) in class.iter().enumerate() {
            rep_of_class.entry(c).or_insert(i);
        }
        let mut reps: Vec<usize> = rep_of_class.values().copied().collect();
        reps.sort();
        let new_index = |old: usize| reps.binary_search(&rep_of_class[&class[old]]).expect("rep");
        let mut edges: Vec<(usize, Column, usize)> = self
            .edges
            .iter()
            .filter(|&&(f, _, _)| reps.binary_search(&f).is_ok())
            .map(|&(f, c, t)| (new_index(f), c, new_index(t)))
            .collect();
        edges.sort();
        edges.dedup();
        let mut start: Vec<usize> = self.start.iter().map(|&s| new_index(s)).collect();
        start.sort();
        start.dedup();
        let accept = |pick: fn((bool, bool)) -> bool| {
            reps.iter()
                .enumerate()
                .filter(|&(_, &r)| pick(self.accepts(r)))
                .map(|(i, _)| i)
                .collect()
        };
        Automaton {
            m: self.m,
            mode: self.mode,
            divisor: self.divisor,
            alphabet: self.alphabet.clone(),
            states: reps.iter().map(|&r| self.states[r].clone()).collect(),
            start,
            edges,
            accept_even: accept(|a| a.0),
            accept_odd: accept(|a| a.1),
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph column_machine {{");
        let _ = writeln!(out, "  rankdir=LR;");
        let _ = writeln!(
            out,
            "  // box = start; plum = accepts even length; palegreen = accepts any length"
        );
        for (i, s) in self.states.iter().enumerate() {
            let (even, odd) = self.accepts(i);
            let shape = if self.start.contains(&i) {
                "box"
            } else {
                "ellipse"
            };
            let fill = match (even, odd) {
                (true, true) => ", style=filled, fillcolor=palegreen",
                (true, false) => ", style=filled, fillcolor=plum",
                (false, true) => ", style=filled, fillcolor=lightblue",
                (false, false) => "",
            };
            let ids: Vec<String> = s.profile.ids().iter().map(|d| d.to_string()).collect();
            let _ = writeln!(
                out,
                "  s{i} [label=\"{}\\n{}\", shape={shape}{fill}];",
                s.column,
                ids.join("")
            );
        }
        for &(f, c, t) in &self.edges {
            let _ = writeln!(out, "  s{f} -> s{t} [label=\"{}\"];", c.bits());
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> AutomatonJson {
        AutomatonJson {
            m: self.m,
            mode: self.mode,
            divisor: self.divisor,
            alphabet: self.alphabet.iter().map(|c| c.bits()).collect(),
            states: self
                .states
                .iter()
                .map(|s| StateJson {
                    column: s.column.labels(),
                    profile: s.profile.clone(),
                })
                .collect(),
            edges: self
                .edges
                .iter()
                .map(|&(f, c, t)| (f, c.bits(), t))
                .collect(),
            start: self.start.clone(),
            accept_even: self.accept_even.clone(),
            accept_odd: self.accept_odd.clone(),
        }
    }

    pub fn from_json(json: &AutomatonJson) -> Result<Automaton, AutomatonError> {
        let bad = |msg: String| AutomatonError::Malformed(msg);
        let m = json.m;
        let column = |bits: u32| Column::new(m, bits).map_err(|e| bad(e.to_string()));
        let states = json
            .states
            .iter()
            .map(|s| {
                if s.column.len() != m || s.profile.ids().len() != m {
                    return Err(bad("state width differs from m".into()));
                }
                Ok(State {
                    column: Column::from_labels(&s.column).map_err(|e| bad(e.to_string()))?,
                    profile: s.profile.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let n = states.len();
        let check = |i: usize| {
            if i < n {
                Ok(i)
            } else {
                Err(bad(format!("state index {i} out of range")))
            }
        };
        let edges = json
            .edges
            .iter()
            .map(|&(f, c, t)| Ok((check(f)?, column(c)?, check(t)?)))
            .collect::<Result<Vec<_>, AutomatonError>>()?;
        let indices = |v: &[usize]| v.iter().map(|&i| check(i)).collect::<Result<Vec<_>, _>>();
        Ok(Automaton {
            m,
            mode: json.mode,
            divisor: json.divisor,
            alphabet: json
                .alphabet
                .iter()
                .map(|&b| column(b))
                .collect::<Result<_, _>>()?,
            states,
            start: indices(&json.start)?,
            edges,
            accept_even: indices(&json.accept_even)?,
            accept_odd: indices(&json.accept_odd)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub column: Vec<u8>,
    pub profile: ConnectivityProfile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutomatonJson {
    pub m: usize,
    pub mode: Mode,
    pub divisor: u32,
    pub alphabet: Vec<u32>,
    pub states: Vec<StateJson>,
    pub edges: Vec<(usize, u32, usize)>,
    pub start: Vec<usize>,
    pub accept_even: Vec<usize>,
    pub accept_odd: Vec<usize>,
}

/// 0/1 adjacency matrix of an automaton with its boundary vectors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferMatrix {
    pub order: usize,
    pub entries: Vec<Vec<u8>>,
    pub start: Vec<u8>,
    pub accept_even: Vec<u8>,
    pub accept_odd: Vec<u8>,
    pub divisor: u32,
}

/// `det(xI - A)` over the integers.
pub fn characteristic_polynomial<R: AsRef<[u8]>>(rows: &[R]) -> Poly {
    let n = rows.len();
    let matrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = -(rows[i].as_ref()[j] as i64);
                    if i == j {
                        Poly::from_ints(&[a, 1])
                    } else {
                        Poly::from_ints(&[a])
                    }
                })
                .collect()
        })
        .collect();
    determinant(matrix)
}

/// A permutation `p` with `a[p[i]][p[j]] == b[i][j]` for all `i, j`, if one
/// exists.
pub fn find_permutation<R: AsRef<[u8]>, S: AsRef<[u8]>>(a: &[R], b: &[S]) -> Option<Vec<usize>> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    let degree = |m: &dyn Fn(usize, usize) -> u8, i: usize| -> (u32, u32, u8) {
        let out: u32 = (0..n).map(|j| m(i, j) as u32).sum();
        let inc: u32 = (0..n).map(|j| m(j, i) as u32).sum();
        (out, inc, m(i, i))
    };
    let ea = |i: usize, j: usize| a[i].as_ref()[j];
    let eb = |i: usize, j: usize| b[i].as_ref()[j];
    let sig_a: Vec<_> = (0..n).map(|i| degree(&ea, i)).collect();
    let sig_b: Vec<_> = (0..n).map(|i| degree(&eb, i)).collect();

    fn extend(
        k: usize,
        n: usize,
        perm: &mut Vec<usize>,
        used: &mut [bool],
        ok: &dyn Fn(&[usize], usize, usize) -> bool,
    ) -> bool {
        if k == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || !ok(perm, k, cand) {
                continue;
            }
            used[cand] = true;
            perm.push(cand);
            if extend(k + 1, n, perm, used, ok) {
                return true;
            }
            perm.pop();
            used[cand] = false;
        }
        false
    }

    let ok = |perm: &[usize], k: usize, cand: usize| -> bool {
        if sig_a[cand] != sig_b[k] {
            return false;
        }
        perm.iter()
            .enumerate()
            .all(|(i, &pi)| ea(pi, cand) == eb(i, k) && ea(cand, pi) == eb(k, i))
    };
    let mut perm = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, n, &mut perm, &mut used, &ok).then_some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn col(labels: &[u8]) -> Column {
        Column::from_labels(labels).unwrap()
    }

    #[test]
    fn documented_edges() {
        let s = State::start(col(&[1, 1, 0, 0]));
        assert!(matches!(step(&s, col(&[1, 1, 0, 0])), Transition::Live(_)));
        assert_eq!(step(&s, col(&[0, 0, 1, 0])), Transition::Dead);
        assert!(matches!(step(&s, col(&[1, 0, 0, 0])), Transition::Live(_)));
        assert!(matches!(step(&s, col(&[1, 1, 1, 0])), Transition::Live(_)));

        let s = State::start(col(&[1, 0, 0, 0]));
        let Transition::Live(t) = step(&s, col(&[1, 0, 1, 0])) else {
            panic!("expected a live state");
        };
        let c = t.column;
        assert_eq!(t.profile.partition(c, 1), vec![vec![0], vec![2]]);
        assert_eq!(t.profile.partition(c, 0), vec![vec![1, 3]]);
    }

    #[test]
    fn start_state_acceptance() {
        assert_eq!(acceptance(&State::start(col(&[0, 0, 0, 0]))), (true, false));
        assert_eq!(acceptance(&State::start(col(&[1, 1, 0, 0]))), (true, true));
        assert_eq!(
            acceptance(&State::start(col(&[1, 0, 1, 0]))),
            (false, false)
        );
    }

    #[test]
    fn canonical_rows_only() {
        assert_eq!(build_canonical(3), Err(AutomatonError::CanonicalRows(3)));
        assert_eq!(build_general(6), Err(AutomatonError::GeneralRows(6)));
    }

    #[test]
    fn state_cap_is_enforced() {
        assert_eq!(
            build_general_with_report(4, 5).map(|_| ()),
            Err(AutomatonError::StateCap(5))
        );
    }

    #[test]
    fn run_rejects_foreign_symbols() {
        let a = build_canonical(4).unwrap();
        assert!(matches!(
            a.run(&[col(&[0, 0, 0, 1])]),
            Err(AutomatonError::Symbol(_))
        ));
        assert_eq!(a.run(&[]).unwrap(), None);
        // Not a start column.
        assert_eq!(a.run(&[col(&[1, 1, 1, 0])]).unwrap(), None);
    }

    #[test]
    fn permutation_search() {
        let a = vec![vec![0u8, 1, 0], vec![0, 0, 1], vec![1, 0, 1]];
        // Relabel by p = [2, 0, 1]: b[i][j] = a[p[i]][p[j]].
        let p = [2usize, 0, 1];
        let b: Vec<Vec<u8>> = (0..3)
            .map(|i| (0..3).map(|j| a[p[i]][p[j]]).collect())
            .collect();
        let found = find_permutation(&a, &b).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a[found[i]][found[j]], b[i][j]);
            }
        }
        let c = vec![vec![1u8, 1, 1], vec![0, 0, 0], vec![0, 0, 0]];
        assert!(find_permutation(&a, &c).is_none());
    }

    #[test]
    fn char_poly_of_small_matrix() {
        // [[1,1],[1,0]] -> x^2 - x - 1
        let p = characteristic_polynomial(&[[1u8, 1], [1, 0]]);
        assert_eq!(p, Poly::from_ints(&[-1, -1, 1]));
    }
}
