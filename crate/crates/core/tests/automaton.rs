use graham::automaton::{
    acceptance, build_canonical, build_general, step, Automaton, AutomatonJson, State, Transition,
};
use graham::board::{complete_board, Column};
use graham::series::{resolvent_sum, series_terms};
use graham::verify::word_oracle_sweep;
use proptest::prelude::*;

#[test]
fn json_round_trip_preserves_machine() {
    for a in [build_canonical(4).unwrap(), build_general(3).unwrap()] {
        let text = serde_json::to_string(&a.to_json()).unwrap();
        let back =
            Automaton::from_json(&serde_json::from_str::<AutomatonJson>(&text).unwrap()).unwrap();
        assert_eq!(back, a);
        assert_eq!(back.to_dot(), a.to_dot());
    }
}

#[test]
fn dot_marks_every_state() {
    let a = build_canonical(4).unwrap();
    let dot = a.to_dot();
    assert!(dot.starts_with("digraph"));
    for i in 0..a.state_count() {
        assert!(
            dot.contains(&format!("s{i} ")) || dot.contains(&format!("s{i}[")),
            "s{i}"
        );
    }
    assert_eq!(dot.matches("shape=box").count(), a.start.len());
}

#[test]
fn minimization_keeps_the_series() {
    for a in [build_canonical(4).unwrap(), build_general(4).unwrap()] {
        let min = a.minimized();
        assert!(min.state_count() <= a.state_count());
        let t = |x: &Automaton| {
            series_terms(&resolvent_sum(&x.transfer_matrix()).unwrap(), 24).unwrap()
        };
        assert_eq!(t(&min), t(&a));
    }
}

#[test]
fn canonical_words_up_to_five_columns_agree_with_boards() {
    let a = build_canonical(4).unwrap();
    let sweep = word_oracle_sweep(&a, 5);
    assert!(sweep.mismatches.is_empty(), "{:?}", sweep.mismatches);
    assert_eq!(sweep.words, (1..=5).map(|k| 8u64.pow(k)).sum::<u64>());
}

#[test]
fn five_row_general_machine_short_words() {
    let a = build_general(5).unwrap();
    let sweep = word_oracle_sweep(&a, 3);
    assert!(sweep.mismatches.is_empty(), "{:?}", sweep.mismatches);
}

#[test]
fn rejected_symbols_and_sizes() {
    let a = build_canonical(4).unwrap();
    let bottom = Column::from_labels(&[0, 0, 0, 1]).unwrap();
    assert!(a.run(&[bottom]).is_err());
    assert!(build_canonical(3).is_err());
    assert!(build_general(0).is_err());
}

fn column4() -> impl Strategy<Value = Column> {
    (0u32..16).prop_map(|b| Column::new(4, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3000))]

    /// Stepping by hand and reading off acceptance matches the board.
    #[test]
    fn step_then_accept_matches_board(word in proptest::collection::vec(column4(), 1..9)) {
        let mut state = Some(State::start(word[0]));
        for &c in &word[1..] {
            state = match step(state.as_ref().unwrap(), c) {
                Transition::Live(s) => Some(s),
                Transition::Dead => None,
            };
            if state.is_none() { break; }
        }
        let k = word.len();
        let even = complete_board(&word, 2 * k).unwrap().is_graham();
        let odd = word[k - 1].is_self_revcomp()
            && complete_board(&word, 2 * k - 1).unwrap().is_graham();
        let got = state.map_or((false, false), |s| acceptance(&s));
        prop_assert_eq!(got, (even, odd));
    }
}
