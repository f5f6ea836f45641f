use graham::board::{complete_board, Board, Column, Symmetry, MAX_ROWS};
use graham::formats;
use graham::verify::{board_identities, component_counts_union_find};
use proptest::prelude::*;

fn any_board() -> impl Strategy<Value = Board> {
    (1..=MAX_ROWS, 1usize..=9).prop_flat_map(|(m, n)| {
        proptest::collection::vec(0u32..(1 << m), n).prop_map(move |bits| {
            let cols: Vec<Column> = bits.iter().map(|&b| Column::new(m, b).unwrap()).collect();
            Board::from_columns(m, &cols).unwrap()
        })
    })
}

/// Boards that obey the complement rule, built from a random left half.
fn rule_board() -> impl Strategy<Value = Board> {
    (1..=MAX_ROWS, 1usize..=10).prop_flat_map(|(m, n)| {
        let fixed: Vec<Column> = Column::all(m).filter(|c| c.is_self_revcomp()).collect();
        let n = if n % 2 == 1 && fixed.is_empty() {
            n + 1
        } else {
            n
        };
        let free = n / 2;
        (
            proptest::collection::vec(0u32..(1 << m), free),
            0..fixed.len().max(1),
        )
            .prop_map(move |(bits, mid)| {
                let mut left: Vec<Column> =
                    bits.iter().map(|&b| Column::new(m, b).unwrap()).collect();
                if n % 2 == 1 {
                    left.push(fixed[mid]);
                }
                complete_board(&left, n).unwrap()
            })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn identities_hold_on_arbitrary_boards(b in any_board()) {
        prop_assert_eq!(board_identities(&b), Ok(()));
    }

    #[test]
    fn identities_hold_on_rule_boards(b in rule_board()) {
        prop_assert!(b.satisfies_rule());
        prop_assert_eq!(board_identities(&b), Ok(()));
    }

    #[test]
    fn flood_fill_matches_union_find(b in any_board()) {
        prop_assert_eq!(b.component_counts(), component_counts_union_find(&b));
    }

    #[test]
    fn symmetries_commute_with_complement(b in any_board()) {
        for op in Symmetry::ALL {
            prop_assert_eq!(b.transform(op).complement(), b.complement().transform(op));
        }
    }

    #[test]
    fn text_formats_round_trip(b in any_board()) {
        prop_assert_eq!(formats::from_ascii(&formats::to_ascii(&b)).unwrap(), b.clone());
        prop_assert_eq!(formats::from_svg(&formats::to_svg(&b)).unwrap(), b.clone());
        let json = serde_json::to_string(&b).unwrap();
        prop_assert_eq!(serde_json::from_str::<Board>(&json).unwrap(), b);
    }
}

#[test]
fn json_shape() {
    let b = Board::from_rows(&[[0, 1], [0, 1]]).unwrap();
    let v: serde_json::Value = serde_json::to_value(&b).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"m": 2, "n": 2, "rows": [[0, 1], [0, 1]]})
    );
    assert!(serde_json::from_str::<Board>(r#"{"m":2,"n":2,"rows":[[0,1],[0]]}"#).is_err());
}
