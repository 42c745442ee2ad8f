use knotpoly::verify::{a3_of, j_sum, theorem_closed_form};
use knotpoly::{all_passed, run_all, Fault, KnotTable, VerifyConfig};
use num_bigint::BigInt;
use proptest::prelude::*;

fn small() -> VerifyConfig {
    VerifyConfig {
        max_n: 3,
        max_l: 3,
        max_r: 3,
        theorem_max_n: 3,
        random_diagrams: 20,
        knot_pairs: 10,
        ..VerifyConfig::default()
    }
}

#[test]
fn default_config_passes() {
    let reports = run_all(&VerifyConfig::default());
    let failed: Vec<_> = reports.iter().filter(|r| !r.passed).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

#[test]
fn small_config_has_many_reports() {
    let reports = run_all(&small());
    assert!(reports.len() >= 20, "{}", reports.len());
    assert!(all_passed(&reports));
}

#[test]
fn reports_sorted_and_deterministic() {
    let a = run_all(&small());
    let b = run_all(&small());
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| w[0].check_name <= w[1].check_name));
}

#[test]
fn corrupted_table_polynomial_fails() {
    let config = VerifyConfig {
        faults: vec![Fault::CorruptConway {
            name: "8_19".into(),
            conway: "1+5z^2+4z^4+z^6".into(),
        }],
        ..small()
    };
    let reports = run_all(&config);
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.check_name.as_str())
        .collect();
    assert!(failed.contains(&"table/8_19"), "{failed:?}");
    assert!(failed.contains(&"k1/table/A1"), "{failed:?}");
    // the skein route does not read the recorded polynomial
    assert!(!failed.contains(&"k1/skein/A1"), "{failed:?}");
}

#[test]
fn skewed_lemma_fails() {
    let config = VerifyConfig {
        faults: vec![Fault::SkewLemmaA(1)],
        ..small()
    };
    let reports = run_all(&config);
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| r.check_name.as_str())
        .collect();
    assert!(failed.contains(&"crosscheck/A_1^(0,0)"), "{failed:?}");
    assert!(failed.contains(&"theorem/a3_closed_form"), "{failed:?}");
}

#[test]
fn missing_table_entry_is_reported() {
    let mut table = KnotTable::default();
    let entries: Vec<_> = table
        .entries()
        .iter()
        .filter(|e| e.name != "10_148")
        .cloned()
        .collect();
    table = KnotTable::new(entries);
    let reports = run_all(&VerifyConfig { table, ..small() });
    assert!(!all_passed(&reports));
    assert!(reports
        .iter()
        .any(|r| r.check_name.starts_with("k1/") && !r.passed));
}

#[test]
fn theorem_examples() {
    assert_eq!(a3_of::<i64>(1), 0);
    assert_eq!(a3_of::<i64>(2), -2);
    assert_eq!(a3_of::<i64>(3), -2);
    assert_eq!(a3_of::<i64>(4), 4);
    assert_eq!(a3_of::<i64>(5), 20);
}

proptest! {
    #[test]
    fn closed_form_matches_sum(n in 1u64..3000) {
        let a: BigInt = a3_of(n);
        prop_assert_eq!(&a, &theorem_closed_form::<BigInt>(n));
        prop_assert_eq!(&a, &j_sum::<BigInt>(n));
    }
}
