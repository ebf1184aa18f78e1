use ascent::decomp::DecompMap;
use ascent::lemmas::{lemma_suite, verify_map};

#[test]
fn every_map_meets_its_contract_through_seven() {
    for map in DecompMap::ALL {
        for n in 1..=7 {
            if let Err(f) = verify_map(map, n) {
                panic!("{f}");
            }
        }
    }
}

#[test]
fn suite_reports_each_map_and_length() {
    let rows = lemma_suite(5).unwrap_or_else(|f| panic!("{f}"));
    assert_eq!(rows.len(), DecompMap::ALL.len() * 5);
    assert!(rows.iter().all(|(_, _, t)| t.image <= t.domain));
}
