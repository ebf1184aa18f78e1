#![no_main]

use ascent::table::DistTable;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(t) = DistTable::from_json(text) {
        assert_eq!(DistTable::from_json(&t.to_json()).expect("rendered table reparses"), t);
    }
});
