#![no_main]

use ascent::bijection::{bv_code, bv_decode};
use ascent::Seq;
use libfuzzer_sys::fuzz_target;

// Lengths are capped: decoding is a search over slice labels.
fuzz_target!(|data: &[u8]| {
    let values: Vec<u32> = data.iter().take(9).map(|&b| u32::from(b % 10)).collect();
    let s = Seq::new(values);
    if let Ok(p) = bv_decode(&s) {
        assert_eq!(bv_code(&p), s);
    }
});
