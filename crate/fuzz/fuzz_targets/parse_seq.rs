#![no_main]

use ascent::Seq;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(s) = text.parse::<Seq>() {
        let again: Seq = s.to_string().parse().expect("rendered sequence reparses");
        assert_eq!(again, s);
    }
});
