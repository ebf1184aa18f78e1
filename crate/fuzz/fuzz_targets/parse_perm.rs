#![no_main]

use ascent::Perm;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = text.parse::<Perm>() {
        let again: Perm = p.to_string().parse().expect("rendered permutation reparses");
        assert_eq!(again, p);
        assert_eq!(p.inverse().inverse(), p);
    }
});
