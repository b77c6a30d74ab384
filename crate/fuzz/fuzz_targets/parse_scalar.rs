#![no_main]

use aqg::Cyclotomic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(x) = text.parse::<Cyclotomic>() {
        let back: Cyclotomic = x.to_string().parse().expect("display parses");
        assert_eq!(back, x);
    }
});
