#![no_main]

use aqg::format::parse_algebra_file;
use aqg::Cyclotomic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(parsed) = parse_algebra_file(text) {
        // A validated file always builds.
        parsed.build::<Cyclotomic>().expect("validated file builds");
    }
});
