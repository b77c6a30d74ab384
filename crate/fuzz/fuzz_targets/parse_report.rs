#![no_main]

use aqg::format::{parse_report, write_report};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = parse_report(text) {
        assert_eq!(parse_report(&write_report(&r)).expect("written report parses"), r);
    }
});
