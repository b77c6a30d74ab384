#![no_main]

use aqg::catalog::{sweedler, functions_on_integers};
use aqg::format::parse_element;
use aqg::hopf::HopfAlgebra;
use aqg::Cyclotomic;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let finite: HopfAlgebra<Cyclotomic> = sweedler();
    let infinite: HopfAlgebra<Cyclotomic> = functions_on_integers();
    for h in [finite, infinite] {
        if let Ok(x) = parse_element(text, h.algebra().basis()) {
            let back = parse_element(&h.show(&x), h.algebra().basis()).expect("shown element parses");
            assert_eq!(back, x);
        }
    }
});
