#![no_main]

use libfuzzer_sys::fuzz_target;
use ordcone_core::bicyclic::normalize;
use ordcone_core::parse::parse_word;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = parse_word(s) {
        let nf = normalize(&w);
        assert_eq!(normalize(&parse_word(&nf.to_string()).unwrap()), nf);
    }
});
