#![no_main]

use libfuzzer_sys::fuzz_target;
use ordcone_core::parse::parse_group;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_group(s) {
        assert_eq!(parse_group(&g.to_string()).unwrap(), g);
    }
});
