#![no_main]

//! Input: a group spec, a newline, then an element literal.

use libfuzzer_sys::fuzz_target;
use ordcone_core::parse::{parse_element, parse_group};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Some((spec, lit)) = s.split_once('\n') else { return };
    let Ok(g) = parse_group(spec) else { return };
    if let Ok(x) = parse_element(&g, lit) {
        assert!(g.contains(&x));
        assert_eq!(parse_element(&g, &x.to_string()).unwrap(), x);
    }
});
