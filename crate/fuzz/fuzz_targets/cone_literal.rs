#![no_main]

//! Input: a group spec, a newline, then an `a[g;h]` or `o[g;h]` literal.

use libfuzzer_sys::fuzz_target;
use ordcone_core::carrier::{Carrier, CarrierKind};
use ordcone_core::parse::{parse_cone_literal, parse_group};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Some((spec, lit)) = s.split_once('\n') else { return };
    let Ok(g) = parse_group(spec) else { return };
    let Ok(l) = parse_cone_literal(&g, lit) else { return };
    for kind in CarrierKind::ALL {
        let Ok(c) = Carrier::new(g.clone(), kind) else { continue };
        if let Ok(x) = c.element(l.g.clone(), l.h.clone(), l.tag) {
            let back = parse_cone_literal(&g, &x.to_string()).unwrap();
            assert_eq!((back.g, back.h), (l.g.clone(), l.h.clone()));
            let _ = x.multiply(&x.invert()).unwrap();
        }
    }
});
