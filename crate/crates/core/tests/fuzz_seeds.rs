//! Replays the checked-in fuzz corpus through the parsers so the seeds stay
//! meaningful without a nightly toolchain.

use std::fs;
use std::path::PathBuf;

use ordcone_core::bicyclic::normalize;
use ordcone_core::carrier::{Carrier, CarrierKind};
use ordcone_core::parse::{parse_cone_literal, parse_element, parse_group, parse_word};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| {
            let p = e.unwrap().path();
            let name = p.file_name().unwrap().to_string_lossy().into_owned();
            (name, String::from_utf8(fs::read(&p).unwrap()).unwrap())
        })
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

fn accepted(target: &str, ok: impl Fn(&str) -> bool) -> Vec<String> {
    seeds(target).into_iter().filter(|(_, s)| ok(s)).map(|(n, _)| n).collect()
}

#[test]
fn group_spec_seeds() {
    let ok = accepted("group_spec", |s| match parse_group(s) {
        Ok(g) => parse_group(&g.to_string()).unwrap() == g,
        Err(_) => false,
    });
    assert_eq!(ok, ["lex", "nested", "q", "z"]);
}

#[test]
fn element_literal_seeds() {
    let ok = accepted("element_literal", |s| {
        let (spec, lit) = s.split_once('\n').unwrap();
        let g = parse_group(spec).unwrap();
        match parse_element(&g, lit) {
            Ok(x) => parse_element(&g, &x.to_string()).unwrap() == x,
            Err(_) => false,
        }
    });
    assert_eq!(ok, ["int", "negden", "pair", "rat"]);
}

#[test]
fn cone_literal_seeds() {
    let ok = accepted("cone_literal", |s| {
        let (spec, lit) = s.split_once('\n').unwrap();
        let g = parse_group(spec).unwrap();
        let Ok(l) = parse_cone_literal(&g, lit) else { return false };
        CarrierKind::ALL.iter().any(|&k| {
            Carrier::new(g.clone(), k).is_ok_and(|c| c.element(l.g.clone(), l.h.clone(), l.tag).is_ok())
        })
    });
    // `o[0;0]` over Z parses but no carrier over Z admits open cones.
    assert_eq!(ok, ["closed", "lex", "open"]);
}

#[test]
fn word_literal_seeds() {
    let ok = accepted("word_literal", |s| match parse_word(s) {
        Ok(w) => {
            let nf = normalize(&w);
            normalize(&parse_word(&nf.to_string()).unwrap()) == nf
        }
        Err(_) => false,
    });
    assert_eq!(ok, ["display", "powers", "pq", "unit"]);
}
