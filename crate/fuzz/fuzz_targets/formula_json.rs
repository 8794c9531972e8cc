#![no_main]

use domblocker::cnf::{parse_formula_json, FormulaDoc};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((flavor, cnf)) = parse_formula_json(text) {
        let (f2, again) = parse_formula_json(&FormulaDoc::new(&cnf, flavor).to_json()).expect("emitted JSON parses");
        assert_eq!((flavor, cnf), (f2, again));
    }
});
