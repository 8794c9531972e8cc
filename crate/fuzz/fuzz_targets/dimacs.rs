#![no_main]

use domblocker::cnf::parse_dimacs;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cnf) = parse_dimacs(text) {
        let again = parse_dimacs(&cnf.to_dimacs(None)).expect("emitted DIMACS parses");
        assert_eq!(cnf, again);
        let _ = cnf.clone().into_1in3().validate();
        let _ = cnf.into_3sat().validate();
    }
});
