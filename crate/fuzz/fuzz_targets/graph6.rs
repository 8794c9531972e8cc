#![no_main]

use domblocker::graph::{emit_graph6, parse_graph6, parse_graph6_lines};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_graph6(text) {
        let again = emit_graph6(&g).expect("parsed graph re-encodes");
        let h = parse_graph6(&again).expect("emitted graph6 parses");
        assert_eq!(g, h);
    }
    let _ = parse_graph6_lines(text);
});
