#![no_main]

use domblocker::graph::{emit_edge_list_json, parse_edge_list_json};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = parse_edge_list_json(text) {
        let h = parse_edge_list_json(&emit_edge_list_json(&g)).expect("emitted JSON parses");
        assert_eq!(g, h);
    }
});
