#![no_main]

use libfuzzer_sys::fuzz_target;
use permdom::counting::efficient_dom_count;
use permdom::parse_vertex_list;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(list) = parse_vertex_list(text) {
        assert!(list.iter().all(|&v| (1..=64).contains(&v)));
        if let Some(&max) = list.iter().max() {
            if max <= 12 && list.len() <= 6 {
                let _ = efficient_dom_count(max, &list);
            }
        }
    }
});
