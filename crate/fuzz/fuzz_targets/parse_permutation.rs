#![no_main]

use libfuzzer_sys::fuzz_target;
use permdom::parse_permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = parse_permutation(text) {
        assert_eq!(parse_permutation(&p.to_string()).unwrap(), p);
        assert_eq!(p.inverse().inverse(), p);
        if p.len() <= 12 {
            let g = permdom::build_graph(&p).unwrap();
            assert_eq!(g.order(), p.len());
        }
    }
});
