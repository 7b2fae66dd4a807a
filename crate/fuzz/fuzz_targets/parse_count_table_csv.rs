#![no_main]

use libfuzzer_sys::fuzz_target;
use permdom::counting::{parse_count_table_csv, CountKind};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(table) = parse_count_table_csv(CountKind::C, text) {
        let again = parse_count_table_csv(CountKind::C, &table.to_csv()).unwrap();
        assert_eq!(again.iter().collect::<Vec<_>>(), table.iter().collect::<Vec<_>>());
    }
});
