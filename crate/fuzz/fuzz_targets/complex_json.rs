#![no_main]

use libfuzzer_sys::fuzz_target;
use wlpkit::io::{parse_complex, write_complex_json, write_facet_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(complex) = parse_complex(text) else { return };
    assert_eq!(parse_complex(&write_complex_json(&complex)).expect("json parses"), complex);
    assert_eq!(parse_complex(&write_facet_list(&complex)).expect("facet list parses"), complex);
});
