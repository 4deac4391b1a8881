#![no_main]

use libfuzzer_sys::fuzz_target;
use wlpkit::io::{parse_facet_list, write_facet_list};
use wlpkit::vectors::f_vector;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(complex) = parse_facet_list(text) else { return };
    let written = write_facet_list(&complex);
    let again = parse_facet_list(&written).expect("writer output parses");
    assert_eq!(again, complex);
    assert_eq!(write_facet_list(&again), written);
    if complex.krull_dim() <= 8 {
        let f = f_vector(&complex);
        assert_eq!(f.len(), complex.krull_dim());
    }
});
