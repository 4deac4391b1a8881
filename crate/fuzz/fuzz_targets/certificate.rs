#![no_main]

use libfuzzer_sys::fuzz_target;
use wlpkit::complex::boundary_simplex;
use wlpkit::io::{parse_certificate, write_certificate};
use wlpkit::lefschetz::verify_certificate;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(cert) = parse_certificate(text) else { return };
    assert_eq!(parse_certificate(&write_certificate(&cert)).expect("writer output parses"), cert);
    // Entries are untrusted: decoding and checking must fail cleanly.
    let _ = verify_certificate(&boundary_simplex(2), &cert);
});
