#![no_main]

use libfuzzer_sys::fuzz_target;
use wlpkit::vectors::{check_g_conditions, is_m_sequence, parse_csv, VectorKind};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(h) = parse_csv(VectorKind::H, text) else { return };
    assert_eq!(parse_csv(VectorKind::H, &h.to_csv()).expect("writer output parses"), h);
    if h.entries.iter().all(|e| e.bits() <= 64) && h.len() <= 16 {
        let _ = check_g_conditions(&h);
        let _ = is_m_sequence(&h.entries);
    }
});
