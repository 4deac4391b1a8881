#![no_main]

use libfuzzer_sys::fuzz_target;
use wlpkit::toric::Fan;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(fan) = Fan::parse(text) else { return };
    let again = Fan::parse(&fan.to_text()).expect("writer output parses");
    assert_eq!((again.dim, &again.rays, &again.cones), (fan.dim, &fan.rays, &fan.cones));
    let _ = fan.validate();
});
