#![no_main]
use libfuzzer_sys::fuzz_target;
use smallchar::parabolic::PhiFunction;

fn parse(s: &str) -> smallchar::error::Result<PhiFunction> {
    PhiFunction::from_json(s)
}

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse(s);
    }
});
