#![no_main]
use libfuzzer_sys::fuzz_target;
use smallchar::chevalley::{parse_structure_csv, ScRow};

fn parse(s: &str) -> smallchar::error::Result<Vec<ScRow>> {
    parse_structure_csv(s)
}

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse(s);
    }
});
