#![no_main]
use libfuzzer_sys::fuzz_target;

// Parsing only: the parsed command is never executed.
fn parse(s: &str) -> bool {
    let id = smallchar::claims::parse_claim_id(s).is_ok();
    smallchar_cli::parse_line(s).is_ok() || id
}

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        let _ = parse(s);
    }
});
