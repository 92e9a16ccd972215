//! The checked-in fuzz seeds parse (or fail cleanly) with the library parsers.

use std::fs;
use std::path::PathBuf;

use smallchar::chevalley::{parse_structure_csv, table_matches, Chevalley};
use smallchar::parabolic::PhiFunction;
use smallchar::rootsys::{RootSystem, SimpleType};

fn seeds(target: &str) -> Vec<(String, String)> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut v: Vec<(String, String)> = fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let p = e.unwrap().path();
            (p.file_name().unwrap().to_string_lossy().into_owned(), fs::read_to_string(&p).unwrap())
        })
        .collect();
    v.sort();
    assert!(!v.is_empty(), "{target} has no seeds");
    v
}

#[test]
fn root_system_seeds_round_trip() {
    for (name, s) in seeds("root_system_json") {
        let r = RootSystem::from_json(&s).unwrap();
        assert_eq!(r.simple_type().to_string(), name);
        assert_eq!(r.to_json(), s);
    }
}

#[test]
fn phi_seeds_parse() {
    for (_, s) in seeds("phi_json") {
        assert!(PhiFunction::from_json(&s).is_ok());
    }
}

#[test]
fn csv_seeds_match_computed_tables() {
    for (name, s) in seeds("structure_csv") {
        let rows = parse_structure_csv(&s).unwrap();
        table_matches(&Chevalley::of(&name.to_uppercase()), &rows).unwrap();
    }
}

#[test]
fn type_seeds() {
    let got: Vec<(String, bool)> =
        seeds("simple_type").into_iter().map(|(n, s)| (n, s.parse::<SimpleType>().is_ok())).collect();
    let want = [("a1", true), ("bad", false), ("e8", true), ("f4", true), ("ws", true)];
    assert_eq!(got, want.map(|(n, b)| (n.to_string(), b)));
}
