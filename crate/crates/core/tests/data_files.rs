use std::path::PathBuf;

use nlab_core::ainf::{examples, CyclicAInf};
use nlab_core::quiver::Quiver;
use nlab_core::verify::standard_quivers;

fn data(rel: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", rel].iter().collect()
}

#[test]
fn ainf_files_match_the_builtin_examples() {
    let builtin = examples::all()
        .into_iter()
        .chain([("nonassociative", examples::nonassociative()), ("noninvariant", examples::noninvariant())]);
    for (name, d) in builtin {
        let loaded = CyclicAInf::load(&data(&format!("ainf/{name}.json"))).unwrap();
        assert_eq!(loaded.to_json_struct(), d.to_json_struct(), "{name}");
    }
}

#[test]
fn quiver_files_match_the_standard_quivers() {
    for (name, q) in standard_quivers() {
        let file = if name == "one-loop" { "loop" } else { name };
        assert_eq!(Quiver::load(&data(&format!("quivers/{file}.json"))).unwrap(), q, "{name}");
    }
}
