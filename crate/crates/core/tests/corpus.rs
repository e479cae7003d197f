//! The JSON corpus under `fixtures/` must match the in-code fixtures.
//!
//! Run with `LEIBNIZ_KIT_BLESS=1` to rewrite the files.

use std::path::{Path, PathBuf};

use leibniz_kit::cohomology::adjoint_rep;
use leibniz_kit::{fixtures, io, Algebra, Graph, Rational, Rep};
use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

enum Doc {
    Algebra(Algebra),
    Rep { over: &'static str, rep: Rep },
    Graph(Graph),
}

fn corpus() -> Vec<(String, Doc)> {
    let mut docs = Vec::new();
    for (name, g) in fixtures::positive_algebras::<Rational>() {
        docs.push((format!("{name}.json"), Doc::Algebra(g)));
    }
    for (name, g) in fixtures::negative_algebras::<Rational>() {
        docs.push((format!("negative/{name}.json"), Doc::Algebra(g)));
    }
    for (name, g) in [
        ("L2", fixtures::l2::<Rational>()),
        ("heis3", fixtures::heis3()),
        ("sl2", fixtures::sl2()),
    ] {
        docs.push((
            format!("reps/{name}_adjoint.json"),
            Doc::Rep {
                over: name,
                rep: adjoint_rep(&g),
            },
        ));
    }
    docs.push((
        "negative/sl2_flipped_adjoint.rep.json".into(),
        Doc::Rep {
            over: "sl2",
            rep: fixtures::sl2_flipped_adjoint(),
        },
    ));
    docs.push((
        "negative/L2_bad_right_action.rep.json".into(),
        Doc::Rep {
            over: "L2",
            rep: fixtures::l2_bad_right_action(),
        },
    ));
    for (name, phi) in fixtures::positive_graph_maps::<Rational>() {
        docs.push((format!("graphs/{name}.json"), Doc::Graph(phi)));
    }
    docs.push(("negative/scalar_line.graph.json".into(), Doc::Graph(fixtures::scalar_graph_map())));
    docs
}

fn encode(doc: &Doc) -> Value {
    match doc {
        Doc::Algebra(g) => io::algebra_to_json(g),
        Doc::Rep { rep, .. } => io::representation_to_json(rep),
        Doc::Graph(phi) => io::graph_map_to_json(phi),
    }
}

fn algebra_named(name: &str) -> Algebra {
    let text = std::fs::read_to_string(root().join(format!("{name}.json"))).unwrap();
    io::algebra_from_json(&text).unwrap()
}

#[test]
fn corpus_matches_fixtures() {
    let bless = std::env::var_os("LEIBNIZ_KIT_BLESS").is_some();
    for (file, doc) in corpus() {
        let path = root().join(&file);
        let expected = format!("{}\n", io::to_text(&encode(&doc)));
        if bless {
            std::fs::create_dir_all(path.parent().unwrap()).unwrap();
            std::fs::write(&path, &expected).unwrap();
            continue;
        }
        let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{file}: {e}"));
        assert_eq!(text, expected, "{file} is stale; rerun with LEIBNIZ_KIT_BLESS=1");
        match doc {
            Doc::Algebra(g) => assert_eq!(io::algebra_from_json(&text).unwrap(), g, "{file}"),
            Doc::Rep { over, rep } => {
                let g = algebra_named(over);
                assert_eq!(io::representation_from_json(&g, &text).unwrap(), rep, "{file}");
            }
            Doc::Graph(phi) => assert_eq!(io::graph_map_from_json(&text).unwrap(), phi, "{file}"),
        }
    }
}

#[test]
fn corpus_polarity() {
    for (name, _) in fixtures::positive_algebras::<Rational>() {
        assert!(algebra_named(name).is_leibniz(), "{name}");
    }
    for (name, _) in fixtures::negative_algebras::<Rational>() {
        assert!(!algebra_named(&format!("negative/{name}")).is_leibniz(), "{name}");
    }
}
