mod common;

use common::generator_matrix;
use packperim::model::{load, load_str, render_svg, save};

#[test]
fn load_of_save_is_identity() {
    for (name, doc) in generator_matrix() {
        let back = load_str(&save(&doc)).unwrap();
        assert_eq!(back, doc, "{name}");
    }
}

#[test]
fn files_round_trip() {
    let dir = std::env::temp_dir().join(format!("packperim-model-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (i, (_, doc)) in generator_matrix().into_iter().enumerate() {
        let path = dir.join(format!("{i}.json"));
        std::fs::write(&path, save(&doc)).unwrap();
        assert_eq!(load(&path).unwrap(), doc);
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn svg_has_one_shape_per_body_in_order() {
    for (name, doc) in generator_matrix() {
        let svg = render_svg(&doc, 400);
        let shapes: Vec<&str> = svg
            .lines()
            .filter(|l| l.contains("steelblue"))
            .collect();
        assert_eq!(shapes.len(), doc.len(), "{name}");
        for (line, body) in shapes.iter().zip(&doc.bodies) {
            let tag = if body.as_disk().is_some() { "<circle" } else { "<path" };
            assert!(line.trim_start().starts_with(tag), "{name}: {line}");
        }
    }
}
