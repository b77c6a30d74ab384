//! Replays the checked-in fuzz seeds through the same checks the fuzz targets make.

use std::fs;
use std::path::{Path, PathBuf};

use aqg::catalog::{functions_on_integers, sweedler};
use aqg::format::{parse_algebra_file, parse_element, parse_report, write_report};
use aqg::hopf::HopfAlgebra;
use aqg::Cyclotomic;

fn seeds(target: &str) -> Vec<(PathBuf, String)> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut out: Vec<_> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .filter_map(|p| fs::read(&p).ok().map(|b| (p, b)))
        .filter_map(|(p, b)| String::from_utf8(b).ok().map(|s| (p, s)))
        .collect();
    out.sort();
    assert!(!out.is_empty(), "no seeds for {target}");
    out
}

#[test]
fn algebra_file_seeds() {
    let mut ok = 0;
    for (path, text) in seeds("parse_algebra_file") {
        if let Ok(parsed) = parse_algebra_file(&text) {
            parsed
                .build::<Cyclotomic>()
                .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            ok += 1;
        }
    }
    assert!(ok >= 5);
}

#[test]
fn scalar_seeds() {
    for (path, text) in seeds("parse_scalar") {
        if let Ok(x) = text.parse::<Cyclotomic>() {
            let back: Cyclotomic = x.to_string().parse().unwrap();
            assert_eq!(back, x, "{}", path.display());
        }
    }
}

#[test]
fn element_seeds() {
    let algebras: [HopfAlgebra<Cyclotomic>; 2] = [sweedler(), functions_on_integers()];
    for (path, text) in seeds("parse_element") {
        for h in &algebras {
            if let Ok(x) = parse_element(&text, h.algebra().basis()) {
                let back = parse_element(&h.show(&x), h.algebra().basis()).unwrap();
                assert_eq!(back, x, "{}", path.display());
            }
        }
    }
}

#[test]
fn report_seeds() {
    let mut ok = 0;
    for (path, text) in seeds("parse_report") {
        if let Ok(r) = parse_report(&text) {
            assert_eq!(
                parse_report(&write_report(&r)).unwrap(),
                r,
                "{}",
                path.display()
            );
            ok += 1;
        }
    }
    assert!(ok >= 3);
}
