use gentor::catalog::{build_dihedral_infinite, build_klein_bottle, build_promislow};
use gentor::extgroup::{validate_extension, ExtensionSpec, SpecFile};

fn golden(name: &str) -> SpecFile {
    let path = format!("{}/specs/{name}.json", env!("CARGO_MANIFEST_DIR"));
    SpecFile::from_json(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn check(name: &str, built: ExtensionSpec) {
    let file = golden(name);
    assert_eq!(file, SpecFile::from_spec(&built).unwrap(), "{name}");
    let spec = file.into_spec().unwrap();
    assert!(validate_extension(&spec).is_valid());
    assert_eq!(spec, built);
}

#[test]
fn dinf_matches_builder() {
    check("dinf", build_dihedral_infinite());
}

#[test]
fn klein_matches_builder() {
    check("klein", build_klein_bottle());
}

#[test]
fn promislow_matches_builder() {
    check("promislow", build_promislow());
}

#[test]
fn unknown_fields_are_rejected() {
    let mut v: serde_json::Value = serde_json::to_value(golden("klein")).unwrap();
    v["extra"] = serde_json::json!(1);
    assert!(SpecFile::from_json(&v.to_string()).is_err());
}
