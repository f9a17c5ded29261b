//! The shipped character-table assets must stay byte-identical to the
//! deterministic constructions, carry the published values, and satisfy the
//! character law.

use qsh_cli::charfile::{read_char_file, write_char_file, CharData};
use qsh_cli::schemes::{ems_t_character, scheme_character};
use qsh_core::{check_character, forced_partner, published_value, SchemeName, Word};

fn asset(name: &str) -> String {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/assets");
    std::fs::read_to_string(format!("{path}/{name}")).expect("asset exists")
}

#[test]
fn assets_match_their_constructions() {
    for (file, name) in [
        ("gz.char", SchemeName::Gz),
        ("ems.char", SchemeName::Ems),
        ("mp.char", SchemeName::Mp),
    ] {
        assert_eq!(
            asset(file),
            write_char_file(&scheme_character(name)),
            "{file} drifted from its construction"
        );
    }
    assert_eq!(asset("ems_t.char"), write_char_file(&ems_t_character()));
}

#[test]
fn assets_load_as_characters_with_published_values() {
    let w13 = Word::new(vec![-1, -3]);
    let w31 = Word::new(vec![-3, -1]);
    for (file, name) in [
        ("gz.char", SchemeName::Gz),
        ("ems.char", SchemeName::Ems),
        ("mp.char", SchemeName::Mp),
    ] {
        let CharData::Q(map) = read_char_file(&asset(file)).unwrap() else {
            panic!("{file} must be over Q");
        };
        assert!(check_character(&map), "{file} violates the character law");
        let v = map.value(&w13).unwrap();
        assert_eq!(v, published_value(name), "{file} at {w13}");
        assert_eq!(map.value(&w31).unwrap(), forced_partner(&v), "{file} at {w31}");
    }
    let CharData::Qt(fam) = read_char_file(&asset("ems_t.char")).unwrap() else {
        panic!("ems_t.char must be over Qt");
    };
    assert!(check_character(&fam));
}
