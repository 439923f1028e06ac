use entwined::entwine::Entwining;
use entwined::exactlin::{Field, PrimeField, Rationals};
use entwined::zoo::{build_example, random_bimodule};
use entwined::Error;
use entwined_cli::format::{parse_structure, AnyStructure, Structure, StructureDoc};
use entwined_cli::fuzz::{case_structure, random_case};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn full_structure<F: Field>(name: &str, f: F, seed: u64) -> Structure<F> {
    let ca = build_example(name, f.clone()).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Structure {
        field: f,
        algebra: Some(ca.algebra().clone()),
        coalgebra: Some(ca.coalgebra().clone()),
        coaction: Some(ca.coaction().clone()),
        entwining: Some(Entwining::flip(ca.algebra().clone(), ca.coalgebra().clone()).psi().clone()),
        bimodule: Some(random_bimodule(ca.algebra(), &mut rng)),
    }
}

#[test]
fn zoo_round_trip_over_q() {
    for name in ["c4-c2", "s3-a3", "sweedler-h4", "dual-numbers", "non-galois"] {
        let s = full_structure(name, Rationals, 3);
        let text = s.emit();
        let AnyStructure::Rationals(back) = parse_structure(&text).unwrap() else {
            panic!("field changed")
        };
        assert_eq!(back, s, "{name}");
        assert_eq!(back.emit(), text);
    }
}

#[test]
fn zoo_round_trip_over_f2() {
    let f2 = PrimeField::new(2).unwrap();
    for name in ["c4-c2-f2", "dual-numbers-f2"] {
        let s = full_structure(name, f2, 5);
        let text = s.emit();
        assert_eq!(parse_structure(&text).unwrap(), AnyStructure::Prime(s), "{name}");
    }
}

#[test]
fn composite_modulus_rejected() {
    let e = parse_structure(r#"{"field": {"kind": "prime-field", "p": 4}}"#).unwrap_err();
    assert!(matches!(&e, Error::Parse(m) if m.contains("field.p")), "{e}");
}

#[test]
fn bad_coaction_shape_names_the_key() {
    let s = full_structure("c4-c2", Rationals, 1);
    let mut doc = s.to_doc();
    doc.coaction.as_mut().unwrap()[3].pop();
    let e = Structure::from_doc(&doc, Rationals, None).unwrap_err();
    let msg = e.to_string();
    assert!(msg.contains("coaction") && msg.contains("row 3"), "{msg}");
}

#[test]
fn bad_scalar_names_its_position() {
    let s = full_structure("dual-numbers", Rationals, 1);
    let mut doc = s.to_doc();
    doc.algebra.as_mut().unwrap().mult[1][0][1] = "one".into();
    let msg = Structure::from_doc(&doc, Rationals, None).unwrap_err().to_string();
    assert!(msg.contains("algebra.mult[1][0][1]"), "{msg}");
}

#[test]
fn unknown_keys_and_missing_dependencies_rejected() {
    assert!(StructureDoc::parse(r#"{"field": {"kind": "rationals"}, "extra": 1}"#).is_err());
    let s = full_structure("dual-numbers", Rationals, 1);
    let mut doc = s.to_doc();
    doc.coalgebra = None;
    let msg = Structure::from_doc(&doc, Rationals, None).unwrap_err().to_string();
    assert!(msg.contains("coalgebra"), "{msg}");
}

#[test]
fn bimodule_only_file_uses_fallback_algebra() {
    let s = full_structure("c4-c2", Rationals, 9);
    let doc = StructureDoc { algebra: None, coalgebra: None, coaction: None, entwining: None, ..s.to_doc() };
    let back = Structure::from_doc(&doc, Rationals, s.algebra.as_ref()).unwrap();
    assert_eq!(back.bimodule, s.bimodule);
    assert!(Structure::from_doc(&doc, Rationals, None).is_err());
}

#[test]
fn field_mismatch_rejected() {
    let text = full_structure("c4-c2", Rationals, 1).emit();
    let doc = StructureDoc::parse(&text).unwrap();
    assert!(Structure::from_doc(&doc, PrimeField::new(3).unwrap(), None).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Random fuzz cases (rebased structures with arbitrary rationals)
    /// survive emit → parse → emit unchanged.
    #[test]
    fn random_structures_round_trip(seed in any::<u64>(), dim_a in 1usize..=3, dim_c in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let case = random_case(&Rationals, dim_a, dim_c, &mut rng);
        let text = case_structure(&Rationals, &case);
        let parsed = parse_structure(&text).unwrap();
        let AnyStructure::Rationals(s) = &parsed else { panic!() };
        prop_assert_eq!(s.emit(), text);
    }
}
