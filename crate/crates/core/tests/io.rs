use asw_core::arc::{fan_collection, swinging_collection};
use asw_core::derived::staircase_object;
use asw_core::io::*;
use asw_core::iso::find_isomorphism;
use asw_core::rep::{injective, simple};
use asw_core::zoo::*;
use asw_core::Field;

#[test]
fn algebra_round_trip() {
    for f in [Field::Rational, Field::Prime(3)] {
        for a in [build_a(f, 4, 2).unwrap(), build_g(f, 4, 2).unwrap(), build_ghat(f, 3, 2).unwrap()] {
            let v = algebra_to_json(&a);
            let b = algebra_from_json(&v).unwrap();
            assert_eq!(a, b);
            let id: Vec<usize> = (0..a.num_vertices()).collect();
            assert!(find_isomorphism(&b, &a, &id).unwrap().is_some());
            assert_eq!(to_string(&algebra_to_json(&b)), to_string(&v));
        }
    }
}

#[test]
fn algebra_without_words_rebuilds_presentation() {
    let a = build_a(Field::Rational, 3, 2).unwrap();
    let mut v = algebra_to_json(&a);
    let o = v.as_object_mut().unwrap();
    o.remove("arrows");
    o.remove("words");
    let b = algebra_from_json(&v).unwrap();
    assert_eq!(b.arrows.len(), a.arrows.len());
    assert!(find_isomorphism(&b, &a, &(0..a.num_vertices()).collect::<Vec<_>>()).unwrap().is_some());
}

#[test]
fn schema_keys() {
    let a = build_a(Field::Prime(2), 2, 1).unwrap();
    let v = algebra_to_json(&a);
    assert_eq!(v["field"], "Fp:2");
    let keys: Vec<&String> = v["basis"][0].as_object().unwrap().keys().collect();
    assert_eq!(keys, ["id", "src", "tgt", "grade", "degree"]);
    assert!(v["mult"].as_array().unwrap().iter().all(|m| m.as_array().unwrap().len() == 4));
}

#[test]
fn rep_round_trip() {
    let a = build_a(Field::Rational, 4, 2).unwrap();
    for v in 0..a.num_vertices() {
        for m in [injective(&a, v), simple(&a, v)] {
            let back = rep_from_json(&a, &rep_to_json(&a, &m)).unwrap();
            assert_eq!(back, m);
        }
    }
    let other = build_g(Field::Rational, 4, 2).unwrap();
    assert!(rep_from_json(&other, &rep_to_json(&a, &simple(&a, 0))).is_err());
}

#[test]
fn complex_round_trip() {
    let a = build_a(Field::Rational, 4, 2).unwrap();
    for i in index_set(4, 2, Kind::I).unwrap() {
        let (c, _) = staircase_object(&a, 4, 2, &i.entries).unwrap();
        let v = complex_to_json(&a, &c);
        assert_eq!(complex_from_json(&a, &v).unwrap(), c);
    }
}

#[test]
fn collection_round_trip() {
    for c in [swinging_collection(4, 2).unwrap(), fan_collection(3, 2).unwrap()] {
        let v = collection_to_json(&c);
        assert!(v["arcs"][0].get("slotA").is_some());
        let back = collection_from_json(&v).unwrap();
        assert_eq!(collection_to_json(&back), v);
    }
}

#[test]
fn gabriel_dot_of_g42() {
    let s = gabriel_dot(&build_g(Field::Rational, 4, 2).unwrap());
    assert_eq!(s.matches("->").count(), 6);
    assert_eq!(s.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("->")).count(), 6);
}
