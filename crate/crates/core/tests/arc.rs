use std::collections::BTreeSet;

use asw_core::arc::*;
use asw_core::Field;
use proptest::prelude::*;

const Q: Field = Field::Rational;

fn pairs(arcs: &[Arc]) -> BTreeSet<(usize, usize)> {
    arcs.iter().map(|a| (a.a.min(a.b), a.a.max(a.b))).collect()
}

#[test]
fn swinging_n4_pairs() {
    let arcs = swinging_arcs(4).unwrap();
    assert_eq!(pairs(&arcs), BTreeSet::from([(1, 2), (1, 3), (0, 3), (0, 4)]));
    let c = swinging_collection(4, 2).unwrap();
    assert!(c.max_endpoints() <= 2);
    assert!(c.is_tame());
}

#[test]
fn fan_n3_shares_component_zero() {
    let arcs = fan_arcs(3).unwrap();
    assert_eq!(pairs(&arcs), BTreeSet::from([(0, 1), (0, 2), (0, 3)]));
    let mut slots: Vec<usize> = arcs.iter().filter_map(|a| a.slot_in(0)).collect();
    slots.sort_unstable();
    assert_eq!(slots, vec![1, 2, 3]);
    assert!(!fan_collection(3, 2).unwrap().is_tame());
}

#[test]
fn generation() {
    for n in 1..=8 {
        assert!(generation_check(n, &swinging_arcs(n).unwrap()).unwrap(), "swinging n={n}");
        assert!(generation_check(n, &fan_arcs(n).unwrap()).unwrap(), "fan n={n}");
    }
    // One arc leaves a face with three stops.
    let single = place_arcs(2, &[(0, 1)]).unwrap();
    assert!(!generation_check(2, &single).unwrap());
}

#[test]
fn crossing_arcs_rejected() {
    assert!(place_arcs(3, &[(0, 2), (1, 3)]).is_err());
}

#[test]
fn self_hom_is_identity() {
    let c = swinging_collection(4, 2).unwrap();
    for x in 0..c.objects.len() {
        let h = c.hom_basis(x, x);
        assert_eq!(h.len(), 1);
        assert!(h[0].is_identity());
        assert_eq!(h[0].degree(), 0);
        assert_eq!(c.hom_cohomology(x, x, Q).unwrap().dims, vec![(0, 1)]);
    }
}

#[test]
fn compose_examples() {
    // Fan, d = 1: all arcs on component 0, slots 1 < 2 < 3; chords go to lower slots.
    let c = fan_collection(3, 1).unwrap();
    let slot = |k: usize| c.arcs[c.objects[k][0]].slot_in(0).unwrap();
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by_key(|&k| std::cmp::Reverse(slot(k)));
    let (x, y, z) = (order[0], order[1], order[2]);
    let f = c.hom_basis(x, y);
    let g = c.hom_basis(y, z);
    assert_eq!((f.len(), g.len()), (1, 1));
    let gf = c.compose(&g[0], &f[0]).unwrap().expect("chords concatenate");
    assert_eq!(c.hom_basis(x, z), vec![gf]);
    assert!(c.hom_basis(z, x).is_empty());
    assert!(c.compose(&f[0], &g[0]).is_err());
}

#[test]
fn end_algebra_requires_tameness() {
    let c = fan_collection(3, 2).unwrap();
    assert!(matches!(end_algebra_of_collection(&c, Q), Err(asw_core::Error::NotTame(_))));
}

#[test]
fn triangle_small_case() {
    let t = auroux_triangle(2, 0, 1, 2, &[], Q).unwrap();
    assert!(t.passed);
    assert_eq!(t.objects, ["01".to_string(), "02".into(), "12".into()]);
    assert!(auroux_quasi_iso(2, 0, 1, 2, &[], Q).unwrap());
    assert!(auroux_triangle(2, 1, 0, 2, &[], Q).is_err());
}

#[test]
fn stop_free_face_grades_triangle() {
    let arcs = place_arcs(2, &[(0, 1), (0, 2), (1, 2)]).unwrap();
    let c = Collection { n: 2, d: 1, arcs, objects: vec![vec![0], vec![1], vec![2]], names: vec![] };
    let e = graded_end_algebra(&c, Q).unwrap();
    let total: i64 = e.basis.iter().map(|b| b.degree).sum();
    assert_eq!(total, 1);
    assert!(end_algebra_of_collection(&c, Q).is_err());
}

fn arb_case() -> impl Strategy<Value = (usize, usize)> {
    (2usize..=5).prop_flat_map(|n| (Just(n), 1..=2usize.min(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn composition_associative((n, d) in arb_case(), seed in any::<u64>()) {
        let c = fan_collection(n, d).unwrap();
        let k = c.objects.len();
        let pick = |s: u64| (s % k as u64) as usize;
        let (a, b, x, y) = (pick(seed), pick(seed >> 8), pick(seed >> 16), pick(seed >> 24));
        for f in c.hom_basis(a, b) {
            for g in c.hom_basis(b, x) {
                for h in c.hom_basis(x, y) {
                    let left = c.compose(&g, &f).unwrap().and_then(|gf| c.compose(&h, &gf).unwrap());
                    let right = c.compose(&h, &g).unwrap().and_then(|hg| c.compose(&hg, &f).unwrap());
                    prop_assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn crossings_add_under_composition((n, d) in arb_case(), seed in any::<u64>()) {
        let c = fan_collection(n, d).unwrap();
        let k = c.objects.len();
        let (a, b, x) = ((seed % k as u64) as usize, ((seed >> 8) % k as u64) as usize, ((seed >> 16) % k as u64) as usize);
        for f in c.hom_basis(a, b) {
            for g in c.hom_basis(b, x) {
                if let Some(p) = c.compose(&g, &f).unwrap() {
                    prop_assert_eq!(p.cross, f.cross + g.cross);
                    prop_assert_eq!(p.degree(), f.degree() + g.degree());
                }
            }
        }
    }
}
