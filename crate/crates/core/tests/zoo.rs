use asw_core::iso::find_isomorphism;
use asw_core::zoo::*;
use asw_core::Field;

const Q: Field = Field::Rational;

/// Brute-force intertwining count, independent of the library.
fn intertwining_pairs(n: usize, d: usize) -> usize {
    let t = all_increasing(n, d);
    let mut c = 0;
    for i in &t {
        for j in &t {
            let ok = (0..d).all(|h| i[h] <= j[h]) && (0..d - 1).all(|h| j[h] < i[h + 1]);
            if ok {
                c += 1;
            }
        }
    }
    c
}

fn all_increasing(n: usize, d: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == d)
        .map(|m| (1..=n).filter(|i| m >> (i - 1) & 1 == 1).collect())
        .collect()
}

#[test]
fn a42_dimension_and_cartan() {
    let a = build_a(Q, 4, 2).unwrap();
    assert_eq!(a.dim(), 15);
    assert_eq!(a.dim(), intertwining_pairs(4, 2));
    assert!(a.check_associativity());
    let c = a.cartan();
    for (u, iu) in a.vertices.iter().enumerate() {
        for (v, iv) in a.vertices.iter().enumerate() {
            let (i, j) = (parse_tuple(iu).unwrap(), parse_tuple(iv).unwrap());
            assert_eq!(c[u][v] == 1, intertwines(&IndexTuple::n(&i), &IndexTuple::n(&j)).unwrap());
        }
    }
    assert_eq!(a.gabriel().arrows.len(), 6);
}

#[test]
fn small_families() {
    assert_eq!(build_a(Q, 5, 1).unwrap().dim(), 15);
    assert_eq!(build_a(Q, 3, 3).unwrap().dim(), 1);
    assert_eq!(build_alternating(Q, 4).unwrap().dim(), 7);
    assert_eq!(build_ghat(Q, 3, 2).unwrap().dim(), 25);
    assert_eq!(build_ghat(Q, 2, 3).unwrap().dim(), 27);
    let g = build_g(Q, 4, 2).unwrap();
    assert_eq!((g.num_vertices(), g.arrows.len(), g.dim()), (6, 6, 13));
    let g4 = build_ghat(Q, 4, 2).unwrap();
    assert_eq!(g4.gabriel().arrows.len(), 24);
}

#[test]
fn quotient_matches_g42() {
    let gh = build_ghat(Q, 4, 2).unwrap();
    let c = sym_quotient(&gh, 4, 2).unwrap();
    assert_eq!(c.dim(), 13);
    let g = build_g(Q, 4, 2).unwrap();
    let vm = name_map(&c, &g).unwrap();
    assert!(find_isomorphism(&c, &g, &vm).unwrap().is_some());
    assert!(c.check_associativity());
}
