//! Exceptional collections of complexes: mutations, twists, the cone construction of the
//! product with a type A singularity, the K-complexes and the staircase tilting objects.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{join_names, Algebra};
use crate::auslander::{j_hat, proj_vertex, unique_map};
use crate::complex::{
    cone, direct_sum, end0_algebra, hom_complex, hom_table, normalizing_shifts, zero_matrix, AMatrix, HomComplexResult, Morphism,
    ProjComplex,
};
use crate::error::{Error, Result};
use crate::iso::{find_isomorphism, IsoCertificate};
use crate::zoo::{build_a, build_g, swinging_arc, index_set, intertwines_raw, name_map, tuple_name, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Left,
    Right,
}

/// Checks `Hom•(E_j, E_i) = 0` for `j > i` and `Hom•(E_i, E_i) = k` in degree 0.
pub fn check_exceptional(alg: &Algebra, coll: &[ProjComplex]) -> Result<()> {
    let table = hom_table(alg, coll)?;
    for (i, row) in table.iter().enumerate() {
        if row[i].dims != [(0, 1)] {
            return Err(Error::NotExceptional(format!("object {i} has endomorphisms {:?}", row[i].dims)));
        }
        for (j, h) in row.iter().enumerate().take(i) {
            if h.total() != 0 {
                return Err(Error::NotExceptional(format!("Hom from object {i} to earlier object {j} is {:?}", h.dims)));
            }
        }
    }
    Ok(())
}

/// `Cone(⊕_p Hom^p(E, X) ⊗ E[-p] -> X)` with the evaluation map built from cocycle
/// representatives.
pub fn twist(alg: &Algebra, e: &ProjComplex, x: &ProjComplex) -> Result<ProjComplex> {
    let h = hom_complex(alg, e, x, false)?;
    let mut parts = Vec::new();
    let mut reps = Vec::new();
    for (p, dim) in h.result().dims {
        for i in 0..dim {
            parts.push(e.shift(-p));
            reps.push(h.representative(e, x, p, i));
        }
    }
    if parts.is_empty() {
        return Ok(x.clone());
    }
    let src = direct_sum(alg, &parts);
    // Rows of the source at degree m are the summands E[-p]^m = E^{m-p}, in order.
    let mut comps = BTreeMap::new();
    for m in src.lo..=src.hi() {
        let mut mat = zero_matrix(src.term(m).len(), x.term(m).len());
        let mut r0 = 0;
        for (part, f) in parts.iter().zip(&reps) {
            let rows = part.term(m).len();
            if let Some(c) = f.comps.get(&(m - f.degree)) {
                for (j, row) in c.iter().enumerate() {
                    for (l, v) in row.iter().enumerate() {
                        mat[r0 + j][l] = v.clone();
                    }
                }
            }
            r0 += rows;
        }
        comps.insert(m, mat);
    }
    cone(alg, &src, x, &Morphism { degree: 0, comps })
}

/// Left mutation of `F` through `E`.
pub fn left_mutation(alg: &Algebra, e: &ProjComplex, f: &ProjComplex) -> Result<ProjComplex> {
    twist(alg, e, f)
}

/// Right mutation of `E` through `F`: `Cone(E -> ⊕_p Hom^p(E, F)^* ⊗ F[p])[-1]`.
pub fn right_mutation(alg: &Algebra, e: &ProjComplex, f: &ProjComplex) -> Result<ProjComplex> {
    let h = hom_complex(alg, e, f, false)?;
    let mut parts = Vec::new();
    let mut reps = Vec::new();
    for (p, dim) in h.result().dims {
        for i in 0..dim {
            parts.push(f.shift(p));
            reps.push(h.representative(e, f, p, i));
        }
    }
    if parts.is_empty() {
        return Ok(e.clone());
    }
    let tgt = direct_sum(alg, &parts);
    let mut comps = BTreeMap::new();
    for m in e.lo..=e.hi() {
        let mut mat = zero_matrix(e.term(m).len(), tgt.term(m).len());
        let mut c0 = 0;
        for (part, g) in parts.iter().zip(&reps) {
            if let Some(c) = g.comps.get(&m) {
                for (j, row) in c.iter().enumerate() {
                    for (l, v) in row.iter().enumerate() {
                        mat[j][c0 + l] = v.clone();
                    }
                }
            }
            c0 += part.term(m).len();
        }
        comps.insert(m, mat);
    }
    Ok(cone(alg, e, &tgt, &Morphism { degree: 0, comps })?.shift(-1))
}

/// Mutation at position `k` (1-based, acting on `E_k, E_{k+1}`).
pub fn mutate(alg: &Algebra, coll: &[ProjComplex], k: usize, side: Side) -> Result<Vec<ProjComplex>> {
    if k < 1 || k >= coll.len() {
        return Err(Error::BadParameters(format!("mutation position {k} outside 1..{}", coll.len())));
    }
    check_exceptional(alg, coll)?;
    let (e, f) = (&coll[k - 1], &coll[k]);
    let (a, b) = match side {
        Side::Left => (left_mutation(alg, e, f)?, e.clone()),
        Side::Right => (f.clone(), right_mutation(alg, e, f)?),
    };
    let mut out = coll.to_vec();
    out[k - 1] = a;
    out[k] = b;
    check_exceptional(alg, &out)?;
    Ok(out)
}

/// Total Hom dimensions `dim Hom•(E_i, E_j)`.
pub fn total_dims(table: &[Vec<HomComplexResult>]) -> Vec<Vec<usize>> {
    table.iter().map(|r| r.iter().map(HomComplexResult::total).collect()).collect()
}

/// Breadth-first search over mutation words of length at most `max_len` for a collection whose
/// Hom table is that of linear `A_m`: one-dimensional from every object to every later one.
pub fn hurwitz_search(alg: &Algebra, coll: &[ProjComplex], max_len: usize) -> Result<Option<Vec<(usize, Side)>>> {
    let full = |c: &[ProjComplex]| -> Result<bool> {
        let t = total_dims(&hom_table(alg, c)?);
        Ok((0..c.len()).all(|i| (i..c.len()).all(|j| t[i][j] == 1)))
    };
    let mut layer: Vec<(Vec<(usize, Side)>, Vec<ProjComplex>)> = vec![(vec![], coll.to_vec())];
    for _ in 0..=max_len {
        let mut next = Vec::new();
        for (word, c) in &layer {
            if full(c)? {
                return Ok(Some(word.clone()));
            }
            for k in 1..c.len() {
                for side in [Side::Left, Side::Right] {
                    // Skip immediate inverses.
                    if word.last() == Some(&(k, if side == Side::Left { Side::Right } else { Side::Left })) {
                        continue;
                    }
                    let mut w = word.clone();
                    w.push((k, side));
                    next.push((w, mutate(alg, c, k, side)?));
                }
            }
        }
        layer = next;
    }
    Ok(None)
}

/// The projectives of a directed algebra ordered to form an exceptional collection: a path
/// `u -> v` gives `Hom(P_v, P_u) != 0`, so vertices reaching fewer vertices come first.
pub fn projective_collection(alg: &Algebra) -> (Vec<usize>, Vec<ProjComplex>) {
    let nv = alg.num_vertices();
    let mut order: Vec<usize> = (0..nv).collect();
    order.sort_by_key(|&u| (0..nv).filter(|&w| !alg.block(u, w).is_empty()).count());
    let objs = order.iter().map(|&v| ProjComplex::projective(alg, v)).collect();
    (order, objs)
}

/// Pair `(a, b)` with `S_j = Cone(V_a -> V_b)` for the `j`-th object built from `k = n + 1`
/// copies.
pub fn cone_pair(j: usize, n: usize) -> (usize, usize) {
    if j == 1 {
        (2, 1)
    } else if j.is_multiple_of(2) {
        ((2 * n + 4 - j) / 2, (j + 2) / 2)
    } else {
        ((2 * n + 5 - j) / 2, (j + 3) / 2)
    }
}

#[derive(Clone, Debug)]
pub struct ThomSebastiani {
    /// Algebra whose projectives model the objects `V_{i,j}`.
    pub aux: Algebra,
    pub objects: Vec<ProjComplex>,
    pub shifts: Vec<i64>,
    pub table: Vec<Vec<HomComplexResult>>,
    pub end: Algebra,
}

/// Builds the objects `S_{i,j}` (vertex `i` of `B`, `1 <= j <= k-1`) as cones between the
/// objects `V_{i,a}` whose morphisms are `Hom_B(i, i')` when `a >= a'` and zero otherwise, and
/// returns the degree 0 algebra of the shifted collection. Vertex names are `"i,j"`.
pub fn thom_sebastiani(b: &Algebra, k: usize) -> Result<ThomSebastiani> {
    if k < 2 {
        return Err(Error::BadParameters("k must be at least 2".into()));
    }
    let n = k - 1;
    let lin = build_a(b.field, k, 1)?;
    // Category algebra: block x -> y is Hom(V_x, V_y). Projectives over its opposite have
    // exactly these Hom spaces.
    let cat = b.tensor(&lin.opposite());
    let aux = cat.opposite();
    let vidx = |i: usize, a: usize| -> usize {
        aux.vertex_index(&join_names(&b.vertices[i], &a.to_string())).expect("vertex of the product")
    };
    let mut objects = Vec::new();
    let mut names = Vec::new();
    for i in 0..b.num_vertices() {
        for j in 1..=n {
            let (a, c) = cone_pair(j, n);
            let (s, t) = (vidx(i, a), vidx(i, c));
            let e = match aux.block(t, s) {
                [x] => *x,
                other => return Err(Error::BadParameters(format!("expected one morphism V_{a} -> V_{c}, found {}", other.len()))),
            };
            let one = aux.field.one();
            let x = ProjComplex::projective(&aux, s);
            let y = ProjComplex::projective(&aux, t);
            let f = Morphism { degree: 0, comps: BTreeMap::from([(0, vec![vec![vec![(e, one)]]])]) };
            objects.push(cone(&aux, &x, &y, &f)?);
            names.push(join_names(&b.vertices[i], &j.to_string()));
        }
    }
    let table = hom_table(&aux, &objects)?;
    let shifts = normalizing_shifts(&table)?;
    let shifted: Vec<ProjComplex> = objects.iter().zip(&shifts).map(|(o, s)| o.shift(*s)).collect();
    let end = end0_algebra(&aux, &shifted, names)?;
    Ok(ThomSebastiani { aux, objects: shifted, shifts, table, end })
}

/// `K_h = P_{J_ĥ} -> ... -> P_{J_1̂}` over `A_{n,d}`, with `P_{J_1̂}` in degree 0.
pub fn k_complex(alg: &Algebra, n: usize, d: usize, j: &[usize], h: usize) -> Result<ProjComplex> {
    if j.len() != d + 1 || j.windows(2).any(|w| w[0] >= w[1]) || j.iter().any(|&x| x < 2 || x > n + 1) {
        return Err(Error::BadIndices(format!("{} is not an admissible tuple in N_{{{},{}}}", tuple_name(j), n + 1, d + 1)));
    }
    if h < 2 || h > d {
        return Err(Error::BadIndices(format!("h={h} outside 2..={d}")));
    }
    let labels: Vec<Vec<usize>> = (1..=h).rev().map(|g| j_hat(j, g)).collect();
    let terms = labels.iter().map(|l| proj_vertex(alg, l, n).map(|v| vec![v])).collect::<Result<_>>()?;
    let one = alg.field.one();
    let diffs = labels
        .windows(2)
        .map(|w| unique_map(alg, &w[0], &w[1], n).map(|x| vec![vec![vec![(x, one.clone())]]]))
        .collect::<Result<Vec<AMatrix>>>()?;
    ProjComplex::new(alg, -(h as i64 - 1), terms, diffs)
}

/// Both Hom directions between `K_h` and every projective strictly between `P_{J_(h+1)̂}` and
/// `P_{J_ĥ}` in lexicographic order vanish. Returns the first offending label otherwise.
pub fn k_orthogonality(alg: &Algebra, n: usize, d: usize, j: &[usize], h: usize) -> Result<Option<Vec<usize>>> {
    let k = k_complex(alg, n, d, j, h)?;
    let (lo, hi) = (j_hat(j, h + 1), j_hat(j, h));
    for x in index_set(n, d, Kind::N)? {
        if x.entries > lo && x.entries < hi {
            let p = ProjComplex::projective(alg, proj_vertex(alg, &x.entries, n)?);
            let a = hom_complex(alg, &p, &k, false)?.result();
            let b = hom_complex(alg, &k, &p, false)?.result();
            if a.total() != 0 || b.total() != 0 {
                return Ok(Some(x.entries));
            }
        }
    }
    Ok(None)
}

/// Replaces arcs sharing an endpoint: `[i,j],[i,k] -> [i,j],[j,k]` and
/// `[j,k],[i,k] -> [j,k],[i,j]`, until all endpoints are distinct.
pub fn separate_arcs(mut arcs: Vec<(usize, usize)>) -> Vec<(usize, usize)> {
    'outer: loop {
        for x in 0..arcs.len() {
            for y in 0..arcs.len() {
                if x == y {
                    continue;
                }
                let ((a, b), (c, e)) = (arcs[x], arcs[y]);
                if a == c && b < e {
                    arcs[y] = (b, e);
                    continue 'outer;
                }
                if b == e && a > c {
                    arcs[y] = (c, a);
                    continue 'outer;
                }
            }
        }
        return arcs;
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StaircaseInfo {
    pub arcs: Vec<(usize, usize)>,
    pub separated: Vec<(usize, usize)>,
}

/// The cube complex over `A_{n,d}` for `I` in `I_{n,d}`: corner terms `P_{sort(c)}` with
/// `c_h` one of the endpoints of the `h`-th arc, zero when an index is 0 or repeated; corner
/// degree minus the number of left endpoints; differentials the unique maps with Koszul signs.
/// Arcs sharing an endpoint are first separated.
pub fn staircase_object(alg: &Algebra, n: usize, d: usize, i: &[usize]) -> Result<(ProjComplex, StaircaseInfo)> {
    if i.len() != d || i.windows(2).any(|w| w[0] >= w[1]) || i.iter().any(|&x| x < 1 || x > n) {
        return Err(Error::BadIndices(format!("{} is not in I_{{{n},{d}}}", tuple_name(i))));
    }
    let arcs: Vec<(usize, usize)> = i.iter().map(|&x| swinging_arc(n, x)).collect();
    let separated = separate_arcs(arcs.clone());
    let corner = |mask: usize| -> Option<Vec<usize>> {
        let mut c: Vec<usize> = (0..d).map(|h| if mask >> h & 1 == 1 { separated[h].1 } else { separated[h].0 }).collect();
        c.sort_unstable();
        (c[0] >= 1 && c.windows(2).all(|w| w[0] < w[1])).then_some(c)
    };
    // Degree of a mask: minus the number of left endpoints.
    let mut by_degree: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for mask in 0..(1usize << d) {
        if let Some(c) = corner(mask) {
            let deg = -((d - mask.count_ones() as usize) as i64);
            by_degree.entry(deg).or_default().push((mask, proj_vertex(alg, &c, n)?));
        }
    }
    if by_degree.is_empty() {
        return Ok((ProjComplex::zero(alg), StaircaseInfo { arcs, separated }));
    }
    let lo = *by_degree.keys().next().unwrap();
    let hi = *by_degree.keys().last().unwrap();
    let terms: Vec<Vec<(usize, usize)>> = (lo..=hi).map(|m| by_degree.get(&m).cloned().unwrap_or_default()).collect();
    let one = alg.field.one();
    let mut diffs = Vec::new();
    for w in terms.windows(2) {
        let mut mat = zero_matrix(w[0].len(), w[1].len());
        for (r, &(m0, _)) in w[0].iter().enumerate() {
            for (c, &(m1, _)) in w[1].iter().enumerate() {
                let flip = m1 & !m0;
                if m0 & !m1 != 0 || flip.count_ones() != 1 {
                    continue;
                }
                let h = flip.trailing_zeros() as usize;
                let before = (0..h).filter(|g| m0 >> g & 1 == 0).count();
                let sign = if before % 2 == 0 { one.clone() } else { -&one };
                let (x, y) = (corner(m0).unwrap(), corner(m1).unwrap());
                if intertwines_raw(&x, &y) {
                    let e = unique_map(alg, &x, &y, n)?;
                    mat[r][c] = vec![(e, sign)];
                }
            }
        }
        diffs.push(mat);
    }
    let terms = terms.into_iter().map(|t| t.into_iter().map(|(_, v)| v).collect()).collect();
    let c = ProjComplex::new(alg, lo, terms, diffs)?.trim();
    Ok((c, StaircaseInfo { arcs, separated }))
}

#[derive(Clone, Debug, Serialize)]
pub struct TiltingReport {
    pub labels: Vec<String>,
    pub shifts: Vec<i64>,
    pub concentrated: bool,
    pub unimodular: bool,
    pub end_dim: usize,
    #[serde(skip)]
    pub end: Option<Algebra>,
    pub certificate: Option<IsoCertificate>,
}

impl TiltingReport {
    pub fn passed(&self) -> bool {
        self.concentrated && self.unimodular && self.certificate.is_some()
    }
}

/// Determinant of an integer matrix, exactly.
fn int_det(rows: &[Vec<i64>]) -> crate::field::Scalar {
    let field = crate::field::Field::Rational;
    let n = rows.len();
    let mut a: Vec<Vec<crate::field::Scalar>> = rows.iter().map(|r| r.iter().map(|&x| field.int(x)).collect()).collect();
    let mut det = field.one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return field.zero();
        };
        if p != c {
            a.swap(p, c);
            det = -&det;
        }
        det = &det * &a[c][c];
        let piv = a[c][c].clone();
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = a[r][c].div(&piv);
            for k in c..n {
                let v = &a[c][k] * &f;
                a[r][k] = &a[r][k] - &v;
            }
        }
    }
    det
}

/// Checks that `T` is tilting with degree 0 algebra `G_{n,d}`: pairwise Hom concentrated in
/// one degree with consistent shifts, K-classes forming a unimodular matrix, and an
/// isomorphism certificate matching object `I` with vertex `I` of `G_{n,d}`.
pub fn tilting_check(alg: &Algebra, n: usize, d: usize, objs: &[ProjComplex], labels: &[String]) -> Result<TiltingReport> {
    let table = hom_table(alg, objs)?;
    let shifts = match normalizing_shifts(&table) {
        Ok(s) => s,
        Err(Error::NotConcentrated(_)) => {
            return Ok(TiltingReport {
                labels: labels.to_vec(),
                shifts: vec![],
                concentrated: false,
                unimodular: false,
                end_dim: 0,
                end: None,
                certificate: None,
            })
        }
        Err(e) => return Err(e),
    };
    let nv = alg.num_vertices();
    let classes: Vec<Vec<i64>> = objs.iter().map(|o| o.k_class(nv)).collect();
    let unimodular = classes.len() == nv && {
        let det = int_det(&classes);
        det.is_one() || (-&det).is_one()
    };
    let shifted: Vec<ProjComplex> = objs.iter().zip(&shifts).map(|(o, s)| o.shift(*s)).collect();
    let end = end0_algebra(alg, &shifted, labels.to_vec())?;
    let g = build_g(alg.field, n, d)?;
    let certificate = match name_map(&end, &g) {
        Ok(vmap) => match find_isomorphism(&end, &g, &vmap) {
            Ok(c) => c,
            Err(Error::VertexMapInvalid(_)) => None,
            Err(e) => return Err(e),
        },
        Err(_) => None,
    };
    Ok(TiltingReport { labels: labels.to_vec(), shifts, concentrated: true, unimodular, end_dim: end.dim(), end: Some(end), certificate })
}

/// Staircase objects for all of `I_{n,d}` (in that order) over `A_{n,d}`.
pub fn staircase_collection(alg: &Algebra, n: usize, d: usize) -> Result<(Vec<ProjComplex>, Vec<String>)> {
    let mut objs = Vec::new();
    let mut labels = Vec::new();
    for t in index_set(n, d, Kind::I)? {
        objs.push(staircase_object(alg, n, d, &t.entries)?.0);
        labels.push(t.name());
    }
    Ok((objs, labels))
}
