//! The inductive construction of the higher Auslander algebras of type A: the modules `M_J`
//! from their staircase resolutions, and the endomorphism algebra of the cluster tilting module.

use crate::algebra::{Algebra, Sparse};
use crate::error::{Error, Result};
use crate::matrix::{rank, Matrix};
use crate::rep::{cluster_tilting_check, end_algebra, projective, quotient, right_mult_image, ClusterTiltingReport, Representation};
use crate::zoo::{binomial, build_a, index_set, name_map, rho, tuple_name, Kind};

/// `J_ĥ`: drop the `h`-th entry (1-based) and subtract one from the others.
pub fn j_hat(j: &[usize], h: usize) -> Vec<usize> {
    j.iter().enumerate().filter(|(i, _)| *i + 1 != h).map(|(_, &x)| x - 1).collect()
}

/// Vertex of `A_{n,d}` carrying the projective labelled by `I`.
pub fn proj_vertex(alg: &Algebra, i: &[usize], n: usize) -> Result<usize> {
    let name = tuple_name(&rho(i, n));
    alg.vertex_index(&name).ok_or_else(|| Error::BadIndices(format!("no projective labelled {}", tuple_name(i))))
}

/// The unique basis element of `Hom(P_X, P_Y)` in the projective labelling.
pub fn unique_map(alg: &Algebra, x: &[usize], y: &[usize], n: usize) -> Result<usize> {
    let (s, t) = (proj_vertex(alg, x, n)?, proj_vertex(alg, y, n)?);
    match alg.block(t, s) {
        [b] => Ok(*b),
        other => Err(Error::BadIndices(format!(
            "Hom(P_{}, P_{}) has dimension {}",
            tuple_name(x),
            tuple_name(y),
            other.len()
        ))),
    }
}

fn check_j(n: usize, d: usize, j: &[usize]) -> Result<()> {
    if j.len() != d + 1 || j.windows(2).any(|w| w[0] >= w[1]) || j.iter().any(|&x| x < 1 || x > n + 1) {
        return Err(Error::BadIndices(format!("{} is not in N_{{{},{}}}", tuple_name(j), n + 1, d + 1)));
    }
    Ok(())
}

/// `M_J = coker(P_{J_2̂} -> P_{J_1̂})` over `A_{n,d}`; the whole staircase
/// `0 -> P_{J_(d+1)̂} -> ... -> P_{J_1̂} -> M_J -> 0` is checked to be exact.
pub fn ot12_module(alg: &Algebra, n: usize, d: usize, j: &[usize]) -> Result<Representation> {
    check_j(n, d, j)?;
    if j[0] == 1 {
        return Err(Error::FirstEntryOne);
    }
    let field = alg.field;
    let hats: Vec<Vec<usize>> = (1..=d + 1).map(|h| j_hat(j, h)).collect();
    let verts: Vec<usize> = hats.iter().map(|x| proj_vertex(alg, x, n)).collect::<Result<_>>()?;
    // maps[h] : P_{hats[h+1]} -> P_{hats[h]}
    let mut maps: Vec<Sparse> = Vec::new();
    for h in 0..d {
        let b = unique_map(alg, &hats[h + 1], &hats[h], n)?;
        maps.push(vec![(b, field.one())]);
    }
    let nv = alg.num_vertices();
    // Per vertex, matrices of each map; check the complex is exact except at the end.
    let img: Vec<Vec<Matrix>> = (0..d).map(|h| right_mult_image(alg, &maps[h], verts[h + 1], verts[h])).collect();
    for u in 0..nv {
        for h in 0..d {
            if h + 1 < d && !img[h][u].mul(&img[h + 1][u]).is_zero() {
                return Err(Error::NotExact(format!("consecutive maps compose to nonzero at {}", alg.vertices[u])));
            }
            let kernel_dim = img[h][u].cols - rank(&img[h][u]);
            let next_rank = if h + 1 < d { rank(&img[h + 1][u]) } else { 0 };
            if kernel_dim != next_rank {
                return Err(Error::NotExact(format!("homology at term {} over vertex {}", h + 1, alg.vertices[u])));
            }
        }
    }
    let p = projective(alg, verts[0]);
    Ok(quotient(alg, &p, &img[0]))
}

/// The `C(n+1, d+1)` summands of the cluster tilting module over `A_{n,d}`, labelled by
/// `N_{n+1,d+1}` in lexicographic order.
pub fn auslander_summands(alg: &Algebra, n: usize, d: usize) -> Result<Vec<(String, Representation)>> {
    index_set(n + 1, d + 1, Kind::N)?
        .into_iter()
        .map(|t| {
            let j = &t.entries;
            let m = if j[0] == 1 {
                let i: Vec<usize> = j[1..].iter().map(|x| x - 1).collect();
                projective(alg, proj_vertex(alg, &i, n)?)
            } else {
                ot12_module(alg, n, d, j)?
            };
            Ok((t.name(), m))
        })
        .collect()
}

#[derive(Debug)]
pub struct AuslanderStep {
    pub end: Algebra,
    pub cluster_tilting: ClusterTiltingReport,
    pub expected_count: usize,
    pub summands: Vec<(String, Representation)>,
}

/// `End` of the cluster tilting module of `A_{n,d}`, with vertices named by `N_{n+1,d+1}`.
pub fn auslander_step(alg: &Algebra, n: usize, d: usize) -> Result<AuslanderStep> {
    let summands = auslander_summands(alg, n, d)?;
    let mods: Vec<Representation> = summands.iter().map(|s| s.1.clone()).collect();
    let report = cluster_tilting_check(alg, d, &mods)?;
    let names = summands.iter().map(|s| s.0.clone()).collect();
    let end = end_algebra(alg, &mods, names)?;
    Ok(AuslanderStep { end, cluster_tilting: report, expected_count: binomial(n + 1, d + 1), summands })
}

/// Runs the step and certifies `End ≅ A_{n+1,d+1}` by name.
pub fn verify_auslander_step(n: usize, d: usize, field: crate::Field) -> Result<(AuslanderStep, bool)> {
    let a = build_a(field, n, d)?;
    let step = auslander_step(&a, n, d)?;
    let target = build_a(field, n + 1, d + 1)?;
    let vm = name_map(&step.end, &target)?;
    let iso = match crate::iso::find_isomorphism(&step.end, &target, &vm) {
        Ok(x) => x.is_some(),
        Err(Error::VertexMapInvalid(_)) => false,
        Err(e) => return Err(e),
    };
    Ok((step, iso))
}
