//! Left modules over presented algebras: projectives, injectives, Hom, minimal projective
//! resolutions, Ext, homological dimensions, and endomorphism algebras of module collections.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{Algebra, BasisElem, Sparse};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{kernel_basis, rank, solve, Matrix, SpanBuilder};

/// A representation: a vector space per vertex and a matrix per arrow (`dims[tgt] x dims[src]`),
/// in the order of [`Algebra::arrows`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Matrix>,
    pub algebra: u64,
}

/// `terms[i]` lists the vertices of the indecomposable summands of `P_i`; `diffs[i]` is the map
/// `P_{i+1} -> P_i` with rows indexed by summands of `P_{i+1}` and columns by those of `P_i`.
/// Entry `(j, k)` is an element of `e_{w_j} A e_{w_k}` acting by right multiplication.
#[derive(Clone, Debug, Serialize)]
pub struct Resolution {
    pub terms: Vec<Vec<usize>>,
    #[serde(skip)]
    pub diffs: Vec<Vec<Vec<Sparse>>>,
    pub truncated: bool,
}

impl Resolution {
    pub fn length(&self) -> usize {
        self.terms.len().saturating_sub(1)
    }
}

impl Representation {
    pub fn new(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Representation> {
        if dims.len() != alg.num_vertices() || maps.len() != alg.arrows.len() {
            return Err(Error::BadParameters("representation shape does not match the quiver".into()));
        }
        for (m, &a) in maps.iter().zip(&alg.arrows) {
            let b = &alg.basis[a];
            if m.rows != dims[b.tgt] || m.cols != dims[b.src] {
                return Err(Error::BadParameters(format!("arrow {a} has a matrix of the wrong shape")));
            }
        }
        let r = Representation { dims, maps, algebra: alg.fingerprint() };
        if !r.satisfies_relations(alg) {
            return Err(Error::BadParameters("matrices violate the relations of the algebra".into()));
        }
        Ok(r)
    }

    fn raw(alg: &Algebra, dims: Vec<usize>, maps: Vec<Matrix>) -> Representation {
        Representation { dims, maps, algebra: alg.fingerprint() }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn check(&self, alg: &Algebra) -> Result<()> {
        if self.algebra != alg.fingerprint() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Matrix by which a basis element acts, `dims[tgt] x dims[src]`.
    pub fn act(&self, alg: &Algebra, x: usize) -> Matrix {
        let b = &alg.basis[x];
        let pos: HashMap<usize, usize> = alg.arrows.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let mut m = Matrix::identity(alg.field, self.dims[b.src]);
        for a in &alg.words[x] {
            m = self.maps[pos[a]].mul(&m);
        }
        m
    }

    pub fn acts(&self, alg: &Algebra) -> Vec<Matrix> {
        (0..alg.dim()).map(|x| self.act(alg, x)).collect()
    }

    /// Every product of basis elements acts as the corresponding combination.
    pub fn satisfies_relations(&self, alg: &Algebra) -> bool {
        let acts = self.acts(alg);
        for x in 0..alg.dim() {
            for y in 0..alg.dim() {
                if alg.basis[x].src != alg.basis[y].tgt {
                    continue;
                }
                let lhs = acts[x].mul(&acts[y]);
                let mut rhs = Matrix::zeros(alg.field, lhs.rows, lhs.cols);
                for (r, c) in alg.mul(x, y) {
                    rhs = rhs.add(&acts[*r].scale(c));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// The dual representation over the opposite algebra (same arrows, transposed maps).
    pub fn dual(&self, op: &Algebra) -> Representation {
        Representation::raw(op, self.dims.clone(), self.maps.iter().map(Matrix::transpose).collect())
    }
}

/// Coordinates of a direct sum of projectives `P_{w_1} + ... + P_{w_m}` at each vertex:
/// `(summand, basis id)` pairs.
fn proj_coords(alg: &Algebra, summands: &[usize]) -> Vec<Vec<(usize, usize)>> {
    (0..alg.num_vertices())
        .map(|u| summands.iter().enumerate().flat_map(|(k, &w)| alg.block(w, u).iter().map(move |&x| (k, x))).collect())
        .collect()
}

pub fn projective_sum(alg: &Algebra, summands: &[usize]) -> Representation {
    let coords = proj_coords(alg, summands);
    let dims = coords.iter().map(Vec::len).collect();
    let maps = alg
        .arrows
        .iter()
        .map(|&a| {
            let (s, t) = (alg.basis[a].src, alg.basis[a].tgt);
            let mut m = Matrix::zeros(alg.field, coords[t].len(), coords[s].len());
            for (j, &(k, x)) in coords[s].iter().enumerate() {
                for (r, c) in alg.mul(a, x) {
                    let i = coords[t].iter().position(|&(k2, y)| k2 == k && y == *r).unwrap();
                    m.set(i, j, c.clone());
                }
            }
            m
        })
        .collect();
    Representation::raw(alg, dims, maps)
}

/// `P_v = A e_v`.
pub fn projective(alg: &Algebra, v: usize) -> Representation {
    projective_sum(alg, &[v])
}

/// `I_v = D(e_v A)`.
pub fn injective(alg: &Algebra, v: usize) -> Representation {
    let n = alg.num_vertices();
    let dims = (0..n).map(|u| alg.block(u, v).len()).collect();
    let maps = alg
        .arrows
        .iter()
        .map(|&a| {
            let (s, t) = (alg.basis[a].src, alg.basis[a].tgt);
            let (from, to) = (alg.block(s, v), alg.block(t, v));
            let mut m = Matrix::zeros(alg.field, from.len(), to.len());
            // (a.phi)(y) = phi(y a); the matrix is the transpose of right multiplication by a.
            for (i, &y) in to.iter().enumerate() {
                for (r, c) in alg.mul(y, a) {
                    let j = from.iter().position(|z| z == r).unwrap();
                    m.set(j, i, c.clone());
                }
            }
            m.transpose()
        })
        .collect();
    Representation::raw(alg, dims, maps)
}

pub fn simple(alg: &Algebra, v: usize) -> Representation {
    let dims: Vec<usize> = (0..alg.num_vertices()).map(|u| usize::from(u == v)).collect();
    let maps = alg
        .arrows
        .iter()
        .map(|&a| Matrix::zeros(alg.field, dims[alg.basis[a].tgt], dims[alg.basis[a].src]))
        .collect();
    Representation::raw(alg, dims, maps)
}

/// Basis of `Hom(M, N)`, each element a matrix per vertex.
pub fn hom_space(alg: &Algebra, m: &Representation, n: &Representation) -> Result<Vec<Vec<Matrix>>> {
    m.check(alg)?;
    n.check(alg)?;
    let nv = alg.num_vertices();
    let mut off = vec![0usize; nv + 1];
    for u in 0..nv {
        off[u + 1] = off[u] + n.dims[u] * m.dims[u];
    }
    let unknowns = off[nv];
    let mut rows = Vec::new();
    for (i, &a) in alg.arrows.iter().enumerate() {
        let (s, t) = (alg.basis[a].src, alg.basis[a].tgt);
        // N(a) f_s - f_t M(a) = 0, entry (r, c) with r < dims_N[t], c < dims_M[s].
        for r in 0..n.dims[t] {
            for c in 0..m.dims[s] {
                let mut row = vec![alg.field.zero(); unknowns];
                for k in 0..n.dims[s] {
                    let v = n.maps[i].get(r, k);
                    if !v.is_zero() {
                        let idx = off[s] + k * m.dims[s] + c;
                        row[idx] = &row[idx] + v;
                    }
                }
                for k in 0..m.dims[t] {
                    let v = m.maps[i].get(k, c);
                    if !v.is_zero() {
                        let idx = off[t] + r * m.dims[t] + k;
                        row[idx] = &row[idx] - v;
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = Matrix::from_rows(alg.field, rows, unknowns);
    let ker = kernel_basis(&sys);
    Ok(ker
        .into_iter()
        .map(|v| {
            (0..nv)
                .map(|u| {
                    let mut f = Matrix::zeros(alg.field, n.dims[u], m.dims[u]);
                    for r in 0..n.dims[u] {
                        for c in 0..m.dims[u] {
                            f.set(r, c, v[off[u] + r * m.dims[u] + c].clone());
                        }
                    }
                    f
                })
                .collect()
        })
        .collect())
}

/// Subspace of `M_u` spanned by the images of all arrows ending at `u`.
fn radical_basis(alg: &Algebra, m: &Representation, u: usize) -> SpanBuilder {
    let mut span = SpanBuilder::new(m.dims[u]);
    for (i, &a) in alg.arrows.iter().enumerate() {
        if alg.basis[a].tgt == u {
            for c in 0..m.maps[i].cols {
                span.insert(&m.maps[i].col(c));
            }
        }
    }
    span
}

/// Dimension vector of `M / rad M`.
pub fn top_dims(alg: &Algebra, m: &Representation) -> Vec<usize> {
    (0..alg.num_vertices()).map(|u| m.dims[u] - radical_basis(alg, m, u).dim()).collect()
}

/// One step of a minimal projective resolution: the projective cover of `m` as a list of
/// (vertex, generator vector in `M_vertex`), and the kernel as a module with its embedding.
struct CoverStep {
    summands: Vec<usize>,
    generators: Vec<Vec<Scalar>>,
    kernel: Representation,
    /// Per vertex, columns are the kernel basis in the coordinates of the cover.
    embed: Vec<Matrix>,
}

fn cover_step(alg: &Algebra, m: &Representation) -> CoverStep {
    let nv = alg.num_vertices();
    let field = alg.field;
    let mut summands = Vec::new();
    let mut generators = Vec::new();
    for u in 0..nv {
        let mut span = radical_basis(alg, m, u);
        for i in 0..m.dims[u] {
            let mut e = vec![field.zero(); m.dims[u]];
            e[i] = field.one();
            if span.insert(&e) {
                summands.push(u);
                generators.push(e);
            }
        }
    }
    let acts = m.acts(alg);
    let coords = proj_coords(alg, &summands);
    let p = projective_sum(alg, &summands);
    let mut embed = Vec::with_capacity(nv);
    for u in 0..nv {
        let cols: Vec<Vec<Scalar>> = coords[u].iter().map(|&(k, x)| acts[x].mul_vec(&generators[k])).collect();
        let pi = Matrix::from_cols(field, m.dims[u], &cols);
        let ker = kernel_basis(&pi);
        embed.push(Matrix::from_cols(field, coords[u].len(), &ker));
    }
    let maps = alg
        .arrows
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let (s, t) = (alg.basis[a].src, alg.basis[a].tgt);
            let mut out = Matrix::zeros(field, embed[t].cols, embed[s].cols);
            for c in 0..embed[s].cols {
                let img = p.maps[i].mul_vec(&embed[s].col(c));
                let x = solve(&embed[t], &img).expect("kernel is not a submodule");
                for (r, v) in x.into_iter().enumerate() {
                    out.set(r, c, v);
                }
            }
            out
        })
        .collect();
    let dims = embed.iter().map(|e| e.cols).collect();
    CoverStep { summands, generators, kernel: Representation::raw(alg, dims, maps), embed }
}

/// Minimal projective resolution with at most `cap + 1` terms.
pub fn min_proj_resolution(alg: &Algebra, m: &Representation, cap: usize) -> Result<Resolution> {
    m.check(alg)?;
    let mut terms = Vec::new();
    let mut diffs = Vec::new();
    let mut step = cover_step(alg, m);
    loop {
        terms.push(step.summands.clone());
        if step.kernel.total_dim() == 0 {
            return Ok(Resolution { terms, diffs, truncated: false });
        }
        if terms.len() > cap {
            return Ok(Resolution { terms, diffs, truncated: true });
        }
        let next = cover_step(alg, &step.kernel);
        let coords = proj_coords(alg, &step.summands);
        let mut d = Vec::with_capacity(next.summands.len());
        for (j, &w) in next.summands.iter().enumerate() {
            let g = step.embed[w].mul_vec(&next.generators[j]);
            let mut row: Vec<Sparse> = vec![Vec::new(); step.summands.len()];
            for (c, &(k, x)) in coords[w].iter().enumerate() {
                if !g[c].is_zero() {
                    row[k].push((x, g[c].clone()));
                }
            }
            for e in row.iter_mut() {
                e.sort_by_key(|t| t.0);
            }
            d.push(row);
        }
        diffs.push(d);
        step = next;
    }
}

fn resolution_cap(alg: &Algebra) -> usize {
    alg.num_vertices() + 1
}

/// Dimension of `Ext^i(M, N)` from the minimal projective resolution of `M`.
pub fn ext(alg: &Algebra, m: &Representation, n: &Representation, i: usize) -> Result<usize> {
    n.check(alg)?;
    let res = min_proj_resolution(alg, m, i + 1)?;
    Ok(ext_from_resolution(alg, &res, n, i))
}

/// All of `Ext^0..=Ext^max` at once.
pub fn ext_table(alg: &Algebra, m: &Representation, n: &Representation, max: usize) -> Result<Vec<usize>> {
    n.check(alg)?;
    let res = min_proj_resolution(alg, m, max + 1)?;
    Ok((0..=max).map(|i| ext_from_resolution(alg, &res, n, i)).collect())
}

fn ext_from_resolution(alg: &Algebra, res: &Resolution, n: &Representation, i: usize) -> usize {
    if i >= res.terms.len() {
        return 0;
    }
    let acts = n.acts(alg);
    let dim_c = |k: usize| res.terms[k].iter().map(|&w| n.dims[w]).sum::<usize>();
    // delta^k : Hom(P_k, N) -> Hom(P_{k+1}, N).
    let delta = |k: usize| -> usize {
        if k + 1 >= res.terms.len() {
            return 0;
        }
        let (src, tgt) = (&res.terms[k], &res.terms[k + 1]);
        let mut m = Matrix::zeros(alg.field, dim_c(k + 1), dim_c(k));
        let mut roff = 0;
        for (j, &wj) in tgt.iter().enumerate() {
            let mut coff = 0;
            for (l, &wl) in src.iter().enumerate() {
                for (x, c) in &res.diffs[k][j][l] {
                    let a = &acts[*x];
                    for r in 0..a.rows {
                        for cc in 0..a.cols {
                            let v = a.get(r, cc);
                            if !v.is_zero() {
                                m.add_at(roff + r, coff + cc, &(v * c));
                            }
                        }
                    }
                }
                coff += n.dims[wl];
            }
            roff += n.dims[wj];
        }
        rank(&m)
    };
    let before = if i == 0 { 0 } else { delta(i - 1) };
    dim_c(i) - delta(i) - before
}

pub fn projective_dimension(alg: &Algebra, m: &Representation) -> Result<Option<usize>> {
    let res = min_proj_resolution(alg, m, resolution_cap(alg))?;
    Ok(if res.truncated { None } else { Some(res.length()) })
}

/// Maximum projective dimension of the simple modules.
pub fn global_dimension(alg: &Algebra) -> Result<usize> {
    let mut best = 0;
    for v in 0..alg.num_vertices() {
        match projective_dimension(alg, &simple(alg, v))? {
            Some(p) => best = best.max(p),
            None => return Err(Error::BadParameters("projective dimension exceeds the cap".into())),
        }
    }
    Ok(best)
}

/// Whether the module is isomorphic to an indecomposable projective.
pub fn is_projective_indecomposable(alg: &Algebra, m: &Representation) -> bool {
    let top = top_dims(alg, m);
    if top.iter().sum::<usize>() != 1 {
        return false;
    }
    let u = top.iter().position(|&t| t == 1).unwrap();
    (0..alg.num_vertices()).all(|w| alg.block(u, w).len() == m.dims[w])
}

/// Number of leading terms of the minimal injective coresolution of the regular module that
/// are projective; `None` when every term is (the coresolution ends with projective terms).
pub fn dominant_dimension(alg: &Algebra) -> Result<Option<usize>> {
    let op = alg.opposite();
    let all: Vec<usize> = (0..alg.num_vertices()).collect();
    let regular = projective_sum(alg, &all);
    let dual = regular.dual(&op);
    let cap = 2 * alg.num_vertices() + 2;
    let res = min_proj_resolution(&op, &dual, cap)?;
    let proj_inj: Vec<bool> = (0..alg.num_vertices()).map(|w| is_projective_indecomposable(alg, &injective(alg, w))).collect();
    for (i, term) in res.terms.iter().enumerate() {
        if !term.iter().all(|&w| proj_inj[w]) {
            return Ok(Some(i));
        }
    }
    if res.truncated {
        return Err(Error::BadParameters("injective coresolution exceeds the cap".into()));
    }
    Ok(None)
}

/// Quotient of `m` by the submodule whose basis at each vertex is given by matrix columns.
pub fn quotient(alg: &Algebra, m: &Representation, sub: &[Matrix]) -> Representation {
    let field = alg.field;
    let nv = alg.num_vertices();
    // Complement basis per vertex, and the full change of basis [sub | complement].
    let mut comp = Vec::with_capacity(nv);
    let mut full = Vec::with_capacity(nv);
    for u in 0..nv {
        let mut span = SpanBuilder::new(m.dims[u]);
        let mut cols: Vec<Vec<Scalar>> = Vec::new();
        for c in 0..sub[u].cols {
            if span.insert(&sub[u].col(c)) {
                cols.push(sub[u].col(c));
            }
        }
        let k = cols.len();
        let mut cu = Vec::new();
        for i in 0..m.dims[u] {
            let mut e = vec![field.zero(); m.dims[u]];
            e[i] = field.one();
            if span.insert(&e) {
                cols.push(e.clone());
                cu.push(e);
            }
        }
        comp.push((k, cu));
        full.push(Matrix::from_cols(field, m.dims[u], &cols));
    }
    let dims: Vec<usize> = comp.iter().map(|c| c.1.len()).collect();
    let maps = alg
        .arrows
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let (s, t) = (alg.basis[a].src, alg.basis[a].tgt);
            let mut out = Matrix::zeros(field, dims[t], dims[s]);
            for (c, v) in comp[s].1.iter().enumerate() {
                let img = m.maps[i].mul_vec(v);
                let x = solve(&full[t], &img).unwrap();
                for r in 0..dims[t] {
                    out.set(r, c, x[comp[t].0 + r].clone());
                }
            }
            out
        })
        .collect();
    Representation::raw(alg, dims, maps)
}

/// Image of right multiplication by `x` (an element of `e_s A e_t`) from `P_s` into `P_t`,
/// as column bases per vertex in the coordinates of `P_t`.
pub fn right_mult_image(alg: &Algebra, x: &Sparse, s: usize, t: usize) -> Vec<Matrix> {
    (0..alg.num_vertices())
        .map(|u| {
            let to = alg.block(t, u);
            let cols: Vec<Vec<Scalar>> = alg
                .block(s, u)
                .iter()
                .map(|&p| {
                    let prod = alg.mul_sparse(&[(p, alg.field.one())], x);
                    let mut c = vec![alg.field.zero(); to.len()];
                    for (r, v) in prod {
                        c[to.iter().position(|&y| y == r).unwrap()] = v;
                    }
                    c
                })
                .collect();
            Matrix::from_cols(alg.field, to.len(), &cols)
        })
        .collect()
}

/// Matrix at vertex `u` of right multiplication by `x` from `P_s` to `P_t`.
pub fn right_mult_matrix(alg: &Algebra, x: &Sparse, s: usize, t: usize, u: usize) -> Matrix {
    right_mult_image(alg, x, s, t).swap_remove(u)
}

/// Result of checking Ext vanishing among a collection of modules.
#[derive(Clone, Debug, Serialize)]
pub struct ClusterTiltingReport {
    pub vanishing: bool,
    /// First failing `(i, X, Y, dim Ext^i(X, Y))`.
    pub witness: Option<(usize, usize, usize, usize)>,
    pub summands: usize,
}

/// `Ext^i(X, Y) = 0` for `0 < i < d` and all ordered pairs of summands.
pub fn cluster_tilting_check(alg: &Algebra, d: usize, summands: &[Representation]) -> Result<ClusterTiltingReport> {
    use rayon::prelude::*;
    let pairs: Vec<(usize, usize)> = (0..summands.len()).flat_map(|x| (0..summands.len()).map(move |y| (x, y))).collect();
    let tables: Vec<(usize, usize, Vec<usize>)> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let t = if d >= 2 { ext_table(alg, &summands[x], &summands[y], d - 1)? } else { vec![] };
            Ok((x, y, t))
        })
        .collect::<Result<_>>()?;
    for (x, y, t) in &tables {
        for (i, &e) in t.iter().enumerate().skip(1) {
            if e != 0 {
                return Ok(ClusterTiltingReport { vanishing: false, witness: Some((i, *x, *y, e)), summands: summands.len() });
            }
        }
    }
    Ok(ClusterTiltingReport { vanishing: true, witness: None, summands: summands.len() })
}

/// The algebra with one vertex per summand, block `a -> b` equal to `Hom(M_a, M_b)`, and
/// product given by composition (`g * f = g ∘ f`).
pub fn end_algebra(alg: &Algebra, summands: &[Representation], names: Vec<String>) -> Result<Algebra> {
    use rayon::prelude::*;
    let field = alg.field;
    let k = summands.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect();
    let homs: Vec<Vec<Vec<Matrix>>> = pairs
        .par_iter()
        .map(|&(a, b)| hom_space(alg, &summands[a], &summands[b]))
        .collect::<Result<_>>()?;
    let hom = |a: usize, b: usize| &homs[a * k + b];
    let mut basis = Vec::new();
    let mut ids: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut maps: Vec<Vec<Matrix>> = Vec::new();
    let mut idem = vec![0; k];
    for a in 0..k {
        let e = hom(a, a);
        if e.len() != 1 {
            return Err(endo_error(a, &summands[a], e));
        }
        idem[a] = basis.len();
        ids.insert((a, a), vec![basis.len()]);
        basis.push(BasisElem { src: a, tgt: a, grade: 0, degree: 0 });
        maps.push((0..alg.num_vertices()).map(|u| Matrix::identity(field, summands[a].dims[u])).collect());
    }
    for &(a, b) in &pairs {
        if a == b {
            continue;
        }
        for f in hom(a, b) {
            ids.entry((a, b)).or_default().push(basis.len());
            basis.push(BasisElem { src: a, tgt: b, grade: 1, degree: 0 });
            maps.push(f.clone());
        }
    }
    let flat = |f: &[Matrix]| -> Vec<Scalar> { f.iter().flat_map(|m| (0..m.rows).flat_map(move |r| (0..m.cols).map(move |c| m.get(r, c).clone()))).collect() };
    let mut coords: HashMap<(usize, usize), Matrix> = HashMap::new();
    for (key, v) in &ids {
        let cols: Vec<Vec<Scalar>> = v.iter().map(|&x| flat(&maps[x])).collect();
        coords.insert(*key, Matrix::from_cols(field, cols[0].len(), &cols));
    }
    let mut mult = HashMap::new();
    for (g, bg) in basis.iter().enumerate() {
        for (f, bf) in basis.iter().enumerate() {
            if bf.tgt != bg.src {
                continue;
            }
            let comp: Vec<Matrix> = maps[g].iter().zip(&maps[f]).map(|(x, y)| x.mul(y)).collect();
            let key = (bf.src, bg.tgt);
            let v = flat(&comp);
            if v.iter().all(Scalar::is_zero) {
                continue;
            }
            let m = coords.get(&key).ok_or_else(|| Error::BadParameters("composition leaves the Hom space".into()))?;
            let x = solve(m, &v).ok_or_else(|| Error::BadParameters("composition not in the Hom span".into()))?;
            let out: Sparse = ids[&key].iter().zip(x).filter(|(_, c)| !c.is_zero()).map(|(i, c)| (*i, c)).collect();
            mult.insert((g, f), out);
        }
    }
    Algebra::from_table(field, names, basis, idem, mult).derive_presentation()
}

fn endo_error(a: usize, m: &Representation, e: &[Vec<Matrix>]) -> Error {
    let total = m.total_dim();
    for f in e {
        let mut p: Vec<Matrix> = f.clone();
        for _ in 0..total.max(1) {
            p = p.iter().zip(f).map(|(x, y)| x.mul(y)).collect();
        }
        let r: usize = p.iter().map(rank).sum();
        if r > 0 && r < total {
            return Error::DecomposableSummand(a, format!("endomorphism of rank {r} on a module of dimension {total}"));
        }
    }
    Error::NotDirected(format!("summand {a} is not a brick: End has dimension {}", e.len()))
}
