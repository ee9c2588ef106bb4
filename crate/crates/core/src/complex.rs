//! Bounded complexes of indecomposable projectives, their Hom complexes, cones and shifts.
//!
//! A map `P_s -> P_t` is an element of `e_s A e_t` acting by right multiplication, so a map
//! between direct sums is a matrix with rows indexed by source summands and columns by target
//! summands, and composing `f` then `g` is the matrix product `F G` in the algebra.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::algebra::{axpy, finish, Algebra, BasisElem, Sparse};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::field::Field;
use crate::matrix::{kernel_basis, rank, solve, Matrix, SpanBuilder};

/// Matrix of algebra elements.
pub type AMatrix = Vec<Vec<Sparse>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjComplex {
    /// Degree of `terms[0]`.
    pub lo: i64,
    pub terms: Vec<Vec<usize>>,
    /// `diffs[k]` maps `terms[k]` to `terms[k + 1]`.
    pub diffs: Vec<AMatrix>,
    pub algebra: u64,
}

/// A chain map (or a homogeneous morphism of degree `degree`): `comps[m]` maps the degree `m`
/// term of the source to the degree `m + degree` term of the target.
#[derive(Clone, Debug)]
pub struct Morphism {
    pub degree: i64,
    pub comps: BTreeMap<i64, AMatrix>,
}

pub fn zero_matrix(rows: usize, cols: usize) -> AMatrix {
    vec![vec![Vec::new(); cols]; rows]
}

pub fn amat_mul(alg: &Algebra, a: &AMatrix, b: &AMatrix, inner: usize) -> AMatrix {
    let rows = a.len();
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zero_matrix(rows, cols);
    for i in 0..rows {
        for k in 0..inner {
            if a[i][k].is_empty() {
                continue;
            }
            for j in 0..cols {
                if !b[k][j].is_empty() {
                    let p = alg.mul_sparse(&a[i][k], &b[k][j]);
                    if !p.is_empty() {
                        let mut acc: BTreeMap<usize, Scalar> = out[i][j].iter().cloned().collect();
                        axpy(&mut acc, &alg.field.one(), &p);
                        out[i][j] = finish(acc);
                    }
                }
            }
        }
    }
    out
}

pub fn amat_is_zero(a: &AMatrix) -> bool {
    a.iter().all(|r| r.iter().all(Vec::is_empty))
}

fn scale_sparse(v: &[(usize, Scalar)], c: &Scalar) -> Sparse {
    v.iter().map(|(i, x)| (*i, x * c)).filter(|(_, x)| !x.is_zero()).collect()
}

pub fn amat_scale(a: &AMatrix, c: &Scalar) -> AMatrix {
    a.iter().map(|r| r.iter().map(|e| scale_sparse(e, c)).collect()).collect()
}

impl ProjComplex {
    pub fn new(alg: &Algebra, lo: i64, terms: Vec<Vec<usize>>, diffs: Vec<AMatrix>) -> Result<ProjComplex> {
        let c = ProjComplex { lo, terms, diffs, algebra: alg.fingerprint() };
        c.validate(alg)?;
        Ok(c)
    }

    /// A single projective in degree 0.
    pub fn projective(alg: &Algebra, v: usize) -> ProjComplex {
        ProjComplex { lo: 0, terms: vec![vec![v]], diffs: vec![], algebra: alg.fingerprint() }
    }

    pub fn zero(alg: &Algebra) -> ProjComplex {
        ProjComplex { lo: 0, terms: vec![], diffs: vec![], algebra: alg.fingerprint() }
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn term(&self, m: i64) -> &[usize] {
        if m < self.lo || m > self.hi() {
            return &[];
        }
        &self.terms[(m - self.lo) as usize]
    }

    /// Differential from degree `m` to `m + 1`, or an empty-shaped zero matrix.
    pub fn diff(&self, m: i64) -> AMatrix {
        if m >= self.lo && m < self.hi() {
            self.diffs[(m - self.lo) as usize].clone()
        } else {
            zero_matrix(self.term(m).len(), self.term(m + 1).len())
        }
    }

    pub fn is_zero_object(&self) -> bool {
        self.terms.iter().all(Vec::is_empty)
    }

    pub fn validate(&self, alg: &Algebra) -> Result<()> {
        if self.algebra != alg.fingerprint() {
            return Err(Error::AlgebraMismatch);
        }
        if self.diffs.len() + 1 != self.terms.len().max(1) {
            return Err(Error::BadParameters("complex has the wrong number of differentials".into()));
        }
        for (k, d) in self.diffs.iter().enumerate() {
            let (src, tgt) = (&self.terms[k], &self.terms[k + 1]);
            if d.len() != src.len() || d.iter().any(|r| r.len() != tgt.len()) {
                return Err(Error::BadParameters(format!("differential {k} has the wrong shape")));
            }
            for (j, row) in d.iter().enumerate() {
                for (l, e) in row.iter().enumerate() {
                    if e.iter().any(|(x, _)| alg.basis[*x].src != tgt[l] || alg.basis[*x].tgt != src[j]) {
                        return Err(Error::BadParameters(format!("differential {k} entry ({j},{l}) in the wrong block")));
                    }
                    if e.iter().any(|(x, _)| alg.basis[*x].degree != 0) {
                        return Err(Error::BadParameters(format!("differential {k} entry ({j},{l}) has internal degree")));
                    }
                }
            }
        }
        for k in 0..self.diffs.len().saturating_sub(1) {
            if !amat_is_zero(&amat_mul(alg, &self.diffs[k], &self.diffs[k + 1], self.terms[k + 1].len())) {
                return Err(Error::NotChainMap(format!("d^2 != 0 at degree {}", self.lo + k as i64)));
            }
        }
        Ok(())
    }

    /// `X[k]`: degree `m` term is `X^{m+k}`, differential multiplied by `(-1)^k`.
    pub fn shift(&self, k: i64) -> ProjComplex {
        ProjComplex {
            lo: self.lo - k,
            terms: self.terms.clone(),
            diffs: if k.rem_euclid(2) == 1 { self.diffs.iter().map(negate).collect() } else { self.diffs.clone() },
            algebra: self.algebra,
        }
    }

    /// Drops zero terms at both ends.
    pub fn trim(mut self) -> ProjComplex {
        while self.terms.last().is_some_and(Vec::is_empty) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(Vec::is_empty) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    /// Class in the Grothendieck group: signed multiplicity of each projective.
    pub fn k_class(&self, nv: usize) -> Vec<i64> {
        let mut out = vec![0i64; nv];
        for (k, t) in self.terms.iter().enumerate() {
            let s = if (self.lo + k as i64).rem_euclid(2) == 0 { 1 } else { -1 };
            for &v in t {
                out[v] += s;
            }
        }
        out
    }
}

fn negate(d: &AMatrix) -> AMatrix {
    d.iter().map(|r| r.iter().map(|e| e.iter().map(|(i, c)| (*i, -c)).collect()).collect()).collect()
}

/// Direct sum of complexes.
pub fn direct_sum(alg: &Algebra, xs: &[ProjComplex]) -> ProjComplex {
    let xs: Vec<&ProjComplex> = xs.iter().filter(|x| !x.is_zero_object()).collect();
    if xs.is_empty() {
        return ProjComplex::zero(alg);
    }
    let lo = xs.iter().map(|x| x.lo).min().unwrap();
    let hi = xs.iter().map(|x| x.hi()).max().unwrap();
    let terms: Vec<Vec<usize>> = (lo..=hi).map(|m| xs.iter().flat_map(|x| x.term(m).iter().copied()).collect()).collect();
    let diffs = (lo..hi)
        .map(|m| {
            let mut d = zero_matrix(terms[(m - lo) as usize].len(), terms[(m - lo + 1) as usize].len());
            let (mut r0, mut c0) = (0, 0);
            for x in &xs {
                let dx = x.diff(m);
                for (j, row) in dx.iter().enumerate() {
                    for (l, e) in row.iter().enumerate() {
                        d[r0 + j][c0 + l] = e.clone();
                    }
                }
                r0 += x.term(m).len();
                c0 += x.term(m + 1).len();
            }
            d
        })
        .collect();
    ProjComplex { lo, terms, diffs, algebra: alg.fingerprint() }
}

/// Checks `D_X F^{m+1} = (-1)^deg F^m D_Y` for every `m`.
pub fn check_chain_map(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, f: &Morphism) -> Result<()> {
    let sign = if f.degree.rem_euclid(2) == 1 { -alg.field.one() } else { alg.field.one() };
    for m in (x.lo - 1)..=x.hi() {
        let fm = morph_comp(x, y, f, m);
        let fm1 = morph_comp(x, y, f, m + 1);
        let left = amat_mul(alg, &x.diff(m), &fm1, x.term(m + 1).len());
        let right = amat_scale(&amat_mul(alg, &fm, &y.diff(m + f.degree), y.term(m + f.degree).len()), &sign);
        if left != right && !amat_is_zero(&sub(alg, &left, &right)) {
            return Err(Error::NotChainMap(format!("square at degree {m} does not commute")));
        }
    }
    Ok(())
}

fn sub(alg: &Algebra, a: &AMatrix, b: &AMatrix) -> AMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| {
            ra.iter()
                .zip(rb)
                .map(|(x, y)| {
                    let mut acc: BTreeMap<usize, Scalar> = x.iter().cloned().collect();
                    axpy(&mut acc, &-alg.field.one(), y);
                    finish(acc)
                })
                .collect()
        })
        .collect()
}

fn morph_comp(x: &ProjComplex, y: &ProjComplex, f: &Morphism, m: i64) -> AMatrix {
    f.comps
        .get(&m)
        .cloned()
        .unwrap_or_else(|| zero_matrix(x.term(m).len(), y.term(m + f.degree).len()))
}

/// Cone of a chain map `f: X -> Y`: degree `m` term `X^{m+1} + Y^m`, differential
/// `[[-D_X, F], [0, D_Y]]`.
pub fn cone(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, f: &Morphism) -> Result<ProjComplex> {
    if f.degree != 0 {
        return Err(Error::NotChainMap("cone needs a degree 0 map".into()));
    }
    check_chain_map(alg, x, y, f)?;
    let lo = (x.lo - 1).min(y.lo);
    let hi = (x.hi() - 1).max(y.hi());
    if x.is_zero_object() {
        return Ok(y.clone());
    }
    if y.is_zero_object() {
        return Ok(x.shift(1));
    }
    let terms: Vec<Vec<usize>> = (lo..=hi).map(|m| [x.term(m + 1), y.term(m)].concat()).collect();
    let diffs = (lo..hi)
        .map(|m| {
            let (xa, ya) = (x.term(m + 1).len(), y.term(m).len());
            let (xb, yb) = (x.term(m + 2).len(), y.term(m + 1).len());
            let mut d = zero_matrix(xa + ya, xb + yb);
            let dx = negate(&x.diff(m + 1));
            let fm = morph_comp(x, y, f, m + 1);
            let dy = y.diff(m);
            for j in 0..xa {
                for l in 0..xb {
                    d[j][l] = dx[j][l].clone();
                }
                for l in 0..yb {
                    d[j][xb + l] = fm[j][l].clone();
                }
            }
            for j in 0..ya {
                for l in 0..yb {
                    d[xa + j][xb + l] = dy[j][l].clone();
                }
            }
            d
        })
        .collect();
    let c = ProjComplex { lo, terms, diffs, algebra: alg.fingerprint() }.trim();
    c.validate(alg)?;
    Ok(c)
}

/// Coordinates of `Hom^p(X, Y)`: `(m, source summand, target summand, basis id)`.
type Coord = (i64, usize, usize, usize);

/// Cohomology of the total Hom complex with chosen cocycle representatives.
#[derive(Clone, Debug)]
pub struct HomComplex {
    field: Field,
    pub lo: i64,
    pub hi: i64,
    coords: BTreeMap<i64, Vec<Coord>>,
    /// Per degree: representatives (as coordinate vectors) and the coboundary basis.
    reps: BTreeMap<i64, Vec<Vec<Scalar>>>,
    bounds: BTreeMap<i64, Vec<Vec<Scalar>>>,
    /// Cohomology by total degree when the algebra carries internal degrees.
    graded: Option<BTreeMap<i64, usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomComplexResult {
    /// `(degree, dimension)` for every degree with nonzero cohomology.
    pub dims: Vec<(i64, usize)>,
}

impl HomComplexResult {
    pub fn total(&self) -> usize {
        self.dims.iter().map(|d| d.1).sum()
    }

    pub fn euler(&self) -> i64 {
        self.dims.iter().map(|&(p, d)| if p.rem_euclid(2) == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// The single degree carrying cohomology, if there is exactly one.
    pub fn concentrated(&self) -> Option<i64> {
        match self.dims.as_slice() {
            [(p, _)] => Some(*p),
            _ => None,
        }
    }

    pub fn dim(&self, p: i64) -> usize {
        self.dims.iter().find(|d| d.0 == p).map_or(0, |d| d.1)
    }
}

impl HomComplex {
    pub fn result(&self) -> HomComplexResult {
        if let Some(g) = &self.graded {
            return HomComplexResult { dims: g.iter().filter(|(_, n)| **n > 0).map(|(t, n)| (*t, *n)).collect() };
        }
        HomComplexResult { dims: self.reps.iter().filter(|(_, r)| !r.is_empty()).map(|(p, r)| (*p, r.len())).collect() }
    }

    pub fn dim(&self, p: i64) -> usize {
        self.reps.get(&p).map_or(0, Vec::len)
    }

    /// The `i`-th representative cocycle of `H^p` as a morphism of degree `p`.
    pub fn representative(&self, x: &ProjComplex, y: &ProjComplex, p: i64, i: usize) -> Morphism {
        self.to_morphism(x, y, p, &self.reps[&p][i])
    }

    fn to_morphism(&self, x: &ProjComplex, y: &ProjComplex, p: i64, v: &[Scalar]) -> Morphism {
        let mut comps: BTreeMap<i64, AMatrix> = BTreeMap::new();
        for (&(m, j, l, b), c) in self.coords[&p].iter().zip(v) {
            if c.is_zero() {
                continue;
            }
            let e = comps.entry(m).or_insert_with(|| zero_matrix(x.term(m).len(), y.term(m + p).len()));
            e[j][l].push((b, c.clone()));
        }
        for mat in comps.values_mut() {
            for row in mat.iter_mut() {
                for e in row.iter_mut() {
                    e.sort_by_key(|t| t.0);
                }
            }
        }
        Morphism { degree: p, comps }
    }

    /// Coordinates in `H^p` of a cocycle of degree `p`.
    pub fn project(&self, f: &Morphism) -> Option<Vec<Scalar>> {
        let p = f.degree;
        let coords = self.coords.get(&p)?;
        let mut v = vec![self.field.zero(); coords.len()];
        let idx: HashMap<Coord, usize> = coords.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        for (&m, mat) in &f.comps {
            for (j, row) in mat.iter().enumerate() {
                for (l, e) in row.iter().enumerate() {
                    for (b, c) in e {
                        v[*idx.get(&(m, j, l, *b))?] = c.clone();
                    }
                }
            }
        }
        let reps = &self.reps[&p];
        let bounds = &self.bounds[&p];
        if reps.is_empty() {
            return Some(vec![]);
        }
        let cols: Vec<Vec<Scalar>> = reps.iter().chain(bounds.iter()).cloned().collect();
        let m = Matrix::from_cols(self.field, coords.len(), &cols);
        let sol = solve(&m, &v)?;
        Some(sol[..reps.len()].to_vec())
    }
}

/// Builds the Hom complex `Hom^p(X, Y) = prod_m Hom(X^m, Y^{m+p})` with differential
/// `(δf)^m = F^m D_Y - (-1)^p D_X F^{m+1}` and computes its cohomology.
/// When `identity_first` is set (and `X == Y`) the identity is the first representative of `H^0`.
pub fn hom_complex(alg: &Algebra, x: &ProjComplex, y: &ProjComplex, identity_first: bool) -> Result<HomComplex> {
    if x.algebra != alg.fingerprint() || y.algebra != alg.fingerprint() {
        return Err(Error::AlgebraMismatch);
    }
    let field = alg.field;
    let one = field.one();
    let (lo, hi) = if x.is_zero_object() || y.is_zero_object() { (0, -1) } else { (y.lo - x.hi(), y.hi() - x.lo) };
    let mut coords: BTreeMap<i64, Vec<Coord>> = BTreeMap::new();
    for p in (lo - 1)..=(hi + 1) {
        let mut c = Vec::new();
        for m in x.lo..=x.hi() {
            for (j, &s) in x.term(m).iter().enumerate() {
                for (l, &t) in y.term(m + p).iter().enumerate() {
                    for &b in alg.block(t, s) {
                        c.push((m, j, l, b));
                    }
                }
            }
        }
        coords.insert(p, c);
    }
    let index: BTreeMap<i64, HashMap<Coord, usize>> =
        coords.iter().map(|(p, c)| (*p, c.iter().enumerate().map(|(i, x)| (*x, i)).collect())).collect();
    // delta[p] : C^p -> C^{p+1}
    let mut delta: BTreeMap<i64, Matrix> = BTreeMap::new();
    for p in (lo - 1)..=hi {
        let (src, tgt) = (&coords[&p], &coords[&(p + 1)]);
        let tidx = &index[&(p + 1)];
        let sign = if p.rem_euclid(2) == 0 { -one.clone() } else { one.clone() };
        let mut mat = Matrix::zeros(field, tgt.len(), src.len());
        for (col, &(m, j, l, b)) in src.iter().enumerate() {
            // F^m D_Y^{m+p}: entry (j, l') gets b * D_Y[l][l'].
            let dy = y.diff(m + p);
            if let Some(row) = dy.get(l) {
                for (l2, e) in row.iter().enumerate() {
                    for (r, c) in alg.mul_sparse(&[(b, one.clone())], e) {
                        mat.add_at(tidx[&(m, j, l2, r)], col, &c);
                    }
                }
            }
            // -(-1)^p D_X^{m-1} F^m: entry (j', l) at degree m-1 gets D_X[j'][j] * b.
            let dx = x.diff(m - 1);
            for (j2, row) in dx.iter().enumerate() {
                let e = &row[j];
                if e.is_empty() {
                    continue;
                }
                for (r, c) in alg.mul_sparse(e, &[(b, one.clone())]) {
                    mat.add_at(tidx[&(m - 1, j2, l, r)], col, &(&c * &sign));
                }
            }
        }
        delta.insert(p, mat);
    }
    let mut reps = BTreeMap::new();
    let mut bounds = BTreeMap::new();
    for p in lo..=hi {
        let n = coords[&p].len();
        let z = kernel_basis(&delta[&p]);
        let prev = &delta[&(p - 1)];
        let mut span = SpanBuilder::new(n);
        let mut bvecs = Vec::new();
        for c in 0..prev.cols {
            let v = prev.col(c);
            if span.insert(&v) {
                bvecs.push(v);
            }
        }
        let mut r = Vec::new();
        let mut candidates = Vec::new();
        if identity_first && p == 0 && x == y {
            let mut id = vec![field.zero(); n];
            for m in x.lo..=x.hi() {
                for (j, &s) in x.term(m).iter().enumerate() {
                    id[index[&0][&(m, j, j, alg.idem[s])]] = one.clone();
                }
            }
            candidates.push(id);
        }
        candidates.extend(z);
        for v in candidates {
            if span.insert(&v) {
                r.push(v);
            }
        }
        reps.insert(p, r);
        bounds.insert(p, bvecs);
    }
    // The differential preserves internal degree, so split each term by it.
    let graded = alg.basis.iter().any(|b| b.degree != 0).then(|| {
        let mut g: BTreeMap<i64, usize> = BTreeMap::new();
        let cols_of = |p: i64, q: i64| -> Vec<usize> {
            coords[&p].iter().enumerate().filter(|(_, c)| alg.basis[c.3].degree == q).map(|(i, _)| i).collect()
        };
        for p in lo..=hi {
            let mut qs: Vec<i64> = coords[&p].iter().map(|c| alg.basis[c.3].degree).collect();
            qs.sort_unstable();
            qs.dedup();
            for q in qs {
                let here = cols_of(p, q);
                let out = rank(&delta[&p].select_cols(&here));
                let inc = rank(&delta[&(p - 1)].select_cols(&cols_of(p - 1, q)));
                *g.entry(p + q).or_default() += here.len() - out - inc;
            }
        }
        g
    });
    Ok(HomComplex { field, lo, hi, coords, reps, bounds, graded })
}

/// Composition of homogeneous morphisms `f: X -> Y` then `g: Y -> Z`.
pub fn compose(alg: &Algebra, y: &ProjComplex, f: &Morphism, g: &Morphism) -> Morphism {
    let mut comps = BTreeMap::new();
    for (&m, fm) in &f.comps {
        if let Some(gm) = g.comps.get(&(m + f.degree)) {
            let prod = amat_mul(alg, fm, gm, y.term(m + f.degree).len());
            if !amat_is_zero(&prod) {
                comps.insert(m, prod);
            }
        }
    }
    Morphism { degree: f.degree + g.degree, comps }
}

/// Cartan pairing of the classes of `X` and `Y`.
pub fn euler_pairing(alg: &Algebra, x: &ProjComplex, y: &ProjComplex) -> i64 {
    let nv = alg.num_vertices();
    let (kx, ky) = (x.k_class(nv), y.k_class(nv));
    let mut s = 0;
    for a in 0..nv {
        for b in 0..nv {
            s += kx[a] * ky[b] * alg.block(b, a).len() as i64;
        }
    }
    s
}

/// The degree 0 endomorphism algebra of a collection: block `a -> b` is `H^0 Hom(T_a, T_b)`,
/// product is composition. Requires `H^0 End(T_a)` to be spanned by the identity.
pub fn end0_algebra(alg: &Algebra, objs: &[ProjComplex], names: Vec<String>) -> Result<Algebra> {
    use rayon::prelude::*;
    let k = objs.len();
    let pairs: Vec<(usize, usize)> = (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).collect();
    let homs: Vec<HomComplex> = pairs
        .par_iter()
        .map(|&(a, b)| hom_complex(alg, &objs[a], &objs[b], true))
        .collect::<Result<_>>()?;
    let h = |a: usize, b: usize| &homs[a * k + b];
    let mut basis = Vec::new();
    let mut ids: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut reps: Vec<Morphism> = Vec::new();
    let mut idem = vec![0; k];
    for a in 0..k {
        if h(a, a).dim(0) != 1 {
            return Err(Error::NotDirected(format!("object {a} has a {}-dimensional degree 0 endomorphism space", h(a, a).dim(0))));
        }
        idem[a] = basis.len();
        ids.insert((a, a), vec![basis.len()]);
        basis.push(BasisElem { src: a, tgt: a, grade: 0, degree: 0 });
        reps.push(h(a, a).representative(&objs[a], &objs[a], 0, 0));
    }
    for &(a, b) in &pairs {
        if a == b {
            continue;
        }
        for i in 0..h(a, b).dim(0) {
            ids.entry((a, b)).or_default().push(basis.len());
            basis.push(BasisElem { src: a, tgt: b, grade: 1, degree: 0 });
            reps.push(h(a, b).representative(&objs[a], &objs[b], 0, i));
        }
    }
    let mut mult = HashMap::new();
    for (g, bg) in basis.iter().enumerate() {
        for (f, bf) in basis.iter().enumerate() {
            if bf.tgt != bg.src {
                continue;
            }
            let (a, b, c) = (bf.src, bf.tgt, bg.tgt);
            let comp = compose(alg, &objs[b], &reps[f], &reps[g]);
            if comp.comps.is_empty() {
                continue;
            }
            let Some(target) = ids.get(&(a, c)) else {
                // H^0 vanishes, so the composite must be a coboundary; nothing to record.
                continue;
            };
            let coords = h(a, c)
                .project(&comp)
                .ok_or_else(|| Error::NotChainMap("composite is not a cocycle".into()))?;
            let out: Sparse = target.iter().zip(coords).filter(|(_, x)| !x.is_zero()).map(|(i, x)| (*i, x)).collect();
            if !out.is_empty() {
                mult.insert((g, f), out);
            }
        }
    }
    Algebra::from_table(alg.field, names, basis, idem, mult).derive_presentation()
}

/// Pairwise Hom cohomology table of a collection.
pub fn hom_table(alg: &Algebra, objs: &[ProjComplex]) -> Result<Vec<Vec<HomComplexResult>>> {
    use rayon::prelude::*;
    let k = objs.len();
    let flat: Vec<HomComplexResult> = (0..k * k)
        .into_par_iter()
        .map(|i| hom_complex(alg, &objs[i / k], &objs[i % k], false).map(|h| h.result()))
        .collect::<Result<_>>()?;
    Ok(flat.chunks(k).map(|c| c.to_vec()).collect())
}

/// Shifts `s_a` with `Hom(T_a[s_a], T_b[s_b])` concentrated in degree 0 for every pair with
/// nonzero cohomology; errors when some Hom is spread over several degrees or the constraints
/// are inconsistent.
pub fn normalizing_shifts(table: &[Vec<HomComplexResult>]) -> Result<Vec<i64>> {
    let k = table.len();
    let mut shift: Vec<Option<i64>> = vec![None; k];
    for root in 0..k {
        if shift[root].is_some() {
            continue;
        }
        shift[root] = Some(0);
        let mut stack = vec![root];
        while let Some(a) = stack.pop() {
            let sa = shift[a].unwrap();
            for b in 0..k {
                // s_b - s_a = degree of Hom(T_a, T_b); s_a - s_b = degree of Hom(T_b, T_a).
                let mut want = Vec::new();
                for (h, sgn) in [(&table[a][b], 1), (&table[b][a], -1)] {
                    if h.total() == 0 {
                        continue;
                    }
                    let p = h.concentrated().ok_or_else(|| Error::NotConcentrated(format!("Hom between objects {a} and {b}: {:?}", h.dims)))?;
                    want.push(sa + sgn * p);
                }
                for w in want {
                    match shift[b] {
                        None => {
                            shift[b] = Some(w);
                            stack.push(b);
                        }
                        Some(s) if s != w => {
                            return Err(Error::NotConcentrated(format!("inconsistent shifts for objects {a} and {b}")));
                        }
                        _ => {}
                    }
                }
            }
        }
    }
    Ok(shift.into_iter().map(Option::unwrap).collect())
}
