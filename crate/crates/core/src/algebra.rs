//! Finite-dimensional directed algebras with an explicit basis and structure constants.
//!
//! Every basis element lives in a block `(src, tgt)`; the product `x * y` is defined when
//! `src(x) == tgt(y)` and lands in `(src(y), tgt(x))`, so paths compose right to left and
//! the block `(u, v)` is `e_v A e_u`. Once a presentation is known each basis element is a
//! monomial: the product of the arrows in [`Algebra::words`], first applied first.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{inverse, Matrix, SpanBuilder};

/// Sparse combination of basis elements, sorted by id, no zero coefficients.
pub type Sparse = Vec<(usize, Scalar)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElem {
    pub src: usize,
    pub tgt: usize,
    pub grade: usize,
    pub degree: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub field: Field,
    pub vertices: Vec<String>,
    pub basis: Vec<BasisElem>,
    /// Basis ids of the idempotents, one per vertex.
    pub idem: Vec<usize>,
    /// Basis ids of the arrows of the Gabriel quiver.
    pub arrows: Vec<usize>,
    /// Monomial expression of each basis element as arrow ids, first applied first.
    pub words: Vec<Vec<usize>>,
    mult: HashMap<(usize, usize), Sparse>,
    blocks: HashMap<(usize, usize), Vec<usize>>,
    fp: u64,
}

/// Adds `c * v` into an accumulator.
pub fn axpy(acc: &mut BTreeMap<usize, Scalar>, c: &Scalar, v: &[(usize, Scalar)]) {
    for (i, x) in v {
        let t = c * x;
        match acc.get_mut(i) {
            Some(e) => *e += &t,
            None => {
                acc.insert(*i, t);
            }
        }
    }
}

pub fn finish(acc: BTreeMap<usize, Scalar>) -> Sparse {
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

impl Algebra {
    /// Assembles an algebra from a structure-constant table. Arrows and words are left empty;
    /// call [`Algebra::derive_presentation`] to recover them.
    pub fn from_table(
        field: Field,
        vertices: Vec<String>,
        basis: Vec<BasisElem>,
        idem: Vec<usize>,
        mult: HashMap<(usize, usize), Sparse>,
    ) -> Algebra {
        let mut a = Algebra {
            field,
            vertices,
            basis,
            idem,
            arrows: Vec::new(),
            words: Vec::new(),
            mult: mult.into_iter().filter(|(_, v)| !v.is_empty()).collect(),
            blocks: HashMap::new(),
            fp: 0,
        };
        a.reindex();
        a
    }

    pub(crate) fn with_words(mut self, arrows: Vec<usize>, words: Vec<Vec<usize>>) -> Algebra {
        self.arrows = arrows;
        self.words = words;
        self
    }

    fn reindex(&mut self) {
        self.blocks.clear();
        for (i, b) in self.basis.iter().enumerate() {
            self.blocks.entry((b.src, b.tgt)).or_default().push(i);
        }
        self.fp = self.compute_fingerprint();
    }

    /// The algebra `k` on one vertex named `""`.
    pub fn one_vertex(field: Field) -> Algebra {
        let mut mult = HashMap::new();
        mult.insert((0, 0), vec![(0, field.one())]);
        let basis = vec![BasisElem { src: 0, tgt: 0, grade: 0, degree: 0 }];
        Algebra::from_table(field, vec![String::new()], basis, vec![0], mult).with_words(vec![], vec![vec![]])
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Basis ids of the block `u -> v`, that is `e_v A e_u`.
    pub fn block(&self, u: usize, v: usize) -> &[usize] {
        self.blocks.get(&(u, v)).map_or(&[], |b| b.as_slice())
    }

    /// Structure constants of `x * y`; empty when the product vanishes.
    pub fn mul(&self, x: usize, y: usize) -> &[(usize, Scalar)] {
        self.mult.get(&(x, y)).map_or(&[], |v| v.as_slice())
    }

    pub fn mul_sparse(&self, x: &[(usize, Scalar)], y: &[(usize, Scalar)]) -> Sparse {
        let mut acc = BTreeMap::new();
        for (i, a) in x {
            for (j, b) in y {
                let p = self.mul(*i, *j);
                if !p.is_empty() {
                    axpy(&mut acc, &(a * b), p);
                }
            }
        }
        finish(acc)
    }

    /// Nonzero products as `(left, right, result, coefficient)`, sorted.
    pub fn mult_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out: Vec<_> = self
            .mult
            .iter()
            .flat_map(|(&(x, y), v)| v.iter().map(move |(r, c)| (x, y, *r, c.clone())))
            .collect();
        out.sort_by_key(|a| (a.0, a.1, a.2));
        out
    }

    /// Product of the arrows along a word applied to `y` (first letter applied first).
    pub fn apply_word(&self, word: &[usize], y: Sparse) -> Sparse {
        let mut cur = y;
        for &a in word {
            cur = self.mul_sparse(&[(a, self.field.one())], &cur);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    /// Entry `[u][v]` is the dimension of the block `u -> v`.
    pub fn cartan(&self) -> Vec<Vec<usize>> {
        let n = self.num_vertices();
        (0..n).map(|u| (0..n).map(|v| self.block(u, v).len()).collect()).collect()
    }

    pub fn max_grade(&self) -> usize {
        self.basis.iter().map(|b| b.grade).max().unwrap_or(0)
    }

    pub fn check_associativity(&self) -> bool {
        for x in 0..self.dim() {
            for y in self.block_ids_into(self.basis[x].src) {
                let xy = self.mul(x, y);
                for z in self.block_ids_into(self.basis[y].src) {
                    let left = self.mul_sparse(xy, &[(z, self.field.one())]);
                    let yz = self.mul(y, z).to_vec();
                    let right = self.mul_sparse(&[(x, self.field.one())], &yz);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Idempotents act as two-sided units and grades add under multiplication.
    pub fn check_units_and_grading(&self) -> bool {
        let one = self.field.one();
        for (x, b) in self.basis.iter().enumerate() {
            if self.mul(self.idem[b.tgt], x) != [(x, one.clone())] || self.mul(x, self.idem[b.src]) != [(x, one.clone())] {
                return false;
            }
        }
        self.mult.iter().all(|(&(x, y), v)| {
            let g = self.basis[x].grade + self.basis[y].grade;
            v.iter().all(|(r, _)| self.basis[*r].grade == g)
        })
    }

    /// Basis ids whose target is `v`.
    fn block_ids_into(&self, v: usize) -> Vec<usize> {
        (0..self.num_vertices()).flat_map(|u| self.block(u, v).iter().copied()).collect()
    }

    /// Perturbs one unit-law structure constant (`e_v * x` becomes `2x`); only for negative tests.
    pub fn corrupt_for_testing(&mut self) {
        let hit = self.mult_entries().into_iter().find(|e| self.idem.contains(&e.0) && !self.idem.contains(&e.1));
        if let Some((x, y, _, _)) = hit {
            let v = self.mult.get_mut(&(x, y)).unwrap();
            v[0].1 = &v[0].1 + &self.field.one();
        }
        self.fp = self.compute_fingerprint();
    }

    pub fn opposite(&self) -> Algebra {
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElem { src: b.tgt, tgt: b.src, grade: b.grade, degree: b.degree })
            .collect();
        let mult = self
            .mult
            .iter()
            .map(|(&(x, y), v)| {
                let odd = self.basis[x].degree * self.basis[y].degree % 2 != 0;
                let v = if odd { v.iter().map(|(i, c)| (*i, -c)).collect() } else { v.clone() };
                ((y, x), v)
            })
            .collect();
        let words = self.words.iter().map(|w| w.iter().rev().copied().collect()).collect();
        Algebra::from_table(self.field, self.vertices.clone(), basis, self.idem.clone(), mult)
            .with_words(self.arrows.clone(), words)
    }

    /// Shifts the grading of each vertex: an element `u -> v` gains `shift[v] - shift[u]`.
    pub fn regrade(&self, shift: &[i64]) -> Algebra {
        let basis = self
            .basis
            .iter()
            .map(|b| BasisElem { degree: b.degree + shift[b.tgt] - shift[b.src], ..b.clone() })
            .collect();
        Algebra::from_table(self.field, self.vertices.clone(), basis, self.idem.clone(), self.mult.clone())
            .with_words(self.arrows.clone(), self.words.clone())
    }

    pub fn tensor(&self, other: &Algebra) -> Algebra {
        assert_eq!(self.field, other.field, "tensor of algebras over different fields");
        let (nb, db) = (other.num_vertices(), other.dim());
        let vid = |u: usize, u2: usize| u * nb + u2;
        let bid = |x: usize, y: usize| x * db + y;
        let mut vertices = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                vertices.push(join_names(a, b));
            }
        }
        let mut basis = Vec::with_capacity(self.dim() * db);
        for x in &self.basis {
            for y in &other.basis {
                basis.push(BasisElem {
                    src: vid(x.src, y.src),
                    tgt: vid(x.tgt, y.tgt),
                    grade: x.grade + y.grade,
                    degree: x.degree + y.degree,
                });
            }
        }
        let mut mult = HashMap::new();
        for ((x1, x2), vx) in &self.mult {
            for ((y1, y2), vy) in &other.mult {
                let mut out = Vec::with_capacity(vx.len() * vy.len());
                for (r, c) in vx {
                    for (s, d) in vy {
                        out.push((bid(*r, *s), c * d));
                    }
                }
                out.sort_by_key(|e| e.0);
                mult.insert((bid(*x1, *y1), bid(*x2, *y2)), out);
            }
        }
        let idem = (0..self.num_vertices())
            .flat_map(|u| (0..nb).map(move |u2| (u, u2)))
            .map(|(u, u2)| bid(self.idem[u], other.idem[u2]))
            .collect();
        let mut arrows = Vec::new();
        for &a in &self.arrows {
            for v in 0..nb {
                arrows.push(bid(a, other.idem[v]));
            }
        }
        for u in 0..self.num_vertices() {
            for &b in &other.arrows {
                arrows.push(bid(self.idem[u], b));
            }
        }
        arrows.sort_unstable();
        let mut words = Vec::with_capacity(basis.len());
        for (x, bx) in self.basis.iter().enumerate() {
            for (y, by) in other.basis.iter().enumerate() {
                let mut w: Vec<usize> = other.words[y].iter().map(|&b| bid(self.idem[bx.src], b)).collect();
                w.extend(self.words[x].iter().map(|&a| bid(a, other.idem[by.tgt])));
                words.push(w);
            }
        }
        Algebra::from_table(self.field, vertices, basis, idem, mult).with_words(arrows, words)
    }

    /// The corner algebra `e A e` for `e` the sum of idempotents at `keep`, with a fresh presentation.
    pub fn corner(&self, keep: &[usize]) -> Result<Algebra> {
        let mut newv = vec![usize::MAX; self.num_vertices()];
        for (i, &v) in keep.iter().enumerate() {
            if v >= self.num_vertices() || newv[v] != usize::MAX {
                return Err(Error::BadParameters(format!("bad corner vertex {v}")));
            }
            newv[v] = i;
        }
        let mut newb = vec![usize::MAX; self.dim()];
        let mut basis = Vec::new();
        for (i, b) in self.basis.iter().enumerate() {
            if newv[b.src] != usize::MAX && newv[b.tgt] != usize::MAX {
                newb[i] = basis.len();
                basis.push(BasisElem { src: newv[b.src], tgt: newv[b.tgt], ..b.clone() });
            }
        }
        let mut mult = HashMap::new();
        for (&(x, y), v) in &self.mult {
            if newb[x] != usize::MAX && newb[y] != usize::MAX {
                mult.insert((newb[x], newb[y]), v.iter().map(|(r, c)| (newb[*r], c.clone())).collect());
            }
        }
        let idem = keep.iter().map(|&v| newb[self.idem[v]]).collect();
        let vertices = keep.iter().map(|&v| self.vertices[v].clone()).collect();
        Algebra::from_table(self.field, vertices, basis, idem, mult).derive_presentation()
    }

    /// Recomputes arrows (a complement of rad^2 in rad, chosen among basis elements) and
    /// rebases onto a monomial basis in those arrows, graded by word length.
    pub fn derive_presentation(&self) -> Result<Algebra> {
        let n = self.num_vertices();
        for v in 0..n {
            if self.block(v, v) != [self.idem[v]] {
                return Err(Error::NotDirected(format!("vertex {:?} has a non-trivial local algebra", self.vertices[v])));
            }
        }
        let one = self.field.one();
        let mut pos = vec![0usize; self.dim()];
        for ids in self.blocks.values() {
            for (i, &b) in ids.iter().enumerate() {
                pos[b] = i;
            }
        }
        let local = |ids: &[usize], v: &[(usize, Scalar)]| -> Vec<Scalar> {
            let mut out = vec![self.field.zero(); ids.len()];
            for (b, c) in v {
                out[pos[*b]] = c.clone();
            }
            out
        };
        let mut keys: Vec<(usize, usize)> = self.blocks.keys().copied().filter(|(u, v)| u != v).collect();
        keys.sort_unstable();
        let mut arrows = Vec::new();
        for &(u, v) in &keys {
            let ids = self.block(u, v);
            let mut span = SpanBuilder::new(ids.len());
            for w in 0..n {
                if w == u || w == v {
                    continue;
                }
                for &x in self.block(w, v) {
                    for &y in self.block(u, w) {
                        let p = self.mul(x, y);
                        if !p.is_empty() {
                            span.insert(&local(ids, p));
                        }
                    }
                }
            }
            for &b in ids {
                if span.insert(&local(ids, &[(b, one.clone())])) {
                    arrows.push(b);
                }
            }
        }
        // Monomials by length: (word in old arrow ids, value in old coordinates, src, tgt).
        let mut mons: Vec<(Vec<usize>, Sparse, usize, usize)> =
            (0..n).map(|v| (vec![], vec![(self.idem[v], one.clone())], v, v)).collect();
        let mut spans: HashMap<(usize, usize), SpanBuilder> = HashMap::new();
        for v in 0..n {
            let mut s = SpanBuilder::new(1);
            s.insert(std::slice::from_ref(&one));
            spans.insert((v, v), s);
        }
        let mut level: Vec<usize> = (0..n).collect();
        while !level.is_empty() {
            let mut next = Vec::new();
            for &m in &level {
                for &a in &arrows {
                    let (u, t) = (mons[m].2, mons[m].3);
                    if self.basis[a].src != t {
                        continue;
                    }
                    let val = self.mul_sparse(&[(a, one.clone())], &mons[m].1);
                    if val.is_empty() {
                        continue;
                    }
                    let v = self.basis[a].tgt;
                    let ids = self.block(u, v);
                    let span = spans.entry((u, v)).or_insert_with(|| SpanBuilder::new(ids.len()));
                    if span.insert(&local(ids, &val)) {
                        let mut w = mons[m].0.clone();
                        w.push(a);
                        next.push(mons.len());
                        mons.push((w, val, u, v));
                    }
                }
            }
            level = next;
        }
        if mons.len() != self.dim() {
            return Err(Error::NotDirected(format!("arrows generate {} of {} dimensions", mons.len(), self.dim())));
        }
        self.rebase(mons)
    }

    /// Builds the algebra on a new monomial basis given in old coordinates.
    fn rebase(&self, mons: Vec<(Vec<usize>, Sparse, usize, usize)>) -> Result<Algebra> {
        let mut newid_of_arrow = HashMap::new();
        for (i, m) in mons.iter().enumerate() {
            if m.0.len() == 1 {
                newid_of_arrow.insert(m.0[0], i);
            }
        }
        let mut new_blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        for (i, m) in mons.iter().enumerate() {
            new_blocks.entry((m.2, m.3)).or_default().push(i);
        }
        // Per block, the inverse of the change of basis maps old coordinates to new ones.
        let mut to_new: HashMap<(usize, usize), (Vec<usize>, Matrix)> = HashMap::new();
        let mut pos = vec![0usize; self.dim()];
        for (key, old_ids) in &self.blocks {
            for (i, &b) in old_ids.iter().enumerate() {
                pos[b] = i;
            }
            let new_ids = new_blocks.get(key).cloned().unwrap_or_default();
            let cols: Vec<Vec<Scalar>> = new_ids
                .iter()
                .map(|&m| {
                    let mut c = vec![self.field.zero(); old_ids.len()];
                    for (b, s) in &mons[m].1 {
                        c[old_ids.iter().position(|x| x == b).unwrap()] = s.clone();
                    }
                    c
                })
                .collect();
            let t = Matrix::from_cols(self.field, old_ids.len(), &cols);
            let inv = inverse(&t).ok_or_else(|| Error::NotDirected("monomials are not a basis".into()))?;
            to_new.insert(*key, (new_ids, inv));
        }
        let convert = |key: (usize, usize), v: &[(usize, Scalar)]| -> Sparse {
            let (ids, inv) = &to_new[&key];
            let mut old = vec![self.field.zero(); ids.len()];
            for (b, c) in v {
                old[pos[*b]] = c.clone();
            }
            let coords = inv.mul_vec(&old);
            ids.iter().zip(coords).filter(|(_, c)| !c.is_zero()).map(|(i, c)| (*i, c)).collect()
        };
        let mut mult = HashMap::new();
        for (x, mx) in mons.iter().enumerate() {
            for &w in &(0..self.num_vertices()).collect::<Vec<_>>() {
                let Some(ys) = new_blocks.get(&(w, mx.2)) else { continue };
                for &y in ys {
                    let my = &mons[y];
                    let val = self.mul_sparse(&mx.1, &my.1);
                    if !val.is_empty() {
                        mult.insert((x, y), convert((my.2, mx.3), &val));
                    }
                }
            }
        }
        let basis: Vec<BasisElem> = mons
            .iter()
            .map(|m| BasisElem {
                src: m.2,
                tgt: m.3,
                grade: m.0.len(),
                degree: m.0.iter().map(|a| self.basis[*a].degree).sum(),
            })
            .collect();
        let idem = (0..self.num_vertices()).collect();
        let mut arrows: Vec<usize> = newid_of_arrow.values().copied().collect();
        arrows.sort_unstable();
        let words = mons.iter().map(|m| m.0.iter().map(|a| newid_of_arrow[a]).collect()).collect();
        Ok(Algebra::from_table(self.field, self.vertices.clone(), basis, idem, mult).with_words(arrows, words))
    }

    /// Arrow counts per block and the relation profile: for each path length, the number of
    /// quiver paths minus the dimension of that graded piece.
    pub fn gabriel(&self) -> Gabriel {
        let n = self.num_vertices();
        let mut arrows: Vec<(usize, usize)> = self.arrows.iter().map(|&a| (self.basis[a].src, self.basis[a].tgt)).collect();
        arrows.sort_unstable();
        let maxg = self.max_grade();
        // paths[v] counts paths of the current length ending at each vertex, from every start.
        let mut counts = vec![vec![0u128; n]; n];
        for (v, row) in counts.iter_mut().enumerate() {
            row[v] = 1;
        }
        let mut profile = Vec::new();
        for len in 1..=maxg + 1 {
            let mut next = vec![vec![0u128; n]; n];
            for (u, row) in counts.iter().enumerate() {
                for &(s, t) in &arrows {
                    next[u][t] += row[s];
                }
            }
            counts = next;
            let paths: u128 = counts.iter().flatten().sum();
            let dim = self.basis.iter().filter(|b| b.grade == len).count() as u128;
            profile.push((paths - dim.min(paths)) as usize);
        }
        Gabriel { vertices: self.vertices.clone(), arrows, relation_profile: profile }
    }

    /// Cheap fingerprint used to reject modules and complexes over different algebras.
    pub fn fingerprint(&self) -> u64 {
        self.fp
    }

    fn compute_fingerprint(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.field.hash(&mut h);
        self.vertices.hash(&mut h);
        for b in &self.basis {
            (b.src, b.tgt, b.grade, b.degree).hash(&mut h);
        }
        for (x, y, r, c) in self.mult_entries() {
            (x, y, r, c.to_string()).hash(&mut h);
        }
        h.finish()
    }
}

/// Gabriel quiver data recovered from an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Gabriel {
    pub vertices: Vec<String>,
    pub arrows: Vec<(usize, usize)>,
    pub relation_profile: Vec<usize>,
}

pub fn join_names(a: &str, b: &str) -> String {
    match (a.is_empty(), b.is_empty()) {
        (true, _) => b.to_string(),
        (_, true) => a.to_string(),
        _ => format!("{a},{b}"),
    }
}
