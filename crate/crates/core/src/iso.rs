//! Isomorphism certificates between presented algebras along a given vertex bijection.
//!
//! Each arrow of the source is sent to a nonzero multiple of an arrow of the target in the
//! matching block. The multiples solve a multiplicative linear system read off from the
//! structure constants; the final map is checked on every composable basis pair.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{Algebra, Sparse};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::{inverse, Matrix};

#[derive(Clone, Debug, Serialize)]
pub struct IsoCertificate {
    pub vmap: Vec<usize>,
    /// `(arrow of A, arrow of B, scalar)`: the arrow is sent to scalar times the image arrow.
    pub arrows: Vec<(usize, usize, String)>,
    /// Image of every basis element of A in B's basis.
    #[serde(skip)]
    pub images: Vec<Sparse>,
}

/// Tries to certify `A ≅ B` with vertex `u` of A sent to `vmap[u]`.
pub fn find_isomorphism(a: &Algebra, b: &Algebra, vmap: &[usize]) -> Result<Option<IsoCertificate>> {
    let n = a.num_vertices();
    if vmap.len() != n || b.num_vertices() != n {
        return Err(Error::VertexMapInvalid(format!("{} vertices against {}", n, b.num_vertices())));
    }
    let mut seen = vec![false; n];
    for &v in vmap {
        if v >= n || seen[v] {
            return Err(Error::VertexMapInvalid("not a bijection".into()));
        }
        seen[v] = true;
    }
    let (ca, cb) = (a.cartan(), b.cartan());
    for u in 0..n {
        for v in 0..n {
            if ca[u][v] != cb[vmap[u]][vmap[v]] {
                return Err(Error::VertexMapInvalid(format!(
                    "Cartan entry ({}, {}) is {} but {} on the other side",
                    a.vertices[u], a.vertices[v], ca[u][v], cb[vmap[u]][vmap[v]]
                )));
            }
        }
    }
    if a.field != b.field {
        return Ok(None);
    }
    let a = ensure_presented(a)?;
    let b = ensure_presented(b)?;
    let options: Vec<Vec<usize>> = a
        .arrows
        .iter()
        .map(|&x| {
            let (s, t) = (vmap[a.basis[x].src], vmap[a.basis[x].tgt]);
            b.arrows.iter().copied().filter(|&y| b.basis[y].src == s && b.basis[y].tgt == t).collect()
        })
        .collect();
    if options.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let mut choice = vec![0usize; options.len()];
    loop {
        let pick: Vec<usize> = options.iter().zip(&choice).map(|(o, &c)| o[c]).collect();
        let mut distinct = pick.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() == pick.len() {
            if let Some(cert) = try_assignment(&a, &b, vmap, &pick) {
                return Ok(Some(cert));
            }
        }
        // Odometer over the choices.
        let mut i = 0;
        loop {
            if i == choice.len() {
                return Ok(None);
            }
            choice[i] += 1;
            if choice[i] < options[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn ensure_presented(x: &Algebra) -> Result<std::borrow::Cow<'_, Algebra>> {
    if x.words.len() == x.dim() {
        Ok(std::borrow::Cow::Borrowed(x))
    } else {
        Ok(std::borrow::Cow::Owned(x.derive_presentation()?))
    }
}

fn try_assignment(a: &Algebra, b: &Algebra, vmap: &[usize], pick: &[usize]) -> Option<IsoCertificate> {
    let one = a.field.one();
    let m = a.arrows.len();
    let arrow_pos: HashMap<usize, usize> = a.arrows.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    // Exponent vector of each monomial and its image without scalars.
    let expo: Vec<Vec<i64>> = a
        .words
        .iter()
        .map(|w| {
            let mut e = vec![0i64; m];
            for x in w {
                e[arrow_pos[x]] += 1;
            }
            e
        })
        .collect();
    let beta: Vec<Sparse> = (0..a.dim())
        .map(|x| {
            let w: Vec<usize> = a.words[x].iter().map(|y| pick[arrow_pos[y]]).collect();
            b.apply_word(&w, vec![(b.idem[vmap[a.basis[x].src]], one.clone())])
        })
        .collect();
    // Per block of A: the beta images must form a basis of the matching block of B.
    let mut to_beta: HashMap<(usize, usize), (Vec<usize>, Vec<usize>, Matrix)> = HashMap::new();
    for u in 0..a.num_vertices() {
        for v in 0..a.num_vertices() {
            let ids = a.block(u, v);
            if ids.is_empty() {
                continue;
            }
            let bids = b.block(vmap[u], vmap[v]).to_vec();
            let cols: Vec<Vec<_>> = ids.iter().map(|&x| dense(&beta[x], &bids, a)).collect();
            let t = Matrix::from_cols(a.field, bids.len(), &cols);
            let inv = inverse(&t)?;
            to_beta.insert((u, v), (ids.to_vec(), bids, inv));
        }
    }
    let mut rows: Vec<(Vec<i64>, Scalar)> = Vec::new();
    for (i, &x) in a.arrows.iter().enumerate() {
        let (s, t) = (a.basis[x].src, a.basis[x].tgt);
        for u in 0..a.num_vertices() {
            for &w in a.block(u, s) {
                let c = a.mul(x, w);
                let bb = b.mul_sparse(&[(pick[i], one.clone())], &beta[w]);
                let Some((ids, bids, inv)) = to_beta.get(&(u, t)) else {
                    if c.is_empty() && bb.is_empty() {
                        continue;
                    }
                    return None;
                };
                let nu = inv.mul_vec(&dense(&bb, bids, a));
                for (k, &wk) in ids.iter().enumerate() {
                    let ck = c.iter().find(|e| e.0 == wk).map(|e| e.1.clone());
                    match (ck, nu[k].is_zero()) {
                        (None, true) => {}
                        (Some(ck), false) => {
                            let mut e = expo[w].clone();
                            e[i] += 1;
                            for (j, v) in expo[wk].iter().enumerate() {
                                e[j] -= v;
                            }
                            rows.push((e, ck.div(&nu[k])));
                        }
                        _ => return None,
                    }
                }
            }
        }
    }
    let lambda = solve_multiplicative(rows, m, &one)?;
    let images: Vec<Sparse> = (0..a.dim())
        .map(|x| {
            let mut s = one.clone();
            for (j, e) in expo[x].iter().enumerate() {
                if *e != 0 {
                    s = &s * &lambda[j].powi(*e);
                }
            }
            beta[x].iter().map(|(y, c)| (*y, c * &s)).collect()
        })
        .collect();
    for x in 0..a.dim() {
        for u in 0..a.num_vertices() {
            for &y in a.block(u, a.basis[x].src) {
                let lhs: Sparse = {
                    let mut acc = std::collections::BTreeMap::new();
                    for (r, c) in a.mul(x, y) {
                        crate::algebra::axpy(&mut acc, c, &images[*r]);
                    }
                    crate::algebra::finish(acc)
                };
                if lhs != b.mul_sparse(&images[x], &images[y]) {
                    return None;
                }
            }
        }
    }
    let arrows = a.arrows.iter().enumerate().map(|(i, &x)| (x, pick[i], lambda[i].to_string())).collect();
    Some(IsoCertificate { vmap: vmap.to_vec(), arrows, images })
}

fn dense(v: &[(usize, Scalar)], ids: &[usize], a: &Algebra) -> Vec<Scalar> {
    let mut out = vec![a.field.zero(); ids.len()];
    for (x, c) in v {
        let p = ids.iter().position(|y| y == x).expect("element outside its block");
        out[p] = c.clone();
    }
    out
}

/// Solves `prod_j lambda_j^{e_j} = rhs` for every row, by unimodular integer row operations.
fn solve_multiplicative(mut rows: Vec<(Vec<i64>, Scalar)>, m: usize, one: &Scalar) -> Option<Vec<Scalar>> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..m {
        loop {
            let nz: Vec<usize> = (top..rows.len()).filter(|&r| rows[r].0[col] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&r) = nz.first() {
                    rows.swap(top, r);
                    pivots.push((top, col));
                    top += 1;
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&r| rows[r].0[col].abs()).unwrap();
            for &r in &nz {
                if r == p {
                    continue;
                }
                let q = rows[r].0[col] / rows[p].0[col];
                if q == 0 {
                    continue;
                }
                let (pe, ps) = rows[p].clone();
                for (x, y) in rows[r].0.iter_mut().zip(&pe) {
                    *x -= q * y;
                }
                rows[r].1 = rows[r].1.div(&ps.powi(q));
            }
        }
    }
    if rows[top..].iter().any(|r| !r.1.is_one()) {
        return None;
    }
    let mut lambda = vec![one.clone(); m];
    for &(r, c) in pivots.iter().rev() {
        let (e, rhs) = &rows[r];
        let mut val = rhs.clone();
        for j in c + 1..m {
            if e[j] != 0 {
                val = val.div(&lambda[j].powi(e[j]));
            }
        }
        let p = e[c];
        let base = if p < 0 { val.inv() } else { val };
        lambda[c] = base.root(p.unsigned_abs())?;
    }
    Some(lambda)
}
