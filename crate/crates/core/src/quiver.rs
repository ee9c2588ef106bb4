//! Acyclic quivers, homogeneous relations, and the per-length computation of the quotient
//! of the path algebra.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::{axpy, finish, Algebra, BasisElem, Sparse};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    /// `(source, target)` per arrow.
    pub arrows: Vec<(usize, usize)>,
}

/// A linear combination of parallel paths; a path lists arrow indices, first applied first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Vec<usize>, Scalar)>,
}

impl Relation {
    pub fn zero_path(path: Vec<usize>, field: Field) -> Relation {
        Relation { terms: vec![(path, field.one())] }
    }

    pub fn commutativity(p: Vec<usize>, q: Vec<usize>, field: Field) -> Relation {
        Relation { terms: vec![(p, field.one()), (q, -field.one())] }
    }
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(usize, usize)>) -> Quiver {
        Quiver { vertices, arrows }
    }

    pub fn is_acyclic(&self) -> bool {
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for &(_, t) in &self.arrows {
            indeg[t] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(s, t) in &self.arrows {
                if s == v {
                    indeg[t] -= 1;
                    if indeg[t] == 0 {
                        stack.push(t);
                    }
                }
            }
        }
        seen == n
    }

    fn path_ends(&self, p: &[usize]) -> Option<(usize, usize)> {
        let (&first, &last) = (p.first()?, p.last()?);
        for w in p.windows(2) {
            if self.arrows[w[0]].1 != self.arrows[w[1]].0 {
                return None;
            }
        }
        Some((self.arrows[first].0, self.arrows[last].1))
    }
}

/// The path algebra of `q` modulo the ideal generated by `rels`.
///
/// Works one path length at a time: the candidates of length `L` are an arrow applied to a
/// basis element of length `L - 1`, and the relations applied to basis elements of the right
/// length cut this space down. Since every relation is homogeneous nothing else is needed.
pub fn present_algebra(field: Field, q: &Quiver, rels: &[Relation]) -> Result<Algebra> {
    if !q.is_acyclic() {
        return Err(Error::CyclicQuiver);
    }
    // (src, tgt, length) per relation.
    let mut rinfo = Vec::new();
    for (i, r) in rels.iter().enumerate() {
        if r.terms.is_empty() || r.terms.iter().all(|t| t.1.is_zero()) {
            return Err(Error::BadParameters(format!("relation {i} is zero")));
        }
        let ends: Vec<_> = r.terms.iter().map(|t| q.path_ends(&t.0)).collect();
        if ends.iter().any(|e| e.is_none() || *e != ends[0]) {
            return Err(Error::RelationNotParallel(i));
        }
        let len = r.terms[0].0.len();
        if r.terms.iter().any(|t| t.0.len() != len) {
            return Err(Error::RelationNotHomogeneous(i));
        }
        let (s, t) = ends[0].unwrap();
        rinfo.push((s, t, len));
    }
    let n = q.vertices.len();
    let one = field.one();

    let mut basis: Vec<BasisElem> = Vec::new();
    let mut words: Vec<Vec<usize>> = Vec::new();
    // by_len[L][(u, v)] lists basis ids of length L in block u -> v.
    let mut by_len: Vec<HashMap<(usize, usize), Vec<usize>>> = Vec::new();
    // leftmul[(arrow, x)] is arrow * x in the basis.
    let mut leftmul: HashMap<(usize, usize), Sparse> = HashMap::new();

    let mut level0 = HashMap::new();
    for v in 0..n {
        level0.insert((v, v), vec![basis.len()]);
        basis.push(BasisElem { src: v, tgt: v, grade: 0, degree: 0 });
        words.push(vec![]);
    }
    by_len.push(level0);

    // Applies a path (arrow list) to an element of the algebra, using known left products.
    fn apply(path: &[usize], x: Sparse, leftmul: &HashMap<(usize, usize), Sparse>) -> Sparse {
        let mut cur = x;
        for &a in path {
            let mut acc = BTreeMap::new();
            for (b, c) in &cur {
                if let Some(v) = leftmul.get(&(a, *b)) {
                    axpy(&mut acc, c, v);
                }
            }
            cur = finish(acc);
            if cur.is_empty() {
                break;
            }
        }
        cur
    }

    let mut len = 1;
    loop {
        let prev = &by_len[len - 1];
        // Candidates per block: (arrow, basis element of length len - 1).
        let mut cands: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        let mut pkeys: Vec<_> = prev.keys().copied().collect();
        pkeys.sort_unstable();
        for (a, &(s, t)) in q.arrows.iter().enumerate() {
            for &(u, w) in &pkeys {
                if w == s {
                    for &x in &prev[&(u, w)] {
                        cands.entry((u, t)).or_default().push((a, x));
                    }
                }
            }
        }
        if cands.is_empty() {
            break;
        }
        let mut level = HashMap::new();
        for (&(u, v), cs) in &cands {
            let col_of: HashMap<(usize, usize), usize> = cs.iter().enumerate().map(|(i, c)| (*c, i)).collect();
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for (ri, r) in rels.iter().enumerate() {
                let (rs, rt, rl) = rinfo[ri];
                if rt != v || rl > len {
                    continue;
                }
                let Some(ys) = by_len[len - rl].get(&(u, rs)) else { continue };
                for &y in ys {
                    let mut row = vec![field.zero(); cs.len()];
                    for (path, c) in &r.terms {
                        let (last, rest) = path.split_last().unwrap();
                        let inner = apply(rest, vec![(y, one.clone())], &leftmul);
                        for (b, d) in inner {
                            let col = col_of[&(*last, b)];
                            row[col] = &row[col] + &(c * &d);
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
            let m = Matrix::from_rows(field, rows, cs.len());
            let r = m.rref();
            let mut is_pivot = vec![false; cs.len()];
            for &p in &r.pivots {
                is_pivot[p] = true;
            }
            let mut id_of_col = vec![usize::MAX; cs.len()];
            let mut ids = Vec::new();
            for (i, &(a, x)) in cs.iter().enumerate() {
                if !is_pivot[i] {
                    id_of_col[i] = basis.len();
                    ids.push(basis.len());
                    basis.push(BasisElem { src: u, tgt: v, grade: len, degree: 0 });
                    let mut w = words[x].clone();
                    w.push(a);
                    words.push(w);
                    leftmul.insert((a, x), vec![(id_of_col[i], one.clone())]);
                }
            }
            for (ri, &p) in r.pivots.iter().enumerate() {
                let mut val = Vec::new();
                for (j, &id) in id_of_col.iter().enumerate() {
                    if id != usize::MAX {
                        let c = r.matrix.get(ri, j);
                        if !c.is_zero() {
                            val.push((id, -c));
                        }
                    }
                }
                leftmul.insert(cs[p], val);
            }
            if !ids.is_empty() {
                level.insert((u, v), ids);
            }
        }
        by_len.push(level);
        len += 1;
    }

    // Arrow ids: the length-one basis elements (an arrow killed by a linear relation has none).
    let mut arrow_id = vec![None; q.arrows.len()];
    for (i, w) in words.iter().enumerate() {
        if w.len() == 1 && basis[i].grade == 1 {
            arrow_id[w[0]] = Some(i);
        }
    }
    let mut mult = HashMap::new();
    for (x, bx) in basis.iter().enumerate() {
        for (y, by) in basis.iter().enumerate() {
            if by.tgt != bx.src {
                continue;
            }
            let val = apply(&words[x], vec![(y, one.clone())], &leftmul);
            if !val.is_empty() {
                mult.insert((x, y), val);
            }
        }
    }
    let idem = (0..n).collect();
    let arrows: Vec<usize> = arrow_id.iter().flatten().copied().collect();
    let words = words
        .into_iter()
        .map(|w| w.into_iter().map(|a| arrow_id[a].expect("word through a vanishing arrow")).collect())
        .collect();
    Ok(Algebra::from_table(field, q.vertices.clone(), basis, idem, mult).with_words(arrows, words))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn linear3() -> Quiver {
        Quiver::new(vec!["1".into(), "2".into(), "3".into()], vec![(0, 1), (1, 2)])
    }

    #[test]
    fn linear_a3() {
        let a = present_algebra(Field::Rational, &linear3(), &[]).unwrap();
        assert_eq!(a.dim(), 6);
        assert!(a.check_associativity());
        assert!(a.check_units_and_grading());
    }

    #[test]
    fn linear_a3_zero_relation() {
        let rel = Relation::zero_path(vec![0, 1], Field::Rational);
        let a = present_algebra(Field::Rational, &linear3(), &[rel]).unwrap();
        assert_eq!(a.dim(), 5);
        assert!(a.check_associativity());
    }

    #[test]
    fn commutative_square() {
        // 0 -> 1 -> 3, 0 -> 2 -> 3
        let q = Quiver::new((0..4).map(|i| i.to_string()).collect(), vec![(0, 1), (1, 3), (0, 2), (2, 3)]);
        let f = Field::Rational;
        let a = present_algebra(f, &q, &[Relation::commutativity(vec![0, 1], vec![2, 3], f)]).unwrap();
        assert_eq!(a.dim(), 9);
        assert_eq!(a.cartan()[0][3], 1);
        assert!(a.check_associativity());
    }

    #[test]
    fn errors() {
        let f = Field::Rational;
        let cyc = Quiver::new(vec!["a".into(), "b".into()], vec![(0, 1), (1, 0)]);
        assert!(matches!(present_algebra(f, &cyc, &[]), Err(Error::CyclicQuiver)));
        let bad = Relation { terms: vec![(vec![0], f.one()), (vec![1], f.one())] };
        assert!(matches!(present_algebra(f, &linear3(), &[bad]), Err(Error::RelationNotParallel(0))));
        let q = Quiver::new((0..3).map(|i| i.to_string()).collect(), vec![(0, 1), (1, 2), (0, 2)]);
        let mixed = Relation { terms: vec![(vec![0, 1], f.one()), (vec![2], f.one())] };
        assert!(matches!(present_algebra(f, &q, &[mixed]), Err(Error::RelationNotHomogeneous(0))));
    }
}
