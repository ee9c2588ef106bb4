//! Index sets and closed-form constructors for the algebras of type A that everything else
//! compares against.

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::quiver::{present_algebra, Quiver, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    /// Strictly increasing, ordered lexicographically.
    N,
    /// All tuples in `1..=n`, ordered by number of even entries.
    IHat,
    /// Strictly increasing, ordered by number of even entries.
    I,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexTuple {
    pub entries: Vec<usize>,
    pub kind: Kind,
}

impl IndexTuple {
    pub fn new(entries: Vec<usize>, kind: Kind) -> IndexTuple {
        IndexTuple { entries, kind }
    }

    pub fn n(entries: &[usize]) -> IndexTuple {
        IndexTuple::new(entries.to_vec(), Kind::N)
    }

    /// Comma-joined entries; the vertex name used by every constructor.
    pub fn name(&self) -> String {
        tuple_name(&self.entries)
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        let e = &self.entries;
        if e.iter().any(|&x| x < 1 || x > n) {
            return Err(Error::BadParameters(format!("{e:?} has entries outside 1..={n}")));
        }
        if self.kind != Kind::IHat && e.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::BadParameters(format!("{e:?} is not strictly increasing")));
        }
        Ok(())
    }
}

pub fn tuple_name(e: &[usize]) -> String {
    e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn parse_tuple(s: &str) -> Result<Vec<usize>> {
    if s.trim().is_empty() {
        return Ok(vec![]);
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| Error::BadParameters(format!("bad index tuple {s:?}"))))
        .collect()
}

/// Strictly increasing `d`-tuples in `1..=n`, lexicographic.
pub fn increasing_tuples(n: usize, d: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, d, &mut Vec::new(), &mut out);
    out
}

pub fn parity_index(entries: &[usize]) -> usize {
    entries.iter().filter(|&&x| x % 2 == 0).count()
}

pub fn index_set(n: usize, d: usize, kind: Kind) -> Result<Vec<IndexTuple>> {
    if n < 1 || d < 1 || (kind != Kind::IHat && d > n) {
        return Err(Error::BadParameters(format!("index set needs n >= d >= 1, got n={n}, d={d}")));
    }
    let mut tuples = match kind {
        Kind::N | Kind::I => increasing_tuples(n, d),
        Kind::IHat => {
            let mut out = vec![vec![]];
            for _ in 0..d {
                out = out.into_iter().flat_map(|t: Vec<usize>| (1..=n).map(move |x| [t.clone(), vec![x]].concat())).collect();
            }
            out
        }
    };
    if kind != Kind::N {
        tuples.sort_by_key(|t| parity_index(t));
    }
    Ok(tuples.into_iter().map(|e| IndexTuple::new(e, kind)).collect())
}

/// `i_1 <= j_1 < i_2 <= j_2 < ... < i_d <= j_d`.
pub fn intertwines(i: &IndexTuple, j: &IndexTuple) -> Result<bool> {
    if i.kind != Kind::N || j.kind != Kind::N || i.entries.len() != j.entries.len() {
        return Err(Error::KindMismatch);
    }
    Ok(intertwines_raw(&i.entries, &j.entries))
}

pub fn intertwines_raw(i: &[usize], j: &[usize]) -> bool {
    let d = i.len();
    (0..d).all(|h| i[h] <= j[h] && (h + 1 == d || j[h] < i[h + 1]))
}

/// The reversed-complement formula `(n+d-2-i_d, ..., n+d-2-i_1)` together with a flag telling
/// whether the result stays inside `N_{n,d}`.
pub fn iop(i: &IndexTuple, n: usize, d: usize) -> (Vec<i64>, bool) {
    let c = (n + d) as i64 - 2;
    let out: Vec<i64> = i.entries.iter().rev().map(|&x| c - x as i64).collect();
    let ok = out.iter().all(|&x| x >= 1 && x <= n as i64) && out.windows(2).all(|w| w[0] < w[1]);
    (out, ok)
}

/// The projective labelled by `I` is `A e_{rho(I)}` with `rho(I) = (n+1-i_d, ..., n+1-i_1)`.
/// With this labelling `Hom(P_I, P_J)` is nonzero exactly when `J` intertwines `I`.
pub fn rho(i: &[usize], n: usize) -> Vec<usize> {
    i.iter().rev().map(|&x| n + 1 - x).collect()
}

/// Endpoints `(α, β)`, `β - α = i`, of the arc attached to index `i` among boundary components
/// `0..=n`: the arcs swing around the middle, `β` being `n - α` or `n - α - 1` for even `n` and
/// `n - α` or `n - α + 1` for odd `n`.
pub fn swinging_arc(n: usize, i: usize) -> (usize, usize) {
    let a = if n.is_multiple_of(2) { (n - i) / 2 } else { (n - i).div_ceil(2) };
    (a, a + i)
}

/// Path algebra of type A_n with odd vertices as sources.
pub fn build_alternating(field: Field, n: usize) -> Result<Algebra> {
    if n < 1 {
        return Err(Error::BadParameters("n must be at least 1".into()));
    }
    let vertices = (1..=n).map(|v| v.to_string()).collect();
    let mut arrows = Vec::new();
    for v in (1..=n).step_by(2) {
        if v > 1 {
            arrows.push((v - 1, v - 2));
        }
        if v < n {
            arrows.push((v - 1, v));
        }
    }
    present_algebra(field, &Quiver::new(vertices, arrows), &[])
}

pub fn build_ghat(field: Field, n: usize, d: usize) -> Result<Algebra> {
    if d < 1 {
        return Err(Error::BadParameters("d must be at least 1".into()));
    }
    let alt = build_alternating(field, n)?;
    let mut out = alt.clone();
    for _ in 1..d {
        out = out.tensor(&alt);
    }
    Ok(out)
}

/// Quiver on `vertices` whose arrows are the allowed single-coordinate moves, with a
/// commutativity relation for every square and a zero relation on every length-two path whose
/// partner route leaves the vertex set.
fn square_presentation(
    field: Field,
    tuples: &[Vec<usize>],
    moves: impl Fn(&[usize]) -> Vec<(usize, Vec<usize>)>,
) -> Result<Algebra> {
    use std::collections::HashMap;
    let index: HashMap<Vec<usize>, usize> = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    let mut arrows = Vec::new();
    let mut arrow_of: HashMap<(usize, usize), usize> = HashMap::new();
    // out[v] = (coordinate, arrow id, target)
    let mut out: Vec<Vec<(usize, usize, usize)>> = vec![vec![]; tuples.len()];
    for (i, t) in tuples.iter().enumerate() {
        for (h, u) in moves(t) {
            if let Some(&j) = index.get(&u) {
                arrow_of.insert((i, j), arrows.len());
                out[i].push((h, arrows.len(), j));
                arrows.push((i, j));
            }
        }
    }
    let mut rels = Vec::new();
    for (i, t) in tuples.iter().enumerate() {
        for &(h, a, j) in &out[i] {
            for &(k, b, l) in &out[j] {
                if k == h {
                    continue;
                }
                // Partner route: move coordinate k first, then h, landing at the same tuple.
                let mid: Vec<usize> = t
                    .iter()
                    .enumerate()
                    .map(|(c, &x)| if c == k { tuples[l][c] } else { x })
                    .collect();
                let partner = index.get(&mid).and_then(|&m| {
                    let a2 = arrow_of.get(&(i, m))?;
                    let b2 = arrow_of.get(&(m, l))?;
                    Some((m, *a2, *b2))
                });
                match partner {
                    Some((_, a2, b2)) => {
                        if (a, b) < (a2, b2) {
                            rels.push(Relation::commutativity(vec![a, b], vec![a2, b2], field));
                        }
                    }
                    None => rels.push(Relation::zero_path(vec![a, b], field)),
                }
            }
        }
    }
    let names = tuples.iter().map(|t| tuple_name(t)).collect();
    present_algebra(field, &Quiver::new(names, arrows), &rels)
}

/// Vertices `I_{n,d}`; arrows move one odd coordinate by one step, staying strictly increasing.
pub fn build_g(field: Field, n: usize, d: usize) -> Result<Algebra> {
    let tuples: Vec<Vec<usize>> = index_set(n, d, Kind::I)?.into_iter().map(|t| t.entries).collect();
    square_presentation(field, &tuples, |t| {
        let mut out = Vec::new();
        for (h, &x) in t.iter().enumerate() {
            if x % 2 == 1 {
                for y in [x.wrapping_sub(1), x + 1] {
                    if y >= 1 && y <= n {
                        let mut u = t.to_vec();
                        u[h] = y;
                        out.push((h, u));
                    }
                }
            }
        }
        out
    })
}

/// Vertices `N_{n,d}`; arrows `I -> I + e_h`.
pub fn build_a(field: Field, n: usize, d: usize) -> Result<Algebra> {
    let tuples: Vec<Vec<usize>> = index_set(n, d, Kind::N)?.into_iter().map(|t| t.entries).collect();
    square_presentation(field, &tuples, |t| {
        (0..t.len())
            .map(|h| {
                let mut u = t.to_vec();
                u[h] += 1;
                (h, u)
            })
            .collect()
    })
}

/// The corner of `build_ghat(n, d)` at the strictly increasing vertices.
pub fn sym_quotient(ghat: &Algebra, n: usize, d: usize) -> Result<Algebra> {
    let keep: Vec<usize> = index_set(n, d, Kind::I)?
        .iter()
        .map(|t| ghat.vertex_index(&t.name()).ok_or_else(|| Error::BadParameters(format!("vertex {} missing", t.name()))))
        .collect::<Result<_>>()?;
    if ghat.num_vertices() != n.pow(d as u32) {
        return Err(Error::BadParameters("input is not build_ghat(n, d)".into()));
    }
    ghat.corner(&keep)
}

/// Vertex bijection matching equal names.
pub fn name_map(a: &Algebra, b: &Algebra) -> Result<Vec<usize>> {
    a.vertices
        .iter()
        .map(|v| b.vertex_index(v).ok_or_else(|| Error::VertexMapInvalid(format!("no vertex named {v:?}"))))
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r as usize
}
