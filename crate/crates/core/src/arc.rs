//! Arc systems in a disk with stops on its boundary, their products in the symmetric
//! products of the disk, and morphisms as strand diagrams of boundary chords.
//!
//! The boundary components are labelled `0..=n` counter-clockwise; component `c` runs from
//! stop `p_c` to stop `p_{c+1}`. Endpoints inside a component sit at slots `1, 2, ...` in
//! counter-clockwise order. A chord runs inside one component from a slot to an earlier slot,
//! that is clockwise along the boundary.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, BasisElem};
use crate::complex::{cone, hom_complex, HomComplexResult, Morphism, ProjComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{rank, solve, Matrix};
use crate::zoo::{index_set, swinging_arc, tuple_name, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub a: usize,
    #[serde(rename = "slotA")]
    pub slot_a: usize,
    pub b: usize,
    #[serde(rename = "slotB")]
    pub slot_b: usize,
}

impl Arc {
    pub fn slot_in(&self, c: usize) -> Option<usize> {
        if self.a == c {
            Some(self.slot_a)
        } else if self.b == c {
            Some(self.slot_b)
        } else {
            None
        }
    }

    fn ends(&self) -> [(usize, usize); 2] {
        [(self.a, self.slot_a), (self.b, self.slot_b)]
    }
}

/// A declared collection: arcs plus product objects, each a sorted list of arc indices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Collection {
    pub n: usize,
    pub d: usize,
    pub arcs: Vec<Arc>,
    pub objects: Vec<Vec<usize>>,
    #[serde(default)]
    pub names: Vec<String>,
}

/// Places arcs with the given component pairs so that they are pairwise disjoint: inside a
/// component, endpoints whose other end lies further counter-clockwise come first.
pub fn place_arcs(n: usize, pairs: &[(usize, usize)]) -> Result<Vec<Arc>> {
    let m = n + 1;
    let mut slots: Vec<Vec<(usize, usize, bool)>> = vec![vec![]; m];
    for (idx, &(a, b)) in pairs.iter().enumerate() {
        if a >= m || b >= m || a == b {
            return Err(Error::BadParameters(format!("arc ({a},{b}) is not an arc between distinct components of 0..={n}")));
        }
        slots[a].push(((b + m - a) % m, idx, true));
        slots[b].push(((a + m - b) % m, idx, false));
    }
    let mut arcs: Vec<Arc> = pairs.iter().map(|&(a, b)| Arc { a, slot_a: 0, b, slot_b: 0 }).collect();
    for list in &mut slots {
        list.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        for (pos, &(_, idx, is_a)) in list.iter().enumerate() {
            if is_a {
                arcs[idx].slot_a = pos + 1;
            } else {
                arcs[idx].slot_b = pos + 1;
            }
        }
    }
    validate_arcs(n, &arcs)?;
    Ok(arcs)
}

/// Pairwise disjointness (no interleaved endpoints), distinct slots, no isotopic pairs.
pub fn validate_arcs(n: usize, arcs: &[Arc]) -> Result<()> {
    let mut seen = HashMap::new();
    for (i, arc) in arcs.iter().enumerate() {
        for (c, s) in arc.ends() {
            if c > n || s == 0 {
                return Err(Error::BadParameters(format!("arc {i} has an endpoint outside the disk")));
            }
            if let Some(j) = seen.insert((c, s), i) {
                return Err(Error::ArcsIntersect(j, i));
            }
        }
        if arc.a == arc.b {
            return Err(Error::BadParameters(format!("arc {i} has both ends on component {}", arc.a)));
        }
    }
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            let (x, y) = (arcs[i], arcs[j]);
            let (p, q) = ordered(x);
            let inside = |e: (usize, usize)| p < e && e < q;
            if inside((y.a, y.slot_a)) != inside((y.b, y.slot_b)) {
                return Err(Error::ArcsIntersect(i, j));
            }
            let key = |a: Arc| (a.a.min(a.b), a.a.max(a.b));
            if key(x) == key(y) {
                return Err(Error::NotDisjoint(format!("arcs {i} and {j} join the same components")));
            }
        }
    }
    Ok(())
}

fn ordered(a: Arc) -> ((usize, usize), (usize, usize)) {
    let (x, y) = ((a.a, a.slot_a), (a.b, a.slot_b));
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

/// The arcs `L_1, ..., L_n` swinging around the middle of the disk.
pub fn swinging_arcs(n: usize) -> Result<Vec<Arc>> {
    let pairs: Vec<(usize, usize)> = (1..=n).map(|i| swinging_arc(n, i)).collect();
    place_arcs(n, &pairs)
}

/// The arcs `l_1, ..., l_n`, `l_i` joining component 0 to component `i`.
pub fn fan_arcs(n: usize) -> Result<Vec<Arc>> {
    let pairs: Vec<(usize, usize)> = (1..=n).map(|i| (0, i)).collect();
    place_arcs(n, &pairs)
}

/// Products `L_I` for `I` in `I_{n,d}`, in that order.
pub fn swinging_collection(n: usize, d: usize) -> Result<Collection> {
    let arcs = swinging_arcs(n)?;
    let tuples = index_set(n, d, Kind::I)?;
    Ok(Collection {
        n,
        d,
        arcs,
        objects: tuples.iter().map(|t| t.entries.iter().map(|i| i - 1).collect()).collect(),
        names: tuples.iter().map(|t| t.name()).collect(),
    })
}

/// Products `l_J` for `J` in `N_{n,d}`, in lexicographic order.
pub fn fan_collection(n: usize, d: usize) -> Result<Collection> {
    let arcs = fan_arcs(n)?;
    let tuples = index_set(n, d, Kind::N)?;
    Ok(Collection {
        n,
        d,
        arcs,
        objects: tuples.iter().map(|t| t.entries.iter().map(|i| i - 1).collect()).collect(),
        names: tuples.iter().map(|t| t.name()).collect(),
    })
}

/// True when every region cut out by the arcs contains at most one stop. Regions are traced
/// along the boundary, jumping across an arc whenever an endpoint is met.
pub fn generation_check(n: usize, arcs: &[Arc]) -> Result<bool> {
    validate_arcs(n, arcs)?;
    Ok(regions(n, arcs).iter().all(|r| r.stops <= 1))
}

/// A face of the disk cut along the arcs: the stops on its boundary, and the boundary segments
/// joining consecutive endpoints `(comp, lower slot)`.
struct Region {
    stops: usize,
    segments: Vec<(usize, usize)>,
}

fn regions(n: usize, arcs: &[Arc]) -> Vec<Region> {
    // Cyclic boundary sequence: stop p_c, then the endpoints of component c by slot.
    #[derive(Clone, Copy)]
    enum Item {
        Stop,
        End(usize, usize),
    }
    let mut items = Vec::new();
    let mut pos_of = HashMap::new();
    for c in 0..=n {
        items.push(Item::Stop);
        let mut ends: Vec<(usize, usize, usize)> = Vec::new();
        for (i, a) in arcs.iter().enumerate() {
            for (k, (comp, s)) in a.ends().into_iter().enumerate() {
                if comp == c {
                    ends.push((s, i, k));
                }
            }
        }
        ends.sort_unstable();
        for (_, i, k) in ends {
            pos_of.insert((i, k), items.len());
            items.push(Item::End(i, k));
        }
    }
    let len = items.len();
    let mut visited = vec![false; len];
    let mut out = Vec::new();
    for start in 0..len {
        if visited[start] {
            continue;
        }
        // Gap g sits just after item g.
        let mut g = start;
        let mut region = Region { stops: 0, segments: Vec::new() };
        loop {
            visited[g] = true;
            let next = (g + 1) % len;
            if let (Item::End(i, k), Item::End(..)) = (items[g], items[next]) {
                region.segments.push(arcs[i].ends()[k]);
            }
            g = match items[next] {
                Item::Stop => {
                    region.stops += 1;
                    next
                }
                Item::End(i, k) => pos_of[&(i, 1 - k)],
            };
            if g == start {
                break;
            }
        }
        out.push(region);
    }
    out
}

/// Grading potential of every endpoint `(comp, slot)`: a chord from slot `s` down to slot `t`
/// has degree `F(s) - F(t)`. Faces without a stop with `k` sides force the degrees of their
/// boundary segments to sum to `k - 2`; all other segments have degree 0.
pub fn slot_potential(n: usize, arcs: &[Arc]) -> HashMap<(usize, usize), i64> {
    let mut seg: HashMap<(usize, usize), i64> = HashMap::new();
    for r in regions(n, arcs) {
        if r.stops == 0 {
            let first = *r.segments.iter().min().expect("a face without a stop has sides");
            seg.insert(first, r.segments.len() as i64 - 2);
        }
    }
    let mut pot = HashMap::new();
    for c in 0..=n {
        let mut slots: Vec<usize> = arcs.iter().filter_map(|a| a.slot_in(c)).collect();
        slots.sort_unstable();
        let mut acc = 0;
        for s in slots {
            pot.insert((c, s), acc);
            acc += seg.get(&(c, s)).copied().unwrap_or(0);
        }
    }
    pot
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Strand {
    Id,
    Chord { comp: usize, from: usize, to: usize },
}

/// A basis morphism: coordinate `h` of the source goes to coordinate `sigma[h]` of the target
/// along `strands[h]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StrandMorphism {
    pub source: usize,
    pub target: usize,
    pub sigma: Vec<usize>,
    pub strands: Vec<Strand>,
    pub cross: usize,
    /// Sum of the chord degrees.
    pub grading: i64,
}

impl StrandMorphism {
    pub fn degree(&self) -> i64 {
        self.grading - self.cross as i64
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.strands.iter().all(|s| *s == Strand::Id)
    }
}

/// Allowed direction of a chord from slot `s` to slot `t`.
fn chord_ok(s: usize, t: usize) -> bool {
    t < s
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                rec(cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], &mut out);
    out
}

impl Collection {
    pub fn validate(&self) -> Result<()> {
        validate_arcs(self.n, &self.arcs)?;
        for (k, o) in self.objects.iter().enumerate() {
            if o.len() != self.d || o.windows(2).any(|w| w[0] >= w[1]) || o.iter().any(|&i| i >= self.arcs.len()) {
                return Err(Error::BadParameters(format!("object {k} is not a set of {} arcs", self.d)));
            }
        }
        Ok(())
    }

    pub fn name(&self, k: usize) -> String {
        self.names.get(k).cloned().unwrap_or_else(|| tuple_name(&self.objects[k]))
    }

    /// Largest number of endpoints on one boundary component.
    pub fn max_endpoints(&self) -> usize {
        let mut count = vec![0; self.n + 1];
        for a in &self.arcs {
            count[a.a] += 1;
            count[a.b] += 1;
        }
        count.into_iter().max().unwrap_or(0)
    }

    pub fn is_tame(&self) -> bool {
        self.max_endpoints() <= 2
    }

    /// Number of crossing strand pairs, counting the identity strands as horizontal strands at
    /// both endpoints of their arc.
    pub fn crossings(&self, source: usize, strands: &[Strand]) -> usize {
        let mut per: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
        for (h, s) in strands.iter().enumerate() {
            match *s {
                Strand::Chord { comp, from, to } => per.entry(comp).or_default().push((from, to)),
                Strand::Id => {
                    for (c, p) in self.arcs[self.objects[source][h]].ends() {
                        per.entry(c).or_default().push((p, p));
                    }
                }
            }
        }
        let mut total = 0;
        for list in per.values() {
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    let ((s1, t1), (s2, t2)) = (list[i], list[j]);
                    if (s1 < s2 && t1 > t2) || (s1 > s2 && t1 < t2) {
                        total += 1;
                    }
                }
            }
        }
        total
    }

    /// Basis of `Hom(X, Y)`: matchings with a chord (or the identity) per coordinate.
    pub fn hom_basis(&self, x: usize, y: usize) -> Vec<StrandMorphism> {
        let (xs, ys) = (&self.objects[x], &self.objects[y]);
        let mut out = Vec::new();
        for sigma in permutations(self.d) {
            let options: Vec<Vec<Strand>> = (0..self.d)
                .map(|h| {
                    let (u, v) = (self.arcs[xs[h]], self.arcs[ys[sigma[h]]]);
                    if xs[h] == ys[sigma[h]] {
                        return vec![Strand::Id];
                    }
                    let mut o = Vec::new();
                    for (c, s) in u.ends() {
                        if let Some(t) = v.slot_in(c) {
                            if chord_ok(s, t) {
                                o.push(Strand::Chord { comp: c, from: s, to: t });
                            }
                        }
                    }
                    o
                })
                .collect();
            let mut cur = Vec::new();
            self.expand(x, y, &sigma, &options, &mut cur, &mut out);
        }
        let pot = slot_potential(self.n, &self.arcs);
        for m in &mut out {
            m.grading = m
                .strands
                .iter()
                .map(|s| match *s {
                    Strand::Id => 0,
                    Strand::Chord { comp, from, to } => pot[&(comp, from)] - pot[&(comp, to)],
                })
                .sum();
        }
        out
    }

    fn expand(&self, x: usize, y: usize, sigma: &[usize], options: &[Vec<Strand>], cur: &mut Vec<Strand>, out: &mut Vec<StrandMorphism>) {
        if cur.len() == options.len() {
            let cross = self.crossings(x, cur);
            out.push(StrandMorphism { source: x, target: y, sigma: sigma.to_vec(), strands: cur.clone(), cross, grading: 0 });
            return;
        }
        for s in &options[cur.len()] {
            cur.push(*s);
            self.expand(x, y, sigma, options, cur, out);
            cur.pop();
        }
    }

    /// `g ∘ f`: concatenates strands coordinatewise; zero when a concatenation is impossible
    /// or crossings do not add. The coefficient of a nonzero product is 1.
    pub fn compose(&self, g: &StrandMorphism, f: &StrandMorphism) -> Result<Option<StrandMorphism>> {
        if f.target != g.source {
            return Err(Error::NotComposable);
        }
        let mut sigma = vec![0; self.d];
        let mut strands = vec![Strand::Id; self.d];
        for h in 0..self.d {
            let k = f.sigma[h];
            sigma[h] = g.sigma[k];
            strands[h] = match (f.strands[h], g.strands[k]) {
                (Strand::Id, s) | (s, Strand::Id) => s,
                (Strand::Chord { comp: c1, from, to: _ }, Strand::Chord { comp: c2, from: _, to }) => {
                    if c1 != c2 {
                        return Ok(None);
                    }
                    Strand::Chord { comp: c1, from, to }
                }
            };
        }
        let cross = self.crossings(f.source, &strands);
        if cross != f.cross + g.cross {
            return Ok(None);
        }
        Ok(Some(StrandMorphism { source: f.source, target: g.target, sigma, strands, cross, grading: f.grading + g.grading }))
    }

    /// Resolutions of one crossing that lower the crossing number by exactly one.
    pub fn resolve(&self, m: &StrandMorphism) -> Vec<StrandMorphism> {
        let xs = &self.objects[m.source];
        let ys = &self.objects[m.target];
        let ypos = |arc: usize| ys.iter().position(|&z| z == arc);
        // Strand instances per component: (coordinate, from, to, moving).
        let mut per: BTreeMap<usize, Vec<(usize, usize, usize, bool)>> = BTreeMap::new();
        for (h, s) in m.strands.iter().enumerate() {
            match *s {
                Strand::Chord { comp, from, to } => per.entry(comp).or_default().push((h, from, to, true)),
                Strand::Id => {
                    for (c, p) in self.arcs[xs[h]].ends() {
                        per.entry(c).or_default().push((h, p, p, false));
                    }
                }
            }
        }
        let arc_at = |c: usize, slot: usize| -> Option<usize> {
            self.arcs.iter().position(|a| a.slot_in(c) == Some(slot))
        };
        let mut out = Vec::new();
        for (&c, list) in &per {
            for i in 0..list.len() {
                for j in 0..list.len() {
                    let ((h1, s1, t1, mv1), (h2, s2, t2, _)) = (list[i], list[j]);
                    let crossing = (s1 < s2 && t1 > t2) || (s1 > s2 && t1 < t2);
                    if h1 == h2 || !mv1 || !crossing || !(s1 == t2 || chord_ok(s1, t2)) || !(s2 == t1 || chord_ok(s2, t1)) {
                        continue;
                    }
                    // Swap the ends: h1 now ends at t2, h2 at t1.
                    let mut strands = m.strands.clone();
                    let mut sigma = m.sigma.clone();
                    let (Some(y2), Some(y1)) = (arc_at(c, t2), arc_at(c, t1)) else { continue };
                    let (Some(k2), Some(k1)) = (ypos(y2), ypos(y1)) else { continue };
                    strands[h1] = if s1 == t2 { Strand::Id } else { Strand::Chord { comp: c, from: s1, to: t2 } };
                    strands[h2] = if s2 == t1 { Strand::Id } else { Strand::Chord { comp: c, from: s2, to: t1 } };
                    sigma[h1] = k2;
                    sigma[h2] = k1;
                    // An identity strand must join an arc to itself.
                    if (0..self.d).any(|h| strands[h] == Strand::Id && xs[h] != ys[sigma[h]]) {
                        continue;
                    }
                    let cross = self.crossings(m.source, &strands);
                    if cross + 1 == m.cross {
                        out.push(StrandMorphism { source: m.source, target: m.target, sigma, strands, cross, grading: m.grading });
                    }
                }
            }
        }
        out.sort_by(|a, b| (&a.sigma, &a.strands).cmp(&(&b.sigma, &b.strands)));
        out.dedup();
        out
    }

    /// Cohomology of `Hom(X, Y)` with the crossing-resolution differential. Signs making the
    /// differential square to zero are found by solving the parity conditions on every
    /// two-step interval.
    pub fn hom_cohomology(&self, x: usize, y: usize, field: Field) -> Result<HomComplexResult> {
        let basis = self.hom_basis(x, y);
        let index: HashMap<(&Vec<usize>, &Vec<Strand>), usize> =
            basis.iter().enumerate().map(|(i, m)| ((&m.sigma, &m.strands), i)).collect();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (i, m) in basis.iter().enumerate() {
            for r in self.resolve(m) {
                if let Some(&j) = index.get(&(&r.sigma, &r.strands)) {
                    edges.push((i, j));
                }
            }
        }
        let signs = sign_assignment(basis.len(), &edges, field)?;
        let mut by_degree: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, m) in basis.iter().enumerate() {
            by_degree.entry(m.degree()).or_default().push(i);
        }
        let pos: HashMap<usize, usize> = by_degree.values().flat_map(|v| v.iter().enumerate().map(|(p, &i)| (i, p))).collect();
        let mut dims = Vec::new();
        let rank_from = |p: i64| -> usize {
            let (Some(src), Some(tgt)) = (by_degree.get(&p), by_degree.get(&(p + 1))) else { return 0 };
            let mut mat = Matrix::zeros(field, tgt.len(), src.len());
            for (e, &(i, j)) in edges.iter().enumerate() {
                if basis[i].degree() == p {
                    mat.add_at(pos[&j], pos[&i], &signs[e]);
                }
            }
            rank(&mat)
        };
        for (&p, v) in &by_degree {
            let h = v.len() - rank_from(p) - rank_from(p - 1);
            if h > 0 {
                dims.push((p, h));
            }
        }
        Ok(HomComplexResult { dims })
    }

    /// All pairwise Hom cohomologies, in parallel.
    pub fn hom_table(&self, field: Field) -> Result<Vec<Vec<HomComplexResult>>> {
        let k = self.objects.len();
        let flat: Vec<HomComplexResult> =
            (0..k * k).into_par_iter().map(|i| self.hom_cohomology(i / k, i % k, field)).collect::<Result<_>>()?;
        Ok(flat.chunks(k).map(|c| c.to_vec()).collect())
    }
}

/// Signs `±1` on the edges of a two-step graded graph so that every two-step interval sums to
/// zero. Over characteristic 2 every sign is 1.
fn sign_assignment(nodes: usize, edges: &[(usize, usize)], field: Field) -> Result<Vec<crate::field::Scalar>> {
    let one = field.one();
    let mut out: Vec<Vec<usize>> = vec![vec![]; nodes];
    for (e, &(i, _)) in edges.iter().enumerate() {
        out[i].push(e);
    }
    // Paths of length two grouped by endpoints.
    let mut intervals: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
    for (e1, &(_, mid)) in edges.iter().enumerate() {
        for &e2 in &out[mid] {
            intervals.entry((edges[e1].0, edges[e2].1)).or_default().push((e1, e2));
        }
    }
    if field.characteristic() == 2 {
        if intervals.values().any(|p| p.len() % 2 == 1) {
            return Err(Error::NotExact("the crossing differential does not square to zero".into()));
        }
        return Ok(vec![one; edges.len()]);
    }
    if intervals.values().any(|p| p.len() != 2 && !p.is_empty()) {
        return Err(Error::NotExact("a two-step interval is not a diamond".into()));
    }
    let f2 = Field::Prime(2);
    let rows: Vec<Vec<crate::field::Scalar>> = intervals
        .values()
        .map(|p| {
            let mut r = vec![f2.zero(); edges.len()];
            for &(a, b) in p {
                r[a] = &r[a] + &f2.one();
                r[b] = &r[b] + &f2.one();
            }
            r
        })
        .collect();
    if rows.is_empty() {
        return Ok(vec![one; edges.len()]);
    }
    let m = Matrix::from_rows(f2, rows.clone(), edges.len());
    let rhs = vec![f2.one(); rows.len()];
    let x = solve(&m, &rhs).ok_or_else(|| Error::NotExact("no sign assignment squares to zero".into()))?;
    Ok(x.into_iter().map(|v| if v.is_zero() { one.clone() } else { -&one }).collect())
}

/// Degree 0 algebra of a tame collection: block `a -> b` is `Hom(X_a, X_b)`, product is
/// composition.
pub fn end_algebra_of_collection(coll: &Collection, field: Field) -> Result<Algebra> {
    let alg = graded_end_algebra(coll, field)?;
    if let Some(b) = alg.basis.iter().find(|b| b.degree != 0) {
        return Err(Error::NotTame(format!(
            "morphism {} -> {} has degree {}",
            alg.vertices[b.src], alg.vertices[b.tgt], b.degree
        )));
    }
    Ok(alg)
}

/// Graded algebra of a collection with at most two endpoints per component, so that no
/// morphism has crossings. Chord degrees come from faces without a stop.
pub fn graded_end_algebra(coll: &Collection, field: Field) -> Result<Algebra> {
    coll.validate()?;
    if !coll.is_tame() {
        return Err(Error::NotTame(format!("a boundary component hosts {} arc endpoints", coll.max_endpoints())));
    }
    let k = coll.objects.len();
    let homs: Vec<Vec<StrandMorphism>> = (0..k * k).into_par_iter().map(|i| coll.hom_basis(i / k, i % k)).collect();
    let mut basis = Vec::new();
    let mut idem = vec![usize::MAX; k];
    let mut ids: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut morph = Vec::new();
    for (i, list) in homs.iter().enumerate() {
        let (a, b) = (i / k, i % k);
        for m in list {
            if m.cross != 0 {
                return Err(Error::NotTame(format!("morphism {} -> {} has {} crossings", coll.name(a), coll.name(b), m.cross)));
            }
            if m.is_identity() {
                idem[a] = basis.len();
            }
            ids.entry((a, b)).or_default().push(basis.len());
            basis.push(BasisElem { src: a, tgt: b, grade: usize::from(!m.is_identity()), degree: m.degree() });
            morph.push(m.clone());
        }
    }
    let lookup: HashMap<(usize, usize, &Vec<usize>, &Vec<Strand>), usize> =
        morph.iter().enumerate().map(|(i, m)| ((m.source, m.target, &m.sigma, &m.strands), i)).collect();
    let mut mult = HashMap::new();
    for (g, mg) in morph.iter().enumerate() {
        for (f, mf) in morph.iter().enumerate() {
            if mf.target != mg.source {
                continue;
            }
            if let Some(p) = coll.compose(mg, mf)? {
                let r = lookup[&(p.source, p.target, &p.sigma, &p.strands)];
                mult.insert((g, f), vec![(r, field.one())]);
            }
        }
    }
    let names = (0..k).map(|i| coll.name(i)).collect();
    let alg = Algebra::from_table(field, names, basis, idem, mult);
    if !alg.check_associativity() {
        return Err(Error::NotExact("strand composition is not associative".into()));
    }
    alg.derive_presentation()
}

#[derive(Clone, Debug, Serialize)]
pub struct AurouxTriangle {
    pub arcs: Vec<Arc>,
    /// Names of the objects `B × L_ij`, `B × L_ik`, `B × L_jk`.
    pub objects: [String; 3],
    /// True when the nonzero map runs from the first object to the second.
    pub forward: bool,
    /// The cone is the third object shifted by this amount.
    pub shift: i64,
    pub passed: bool,
}

fn union_collection(n: usize, d: usize, pairs: &[(usize, usize)]) -> Result<Collection> {
    let arcs = place_arcs(n, pairs).map_err(|e| match e {
        Error::ArcsIntersect(a, b) => Error::NotDisjoint(format!("arcs {a} and {b} cross")),
        other => other,
    })?;
    let objects = crate::zoo::increasing_tuples(arcs.len(), d)
        .into_iter()
        .map(|t| t.into_iter().map(|i| i - 1).collect::<Vec<_>>())
        .collect::<Vec<_>>();
    let names = objects
        .iter()
        .map(|o: &Vec<usize>| o.iter().map(|&i| format!("{}{}", pairs[i].0, pairs[i].1)).collect::<Vec<_>>().join("x"))
        .collect();
    let coll = Collection { n, d, arcs, objects, names };
    if !coll.is_tame() {
        return Err(Error::NotTame("background arcs meet the triangle components".into()));
    }
    Ok(coll)
}

fn check_triangle_indices(n: usize, i: usize, j: usize, k: usize) -> Result<()> {
    if !(i < j && j < k && k <= n) {
        return Err(Error::BadIndices(format!("need 0 <= i < j < k <= {n}, got ({i},{j},{k})")));
    }
    Ok(())
}

/// Certifies the exact triangle `B × L_ij -> B × L_ik -> B × L_jk` over the union collection:
/// the cone of the nonzero map between the first two objects has the Hom cohomology of the third,
/// up to one shift, against every generator in both directions.
pub fn auroux_triangle(n: usize, i: usize, j: usize, k: usize, background: &[(usize, usize)], field: Field) -> Result<AurouxTriangle> {
    check_triangle_indices(n, i, j, k)?;
    let d = background.len() + 1;
    let mut pairs = vec![(i, j), (i, k), (j, k)];
    pairs.extend_from_slice(background);
    let coll = union_collection(n, d, &pairs)?;
    let obj = |first: usize| -> usize {
        let mut o: Vec<usize> = std::iter::once(first).chain(3..3 + background.len()).collect();
        o.sort_unstable();
        coll.objects.iter().position(|x| *x == o).expect("object of the union")
    };
    let (x, y, z) = (obj(0), obj(1), obj(2));
    let end = graded_end_algebra(&coll, field)?;
    let (forward, s, t) = if !end.block(x, y).is_empty() { (true, x, y) } else { (false, y, x) };
    let f = match end.block(s, t) {
        [e] => *e,
        other => return Err(Error::NotExact(format!("expected one map between the first two objects, found {}", other.len()))),
    };
    // Regrade so the map has degree 0.
    let mut lift = vec![0; end.num_vertices()];
    lift[t] = -end.basis[f].degree;
    let r = end.regrade(&lift).opposite();
    let c = cone(
        &r,
        &ProjComplex::projective(&r, s),
        &ProjComplex::projective(&r, t),
        &Morphism { degree: 0, comps: BTreeMap::from([(0, vec![vec![vec![(f, field.one())]]])]) },
    )?;
    let pz = ProjComplex::projective(&r, z);
    let mut shift = None;
    let mut passed = true;
    for v in 0..r.num_vertices() {
        let g = ProjComplex::projective(&r, v);
        // C = Z[s]: Hom^p(G, C) = Hom^{p+s}(G, Z) and Hom^p(C, G) = Hom^{p-s}(Z, G).
        for (a, b, sign) in [
            (hom_complex(&r, &g, &c, false)?.result(), hom_complex(&r, &g, &pz, false)?.result(), 1),
            (hom_complex(&r, &c, &g, false)?.result(), hom_complex(&r, &pz, &g, false)?.result(), -1),
        ] {
            if a.dims.len() != b.dims.len() {
                passed = false;
                continue;
            }
            for (u, w) in a.dims.iter().zip(&b.dims) {
                let s0 = *shift.get_or_insert(sign * (w.0 - u.0));
                passed &= u.1 == w.1 && w.0 - u.0 == sign * s0;
            }
        }
    }
    Ok(AurouxTriangle {
        arcs: coll.arcs.clone(),
        objects: [coll.name(x), coll.name(y), coll.name(z)],
        forward,
        shift: shift.unwrap_or(0),
        passed,
    })
}

/// `B × L_ij × L_ik` and `B × L_ij × L_jk` have the same Hom cohomology against every other
/// generator of the union collection.
pub fn auroux_quasi_iso(n: usize, i: usize, j: usize, k: usize, background: &[(usize, usize)], field: Field) -> Result<bool> {
    check_triangle_indices(n, i, j, k)?;
    let d = background.len() + 2;
    let mut pairs = vec![(i, j), (i, k), (j, k)];
    pairs.extend_from_slice(background);
    let coll = union_collection(n, d, &pairs)?;
    let obj = |two: [usize; 2]| -> usize {
        let mut o: Vec<usize> = two.into_iter().chain(3..3 + background.len()).collect();
        o.sort_unstable();
        coll.objects.iter().position(|x| *x == o).expect("object of the union")
    };
    let (x, y) = (obj([0, 1]), obj([0, 2]));
    let end = graded_end_algebra(&coll, field)?;
    let r = end.opposite();
    let p = |v: usize| ProjComplex::projective(&r, v);
    for v in 0..r.num_vertices() {
        if v == x || v == y {
            continue;
        }
        if hom_complex(&r, &p(v), &p(x), false)?.result() != hom_complex(&r, &p(v), &p(y), false)?.result()
            || hom_complex(&r, &p(x), &p(v), false)?.result() != hom_complex(&r, &p(y), &p(v), false)?.result()
        {
            return Ok(false);
        }
    }
    Ok(true)
}
