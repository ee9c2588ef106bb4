//! JSON import and export for algebras, representations, complexes and arc collections, and
//! DOT export of Gabriel quivers. Key order is fixed by the struct field order.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::algebra::{Algebra, BasisElem, Sparse};
use crate::arc::Collection;
use crate::complex::ProjComplex;
use crate::error::{Error, Result};
use crate::field::{parse_scalar, Field};
use crate::matrix::Matrix;
use crate::rep::Representation;

#[derive(Serialize, Deserialize)]
struct BasisJson {
    id: usize,
    src: String,
    tgt: String,
    grade: usize,
    degree: i64,
}

#[derive(Serialize, Deserialize)]
struct AlgebraJson {
    field: String,
    vertices: Vec<String>,
    basis: Vec<BasisJson>,
    mult: Vec<(usize, usize, usize, String)>,
    /// Arrow ids and monomial words; recomputed on import when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    arrows: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    words: Option<Vec<Vec<usize>>>,
}

fn algebra_ref(alg: &Algebra) -> String {
    format!("{:016x}", alg.fingerprint())
}

fn check_ref(alg: &Algebra, r: &str) -> Result<()> {
    if r != algebra_ref(alg) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(())
}

fn vertex_id(alg: &Algebra, name: &str) -> Result<usize> {
    alg.vertex_index(name).ok_or_else(|| Error::Parse(format!("unknown vertex {name:?}")))
}

pub fn algebra_to_json(alg: &Algebra) -> Value {
    let j = AlgebraJson {
        field: alg.field.descriptor(),
        vertices: alg.vertices.clone(),
        basis: alg
            .basis
            .iter()
            .enumerate()
            .map(|(id, b)| BasisJson {
                id,
                src: alg.vertices[b.src].clone(),
                tgt: alg.vertices[b.tgt].clone(),
                grade: b.grade,
                degree: b.degree,
            })
            .collect(),
        mult: alg.mult_entries().into_iter().map(|(x, y, r, c)| (x, y, r, c.to_string())).collect(),
        arrows: (!alg.arrows.is_empty()).then(|| alg.arrows.clone()),
        words: (!alg.words.is_empty()).then(|| alg.words.clone()),
    };
    serde_json::to_value(j).expect("algebra serializes")
}

pub fn algebra_from_json(v: &Value) -> Result<Algebra> {
    let j: AlgebraJson = serde_json::from_value(v.clone())?;
    let field = Field::parse(&j.field)?;
    let index: HashMap<&str, usize> = j.vertices.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
    let vid = |s: &str| index.get(s).copied().ok_or_else(|| Error::Parse(format!("unknown vertex {s:?}")));
    let mut basis = Vec::with_capacity(j.basis.len());
    for (i, b) in j.basis.iter().enumerate() {
        if b.id != i {
            return Err(Error::Parse(format!("basis ids must be 0..{}, found {} at {i}", j.basis.len(), b.id)));
        }
        basis.push(BasisElem { src: vid(&b.src)?, tgt: vid(&b.tgt)?, grade: b.grade, degree: b.degree });
    }
    let mut idem = vec![usize::MAX; j.vertices.len()];
    for (i, b) in basis.iter().enumerate() {
        if b.src == b.tgt && b.grade == 0 {
            idem[b.src] = i;
        }
    }
    if let Some(v) = idem.iter().position(|&x| x == usize::MAX) {
        return Err(Error::Parse(format!("vertex {:?} has no idempotent", j.vertices[v])));
    }
    let mut mult: HashMap<(usize, usize), Sparse> = HashMap::new();
    for (x, y, r, c) in &j.mult {
        if [*x, *y, *r].iter().any(|&i| i >= basis.len()) {
            return Err(Error::Parse(format!("product ({x}, {y}) -> {r} refers to a missing basis element")));
        }
        mult.entry((*x, *y)).or_default().push((*r, parse_scalar(field, c)?));
    }
    for v in mult.values_mut() {
        v.sort_by_key(|e| e.0);
    }
    let alg = Algebra::from_table(field, j.vertices, basis, idem, mult);
    match (j.arrows, j.words) {
        (Some(a), Some(w)) if w.len() == alg.dim() => Ok(alg.with_words(a, w)),
        _ => alg.derive_presentation(),
    }
}

fn matrix_to_json(m: &Matrix) -> Value {
    Value::Array((0..m.rows).map(|r| Value::Array(m.row(r).iter().map(|c| Value::String(c.to_string())).collect())).collect())
}

fn matrix_from_json(field: Field, v: &Value, rows: usize, cols: usize) -> Result<Matrix> {
    let bad = || Error::Parse("matrix must be a list of rows of scalars".into());
    let rs = v.as_array().ok_or_else(bad)?;
    if rs.len() != rows {
        return Err(Error::Parse(format!("expected {rows} rows, found {}", rs.len())));
    }
    let mut m = Matrix::zeros(field, rows, cols);
    for (i, r) in rs.iter().enumerate() {
        let r = r.as_array().ok_or_else(bad)?;
        if r.len() != cols {
            return Err(Error::Parse(format!("expected {cols} columns, found {}", r.len())));
        }
        for (k, c) in r.iter().enumerate() {
            let s = match c {
                Value::String(s) => s.clone(),
                Value::Number(n) => n.to_string(),
                _ => return Err(bad()),
            };
            m.set(i, k, parse_scalar(field, &s)?);
        }
    }
    Ok(m)
}

/// `{ "algebra": ref, "dims": {vertex: int}, "maps": {arrowId: matrix} }`.
pub fn rep_to_json(alg: &Algebra, m: &Representation) -> Value {
    let mut dims = Map::new();
    for (v, d) in alg.vertices.iter().zip(&m.dims) {
        dims.insert(v.clone(), Value::from(*d));
    }
    let mut maps = Map::new();
    for (a, mat) in alg.arrows.iter().zip(&m.maps) {
        maps.insert(a.to_string(), matrix_to_json(mat));
    }
    serde_json::json!({ "algebra": algebra_ref(alg), "dims": dims, "maps": maps })
}

pub fn rep_from_json(alg: &Algebra, v: &Value) -> Result<Representation> {
    check_ref(alg, v["algebra"].as_str().unwrap_or_default())?;
    let dims_obj = v["dims"].as_object().ok_or_else(|| Error::Parse("missing dims".into()))?;
    let mut dims = vec![0; alg.num_vertices()];
    for (name, d) in dims_obj {
        dims[vertex_id(alg, name)?] = d.as_u64().ok_or_else(|| Error::Parse(format!("bad dimension at {name}")))? as usize;
    }
    let maps_obj = v["maps"].as_object().ok_or_else(|| Error::Parse("missing maps".into()))?;
    let mut maps = Vec::with_capacity(alg.arrows.len());
    for a in &alg.arrows {
        let b = &alg.basis[*a];
        let (rows, cols) = (dims[b.tgt], dims[b.src]);
        maps.push(match maps_obj.get(&a.to_string()) {
            Some(m) => matrix_from_json(alg.field, m, rows, cols)?,
            None => Matrix::zeros(alg.field, rows, cols),
        });
    }
    Representation::new(alg, dims, maps)
}

/// `{ "algebra": ref, "terms": [{degree, summands}], "diff": [{from, to, matrix}] }`. A matrix
/// entry is a list of `[basisId, coefficient]` pairs, empty for zero.
pub fn complex_to_json(alg: &Algebra, c: &ProjComplex) -> Value {
    let terms: Vec<Value> = (0..c.terms.len())
        .map(|k| {
            let m = c.lo + k as i64;
            let summands: Vec<&String> = c.terms[k].iter().map(|&v| &alg.vertices[v]).collect();
            serde_json::json!({ "degree": m, "summands": summands })
        })
        .collect();
    let diff: Vec<Value> = c
        .diffs
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let m = c.lo + k as i64;
            let rows: Vec<Value> = d
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.iter().map(|(b, s)| serde_json::json!([b, s.to_string()])).collect::<Vec<_>>())
                        .collect::<Value>()
                })
                .collect();
            serde_json::json!({ "from": m, "to": m + 1, "matrix": rows })
        })
        .collect();
    serde_json::json!({ "algebra": algebra_ref(alg), "terms": terms, "diff": diff })
}

pub fn complex_from_json(alg: &Algebra, v: &Value) -> Result<ProjComplex> {
    check_ref(alg, v["algebra"].as_str().unwrap_or_default())?;
    let bad = |what: &str| Error::Parse(format!("complex: {what}"));
    let terms_v = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
    let mut terms: Vec<(i64, Vec<usize>)> = Vec::new();
    for t in terms_v {
        let deg = t["degree"].as_i64().ok_or_else(|| bad("term without degree"))?;
        let sums = t["summands"].as_array().ok_or_else(|| bad("term without summands"))?;
        let ids = sums.iter().map(|s| vertex_id(alg, s.as_str().unwrap_or_default())).collect::<Result<Vec<_>>>()?;
        terms.push((deg, ids));
    }
    terms.sort_by_key(|t| t.0);
    if terms.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(bad("term degrees must be consecutive"));
    }
    let lo = terms.first().map_or(0, |t| t.0);
    let mut diffs: Vec<Vec<Vec<Sparse>>> = (1..terms.len())
        .map(|k| vec![vec![Vec::new(); terms[k].1.len()]; terms[k - 1].1.len()])
        .collect();
    for d in v["diff"].as_array().map(Vec::as_slice).unwrap_or_default() {
        let from = d["from"].as_i64().ok_or_else(|| bad("diff without from"))?;
        if d["to"].as_i64() != Some(from + 1) || from < lo || from + 1 >= lo + terms.len() as i64 {
            return Err(bad("diff out of range"));
        }
        let k = (from - lo) as usize;
        let rows = d["matrix"].as_array().ok_or_else(|| bad("diff without matrix"))?;
        if rows.len() != terms[k].1.len() {
            return Err(bad("diff matrix has the wrong number of rows"));
        }
        for (j, row) in rows.iter().enumerate() {
            let row = row.as_array().ok_or_else(|| bad("matrix row"))?;
            if row.len() != terms[k + 1].1.len() {
                return Err(bad("diff matrix has the wrong number of columns"));
            }
            for (l, e) in row.iter().enumerate() {
                let mut entry = Vec::new();
                for pair in e.as_array().ok_or_else(|| bad("matrix entry"))? {
                    let b = pair[0].as_u64().ok_or_else(|| bad("basis id"))? as usize;
                    if b >= alg.dim() {
                        return Err(bad("basis id out of range"));
                    }
                    entry.push((b, parse_scalar(alg.field, pair[1].as_str().unwrap_or_default())?));
                }
                entry.sort_by_key(|e| e.0);
                diffs[k][j][l] = entry;
            }
        }
    }
    ProjComplex::new(alg, lo, terms.into_iter().map(|t| t.1).collect(), diffs)
}

pub fn collection_to_json(c: &Collection) -> Value {
    serde_json::to_value(c).expect("collection serializes")
}

pub fn collection_from_json(v: &Value) -> Result<Collection> {
    let c: Collection = serde_json::from_value(v.clone())?;
    c.validate()?;
    Ok(c)
}

/// The Gabriel quiver in DOT.
pub fn gabriel_dot(alg: &Algebra) -> String {
    let g = alg.gabriel();
    let mut s = String::from("digraph G {\n");
    for v in &g.vertices {
        s.push_str(&format!("  {v:?};\n"));
    }
    for &(a, b) in &g.arrows {
        s.push_str(&format!("  {:?} -> {:?};\n", g.vertices[a], g.vertices[b]));
    }
    s.push_str("}\n");
    s
}

/// Pretty JSON with a trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("value serializes");
    s.push('\n');
    s
}
