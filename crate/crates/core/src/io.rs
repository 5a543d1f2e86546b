//! JSON documents for every object kind. Indices are 1-based, scalars are
//! `"p/q"` strings or JSON integers, and nested objects may be given inline
//! or as a path relative to the referencing file.

use std::fs;
use std::path::{Path, PathBuf};

use serde_json::{json, Map, Value};

use crate::algebras::{Algebra, Family};
use crate::duality::Coalgebra;
use crate::error::{Error, Result};
use crate::kernel::{Matrix, Scalar};
use crate::manin::{BilinearForm, SplitDouble};
use crate::pairs::MatchedPair;
use crate::reps::Representation;
use crate::search::{SearchTemplate, Slot, DEFAULT_BUDGET};

/// A parsed file.
#[derive(Clone, Debug)]
pub enum Document {
    Algebra(Algebra),
    /// An algebra carrying a split and a form.
    Double(SplitDouble),
    Coalgebra(Coalgebra),
    Representation(Representation),
    MatchedPair(MatchedPair),
    Bundle(Algebra, Coalgebra),
    Template(SearchTemplate),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Algebra(_) | Document::Double(_) => "algebra",
            Document::Coalgebra(_) => "coalgebra",
            Document::Representation(_) => "representation",
            Document::MatchedPair(_) => "matched_pair",
            Document::Bundle(..) => "bundle",
            Document::Template(_) => "template",
        }
    }
}

pub fn load(path: &Path) -> Result<Document> {
    load_with(path, false)
}

/// With `no_closure`, every `closure` field is treated as false, so only the
/// listed entries are set.
pub fn load_with(path: &Path, no_closure: bool) -> Result<Document> {
    let text =
        fs::read_to_string(path).map_err(|e| Error::input(format!("{}: {e}", path.display())))?;
    let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
    parse_with(&text, &base, no_closure).map_err(|e| match e {
        Error::Input(m) => Error::input(format!("{}: {m}", path.display())),
        other => other,
    })
}

/// Parses a document; references are resolved against `base`.
pub fn parse_str(text: &str, base: &Path) -> Result<Document> {
    parse_with(text, base, false)
}

fn parse_with(text: &str, base: &Path, no_closure: bool) -> Result<Document> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| Error::input(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    Parser {
        base: base.to_path_buf(),
        no_closure,
    }
    .document(&v)
}

pub fn load_algebra(path: &Path) -> Result<Algebra> {
    match load(path)? {
        Document::Algebra(a) => Ok(a),
        Document::Double(d) => Ok(d.algebra),
        other => Err(wrong_kind(path, "algebra", other.kind())),
    }
}

pub fn load_coalgebra(path: &Path) -> Result<Coalgebra> {
    match load(path)? {
        Document::Coalgebra(c) => Ok(c),
        other => Err(wrong_kind(path, "coalgebra", other.kind())),
    }
}

fn wrong_kind(path: &Path, want: &str, got: &str) -> Error {
    Error::input(format!(
        "{}: expected kind \"{want}\", found \"{got}\"",
        path.display()
    ))
}

struct Parser {
    base: PathBuf,
    no_closure: bool,
}

fn obj<'a>(v: &'a Value, what: &str) -> Result<&'a Map<String, Value>> {
    v.as_object()
        .ok_or_else(|| Error::input(format!("{what}: expected an object")))
}

fn field<'a>(o: &'a Map<String, Value>, key: &str, what: &str) -> Result<&'a Value> {
    o.get(key)
        .ok_or_else(|| Error::input(format!("{what}: missing field \"{key}\"")))
}

fn scalar(v: &Value, what: &str) -> Result<Scalar> {
    serde_json::from_value(v.clone())
        .map_err(|_| Error::input(format!("{what}: {v} is not a scalar")))
}

fn uint(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .map(|n| n as usize)
        .ok_or_else(|| Error::input(format!("{what}: {v} is not a nonnegative integer")))
}

fn flag(o: &Map<String, Value>, key: &str, default: bool, what: &str) -> Result<bool> {
    match o.get(key) {
        None => Ok(default),
        Some(v) => v
            .as_bool()
            .ok_or_else(|| Error::input(format!("{what}: \"{key}\" must be true or false"))),
    }
}

/// Entries `[i1, .., ik, value]` with 1-based indices in `1..=bound[m]`.
fn entries(
    o: &Map<String, Value>,
    key: &str,
    bounds: &[usize],
    what: &str,
) -> Result<Vec<(Vec<usize>, Scalar)>> {
    let Some(list) = o.get(key) else {
        return Ok(Vec::new());
    };
    let list = list
        .as_array()
        .ok_or_else(|| Error::input(format!("{what}: \"{key}\" must be a list")))?;
    let mut out = Vec::with_capacity(list.len());
    for (n, e) in list.iter().enumerate() {
        let loc = format!("{what}: {key} entry {}", n + 1);
        let items = e
            .as_array()
            .filter(|a| a.len() == bounds.len() + 1)
            .ok_or_else(|| {
                Error::input(format!(
                    "{loc}: expected {} indices and a value",
                    bounds.len()
                ))
            })?;
        let mut idx = Vec::with_capacity(bounds.len());
        for (item, &bound) in items.iter().zip(bounds) {
            let i = uint(item, &loc)?;
            if i == 0 || i > bound {
                return Err(Error::input(format!(
                    "{loc}: index {i} outside 1..={bound}"
                )));
            }
            idx.push(i);
        }
        out.push((idx, scalar(&items[bounds.len()], &loc)?));
    }
    Ok(out)
}

fn matrix_entries(
    o: &Map<String, Value>,
    key: &str,
    count: usize,
    size: usize,
    what: &str,
) -> Result<Vec<Matrix>> {
    let mut ms = vec![Matrix::zeros(size, size); count];
    for (ix, v) in entries(o, key, &[count, size, size], what)? {
        ms[ix[0] - 1].set(ix[2] - 1, ix[1] - 1, v);
    }
    Ok(ms)
}

/// `[i, j, s, r, value]`: `ρ(e_i,e_j) u_s ∋ value u_r`. With closure the
/// entry at `(j, i)` is filled with the opposite sign unless given.
fn rho_entries(
    o: &Map<String, Value>,
    key: &str,
    count: usize,
    size: usize,
    closure: bool,
    what: &str,
) -> Result<Vec<Vec<Matrix>>> {
    let mut ms = vec![vec![Matrix::zeros(size, size); count]; count];
    let list = entries(o, key, &[count, count, size, size], what)?;
    let given: std::collections::HashSet<Vec<usize>> =
        list.iter().map(|(ix, _)| ix.clone()).collect();
    for (ix, v) in &list {
        let (i, j, s, r) = (ix[0] - 1, ix[1] - 1, ix[2] - 1, ix[3] - 1);
        ms[i][j].set(r, s, v.clone());
        if closure && !given.contains(&vec![ix[1], ix[0], ix[2], ix[3]]) && i != j {
            ms[j][i].set(r, s, -v);
        }
    }
    Ok(ms)
}

impl Parser {
    fn closure(&self, o: &Map<String, Value>, what: &str) -> Result<bool> {
        let given = flag(o, "closure", true, what)?;
        Ok(given && !self.no_closure)
    }

    fn document(&self, v: &Value) -> Result<Document> {
        let o = obj(v, "document")?;
        let kind = field(o, "kind", "document")?
            .as_str()
            .ok_or_else(|| Error::input("document: \"kind\" must be a string"))?;
        match kind {
            "algebra" => {
                let alg = self.algebra_obj(o)?;
                if o.contains_key("split") || o.contains_key("form") {
                    Ok(Document::Double(self.double(o, alg)?))
                } else {
                    Ok(Document::Algebra(alg))
                }
            }
            "coalgebra" => Ok(Document::Coalgebra(self.coalgebra_obj(o)?)),
            "representation" => Ok(Document::Representation(self.representation(o)?)),
            "matched_pair" => Ok(Document::MatchedPair(self.matched_pair(o)?)),
            "bundle" => {
                let a = self.algebra(field(o, "algebra", "bundle")?)?;
                let c = self.coalgebra(field(o, "coalgebra", "bundle")?)?;
                if a.dim() != c.dim() {
                    return Err(Error::input(format!(
                        "bundle: algebra has dimension {} but coalgebra has dimension {}",
                        a.dim(),
                        c.dim()
                    )));
                }
                Ok(Document::Bundle(a, c))
            }
            "template" => Ok(Document::Template(self.template(o)?)),
            other => Err(Error::input(format!("document: unknown kind \"{other}\""))),
        }
    }

    /// An inline object or a path to a file holding one.
    fn resolve(&self, v: &Value, what: &str) -> Result<(Value, Parser)> {
        match v {
            Value::String(p) => {
                let path = self.base.join(p);
                let text = fs::read_to_string(&path)
                    .map_err(|e| Error::input(format!("{what}: {}: {e}", path.display())))?;
                let parsed: Value = serde_json::from_str(&text).map_err(|e| {
                    Error::input(format!(
                        "{}: line {}, column {}: {e}",
                        path.display(),
                        e.line(),
                        e.column()
                    ))
                })?;
                let base = path.parent().map(Path::to_path_buf).unwrap_or_default();
                Ok((
                    parsed,
                    Parser {
                        base,
                        no_closure: self.no_closure,
                    },
                ))
            }
            Value::Object(_) => Ok((
                v.clone(),
                Parser {
                    base: self.base.clone(),
                    no_closure: self.no_closure,
                },
            )),
            _ => Err(Error::input(format!(
                "{what}: expected an object or a path"
            ))),
        }
    }

    fn algebra(&self, v: &Value) -> Result<Algebra> {
        let (v, p) = self.resolve(v, "algebra")?;
        let o = obj(&v, "algebra")?;
        p.algebra_obj(o)
    }

    fn coalgebra(&self, v: &Value) -> Result<Coalgebra> {
        let (v, p) = self.resolve(v, "coalgebra")?;
        let o = obj(&v, "coalgebra")?;
        p.coalgebra_obj(o)
    }

    fn algebra_obj(&self, o: &Map<String, Value>) -> Result<Algebra> {
        let what = "algebra";
        let n = uint(field(o, "dim", what)?, what)?;
        let mut b = Algebra::builder(n).closure(self.closure(o, what)?);
        if let Some(names) = o.get("basis") {
            let names: Vec<String> = serde_json::from_value(names.clone())
                .map_err(|_| Error::input("algebra: \"basis\" must be a list of names"))?;
            b = b.labels(names);
        }
        for (ix, v) in entries(o, "product", &[n; 3], what)? {
            b = b.product(ix[0], ix[1], ix[2], v);
        }
        for (ix, v) in entries(o, "bracket", &[n; 4], what)? {
            b = b.bracket(ix[0], ix[1], ix[2], ix[3], v);
        }
        b.build()
    }

    fn double(&self, o: &Map<String, Value>, alg: Algebra) -> Result<SplitDouble> {
        let n = alg.dim();
        let split = match o.get("split") {
            Some(v) => uint(v, "algebra: split")?,
            None => n / 2,
        };
        let form = if o.contains_key("form") {
            let mut m = Matrix::zeros(n, n);
            for (ix, v) in entries(o, "form", &[n, n], "algebra")? {
                m.set(ix[0] - 1, ix[1] - 1, v);
            }
            BilinearForm::new(m)?
        } else if n.is_multiple_of(2) && split == n / 2 {
            BilinearForm::standard(n / 2)
        } else {
            return Err(Error::input(
                "algebra: a split without a form needs split = dim / 2",
            ));
        };
        SplitDouble::new(alg, split, form)
    }

    fn coalgebra_obj(&self, o: &Map<String, Value>) -> Result<Coalgebra> {
        let what = "coalgebra";
        let n = uint(field(o, "dim", what)?, what)?;
        let mut b = Coalgebra::builder(n).closure(self.closure(o, what)?);
        for (ix, v) in entries(o, "Delta", &[n; 3], what)? {
            b = b.cop2(ix[0], ix[1], ix[2], v);
        }
        for (ix, v) in entries(o, "delta", &[n; 4], what)? {
            b = b.cop3(ix[0], ix[1], ix[2], ix[3], v);
        }
        b.build()
    }

    fn representation(&self, o: &Map<String, Value>) -> Result<Representation> {
        let what = "representation";
        let base = self.algebra(field(o, "algebra", what)?)?;
        let m = uint(field(o, "carrier", what)?, what)?;
        let closure = self.closure(o, what)?;
        let n = base.dim();
        let mu = matrix_entries(o, "mu", n, m, what)?;
        let rho = rho_entries(o, "rho", n, m, closure, what)?;
        Representation::new(base, m, mu, rho)
    }

    fn matched_pair(&self, o: &Map<String, Value>) -> Result<MatchedPair> {
        let what = "matched_pair";
        let a = self.algebra(field(o, "algebra_a", what)?)?;
        let b = self.algebra(field(o, "algebra_b", what)?)?;
        let closure = self.closure(o, what)?;
        let (n, p) = (a.dim(), b.dim());
        let mu_a = matrix_entries(o, "mu_a", n, p, what)?;
        let rho_a = rho_entries(o, "rho_a", n, p, closure, what)?;
        let mu_b = matrix_entries(o, "mu_b", p, n, what)?;
        let rho_b = rho_entries(o, "rho_b", p, n, closure, what)?;
        MatchedPair::new(a, b, mu_a, rho_a, mu_b, rho_b)
    }

    fn template(&self, o: &Map<String, Value>) -> Result<SearchTemplate> {
        let what = "template";
        let n = uint(field(o, "dim", what)?, what)?;
        let coefficients = field(o, "coefficients", what)?
            .as_array()
            .ok_or_else(|| Error::input("template: \"coefficients\" must be a list"))?
            .iter()
            .map(|c| scalar(c, "template: coefficients"))
            .collect::<Result<Vec<_>>>()?;
        let families = match o.get("families") {
            None => Vec::new(),
            Some(v) => v
                .as_array()
                .ok_or_else(|| Error::input("template: \"families\" must be a list"))?
                .iter()
                .map(|f| {
                    f.as_str()
                        .and_then(|s| s.parse::<Family>().ok())
                        .ok_or_else(|| Error::input(format!("template: unknown family {f}")))
                })
                .collect::<Result<Vec<_>>>()?,
        };
        let mut t = SearchTemplate::new(n, coefficients, families);
        t.closure = self.closure(o, what)?;
        t.budget = match o.get("budget") {
            Some(v) => v
                .as_u64()
                .ok_or_else(|| Error::input("template: \"budget\" must be an integer"))?,
            None => DEFAULT_BUDGET,
        };
        if let Some(fixed) = o.get("fixed") {
            let f = obj(fixed, "template: fixed")?;
            for (ix, v) in entries(f, "product", &[n; 3], "template: fixed")? {
                t.fixed.push((Slot::Product([ix[0], ix[1], ix[2]]), v));
            }
            for (ix, v) in entries(f, "bracket", &[n; 4], "template: fixed")? {
                t.fixed
                    .push((Slot::Bracket([ix[0], ix[1], ix[2], ix[3]]), v));
            }
        }
        if let Some(free) = o.get("free") {
            let f = obj(free, "template: free")?;
            for (key, arity) in [("product", 3), ("bracket", 4)] {
                for pattern in slot_patterns(f, key, arity, n)? {
                    t.free.push(if arity == 3 {
                        Slot::Product([pattern[0], pattern[1], pattern[2]])
                    } else {
                        Slot::Bracket([pattern[0], pattern[1], pattern[2], pattern[3]])
                    });
                }
            }
        }
        Ok(t)
    }
}

/// Free slots `[i, j, (k,) l]`; `"*"` in any position stands for every
/// index, expanded in increasing order.
fn slot_patterns(
    o: &Map<String, Value>,
    key: &str,
    arity: usize,
    n: usize,
) -> Result<Vec<Vec<usize>>> {
    let Some(list) = o.get(key) else {
        return Ok(Vec::new());
    };
    let list = list
        .as_array()
        .ok_or_else(|| Error::input(format!("template: free {key} must be a list")))?;
    let mut out = Vec::new();
    for (k, e) in list.iter().enumerate() {
        let loc = format!("template: free {key} entry {}", k + 1);
        let items = e
            .as_array()
            .filter(|a| a.len() == arity)
            .ok_or_else(|| Error::input(format!("{loc}: expected {arity} indices")))?;
        let mut choices: Vec<Vec<usize>> = Vec::new();
        for item in items {
            if item.as_str() == Some("*") {
                choices.push((1..=n).collect());
            } else {
                let i = uint(item, &loc)?;
                if i == 0 || i > n {
                    return Err(Error::input(format!("{loc}: index {i} outside 1..={n}")));
                }
                choices.push(vec![i]);
            }
        }
        let mut acc: Vec<Vec<usize>> = vec![Vec::new()];
        for c in choices {
            acc = acc
                .into_iter()
                .flat_map(|prefix| {
                    c.iter().map(move |&i| {
                        let mut p = prefix.clone();
                        p.push(i);
                        p
                    })
                })
                .collect();
        }
        out.extend(acc);
    }
    Ok(out)
}

fn s(v: &Scalar) -> Value {
    Value::String(v.to_string())
}

pub fn algebra_json(alg: &Algebra) -> Value {
    let product: Vec<Value> = alg
        .product_entries()
        .into_iter()
        .map(|(i, j, l, v)| json!([i + 1, j + 1, l + 1, s(&v)]))
        .collect();
    let bracket: Vec<Value> = alg
        .bracket_entries()
        .into_iter()
        .map(|(i, j, k, l, v)| json!([i + 1, j + 1, k + 1, l + 1, s(&v)]))
        .collect();
    let mut o = json!({
        "kind": "algebra",
        "dim": alg.dim(),
        "closure": false,
        "product": product,
        "bracket": bracket,
    });
    if let Some(l) = alg.labels() {
        o["basis"] = json!(l);
    }
    o
}

pub fn double_json(d: &SplitDouble) -> Value {
    let mut o = algebra_json(&d.algebra);
    let n = d.form.dim();
    let mut form = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let v = d.form.matrix.get(i, j);
            if !v.is_zero() {
                form.push(json!([i + 1, j + 1, s(v)]));
            }
        }
    }
    o["split"] = json!(d.split);
    o["form"] = Value::Array(form);
    o
}

pub fn coalgebra_json(co: &Coalgebra) -> Value {
    let delta2: Vec<Value> = co
        .cop2()
        .nonzero()
        .map(|(ix, v)| json!([ix[0] + 1, ix[1] + 1, ix[2] + 1, s(v)]))
        .collect();
    let delta3: Vec<Value> = co
        .cop3()
        .nonzero()
        .map(|(ix, v)| json!([ix[0] + 1, ix[1] + 1, ix[2] + 1, ix[3] + 1, s(v)]))
        .collect();
    json!({
        "kind": "coalgebra",
        "dim": co.dim(),
        "closure": false,
        "Delta": delta2,
        "delta": delta3,
    })
}

fn mu_json(ms: &[Matrix]) -> Value {
    let mut out = Vec::new();
    for (i, m) in ms.iter().enumerate() {
        for c in 0..m.cols() {
            for r in 0..m.rows() {
                let v = m.get(r, c);
                if !v.is_zero() {
                    out.push(json!([i + 1, c + 1, r + 1, s(v)]));
                }
            }
        }
    }
    Value::Array(out)
}

fn rho_json(ms: &[Vec<Matrix>]) -> Value {
    let mut out = Vec::new();
    for (i, row) in ms.iter().enumerate() {
        for (j, m) in row.iter().enumerate() {
            for c in 0..m.cols() {
                for r in 0..m.rows() {
                    let v = m.get(r, c);
                    if !v.is_zero() {
                        out.push(json!([i + 1, j + 1, c + 1, r + 1, s(v)]));
                    }
                }
            }
        }
    }
    Value::Array(out)
}

pub fn representation_json(rep: &Representation) -> Value {
    json!({
        "kind": "representation",
        "algebra": algebra_json(rep.base()),
        "carrier": rep.carrier(),
        "closure": false,
        "mu": mu_json(rep.mu_all()),
        "rho": rho_json(rep.rho_all()),
    })
}

pub fn matched_pair_json(mp: &MatchedPair) -> Value {
    json!({
        "kind": "matched_pair",
        "algebra_a": algebra_json(mp.algebra_a()),
        "algebra_b": algebra_json(mp.algebra_b()),
        "closure": false,
        "mu_a": mu_json(mp.mu_a()),
        "rho_a": rho_json(mp.rho_a()),
        "mu_b": mu_json(mp.mu_b()),
        "rho_b": rho_json(mp.rho_b()),
    })
}

pub fn bundle_json(alg: &Algebra, co: &Coalgebra) -> Value {
    json!({
        "kind": "bundle",
        "algebra": algebra_json(alg),
        "coalgebra": coalgebra_json(co),
    })
}

pub fn document_json(doc: &Document) -> Value {
    match doc {
        Document::Algebra(a) => algebra_json(a),
        Document::Double(d) => double_json(d),
        Document::Coalgebra(c) => coalgebra_json(c),
        Document::Representation(r) => representation_json(r),
        Document::MatchedPair(m) => matched_pair_json(m),
        Document::Bundle(a, c) => bundle_json(a, c),
        Document::Template(t) => template_json(t),
    }
}

pub fn template_json(t: &SearchTemplate) -> Value {
    let slot = |sl: &Slot| -> (&'static str, Vec<usize>) {
        match sl {
            Slot::Product(ix) => ("product", ix.to_vec()),
            Slot::Bracket(ix) => ("bracket", ix.to_vec()),
        }
    };
    let mut fixed = json!({"product": [], "bracket": []});
    for (sl, v) in &t.fixed {
        let (k, ix) = slot(sl);
        let mut e: Vec<Value> = ix.into_iter().map(|i| json!(i)).collect();
        e.push(s(v));
        fixed[k].as_array_mut().unwrap().push(Value::Array(e));
    }
    let mut free = json!({"product": [], "bracket": []});
    for sl in &t.free {
        let (k, ix) = slot(sl);
        free[k].as_array_mut().unwrap().push(json!(ix));
    }
    json!({
        "kind": "template",
        "dim": t.dim,
        "closure": t.closure,
        "budget": t.budget,
        "coefficients": t.coefficients.iter().map(s).collect::<Vec<_>>(),
        "families": t.families.iter().map(|f| f.name()).collect::<Vec<_>>(),
        "fixed": fixed,
        "free": free,
    })
}

/// Indented JSON that keeps flat arrays (index tuples, coefficient lists)
/// on one line.
pub fn to_pretty(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(o) => o.is_empty(),
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Array(a) if is_flat(v) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&items.join(", "));
            out.push(']');
        }
        _ if is_flat(v) => out.push_str(&v.to_string()),
        Value::Array(a) => {
            out.push_str("[\n");
            for (k, x) in a.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, x, depth + 1);
                out.push_str(if k + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        Value::Object(o) => {
            out.push_str("{\n");
            for (k, (key, x)) in o.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if k + 1 < o.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        _ => unreachable!("scalars are flat"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Result<Document> {
        parse_str(text, Path::new("."))
    }

    #[test]
    fn algebra_round_trip() {
        let doc = parse(
            r#"{"kind":"algebra","dim":3,"product":[[2,2,1,1],[3,3,1,"-3"]],"bracket":[[1,2,3,1,1]]}"#,
        )
        .unwrap();
        let Document::Algebra(a) = doc else { panic!() };
        let again = parse(&algebra_json(&a).to_string()).unwrap();
        let Document::Algebra(b) = again else {
            panic!()
        };
        assert_eq!(a, b);
        assert_eq!(a.bracket_basis(2, 1, 0)[0], -Scalar::one());
    }

    #[test]
    fn location_diagnostics() {
        let e = parse(r#"{"kind":"algebra","dim":2,"product":[[1,3,1,1]]}"#).unwrap_err();
        assert!(
            e.to_string()
                .contains("product entry 1: index 3 outside 1..=2"),
            "{e}"
        );
        let e = parse("{\"kind\": \"algebra\",\n \"dim\": }").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
    }

    #[test]
    fn wildcard_slots() {
        let doc = parse(
            r#"{"kind":"template","dim":3,"coefficients":[0,1],"free":{"product":[[2,2,"*"]]}}"#,
        )
        .unwrap();
        let Document::Template(t) = doc else { panic!() };
        assert_eq!(t.free.len(), 3);
    }
}
