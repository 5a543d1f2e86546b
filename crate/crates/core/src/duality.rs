//! Coalgebras `(V, Δ, δ)` with `Δ(e_k) = Σ b[k][i][j] e_i⊗e_j` and
//! `δ(e_k) = Σ d[k][i][j][l] e_i⊗e_j⊗e_l`, their laws, and the
//! structure-constant dictionary with algebras on the dual basis.
//!
//! Coalgebra laws are evaluated on the coproduct tensors themselves: each
//! side of a law is a composite of coproducts, expanded top-down from
//! `e_k` into a tensor over the output factors.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebras::{Algebra, Family};
use crate::error::{Error, Result};
use crate::kernel::{perm, Scalar, Tensor};
use crate::report::{LawReport, LawResult, Witness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coalgebra {
    dim: usize,
    cop2: Tensor,
    cop3: Tensor,
}

impl Coalgebra {
    pub fn zero(dim: usize) -> Self {
        Coalgebra {
            dim,
            cop2: Tensor::cube(dim, 3),
            cop3: Tensor::cube(dim, 4),
        }
    }

    pub fn from_tensors(cop2: Tensor, cop3: Tensor) -> Result<Self> {
        let n = cop2.dims().first().copied().unwrap_or(0);
        if cop2.dims() != [n, n, n] || cop3.dims() != [n, n, n, n] {
            return Err(Error::input(format!(
                "coproduct extents {:?} and {:?} do not describe one dimension",
                cop2.dims(),
                cop3.dims()
            )));
        }
        Ok(Coalgebra { dim: n, cop2, cop3 })
    }

    pub fn builder(dim: usize) -> CoalgebraBuilder {
        CoalgebraBuilder::new(dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `b[k][i][j]`
    pub fn cop2(&self) -> &Tensor {
        &self.cop2
    }

    /// `d[k][i][j][l]`
    pub fn cop3(&self) -> &Tensor {
        &self.cop3
    }

    pub fn cop2_mut(&mut self) -> &mut Tensor {
        &mut self.cop2
    }

    pub fn cop3_mut(&mut self) -> &mut Tensor {
        &mut self.cop3
    }
}

/// 1-based sparse construction, mirroring [`crate::algebras::AlgebraBuilder`]:
/// with closure on, `Δ` entries are symmetrized in `(i,j)` and `δ` entries
/// antisymmetrized in `(i,j,l)`; explicit entries are never overwritten.
#[derive(Clone, Debug)]
pub struct CoalgebraBuilder {
    dim: usize,
    closure: bool,
    cop2: BTreeMap<[usize; 3], Scalar>,
    cop3: BTreeMap<[usize; 4], Scalar>,
    error: Option<String>,
}

impl CoalgebraBuilder {
    pub fn new(dim: usize) -> Self {
        CoalgebraBuilder {
            dim,
            closure: true,
            cop2: BTreeMap::new(),
            cop3: BTreeMap::new(),
            error: None,
        }
    }

    pub fn closure(mut self, on: bool) -> Self {
        self.closure = on;
        self
    }

    fn check(&mut self, idx: &[usize], what: &str) -> bool {
        if let Some(bad) = idx.iter().find(|&&i| i == 0 || i > self.dim) {
            self.error.get_or_insert_with(|| {
                format!("{what} index {bad} in {idx:?} outside 1..={}", self.dim)
            });
            return false;
        }
        true
    }

    /// `Δ(e_k) ∋ v e_i⊗e_j`
    pub fn cop2(mut self, k: usize, i: usize, j: usize, v: impl Into<Scalar>) -> Self {
        if self.check(&[k, i, j], "Delta") {
            self.cop2.insert([k - 1, i - 1, j - 1], v.into());
        }
        self
    }

    /// `δ(e_k) ∋ v e_i⊗e_j⊗e_l`
    pub fn cop3(mut self, k: usize, i: usize, j: usize, l: usize, v: impl Into<Scalar>) -> Self {
        if self.check(&[k, i, j, l], "delta") {
            self.cop3.insert([k - 1, i - 1, j - 1, l - 1], v.into());
        }
        self
    }

    pub fn build(self) -> Result<Coalgebra> {
        if let Some(e) = self.error {
            return Err(Error::input(e));
        }
        let mut co = Coalgebra::zero(self.dim);
        for (ix, v) in &self.cop2 {
            co.cop2.set(ix, v.clone());
        }
        for (ix, v) in &self.cop3 {
            co.cop3.set(ix, v.clone());
        }
        if self.closure {
            let mut filled = BTreeMap::new();
            for ([k, i, j], v) in &self.cop2 {
                let t = [*k, *j, *i];
                if !self.cop2.contains_key(&t) && filled.insert(t, ()).is_none() {
                    co.cop2.set(&t, v.clone());
                }
            }
            let mut filled = BTreeMap::new();
            for (ix, v) in &self.cop3 {
                let args = [ix[1], ix[2], ix[3]];
                for (p, s) in perm::S3 {
                    let t = [ix[0], args[p[0]], args[p[1]], args[p[2]]];
                    if !self.cop3.contains_key(&t) && filled.insert(t, ()).is_none() {
                        co.cop3.set(&t, if s == 1 { v.clone() } else { -v });
                    }
                }
            }
        }
        Ok(co)
    }
}

/// Algebra on the dual basis: `e_i*·e_j* = Σ b[l][i][j] e_l*` and
/// `[e_i*,e_j*,e_k*] = Σ d[l][i][j][k] e_l*`.
pub fn dualize_coalgebra(co: &Coalgebra) -> Algebra {
    let n = co.dim;
    let mut alg = Algebra::zero(n);
    for (ix, v) in co.cop2.nonzero() {
        alg.product_mut().set(&[ix[1], ix[2], ix[0]], v.clone());
    }
    for (ix, v) in co.cop3.nonzero() {
        alg.bracket_mut()
            .set(&[ix[1], ix[2], ix[3], ix[0]], v.clone());
    }
    alg
}

/// Coalgebra on the dual basis: `Δ(e_k*) = Σ a[i][j][k] e_i*⊗e_j*` and
/// `δ(e_l*) = Σ c[i][j][k][l] e_i*⊗e_j*⊗e_k*`.
pub fn dualize_algebra(alg: &Algebra) -> Coalgebra {
    let mut co = Coalgebra::zero(alg.dim());
    for (i, j, l, v) in alg.product_entries() {
        co.cop2.set(&[l, i, j], v);
    }
    for (i, j, k, l, v) in alg.bracket_entries() {
        co.cop3.set(&[l, i, j, k], v);
    }
    co
}

/// A composite of coproducts. `Leaf(t)` is output factor `t`; `Cop2` and
/// `Cop3` apply `Δ` or `δ` and continue on each resulting factor.
#[derive(Clone, Debug)]
enum Tree {
    Leaf(usize),
    Cop2(Box<Tree>, Box<Tree>),
    Cop3(Box<Tree>, Box<Tree>, Box<Tree>),
}

fn leaf(t: usize) -> Tree {
    Tree::Leaf(t)
}

fn d2(a: Tree, b: Tree) -> Tree {
    Tree::Cop2(Box::new(a), Box::new(b))
}

fn d3(a: Tree, b: Tree, c: Tree) -> Tree {
    Tree::Cop3(Box::new(a), Box::new(b), Box::new(c))
}

/// Sparse tensor over `(k, factor_0, .., factor_{m-1})`.
type Sparse = HashMap<Vec<usize>, Scalar>;

fn accumulate(out: &mut Sparse, key: Vec<usize>, v: Scalar) {
    let e = out.entry(key).or_insert_with(Scalar::zero);
    *e += v;
}

/// Coefficients of the composite `tree` applied to every `e_k`, keyed by
/// `k` followed by the `arity` output factors in variable order.
fn expand(co: &Coalgebra, tree: &Tree, arity: usize) -> Sparse {
    let n = co.dim;
    match tree {
        Tree::Leaf(t) => {
            let mut out = Sparse::new();
            for k in 0..n {
                let mut key = vec![usize::MAX; arity + 1];
                key[0] = k;
                key[t + 1] = k;
                out.insert(key, Scalar::one());
            }
            out
        }
        Tree::Cop2(a, b) => {
            let children = [expand(co, a, arity), expand(co, b, arity)];
            combine(co.cop2.nonzero().collect(), &children, arity)
        }
        Tree::Cop3(a, b, c) => {
            let children = [
                expand(co, a, arity),
                expand(co, b, arity),
                expand(co, c, arity),
            ];
            combine(co.cop3.nonzero().collect(), &children, arity)
        }
    }
}

/// Substitutes child expansions into the factors of each coproduct entry.
/// Children write disjoint output factors, marked `usize::MAX` elsewhere.
fn combine(entries: Vec<(Vec<usize>, &Scalar)>, children: &[Sparse], arity: usize) -> Sparse {
    let by_root: Vec<HashMap<usize, Vec<(&Vec<usize>, &Scalar)>>> = children
        .iter()
        .map(|c| {
            let mut m: HashMap<usize, Vec<_>> = HashMap::new();
            for (key, v) in c {
                m.entry(key[0]).or_default().push((key, v));
            }
            m
        })
        .collect();
    let mut out = Sparse::new();
    for (ix, v) in entries {
        let mut partial: Vec<(Vec<usize>, Scalar)> = {
            let mut key = vec![usize::MAX; arity + 1];
            key[0] = ix[0];
            vec![(key, v.clone())]
        };
        for (slot, child) in by_root.iter().enumerate() {
            let Some(terms) = child.get(&ix[slot + 1]) else {
                partial.clear();
                break;
            };
            let mut next = Vec::with_capacity(partial.len() * terms.len());
            for (key, acc) in &partial {
                for (ckey, cv) in terms {
                    let mut merged = key.clone();
                    for f in 1..=arity {
                        if ckey[f] != usize::MAX {
                            merged[f] = ckey[f];
                        }
                    }
                    next.push((merged, acc * *cv));
                }
            }
            partial = next;
        }
        for (key, val) in partial {
            accumulate(&mut out, key, val);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// `Σ coeff · tree` as a sparse tensor.
fn side(co: &Coalgebra, terms: &[(i64, Tree)], arity: usize) -> Sparse {
    let mut out = Sparse::new();
    for (c, tree) in terms {
        let c = Scalar::from_int(*c);
        for (key, v) in expand(co, tree, arity) {
            accumulate(&mut out, key, &c * &v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Compares two sides; the witness is the lexicographically first
/// `(k, i_1, .., i_m)` where they differ, reported as the `e_k`-coefficient
/// of each side on `e_{i_1}⊗..⊗e_{i_m}`.
fn compare(law: &str, lhs: &Sparse, rhs: &Sparse, arity: usize) -> LawResult {
    let zero = Scalar::zero();
    let first = lhs
        .keys()
        .chain(rhs.keys())
        .filter(|k| lhs.get(*k).unwrap_or(&zero) != rhs.get(*k).unwrap_or(&zero))
        .min();
    match first {
        None => LawResult::pass(law),
        Some(key) => {
            let mut vars = vec!["k".to_string()];
            vars.extend((1..=arity).map(|t| format!("i{t}")));
            LawResult::fail(
                law,
                Witness {
                    vars,
                    tuple: key.iter().map(|i| i + 1).collect(),
                    lhs: vec![lhs.get(key).unwrap_or(&zero).clone()],
                    rhs: vec![rhs.get(key).unwrap_or(&zero).clone()],
                    note: None,
                },
            )
        }
    }
}

fn identity(
    co: &Coalgebra,
    law: &str,
    arity: usize,
    lhs: &[(i64, Tree)],
    rhs: &[(i64, Tree)],
) -> LawResult {
    compare(law, &side(co, lhs, arity), &side(co, rhs, arity), arity)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CoLaw {
    /// `τΔ = Δ`
    Cocommutative,
    /// `(Δ⊗id)Δ = (id⊗Δ)Δ`
    Coassociative,
    /// `δ(e_k)` alternating in its three factors
    CobracketAntisymmetry,
    /// Coproduct form of the Filippov-Jacobi identity
    ThreeLieCoalgebra,
    /// Coproduct form of `[w·x,y,z] = w·[x,y,z] + x·[w,y,z]`
    PoissonCoalgebra,
    /// Coproduct form of `3 w·[x,y,z] = [w·x,y,z] + [x,w·y,z] + [x,y,w·z]`
    TransposedCoalgebra,
    /// `(id⊗δ)Δ = 0`
    AdmissibleOuter,
    /// `(Δ⊗id⊗id)δ = 0`
    AdmissibleInner,
}

impl CoLaw {
    pub fn name(self) -> &'static str {
        match self {
            CoLaw::Cocommutative => "cocommutative",
            CoLaw::Coassociative => "coassociative",
            CoLaw::CobracketAntisymmetry => "cobracket-antisymmetry",
            CoLaw::ThreeLieCoalgebra => "3lie-coalgebra",
            CoLaw::PoissonCoalgebra => "poisson-coalgebra",
            CoLaw::TransposedCoalgebra => "transposed-coalgebra",
            CoLaw::AdmissibleOuter => "admissible-coalgebra-outer",
            CoLaw::AdmissibleInner => "admissible-coalgebra-inner",
        }
    }

    pub fn for_family(family: Family) -> &'static [CoLaw] {
        use CoLaw::*;
        match family {
            Family::CommAssoc => &[Cocommutative, Coassociative],
            Family::ThreeLie => &[CobracketAntisymmetry, ThreeLieCoalgebra],
            Family::Poisson => &[
                Cocommutative,
                Coassociative,
                CobracketAntisymmetry,
                ThreeLieCoalgebra,
                PoissonCoalgebra,
            ],
            Family::Transposed => &[
                Cocommutative,
                Coassociative,
                CobracketAntisymmetry,
                ThreeLieCoalgebra,
                TransposedCoalgebra,
            ],
            Family::Admissible => &[
                Cocommutative,
                Coassociative,
                CobracketAntisymmetry,
                ThreeLieCoalgebra,
                AdmissibleOuter,
                AdmissibleInner,
            ],
        }
    }

    pub fn check(self, co: &Coalgebra) -> LawResult {
        let x = leaf;
        let name = self.name();
        match self {
            CoLaw::Cocommutative => {
                identity(co, name, 2, &[(1, d2(x(0), x(1)))], &[(1, d2(x(1), x(0)))])
            }
            CoLaw::Coassociative => identity(
                co,
                name,
                3,
                &[(1, d2(d2(x(0), x(1)), x(2)))],
                &[(1, d2(x(0), d2(x(1), x(2))))],
            ),
            CoLaw::CobracketAntisymmetry => {
                let base = [(1, d3(x(0), x(1), x(2)))];
                let r = identity(co, name, 3, &[(-1, d3(x(1), x(0), x(2)))], &base);
                if !r.pass {
                    return r;
                }
                identity(co, name, 3, &[(-1, d3(x(0), x(2), x(1)))], &base)
            }
            CoLaw::ThreeLieCoalgebra => identity(
                co,
                name,
                5,
                &[(1, d3(x(0), x(1), d3(x(2), x(3), x(4))))],
                &[
                    (1, d3(d3(x(0), x(1), x(2)), x(3), x(4))),
                    (1, d3(x(2), d3(x(0), x(1), x(3)), x(4))),
                    (1, d3(x(2), x(3), d3(x(0), x(1), x(4)))),
                ],
            ),
            CoLaw::PoissonCoalgebra => identity(
                co,
                name,
                4,
                &[(1, d3(d2(x(0), x(1)), x(2), x(3)))],
                &[
                    (1, d2(x(0), d3(x(1), x(2), x(3)))),
                    (1, d2(x(1), d3(x(0), x(2), x(3)))),
                ],
            ),
            CoLaw::TransposedCoalgebra => identity(
                co,
                name,
                4,
                &[(3, d2(x(0), d3(x(1), x(2), x(3))))],
                &[
                    (1, d3(d2(x(0), x(1)), x(2), x(3))),
                    (1, d3(x(1), d2(x(0), x(2)), x(3))),
                    (1, d3(x(1), x(2), d2(x(0), x(3)))),
                ],
            ),
            CoLaw::AdmissibleOuter => {
                identity(co, name, 4, &[(1, d2(x(0), d3(x(1), x(2), x(3))))], &[])
            }
            CoLaw::AdmissibleInner => {
                identity(co, name, 4, &[(1, d3(d2(x(0), x(1)), x(2), x(3)))], &[])
            }
        }
    }
}

/// Every coalgebra law required by any of `families`, each once.
pub fn validate_coalgebra(co: &Coalgebra, families: &[Family]) -> LawReport {
    let mut laws: Vec<CoLaw> = families
        .iter()
        .flat_map(|f| CoLaw::for_family(*f).iter().copied())
        .collect();
    laws.sort();
    laws.dedup();
    let mut report = LawReport::new();
    for law in laws {
        report.push(law.check(co));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::validate;

    fn ex_coalgebra() -> Coalgebra {
        Coalgebra::builder(4)
            .cop2(2, 1, 1, 1)
            .cop3(2, 1, 3, 4, 1)
            .build()
            .unwrap()
    }

    #[test]
    fn example_coalgebra_is_admissible() {
        let r = validate_coalgebra(&ex_coalgebra(), &Family::ALL);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn asymmetric_coproduct_fails_cocommutativity() {
        let co = Coalgebra::builder(2)
            .closure(false)
            .cop2(2, 1, 2, 1)
            .build()
            .unwrap();
        let r = validate_coalgebra(&co, &[Family::CommAssoc]);
        let w = r.get("cocommutative").unwrap().witness.clone().unwrap();
        assert_eq!(w.tuple, vec![2, 1, 2]);
    }

    #[test]
    fn dual_of_example() {
        let alg = dualize_coalgebra(&ex_coalgebra());
        assert_eq!(alg.mul_basis(0, 0)[1], Scalar::one());
        assert_eq!(alg.bracket_basis(0, 2, 3)[1], Scalar::one());
        assert_eq!(alg.bracket_basis(2, 0, 3)[1], -Scalar::one());
        assert!(validate(&alg, &[Family::Admissible]).passed());
        assert_eq!(dualize_algebra(&alg), ex_coalgebra());
    }

    #[test]
    fn coassociativity_detects_non_associative_dual() {
        // dual product e1*e1 = e2, e1*e2 = e1 is not associative
        let co = Coalgebra::builder(2)
            .cop2(2, 1, 1, 1)
            .cop2(1, 1, 2, 1)
            .build()
            .unwrap();
        assert!(!validate(&dualize_coalgebra(&co), &[Family::CommAssoc]).passed());
        assert!(!validate_coalgebra(&co, &[Family::CommAssoc]).passed());
    }
}
