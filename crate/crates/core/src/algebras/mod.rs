//! Algebras given by structure constants: a symmetric binary product and a
//! ternary bracket on a common basis `e1..en`.

mod construct;
mod laws;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernel::{perm, vector, Matrix, Scalar, Tensor, Vector};

pub use construct::{direct_sum, h_twist, is_derivation, is_homomorphism, tensor_with_commutative};
pub use laws::{is_valid, validate, Law};

/// The five law families an algebra can be checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "comm-assoc")]
    CommAssoc,
    #[serde(rename = "3-lie")]
    ThreeLie,
    #[serde(rename = "poisson")]
    Poisson,
    #[serde(rename = "transposed")]
    Transposed,
    #[serde(rename = "admissible")]
    Admissible,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::CommAssoc,
        Family::ThreeLie,
        Family::Poisson,
        Family::Transposed,
        Family::Admissible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::CommAssoc => "comm-assoc",
            Family::ThreeLie => "3-lie",
            Family::Poisson => "poisson",
            Family::Transposed => "transposed",
            Family::Admissible => "admissible",
        }
    }

    /// Laws an algebra of this family must satisfy, in report order.
    pub fn laws(self) -> &'static [Law] {
        use Law::*;
        match self {
            Family::CommAssoc => &[Commutativity, Associativity],
            Family::ThreeLie => &[BracketAntisymmetry, FilippovJacobi],
            Family::Poisson => &[
                Commutativity,
                Associativity,
                BracketAntisymmetry,
                FilippovJacobi,
                PoissonLeibniz,
            ],
            Family::Transposed => &[
                Commutativity,
                Associativity,
                BracketAntisymmetry,
                FilippovJacobi,
                TransposedLeibniz,
            ],
            Family::Admissible => &[
                Commutativity,
                Associativity,
                BracketAntisymmetry,
                FilippovJacobi,
                AdmissibleOuter,
                AdmissibleInner,
            ],
        }
    }

    /// Whether the family involves the bracket (otherwise only the product).
    pub fn has_bracket(self) -> bool {
        self != Family::CommAssoc
    }

    pub fn has_product(self) -> bool {
        self != Family::ThreeLie
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                Error::input(format!(
                    "unknown family {s:?} (expected comm-assoc, 3-lie, poisson, transposed or admissible)"
                ))
            })
    }
}

/// `product[i][j][l]` is the coefficient of `e_l` in `e_i·e_j`;
/// `bracket[i][j][k][l]` is the coefficient of `e_l` in `[e_i,e_j,e_k]`.
/// Indices are 0-based here; files and builders use 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    dim: usize,
    product: Tensor,
    bracket: Tensor,
    labels: Option<Vec<String>>,
}

impl Algebra {
    pub fn zero(dim: usize) -> Self {
        Algebra {
            dim,
            product: Tensor::cube(dim, 3),
            bracket: Tensor::cube(dim, 4),
            labels: None,
        }
    }

    pub fn from_tensors(product: Tensor, bracket: Tensor) -> Result<Self> {
        let dim = product.dims().first().copied().unwrap_or(0);
        if product.dims() != [dim; 3] || bracket.dims() != [dim; 4] {
            return Err(Error::input(format!(
                "structure constant extents {:?} and {:?} do not describe one dimension",
                product.dims(),
                bracket.dims()
            )));
        }
        Ok(Algebra {
            dim,
            product,
            bracket,
            labels: None,
        })
    }

    /// Builder taking paper-style 1-based indices.
    pub fn builder(dim: usize) -> AlgebraBuilder {
        AlgebraBuilder::new(dim)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn product(&self) -> &Tensor {
        &self.product
    }

    pub fn bracket(&self) -> &Tensor {
        &self.bracket
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn with_labels(mut self, labels: Option<Vec<String>>) -> Self {
        self.labels = labels;
        self
    }

    /// Name of basis vector `i` (0-based).
    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => format!("e{}", i + 1),
        }
    }

    pub fn product_mut(&mut self) -> &mut Tensor {
        &mut self.product
    }

    pub fn bracket_mut(&mut self) -> &mut Tensor {
        &mut self.bracket
    }

    pub fn is_abelian(&self) -> bool {
        self.product.is_zero() && self.bracket.is_zero()
    }

    pub fn unit(&self, i: usize) -> Vector {
        vector::unit(self.dim, i)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &[Scalar] {
        self.product.fiber(&[i, j])
    }

    pub fn bracket_basis(&self, i: usize, j: usize, k: usize) -> &[Scalar] {
        self.bracket.fiber(&[i, j, k])
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.dim);
        for (i, xi) in vector::support(x) {
            for (j, yj) in vector::support(y) {
                vector::axpy(&mut out, &(xi * yj), self.mul_basis(i, j));
            }
        }
        out
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        let mut out = vector::zeros(self.dim);
        for (i, xi) in vector::support(x) {
            for (j, yj) in vector::support(y) {
                let xy = xi * yj;
                for (k, zk) in vector::support(z) {
                    vector::axpy(&mut out, &(&xy * zk), self.bracket_basis(i, j, k));
                }
            }
        }
        out
    }

    /// Matrix of left multiplication by `e_i`.
    pub fn left_mult(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for k in 0..self.dim {
            for (l, v) in vector::support(self.mul_basis(i, k)) {
                m.set(l, k, v.clone());
            }
        }
        m
    }

    /// Matrix of `ad_{e_i,e_j} = [e_i, e_j, ·]`.
    pub fn ad(&self, i: usize, j: usize) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for k in 0..self.dim {
            for (l, v) in vector::support(self.bracket_basis(i, j, k)) {
                m.set(l, k, v.clone());
            }
        }
        m
    }

    /// `ad_{x,y}` for arbitrary elements.
    pub fn ad_elem(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (i, xi) in vector::support(x) {
            for (j, yj) in vector::support(y) {
                m.add_scaled(&(xi * yj), &self.ad(i, j));
            }
        }
        m
    }

    /// Nonzero product entries `(i, j, l, value)`, 0-based.
    pub fn product_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        self.product
            .nonzero()
            .map(|(ix, v)| (ix[0], ix[1], ix[2], v.clone()))
            .collect()
    }

    /// Nonzero bracket entries `(i, j, k, l, value)`, 0-based.
    pub fn bracket_entries(&self) -> Vec<(usize, usize, usize, usize, Scalar)> {
        self.bracket
            .nonzero()
            .map(|(ix, v)| (ix[0], ix[1], ix[2], ix[3], v.clone()))
            .collect()
    }

    /// Same structure constants, ignoring labels.
    pub fn same_constants(&self, other: &Algebra) -> bool {
        self.product == other.product && self.bracket == other.bracket
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "algebra of dimension {}", self.dim)?;
        for (i, j, l, v) in self.product_entries() {
            if i <= j {
                writeln!(
                    f,
                    "  {}·{} ∋ ({v}) {}",
                    self.label(i),
                    self.label(j),
                    self.label(l)
                )?;
            }
        }
        for (i, j, k, l, v) in self.bracket_entries() {
            if i < j && j < k {
                writeln!(
                    f,
                    "  [{},{},{}] ∋ ({v}) {}",
                    self.label(i),
                    self.label(j),
                    self.label(k),
                    self.label(l)
                )?;
            }
        }
        Ok(())
    }
}

/// Collects sparse "nonzero operation" entries and completes the symmetric
/// closure of the product and the antisymmetric closure of the bracket.
/// Explicit entries always win over closure-derived ones.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    dim: usize,
    closure: bool,
    labels: Option<Vec<String>>,
    product: BTreeMap<[usize; 3], Scalar>,
    bracket: BTreeMap<[usize; 4], Scalar>,
    error: Option<String>,
}

impl AlgebraBuilder {
    pub fn new(dim: usize) -> Self {
        AlgebraBuilder {
            dim,
            closure: true,
            labels: None,
            product: BTreeMap::new(),
            bracket: BTreeMap::new(),
            error: None,
        }
    }

    pub fn closure(mut self, on: bool) -> Self {
        self.closure = on;
        self
    }

    pub fn labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
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

    /// `e_i·e_j ∋ v e_l`, 1-based.
    pub fn product(mut self, i: usize, j: usize, l: usize, v: impl Into<Scalar>) -> Self {
        if self.check(&[i, j, l], "product") {
            self.product.insert([i - 1, j - 1, l - 1], v.into());
        }
        self
    }

    /// `[e_i,e_j,e_k] ∋ v e_l`, 1-based.
    pub fn bracket(mut self, i: usize, j: usize, k: usize, l: usize, v: impl Into<Scalar>) -> Self {
        if self.check(&[i, j, k, l], "bracket") {
            self.bracket.insert([i - 1, j - 1, k - 1, l - 1], v.into());
        }
        self
    }

    pub fn build(self) -> Result<Algebra> {
        if let Some(e) = self.error {
            return Err(Error::input(e));
        }
        if let Some(l) = &self.labels {
            if l.len() != self.dim {
                return Err(Error::input(format!(
                    "{} basis names given for dimension {}",
                    l.len(),
                    self.dim
                )));
            }
        }
        let n = self.dim;
        let mut alg = Algebra::zero(n).with_labels(self.labels);
        for (ix, v) in &self.product {
            alg.product.set(ix, v.clone());
        }
        for (ix, v) in &self.bracket {
            alg.bracket.set(ix, v.clone());
        }
        if self.closure {
            let mut filled: BTreeMap<[usize; 3], ()> = BTreeMap::new();
            for ([i, j, l], v) in &self.product {
                let t = [*j, *i, *l];
                if !self.product.contains_key(&t) && filled.insert(t, ()).is_none() {
                    alg.product.set(&t, v.clone());
                }
            }
            let mut filled: BTreeMap<[usize; 4], ()> = BTreeMap::new();
            for (ix, v) in &self.bracket {
                let args = [ix[0], ix[1], ix[2]];
                for (p, s) in perm::S3 {
                    let t = [args[p[0]], args[p[1]], args[p[2]], ix[3]];
                    if !self.bracket.contains_key(&t) && filled.insert(t, ()).is_none() {
                        let val = if s == 1 { v.clone() } else { -v };
                        alg.bracket.set(&t, val);
                    }
                }
            }
        }
        Ok(alg)
    }
}

/// A linear map `source -> target`; column `k` is the image of `e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    source: usize,
    target: usize,
    matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: usize, target: usize, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != target || matrix.cols() != source {
            return Err(Error::input(format!(
                "a {}x{} matrix cannot represent a map from dimension {source} to {target}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(LinearMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(n: usize) -> Self {
        LinearMap {
            source: n,
            target: n,
            matrix: Matrix::identity(n),
        }
    }

    pub fn zero(source: usize, target: usize) -> Self {
        LinearMap {
            source,
            target,
            matrix: Matrix::zeros(target, source),
        }
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        self.matrix.apply(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_completes_entries() {
        let a = Algebra::builder(3)
            .product(2, 3, 1, 1)
            .bracket(1, 2, 3, 1, 1)
            .build()
            .unwrap();
        assert_eq!(a.mul_basis(2, 1)[0], Scalar::one());
        assert_eq!(a.bracket_basis(2, 1, 0)[0], Scalar::from_int(-1));
        assert_eq!(a.bracket_basis(1, 2, 0)[0], Scalar::one());
        assert_eq!(a.bracket_entries().len(), 6);
    }

    #[test]
    fn closure_can_be_disabled() {
        let a = Algebra::builder(3)
            .closure(false)
            .bracket(1, 2, 3, 1, 1)
            .build()
            .unwrap();
        assert_eq!(a.bracket_entries().len(), 1);
    }

    #[test]
    fn explicit_entries_beat_closure() {
        let a = Algebra::builder(2)
            .product(1, 2, 1, 1)
            .product(2, 1, 1, 5)
            .build()
            .unwrap();
        assert_eq!(a.mul_basis(0, 1)[0], Scalar::one());
        assert_eq!(a.mul_basis(1, 0)[0], Scalar::from_int(5));
    }

    #[test]
    fn builder_rejects_out_of_range() {
        assert!(Algebra::builder(2).product(3, 1, 1, 1).build().is_err());
        assert!(Algebra::builder(2).bracket(0, 1, 1, 1, 1).build().is_err());
    }

    #[test]
    fn element_operations() {
        let a = Algebra::builder(3)
            .product(2, 2, 1, 1)
            .product(3, 3, 1, -3)
            .bracket(1, 2, 3, 1, 1)
            .build()
            .unwrap();
        let x = vec![Scalar::zero(), Scalar::one(), Scalar::one()];
        // (e2+e3)^2 = e1 - 3 e1
        assert_eq!(
            a.mul(&x, &x),
            vec![Scalar::from_int(-2), Scalar::zero(), Scalar::zero()]
        );
        assert_eq!(a.left_mult(1).get(0, 1), &Scalar::one());
        assert_eq!(a.ad(0, 1).get(0, 2), &Scalar::one());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.name().parse::<Family>().unwrap(), f);
        }
        assert!("lie".parse::<Family>().is_err());
    }
}
