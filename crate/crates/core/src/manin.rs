//! Doubles `A ⊕ A*`, bilinear forms, Manin triples, bialgebra conditions
//! and the three-way equivalence between them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebras::{validate, Algebra, Family};
use crate::duality::{dualize_coalgebra, validate_coalgebra, Coalgebra};
use crate::error::{Error, Result};
use crate::kernel::{vector, Matrix, Poly, Scalar, Tensor, Vector};
use crate::pairs::{check_matched_pair, MatchedPair};
use crate::report::{check_identity, EquivalenceReport, LawReport, LawResult, Witness};
use crate::reps::{adjoint_representation, dual_representation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearForm {
    /// `matrix[i][j] = B(e_i, e_j)`
    pub matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::input(format!(
                "bilinear form needs a square matrix, got {}x{}",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn zero(n: usize) -> Self {
        BilinearForm {
            matrix: Matrix::zeros(n, n),
        }
    }

    /// `B(x+ξ, y+η) = ⟨x,η⟩ + ⟨y,ξ⟩` on `A ⊕ A*` with `dim A = n`.
    pub fn standard(n: usize) -> Self {
        let mut m = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            m.set(i, n + i, Scalar::one());
            m.set(n + i, i, Scalar::one());
        }
        BilinearForm { matrix: m }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        vector::dot(x, &self.matrix.apply(y))
    }
}

/// An algebra on `A ⊕ A*`: coordinates `0..split` span `A`, the rest `A*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitDouble {
    pub algebra: Algebra,
    pub split: usize,
    pub form: BilinearForm,
}

impl SplitDouble {
    pub fn new(algebra: Algebra, split: usize, form: BilinearForm) -> Result<Self> {
        if split > algebra.dim() || form.dim() != algebra.dim() {
            return Err(Error::input(format!(
                "split {split} and form of dimension {} do not fit an algebra of dimension {}",
                form.dim(),
                algebra.dim()
            )));
        }
        Ok(SplitDouble {
            algebra,
            split,
            form,
        })
    }
}

/// Builds `A ⊕ A*` from the structure constants `a`, `c` of `alg` and the
/// coproducts `b`, `d` of `co`, with the coadjoint actions in both
/// directions, and the standard pairing.
pub fn double_construct(alg: &Algebra, co: &Coalgebra) -> Result<SplitDouble> {
    let n = alg.dim();
    if co.dim() != n {
        return Err(Error::input(format!(
            "algebra has dimension {n} but coalgebra has dimension {}",
            co.dim()
        )));
    }
    let mut d = Algebra::zero(2 * n);
    let (a, c) = (alg.product(), alg.bracket());
    let (b, dd) = (co.cop2(), co.cop3());
    for (ix, v) in a.nonzero() {
        let (i, j, l) = (ix[0], ix[1], ix[2]);
        d.product_mut().set(&[i, j, l], v.clone());
        // e_i · e_l* ∋ a[i][j][l] e_j*
        *d.product_mut().get_mut(&[i, n + l, n + j]) += v;
        *d.product_mut().get_mut(&[n + l, i, n + j]) += v;
    }
    for (ix, v) in b.nonzero() {
        let (k, i, j) = (ix[0], ix[1], ix[2]);
        d.product_mut().set(&[n + i, n + j, n + k], v.clone());
        // e_i* · e_k ∋ b[k][i][j] e_j
        *d.product_mut().get_mut(&[n + i, k, j]) += v;
        *d.product_mut().get_mut(&[k, n + i, j]) += v;
    }
    for (ix, v) in c.nonzero() {
        let (i, j, l, k) = (ix[0], ix[1], ix[2], ix[3]);
        d.bracket_mut().set(&[i, j, l, k], v.clone());
        // ad*_{e_i,e_j} e_k* ∋ -c[i][j][l][k] e_l*
        *d.bracket_mut().get_mut(&[i, j, n + k, n + l]) -= v;
        *d.bracket_mut().get_mut(&[i, n + k, j, n + l]) += v;
        *d.bracket_mut().get_mut(&[n + k, i, j, n + l]) -= v;
    }
    for (ix, v) in dd.nonzero() {
        let (k, i, j, l) = (ix[0], ix[1], ix[2], ix[3]);
        d.bracket_mut()
            .set(&[n + i, n + j, n + l, n + k], v.clone());
        // ad*_{e_i*,e_j*} e_k ∋ -d[k][i][j][l] e_l
        *d.bracket_mut().get_mut(&[n + i, n + j, k, l]) -= v;
        *d.bracket_mut().get_mut(&[n + i, k, n + j, l]) += v;
        *d.bracket_mut().get_mut(&[k, n + i, n + j, l]) -= v;
    }
    Ok(SplitDouble {
        algebra: d,
        split: n,
        form: BilinearForm::standard(n),
    })
}

/// Symmetry, `B(x·y,z) = B(x,y·z)`, `B([x,y,z],u) = -B([x,y,u],z)` and
/// nondegeneracy. Mismatched dimensions fail every law.
pub fn check_invariance(form: &BilinearForm, alg: &Algebra) -> LawReport {
    let mut r = LawReport::new();
    let n = alg.dim();
    if form.dim() != n {
        let w = Witness {
            vars: vec![],
            tuple: vec![],
            lhs: vec![Scalar::from_int(form.dim() as i64)],
            rhs: vec![Scalar::from_int(n as i64)],
            note: Some("form and algebra dimensions differ".into()),
        };
        for law in [
            "form-symmetric",
            "form-product-invariant",
            "form-bracket-invariant",
            "form-nondegenerate",
        ] {
            r.push(LawResult::fail(law, w.clone()));
        }
        return r;
    }
    let m = &form.matrix;
    let bv = |v: &[Scalar], j: usize| -> Scalar {
        vector::support(v).map(|(i, x)| x * m.get(i, j)).sum()
    };
    let vb = |i: usize, v: &[Scalar]| -> Scalar {
        vector::support(v).map(|(j, x)| m.get(i, j) * x).sum()
    };
    r.push(check_identity(
        "form-symmetric",
        &[("x", n), ("y", n)],
        |t| {
            (
                vec![m.get(t[0], t[1]).clone()],
                vec![m.get(t[1], t[0]).clone()],
            )
        },
    ));
    r.push(check_identity(
        "form-product-invariant",
        &[("x", n), ("y", n), ("z", n)],
        |t| {
            (
                vec![bv(alg.mul_basis(t[0], t[1]), t[2])],
                vec![vb(t[0], alg.mul_basis(t[1], t[2]))],
            )
        },
    ));
    r.push(check_identity(
        "form-bracket-invariant",
        &[("x", n), ("y", n), ("z", n), ("u", n)],
        |t| {
            (
                vec![bv(alg.bracket_basis(t[0], t[1], t[2]), t[3])],
                vec![-bv(alg.bracket_basis(t[0], t[1], t[3]), t[2])],
            )
        },
    ));
    let det = m.det().expect("square form");
    if det.is_zero() {
        let w = Witness {
            vars: vec![],
            tuple: vec![],
            lhs: vec![det],
            rhs: vec![],
            note: Some("determinant is zero".into()),
        };
        r.push(LawResult::fail("form-nondegenerate", w));
    } else {
        r.push(LawResult::pass("form-nondegenerate"));
    }
    r
}

/// Subalgebra, isotropy and projection conditions of a Manin triple for
/// the split, plus the form being a nondegenerate symmetric invariant form.
pub fn check_manin_triple(d: &SplitDouble) -> LawReport {
    let alg = &d.algebra;
    let total = alg.dim();
    let s = d.split;
    let halves = [("A", 0..s), ("A*", s..total)];
    let mut r = LawReport::new();
    let outside = |v: &[Scalar], range: &std::ops::Range<usize>| -> Vector {
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                if range.contains(&i) {
                    Scalar::zero()
                } else {
                    x.clone()
                }
            })
            .collect()
    };
    let inside = |v: &[Scalar], range: &std::ops::Range<usize>| -> Vector {
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                if range.contains(&i) {
                    x.clone()
                } else {
                    Scalar::zero()
                }
            })
            .collect()
    };
    for (name, range) in &halves {
        let (off, len) = (range.start, range.len());
        r.push(check_identity(
            &format!("subalgebra-{name}-product"),
            &[("x", len), ("y", len)],
            |t| {
                (
                    outside(alg.mul_basis(off + t[0], off + t[1]), range),
                    vector::zeros(total),
                )
            },
        ));
        r.push(check_identity(
            &format!("subalgebra-{name}-bracket"),
            &[("x", len), ("y", len), ("z", len)],
            |t| {
                (
                    outside(alg.bracket_basis(off + t[0], off + t[1], off + t[2]), range),
                    vector::zeros(total),
                )
            },
        ));
    }
    for (name, range) in &halves {
        let (off, len) = (range.start, range.len());
        r.push(check_identity(
            &format!("isotropic-{name}"),
            &[("x", len), ("y", len)],
            |t| {
                (
                    vec![d.form.matrix.get(off + t[0], off + t[1]).clone()],
                    vec![Scalar::zero()],
                )
            },
        ));
    }
    // pr_1[x1,y1,x2] = 0 and pr_2[x2,y2,x1] = 0
    for (k, (name, range)) in halves.iter().enumerate() {
        let other = &halves[1 - k].1;
        r.push(check_identity(
            &format!("projection-{name}"),
            &[("x", range.len()), ("y", range.len()), ("z", other.len())],
            |t| {
                let v =
                    alg.bracket_basis(range.start + t[0], range.start + t[1], other.start + t[2]);
                (inside(v, range), vector::zeros(total))
            },
        ));
    }
    r.extend(check_invariance(&d.form, alg));
    r
}

fn cop2_of(co: &Coalgebra, x: &[Scalar]) -> Tensor {
    let n = co.dim();
    let mut t = Tensor::cube(n, 2);
    for (k, v) in vector::support(x) {
        t.add_scaled(v, &co.cop2().slice(&[k]));
    }
    t
}

fn cop3_of(co: &Coalgebra, x: &[Scalar]) -> Tensor {
    let n = co.dim();
    let mut t = Tensor::cube(n, 3);
    for (k, v) in vector::support(x) {
        t.add_scaled(v, &co.cop3().slice(&[k]));
    }
    t
}

fn flat(t: Tensor) -> Vector {
    t.entries().to_vec()
}

fn sum(ts: Vec<Tensor>) -> Vector {
    let mut it = ts.into_iter();
    let mut acc = it.next().expect("nonempty sum");
    for t in it {
        acc = acc.add(&t);
    }
    flat(acc)
}

/// Compatibility conditions between `alg` and `co` for `family`, after the
/// algebra and coalgebra laws of the family. There is no bialgebra notion
/// for the transposed family.
pub fn check_bialgebra(alg: &Algebra, co: &Coalgebra, family: Family) -> Result<LawReport> {
    let n = alg.dim();
    if co.dim() != n {
        return Err(Error::input(format!(
            "algebra has dimension {n} but coalgebra has dimension {}",
            co.dim()
        )));
    }
    if family == Family::Transposed {
        return Err(Error::Unsupported(
            "bialgebras of the transposed family".into(),
        ));
    }
    let mut r = LawReport::new();
    r.extend_prefixed("algebra:", validate(alg, &[family]));
    r.extend_prefixed("coalgebra:", validate_coalgebra(co, &[family]));
    let e = |i: usize| alg.unit(i);
    let zero2 = || vector::zeros(n * n);
    let zero3 = || vector::zeros(n * n * n);
    let x2 = [("x", n), ("y", n)];
    let x3 = [("x", n), ("y", n), ("z", n)];

    if family.has_product() {
        // Δ(x·y) = (L_x ⊗ 1)Δ(y) + (1 ⊗ L_y)Δ(x)
        r.push(check_identity("infinitesimal-bialgebra", &x2, |t| {
            let lhs = flat(cop2_of(co, alg.mul_basis(t[0], t[1])));
            let rhs = sum(vec![
                cop2_of(co, &e(t[1])).map_factor(0, &alg.left_mult(t[0])),
                cop2_of(co, &e(t[0])).map_factor(1, &alg.left_mult(t[1])),
            ]);
            (lhs, rhs)
        }));
    }
    if family.has_bracket() {
        // δ([x,y,z]) = (1⊗1⊗ad_{y,z})δ(x) + (1⊗1⊗ad_{z,x})δ(y) + (1⊗1⊗ad_{x,y})δ(z)
        r.push(check_identity("3lie-bialgebra-1", &x3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = flat(cop3_of(co, alg.bracket_basis(x, y, z)));
            let rhs = sum(vec![
                cop3_of(co, &e(x)).map_factor(2, &alg.ad(y, z)),
                cop3_of(co, &e(y)).map_factor(2, &alg.ad(z, x)),
                cop3_of(co, &e(z)).map_factor(2, &alg.ad(x, y)),
            ]);
            (lhs, rhs)
        }));
        // δ([x,y,z]) = Σ_f (ad_{y,z} on factor f) δ(x)
        r.push(check_identity("3lie-bialgebra-2", &x3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let lhs = flat(cop3_of(co, alg.bracket_basis(x, y, z)));
            let dx = cop3_of(co, &e(x));
            let ad = alg.ad(y, z);
            let rhs = sum((0..3).map(|f| dx.map_factor(f, &ad)).collect());
            (lhs, rhs)
        }));
    }
    match family {
        Family::Poisson => {
            // Δ([x,y,z]) = (1⊗ad_{y,z})Δ(x) + (ad_{y,z}⊗1)Δ(x)
            r.push(check_identity("poisson-bialgebra-1", &x3, |t| {
                let lhs = flat(cop2_of(co, alg.bracket_basis(t[0], t[1], t[2])));
                let dx = cop2_of(co, &e(t[0]));
                let ad = alg.ad(t[1], t[2]);
                (lhs, sum(vec![dx.map_factor(1, &ad), dx.map_factor(0, &ad)]))
            }));
            // δ(x·y) = (L(y)⊗1⊗1)δ(x) + (L(x)⊗1⊗1)δ(y)
            r.push(check_identity("poisson-bialgebra-2", &x2, |t| {
                let lhs = flat(cop3_of(co, alg.mul_basis(t[0], t[1])));
                let rhs = sum(vec![
                    cop3_of(co, &e(t[0])).map_factor(0, &alg.left_mult(t[1])),
                    cop3_of(co, &e(t[1])).map_factor(0, &alg.left_mult(t[0])),
                ]);
                (lhs, rhs)
            }));
            // (L(x)⊗1⊗1)δ(y) = (1⊗1⊗L(x))δ(y)
            r.push(check_identity("poisson-bialgebra-3", &x2, |t| {
                let dy = cop3_of(co, &e(t[1]));
                let l = alg.left_mult(t[0]);
                (flat(dy.map_factor(0, &l)), flat(dy.map_factor(2, &l)))
            }));
            // (1⊗ad_{x,y})Δ(z) = (1⊗ad_{y,z})Δ(x)
            r.push(check_identity("poisson-bialgebra-4", &x3, |t| {
                let (x, y, z) = (t[0], t[1], t[2]);
                (
                    flat(cop2_of(co, &e(z)).map_factor(1, &alg.ad(x, y))),
                    flat(cop2_of(co, &e(x)).map_factor(1, &alg.ad(y, z))),
                )
            }));
        }
        Family::Admissible => {
            r.push(check_identity("admissible-bialgebra-1", &x3, |t| {
                (
                    flat(cop2_of(co, alg.bracket_basis(t[0], t[1], t[2]))),
                    zero2(),
                )
            }));
            r.push(check_identity("admissible-bialgebra-2", &x2, |t| {
                (flat(cop3_of(co, alg.mul_basis(t[0], t[1]))), zero3())
            }));
            r.push(check_identity("admissible-bialgebra-3", &x3, |t| {
                (
                    flat(cop2_of(co, &e(t[0])).map_factor(0, &alg.ad(t[1], t[2]))),
                    zero2(),
                )
            }));
            r.push(check_identity("admissible-bialgebra-4", &x2, |t| {
                (
                    flat(cop3_of(co, &e(t[0])).map_factor(2, &alg.left_mult(t[1]))),
                    zero3(),
                )
            }));
            r.push(check_identity("admissible-bialgebra-5", &x3, |t| {
                (
                    flat(cop2_of(co, &e(t[0])).map_factor(1, &alg.ad(t[1], t[2]))),
                    zero2(),
                )
            }));
            r.push(check_identity("admissible-bialgebra-6", &x2, |t| {
                (
                    flat(cop3_of(co, &e(t[0])).map_factor(0, &alg.left_mult(t[1]))),
                    zero3(),
                )
            }));
        }
        _ => {}
    }
    Ok(r)
}

/// `(A, A*, ad*, -L*, ad*, -L*)`: the coadjoint actions of `alg` on `A*`
/// and of `dual` on `A`.
pub fn coadjoint_pair(alg: &Algebra, dual: &Algebra, family: Family) -> Result<MatchedPair> {
    let on_dual = dual_representation(&adjoint_representation(alg), family).rep;
    let on_alg = dual_representation(&adjoint_representation(dual), family).rep;
    MatchedPair::new(
        alg.clone(),
        dual.clone(),
        on_dual.mu_all().to_vec(),
        on_dual.rho_all().to_vec(),
        on_alg.mu_all().to_vec(),
        on_alg.rho_all().to_vec(),
    )
}

/// Solutions `B` of the symmetric invariant-form equations.
#[derive(Clone, Debug)]
pub struct InvariantForms {
    /// Basis of the solution space, as symmetric matrices.
    pub basis: Vec<Matrix>,
    /// `det(Σ t_k basis[k])` in the coefficients `t_k`.
    pub determinant: Poly,
    pub nondegenerate: bool,
    /// A nondegenerate member of the space, when one exists.
    pub witness: Option<Matrix>,
}

/// Solves symmetry and both invariance identities as a linear system on
/// the entries `B_ij` (`i ≤ j`), then decides whether the solution space
/// contains a nondegenerate form by expanding the generic determinant.
pub fn solve_invariant_forms(alg: &Algebra) -> InvariantForms {
    let n = alg.dim();
    let mut var = vec![vec![0; n]; n];
    let mut count = 0;
    for i in 0..n {
        for j in i..n {
            var[i][j] = count;
            var[j][i] = count;
            count += 1;
        }
    }
    let mut rows: std::collections::BTreeSet<Vec<Scalar>> = std::collections::BTreeSet::new();
    let mut push = |row: Vec<Scalar>| {
        if !vector::is_zero(&row) {
            rows.insert(row);
        }
    };
    // B(x·y, z) - B(x, y·z)
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut row = vector::zeros(count);
                for (l, v) in vector::support(alg.mul_basis(x, y)) {
                    row[var[l][z]] += v;
                }
                for (l, v) in vector::support(alg.mul_basis(y, z)) {
                    row[var[x][l]] -= v;
                }
                push(row);
            }
        }
    }
    // B([x,y,z], u) + B([x,y,u], z)
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for u in 0..n {
                    let mut row = vector::zeros(count);
                    for (l, v) in vector::support(alg.bracket_basis(x, y, z)) {
                        row[var[l][u]] += v;
                    }
                    for (l, v) in vector::support(alg.bracket_basis(x, y, u)) {
                        row[var[l][z]] += v;
                    }
                    push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(0, count)
    } else {
        Matrix::from_rows(rows.into_iter().collect()).expect("equal row lengths")
    };
    let basis: Vec<Matrix> = system
        .nullspace()
        .into_iter()
        .map(|sol| {
            let mut m = Matrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    m.set(i, j, sol[var[i][j]].clone());
                }
            }
            m
        })
        .collect();
    let determinant = if n == 0 {
        Poly::constant(basis.len(), Scalar::one())
    } else {
        Poly::generic_det(&basis)
    };
    let witness = if determinant.is_zero() {
        None
    } else {
        nondegenerate_member(&basis, &determinant)
    };
    InvariantForms {
        nondegenerate: !determinant.is_zero(),
        determinant,
        basis,
        witness,
    }
}

/// A point where a nonzero determinant polynomial does not vanish. The
/// polynomial has degree at most `dim`, so integer points from a range
/// much wider than that find one quickly.
fn nondegenerate_member(basis: &[Matrix], det: &Poly) -> Option<Matrix> {
    let n = basis.first().map_or(0, Matrix::rows);
    let combine = |t: &[Scalar]| {
        let mut m = Matrix::zeros(n, n);
        for (b, c) in basis.iter().zip(t) {
            m.add_scaled(c, b);
        }
        m
    };
    let ones = vec![Scalar::one(); basis.len()];
    if !det.eval(&ones).is_zero() {
        return Some(combine(&ones));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    for _ in 0..10_000 {
        let t: Vec<Scalar> = (0..basis.len())
            .map(|_| Scalar::from_int(rng.gen_range(-1000..=1000)))
            .collect();
        if !det.eval(&t).is_zero() {
            return Some(combine(&t));
        }
    }
    None
}

/// Evaluates independently: the bialgebra conditions, the coadjoint
/// matched pair of `alg` and the dual algebra of `co`, and the Manin-triple
/// conditions together with validity of the double.
pub fn verify_equivalence(
    alg: &Algebra,
    co: &Coalgebra,
    family: Family,
) -> Result<EquivalenceReport> {
    let bialgebra = check_bialgebra(alg, co, family)?;
    let dual = dualize_coalgebra(co);
    let pair = check_matched_pair(&coadjoint_pair(alg, &dual, family)?, family);
    let double = double_construct(alg, co)?;
    let mut manin = check_manin_triple(&double);
    manin.extend_prefixed("double:", validate(&double.algebra, &[family]));
    Ok(EquivalenceReport::new(vec![
        ("bialgebra".to_string(), bialgebra),
        ("coadjoint matched pair".to_string(), pair),
        ("manin triple".to_string(), manin),
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pairs::matched_pair_sum;

    fn b4() -> Algebra {
        Algebra::builder(4)
            .product(2, 2, 1, 1)
            .bracket(2, 3, 4, 1, 1)
            .build()
            .unwrap()
    }

    fn ex_coalgebra() -> Coalgebra {
        Coalgebra::builder(4)
            .cop2(2, 1, 1, 1)
            .cop3(2, 1, 3, 4, 1)
            .build()
            .unwrap()
    }

    #[test]
    fn example_bundle_is_an_admissible_bialgebra() {
        let r = check_bialgebra(&b4(), &ex_coalgebra(), Family::Admissible).unwrap();
        assert!(r.passed(), "{r}");
        let eq = verify_equivalence(&b4(), &ex_coalgebra(), Family::Admissible).unwrap();
        assert!(eq.agree && eq.all_pass(), "{eq}");
    }

    #[test]
    fn double_matches_pair_sum() {
        let d = double_construct(&b4(), &ex_coalgebra()).unwrap();
        let dual = dualize_coalgebra(&ex_coalgebra());
        let mp = coadjoint_pair(&b4(), &dual, Family::Admissible).unwrap();
        assert!(d.algebra.same_constants(&matched_pair_sum(&mp)));
    }

    #[test]
    fn infinitesimal_failure() {
        let co = Coalgebra::builder(4).cop2(2, 2, 2, 1).build().unwrap();
        let r = check_bialgebra(&b4(), &co, Family::CommAssoc).unwrap();
        let w = r
            .get("infinitesimal-bialgebra")
            .unwrap()
            .witness
            .clone()
            .unwrap();
        assert_eq!(w.tuple, vec![2, 2]);
    }

    #[test]
    fn shifted_split_is_not_isotropic() {
        let mut d = double_construct(&b4(), &ex_coalgebra()).unwrap();
        assert!(check_manin_triple(&d).passed());
        d.split = 3;
        assert_eq!(check_manin_triple(&d).verdict("isotropic-A*"), Some(false));
    }

    #[test]
    fn abelian_forms() {
        let f = solve_invariant_forms(&Algebra::zero(3));
        assert_eq!(f.basis.len(), 6);
        assert!(f.nondegenerate);
        assert!(!f.witness.unwrap().det().unwrap().is_zero());
    }
}
